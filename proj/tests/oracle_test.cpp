#include <algorithm>

#include "doctest.h"

#include "syt/closed_forms.hpp"
#include "syt/oracle.hpp"

using syt::CountTable;
using syt::RefinedKey;
using syt::Shape;
using syt::Tableau;

namespace {

CountTable table_of(const Shape& shape, std::initializer_list<std::pair<RefinedKey, int>> rows) {
  CountTable table(shape);
  for (const auto& [key, count] : rows) table.add(key, count);
  return table;
}

RefinedKey dk(int d, int k) { return {d, k, {}}; }
RefinedKey dkc(int d, int k, int c) { return {d, k, c}; }
RefinedKey only_d(int d) { return {d, {}, {}}; }

}  // namespace

TEST_CASE("count table bookkeeping") {
  CountTable table(Shape{2, 1});
  table.add(only_d(1), 2);
  table.add(only_d(0), 0);
  CHECK(table.size() == 1);
  CHECK(table.at(only_d(0)) == 0);
  CHECK(table.total() == 2);
  table.add(only_d(1), -2);
  CHECK(table.empty());
}

TEST_CASE("enumerate_syt small shapes") {
  const auto two_one = syt::enumerate_syt(Shape{2, 1});
  REQUIRE(two_one.size() == 2);
  CHECK(two_one[0] == Tableau::parse("1 2 / 3"));
  CHECK(two_one[1] == Tableau::parse("1 3 / 2"));

  const auto column = syt::enumerate_syt(Shape{1, 1, 1});
  REQUIRE(column.size() == 1);
  CHECK(column[0] == Tableau::parse("1 / 2 / 3"));

  CHECK(syt::enumerate_syt(Shape{3, 3}).size() == 5);

  const auto empty = syt::enumerate_syt(Shape{});
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].size() == 0);
}

TEST_CASE("enumeration count equals FRT for all shapes of size <= 12") {
  for (int n = 0; n <= 12; ++n) {
    for (const auto& shape : syt::partitions_of(n)) {
      std::size_t seen = 0;
      syt::for_each_syt(shape, [&seen](const Tableau&) {
        ++seen;
        return true;
      });
      CHECK_MESSAGE(syt::BigCount(seen) == syt::syt_count(shape), shape.to_string());
    }
  }
}

TEST_CASE("canonical order is lexicographic in the row reading word") {
  for (int n = 1; n <= 9; ++n) {
    for (const auto& shape : syt::partitions_of(n)) {
      const auto all = syt::enumerate_syt(shape);
      for (std::size_t i = 1; i < all.size(); ++i) {
        CHECK_MESSAGE(all[i - 1].reading_word() < all[i].reading_word(), shape.to_string());
      }
    }
  }
  // Lattice-word order and reading-word order first differ on (3,2,1).
  const auto all = syt::enumerate_syt(Shape{3, 2, 1});
  CHECK(all.front() == Tableau::parse("1 2 3 / 4 5 / 6"));
  CHECK(all.back() == Tableau::parse("1 4 6 / 2 5 / 3"));
}

TEST_CASE("enumeration is deterministic and supports early termination") {
  const Shape shape{4, 3, 2};
  CHECK(syt::enumerate_syt(shape) == syt::enumerate_syt(shape));

  syt::SytEnumerator stream(shape);
  auto first = stream.next();
  auto second = stream.next();
  REQUIRE(first);
  REQUIRE(second);
  const auto all = syt::enumerate_syt(shape);
  CHECK(*first == all[0]);
  CHECK(*second == all[1]);

  int visited = 0;
  syt::for_each_syt(shape, [&visited](const Tableau&) { return ++visited < 3; });
  CHECK(visited == 3);

  syt::SytEnumerator tiny(Shape{1});
  CHECK(tiny.next());
  CHECK_FALSE(tiny.next());
  CHECK_FALSE(tiny.next());
}

TEST_CASE("size cap refusal names the cap") {
  CHECK_THROWS_AS(syt::enumerate_syt(Shape{17}), syt::SizeCapExceeded);
  try {
    syt::brute_des_distribution(Shape{3, 2}, 4);
    FAIL("expected a refusal");
  } catch (const syt::SizeCapExceeded& e) {
    CHECK(e.cap() == 4);
    CHECK(std::string(e.what()).find("cap of 4") != std::string::npos);
  }
  CHECK_NOTHROW(syt::enumerate_syt(Shape{17}, 17));
  CHECK_THROWS_AS(syt::SytEnumerator(Shape{2}, syt::kMaxOracleCap + 1), std::invalid_argument);
}

TEST_CASE("brute descent distributions") {
  CHECK(syt::brute_des_distribution(Shape{3, 3}) ==
        table_of(Shape{3, 3}, {{only_d(1), 1}, {only_d(2), 3}, {only_d(3), 1}}));
  CHECK(syt::brute_des_distribution(Shape{3, 1, 1}) ==
        table_of(Shape{3, 1, 1}, {{only_d(2), 6}}));
  CHECK(syt::brute_des_distribution(Shape{4}) == table_of(Shape{4}, {{only_d(0), 1}}));
}

TEST_CASE("brute refined tables") {
  CHECK(syt::brute_refined(Shape{2, 2}) ==
        table_of(Shape{2, 2}, {{dk(1, 2), 1}, {dk(2, 3), 1}}));
  CHECK(syt::brute_refined(Shape{2, 2, 1}) ==
        table_of(Shape{2, 2, 1}, {{dkc(2, 2, 5), 1},
                                  {dkc(2, 2, 4), 1},
                                  {dkc(3, 3, 5), 1},
                                  {dkc(2, 3, 4), 1},
                                  {dkc(3, 4, 3), 1}}));
  CHECK(syt::brute_refined(Shape{2, 1, 1}) ==
        table_of(Shape{2, 1, 1}, {{dkc(2, 2, 4), 1}, {dkc(2, 3, 4), 1}, {dkc(2, 4, 3), 1}}));
  CHECK_THROWS_AS(syt::brute_refined(Shape{3, 2, 2}), syt::DomainError);
  CHECK_THROWS_AS(syt::brute_refined(Shape{4}), syt::DomainError);
}

TEST_CASE("refined marginals reproduce the descent distribution") {
  for (int n = 2; n <= 11; ++n) {
    for (const auto& shape : syt::partitions_of(n)) {
      if (!shape.is_two_row() && !shape.is_three_row_one()) continue;
      CHECK(syt::brute_refined(shape).marginal() == syt::brute_des_distribution(shape));
    }
  }
}

TEST_CASE("hook shapes have constant descent number") {
  for (int size = 1; size <= 12; ++size) {
    for (int m = 0; m < size; ++m) {
      std::vector<int> parts{size - m};
      parts.insert(parts.end(), static_cast<std::size_t>(m), 1);
      const Shape hook(parts);
      std::size_t count = 0;
      syt::for_each_syt(hook, [&](const Tableau& t) {
        ++count;
        CHECK(syt::descent_stats(t).des == m);
        return true;
      });
      CHECK(syt::BigCount(count) == syt::binomial(size - 1, m));
    }
  }
}

TEST_CASE("brute maj generating functions") {
  CHECK(syt::brute_maj_gf(Shape{2, 2}) ==
        syt::QPolynomial::monomial(2) + syt::QPolynomial::monomial(4));
  CHECK(syt::brute_maj_gf(Shape{3}) == syt::QPolynomial(1));
  CHECK(syt::brute_maj_gf(Shape{1, 1, 1}) == syt::QPolynomial::monomial(3));
  for (int n = 1; n <= 8; ++n) {
    for (const auto& shape : syt::partitions_of(n)) {
      CHECK(syt::brute_maj_gf(shape).evaluate(1) == syt::syt_count(shape));
    }
  }
}

TEST_CASE("fast statistics agree with materialized tableaux") {
  for (int n = 1; n <= 9; ++n) {
    for (const auto& shape : syt::partitions_of(n)) {
      CountTable des(shape);
      std::vector<syt::BigCount> maj;
      syt::for_each_syt(shape, [&](const Tableau& t) {
        const auto stats = syt::descent_stats(t);
        des.add(only_d(stats.des), 1);
        if (maj.size() <= static_cast<std::size_t>(stats.maj)) maj.resize(stats.maj + 1);
        maj[static_cast<std::size_t>(stats.maj)] += 1;
        return true;
      });
      CHECK(syt::brute_des_distribution(shape) == des);
      CHECK(syt::brute_maj_gf(shape) == syt::QPolynomial(std::move(maj)));
      if (shape.is_two_row() || shape.is_three_row_one()) {
        CountTable refined(shape);
        syt::for_each_syt(shape, [&](const Tableau& t) {
          RefinedKey key{syt::descent_stats(t).des, t.at({1, shape.row_length(1)}), {}};
          if (shape.rows() == 3) key.c = t.at({3, 1});
          refined.add(key, 1);
          return true;
        });
        CHECK(syt::brute_refined(shape) == refined);
      }
    }
  }
}
