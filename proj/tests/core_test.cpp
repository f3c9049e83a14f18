#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

#include "doctest.h"

#include "syt/core.hpp"
#include "syt/oracle.hpp"

using syt::Shape;
using syt::Tableau;

namespace {

// T1 breaks both monotonicity rules; T2 is standard.
const syt::Filling kT1 = {{2, 3, 5, 9}, {8, 1, 4}, {7}, {6}};
const syt::Filling kT2 = {{1, 3, 6, 7}, {2, 4, 8}, {5}, {9}};

}  // namespace

TEST_CASE("shape parsing and validation") {
  CHECK(Shape::parse("4,2,1") == Shape{4, 2, 1});
  CHECK(Shape::parse(" 3 , 3 ") == Shape{3, 3});
  CHECK(Shape::parse("4,2,1").size() == 7);
  CHECK_THROWS_AS(Shape::parse("1,3"), syt::DomainError);
  CHECK_THROWS_AS(Shape::parse(""), syt::DomainError);
  CHECK_THROWS_AS(Shape::parse("3,,1"), syt::DomainError);
  CHECK_THROWS_AS(Shape::parse("3,0"), syt::DomainError);
  CHECK_THROWS_AS(Shape::parse("x"), syt::DomainError);
  CHECK_THROWS_AS(Shape({2, 3}), syt::DomainError);

  const Shape empty;
  CHECK(empty.empty());
  CHECK(empty.size() == 0);
  CHECK(syt::syt_count(empty) == 1);
}

TEST_CASE("shape classes") {
  CHECK(Shape{3, 1, 1}.is_hook());
  CHECK(Shape{4}.is_hook());
  CHECK(Shape{1, 1, 1}.is_hook());
  CHECK_FALSE(Shape{2, 2}.is_hook());
  CHECK(Shape{3, 2}.is_two_row());
  CHECK(Shape{3, 2, 1}.is_three_row_one());
  CHECK_FALSE(Shape{3, 2, 2}.is_three_row_one());
}

TEST_CASE("conjugate") {
  CHECK(syt::conjugate(Shape{3, 1}) == Shape{2, 1, 1});
  CHECK(syt::conjugate(Shape{4}) == Shape{1, 1, 1, 1});
  CHECK(syt::conjugate(Shape{2, 2}) == Shape{2, 2});
  CHECK(syt::conjugate(Shape{}) == Shape{});
  for (int n = 0; n <= 12; ++n) {
    for (const auto& shape : syt::partitions_of(n)) {
      CHECK(syt::conjugate(syt::conjugate(shape)) == shape);
    }
  }
}

TEST_CASE("hook lengths") {
  CHECK(syt::hook_length(Shape{3, 1}, {1, 1}) == 4);
  CHECK(syt::hook_length(Shape{3, 1}, {1, 3}) == 1);
  CHECK(syt::hook_length(Shape{2, 2}, {1, 1}) == 3);
  CHECK_THROWS_AS(syt::hook_length(Shape{3, 1}, {2, 2}), syt::DomainError);
  CHECK_THROWS_AS(syt::hook_length(Shape{3, 1}, {0, 1}), syt::DomainError);

  // Hook 1 exactly at outer corners: cells with no right or lower neighbour.
  for (int n = 1; n <= 10; ++n) {
    for (const auto& shape : syt::partitions_of(n)) {
      for (int i = 1; i <= shape.rows(); ++i) {
        for (int j = 1; j <= shape.row_length(i); ++j) {
          const int h = syt::hook_length(shape, {i, j});
          const bool corner = !shape.contains({i, j + 1}) && !shape.contains({i + 1, j});
          CHECK(h >= 1);
          CHECK((h == 1) == corner);
        }
      }
    }
  }
}

TEST_CASE("syt_count by hook lengths") {
  CHECK(syt::syt_count(Shape{3, 3}) == 5);
  CHECK(syt::syt_count(Shape{5}) == 1);
  CHECK(syt::syt_count(Shape{2, 2, 1}) == 5);
  // 28! overflows 64 bits; the division must still be exact.
  const Shape staircase{7, 6, 5, 4, 3, 2, 1};
  CHECK(syt::syt_count(staircase) == syt::syt_count(syt::conjugate(staircase)));
  CHECK(syt::syt_count(Shape{20, 20, 20}) > syt::BigCount(std::numeric_limits<std::uint64_t>::max()));

  for (int n = 0; n <= 14; ++n) {
    for (const auto& shape : syt::partitions_of(n)) {
      CHECK(syt::syt_count(shape) == syt::syt_count(syt::conjugate(shape)));
    }
  }
}

TEST_CASE("partitions_of") {
  // Partition numbers p(0..10).
  const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) {
    const auto parts = syt::partitions_of(n);
    CHECK(static_cast<int>(parts.size()) == expected[n]);
    for (const auto& shape : parts) CHECK(shape.size() == n);
  }
  CHECK(syt::partitions_of(4).front() == Shape{4});
  CHECK(syt::partitions_of(4).back() == Shape{1, 1, 1, 1});
}

TEST_CASE("is_standard") {
  CHECK_FALSE(syt::is_standard(Shape{4, 3, 1, 1}, kT1));
  CHECK(syt::is_standard(Shape{4, 3, 1, 1}, kT2));
  CHECK(syt::is_standard(Shape{2, 2}, {{1, 2}, {3, 4}}));
  // Not a bijection onto 1..n.
  CHECK_FALSE(syt::is_standard(Shape{2, 2}, {{1, 2}, {3, 5}}));
  CHECK_FALSE(syt::is_standard(Shape{2, 2}, {{1, 2}, {2, 4}}));
  // Filling does not match the shape.
  CHECK_FALSE(syt::is_standard(Shape{2, 2}, {{1, 2, 3}, {4}}));
  CHECK(syt::is_standard(Shape{2, 2}, {{1, 3}, {2, 4}}));
  // Column violation only.
  CHECK_FALSE(syt::is_standard(Shape{2, 2}, {{1, 4}, {2, 3}}));
}

TEST_CASE("tableau construction validates standardness") {
  CHECK_THROWS_AS(Tableau{kT1}, syt::DomainError);
  CHECK_THROWS_AS(Tableau::parse("2 3 5 9 / 8 1 4 / 7 / 6"), syt::DomainError);
  CHECK_THROWS_AS(Tableau::parse("1 2 / 3 4 5"), syt::DomainError);
  const auto t2 = Tableau::parse("1 3 6 7 / 2 4 8 / 5 / 9");
  CHECK(t2.rows() == kT2);
  CHECK(t2.shape() == Shape{4, 3, 1, 1});
  CHECK(t2.to_string() == "1 3 6 7 / 2 4 8 / 5 / 9");
  CHECK(t2.at({2, 3}) == 8);
}

TEST_CASE("descent statistics") {
  const auto t2 = syt::descent_stats(Tableau(kT2));
  CHECK(t2.descent_set == std::vector<int>{1, 3, 4, 7, 8});
  CHECK(t2.des == 5);
  CHECK(t2.maj == 23);

  const auto row = syt::descent_stats(Tableau::parse("1 2 3"));
  CHECK(row.descent_set.empty());
  CHECK(row.des == 0);
  CHECK(row.maj == 0);

  const auto column = syt::descent_stats(Tableau::parse("1 / 2 / 3"));
  CHECK(column.descent_set == std::vector<int>{1, 2});
  CHECK(column.des == 2);
  CHECK(column.maj == 3);

  const auto empty = syt::descent_stats(Tableau(syt::Filling{}));
  CHECK(empty.descent_set.empty());
}

TEST_CASE("descent invariants over every tableau of size <= 9") {
  for (int n = 1; n <= 9; ++n) {
    for (const auto& shape : syt::partitions_of(n)) {
      syt::for_each_syt(shape, [n](const Tableau& t) {
        const auto stats = syt::descent_stats(t);
        long sum = 0;
        for (int i : stats.descent_set) {
          CHECK(i >= 1);
          CHECK(i <= n - 1);
          sum += i;
        }
        CHECK(stats.des == static_cast<int>(stats.descent_set.size()));
        CHECK(stats.maj == sum);
        CHECK(stats.maj <= static_cast<long>(n) * (n - 1) / 2);
        // Transposition complements the descent set.
        const auto transposed = syt::descent_stats(syt::transpose(t));
        CHECK(transposed.des == n - 1 - stats.des);
        CHECK(syt::transpose(syt::transpose(t)) == t);
        return true;
      });
    }
  }
}

TEST_CASE("random filling property: is_standard agrees with a direct check") {
  std::mt19937 rng(20081);
  for (int trial = 0; trial < 300; ++trial) {
    const auto shapes = syt::partitions_of(1 + trial % 8);
    const Shape& shape = shapes[static_cast<std::size_t>(trial) % shapes.size()];
    std::vector<int> values(static_cast<std::size_t>(shape.size()));
    std::iota(values.begin(), values.end(), 1);
    std::shuffle(values.begin(), values.end(), rng);
    syt::Filling rows;
    std::size_t next = 0;
    for (int length : shape.parts()) {
      rows.emplace_back(values.begin() + static_cast<long>(next),
                        values.begin() + static_cast<long>(next) + length);
      next += static_cast<std::size_t>(length);
    }
    bool standard = true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        if (j > 0 && rows[i][j - 1] > rows[i][j]) standard = false;
        if (i > 0 && rows[i - 1][j] > rows[i][j]) standard = false;
      }
    }
    CHECK(syt::is_standard(shape, rows) == standard);
  }
}
