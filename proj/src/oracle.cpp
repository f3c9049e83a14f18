#include "syt/oracle.hpp"

#include <algorithm>
#include <array>

namespace syt {

SizeCapExceeded::SizeCapExceeded(int size, int cap)
    : std::runtime_error("shape has " + std::to_string(size) +
                         " cells, above the oracle size cap of " + std::to_string(cap) +
                         " (raise it with --max-cells)"),
      cap_(cap) {}

SytEnumerator::SytEnumerator(Shape shape, int cap) : shape_(std::move(shape)) {
  if (cap > kMaxOracleCap) {
    throw std::invalid_argument("oracle cap " + std::to_string(cap) + " exceeds the maximum " +
                                std::to_string(kMaxOracleCap));
  }
  if (shape_.size() > cap) throw SizeCapExceeded(shape_.size(), cap);
  for (int i = 1; i <= shape_.rows(); ++i) {
    for (int j = 1; j <= shape_.row_length(i); ++j) cells_.push_back({i, j});
  }
  values_.assign(cells_.size(), 0);
  row_of_value_.assign(cells_.size() + 1, -1);
}

bool SytEnumerator::extendable(int cell_row, int value) const {
  const int rows = shape_.rows();
  const auto& parts = shape_.parts();
  std::array<int, kMaxOracleCap + 1> filled{};
  const auto fits = [&](int r) {
    const auto ur = static_cast<std::size_t>(r);
    return filled[ur] < parts[ur] && (r == 0 || filled[ur - 1] > filled[ur]);
  };
  for (int v = 1; v <= shape_.size(); ++v) {
    int r = row_of_value_[static_cast<std::size_t>(v)];
    if (r < 0) {
      // Free values below the current cell's value cannot join its row.
      r = v < value ? cell_row + 1 : cell_row;
      while (r < rows && !fits(r)) ++r;
      if (r == rows) return false;
    } else if (!fits(r)) {
      return false;
    }
    ++filled[static_cast<std::size_t>(r)];
  }
  return true;
}

bool SytEnumerator::advance(std::size_t position) {
  const std::size_t total = cells_.size();
  const int n = shape_.size();
  while (position < total) {
    const Cell cell = cells_[position];
    int& slot = values_[position];
    if (slot != 0) {
      used_ &= ~(std::uint64_t{1} << slot);
      row_of_value_[static_cast<std::size_t>(slot)] = -1;
    }
    const int left = cell.col > 1 ? values_[position - 1] : 0;
    const int up =
        cell.row > 1
            ? values_[position - static_cast<std::size_t>(shape_.row_length(cell.row - 1))]
            : 0;
    int candidate = std::max({slot, left, up}) + 1;
    slot = 0;
    for (; candidate <= n; ++candidate) {
      if (used_ & (std::uint64_t{1} << candidate)) continue;
      row_of_value_[static_cast<std::size_t>(candidate)] = cell.row - 1;
      if (extendable(cell.row - 1, candidate)) break;
      row_of_value_[static_cast<std::size_t>(candidate)] = -1;
    }
    if (candidate <= n) {
      slot = candidate;
      used_ |= std::uint64_t{1} << candidate;
      ++position;
    } else {
      if (position == 0) return false;
      --position;
    }
  }
  return true;
}

Tableau SytEnumerator::current() const {
  Filling rows;
  std::size_t index = 0;
  for (int length : shape_.parts()) {
    rows.emplace_back(values_.begin() + static_cast<long>(index),
                      values_.begin() + static_cast<long>(index) + length);
    index += static_cast<std::size_t>(length);
  }
  return Tableau(shape_, std::move(rows));
}

bool SytEnumerator::step() {
  if (done_) return false;
  bool found = false;
  if (cells_.empty()) {
    found = !started_;
  } else {
    found = advance(started_ ? cells_.size() - 1 : 0);
  }
  started_ = true;
  if (!found) done_ = true;
  return found;
}

std::optional<Tableau> SytEnumerator::next() {
  if (!step()) return std::nullopt;
  return current();
}

void for_each_syt(const Shape& shape, const std::function<bool(const Tableau&)>& visit,
                  int cap) {
  SytEnumerator stream(shape, cap);
  while (auto tableau = stream.next()) {
    if (!visit(*tableau)) break;
  }
}

std::vector<Tableau> enumerate_syt(const Shape& shape, int cap) {
  std::vector<Tableau> result;
  for_each_syt(
      shape,
      [&result](const Tableau& t) {
        result.push_back(t);
        return true;
      },
      cap);
  return result;
}

namespace {

// Visits (des, maj) of every tableau straight from the enumerator state:
// i is a descent iff i+1 sits in a strictly lower row.
template <typename Visit>
void for_each_descent_profile(const Shape& shape, int cap, Visit visit) {
  SytEnumerator stream(shape, cap);
  const int n = shape.size();
  const auto& row = stream.row_of_value();
  while (stream.step()) {
    int des = 0;
    long maj = 0;
    for (int i = 1; i < n; ++i) {
      if (row[static_cast<std::size_t>(i + 1)] > row[static_cast<std::size_t>(i)]) {
        ++des;
        maj += i;
      }
    }
    visit(stream, des, maj);
  }
}

}  // namespace

CountTable brute_des_distribution(const Shape& shape, int cap) {
  std::vector<std::uint64_t> by_des(static_cast<std::size_t>(shape.size()) + 1, 0);
  for_each_descent_profile(shape, cap, [&by_des](const SytEnumerator&, int des, long) {
    ++by_des[static_cast<std::size_t>(des)];
  });
  CountTable table(shape);
  for (std::size_t d = 0; d < by_des.size(); ++d) {
    table.add(RefinedKey{static_cast<int>(d), {}, {}}, by_des[d]);
  }
  return table;
}

CountTable brute_refined(const Shape& shape, int cap) {
  const bool three_row = shape.is_three_row_one();
  if (!shape.is_two_row() && !three_row) {
    throw DomainError("refined counts are defined for shapes (n,m) and (n,m,1), not (" +
                      shape.to_string() + ")");
  }
  const auto k_index = static_cast<std::size_t>(shape.row_length(1)) - 1;
  const auto c_index = static_cast<std::size_t>(shape.size()) - 1;
  std::map<RefinedKey, std::uint64_t> counts;
  for_each_descent_profile(shape, cap, [&](const SytEnumerator& stream, int des, long) {
    RefinedKey key{des, stream.values()[k_index], {}};
    if (three_row) key.c = stream.values()[c_index];
    ++counts[key];
  });
  CountTable table(shape);
  for (const auto& [key, count] : counts) table.add(key, count);
  return table;
}

QPolynomial brute_maj_gf(const Shape& shape, int cap) {
  const long n = shape.size();
  std::vector<std::uint64_t> by_maj(static_cast<std::size_t>(n * (n - 1) / 2 + 1), 0);
  for_each_descent_profile(shape, cap, [&by_maj](const SytEnumerator&, int, long maj) {
    ++by_maj[static_cast<std::size_t>(maj)];
  });
  std::vector<BigCount> coefficients(by_maj.begin(), by_maj.end());
  return QPolynomial(std::move(coefficients));
}

}  // namespace syt
