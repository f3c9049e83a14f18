#include "syt/count_table.hpp"

namespace syt {

std::string RefinedKey::to_string() const {
  std::string out = "d=" + std::to_string(d);
  if (k) out += ",k=" + std::to_string(*k);
  if (c) out += ",c=" + std::to_string(*c);
  return out;
}

void CountTable::add(const RefinedKey& key, const BigCount& count) {
  if (count == 0) return;
  auto [it, inserted] = entries_.try_emplace(key, count);
  if (!inserted) {
    it->second += count;
    if (it->second == 0) entries_.erase(it);
  }
}

BigCount CountTable::at(const RefinedKey& key) const {
  const auto it = entries_.find(key);
  return it == entries_.end() ? BigCount(0) : it->second;
}

BigCount CountTable::total() const {
  BigCount sum = 0;
  for (const auto& [key, count] : entries_) sum += count;
  return sum;
}

CountTable CountTable::marginal() const {
  CountTable result(shape_);
  for (const auto& [key, count] : entries_) result.add(RefinedKey{key.d, {}, {}}, count);
  return result;
}

}  // namespace syt
