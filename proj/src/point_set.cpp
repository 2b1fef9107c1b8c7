#include "swapalg/point_set.hpp"

namespace swapalg {

PointSet::PointSet(std::vector<std::string> names) : names_(std::move(names)) {
  for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
    auto [it, inserted] = index_.emplace(names_[static_cast<size_t>(i)], i);
    if (!inserted) throw DuplicatePoint("duplicate point name: " + names_[static_cast<size_t>(i)]);
  }
}

int PointSet::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw UnknownPoint("unknown point: " + name);
  return it->second;
}

std::vector<std::string> PointSet::rotated_names(int shift) const {
  const int m = size();
  std::vector<std::string> out;
  out.reserve(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) out.push_back(names_[static_cast<size_t>(((i + shift) % m + m) % m)]);
  return out;
}

PointSetPtr mk_point_set(std::vector<std::string> names) {
  return std::make_shared<const PointSet>(std::move(names));
}

}  // namespace swapalg
