#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "swapalg/errors.hpp"

namespace swapalg {

// A finite cyclically ordered set of named points. The input order is the
// anticlockwise order on the circle; index i is the circle position of the
// i-th point. Immutable after construction.
class PointSet {
 public:
  explicit PointSet(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(static_cast<size_t>(i)); }
  const std::vector<std::string>& names() const { return names_; }

  bool contains(const std::string& name) const { return index_.count(name) > 0; }
  int index_of(const std::string& name) const;

  // Same points in the same cyclic presentation (used to gate mixed-set
  // arithmetic; distinct instances with equal name sequences are compatible).
  bool operator==(const PointSet& other) const { return names_ == other.names_; }

  // The same circle read from a different origin.
  std::vector<std::string> rotated_names(int shift) const;

 private:
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
};

using PointSetPtr = std::shared_ptr<const PointSet>;

PointSetPtr mk_point_set(std::vector<std::string> names);

}  // namespace swapalg
