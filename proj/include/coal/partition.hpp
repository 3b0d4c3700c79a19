#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "coal/graph.hpp"

namespace coal {

// Ordered list of disjoint nonempty vertex sets covering all vertices of one
// host. Part order is preserved as given; search witnesses come out sorted by
// smallest member (the canonical order).
class Partition {
 public:
  Partition() = default;
  Partition(int host_n, std::vector<VertexSet> parts);

  int host_n() const { return host_n_; }
  int size() const { return (int)parts_.size(); }
  const std::vector<VertexSet>& parts() const { return parts_; }
  const VertexSet& part(int i) const { return parts_.at((size_t)i); }

  Partition sorted_by_smallest_member() const;
  std::string to_text() const;  // "0,5|1|2|3|4"

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  int host_n_ = 0;
  std::vector<VertexSet> parts_;
};

// Grammar: parts separated by '|', members by ','; whitespace ignored; must
// cover 0..host_n-1 exactly once.
Partition parse_partition(std::string_view text, int host_n);

}  // namespace coal
