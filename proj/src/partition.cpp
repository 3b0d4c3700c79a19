#include "coal/partition.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>

namespace coal {

Partition::Partition(int host_n, std::vector<VertexSet> parts)
    : host_n_(host_n), parts_(std::move(parts)) {
  if (host_n < 0 || host_n > kHardVertexLimit)
    throw Error("partition: bad host size " + std::to_string(host_n));
  Mask seen = 0;
  for (size_t i = 0; i < parts_.size(); ++i) {
    const VertexSet& p = parts_[i];
    if (p.host_n != host_n)
      throw Error("partition: part " + std::to_string(i) + " host mismatch");
    if (p.bits == 0)
      throw Error("partition: part " + std::to_string(i) + " is empty");
    if (p.bits & ~all_vertices_mask(host_n))
      throw Error("partition: part " + std::to_string(i) +
                  " contains an out-of-range vertex");
    if (p.bits & seen)
      throw Error("partition: overlap at vertex " +
                  std::to_string(std::countr_zero(p.bits & seen)));
    seen |= p.bits;
  }
  if (seen != all_vertices_mask(host_n)) {
    VertexSet missing{all_vertices_mask(host_n) & ~seen, host_n};
    throw Error("partition: vertices not covered: " + missing.to_text());
  }
}

Partition Partition::sorted_by_smallest_member() const {
  std::vector<VertexSet> sorted = parts_;
  std::sort(sorted.begin(), sorted.end(),
            [](const VertexSet& a, const VertexSet& b) {
              return std::countr_zero(a.bits) < std::countr_zero(b.bits);
            });
  return Partition(host_n_, std::move(sorted));
}

std::string Partition::to_text() const {
  std::string s;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s.push_back('|');
    s += parts_[i].to_text();
  }
  return s;
}

Partition parse_partition(std::string_view text, int host_n) {
  std::string compact;
  compact.reserve(text.size());
  for (char c : text)
    if (!std::isspace((unsigned char)c)) compact.push_back(c);
  if (compact.empty()) {
    if (host_n == 0) return Partition(0, {});
    throw ParseError("partition: empty text");
  }
  std::vector<VertexSet> parts;
  size_t pos = 0;
  while (pos <= compact.size()) {
    size_t bar = compact.find('|', pos);
    std::string part = compact.substr(
        pos, bar == std::string::npos ? std::string::npos : bar - pos);
    if (part.empty()) throw ParseError("partition: empty part");
    std::vector<int> members;
    size_t mp = 0;
    while (mp <= part.size()) {
      size_t comma = part.find(',', mp);
      std::string tok = part.substr(
          mp, comma == std::string::npos ? std::string::npos : comma - mp);
      int v = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (tok.empty() || ec != std::errc{} || p != tok.data() + tok.size())
        throw ParseError("partition: bad vertex '" + tok + "'");
      members.push_back(v);
      if (comma == std::string::npos) break;
      mp = comma + 1;
    }
    parts.push_back(vset(host_n, members));
    if (bar == std::string::npos) break;
    pos = bar + 1;
  }
  return Partition(host_n, std::move(parts));
}

}  // namespace coal
