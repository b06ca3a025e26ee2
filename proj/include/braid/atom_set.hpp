#ifndef BRAID_ATOM_SET_HPP
#define BRAID_ATOM_SET_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace braid {

// Subset of the Artin generators {sigma_1, ..., sigma_{n-1}}, stored as a
// bitmask (bit i-1 <-> sigma_i).
struct AtomSet {
  int n = 1;
  uint32_t mask = 0;

  AtomSet() = default;
  AtomSet(int strands, uint32_t bits) : n(strands), mask(bits) {}

  static AtomSet all(int n) {
    return AtomSet(n, n >= 2 ? (1u << (n - 1)) - 1 : 0u);
  }

  bool contains(int i) const { return (mask >> (i - 1)) & 1u; }
  bool empty() const { return mask == 0; }
  int size() const { return __builtin_popcount(mask); }
  bool subset_of(const AtomSet& o) const { return (mask & ~o.mask) == 0; }

  AtomSet operator&(const AtomSet& o) const { return {n, mask & o.mask}; }
  AtomSet operator|(const AtomSet& o) const { return {n, mask | o.mask}; }
  friend bool operator==(const AtomSet&, const AtomSet&) = default;

  std::vector<int> indices() const {
    std::vector<int> v;
    for (int i = 1; i < n; ++i)
      if (contains(i)) v.push_back(i);
    return v;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int i : indices()) {
      if (!first) s += ",";
      s += std::to_string(i);
      first = false;
    }
    return s + "}";
  }
};

}  // namespace braid

#endif
