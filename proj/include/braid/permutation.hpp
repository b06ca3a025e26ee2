#ifndef BRAID_PERMUTATION_HPP
#define BRAID_PERMUTATION_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace braid {

// Permutation of {1,...,n}, n <= kMaxStrands.  Acts as a strand-position
// tracker: image(i) is where the strand starting at position i ends up.
// Unused slots are kept as fixed points so that comparison and hashing
// can look at the whole array.
class Permutation {
 public:
  static constexpr int kMaxStrands = 16;

  Permutation() : Permutation(1) {}
  explicit Permutation(int n);

  static Permutation identity(int n) { return Permutation(n); }
  // Swaps i and i+1 (1-based, 1 <= i <= n-1).
  static Permutation adjacent_swap(int n, int i);
  // i -> n+1-i, the permutation of the half twist.
  static Permutation reversal(int n);
  // images[k] is the 1-based image of k+1; validates bijectivity.
  static Permutation from_images(int n, std::span<const int> images);

  int degree() const { return n_; }
  int image(int i) const { return img_[i - 1] + 1; }
  int preimage(int j) const;

  // this followed by g: result(i) = g(this(i)).
  Permutation then(const Permutation& g) const;
  Permutation inverse() const;

  bool is_identity() const;
  std::vector<int> images() const;

  // Bit i-1 set iff image(i) > image(i+1).
  uint32_t descent_mask() const;

  // Number of pairs i < j with image(i) > image(j).
  int inversions() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.n_ == b.n_ && a.img_ == b.img_;
  }
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    if (a.n_ != b.n_) return a.n_ <=> b.n_;
    return a.img_ <=> b.img_;
  }

  size_t hash() const;

  // Raw 0-based image bytes, for compact serialization keys.
  const std::array<uint8_t, kMaxStrands>& raw() const { return img_; }

 private:
  uint8_t n_;
  std::array<uint8_t, kMaxStrands> img_;
};

}  // namespace braid

#endif
