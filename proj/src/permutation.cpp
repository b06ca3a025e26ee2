#include "braid/permutation.hpp"

#include <algorithm>

#include "braid/errors.hpp"

namespace braid {

Permutation::Permutation(int n) {
  if (n < 1 || n > kMaxStrands)
    throw InvalidInput("strand count out of range: " + std::to_string(n));
  n_ = static_cast<uint8_t>(n);
  for (int i = 0; i < kMaxStrands; ++i) img_[i] = static_cast<uint8_t>(i);
}

Permutation Permutation::adjacent_swap(int n, int i) {
  Permutation p(n);
  if (i < 1 || i >= n)
    throw InvalidInput("generator index out of range: " + std::to_string(i));
  std::swap(p.img_[i - 1], p.img_[i]);
  return p;
}

Permutation Permutation::reversal(int n) {
  Permutation p(n);
  for (int i = 0; i < n; ++i) p.img_[i] = static_cast<uint8_t>(n - 1 - i);
  return p;
}

Permutation Permutation::from_images(int n, std::span<const int> images) {
  Permutation p(n);
  if (static_cast<int>(images.size()) != n)
    throw InvalidInput("image list length does not match strand count");
  uint32_t seen = 0;
  for (int i = 0; i < n; ++i) {
    int v = images[i];
    if (v < 1 || v > n || (seen & (1u << (v - 1))))
      throw InvalidInput("image list is not a permutation");
    seen |= 1u << (v - 1);
    p.img_[i] = static_cast<uint8_t>(v - 1);
  }
  return p;
}

int Permutation::preimage(int j) const {
  for (int i = 0; i < n_; ++i)
    if (img_[i] == j - 1) return i + 1;
  return 0;  // unreachable for valid input
}

Permutation Permutation::then(const Permutation& g) const {
  Permutation r(n_);
  if (g.n_ != n_) throw InvalidInput("strand count mismatch");
  for (int i = 0; i < n_; ++i) r.img_[i] = g.img_[img_[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r(n_);
  for (int i = 0; i < n_; ++i) r.img_[img_[i]] = static_cast<uint8_t>(i);
  return r;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < n_; ++i)
    if (img_[i] != i) return false;
  return true;
}

std::vector<int> Permutation::images() const {
  std::vector<int> v(n_);
  for (int i = 0; i < n_; ++i) v[i] = img_[i] + 1;
  return v;
}

uint32_t Permutation::descent_mask() const {
  uint32_t m = 0;
  for (int i = 0; i + 1 < n_; ++i)
    if (img_[i] > img_[i + 1]) m |= 1u << i;
  return m;
}

int Permutation::inversions() const {
  int c = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (img_[i] > img_[j]) ++c;
  return c;
}

size_t Permutation::hash() const {
  // FNV-1a over the image bytes.
  size_t h = 1469598103934665603ull;
  h = (h ^ n_) * 1099511628211ull;
  for (int i = 0; i < n_; ++i) h = (h ^ img_[i]) * 1099511628211ull;
  return h;
}

}  // namespace braid
