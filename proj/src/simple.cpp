#include "braid/simple.hpp"

#include <algorithm>
#include <numeric>

#include "braid/errors.hpp"

namespace braid {

bool Simple::is_delta() const {
  const int n = degree();
  for (int i = 1; i <= n; ++i)
    if (perm_.image(i) != n + 1 - i) return false;
  return true;
}

std::vector<int> Simple::word() const {
  std::vector<int> w;
  w.reserve(length());
  Permutation p = perm_;
  for (;;) {
    uint32_t d = p.descent_mask();
    if (d == 0) break;
    int i = __builtin_ctz(d) + 1;
    w.push_back(i);
    // strip the prefix sigma_i: swap the images at positions i, i+1
    p = Permutation::adjacent_swap(p.degree(), i).then(p);
  }
  return w;
}

Simple Simple::tau() const {
  const int n = degree();
  Permutation rev = Permutation::reversal(n);
  return Simple(rev.then(perm_).then(rev));
}

Simple Simple::complement() const {
  // s * complement(s) = Delta, so complement(s) = s^{-1} followed by the
  // reversal.
  return Simple(perm_.inverse().then(Permutation::reversal(degree())));
}

Simple Simple::complement_inv() const {
  return Simple(Permutation::reversal(degree()).then(perm_.inverse()));
}

Simple Simple::complement_pow(int k) const {
  // complement squared is tau
  Simple s = *this;
  if (k % 2 != 0) {
    s = (k > 0) ? s.complement() : s.complement_inv();
    k -= (k > 0) ? 1 : -1;
  }
  return s.tau_pow(k / 2);
}

Simple meet(const Simple& a, const Simple& b) {
  if (a.degree() != b.degree()) throw InvalidInput("strand count mismatch");
  const int n = a.degree();
  Permutation pa = a.perm(), pb = b.perm();
  Permutation acc = Permutation::identity(n);
  for (;;) {
    uint32_t common = pa.descent_mask() & pb.descent_mask();
    if (common == 0) break;
    int i = __builtin_ctz(common) + 1;
    Permutation t = Permutation::adjacent_swap(n, i);
    pa = t.then(pa);
    pb = t.then(pb);
    acc = acc.then(t);
  }
  return Simple(acc);
}

bool left_divides(const Simple& a, const Simple& b) {
  return meet(a, b) == a;
}

Simple product_simple(const Simple& a, const Simple& b) {
  Permutation p = a.perm().then(b.perm());
  if (p.inversions() != a.length() + b.length())
    throw PreconditionViolated("product of simples is not simple");
  return Simple(p);
}

Simple left_quotient(const Simple& prefix, const Simple& s) {
  Permutation q = prefix.perm().inverse().then(s.perm());
  if (q.inversions() + prefix.length() != s.length())
    throw PreconditionViolated("not a prefix");
  return Simple(q);
}

bool left_weight_pair(Simple& a, Simple& b) {
  Simple s = meet(a.complement(), b);
  if (s.is_identity()) return false;
  a = product_simple(a, s);
  b = left_quotient(s, b);
  return true;
}

std::vector<Simple> all_simples(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Simple> out;
  do {
    out.emplace_back(Permutation::from_images(n, img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace braid
