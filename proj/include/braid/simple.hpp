#ifndef BRAID_SIMPLE_HPP
#define BRAID_SIMPLE_HPP

#include <compare>
#include <vector>

#include "braid/atom_set.hpp"
#include "braid/permutation.hpp"

namespace braid {

// Permutation braid: a positive braid in which every pair of strands
// crosses at most once.  These are exactly the positive prefixes of the
// half twist, and they are in bijection with permutations, which is how
// they are stored.  All factor arithmetic of normal forms happens here.
class Simple {
 public:
  Simple() = default;
  explicit Simple(Permutation p) : perm_(std::move(p)) {}

  static Simple identity(int n) { return Simple(Permutation::identity(n)); }
  static Simple atom(int n, int i) {
    return Simple(Permutation::adjacent_swap(n, i));
  }
  static Simple delta(int n) { return Simple(Permutation::reversal(n)); }

  int degree() const { return perm_.degree(); }
  const Permutation& perm() const { return perm_; }

  bool is_identity() const { return perm_.is_identity(); }
  bool is_delta() const;

  // Word length of the positive braid (= inversion count).
  int length() const { return perm_.inversions(); }

  // Canonical positive word: repeatedly emits the smallest starting atom.
  std::vector<int> word() const;

  AtomSet starting_atoms() const {
    return AtomSet(degree(), perm_.descent_mask());
  }
  AtomSet finishing_atoms() const {
    return AtomSet(degree(), perm_.inverse().descent_mask());
  }

  Simple tau() const;                 // conjugation by the half twist
  Simple tau_pow(int k) const { return (k % 2 == 0) ? *this : tau(); }
  Simple complement() const;          // s^{-1} * Delta
  Simple complement_inv() const;      // Delta * s^{-1}
  Simple complement_pow(int k) const; // k may be negative

  friend bool operator==(const Simple&, const Simple&) = default;
  friend std::strong_ordering operator<=>(const Simple&, const Simple&) =
      default;
  size_t hash() const { return perm_.hash(); }

 private:
  Permutation perm_;
};

// Greatest common prefix of two simple elements.
Simple meet(const Simple& a, const Simple& b);

// true iff a is a prefix of b.
bool left_divides(const Simple& a, const Simple& b);

// Product a*b under the guarantee that it is again simple; throws
// PreconditionViolated otherwise (which indicates a logic error upstream).
Simple product_simple(const Simple& a, const Simple& b);

// For a prefix p of s, the simple q with s = p*q.
Simple left_quotient(const Simple& prefix, const Simple& s);

// Rewrites (a,b) into the left-weighted pair (a', b') with a'b' = ab.
// Returns true if anything moved.  a' may come out as Delta and b' as
// trivial; the caller deals with those.
bool left_weight_pair(Simple& a, Simple& b);

// All n! simple elements of B_n in a deterministic order (lex on images).
std::vector<Simple> all_simples(int n);

}  // namespace braid

#endif
