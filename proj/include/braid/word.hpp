#ifndef BRAID_WORD_HPP
#define BRAID_WORD_HPP

#include <string>
#include <vector>

#include "braid/permutation.hpp"

namespace braid {

// Free word in the signed Artin generators: letter i > 0 is sigma_i,
// letter -i is its inverse.  The empty word is the identity braid.
struct BraidWord {
  int n = 1;
  std::vector<int> letters;

  BraidWord() = default;
  BraidWord(int strands, std::vector<int> ls);

  static BraidWord identity(int strands) { return BraidWord(strands, {}); }

  bool empty() const { return letters.empty(); }
  size_t size() const { return letters.size(); }

  BraidWord inverse() const;
  BraidWord& append(const BraidWord& other);
  BraidWord& append_letter(int letter);

  // Underlying permutation: letters applied left to right, signs ignored.
  Permutation permutation() const;

  // Text form "B5: 1 2 -3 4".
  std::string to_string() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

// Parses "Bn: i1 i2 ..." or, when strands_hint > 0, a bare list of signed
// integers.  Throws InvalidInput on malformed text or out-of-range letters.
BraidWord parse_word(const std::string& text, int strands_hint = 0);

}  // namespace braid

#endif
