#include "braid/word.hpp"

#include <algorithm>
#include <sstream>

#include "braid/errors.hpp"

namespace braid {

namespace {
void check_letter(int n, int letter) {
  int a = std::abs(letter);
  if (a < 1 || a >= n)
    throw InvalidInput("letter " + std::to_string(letter) +
                       " out of range for " + std::to_string(n) + " strands");
}
}  // namespace

BraidWord::BraidWord(int strands, std::vector<int> ls)
    : n(strands), letters(std::move(ls)) {
  if (n < 1 || n > Permutation::kMaxStrands)
    throw InvalidInput("strand count out of range: " + std::to_string(n));
  for (int l : letters) check_letter(n, l);
}

BraidWord BraidWord::inverse() const {
  BraidWord w(n, {});
  w.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    w.letters.push_back(-*it);
  return w;
}

BraidWord& BraidWord::append(const BraidWord& other) {
  if (other.n != n) throw InvalidInput("strand count mismatch");
  letters.insert(letters.end(), other.letters.begin(), other.letters.end());
  return *this;
}

BraidWord& BraidWord::append_letter(int letter) {
  check_letter(n, letter);
  letters.push_back(letter);
  return *this;
}

Permutation BraidWord::permutation() const {
  Permutation p(n);
  for (int l : letters)
    p = p.then(Permutation::adjacent_swap(n, std::abs(l)));
  return p;
}

std::string BraidWord::to_string() const {
  std::string s = "B" + std::to_string(n) + ":";
  for (int l : letters) s += " " + std::to_string(l);
  return s;
}

BraidWord parse_word(const std::string& text, int strands_hint) {
  std::string body = text;
  int n = strands_hint;
  auto colon = text.find(':');
  if (colon != std::string::npos) {
    std::string head = text.substr(0, colon);
    // trim
    head.erase(std::remove_if(head.begin(), head.end(), ::isspace),
               head.end());
    if (head.size() < 2 || (head[0] != 'B' && head[0] != 'b'))
      throw InvalidInput("bad braid word header: " + head);
    try {
      n = std::stoi(head.substr(1));
    } catch (...) {
      throw InvalidInput("bad strand count in header: " + head);
    }
    body = text.substr(colon + 1);
  }
  if (n <= 0)
    throw InvalidInput(
        "strand count not given (use a 'Bn:' header or an explicit flag)");
  BraidWord w(n, {});
  std::istringstream in(body);
  std::string tok;
  while (in >> tok) {
    try {
      size_t pos = 0;
      int l = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      w.append_letter(l);
    } catch (const InvalidInput&) {
      throw;
    } catch (...) {
      throw InvalidInput("bad letter: " + tok);
    }
  }
  return w;
}

}  // namespace braid
