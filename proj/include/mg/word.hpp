#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace mg {

// A letter is a signed generator index: +i is the i-th generator (i >= 1),
// -i its inverse.
using Let = std::int32_t;

// Order for shortlex: generator i comes right before its inverse, smaller
// indices first (1, 1^-1, 2, 2^-1, ...).
inline int letter_rank(Let v) { return 2 * (std::abs(v) - 1) + (v < 0 ? 1 : 0); }

// A freely reduced word over a signed alphabet. Immutable after construction;
// every constructor reduces.
class Word {
 public:
  Word() = default;
  explicit Word(std::span<const Let> raw);
  Word(std::initializer_list<Let> raw);

  static Word letter(Let v);

  const std::vector<Let>& letters() const { return ls_; }
  std::size_t size() const { return ls_.size(); }
  bool empty() const { return ls_.empty(); }
  Let operator[](std::size_t i) const { return ls_[i]; }

  Word inverse() const;
  Word operator*(const Word& rhs) const;
  Word pow(long long e) const;

  // Largest generator index mentioned (0 for the empty word).
  int max_index() const;

  bool operator==(const Word& rhs) const { return ls_ == rhs.ls_; }
  bool operator!=(const Word& rhs) const { return ls_ != rhs.ls_; }

  std::string str() const;  // debug form: "a b^-1 ..." with x1,x2,... names

 private:
  std::vector<Let> ls_;
  friend Word concat_reduced_unchecked(std::vector<Let> ls);
};

// Builds a word from an already-reduced letter sequence (no checking).
Word concat_reduced_unchecked(std::vector<Let> ls);

// Free reduction of an arbitrary letter sequence.
Word reduce(std::span<const Let> raw);

// Reduced product of words raised to integer exponents, in order.
Word product(std::span<const std::pair<Word, long long>> factors);

bool shortlex_less(const Word& a, const Word& b);

// w = conjugator * core * conjugator^-1 with core cyclically reduced.
struct CyclicForm {
  Word core;
  Word conjugator;
};
CyclicForm cyclically_reduce(const Word& w);

// w = root^power with power maximal; root is not a proper power.
// Throws on the empty word.
struct RootPower {
  Word root;
  long long power = 1;
};
RootPower primitive_root(const Word& w);

// Conjugacy in the ambient free group, decided by cyclic rotations of the
// cyclic reductions.
bool conjugate_in_free(const Word& u, const Word& w);

Word commutator(const Word& a, const Word& b);

// Substitutes images for letters: letter +-i becomes images[i-1]^{+-1}.
Word substitute(const Word& w, std::span<const Word> images);

// All freely reduced words over n generators of the exact given length,
// in shortlex order.
void reduced_words_of_length(int n, int len, const std::function<void(const Word&)>& fn);

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ull;
    for (Let v : w.letters()) {
      h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(v));
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct ShortlexLess {
  bool operator()(const Word& a, const Word& b) const { return shortlex_less(a, b); }
};

}  // namespace mg
