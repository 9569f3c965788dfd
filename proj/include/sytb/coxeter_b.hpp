#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sytb {

using Letter = std::int32_t;

// Element of the hyperoctahedral group B_n, written as the sequence
// (c_1, ..., c_n) of signed card values in positions 1..n.
class SignedPermutation {
 public:
  SignedPermutation() = default;
  explicit SignedPermutation(std::vector<int> entries);

  int rank() const { return static_cast<int>(entries_.size()); }
  std::span<const int> entries() const { return entries_; }
  int operator[](int position) const { return entries_[position - 1]; }

  // Generator action on positions: 0 negates the first card, q >= 1 swaps the
  // cards in positions q and q + 1.
  void apply(Letter q);

  friend bool operator==(const SignedPermutation&,
                         const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation&,
                          const SignedPermutation&) = default;

 private:
  std::vector<int> entries_;
};

std::string to_string(const SignedPermutation& w);

// Generator indices over {0, ..., rank - 1}.
struct Word {
  int rank = 0;
  std::vector<Letter> letters;

  Word() = default;
  Word(int rank, std::vector<Letter> letters);

  std::size_t size() const { return letters.size(); }
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;
};

std::string to_string(const Word& w);
Word parse_word(int rank, const std::string& text);

SignedPermutation identity(int n);
SignedPermutation longest_element(int n);

SignedPermutation apply_generator(SignedPermutation w, Letter q);
SignedPermutation apply_word(SignedPermutation start, const Word& word);

// True iff the word has n^2 letters and evaluates to (-1, ..., -n).
bool is_reduced_word_of_w0(const Word& word);

// All reduced words of the longest element, by breadth-first Coxeter length
// over the whole group followed by a walk along length-increasing edges.
// Oracle use only: refuses n > 4.
inline constexpr int kReducedWordBound = 4;
std::vector<Word> enumerate_reduced_words(int n);

}  // namespace sytb
