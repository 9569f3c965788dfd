#include "sytb/coxeter_b.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <sstream>

#include <fmt/format.h>

#include "sytb/shifted_shape.hpp"

namespace sytb {

SignedPermutation::SignedPermutation(std::vector<int> entries)
    : entries_(std::move(entries)) {
  const int n = rank();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int c : entries_) {
    const int a = std::abs(c);
    if (a < 1 || a > n || seen[a]) {
      throw ValidationError(fmt::format(
          "signed permutation: ({}) does not use each of 1..{} once up to sign",
          fmt::join(entries_, ","), n));
    }
    seen[a] = true;
  }
}

void SignedPermutation::apply(Letter q) {
  if (q < 0 || q >= rank()) {
    throw ValidationError(fmt::format("generator {} is outside 0..{}", q, rank() - 1));
  }
  if (q == 0) {
    entries_[0] = -entries_[0];
  } else {
    std::swap(entries_[q - 1], entries_[q]);
  }
}

std::string to_string(const SignedPermutation& w) {
  return fmt::format("({})", fmt::join(w.entries(), ","));
}

Word::Word(int rank_, std::vector<Letter> letters_)
    : rank(rank_), letters(std::move(letters_)) {
  if (rank < 1) throw ValidationError(fmt::format("word rank {} < 1", rank));
  for (Letter q : letters) {
    if (q < 0 || q >= rank) {
      throw ValidationError(
          fmt::format("word letter {} is outside 0..{}", q, rank - 1));
    }
  }
}

std::string to_string(const Word& w) {
  return fmt::format("{}", fmt::join(w.letters, ","));
}

Word parse_word(int rank, const std::string& text) {
  std::vector<Letter> letters;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw ValidationError(fmt::format("malformed word letter '{}'", item));
    }
    if (used != item.size()) {
      throw ValidationError(fmt::format("malformed word letter '{}'", item));
    }
    letters.push_back(v);
  }
  return Word(rank, std::move(letters));
}

SignedPermutation identity(int n) {
  if (n < 1) throw ValidationError(fmt::format("identity: n = {} < 1", n));
  std::vector<int> e(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) e[i] = i + 1;
  return SignedPermutation(std::move(e));
}

SignedPermutation longest_element(int n) {
  if (n < 1) throw ValidationError(fmt::format("longest_element: n = {} < 1", n));
  std::vector<int> e(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) e[i] = -(i + 1);
  return SignedPermutation(std::move(e));
}

SignedPermutation apply_generator(SignedPermutation w, Letter q) {
  w.apply(q);
  return w;
}

SignedPermutation apply_word(SignedPermutation start, const Word& word) {
  if (word.rank != start.rank()) {
    throw ValidationError(fmt::format("apply_word: word rank {} vs permutation rank {}",
                                      word.rank, start.rank()));
  }
  for (Letter q : word.letters) start.apply(q);
  return start;
}

bool is_reduced_word_of_w0(const Word& word) {
  const auto n = static_cast<std::size_t>(word.rank);
  if (word.rank < 1 || word.size() != n * n) return false;
  for (Letter q : word.letters) {
    if (q < 0 || q >= word.rank) return false;
  }
  return apply_word(identity(word.rank), word) == longest_element(word.rank);
}

std::vector<Word> enumerate_reduced_words(int n) {
  if (n < 1) throw ValidationError(fmt::format("enumerate_reduced_words: n = {} < 1", n));
  if (n > kReducedWordBound) {
    throw OracleBoundExceeded(fmt::format(
        "enumerate_reduced_words: n = {} exceeds bound {}", n, kReducedWordBound));
  }

  std::map<SignedPermutation, int> length;
  std::deque<SignedPermutation> queue;
  length.emplace(identity(n), 0);
  queue.push_back(identity(n));
  while (!queue.empty()) {
    const SignedPermutation w = queue.front();
    queue.pop_front();
    const int d = length.at(w);
    for (Letter q = 0; q < n; ++q) {
      SignedPermutation next = apply_generator(w, q);
      if (length.emplace(next, d + 1).second) queue.push_back(std::move(next));
    }
  }

  const SignedPermutation target = longest_element(n);
  std::vector<Word> out;
  std::vector<Letter> prefix;
  auto descend = [&](auto&& self, const SignedPermutation& w, int d) -> void {
    if (w == target) {
      out.emplace_back(n, prefix);
      return;
    }
    for (Letter q = 0; q < n; ++q) {
      SignedPermutation next = apply_generator(w, q);
      if (length.at(next) != d + 1) continue;
      prefix.push_back(q);
      self(self, next, d + 1);
      prefix.pop_back();
    }
  };
  descend(descend, identity(n), 0);
  return out;
}

}  // namespace sytb
