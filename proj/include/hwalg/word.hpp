#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hwalg {

/// The two generators. Alpha is the greater letter.
enum class Letter : char { Alpha = 'a', Beta = 'b' };

inline bool letter_greater(Letter x, Letter y) {
  return x == Letter::Alpha && y == Letter::Beta;
}

/// Result of comparing words v, w by their juxtapositions: Greater means
/// vw exceeds wv at the first differing position (with a > b); Equivalent
/// means vw = wv, which holds exactly when v and w are powers of a common
/// root (in particular whenever either is empty).
enum class WordOrdering { Greater, Less, Equivalent };

/// A finite word over {a, b}. Immutable after construction.
class Word {
public:
  Word() = default;
  explicit Word(std::string letters);
  static Word alpha() { return Word("a"); }
  static Word beta() { return Word("b"); }

  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter at(std::size_t i) const { return static_cast<Letter>(letters_[i]); }
  const std::string& letters() const { return letters_; }

  Word subword(std::size_t pos, std::size_t len) const {
    return Word(letters_.substr(pos, len));
  }
  Word prefix(std::size_t len) const { return subword(0, len); }
  Word suffix_from(std::size_t pos) const {
    return Word(letters_.substr(pos));
  }

  friend Word operator+(const Word& l, const Word& r) {
    return Word(l.letters_ + r.letters_);
  }
  Word pow(unsigned t) const;

  bool operator==(const Word& o) const { return letters_ == o.letters_; }

  /// Canonical total order used for map keys and deterministic output:
  /// by length first, then positionwise with a above b. Unrelated to the
  /// algebraic ordering (see compare()).
  bool operator<(const Word& o) const;

private:
  std::string letters_; // validated: only 'a' and 'b'
};

/// v > w iff vw exceeds wv letterwise; Equivalent iff vw = wv.
WordOrdering compare(const Word& v, const Word& w);

inline bool word_greater(const Word& v, const Word& w) {
  return compare(v, w) == WordOrdering::Greater;
}

/// A word is regular (Lyndon-Shirshov) when every split into nonempty
/// beginning L and ending R has L > R; equivalently the word strictly
/// exceeds all of its nontrivial rotations.
bool is_regular(const Word& w);

/// Splits a regular word of length >= 2 as L * R with R the longest
/// regular proper ending; L is then regular as well and L > R.
std::pair<Word, Word> regular_factoring(const Word& w);

/// The unique factorization of a nonempty word into regular factors that
/// are nondecreasing left to right. Computed by repeatedly peeling the
/// longest regular prefix (the mirrored Chen-Fox-Lyndon/Duval scheme).
std::vector<Word> regular_decomposition(const Word& w);

/// Number of (possibly overlapping) occurrences of v in w; v nonempty.
std::size_t deg_subword(const Word& w, const Word& v);

inline std::size_t deg_alpha(const Word& w) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < w.length(); ++i)
    if (w.at(i) == Letter::Alpha) ++c;
  return c;
}
inline std::size_t deg_beta(const Word& w) {
  return w.length() - deg_alpha(w);
}

/// A regular word of length >= 2 reads a^{m1} b^{n1} ... a^{mk} b^{nk}
/// with every exponent positive. s is the 1-based cluster index of the
/// first maximal value among m2..mk; present only when k >= 2.
struct ExponentForm {
  std::vector<std::pair<unsigned, unsigned>> pairs;
  std::optional<std::size_t> s;

  std::size_t cluster_count() const { return pairs.size(); }
  Word to_word() const;
};

ExponentForm exponent_form(const Word& w);

/// 0-based start positions of every occurrence of v in w, left to right.
std::vector<std::size_t> occurrence_positions(const Word& w, const Word& v);

Word parse_word(const std::string& text);
inline std::string render_word(const Word& w) { return w.letters(); }

/// Renders the exponent form as "a^2 b^1 a^1 b^1".
std::string render_exponent_form(const ExponentForm& e);

namespace ref {

/// The all-splits definition check, kept deliberately naive: every split
/// of w into nonempty L, R must satisfy compare(L, R) = Greater.
bool is_regular(const Word& w);

/// All words of the given length, in descending compare order.
std::vector<Word> all_words(std::size_t n);

/// Filters all_words(n) through the naive definition check.
std::vector<Word> regular_words(std::size_t n);

/// Every factorization of w into regular factors that are nondecreasing
/// left to right. Uniqueness of the regular decomposition means this
/// returns exactly one factorization for every nonempty w.
std::vector<std::vector<Word>> regular_factorizations(const Word& w);

} // namespace ref

} // namespace hwalg
