#pragma once

/**
 * @file language.hpp
 * @brief Truncated factorial languages and the generators that produce them.
 *
 * A FactorialLanguage stores every member word up to a truncation length.
 * It is produced either from an Iet by exact interval refinement or from a
 * primitive substitution by iterating it on a seed letter. Membership queries
 * beyond the truncation are errors rather than silent "no" answers.
 */

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "iet/iet.hpp"

namespace iet {

class FactorialLanguage {
 public:
  /// The language {epsilon} over `alphabet`.
  FactorialLanguage(std::string alphabet, std::size_t max_len);

  /// Builds from an explicit word list; the empty word is implicit.
  /// Throws ParseError if a word uses a foreign letter, is too long, or the
  /// set is not closed under factors.
  static FactorialLanguage from_words(std::string alphabet, std::size_t max_len, const std::vector<Word>& words);

  /// Factors of `text` of length <= max_len.
  static FactorialLanguage factors_of(std::string alphabet, std::string_view text, std::size_t max_len);

  const std::string& alphabet() const { return alphabet_; }
  std::size_t max_len() const { return max_len_; }

  /// Throws TruncationTooShort when |w| > max_len.
  bool contains(std::string_view w) const;

  /// Words of length n in increasing lexicographic order.
  const std::set<Word>& words_of_length(std::size_t n) const;
  /// All words by length, then lexicographically; epsilon first.
  std::vector<Word> words() const;
  std::size_t size() const;

  /// R(w) = {a : wa in S}, L(w) = {a : aw in S}, in alphabet order.
  /// Throws TruncationTooShort when |w| + 1 > max_len.
  std::string right_extensions(std::string_view w) const;
  std::string left_extensions(std::string_view w) const;

  /// Equal truncation, equal alphabet as a set, equal words.
  friend bool operator==(const FactorialLanguage& a, const FactorialLanguage& b);

  /// Internal: unchecked insertion used by generators.
  void insert(Word w);

  /// The language truncated to a shorter length.
  FactorialLanguage truncated(std::size_t max_len) const;

 private:
  std::string alphabet_;
  std::size_t max_len_;
  std::vector<std::set<Word>> by_length_;
};

/// The length-n prefix of the natural coding of z.
Word natural_coding(const Iet& t, const QuadraticNumber& z, std::size_t n);

/// All words w with |w| <= max_len and nonempty I_w, by breadth-first
/// interval refinement. Each frontier level is expanded in parallel.
/// Unless `force`, throws NotRegularToDepth when check_regular(t, max_len)
/// finds a connection (then the set depends on the starting point).
FactorialLanguage language_of_iet(const Iet& t, std::size_t max_len, bool force = false);
/// Single-threaded reference for language_of_iet.
FactorialLanguage language_of_iet_serial(const Iet& t, std::size_t max_len, bool force = false);

/// lambda(w) = |I_w|, zero when I_w is empty.
QuadraticNumber invariant_measure(const Iet& t, std::string_view w);

class Substitution {
 public:
  explicit Substitution(std::map<char, Word> rules);

  static Substitution fibonacci();   // a -> ab, b -> a
  static Substitution tribonacci();  // a -> ab, b -> ac, c -> a

  /// Domain letters in increasing order.
  std::string alphabet() const;
  const Word& image(char a) const;
  Word apply(std::string_view w) const;
  /// Some power f^k, k <= |A|^2, has every letter in every image.
  bool is_primitive() const;

 private:
  std::map<char, Word> rules_;
};

/// Factors of length <= max_len of the fixpoint f^omega(seed). Iterates f on
/// the seed until the truncated factor set stops changing between two
/// successive iterations. Throws NoFixpoint, NotPrimitive.
FactorialLanguage substitution_language(const Substitution& f, char seed, std::size_t max_len);

struct SpecialWords {
  std::vector<Word> right;
  std::vector<Word> left;
};
/// Length-n words with at least two right (left) extensions. Requires n < max_len.
SpecialWords special_words(const FactorialLanguage& s, std::size_t n);

/// For each n <= max_len, the smallest window m <= max_len such that every
/// word of length m contains every length-n word, or nullopt if none exists
/// within the truncation. A finite witness only; it does not prove uniform
/// recurrence.
std::vector<std::optional<std::size_t>> recurrence_windows(const FactorialLanguage& s);

/// First pair (u, w) of nonempty words with |u|, |w| <= k such that no uvw
/// lies in the truncated language. Requires 2k <= max_len.
std::optional<std::pair<Word, Word>> recurrence_failure(const FactorialLanguage& s, std::size_t k);

/// Plain-text language file: `alphabet: a b c`, `maxlen: N`, then one word
/// per line. `#` starts a comment. The empty word is implicit.
void write_language(std::ostream& os, const FactorialLanguage& s);
FactorialLanguage read_language(std::istream& is);

}  // namespace iet
