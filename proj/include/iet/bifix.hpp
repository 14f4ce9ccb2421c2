#pragma once

/**
 * @file bifix.hpp
 * @brief Prefix, suffix and bifix codes inside a factorial language.
 *
 * Covers S-maximality, parse counting, S-degree, internal factors and
 * kernel, bounded enumeration of S-maximal bifix codes, decoding of words
 * and languages through a coding morphism, and the transformation T_f
 * obtained by decoding an Iet through a maximal bifix code.
 */

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "iet/iet.hpp"
#include "iet/language.hpp"

namespace iet {

/// A finite set of nonempty words, kept sorted.
class CodeSet {
 public:
  CodeSet() = default;
  CodeSet(std::initializer_list<Word> words) : CodeSet(std::vector<Word>(words)) {}
  explicit CodeSet(std::vector<Word> words);

  const std::vector<Word>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }
  bool contains(std::string_view w) const;
  std::size_t max_length() const;

  bool is_prefix_code() const;
  bool is_suffix_code() const;
  bool is_bifix_code() const { return is_prefix_code() && is_suffix_code(); }

  /// Some element of the code is a prefix (suffix) of w.
  bool has_prefix_in(std::string_view w) const;
  bool has_suffix_in(std::string_view w) const;

  friend bool operator==(const CodeSet&, const CodeSet&) = default;
  friend auto operator<=>(const CodeSet&, const CodeSet&) = default;

 private:
  std::vector<Word> words_;
};

/// Morphism B* -> A* mapping the source letters bijectively onto a code.
class CodingMorphism {
 public:
  /// Throws NotDecodable for an empty or repeated image.
  explicit CodingMorphism(std::map<char, Word> images);

  std::string source_alphabet() const;
  const Word& image(char b) const;
  const std::map<char, Word>& images() const { return images_; }
  CodeSet code() const;
  Word apply(std::string_view y) const;
  /// Source letter whose image is x, or '\0'.
  char preimage(std::string_view x) const;

 private:
  std::map<char, Word> images_;
};

/// X is an S-maximal prefix code: a prefix code inside S such that every
/// word of S of length max|x| has a prefix in X. Throws TruncationTooShort.
bool is_s_maximal_prefix(const CodeSet& x, const FactorialLanguage& s);

/// delta_X(w): number of suffixes of w (epsilon and w included) with no
/// prefix in X. Equals the number of parses when X is bifix.
std::size_t parse_count(const CodeSet& x, std::string_view w);

/// Internal factors: words u with nonempty p, q such that p u q is in X.
std::vector<Word> internal_factors(const CodeSet& x);

struct BifixReport {
  bool s_maximal = false;
  std::size_t degree = 0;
  std::vector<Word> internal_factors;
  std::vector<Word> kernel;
  /// Filled only for Iet-backed analysis: X by left end of I_x / of J_x.
  std::vector<Word> order1;
  std::vector<Word> order2;
};

/// Degree, internal factors and kernel of a finite S-maximal bifix code.
/// Requires S.max_len >= 2 max|x|. Throws NotBifix, NotSMaximal, TruncationTooShort.
BifixReport analyze_bifix(const CodeSet& x, const FactorialLanguage& s);
/// Same, with order1/order2 read off the intervals I_x and J_x of t.
BifixReport analyze_bifix(const CodeSet& x, const FactorialLanguage& s, const Iet& t);

/// Sorts X by the lexicographic order induced by `letter_order` (the order
/// of the intervals I_x for a prefix code).
std::vector<Word> lexicographic_order(const CodeSet& x, std::string_view letter_order);
/// Sorts X by the lexicographic order of reversed words (the order of the
/// intervals J_x for a suffix code).
std::vector<Word> reverse_lexicographic_order(const CodeSet& x, std::string_view letter_order);

/// Every bifix code X inside S with words of length <= max_word_len that is
/// an S-maximal prefix code of S-degree d. Complete relative to the length
/// bound. Requires S.max_len >= 2 max_word_len. Result sorted.
std::vector<CodeSet> enumerate_maximal_bifix(const FactorialLanguage& s, std::size_t degree, std::size_t max_word_len);

struct Decoding {
  Word decoded;          // y with f(y) = consumed prefix
  std::size_t consumed;  // letters of x used
  Word remainder;        // trailing partial block
};

/// Greedy leftmost factorization of x over the prefix code image(f).
/// Throws NotDecodable when the remainder is not a prefix of a code word.
Decoding decode_word(std::string_view x, const CodingMorphism& f);

/// T_f: the exchange of the intervals I_{f(b)} with translation alpha_{f(b)}.
/// Throws NotBifix, NotSMaximal.
Iet build_tf(const Iet& t, const CodingMorphism& f, const FactorialLanguage& s);

/// f^{-1}(S) truncated at out_len. Requires out_len * max|f(b)| <= S.max_len.
/// Accepts non-bifix codes.
FactorialLanguage decode_language(const FactorialLanguage& s, const CodingMorphism& f, std::size_t out_len);

}  // namespace iet
