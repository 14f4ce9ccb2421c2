#pragma once

/**
 * @file skew.hpp
 * @brief Skew products of an Iet with a permutation group, and return words.
 *
 * Convention: permutations act on the right, U(z, q) = (T(z), q.psi(z)),
 * and compose left to right along words: q.phi(uv) = (q.phi(u)).phi(v).
 * Points of Q = {1..d} are 1-based throughout the public interface.
 *
 * The stacked realization places copy q of [0,1[ at [(q-1)/d, q/d[, so the
 * pair (z, q) sits at (q - 1 + z) / d.
 */

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "iet/bifix.hpp"
#include "iet/iet.hpp"

namespace iet {

class Permutation {
 public:
  static Permutation identity(std::size_t degree);
  /// Disjoint cycle notation: "()", "(2 3)", "(1 2)(3 4)". Throws ParseError.
  static Permutation parse(std::string_view cycles, std::size_t degree);
  /// images[q-1] = image of q.
  static Permutation from_images(std::vector<std::size_t> images);

  std::size_t degree() const { return images_.size(); }
  /// q.sigma for 1-based q.
  std::size_t act(std::size_t q) const;
  /// Apply this, then `next`.
  Permutation then(const Permutation& next) const;
  std::string str() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;  // 0-based
};

/// Morphism A* -> Sym(Q) given on letters.
class PermMorphism {
 public:
  PermMorphism(std::map<char, Permutation> assignments);

  /// "a:(2 3);b:(1 2)". With degree 0 the largest point mentioned is used.
  static PermMorphism parse(std::string_view text, std::size_t degree = 0);

  std::size_t degree() const { return degree_; }
  const Permutation& of(char a) const;
  Permutation of_word(std::string_view w) const;
  const std::map<char, Permutation>& assignments() const { return assignments_; }
  /// The generated group acts transitively on Q.
  bool is_transitive() const;

 private:
  std::map<char, Permutation> assignments_;
  std::size_t degree_ = 1;
};

class SkewIet {
 public:
  /// Throws AlphabetMismatch when a letter has no permutation, NotTransitive.
  SkewIet(Iet base, PermMorphism perm);

  const Iet& base() const { return base_; }
  const PermMorphism& perm() const { return perm_; }
  std::size_t degree() const { return perm_.degree(); }

 private:
  Iet base_;
  PermMorphism perm_;
};

/// U(z, q) = (T(z), q.psi(z)). Throws OutOfDomain.
std::pair<QuadraticNumber, std::size_t> skew_apply(const SkewIet& u, const QuadraticNumber& z, std::size_t q);

/// (q - 1 + z) / d and its inverse.
QuadraticNumber stack_position(const SkewIet& u, const QuadraticNumber& z, std::size_t q);
std::pair<QuadraticNumber, std::size_t> unstack(const SkewIet& u, const QuadraticNumber& x);

/// U as one Iet on the alphabet A x Q; letter (a, q) is labelled
/// label(a) followed by q, e.g. "b2".
Iet skew_as_iet(const SkewIet& u);

/// The idoc test for the skew product itself: orbits of the points (mu_i, q),
/// 1 <= i < s, must stay infinite and disjoint. Witness indices number the
/// points (q - 1)(s - 1) + i.
RegularityReport skew_check_regular(const SkewIet& u, std::size_t depth = 64);

/// Words read along orbits leaving copy `home` up to their first return,
/// with |w| <= max_word_len: w has nonempty I_w, home.phi(w) = home, and no
/// proper nonempty prefix returns. Throws NotRegularToDepth, OutOfDomain.
CodeSet return_words(const SkewIet& u, std::size_t home, std::size_t max_word_len);

struct FirstReturn {
  QuadraticNumber point;
  Word word;
};
/// Iterates U from (z, home) until it comes back to copy `home`.
FirstReturn first_return(const SkewIet& u, const QuadraticNumber& z, std::size_t home, std::size_t max_steps = 1000);

/// |X| = d(s - 1) + 1.
bool schreier_check(const CodeSet& x, std::size_t d, std::size_t s);

}  // namespace iet
