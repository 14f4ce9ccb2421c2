#pragma once

/**
 * @file iet.hpp
 * @brief Interval exchange transformations over a real quadratic field.
 *
 * An Iet is a piecewise translation of [0,1[. Its alphabet carries two total
 * orders: order1 lists the letters in the order of the intervals
 * I_a = [gamma_a, mu_a[ and order2 in the order of their images
 * J_a = [delta_a, nu_a[. On I_a the map is z -> z + alpha_a with
 * alpha_a = nu_a - mu_a.
 *
 * Letters are single characters; every letter may carry a display label
 * (powers and stacked transformations name their letters by words such as
 * "ab" or "a2"). All values are immutable after construction.
 */

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "iet/quadratic.hpp"

namespace iet {

/// A word over single-character letters.
using Word = std::string;

/// The half-open interval [left, right[.
struct SemiInterval {
  QuadraticNumber left;
  QuadraticNumber right;

  bool contains(const QuadraticNumber& z) const { return left <= z && z < right; }
  QuadraticNumber length() const { return right - left; }
  friend bool operator==(const SemiInterval&, const SemiInterval&) = default;
};

/// Intersection of two semi-intervals; empty when it would be degenerate.
std::optional<SemiInterval> intersect(const SemiInterval& a, const SemiInterval& b);

class Iet {
 public:
  /// lengths[i] is the length of the interval of order1[i].
  /// Throws AlphabetMismatch, NonPositiveLength, LengthSumError, MixedFieldError.
  Iet(std::string order1, std::string order2, std::vector<QuadraticNumber> lengths,
      std::vector<std::string> labels = {});

  std::size_t size() const { return order1_.size(); }
  const std::string& order1() const { return order1_; }
  const std::string& order2() const { return order2_; }
  /// Radicand shared by all lengths (0 when every length is rational).
  std::int64_t field() const { return field_; }

  bool has_letter(char a) const;
  /// Position of a in order1. Throws AlphabetMismatch.
  std::size_t index(char a) const;

  const QuadraticNumber& length(char a) const { return lambda_[index(a)]; }
  const QuadraticNumber& mu(char a) const { return mu_[index(a)]; }
  const QuadraticNumber& nu(char a) const { return nu_[index(a)]; }
  const QuadraticNumber& gamma(char a) const { return gamma_[index(a)]; }
  const QuadraticNumber& delta(char a) const { return delta_[index(a)]; }
  const QuadraticNumber& translation(char a) const { return alpha_[index(a)]; }

  SemiInterval interval(char a) const { return {gamma(a), mu(a)}; }
  SemiInterval image(char a) const { return {delta(a), nu(a)}; }

  const std::string& label(char a) const { return labels_[index(a)]; }
  /// Labels in order1 order.
  const std::vector<std::string>& labels() const { return labels_; }
  /// Letter whose label is `label`. Throws AlphabetMismatch.
  char letter_of_label(std::string_view label) const;

  /// Letter a with z in I_a. Throws OutOfDomain unless 0 <= z < 1.
  char letter_at(const QuadraticNumber& z) const;
  QuadraticNumber apply(const QuadraticNumber& z) const;

  friend bool operator==(const Iet& a, const Iet& b) {
    return a.order1_ == b.order1_ && a.order2_ == b.order2_ && a.lambda_ == b.lambda_ && a.labels_ == b.labels_;
  }

 private:
  std::string order1_;
  std::string order2_;
  std::vector<std::string> labels_;
  std::vector<QuadraticNumber> lambda_, mu_, nu_, gamma_, delta_, alpha_;
  std::int64_t field_ = 0;
};

/// Convenience: lengths given letter by letter, e.g. {{'a', 1 - alpha}, {'b', alpha}}.
Iet make_iet(const std::vector<std::pair<char, QuadraticNumber>>& lengths, std::string order1, std::string order2);

/// The inverse transformation: same letters, roles of the two partitions swapped.
Iet inverse(const Iet& t);

/// T^n as an exchange of the nonempty I_w, |w| = n. Letters are fresh
/// characters labelled by the underlying words.
Iet power(const Iet& t, std::size_t n);

/// [0, mu_1, ..., mu_{s-1}] in increasing order.
std::vector<QuadraticNumber> separation_points(const Iet& t);

struct Connection {
  std::size_t from;   // i, 1-based index of the nonzero separation point mu_i
  std::size_t to;     // j
  std::size_t steps;  // k with T^k(mu_i) = mu_j
};

struct RegularityReport {
  enum class Status { RegularUpToDepth, ConnectionFound };
  Status status = Status::RegularUpToDepth;
  std::size_t depth = 0;
  std::optional<Connection> witness;

  bool regular() const { return status == Status::RegularUpToDepth; }
};

/// Semi-decision of the infinite disjoint orbit condition: iterates each
/// nonzero separation point up to `depth` steps looking for another one.
/// RegularUpToDepth proves nothing beyond the depth examined.
RegularityReport check_regular(const Iet& t, std::size_t depth = 64);

/// True iff no proper nonempty order1-prefix B has pi(B) = B.
bool perm_indecomposable(std::string_view order1, std::string_view order2);

/// I_w: points whose natural coding starts with w. Empty optional if I_w is empty.
std::optional<SemiInterval> starting_interval(const Iet& t, std::string_view w);
/// J_w = T^{|w|}(I_w): points whose past |w| symbols read w.
std::optional<SemiInterval> ending_interval(const Iet& t, std::string_view w);
/// alpha_w, the sum of translation values along w.
QuadraticNumber word_translation(const Iet& t, std::string_view w);

/// One refinement step: given J_w and alpha_w, the interval J_{wa} if nonempty.
/// Shared by the language generators.
std::optional<SemiInterval> extend_right(const Iet& t, const SemiInterval& ending, char a);

/// Character pool used when fresh letters are needed (powers, stacks).
std::string_view fresh_letters();

}  // namespace iet
