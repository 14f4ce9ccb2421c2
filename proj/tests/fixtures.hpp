#pragma once

#include <random>
#include <vector>

#include "iet/bifix.hpp"
#include "iet/iet.hpp"
#include "iet/language.hpp"
#include "iet/quadratic.hpp"

namespace fixtures {

using iet::CodeSet;
using iet::CodingMorphism;
using iet::Iet;
using iet::QuadraticNumber;

// alpha = (3 - sqrt 5) / 2
inline QuadraticNumber alpha() { return QuadraticNumber::parse("3/2-1/2*sqrt(5)"); }

// Rotation by alpha on the letters a, b.
inline Iet golden() { return iet::make_iet({{'a', 1 - alpha()}, {'b', alpha()}}, "ab", "ba"); }

// lengths (1 - 2 alpha, alpha, alpha), permutation (132).
inline Iet three_iet() {
  return iet::make_iet({{'a', 1 - 2 * alpha()}, {'b', alpha()}, {'c', alpha()}}, "abc", "cab");
}

inline Iet half_identity() {
  return iet::make_iet({{'a', QuadraticNumber(iet::Rational(1, 2))}, {'b', QuadraticNumber(iet::Rational(1, 2))}},
                       "ab", "ab");
}

inline CodingMorphism code_uvw(const char* u, const char* v, const char* w) {
  return CodingMorphism({{'u', u}, {'v', v}, {'w', w}});
}

// The three degree-2 codes and the degree-3 code of the golden rotation.
inline std::vector<CodingMorphism> maximal_codes() {
  return {code_uvw("aa", "ab", "ba"), code_uvw("a", "baab", "bab"), code_uvw("aa", "aba", "b"),
          CodingMorphism({{'u', "a"}, {'v', "baab"}, {'w', "babaabab"}, {'x', "babaabaabab"}})};
}

// Exact points p + q alpha in [0,1[ with small integers, deterministic.
inline std::vector<QuadraticNumber> sample_points(std::size_t n, unsigned seed = 7) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> num(0, 997);
  std::uniform_int_distribution<long> k(-40, 40);
  std::vector<QuadraticNumber> out;
  const QuadraticNumber a = alpha();
  while (out.size() < n) {
    QuadraticNumber z = QuadraticNumber(iet::Rational(num(rng), 997)) + QuadraticNumber(k(rng)) * a;
    // reduce mod 1 exactly
    while (z.sign() < 0) z = z + 1;
    while (z >= QuadraticNumber(1)) z = z - 1;
    out.push_back(z);
  }
  return out;
}

}  // namespace fixtures
