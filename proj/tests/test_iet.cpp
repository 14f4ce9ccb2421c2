#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "iet/errors.hpp"

using namespace iet;
using fixtures::alpha;

namespace {

QuadraticNumber mod1(QuadraticNumber z) {
  while (z.sign() < 0) z = z + 1;
  while (z >= QuadraticNumber(1)) z = z - 1;
  return z;
}

QuadraticNumber iterate(const Iet& t, QuadraticNumber z, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) z = t.apply(z);
  return z;
}

bool lex_less(std::string_view u, std::string_view v, std::string_view order) {
  return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end(),
                                      [&](char x, char y) { return order.find(x) < order.find(y); });
}

}  // namespace

TEST_CASE("construction of the golden rotation") {
  const Iet r = fixtures::golden();
  CHECK(r.interval('a') == SemiInterval{0, 1 - alpha()});
  CHECK(r.interval('b') == SemiInterval{1 - alpha(), 1});
  CHECK(r.translation('a') == alpha());
  CHECK(r.translation('b') == alpha() - 1);
  CHECK(r.field() == 5);
}

TEST_CASE("construction errors") {
  const QuadraticNumber a = alpha();
  CHECK_THROWS_AS(make_iet({{'a', a}, {'b', a}}, "ab", "ba"), LengthSumError);
  CHECK_THROWS_AS(make_iet({{'a', QuadraticNumber(2)}, {'b', QuadraticNumber(-1)}}, "ab", "ba"), NonPositiveLength);
  CHECK_THROWS_AS(make_iet({{'a', 1 - a}, {'b', a}}, "ab", "ca"), AlphabetMismatch);
  CHECK_THROWS_AS(make_iet({{'a', 1 - a}, {'b', a}}, "ab", "b"), AlphabetMismatch);
}

TEST_CASE("identity exchange") {
  const Iet t = fixtures::half_identity();
  CHECK(t.translation('a').is_zero());
  CHECK(t.translation('b').is_zero());
  const auto rep = check_regular(t, 1);
  REQUIRE(rep.witness);
  CHECK(rep.status == RegularityReport::Status::ConnectionFound);
  CHECK(rep.witness->from == 1);
  CHECK(rep.witness->to == 1);
  CHECK(rep.witness->steps == 1);
  CHECK(separation_points(t) == std::vector<QuadraticNumber>{0, QuadraticNumber(Rational(1, 2))});
  CHECK(inverse(t) == t);
}

TEST_CASE("three-interval exchange with a connection") {
  const Iet t = fixtures::three_iet();
  CHECK(t.mu('a') == 1 - 2 * alpha());
  CHECK(t.mu('b') == 1 - alpha());
  CHECK(separation_points(t) == std::vector<QuadraticNumber>{0, 1 - 2 * alpha(), 1 - alpha()});
  const auto rep = check_regular(t, 1);
  CHECK(rep.status == RegularityReport::Status::ConnectionFound);
  REQUIRE(rep.witness);
  CHECK(rep.witness->from == 1);
  CHECK(rep.witness->to == 2);
  CHECK(rep.witness->steps == 1);
  CHECK(t.apply(t.mu('a')) == t.mu('b'));
  CHECK(inverse(inverse(t)) == t);
}

TEST_CASE("golden rotation is regular to depth 64") {
  const auto rep = check_regular(fixtures::golden(), 64);
  CHECK(rep.regular());
  CHECK(rep.depth == 64);
  CHECK_FALSE(rep.witness);
  CHECK(separation_points(fixtures::golden()) == std::vector<QuadraticNumber>{0, 1 - alpha()});
}

TEST_CASE("application") {
  const Iet r = fixtures::golden();
  CHECK(r.apply(0) == alpha());
  CHECK(r.apply(1 - alpha()) == QuadraticNumber(0));
  CHECK(r.apply(2 * alpha()) == 3 * alpha() - 1);
  CHECK_THROWS_AS(r.apply(1), OutOfDomain);
  CHECK_THROWS_AS(r.apply(-alpha()), OutOfDomain);
  for (const auto& z : fixtures::sample_points(200)) CHECK(r.apply(z) == mod1(z + alpha()));
}

TEST_CASE("inverse") {
  const Iet r = fixtures::golden();
  const Iet ri = inverse(r);
  for (const auto& z : fixtures::sample_points(100)) {
    CHECK(ri.apply(r.apply(z)) == z);
    CHECK(ri.apply(z) == mod1(z + (1 - alpha())));
  }
  const Iet t3 = fixtures::three_iet();
  for (const auto& z : fixtures::sample_points(100, 3)) CHECK(inverse(t3).apply(t3.apply(z)) == z);
}

TEST_CASE("powers") {
  const Iet r = fixtures::golden();
  const Iet r1 = power(r, 1);
  const Iet r2 = power(r, 2);
  const Iet r3 = power(r, 3);
  CHECK(r2.size() == 3);
  CHECK(r3.size() == 4);
  std::vector<std::string> labels2 = r2.labels();
  std::sort(labels2.begin(), labels2.end());
  CHECK(labels2 == std::vector<std::string>{"aa", "ab", "ba"});
  const auto points = fixtures::sample_points(1000);
  for (const auto& z : points) {
    CHECK(r1.apply(z) == r.apply(z));
    CHECK(r2.apply(z) == mod1(z + 2 * alpha()));
    CHECK(r3.apply(z) == iterate(r, z, 3));
    CHECK(r3.apply(z) == mod1(z + 3 * alpha()));
  }
  const Iet t3 = fixtures::three_iet();
  for (const auto& z : fixtures::sample_points(200, 5)) CHECK(power(t3, 4).apply(z) == iterate(t3, z, 4));
}

TEST_CASE("power of a regular transformation has n(s-1)+1 intervals") {
  const Iet r = fixtures::golden();
  for (std::size_t n = 1; n <= 8; ++n) CHECK(power(r, n).size() == n + 1);
}

TEST_CASE("indecomposable permutations") {
  CHECK(perm_indecomposable("abc", "bca"));
  CHECK(perm_indecomposable("abc", "cba"));
  CHECK_FALSE(perm_indecomposable("ab", "ab"));
  CHECK(perm_indecomposable("ab", "ba"));
  CHECK_FALSE(perm_indecomposable("abc", "bac"));
}

TEST_CASE("intervals of words") {
  const Iet r = fixtures::golden();
  CHECK(starting_interval(r, "aa") == SemiInterval{0, 1 - 2 * alpha()});
  CHECK(ending_interval(r, "ab") == SemiInterval{0, alpha()});
  CHECK_FALSE(starting_interval(r, "bb"));
  CHECK(starting_interval(r, "") == SemiInterval{0, 1});
  // orbit scan: bb never occurs along 10^4 steps from several points
  for (const auto& z : fixtures::sample_points(5)) {
    std::string coding;
    QuadraticNumber p = z;
    for (int i = 0; i < 10000; ++i) {
      coding += r.letter_at(p);
      p = r.apply(p);
    }
    CHECK(coding.find("bb") == std::string::npos);
    CHECK(coding.find("aaa") == std::string::npos);
  }
}

TEST_CASE("partitions tile the unit interval") {
  for (const Iet& t : {fixtures::golden(), fixtures::three_iet(), power(fixtures::golden(), 5)}) {
    QuadraticNumber left = 0;
    for (char a : t.order1()) {
      CHECK(t.gamma(a) == left);
      left = t.mu(a);
    }
    CHECK(left == QuadraticNumber(1));
    left = 0;
    for (char a : t.order2()) {
      CHECK(t.delta(a) == left);
      left = t.nu(a);
    }
    CHECK(left == QuadraticNumber(1));
  }
}

TEST_CASE("ending interval is the translated starting interval") {
  const Iet r = fixtures::golden();
  std::vector<Word> frontier{""};
  for (int n = 1; n <= 8; ++n) {
    std::vector<Word> next;
    for (const Word& w : frontier)
      for (char a : std::string("ab"))
        if (auto i = starting_interval(r, w + a)) {
          const auto j = ending_interval(r, w + a);
          REQUIRE(j);
          const QuadraticNumber shift = word_translation(r, w + a);
          CHECK(j->left == i->left + shift);
          CHECK(j->right == i->right + shift);
          next.push_back(w + a);
        } else {
          CHECK_FALSE(ending_interval(r, w + a));
        }
    frontier = std::move(next);
  }
}

TEST_CASE("interval order matches word order") {
  // I_u < I_v iff u <1 v and u is not a prefix of v; dually for J with
  // reversed words and <2.
  for (const Iet& t : {fixtures::golden(), fixtures::three_iet()}) {
    std::vector<Word> words;
    std::vector<Word> frontier{""};
    for (int n = 1; n <= 6; ++n) {
      std::vector<Word> next;
      for (const Word& w : frontier)
        for (char a : t.order1())
          if (starting_interval(t, w + a)) next.push_back(w + a);
      words.insert(words.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
    for (const Word& u : words)
      for (const Word& v : words) {
        const auto iu = *starting_interval(t, u), iv = *starting_interval(t, v);
        const bool before = iu.right <= iv.left;
        CHECK(before == (lex_less(u, v, t.order1()) && !v.starts_with(u)));
        const auto ju = *ending_interval(t, u), jv = *ending_interval(t, v);
        const Word ru(u.rbegin(), u.rend()), rv(v.rbegin(), v.rend());
        CHECK((ju.right <= jv.left) == (lex_less(ru, rv, t.order2()) && !v.ends_with(u)));
      }
  }
}
