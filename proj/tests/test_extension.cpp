#include <algorithm>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "iet/errors.hpp"
#include "iet/extension.hpp"

using namespace iet;

namespace {

using Edges = std::set<std::pair<char, char>>;

Edges edge_set(const ExtensionGraph& g) { return {g.edges.begin(), g.edges.end()}; }

FactorialLanguage tribonacci(std::size_t n) { return substitution_language(Substitution::tribonacci(), 'a', n); }

std::vector<std::string> permutations(std::string s) {
  std::sort(s.begin(), s.end());
  std::vector<std::string> out;
  do out.push_back(s);
  while (std::next_permutation(s.begin(), s.end()));
  return out;
}

}  // namespace

TEST_CASE("Tribonacci extension graphs") {
  const FactorialLanguage s = tribonacci(7);
  CHECK(edge_set(extension_graph(s, "")) == Edges{{'a', 'a'}, {'a', 'b'}, {'a', 'c'}, {'b', 'a'}, {'c', 'a'}});
  CHECK(edge_set(extension_graph(s, "a")) == Edges{{'b', 'a'}, {'b', 'b'}, {'b', 'c'}, {'c', 'b'}, {'a', 'b'}});
  CHECK(edge_set(extension_graph(s, "aba")) == Edges{{'c', 'a'}, {'c', 'b'}, {'c', 'c'}, {'a', 'c'}, {'b', 'c'}});
  CHECK(is_tree(extension_graph(s, "")));
  CHECK_THROWS_AS(extension_graph(s, "abacab"), TruncationTooShort);
}

TEST_CASE("Fibonacci graph of a read from the factor list") {
  const FactorialLanguage s = language_of_iet(fixtures::golden(), 3);
  std::set<Word> three(s.words_of_length(3).begin(), s.words_of_length(3).end());
  CHECK(three == std::set<Word>{"aab", "aba", "baa", "bab"});
  const ExtensionGraph g = extension_graph(s, "a");
  CHECK(g.left == "ab");
  CHECK(g.right == "ab");
  CHECK(edge_set(g) == Edges{{'a', 'b'}, {'b', 'a'}, {'b', 'b'}});
}

TEST_CASE("tree predicate") {
  CHECK(is_tree(ExtensionGraph{"", "a", "b", {{'a', 'b'}}}));
  CHECK_FALSE(is_tree(ExtensionGraph{"", "ab", "ab", {{'a', 'a'}, {'a', 'b'}, {'b', 'a'}, {'b', 'b'}}}));
  CHECK_FALSE(is_tree(ExtensionGraph{"", "ab", "ab", {{'a', 'a'}, {'b', 'b'}}}));
  CHECK_THROWS_AS(is_tree(ExtensionGraph{"w", "a", "b", {}}), EmptyGraph);
}

TEST_CASE("planar compatibility") {
  const FactorialLanguage s = language_of_iet(fixtures::golden(), 4);
  const ExtensionGraph g = extension_graph(s, "");
  CHECK(is_planar_compatible(g, "ba", "ab"));
  CHECK_FALSE(is_planar_compatible(g, "ab", "ab"));
  const ExtensionGraph single{"", "a", "b", {{'a', 'b'}}};
  CHECK(is_planar_compatible(single, "ab", "ba"));
}

TEST_CASE("no order pair makes the three Tribonacci graphs planar") {
  const FactorialLanguage s = tribonacci(7);
  const std::vector<ExtensionGraph> graphs{extension_graph(s, ""), extension_graph(s, "a"), extension_graph(s, "aba")};
  const auto perms = permutations("abc");
  REQUIRE(perms.size() == 6);
  int compatible = 0;
  for (const auto& l : perms)
    for (const auto& r : perms)
      if (std::all_of(graphs.begin(), graphs.end(), [&](const ExtensionGraph& g) { return is_planar_compatible(g, l, r); }))
        ++compatible;
  CHECK(compatible == 0);
}

TEST_CASE("planar tree set classification") {
  const FactorialLanguage fib = language_of_iet(fixtures::golden(), 8);
  const auto rep = check_planar_tree_set(fib, OrderPair{"ba", "ab"}, 6);
  CHECK(rep.verdict == Verdict::PlanarTreeSet);
  CHECK(rep.max_len_checked == 6);
  CHECK_FALSE(rep.counterexample);

  const FactorialLanguage tri = tribonacci(9);
  CHECK(check_planar_tree_set(tri, std::nullopt, 7).verdict == Verdict::TreeSet);
  for (const auto& l : permutations("abc"))
    for (const auto& r : permutations("abc")) {
      const auto t = check_planar_tree_set(tri, OrderPair{l, r}, 7);
      CHECK(t.verdict == Verdict::Fails);
      REQUIRE(t.counterexample);
      CHECK(t.counterexample->reason == FailureReason::OrderViolation);
      const Word w = t.counterexample->word;
      CHECK((w == "" || w == "a" || w == "aba"));
    }
  CHECK(planar_order_pairs(tri, 7).empty());
  CHECK_THROWS_AS(check_planar_tree_set(tri, std::nullopt, 8), TruncationTooShort);
}

TEST_CASE("planar orders of the Fibonacci set") {
  const auto pairs = planar_order_pairs(language_of_iet(fixtures::golden(), 8), 6);
  CHECK(std::find(pairs.begin(), pairs.end(), OrderPair{"ba", "ab"}) != pairs.end());
  for (const auto& p : pairs) {
    // reversing both orders preserves compatibility
    const OrderPair rev{std::string(p.left.rbegin(), p.left.rend()), std::string(p.right.rbegin(), p.right.rend())};
    CHECK(std::find(pairs.begin(), pairs.end(), rev) != pairs.end());
  }
}

TEST_CASE("tree graphs have |L| + |R| - 1 edges") {
  for (const FactorialLanguage& s : {tribonacci(9), language_of_iet(fixtures::golden(), 9),
                                     language_of_iet(fixtures::three_iet(), 9, true)}) {
    for (std::size_t n = 0; n <= 7; ++n)
      for (const Word& w : s.words_of_length(n)) {
        const ExtensionGraph g = extension_graph(s, w);
        if (g.edges.empty() || !is_tree(g)) continue;
        CHECK(g.edges.size() + 1 == g.left.size() + g.right.size());
      }
  }
}

TEST_CASE("exchanges regular to depth are planar tree sets for (<2, <1)") {
  const Iet r = fixtures::golden();
  for (const Iet& t : {r, power(r, 2), power(r, 3), build_tf(r, fixtures::maximal_codes()[1], language_of_iet(r, 8))}) {
    REQUIRE(check_regular(t, 8).regular());
    const auto s = language_of_iet(t, 8);
    CHECK(check_planar_tree_set(s, OrderPair{t.order2(), t.order1()}, 6).verdict == Verdict::PlanarTreeSet);
  }
}

TEST_CASE("the three conditions") {
  const FactorialLanguage fib = language_of_iet(fixtures::golden(), 8);
  const FzReport ok = fz_conditions(fib, "ab", "ba", 6);
  CHECK(ok.consecutive.holds);
  CHECK(ok.noncrossing.holds);
  CHECK(ok.single_meet.holds);
  CHECK(ok.derivation_holds);

  const FactorialLanguage tri = tribonacci(9);
  for (const auto& o1 : permutations("abc"))
    for (const auto& o2 : permutations("abc")) {
      const FzReport rep = fz_conditions(tri, o1, o2, 7);
      CHECK_FALSE((rep.noncrossing.holds && rep.single_meet.holds));
      CHECK(rep.derivation_holds);
    }

  const FactorialLanguage ones = FactorialLanguage::factors_of("a", "aaaaaaaaaa", 6);
  const FzReport trivial = fz_conditions(ones, "a", "a", 4);
  CHECK(trivial.consecutive.holds);
  CHECK(trivial.noncrossing.holds);
  CHECK(trivial.single_meet.holds);
}

TEST_CASE("decoding the Tribonacci set by its words of length two") {
  const FactorialLanguage s = tribonacci(14);
  const auto& two = s.words_of_length(2);
  std::map<char, Word> images;
  char b = 'p';
  for (const Word& x : two) images.emplace(b++, x);
  const CodingMorphism f(images);
  const FactorialLanguage w = decode_language(s, f, 7);
  CHECK(w.alphabet().size() == 5);
  CHECK(check_planar_tree_set(w, std::nullopt, 5).verdict == Verdict::TreeSet);
  CHECK(planar_order_pairs(w.truncated(5), 3).empty());
}
