#include "iet/extension.hpp"

#include <algorithm>
#include <numeric>

#include "iet/errors.hpp"

namespace iet {

namespace {

std::size_t position(std::string_view order, char a) {
  const std::size_t p = order.find(a);
  if (p == std::string_view::npos) throw AlphabetMismatch(std::string("letter '") + a + "' missing from an order");
  return p;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

std::optional<FailureReason> tree_failure(const ExtensionGraph& g) {
  const std::size_t nl = g.left.size();
  DisjointSets sets(nl + g.right.size());
  for (const auto& [a, b] : g.edges) sets.unite(g.left.find(a), nl + g.right.find(b));
  const std::size_t root = sets.find(0);
  for (std::size_t v = 1; v < nl + g.right.size(); ++v)
    if (sets.find(v) != root) return FailureReason::NotConnected;
  if (g.edges.size() + 1 != nl + g.right.size()) return FailureReason::HasCycle;
  return std::nullopt;
}

void require_room(const FactorialLanguage& s, std::size_t max_len) {
  if (max_len + 2 > s.max_len())
    throw TruncationTooShort("checking words up to length " + std::to_string(max_len) + " needs truncation >= " +
                             std::to_string(max_len + 2));
}

std::vector<Word> words_up_to(const FactorialLanguage& s, std::size_t max_len) {
  std::vector<Word> out;
  for (std::size_t n = 0; n <= max_len; ++n) {
    const auto& level = s.words_of_length(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::optional<FailureReason> word_failure(const FactorialLanguage& s, const Word& w,
                                          const std::optional<OrderPair>& orders) {
  const ExtensionGraph g = extension_graph(s, w);
  if (g.edges.empty()) return std::nullopt;  // not biextendable inside the truncation
  if (auto reason = tree_failure(g)) return reason;
  if (orders && !is_planar_compatible(g, orders->left, orders->right)) return FailureReason::OrderViolation;
  return std::nullopt;
}

TreeCheckReport make_report(const std::vector<Word>& words, const std::vector<std::optional<FailureReason>>& failures,
                            const std::optional<OrderPair>& orders, std::size_t max_len) {
  TreeCheckReport report;
  report.max_len_checked = max_len;
  report.verdict = orders ? Verdict::PlanarTreeSet : Verdict::TreeSet;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (failures[i]) {
      report.verdict = Verdict::Fails;
      report.counterexample = Counterexample{words[i], *failures[i]};
      break;
    }
  }
  return report;
}

}  // namespace

ExtensionGraph extension_graph(const FactorialLanguage& s, std::string_view w) {
  if (w.size() + 2 > s.max_len())
    throw TruncationTooShort("extension graph of a word of length " + std::to_string(w.size()) +
                             " needs truncation >= " + std::to_string(w.size() + 2));
  ExtensionGraph g;
  g.word = Word(w);
  g.left = s.left_extensions(w);
  g.right = s.right_extensions(w);
  Word probe = " " + g.word + " ";
  for (char a : g.left) {
    probe.front() = a;
    for (char b : g.right) {
      probe.back() = b;
      if (s.contains(probe)) g.edges.emplace_back(a, b);
    }
  }
  return g;
}

bool is_tree(const ExtensionGraph& g) {
  if (g.edges.empty()) throw EmptyGraph("extension graph of \"" + g.word + "\" has no edges");
  return !tree_failure(g).has_value();
}

bool is_planar_compatible(const ExtensionGraph& g, std::string_view left_order, std::string_view right_order) {
  for (const auto& [a, b] : g.edges)
    for (const auto& [c, d] : g.edges)
      if (position(left_order, a) < position(left_order, c) && position(right_order, b) > position(right_order, d))
        return false;
  return true;
}

TreeCheckReport check_planar_tree_set(const FactorialLanguage& s, const std::optional<OrderPair>& orders,
                                      std::size_t max_len) {
  require_room(s, max_len);
  const std::vector<Word> words = words_up_to(s, max_len);
  std::vector<std::optional<FailureReason>> failures(words.size());
  const auto count = static_cast<std::ptrdiff_t>(words.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    failures[k] = word_failure(s, words[k], orders);
  }
  return make_report(words, failures, orders, max_len);
}

TreeCheckReport check_planar_tree_set_serial(const FactorialLanguage& s, const std::optional<OrderPair>& orders,
                                             std::size_t max_len) {
  require_room(s, max_len);
  const std::vector<Word> words = words_up_to(s, max_len);
  std::vector<std::optional<FailureReason>> failures(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    failures[i] = word_failure(s, words[i], orders);
    if (failures[i]) break;
  }
  return make_report(words, failures, orders, max_len);
}

std::vector<OrderPair> planar_order_pairs(const FactorialLanguage& s, std::size_t max_len) {
  require_room(s, max_len);
  std::string letters = s.alphabet();
  if (letters.size() > 5) throw std::invalid_argument("order search is limited to alphabets of at most 5 letters");
  std::sort(letters.begin(), letters.end());

  std::vector<ExtensionGraph> graphs;
  for (const Word& w : words_up_to(s, max_len)) {
    ExtensionGraph g = extension_graph(s, w);
    if (g.edges.empty()) continue;
    if (tree_failure(g)) return {};
    graphs.push_back(std::move(g));
  }

  std::vector<std::string> perms;
  std::string p = letters;
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::vector<OrderPair> out;
  for (const auto& left : perms)
    for (const auto& right : perms) {
      const bool ok = std::all_of(graphs.begin(), graphs.end(),
                                  [&](const ExtensionGraph& g) { return is_planar_compatible(g, left, right); });
      if (ok) out.push_back({left, right});
    }
  return out;
}

namespace {

bool consecutive_in(std::string_view subset, std::string_view order) {
  if (subset.empty()) return true;
  std::size_t lo = order.size(), hi = 0;
  for (char a : subset) {
    const std::size_t p = position(order, a);
    lo = std::min(lo, p);
    hi = std::max(hi, p);
  }
  return hi - lo + 1 == subset.size();
}

void record(ConditionResult& c, const Word& w) {
  if (c.holds) {
    c.holds = false;
    c.witness = w;
  }
}

}  // namespace

FzReport fz_conditions(const FactorialLanguage& s, std::string_view order1, std::string_view order2,
                       std::size_t max_len) {
  require_room(s, max_len);
  FzReport report;
  report.max_len_checked = max_len;
  for (const Word& w : words_up_to(s, max_len)) {
    const ExtensionGraph g = extension_graph(s, w);
    if (g.edges.empty()) continue;

    if (!consecutive_in(g.left, order2) || !consecutive_in(g.right, order1)) record(report.consecutive, w);
    if (!is_planar_compatible(g, order2, order1)) record(report.noncrossing, w);

    std::string left = g.left;
    std::sort(left.begin(), left.end(), [&](char a, char b) { return position(order2, a) < position(order2, b); });
    for (std::size_t i = 0; i + 1 < left.size(); ++i) {
      const std::string ra = s.right_extensions(left[i] + w);
      const std::string rb = s.right_extensions(left[i + 1] + w);
      const auto common = std::count_if(ra.begin(), ra.end(), [&](char c) { return rb.find(c) != std::string::npos; });
      if (common != 1) {
        record(report.single_meet, w);
        break;
      }
    }
  }
  report.derivation_holds = !(report.noncrossing.holds && report.single_meet.holds) || report.consecutive.holds;
  return report;
}

}  // namespace iet
