#pragma once

/**
 * @file extension.hpp
 * @brief Extension graphs, tree sets and planar tree sets.
 *
 * Every verdict is relative to a truncation: a report states the longest
 * word length it examined. Words whose extension graph is empty inside the
 * truncation (not biextendable there) are skipped.
 */

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "iet/language.hpp"

namespace iet {

struct ExtensionGraph {
  Word word;
  std::string left;   // L(w), alphabet order
  std::string right;  // R(w), alphabet order
  std::vector<std::pair<char, char>> edges;  // (a, b) with a w b in S, alphabet order
};

/// G(w) from membership queries. Throws TruncationTooShort unless |w| + 2 <= max_len.
ExtensionGraph extension_graph(const FactorialLanguage& s, std::string_view w);

/// Connected and |E| = |L| + |R| - 1. Throws EmptyGraph for a graph without edges.
bool is_tree(const ExtensionGraph& g);

/// For all edges (a,b), (c,d): a strictly before c in left_order implies
/// b not after d in right_order.
bool is_planar_compatible(const ExtensionGraph& g, std::string_view left_order, std::string_view right_order);

enum class Verdict { TreeSet, PlanarTreeSet, Fails };
enum class FailureReason { NotConnected, HasCycle, OrderViolation, ConditionIII };

struct Counterexample {
  Word word;
  FailureReason reason;
};

struct TreeCheckReport {
  Verdict verdict = Verdict::TreeSet;
  std::size_t max_len_checked = 0;
  std::optional<Counterexample> counterexample;
};

struct OrderPair {
  std::string left;
  std::string right;
  friend bool operator==(const OrderPair&, const OrderPair&) = default;
};

/// Checks G(w) for every w in S with |w| <= max_len, in shortlex order, and
/// reports the first failure. Without orders only the tree property is
/// checked. Words are examined in parallel. Requires max_len + 2 <= S.max_len.
TreeCheckReport check_planar_tree_set(const FactorialLanguage& s, const std::optional<OrderPair>& orders,
                                      std::size_t max_len);
/// Single-threaded reference for check_planar_tree_set.
TreeCheckReport check_planar_tree_set_serial(const FactorialLanguage& s, const std::optional<OrderPair>& orders,
                                             std::size_t max_len);

/// All |A|!^2 order pairs under which S is a planar tree set up to max_len.
/// Refuses alphabets larger than 5.
std::vector<OrderPair> planar_order_pairs(const FactorialLanguage& s, std::size_t max_len);

struct ConditionResult {
  bool holds = true;
  std::optional<Word> witness;
};

/// The three conditions characterising regular interval exchange sets, for
/// orders order1 (on right extensions) and order2 (on left extensions).
struct FzReport {
  ConditionResult consecutive;   // (i)  L(w) is an order2-interval, R(w) an order1-interval
  ConditionResult noncrossing;   // (ii) a <2 c implies b <=1 d on E(w)
  ConditionResult single_meet;   // (iii) R(aw) and R(bw) meet in one letter for order2-consecutive a, b
  bool derivation_holds = true;  // (ii) and (iii) imply (i) on the range tested
  std::size_t max_len_checked = 0;
};

/// Requires max_len + 2 <= S.max_len.
FzReport fz_conditions(const FactorialLanguage& s, std::string_view order1, std::string_view order2,
                       std::size_t max_len);

}  // namespace iet
