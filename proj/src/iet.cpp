#include "iet/iet.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "iet/errors.hpp"

namespace iet {

namespace {

constexpr std::string_view kFreshLetters = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";

std::string describe(char a) { return std::string("'") + a + "'"; }

}  // namespace

std::string_view fresh_letters() { return kFreshLetters; }

std::optional<SemiInterval> intersect(const SemiInterval& a, const SemiInterval& b) {
  const QuadraticNumber& left = std::max(a.left, b.left);
  const QuadraticNumber& right = std::min(a.right, b.right);
  if (left < right) return SemiInterval{left, right};
  return std::nullopt;
}

Iet::Iet(std::string order1, std::string order2, std::vector<QuadraticNumber> lengths, std::vector<std::string> labels)
    : order1_(std::move(order1)), order2_(std::move(order2)), labels_(std::move(labels)), lambda_(std::move(lengths)) {
  if (order1_.empty()) throw AlphabetMismatch("empty alphabet");
  {
    std::string sorted1 = order1_, sorted2 = order2_;
    std::sort(sorted1.begin(), sorted1.end());
    std::sort(sorted2.begin(), sorted2.end());
    if (std::adjacent_find(sorted1.begin(), sorted1.end()) != sorted1.end())
      throw AlphabetMismatch("duplicate letter in order1 \"" + order1_ + "\"");
    if (sorted1 != sorted2)
      throw AlphabetMismatch("order2 \"" + order2_ + "\" is not a permutation of order1 \"" + order1_ + "\"");
  }
  const std::size_t s = order1_.size();
  if (lambda_.size() != s)
    throw AlphabetMismatch(std::to_string(lambda_.size()) + " lengths for " + std::to_string(s) + " letters");
  if (labels_.empty()) {
    for (char a : order1_) labels_.emplace_back(1, a);
  } else if (labels_.size() != s) {
    throw AlphabetMismatch("label count does not match alphabet size");
  } else {
    std::set<std::string> unique(labels_.begin(), labels_.end());
    if (unique.size() != s) throw AlphabetMismatch("duplicate letter label");
  }

  QuadraticNumber sum;
  mu_.resize(s);
  gamma_.resize(s);
  for (std::size_t i = 0; i < s; ++i) {
    if (lambda_[i].sign() <= 0)
      throw NonPositiveLength("length of " + describe(order1_[i]) + " is " + lambda_[i].str());
    gamma_[i] = sum;
    sum += lambda_[i];
    mu_[i] = sum;
  }
  if (sum != QuadraticNumber(1)) throw LengthSumError("lengths sum to " + sum.str() + ", expected 1");
  field_ = 0;
  for (const auto& l : lambda_)
    if (!l.is_rational()) field_ = l.field();

  nu_.resize(s);
  delta_.resize(s);
  QuadraticNumber acc;
  for (char a : order2_) {
    const std::size_t i = index(a);
    delta_[i] = acc;
    acc += lambda_[i];
    nu_[i] = acc;
  }
  alpha_.resize(s);
  for (std::size_t i = 0; i < s; ++i) alpha_[i] = nu_[i] - mu_[i];
}

bool Iet::has_letter(char a) const { return order1_.find(a) != std::string::npos; }

std::size_t Iet::index(char a) const {
  const std::size_t i = order1_.find(a);
  if (i == std::string::npos) throw AlphabetMismatch("letter " + describe(a) + " not in alphabet \"" + order1_ + "\"");
  return i;
}

char Iet::letter_of_label(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return order1_[i];
  throw AlphabetMismatch("no letter labelled \"" + std::string(label) + "\"");
}

char Iet::letter_at(const QuadraticNumber& z) const {
  if (z.sign() < 0 || z >= QuadraticNumber(1)) throw OutOfDomain("point " + z.str() + " is outside [0,1[");
  const auto it = std::upper_bound(mu_.begin(), mu_.end(), z);
  return order1_[static_cast<std::size_t>(it - mu_.begin())];
}

QuadraticNumber Iet::apply(const QuadraticNumber& z) const { return z + translation(letter_at(z)); }

Iet make_iet(const std::vector<std::pair<char, QuadraticNumber>>& lengths, std::string order1, std::string order2) {
  std::vector<QuadraticNumber> by_order1;
  for (char a : order1) {
    auto it = std::find_if(lengths.begin(), lengths.end(), [a](const auto& p) { return p.first == a; });
    if (it == lengths.end()) throw AlphabetMismatch(std::string("no length given for letter '") + a + "'");
    by_order1.push_back(it->second);
  }
  if (lengths.size() != order1.size()) throw AlphabetMismatch("lengths given for letters outside order1");
  return Iet(std::move(order1), std::move(order2), std::move(by_order1));
}

Iet inverse(const Iet& t) {
  std::vector<QuadraticNumber> lengths;
  std::vector<std::string> labels;
  for (char a : t.order2()) {
    lengths.push_back(t.length(a));
    labels.push_back(t.label(a));
  }
  return Iet(t.order2(), t.order1(), std::move(lengths), std::move(labels));
}

std::optional<SemiInterval> extend_right(const Iet& t, const SemiInterval& ending, char a) {
  auto meet = intersect(ending, t.interval(a));
  if (!meet) return std::nullopt;
  const QuadraticNumber& shift = t.translation(a);
  return SemiInterval{meet->left + shift, meet->right + shift};
}

QuadraticNumber word_translation(const Iet& t, std::string_view w) {
  QuadraticNumber sum;
  for (char a : w) sum += t.translation(a);
  return sum;
}

std::optional<SemiInterval> ending_interval(const Iet& t, std::string_view w) {
  SemiInterval j{0, 1};
  for (char a : w) {
    auto next = extend_right(t, j, a);
    if (!next) return std::nullopt;
    j = std::move(*next);
  }
  return j;
}

std::optional<SemiInterval> starting_interval(const Iet& t, std::string_view w) {
  auto j = ending_interval(t, w);
  if (!j) return std::nullopt;
  const QuadraticNumber shift = word_translation(t, w);
  return SemiInterval{j->left - shift, j->right - shift};
}

Iet power(const Iet& t, std::size_t n) {
  if (n == 0) throw std::invalid_argument("power exponent must be positive");
  struct Piece {
    std::string label;
    SemiInterval start, end;
  };
  // Breadth-first refinement: (label, J_w, alpha_w).
  struct Node {
    std::string label;
    SemiInterval end;
    QuadraticNumber shift;
  };
  std::vector<Node> frontier{{"", SemiInterval{0, 1}, QuadraticNumber()}};
  for (std::size_t step = 0; step < n; ++step) {
    std::vector<Node> next;
    for (const Node& node : frontier) {
      for (char a : t.order1()) {
        if (auto j = extend_right(t, node.end, a)) next.push_back({node.label + t.label(a), *j, node.shift + t.translation(a)});
      }
    }
    frontier = std::move(next);
  }
  if (frontier.size() > fresh_letters().size())
    throw Error("power has " + std::to_string(frontier.size()) + " intervals; at most " +
                std::to_string(fresh_letters().size()) + " letters are available");

  std::vector<Piece> pieces;
  for (Node& node : frontier)
    pieces.push_back({std::move(node.label), {node.end.left - node.shift, node.end.right - node.shift}, node.end});
  std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) { return a.start.left < b.start.left; });

  std::string order1(fresh_letters().substr(0, pieces.size()));
  std::vector<std::size_t> by_image(pieces.size());
  std::iota(by_image.begin(), by_image.end(), 0);
  std::sort(by_image.begin(), by_image.end(),
            [&](std::size_t a, std::size_t b) { return pieces[a].end.left < pieces[b].end.left; });
  std::string order2;
  for (std::size_t i : by_image) order2 += order1[i];

  std::vector<QuadraticNumber> lengths;
  std::vector<std::string> labels;
  for (const Piece& p : pieces) {
    lengths.push_back(p.start.length());
    labels.push_back(p.label);
  }
  return Iet(std::move(order1), std::move(order2), std::move(lengths), std::move(labels));
}

std::vector<QuadraticNumber> separation_points(const Iet& t) {
  std::vector<QuadraticNumber> points{QuadraticNumber()};
  for (std::size_t i = 0; i + 1 < t.size(); ++i) points.push_back(t.mu(t.order1()[i]));
  return points;
}

RegularityReport check_regular(const Iet& t, std::size_t depth) {
  if (depth == 0) throw std::invalid_argument("regularity depth must be positive");
  RegularityReport report;
  report.depth = depth;
  auto seps = separation_points(t);
  seps.erase(seps.begin());
  std::vector<QuadraticNumber> current = seps;
  for (std::size_t k = 1; k <= depth; ++k) {
    for (std::size_t i = 0; i < current.size(); ++i) {
      current[i] = t.apply(current[i]);
      for (std::size_t j = 0; j < seps.size(); ++j) {
        if (current[i] == seps[j]) {
          report.status = RegularityReport::Status::ConnectionFound;
          report.witness = Connection{i + 1, j + 1, k};
          return report;
        }
      }
    }
  }
  return report;
}

bool perm_indecomposable(std::string_view order1, std::string_view order2) {
  if (order1.size() != order2.size()) throw AlphabetMismatch("orders of different sizes");
  std::string a, b;
  for (std::size_t k = 1; k < order1.size(); ++k) {
    a.assign(order1.substr(0, k));
    b.assign(order2.substr(0, k));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a == b) return false;
  }
  return true;
}

}  // namespace iet
