#include "iet/skew.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>
#include <tuple>

#include "iet/errors.hpp"

namespace iet {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Cycles as lists of 1-based points, validated for syntax only.
std::vector<std::vector<std::size_t>> parse_cycles(std::string_view text) {
  std::vector<std::vector<std::size_t>> cycles;
  text = trim(text);
  if (text.empty()) throw ParseError("empty permutation; write () for the identity");
  std::size_t pos = 0;
  auto fail = [&](std::string_view why) {
    throw ParseError("bad cycle notation \"" + std::string(text) + "\": " + std::string(why));
  };
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] != '(') fail("expected (");
    const std::size_t close = text.find(')', pos);
    if (close == std::string_view::npos) fail("missing )");
    std::vector<std::size_t> cycle;
    std::string_view body = text.substr(pos + 1, close - pos - 1);
    std::size_t i = 0;
    while (i < body.size()) {
      if (std::isspace(static_cast<unsigned char>(body[i])) || body[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(body[i]))) fail("points must be positive integers");
      std::size_t value = 0;
      while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) {
        value = value * 10 + static_cast<std::size_t>(body[i] - '0');
        if (value > 1000000) fail("point too large");
        ++i;
      }
      if (value == 0) fail("points are numbered from 1");
      cycle.push_back(value);
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    pos = close + 1;
  }
  return cycles;
}

std::size_t largest_point(const std::vector<std::vector<std::size_t>>& cycles) {
  std::size_t m = 1;
  for (const auto& c : cycles)
    for (std::size_t p : c) m = std::max(m, p);
  return m;
}

Permutation from_cycles(const std::vector<std::vector<std::size_t>>& cycles, std::size_t degree) {
  std::vector<std::size_t> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = i + 1;
  std::set<std::size_t> used;
  for (const auto& c : cycles)
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] > degree) throw ParseError("point " + std::to_string(c[k]) + " exceeds degree " + std::to_string(degree));
      if (!used.insert(c[k]).second) throw ParseError("cycles must be disjoint");
      images[c[k] - 1] = c[(k + 1) % c.size()];
    }
  return Permutation::from_images(std::move(images));
}

}  // namespace

// ---------------------------------------------------------------------------
// Permutation

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::size_t> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = i + 1;
  return from_images(std::move(images));
}

Permutation Permutation::parse(std::string_view cycles, std::size_t degree) {
  return from_cycles(parse_cycles(cycles), degree);
}

Permutation Permutation::from_images(std::vector<std::size_t> images) {
  if (images.empty()) throw ParseError("permutation of an empty set");
  std::vector<bool> hit(images.size(), false);
  for (std::size_t q : images) {
    if (q == 0 || q > images.size() || hit[q - 1]) throw ParseError("not a bijection");
    hit[q - 1] = true;
  }
  Permutation p;
  for (std::size_t q : images) p.images_.push_back(q - 1);
  return p;
}

std::size_t Permutation::act(std::size_t q) const {
  if (q == 0 || q > images_.size()) throw OutOfDomain("point " + std::to_string(q) + " outside {1.." + std::to_string(images_.size()) + "}");
  return images_[q - 1] + 1;
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.degree() != degree()) throw AlphabetMismatch("composing permutations of different degrees");
  Permutation p;
  for (std::size_t x : images_) p.images_.push_back(next.images_[x]);
  return p;
}

std::string Permutation::str() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    out += '(';
    for (std::size_t x = start; !seen[x]; x = images_[x]) {
      if (x != start) out += ' ';
      out += std::to_string(x + 1);
      seen[x] = true;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

// ---------------------------------------------------------------------------
// PermMorphism

PermMorphism::PermMorphism(std::map<char, Permutation> assignments) : assignments_(std::move(assignments)) {
  if (assignments_.empty()) throw ParseError("no permutations assigned");
  degree_ = assignments_.begin()->second.degree();
  for (const auto& [a, p] : assignments_)
    if (p.degree() != degree_) throw ParseError(std::string("permutation for '") + a + "' has a different degree");
}

PermMorphism PermMorphism::parse(std::string_view text, std::size_t degree) {
  std::vector<std::pair<char, std::vector<std::vector<std::size_t>>>> entries;
  std::size_t inferred = 1;
  while (!text.empty()) {
    const std::size_t semi = text.find(';');
    std::string_view item = trim(text.substr(0, semi));
    text = semi == std::string_view::npos ? std::string_view() : text.substr(semi + 1);
    if (item.empty()) continue;
    const std::size_t colon = item.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected letter:cycles in \"" + std::string(item) + "\"");
    const std::string_view letter = trim(item.substr(0, colon));
    if (letter.size() != 1) throw ParseError("letters must be single characters");
    auto cycles = parse_cycles(item.substr(colon + 1));
    inferred = std::max(inferred, largest_point(cycles));
    entries.emplace_back(letter.front(), std::move(cycles));
  }
  const std::size_t d = degree == 0 ? inferred : degree;
  std::map<char, Permutation> assignments;
  for (const auto& [a, cycles] : entries)
    if (!assignments.emplace(a, from_cycles(cycles, d)).second)
      throw ParseError(std::string("letter '") + a + "' assigned twice");
  return PermMorphism(std::move(assignments));
}

const Permutation& PermMorphism::of(char a) const {
  auto it = assignments_.find(a);
  if (it == assignments_.end()) throw AlphabetMismatch(std::string("no permutation for letter '") + a + "'");
  return it->second;
}

Permutation PermMorphism::of_word(std::string_view w) const {
  Permutation p = Permutation::identity(degree_);
  for (char a : w) p = p.then(of(a));
  return p;
}

bool PermMorphism::is_transitive() const {
  std::vector<bool> reached(degree_ + 1, false);
  std::vector<std::size_t> todo{1};
  reached[1] = true;
  while (!todo.empty()) {
    const std::size_t q = todo.back();
    todo.pop_back();
    for (const auto& entry : assignments_) {
      const std::size_t r = entry.second.act(q);
      if (!reached[r]) {
        reached[r] = true;
        todo.push_back(r);
      }
    }
  }
  return std::count(reached.begin() + 1, reached.end(), true) == static_cast<std::ptrdiff_t>(degree_);
}

// ---------------------------------------------------------------------------
// SkewIet

SkewIet::SkewIet(Iet base, PermMorphism perm) : base_(std::move(base)), perm_(std::move(perm)) {
  for (char a : base_.order1()) perm_.of(a);
  if (!perm_.is_transitive()) throw NotTransitive("the permutations do not act transitively");
}

std::pair<QuadraticNumber, std::size_t> skew_apply(const SkewIet& u, const QuadraticNumber& z, std::size_t q) {
  const char a = u.base().letter_at(z);
  return {z + u.base().translation(a), u.perm().of(a).act(q)};
}

QuadraticNumber stack_position(const SkewIet& u, const QuadraticNumber& z, std::size_t q) {
  if (q == 0 || q > u.degree()) throw OutOfDomain("copy " + std::to_string(q) + " does not exist");
  return (z + QuadraticNumber(static_cast<long>(q - 1))) / Rational(static_cast<long>(u.degree()));
}

std::pair<QuadraticNumber, std::size_t> unstack(const SkewIet& u, const QuadraticNumber& x) {
  if (x.sign() < 0 || x >= QuadraticNumber(1)) throw OutOfDomain("point " + x.str() + " is outside [0,1[");
  const QuadraticNumber scaled = x * QuadraticNumber(static_cast<long>(u.degree()));
  std::size_t q = 1;
  while (scaled >= QuadraticNumber(static_cast<long>(q))) ++q;
  return {scaled - QuadraticNumber(static_cast<long>(q - 1)), q};
}

Iet skew_as_iet(const SkewIet& u) {
  const Iet& t = u.base();
  const std::size_t d = u.degree();
  const std::size_t s = t.size();
  if (s * d > fresh_letters().size())
    throw Error("stack needs " + std::to_string(s * d) + " letters; at most " +
                std::to_string(fresh_letters().size()) + " are available");

  struct Piece {
    char letter;
    QuadraticNumber image_left;
  };
  std::string order1;
  std::vector<QuadraticNumber> lengths;
  std::vector<std::string> labels;
  std::vector<Piece> pieces;
  const Rational scale(static_cast<long>(d));
  for (std::size_t q = 1; q <= d; ++q)
    for (char a : t.order1()) {
      const char letter = fresh_letters()[order1.size()];
      order1 += letter;
      lengths.push_back(t.length(a) / scale);
      labels.push_back(t.label(a) + std::to_string(q));
      pieces.push_back({letter, stack_position(u, t.delta(a), u.perm().of(a).act(q))});
    }
  std::sort(pieces.begin(), pieces.end(), [](const Piece& x, const Piece& y) { return x.image_left < y.image_left; });
  std::string order2;
  for (const Piece& p : pieces) order2 += p.letter;
  return Iet(std::move(order1), std::move(order2), std::move(lengths), std::move(labels));
}

RegularityReport skew_check_regular(const SkewIet& u, std::size_t depth) {
  if (depth == 0) throw std::invalid_argument("regularity depth must be positive");
  const Iet& t = u.base();
  const std::size_t d = u.degree();
  auto seps = separation_points(t);
  seps.erase(seps.begin());

  std::vector<std::pair<QuadraticNumber, std::size_t>> starts;
  for (std::size_t q = 1; q <= d; ++q)
    for (const auto& mu : seps) starts.emplace_back(mu, q);

  RegularityReport report;
  report.depth = depth;
  auto current = starts;
  for (std::size_t k = 1; k <= depth; ++k) {
    for (std::size_t i = 0; i < current.size(); ++i) {
      current[i] = skew_apply(u, current[i].first, current[i].second);
      for (std::size_t j = 0; j < starts.size(); ++j) {
        if (current[i] == starts[j]) {
          report.status = RegularityReport::Status::ConnectionFound;
          report.witness = Connection{i + 1, j + 1, k};
          return report;
        }
      }
    }
  }
  return report;
}

CodeSet return_words(const SkewIet& u, std::size_t home, std::size_t max_word_len) {
  if (home == 0 || home > u.degree()) throw OutOfDomain("copy " + std::to_string(home) + " does not exist");
  const Iet& t = u.base();
  const auto report = check_regular(t, std::max<std::size_t>(max_word_len, 1));
  if (!report.regular()) throw NotRegularToDepth("the base transformation has a connection");

  struct Node {
    Word word;
    SemiInterval end;
    std::size_t copy;
  };
  std::vector<Word> found;
  std::vector<Node> frontier{{Word(), SemiInterval{0, 1}, home}};
  for (std::size_t n = 1; n <= max_word_len && !frontier.empty(); ++n) {
    std::vector<Node> next;
    for (const Node& node : frontier)
      for (char a : t.order1()) {
        auto j = extend_right(t, node.end, a);
        if (!j) continue;
        const std::size_t copy = u.perm().of(a).act(node.copy);
        if (copy == home) found.push_back(node.word + a);
        else next.push_back({node.word + a, std::move(*j), copy});
      }
    frontier = std::move(next);
  }
  return CodeSet(std::move(found));
}

FirstReturn first_return(const SkewIet& u, const QuadraticNumber& z, std::size_t home, std::size_t max_steps) {
  FirstReturn out{z, Word()};
  std::size_t q = home;
  do {
    if (out.word.size() == max_steps) throw Error("no return to copy " + std::to_string(home) + " within " + std::to_string(max_steps) + " steps");
    out.word += u.base().letter_at(out.point);
    std::tie(out.point, q) = skew_apply(u, out.point, q);
  } while (q != home);
  return out;
}

bool schreier_check(const CodeSet& x, std::size_t d, std::size_t s) { return x.size() == d * (s - 1) + 1; }

}  // namespace iet
