#include "iet/language.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "iet/errors.hpp"

namespace iet {

namespace {

std::string sorted_copy(std::string s) {
  std::sort(s.begin(), s.end());
  return s;
}

void require_length(const FactorialLanguage& s, std::size_t needed, std::string_view what) {
  if (needed > s.max_len())
    throw TruncationTooShort(std::string(what) + " needs words of length " + std::to_string(needed) +
                             " but the language is truncated at " + std::to_string(s.max_len()));
}

std::set<Word> factor_set(std::string_view text, std::size_t max_len) {
  std::set<Word> out;
  for (std::size_t i = 0; i < text.size(); ++i)
    for (std::size_t len = 1; len <= max_len && i + len <= text.size(); ++len) out.emplace(text.substr(i, len));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// FactorialLanguage

FactorialLanguage::FactorialLanguage(std::string alphabet, std::size_t max_len)
    : alphabet_(std::move(alphabet)), max_len_(max_len), by_length_(max_len + 1) {
  by_length_[0].insert(Word());
}

FactorialLanguage FactorialLanguage::from_words(std::string alphabet, std::size_t max_len,
                                                const std::vector<Word>& words) {
  FactorialLanguage s(std::move(alphabet), max_len);
  for (const Word& w : words) {
    if (w.size() > max_len) throw ParseError("word \"" + w + "\" exceeds maxlen " + std::to_string(max_len));
    for (char a : w)
      if (s.alphabet_.find(a) == std::string::npos)
        throw ParseError("word \"" + w + "\" uses a letter outside the alphabet");
    s.insert(w);
  }
  for (std::size_t n = 1; n <= max_len; ++n) {
    for (const Word& w : s.by_length_[n]) {
      if (!s.by_length_[n - 1].contains(w.substr(1)) || !s.by_length_[n - 1].contains(w.substr(0, n - 1)))
        throw ParseError("word list is not factorial: a factor of \"" + w + "\" is missing");
    }
  }
  return s;
}

FactorialLanguage FactorialLanguage::factors_of(std::string alphabet, std::string_view text, std::size_t max_len) {
  FactorialLanguage s(std::move(alphabet), max_len);
  for (const Word& w : factor_set(text, max_len)) s.insert(w);
  return s;
}

void FactorialLanguage::insert(Word w) {
  const std::size_t n = w.size();
  by_length_[n].insert(std::move(w));
}

bool FactorialLanguage::contains(std::string_view w) const {
  require_length(*this, w.size(), "membership query");
  return by_length_[w.size()].contains(Word(w));
}

const std::set<Word>& FactorialLanguage::words_of_length(std::size_t n) const {
  require_length(*this, n, "listing");
  return by_length_[n];
}

std::vector<Word> FactorialLanguage::words() const {
  std::vector<Word> out;
  for (const auto& level : by_length_) out.insert(out.end(), level.begin(), level.end());
  return out;
}

std::size_t FactorialLanguage::size() const {
  std::size_t n = 0;
  for (const auto& level : by_length_) n += level.size();
  return n;
}

std::string FactorialLanguage::right_extensions(std::string_view w) const {
  require_length(*this, w.size() + 1, "right extension");
  std::string out;
  Word probe(w);
  probe.push_back(' ');
  for (char a : alphabet_) {
    probe.back() = a;
    if (by_length_[probe.size()].contains(probe)) out += a;
  }
  return out;
}

std::string FactorialLanguage::left_extensions(std::string_view w) const {
  require_length(*this, w.size() + 1, "left extension");
  std::string out;
  Word probe = " " + Word(w);
  for (char a : alphabet_) {
    probe.front() = a;
    if (by_length_[probe.size()].contains(probe)) out += a;
  }
  return out;
}

FactorialLanguage FactorialLanguage::truncated(std::size_t max_len) const {
  FactorialLanguage s(alphabet_, std::min(max_len, max_len_));
  for (std::size_t n = 1; n <= s.max_len_; ++n) s.by_length_[n] = by_length_[n];
  return s;
}

bool operator==(const FactorialLanguage& a, const FactorialLanguage& b) {
  return a.max_len_ == b.max_len_ && sorted_copy(a.alphabet_) == sorted_copy(b.alphabet_) &&
         a.by_length_ == b.by_length_;
}

// ---------------------------------------------------------------------------
// Codings of an Iet

Word natural_coding(const Iet& t, const QuadraticNumber& z, std::size_t n) {
  Word out;
  out.reserve(n);
  QuadraticNumber x = z;
  for (std::size_t i = 0; i < n; ++i) {
    const char a = t.letter_at(x);
    out += a;
    x += t.translation(a);
  }
  if (n == 0) t.letter_at(z);  // domain check
  return out;
}

namespace {

struct Frontier {
  Word word;
  SemiInterval end;  // J_w
};

void require_regular(const Iet& t, std::size_t max_len, bool force) {
  if (force || max_len == 0) return;
  const auto report = check_regular(t, max_len);
  if (!report.regular()) {
    const auto& c = *report.witness;
    throw NotRegularToDepth("connection T^" + std::to_string(c.steps) + "(mu_" + std::to_string(c.from) + ") = mu_" +
                            std::to_string(c.to) + "; the factor set depends on the starting point");
  }
}

std::vector<Frontier> children_of(const Iet& t, const Frontier& node) {
  std::vector<Frontier> out;
  for (char a : t.order1()) {
    if (auto j = extend_right(t, node.end, a)) out.push_back({node.word + a, std::move(*j)});
  }
  return out;
}

}  // namespace

FactorialLanguage language_of_iet(const Iet& t, std::size_t max_len, bool force) {
  require_regular(t, max_len, force);
  FactorialLanguage s(t.order1(), max_len);
  std::vector<Frontier> frontier{{Word(), SemiInterval{0, 1}}};
  for (std::size_t n = 1; n <= max_len; ++n) {
    const auto count = static_cast<std::ptrdiff_t>(frontier.size());
    std::vector<std::vector<Frontier>> children(frontier.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t i = 0; i < count; ++i) children[static_cast<std::size_t>(i)] = children_of(t, frontier[static_cast<std::size_t>(i)]);

    std::vector<Frontier> next;
    for (auto& group : children)
      for (auto& child : group) {
        s.insert(child.word);
        next.push_back(std::move(child));
      }
    frontier = std::move(next);
  }
  return s;
}

FactorialLanguage language_of_iet_serial(const Iet& t, std::size_t max_len, bool force) {
  require_regular(t, max_len, force);
  FactorialLanguage s(t.order1(), max_len);
  // Depth-first; same words, different visiting order.
  std::vector<Frontier> stack{{Word(), SemiInterval{0, 1}}};
  while (!stack.empty()) {
    Frontier node = std::move(stack.back());
    stack.pop_back();
    if (node.word.size() == max_len) continue;
    for (auto& child : children_of(t, node)) {
      s.insert(child.word);
      stack.push_back(std::move(child));
    }
  }
  return s;
}

QuadraticNumber invariant_measure(const Iet& t, std::string_view w) {
  auto j = ending_interval(t, w);
  return j ? j->length() : QuadraticNumber();
}

// ---------------------------------------------------------------------------
// Substitutions

Substitution::Substitution(std::map<char, Word> rules) : rules_(std::move(rules)) {
  if (rules_.empty()) throw AlphabetMismatch("substitution with empty domain");
  for (const auto& [a, image] : rules_) {
    if (image.empty()) throw AlphabetMismatch(std::string("erasing rule for '") + a + "'");
    for (char b : image)
      if (!rules_.contains(b)) throw AlphabetMismatch(std::string("image letter '") + b + "' outside the domain");
  }
}

Substitution Substitution::fibonacci() { return Substitution({{'a', "ab"}, {'b', "a"}}); }
Substitution Substitution::tribonacci() { return Substitution({{'a', "ab"}, {'b', "ac"}, {'c', "a"}}); }

std::string Substitution::alphabet() const {
  std::string out;
  for (const auto& rule : rules_) out += rule.first;
  return out;
}

const Word& Substitution::image(char a) const {
  auto it = rules_.find(a);
  if (it == rules_.end()) throw AlphabetMismatch(std::string("letter '") + a + "' outside the domain");
  return it->second;
}

Word Substitution::apply(std::string_view w) const {
  Word out;
  for (char a : w) out += image(a);
  return out;
}

bool Substitution::is_primitive() const {
  const std::string letters = alphabet();
  const std::size_t n = letters.size();
  auto idx = [&](char c) { return letters.find(c); };
  std::vector<std::vector<bool>> base(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (char b : image(letters[i])) base[i][idx(b)] = true;
  auto power = base;
  for (std::size_t k = 1; k <= n * n; ++k) {
    bool full = true;
    for (const auto& row : power)
      for (bool x : row) full = full && x;
    if (full) return true;
    std::vector<std::vector<bool>> next(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (power[i][j])
          for (std::size_t l = 0; l < n; ++l)
            if (base[j][l]) next[i][l] = true;
    power = std::move(next);
  }
  return false;
}

FactorialLanguage substitution_language(const Substitution& f, char seed, std::size_t max_len) {
  const Word& first = f.image(seed);
  if (first.front() != seed) throw NoFixpoint(std::string("f(") + seed + ") = " + first + " does not start with " + seed);
  if (!f.is_primitive()) throw NotPrimitive("substitution is not primitive");

  // Primitivity forces |f(seed)| >= 2 unless the alphabet is {seed} itself,
  // where the fixpoint is seed^omega.
  if (first.size() == 1) return FactorialLanguage::factors_of(f.alphabet(), Word(max_len, seed), max_len);

  Word prefix(1, seed);
  auto previous = factor_set(prefix, max_len);
  for (;;) {
    prefix = f.apply(prefix);
    auto current = factor_set(prefix, max_len);
    if (current == previous && prefix.size() > max_len) break;
    previous = std::move(current);
  }
  FactorialLanguage s(f.alphabet(), max_len);
  for (const Word& w : previous) s.insert(w);
  return s;
}

SpecialWords special_words(const FactorialLanguage& s, std::size_t n) {
  require_length(s, n + 1, "special word search");
  SpecialWords out;
  for (const Word& w : s.words_of_length(n)) {
    if (s.right_extensions(w).size() >= 2) out.right.push_back(w);
    if (s.left_extensions(w).size() >= 2) out.left.push_back(w);
  }
  return out;
}

std::vector<std::optional<std::size_t>> recurrence_windows(const FactorialLanguage& s) {
  std::vector<std::optional<std::size_t>> out(s.max_len() + 1);
  for (std::size_t n = 0; n <= s.max_len(); ++n) {
    const auto& targets = s.words_of_length(n);
    for (std::size_t m = n; m <= s.max_len() && !out[n]; ++m) {
      bool all = true;
      for (const Word& window : s.words_of_length(m)) {
        std::set<std::string_view> seen;
        for (std::size_t i = 0; i + n <= m; ++i) seen.insert(std::string_view(window).substr(i, n));
        if (seen.size() != targets.size()) {
          all = false;
          break;
        }
      }
      if (all) out[n] = m;
    }
  }
  return out;
}

std::optional<std::pair<Word, Word>> recurrence_failure(const FactorialLanguage& s, std::size_t k) {
  require_length(s, 2 * k, "recurrence test");
  const auto all = s.words();
  for (std::size_t lu = 1; lu <= k; ++lu)
    for (const Word& u : s.words_of_length(lu))
      for (std::size_t lw = 1; lw <= k; ++lw)
        for (const Word& w : s.words_of_length(lw)) {
          const bool found = std::any_of(all.begin(), all.end(), [&](const Word& z) {
            return z.size() >= u.size() + w.size() && z.starts_with(u) && z.ends_with(w);
          });
          if (!found) return std::make_pair(u, w);
        }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Text format

void write_language(std::ostream& os, const FactorialLanguage& s) {
  os << "# factorial language, one word per line; the empty word is implicit\n";
  os << "alphabet:";
  for (char a : s.alphabet()) os << ' ' << a;
  os << "\nmaxlen: " << s.max_len() << '\n';
  for (std::size_t n = 1; n <= s.max_len(); ++n)
    for (const Word& w : s.words_of_length(n)) os << w << '\n';
}

FactorialLanguage read_language(std::istream& is) {
  std::optional<std::string> alphabet;
  std::optional<std::size_t> max_len;
  std::vector<Word> words;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
    if (line.starts_with("alphabet:")) {
      std::istringstream fields(line.substr(9));
      std::string letters, tok;
      while (fields >> tok) {
        if (tok.size() != 1) throw ParseError("line " + std::to_string(lineno) + ": letters must be single characters");
        letters += tok;
      }
      alphabet = letters;
    } else if (line.starts_with("maxlen:")) {
      try {
        max_len = std::stoul(line.substr(7));
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) + ": bad maxlen");
      }
    } else {
      if (line.find_first_of(" \t") != std::string::npos)
        throw ParseError("line " + std::to_string(lineno) + ": one word per line");
      words.push_back(line);
    }
  }
  if (!alphabet) throw ParseError("language file has no alphabet: header");
  if (!max_len) throw ParseError("language file has no maxlen: header");
  return FactorialLanguage::from_words(*alphabet, *max_len, words);
}

}  // namespace iet
