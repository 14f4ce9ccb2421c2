#include "iet/bifix.hpp"

#include <algorithm>
#include <set>

#include "iet/errors.hpp"

namespace iet {

namespace {

bool shortlex_less(const Word& a, const Word& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; }

Word reversed(std::string_view w) { return Word(w.rbegin(), w.rend()); }

std::vector<std::size_t> ranks_of(std::string_view letter_order) {
  std::vector<std::size_t> rank(256, letter_order.size());
  for (std::size_t i = 0; i < letter_order.size(); ++i) rank[static_cast<unsigned char>(letter_order[i])] = i;
  return rank;
}

}  // namespace

// ---------------------------------------------------------------------------
// CodeSet / CodingMorphism

CodeSet::CodeSet(std::vector<Word> words) : words_(std::move(words)) {
  for (const Word& w : words_)
    if (w.empty()) throw ParseError("code words must be nonempty");
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

bool CodeSet::contains(std::string_view w) const { return std::binary_search(words_.begin(), words_.end(), w); }

std::size_t CodeSet::max_length() const {
  std::size_t m = 0;
  for (const Word& w : words_) m = std::max(m, w.size());
  return m;
}

bool CodeSet::is_prefix_code() const {
  // In lexicographic order a word is immediately followed by its extensions.
  for (std::size_t i = 0; i + 1 < words_.size(); ++i)
    if (words_[i + 1].starts_with(words_[i])) return false;
  return true;
}

bool CodeSet::is_suffix_code() const {
  std::vector<Word> rev;
  for (const Word& w : words_) rev.push_back(reversed(w));
  return CodeSet(std::move(rev)).is_prefix_code();
}

bool CodeSet::has_prefix_in(std::string_view w) const {
  return std::any_of(words_.begin(), words_.end(), [&](const Word& x) { return w.starts_with(x); });
}

bool CodeSet::has_suffix_in(std::string_view w) const {
  return std::any_of(words_.begin(), words_.end(), [&](const Word& x) { return w.ends_with(x); });
}

CodingMorphism::CodingMorphism(std::map<char, Word> images) : images_(std::move(images)) {
  std::set<Word> seen;
  for (const auto& [b, x] : images_) {
    if (x.empty()) throw NotDecodable(std::string("empty image for '") + b + "'");
    if (!seen.insert(x).second) throw NotDecodable("image \"" + x + "\" assigned twice");
  }
}

std::string CodingMorphism::source_alphabet() const {
  std::string out;
  for (const auto& entry : images_) out += entry.first;
  return out;
}

const Word& CodingMorphism::image(char b) const {
  auto it = images_.find(b);
  if (it == images_.end()) throw AlphabetMismatch(std::string("letter '") + b + "' has no image");
  return it->second;
}

CodeSet CodingMorphism::code() const {
  std::vector<Word> words;
  for (const auto& entry : images_) words.push_back(entry.second);
  return CodeSet(std::move(words));
}

Word CodingMorphism::apply(std::string_view y) const {
  Word out;
  for (char b : y) out += image(b);
  return out;
}

char CodingMorphism::preimage(std::string_view x) const {
  for (const auto& [b, w] : images_)
    if (w == x) return b;
  return '\0';
}

// ---------------------------------------------------------------------------
// Maximality, parses, degree

bool is_s_maximal_prefix(const CodeSet& x, const FactorialLanguage& s) {
  const std::size_t longest = x.max_length();
  if (longest > s.max_len())
    throw TruncationTooShort("code words of length " + std::to_string(longest) + " exceed truncation " +
                             std::to_string(s.max_len()));
  if (!x.is_prefix_code()) return false;
  for (const Word& w : x.words())
    if (!s.contains(w)) return false;
  for (const Word& w : s.words_of_length(longest))
    if (!x.has_prefix_in(w)) return false;
  return true;
}

std::size_t parse_count(const CodeSet& x, std::string_view w) {
  std::size_t count = 0;
  for (std::size_t i = 0; i <= w.size(); ++i)
    if (!x.has_prefix_in(w.substr(i))) ++count;
  return count;
}

std::vector<Word> internal_factors(const CodeSet& x) {
  std::set<Word> found;
  for (const Word& w : x.words())
    for (std::size_t i = 1; i + 1 <= w.size(); ++i)
      for (std::size_t j = i; j + 1 <= w.size(); ++j) found.insert(w.substr(i, j - i));
  std::vector<Word> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

namespace {

std::size_t degree_on_long_words(const CodeSet& x, const FactorialLanguage& s) {
  std::size_t d = 0;
  for (const Word& w : s.words_of_length(s.max_len())) d = std::max(d, parse_count(x, w));
  return d;
}

}  // namespace

BifixReport analyze_bifix(const CodeSet& x, const FactorialLanguage& s) {
  if (!x.is_bifix_code()) throw NotBifix("the code is not bifix");
  if (s.max_len() < 2 * x.max_length())
    throw TruncationTooShort("degree computation needs truncation >= " + std::to_string(2 * x.max_length()) +
                             ", have " + std::to_string(s.max_len()));
  BifixReport report;
  report.s_maximal = is_s_maximal_prefix(x, s);
  if (!report.s_maximal) throw NotSMaximal("the code is not an S-maximal prefix code");
  report.degree = degree_on_long_words(x, s);
  for (Word& w : internal_factors(x)) {
    if (!s.contains(w)) continue;
    if (x.contains(w)) report.kernel.push_back(w);
    report.internal_factors.push_back(std::move(w));
  }
  return report;
}

BifixReport analyze_bifix(const CodeSet& x, const FactorialLanguage& s, const Iet& t) {
  BifixReport report = analyze_bifix(x, s);
  struct Entry {
    Word word;
    QuadraticNumber start, end;
  };
  std::vector<Entry> entries;
  for (const Word& w : x.words()) {
    auto i = starting_interval(t, w);
    auto j = ending_interval(t, w);
    if (!i || !j) throw NotSMaximal("code word \"" + w + "\" does not occur in the transformation");
    entries.push_back({w, i->left, j->left});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.start < b.start; });
  for (const Entry& e : entries) report.order1.push_back(e.word);
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.end < b.end; });
  for (const Entry& e : entries) report.order2.push_back(e.word);
  return report;
}

std::vector<Word> lexicographic_order(const CodeSet& x, std::string_view letter_order) {
  const auto rank = ranks_of(letter_order);
  std::vector<Word> out = x.words();
  std::sort(out.begin(), out.end(), [&](const Word& a, const Word& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [&](char p, char q) {
      return rank[static_cast<unsigned char>(p)] < rank[static_cast<unsigned char>(q)];
    });
  });
  return out;
}

std::vector<Word> reverse_lexicographic_order(const CodeSet& x, std::string_view letter_order) {
  const auto rank = ranks_of(letter_order);
  std::vector<Word> out = x.words();
  std::sort(out.begin(), out.end(), [&](const Word& a, const Word& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend(), [&](char p, char q) {
      return rank[static_cast<unsigned char>(p)] < rank[static_cast<unsigned char>(q)];
    });
  });
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

// Depth-first search over the cuts of the prefix tree of S: every pending
// node is either taken into the code or replaced by its children. Taking a
// node is allowed only if it keeps the code a suffix code.
class BifixSearch {
 public:
  BifixSearch(const FactorialLanguage& s, std::size_t degree, std::size_t max_word_len)
      : s_(s), degree_(degree), max_word_len_(max_word_len) {}

  std::vector<CodeSet> run() {
    for (const Word& a : s_.words_of_length(1)) pending_.push_back(a);
    std::reverse(pending_.begin(), pending_.end());
    search();
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  bool suffix_compatible(const Word& w) const {
    return std::none_of(chosen_.begin(), chosen_.end(),
                        [&](const Word& c) { return w.ends_with(c) || c.ends_with(w); });
  }

  void search() {
    if (pending_.empty()) {
      CodeSet x(chosen_);
      if (degree_on_long_words(x, s_) == degree_) found_.push_back(std::move(x));
      return;
    }
    Word w = std::move(pending_.back());
    pending_.pop_back();

    if (suffix_compatible(w)) {
      chosen_.push_back(w);
      search();
      chosen_.pop_back();
    }
    if (w.size() < max_word_len_) {
      const std::string ext = s_.right_extensions(w);
      for (auto it = ext.rbegin(); it != ext.rend(); ++it) pending_.push_back(w + *it);
      search();
      pending_.resize(pending_.size() - ext.size());
    }
    pending_.push_back(std::move(w));
  }

  const FactorialLanguage& s_;
  std::size_t degree_;
  std::size_t max_word_len_;
  std::vector<Word> pending_;
  std::vector<Word> chosen_;
  std::vector<CodeSet> found_;
};

}  // namespace

std::vector<CodeSet> enumerate_maximal_bifix(const FactorialLanguage& s, std::size_t degree, std::size_t max_word_len) {
  if (degree == 0) throw std::invalid_argument("degree must be positive");
  if (max_word_len == 0) throw std::invalid_argument("max_word_len must be positive");
  if (s.max_len() < 2 * max_word_len)
    throw TruncationTooShort("enumeration up to length " + std::to_string(max_word_len) + " needs truncation >= " +
                             std::to_string(2 * max_word_len));
  return BifixSearch(s, degree, max_word_len).run();
}

// ---------------------------------------------------------------------------
// Decoding

Decoding decode_word(std::string_view x, const CodingMorphism& f) {
  const CodeSet code = f.code();
  Decoding out;
  std::size_t pos = 0;
  for (;;) {
    const std::string_view rest = x.substr(pos);
    auto hit = std::find_if(code.words().begin(), code.words().end(),
                            [&](const Word& w) { return rest.starts_with(w); });
    if (hit == code.words().end()) break;
    out.decoded += f.preimage(*hit);
    pos += hit->size();
  }
  out.consumed = pos;
  out.remainder = Word(x.substr(pos));
  if (!out.remainder.empty() &&
      std::none_of(code.words().begin(), code.words().end(),
                   [&](const Word& w) { return w.starts_with(out.remainder); }))
    throw NotDecodable("no code word continues \"" + out.remainder + "\" at offset " + std::to_string(pos));
  return out;
}

Iet build_tf(const Iet& t, const CodingMorphism& f, const FactorialLanguage& s) {
  const CodeSet x = f.code();
  if (!x.is_bifix_code()) throw NotBifix("T_f needs a bifix code");
  if (!is_s_maximal_prefix(x, s)) throw NotSMaximal("T_f needs an S-maximal bifix code");

  struct Piece {
    char letter;
    SemiInterval start, end;
  };
  std::vector<Piece> pieces;
  for (const auto& [b, w] : f.images()) {
    auto i = starting_interval(t, w);
    auto j = ending_interval(t, w);
    if (!i || !j) throw NotSMaximal("code word \"" + w + "\" does not occur in the transformation");
    pieces.push_back({b, *i, *j});
  }
  std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) { return a.start.left < b.start.left; });
  std::string order1;
  std::vector<QuadraticNumber> lengths;
  for (const Piece& p : pieces) {
    order1 += p.letter;
    lengths.push_back(p.start.length());
  }
  std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) { return a.end.left < b.end.left; });
  std::string order2;
  for (const Piece& p : pieces) order2 += p.letter;

  Iet tf(order1, order2, std::move(lengths));
  for (const auto& [b, w] : f.images())
    if (tf.translation(b) != word_translation(t, w))
      throw Error("intervals of the code do not form an exchange; is S the language of this transformation?");
  return tf;
}

FactorialLanguage decode_language(const FactorialLanguage& s, const CodingMorphism& f, std::size_t out_len) {
  const std::size_t longest = f.code().max_length();
  if (out_len * longest > s.max_len())
    throw TruncationTooShort("decoding to length " + std::to_string(out_len) + " needs truncation >= " +
                             std::to_string(out_len * longest));
  const std::string letters = f.source_alphabet();
  FactorialLanguage out(letters, out_len);
  std::vector<std::pair<Word, Word>> frontier{{Word(), Word()}};  // (y, f(y))
  for (std::size_t n = 1; n <= out_len; ++n) {
    std::vector<std::pair<Word, Word>> next;
    for (const auto& [y, image] : frontier) {
      for (char b : letters) {
        Word fy = image + f.image(b);
        if (s.contains(fy)) {
          out.insert(y + b);
          next.emplace_back(y + b, std::move(fy));
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace iet
