#include "iet/quadratic.hpp"

#include <mpfr.h>

#include <cctype>
#include <utility>

#include "iet/errors.hpp"

namespace iet {

std::pair<std::int64_t, std::int64_t> split_square(std::int64_t d) {
  if (d < 0) throw ParseError("negative radicand " + std::to_string(d));
  std::int64_t k = 1;
  std::int64_t s = d;
  for (std::int64_t p = 2; p * p <= s; ++p) {
    while (s % (p * p) == 0) {
      s /= p * p;
      k *= p;
    }
  }
  return {k, s};
}

QuadraticNumber::QuadraticNumber(Rational value) : rat_(std::move(value)) { rat_.canonicalize(); }

QuadraticNumber::QuadraticNumber(Rational rat, Rational coef, std::int64_t d)
    : rat_(std::move(rat)), coef_(std::move(coef)), d_(d) {
  rat_.canonicalize();
  coef_.canonicalize();
  canonicalize();
}

QuadraticNumber QuadraticNumber::sqrt_of(std::int64_t d) { return QuadraticNumber(Rational(0), Rational(1), d); }

void QuadraticNumber::canonicalize() {
  if (d_ < 0) throw ParseError("negative radicand " + std::to_string(d_));
  if (d_ > 1) {
    auto [k, s] = split_square(d_);
    if (k != 1) {
      coef_ *= Rational(static_cast<long>(k));
      d_ = s;
    }
  }
  if (d_ == 1) rat_ += coef_;
  if (d_ <= 1 || coef_ == 0) {
    coef_ = 0;
    d_ = 0;
  }
}

std::int64_t QuadraticNumber::common_field(const QuadraticNumber& a, const QuadraticNumber& b) {
  if (a.d_ == 0) return b.d_;
  if (b.d_ == 0 || a.d_ == b.d_) return a.d_;
  throw MixedFieldError("operands live in Q(sqrt(" + std::to_string(a.d_) + ")) and Q(sqrt(" +
                        std::to_string(b.d_) + "))");
}

int QuadraticNumber::sign() const {
  const int sr = sgn(rat_);
  const int sc = sgn(coef_);
  if (sc == 0) return sr;
  if (sr == 0 || sr == sc) return sc;
  // Opposite signs: compare rat^2 against coef^2 * d.
  const Rational r2 = rat_ * rat_;
  const Rational c2d = coef_ * coef_ * Rational(static_cast<long>(d_));
  const int c = cmp(r2, c2d);
  return c > 0 ? sr : -sr;  // c == 0 impossible for squarefree d > 1
}

QuadraticNumber QuadraticNumber::operator-() const {
  QuadraticNumber r = *this;
  r.rat_ = -r.rat_;
  r.coef_ = -r.coef_;
  return r;
}

QuadraticNumber& QuadraticNumber::operator+=(const QuadraticNumber& rhs) {
  d_ = common_field(*this, rhs);
  rat_ += rhs.rat_;
  coef_ += rhs.coef_;
  if (coef_ == 0) d_ = 0;
  return *this;
}

QuadraticNumber& QuadraticNumber::operator-=(const QuadraticNumber& rhs) {
  d_ = common_field(*this, rhs);
  rat_ -= rhs.rat_;
  coef_ -= rhs.coef_;
  if (coef_ == 0) d_ = 0;
  return *this;
}

QuadraticNumber& QuadraticNumber::operator*=(const QuadraticNumber& rhs) {
  const std::int64_t d = common_field(*this, rhs);
  // (a + b r)(c + e r) = ac + be d + (ae + bc) r
  Rational r = rat_ * rhs.rat_ + coef_ * rhs.coef_ * Rational(static_cast<long>(d));
  Rational c = rat_ * rhs.coef_ + coef_ * rhs.rat_;
  rat_ = std::move(r);
  coef_ = std::move(c);
  d_ = coef_ == 0 ? 0 : d;
  return *this;
}

QuadraticNumber operator/(const QuadraticNumber& lhs, const Rational& rhs) {
  if (rhs == 0) throw std::domain_error("division by zero");
  QuadraticNumber r = lhs;
  r.rat_ /= rhs;
  r.coef_ /= rhs;
  return r;
}

std::strong_ordering operator<=>(const QuadraticNumber& a, const QuadraticNumber& b) {
  QuadraticNumber diff = a;
  diff -= b;
  const int s = diff.sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string QuadraticNumber::str() const {
  std::string out = rat_.get_str();
  if (coef_ != 0) {
    out += coef_ < 0 ? '-' : '+';
    out += Rational(abs(coef_)).get_str();
    out += "*sqrt(" + std::to_string(d_) + ")";
  }
  return out;
}

double QuadraticNumber::to_double() const {
  mpfr_t acc, root;
  mpfr_inits2(256, acc, root, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_ui(root, static_cast<unsigned long>(d_), MPFR_RNDN);
  mpfr_sqrt(root, root, MPFR_RNDN);
  mpfr_mul_q(root, root, coef_.get_mpq_t(), MPFR_RNDN);
  mpfr_add_q(acc, root, rat_.get_mpq_t(), MPFR_RNDN);
  const double out = mpfr_get_d(acc, MPFR_RNDN);
  mpfr_clears(acc, root, static_cast<mpfr_ptr>(nullptr));
  return out;
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}
  bool done() const { return pos_ == s_.size(); }
  char peek() const { return done() ? '\0' : s_[pos_]; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool accept(std::string_view word) {
    if (s_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }
  std::string digits() {
    const std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }
  [[noreturn]] void fail(std::string_view what) const {
    throw ParseError("cannot parse quadratic number \"" + std::string(s_) + "\": " + std::string(what) +
                     " at offset " + std::to_string(pos_));
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

// Unsigned "p" or "p/q"; empty optional-like result when no digits follow.
bool read_rational(Cursor& c, Rational& out) {
  const std::string num = c.digits();
  if (num.empty()) return false;
  std::string text = num;
  if (c.accept('/')) {
    const std::string den = c.digits();
    if (den.empty()) c.fail("missing denominator");
    if (den.find_first_not_of('0') == std::string::npos) c.fail("zero denominator");
    text += "/" + den;
  }
  out = Rational(text);
  out.canonicalize();
  return true;
}

// Parses "sqrt(d)" after an optional "coef*"; returns d.
std::int64_t read_sqrt(Cursor& c) {
  if (!c.accept("sqrt(")) c.fail("expected sqrt(");
  const std::string d = c.digits();
  if (d.empty() || d.size() > 12) c.fail("bad radicand");
  if (!c.accept(')')) c.fail("expected )");
  return std::stoll(d);
}

}  // namespace

QuadraticNumber QuadraticNumber::parse(std::string_view text) {
  Cursor c(text);
  if (c.done()) c.fail("empty input");

  Rational rat(0), coef(0);
  std::int64_t d = 0;
  bool have_rat = false;

  int sign = 1;
  if (c.accept('-')) sign = -1;
  else c.accept('+');

  Rational head;
  if (read_rational(c, head)) {
    if (c.accept('*')) {
      coef = sign * head;
      d = read_sqrt(c);
    } else {
      rat = sign * head;
      have_rat = true;
    }
  } else {
    coef = sign;
    d = read_sqrt(c);
  }

  if (have_rat && !c.done()) {
    int s2 = 0;
    if (c.accept('+')) s2 = 1;
    else if (c.accept('-')) s2 = -1;
    else c.fail("expected + or -");
    Rational tail;
    if (read_rational(c, tail)) {
      if (!c.accept('*')) c.fail("expected *");
      coef = s2 * tail;
    } else {
      coef = s2;
    }
    d = read_sqrt(c);
  }
  if (!c.done()) c.fail("trailing characters");
  return QuadraticNumber(rat, coef, d);
}

}  // namespace iet
