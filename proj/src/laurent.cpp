#include "orderlex/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "orderlex/errors.hpp"

namespace orderlex {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  auto valid_int = [](std::string_view digits) {
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    return !digits.empty() &&
           std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw ParseError("invalid rational '" + s + "'");
    if (s.front() == '+') s.erase(0, 1);
    return Rational(Integer(s));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
    throw ParseError("invalid rational '" + s + "'");
  if (num.front() == '+') num.erase(0, 1);
  Integer d(den);
  if (d == 0) throw ParseError("zero denominator in '" + s + "'");
  Rational r(Integer(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

LaurentPolynomial::LaurentPolynomial(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

LaurentPolynomial::LaurentPolynomial(int low, std::vector<Rational> coefficients)
    : low_(low), coeffs_(std::move(coefficients)) {
  trim();
}

LaurentPolynomial LaurentPolynomial::monomial(const Rational& coefficient, int exponent) {
  return LaurentPolynomial(exponent, {coefficient});
}

void LaurentPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) low_ = 0;
}

Rational LaurentPolynomial::coefficient(int exponent) const {
  if (exponent < low_ || exponent > high_degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

LaurentPolynomial LaurentPolynomial::shifted(int k) const {
  LaurentPolynomial r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

Rational LaurentPolynomial::evaluate(const Rational& x) const {
  if (is_zero()) return Rational(0);
  if (x == 0 && low_ < 0) throw std::domain_error("evaluating a negative power of t at 0");
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  if (low_ >= 0) {
    for (int i = 0; i < low_; ++i) acc *= x;
  } else {
    for (int i = 0; i < -low_; ++i) acc /= x;
  }
  return acc;
}

LaurentPolynomial LaurentPolynomial::derivative() const {
  std::vector<Rational> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * (low_ + static_cast<int>(i));
  return LaurentPolynomial(low_ - 1, std::move(out));
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  int lo = std::min(low_, other.low_);
  int hi = std::max(high_degree(), other.high_degree());
  std::vector<Rational> out(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[static_cast<std::size_t>(low_ - lo) + i] += coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
    out[static_cast<std::size_t>(other.low_ - lo) + i] += other.coeffs_[i];
  low_ = lo;
  coeffs_ = std::move(out);
  trim();
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) { return *this += -other; }

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return LaurentPolynomial(a.low_ + b.low_, std::move(out));
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& other) { return *this = *this * other; }

LaurentPolynomial& LaurentPolynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) return *this = LaurentPolynomial();
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

std::string LaurentPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int e = high_degree(); e >= low_; --e) {
    Rational c = coefficient(e);
    if (c == 0) continue;
    bool negative = c < 0;
    Rational mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string power;
    if (e == 1) {
      power = "t";
    } else if (e != 0) {
      power = "t^" + std::to_string(e);
    }
    if (power.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += power;
    } else {
      out += mag.get_str() + "*" + power;
    }
  }
  return out;
}

namespace {

class PolynomialParser {
 public:
  explicit PolynomialParser(std::string_view text) : text_(text) {}

  LaurentPolynomial run() {
    skip_space();
    if (at_end()) fail("empty polynomial");
    LaurentPolynomial value = expression();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError("polynomial: " + message + " at column " + std::to_string(pos_ + 1), 1, pos_ + 1);
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  LaurentPolynomial expression() {
    LaurentPolynomial total;
    bool first = true;
    for (;;) {
      skip_space();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      LaurentPolynomial term = product();
      total += sign < 0 ? -term : term;
      first = false;
    }
    return total;
  }

  LaurentPolynomial product() {
    LaurentPolynomial value = power();
    for (;;) {
      skip_space();
      if (peek() != '*') break;
      ++pos_;
      value *= power();
    }
    return value;
  }

  LaurentPolynomial power() {
    LaurentPolynomial base = atom();
    skip_space();
    if (peek() != '^') return base;
    ++pos_;
    skip_space();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected exponent");
    long exponent = std::stol(std::string(text_.substr(start, pos_ - start)));
    if (exponent > 100000) fail("exponent too large");
    if (negative) {
      if (!base.is_unit()) fail("negative power of a non-unit");
      Rational coeff(1);
      for (long i = 0; i < exponent; ++i) coeff /= base.leading_coefficient();
      return LaurentPolynomial::monomial(coeff, -base.low_degree() * static_cast<int>(exponent));
    }
    LaurentPolynomial result(1);
    for (long i = 0; i < exponent; ++i) result *= base;
    return result;
  }

  LaurentPolynomial atom() {
    skip_space();
    char c = peek();
    if (c == '(') {
      ++pos_;
      LaurentPolynomial inner = expression();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 't') {
      ++pos_;
      return LaurentPolynomial::variable();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (peek() == '/') {
        ++pos_;
        std::size_t den_start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (den_start == pos_) fail("expected denominator");
      }
      try {
        return LaurentPolynomial(parse_rational(text_.substr(start, pos_ - start)));
      } catch (const ParseError&) {
        fail("invalid number");
      }
    }
    if (at_end()) fail("unexpected end of input");
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPolynomial LaurentPolynomial::parse(std::string_view text) { return PolynomialParser(text).run(); }

LaurentDivision divide(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return {};
  // Divide the t-free parts as ordinary polynomials, then restore the shifts.
  std::vector<Rational> rem = a.coefficients();
  const auto& den = b.coefficients();
  const std::size_t db = den.size() - 1;
  if (rem.size() <= db) return {LaurentPolynomial(), a};
  std::vector<Rational> quot(rem.size() - db);
  Rational lead_inv = Rational(1) / den.back();
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i] == 0) continue;
    Rational q = rem[i] * lead_inv;
    quot[i - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= q * den[j];
  }
  rem.resize(db);
  return {LaurentPolynomial(a.low_degree() - b.low_degree(), std::move(quot)),
          LaurentPolynomial(a.low_degree(), std::move(rem))};
}

LaurentPolynomial canonicalize(const LaurentPolynomial& p) {
  if (p.is_zero()) return p;
  Integer den_lcm = 1;
  for (const auto& c : p.coefficients()) {
    if (c == 0) continue;
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Integer content = 0;
  std::vector<Integer> ints;
  ints.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    Integer v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  if (p.leading_coefficient() < 0) content = -content;
  std::vector<Rational> out;
  out.reserve(ints.size());
  for (auto& v : ints) out.emplace_back(Integer(v / content));
  return LaurentPolynomial(0, std::move(out));
}

LaurentPolynomial gcd(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial x = canonicalize(a), y = canonicalize(b);
  while (!y.is_zero()) {
    LaurentPolynomial r = canonicalize(divide(x, y).remainder);
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

LaurentPolynomial substitute_power(const LaurentPolynomial& p, int d) {
  if (d <= 0) throw std::invalid_argument("substitute_power: exponent multiplier must be positive");
  if (p.is_zero() || d == 1) return p;
  const auto& c = p.coefficients();
  std::vector<Rational> out((c.size() - 1) * static_cast<std::size_t>(d) + 1);
  for (std::size_t i = 0; i < c.size(); ++i) out[i * static_cast<std::size_t>(d)] = c[i];
  return LaurentPolynomial(p.low_degree() * d, std::move(out));
}

bool divides(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  if (p.is_zero()) throw std::domain_error("divides: divisor is zero");
  return divide(q, p).remainder.is_zero();
}

LaurentPolynomial exact_quotient(const LaurentPolynomial& q, const LaurentPolynomial& p) {
  auto [quot, rem] = divide(q, p);
  if (!rem.is_zero()) throw std::domain_error("exact_quotient: division leaves a remainder");
  return quot;
}

}  // namespace orderlex
