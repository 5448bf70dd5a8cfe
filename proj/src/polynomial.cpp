#include "schur/polynomial.hpp"

#include <cctype>

#include "schur/error.hpp"

namespace schur {

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

Polynomial Polynomial::x() { return monomial(1, 1); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
  if (degree < 0) throw ArgumentError("monomial degree must be nonnegative");
  Polynomial p;
  if (c == 0) return p;
  p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
  p.coeffs_.back() = c;
  return p;
}

Rational Polynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational Polynomial::leading() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  Polynomial out;
  out.coeffs_.resize(std::max(coeffs_.size(), rhs.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] += coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    out.coeffs_[i] += rhs.coeffs_[i];
  out.trim();
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  return *this + (-rhs);
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  Polynomial out;
  if (is_zero() || rhs.is_zero()) return out;
  out.coeffs_.assign(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out.coeffs_[i + j] += coeffs_[i] * rhs.coeffs_[j];
  out.trim();
  return out;
}

void Polynomial::divmod(const Polynomial& rhs, Polynomial& q, Polynomial& r) const {
  if (rhs.is_zero()) throw ArgumentError("polynomial division by zero");
  q = Polynomial();
  r = *this;
  while (!r.is_zero() && r.degree() >= rhs.degree()) {
    Rational c = r.leading() / rhs.leading();
    int d = r.degree() - rhs.degree();
    Polynomial t = monomial(c, d);
    q = q + t;
    r = r - t * rhs;
  }
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial out = *this;
  Rational lead = leading();
  for (auto& c : out.coeffs_) c /= lead;
  return out;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= degree(); ++k) {
    Rational c = coefficient(k);
    if (c == 0) continue;
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (out.empty()) {
      if (neg) out += '-';
    } else {
      out += neg ? "-" : "+";
    }
    if (k == 0) {
      out += rational_to_string(a);
    } else {
      if (a != 1) out += rational_to_string(a) + "*";
      out += 'x';
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

namespace {

class PolyParser {
public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  Polynomial run() {
    skip_ws();
    Polynomial total = parse_term(true);
    skip_ws();
    while (pos_ < text_.size()) {
      char op = text_[pos_];
      if (op != '+' && op != '-')
        throw ParseError("expected '+' or '-' between terms", pos_);
      ++pos_;
      skip_ws();
      Polynomial t = parse_term(false);
      total = (op == '+') ? total + t : total - t;
      skip_ws();
    }
    return total;
  }

private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  Rational parse_number() {
    std::size_t start = pos_;
    std::string digits;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      digits += text_[pos_++];
    if (digits.empty()) throw ParseError("expected a number", start);
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      std::string den;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        den += text_[pos_++];
      if (den.empty()) throw ParseError("expected a denominator", pos_);
      digits += "/" + den;
    }
    Rational x(digits);
    if (x.get_den() == 0) throw ParseError("zero denominator", start);
    x.canonicalize();
    return x;
  }

  int parse_exponent() {
    if (pos_ >= text_.size() || text_[pos_] != '^') return 1;
    ++pos_;
    std::size_t start = pos_;
    long v = 0;
    bool any = false;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 10000) throw ParseError("exponent too large", start);
      ++pos_;
      any = true;
    }
    if (!any) throw ParseError("expected an exponent", start);
    return static_cast<int>(v);
  }

  // term := ['-'|'+'] (number ['*' x-part] | x-part)
  Polynomial parse_term(bool allow_sign) {
    bool neg = false;
    if (allow_sign && pos_ < text_.size() &&
        (text_[pos_] == '+' || text_[pos_] == '-')) {
      neg = text_[pos_] == '-';
      ++pos_;
      skip_ws();
    }
    if (pos_ >= text_.size()) throw ParseError("expected a term", pos_);
    Rational coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      coeff = parse_number();
      have_coeff = true;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != 'x')
          throw ParseError("expected 'x' after '*'", pos_);
      }
    }
    int deg = 0;
    if (pos_ < text_.size() && text_[pos_] == 'x') {
      ++pos_;
      deg = parse_exponent();
    } else if (!have_coeff) {
      throw ParseError("expected a coefficient or 'x'", pos_);
    }
    if (neg) coeff = -coeff;
    return Polynomial::monomial(coeff, deg);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text) {
  return PolyParser(text).run();
}

}  // namespace schur
