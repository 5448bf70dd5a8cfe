#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "schur/numeric.hpp"

namespace schur {

/// A polynomial in one variable x with rational coefficients, stored densely
/// by ascending degree with no trailing zero coefficients.
class Polynomial {
public:
  Polynomial() = default;
  Polynomial(int c) : Polynomial(Rational(c)) {}  // NOLINT: ring literals
  Polynomial(const Rational& c);

  static Polynomial x();
  static Polynomial monomial(const Rational& c, int degree);

  /// Parses sums of terms like "1", "-3/2", "x", "2*x^3", "-x^2".
  /// Throws ParseError with a byte offset.
  static Polynomial parse(std::string_view text);

  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  Rational coefficient(int k) const;
  Rational leading() const;

  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& rhs) const;
  bool operator==(const Polynomial& rhs) const = default;

  /// Euclidean division: *this = q * rhs + r with deg r < deg rhs.
  /// Throws ArgumentError when rhs is zero.
  void divmod(const Polynomial& rhs, Polynomial& q, Polynomial& r) const;

  /// Scales to leading coefficient 1; zero stays zero.
  Polynomial monic() const;

  /// Ascending-degree rendering: "1+2*x^3", "-x", "0".
  std::string to_string() const;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace schur
