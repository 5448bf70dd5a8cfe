#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "schur/error.hpp"
#include "schur/numeric.hpp"
#include "schur/polynomial.hpp"

namespace schur {

/// Ring operations used by the generic linear algebra below. Both supported
/// rings are Euclidean domains, which is what echelon reduction and Smith
/// normal form need.
template <class R>
struct RingOps;

template <>
struct RingOps<Rational> {
  static bool is_zero(const Rational& x) { return x == 0; }
  static int euclid_size(const Rational&) { return 0; }
  static void divmod(const Rational& a, const Rational& b, Rational& q, Rational& r) {
    q = a / b;
    r = 0;
  }
  /// x = unit * normal form; every nonzero rational is a unit.
  static Rational unit_part(const Rational& x) { return x; }
  static Rational from_rational(const Rational& x) { return x; }
  static std::string str(const Rational& x) { return rational_to_string(x); }
  static const char* ring_name() { return "Q"; }
};

template <>
struct RingOps<Polynomial> {
  static bool is_zero(const Polynomial& x) { return x.is_zero(); }
  static int euclid_size(const Polynomial& x) { return x.degree(); }
  static void divmod(const Polynomial& a, const Polynomial& b, Polynomial& q,
                     Polynomial& r) {
    a.divmod(b, q, r);
  }
  /// Normal forms are monic; the unit is the leading coefficient.
  static Polynomial unit_part(const Polynomial& x) { return Polynomial(x.leading()); }
  static Polynomial from_rational(const Rational& x) { return Polynomial(x); }
  static std::string str(const Polynomial& x) { return x.to_string(); }
  static const char* ring_name() { return "Q[x]"; }
};

/// Dense matrix over an exact ring, row-major.
template <class R>
class Matrix {
public:
  Matrix() = default;
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(checked_extent(rows, cols), R(0)) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = R(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  R& at(int r, int c) {
    return data_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                 static_cast<std::size_t>(c)];
  }
  const R& at(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                 static_cast<std::size_t>(c)];
  }

  bool is_zero() const {
    for (const R& x : data_)
      if (!RingOps<R>::is_zero(x)) return false;
    return true;
  }

  Matrix operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw ArgumentError("matrix shape mismatch in product");
    Matrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const R& a = at(i, k);
        if (RingOps<R>::is_zero(a)) continue;
        for (int j = 0; j < rhs.cols_; ++j) {
          const R& b = rhs.at(k, j);
          if (RingOps<R>::is_zero(b)) continue;
          out.at(i, j) = out.at(i, j) + a * b;
        }
      }
    return out;
  }

  Matrix operator+(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
      throw ArgumentError("matrix shape mismatch in sum");
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
      out.data_[i] = out.data_[i] + rhs.data_[i];
    return out;
  }

  Matrix operator-(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
      throw ArgumentError("matrix shape mismatch in difference");
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
      out.data_[i] = out.data_[i] - rhs.data_[i];
    return out;
  }

  Matrix scaled(const R& c) const {
    Matrix out = *this;
    for (R& x : out.data_) x = x * c;
    return out;
  }

  bool operator==(const Matrix& rhs) const = default;

private:
  static std::size_t checked_extent(int rows, int cols) {
    if (rows < 0 || cols < 0) throw ArgumentError("negative matrix dimension");
    return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<R> data_;
};

using QMatrix = Matrix<Rational>;
using PolyMatrix = Matrix<Polynomial>;

/// Columns of a and b side by side.
template <class R>
Matrix<R> concat_columns(const Matrix<R>& a, const Matrix<R>& b) {
  if (a.rows() != b.rows()) throw ArgumentError("row mismatch in column concat");
  Matrix<R> out(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b.at(i, j);
  }
  return out;
}

/// Basis of the column module as an echelon matrix: pivot rows strictly
/// increase column by column and each pivot entry is normalized (1 over Q,
/// monic over Q[x]). Column operations are unimodular, so the span is
/// preserved exactly; over a PID the result is a free basis of the image.
template <class R>
Matrix<R> column_echelon_basis(Matrix<R> m) {
  using Ops = RingOps<R>;
  int rows = m.rows(), cols = m.cols();
  auto col_axpy = [&](int dst, int src, const R& q) {
    // col_dst -= q * col_src
    for (int i = 0; i < rows; ++i) m.at(i, dst) = m.at(i, dst) - q * m.at(i, src);
  };
  auto col_swap = [&](int a, int b) {
    if (a == b) return;
    for (int i = 0; i < rows; ++i) std::swap(m.at(i, a), m.at(i, b));
  };
  int done = 0;
  std::vector<int> pivot_rows;
  for (int r = 0; r < rows && done < cols; ++r) {
    // Euclid across the active columns until at most one is nonzero at row r.
    while (true) {
      int best = -1;
      int second = -1;
      for (int c = done; c < cols; ++c) {
        if (Ops::is_zero(m.at(r, c))) continue;
        if (best == -1 ||
            Ops::euclid_size(m.at(r, c)) < Ops::euclid_size(m.at(r, best))) {
          second = best;
          best = c;
        } else if (second == -1) {
          second = c;
        }
      }
      if (best == -1 || second == -1) {
        if (best != -1) {
          col_swap(done, best);
          pivot_rows.push_back(r);
          ++done;
        }
        break;
      }
      for (int c = done; c < cols; ++c) {
        if (c == best || Ops::is_zero(m.at(r, c))) continue;
        R q, rem;
        Ops::divmod(m.at(r, c), m.at(r, best), q, rem);
        if (!Ops::is_zero(q)) col_axpy(c, best, q);
      }
    }
  }
  Matrix<R> basis(rows, done);
  for (int j = 0; j < done; ++j) {
    R unit = Ops::unit_part(m.at(pivot_rows[static_cast<std::size_t>(j)], j));
    for (int i = 0; i < rows; ++i) {
      R q, rem;
      Ops::divmod(m.at(i, j), unit, q, rem);
      if (!Ops::is_zero(rem)) throw Error("internal: unit division left a remainder");
      basis.at(i, j) = q;
    }
  }
  return basis;
}

template <class R>
int rank_of(const Matrix<R>& m) {
  return column_echelon_basis(m).cols();
}

/// Rank of [a | b]; used for span-membership tests.
template <class R>
int rank_of_concat(const Matrix<R>& a, const Matrix<R>& b) {
  return rank_of(concat_columns(a, b));
}

/// Nonzero invariant factors d_1 | d_2 | ... of the matrix, each normalized
/// (monic over Q[x], 1 over Q). Their count is the rank.
template <class R>
std::vector<R> smith_normal_form(Matrix<R> m) {
  using Ops = RingOps<R>;
  int rows = m.rows(), cols = m.cols();
  std::vector<R> factors;
  int t = 0;
  while (t < rows && t < cols) {
    // Find the entry of smallest Euclidean size in the remaining block.
    int pr = -1, pc = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (!Ops::is_zero(m.at(i, j)) &&
            (pr == -1 || Ops::euclid_size(m.at(i, j)) < Ops::euclid_size(m.at(pr, pc)))) {
          pr = i;
          pc = j;
        }
    if (pr == -1) break;
    for (int j = 0; j < cols; ++j) std::swap(m.at(t, j), m.at(pr, j));
    for (int i = 0; i < rows; ++i) std::swap(m.at(i, t), m.at(i, pc));

    bool clean = false;
    while (!clean) {
      clean = true;
      for (int j = t + 1; j < cols; ++j) {
        if (Ops::is_zero(m.at(t, j))) continue;
        R q, rem;
        Ops::divmod(m.at(t, j), m.at(t, t), q, rem);
        for (int i = 0; i < rows; ++i) m.at(i, j) = m.at(i, j) - q * m.at(i, t);
        if (!Ops::is_zero(rem)) {
          // Remainder is strictly smaller: swap it into the pivot and restart.
          for (int i = 0; i < rows; ++i) std::swap(m.at(i, t), m.at(i, j));
          clean = false;
        }
      }
      for (int i = t + 1; i < rows; ++i) {
        if (Ops::is_zero(m.at(i, t))) continue;
        R q, rem;
        Ops::divmod(m.at(i, t), m.at(t, t), q, rem);
        for (int j = 0; j < cols; ++j) m.at(i, j) = m.at(i, j) - q * m.at(t, j);
        if (!Ops::is_zero(rem)) {
          for (int j = 0; j < cols; ++j) std::swap(m.at(t, j), m.at(i, j));
          clean = false;
        }
      }
      if (!clean) continue;
      // Pivot must divide every remaining entry for the divisibility chain.
      for (int i = t + 1; i < rows && clean; ++i)
        for (int j = t + 1; j < cols && clean; ++j) {
          if (Ops::is_zero(m.at(i, j))) continue;
          R q, rem;
          Ops::divmod(m.at(i, j), m.at(t, t), q, rem);
          if (!Ops::is_zero(rem)) {
            for (int jj = 0; jj < cols; ++jj)
              m.at(t, jj) = m.at(t, jj) + m.at(i, jj);
            clean = false;
          }
        }
    }
    R unit = Ops::unit_part(m.at(t, t));
    R q, rem;
    Ops::divmod(m.at(t, t), unit, q, rem);
    factors.push_back(q);
    ++t;
  }
  return factors;
}

/// Solves basis * x = y for an echelon basis produced by
/// column_echelon_basis. Works column by column over the target matrix.
/// Throws Error when y is outside the span (over Q[x]: outside the module).
template <class R>
Matrix<R> solve_in_column_basis(const Matrix<R>& basis, const Matrix<R>& y) {
  using Ops = RingOps<R>;
  if (basis.rows() != y.rows()) throw ArgumentError("row mismatch in solve");
  std::vector<int> pivot_rows;
  pivot_rows.reserve(static_cast<std::size_t>(basis.cols()));
  int prev = -1;
  for (int j = 0; j < basis.cols(); ++j) {
    int r = 0;
    while (r < basis.rows() && Ops::is_zero(basis.at(r, j))) ++r;
    if (r == basis.rows() || r <= prev)
      throw ArgumentError("basis matrix is not echelon");
    pivot_rows.push_back(r);
    prev = r;
  }
  Matrix<R> x(basis.cols(), y.cols());
  for (int target = 0; target < y.cols(); ++target) {
    std::vector<R> rhs;
    rhs.reserve(static_cast<std::size_t>(y.rows()));
    for (int i = 0; i < y.rows(); ++i) rhs.push_back(y.at(i, target));
    for (int j = 0; j < basis.cols(); ++j) {
      int r = pivot_rows[static_cast<std::size_t>(j)];
      if (Ops::is_zero(rhs[static_cast<std::size_t>(r)])) continue;
      R q, rem;
      Ops::divmod(rhs[static_cast<std::size_t>(r)], basis.at(r, j), q, rem);
      if (!Ops::is_zero(rem))
        throw Error("internal: target is outside the basis span");
      for (int i = r; i < basis.rows(); ++i)
        rhs[static_cast<std::size_t>(i)] =
            rhs[static_cast<std::size_t>(i)] - q * basis.at(i, j);
      x.at(j, target) = q;
    }
    for (const R& v : rhs)
      if (!Ops::is_zero(v)) throw Error("internal: target is outside the basis span");
  }
  return x;
}

}  // namespace schur
