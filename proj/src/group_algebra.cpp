#include "schur/group_algebra.hpp"

#include <algorithm>
#include <numeric>

#include "schur/characters.hpp"
#include "schur/error.hpp"

namespace schur {

GroupAlgebraElement::GroupAlgebraElement(int n) : n_(n) {
  if (n < 0) throw ArgumentError("negative group degree");
}

GroupAlgebraElement GroupAlgebraElement::identity(int n) {
  GroupAlgebraElement e(n);
  e.add_term(Permutation::identity(n), 1);
  return e;
}

Rational GroupAlgebraElement::coefficient(const Permutation& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GroupAlgebraElement::add_term(const Permutation& p, const Rational& c) {
  if (p.size() != n_)
    throw ArgumentError("permutation degree does not match the algebra");
  auto [it, inserted] = terms_.emplace(p, c);
  if (!inserted) it->second += c;
  if (it->second == 0) terms_.erase(it);
}

GroupAlgebraElement GroupAlgebraElement::operator+(
    const GroupAlgebraElement& rhs) const {
  if (n_ != rhs.n_) throw ArgumentError("mixing group algebras of different degrees");
  GroupAlgebraElement out = *this;
  for (const auto& [p, c] : rhs.terms_) out.add_term(p, c);
  return out;
}

GroupAlgebraElement GroupAlgebraElement::operator-(
    const GroupAlgebraElement& rhs) const {
  if (n_ != rhs.n_) throw ArgumentError("mixing group algebras of different degrees");
  GroupAlgebraElement out = *this;
  for (const auto& [p, c] : rhs.terms_) out.add_term(p, -c);
  return out;
}

GroupAlgebraElement GroupAlgebraElement::operator*(
    const GroupAlgebraElement& rhs) const {
  if (n_ != rhs.n_) throw ArgumentError("mixing group algebras of different degrees");
  GroupAlgebraElement out(n_);
  for (const auto& [p, a] : terms_)
    for (const auto& [q, b] : rhs.terms_) out.add_term(p * q, a * b);
  return out;
}

GroupAlgebraElement GroupAlgebraElement::scaled(const Rational& c) const {
  GroupAlgebraElement out(n_);
  if (c == 0) return out;
  for (const auto& [p, a] : terms_) out.add_term(p, a * c);
  return out;
}

std::string GroupAlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
      first = false;
    } else if (a < 0) {
      out += " - ";
      a = -a;
    } else {
      out += " + ";
    }
    out += rational_to_string(a) + "*" + p.to_cycle_string();
  }
  return out;
}

namespace {

// All permutations of {0..n-1} preserving each of the given index blocks.
std::vector<Permutation> block_preserving_group(int n,
                                                const std::vector<std::vector<int>>& blocks) {
  std::vector<Permutation> out;
  std::vector<std::vector<int>> arranged = blocks;  // current images per block
  for (auto& b : arranged) std::sort(b.begin(), b.end());

  // Odometer over per-block permutations.
  std::vector<std::vector<int>> current = arranged;
  while (true) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    for (std::size_t b = 0; b < blocks.size(); ++b)
      for (std::size_t k = 0; k < arranged[b].size(); ++k)
        img[static_cast<std::size_t>(arranged[b][k])] = current[b][k];
    out.push_back(Permutation(std::move(img)));

    std::size_t b = 0;
    while (b < current.size() &&
           !std::next_permutation(current[b].begin(), current[b].end()))
      ++b;
    if (b == current.size()) break;
  }
  return out;
}

}  // namespace

std::vector<Permutation> canonical_row_group(const Partition& lambda) {
  int n = lambda.weight();
  std::vector<std::vector<int>> rows;
  int next = 0;
  for (int i = 0; i < lambda.rows(); ++i) {
    std::vector<int> row;
    for (int j = 0; j < lambda.part(i); ++j) row.push_back(next++);
    rows.push_back(std::move(row));
  }
  return block_preserving_group(n, rows);
}

std::vector<Permutation> canonical_column_group(const Partition& lambda) {
  int n = lambda.weight();
  std::vector<std::vector<int>> cols;
  if (!lambda.empty()) {
    Partition conj = lambda.transposed();
    std::vector<int> row_start(static_cast<std::size_t>(lambda.rows()), 0);
    for (int i = 1; i < lambda.rows(); ++i)
      row_start[static_cast<std::size_t>(i)] =
          row_start[static_cast<std::size_t>(i - 1)] + lambda.part(i - 1);
    for (int j = 0; j < lambda.part(0); ++j) {
      std::vector<int> col;
      for (int i = 0; i < conj.part(j); ++i)
        col.push_back(row_start[static_cast<std::size_t>(i)] + j);
      cols.push_back(std::move(col));
    }
  }
  return block_preserving_group(n, cols);
}

GroupAlgebraElement young_symmetrizer(const Partition& lambda, int cap) {
  int n = lambda.weight();
  if (n == 0) throw ArgumentError("Young symmetrizer requires a nonempty shape");
  if (n > cap)
    throw SizeLimitError("symmetrizer degree " + std::to_string(n) +
                         " exceeds the cap of " + std::to_string(cap));
  Rational scale = Rational(Integer(static_cast<long>(irrep_dimension(lambda)))) /
                   Rational(factorial(n));
  GroupAlgebraElement c(n);
  for (const Permutation& sigma : canonical_row_group(lambda))
    for (const Permutation& tau : canonical_column_group(lambda))
      c.add_term(sigma * tau, tau.sign() > 0 ? scale : -scale);
  return c;
}

}  // namespace schur
