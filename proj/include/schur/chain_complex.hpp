#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "schur/group_algebra.hpp"
#include "schur/matrix.hpp"
#include "schur/partition.hpp"
#include "schur/super_space.hpp"

namespace schur {

/// A bounded chain complex of finite free modules with homological grading:
/// the differential d_k maps degree k to degree k - 1 and d*d = 0 is
/// validated on construction. Zero ranks at the ends are trimmed.
template <class R>
class ChainComplex {
public:
  ChainComplex() = default;

  /// ranks[i] is the rank in degree lo + i; diffs[i] is d_(lo+i+1), a matrix
  /// with ranks[i] rows and ranks[i+1] columns.
  ChainComplex(int lo, std::vector<int> ranks, std::vector<Matrix<R>> diffs)
      : lo_(lo), ranks_(std::move(ranks)), diffs_(std::move(diffs)) {
    if (!ranks_.empty() && diffs_.size() != ranks_.size() - 1)
      throw ArgumentError("one differential is required between adjacent degrees");
    for (std::size_t i = 0; i < diffs_.size(); ++i) {
      if (diffs_[i].rows() != ranks_[i] || diffs_[i].cols() != ranks_[i + 1])
        throw ArgumentError("differential shape does not match the ranks");
    }
    for (std::size_t i = 0; i + 1 < diffs_.size(); ++i) {
      if (!(diffs_[i] * diffs_[i + 1]).is_zero())
        throw ArgumentError("differentials do not compose to zero");
    }
    trim();
  }

  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(ranks_.size()) - 1; }
  bool is_zero() const { return ranks_.empty(); }

  int rank(int k) const {
    if (k < lo_ || k > hi()) return 0;
    return ranks_[static_cast<std::size_t>(k - lo_)];
  }

  long long total_rank() const {
    long long t = 0;
    for (int r : ranks_) t += r;
    return t;
  }

  /// d_k : C_k -> C_(k-1). Outside the stored range this is the zero matrix
  /// of the appropriate shape.
  Matrix<R> diff(int k) const {
    if (k > lo_ && k <= hi()) return diffs_[static_cast<std::size_t>(k - lo_ - 1)];
    return Matrix<R>(rank(k - 1), rank(k));
  }

  bool operator==(const ChainComplex&) const = default;

private:
  void trim() {
    while (!ranks_.empty() && ranks_.front() == 0) {
      ranks_.erase(ranks_.begin());
      if (!diffs_.empty()) diffs_.erase(diffs_.begin());
      ++lo_;
    }
    while (!ranks_.empty() && ranks_.back() == 0) {
      ranks_.pop_back();
      if (!diffs_.empty()) diffs_.pop_back();
    }
    if (ranks_.empty()) {
      lo_ = 0;
      diffs_.clear();
    }
  }

  int lo_ = 0;
  std::vector<int> ranks_;
  std::vector<Matrix<R>> diffs_;
};

/// A degreewise map of complexes; the chain property d f = f d is validated
/// on construction. Missing components are zero.
template <class R>
struct ChainMap {
  ChainComplex<R> src;
  ChainComplex<R> dst;
  std::map<int, Matrix<R>> components;

  ChainMap(ChainComplex<R> s, ChainComplex<R> d, std::map<int, Matrix<R>> comps)
      : src(std::move(s)), dst(std::move(d)), components(std::move(comps)) {
    for (const auto& [k, m] : components)
      if (m.rows() != dst.rank(k) || m.cols() != src.rank(k))
        throw ArgumentError("chain map component shape mismatch in degree " +
                            std::to_string(k));
    int lo = std::min(src.lo(), dst.lo());
    int hi = std::max(src.hi(), dst.hi());
    for (int k = lo; k <= hi + 1; ++k)
      if (!(dst.diff(k) * component(k) - component(k - 1) * src.diff(k)).is_zero())
        throw ArgumentError("map does not commute with the differentials");
  }

  Matrix<R> component(int k) const {
    auto it = components.find(k);
    if (it != components.end()) return it->second;
    return Matrix<R>(dst.rank(k), src.rank(k));
  }
};

/// Degree shift C[s]: (C[s])_k = C_(k-s), with the differential scaled by
/// (-1)^s. Odd shifts therefore flip the sign of every differential.
template <class R>
ChainComplex<R> shift(const ChainComplex<R>& c, int s) {
  if (c.is_zero()) return c;
  std::vector<int> ranks;
  std::vector<Matrix<R>> diffs;
  for (int k = c.lo(); k <= c.hi(); ++k) ranks.push_back(c.rank(k));
  for (int k = c.lo() + 1; k <= c.hi(); ++k) {
    Matrix<R> d = c.diff(k);
    if (s % 2 != 0) d = d.scaled(R(-1));
    diffs.push_back(std::move(d));
  }
  return ChainComplex<R>(c.lo() + s, std::move(ranks), std::move(diffs));
}

template <class R>
ChainComplex<R> direct_sum(const ChainComplex<R>& a, const ChainComplex<R>& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  int lo = std::min(a.lo(), b.lo());
  int hi = std::max(a.hi(), b.hi());
  std::vector<int> ranks;
  std::vector<Matrix<R>> diffs;
  for (int k = lo; k <= hi; ++k) ranks.push_back(a.rank(k) + b.rank(k));
  for (int k = lo + 1; k <= hi; ++k) {
    Matrix<R> d(a.rank(k - 1) + b.rank(k - 1), a.rank(k) + b.rank(k));
    Matrix<R> da = a.diff(k), db = b.diff(k);
    for (int i = 0; i < da.rows(); ++i)
      for (int j = 0; j < da.cols(); ++j) d.at(i, j) = da.at(i, j);
    for (int i = 0; i < db.rows(); ++i)
      for (int j = 0; j < db.cols(); ++j)
        d.at(a.rank(k - 1) + i, a.rank(k) + j) = db.at(i, j);
    diffs.push_back(std::move(d));
  }
  return ChainComplex<R>(lo, std::move(ranks), std::move(diffs));
}

/// Mapping cone of f : P -> Q, with the two structure maps of the degreewise
/// split sequence 0 -> Q -> cone(f) -> P[1] -> 0.
/// cone(f)_k = Q_k (+) P_(k-1) and d(q, p) = (dq + f(p), -dp).
template <class R>
struct ConeResult {
  ChainComplex<R> cone;
  ChainMap<R> inclusion;   // Q -> cone(f)
  ChainMap<R> projection;  // cone(f) -> P[1]
};

template <class R>
ConeResult<R> cone(const ChainMap<R>& f) {
  const ChainComplex<R>& p = f.src;
  const ChainComplex<R>& q = f.dst;
  int lo = std::min(q.lo(), p.lo() + 1);
  int hi = std::max(q.hi(), p.hi() + 1);
  if (q.is_zero() && p.is_zero()) {
    ChainComplex<R> zero;
    return {zero, ChainMap<R>(zero, zero, {}), ChainMap<R>(zero, zero, {})};
  }
  std::vector<int> ranks;
  std::vector<Matrix<R>> diffs;
  for (int k = lo; k <= hi; ++k) ranks.push_back(q.rank(k) + p.rank(k - 1));
  for (int k = lo + 1; k <= hi; ++k) {
    int rows = q.rank(k - 1) + p.rank(k - 2);
    int cols = q.rank(k) + p.rank(k - 1);
    Matrix<R> d(rows, cols);
    Matrix<R> dq = q.diff(k), dp = p.diff(k - 1), fk = f.component(k - 1);
    for (int i = 0; i < dq.rows(); ++i)
      for (int j = 0; j < dq.cols(); ++j) d.at(i, j) = dq.at(i, j);
    for (int i = 0; i < fk.rows(); ++i)
      for (int j = 0; j < fk.cols(); ++j) d.at(i, q.rank(k) + j) = fk.at(i, j);
    for (int i = 0; i < dp.rows(); ++i)
      for (int j = 0; j < dp.cols(); ++j)
        d.at(q.rank(k - 1) + i, q.rank(k) + j) = R(0) - dp.at(i, j);
    diffs.push_back(std::move(d));
  }
  ChainComplex<R> cone_complex(lo, std::move(ranks), std::move(diffs));

  std::map<int, Matrix<R>> inc;
  for (int k = q.lo(); k <= q.hi(); ++k) {
    Matrix<R> m(cone_complex.rank(k), q.rank(k));
    for (int j = 0; j < q.rank(k); ++j) m.at(j, j) = R(1);
    inc.emplace(k, std::move(m));
  }
  ChainComplex<R> shifted = shift(p, 1);
  std::map<int, Matrix<R>> proj;
  for (int k = shifted.lo(); k <= shifted.hi(); ++k) {
    Matrix<R> m(shifted.rank(k), cone_complex.rank(k));
    for (int j = 0; j < shifted.rank(k); ++j) m.at(j, q.rank(k) + j) = R(1);
    proj.emplace(k, std::move(m));
  }
  return {cone_complex, ChainMap<R>(q, cone_complex, std::move(inc)),
          ChainMap<R>(cone_complex, shifted, std::move(proj))};
}

/// Homology, degree by degree: a free rank and the list of nontrivial
/// torsion invariant factors (always empty over Q).
template <class R>
struct Homology {
  struct Piece {
    long long free_rank = 0;
    std::vector<R> torsion;
    bool operator==(const Piece&) const = default;
  };
  std::map<int, Piece> pieces;

  bool trivial() const {
    for (const auto& [k, piece] : pieces)
      if (piece.free_rank != 0 || !piece.torsion.empty()) return false;
    return true;
  }
  bool operator==(const Homology&) const = default;
};

template <class R>
Homology<R> homology(const ChainComplex<R>& c) {
  Homology<R> out;
  for (int k = c.lo(); k <= c.hi(); ++k) {
    int rank_out = rank_of(c.diff(k));
    std::vector<R> incoming = smith_normal_form(c.diff(k + 1));
    typename Homology<R>::Piece piece;
    piece.free_rank = c.rank(k) - rank_out - static_cast<int>(incoming.size());
    if (piece.free_rank < 0) throw Error("internal: negative homology rank");
    for (const R& f : incoming)
      if (RingOps<R>::euclid_size(f) > 0) piece.torsion.push_back(f);
    out.pieces.emplace(k, std::move(piece));
  }
  return out;
}

/// The n-th tensor power of a complex, carrying the signed permutation
/// action of S_n. Basis tuples are ordered lexicographically over the flat
/// element list of the base complex (degree-major).
template <class R>
class TensorPower {
public:
  TensorPower(const ChainComplex<R>& base, int n, long long cap = kDefaultDimCap)
      : base_(base), n_(n) {
    if (n < 1) throw ArgumentError("tensor power exponent must be positive");
    Integer size = 1;
    for (int k = 0; k < n; ++k) {
      size *= static_cast<long>(base.total_rank());
      if (size > static_cast<long>(cap))
        throw SizeLimitError("tensor power rank " + std::to_string(base.total_rank()) +
                             "^" + std::to_string(n) + " exceeds the cap of " +
                             std::to_string(cap));
    }
    for (int k = base.lo(); k <= base.hi(); ++k)
      for (int i = 0; i < base.rank(k); ++i) elements_.push_back({k, i});

    if (!elements_.empty()) {
      std::vector<int> tuple(static_cast<std::size_t>(n), 0);
      enumerate(tuple, 0);
    }
    build_total();
  }

  const ChainComplex<R>& total() const { return total_; }
  const ChainComplex<R>& base() const { return base_; }
  int n() const { return n_; }

  int basis_size(int degree) const {
    auto it = basis_.find(degree);
    return it == basis_.end() ? 0 : static_cast<int>(it->second.size());
  }

  /// Matrix of sigma on the degree-D piece. The sign over a tuple is
  /// (-1)^(sum of deg_k * deg_l over pairs k < l with sigma(k) > sigma(l)).
  Matrix<R> action(const Permutation& sigma, int degree) const {
    if (sigma.size() != n_) throw ArgumentError("permutation degree mismatch");
    auto it = basis_.find(degree);
    int m = basis_size(degree);
    Matrix<R> out(m, m);
    if (m == 0) return out;
    std::vector<int> image(static_cast<std::size_t>(n_));
    for (int col = 0; col < m; ++col) {
      const std::vector<int>& tuple = it->second[static_cast<std::size_t>(col)];
      for (int k = 0; k < n_; ++k)
        image[static_cast<std::size_t>(sigma(k))] = tuple[static_cast<std::size_t>(k)];
      long long swaps = 0;
      for (int k = 0; k < n_; ++k)
        for (int l = k + 1; l < n_; ++l)
          if (sigma(k) > sigma(l))
            swaps += static_cast<long long>(element_degree(tuple, k)) *
                     element_degree(tuple, l);
      int row = index_.at(image).second;
      out.at(row, col) = (swaps % 2 == 0) ? R(1) : R(-1);
    }
    return out;
  }

  Matrix<R> apply(const GroupAlgebraElement& a, int degree) const {
    if (a.degree() != n_) throw ArgumentError("group algebra degree mismatch");
    int m = basis_size(degree);
    Matrix<R> out(m, m);
    for (const auto& [sigma, coeff] : a.terms())
      out = out + action(sigma, degree).scaled(RingOps<R>::from_rational(coeff));
    return out;
  }

  /// Index of a tuple of flat element ids: (total degree, position).
  std::pair<int, int> tuple_index(const std::vector<int>& tuple) const {
    return index_.at(tuple);
  }

  const std::vector<std::vector<int>>& basis(int degree) const {
    static const std::vector<std::vector<int>> empty;
    auto it = basis_.find(degree);
    return it == basis_.end() ? empty : it->second;
  }

  int element_count() const { return static_cast<int>(elements_.size()); }
  int element_deg(int flat) const {
    return elements_[static_cast<std::size_t>(flat)].degree;
  }
  int element_pos(int flat) const {
    return elements_[static_cast<std::size_t>(flat)].index;
  }
  int flat_id(int degree, int pos) const {
    for (std::size_t i = 0; i < elements_.size(); ++i)
      if (elements_[i].degree == degree && elements_[i].index == pos)
        return static_cast<int>(i);
    throw ArgumentError("no such basis element");
  }

private:
  struct Element {
    int degree;
    int index;
  };

  int element_degree(const std::vector<int>& tuple, int k) const {
    return elements_[static_cast<std::size_t>(tuple[static_cast<std::size_t>(k)])].degree;
  }

  void enumerate(std::vector<int>& tuple, int pos) {
    if (pos == n_) {
      int degree = 0;
      for (int id : tuple) degree += elements_[static_cast<std::size_t>(id)].degree;
      auto& bucket = basis_[degree];
      index_.emplace(tuple, std::make_pair(degree, static_cast<int>(bucket.size())));
      bucket.push_back(tuple);
      return;
    }
    for (int id = 0; id < static_cast<int>(elements_.size()); ++id) {
      tuple[static_cast<std::size_t>(pos)] = id;
      enumerate(tuple, pos + 1);
    }
  }

  void build_total() {
    if (basis_.empty()) {
      total_ = ChainComplex<R>();
      return;
    }
    int lo = basis_.begin()->first;
    int hi = basis_.rbegin()->first;
    std::vector<int> ranks;
    for (int d = lo; d <= hi; ++d) ranks.push_back(basis_size(d));
    std::vector<Matrix<R>> diffs;
    for (int d = lo + 1; d <= hi; ++d) {
      Matrix<R> mat(basis_size(d - 1), basis_size(d));
      const auto& tuples = basis_[d];
      for (int col = 0; col < static_cast<int>(tuples.size()); ++col) {
        const std::vector<int>& tuple = tuples[static_cast<std::size_t>(col)];
        int sign = 1;
        for (int j = 0; j < n_; ++j) {
          const Element& e =
              elements_[static_cast<std::size_t>(tuple[static_cast<std::size_t>(j)])];
          Matrix<R> dk = base_.diff(e.degree);
          for (int r = 0; r < dk.rows(); ++r) {
            const R& coeff = dk.at(r, e.index);
            if (RingOps<R>::is_zero(coeff)) continue;
            std::vector<int> target = tuple;
            target[static_cast<std::size_t>(j)] = flat_id(e.degree - 1, r);
            int row = index_.at(target).second;
            R value = sign > 0 ? coeff : R(0) - coeff;
            mat.at(row, col) = mat.at(row, col) + value;
          }
          // The Koszul sign for pushing d past factor j.
          if (e.degree % 2 != 0) sign = -sign;
        }
      }
      diffs.push_back(std::move(mat));
    }
    total_ = ChainComplex<R>(lo, std::move(ranks), std::move(diffs));
  }

  ChainComplex<R> base_;
  int n_ = 0;
  std::vector<Element> elements_;
  std::map<int, std::vector<std::vector<int>>> basis_;
  std::map<std::vector<int>, std::pair<int, int>> index_;
  ChainComplex<R> total_;
};

/// Image of the Young symmetrizer on the n-th tensor power, presented with a
/// free basis per degree and the restricted differential. The extracted
/// echelon basis is checked to span the image exactly (E b = b for every
/// basis column b of an idempotent E) and the change of basis uses exact
/// division only.
template <class R>
ChainComplex<R> apply_symmetrizer(const ChainComplex<R>& c, const Partition& lambda,
                                  long long cap = kDefaultDimCap,
                                  int sym_cap = kDefaultSymmetrizerCap) {
  int n = lambda.weight();
  if (n == 0) throw ArgumentError("Schur functors require a nonempty shape");
  TensorPower<R> power(c, n, cap);
  const ChainComplex<R>& total = power.total();
  if (total.is_zero()) return total;
  GroupAlgebraElement sym = young_symmetrizer(lambda, sym_cap);

  std::map<int, Matrix<R>> images;  // echelon basis of the image per degree
  for (int d = total.lo(); d <= total.hi(); ++d) {
    Matrix<R> e = power.apply(sym, d);
    Matrix<R> basis = column_echelon_basis(e);
    if (!(e * basis == basis))
      throw Error("internal: symmetrizer image basis is not E-fixed");
    images.emplace(d, std::move(basis));
  }
  int lo = total.lo();
  std::vector<int> ranks;
  std::vector<Matrix<R>> diffs;
  for (int d = total.lo(); d <= total.hi(); ++d)
    ranks.push_back(images.at(d).cols());
  for (int d = total.lo() + 1; d <= total.hi(); ++d) {
    Matrix<R> mapped = total.diff(d) * images.at(d);
    Matrix<R> prev = images.at(d - 1);
    if (prev.cols() == 0) {
      if (!mapped.is_zero())
        throw Error("internal: differential leaves the symmetrizer image");
      diffs.push_back(Matrix<R>(0, mapped.cols()));
    } else {
      diffs.push_back(solve_in_column_basis(prev, mapped));
    }
  }
  return ChainComplex<R>(lo, std::move(ranks), std::move(diffs));
}

/// The standard filtration of X^(x)n attached to a degreewise split exact
/// sequence 0 -> P -> X -> Q -> 0: level i is spanned by all products with
/// n - i factors coming from P. Bases are echelon per degree; graded ranks
/// are the per-degree jumps.
template <class R>
struct Filtration {
  int n = 0;
  TensorPower<R> power;                         // of the total space X
  std::vector<std::map<int, Matrix<R>>> bases;  // level i, by degree
  std::vector<std::map<int, int>> level_ranks;
  std::vector<std::map<int, int>> graded_ranks;
};

namespace detail {

template <class R>
void validate_split_exact(const ChainMap<R>& inc, const ChainMap<R>& proj) {
  if (!(inc.dst == proj.src))
    throw ArgumentError("inclusion and projection must share the middle complex");
  const ChainComplex<R>& p = inc.src;
  const ChainComplex<R>& x = inc.dst;
  const ChainComplex<R>& q = proj.dst;
  int lo = std::min({p.lo(), x.lo(), q.lo()});
  int hi = std::max({p.hi(), x.hi(), q.hi()});
  for (int k = lo; k <= hi; ++k) {
    if (p.rank(k) + q.rank(k) != x.rank(k))
      throw ArgumentError("sequence is not exact: rank mismatch in degree " +
                          std::to_string(k));
    if (!(proj.component(k) * inc.component(k)).is_zero())
      throw ArgumentError("projection composed with inclusion is nonzero");
    std::vector<R> fi = smith_normal_form(inc.component(k));
    if (static_cast<int>(fi.size()) != p.rank(k))
      throw ArgumentError("inclusion is not injective in degree " + std::to_string(k));
    for (const R& f : fi)
      if (RingOps<R>::euclid_size(f) > 0)
        throw ArgumentError("sequence is not degreewise split");
    std::vector<R> fp = smith_normal_form(proj.component(k));
    if (static_cast<int>(fp.size()) != q.rank(k))
      throw ArgumentError("projection is not surjective in degree " + std::to_string(k));
    for (const R& f : fp)
      if (RingOps<R>::euclid_size(f) > 0)
        throw ArgumentError("sequence is not degreewise split");
  }
}

}  // namespace detail

template <class R>
Filtration<R> extension_filtration(const ChainMap<R>& inc, const ChainMap<R>& proj,
                                   int n, long long cap = kDefaultDimCap) {
  detail::validate_split_exact(inc, proj);
  const ChainComplex<R>& p = inc.src;
  const ChainComplex<R>& x = inc.dst;

  Filtration<R> out{n, TensorPower<R>(x, n, cap), {}, {}, {}};
  const TensorPower<R>& power = out.power;
  const ChainComplex<R>& total = power.total();

  // Flat list of the generators of P, expressed in X coordinates per degree.
  struct Generator {
    int degree;
    std::vector<R> coords;  // over the X basis in that degree
  };
  std::vector<Generator> p_gens;
  for (int k = p.lo(); k <= p.hi(); ++k) {
    Matrix<R> ik = inc.component(k);
    for (int j = 0; j < p.rank(k); ++j) {
      Generator g;
      g.degree = k;
      for (int i = 0; i < x.rank(k); ++i) g.coords.push_back(ik.at(i, j));
      p_gens.push_back(std::move(g));
    }
  }

  for (int level = 0; level <= n; ++level) {
    // Columns spanning F_level, grouped by total degree.
    std::map<int, std::vector<std::vector<R>>> columns;
    int from_p = n - level;

    // Every factor gets a concrete vector: a P generator image on the chosen
    // positions, a single X basis element elsewhere. Each full assignment
    // contributes one spanning column (a pure tensor).
    std::vector<int> p_assign(static_cast<std::size_t>(n), -1);  // into p_gens
    std::vector<int> x_assign(static_cast<std::size_t>(n), -1);  // flat element id

    auto expand = [&]() {
      std::vector<std::pair<std::vector<int>, R>> terms;  // (tuple, coeff)
      terms.push_back({std::vector<int>(), R(1)});
      for (int k = 0; k < n; ++k) {
        std::vector<std::pair<std::vector<int>, R>> next;
        if (p_assign[static_cast<std::size_t>(k)] < 0) {
          int flat = x_assign[static_cast<std::size_t>(k)];
          for (const auto& [tuple, coeff] : terms) {
            std::vector<int> t = tuple;
            t.push_back(flat);
            next.push_back({std::move(t), coeff});
          }
        } else {
          const Generator& g =
              p_gens[static_cast<std::size_t>(p_assign[static_cast<std::size_t>(k)])];
          for (int i = 0; i < static_cast<int>(g.coords.size()); ++i) {
            const R& ci = g.coords[static_cast<std::size_t>(i)];
            if (RingOps<R>::is_zero(ci)) continue;
            int flat = power.flat_id(g.degree, i);
            for (const auto& [tuple, coeff] : terms) {
              std::vector<int> t = tuple;
              t.push_back(flat);
              next.push_back({std::move(t), coeff * ci});
            }
          }
        }
        terms = std::move(next);
      }
      if (terms.empty()) return;  // a zero factor kills the tensor
      // A pure tensor of homogeneous vectors sits in one total degree.
      int degree = power.tuple_index(terms.front().first).first;
      std::vector<R> col(static_cast<std::size_t>(power.basis_size(degree)), R(0));
      for (const auto& [tuple, coeff] : terms) {
        int row = power.tuple_index(tuple).second;
        col[static_cast<std::size_t>(row)] = col[static_cast<std::size_t>(row)] + coeff;
      }
      columns[degree].push_back(std::move(col));
    };

    auto fill_x = [&](auto&& self, int k) -> void {
      if (k == n) {
        expand();
        return;
      }
      if (p_assign[static_cast<std::size_t>(k)] >= 0) {
        self(self, k + 1);
        return;
      }
      for (int flat = 0; flat < power.element_count(); ++flat) {
        x_assign[static_cast<std::size_t>(k)] = flat;
        self(self, k + 1);
      }
      x_assign[static_cast<std::size_t>(k)] = -1;
    };

    std::vector<int> positions;
    auto fill_gens = [&](auto&& self, std::size_t idx) -> void {
      if (idx == positions.size()) {
        fill_x(fill_x, 0);
        return;
      }
      for (int g = 0; g < static_cast<int>(p_gens.size()); ++g) {
        p_assign[static_cast<std::size_t>(positions[idx])] = g;
        self(self, idx + 1);
      }
      p_assign[static_cast<std::size_t>(positions[idx])] = -1;
    };
    auto choose = [&](auto&& self, int start, int remaining) -> void {
      if (remaining == 0) {
        fill_gens(fill_gens, 0);
        return;
      }
      for (int k = start; k <= n - remaining; ++k) {
        positions.push_back(k);
        self(self, k + 1, remaining - 1);
        positions.pop_back();
      }
    };
    choose(choose, 0, from_p);

    std::map<int, Matrix<R>> level_basis;
    std::map<int, int> ranks;
    for (int d = total.lo(); d <= total.hi(); ++d) {
      auto it = columns.find(d);
      int m = power.basis_size(d);
      int ncols = it == columns.end() ? 0 : static_cast<int>(it->second.size());
      Matrix<R> span(m, ncols);
      for (int j = 0; j < ncols; ++j)
        for (int i = 0; i < m; ++i)
          span.at(i, j) = it->second[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      Matrix<R> basis = column_echelon_basis(span);
      ranks[d] = basis.cols();
      level_basis.emplace(d, std::move(basis));
    }
    out.bases.push_back(std::move(level_basis));
    out.level_ranks.push_back(ranks);

    std::map<int, int> graded;
    for (const auto& [d, r] : ranks) {
      int prev = 0;
      if (level > 0) {
        auto pit = out.level_ranks[static_cast<std::size_t>(level - 1)].find(d);
        if (pit != out.level_ranks[static_cast<std::size_t>(level - 1)].end())
          prev = pit->second;
      }
      graded[d] = r - prev;
    }
    out.graded_ranks.push_back(std::move(graded));
  }
  return out;
}

}  // namespace schur
