// End-to-end acceptance checks. Each criterion prints one PASS/FAIL line
// with its wall time; the exit status is nonzero when any criterion fails.
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "oracles.hpp"
#include "schur/chain_complex.hpp"
#include "schur/characters.hpp"
#include "schur/coefficients.hpp"
#include "schur/error.hpp"
#include "schur/expr.hpp"
#include "schur/group_algebra.hpp"
#include "schur/matrix.hpp"
#include "schur/motive.hpp"
#include "schur/partition.hpp"
#include "schur/polynomial.hpp"
#include "schur/super_space.hpp"

namespace {

using schur::ChainComplex;
using schur::ChainMap;
using schur::Integer;
using schur::Partition;
using schur::Polynomial;
using schur::QMatrix;
using schur::Rational;
using schur::SuperVectorSpace;

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

// 1. Young symmetrizers are idempotent for every shape of weight <= 5.
void criterion_idempotent() {
  for (int n = 1; n <= 5; ++n)
    for (const Partition& la : schur::partitions_of(n)) {
      schur::GroupAlgebraElement c = schur::young_symmetrizer(la);
      expect(c * c == c, "symmetrizer of " + la.to_string() + " is not idempotent");
    }
}

// 2. Character tables: dimension sums, row orthogonality, and the standard
//    degree-3 character against explicit matrices.
void criterion_characters() {
  for (int n = 1; n <= 7; ++n) {
    schur::CharacterTable t = schur::character_table(n);
    std::size_t classes = t.labels.size();
    std::size_t id_col = classes - 1;  // (1,...,1) is last in reverse-lex order
    expect(t.labels[id_col] == Partition(std::vector<int>(n, 1)),
           "identity class is not the last column");
    Integer fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    Integer dim_sum = 0;
    for (std::size_t row = 0; row < classes; ++row) {
      long long d = t.values[row][id_col];
      expect(d == schur::irrep_dimension(t.labels[row]),
             "table dimension disagrees with the hook length formula");
      dim_sum += static_cast<long>(d * d);
    }
    expect(dim_sum == fact, "dimensions squared do not sum to n! for n=" +
                                std::to_string(n));
    if (n > 6) continue;
    for (std::size_t a = 0; a < classes; ++a)
      for (std::size_t b = a; b < classes; ++b) {
        Integer acc = 0;
        for (std::size_t j = 0; j < classes; ++j)
          acc += t.sizes[j] * static_cast<long>(t.values[a][j] * t.values[b][j]);
        Integer expected = (a == b) ? fact : Integer(0);
        expect(acc == expected, "rows " + t.labels[a].to_string() + ", " +
                                    t.labels[b].to_string() +
                                    " are not orthonormal at n=" + std::to_string(n));
      }
  }
  std::array<long long, 3> std_char = oracle::s3_standard_character();
  Partition hook({2, 1});
  expect(schur::character_value(hook, Partition({1, 1, 1})) == std_char[0] &&
             schur::character_value(hook, Partition({2, 1})) == std_char[1] &&
             schur::character_value(hook, Partition({3})) == std_char[2],
         "the (2,1) character differs from the explicit standard representation");
}

// 3. On super spaces the rectangle criterion matches the computed rank.
void criterion_rectangle() {
  const int spaces[][2] = {{0, 0}, {1, 0}, {0, 1}, {1, 1},
                           {2, 0}, {0, 2}, {2, 1}, {1, 2}};
  for (auto [p, q] : spaces) {
    SuperVectorSpace space{p, q};
    for (int n = 1; n <= 5; ++n)
      for (const Partition& la : schur::partitions_of(n)) {
        bool by_rank = schur::schur_dimension(space, la).total() == 0;
        bool by_rect = schur::vanishes_by_rectangle(space, la);
        expect(by_rank == by_rect, "criteria disagree on (" + std::to_string(p) +
                                       "|" + std::to_string(q) + ") at " +
                                       la.to_string());
      }
  }
}

// 4. Vanishing on the projective line: the formal calculus, the containment
//    test and the super-space rank all agree.
void criterion_projective_line() {
  schur::FormalObject line = schur::projective_space(1);
  SuperVectorSpace space{2, 0};
  Partition column({1, 1, 1});
  for (int n = 1; n <= 5; ++n)
    for (const Partition& la : schur::partitions_of(n)) {
      bool calculus = schur::vanishes(line, la);
      bool containment = la.contains(column);
      bool rank = schur::schur_dimension(space, la).total() == 0;
      expect(calculus == containment && containment == rank,
             "projective line verdicts disagree at " + la.to_string());
    }
}

// 5. Decomposition tables are consistent with tableau-count dimensions.
void criterion_decompositions() {
  const int dims[][2] = {{1, 1}, {1, 2}, {2, 2}, {2, 3}};
  for (int n = 1; n <= 4; ++n)
    for (const Partition& la : schur::partitions_of(n)) {
      schur::Decomposition sum = schur::decompose_schur_of_sum(la);
      schur::Decomposition tensor = schur::decompose_schur_of_tensor(la);
      for (const auto& term : sum.terms)
        expect(term.multiplicity ==
                   schur::lr_coefficient(la, term.first, term.second),
               "sum table disagrees with the point query at " + la.to_string());
      for (const auto& term : tensor.terms)
        expect(term.multiplicity ==
                   schur::kronecker_coefficient(la, term.first, term.second),
               "tensor table disagrees with the point query at " + la.to_string());
      for (auto [a, b] : dims) {
        long long sum_lhs = oracle::ssyt_count(la.parts(), a + b);
        long long sum_rhs = 0;
        for (const auto& term : sum.terms)
          sum_rhs += term.multiplicity * oracle::ssyt_count(term.first.parts(), a) *
                     oracle::ssyt_count(term.second.parts(), b);
        expect(sum_lhs == sum_rhs, "sum rule fails at " + la.to_string() + " with (" +
                                       std::to_string(a) + "," + std::to_string(b) +
                                       ")");
        long long tensor_lhs = oracle::ssyt_count(la.parts(), a * b);
        long long tensor_rhs = 0;
        for (const auto& term : tensor.terms)
          tensor_rhs += term.multiplicity *
                        oracle::ssyt_count(term.first.parts(), a) *
                        oracle::ssyt_count(term.second.parts(), b);
        expect(tensor_lhs == tensor_rhs, "tensor rule fails at " + la.to_string() +
                                             " with (" + std::to_string(a) + "," +
                                             std::to_string(b) + ")");
      }
    }
}

// 6. Symmetric, exterior and hook functors of the two-term complex
//    [x] : C_1 -> C_0 over Q[x], with exact ranks and torsion.
void criterion_x_complex() {
  Polynomial x = Polynomial::parse("x");
  schur::PolyMatrix d(1, 1);
  d.at(0, 0) = x;
  ChainComplex<Polynomial> c(0, {1, 1}, {d});

  struct Case {
    Partition shape;
    int lo;
    int torsion_degree;
  };
  const Case cases[] = {
      {Partition({2}), 0, 0},       {Partition({1, 1}), 1, 1},
      {Partition({3}), 0, 0},       {Partition({1, 1, 1}), 2, 2},
      {Partition({2, 1}), 1, 1},
  };
  for (const Case& k : cases) {
    ChainComplex<Polynomial> s = schur::apply_symmetrizer(c, k.shape);
    expect(s.lo() == k.lo && s.hi() == k.lo + 1 && s.rank(k.lo) == 1 &&
               s.rank(k.lo + 1) == 1,
           "ranks of S_" + k.shape.to_string() + " are off");
    schur::Homology<Polynomial> h = schur::homology(s);
    for (const auto& [degree, piece] : h.pieces) {
      expect(piece.free_rank == 0,
             "free homology appears in S_" + k.shape.to_string());
      if (degree == k.torsion_degree)
        expect(piece.torsion == std::vector<Polynomial>{x},
               "expected x-torsion at degree " + std::to_string(degree) + " in S_" +
                   k.shape.to_string());
      else
        expect(piece.torsion.empty(),
               "unexpected torsion in S_" + k.shape.to_string());
    }
  }
}

// 7. Symmetrizer images on the (1|1) space: (2,2) collapses, (2,1) does not.
void criterion_super_collapse() {
  SuperVectorSpace space{1, 1};
  QMatrix square = schur::apply_element(space, schur::young_symmetrizer(Partition({2, 2})));
  expect(schur::rank_of(square) == 0, "(2,2) does not annihilate the (1|1) space");
  QMatrix hook = schur::apply_element(space, schur::young_symmetrizer(Partition({2, 1})));
  expect(schur::rank_of(hook) > 0, "(2,1) unexpectedly annihilates the (1|1) space");
}

// 8. Tensor power filtrations of split extensions produce binomial ranks.
void criterion_filtration() {
  ChainComplex<Rational> point(0, {1}, {});
  ChainComplex<Rational> plane(0, {2}, {});
  std::map<int, QMatrix> inc_m;
  QMatrix in(2, 1);
  in.at(0, 0) = Rational(1);
  inc_m.emplace(0, in);
  std::map<int, QMatrix> proj_m;
  QMatrix pr(1, 2);
  pr.at(0, 1) = Rational(1);
  proj_m.emplace(0, pr);
  ChainMap<Rational> inc(point, plane, inc_m);
  ChainMap<Rational> proj(plane, point, proj_m);
  for (int n = 1; n <= 3; ++n) {
    schur::Filtration<Rational> f = schur::extension_filtration(inc, proj, n);
    long long running = 0;
    for (int level = 0; level <= n; ++level) {
      running += oracle::binomial(n, level);
      auto& ranks = f.level_ranks[static_cast<std::size_t>(level)];
      auto it = ranks.find(0);
      expect(it != ranks.end() && it->second == running,
             "level " + std::to_string(level) + " rank is not a binomial sum");
      auto& graded = f.graded_ranks[static_cast<std::size_t>(level)];
      expect(graded.at(0) == oracle::binomial(n, level),
             "graded rank is not binomial at level " + std::to_string(level));
    }
  }

  // The same count appears degree by degree when P sits in degree 1.
  ChainComplex<Rational> shifted_p(1, {1}, {});
  ChainComplex<Rational> two(0, {1, 1}, {QMatrix(1, 1)});
  std::map<int, QMatrix> inc2_m;
  inc2_m.emplace(1, QMatrix::identity(1));
  std::map<int, QMatrix> proj2_m;
  proj2_m.emplace(0, QMatrix::identity(1));
  ChainMap<Rational> inc2(shifted_p, two, inc2_m);
  ChainMap<Rational> proj2(two, point, proj2_m);
  for (int n = 1; n <= 3; ++n) {
    schur::Filtration<Rational> f = schur::extension_filtration(inc2, proj2, n);
    for (int level = 0; level <= n; ++level) {
      const auto& graded = f.graded_ranks[static_cast<std::size_t>(level)];
      for (const auto& [degree, r] : graded) {
        long long want = (degree == n - level) ? oracle::binomial(n, level) : 0;
        expect(r == want, "graded piece sits in the wrong degree");
      }
    }
  }
}

// 9. Across a split triangle P -> X -> Q the functor ranks of X match the
//    Littlewood-Richardson expansion over the two ends.
void criterion_triangle() {
  auto graded_ranks = [](const ChainComplex<Rational>& c) {
    std::map<int, long long> out;
    for (int k = c.lo(); k <= c.hi(); ++k)
      if (c.rank(k) != 0) out[k] = c.rank(k);
    return out;
  };
  auto functor_ranks = [&](const ChainComplex<Rational>& c, const Partition& la) {
    std::map<int, long long> out;
    if (la.weight() == 0) {
      out[0] = 1;
      return out;
    }
    return graded_ranks(schur::apply_symmetrizer(c, la));
  };

  std::vector<std::pair<ChainComplex<Rational>, ChainComplex<Rational>>> pairs;
  QMatrix unit = QMatrix::identity(1);
  pairs.emplace_back(ChainComplex<Rational>(0, {1, 1}, {unit}),
                     ChainComplex<Rational>(0, {1}, {}));
  pairs.emplace_back(ChainComplex<Rational>(0, {2}, {}),
                     ChainComplex<Rational>(0, {1, 1}, {QMatrix(1, 1)}));

  for (const auto& [p, q] : pairs) {
    ChainComplex<Rational> p1 = schur::shift(p, 1);
    ChainComplex<Rational> x = schur::direct_sum(p1, q);
    for (int n = 1; n <= 3; ++n)
      for (const Partition& la : schur::partitions_of(n)) {
        std::map<int, long long> lhs = functor_ranks(x, la);
        std::map<int, long long> rhs;
        for (const auto& term : schur::decompose_schur_of_sum(la).terms) {
          std::map<int, long long> left = functor_ranks(p1, term.first);
          std::map<int, long long> right = functor_ranks(q, term.second);
          for (const auto& [da, ra] : left)
            for (const auto& [db, rb] : right)
              rhs[da + db] += term.multiplicity * ra * rb;
        }
        for (auto it = rhs.begin(); it != rhs.end();)
          it = it->second == 0 ? rhs.erase(it) : std::next(it);
        expect(lhs == rhs, "additivity fails at " + la.to_string());
      }
  }
}

// 10. The blowup of the projective plane at a point is certified with the
//     single witness (1,1,1,1,1), in agreement with the rank oracle on (4|0).
void criterion_blowup() {
  schur::FormalObject blown =
      schur::blowup(schur::projective_space(2), schur::unit_object(), 2);
  schur::FinitenessReport r = schur::finiteness_report(blown);
  expect(r.schur_finite && r.kimura_certified && r.status == "certified",
         "blowup report is not certified");
  expect(r.p == 4 && r.q == 0, "blowup report has the wrong parity split");
  expect(r.witnesses == std::vector<Partition>{Partition({1, 1, 1, 1, 1})},
         "blowup witnesses are not exactly {(1,1,1,1,1)}");
  SuperVectorSpace space{4, 0};
  for (int n = 1; n <= 5; ++n)
    for (const Partition& la : schur::partitions_of(n))
      expect(schur::vanishes(blown, la) ==
                 (schur::schur_dimension(space, la).total() == 0),
             "calculus and rank oracle disagree at " + la.to_string());
}

// 11. At least ten thousand random expression trees survive printing and
//     reparsing unchanged.
struct Rng {
  unsigned state;
  explicit Rng(unsigned seed) : state(seed) {}
  int next(int bound) {
    state = state * 1664525u + 1013904223u;
    return static_cast<int>((state >> 16) % static_cast<unsigned>(bound));
  }
};

template <class N>
schur::ExprPtr mk(N node) {
  return std::make_shared<const schur::Expr>(schur::Expr{std::move(node)});
}

Partition random_shape(Rng& rng) {
  std::vector<int> parts;
  int rows = 1 + rng.next(3);
  int prev = 1 + rng.next(4);
  for (int i = 0; i < rows; ++i) {
    parts.push_back(prev);
    prev = 1 + rng.next(prev);
  }
  return Partition(std::move(parts));
}

schur::ExprPtr random_tree(Rng& rng, int depth) {
  static const char* names[] = {"h1", "m", "a2", "motive", "x_part"};
  if (depth == 0) {
    switch (rng.next(7)) {
      case 0: return mk(schur::UnitNode{});
      case 1: return mk(schur::LefschetzNode{});
      case 2: return mk(schur::EvenLinesNode{rng.next(6)});
      case 3: return mk(schur::OddLinesNode{rng.next(6)});
      case 4: return mk(schur::NamedAtomNode{names[rng.next(5)], false, {}});
      case 5: return mk(schur::PresetNode{schur::PresetKind::ProjectiveSpace, rng.next(5)});
      default: return mk(schur::PresetNode{schur::PresetKind::Curve, rng.next(4)});
    }
  }
  switch (rng.next(6)) {
    case 0:
      return mk(schur::DirectSumNode{random_tree(rng, depth - 1), random_tree(rng, depth - 1)});
    case 1:
      return mk(schur::TensorNode{random_tree(rng, depth - 1), random_tree(rng, depth - 1)});
    case 2:
      return mk(schur::ShiftNode{rng.next(7) - 3, random_tree(rng, depth - 1)});
    case 3:
      return mk(schur::SchurApplyNode{random_shape(rng), random_tree(rng, depth - 1)});
    case 4:
      return mk(schur::SymPowerNode{1 + rng.next(3), random_tree(rng, depth - 1)});
    default:
      return mk(schur::WedgePowerNode{1 + rng.next(3), random_tree(rng, depth - 1)});
  }
}

void criterion_roundtrip() {
  Rng rng(97531u);
  for (int trial = 0; trial < 10000; ++trial) {
    schur::ExprPtr tree = random_tree(rng, 1 + trial % 5);
    std::string text = schur::print_expr(*tree);
    schur::ExprPtr back = schur::parse_expr(text);
    expect(*tree == *back, "round trip changed: " + text);
  }
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    void (*run)();
  };
  const Entry entries[] = {
      {"Young symmetrizers square to themselves up to weight 5", criterion_idempotent},
      {"character tables: dimensions, orthogonality, standard character",
       criterion_characters},
      {"rectangle criterion matches computed ranks on small super spaces",
       criterion_rectangle},
      {"projective line vanishing: calculus, containment and ranks agree",
       criterion_projective_line},
      {"decomposition tables respect tableau-count dimensions", criterion_decompositions},
      {"functors of the two-term x complex have exact ranks and torsion",
       criterion_x_complex},
      {"symmetrizer images on (1|1): (2,2) collapses, (2,1) survives",
       criterion_super_collapse},
      {"tensor power filtration ranks are binomial", criterion_filtration},
      {"functor ranks are additive across split triangles", criterion_triangle},
      {"blowup of the plane at a point is certified with witness (1,1,1,1,1)",
       criterion_blowup},
      {"ten thousand random expressions survive print and reparse",
       criterion_roundtrip},
  };

  int failures = 0;
  int index = 0;
  for (const Entry& entry : entries) {
    ++index;
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      entry.run();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  criterion %2d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", index,
                entry.name, secs);
    if (!ok) {
      std::printf("      %s\n", detail.c_str());
      ++failures;
    }
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(sizeof(entries) / sizeof(entries[0])) - failures,
              sizeof(entries) / sizeof(entries[0]));
  return failures == 0 ? 0 : 1;
}
