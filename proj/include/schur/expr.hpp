#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "schur/motive.hpp"
#include "schur/partition.hpp"
#include "schur/super_space.hpp"

namespace schur {

struct Expr;

/// Expression trees are immutable and shared.
using ExprPtr = std::shared_ptr<const Expr>;

struct UnitNode {};
struct LefschetzNode {};
struct EvenLinesNode {
  int count = 0;
};
struct OddLinesNode {
  int count = 0;
};
struct NamedAtomNode {
  std::string name;
  bool odd = false;
  std::vector<Partition> certificates;  // empty when written in the surface syntax
};
struct DirectSumNode {
  ExprPtr lhs, rhs;
};
struct TensorNode {
  ExprPtr lhs, rhs;
};
struct ShiftNode {
  int amount = 0;
  ExprPtr inner;
};
struct SchurApplyNode {
  Partition lambda;
  ExprPtr inner;
};
struct SymPowerNode {
  int power = 0;
  ExprPtr inner;
};
struct WedgePowerNode {
  int power = 0;
  ExprPtr inner;
};
enum class PresetKind { ProjectiveSpace, Curve };
struct PresetNode {
  PresetKind kind = PresetKind::ProjectiveSpace;
  int param = 0;
};

struct Expr {
  std::variant<UnitNode, LefschetzNode, EvenLinesNode, OddLinesNode, NamedAtomNode,
               DirectSumNode, TensorNode, ShiftNode, SchurApplyNode, SymPowerNode,
               WedgePowerNode, PresetNode>
      node;
};

/// Deep structural equality.
bool operator==(const Expr& a, const Expr& b);
inline bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

/// Grammar, with '(x)' binding tighter than '(+)' and both left associative:
///   expr := prod ('(+)' prod)*
///   prod := term ('(x)' term)*
///   term := '1' | 'L' | 'ev(k)' | 'odd(k)' | 'S[p1,p2,...](expr)'
///         | 'Sym^k(expr)' | 'wedge^k(expr)' | 'shift^k(expr)'
///         | 'curve(g)' | 'P(n)' | identifier | '(' expr ')'
/// Whitespace is insignificant; shift powers may be negative; Sym and wedge
/// powers are at least 1. Errors carry byte offsets.
ExprPtr parse_expr(const std::string& text);

/// Minimal parentheses; parse_expr(print_expr(e)) reproduces e for every
/// tree the grammar can express.
std::string print_expr(const Expr& e);

/// Outcome of a Schur application. For operands made of lines the verdict
/// is exact ("vanishes" or "nonzero", by the rectangle criterion) and the
/// graded dimension is attached whenever the tensor power fits the caps.
/// For opaque operands the verdict is "vanishes" only when derivable from
/// certificates, otherwise "inconclusive".
struct SchurVerdict {
  Partition lambda;
  std::string verdict;  // "vanishes" | "nonzero" | "inconclusive"
  bool has_dimension = false;
  GradedRank dimension;
};

struct EvalLimits {
  long long dimension_cap = kDefaultDimCap;
  int symmetrizer_cap = kDefaultSymmetrizerCap;
};

using EvalResult = std::variant<FormalObject, SchurVerdict>;

/// Evaluates a tree to a formal object, or to a verdict when the outermost
/// node is S, Sym or wedge. Schur applications are terminal: their result
/// cannot feed another operator.
EvalResult evaluate(const Expr& e, const EvalLimits& limits = {});

std::string eval_result_to_json(const EvalResult& r);

}  // namespace schur
