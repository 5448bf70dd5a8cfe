#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "schur/error.hpp"
#include "schur/expr.hpp"
#include "schur/motive.hpp"
#include "schur/partition.hpp"

using schur::DirectSumNode;
using schur::EvalResult;
using schur::evaluate;
using schur::Expr;
using schur::ExprPtr;
using schur::FormalObject;
using schur::LefschetzNode;
using schur::NamedAtomNode;
using schur::parse_expr;
using schur::Partition;
using schur::PresetKind;
using schur::PresetNode;
using schur::print_expr;
using schur::SchurApplyNode;
using schur::SchurVerdict;
using schur::TensorNode;
using schur::UnitNode;

namespace {

template <class N>
ExprPtr mk(N node) {
  return std::make_shared<const Expr>(Expr{std::move(node)});
}

const SchurVerdict& as_verdict(const EvalResult& r) {
  return std::get<SchurVerdict>(r);
}

const FormalObject& as_object(const EvalResult& r) {
  return std::get<FormalObject>(r);
}

std::size_t offset_of_failure(const std::string& text) {
  try {
    parse_expr(text);
  } catch (const schur::ParseError& e) {
    return e.offset();
  }
  return static_cast<std::size_t>(-1);
}

struct Rng {
  unsigned state = 0;
  explicit Rng(unsigned seed) : state(seed) {}
  int next(int bound) {
    state = state * 1664525u + 1013904223u;
    return static_cast<int>((state >> 16) % static_cast<unsigned>(bound));
  }
};

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

ExprPtr random_tree(Rng& rng, int depth) {
  static const char* names[] = {"h1", "m", "a2", "motive", "x_part"};
  if (depth == 0) {
    switch (rng.next(7)) {
      case 0: return mk(UnitNode{});
      case 1: return mk(LefschetzNode{});
      case 2: return mk(schur::EvenLinesNode{rng.next(6)});
      case 3: return mk(schur::OddLinesNode{rng.next(6)});
      case 4: return mk(NamedAtomNode{names[rng.next(5)], false, {}});
      case 5: return mk(PresetNode{PresetKind::ProjectiveSpace, rng.next(5)});
      default: return mk(PresetNode{PresetKind::Curve, rng.next(4)});
    }
  }
  switch (rng.next(6)) {
    case 0:
      return mk(DirectSumNode{random_tree(rng, depth - 1), random_tree(rng, depth - 1)});
    case 1:
      return mk(TensorNode{random_tree(rng, depth - 1), random_tree(rng, depth - 1)});
    case 2:
      return mk(schur::ShiftNode{rng.next(7) - 3, random_tree(rng, depth - 1)});
    case 3:
      return mk(SchurApplyNode{random_shape(rng), random_tree(rng, depth - 1)});
    case 4:
      return mk(schur::SymPowerNode{1 + rng.next(3), random_tree(rng, depth - 1)});
    default:
      return mk(schur::WedgePowerNode{1 + rng.next(3), random_tree(rng, depth - 1)});
  }
}

}  // namespace

TEST_CASE("parsing pinned expressions") {
  ExprPtr e = parse_expr("S[1,1,1](1 (+) L)");
  const auto& apply = std::get<SchurApplyNode>(e->node);
  CHECK(apply.lambda == Partition({1, 1, 1}));
  const auto& sum = std::get<DirectSumNode>(apply.inner->node);
  CHECK(std::holds_alternative<UnitNode>(sum.lhs->node));
  CHECK(std::holds_alternative<LefschetzNode>(sum.rhs->node));

  ExprPtr w = parse_expr("wedge^3(P(1))");
  const auto& wedge = std::get<schur::WedgePowerNode>(w->node);
  CHECK(wedge.power == 3);
  const auto& preset = std::get<PresetNode>(wedge.inner->node);
  CHECK(preset.kind == PresetKind::ProjectiveSpace);
  CHECK(preset.param == 1);

  ExprPtr ident = parse_expr("x_part");
  CHECK(std::get<NamedAtomNode>(ident->node).name == "x_part");
}

TEST_CASE("tensor binds tighter than sum") {
  ExprPtr e = parse_expr("1 (+) L (x) L");
  const auto& sum = std::get<DirectSumNode>(e->node);
  CHECK(std::holds_alternative<UnitNode>(sum.lhs->node));
  CHECK(std::holds_alternative<TensorNode>(sum.rhs->node));

  ExprPtr grouped = parse_expr("(1 (+) L) (x) L");
  const auto& prod = std::get<TensorNode>(grouped->node);
  CHECK(std::holds_alternative<DirectSumNode>(prod.lhs->node));

  // Both associate to the left.
  ExprPtr chain = parse_expr("1 (+) L (+) ev(2)");
  const auto& outer = std::get<DirectSumNode>(chain->node);
  CHECK(std::holds_alternative<DirectSumNode>(outer.lhs->node));
  CHECK(std::holds_alternative<schur::EvenLinesNode>(outer.rhs->node));
}

TEST_CASE("whitespace is insignificant") {
  CHECK(*parse_expr("1(+)L") == *parse_expr("  1  ( + )  L  "));
  CHECK(*parse_expr("S[2,1](ev(2))") == *parse_expr("S[ 2 , 1 ] ( ev( 2 ) )"));
  CHECK(*parse_expr("shift^-2(L)") == *parse_expr("shift^ -2 ( L )"));
}

TEST_CASE("printing uses minimal parentheses") {
  CHECK(print_expr(*parse_expr("1 (+) L (x) L")) == "1 (+) L (x) L");
  CHECK(print_expr(*parse_expr("(1 (+) L) (x) L")) == "(1 (+) L) (x) L");
  CHECK(print_expr(*parse_expr("1 (+) (L (+) ev(1))")) == "1 (+) (L (+) ev(1))");
  CHECK(print_expr(*parse_expr("Sym^2(1 (+) L)")) == "Sym^2(1 (+) L)");
  CHECK(print_expr(*parse_expr("shift^-1(odd(2))")) == "shift^-1(odd(2))");
  CHECK(print_expr(*parse_expr("S[3,1](m)")) == "S[3,1](m)");
  CHECK(print_expr(*parse_expr("curve(2) (x) P(0)")) == "curve(2) (x) P(0)");
}

TEST_CASE("random trees survive print and reparse") {
  Rng rng(20240817u);
  for (int trial = 0; trial < 400; ++trial) {
    ExprPtr tree = random_tree(rng, 1 + trial % 5);
    std::string text = print_expr(*tree);
    ExprPtr back = parse_expr(text);
    REQUIRE(*tree == *back);
    CHECK(print_expr(*back) == text);
  }
}

TEST_CASE("parse errors carry byte offsets") {
  CHECK(offset_of_failure("") == 0);
  CHECK(offset_of_failure("2") == 0);
  CHECK(offset_of_failure("1 1") == 2);
  CHECK(offset_of_failure("1 (+") == 2);
  CHECK(offset_of_failure("S[]") == 1);
  CHECK(offset_of_failure("S[2,3](1)") == 1);   // parts must weakly decrease
  CHECK(offset_of_failure("S[(1,1)](1)") == 2); // shapes use bare digits
  CHECK(offset_of_failure("Sym^0(1)") == 4);
  CHECK(offset_of_failure("Sym^-1(1)") == 4);
  CHECK(offset_of_failure("wedge^2 1") == 8);
  CHECK(offset_of_failure("ev(x)") == 3);
  CHECK(offset_of_failure("(1 (+) L") == 8);
  CHECK(offset_of_failure("shift^2(1") == 9);
}

TEST_CASE("evaluating formal objects") {
  CHECK(as_object(evaluate(*parse_expr("1 (+) L (x) L"))).display() == "1 (+) L^2");
  CHECK(as_object(evaluate(*parse_expr("P(2)"))).display() == "1 (+) L (+) L^2");
  CHECK(as_object(evaluate(*parse_expr("shift^-1(odd(2))"))).display() == "2*1[-1]");
  CHECK(as_object(evaluate(*parse_expr("m (+) m"))).display() == "2*m");
  CHECK(as_object(evaluate(*parse_expr("ev(2) (x) L"))).display() == "2*L");
  CHECK(as_object(evaluate(*parse_expr("curve(0)"))).display() == "1 (+) L");
}

TEST_CASE("evaluating Schur applications on line objects") {
  SchurVerdict v = as_verdict(evaluate(*parse_expr("S[1,1,1](P(1))")));
  CHECK(v.lambda == Partition({1, 1, 1}));
  CHECK(v.verdict == "vanishes");
  REQUIRE(v.has_dimension);
  CHECK(v.dimension.total() == 0);

  SchurVerdict sym = as_verdict(evaluate(*parse_expr("Sym^2(ev(1) (+) ev(1))")));
  CHECK(sym.verdict == "nonzero");
  REQUIRE(sym.has_dimension);
  CHECK(sym.dimension.even == 3);
  CHECK(sym.dimension.odd == 0);

  SchurVerdict wedge = as_verdict(evaluate(*parse_expr("wedge^2(P(1))")));
  CHECK(wedge.verdict == "nonzero");
  CHECK(wedge.dimension.total() == 1);

  SchurVerdict mixed = as_verdict(evaluate(*parse_expr("S[2,2](ev(1) (+) odd(1))")));
  CHECK(mixed.verdict == "vanishes");
  REQUIRE(mixed.has_dimension);
  CHECK(mixed.dimension == schur::GradedRank{0, 0});

  SchurVerdict odd_sym = as_verdict(evaluate(*parse_expr("Sym^3(odd(1))")));
  CHECK(odd_sym.verdict == "vanishes");
}

TEST_CASE("power sugar agrees with explicit shapes") {
  const char* operands[] = {"P(1)", "ev(2) (+) odd(1)", "odd(2)"};
  for (const char* operand : operands)
    for (int k = 1; k <= 4; ++k) {
      std::string base(operand);
      std::string sym_form = "Sym^" + std::to_string(k) + "(" + base + ")";
      std::string row_form = "S[" + std::to_string(k) + "](" + base + ")";
      CHECK(schur::eval_result_to_json(evaluate(*parse_expr(sym_form))) ==
            schur::eval_result_to_json(evaluate(*parse_expr(row_form))));

      std::string wedge_form = "wedge^" + std::to_string(k) + "(" + base + ")";
      std::string col_parts;
      for (int i = 0; i < k; ++i) col_parts += (i ? ",1" : "1");
      std::string col_form = "S[" + col_parts + "](" + base + ")";
      CHECK(schur::eval_result_to_json(evaluate(*parse_expr(wedge_form))) ==
            schur::eval_result_to_json(evaluate(*parse_expr(col_form))));
    }
}

TEST_CASE("opaque operands yield verdicts without dimensions") {
  SchurVerdict v = as_verdict(evaluate(*parse_expr("S[2](m)")));
  CHECK(v.verdict == "inconclusive");
  CHECK_FALSE(v.has_dimension);

  // A curve contains a non-line piece with a certificate: provable shapes
  // come back "vanishes", unprovable ones "inconclusive".
  SchurVerdict big = as_verdict(evaluate(*parse_expr("S[3,3,3](curve(1))")));
  CHECK(big.verdict == "vanishes");
  SchurVerdict small = as_verdict(evaluate(*parse_expr("S[2](curve(1))")));
  CHECK(small.verdict == "inconclusive");
}

TEST_CASE("Schur applications are terminal") {
  CHECK_THROWS_AS(evaluate(*parse_expr("S[1](1) (+) 1")), schur::ArgumentError);
  CHECK_THROWS_AS(evaluate(*parse_expr("Sym^2(S[1](1))")), schur::ArgumentError);
  CHECK_THROWS_AS(evaluate(*parse_expr("shift^1(wedge^2(L))")), schur::ArgumentError);
  CHECK_NOTHROW(evaluate(*parse_expr("S[2](1 (x) L)")));
}

TEST_CASE("evaluation limits suppress dimensions") {
  schur::EvalLimits tight;
  tight.dimension_cap = 4;
  SchurVerdict v = as_verdict(evaluate(*parse_expr("S[3](ev(3))"), tight));
  CHECK(v.verdict == "nonzero");  // rectangle criterion needs no dimensions
  CHECK_FALSE(v.has_dimension);

  schur::EvalLimits small_group;
  small_group.symmetrizer_cap = 2;
  SchurVerdict w = as_verdict(evaluate(*parse_expr("S[3](ev(3))"), small_group));
  CHECK_FALSE(w.has_dimension);
}

TEST_CASE("evaluation results serialize") {
  nlohmann::json obj = nlohmann::json::parse(
      schur::eval_result_to_json(evaluate(*parse_expr("1 (+) L"))));
  CHECK(obj.at("type") == "object");
  CHECK(obj.at("display") == "1 (+) L");
  CHECK(obj.at("atoms").size() == 2);

  nlohmann::json verdict = nlohmann::json::parse(
      schur::eval_result_to_json(evaluate(*parse_expr("Sym^2(P(1))"))));
  CHECK(verdict.at("type") == "verdict");
  CHECK(verdict.at("lambda") == "(2)");
  CHECK(verdict.at("verdict") == "nonzero");
  CHECK(verdict.at("dimension").at("even") == 3);
  CHECK(verdict.at("dimension").at("total") == 3);

  nlohmann::json open = nlohmann::json::parse(
      schur::eval_result_to_json(evaluate(*parse_expr("S[2](m)"))));
  CHECK(open.at("dimension").is_null());
}
