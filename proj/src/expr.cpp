#include "schur/expr.hpp"

#include <cctype>
#include <string_view>

#include "json.hpp"
#include "schur/error.hpp"
#include "schur/numeric.hpp"

namespace schur {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool node_equal(const UnitNode&, const UnitNode&) { return true; }
bool node_equal(const LefschetzNode&, const LefschetzNode&) { return true; }
bool node_equal(const EvenLinesNode& a, const EvenLinesNode& b) {
  return a.count == b.count;
}
bool node_equal(const OddLinesNode& a, const OddLinesNode& b) {
  return a.count == b.count;
}
bool node_equal(const NamedAtomNode& a, const NamedAtomNode& b) {
  return a.name == b.name && a.odd == b.odd && a.certificates == b.certificates;
}
bool node_equal(const DirectSumNode& a, const DirectSumNode& b) {
  return *a.lhs == *b.lhs && *a.rhs == *b.rhs;
}
bool node_equal(const TensorNode& a, const TensorNode& b) {
  return *a.lhs == *b.lhs && *a.rhs == *b.rhs;
}
bool node_equal(const ShiftNode& a, const ShiftNode& b) {
  return a.amount == b.amount && *a.inner == *b.inner;
}
bool node_equal(const SchurApplyNode& a, const SchurApplyNode& b) {
  return a.lambda == b.lambda && *a.inner == *b.inner;
}
bool node_equal(const SymPowerNode& a, const SymPowerNode& b) {
  return a.power == b.power && *a.inner == *b.inner;
}
bool node_equal(const WedgePowerNode& a, const WedgePowerNode& b) {
  return a.power == b.power && *a.inner == *b.inner;
}
bool node_equal(const PresetNode& a, const PresetNode& b) {
  return a.kind == b.kind && a.param == b.param;
}

template <class N>
ExprPtr make(N node) {
  return std::make_shared<const Expr>(Expr{std::move(node)});
}

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr run() {
    ExprPtr e = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) {
      if (text_[pos_] == '(')
        throw ParseError("expected '(+)' or '(x)'", pos_);
      throw ParseError("unexpected trailing input", pos_);
    }
    return e;
  }

private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r'))
      ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  bool consume(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    skip_ws();
    if (!consume(c)) throw ParseError(std::string("expected '") + c + "' " + what, pos_);
  }

  /// Matches the three-character operator '(op)', allowing inner spaces.
  /// Rewinds completely on failure.
  bool match_operator(char op) {
    std::size_t save = pos_;
    skip_ws();
    if (!consume('(')) {
      pos_ = save;
      return false;
    }
    skip_ws();
    if (!consume(op)) {
      pos_ = save;
      return false;
    }
    skip_ws();
    if (!consume(')')) {
      pos_ = save;
      return false;
    }
    return true;
  }

  int parse_uint(const char* what) {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) throw ParseError(std::string("expected ") + what, start);
    if (pos_ - start > 8) throw ParseError("number too large", start);
    int value = 0;
    for (std::size_t i = start; i < pos_; ++i) value = value * 10 + (text_[i] - '0');
    return value;
  }

  int parse_signed(const char* what) {
    skip_ws();
    bool negative = consume('-');
    int value = parse_uint(what);
    return negative ? -value : value;
  }

  Partition parse_partition_literal() {
    skip_ws();
    std::size_t start = pos_;
    expect('[', "to open the shape");
    skip_ws();
    if (consume(']'))
      throw ParseError("a Schur application needs a nonempty shape", start);
    std::vector<int> parts;
    while (true) {
      parts.push_back(parse_uint("a part"));
      skip_ws();
      if (consume(',')) continue;
      expect(']', "to close the shape");
      break;
    }
    try {
      return Partition(std::move(parts));
    } catch (const ArgumentError& e) {
      throw ParseError(e.what(), start);
    }
  }

  ExprPtr parse_group_argument() {
    expect('(', "to open the argument");
    ExprPtr inner = parse_sum();
    expect(')', "to close the argument");
    return inner;
  }

  ExprPtr parse_sum() {
    ExprPtr lhs = parse_product();
    while (match_operator('+')) lhs = make(DirectSumNode{lhs, parse_product()});
    return lhs;
  }

  ExprPtr parse_product() {
    ExprPtr lhs = parse_term();
    while (match_operator('x')) lhs = make(TensorNode{lhs, parse_term()});
    return lhs;
  }

  ExprPtr parse_term() {
    skip_ws();
    if (at_end()) throw ParseError("expected a term", pos_);
    char c = peek();
    if (c == '(') {
      ++pos_;
      ExprPtr inner = parse_sum();
      expect(')', "to close the group");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      if (text_.substr(start, pos_ - start) == "1") return make(UnitNode{});
      throw ParseError("the only numeric literal is the unit '1'", start);
    }
    if (is_ident_start(c)) return parse_word();
    throw ParseError("expected a term", pos_);
  }

  ExprPtr parse_word() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    std::string word(text_.substr(start, pos_ - start));

    if (word == "L") return make(LefschetzNode{});
    if (word == "ev") {
      expect('(', "after 'ev'");
      int k = parse_uint("a line count");
      expect(')', "to close 'ev'");
      return make(EvenLinesNode{k});
    }
    if (word == "odd") {
      expect('(', "after 'odd'");
      int k = parse_uint("a line count");
      expect(')', "to close 'odd'");
      return make(OddLinesNode{k});
    }
    if (word == "S") {
      Partition lambda = parse_partition_literal();
      return make(SchurApplyNode{std::move(lambda), parse_group_argument()});
    }
    if (word == "Sym" || word == "wedge") {
      expect('^', std::string("after '" + word + "'").c_str());
      std::size_t at = pos_;
      int k = parse_uint("a power");
      if (k < 1) throw ParseError("the power must be at least 1", at);
      ExprPtr inner = parse_group_argument();
      if (word == "Sym") return make(SymPowerNode{k, std::move(inner)});
      return make(WedgePowerNode{k, std::move(inner)});
    }
    if (word == "shift") {
      expect('^', "after 'shift'");
      int k = parse_signed("a shift amount");
      return make(ShiftNode{k, parse_group_argument()});
    }
    if (word == "curve") {
      expect('(', "after 'curve'");
      int g = parse_uint("a genus");
      expect(')', "to close 'curve'");
      return make(PresetNode{PresetKind::Curve, g});
    }
    if (word == "P") {
      expect('(', "after 'P'");
      int n = parse_uint("a dimension");
      expect(')', "to close 'P'");
      return make(PresetNode{PresetKind::ProjectiveSpace, n});
    }
    return make(NamedAtomNode{std::move(word), false, {}});
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Precedences: direct sum 1, tensor 2, everything else atomic.
void print_into(const Expr& e, std::string& out, int parent_prec, bool right_operand);

void print_binary(const ExprPtr& lhs, const ExprPtr& rhs, const char* op, int prec,
                  std::string& out, int parent_prec, bool right_operand) {
  bool parens = parent_prec > prec || (parent_prec == prec && right_operand);
  if (parens) out += "(";
  print_into(*lhs, out, prec, false);
  out += op;
  print_into(*rhs, out, prec, true);
  if (parens) out += ")";
}

void print_into(const Expr& e, std::string& out, int parent_prec, bool right_operand) {
  std::visit(
      Overloaded{
          [&](const UnitNode&) { out += "1"; },
          [&](const LefschetzNode&) { out += "L"; },
          [&](const EvenLinesNode& n) { out += "ev(" + std::to_string(n.count) + ")"; },
          [&](const OddLinesNode& n) { out += "odd(" + std::to_string(n.count) + ")"; },
          [&](const NamedAtomNode& n) { out += n.name; },
          [&](const DirectSumNode& n) {
            print_binary(n.lhs, n.rhs, " (+) ", 1, out, parent_prec, right_operand);
          },
          [&](const TensorNode& n) {
            print_binary(n.lhs, n.rhs, " (x) ", 2, out, parent_prec, right_operand);
          },
          [&](const ShiftNode& n) {
            out += "shift^" + std::to_string(n.amount) + "(";
            print_into(*n.inner, out, 0, false);
            out += ")";
          },
          [&](const SchurApplyNode& n) {
            out += "S[";
            const auto& parts = n.lambda.parts();
            for (std::size_t i = 0; i < parts.size(); ++i) {
              if (i > 0) out += ",";
              out += std::to_string(parts[i]);
            }
            out += "](";
            print_into(*n.inner, out, 0, false);
            out += ")";
          },
          [&](const SymPowerNode& n) {
            out += "Sym^" + std::to_string(n.power) + "(";
            print_into(*n.inner, out, 0, false);
            out += ")";
          },
          [&](const WedgePowerNode& n) {
            out += "wedge^" + std::to_string(n.power) + "(";
            print_into(*n.inner, out, 0, false);
            out += ")";
          },
          [&](const PresetNode& n) {
            out += (n.kind == PresetKind::Curve ? "curve(" : "P(") +
                   std::to_string(n.param) + ")";
          },
      },
      e.node);
}

bool power_fits(int base, int exponent, long long cap) {
  Integer size = 1;
  for (int i = 0; i < exponent; ++i) {
    size *= base;
    if (size > static_cast<long>(cap)) return false;
  }
  return true;
}

const FormalObject& as_object(const EvalResult& r) {
  const FormalObject* obj = std::get_if<FormalObject>(&r);
  if (!obj)
    throw ArgumentError(
        "a Schur application is terminal; its verdict cannot feed another operator");
  return *obj;
}

SchurVerdict schur_verdict(const FormalObject& obj, const Partition& lambda,
                           const EvalLimits& limits) {
  if (lambda.empty()) throw ArgumentError("Schur applications need a nonempty shape");
  SchurVerdict v;
  v.lambda = lambda;
  if (obj.all_lines()) {
    SuperVectorSpace space{static_cast<int>(obj.even_line_count()),
                           static_cast<int>(obj.odd_line_count())};
    v.verdict = vanishes_by_rectangle(space, lambda) ? "vanishes" : "nonzero";
    if (lambda.weight() <= limits.symmetrizer_cap &&
        power_fits(space.total(), lambda.weight(), limits.dimension_cap)) {
      v.dimension =
          schur_dimension(space, lambda, limits.dimension_cap, limits.symmetrizer_cap);
      v.has_dimension = true;
    }
  } else {
    v.verdict = vanishes(obj, lambda) ? "vanishes" : "inconclusive";
  }
  return v;
}

}  // namespace

bool operator==(const Expr& a, const Expr& b) {
  return std::visit(
      [](const auto& x, const auto& y) -> bool {
        if constexpr (!std::is_same_v<std::decay_t<decltype(x)>,
                                      std::decay_t<decltype(y)>>) {
          return false;
        } else {
          return node_equal(x, y);
        }
      },
      a.node, b.node);
}

ExprPtr parse_expr(const std::string& text) { return Parser(text).run(); }

std::string print_expr(const Expr& e) {
  std::string out;
  print_into(e, out, 0, false);
  return out;
}

EvalResult evaluate(const Expr& e, const EvalLimits& limits) {
  return std::visit(
      Overloaded{
          [&](const UnitNode&) -> EvalResult { return unit_object(); },
          [&](const LefschetzNode&) -> EvalResult { return lefschetz(); },
          [&](const EvenLinesNode& n) -> EvalResult { return even_lines(n.count); },
          [&](const OddLinesNode& n) -> EvalResult { return odd_lines(n.count); },
          [&](const NamedAtomNode& n) -> EvalResult {
            return FormalObject(Atom::named(n.name, n.odd, n.certificates));
          },
          [&](const DirectSumNode& n) -> EvalResult {
            return direct_sum(as_object(evaluate(*n.lhs, limits)),
                              as_object(evaluate(*n.rhs, limits)));
          },
          [&](const TensorNode& n) -> EvalResult {
            return tensor(as_object(evaluate(*n.lhs, limits)),
                          as_object(evaluate(*n.rhs, limits)));
          },
          [&](const ShiftNode& n) -> EvalResult {
            return shift(as_object(evaluate(*n.inner, limits)), n.amount);
          },
          [&](const SchurApplyNode& n) -> EvalResult {
            return schur_verdict(as_object(evaluate(*n.inner, limits)), n.lambda,
                                 limits);
          },
          [&](const SymPowerNode& n) -> EvalResult {
            return schur_verdict(as_object(evaluate(*n.inner, limits)),
                                 Partition({n.power}), limits);
          },
          [&](const WedgePowerNode& n) -> EvalResult {
            return schur_verdict(as_object(evaluate(*n.inner, limits)),
                                 Partition(std::vector<int>(
                                     static_cast<std::size_t>(n.power), 1)),
                                 limits);
          },
          [&](const PresetNode& n) -> EvalResult {
            return n.kind == PresetKind::Curve ? curve(n.param)
                                               : projective_space(n.param);
          },
      },
      e.node);
}

std::string eval_result_to_json(const EvalResult& r) {
  nlohmann::ordered_json j;
  if (const FormalObject* obj = std::get_if<FormalObject>(&r)) {
    j["type"] = "object";
    nlohmann::ordered_json inner = nlohmann::ordered_json::parse(object_to_json(*obj));
    j["display"] = inner["display"];
    j["atoms"] = inner["atoms"];
  } else {
    const SchurVerdict& v = std::get<SchurVerdict>(r);
    j["type"] = "verdict";
    j["lambda"] = v.lambda.to_string();
    j["verdict"] = v.verdict;
    if (v.has_dimension) {
      nlohmann::ordered_json dim;
      dim["even"] = v.dimension.even;
      dim["odd"] = v.dimension.odd;
      dim["total"] = v.dimension.total();
      j["dimension"] = std::move(dim);
    } else {
      j["dimension"] = nullptr;
    }
  }
  return j.dump(2);
}

}  // namespace schur
