#include "schurkit.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "json.hpp"
#include "schur/characters.hpp"
#include "schur/coefficients.hpp"
#include "schur/complex_json.hpp"
#include "schur/error.hpp"
#include "schur/expr.hpp"
#include "schur/group_algebra.hpp"
#include "schur/motive.hpp"
#include "schur/partition.hpp"
#include "schur/super_space.hpp"

struct sk_complex {
  schur::AnyComplex value;
};

namespace {

using Json = nlohmann::ordered_json;

thread_local std::string g_last_error = "no error";

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) return nullptr;
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

int classify(const std::exception& e) {
  if (dynamic_cast<const schur::ParseError*>(&e)) return SK_ERR_PARSE;
  if (dynamic_cast<const schur::SizeLimitError*>(&e)) return SK_ERR_LIMIT;
  if (dynamic_cast<const schur::ArgumentError*>(&e)) return SK_ERR_ARGUMENT;
  return SK_ERR_INTERNAL;
}

template <class F>
int guarded_string(char** out, F&& producer) {
  if (!out) {
    g_last_error = "null output pointer";
    return SK_ERR_ARGUMENT;
  }
  *out = nullptr;
  try {
    std::string s = producer();
    *out = dup_string(s);
    if (!*out) {
      g_last_error = "out of memory";
      return SK_ERR_INTERNAL;
    }
    return SK_OK;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return classify(e);
  }
}

template <class F>
int guarded_complex(sk_complex** out, F&& producer) {
  if (!out) {
    g_last_error = "null output pointer";
    return SK_ERR_ARGUMENT;
  }
  *out = nullptr;
  try {
    *out = new sk_complex{producer()};
    return SK_OK;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return classify(e);
  }
}

std::string require(const char* text, const char* what) {
  if (!text) throw schur::ArgumentError(std::string("null ") + what);
  return std::string(text);
}

long long cap_or_default(long long cap) {
  return cap > 0 ? cap : schur::kDefaultDimCap;
}

Json decomposition_json(const schur::Decomposition& d) {
  Json j;
  j["rule"] = d.rule_name();
  Json terms = Json::array();
  for (const auto& term : d.terms) {
    Json t;
    Json key = Json::array();
    key.push_back(term.first.to_string());
    if (d.pair_keyed()) key.push_back(term.second.to_string());
    t["key"] = std::move(key);
    t["multiplicity"] = term.multiplicity;
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

const schur::FormalObject& expect_object(const schur::EvalResult& r) {
  const schur::FormalObject* obj = std::get_if<schur::FormalObject>(&r);
  if (!obj)
    throw schur::ArgumentError("the expression evaluates to a verdict, not an object");
  return *obj;
}

}  // namespace

extern "C" {

const char* sk_version(void) { return "0.1.0"; }

const char* sk_last_error(void) { return g_last_error.c_str(); }

void sk_string_free(char* s) { std::free(s); }

int sk_character(const char* lambda, const char* rho, char** out_json) {
  return guarded_string(out_json, [&] {
    schur::Partition la = schur::Partition::parse(require(lambda, "shape"));
    schur::Partition r = schur::Partition::parse(require(rho, "cycle type"));
    Json j;
    j["lambda"] = la.to_string();
    j["rho"] = r.to_string();
    j["value"] = schur::character_value(la, r);
    return j.dump(2);
  });
}

int sk_character_table(int n, char** out_json) {
  return guarded_string(out_json, [&] {
    schur::CharacterTable table = schur::character_table(n);
    Json j;
    j["n"] = table.n;
    Json labels = Json::array();
    for (const auto& p : table.labels) labels.push_back(p.to_string());
    j["labels"] = std::move(labels);
    Json sizes = Json::array();
    for (const auto& s : table.sizes) sizes.push_back(s.get_str());
    j["class_sizes"] = std::move(sizes);
    Json values = Json::array();
    for (const auto& row : table.values) {
      Json r = Json::array();
      for (long long v : row) r.push_back(v);
      values.push_back(std::move(r));
    }
    j["values"] = std::move(values);
    return j.dump(2);
  });
}

int sk_irrep_dimension(const char* lambda, char** out_json) {
  return guarded_string(out_json, [&] {
    schur::Partition la = schur::Partition::parse(require(lambda, "shape"));
    Json j;
    j["lambda"] = la.to_string();
    j["dimension"] = schur::irrep_dimension(la);
    return j.dump(2);
  });
}

int sk_lr_coefficient(const char* lambda, const char* mu, const char* nu,
                      char** out_json) {
  return guarded_string(out_json, [&] {
    schur::Partition la = schur::Partition::parse(require(lambda, "shape"));
    schur::Partition m = schur::Partition::parse(require(mu, "shape"));
    schur::Partition n = schur::Partition::parse(require(nu, "shape"));
    Json j;
    j["lambda"] = la.to_string();
    j["mu"] = m.to_string();
    j["nu"] = n.to_string();
    j["value"] = schur::lr_coefficient(la, m, n);
    return j.dump(2);
  });
}

int sk_kronecker(const char* lambda, const char* mu, const char* nu, char** out_json) {
  return guarded_string(out_json, [&] {
    schur::Partition la = schur::Partition::parse(require(lambda, "shape"));
    schur::Partition m = schur::Partition::parse(require(mu, "shape"));
    schur::Partition n = schur::Partition::parse(require(nu, "shape"));
    Json j;
    j["lambda"] = la.to_string();
    j["mu"] = m.to_string();
    j["nu"] = n.to_string();
    j["value"] = schur::kronecker_coefficient(la, m, n);
    return j.dump(2);
  });
}

int sk_decompose_sum(const char* lambda, char** out_json) {
  return guarded_string(out_json, [&] {
    schur::Partition la = schur::Partition::parse(require(lambda, "shape"));
    return decomposition_json(schur::decompose_schur_of_sum(la)).dump(2);
  });
}

int sk_decompose_tensor(const char* lambda, char** out_json) {
  return guarded_string(out_json, [&] {
    schur::Partition la = schur::Partition::parse(require(lambda, "shape"));
    return decomposition_json(schur::decompose_schur_of_tensor(la)).dump(2);
  });
}

int sk_decompose_pair(const char* mu, const char* nu, char** out_json) {
  return guarded_string(out_json, [&] {
    schur::Partition m = schur::Partition::parse(require(mu, "shape"));
    schur::Partition n = schur::Partition::parse(require(nu, "shape"));
    return decomposition_json(schur::decompose_pair_product(m, n)).dump(2);
  });
}

int sk_symmetrizer(const char* lambda, int check_idempotent, char** out_json) {
  return guarded_string(out_json, [&] {
    schur::Partition la = schur::Partition::parse(require(lambda, "shape"));
    schur::GroupAlgebraElement c = schur::young_symmetrizer(la);
    Json j;
    j["lambda"] = la.to_string();
    j["degree"] = c.degree();
    j["support_size"] = static_cast<long long>(c.support_size());
    j["display"] = c.to_string();
    if (check_idempotent)
      j["idempotent"] = (c * c == c);
    else
      j["idempotent"] = nullptr;
    return j.dump(2);
  });
}

int sk_schur_dimension(int even_dim, int odd_dim, const char* lambda,
                       long long dimension_cap, char** out_json) {
  return guarded_string(out_json, [&] {
    schur::Partition la = schur::Partition::parse(require(lambda, "shape"));
    if (even_dim < 0 || odd_dim < 0)
      throw schur::ArgumentError("dimensions must be nonnegative");
    schur::SuperVectorSpace space{even_dim, odd_dim};
    schur::GradedRank rank =
        schur::schur_dimension(space, la, cap_or_default(dimension_cap));
    Json j;
    j["space"] = std::to_string(even_dim) + "|" + std::to_string(odd_dim);
    j["lambda"] = la.to_string();
    j["even"] = rank.even;
    j["odd"] = rank.odd;
    j["total"] = rank.total();
    return j.dump(2);
  });
}

int sk_vanishes(int even_dim, int odd_dim, const char* lambda, const char* oracle,
                long long dimension_cap, char** out_json) {
  return guarded_string(out_json, [&] {
    schur::Partition la = schur::Partition::parse(require(lambda, "shape"));
    std::string which = require(oracle, "oracle");
    if (even_dim < 0 || odd_dim < 0)
      throw schur::ArgumentError("dimensions must be nonnegative");
    if (which != "rank" && which != "rectangle" && which != "both")
      throw schur::ArgumentError("oracle must be \"rank\", \"rectangle\" or \"both\"");
    schur::SuperVectorSpace space{even_dim, odd_dim};
    Json j;
    j["space"] = std::to_string(even_dim) + "|" + std::to_string(odd_dim);
    j["lambda"] = la.to_string();
    j["oracle"] = which;
    bool vanishes = false;
    if (which == "rank" || which == "both") {
      bool by_rank =
          schur::schur_dimension(space, la, cap_or_default(dimension_cap)).total() == 0;
      j["rank_vanishes"] = by_rank;
      vanishes = by_rank;
    }
    if (which == "rectangle" || which == "both") {
      bool by_rect = schur::vanishes_by_rectangle(space, la);
      j["rectangle_vanishes"] = by_rect;
      vanishes = by_rect;
    }
    if (which == "both")
      j["agree"] = (j["rank_vanishes"] == j["rectangle_vanishes"]);
    j["vanishes"] = vanishes;
    return j.dump(2);
  });
}

int sk_eval(const char* expr, long long dimension_cap, char** out_json) {
  return guarded_string(out_json, [&] {
    schur::ExprPtr e = schur::parse_expr(require(expr, "expression"));
    schur::EvalLimits limits;
    limits.dimension_cap = cap_or_default(dimension_cap);
    return schur::eval_result_to_json(schur::evaluate(*e, limits));
  });
}

int sk_motive_report(const char* expr, int search_bound, char** out_json) {
  return guarded_string(out_json, [&] {
    schur::ExprPtr e = schur::parse_expr(require(expr, "expression"));
    const schur::FormalObject obj = expect_object(schur::evaluate(*e));
    schur::FinitenessReport report = schur::finiteness_report(obj, search_bound);
    Json j = Json::parse(schur::report_to_json(report));
    j["object"] = obj.display();
    return j.dump(2);
  });
}

int sk_motive_blowup(const char* x_expr, const char* y_expr, int codim,
                     char** out_json) {
  return guarded_string(out_json, [&] {
    schur::ExprPtr xe = schur::parse_expr(require(x_expr, "expression"));
    schur::ExprPtr ye = schur::parse_expr(require(y_expr, "expression"));
    const schur::FormalObject x = expect_object(schur::evaluate(*xe));
    const schur::FormalObject y = expect_object(schur::evaluate(*ye));
    return schur::object_to_json(schur::blowup(x, y, codim));
  });
}

int sk_complex_parse(const char* json_text, sk_complex** out) {
  return guarded_complex(
      out, [&] { return schur::parse_complex_json(require(json_text, "complex")); });
}

void sk_complex_free(sk_complex* c) { delete c; }

int sk_complex_to_json(const sk_complex* c, char** out_json) {
  return guarded_string(out_json, [&] {
    if (!c) throw schur::ArgumentError("null complex handle");
    return schur::complex_to_json(c->value);
  });
}

int sk_complex_homology(const sk_complex* c, char** out_json) {
  return guarded_string(out_json, [&] {
    if (!c) throw schur::ArgumentError("null complex handle");
    return schur::homology_to_json(c->value);
  });
}

int sk_complex_schur(const sk_complex* c, const char* lambda, long long dimension_cap,
                     sk_complex** out) {
  return guarded_complex(out, [&] {
    if (!c) throw schur::ArgumentError("null complex handle");
    schur::Partition la = schur::Partition::parse(require(lambda, "shape"));
    return schur::schur_complex(c->value, la, cap_or_default(dimension_cap),
                                schur::kDefaultSymmetrizerCap);
  });
}

int sk_filtration_report(const char* bundle_json, int n, long long dimension_cap,
                         char** out_json) {
  return guarded_string(out_json, [&] {
    return schur::filtration_report_json(require(bundle_json, "bundle"), n,
                                         cap_or_default(dimension_cap));
  });
}

}  // extern "C"
