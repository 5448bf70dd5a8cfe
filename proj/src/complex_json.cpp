#include "schur/complex_json.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"
#include "schur/error.hpp"

namespace schur {

namespace {

using Json = nlohmann::ordered_json;

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(),
                     e.byte > 0 ? e.byte - 1 : 0);
  }
}

int parse_degree_key(const std::string& key) {
  try {
    std::size_t used = 0;
    int v = std::stoi(key, &used);
    if (used != key.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::exception&) {
    throw ArgumentError("degree keys must be integers, got '" + key + "'");
  }
}

template <class R>
R parse_entry(const Json& cell);

template <>
Rational parse_entry<Rational>(const Json& cell) {
  if (cell.is_number_integer())
    return Rational(static_cast<long>(cell.get<long long>()));
  if (cell.is_string()) return rational_from_string(cell.get<std::string>());
  throw ArgumentError("matrix entries over Q must be integers or strings");
}

template <>
Polynomial parse_entry<Polynomial>(const Json& cell) {
  if (cell.is_number_integer())
    return Polynomial(Rational(static_cast<long>(cell.get<long long>())));
  if (cell.is_string()) {
    try {
      return Polynomial::parse(cell.get<std::string>());
    } catch (const ParseError& e) {
      throw ArgumentError(std::string("bad polynomial entry: ") + e.what());
    }
  }
  throw ArgumentError("matrix entries over Q[x] must be integers or strings");
}

template <class R>
Matrix<R> parse_matrix(const Json& m, int rows, int cols, const std::string& what) {
  if (!m.is_array()) throw ArgumentError(what + " must be an array of rows");
  Matrix<R> out(rows, cols);
  if (m.empty()) return out;  // omitted content means the zero matrix
  if (static_cast<int>(m.size()) != rows)
    throw ArgumentError(what + " has " + std::to_string(m.size()) +
                        " rows, expected " + std::to_string(rows));
  for (int i = 0; i < rows; ++i) {
    const Json& row = m[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw ArgumentError(what + " row " + std::to_string(i) + " must have " +
                          std::to_string(cols) + " entries");
    for (int j = 0; j < cols; ++j)
      out.at(i, j) = parse_entry<R>(row[static_cast<std::size_t>(j)]);
  }
  return out;
}

template <class R>
ChainComplex<R> parse_complex_object(const Json& j) {
  if (!j.is_object()) throw ArgumentError("a complex must be a JSON object");
  if (!j.contains("degrees") || !j.at("degrees").is_object())
    throw ArgumentError("a complex needs a 'degrees' object");
  std::map<int, int> ranks_by_degree;
  for (const auto& [key, value] : j.at("degrees").items()) {
    int k = parse_degree_key(key);
    long long rank = value.is_number_integer() ? static_cast<long long>(value) : -1;
    if (rank < 0)
      throw ArgumentError("rank in degree " + key + " must be a nonnegative integer");
    ranks_by_degree[k] = static_cast<int>(rank);
  }
  if (ranks_by_degree.empty()) return ChainComplex<R>();
  int lo = ranks_by_degree.begin()->first;
  int hi = ranks_by_degree.rbegin()->first;
  std::vector<int> ranks;
  for (int k = lo; k <= hi; ++k) {
    auto it = ranks_by_degree.find(k);
    ranks.push_back(it == ranks_by_degree.end() ? 0 : it->second);
  }
  auto rank_at = [&](int k) {
    if (k < lo || k > hi) return 0;
    return ranks[static_cast<std::size_t>(k - lo)];
  };
  std::map<int, Json> diff_json;
  if (j.contains("differentials")) {
    if (!j.at("differentials").is_object())
      throw ArgumentError("'differentials' must be an object");
    for (const auto& [key, value] : j.at("differentials").items()) {
      int k = parse_degree_key(key);
      if (k <= lo || k > hi) {
        // A differential out of a zero space must itself be zero.
        Matrix<R> m = parse_matrix<R>(value, rank_at(k - 1), rank_at(k),
                                      "differential " + key);
        if (!m.is_zero())
          throw ArgumentError("differential " + key + " is outside the degree range");
        continue;
      }
      diff_json.emplace(k, value);
    }
  }
  std::vector<Matrix<R>> diffs;
  for (int k = lo + 1; k <= hi; ++k) {
    auto it = diff_json.find(k);
    if (it == diff_json.end()) {
      diffs.push_back(Matrix<R>(rank_at(k - 1), rank_at(k)));
    } else {
      diffs.push_back(parse_matrix<R>(it->second, rank_at(k - 1), rank_at(k),
                                      "differential " + std::to_string(k)));
    }
  }
  return ChainComplex<R>(lo, std::move(ranks), std::move(diffs));
}

std::string base_of(const Json& j, const std::string& fallback) {
  if (!j.contains("base")) {
    if (fallback.empty()) throw ArgumentError("missing 'base' (\"Q\" or \"Q[x]\")");
    return fallback;
  }
  std::string base = j.at("base").get<std::string>();
  if (base != "Q" && base != "Q[x]")
    throw ArgumentError("base must be \"Q\" or \"Q[x]\", got '" + base + "'");
  if (!fallback.empty() && base != fallback)
    throw ArgumentError("conflicting base rings in one input");
  return base;
}

template <class R>
Json complex_to_json_object(const ChainComplex<R>& c) {
  Json degrees = Json::object();
  Json diffs = Json::object();
  for (int k = c.lo(); k <= c.hi(); ++k)
    degrees[std::to_string(k)] = c.rank(k);
  for (int k = c.lo() + 1; k <= c.hi(); ++k) {
    Matrix<R> d = c.diff(k);
    if (d.is_zero()) continue;
    Json rows = Json::array();
    for (int i = 0; i < d.rows(); ++i) {
      Json row = Json::array();
      for (int j = 0; j < d.cols(); ++j) row.push_back(RingOps<R>::str(d.at(i, j)));
      rows.push_back(std::move(row));
    }
    diffs[std::to_string(k)] = std::move(rows);
  }
  Json out = Json::object();
  out["base"] = RingOps<R>::ring_name();
  out["degrees"] = std::move(degrees);
  out["differentials"] = std::move(diffs);
  return out;
}

template <class R>
Json homology_to_json_object(const ChainComplex<R>& c) {
  Homology<R> h = homology(c);
  Json pieces = Json::object();
  for (const auto& [k, piece] : h.pieces) {
    Json p = Json::object();
    p["free"] = piece.free_rank;
    Json tors = Json::array();
    for (const R& f : piece.torsion) tors.push_back(RingOps<R>::str(f));
    p["torsion"] = std::move(tors);
    pieces[std::to_string(k)] = std::move(p);
  }
  Json out = Json::object();
  out["base"] = RingOps<R>::ring_name();
  out["homology"] = std::move(pieces);
  return out;
}

template <class R>
std::map<int, Matrix<R>> parse_map_components(const Json& j, const ChainComplex<R>& src,
                                              const ChainComplex<R>& dst,
                                              const std::string& what) {
  std::map<int, Matrix<R>> comps;
  if (!j.is_object()) throw ArgumentError(what + " must be an object of matrices");
  for (const auto& [key, value] : j.items()) {
    int k = parse_degree_key(key);
    comps.emplace(k, parse_matrix<R>(value, dst.rank(k), src.rank(k),
                                     what + " component " + key));
  }
  return comps;
}

}  // namespace

AnyComplex parse_complex_json(const std::string& text) {
  Json j = parse_json_text(text);
  std::string base = base_of(j, "");
  if (base == "Q") return parse_complex_object<Rational>(j);
  return parse_complex_object<Polynomial>(j);
}

std::string complex_to_json(const AnyComplex& c) {
  return std::visit([](const auto& cc) { return complex_to_json_object(cc).dump(2); },
                    c);
}

std::string homology_to_json(const AnyComplex& c) {
  return std::visit(
      [](const auto& cc) { return homology_to_json_object(cc).dump(2); }, c);
}

AnyComplex schur_complex(const AnyComplex& c, const Partition& lambda, long long cap,
                         int sym_cap) {
  return std::visit(
      [&](const auto& cc) -> AnyComplex {
        return apply_symmetrizer(cc, lambda, cap, sym_cap);
      },
      c);
}

namespace {

template <class R>
std::string filtration_report_impl(const Json& j, int n, long long cap) {
  ChainComplex<R> p = parse_complex_object<R>(j.at("p"));
  ChainComplex<R> x = parse_complex_object<R>(j.at("x"));
  ChainComplex<R> q = parse_complex_object<R>(j.at("q"));
  if (!j.contains("inclusion") || !j.contains("projection"))
    throw ArgumentError("a filtration bundle needs 'inclusion' and 'projection'");
  ChainMap<R> inc(p, x, parse_map_components<R>(j.at("inclusion"), p, x, "inclusion"));
  ChainMap<R> proj(x, q, parse_map_components<R>(j.at("projection"), x, q, "projection"));
  Filtration<R> f = extension_filtration(inc, proj, n, cap);

  Json levels = Json::array();
  for (int i = 0; i <= n; ++i) {
    Json ranks = Json::object();
    Json graded = Json::object();
    for (const auto& [d, r] : f.level_ranks[static_cast<std::size_t>(i)])
      ranks[std::to_string(d)] = r;
    for (const auto& [d, r] : f.graded_ranks[static_cast<std::size_t>(i)])
      graded[std::to_string(d)] = r;
    Json level = Json::object();
    level["level"] = i;
    level["ranks"] = std::move(ranks);
    level["graded"] = std::move(graded);
    levels.push_back(std::move(level));
  }
  Json out = Json::object();
  out["base"] = RingOps<R>::ring_name();
  out["n"] = n;
  out["levels"] = std::move(levels);
  return out.dump(2);
}

}  // namespace

std::string filtration_report_json(const std::string& bundle_json, int n,
                                   long long cap) {
  if (n < 1) throw ArgumentError("filtration exponent must be positive");
  Json j = parse_json_text(bundle_json);
  if (!j.is_object() || !j.contains("p") || !j.contains("x") || !j.contains("q"))
    throw ArgumentError("a filtration bundle needs 'p', 'x' and 'q' complexes");
  std::string base = base_of(j, "");
  if (base == "Q") return filtration_report_impl<Rational>(j, n, cap);
  return filtration_report_impl<Polynomial>(j, n, cap);
}

}  // namespace schur
