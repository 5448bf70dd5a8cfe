#pragma once

#include <string>
#include <variant>

#include "schur/chain_complex.hpp"

namespace schur {

/// Runtime-chosen base ring: bounded complexes over Q or over Q[x].
using AnyComplex = std::variant<ChainComplex<Rational>, ChainComplex<Polynomial>>;

inline const char* base_ring_name(const AnyComplex& c) {
  return std::holds_alternative<ChainComplex<Rational>>(c) ? "Q" : "Q[x]";
}

/// Parses the complex file format:
///   { "base": "Q" | "Q[x]",
///     "degrees": { "0": 1, "1": 1 },
///     "differentials": { "1": [["x"]] } }
/// The matrix for degree k maps degree k to degree k-1 and is given row by
/// row; entries are ring-element strings ("2", "-1/3", "1+2*x^3") or plain
/// JSON numbers. Throws ParseError (with a byte offset for malformed JSON)
/// or ArgumentError for structural problems.
AnyComplex parse_complex_json(const std::string& text);

/// Inverse of parse_complex_json, deterministic.
std::string complex_to_json(const AnyComplex& c);

/// {"base": ..., "homology": {"<degree>": {"free": r, "torsion": [...]}}}
std::string homology_to_json(const AnyComplex& c);

/// Image of the Young symmetrizer as a complex over the same base ring.
AnyComplex schur_complex(const AnyComplex& c, const Partition& lambda,
                         long long cap = kDefaultDimCap,
                         int sym_cap = kDefaultSymmetrizerCap);

/// Parses a bundle { "base": ..., "p": {...}, "x": {...}, "q": {...},
/// "inclusion": {"<degree>": matrix}, "projection": {...} } describing a
/// degreewise split exact sequence 0 -> P -> X -> Q -> 0, runs the
/// tensor-power filtration, and reports per-level and graded ranks.
std::string filtration_report_json(const std::string& bundle_json, int n,
                                   long long cap = kDefaultDimCap);

}  // namespace schur
