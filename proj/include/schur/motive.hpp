#pragma once

#include <map>
#include <string>
#include <vector>

#include "schur/partition.hpp"

namespace schur {

/// Hard ceiling on the witness search bound of finiteness_report; auto
/// bounds are clamped here so a report always terminates at desk scale.
inline constexpr int kMaxReportBound = 24;

/// One summand of a formal object. A certificate mu records that S_mu of
/// this atom is provably zero; the set is upward closed under diagram
/// containment and stored as its antichain of minimal elements.
///
/// Lines (invertible rank-1 atoms) always carry the defining certificate:
/// (1,1) when even, (2) when odd. The unit object 1 is the even line with
/// twist 0 and shift 0; L is the even line with twist 1.
struct Atom {
  std::string name;  // empty for anonymous lines
  bool odd = false;
  int twist = 0;
  int shift = 0;
  bool line = false;
  std::vector<Partition> certificates;

  static Atom even_line(int twist = 0, int shift = 0);
  static Atom odd_line(int twist = 0, int shift = 0);
  static Atom named(std::string name, bool odd, std::vector<Partition> certificates);

  bool is_unit() const;

  /// "1", "L", "L^3", "h1:odd", "h2*L^2[-1]" and so on: twist as a Lefschetz
  /// factor, parity suffix ":odd", shift suffix "[s]".
  std::string display() const;

  auto operator<=>(const Atom&) const = default;
};

/// Drops duplicates and non-minimal elements, sorts by weight then
/// reverse-lexicographically.
std::vector<Partition> minimal_antichain(std::vector<Partition> parts);

/// A finite formal direct sum of atoms with positive multiplicities.
/// The empty object is the zero object.
class FormalObject {
public:
  FormalObject() = default;
  explicit FormalObject(const Atom& atom, long long multiplicity = 1);

  const std::map<Atom, long long>& atoms() const { return atoms_; }
  bool is_zero() const { return atoms_.empty(); }
  long long total_multiplicity() const;
  bool all_lines() const;

  /// Counts of even and odd line summands; meaningful for all_lines objects.
  long long even_line_count() const;
  long long odd_line_count() const;

  void add(const Atom& atom, long long multiplicity);

  /// "1 (+) 2*L (+) L^2"; the zero object prints "0".
  std::string display() const;

  bool operator==(const FormalObject&) const = default;

private:
  std::map<Atom, long long> atoms_;
};

FormalObject unit_object();
FormalObject lefschetz(int power = 1);
FormalObject even_lines(int count);
FormalObject odd_lines(int count);

/// Multiset union.
FormalObject direct_sum(const FormalObject& a, const FormalObject& b);

/// Distributes over the summands. Line factors merge into their partner
/// (twists and shifts add, parities toggle, an odd line transposes the
/// partner's certificates). A product of two non-line atoms is kept opaque
/// under a canonical name; its certificates are every lambda, up to a small
/// search bound, such that each Kronecker constituent (mu, nu) of lambda is
/// killed on one side or the other.
FormalObject tensor(const FormalObject& a, const FormalObject& b);

/// Adds k to every shift tag; an odd k flips parities and transposes
/// certificates.
FormalObject shift(const FormalObject& a, int k);

/// Motive of a blowup along a center of codimension r:
/// x (+) y*L (+) ... (+) y*L^(r-1). Requires r >= 2.
FormalObject blowup(const FormalObject& x, const FormalObject& y, int codim);

/// Removes one unit summand (the reduced object). Throws ArgumentError when
/// no unit is present.
FormalObject split_point(const FormalObject& a);

/// 1 (+) L (+) ... (+) L^n.
FormalObject projective_space(int n);

/// Genus 0: 1 (+) L. Genus g >= 1: 1 (+) h1 (+) L with h1 odd carrying the
/// certificate (2g+1), the vanishing degree of Sym on a 2g-dimensional odd
/// piece.
FormalObject curve(int genus);

/// True when the vanishing of S_lambda(a) is derivable from the atoms'
/// certificates: an atom vanishes when lambda contains a certificate, and a
/// sum vanishes when every Littlewood-Richardson constituent (mu, nu) of
/// lambda dies on one side or the other. False means "not provable", never
/// "provably nonzero". S_() never vanishes; every S_lambda of the zero
/// object vanishes for |lambda| >= 1.
bool vanishes(const FormalObject& a, const Partition& lambda);

struct FinitenessReport {
  bool schur_finite = false;
  bool kimura_certified = false;
  int p = -1;  // valid when kimura_certified
  int q = -1;
  std::vector<Partition> witnesses;  // minimal provable shapes, an antichain
  std::string status;                // "certified" or "inconclusive"
  int search_bound = 0;
};

/// Searches all shapes of weight <= bound for provable vanishing and
/// reports the antichain of minimal witnesses, plus a parity-split Kimura
/// certificate (minimal column/row powers killing the even/odd parts).
/// bound <= 0 chooses one automatically: (P+1)(Q+1)+4 from the effective
/// line counts of the certificates, clamped to kMaxReportBound. An atom
/// with no certificates makes every proof impossible; the report is then
/// inconclusive without a search.
FinitenessReport finiteness_report(const FormalObject& a, int bound = 0);

std::string report_to_json(const FinitenessReport& r);
std::string object_to_json(const FormalObject& a);

}  // namespace schur
