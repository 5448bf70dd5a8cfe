#include "schur/motive.hpp"

#include <algorithm>
#include <mutex>
#include <utility>

#include "json.hpp"
#include "schur/coefficients.hpp"
#include "schur/error.hpp"

namespace schur {

namespace {

std::vector<Partition> line_certificates(bool odd) {
  if (odd) return {Partition({2})};
  return {Partition({1, 1})};
}

std::vector<Partition> transpose_all(const std::vector<Partition>& parts) {
  std::vector<Partition> out;
  out.reserve(parts.size());
  for (const Partition& p : parts) out.push_back(p.transposed());
  return minimal_antichain(std::move(out));
}

bool weight_revlex_less(const Partition& a, const Partition& b) {
  if (a.weight() != b.weight()) return a.weight() < b.weight();
  return RevLexLess{}(a, b);
}

std::string partitions_key(const std::vector<Partition>& parts) {
  std::string key;
  for (const Partition& p : parts) key += p.to_string();
  return key;
}

bool certificate_applies(const std::vector<Partition>& certs, const Partition& lambda) {
  for (const Partition& c : certs)
    if (lambda.contains(c)) return true;
  return false;
}

/// Effective line counts (p, q) guaranteed by one certificate: a shape with
/// r rows and c columns is contained in the r x c rectangle, so the atom
/// vanishes everywhere the rank oracle for (r-1 | c-1) does.
std::pair<int, int> certificate_profile(const Partition& cert) {
  return {cert.rows() - 1, cert.part(0) - 1};
}

/// Certificates of an opaque product atom: lambda qualifies when every
/// Kronecker pair (mu, nu) of lambda is certified on one side or the other.
/// The search bound comes from the super-space product of the two sides'
/// best rectangle profiles.
std::vector<Partition> product_certificates(const std::vector<Partition>& left,
                                            const std::vector<Partition>& right) {
  if (left.empty() || right.empty()) return {};

  static std::mutex mutex;
  static std::map<std::string, std::vector<Partition>> cache;
  std::string key = partitions_key(left) + "|" + partitions_key(right);
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  int bound = kMaxReportBound;
  for (const Partition& a : left)
    for (const Partition& b : right) {
      auto [pa, qa] = certificate_profile(a);
      auto [pb, qb] = certificate_profile(b);
      int p = pa * pb + qa * qb;
      int q = pa * qb + qa * pb;
      bound = std::min(bound, (p + 1) * (q + 1) + 4);
    }
  bound = std::min(bound, 12);  // Kronecker tables stay desk-sized

  std::vector<Partition> found;
  for (int w = 1; w <= bound; ++w) {
    std::vector<Partition> shapes = partitions_of(w, bound);
    for (const Partition& lambda : shapes) {
      bool dominated = false;
      for (const Partition& c : found)
        if (lambda.contains(c)) {
          dominated = true;
          break;
        }
      if (dominated) continue;
      bool certified = true;
      for (const Partition& mu : shapes) {
        if (certificate_applies(left, mu)) continue;
        for (const Partition& nu : shapes) {
          if (certificate_applies(right, nu)) continue;
          if (kronecker_coefficient(mu, nu, lambda) > 0) {
            certified = false;
            break;
          }
        }
        if (!certified) break;
      }
      if (certified) found.push_back(lambda);
    }
  }
  found = minimal_antichain(std::move(found));
  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(key, found);
  return found;
}

Atom tensor_atoms(const Atom& a, const Atom& b) {
  Atom out;
  out.odd = a.odd != b.odd;
  out.twist = a.twist + b.twist;
  out.shift = a.shift + b.shift;
  if (a.line && b.line) {
    out.line = true;
    out.certificates = line_certificates(out.odd);
  } else if (a.line || b.line) {
    const Atom& core = a.line ? b : a;
    const Atom& ln = a.line ? a : b;
    out.name = core.name;
    out.certificates =
        ln.odd ? transpose_all(core.certificates) : core.certificates;
  } else {
    out.name = a.name <= b.name ? a.name + "*" + b.name : b.name + "*" + a.name;
    out.certificates = product_certificates(a.certificates, b.certificates);
  }
  return out;
}

/// Atoms repeated per multiplicity, in the canonical map order.
std::vector<const Atom*> flatten(const FormalObject& a) {
  std::vector<const Atom*> flat;
  for (const auto& [atom, mult] : a.atoms())
    for (long long i = 0; i < mult; ++i) flat.push_back(&atom);
  return flat;
}

/// Vanishing depends on nothing but the certificate antichains of the
/// remaining summands, so the memo key forgets every other tag.
std::string suffix_key(const std::vector<const Atom*>& flat, std::size_t i) {
  std::string key;
  for (; i < flat.size(); ++i) {
    key += partitions_key(flat[i]->certificates);
    key += "/";
  }
  return key;
}

bool vanishes_from(const std::vector<const Atom*>& flat, std::size_t i,
                   const Partition& lambda) {
  if (lambda.empty()) return false;  // S_() is the unit, never zero
  if (i == flat.size()) return true;
  if (i + 1 == flat.size()) return certificate_applies(flat[i]->certificates, lambda);

  static std::mutex mutex;
  static std::map<std::string, bool> cache;
  std::string key = suffix_key(flat, i) + "|" + lambda.to_string();
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  int n = lambda.weight();
  bool result = true;
  for (int m = n; m >= 0 && result; --m) {
    for (const Partition& mu : partitions_of(m, n)) {
      if (!lambda.contains(mu)) continue;
      if (certificate_applies(flat[i]->certificates, mu)) continue;
      for (const Partition& nu : partitions_of(n - m, n)) {
        if (!lambda.contains(nu)) continue;
        if (lr_coefficient(lambda, mu, nu) == 0) continue;
        if (!vanishes_from(flat, i + 1, nu)) {
          result = false;
          break;
        }
      }
      if (!result) break;
    }
  }

  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(std::move(key), result);
  return result;
}

}  // namespace

Atom Atom::even_line(int twist, int shift) {
  Atom a;
  a.twist = twist;
  a.shift = shift;
  a.line = true;
  a.certificates = line_certificates(false);
  return a;
}

Atom Atom::odd_line(int twist, int shift) {
  Atom a;
  a.odd = true;
  a.twist = twist;
  a.shift = shift;
  a.line = true;
  a.certificates = line_certificates(true);
  return a;
}

Atom Atom::named(std::string name, bool odd, std::vector<Partition> certificates) {
  if (name.empty()) throw ArgumentError("a named atom needs a nonempty name");
  Atom a;
  a.name = std::move(name);
  a.odd = odd;
  a.certificates = minimal_antichain(std::move(certificates));
  return a;
}

bool Atom::is_unit() const {
  return line && !odd && twist == 0 && shift == 0 && name.empty();
}

std::string Atom::display() const {
  std::string s;
  if (line) {
    if (twist == 0)
      s = "1";
    else if (twist == 1)
      s = "L";
    else
      s = "L^" + std::to_string(twist);
  } else {
    s = name;
    if (twist == 1)
      s += "*L";
    else if (twist != 0)
      s += "*L^" + std::to_string(twist);
  }
  if (odd) s += ":odd";
  if (shift != 0) s += "[" + std::to_string(shift) + "]";
  return s;
}

std::vector<Partition> minimal_antichain(std::vector<Partition> parts) {
  std::sort(parts.begin(), parts.end(), weight_revlex_less);
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
  std::vector<Partition> out;
  for (const Partition& p : parts) {
    bool minimal = true;
    for (const Partition& q : out)
      if (p.contains(q)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(p);
  }
  return out;
}

FormalObject::FormalObject(const Atom& atom, long long multiplicity) {
  add(atom, multiplicity);
}

long long FormalObject::total_multiplicity() const {
  long long total = 0;
  for (const auto& [atom, mult] : atoms_) total += mult;
  return total;
}

bool FormalObject::all_lines() const {
  for (const auto& [atom, mult] : atoms_)
    if (!atom.line) return false;
  return true;
}

long long FormalObject::even_line_count() const {
  long long count = 0;
  for (const auto& [atom, mult] : atoms_)
    if (atom.line && !atom.odd) count += mult;
  return count;
}

long long FormalObject::odd_line_count() const {
  long long count = 0;
  for (const auto& [atom, mult] : atoms_)
    if (atom.line && atom.odd) count += mult;
  return count;
}

void FormalObject::add(const Atom& atom, long long multiplicity) {
  if (multiplicity < 0) throw ArgumentError("multiplicities must be nonnegative");
  if (multiplicity == 0) return;
  atoms_[atom] += multiplicity;
}

std::string FormalObject::display() const {
  if (atoms_.empty()) return "0";
  std::string s;
  for (const auto& [atom, mult] : atoms_) {
    if (!s.empty()) s += " (+) ";
    if (mult > 1) s += std::to_string(mult) + "*";
    s += atom.display();
  }
  return s;
}

FormalObject unit_object() { return FormalObject(Atom::even_line()); }

FormalObject lefschetz(int power) { return FormalObject(Atom::even_line(power)); }

FormalObject even_lines(int count) {
  if (count < 0) throw ArgumentError("line counts must be nonnegative");
  FormalObject out;
  out.add(Atom::even_line(), count);
  return out;
}

FormalObject odd_lines(int count) {
  if (count < 0) throw ArgumentError("line counts must be nonnegative");
  FormalObject out;
  out.add(Atom::odd_line(), count);
  return out;
}

FormalObject direct_sum(const FormalObject& a, const FormalObject& b) {
  FormalObject out = a;
  for (const auto& [atom, mult] : b.atoms()) out.add(atom, mult);
  return out;
}

FormalObject tensor(const FormalObject& a, const FormalObject& b) {
  FormalObject out;
  for (const auto& [x, mx] : a.atoms())
    for (const auto& [y, my] : b.atoms()) out.add(tensor_atoms(x, y), mx * my);
  return out;
}

FormalObject shift(const FormalObject& a, int k) {
  FormalObject out;
  for (const auto& [atom, mult] : a.atoms()) {
    Atom s = atom;
    s.shift += k;
    if (k % 2 != 0) {
      s.odd = !s.odd;
      s.certificates = transpose_all(s.certificates);
    }
    out.add(s, mult);
  }
  return out;
}

FormalObject blowup(const FormalObject& x, const FormalObject& y, int codim) {
  if (codim < 2) throw ArgumentError("blowup centers have codimension at least 2");
  FormalObject out = x;
  for (int i = 1; i < codim; ++i) out = direct_sum(out, tensor(y, lefschetz(i)));
  return out;
}

FormalObject split_point(const FormalObject& a) {
  FormalObject out;
  bool removed = false;
  for (const auto& [atom, mult] : a.atoms()) {
    long long m = mult;
    if (!removed && atom.is_unit()) {
      --m;
      removed = true;
    }
    out.add(atom, m);
  }
  if (!removed) throw ArgumentError("no unit summand to split off");
  return out;
}

FormalObject projective_space(int n) {
  if (n < 0) throw ArgumentError("projective spaces have nonnegative dimension");
  FormalObject out;
  for (int i = 0; i <= n; ++i) out.add(Atom::even_line(i), 1);
  return out;
}

FormalObject curve(int genus) {
  if (genus < 0) throw ArgumentError("genus must be nonnegative");
  FormalObject out = direct_sum(unit_object(), lefschetz());
  if (genus > 0)
    out.add(Atom::named("h1", true, {Partition({2 * genus + 1})}), 1);
  return out;
}

bool vanishes(const FormalObject& a, const Partition& lambda) {
  std::vector<const Atom*> flat = flatten(a);
  return vanishes_from(flat, 0, lambda);
}

FinitenessReport finiteness_report(const FormalObject& a, int bound) {
  FinitenessReport report;

  bool certified_atoms = true;
  int effective_p = 0;
  int effective_q = 0;
  for (const auto& [atom, mult] : a.atoms()) {
    if (atom.certificates.empty()) {
      certified_atoms = false;
      break;
    }
    // Best rectangle profile of this atom, by area.
    int best_p = 0, best_q = 0;
    long long best_area = -1;
    for (const Partition& c : atom.certificates) {
      auto [p, q] = certificate_profile(c);
      long long area = static_cast<long long>(p + 1) * (q + 1);
      if (best_area < 0 || area < best_area) {
        best_area = area;
        best_p = p;
        best_q = q;
      }
    }
    // The bound is clamped to kMaxReportBound anyway, so cap the counts.
    int m = static_cast<int>(std::min<long long>(mult, kMaxReportBound));
    effective_p = std::min(effective_p + best_p * m, kMaxReportBound);
    effective_q = std::min(effective_q + best_q * m, kMaxReportBound);
  }

  if (!certified_atoms) {
    // A summand with no certificates blocks every proof: S_lambda of a sum
    // only vanishes when each summand's S_lambda does.
    report.status = "inconclusive";
    report.search_bound = 0;
    return report;
  }

  if (bound <= 0) bound = (effective_p + 1) * (effective_q + 1) + 4;
  bound = std::min(bound, kMaxReportBound);
  report.search_bound = bound;

  for (int w = 1; w <= bound; ++w) {
    for (const Partition& lambda : partitions_of(w, bound)) {
      bool dominated = false;
      for (const Partition& seen : report.witnesses)
        if (lambda.contains(seen)) {
          dominated = true;
          break;
        }
      if (dominated) continue;
      if (vanishes(a, lambda)) report.witnesses.push_back(lambda);
    }
  }
  FormalObject even_part, odd_part;
  for (const auto& [atom, mult] : a.atoms())
    (atom.odd ? odd_part : even_part).add(atom, mult);
  int p = -1, q = -1;
  for (int k = 0; k <= bound && p < 0; ++k)
    if (vanishes(even_part, Partition::rectangle(k + 1, 1))) p = k;
  for (int k = 0; k <= bound && q < 0; ++k)
    if (vanishes(odd_part, Partition::rectangle(1, k + 1))) q = k;
  if (p >= 0 && q >= 0) {
    report.kimura_certified = true;
    report.p = p;
    report.q = q;
    // The parity split proves vanishing on the whole hook complement, which
    // the witness search cannot always reach within its weight bound.
    if (report.witnesses.empty())
      report.witnesses.push_back(Partition::rectangle(p + 1, q + 1));
  }
  report.schur_finite = !report.witnesses.empty();
  report.status = report.schur_finite ? "certified" : "inconclusive";
  return report;
}

std::string report_to_json(const FinitenessReport& r) {
  nlohmann::ordered_json j;
  j["schur_finite"] = r.schur_finite;
  j["kimura_certified"] = r.kimura_certified;
  if (r.kimura_certified) {
    j["p"] = r.p;
    j["q"] = r.q;
  } else {
    j["p"] = nullptr;
    j["q"] = nullptr;
  }
  nlohmann::ordered_json witnesses = nlohmann::ordered_json::array();
  for (const Partition& w : r.witnesses) witnesses.push_back(w.to_string());
  j["witnesses"] = std::move(witnesses);
  j["status"] = r.status;
  j["search_bound"] = r.search_bound;
  return j.dump(2);
}

std::string object_to_json(const FormalObject& a) {
  nlohmann::ordered_json j;
  j["display"] = a.display();
  nlohmann::ordered_json atoms = nlohmann::ordered_json::array();
  for (const auto& [atom, mult] : a.atoms()) {
    nlohmann::ordered_json item;
    item["name"] = atom.name;
    item["parity"] = atom.odd ? "odd" : "even";
    item["twist"] = atom.twist;
    item["shift"] = atom.shift;
    item["line"] = atom.line;
    item["multiplicity"] = mult;
    nlohmann::ordered_json certs = nlohmann::ordered_json::array();
    for (const Partition& c : atom.certificates) certs.push_back(c.to_string());
    item["certificates"] = std::move(certs);
    atoms.push_back(std::move(item));
  }
  j["atoms"] = std::move(atoms);
  return j.dump(2);
}

}  // namespace schur
