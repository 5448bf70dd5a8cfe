#include "schur/numeric.hpp"

#include <cctype>

#include "schur/error.hpp"

namespace schur {

Integer factorial(int n) {
  if (n < 0) throw ArgumentError("factorial of a negative number");
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

std::string rational_to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational rational_from_string(const std::string& text) {
  if (text.empty()) throw ArgumentError("empty rational literal");
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' ||
              (c == '-' && (i == 0 || text[i - 1] == '/'));
    if (!ok) throw ArgumentError("invalid rational literal '" + text + "'");
  }
  try {
    Rational x(text);
    if (x.get_den() == 0)
      throw ArgumentError("zero denominator in '" + text + "'");
    x.canonicalize();
    return x;
  } catch (const std::invalid_argument&) {
    throw ArgumentError("invalid rational literal '" + text + "'");
  }
}

long long to_int64(const Integer& x, const char* context) {
  if (!x.fits_slong_p()) {
    // fits_slong_p is about C long; on LP64 that is 64-bit, which is what
    // the public surface carries.
    throw ArgumentError(std::string(context) + ": value does not fit in 64 bits");
  }
  return static_cast<long long>(x.get_si());
}

}  // namespace schur
