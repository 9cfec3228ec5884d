#pragma once

#include <string>
#include <vector>

#include "hkforge/base.hpp"
#include "hkforge/prime.hpp"

namespace hkforge {

/// Polynomial over F_p in variables x0..x{nvars-1}, canonical term list:
/// no repeated exponent vectors, no zero coefficients.
struct PolySpec {
  Prime p;
  int nvars;
  std::vector<std::pair<uint32_t, std::vector<long>>> terms;
  /// Set when some term has total degree < 2 (the HK setup expects f in m^2).
  bool warn_low_degree = false;
};

/// Grammar: sum of terms, a term is '*'-joined factors, a factor is an
/// integer or x<k>['^'<e>]. Coefficients are reduced mod p; terms that
/// cancel mod p are dropped.
PolySpec parse_poly(const std::string& text, Prime p, int nvars);

std::string render_poly(const PolySpec& f);

}  // namespace hkforge
