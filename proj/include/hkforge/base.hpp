#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hkforge {

using Int = mpz_class;
using Rat = mpq_class;

enum class Basis { Delta, Lambda };
enum class Variant { A1, A2 };

struct SizeLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotNilpotentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotReducibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoPeriodFoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerateDenominatorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
  std::size_t pos;
  ParseError(const std::string& msg, std::size_t at)
      : std::runtime_error(msg + " at position " + std::to_string(at)), pos(at) {}
};

inline Int ipow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Int rat_floor(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

inline Rat rat_frac(const Rat& q) { return q - Rat(rat_floor(q)); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

/// "5" or "3/4"; denominators are always positive after canonicalization.
inline std::string rat_str(const Rat& q) {
  if (is_integer(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline const char* variant_name(Variant v) { return v == Variant::A1 ? "A1" : "A2"; }

}  // namespace hkforge
