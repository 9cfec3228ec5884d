#pragma once

#include <map>
#include <string>
#include <vector>

#include "hkforge/base.hpp"
#include "hkforge/prime.hpp"

namespace hkforge {

/// Element of the Han-Monsky ring over a field of characteristic p, with
/// exact rational coefficients over either the delta- or the lambda-basis.
/// Zero coefficients are never stored; d0 is the zero element and is dropped
/// on insertion.
class GammaElement {
 public:
  GammaElement(Prime p, Basis basis = Basis::Delta) : p_(p), basis_(basis) {}

  static GammaElement delta(Prime p, long i, const Rat& c = Rat(1));
  static GammaElement lambda(Prime p, long i, const Rat& c = Rat(1));
  static GammaElement unit(Prime p) { return delta(p, 1); }

  Prime prime() const { return p_; }
  Basis basis() const { return basis_; }
  const std::map<long, Rat>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  long max_index() const { return c_.empty() ? 0 : c_.rbegin()->first; }
  Rat coeff(long i) const;
  bool is_integral() const;

  /// Adds c to the coefficient at index i, pruning zeros.
  void accumulate(long i, const Rat& c);

  friend bool operator==(const GammaElement& a, const GammaElement& b) {
    return a.p_ == b.p_ && a.basis_ == b.basis_ && a.c_ == b.c_;
  }

 private:
  Prime p_;
  Basis basis_;
  std::map<long, Rat> c_;
};

struct CyclicSpec {
  long a;  // truncation exponent of k[x]/(x^a)
  long c;  // T acts as multiplication by x^c
};

GammaElement convert_basis(const GammaElement& x, Basis target);
GammaElement add(const GammaElement& x, const GammaElement& y);
GammaElement sub(const GammaElement& x, const GammaElement& y);
GammaElement scale(const Rat& q, const GammaElement& x);

/// Ground-truth product: bilinear over the delta basis, each pairwise
/// d_i*d_j delegated to the finite-field Jordan oracle (memoized).
GammaElement mul(const GammaElement& x, const GammaElement& y);

/// Rule-based product over the lambda basis. Total in characteristic 2;
/// for odd p covers Lambda_1 pairs and the p-adic shift/reflection rules.
/// Throws NotReducibleError when a pair is outside the rule domain.
GammaElement mul_structural(const GammaElement& x, const GammaElement& y);

Rat alpha(const GammaElement& x);

/// Sum of i*coeff_i over the delta basis (the k-dimension for honest modules).
Rat dimension(const GammaElement& x);

/// d_a for rational a >= 0: (1-z) d_r + z d_{r+1} where a = r + z.
GammaElement delta_fractional(const Rat& a, Prime p);

/// Jordan decomposition of (k[x]/(x^a), x^c): (c-r) d_k + r d_{k+1}
/// where a = c k + r, 0 <= r < c.
GammaElement cyclic_decompose(const CyclicSpec& spec, Prime p);

Rat D_value(const std::vector<Rat>& args, Prime p);
Rat ell_value(const std::vector<Int>& args, Prime p);
inline Rat ell_value(const std::vector<long>& args, Prime p) {
  std::vector<Int> v(args.begin(), args.end());
  return ell_value(v, p);
}

/// Stable textual form, e.g. "2*d2 + 1/3*d4" or "3*l0 - l1".
std::string render(const GammaElement& x);
GammaElement parse_element(const std::string& text, Prime p);

}  // namespace hkforge
