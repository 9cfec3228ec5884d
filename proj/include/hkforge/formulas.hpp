#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hkforge/base.hpp"
#include "hkforge/prime.hpp"

namespace hkforge {

/// Unsigned lambda-coordinates of gamma^d, gamma = (k[x]/(x^p), x^2):
/// gamma^d = sum (-1)^i a_i lambda_i with a_i >= 0 and a_{(p-1)/2} = p^{d-1}.
struct GammaCoeffs {
  Prime p;
  int d;
  std::vector<Rat> a;  // size p, indices 0..p-1
};

GammaCoeffs gamma_coeffs(Prime p, int d);

struct CheckReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  void expect(bool cond, const std::string& what) {
    if (!cond) failures.push_back(what);
  }
};

/// Reflection a_i + a_{p-1-i} = 2 p^{d-1}, the recursive coefficient formula,
/// monotonicity (strict for d >= 2), a_a = p^{d-1}, and
/// gamma^d (l_{p-1} + l_0) = 2 p^{d-1} d_p, for 1 <= d <= d_max.
CheckReport check_gamma_identities(Prime p, int d_max);

/// HK_1 of the A1/A2 singularities from the gamma-coefficient sums:
/// alpha(gamma^{d+1}) and alpha(gamma^d eta), p > 3 (p = 3 allowed for A1).
std::pair<Int, Int> hk1_identities(Prime p, int d);

/// First/second inequality, the strict p^2 chain, ell_sharp(S) <= p^{d-2},
/// and eHK(S) > eHK(R), for one (p, d) with p > 3.
CheckReport check_inequalities(Prime p, int d);

/// Closed-form HK_e (finite e) and eHK (e = nullopt) of the A1/A2
/// singularities in characteristics 2 and 3. For p = 3 only eHK is defined.
Rat closed_form(Variant v, long p, int d, std::optional<int> e);

/// The quadric eHK table as rational functions of p, for p >= 3, 3 <= d <= 7.
Rat quadric_table(Prime p, int d);

/// d-th Taylor coefficient of sec x + tan x (zigzag numbers over d!).
Rat zigzag_c(int d);

/// v_s = sum_{n=0}^{floor(s)} (-1)^n (s-n)^d / (n! (d-n)!), floor(s) <= d.
Rat v_s(const Rat& s, int d);

/// G_s(e) = e (v_s - (e-2) v_{s-1}).
Rat G_s(const Rat& s, const Int& e, int d);

/// Sign pattern of eHK(S_{3,d}) - eHK(R_{2,d}) for d in 7..14:
/// negative exactly when d >= 8 and even, or d >= 13 and odd.
CheckReport boundary_check();

}  // namespace hkforge
