#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hkforge/base.hpp"
#include "hkforge/gamma.hpp"
#include "hkforge/prime.hpp"

namespace hkforge {

/// Data associated with a vector beta of positive rationals, a period mu,
/// and a prime p: beta = r + z, p^mu beta = R + z', t = p^mu z - z'
/// (always a nonnegative integer vector).
struct BetaData {
  Prime p;
  int mu;
  std::vector<Rat> beta;
  std::vector<Int> r, R, t;
  std::vector<Rat> z, zprime;
  int r_parity = 0;  // sum r_i mod 2
  Rat ell_sharp;     // ell(t) or ell(p^mu-1-t_0, t_1, ..) by parity
};

/// with_ell=false skips the lambda-product evaluation of ell_sharp
/// (used while searching for a period).
BetaData associated_data(const std::vector<Rat>& beta, int mu, Prime p,
                         bool with_ell = true);

enum class CondResult { Cond1, Cond2, Fail };

/// Checks the two hypothesis sets: (1) z' ~ z and sum R == sum r mod 2;
/// (2) z' ~ z* and sum R != sum r mod 2. Equivalence v ~ w allows flipping
/// w_i -> 1 - w_i at an even number of indices; coordinates equal to 1/2
/// leave the flip parity free.
CondResult check_conditions(const BetaData& data);

struct HKParams {
  int n0;
  int mu;
};

/// n0 = least n such that no denominator of p^n (1/e_0,..,1/e_d) is divisible
/// by p; mu = least period <= cap satisfying condition set 1.
HKParams find_parameters(const std::vector<long>& exponents, Prime p, int mu_cap = 8);

/// HK_e of the diagonal hypersurface x_0^{e_0}+..+x_d^{e_d}:
/// (prod e_i) * D(q/e_0, .., q/e_d), q = p^e. Exact integer.
Int hk_diagonal(const std::vector<long>& exponents, Prime p, int e);

/// HK_e of the quadric A1/A2 family for any characteristic, through the
/// monomial-orbit decomposition of (k[x,y]/(x^q,y^q), xy) and ring products.
Int hk_quadric(Variant v, int d, Prime p, int e);

/// eHK from two HK values at levels n0 and n0+mu with contraction ell_sharp:
/// (HK_{n0+mu} - ell HK_{n0}) / (p^{d(n0+mu)} - ell p^{d n0}).
Rat ehk_from_values(const Int& hk_n0, const Int& hk_n0mu, int n0, int mu, int d,
                    Prime p, const Rat& ell_sharp);

/// eHK of x_0^{e_0}+..+x_{d-1}^{e_{d-1}} + x_d^{p^e} through the free-extension
/// collapse: HK_e of the lower diagonal divided by p^{(d-1)e}.
Rat ehk_power_trick(const std::vector<long>& lower_exponents, Prime p, int e);

enum class ComputePath { Algorithm, ClosedForm, SigmaEngine, PowerTrick, Oracle };
const char* path_name(ComputePath path);

struct HKReport {
  Prime p;
  int d;
  std::optional<Variant> variant;
  std::vector<long> exponents;  // empty for quadric variants
  int n0 = 0;
  int mu = 1;
  std::map<int, Int> hk_values;
  Rat ell_sharp;
  Rat ehk;
  ComputePath path = ComputePath::Algorithm;
};

/// Full pipeline for a quadric singularity. Routes:
/// p = 2 -> sigma engine, p = 3 A2 -> power trick, otherwise the
/// Han-Monsky algorithm with the independent ell_sharp cross-check.
HKReport ehk_quadric(Variant v, int d, Prime p, int extra_levels = 1, int mu_cap = 8);

/// Pipeline for an explicit diagonal exponent vector. Prefers the power
/// trick when some exponent is a pure power of p.
HKReport ehk_diagonal(const std::vector<long>& exponents, Prime p,
                      int extra_levels = 1, int mu_cap = 8);

}  // namespace hkforge
