#pragma once

#include <string>
#include <vector>

#include "hkforge/base.hpp"
#include "hkforge/gamma.hpp"

namespace hkforge {

/// Coordinates over the sigma-basis of Lambda_e (x) Q in characteristic 2:
/// sigma_{k,e} = (1/2^e) prod_j (l0 + (-1)^{k_j} l_{2^j}), k in [0, 2^e).
/// These are orthogonal idempotents, so ring products are pointwise.
class SigmaVector {
 public:
  explicit SigmaVector(int level);
  static SigmaVector basis(int level, long k);

  int level() const { return level_; }
  std::size_t size() const { return c_.size(); }
  const std::vector<Rat>& coords() const { return c_; }
  Rat& operator[](std::size_t k) { return c_[k]; }
  const Rat& operator[](std::size_t k) const { return c_[k]; }

  friend bool operator==(const SigmaVector& a, const SigmaVector& b) {
    return a.level_ == b.level_ && a.c_ == b.c_;
  }

 private:
  int level_;
  std::vector<Rat> c_;
};

enum class WalshDirection { LambdaToSigma, SigmaToLambda };

/// Signed Hadamard transform between lambda- and sigma-coordinates.
/// sigma->lambda has matrix (-1)^{<i,k>}, lambda->sigma the same scaled
/// by 1/2^e. Input length must be a power of two.
std::vector<Rat> walsh(std::vector<Rat> v, WalshDirection dir);

SigmaVector sigma_mul(const SigmaVector& x, const SigmaVector& y);
SigmaVector sigma_pow(const SigmaVector& x, long n);

/// Coefficient at k' in level e' equals the coefficient at k' mod 2^e.
SigmaVector lift_level(const SigmaVector& x, int level);

Rat sigma_alpha(const SigmaVector& x);

/// (k[x,y]/(x^{2^e},y^{2^e}), xy) over the sigma-basis:
/// 2^e (s_{0,e} + 2^e s_{1,e} + sum_{k=1}^{e-1} 2^k s_{2^k+1,e}).
SigmaVector mu_element(int e);

/// xi_e = 3 d_{2^e/3} over the sigma-basis at level e.
SigmaVector xi_element(int e);

/// Char-2 element with lambda-support inside Lambda_e -> sigma coordinates.
SigmaVector sigma_from_gamma(const GammaElement& x, int level);
GammaElement gamma_from_sigma(const SigmaVector& x, Basis basis);

/// Exact HK_e of the A1/A2 singularity in characteristic 2 via sigma products.
Int hk_char2(Variant v, int d, int e);

std::string render_sigma(const SigmaVector& x);

}  // namespace hkforge
