#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hkforge/base.hpp"
#include "hkforge/fp.hpp"
#include "hkforge/poly.hpp"
#include "hkforge/prime.hpp"

namespace hkforge::oracle {

/// Sparse integer delta-vector: (index, multiplicity) pairs, index ascending.
using DeltaVec = std::vector<std::pair<long, long>>;

/// Matrix-dimension cap for oracle computations (columns of the largest
/// dense/graded system). Thread-safe; HK_FORGE_SIZE_LIMIT and the CLI
/// override it.
long size_limit();
void set_size_limit(long limit);

/// Jordan type of multiplication by x+y on k[x,y]/(x^i, y^j) over F_p,
/// returned as the delta-vector of the decomposition. Memoized per (p,i,j).
/// The total dimension sum(k * mult_k) == i*j is enforced.
const DeltaVec& delta_product_oracle(long i, long j, Prime p);

std::size_t memo_size();

/// HK_e of k[[x_0..x_{n-1}]]/(f): q^n - rank of multiplication by f on
/// k[x_0..x_{n-1}]/(x_i^q), q = p^e, with f reduced mod the Frobenius power.
Int direct_hk(const PolySpec& f, int e);

}  // namespace hkforge::oracle
