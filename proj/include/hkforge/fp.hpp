#pragma once

#include <cstdint>
#include <vector>

#include "hkforge/base.hpp"
#include "hkforge/prime.hpp"

namespace hkforge {

/// Dense matrix over F_p, entries reduced to [0, p), row-major.
class FpMatrix {
 public:
  FpMatrix(Prime p, int rows, int cols)
      : p_(p), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {}

  Prime prime() const { return p_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  uint32_t at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  void set(int r, int c, long v) {
    long p = p_.value();
    long m = ((v % p) + p) % p;
    a_[static_cast<std::size_t>(r) * cols_ + c] = static_cast<uint32_t>(m);
  }

 private:
  Prime p_;
  int rows_, cols_;
  std::vector<uint32_t> a_;
};

long fp_rank(const FpMatrix& m);

/// Rank of a sparse matrix given as (row, col, value) triples over F_p.
/// Splits into bipartite connected components first, then eliminates each
/// dense block; rows/cols not touched by any entry contribute nothing.
long fp_sparse_rank(Prime p, long nrows, long ncols,
                    const std::vector<std::tuple<long, long, uint32_t>>& entries);

/// Multiset of Jordan block sizes, sorted descending.
struct JordanPartition {
  std::vector<long> blocks;
  long dimension() const;
  friend bool operator==(const JordanPartition& a, const JordanPartition& b) {
    return a.blocks == b.blocks;
  }
};

/// Jordan type of a nilpotent matrix from the rank sequence of its powers:
/// #blocks of size >= k equals rank(n^{k-1}) - rank(n^k).
/// Throws NotNilpotentError when the rank sequence stabilizes above zero.
JordanPartition jordan_partition(const FpMatrix& n);

}  // namespace hkforge
