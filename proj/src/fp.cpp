#include "hkforge/fp.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <tuple>

namespace hkforge {

namespace {

long rank_gf2(int rows, int cols, const std::vector<uint32_t>& a) {
  const int words = (cols + 63) / 64;
  std::vector<uint64_t> bits(static_cast<std::size_t>(rows) * words, 0);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (a[static_cast<std::size_t>(r) * cols + c] & 1)
        bits[static_cast<std::size_t>(r) * words + c / 64] |= uint64_t(1) << (c % 64);

  long rank = 0;
  int row = 0;
  for (int c = 0; c < cols && row < rows; ++c) {
    const int w = c / 64;
    const uint64_t m = uint64_t(1) << (c % 64);
    int piv = -1;
    for (int r = row; r < rows; ++r)
      if (bits[static_cast<std::size_t>(r) * words + w] & m) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int k = 0; k < words; ++k)
        std::swap(bits[static_cast<std::size_t>(piv) * words + k],
                  bits[static_cast<std::size_t>(row) * words + k]);
    for (int r = row + 1; r < rows; ++r)
      if (bits[static_cast<std::size_t>(r) * words + w] & m)
        for (int k = w; k < words; ++k)
          bits[static_cast<std::size_t>(r) * words + k] ^=
              bits[static_cast<std::size_t>(row) * words + k];
    ++row;
    ++rank;
  }
  return rank;
}

template <uint32_t P>
long rank_modp_fixed(int rows, int cols, std::vector<uint32_t> a) {
  long rank = 0;
  int row = 0;
  for (int c = 0; c < cols && row < rows; ++c) {
    int piv = -1;
    for (int r = row; r < rows; ++r)
      if (a[static_cast<std::size_t>(r) * cols + c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int k = c; k < cols; ++k)
        std::swap(a[static_cast<std::size_t>(piv) * cols + k],
                  a[static_cast<std::size_t>(row) * cols + k]);
    uint32_t* prow = &a[static_cast<std::size_t>(row) * cols];
    // scale pivot row to make the pivot 1
    {
      uint64_t inv = 1, base = prow[c] % P, e = P - 2;
      while (e) {
        if (e & 1) inv = inv * base % P;
        base = base * base % P;
        e >>= 1;
      }
      for (int k = c; k < cols; ++k)
        prow[k] = static_cast<uint32_t>(prow[k] * inv % P);
    }
    for (int r = row + 1; r < rows; ++r) {
      uint32_t* rr = &a[static_cast<std::size_t>(r) * cols];
      const uint32_t f = rr[c] % P;
      if (f == 0) continue;
      const uint32_t neg = P - f;
      for (int k = c; k < cols; ++k)
        rr[k] = static_cast<uint32_t>((rr[k] + uint64_t(neg) * prow[k]) % P);
    }
    ++row;
    ++rank;
  }
  return rank;
}

long rank_modp_generic(uint64_t p, int rows, int cols, std::vector<uint32_t> a) {
  long rank = 0;
  int row = 0;
  for (int c = 0; c < cols && row < rows; ++c) {
    int piv = -1;
    for (int r = row; r < rows; ++r)
      if (a[static_cast<std::size_t>(r) * cols + c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int k = c; k < cols; ++k)
        std::swap(a[static_cast<std::size_t>(piv) * cols + k],
                  a[static_cast<std::size_t>(row) * cols + k]);
    uint32_t* prow = &a[static_cast<std::size_t>(row) * cols];
    {
      uint64_t inv = 1, base = prow[c] % p, e = p - 2;
      while (e) {
        if (e & 1) inv = inv * base % p;
        base = base * base % p;
        e >>= 1;
      }
      for (int k = c; k < cols; ++k)
        prow[k] = static_cast<uint32_t>(prow[k] * inv % p);
    }
    for (int r = row + 1; r < rows; ++r) {
      uint32_t* rr = &a[static_cast<std::size_t>(r) * cols];
      const uint32_t f = rr[c];
      if (f == 0) continue;
      const uint64_t neg = p - f;
      for (int k = c; k < cols; ++k)
        rr[k] = static_cast<uint32_t>((rr[k] + neg * prow[k]) % p);
    }
    ++row;
    ++rank;
  }
  return rank;
}

long rank_dense(long p, int rows, int cols, const std::vector<uint32_t>& a) {
  if (rows == 0 || cols == 0) return 0;
  if (p == 2) return rank_gf2(rows, cols, a);
  switch (p) {
    case 3: return rank_modp_fixed<3>(rows, cols, a);
    case 5: return rank_modp_fixed<5>(rows, cols, a);
    case 7: return rank_modp_fixed<7>(rows, cols, a);
    case 11: return rank_modp_fixed<11>(rows, cols, a);
    case 13: return rank_modp_fixed<13>(rows, cols, a);
    default: return rank_modp_generic(static_cast<uint64_t>(p), rows, cols, a);
  }
}

struct UnionFind {
  std::vector<long> parent;
  explicit UnionFind(long n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  long find(long x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(long a, long b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[a] = b;
  }
};

}  // namespace

long fp_rank(const FpMatrix& m) {
  std::vector<uint32_t> a(static_cast<std::size_t>(m.rows()) * m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      a[static_cast<std::size_t>(r) * m.cols() + c] = m.at(r, c);
  return rank_dense(m.prime().value(), m.rows(), m.cols(), a);
}

long fp_sparse_rank(Prime p, long nrows, long ncols,
                    const std::vector<std::tuple<long, long, uint32_t>>& entries) {
  // Nodes 0..nrows-1 are rows, nrows..nrows+ncols-1 are columns. Each
  // component yields an independent block after row/column permutation.
  UnionFind uf(nrows + ncols);
  for (const auto& [r, c, v] : entries)
    if (v % p.value() != 0) uf.unite(r, nrows + c);

  std::vector<long> row_of(nrows, -1), col_of(ncols, -1);
  std::vector<std::vector<long>> comp_rows, comp_cols;
  std::vector<long> comp_id(nrows + ncols, -1);
  auto comp_of = [&](long node) {
    long root = uf.find(node);
    if (comp_id[root] < 0) {
      comp_id[root] = static_cast<long>(comp_rows.size());
      comp_rows.emplace_back();
      comp_cols.emplace_back();
    }
    return comp_id[root];
  };

  std::vector<std::vector<std::tuple<long, long, uint32_t>>> comp_entries;
  for (const auto& [r, c, v] : entries) {
    if (v % p.value() == 0) continue;
    long id = comp_of(r);
    if (row_of[r] < 0) {
      row_of[r] = static_cast<long>(comp_rows[id].size());
      comp_rows[id].push_back(r);
    }
    if (col_of[c] < 0) {
      col_of[c] = static_cast<long>(comp_cols[id].size());
      comp_cols[id].push_back(c);
    }
    if (static_cast<std::size_t>(id) >= comp_entries.size()) comp_entries.resize(id + 1);
    comp_entries[id].emplace_back(row_of[r], col_of[c], v);
  }

  long rank = 0;
  for (std::size_t id = 0; id < comp_entries.size(); ++id) {
    const int br = static_cast<int>(comp_rows[id].size());
    const int bc = static_cast<int>(comp_cols[id].size());
    std::vector<uint32_t> block(static_cast<std::size_t>(br) * bc, 0);
    for (const auto& [r, c, v] : comp_entries[id]) {
      std::size_t idx = static_cast<std::size_t>(r) * bc + c;
      block[idx] = static_cast<uint32_t>((block[idx] + v) % p.value());
    }
    rank += rank_dense(p.value(), br, bc, block);
  }
  return rank;
}

long JordanPartition::dimension() const {
  long s = 0;
  for (long b : blocks) s += b;
  return s;
}

JordanPartition jordan_partition(const FpMatrix& n) {
  if (n.rows() != n.cols()) throw std::invalid_argument("jordan_partition: matrix not square");
  const int dim = n.rows();
  const long p = n.prime().value();
  if (dim == 0) return {};

  std::vector<long> ranks;  // ranks[k-1] = rank(n^k)
  std::vector<uint32_t> cur(static_cast<std::size_t>(dim) * dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c)
      cur[static_cast<std::size_t>(r) * dim + c] = n.at(r, c);

  long prev = dim;
  while (true) {
    long rk = rank_dense(p, dim, dim, cur);
    if (rk == prev)
      throw NotNilpotentError("jordan_partition: rank sequence stabilized at " +
                              std::to_string(rk));
    ranks.push_back(rk);
    prev = rk;
    if (rk == 0) break;
    // cur <- cur * n
    std::vector<uint32_t> next(static_cast<std::size_t>(dim) * dim, 0);
    for (int r = 0; r < dim; ++r)
      for (int k = 0; k < dim; ++k) {
        const uint64_t v = cur[static_cast<std::size_t>(r) * dim + k];
        if (!v) continue;
        for (int c = 0; c < dim; ++c) {
          uint64_t acc = next[static_cast<std::size_t>(r) * dim + c] + v * n.at(k, c);
          next[static_cast<std::size_t>(r) * dim + c] = static_cast<uint32_t>(acc % p);
        }
      }
    cur.swap(next);
  }

  // #blocks of size >= k is ranks[k-2] - ranks[k-1], with rank(n^0) = dim.
  JordanPartition part;
  const long maxk = static_cast<long>(ranks.size());
  auto rank_at = [&](long k) { return k == 0 ? dim : ranks[k - 1]; };
  for (long size = maxk; size >= 1; --size) {
    long ge = rank_at(size - 1) - rank_at(size);
    long gt = size < maxk ? rank_at(size) - rank_at(size + 1) : 0;
    for (long m = 0; m < ge - gt; ++m) part.blocks.push_back(size);
  }
  return part;
}

}  // namespace hkforge
