// Test-only reference implementations, kept independent of the library's
// algorithms: rational-pivot rank, determinant-divisor invariant factors,
// permutation-based isomorphism, direct-predicate quadrangle enumeration and
// bipartition-based connectivity.
#pragma once

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "whpp/linalg.hpp"
#include "whpp/matroid.hpp"
#include "whpp/rational.hpp"

namespace oracle {

/// Rank over Q by plain rational Gaussian elimination (pivot division).
inline int rank_rational_pivot(const whpp::IntegerMatrix& m) {
  using whpp::Rational;
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) a[r][c] = Rational(m.at(r, c));
  int rank = 0;
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int pivot = -1;
    for (int i = rank; i < m.rows(); ++i)
      if (!a[i][col].is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    for (int i = rank + 1; i < m.rows(); ++i) {
      if (a[i][col].is_zero()) continue;
      Rational f = a[i][col] / a[rank][col];
      for (int j = col; j < m.cols(); ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// Exact integer determinant by expansion (small matrices only).
inline whpp::BigInt det_expansion(const std::vector<std::vector<whpp::BigInt>>& a) {
  using whpp::BigInt;
  const size_t n = a.size();
  if (n == 0) return BigInt(1);
  if (n == 1) return a[0][0];
  BigInt out(0);
  for (size_t c = 0; c < n; ++c) {
    std::vector<std::vector<BigInt>> sub;
    for (size_t i = 1; i < n; ++i) {
      std::vector<BigInt> row;
      for (size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(a[i][j]);
      sub.push_back(std::move(row));
    }
    BigInt term = a[0][c] * det_expansion(sub);
    out = (c % 2 == 0) ? out + term : out - term;
  }
  return out;
}

/// Invariant factors via determinant divisors: d_k = gcd(k-minors)/gcd((k-1)-minors).
/// Only suitable for very small matrices.
inline std::vector<whpp::BigInt> invariant_factors_minor_gcd(const whpp::IntegerMatrix& m) {
  using whpp::BigInt;
  const int rows = m.rows(), cols = m.cols();
  std::vector<BigInt> divisors;  // gcd of all k x k minors, k = 1..
  for (int k = 1; k <= std::min(rows, cols); ++k) {
    BigInt g(0);
    std::vector<int> ri(k), ci(k);
    std::iota(ri.begin(), ri.end(), 0);
    bool more_rows = true;
    while (more_rows) {
      std::iota(ci.begin(), ci.end(), 0);
      bool more_cols = true;
      while (more_cols) {
        std::vector<std::vector<BigInt>> sub(k, std::vector<BigInt>(k));
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) sub[i][j] = m.at(ri[i], ci[j]);
        g = BigInt::gcd(g, det_expansion(sub));
        int i = k - 1;
        while (i >= 0 && ci[i] == cols - k + i) --i;
        if (i < 0)
          more_cols = false;
        else {
          ++ci[i];
          for (int j = i + 1; j < k; ++j) ci[j] = ci[j - 1] + 1;
        }
      }
      int i = k - 1;
      while (i >= 0 && ri[i] == rows - k + i) --i;
      if (i < 0)
        more_rows = false;
      else {
        ++ri[i];
        for (int j = i + 1; j < k; ++j) ri[j] = ri[j - 1] + 1;
      }
    }
    if (g.is_zero()) break;
    divisors.push_back(g);
  }
  std::vector<BigInt> factors;
  BigInt prev(1);
  for (const BigInt& d : divisors) {
    factors.push_back(d / prev);
    prev = d;
  }
  return factors;
}

/// Isomorphism by trying every permutation of the ground set (n <= 8).
inline bool perm_isomorphic(const whpp::Matroid& a, const whpp::Matroid& b) {
  if (a.ground_size() != b.ground_size() || a.rank() != b.rank() ||
      a.num_bases() != b.num_bases())
    return false;
  const int n = a.ground_size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (whpp::Subset s : a.bases()) {
      whpp::Subset image = 0;
      for (int e : whpp::subset_elements(s)) image |= whpp::Subset(1) << perm[e];
      if (!b.is_basis(image)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

using QuadTuple = std::tuple<whpp::Subset, int, int, int, int>;

/// Degenerate quadrangles by direct test of the defining predicate over all
/// (S, i, j, k, l) in canonical form.
inline std::set<QuadTuple> brute_quadrangles(const whpp::Matroid& m) {
  using whpp::Subset;
  std::set<QuadTuple> out;
  const int n = m.ground_size(), r = m.rank();
  if (r < 2) return out;
  std::vector<int> idx(r - 2);
  std::iota(idx.begin(), idx.end(), 0);
  bool more = (r - 2 <= n);
  if (r - 2 == 0) idx.clear();
  while (more) {
    Subset s = whpp::subset_of(idx);
    std::vector<int> rest = whpp::subset_elements(m.full_set() & ~s);
    const int t = static_cast<int>(rest.size());
    for (int a = 0; a < t; ++a)
      for (int b = a + 1; b < t; ++b)
        for (int c = 0; c < t; ++c)
          for (int d = c + 1; d < t; ++d) {
            int i = rest[a], j = rest[b], k = rest[c], l = rest[d];
            if (i == k || i == l || j == k || j == l) continue;
            if (std::make_pair(i, j) >= std::make_pair(k, l)) continue;
            auto bit = [](int e) { return Subset(1) << e; };
            if (!m.is_basis(s | bit(i) | bit(k))) continue;
            if (!m.is_basis(s | bit(i) | bit(l))) continue;
            if (!m.is_basis(s | bit(j) | bit(l))) continue;
            if (!m.is_basis(s | bit(j) | bit(k))) continue;
            int diag_bases = (m.is_basis(s | bit(i) | bit(j)) ? 1 : 0) +
                             (m.is_basis(s | bit(k) | bit(l)) ? 1 : 0);
            if (diag_bases > 1) continue;
            out.insert({s, i, j, k, l});
          }
    if (idx.empty()) break;
    int i = r - 3;
    while (i >= 0 && idx[i] == n - (r - 2) + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < r - 2; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

/// Number of connected components by exhaustive separator search: a proper
/// subset A is a separator iff rank(A) + rank(E∖A) = rank(E).
inline int component_count_bipartition(const whpp::Matroid& m) {
  const int n = m.ground_size();
  if (n == 0) return 0;
  std::function<int(whpp::Subset, int)> solve = [&](whpp::Subset ground, int size) -> int {
    if (size <= 1) return size;
    std::vector<int> elems = whpp::subset_elements(ground);
    int total_rank = m.subset_rank(ground);
    // iterate proper nonempty subsets containing the first element
    whpp::Subset rest = ground & ~(whpp::Subset(1) << elems[0]);
    for (whpp::Subset sub = rest; sub; sub = (sub - 1) & rest) {
      whpp::Subset a = ground & ~sub;  // contains elems[0]
      if (a == ground) continue;
      if (m.subset_rank(a) + m.subset_rank(sub) == total_rank)
        return solve(a, std::popcount(a)) + solve(sub, std::popcount(sub));
    }
    return 1;
  };
  return solve(m.full_set(), n);
}

}  // namespace oracle
