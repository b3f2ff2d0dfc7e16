#include "whpp/linalg.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <sstream>

namespace whpp {

IntegerMatrix transpose(const IntegerMatrix& m) {
  IntegerMatrix out(m.cols(), m.rows());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out.at(c, r) = m.at(r, c);
  return out;
}

std::string AbelianInvariants::str() const {
  std::string out = "Z^" + std::to_string(free_rank);
  for (const BigInt& t : torsion) out += " + Z/" + t.str();
  return out;
}

std::string dump_matrix(const IntegerMatrix& m) {
  std::ostringstream out;
  out << m.rows() << " " << m.cols() << "\n";
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (c) out << " ";
      out << m.at(r, c).str();
    }
    out << "\n";
  }
  return out.str();
}

namespace {

/// Escape hatch from the machine-word fast path into arbitrary precision.
struct OverflowEscape {};

struct CheckedI64 {
  long long v = 0;
  CheckedI64() = default;
  CheckedI64(long long x) : v(x) {}  // NOLINT(google-explicit-constructor)

  CheckedI64 operator+(CheckedI64 o) const {
    long long r;
    if (__builtin_add_overflow(v, o.v, &r)) throw OverflowEscape{};
    return r;
  }
  CheckedI64 operator-(CheckedI64 o) const {
    long long r;
    if (__builtin_sub_overflow(v, o.v, &r)) throw OverflowEscape{};
    return r;
  }
  CheckedI64 operator*(CheckedI64 o) const {
    long long r;
    if (__builtin_mul_overflow(v, o.v, &r)) throw OverflowEscape{};
    return r;
  }
  CheckedI64 operator/(CheckedI64 o) const {
    if (v == LLONG_MIN && o.v == -1) throw OverflowEscape{};
    return v / o.v;
  }
  CheckedI64 operator%(CheckedI64 o) const {
    if (v == LLONG_MIN && o.v == -1) throw OverflowEscape{};
    return v % o.v;
  }
  CheckedI64 operator-() const {
    if (v == LLONG_MIN) throw OverflowEscape{};
    return -v;
  }
  bool operator==(CheckedI64 o) const { return v == o.v; }
  bool operator!=(CheckedI64 o) const { return v != o.v; }
  bool is_zero() const { return v == 0; }
  CheckedI64 abs() const {
    if (v == LLONG_MIN) throw OverflowEscape{};
    return v < 0 ? -v : v;
  }
  bool abs_less(CheckedI64 o) const {
    return abs().v < o.abs().v;
  }
};

struct BigScalar {
  BigInt v;
  BigScalar() = default;
  BigScalar(long long x) : v(x) {}  // NOLINT(google-explicit-constructor)
  BigScalar(BigInt x) : v(std::move(x)) {}  // NOLINT(google-explicit-constructor)
  BigScalar operator+(const BigScalar& o) const { return v + o.v; }
  BigScalar operator-(const BigScalar& o) const { return v - o.v; }
  BigScalar operator*(const BigScalar& o) const { return v * o.v; }
  BigScalar operator/(const BigScalar& o) const { return v / o.v; }
  BigScalar operator%(const BigScalar& o) const { return v % o.v; }
  BigScalar operator-() const { return -v; }
  bool operator==(const BigScalar& o) const { return v == o.v; }
  bool operator!=(const BigScalar& o) const { return v != o.v; }
  bool is_zero() const { return v.is_zero(); }
  BigScalar abs() const { return v.abs(); }
  bool abs_less(const BigScalar& o) const { return v.abs() < o.v.abs(); }
};

template <class Z>
std::vector<std::vector<Z>> load(const IntegerMatrix& m);

template <>
std::vector<std::vector<CheckedI64>> load(const IntegerMatrix& m) {
  std::vector<std::vector<CheckedI64>> out(m.rows(), std::vector<CheckedI64>(m.cols()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      if (!m.at(r, c).fits_int64()) throw OverflowEscape{};
      out[r][c] = m.at(r, c).to_int64();
    }
  return out;
}

template <>
std::vector<std::vector<BigScalar>> load(const IntegerMatrix& m) {
  std::vector<std::vector<BigScalar>> out(m.rows(), std::vector<BigScalar>(m.cols()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out[r][c] = m.at(r, c);
  return out;
}

/// Fraction-free elimination; the pivot with minimal absolute value in the
/// remaining submatrix is chosen at every step to bound entry growth.
template <class Z>
int rank_bareiss(std::vector<std::vector<Z>> a, int cols) {
  const int rows = static_cast<int>(a.size());
  std::vector<bool> col_used(cols, false);
  Z prev = 1;
  int rank = 0;
  while (rank < rows) {
    int pr = -1, pc = -1;
    for (int i = rank; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        if (col_used[j] || a[i][j].is_zero()) continue;
        if (pr < 0 || a[i][j].abs_less(a[pr][pc])) {
          pr = i;
          pc = j;
        }
      }
    if (pr < 0) break;
    std::swap(a[rank], a[pr]);
    col_used[pc] = true;
    const Z pivot = a[rank][pc];
    for (int i = rank + 1; i < rows; ++i) {
      if (a[i][pc].is_zero() && rank > 0) {
        // still rescale the row so later exact divisions stay valid
        for (int j = 0; j < cols; ++j)
          if (!a[i][j].is_zero()) a[i][j] = a[i][j] * pivot / prev;
        continue;
      }
      const Z factor = a[i][pc];
      for (int j = 0; j < cols; ++j) {
        a[i][j] = (a[i][j] * pivot - factor * a[rank][j]) / prev;
      }
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

/// Row-operation-only echelon reduction over the integers. Preserves the row
/// lattice, so it is a valid preprocessing step before Smith reduction, and
/// the count of nonzero rows equals the rational rank.
template <class Z>
std::vector<std::vector<Z>> lattice_echelon(std::vector<std::vector<Z>> a, int cols) {
  std::vector<std::vector<Z>> done;
  size_t active = a.size();
  for (int col = 0; col < cols && active > 0; ++col) {
    while (true) {
      size_t best = active;
      for (size_t i = 0; i < active; ++i) {
        if (a[i][col].is_zero()) continue;
        if (best == active || a[i][col].abs_less(a[best][col])) best = i;
      }
      if (best == active) break;  // column clear
      bool reduced_all = true;
      for (size_t i = 0; i < active; ++i) {
        if (i == best || a[i][col].is_zero()) continue;
        Z q = a[i][col] / a[best][col];
        if (!q.is_zero())
          for (int j = col; j < cols; ++j) a[i][j] = a[i][j] - q * a[best][j];
        if (!a[i][col].is_zero()) reduced_all = false;
      }
      if (reduced_all) {
        done.push_back(std::move(a[best]));
        std::swap(a[best], a[active - 1]);
        --active;
        break;
      }
    }
  }
  return done;
}

/// Diagonalize by elementary row/column operations with minimal-pivot
/// selection, then repair the divisibility chain pairwise.
template <class Z>
std::vector<Z> snf_factors(std::vector<std::vector<Z>> a, int cols) {
  a = lattice_echelon(std::move(a), cols);
  const int rows = static_cast<int>(a.size());
  int t = 0;
  const int bound = std::min(rows, cols);
  while (t < bound) {
    int pr = -1, pc = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        if (a[i][j].is_zero()) continue;
        if (pr < 0 || a[i][j].abs_less(a[pr][pc])) {
          pr = i;
          pc = j;
        }
      }
    if (pr < 0) break;
    std::swap(a[t], a[pr]);
    if (pc != t)
      for (int i = 0; i < rows; ++i) std::swap(a[i][pc], a[i][t]);

    bool clean = true;
    for (int i = t + 1; i < rows; ++i) {
      if (a[i][t].is_zero()) continue;
      Z q = a[i][t] / a[t][t];
      if (!q.is_zero())
        for (int j = t; j < cols; ++j) a[i][j] = a[i][j] - q * a[t][j];
      if (!a[i][t].is_zero()) clean = false;
    }
    for (int j = t + 1; j < cols; ++j) {
      if (a[t][j].is_zero()) continue;
      Z q = a[t][j] / a[t][t];
      if (!q.is_zero())
        for (int i = t; i < rows; ++i) a[i][j] = a[i][j] - q * a[i][t];
      if (!a[t][j].is_zero()) clean = false;
    }
    if (!clean) continue;  // smaller remainders appeared; re-pivot
    ++t;
  }

  std::vector<Z> diag;
  for (int i = 0; i < t; ++i) diag.push_back(a[i][i].abs());

  // enforce d_i | d_{i+1} via gcd/lcm exchanges
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < diag.size(); ++i) {
      Z x = diag[i], y = diag[i + 1];
      Z g = x;
      Z b = y;
      while (!b.is_zero()) {
        Z r = g % b;
        g = b;
        b = r;
      }
      g = g.abs();
      if (g != x.abs()) {
        diag[i + 1] = (x * y / g).abs();
        diag[i] = g;
        changed = true;
      }
    }
  }
  return diag;
}

int rank_bareiss_dispatch(const IntegerMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  try {
    return rank_bareiss(load<CheckedI64>(m), m.cols());
  } catch (const OverflowEscape&) {
    return rank_bareiss(load<BigScalar>(m), m.cols());
  }
}

}  // namespace

int rank_rational(const IntegerMatrix& m) { return rank_bareiss_dispatch(m); }

int nullity_rational(const IntegerMatrix& m) { return m.cols() - rank_rational(m); }

int rank_modular(const IntegerMatrix& m, std::uint32_t p) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  const std::uint64_t mod = p;
  std::vector<std::vector<std::uint64_t>> a(m.rows(), std::vector<std::uint64_t>(m.cols()));
  BigInt bp(static_cast<long long>(p));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      BigInt rem = m.at(r, c) % bp;
      long long v = rem.to_int64();
      if (v < 0) v += p;
      a[r][c] = static_cast<std::uint64_t>(v);
    }
  auto pow_mod = [&](std::uint64_t base, std::uint64_t e) {
    std::uint64_t out = 1;
    base %= mod;
    while (e) {
      if (e & 1) out = out * base % mod;
      base = base * base % mod;
      e >>= 1;
    }
    return out;
  };
  int rank = 0;
  int rows = m.rows(), cols = m.cols();
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i)
      if (a[i][col] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    std::uint64_t inv = pow_mod(a[rank][col], mod - 2);
    for (int j = col; j < cols; ++j) a[rank][j] = a[rank][j] * inv % mod;
    for (int i = rank + 1; i < rows; ++i) {
      if (a[i][col] == 0) continue;
      std::uint64_t f = a[i][col];
      for (int j = col; j < cols; ++j)
        a[i][j] = (a[i][j] + (mod - f) * a[rank][j]) % mod;
    }
    ++rank;
  }
  return rank;
}

AbelianInvariants smith_normal_form(const IntegerMatrix& m) {
  std::vector<BigInt> diag;
  if (m.rows() == 0 || m.cols() == 0) {
    diag = {};
  } else {
    bool big = false;
    try {
      auto d = snf_factors(load<CheckedI64>(m), m.cols());
      for (const auto& z : d) diag.emplace_back(z.v);
    } catch (const OverflowEscape&) {
      big = true;
    }
    if (big) {
      auto d = snf_factors(load<BigScalar>(m), m.cols());
      for (const auto& z : d) diag.push_back(z.v);
    }
  }
  AbelianInvariants out;
  long long nonzero = 0;
  for (const BigInt& d : diag) {
    if (d.is_zero()) continue;
    ++nonzero;
    if (!(d == BigInt(1))) out.torsion.push_back(d);
  }
  std::sort(out.torsion.begin(), out.torsion.end());
  out.free_rank = m.cols() - nonzero;
  return out;
}

}  // namespace whpp
