#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "whpp/bigint.hpp"

namespace whpp {

/// Dense exact integer matrix (row-major, arbitrary-precision entries).
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  BigInt& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const BigInt& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
  void set(int r, int c, long long v) { at(r, c) = BigInt(v); }

  bool operator==(const IntegerMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<BigInt> a_;
};

IntegerMatrix transpose(const IntegerMatrix& m);

/// Structure of a finitely generated abelian group: free rank plus the
/// invariant-factor list d_1 | d_2 | ... with every d_i >= 2.
struct AbelianInvariants {
  long long free_rank = 0;
  std::vector<BigInt> torsion;

  bool operator==(const AbelianInvariants& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }
  std::string str() const;
};

/// Rank over the rationals by fraction-free (Bareiss) elimination with
/// minimal-pivot selection; int64 arithmetic with overflow checks, falling
/// back to arbitrary precision when needed.
int rank_rational(const IntegerMatrix& m);

/// cols - rank: the dimension of the rational null space.
int nullity_rational(const IntegerMatrix& m);

/// Rank of the matrix reduced mod p (fast path; never exceeds the exact rank).
int rank_modular(const IntegerMatrix& m, std::uint32_t p);

/// Invariant factors of the presented abelian group on `m.cols()` generators,
/// one relation per row. free_rank = cols - (number of nonzero factors).
AbelianInvariants smith_normal_form(const IntegerMatrix& m);

/// "rows cols" header then row-major integers, one matrix row per line.
std::string dump_matrix(const IntegerMatrix& m);

}  // namespace whpp
