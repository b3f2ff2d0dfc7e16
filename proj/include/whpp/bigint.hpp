#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace whpp {

/// Arbitrary-precision signed integer, sign/magnitude with 32-bit limbs.
///
/// Only the operations needed by exact elimination and Smith reduction are
/// provided: ring arithmetic, truncated division, gcd and decimal I/O.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);  // NOLINT(google-explicit-constructor)

  static BigInt from_string(std::string_view s);
  std::string str() const;

  int sign() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }
  bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }

  bool fits_int64() const;
  long long to_int64() const;  // valid only if fits_int64()

  BigInt operator-() const;
  BigInt abs() const;

  BigInt operator+(const BigInt& o) const;
  BigInt operator-(const BigInt& o) const;
  BigInt operator*(const BigInt& o) const;
  /// Truncated quotient (rounds toward zero).
  BigInt operator/(const BigInt& o) const;
  /// Remainder matching truncated division: a == (a/b)*b + (a%b).
  BigInt operator%(const BigInt& o) const;

  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }
  BigInt& operator/=(const BigInt& o) { return *this = *this / o; }

  bool operator==(const BigInt& o) const { return sign_ == o.sign_ && mag_ == o.mag_; }
  bool operator!=(const BigInt& o) const { return !(*this == o); }
  bool operator<(const BigInt& o) const { return cmp(o) < 0; }
  bool operator>(const BigInt& o) const { return cmp(o) > 0; }
  bool operator<=(const BigInt& o) const { return cmp(o) <= 0; }
  bool operator>=(const BigInt& o) const { return cmp(o) >= 0; }

  /// -1, 0, +1 as *this compares to o.
  int cmp(const BigInt& o) const;

  static BigInt gcd(BigInt a, BigInt b);
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

 private:
  int sign_ = 0;                   // -1, 0, +1
  std::vector<std::uint32_t> mag_; // little-endian limbs, no leading zeros

  void trim();
  static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  // requires |a| >= |b|
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  static void divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                         std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r);
};

inline BigInt abs(const BigInt& a) { return a.abs(); }

}  // namespace whpp
