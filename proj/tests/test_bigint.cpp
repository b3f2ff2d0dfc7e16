#include <random>

#include "doctest.h"
#include "whpp/bigint.hpp"
#include "whpp/rational.hpp"

using whpp::BigInt;
using whpp::Rational;

TEST_CASE("small-value arithmetic agrees with native integers") {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<long long> dist(-1000000000LL, 1000000000LL);
  for (int trial = 0; trial < 2000; ++trial) {
    long long a = dist(rng), b = dist(rng);
    CHECK(BigInt(a) + BigInt(b) == BigInt(a + b));
    CHECK(BigInt(a) - BigInt(b) == BigInt(a - b));
    CHECK(BigInt(a) * BigInt(b) == BigInt(a * b));
    if (b != 0) {
      CHECK(BigInt(a) / BigInt(b) == BigInt(a / b));
      CHECK(BigInt(a) % BigInt(b) == BigInt(a % b));
    }
  }
}

TEST_CASE("division identity holds for multi-limb operands") {
  std::mt19937_64 rng(777);
  auto random_big = [&](int limbs) {
    BigInt out(0);
    for (int i = 0; i < limbs; ++i)
      out = out * BigInt(1LL << 32) + BigInt(static_cast<long long>(rng() & 0xffffffffu));
    if (rng() & 1) out = -out;
    return out;
  };
  for (int trial = 0; trial < 500; ++trial) {
    BigInt a = random_big(1 + static_cast<int>(rng() % 5));
    BigInt b = random_big(1 + static_cast<int>(rng() % 3));
    if (b.is_zero()) continue;
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK(r.abs() < b.abs());
    if (!r.is_zero()) CHECK(r.sign() == a.sign());
  }
}

TEST_CASE("division identity under adversarial limb patterns") {
  // limbs biased toward the values that stress the trial-quotient correction
  std::mt19937_64 rng(1);
  auto biased_limb = [&]() -> long long {
    switch (rng() % 6) {
      case 0: return 0xffffffffLL;
      case 1: return 0x80000000LL;
      case 2: return 0x7fffffffLL;
      case 3: return 0;
      case 4: return 1;
      default: return static_cast<long long>(rng() & 0xffffffffu);
    }
  };
  auto random_big = [&](int limbs) {
    BigInt out(0);
    for (int i = 0; i < limbs; ++i) out = out * BigInt(1LL << 32) + BigInt(biased_limb());
    if (rng() & 1) out = -out;
    return out;
  };
  for (int trial = 0; trial < 3000; ++trial) {
    BigInt a = random_big(1 + static_cast<int>(rng() % 6));
    BigInt b = random_big(1 + static_cast<int>(rng() % 4));
    if (b.is_zero()) continue;
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK(r.abs() < b.abs());
  }
}

TEST_CASE("decimal round trip and known powers") {
  BigInt two(2);
  BigInt p = 1;
  for (int i = 0; i < 100; ++i) p *= two;
  CHECK(p.str() == "1267650600228229401496703205376");  // 2^100
  CHECK(BigInt::from_string(p.str()) == p);
  CHECK(BigInt::from_string("-0").str() == "0");
  CHECK(BigInt::from_string("-987654321987654321").str() == "-987654321987654321");
}

TEST_CASE("gcd") {
  CHECK(BigInt::gcd(BigInt(12), BigInt(18)) == BigInt(6));
  CHECK(BigInt::gcd(BigInt(-12), BigInt(18)) == BigInt(6));
  CHECK(BigInt::gcd(BigInt(0), BigInt(-7)) == BigInt(7));
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    long long a = static_cast<long long>(rng() % 1000000) - 500000;
    long long b = static_cast<long long>(rng() % 1000000) - 500000;
    long long g = std::__gcd(std::abs(a), std::abs(b));
    CHECK(BigInt::gcd(BigInt(a), BigInt(b)) == BigInt(g));
  }
}

TEST_CASE("rationals reduce to canonical form") {
  CHECK(Rational(BigInt(2), BigInt(4)) == Rational(BigInt(1), BigInt(2)));
  CHECK(Rational(BigInt(3), BigInt(-6)).str() == "-1/2");
  CHECK(Rational(BigInt(0), BigInt(-5)).str() == "0");
  CHECK(Rational::from_string("6/4").str() == "3/2");
  CHECK((Rational(1, 3) + Rational(1, 6)).str() == "1/2");
  CHECK((Rational(2, 3) * Rational(9, 4)).str() == "3/2");
  CHECK((Rational(1, 3) - Rational(1, 3)).is_zero());
  CHECK((Rational(7, 2) / Rational(7, 2)).str() == "1");
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(1, 3));
}
