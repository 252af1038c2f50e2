#include <stdexcept>
#include <random>
#include <sstream>

#include "doctest.h"

#include "collatz/nat.hpp"

using collatz::Nat;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

namespace {

Nat random_nat(std::mt19937_64& rng, int max_limbs) {
  std::uniform_int_distribution<int> limbs(0, max_limbs);
  Nat n;
  int count = limbs(rng);
  for (int i = 0; i < count; ++i) {
    n <<= 64;
    n += Nat(rng());
  }
  return n;
}

std::string u128_str(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return s;
}

}  // namespace

TEST_CASE("nat decimal roundtrip") {
  CHECK(Nat(0).to_decimal() == "0");
  CHECK(Nat(1).to_decimal() == "1");
  CHECK(Nat(18446744073709551615ull).to_decimal() == "18446744073709551615");
  CHECK(Nat::from_decimal("0").is_zero());
  CHECK(Nat::from_decimal("00012") == Nat(12));

  std::string big = "9" + std::string(999, '3');  // 1000 digits
  CHECK(Nat::from_decimal(big).to_decimal() == big);

  CHECK_THROWS_AS(Nat::from_decimal(""), std::invalid_argument);
  CHECK_THROWS_AS(Nat::from_decimal("12a"), std::invalid_argument);
  CHECK_THROWS_AS(Nat::from_decimal(" 1"), std::invalid_argument);
}

TEST_CASE("nat small arithmetic agrees with native 128-bit") {
  std::mt19937_64 rng(12345);
  for (int i = 0; i < 2000; ++i) {
    u64 a = rng() >> (rng() % 64);
    u64 b = rng() >> (rng() % 64);
    CHECK((Nat(a) + Nat(b)).to_decimal() ==
          u128_str(static_cast<u128>(a) + b));
    CHECK((Nat(a) * Nat(b)).to_decimal() ==
          u128_str(static_cast<u128>(a) * b));
    if (a >= b) CHECK((Nat(a) - Nat(b)) == Nat(a - b));
    if (b != 0) {
      auto [q, r] = Nat(a).divmod_u64(b);
      CHECK(q == Nat(a / b));
      CHECK(r == a % b);
    }
    CHECK((Nat(a) <=> Nat(b)) == (a <=> b));
  }
}

TEST_CASE("nat algebraic properties on random values") {
  std::mt19937_64 rng(777);
  for (int i = 0; i < 300; ++i) {
    Nat a = random_nat(rng, 5);
    Nat b = random_nat(rng, 5);
    Nat c = random_nat(rng, 3);

    CHECK(a + b == b + a);
    CHECK((a + b) - b == a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);

    u64 shift = rng() % 130;
    CHECK(((a << shift) >> shift) == a);
    CHECK((a << shift) == a * Nat::pow2(shift));

    u64 d = rng() | 1;
    auto [q, r] = a.divmod_u64(d);
    CHECK(q * d + Nat(r) == a);
    CHECK(r < d);
  }
}

TEST_CASE("nat subtraction below zero throws") {
  CHECK_THROWS_AS(Nat(3) - Nat(5), std::domain_error);
  CHECK_THROWS_AS(Nat(0) - Nat(1), std::domain_error);
  CHECK((Nat(5) - Nat(5)).is_zero());
}

TEST_CASE("nat bit operations") {
  CHECK(Nat::pow2(0) == Nat(1));
  CHECK(Nat::pow2(64).to_decimal() == "18446744073709551616");
  CHECK(Nat::pow2(200).bit_length() == 201);
  CHECK(Nat(0).bit_length() == 0);
  CHECK(Nat(1).bit_length() == 1);

  CHECK(Nat(12).trailing_zeros() == 2);
  CHECK(Nat::pow2(130).trailing_zeros() == 130);
  CHECK_THROWS_AS(Nat(0).trailing_zeros(), std::domain_error);

  CHECK(Nat(1).is_power_of_two());
  CHECK(Nat::pow2(100).is_power_of_two());
  CHECK_FALSE(Nat(0).is_power_of_two());
  CHECK_FALSE(Nat(12).is_power_of_two());
  CHECK_FALSE((Nat::pow2(100) + 1).is_power_of_two());

  CHECK(Nat(6).is_even());
  CHECK((Nat::pow2(100) + 1).is_odd());
}

TEST_CASE("nat pow") {
  CHECK(Nat::pow(Nat(3), 0) == Nat(1));
  CHECK(Nat::pow(Nat(3), 5) == Nat(243));
  CHECK(Nat::pow(Nat(10), 19).to_decimal() == "10000000000000000000");
  CHECK(Nat::pow(Nat(2), 100) == Nat::pow2(100));
  // 10^142 has 143 digits
  CHECK(Nat::pow(Nat(10), 142).to_decimal().size() == 143);
}

TEST_CASE("nat to_u64 bounds") {
  CHECK(Nat(42).to_u64() == 42);
  CHECK(Nat(42).fits_u64());
  CHECK_FALSE(Nat::pow2(64).fits_u64());
  CHECK_THROWS_AS(Nat::pow2(64).to_u64(), std::overflow_error);
}

TEST_CASE("nat stream output") {
  std::ostringstream os;
  os << Nat(123);
  CHECK(os.str() == "123");
}
