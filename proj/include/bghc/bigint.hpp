#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bghc {

// Unsigned arbitrary-precision integer, base 10^9 limbs, little endian.
// Only what the bound formulas need: +, *, pow, exact small division, compare.
class BigUint {
 public:
  BigUint() = default;
  explicit BigUint(uint64_t v);

  bool is_zero() const { return limbs_.empty(); }
  bool fits_u64() const;
  uint64_t as_u64() const;  // requires fits_u64()

  BigUint& operator+=(const BigUint& rhs);
  BigUint& operator*=(const BigUint& rhs);
  BigUint& operator*=(uint32_t rhs);

  friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }
  friend BigUint operator*(BigUint a, const BigUint& b) { return a *= b; }
  friend BigUint operator*(BigUint a, uint32_t b) { return a *= b; }

  // In-place division by a small divisor, returns the remainder.
  uint32_t divmod_u32(uint32_t d);

  // this^exp by repeated squaring.
  BigUint pow_u(uint64_t exp) const;

  int compare(const BigUint& rhs) const;  // -1, 0, 1
  friend bool operator==(const BigUint& a, const BigUint& b) { return a.compare(b) == 0; }
  friend bool operator!=(const BigUint& a, const BigUint& b) { return a.compare(b) != 0; }
  friend bool operator<(const BigUint& a, const BigUint& b) { return a.compare(b) < 0; }
  friend bool operator<=(const BigUint& a, const BigUint& b) { return a.compare(b) <= 0; }
  friend bool operator>(const BigUint& a, const BigUint& b) { return a.compare(b) > 0; }
  friend bool operator>=(const BigUint& a, const BigUint& b) { return a.compare(b) >= 0; }

  std::string str() const;

 private:
  static constexpr uint32_t kBase = 1000000000u;
  std::vector<uint32_t> limbs_;  // normalized: no trailing zero limbs
  void trim();
};

BigUint big_pow(uint64_t base, uint64_t exp);
BigUint factorial_big(uint64_t x);
BigUint superfactorial_big(uint64_t x);  // x!(x-1)!...0!

// C(a,b) with the usual zero conventions for b<0, a<0, a<b.
// Values here stay far below 2^64 (exponent slots in the bound formulas).
uint64_t binomial_u64(int64_t a, int64_t b);

}  // namespace bghc
