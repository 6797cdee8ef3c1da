#include "bghc/bigint.hpp"

#include <stdexcept>

namespace bghc {

BigUint::BigUint(uint64_t v) {
  while (v > 0) {
    limbs_.push_back(static_cast<uint32_t>(v % kBase));
    v /= kBase;
  }
}

void BigUint::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

bool BigUint::fits_u64() const {
  // 3 limbs can exceed 2^64; check by reconstruction.
  if (limbs_.size() > 3) return false;
  unsigned __int128 v = 0;
  for (size_t i = limbs_.size(); i-- > 0;) v = v * kBase + limbs_[i];
  return v <= static_cast<unsigned __int128>(UINT64_MAX);
}

uint64_t BigUint::as_u64() const {
  if (!fits_u64()) throw std::overflow_error("BigUint::as_u64: value too large");
  uint64_t v = 0;
  for (size_t i = limbs_.size(); i-- > 0;) v = v * kBase + limbs_[i];
  return v;
}

BigUint& BigUint::operator+=(const BigUint& rhs) {
  size_t n = std::max(limbs_.size(), rhs.limbs_.size());
  limbs_.resize(n, 0);
  uint64_t carry = 0;
  for (size_t i = 0; i < n; ++i) {
    uint64_t s = carry + limbs_[i] + (i < rhs.limbs_.size() ? rhs.limbs_[i] : 0);
    limbs_[i] = static_cast<uint32_t>(s % kBase);
    carry = s / kBase;
  }
  if (carry) limbs_.push_back(static_cast<uint32_t>(carry));
  return *this;
}

BigUint& BigUint::operator*=(const BigUint& rhs) {
  if (is_zero() || rhs.is_zero()) {
    limbs_.clear();
    return *this;
  }
  std::vector<uint64_t> acc(limbs_.size() + rhs.limbs_.size(), 0);
  for (size_t i = 0; i < limbs_.size(); ++i) {
    uint64_t carry = 0;
    for (size_t j = 0; j < rhs.limbs_.size(); ++j) {
      unsigned __int128 cur = acc[i + j];
      cur += static_cast<unsigned __int128>(limbs_[i]) * rhs.limbs_[j] + carry;
      acc[i + j] = static_cast<uint64_t>(cur % kBase);
      carry = static_cast<uint64_t>(cur / kBase);
    }
    size_t k = i + rhs.limbs_.size();
    while (carry) {
      uint64_t cur = acc[k] + carry;
      acc[k] = cur % kBase;
      carry = cur / kBase;
      ++k;
    }
  }
  limbs_.assign(acc.size(), 0);
  for (size_t i = 0; i < acc.size(); ++i) limbs_[i] = static_cast<uint32_t>(acc[i]);
  trim();
  return *this;
}

BigUint& BigUint::operator*=(uint32_t rhs) {
  if (rhs == 0) {
    limbs_.clear();
    return *this;
  }
  uint64_t carry = 0;
  for (auto& limb : limbs_) {
    uint64_t cur = static_cast<uint64_t>(limb) * rhs + carry;
    limb = static_cast<uint32_t>(cur % kBase);
    carry = cur / kBase;
  }
  while (carry) {
    limbs_.push_back(static_cast<uint32_t>(carry % kBase));
    carry /= kBase;
  }
  return *this;
}

uint32_t BigUint::divmod_u32(uint32_t d) {
  if (d == 0) throw std::invalid_argument("BigUint::divmod_u32: division by zero");
  uint64_t rem = 0;
  for (size_t i = limbs_.size(); i-- > 0;) {
    uint64_t cur = rem * kBase + limbs_[i];
    limbs_[i] = static_cast<uint32_t>(cur / d);
    rem = cur % d;
  }
  trim();
  return static_cast<uint32_t>(rem);
}

BigUint BigUint::pow_u(uint64_t exp) const {
  BigUint result(1);
  BigUint base = *this;
  while (exp > 0) {
    if (exp & 1) result *= base;
    exp >>= 1;
    if (exp) base *= base;
  }
  return result;
}

int BigUint::compare(const BigUint& rhs) const {
  if (limbs_.size() != rhs.limbs_.size()) return limbs_.size() < rhs.limbs_.size() ? -1 : 1;
  for (size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] < rhs.limbs_[i] ? -1 : 1;
  }
  return 0;
}

std::string BigUint::str() const {
  if (limbs_.empty()) return "0";
  std::string out = std::to_string(limbs_.back());
  for (size_t i = limbs_.size() - 1; i-- > 0;) {
    std::string part = std::to_string(limbs_[i]);
    out += std::string(9 - part.size(), '0') + part;
  }
  return out;
}

BigUint big_pow(uint64_t base, uint64_t exp) { return BigUint(base).pow_u(exp); }

BigUint factorial_big(uint64_t x) {
  BigUint result(1);
  for (uint64_t i = 2; i <= x; ++i) result *= static_cast<uint32_t>(i);
  return result;
}

BigUint superfactorial_big(uint64_t x) {
  BigUint result(1);
  BigUint fact(1);
  for (uint64_t i = 1; i <= x; ++i) {
    fact *= static_cast<uint32_t>(i);
    result *= fact;
  }
  return result;
}

uint64_t binomial_u64(int64_t a, int64_t b) {
  if (b < 0 || a < 0 || a < b) return 0;
  b = std::min(b, a - b);
  unsigned __int128 result = 1;
  for (int64_t i = 1; i <= b; ++i) {
    result = result * static_cast<uint64_t>(a - b + i) / static_cast<uint64_t>(i);
  }
  if (result > static_cast<unsigned __int128>(UINT64_MAX))
    throw std::overflow_error("binomial_u64: overflow");
  return static_cast<uint64_t>(result);
}

}  // namespace bghc
