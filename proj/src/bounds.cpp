#include "bghc/bounds.hpp"

#include <algorithm>
#include <map>

#include "bghc/basis.hpp"

namespace bghc {

BigUint superfactorial(uint64_t x) { return superfactorial_big(x); }

BigUint bound_2conn(int n) {
  if (n < 3) throw Error("BadParams", "needs n >= 3");
  return big_pow(2, static_cast<uint64_t>(n - 3));
}

BigUint bound_complete(int n) {
  if (n < 3) throw Error("BadParams", "needs n >= 3");
  return factorial_big(static_cast<uint64_t>(n - 2));
}

BigUint bound_prism(int n) {
  if (n < 3) throw Error("BadParams", "needs n >= 3");
  return factorial_big(static_cast<uint64_t>(n - 2)) *
         factorial_big(static_cast<uint64_t>(n - 3));
}

namespace {

BigUint hc_closed_form(int n, int k) {
  // 2^C(n+k-4,n-3) 3^C(n+k-7,k-3) / ((n-1)k)
  //   * prod_{r=4..k} (r sf(r-1))^C(n+k-4-r, n-4)
  //   * prod_{s=4..n} ((s-1)!)^C(n+k-4-s, k-4)
  BigUint acc = big_pow(2, binomial_u64(n + k - 4, n - 3));
  acc *= big_pow(3, binomial_u64(n + k - 7, k - 3));
  for (int r = 4; r <= k; ++r) {
    BigUint base = superfactorial_big(r - 1);
    base *= static_cast<uint32_t>(r);
    acc *= base.pow_u(binomial_u64(n + k - 4 - r, n - 4));
  }
  for (int s = 4; s <= n; ++s) {
    acc *= factorial_big(s - 1).pow_u(binomial_u64(n + k - 4 - s, k - 4));
  }
  uint32_t denom = static_cast<uint32_t>((n - 1) * k);
  uint32_t rem = acc.divmod_u32(denom);
  if (rem != 0) throw Error("NotIntegral", "closed form not divisible by (n-1)k");
  return acc;
}

}  // namespace

BoundValue hc_lower(int n, int k) {
  if (n < 3 || k < 2) throw Error("BadParams", "hc_lower needs n >= 3, k >= 2");
  if (k == 2) return {bound_2conn(n), "thm-2conn"};
  if (n == 3) return {superfactorial_big(k - 1), "thm-hc(3,k)"};
  if (k == 3) {
    BigUint v = factorial_big(n - 2);
    v *= big_pow(2, binomial_u64(n - 1, 2));
    return {v, "thm-hc(n,3)"};
  }
  return {hc_closed_form(n, k), "thm-hc(n,k)"};
}

BigUint hc_recurrence(int n, int k) {
  if (n < 3 || k < 3) throw Error("BadParams", "recurrence rows start at n,k = 3");
  static std::map<std::pair<int, int>, BigUint> memo;
  auto key = std::make_pair(n, k);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  BigUint v;
  if (n == 3) {
    v = superfactorial_big(k - 1);
  } else if (k == 3) {
    v = factorial_big(n - 2);
    v *= big_pow(2, binomial_u64(n - 1, 2));
  } else {
    v = BigUint(static_cast<uint64_t>(n - 2) * static_cast<uint64_t>(k - 1));
    v *= hc_recurrence(n - 1, k);
    v *= hc_recurrence(n, k - 1);
  }
  memo[key] = v;
  return v;
}

BoundValue hc_lower_corollary(int n, int k) {
  if (!(n > k && k >= 5)) throw Error("BadParams", "corollary needs n > k >= 5");
  BigUint acc(1);
  for (int r = 3; r <= n; ++r) {
    uint64_t expo = binomial_u64(n + k - 5 - r, n - 6) + binomial_u64(n + k - 4 - r, n - 4) +
                    binomial_u64(n + k - 5 - r, k - 5);
    acc *= superfactorial_big(r - 1).pow_u(expo);
  }
  return {acc, "corollary-hc(n,k)"};
}

BoundValue catalan_lower(int k) {
  if (k < 2) throw Error("BadParams", "needs k >= 2");
  return {superfactorial_big(k - 1) * superfactorial_big(k - 2), "thm-latticepath"};
}

BigUint catalan_recurrence(int k) {
  if (k < 2) throw Error("BadParams", "needs k >= 2");
  BigUint v(1);
  for (int i = 3; i <= k; ++i) {
    BigUint sq = v;
    sq *= v;
    v = BigUint(static_cast<uint64_t>(i - 1));
    v *= sq;
  }
  return v;
}

bool catalan_step_inequality_holds(int k) {
  if (k < 3) throw Error("BadParams", "needs k >= 3");
  BigUint lhs(static_cast<uint64_t>(k - 1));
  BigUint inner = superfactorial_big(k - 2) * superfactorial_big(k - 3);
  lhs *= inner;
  lhs *= inner;
  BigUint rhs = superfactorial_big(k - 1) * superfactorial_big(k - 2);
  return lhs >= rhs;
}

BoundValue uniform_lower(int r, int n) {
  if (!(n > r && r >= 1)) throw Error("BadParams", "needs n > r >= 1");
  BigUint base = factorial_big(n - r - 1) * factorial_big(r - 1);
  int expo = std::min(n - r - 1, r - 1);
  return {base.pow_u(static_cast<uint64_t>(expo)), "thm-uniform"};
}

uint64_t uniform_good_cycle_bound(int r, int n) {
  if (!(n > r && r >= 1)) throw Error("BadParams", "needs n > r >= 1");
  return 3ull * static_cast<uint64_t>(n - r - 1) * static_cast<uint64_t>(r - 1);
}

}  // namespace bghc
