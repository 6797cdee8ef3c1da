#pragma once

#include <string>

#include "bghc/bigint.hpp"

namespace bghc {

struct BoundValue {
  BigUint value;
  std::string formula_tag;
};

// sf(x) = x!(x-1)!...0!
BigUint superfactorial(uint64_t x);

BigUint bound_2conn(int n);     // 2^{n-3}, n >= 3
BigUint bound_complete(int n);  // (n-2)!, n >= 3
BigUint bound_prism(int n);     // (n-2)!(n-3)!, n >= 3

// Piecewise lower bound for k-edge-connected order-n graphs:
//   k = 2      -> 2^{n-3}
//   n = 3      -> sf(k-1)
//   k = 3      -> (n-2)! 2^{C(n-1,2)}
//   n, k >= 4  -> closed-form product (exact division by (n-1)k)
BoundValue hc_lower(int n, int k);

// The same quantity by unrolling hc(n,k) >= (n-2)(k-1) hc(n-1,k) hc(n,k-1)
// from the base rows; equals the closed form for n,k >= 4.
BigUint hc_recurrence(int n, int k);

// Superfactorial product with triple binomial exponents; n > k >= 5 only.
BoundValue hc_lower_corollary(int n, int k);

BoundValue catalan_lower(int k);   // sf(k-1) sf(k-2), k >= 2
BigUint catalan_recurrence(int k); // R(2)=1, R(k)=(k-1)R(k-1)^2

// Truth of the step inequality (k-1)(sf(k-2)sf(k-3))^2 >= sf(k-1)sf(k-2).
// Holds for k = 3 and k >= 6, fails for k in {4,5}; exposed as a predicate
// so the harness reports the arithmetic instead of asserting it blindly.
bool catalan_step_inequality_holds(int k);

BoundValue uniform_lower(int r, int n);       // ((n-r-1)!(r-1)!)^{min{n-r-1,r-1}}
uint64_t uniform_good_cycle_bound(int r, int n);  // 3(n-r-1)(r-1)

}  // namespace bghc
