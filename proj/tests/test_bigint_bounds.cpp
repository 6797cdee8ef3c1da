#include <doctest.h>

#include "bghc/basis.hpp"
#include "bghc/bounds.hpp"

using namespace bghc;

TEST_CASE("BigUint arithmetic basics") {
  CHECK(BigUint(0).str() == "0");
  CHECK(BigUint(123456789012345ull).str() == "123456789012345");
  CHECK((BigUint(999999999) * 1000000007u).str() == "1000000005999999993");
  CHECK(big_pow(2, 64).str() == "18446744073709551616");
  CHECK(factorial_big(20).str() == "2432902008176640000");
  CHECK(factorial_big(25).str() == "15511210043330985984000000");
  BigUint b = big_pow(10, 30);
  CHECK(b.divmod_u32(7) == 1);
  CHECK(b.str() == "142857142857142857142857142857");
  CHECK(BigUint(100) < BigUint(101));
  CHECK(BigUint(100).fits_u64());
  CHECK(big_pow(2, 63).fits_u64());
  CHECK_FALSE(big_pow(2, 80).fits_u64());
}

TEST_CASE("binomial with zero conventions") {
  CHECK(binomial_u64(5, 2) == 10);
  CHECK(binomial_u64(0, 0) == 1);
  CHECK(binomial_u64(3, 5) == 0);
  CHECK(binomial_u64(-1, 0) == 0);
  CHECK(binomial_u64(4, -1) == 0);
  CHECK(binomial_u64(20, 9) == 167960);
}

TEST_CASE("superfactorial values") {
  CHECK(superfactorial(0).str() == "1");
  CHECK(superfactorial(3).str() == "12");   // 3! 2! 1! 0!
  CHECK(superfactorial(5).str() == "34560");
  CHECK(superfactorial(4).str() == "288");
}

TEST_CASE("closed-form graphic bounds") {
  CHECK(bound_2conn(3).str() == "1");
  CHECK(bound_2conn(5).str() == "4");
  CHECK(bound_2conn(8).str() == "32");
  CHECK(bound_complete(5).str() == "6");
  CHECK(bound_prism(3).str() == "1");
  CHECK(bound_prism(4).str() == "2");
  CHECK(bound_prism(5).str() == "12");
}

TEST_CASE("hc_lower pinned values") {
  CHECK(hc_lower(3, 3).value.str() == "2");
  CHECK(hc_lower(4, 3).value.str() == "16");  // 2! 2^3
  CHECK(hc_lower(3, 4).value.str() == "12");  // sf(3)
  CHECK(hc_lower(4, 4).value.str() == "1152");
  CHECK(hc_lower(5, 2).value.str() == "4");
  CHECK(hc_lower(4, 4).formula_tag == "thm-hc(n,k)");
}

TEST_CASE("closed form equals the unrolled recurrence on 4 <= n,k <= 7") {
  for (int n = 4; n <= 7; ++n)
    for (int k = 4; k <= 7; ++k)
      CHECK(hc_lower(n, k).value == hc_recurrence(n, k));
  // base rows agree where the pieces meet
  for (int k = 3; k <= 7; ++k) CHECK(hc_lower(3, k).value == hc_recurrence(3, k));
  for (int n = 3; n <= 7; ++n) CHECK(hc_lower(n, 3).value == hc_recurrence(n, 3));
}

TEST_CASE("hc_lower monotone in both arguments for 4 <= k <= n <= 8") {
  for (int n = 4; n <= 8; ++n) {
    for (int k = 4; k <= n; ++k) {
      CHECK(hc_lower(n, k).value >= hc_lower(n - 1, k).value);
      CHECK(hc_lower(n, k).value >= hc_lower(n, k - 1).value);
    }
  }
}

TEST_CASE("corollary value sits below the theorem value") {
  for (auto [n, k] : {std::pair{6, 5}, std::pair{7, 5}, std::pair{7, 6}}) {
    BigUint cor = hc_lower_corollary(n, k).value;
    BigUint thm = hc_lower(n, k).value;
    CHECK(cor < thm);
    CHECK(cor >= BigUint(1));
  }
  CHECK_THROWS_AS(hc_lower_corollary(5, 5), Error);  // needs n > k >= 5
  CHECK_THROWS_AS(hc_lower_corollary(6, 4), Error);
}

TEST_CASE("catalan bounds and the recurrence step finding") {
  CHECK(catalan_lower(2).value.str() == "1");   // sf(1) sf(0)
  CHECK(catalan_lower(3).value.str() == "2");   // sf(2) sf(1)
  CHECK(catalan_lower(4).value.str() == "24");  // sf(3) sf(2)
  CHECK(catalan_recurrence(2).str() == "1");
  CHECK(catalan_recurrence(3).str() == "2");
  CHECK(catalan_recurrence(4).str() == "12");  // 3 * 2^2
  // The displayed induction step holds at k=3 and from k=6 on, but fails
  // for k in {4,5}: 3*(sf(2)sf(1))^2 = 12 < 24 and 4*(sf(3)sf(2))^2 < sf(4)sf(3).
  CHECK(catalan_step_inequality_holds(3));
  CHECK_FALSE(catalan_step_inequality_holds(4));
  CHECK_FALSE(catalan_step_inequality_holds(5));
  CHECK(catalan_step_inequality_holds(6));
  CHECK(catalan_step_inequality_holds(7));
}

TEST_CASE("uniform bounds") {
  CHECK(uniform_lower(2, 4).value.str() == "1");
  CHECK(uniform_lower(2, 5).value.str() == "2");
  CHECK(uniform_lower(3, 6).value.str() == "16");  // (2! 2!)^2
  CHECK(uniform_lower(1, 5).value.str() == "1");   // exponent min{3,0} = 0
  CHECK(uniform_good_cycle_bound(2, 4) == 3);
  CHECK(uniform_good_cycle_bound(2, 5) == 6);
  CHECK(uniform_good_cycle_bound(1, 7) == 0);
  CHECK_THROWS_AS(uniform_lower(4, 4), Error);
}
