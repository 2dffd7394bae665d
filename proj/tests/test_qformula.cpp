#include "doctest.h"
#include "singerfact/errors.hpp"
#include "singerfact/qformula.hpp"

using namespace singerfact;
using namespace singerfact::qformula;

namespace {

// Independent oracle for Gaussian binomials: the q-Pascal recursion
// qbin(n,k) = qbin(n-1,k-1) + q^k qbin(n-1,k).
QPoly qbin_pascal(int n, int k) {
  if (k < 0 || k > n) return QPoly();
  if (k == 0 || k == n) return QPoly(1);
  return qbin_pascal(n - 1, k - 1) +
         QPoly::monomial(k) * qbin_pascal(n - 1, k);
}

}  // namespace

TEST_CASE("q-analogue basics") {
  CHECK(q_int(1) == QPoly(1));
  CHECK(q_int(0).is_zero());
  CHECK(q_int(5).eval(BigInt(1)) == 5);
  CHECK(q_binom(7, 0) == QPoly(1));
  // q_binom(4,2) = 1 + q + 2q^2 + q^3 + q^4
  QPoly expect = QPoly(1) + QPoly::monomial(1) + QPoly::monomial(2, 2) +
                 QPoly::monomial(3) + QPoly::monomial(4);
  CHECK(q_binom(4, 2) == expect);
  CHECK_THROWS_AS(q_binom(3, 4), std::invalid_argument);
  for (int n = 0; n <= 9; ++n)
    for (int k = 0; k <= n; ++k) {
      CHECK(q_binom(n, k) == qbin_pascal(n, k));
      CHECK(q_binom(n, k) == q_binom(n, n - k));  // symmetry
    }
  CHECK(qq_poch(2) == (QPoly(1) - QPoly::q()) * (QPoly(1) - QPoly::monomial(2)));
}

TEST_CASE("q-binomial theorem") {
  for (int N = 0; N <= 12; ++N) {
    XPoly rhs;
    for (int k = 0; k <= N; ++k) {
      QPoly c = QPoly((k % 2) ? BigInt(-1) : BigInt(1)) *
                QPoly::monomial(k * (k - 1) / 2) * q_binom(N, k);
      rhs = rhs + XPoly::monomial(k, c);
    }
    CHECK(x_poch(N) == rhs);
  }
}

TEST_CASE("moebius and cyclotomic polynomials") {
  CHECK(moebius(1) == 1);
  CHECK(moebius(2) == -1);
  CHECK(moebius(4) == 0);
  CHECK(moebius(6) == 1);
  CHECK(moebius(15) == 1);
  CHECK(cyclotomic_poly(1) == QPoly::q() - QPoly(1));
  CHECK(cyclotomic_poly(4) == QPoly::monomial(2) + QPoly(1));
  CHECK(cyclotomic_poly(15).degree() == 8);
}

TEST_CASE("tq closed forms") {
  // t_q(n, n) = (q^n - 1)^(n-1)
  for (int n = 2; n <= 5; ++n) {
    QPoly expect = (QPoly::monomial(n) - QPoly(1)).pow(n - 1);
    CHECK(tq_all(n, n) == expect);
  }
  // below the absolute length the count vanishes
  for (int n = 2; n <= 5; ++n)
    for (int ell = 0; ell < n; ++ell) CHECK(tq_all(n, ell).is_zero());
  // frozen value: t_q(3,4) at q = 2
  CHECK(tq(3, 4, TqRoute::binom).eval(BigInt(2)) == 1029);
  CHECK_THROWS_AS(tq(1, 1, TqRoute::sum), std::invalid_argument);
}

TEST_CASE("refined counts tq_nlm") {
  // t_q(n, n, m) = [n]_q^(n-1) for every valid m
  for (int n = 2; n <= 5; ++n)
    for (int m = 0; m <= n - 1; ++m)
      CHECK(tq_nlm_all(n, n, m) == q_int(n).pow(n - 1));
  // t_q(2,3,1) = [2]^2 q  (from the binomial route by hand)
  CHECK(tq_nlm_all(2, 3, 1) == q_int(2).pow(2) * QPoly::q());
  CHECK(tq_nlm_all(2, 3, 1).eval(BigInt(3)) == 48);
  CHECK_THROWS_AS(tq_nlm(2, 3, 3, TqNlmRoute::binom), std::invalid_argument);
  CHECK_THROWS_AS(tq_nlm(2, 3, -1, TqNlmRoute::binom), std::invalid_argument);
}

TEST_CASE("route equivalences on a grid") {
  for (int n = 2; n <= 5; ++n)
    for (int ell = 0; ell <= n + 3; ++ell) {
      CHECK_NOTHROW(tq_all(n, ell));
      for (int m = 0; m <= ell - 1; ++m) CHECK_NOTHROW(tq_nlm_all(n, ell, m));
    }
}

TEST_CASE("aggregation over determinant sequences") {
  CHECK(aggregate_identity(2, 2));
  CHECK(aggregate_identity(3, 5));
  CHECK(aggregate_identity(2, 1));  // both sides zero
  CHECK(aggregate_identity(4, 3));  // ell < n: zero
}

TEST_CASE("generating functions") {
  CHECK(ogf_coefficients_check(2, 8));
  CHECK(ogf_coefficients_check(4, 8));
  CHECK(partial_fraction_check(2));
  CHECK(partial_fraction_check(3));
  CHECK(egf_check(2, 7));
  CHECK(egf_check(3, 7));
}

TEST_CASE("classical factorization counts") {
  CHECK(classical_t(3, 2) == 3);
  CHECK(classical_t(4, 3) == 16);
  CHECK(classical_t(3, 4) == 27);
  for (int n = 1; n <= 6; ++n)
    CHECK(classical_t(n, n - 1) == big_pow(BigInt(n), n >= 2 ? n - 2 : 0));
  CHECK(classical_egf_check(4, 7));
}

TEST_CASE("q -> 1 limits") {
  CHECK(q1_limit(2, 3) == 12);
  CHECK(q1_limit(3, 3) == 9);
  CHECK(q1_limit(2, 3) == q1_limit_closed(2, 3));
  for (int n = 2; n <= 4; ++n)
    for (int m = 0; m <= n - 1; ++m)
      CHECK(q1_limit_m(n, n, m) == big_pow(BigInt(n), n - 1));
}

TEST_CASE("q = 2 dichotomy expression") {
  for (int n = 2; n <= 4; ++n)
    for (int ell = 0; ell <= 6; ++ell)
      CHECK(tq_q2_dichotomy(n, ell) ==
            tq(n, ell, TqRoute::sum).eval(BigInt(2)));
}

TEST_CASE("cyclotomic orbit sums") {
  CHECK(cyclotomic_orbit_sum(2, 4, 15) == 0);   // mu(4)
  CHECK(cyclotomic_orbit_sum(2, 4, 5) == -3);   // the beta^5 = 1 case
  CHECK(cyclotomic_orbit_sum(3, 2, 8) == 0);    // q != 2
  CHECK(cyclotomic_orbit_sum(2, 2, 3) == -1);   // mu(2)
  CHECK(cyclotomic_orbit_sum(2, 1, 1) == 1);    // mu(1)
  CHECK_THROWS_AS(cyclotomic_orbit_sum(2, 4, 7), std::invalid_argument);
}
