#include <random>

#include "doctest.h"
#include "singerfact/errors.hpp"
#include "singerfact/qpoly.hpp"

using namespace singerfact;

namespace {

QPoly q_int_poly(int a) {
  QPoly r;
  for (int i = 0; i < a; ++i) r += QPoly::monomial(i);
  return r;
}

}  // namespace

TEST_CASE("QPoly ring basics") {
  QPoly q = QPoly::q();
  QPoly a = q * q + q + QPoly(1);           // 1 + q + q^2
  CHECK(a == q_int_poly(3));
  CHECK((a - a).is_zero());
  CHECK(a.pow(0) == QPoly(1));
  CHECK(a.pow(3) == a * a * a);
  CHECK(a.eval(BigInt(2)) == 7);
  CHECK(a.eval(BigInt(-1)) == 1);
  CHECK((q - QPoly(1)).pow(2) == q * q - QPoly(2) * q + QPoly(1));
}

TEST_CASE("QPoly exact division") {
  QPoly q = QPoly::q();
  QPoly num = q_int_poly(6) * q_int_poly(4) * (q - QPoly(3));
  CHECK(num.divexact(q_int_poly(4)) == q_int_poly(6) * (q - QPoly(3)));
  CHECK(num.divexact(num) == QPoly(1));
  CHECK_THROWS_AS((q * q + QPoly(1)).divexact(q + QPoly(1)), InternalError);
  // division by a non-monic factor is still exact when it divides
  QPoly f = (QPoly(2) * q + QPoly(2)) * (q - QPoly(1));
  CHECK(f.divexact(QPoly(2) * q + QPoly(2)) == q - QPoly(1));
}

TEST_CASE("QPoly substitution q -> q^s") {
  QPoly a = q_int_poly(3);  // 1 + q + q^2
  QPoly b = a.subst_qpow(2);
  CHECK(b == QPoly(1) + QPoly::monomial(2) + QPoly::monomial(4));
}

TEST_CASE("LaurentQ arithmetic and division") {
  LaurentQ a = LaurentQ::monomial(-2, BigRat(1, 2)) + LaurentQ::monomial(1);
  LaurentQ b = a * a;
  CHECK(b == LaurentQ::monomial(-4, BigRat(1, 4)) + LaurentQ::monomial(-1) +
                 LaurentQ::monomial(2));
  QPoly d = QPoly::q() + QPoly(1);
  LaurentQ prod = LaurentQ(d) * a;
  CHECK(prod.divexact(d) == a);
  CHECK_THROWS_AS(LaurentQ(1).divexact(QPoly::q()), InternalError);
  CHECK(LaurentQ(QPoly(7)).to_qpoly() == QPoly(7));
  CHECK_THROWS_AS(LaurentQ::monomial(-1).to_qpoly(), InternalError);
}

TEST_CASE("generalized q-bracket") {
  // (1 - q^a)/(1 - q): [3] = 1 + q + q^2, [0] = 0, [-2] = -q^-2 - q^-1
  CHECK(q_bracket(3) == LaurentQ(q_int_poly(3)));
  CHECK(q_bracket(0).is_zero());
  CHECK(q_bracket(-2) ==
        -(LaurentQ::monomial(-2) + LaurentQ::monomial(-1)));
  // defining identity (1-q) [a] = 1 - q^a on a range of a
  LaurentQ one_minus_q = LaurentQ(1) - LaurentQ::monomial(1);
  for (int a = -6; a <= 6; ++a)
    CHECK(one_minus_q * q_bracket(a) ==
          LaurentQ(1) - LaurentQ::monomial(a));
}

TEST_CASE("delta_q on Laurent polynomials") {
  // Delta_q(x^2) = (1+q) x
  XLaurent x2 = XLaurent::monomial(2, LaurentQ(1));
  CHECK(delta_q(x2) == XLaurent::monomial(1, LaurentQ(q_int_poly(2))));
  // Delta_q(constant) = 0
  CHECK(delta_q(XLaurent(LaurentQ(5))).is_zero());
  // Delta_q(x^-1) = -q^-1 x^-2
  XLaurent xm1 = XLaurent::monomial(-1, LaurentQ(1));
  CHECK(delta_q(xm1) == XLaurent::monomial(-2, LaurentQ::monomial(-1, -1)));
}

TEST_CASE("delta_q iterate agrees with the closed-form sum") {
  // For monomials x^A: Delta_q^N(x^A) at x=1, multiplied through by
  // q^binom(N,2) (1-q)^N, equals sum_k (-1)^(N-k) q^binom(k,2) qbin(N,k)
  // q^((N-k)A).  Checked on a seeded random sample of Laurent monomials.
  auto qbin = [&](int nn, int kk) {
    QPoly num(1), den(1);
    for (int i = 0; i < kk; ++i) {
      num *= q_int_poly(nn - i);
      den *= q_int_poly(i + 1);
    }
    return num.divexact(den);
  };
  std::mt19937 rng(20240817u);
  std::uniform_int_distribution<int> adist(-8, 10), ndist(1, 5);
  for (int trial = 0; trial < 100; ++trial) {
    int a = adist(rng), nf = ndist(rng);
    XLaurent f = XLaurent::monomial(a, LaurentQ(1));
    LaurentQ lhs = delta_q(f, nf).eval_x1();
    LaurentQ scale = LaurentQ::monomial(nf * (nf - 1) / 2);
    LaurentQ one_minus_q = LaurentQ(1) - LaurentQ::monomial(1);
    lhs = lhs * scale * one_minus_q.pow(nf);
    LaurentQ rhs;
    for (int k = 0; k <= nf; ++k) {
      LaurentQ term = LaurentQ(qbin(nf, k)).shifted(k * (k - 1) / 2 + (nf - k) * a);
      if ((nf - k) % 2) rhs -= term;
      else rhs += term;
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("delta_q on powers: (q^(A-N+1);q)_N / (1-q)^N") {
  LaurentQ one_minus_q = LaurentQ(1) - LaurentQ::monomial(1);
  for (int a = -6; a <= 8; ++a)
    for (int nf = 1; nf <= 4; ++nf) {
      LaurentQ lhs =
          delta_q(XLaurent::monomial(a, LaurentQ(1)), nf).eval_x1() *
          one_minus_q.pow(nf);
      LaurentQ rhs(1);
      for (int j = 0; j < nf; ++j)
        rhs *= LaurentQ(1) - LaurentQ::monomial(a - nf + 1 + j);
      CHECK(lhs == rhs);
    }
}

TEST_CASE("XPoly delta_q matches XLaurent delta_q on polynomials") {
  XPoly f = XPoly::monomial(3, QPoly(2)) + XPoly::monomial(1, QPoly::q());
  XPoly d = delta_q(f, 2);
  XLaurent fl;
  for (int i = 0; i <= f.degree(); ++i)
    if (!f.coeff(i).is_zero())
      fl = fl + XLaurent::monomial(i, LaurentQ(f.coeff(i)));
  XLaurent dl = delta_q(fl, 2);
  for (int i = 0; i <= d.degree(); ++i) {
    auto it = dl.terms().find(i);
    LaurentQ expect = it == dl.terms().end() ? LaurentQ() : it->second;
    CHECK(LaurentQ(d.coeff(i)) == expect);
  }
}

TEST_CASE("LaurentQ serialization carries the minimum exponent") {
  LaurentQ a = LaurentQ::monomial(-2, BigRat(1, 2)) + LaurentQ::monomial(1, -3);
  auto [lo, coeffs] = a.serialized();
  CHECK(lo == -2);
  CHECK(coeffs == std::vector<std::string>{"1/2", "0", "0", "-3"});
  CHECK(LaurentQ().serialized().second.empty());
}

TEST_CASE("XSeries geometric inverse") {
  // (1 + a x) * geometric_inverse(a) = 1 up to the truncation order
  QPoly a = q_int_poly(3);
  XSeries inv = XSeries::geometric_inverse(a, 8);
  XSeries lin = XSeries::from_xpoly(XPoly(QPoly(1)) + XPoly::monomial(1, a), 8);
  XSeries prod = lin * inv;
  CHECK(prod.coeff(0) == QPoly(1));
  for (int i = 1; i <= 8; ++i) CHECK(prod.coeff(i).is_zero());
}
