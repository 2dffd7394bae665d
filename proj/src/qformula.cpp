#include "singerfact/qformula.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

#include "singerfact/errors.hpp"

namespace singerfact::qformula {

namespace {

BigInt neg_one_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

QPoly one_minus_q() { return QPoly(1) - QPoly::q(); }

// x^M - 1 over Z
QPoly x_pow_minus_one(int m) { return QPoly::monomial(m) - QPoly(1); }

// remainder of a by monic b over Z
QPoly poly_mod_monic(QPoly a, const QPoly& b) {
  while (!a.is_zero() && a.degree() >= b.degree()) {
    int shift = a.degree() - b.degree();
    a -= QPoly::monomial(shift, a.coeff(a.degree())) * b;
  }
  return a;
}

}  // namespace

QPoly q_int(int n) {
  if (n < 0) throw std::invalid_argument("q_int: n < 0");
  QPoly r;
  for (int i = 0; i < n; ++i) r += QPoly::monomial(i);
  return r;
}

QPoly q_fact(int n) {
  if (n < 0) throw std::invalid_argument("q_fact: n < 0");
  QPoly r(1);
  for (int i = 1; i <= n; ++i) r *= q_int(i);
  return r;
}

QPoly q_binom(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("q_binom: k out of range");
  QPoly num(1);
  for (int i = 0; i < k; ++i) num *= q_int(n - i);
  return num.divexact(q_fact(k));
}

QPoly qq_poch(int n) {
  QPoly r(1);
  for (int i = 1; i <= n; ++i) r *= QPoly(1) - QPoly::monomial(i);
  return r;
}

XPoly x_poch(int n) {
  XPoly r(QPoly(1));
  for (int i = 0; i < n; ++i)
    r = r * (XPoly(QPoly(1)) - XPoly::monomial(1, QPoly::monomial(i)));
  return r;
}

int moebius(int n) {
  if (n < 1) throw std::invalid_argument("moebius: n < 1");
  int result = 1;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      result = -result;
    }
  if (n > 1) result = -result;
  return result;
}

QPoly cyclotomic_poly(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic_poly: m < 1");
  QPoly num = x_pow_minus_one(m);
  for (int d = 1; d < m; ++d)
    if (m % d == 0) num = num.divexact(cyclotomic_poly(d));
  return num;
}

QPoly tq(int n, int ell, TqRoute route) {
  if (n < 2) throw std::invalid_argument("tq: requires n >= 2");
  if (ell < 0) throw std::invalid_argument("tq: ell < 0");
  switch (route) {
    case TqRoute::sum: {
      QPoly s = QPoly(neg_one_pow(n - 1)) * qq_poch(n - 1);
      for (int k = 0; k < n; ++k) {
        QPoly base = QPoly(1) + QPoly::monomial(n - k - 1) - QPoly::monomial(n - k);
        s += QPoly(neg_one_pow(k + n)) *
             QPoly::monomial(k * (k + 1) / 2, 1) * q_binom(n - 1, k) *
             base.pow(ell);
      }
      QPoly numer = (-q_int(n)).pow(ell) * s;
      QPoly denom = QPoly::monomial(n * (n - 1) / 2, 1) * qq_poch(n);
      return numer.divexact(denom);
    }
    case TqRoute::diff: {
      // (1/x) - (1+x(1-q))^ell / x = -sum_{i>=1} binom(ell,i)(1-q)^i x^(i-1)
      XPoly operand;
      for (int i = 1; i <= ell; ++i)
        operand = operand - XPoly::monomial(i - 1, QPoly(big_binom(ell, i)) *
                                                       one_minus_q().pow(i));
      QPoly evaluated = delta_q(operand, n - 1).eval_x1();
      QPoly numer = (-q_int(n)).pow(ell) * evaluated;
      return numer.divexact(one_minus_q() * q_fact(n));
    }
    case TqRoute::binom: {
      if (ell < n) return QPoly();
      QPoly s;
      for (int i = 0; i <= ell - n; ++i)
        s += QPoly(neg_one_pow(i) * big_binom(ell, i)) *
             (QPoly::q() - QPoly(1)).pow(ell - i - 1) *
             q_binom(ell - i - 1, n - 1);
      return q_int(n).pow(ell - 1) * s;
    }
  }
  throw std::invalid_argument("tq: unknown route");
}

QPoly tq_all(int n, int ell) {
  QPoly a = tq(n, ell, TqRoute::sum);
  QPoly b = tq(n, ell, TqRoute::diff);
  QPoly c = tq(n, ell, TqRoute::binom);
  if (!(a == b && b == c))
    throw InternalError("tq routes disagree at n=" + std::to_string(n) +
                        " ell=" + std::to_string(ell));
  return a;
}

QPoly tq_nlm(int n, int ell, int m, TqNlmRoute route) {
  if (n < 2) throw std::invalid_argument("tq_nlm: requires n >= 2");
  if (m < 0 || m > ell - 1)
    throw std::invalid_argument(
        "tq_nlm: requires 0 <= m <= ell-1 (a factorization of a Singer cycle "
        "cannot consist of transvections only)");
  switch (route) {
    case TqNlmRoute::binom: {
      QPoly s;
      for (int i = 0; i <= std::min(m, ell - n); ++i)
        s += QPoly(neg_one_pow(i) * big_binom(m, i)) * q_binom(ell - i - 1, n - 1);
      return q_int(n).pow(ell - 1) * s;
    }
    case TqNlmRoute::diff: {
      XPoly xm1 = XPoly::monomial(1, QPoly(1)) - XPoly(QPoly(1));  // x - 1
      XPoly operand = xm1.pow(m) * XPoly::monomial(ell - m - 1, QPoly(1));
      QPoly evaluated = delta_q(operand, n - 1).eval_x1();
      return (q_int(n).pow(ell) * evaluated).divexact(q_fact(n));
    }
  }
  throw std::invalid_argument("tq_nlm: unknown route");
}

QPoly tq_nlm_all(int n, int ell, int m) {
  QPoly a = tq_nlm(n, ell, m, TqNlmRoute::binom);
  QPoly b = tq_nlm(n, ell, m, TqNlmRoute::diff);
  if (!(a == b))
    throw InternalError("tq_nlm routes disagree at n=" + std::to_string(n) +
                        " ell=" + std::to_string(ell) + " m=" + std::to_string(m));
  return a;
}

bool aggregate_identity(int n, int ell) {
  QPoly total = tq(n, ell, TqRoute::binom);
  QPoly sum;
  // the m = ell term carries sequence-count factor 0 and is omitted
  for (int m = 0; m <= ell - 1; ++m) {
    QPoly seqs = ((QPoly::q() - QPoly(2)).pow(ell - m) -
                  QPoly(neg_one_pow(ell - m)))
                     .divexact(QPoly::q() - QPoly(1));
    sum += tq_nlm(n, ell, m, TqNlmRoute::binom) * QPoly(big_binom(ell, m)) * seqs;
  }
  return total == sum;
}

namespace {

// factors of the OGF denominator: (1 + x [n]_q) and
// (1 + x [n]_q (1 + q^k - q^(k+1))) for k = 0..n-1
std::vector<QPoly> ogf_denominator_slopes(int n) {
  std::vector<QPoly> slopes = {q_int(n)};
  for (int k = 0; k < n; ++k)
    slopes.push_back(q_int(n) * (QPoly(1) + QPoly::monomial(k) -
                                 QPoly::monomial(k + 1)));
  return slopes;
}

}  // namespace

bool ogf_coefficients_check(int n, int ell_max) {
  if (n < 2) throw std::invalid_argument("ogf_check: n < 2");
  XSeries series = XSeries::from_xpoly(
      XPoly::monomial(n, (QPoly::monomial(n) - QPoly(1)).pow(n - 1)), ell_max);
  for (const QPoly& a : ogf_denominator_slopes(n))
    series = series * XSeries::geometric_inverse(a, ell_max);
  for (int ell = 0; ell <= ell_max; ++ell)
    if (!(series.coeff(ell) == tq(n, ell, TqRoute::binom))) return false;
  return true;
}

bool partial_fraction_check(int n) {
  if (n < 2) throw std::invalid_argument("partial_fraction_check: n < 2");
  auto slopes = ogf_denominator_slopes(n);  // slopes[0] = [n]_q
  // products of all linear factors except one
  auto cofactor = [&](size_t omit) {
    XPoly prod(QPoly(1));
    for (size_t i = 0; i < slopes.size(); ++i) {
      if (i == omit) continue;
      prod = prod * (XPoly(QPoly(1)) + XPoly::monomial(1, slopes[i]));
    }
    return prod;
  };
  QPoly qn_minus_1 = QPoly::monomial(n) - QPoly(1);
  XPoly lhs = XPoly::monomial(n, qn_minus_1.pow(n - 1)) *
              XPoly(QPoly::monomial(n * (n - 1) / 2) * qn_minus_1 * qq_poch(n - 1));
  XPoly rhs;
  rhs = rhs + XPoly(qq_poch(n - 1)) * cofactor(0);
  for (int k = 0; k < n; ++k) {
    // the term with slope 1 + q^(n-k-1) - q^(n-k), i.e. slopes index n-k
    QPoly coef = QPoly(neg_one_pow(k + 1)) *
                 QPoly::monomial(k * (k + 1) / 2, 1) * q_binom(n - 1, k);
    rhs = rhs + XPoly(coef) * cofactor(static_cast<size_t>(n - k));
  }
  rhs = XPoly(QPoly(neg_one_pow(n))) * rhs;
  return lhs == rhs;
}

bool ogf_check(int n, int ell_max) {
  return ogf_coefficients_check(n, ell_max) && partial_fraction_check(n);
}

bool egf_check(int n, int ell_max) {
  if (n < 2) throw std::invalid_argument("egf_check: n < 2");
  // K(q) * sum_l tq u^l/l! = e^(-u [n]_q) [Delta_q^(n-1)((e^(ux(q^n-1))-1)/x)]_{x=1}
  // with K(q) = (q-1) [n]!_q   (both sides as series in u over Q[q])
  QPoly a = QPoly::monomial(n) - QPoly(1);  // q^n - 1
  QPoly k_poly = (QPoly::q() - QPoly(1)) * q_fact(n);
  // T_j = (A^j / j!) * prod_{r=0}^{n-2} [j-1-r]_q   (j >= 1)
  std::vector<LaurentQ> t(ell_max + 1);
  for (int j = 1; j <= ell_max; ++j) {
    LaurentQ term = LaurentQ(a.pow(j)) * LaurentQ(BigRat(1) / BigRat(big_factorial(j)));
    for (int r = 0; r <= n - 2; ++r) term *= q_bracket(j - 1 - r);
    t[j] = term;
  }
  for (int ell = 0; ell <= ell_max; ++ell) {
    LaurentQ rhs;
    for (int j = 1; j <= ell; ++j) {
      int i = ell - j;
      LaurentQ e_i = LaurentQ(-q_int(n)).pow(i) *
                     LaurentQ(BigRat(1) / BigRat(big_factorial(i)));
      rhs += e_i * t[j];
    }
    LaurentQ lhs = LaurentQ(k_poly * tq(n, ell, TqRoute::binom)) *
                   LaurentQ(BigRat(1) / BigRat(big_factorial(ell)));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

BigInt classical_t(int n, int ell) {
  if (n < 1) throw std::invalid_argument("classical_t: n < 1");
  // ((-n)^ell / n!) (-1)^(n-1) [Delta^(n-1) x^ell]_{x=(1-n)/2},
  // Delta the ordinary difference operator
  BigRat x0(1 - n, 2);
  BigRat acc = 0;
  for (int k = 0; k <= n - 1; ++k) {
    BigRat v = rat_pow(x0 + k, ell);
    acc += BigRat(neg_one_pow(n - 1 - k) * big_binom(n - 1, k)) * v;
  }
  BigRat result = BigRat(big_pow(BigInt(-n), ell) * neg_one_pow(n - 1)) /
                  BigRat(big_factorial(n)) * acc;
  if (result.get_den() != 1)
    throw InternalError("classical_t: non-integer result");
  return result.get_num();
}

bool classical_egf_check(int n, int ell_max) {
  // n! t(n,ell) = sum_k (-1)^k binom(n-1,k) (n((n-1)/2 - k))^ell,
  // the u^ell coefficient of (e^(un/2) - e^(-un/2))^(n-1) scaled by ell!
  for (int ell = 0; ell <= ell_max; ++ell) {
    BigRat coeff = 0;
    for (int k = 0; k <= n - 1; ++k) {
      BigRat rate = BigRat(n) * (BigRat(n - 1, 2) - k);
      coeff += BigRat(neg_one_pow(k) * big_binom(n - 1, k)) * rat_pow(rate, ell);
    }
    if (BigRat(big_factorial(n) * classical_t(n, ell)) != coeff) return false;
  }
  return true;
}

BigRat q1_limit(int n, int ell) {
  QPoly p = tq(n, ell, TqRoute::binom);
  if (p.is_zero()) return 0;
  QPoly reduced = p.divexact(one_minus_q().pow(n - 1));
  return reduced.eval(BigRat(1));
}

BigRat q1_limit_closed(int n, int ell) {
  BigInt b = big_binom(ell, n);
  if (b == 0) return 0;
  return BigRat(big_pow(BigInt(-n), ell)) / BigRat(-n) * BigRat(b);
}

BigInt q1_limit_m(int n, int ell, int m) {
  return tq_nlm(n, ell, m, TqNlmRoute::binom).eval(BigInt(1));
}

BigInt q1_limit_m_closed(int n, int ell, int m) {
  BigInt b = big_binom(ell - m - 1, ell - n);
  if (b == 0) return 0;
  return big_pow(BigInt(n), ell - 1) * b;
}

BigInt tq_q2_dichotomy(int n, int ell) {
  if (n < 2) throw std::invalid_argument("tq_q2_dichotomy: n < 2");
  BigInt q = 2;
  BigInt nq = q_int(n).eval(q);         // [n]_2
  BigInt poch_nm1 = qq_poch(n - 1).eval(q);
  BigInt cuspidal = -big_pow(-nq, ell) * poch_nm1;
  BigInt principal = 0;
  for (int k = 0; k < n; ++k) {
    BigInt base = big_pow(q, n - k) - big_pow(q, n - k - 1) - 1;
    principal += big_pow(q, static_cast<unsigned long>(k) * (k + 1) / 2) *
                 q_binom(n - 1, k).eval(q) * neg_one_pow(k) *
                 big_pow(nq, ell) * big_pow(base, ell);
  }
  BigInt gl = big_pow(q, static_cast<unsigned long>(n) * (n - 1) / 2);
  for (int i = 1; i <= n; ++i) gl *= big_pow(q, i) - 1;
  BigInt total = cuspidal + principal;
  if (total % gl != 0)
    throw InternalError("tq_q2_dichotomy: inexact division by |GL_n|");
  return total / gl;
}

BigInt cyclotomic_orbit_sum(uint64_t q, int s, uint64_t d) {
  if (s < 1) throw std::invalid_argument("cyclotomic_orbit_sum: s < 1");
  uint64_t m = 1;
  for (int i = 0; i < s; ++i) m *= q;
  m -= 1;
  if (d == 0 || m % d != 0)
    throw std::invalid_argument("cyclotomic_orbit_sum: d does not divide q^s-1");
  if (m > 1000000)
    throw std::invalid_argument("cyclotomic_orbit_sum: q^s too large");
  uint64_t e = m / d;  // beta = gamma^e has order d

  // orbit representatives: a with {a q^j mod m} of size s, a minimal
  std::vector<BigInt> counts(m, 0);
  for (uint64_t a = 0; a < m; ++a) {
    bool representative = true, free_orbit = true;
    uint64_t x = a;
    for (int j = 1; j < s; ++j) {
      x = static_cast<uint64_t>(
          (static_cast<unsigned __int128>(x) * q) % m);
      if (x == a) free_orbit = false;
      if (x < a) representative = false;
    }
    if (!free_orbit || !representative) continue;
    // contribute sum_j phi_a(beta^(q^j)) = sum_j zeta^(a e q^j)
    uint64_t t = static_cast<uint64_t>(
        (static_cast<unsigned __int128>(a) * e) % m);
    for (int j = 0; j < s; ++j) {
      counts[t] += 1;
      t = static_cast<uint64_t>((static_cast<unsigned __int128>(t) * q) % m);
    }
  }
  QPoly sum;
  for (uint64_t i = 0; i < m; ++i)
    if (counts[i] != 0) sum += QPoly::monomial(static_cast<int>(i), counts[i]);
  QPoly canonical = poly_mod_monic(sum, cyclotomic_poly(static_cast<int>(m)));
  if (canonical.degree() > 0)
    throw InternalError("cyclotomic_orbit_sum: value is not a rational integer");
  return canonical.is_zero() ? BigInt(0) : canonical.coeff(0);
}

}  // namespace singerfact::qformula
