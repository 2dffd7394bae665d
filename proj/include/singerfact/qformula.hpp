#pragma once

#include <cstdint>

#include "singerfact/qpoly.hpp"

namespace singerfact::qformula {

// q-analogue basics, exact in Z[q].
QPoly q_int(int n);                // [n]_q = 1 + q + ... + q^(n-1)
QPoly q_fact(int n);               // [n]!_q
QPoly q_binom(int n, int k);       // Gaussian binomial, throws when k > n
QPoly qq_poch(int n);              // (q;q)_n
XPoly x_poch(int n);               // (x;q)_n as a polynomial in x over Z[q]

int moebius(int n);
QPoly cyclotomic_poly(int m);

// Number of ordered reflection factorizations of a Singer cycle in
// GL_n(F_q) of length ell, as an exact polynomial in q, via three
// independent closed forms: a hook-character sum, an iterated q-difference,
// and a binomial/Gaussian-binomial sum.
enum class TqRoute { sum, diff, binom };
QPoly tq(int n, int ell, TqRoute route);
// Computes all three routes and checks they agree.
QPoly tq_all(int n, int ell);

// Refinement by the number m of transvection steps (q > 2 semantics);
// needs m <= ell-1 since at least one factor must have determinant != 1.
enum class TqNlmRoute { binom, diff };
QPoly tq_nlm(int n, int ell, int m, TqNlmRoute route);
QPoly tq_nlm_all(int n, int ell, int m);

// The aggregation of the refined counts over determinant sequences equals
// the total count, symbolically in q.
bool aggregate_identity(int n, int ell);

// Ordinary generating function: expands the product form as a power series
// in x and compares each coefficient with tq; also verifies the
// partial-fraction expansion after clearing denominators.
bool ogf_coefficients_check(int n, int ell_max);
bool partial_fraction_check(int n);
bool ogf_check(int n, int ell_max);

// Exponential generating function comparison, coefficientwise in u with
// exact rational-in-q arithmetic; classical_egf_check is the S_n analogue.
bool egf_check(int n, int ell_max);
bool classical_egf_check(int n, int ell_max);

// Classical transposition-factorization count t(n, ell) for an n-cycle in
// S_n, via the finite-difference formula.
BigInt classical_t(int n, int ell);

// q -> 1 limits: lim tq(n,ell)/(1-q)^(n-1), and tq(n,ell,m) at q = 1,
// with their closed forms.
BigRat q1_limit(int n, int ell);
BigRat q1_limit_closed(int n, int ell);
BigInt q1_limit_m(int n, int ell, int m);
BigInt q1_limit_m_closed(int n, int ell, int m);

// Evaluation at q = 2 of the all-characters expression for t_2(n, ell)
// (the q = 2 branch of the proof, where cuspidal characters contribute).
BigInt tq_q2_dichotomy(int n, int ell);

// Sum over weight-s cuspidals (free Frobenius orbits of characters of
// F_{q^s}^x) of the orbit sums sum_j phi(beta^(q^j)) for beta of order d,
// computed exactly in Z[x]/Phi_M(x) with M = q^s-1 and certified to be a
// rational integer.
BigInt cyclotomic_orbit_sum(uint64_t q, int s, uint64_t d);

}  // namespace singerfact::qformula
