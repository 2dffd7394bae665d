#pragma once

#include <map>
#include <string>
#include <vector>

#include "singerfact/bigint.hpp"

namespace singerfact {

// Dense polynomial in q with integer coefficients, lowest degree first.
// No trailing zero coefficients are stored; the zero polynomial is empty.
class QPoly {
 public:
  QPoly() = default;
  QPoly(const BigInt& c) { if (c != 0) coeffs_.push_back(c); }
  QPoly(long c) : QPoly(BigInt(c)) {}

  static QPoly monomial(int deg, const BigInt& c = 1);
  static QPoly q() { return monomial(1); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& coeff(int i) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  QPoly operator-() const;
  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  QPoly& operator+=(const QPoly& o) { return *this = *this + o; }
  QPoly& operator-=(const QPoly& o) { return *this = *this - o; }
  QPoly& operator*=(const QPoly& o) { return *this = *this * o; }
  bool operator==(const QPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const QPoly& o) const { return !(*this == o); }

  QPoly pow(unsigned long e) const;

  // Exact division; throws InternalError if the division leaves a remainder.
  QPoly divexact(const QPoly& d) const;

  // q |-> q^s (exponent stretch), s >= 1.
  QPoly subst_qpow(int s) const;

  BigInt eval(const BigInt& q) const;
  BigRat eval(const BigRat& q) const;

  std::string to_string(const std::string& var = "q") const;
  // Coefficients as decimal strings, lowest degree first.
  std::vector<std::string> coeff_strings() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

// Sparse Laurent polynomial in q with rational coefficients.  Used where
// negative q-exponents or rational scalars appear (q-difference operator on
// Laurent monomials, EGF coefficients, content sums).
class LaurentQ {
 public:
  LaurentQ() = default;
  LaurentQ(const BigRat& c) { if (c != 0) terms_[0] = c; }
  LaurentQ(long c) : LaurentQ(BigRat(c)) {}
  LaurentQ(const QPoly& p);

  static LaurentQ monomial(int e, const BigRat& c = 1);

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, BigRat>& terms() const { return terms_; }
  int min_exp() const;
  int max_exp() const;

  LaurentQ operator-() const;
  LaurentQ operator+(const LaurentQ& o) const;
  LaurentQ operator-(const LaurentQ& o) const;
  LaurentQ operator*(const LaurentQ& o) const;
  LaurentQ& operator+=(const LaurentQ& o);
  LaurentQ& operator-=(const LaurentQ& o) { return *this += -o; }
  LaurentQ& operator*=(const LaurentQ& o) { return *this = *this * o; }
  bool operator==(const LaurentQ& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentQ& o) const { return !(*this == o); }

  LaurentQ pow(unsigned long e) const;
  LaurentQ shifted(int e) const;  // times q^e

  // Exact division by an integer polynomial; throws InternalError on a
  // nonzero remainder.
  LaurentQ divexact(const QPoly& d) const;

  // Conversion back to QPoly; throws InternalError if any exponent is
  // negative or any coefficient non-integer.
  QPoly to_qpoly() const;

  BigRat eval(const BigRat& q) const;
  std::string to_string(const std::string& var = "q") const;
  // serialization: minimum exponent plus dense coefficient strings ("a" or
  // "a/b"), lowest exponent first
  std::pair<int, std::vector<std::string>> serialized() const;

 private:
  void set(int e, const BigRat& c);
  std::map<int, BigRat> terms_;
};

// (1 - q^a) / (1 - q) for any integer a, as an exact Laurent polynomial:
// a > 0 gives the q-integer [a]_q, a = 0 gives 0, a < 0 gives -q^a [-a]_q.
LaurentQ q_bracket(int a);

// Laurent polynomial in x whose coefficients are Laurent polynomials in q.
class XLaurent {
 public:
  XLaurent() = default;
  XLaurent(const LaurentQ& c) { if (!c.is_zero()) terms_[0] = c; }

  static XLaurent monomial(int xe, const LaurentQ& c = LaurentQ(1));

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, LaurentQ>& terms() const { return terms_; }

  XLaurent operator-() const;
  XLaurent operator+(const XLaurent& o) const;
  XLaurent operator-(const XLaurent& o) const;
  XLaurent operator*(const XLaurent& o) const;
  bool operator==(const XLaurent& o) const { return terms_ == o.terms_; }

  XLaurent pow(unsigned long e) const;

  // Sum of coefficients = value at x = 1.
  LaurentQ eval_x1() const;
  // f(x) |-> f(q^j x).
  XLaurent subst_x_qpow(int j) const;

 private:
  void set(int xe, const LaurentQ& c);
  std::map<int, LaurentQ> terms_;
};

// The q-difference operator Delta_q(f)(x) = (f(x) - f(qx)) / (x - qx),
// applied `times` times.  Acts termwise: c x^A |-> c [A]_q x^(A-1) with the
// generalized bracket above, so it is exact on all Laurent inputs.
XLaurent delta_q(const XLaurent& f, int times = 1);

// Dense polynomial in x with QPoly coefficients (all-integer x,q arithmetic).
class XPoly {
 public:
  XPoly() = default;
  XPoly(const QPoly& c) { if (!c.is_zero()) coeffs_ = {c}; }

  static XPoly monomial(int xe, const QPoly& c = QPoly(1));
  static XPoly x() { return monomial(1); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const QPoly& coeff(int i) const;

  XPoly operator-() const;
  XPoly operator+(const XPoly& o) const;
  XPoly operator-(const XPoly& o) const;
  XPoly operator*(const XPoly& o) const;
  XPoly& operator+=(const XPoly& o) { return *this = *this + o; }
  bool operator==(const XPoly& o) const;

  XPoly pow(unsigned long e) const;
  QPoly eval_x1() const;

 private:
  void trim();
  std::vector<QPoly> coeffs_;
};

// Delta_q on an x-polynomial with integer coefficients (stays integral since
// every exponent is nonnegative).
XPoly delta_q(const XPoly& f, int times = 1);

// Truncated power series in x with QPoly coefficients, exact up to and
// including x^order.
class XSeries {
 public:
  explicit XSeries(int order) : order_(order), coeffs_(order + 1) {}

  int order() const { return order_; }
  const QPoly& coeff(int i) const { return coeffs_.at(i); }
  QPoly& coeff(int i) { return coeffs_.at(i); }

  XSeries operator*(const XSeries& o) const;

  // 1 / (1 + a x) = sum_j (-a)^j x^j, truncated.
  static XSeries geometric_inverse(const QPoly& a, int order);
  static XSeries from_xpoly(const XPoly& p, int order);

 private:
  int order_;
  std::vector<QPoly> coeffs_;
};

}  // namespace singerfact
