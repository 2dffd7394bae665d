#include "singerfact/qpoly.hpp"

#include <algorithm>
#include <sstream>

#include "singerfact/errors.hpp"

namespace singerfact {

namespace {
const BigInt kZero = 0;
}

// ---------------------------------------------------------------- QPoly

QPoly QPoly::monomial(int deg, const BigInt& c) {
  QPoly p;
  if (c != 0) {
    p.coeffs_.assign(deg + 1, 0);
    p.coeffs_[deg] = c;
  }
  return p;
}

const BigInt& QPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[i];
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QPoly QPoly::operator+(const QPoly& o) const {
  QPoly r;
  r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (size_t i = 0; i < r.coeffs_.size(); ++i)
    r.coeffs_[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
  r.trim();
  return r;
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return QPoly();
  QPoly r;
  r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j)
      r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  r.trim();
  return r;
}

QPoly QPoly::pow(unsigned long e) const {
  QPoly r(1), b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

QPoly QPoly::divexact(const QPoly& d) const {
  if (d.is_zero()) throw InternalError("QPoly::divexact: division by zero");
  if (is_zero()) return QPoly();
  if (degree() < d.degree())
    throw InternalError("QPoly::divexact: degree too small, inexact");
  QPoly rem = *this;
  QPoly quot;
  quot.coeffs_.assign(degree() - d.degree() + 1, 0);
  const BigInt& lead = d.coeffs_.back();
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    BigInt c = rem.coeffs_.back();
    if (!mpz_divisible_p(c.get_mpz_t(), lead.get_mpz_t()))
      throw InternalError("QPoly::divexact: inexact leading division");
    c /= lead;
    int shift = rem.degree() - d.degree();
    quot.coeffs_[shift] = c;
    rem -= QPoly::monomial(shift, c) * d;
  }
  if (!rem.is_zero())
    throw InternalError("QPoly::divexact: nonzero remainder");
  quot.trim();
  return quot;
}

QPoly QPoly::subst_qpow(int s) const {
  if (s < 1) throw InternalError("QPoly::subst_qpow: s must be >= 1");
  QPoly r;
  if (is_zero()) return r;
  r.coeffs_.assign(static_cast<size_t>(degree()) * s + 1, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i * s] = coeffs_[i];
  r.trim();
  return r;
}

BigInt QPoly::eval(const BigInt& q) const {
  BigInt r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * q + *it;
  return r;
}

BigRat QPoly::eval(const BigRat& q) const {
  BigRat r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * q + *it;
  return r;
}

std::string QPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    if (!first) out << (c > 0 ? " + " : " - ");
    else if (c < 0) out << "-";
    BigInt a = abs(c);
    if (i == 0 || a != 1) out << a.get_str();
    if (i > 0) {
      if (a != 1) out << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
    first = false;
  }
  return out.str();
}

std::vector<std::string> QPoly::coeff_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.get_str());
  return out;
}

// -------------------------------------------------------------- LaurentQ

LaurentQ::LaurentQ(const QPoly& p) {
  for (int i = 0; i <= p.degree(); ++i)
    if (p.coeff(i) != 0) terms_[i] = BigRat(p.coeff(i));
}

LaurentQ LaurentQ::monomial(int e, const BigRat& c) {
  LaurentQ r;
  if (c != 0) r.terms_[e] = c;
  return r;
}

int LaurentQ::min_exp() const {
  if (is_zero()) throw InternalError("LaurentQ::min_exp of zero");
  return terms_.begin()->first;
}

int LaurentQ::max_exp() const {
  if (is_zero()) throw InternalError("LaurentQ::max_exp of zero");
  return terms_.rbegin()->first;
}

void LaurentQ::set(int e, const BigRat& c) {
  if (c == 0) terms_.erase(e);
  else terms_[e] = c;
}

LaurentQ LaurentQ::operator-() const {
  LaurentQ r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentQ& LaurentQ::operator+=(const LaurentQ& o) {
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) terms_[e] = c;
    else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentQ LaurentQ::operator+(const LaurentQ& o) const {
  LaurentQ r = *this;
  r += o;
  return r;
}

LaurentQ LaurentQ::operator-(const LaurentQ& o) const {
  LaurentQ r = *this;
  r += -o;
  return r;
}

LaurentQ LaurentQ::operator*(const LaurentQ& o) const {
  LaurentQ r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      auto it = r.terms_.find(e1 + e2);
      if (it == r.terms_.end()) r.terms_[e1 + e2] = c1 * c2;
      else it->second += c1 * c2;
    }
  for (auto it = r.terms_.begin(); it != r.terms_.end();)
    it = (it->second == 0) ? r.terms_.erase(it) : std::next(it);
  return r;
}

LaurentQ LaurentQ::pow(unsigned long e) const {
  LaurentQ r(1), b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

LaurentQ LaurentQ::shifted(int e) const {
  LaurentQ r;
  for (const auto& [ex, c] : terms_) r.terms_[ex + e] = c;
  return r;
}

LaurentQ LaurentQ::divexact(const QPoly& d) const {
  if (d.is_zero()) throw InternalError("LaurentQ::divexact by zero");
  if (is_zero()) return LaurentQ();
  int lo = min_exp();
  // Dense numerator over base exponent lo.
  std::vector<BigRat> num(max_exp() - lo + 1, BigRat(0));
  for (const auto& [e, c] : terms_) num[e - lo] = c;
  int dd = d.degree();
  if (static_cast<int>(num.size()) - 1 < dd)
    throw InternalError("LaurentQ::divexact: inexact (degree)");
  std::vector<BigRat> quot(num.size() - dd, BigRat(0));
  BigRat lead = BigRat(d.coeff(dd));
  for (int i = static_cast<int>(num.size()) - 1; i >= dd; --i) {
    BigRat c = num[i] / lead;
    quot[i - dd] = c;
    if (c != 0)
      for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * BigRat(d.coeff(j));
  }
  for (int i = 0; i < dd; ++i)
    if (num[i] != 0) throw InternalError("LaurentQ::divexact: remainder");
  LaurentQ r;
  for (size_t i = 0; i < quot.size(); ++i)
    if (quot[i] != 0) r.terms_[static_cast<int>(i) + lo] = quot[i];
  return r;
}

QPoly LaurentQ::to_qpoly() const {
  QPoly r;
  for (const auto& [e, c] : terms_) {
    if (e < 0) throw InternalError("LaurentQ::to_qpoly: negative exponent");
    if (c.get_den() != 1)
      throw InternalError("LaurentQ::to_qpoly: non-integer coefficient");
    r += QPoly::monomial(e, c.get_num());
  }
  return r;
}

BigRat LaurentQ::eval(const BigRat& q) const {
  BigRat r = 0;
  for (const auto& [e, c] : terms_) r += c * rat_pow(q, e);
  return r;
}

std::string LaurentQ::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const BigRat& c = it->second;
    if (!first) out << (c > 0 ? " + " : " - ");
    else if (c < 0) out << "-";
    BigRat a = abs(c);
    if (it->first == 0 || a != 1) out << a.get_str();
    if (it->first != 0) {
      if (a != 1) out << "*";
      out << var;
      if (it->first != 1) out << "^" << it->first;
    }
    first = false;
  }
  return out.str();
}

std::pair<int, std::vector<std::string>> LaurentQ::serialized() const {
  if (is_zero()) return {0, {}};
  int lo = min_exp();
  std::vector<std::string> coeffs(max_exp() - lo + 1, "0");
  for (const auto& [e, c] : terms_) coeffs[e - lo] = c.get_str();
  return {lo, coeffs};
}

LaurentQ q_bracket(int a) {
  LaurentQ r;
  if (a > 0)
    for (int i = 0; i < a; ++i) r += LaurentQ::monomial(i);
  else if (a < 0)
    for (int i = a; i < 0; ++i) r -= LaurentQ::monomial(i);
  return r;
}

// -------------------------------------------------------------- XLaurent

XLaurent XLaurent::monomial(int xe, const LaurentQ& c) {
  XLaurent r;
  if (!c.is_zero()) r.terms_[xe] = c;
  return r;
}

void XLaurent::set(int xe, const LaurentQ& c) {
  if (c.is_zero()) terms_.erase(xe);
  else terms_[xe] = c;
}

XLaurent XLaurent::operator-() const {
  XLaurent r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

XLaurent XLaurent::operator+(const XLaurent& o) const {
  XLaurent r = *this;
  for (const auto& [e, c] : o.terms_) {
    auto it = r.terms_.find(e);
    if (it == r.terms_.end()) r.terms_[e] = c;
    else {
      it->second += c;
      if (it->second.is_zero()) r.terms_.erase(it);
    }
  }
  return r;
}

XLaurent XLaurent::operator-(const XLaurent& o) const { return *this + (-o); }

XLaurent XLaurent::operator*(const XLaurent& o) const {
  XLaurent r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      LaurentQ prod = c1 * c2;
      auto it = r.terms_.find(e1 + e2);
      if (it == r.terms_.end()) r.set(e1 + e2, prod);
      else {
        it->second += prod;
        if (it->second.is_zero()) r.terms_.erase(it);
      }
    }
  return r;
}

XLaurent XLaurent::pow(unsigned long e) const {
  XLaurent r(LaurentQ(1)), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

LaurentQ XLaurent::eval_x1() const {
  LaurentQ r;
  for (const auto& [e, c] : terms_) r += c;
  return r;
}

XLaurent XLaurent::subst_x_qpow(int j) const {
  XLaurent r;
  for (const auto& [e, c] : terms_) r.set(e, c.shifted(j * e));
  return r;
}

XLaurent delta_q(const XLaurent& f, int times) {
  XLaurent g = f;
  for (int t = 0; t < times; ++t) {
    XLaurent next;
    for (const auto& [e, c] : g.terms()) {
      LaurentQ scaled = c * q_bracket(e);
      if (!scaled.is_zero()) next = next + XLaurent::monomial(e - 1, scaled);
    }
    g = next;
  }
  return g;
}

// ----------------------------------------------------------------- XPoly

namespace {
const QPoly kZeroPoly;
}

XPoly XPoly::monomial(int xe, const QPoly& c) {
  XPoly r;
  if (!c.is_zero()) {
    r.coeffs_.assign(xe + 1, QPoly());
    r.coeffs_[xe] = c;
  }
  return r;
}

const QPoly& XPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZeroPoly;
  return coeffs_[i];
}

void XPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

XPoly XPoly::operator-() const {
  XPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

XPoly XPoly::operator+(const XPoly& o) const {
  XPoly r;
  r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()));
  for (size_t i = 0; i < r.coeffs_.size(); ++i)
    r.coeffs_[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
  r.trim();
  return r;
}

XPoly XPoly::operator-(const XPoly& o) const { return *this + (-o); }

XPoly XPoly::operator*(const XPoly& o) const {
  if (is_zero() || o.is_zero()) return XPoly();
  XPoly r;
  r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, QPoly());
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j)
      r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  r.trim();
  return r;
}

bool XPoly::operator==(const XPoly& o) const { return coeffs_ == o.coeffs_; }

XPoly XPoly::pow(unsigned long e) const {
  XPoly r(QPoly(1)), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

QPoly XPoly::eval_x1() const {
  QPoly r;
  for (const auto& c : coeffs_) r += c;
  return r;
}

XPoly delta_q(const XPoly& f, int times) {
  XPoly g = f;
  for (int t = 0; t < times; ++t) {
    XPoly next;
    for (int e = 1; e <= g.degree(); ++e) {
      if (g.coeff(e).is_zero()) continue;
      // [e]_q as an integer polynomial.
      QPoly bracket;
      for (int i = 0; i < e; ++i) bracket += QPoly::monomial(i);
      next += XPoly::monomial(e - 1, g.coeff(e) * bracket);
    }
    g = next;
  }
  return g;
}

// ---------------------------------------------------------------- XSeries

XSeries XSeries::operator*(const XSeries& o) const {
  XSeries r(std::min(order_, o.order_));
  for (int i = 0; i <= r.order_; ++i)
    for (int j = 0; i + j <= r.order_; ++j) {
      if (i > order_ || j > o.order_) continue;
      r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  return r;
}

XSeries XSeries::geometric_inverse(const QPoly& a, int order) {
  XSeries s(order);
  QPoly pw(1);
  for (int j = 0; j <= order; ++j) {
    s.coeffs_[j] = pw;
    pw *= -a;
  }
  return s;
}

XSeries XSeries::from_xpoly(const XPoly& p, int order) {
  XSeries s(order);
  for (int i = 0; i <= std::min(order, p.degree()); ++i) s.coeffs_[i] = p.coeff(i);
  return s;
}

}  // namespace singerfact
