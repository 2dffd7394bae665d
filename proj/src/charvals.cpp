#include "singerfact/charvals.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "singerfact/errors.hpp"
#include "singerfact/qformula.hpp"

namespace singerfact::charvals {

using qformula::moebius;
using qformula::q_binom;
using qformula::q_fact;
using qformula::q_int;
using qformula::qq_poch;

namespace {
BigInt neg_one_pow(long e) { return (e % 2 == 0) ? 1 : -1; }
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  size_ = 0;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition Partition::hook(int n, int k) {
  if (k < 0 || k > n - 1) throw std::invalid_argument("hook: k out of range");
  std::vector<int> parts = {n - k};
  for (int i = 0; i < k; ++i) parts.push_back(1);
  return Partition(parts);
}

Partition Partition::conjugate() const {
  std::vector<int> conj;
  for (int j = 0; !parts_.empty() && j < parts_[0]; ++j) {
    int cnt = 0;
    for (int p : parts_)
      if (p > j) ++cnt;
    conj.push_back(cnt);
  }
  return Partition(conj);
}

long Partition::n_stat() const {
  long s = 0;
  for (size_t i = 0; i < parts_.size(); ++i) s += static_cast<long>(i) * parts_[i];
  return s;
}

std::vector<int> Partition::hook_lengths() const {
  Partition conj = conjugate();
  std::vector<int> out;
  for (size_t i = 0; i < parts_.size(); ++i)
    for (int j = 0; j < parts_[i]; ++j)
      out.push_back(parts_[i] + conj.parts()[j] -
                    static_cast<int>(i) - j - 1);
  return out;
}

std::vector<int> Partition::contents() const {
  std::vector<int> out;
  for (size_t i = 0; i < parts_.size(); ++i)
    for (int j = 0; j < parts_[i]; ++j) out.push_back(j - static_cast<int>(i));
  return out;
}

std::vector<Partition> Partition::down_set() const {
  std::vector<Partition> out;
  for (size_t i = 0; i < parts_.size(); ++i) {
    bool corner = (i + 1 == parts_.size()) || (parts_[i] > parts_[i + 1]);
    if (!corner) continue;
    std::vector<int> parts = parts_;
    if (--parts[i] == 0) parts.erase(parts.begin() + i);
    out.push_back(Partition(parts));
  }
  return out;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.push_back(Partition(cur));
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

namespace {

QPoly f_lambda_product(const Partition& lambda) {
  int n = lambda.size();
  QPoly num = QPoly::monomial(static_cast<int>(lambda.n_stat())) * qq_poch(n);
  QPoly den(1);
  for (int h : lambda.hook_lengths()) den *= QPoly(1) - QPoly::monomial(h);
  return num.divexact(den);
}

QPoly f_lambda_maj(const Partition& lambda) {
  int n = lambda.size();
  const auto& parts = lambda.parts();
  int rows = lambda.rows();
  std::vector<int> filled(rows, 0);
  std::vector<int> row_of(n + 2, 0);
  QPoly total;
  auto rec = [&](auto&& self, int v, int maj) -> void {
    if (v > n) {
      total += QPoly::monomial(maj);
      return;
    }
    for (int i = 0; i < rows; ++i) {
      if (filled[i] >= parts[i]) continue;
      if (i > 0 && filled[i - 1] <= filled[i]) continue;
      filled[i]++;
      row_of[v] = i;
      // v-1 contributes to maj iff v sits strictly below v-1
      int add = (v > 1 && i > row_of[v - 1]) ? (v - 1) : 0;
      self(self, v + 1, maj + add);
      filled[i]--;
    }
  };
  rec(rec, 1, 0);
  return total;
}

// Principal specialization via the Jacobi-Trudi determinant with
// h_m(1,q,q^2,...) = 1/(q;q)_m, rows scaled to clear denominators.
QPoly f_lambda_jacobi_trudi(const Partition& lambda) {
  int n = lambda.size();
  int r = lambda.rows();
  const auto& parts = lambda.parts();
  // scaled entries B[i][j] = (q;q)_{m_ir} / (q;q)_{m_ij}  (0 when m_ij < 0)
  std::vector<std::vector<QPoly>> b(r, std::vector<QPoly>(r));
  QPoly row_scale_product(1);
  for (int i = 0; i < r; ++i) {
    int top = parts[i] - (i + 1) + r;
    row_scale_product *= qq_poch(top);
    for (int j = 0; j < r; ++j) {
      int m = parts[i] - (i + 1) + (j + 1);
      if (m < 0) continue;  // leaves the zero polynomial
      QPoly prod(1);
      for (int t = m + 1; t <= top; ++t) prod *= QPoly(1) - QPoly::monomial(t);
      b[i][j] = prod;
    }
  }
  // Bareiss fraction-free determinant
  BigInt sign = 1;
  QPoly prev(1);
  for (int k = 0; k + 1 < r; ++k) {
    if (b[k][k].is_zero()) {
      int swap_row = -1;
      for (int i = k + 1; i < r; ++i)
        if (!b[i][k].is_zero()) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return QPoly();  // singular: determinant 0
      std::swap(b[k], b[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < r; ++i) {
      for (int j = k + 1; j < r; ++j)
        b[i][j] = (b[i][j] * b[k][k] - b[i][k] * b[k][j]).divexact(prev);
      b[i][k] = QPoly();
    }
    prev = b[k][k];
  }
  QPoly det = QPoly(sign) * b[r - 1][r - 1];
  return (qq_poch(n) * det).divexact(row_scale_product);
}

}  // namespace

QPoly f_lambda(const Partition& lambda, FLambdaRoute route) {
  if (lambda.size() < 1) throw std::invalid_argument("f_lambda: empty partition");
  switch (route) {
    case FLambdaRoute::product:
      return f_lambda_product(lambda);
    case FLambdaRoute::principal_spec:
      return f_lambda_jacobi_trudi(lambda);
    case FLambdaRoute::maj_sum:
      return f_lambda_maj(lambda);
  }
  throw std::invalid_argument("f_lambda: unknown route");
}

QPoly f_lambda_all(const Partition& lambda) {
  QPoly a = f_lambda(lambda, FLambdaRoute::product);
  QPoly b = f_lambda(lambda, FLambdaRoute::principal_spec);
  QPoly c = f_lambda(lambda, FLambdaRoute::maj_sum);
  if (!(a == b && b == c)) throw InternalError("f_lambda routes disagree");
  return a;
}

QPoly hook_degree(int n, int s, int k) {
  if (s < 1 || n % s != 0) throw std::invalid_argument("hook_degree: s must divide n");
  int ns = n / s;
  if (k < 0 || k > ns - 1) throw std::invalid_argument("hook_degree: k out of range");
  // (-1)^(n-n/s) (q;q)_n / (q^s;q^s)_{n/s} = prod over i in [1,n], s not
  // dividing i, of (q^i - 1): the true degree is positive.
  QPoly deg = QPoly::monomial(s * k * (k + 1) / 2);
  for (int i = 1; i <= n; ++i)
    if (i % s != 0) deg *= QPoly::monomial(i) - QPoly(1);
  return deg * q_binom(ns - 1, k).subst_qpow(s);
}

bool content_identity(const Partition& lambda) {
  int n = lambda.size();
  if (n < 1) throw std::invalid_argument("content_identity: empty partition");
  QPoly fl = f_lambda_product(lambda);
  QPoly mu_sum;
  for (const Partition& mu : lambda.down_set())
    mu_sum += (mu.size() == 0) ? QPoly(1) : f_lambda_product(mu);
  LaurentQ content_sum;
  for (int c : lambda.contents()) content_sum += LaurentQ::monomial(c);
  return LaurentQ(q_int(n) * mu_sum) == LaurentQ(fl) * content_sum;
}

ClassSumValue class_sum_value(int n, int s, int k, ReflClass cls,
                              int u_phase_alpha) {
  if (s < 1 || n % s != 0)
    throw std::invalid_argument("class_sum_value: s must divide n");
  if (k < 0 || k > n / s - 1)
    throw std::invalid_argument("class_sum_value: k out of range");
  switch (cls) {
    case ReflClass::semisimple:
      if (s >= 2) return {QPoly(), 0};
      return {q_int(n) * QPoly::monomial(n - k - 1), u_phase_alpha};
    case ReflClass::transvection:
      if (s >= 2) return {-q_int(n), 0};
      return {q_int(n) * (QPoly::monomial(n - k - 1) - QPoly(1)), 0};
  }
  throw std::invalid_argument("class_sum_value: unknown class");
}

namespace {

QPoly gl_order_poly(int n) {
  QPoly r = QPoly::monomial(n * (n - 1) / 2);
  for (int i = 1; i <= n; ++i) r *= QPoly::monomial(i) - QPoly(1);
  return r;
}

}  // namespace

QPoly frobenius_count_poly(int n, int ell, int m) {
  if (n < 2) throw std::invalid_argument("frobenius_count_poly: n < 2");
  if (m < 0 || m > ell - 1)
    throw std::invalid_argument("frobenius_count_poly: requires 0 <= m <= ell-1");
  // Only (s=1, U) pairs survive; the q-1 weight-one cuspidals U contribute
  // equally after the U(det c) cancellation.
  QPoly sum;
  for (int k = 0; k < n; ++k) {
    QPoly trans = class_sum_value(n, 1, k, ReflClass::transvection).value;
    QPoly semi = class_sum_value(n, 1, k, ReflClass::semisimple).value;
    QPoly term = hook_degree(n, 1, k) * QPoly(neg_one_pow(k)) *
                 trans.pow(m) * semi.pow(ell - m);
    sum += term;
  }
  QPoly numer = (QPoly::q() - QPoly(1)) * sum;
  return numer.divexact(gl_order_poly(n));
}

BigInt frobenius_count(int n, uint64_t q, int ell, int m) {
  if (q > 2) {
    if (m < 0 || m > ell - 1)
      throw std::invalid_argument("frobenius_count: q > 2 requires m <= ell-1");
    return frobenius_count_poly(n, ell, m).eval(BigInt(static_cast<long>(q)));
  }
  if (q != 2) throw std::invalid_argument("frobenius_count: q must be >= 2");
  if (m != ell)
    throw std::invalid_argument("frobenius_count: q = 2 forces m = ell");
  BigInt q2 = 2;
  BigInt total = 0;
  for (int s = 1; s <= n; ++s) {
    if (n % s != 0) continue;
    int ns = n / s;
    BigInt layer = 0;
    for (int k = 0; k < ns; ++k) {
      // hook_degree is the true degree (the formula's (-1)^(n-n/s) already
      // absorbed), so no extra sign here.
      BigInt deg = hook_degree(n, s, k).eval(q2);
      BigInt tv = class_sum_value(n, s, k, ReflClass::transvection).value.eval(q2);
      BigInt singer;  // sum over U in C_s of chi^{U,hook}(c^{-1}) at q = 2
      if (s == 1) singer = neg_one_pow(k);
      else singer = neg_one_pow(n - ns - k) * moebius(s);
      layer += deg * singer * big_pow(tv, ell);
    }
    total += layer;
  }
  BigInt gl = gl_order_poly(n).eval(q2);
  if (total % gl != 0)
    throw InternalError("frobenius_count: inexact division by |GL_n|");
  return total / gl;
}

}  // namespace singerfact::charvals
