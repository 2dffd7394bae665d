#include "singerfact/gf.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "singerfact/errors.hpp"

namespace singerfact::gf {

namespace {

std::atomic<uint32_t> g_next_field_id{1};

bool is_prime_u32(uint32_t p) {
  if (p < 2) return false;
  for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<uint64_t> prime_factors(uint64_t m) {
  std::vector<uint64_t> fs;
  for (uint64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      fs.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) fs.push_back(m);
  return fs;
}

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t inv_mod(uint64_t a, uint64_t m) {
  // extended Euclid; gcd(a, m) must be 1
  int64_t t = 0, newt = 1;
  int64_t r = static_cast<int64_t>(m), newr = static_cast<int64_t>(a % m);
  while (newr != 0) {
    int64_t qt = r / newr;
    std::swap(t -= qt * newt, newt);
    std::swap(r -= qt * newr, newr);
  }
  if (r != 1) throw InternalError("inv_mod: not invertible");
  return static_cast<uint64_t>(t < 0 ? t + static_cast<int64_t>(m) : t);
}

// Dense polynomials over F_p, coefficients low to high, used only for the
// primitive-polynomial search.
using PPoly = std::vector<uint32_t>;

PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& f, uint32_t p) {
  PPoly r(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p;
  }
  // reduce modulo monic f
  size_t k = f.size() - 1;
  for (size_t d = r.size(); d-- > k;) {
    uint32_t c = r[d];
    if (c == 0) continue;
    r[d] = 0;
    for (size_t j = 0; j < k; ++j)
      r[d - k + j] = (r[d - k + j] + static_cast<uint64_t>(c) * (p - f[j] % p)) % p;
  }
  r.resize(k);
  return r;
}

PPoly ppowmod(PPoly base, uint64_t e, const PPoly& f, uint32_t p) {
  PPoly r(f.size() - 1, 0);
  if (r.empty()) r.push_back(0);
  r[0] = 1;
  while (e) {
    if (e & 1) r = pmulmod(r, base, f, p);
    base = pmulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

bool pis_one(const PPoly& a) {
  if (a.empty() || a[0] != 1) return false;
  for (size_t i = 1; i < a.size(); ++i)
    if (a[i] != 0) return false;
  return true;
}

// x has multiplicative order p^k - 1 in F_p[x]/(f) iff f is primitive
// (an order-(p^k - 1) cyclic subgroup forces the quotient to be a field).
bool is_primitive(const PPoly& f, uint32_t p, uint64_t m,
                  const std::vector<uint64_t>& m_factors) {
  PPoly x(f.size() - 1, 0);
  if (x.size() < 2) {
    // k = 1: x reduces to the scalar -c_0
    x[0] = (p - f[0] % p) % p;
  } else {
    x[1] = 1;
  }
  if (!pis_one(ppowmod(x, m, f, p))) return false;
  for (uint64_t r : m_factors)
    if (pis_one(ppowmod(x, m / r, f, p))) return false;
  return true;
}

}  // namespace

FieldTable::FieldTable(uint32_t p, uint32_t k, uint64_t size_bound)
    : p_(p), k_(k), id_(g_next_field_id.fetch_add(1)) {
  if (!is_prime_u32(p)) throw std::invalid_argument("FieldTable: p is not prime");
  if (k < 1) throw std::invalid_argument("FieldTable: k must be >= 1");
  q_ = 1;
  for (uint32_t i = 0; i < k; ++i) {
    q_ *= p;
    if (q_ > size_bound)
      throw std::invalid_argument("FieldTable: field size exceeds bound");
  }
  uint64_t m = q_ - 1;
  auto mf = prime_factors(m);

  // Lexicographically smallest primitive polynomial: candidates ordered by
  // c_0 + c_1 p + ... + c_{k-1} p^{k-1}.
  bool found = false;
  for (uint64_t val = 1; val < q_ && !found; ++val) {
    if (val % p == 0) continue;  // constant term must be nonzero
    PPoly f(k + 1, 0);
    uint64_t v = val;
    for (uint32_t i = 0; i < k; ++i) {
      f[i] = static_cast<uint32_t>(v % p);
      v /= p;
    }
    f[k] = 1;
    if (is_primitive(f, p, m, mf)) {
      prim_poly_.assign(f.begin(), f.end());
      found = true;
    }
  }
  if (!found) throw InternalError("FieldTable: no primitive polynomial found");

  // exp/log tables: walk powers of x modulo prim_poly.
  exp_table_.assign(m, 0);
  log_table_.assign(q_, -1);
  std::vector<uint32_t> cur(k, 0);
  cur[0] = 1;
  for (uint64_t i = 0; i < m; ++i) {
    uint64_t rep = 0, mult = 1;
    for (uint32_t j = 0; j < k; ++j) {
      rep += cur[j] * mult;
      mult *= p;
    }
    if (log_table_[rep] != -1)
      throw InternalError("FieldTable: generator order too small");
    exp_table_[i] = rep;
    log_table_[rep] = static_cast<int64_t>(i);
    // cur *= x  (mod prim_poly)
    uint32_t t = cur[k - 1];
    for (uint32_t j = k; j-- > 1;) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (t != 0)
      for (uint32_t j = 0; j < k; ++j)
        cur[j] = (cur[j] + static_cast<uint64_t>(t) * (p - prim_poly_[j] % p)) % p;
  }

  // Zech logarithms: zech[i] = log(1 + g^i).
  zech_.assign(m, -1);
  for (uint64_t i = 0; i < m; ++i) {
    uint64_t rep = exp_table_[i];
    uint64_t d0 = rep % p;
    uint64_t plus1 = rep - d0 + (d0 + 1) % p;
    zech_[i] = log_table_[plus1];
  }
}

void FieldTable::check(FqElem a) const {
  if (a.fid != id_)
    throw std::invalid_argument("FqElem belongs to a different field");
}

FqElem FieldTable::gen() const { return from_exp(1); }

FqElem FieldTable::from_exp(int64_t e) const {
  int64_t m = static_cast<int64_t>(q_ - 1);
  int64_t r = e % m;
  if (r < 0) r += m;
  return {static_cast<int32_t>(r), id_};
}

FqElem FieldTable::from_rep(uint64_t rep) const {
  if (rep >= q_) throw std::invalid_argument("from_rep: out of range");
  if (rep == 0) return zero();
  return {static_cast<int32_t>(log_table_[rep]), id_};
}

uint64_t FieldTable::rep(FqElem a) const {
  check(a);
  return a.is_zero() ? 0 : exp_table_[a.exp];
}

FqElem FieldTable::add(FqElem a, FqElem b) const {
  check(a);
  check(b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  int64_t m = static_cast<int64_t>(q_ - 1);
  int64_t d = (b.exp - a.exp) % m;
  if (d < 0) d += m;
  int64_t z = zech_[d];
  if (z < 0) return zero();
  return from_exp(a.exp + z);
}

FqElem FieldTable::neg(FqElem a) const {
  check(a);
  if (a.is_zero() || p_ == 2) return a;
  return from_exp(a.exp + static_cast<int64_t>((q_ - 1) / 2));
}

FqElem FieldTable::sub(FqElem a, FqElem b) const { return add(a, neg(b)); }

FqElem FieldTable::mul(FqElem a, FqElem b) const {
  check(a);
  check(b);
  if (a.is_zero() || b.is_zero()) return zero();
  return from_exp(static_cast<int64_t>(a.exp) + b.exp);
}

FqElem FieldTable::inv(FqElem a) const {
  check(a);
  if (a.is_zero()) throw std::invalid_argument("inv: division by zero");
  return from_exp(-static_cast<int64_t>(a.exp));
}

FqElem FieldTable::pow(FqElem a, int64_t e) const {
  check(a);
  if (a.is_zero()) {
    if (e == 0) return one();
    if (e < 0) throw std::invalid_argument("pow: zero to negative power");
    return zero();
  }
  int64_t m = static_cast<int64_t>(q_ - 1);
  return from_exp(static_cast<int64_t>((static_cast<__int128>(a.exp) * e) % m));
}

int64_t FieldTable::order(FqElem a) const {
  check(a);
  if (a.is_zero()) throw std::invalid_argument("order of zero");
  uint64_t m = q_ - 1;
  return static_cast<int64_t>(m / std::gcd(m, static_cast<uint64_t>(a.exp)));
}

std::string FieldTable::describe() const {
  std::ostringstream out;
  out << "{\"p\": " << p_ << ", \"k\": " << k_ << ", \"prim_poly\": [";
  for (uint32_t i = 0; i < k_; ++i) out << (i ? ", " : "") << prim_poly_[i];
  out << "]}";
  return out.str();
}

namespace {
std::mutex g_registry_mutex;
std::map<std::pair<uint32_t, uint32_t>, std::unique_ptr<FieldTable>> g_registry;
}  // namespace

const FieldTable& field(uint32_t p, uint32_t k, uint64_t size_bound) {
  std::lock_guard<std::mutex> lock(g_registry_mutex);
  auto key = std::make_pair(p, k);
  auto it = g_registry.find(key);
  if (it == g_registry.end())
    it = g_registry.emplace(key, std::make_unique<FieldTable>(p, k, size_bound))
             .first;
  return *it->second;
}

std::pair<uint32_t, uint32_t> prime_power(uint64_t q) {
  if (q < 2) throw std::invalid_argument("q must be >= 2");
  uint64_t p = q;
  for (uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  uint32_t k = 0;
  uint64_t v = q;
  while (v % p == 0) {
    v /= p;
    ++k;
  }
  if (v != 1) throw std::invalid_argument("q is not a prime power");
  return {static_cast<uint32_t>(p), k};
}

const FieldTable& field_of_size(uint64_t q) {
  auto [p, k] = prime_power(q);
  return field(p, k);
}

SubfieldMap::SubfieldMap(const FieldTable& big, const FieldTable& small)
    : big_(&big), small_(&small) {
  if (big.p() != small.p())
    throw std::invalid_argument("SubfieldMap: characteristic mismatch");
  if (small.k() == 0 || big.k() % small.k() != 0)
    throw std::invalid_argument("SubfieldMap: degree does not divide");
  uint64_t qs = small.q();
  ratio_ = (big.q() - 1) / (qs - 1);

  // Smallest unit j making g_s |-> G^(j*ratio) a root of small's prim_poly.
  const auto& f = small.prim_poly();
  bool found = false;
  for (uint64_t j = 1; j < std::max<uint64_t>(qs - 1, 2) && !found; ++j) {
    if (std::gcd(j, qs - 1) != 1) continue;
    FqElem cand = big.from_exp(static_cast<int64_t>(mulmod(j, ratio_, big.q() - 1)));
    FqElem acc = big.zero();
    for (size_t i = f.size(); i-- > 0;)
      acc = big.add(big.mul(acc, cand), big.from_rep(f[i]));
    if (acc.is_zero()) {
      unit_ = j;
      found = true;
    }
  }
  if (!found) throw InternalError("SubfieldMap: no compatible root found");
  unit_inv_ = (qs == 2) ? 1 : inv_mod(unit_, qs - 1);
}

FqElem SubfieldMap::embed(FqElem a) const {
  if (a.fid != small_->id())
    throw std::invalid_argument("embed: element not in the small field");
  if (a.is_zero()) return big_->zero();
  uint64_t m = big_->q() - 1;
  uint64_t e = mulmod(mulmod(static_cast<uint64_t>(a.exp), unit_, m), ratio_, m);
  return big_->from_exp(static_cast<int64_t>(e));
}

FqElem SubfieldMap::norm(FqElem beta) const {
  if (beta.fid != big_->id())
    throw std::invalid_argument("norm: element not in the big field");
  if (beta.is_zero()) return small_->zero();
  uint64_t ms = small_->q() - 1;
  uint64_t e = static_cast<uint64_t>(beta.exp) % ms;
  return small_->from_exp(static_cast<int64_t>(mulmod(unit_inv_, e, ms)));
}

bool SubfieldMap::in_subfield(FqElem a) const {
  if (a.fid != big_->id())
    throw std::invalid_argument("in_subfield: element not in the big field");
  return a.is_zero() || static_cast<uint64_t>(a.exp) % ratio_ == 0;
}

FqElem SubfieldMap::project(FqElem a) const {
  if (!in_subfield(a))
    throw std::invalid_argument("project: element outside the subfield");
  if (a.is_zero()) return small_->zero();
  uint64_t ms = small_->q() - 1;
  uint64_t e = static_cast<uint64_t>(a.exp) / ratio_;
  return small_->from_exp(static_cast<int64_t>(mulmod(unit_inv_, e % ms, ms)));
}

}  // namespace singerfact::gf
