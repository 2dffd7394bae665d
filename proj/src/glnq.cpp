#include "singerfact/glnq.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "singerfact/errors.hpp"

namespace singerfact::glnq {

namespace {

void check_key_width(const FieldTable& f, int n) {
  // n^2 base-q digits must fit 64 bits
  long double bits = n * n * std::log2l(static_cast<long double>(f.q()));
  if (bits > 63.5)
    throw std::invalid_argument("matrix key does not fit 64 bits");
}

}  // namespace

MatrixGF::MatrixGF(const FieldTable& f, int n) : f_(&f), n_(n) {
  if (n < 1) throw std::invalid_argument("MatrixGF: n must be >= 1");
  check_key_width(f, n);
  e_.assign(static_cast<size_t>(n) * n, f.zero());
}

MatrixGF MatrixGF::identity(const FieldTable& f, int n) {
  MatrixGF m(f, n);
  for (int i = 0; i < n; ++i) m.set(i, i, f.one());
  return m;
}

MatrixGF MatrixGF::companion(const FieldTable& f,
                             const std::vector<FqElem>& coeffs) {
  int n = static_cast<int>(coeffs.size());
  MatrixGF m(f, n);
  for (int j = 0; j + 1 < n; ++j) m.set(j + 1, j, f.one());
  for (int i = 0; i < n; ++i) m.set(i, n - 1, f.neg(coeffs[i]));
  return m;
}

MatrixGF MatrixGF::from_key(const FieldTable& f, int n, uint64_t key) {
  MatrixGF m(f, n);
  uint64_t q = f.q();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      m.e_[i * n + j] = f.from_rep(key % q);
      key /= q;
    }
  if (key != 0) throw std::invalid_argument("from_key: key out of range");
  return m;
}

void MatrixGF::set(int i, int j, FqElem v) {
  if (v.fid != f_->id())
    throw std::invalid_argument("MatrixGF: entry from a different field");
  e_[i * n_ + j] = v;
}

MatrixGF MatrixGF::operator*(const MatrixGF& o) const {
  if (f_ != o.f_ || n_ != o.n_)
    throw std::invalid_argument("MatrixGF: dimension or field mismatch");
  MatrixGF r(*f_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      FqElem acc = f_->zero();
      for (int k = 0; k < n_; ++k)
        acc = f_->add(acc, f_->mul(at(i, k), o.at(k, j)));
      r.e_[i * n_ + j] = acc;
    }
  return r;
}

bool MatrixGF::operator==(const MatrixGF& o) const {
  return f_ == o.f_ && n_ == o.n_ && e_ == o.e_;
}

MatrixGF MatrixGF::inverse() const {
  // Gauss-Jordan on [A | I]
  MatrixGF a = *this, inv = identity(*f_, n_);
  for (int col = 0; col < n_; ++col) {
    int piv = -1;
    for (int r = col; r < n_; ++r)
      if (!a.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::invalid_argument("MatrixGF::inverse: singular");
    for (int j = 0; j < n_; ++j) {
      std::swap(a.e_[piv * n_ + j], a.e_[col * n_ + j]);
      std::swap(inv.e_[piv * n_ + j], inv.e_[col * n_ + j]);
    }
    FqElem s = f_->inv(a.at(col, col));
    for (int j = 0; j < n_; ++j) {
      a.e_[col * n_ + j] = f_->mul(a.at(col, j), s);
      inv.e_[col * n_ + j] = f_->mul(inv.at(col, j), s);
    }
    for (int r = 0; r < n_; ++r) {
      if (r == col || a.at(r, col).is_zero()) continue;
      FqElem t = a.at(r, col);
      for (int j = 0; j < n_; ++j) {
        a.e_[r * n_ + j] = f_->sub(a.at(r, j), f_->mul(t, a.at(col, j)));
        inv.e_[r * n_ + j] = f_->sub(inv.at(r, j), f_->mul(t, inv.at(col, j)));
      }
    }
  }
  return inv;
}

MatrixGF MatrixGF::pow(uint64_t e) const {
  MatrixGF r = identity(*f_, n_), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

FqElem MatrixGF::det() const {
  MatrixGF a = *this;
  FqElem d = f_->one();
  for (int col = 0; col < n_; ++col) {
    int piv = -1;
    for (int r = col; r < n_; ++r)
      if (!a.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return f_->zero();
    if (piv != col) {
      for (int j = 0; j < n_; ++j)
        std::swap(a.e_[piv * n_ + j], a.e_[col * n_ + j]);
      d = f_->neg(d);
    }
    d = f_->mul(d, a.at(col, col));
    FqElem s = f_->inv(a.at(col, col));
    for (int r = col + 1; r < n_; ++r) {
      if (a.at(r, col).is_zero()) continue;
      FqElem t = f_->mul(a.at(r, col), s);
      for (int j = col; j < n_; ++j)
        a.e_[r * n_ + j] = f_->sub(a.at(r, j), f_->mul(t, a.at(col, j)));
    }
  }
  return d;
}

uint64_t MatrixGF::key() const {
  uint64_t q = f_->q(), key = 0, mult = 1;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      key += f_->rep(at(i, j)) * mult;
      mult *= q;
    }
  return key;
}

uint64_t MatrixGF::multiplicative_order() const {
  MatrixGF id = identity(*f_, n_), p = *this;
  uint64_t ord = 1;
  while (!(p == id)) {
    p = p * *this;
    ++ord;
    if (ord > (uint64_t(1) << 40))
      throw InternalError("multiplicative_order: runaway");
  }
  return ord;
}

std::string MatrixGF::to_json() const {
  std::ostringstream out;
  out << "{\"n\": " << n_ << ", \"q\": " << f_->q() << ", \"rows\": [";
  for (int i = 0; i < n_; ++i) {
    out << (i ? ", [" : "[");
    for (int j = 0; j < n_; ++j) out << (j ? ", " : "") << f_->rep(at(i, j));
    out << "]";
  }
  out << "]}";
  return out.str();
}

// ----------------------------------------------------------------- FPoly

void FPoly::trim() {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

bool FPoly::monic() const {
  return !c.empty() && c.back() == f->one();
}

bool FPoly::operator==(const FPoly& o) const { return f == o.f && c == o.c; }

FPoly FPoly::operator+(const FPoly& o) const {
  FPoly r{f, {}};
  r.c.resize(std::max(c.size(), o.c.size()), f->zero());
  for (size_t i = 0; i < r.c.size(); ++i) {
    FqElem a = i < c.size() ? c[i] : f->zero();
    FqElem b = i < o.c.size() ? o.c[i] : f->zero();
    r.c[i] = f->add(a, b);
  }
  r.trim();
  return r;
}

FPoly FPoly::operator-(const FPoly& o) const {
  FPoly neg{o.f, o.c};
  for (auto& x : neg.c) x = f->neg(x);
  return *this + neg;
}

FPoly FPoly::operator*(const FPoly& o) const {
  if (is_zero() || o.is_zero()) return {f, {}};
  FPoly r{f, std::vector<FqElem>(c.size() + o.c.size() - 1, f->zero())};
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    for (size_t j = 0; j < o.c.size(); ++j)
      r.c[i + j] = f->add(r.c[i + j], f->mul(c[i], o.c[j]));
  }
  r.trim();
  return r;
}

FPoly FPoly::mod(const FPoly& d) const {
  if (d.is_zero()) throw std::invalid_argument("FPoly::mod by zero");
  FPoly r = *this;
  FqElem lead_inv = f->inv(d.c.back());
  while (!r.is_zero() && r.degree() >= d.degree()) {
    FqElem t = f->mul(r.c.back(), lead_inv);
    int shift = r.degree() - d.degree();
    for (int j = 0; j <= d.degree(); ++j)
      r.c[shift + j] = f->sub(r.c[shift + j], f->mul(t, d.c[j]));
    r.trim();
  }
  return r;
}

FqElem FPoly::eval(FqElem x) const {
  FqElem acc = f->zero();
  for (size_t i = c.size(); i-- > 0;) acc = f->add(f->mul(acc, x), c[i]);
  return acc;
}

std::vector<uint64_t> FPoly::rep_coeffs() const {
  std::vector<uint64_t> out;
  out.reserve(c.size());
  for (auto e : c) out.push_back(f->rep(e));
  return out;
}

FPoly charpoly(const MatrixGF& a) {
  const FieldTable& f = a.field();
  int n = a.n();
  if (n > 16) throw std::invalid_argument("charpoly: n too large");
  // entries of xI - A as degree <= 1 polynomials
  auto entry = [&](int i, int j) {
    FPoly p{&f, {}};
    p.c.push_back(f.neg(a.at(i, j)));
    if (i == j) p.c.push_back(f.one());
    p.trim();
    return p;
  };
  // minors over column subsets; row index = n - popcount(mask)
  std::map<uint32_t, FPoly> memo;
  FPoly one{&f, {f.one()}};
  memo[0] = one;
  uint32_t full = (n >= 32) ? ~0u : ((1u << n) - 1);
  // iterate masks by popcount so dependencies are ready
  std::vector<std::vector<uint32_t>> by_pop(n + 1);
  for (uint32_t m = 0; m <= full; ++m) {
    int pc = std::popcount(m);
    if (pc <= n) by_pop[pc].push_back(m);
  }
  for (int pc = 1; pc <= n; ++pc)
    for (uint32_t mask : by_pop[pc]) {
      int row = n - pc;
      FPoly acc{&f, {}};
      bool negate = false;
      for (int j = 0; j < n; ++j) {
        if (!(mask & (1u << j))) continue;
        FPoly term = entry(row, j) * memo[mask & ~(1u << j)];
        if (negate) acc = acc - term;
        else acc = acc + term;
        negate = !negate;
      }
      memo[mask] = acc;
    }
  return memo[full];
}

namespace {

// Gaussian elimination in place; returns rank.
int eliminate(std::vector<FqElem>& rows, int nrows, int ncols,
              const FieldTable& f) {
  int rank = 0;
  for (int col = 0; col < ncols && rank < nrows; ++col) {
    int piv = -1;
    for (int r = rank; r < nrows; ++r)
      if (!rows[r * ncols + col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < ncols; ++j)
      std::swap(rows[piv * ncols + j], rows[rank * ncols + j]);
    FqElem s = f.inv(rows[rank * ncols + col]);
    for (int j = 0; j < ncols; ++j)
      rows[rank * ncols + j] = f.mul(rows[rank * ncols + j], s);
    for (int r = 0; r < nrows; ++r) {
      if (r == rank || rows[r * ncols + col].is_zero()) continue;
      FqElem t = rows[r * ncols + col];
      for (int j = 0; j < ncols; ++j)
        rows[r * ncols + j] =
            f.sub(rows[r * ncols + j], f.mul(t, rows[rank * ncols + j]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace

int rank(const MatrixGF& a) {
  const FieldTable& f = a.field();
  int n = a.n();
  std::vector<FqElem> rows(static_cast<size_t>(n) * n, f.zero());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i * n + j] = a.at(i, j);
  return eliminate(rows, n, n, f);
}

int fixed_codim(const MatrixGF& a) {
  const FieldTable& f = a.field();
  int n = a.n();
  std::vector<FqElem> rows(static_cast<size_t>(n) * n, f.zero());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      rows[i * n + j] =
          (i == j) ? f.sub(a.at(i, j), f.one()) : a.at(i, j);
  return eliminate(rows, n, n, f);
}

SubspaceKey span_key(const FieldTable& f, int n,
                     const std::vector<std::vector<FqElem>>& vecs) {
  int m = static_cast<int>(vecs.size());
  std::vector<FqElem> rows(static_cast<size_t>(m) * n, f.zero());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) rows[i * n + j] = vecs[i][j];
  int r = eliminate(rows, m, n, f);
  SubspaceKey key;
  key.dim = r;
  uint64_t mult = 1;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < n; ++j) {
      key.packed += f.rep(rows[i * n + j]) * mult;
      mult *= f.q();
    }
  return key;
}

SubspaceKey fixed_space_key(const MatrixGF& a) {
  const FieldTable& f = a.field();
  int n = a.n();
  // RREF of (A - I); kernel = fixed space of column vectors.
  std::vector<FqElem> rows(static_cast<size_t>(n) * n, f.zero());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      rows[i * n + j] = (i == j) ? f.sub(a.at(i, j), f.one()) : a.at(i, j);
  int r = eliminate(rows, n, n, f);
  // locate pivot columns
  std::vector<int> pivot_col(r, -1);
  std::vector<bool> is_pivot(n, false);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < n; ++j)
      if (!rows[i * n + j].is_zero()) {
        pivot_col[i] = j;
        is_pivot[j] = true;
        break;
      }
  // one kernel basis vector per free column
  std::vector<std::vector<FqElem>> basis;
  for (int jf = 0; jf < n; ++jf) {
    if (is_pivot[jf]) continue;
    std::vector<FqElem> v(n, f.zero());
    v[jf] = f.one();
    for (int i = 0; i < r; ++i)
      v[pivot_col[i]] = f.neg(rows[i * n + jf]);
    basis.push_back(std::move(v));
  }
  return span_key(f, n, basis);
}

bool is_irreducible(const FPoly& p) {
  int n = p.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  const FieldTable& f = *p.f;
  uint64_t q = f.q();
  for (int d = 1; 2 * d <= n; ++d) {
    // all monic divisor candidates of degree d
    uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= q;
    for (uint64_t enc = 0; enc < count; ++enc) {
      FPoly g{&f, std::vector<FqElem>(d + 1, f.zero())};
      uint64_t v = enc;
      for (int i = 0; i < d; ++i) {
        g.c[i] = f.from_rep(v % q);
        v /= q;
      }
      g.c[d] = f.one();
      if (p.mod(g).is_zero()) return false;
    }
  }
  return true;
}

std::vector<FPoly> irreducible_monic_polys(const FieldTable& f, int n) {
  uint64_t q = f.q(), count = 1;
  for (int i = 0; i < n; ++i) count *= q;
  std::vector<FPoly> out;
  for (uint64_t enc = 0; enc < count; ++enc) {
    FPoly g{&f, std::vector<FqElem>(n + 1, f.zero())};
    uint64_t v = enc;
    for (int i = 0; i < n; ++i) {
      g.c[i] = f.from_rep(v % q);
      v /= q;
    }
    g.c[n] = f.one();
    if (is_irreducible(g)) out.push_back(std::move(g));
  }
  return out;
}

bool is_regular_elliptic(const MatrixGF& g) {
  return is_irreducible(charpoly(g));
}

std::vector<ReflectionInfo> enumerate_reflections(
    const FieldTable& f, int n, std::optional<FqElem> det_filter) {
  if (n < 1) throw std::invalid_argument("enumerate_reflections: n < 1");
  check_key_width(f, n);
  uint64_t q = f.q(), qn = 1;
  for (int i = 0; i < n; ++i) qn *= q;

  auto decode = [&](uint64_t enc) {
    std::vector<FqElem> v(n, f.zero());
    for (int j = 0; j < n; ++j) {
      v[j] = f.from_rep(enc % q);
      enc /= q;
    }
    return v;
  };

  std::vector<ReflectionInfo> out;
  int hyperplane_id = 0;
  for (uint64_t penc = 1; penc < qn; ++penc) {
    std::vector<FqElem> phi = decode(penc);
    int lead = 0;
    while (phi[lead].is_zero()) ++lead;
    if (!(phi[lead] == f.one())) continue;  // canonical functional per line
    for (uint64_t venc = 1; venc < qn; ++venc) {
      std::vector<FqElem> v = decode(venc);
      FqElem s = f.zero();
      for (int j = 0; j < n; ++j) s = f.add(s, f.mul(phi[j], v[j]));
      FqElem det = f.add(f.one(), s);
      if (det.is_zero()) continue;
      if (det_filter && !(det == *det_filter)) continue;
      MatrixGF g = MatrixGF::identity(f, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          g.set(i, j, f.add(g.at(i, j), f.mul(v[i], phi[j])));
      ReflKind kind =
          (det == f.one()) ? ReflKind::transvection : ReflKind::semisimple;
      out.push_back({g.key(), det, kind, hyperplane_id});
    }
    ++hyperplane_id;
  }
  return out;
}

MatrixGF singer_cycle(const FieldTable& f, int n, uint64_t field_bound) {
  if (n < 1) throw std::invalid_argument("singer_cycle: n < 1");
  const FieldTable& big = gf::field(f.p(), f.k() * n, field_bound);
  gf::SubfieldMap map(big, f);
  FqElem g = big.gen();
  // minimal polynomial of G over F_q: prod_j (x - G^(q^j))
  FPoly minpoly{&big, {big.one()}};
  uint64_t e = 1;
  for (int j = 0; j < n; ++j) {
    FPoly lin{&big, {big.neg(big.pow(g, static_cast<int64_t>(e))), big.one()}};
    minpoly = minpoly * lin;
    e *= f.q();
  }
  if (minpoly.degree() != n)
    throw InternalError("singer_cycle: wrong minimal polynomial degree");
  std::vector<FqElem> coeffs(n, f.zero());
  for (int i = 0; i < n; ++i) coeffs[i] = map.project(minpoly.c[i]);
  return MatrixGF::companion(f, coeffs);
}

uint64_t gl_order(uint64_t q, int n) {
  unsigned __int128 ord = 1;
  uint64_t qn = 1;
  for (int i = 0; i < n; ++i) qn *= q;
  uint64_t qi = 1;
  for (int i = 0; i < n; ++i) {
    ord *= (qn - qi);
    qi *= q;
    if (ord > (unsigned __int128)UINT64_MAX)
      throw std::invalid_argument("gl_order: exceeds 64 bits");
  }
  return static_cast<uint64_t>(ord);
}

GroupIndex::GroupIndex(const FieldTable& f, int n, uint64_t bound)
    : f_(&f), n_(n) {
  check_key_width(f, n);
  uint64_t order;
  try {
    order = gl_order(f.q(), n);
  } catch (const std::invalid_argument&) {
    throw BudgetError("GroupIndex: group order exceeds 64 bits");
  }
  if (order > bound)
    throw BudgetError("GroupIndex: group order " + std::to_string(order) +
                      " exceeds dense bound " + std::to_string(bound));
  keys_.reserve(order);

  uint64_t q = f.q(), qn = 1;
  for (int i = 0; i < n; ++i) qn *= q;

  // encoded row arithmetic: add c * r to s, digitwise over F_q
  auto axpy = [&](uint64_t s, FqElem c, uint64_t r) {
    uint64_t out = 0, mult = 1;
    for (int j = 0; j < n; ++j) {
      FqElem a = f.from_rep(s % q), b = f.from_rep(r % q);
      out += f.rep(f.add(a, f.mul(c, b))) * mult;
      s /= q;
      r /= q;
      mult *= q;
    }
    return out;
  };

  std::vector<char> in_span(qn, 0);
  in_span[0] = 1;
  std::vector<uint64_t> span_elems = {0};
  std::vector<uint64_t> chosen(n, 0);

  // iterative DFS over rows, lexicographic by encoded row value
  struct Frame {
    uint64_t next_row;
    size_t span_size_before;
  };
  std::vector<Frame> stack;
  stack.push_back({1, 1});
  while (!stack.empty()) {
    Frame& fr = stack.back();
    int depth = static_cast<int>(stack.size()) - 1;
    // find next candidate row not in span
    uint64_t r = fr.next_row;
    while (r < qn && in_span[r]) ++r;
    if (r >= qn) {
      // rollback span additions made at this depth and pop
      while (span_elems.size() > fr.span_size_before) {
        in_span[span_elems.back()] = 0;
        span_elems.pop_back();
      }
      stack.pop_back();
      continue;
    }
    fr.next_row = r + 1;
    chosen[depth] = r;
    if (depth == n - 1) {
      uint64_t key = 0, mult = 1;
      for (int i = 0; i < n; ++i) {
        key += chosen[i] * mult;
        mult *= qn;
      }
      keys_.push_back(key);
    } else {
      // extend span with the q^depth * (q-1) new combinations
      size_t before = span_elems.size();
      for (size_t si = 0; si < before; ++si)
        for (uint64_t ce = 1; ce < q; ++ce) {
          uint64_t nv = axpy(span_elems[si], f.from_rep(ce), r);
          if (!in_span[nv]) {
            in_span[nv] = 1;
            span_elems.push_back(nv);
          }
        }
      stack.push_back({1, before});
    }
  }

  if (keys_.size() != order)
    throw InternalError("GroupIndex: enumeration does not match closed form");
  std::sort(keys_.begin(), keys_.end());
}

int64_t GroupIndex::index_of(uint64_t key) const {
  auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
  if (it == keys_.end() || *it != key) return -1;
  return it - keys_.begin();
}

}  // namespace singerfact::glnq
