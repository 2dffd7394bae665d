#include "singerfact/factor_count.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <stdexcept>

#include "singerfact/errors.hpp"
#include "singerfact/parallel.hpp"

namespace singerfact::factor_count {

using glnq::GroupIndex;
using glnq::MatrixGF;
using glnq::ReflectionInfo;

void GroupAlgebraVector::add(uint64_t key, const BigInt& c) {
  if (c == 0) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) terms_[key] = c;
  else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupAlgebraVector GroupAlgebraVector::operator*(
    const GroupAlgebraVector& o) const {
  GroupAlgebraVector r(*f_, n_);
  std::vector<std::pair<MatrixGF, const BigInt*>> left, right;
  for (const auto& [k, c] : terms_)
    left.emplace_back(MatrixGF::from_key(*f_, n_, k), &c);
  for (const auto& [k, c] : o.terms_)
    right.emplace_back(MatrixGF::from_key(*f_, n_, k), &c);
  for (const auto& [ga, ca] : left)
    for (const auto& [gb, cb] : right) r.add((ga * gb).key(), *ca * *cb);
  return r;
}

GroupAlgebraVector GroupAlgebraVector::operator-(
    const GroupAlgebraVector& o) const {
  GroupAlgebraVector r = *this;
  for (const auto& [k, c] : o.terms_) r.add(k, -c);
  return r;
}

GroupAlgebraVector GroupAlgebraVector::conjugated(const MatrixGF& h) const {
  GroupAlgebraVector r(*f_, n_);
  MatrixGF hinv = h.inverse();
  for (const auto& [k, c] : terms_)
    r.add((hinv * MatrixGF::from_key(*f_, n_, k) * h).key(), c);
  return r;
}

StepPlan StepPlan::fixed_dets(const std::vector<gf::FqElem>& alphas) {
  StepPlan p;
  p.ell = static_cast<int>(alphas.size());
  for (auto a : alphas) p.filters.push_back(a);
  return p;
}

namespace {

std::optional<gf::FqElem> step_filter(const StepPlan& plan, int step) {
  if (plan.filters.empty()) return std::nullopt;
  return plan.filters.at(step);
}

// reflection keys matching a filter
std::vector<uint64_t> reflection_keys(const gf::FieldTable& f, int n,
                                      std::optional<gf::FqElem> filter) {
  std::vector<uint64_t> keys;
  for (const auto& r : glnq::enumerate_reflections(f, n, filter))
    keys.push_back(r.key);
  std::sort(keys.begin(), keys.end());
  return keys;
}

struct DenseEngine {
  const gf::FieldTable& f;
  int n;
  const GroupIndex& idx;
  unsigned threads;
  uint64_t table_budget;

  // per reflection-key: gather table j -> index(key_j * t^{-1}), or empty
  // when over the table budget (computed on the fly instead)
  std::map<uint64_t, std::vector<uint32_t>> tables;
  std::map<uint64_t, MatrixGF> inverses;

  DenseEngine(const gf::FieldTable& f_, int n_, const GroupIndex& idx_,
              unsigned threads_, uint64_t budget)
      : f(f_), n(n_), idx(idx_), threads(threads_), table_budget(budget) {}

  void prepare(const std::vector<uint64_t>& refl_keys) {
    bool use_tables =
        static_cast<uint64_t>(refl_keys.size()) * idx.size() <= table_budget;
    for (uint64_t rk : refl_keys) {
      if (inverses.count(rk)) continue;
      MatrixGF tinv = MatrixGF::from_key(f, n, rk).inverse();
      inverses.emplace(rk, tinv);
      if (!use_tables) continue;
      std::vector<uint32_t> tab(idx.size());
      std::atomic<bool> closed{true};  // group closure sanity, checked after join
      parallel_chunks(idx.size(), threads, [&](uint64_t lo, uint64_t hi) {
        for (uint64_t j = lo; j < hi; ++j) {
          MatrixGF g = MatrixGF::from_key(f, n, idx.key_at(j));
          int64_t target = idx.index_of((g * tinv).key());
          if (target < 0) {
            closed.store(false, std::memory_order_relaxed);
            return;
          }
          tab[j] = static_cast<uint32_t>(target);
        }
      });
      if (!closed.load()) throw InternalError("dense conv: product left group");
      tables.emplace(rk, std::move(tab));
    }
  }

  // one convolution step; returns false on uint64 overflow
  template <typename T>
  bool step(const std::vector<T>& in, std::vector<T>& out,
            const std::vector<uint64_t>& refl_keys) {
    std::atomic<bool> ok{true};
    std::atomic<bool> closed{true};
    parallel_chunks(idx.size(), threads, [&](uint64_t lo, uint64_t hi) {
      for (uint64_t j = lo; j < hi && ok.load(std::memory_order_relaxed); ++j) {
        T acc{};
        for (uint64_t rk : refl_keys) {
          auto it = tables.find(rk);
          uint64_t src;
          if (it != tables.end()) {
            src = it->second[j];
          } else {
            MatrixGF g = MatrixGF::from_key(f, n, idx.key_at(j));
            int64_t s = idx.index_of((g * inverses.at(rk)).key());
            if (s < 0) {
              closed.store(false, std::memory_order_relaxed);
              return;
            }
            src = static_cast<uint64_t>(s);
          }
          if constexpr (std::is_same_v<T, uint64_t>) {
            if (__builtin_add_overflow(acc, in[src], &acc)) {
              ok.store(false, std::memory_order_relaxed);
              break;
            }
          } else {
            acc += in[src];
          }
        }
        out[j] = std::move(acc);
      }
    });
    if (!closed.load()) throw InternalError("dense conv: product left group");
    return ok.load();
  }

  template <typename T>
  std::optional<std::vector<T>> run(uint64_t start_index, const StepPlan& plan,
                                    int from_step, int to_step) {
    std::vector<T> v(idx.size(), T{}), w(idx.size(), T{});
    v[start_index] = T(1);
    for (int s = from_step; s < to_step; ++s) {
      auto keys = reflection_keys(f, n, step_filter(plan, s));
      prepare(keys);
      if (!step(v, w, keys)) return std::nullopt;
      std::swap(v, w);
    }
    return v;
  }
};

BigInt count_dense(const MatrixGF& target, const StepPlan& plan,
                   const GroupIndex& idx, const CountOptions& opts) {
  const gf::FieldTable& f = target.field();
  int n = target.n();
  unsigned threads = resolve_threads(opts.threads);
  DenseEngine eng(f, n, idx, threads, opts.table_budget);
  uint64_t id_index = idx.index_of(MatrixGF::identity(f, n).key());
  int64_t target_index = idx.index_of(target.key());
  if (target_index < 0)
    throw std::invalid_argument("count_factorizations: target not invertible");

  int ell = plan.ell;
  int half = opts.meet_in_middle ? ell / 2 : ell;

  auto finish = [&](auto&& v1_opt, auto&& run_suffix,
                    auto&& inner) -> std::optional<BigInt> {
    if (!v1_opt) return std::nullopt;
    if (!opts.meet_in_middle) return BigInt((*v1_opt)[target_index]);
    auto v2_opt = run_suffix();
    if (!v2_opt) return std::nullopt;
    return inner(*v1_opt, *v2_opt);
  };

  // uint64 pass with automatic fallback to big integers on overflow
  {
    auto v1 = eng.run<uint64_t>(id_index, plan, 0, half);
    auto res = finish(
        v1, [&] { return eng.run<uint64_t>(id_index, plan, half, ell); },
        [&](const std::vector<uint64_t>& a,
            const std::vector<uint64_t>& b) -> BigInt {
          BigInt acc = 0;
          for (uint64_t j = 0; j < idx.size(); ++j) {
            if (a[j] == 0) continue;
            MatrixGF g = MatrixGF::from_key(f, n, idx.key_at(j));
            int64_t k = idx.index_of((g.inverse() * target).key());
            if (k >= 0 && b[k] != 0) acc += BigInt(a[j]) * BigInt(b[k]);
          }
          return acc;
        });
    if (res) return *res;
  }
  auto v1 = eng.run<BigInt>(id_index, plan, 0, half);
  auto res = finish(
      v1, [&] { return eng.run<BigInt>(id_index, plan, half, ell); },
      [&](const std::vector<BigInt>& a, const std::vector<BigInt>& b) -> BigInt {
        BigInt acc = 0;
        for (uint64_t j = 0; j < idx.size(); ++j) {
          if (a[j] == 0) continue;
          MatrixGF g = MatrixGF::from_key(f, n, idx.key_at(j));
          int64_t k = idx.index_of((g.inverse() * target).key());
          if (k >= 0) acc += a[j] * b[k];
        }
        return acc;
      });
  if (!res) throw InternalError("count_dense: big-integer pass overflowed");
  return *res;
}

std::map<uint64_t, BigInt> convolve_sparse(const gf::FieldTable& f, int n,
                                           const StepPlan& plan, int from_step,
                                           int to_step, uint64_t start_key,
                                           uint64_t cap) {
  std::map<uint64_t, BigInt> v;
  v[start_key] = 1;
  for (int s = from_step; s < to_step; ++s) {
    std::vector<MatrixGF> refl;
    for (const auto& r :
         glnq::enumerate_reflections(f, n, step_filter(plan, s)))
      refl.push_back(MatrixGF::from_key(f, n, r.key));
    std::map<uint64_t, BigInt> next;
    for (const auto& [k, c] : v) {
      MatrixGF g = MatrixGF::from_key(f, n, k);
      for (const auto& t : refl) {
        uint64_t nk = (g * t).key();
        auto it = next.find(nk);
        if (it == next.end()) next[nk] = c;
        else it->second += c;
      }
      if (next.size() > cap)
        throw BudgetError(
            "count_factorizations: sparse support exceeded cap",
            "{\"completed_steps\": " + std::to_string(s) +
                ", \"support\": " + std::to_string(next.size()) + "}");
    }
    v = std::move(next);
  }
  return v;
}

BigInt count_sparse(const MatrixGF& target, const StepPlan& plan,
                    const CountOptions& opts) {
  const gf::FieldTable& f = target.field();
  int n = target.n();
  int ell = plan.ell;
  int half = opts.meet_in_middle ? ell / 2 : ell;
  uint64_t id_key = MatrixGF::identity(f, n).key();
  auto v1 = convolve_sparse(f, n, plan, 0, half, id_key, opts.sparse_cap);
  if (!opts.meet_in_middle) {
    auto it = v1.find(target.key());
    return it == v1.end() ? BigInt(0) : it->second;
  }
  auto v2 = convolve_sparse(f, n, plan, half, ell, id_key, opts.sparse_cap);
  BigInt acc = 0;
  for (const auto& [k, c] : v1) {
    MatrixGF g = MatrixGF::from_key(f, n, k);
    auto it = v2.find((g.inverse() * target).key());
    if (it != v2.end()) acc += c * it->second;
  }
  return acc;
}

}  // namespace

BigInt count_factorizations(const MatrixGF& target, const StepPlan& plan,
                            const CountOptions& opts) {
  const gf::FieldTable& f = target.field();
  int n = target.n();
  if (n == 1 && f.q() == 2)
    throw std::invalid_argument(
        "count_factorizations: GL_1(F_2) is trivial and has no reflections; "
        "the count is not defined (n = 1, q = 2 refused)");
  if (target.det().is_zero())
    throw std::invalid_argument("count_factorizations: target not invertible");
  if (plan.ell < 0) throw std::invalid_argument("negative length");
  if (!plan.filters.empty() &&
      static_cast<int>(plan.filters.size()) != plan.ell)
    throw std::invalid_argument("plan filter count does not match ell");
  if (plan.ell == 0)
    return target == MatrixGF::identity(f, n) ? 1 : 0;

  try {
    GroupIndex idx(f, n, opts.dense_bound);
    return count_dense(target, plan, idx, opts);
  } catch (const BudgetError&) {
    return count_sparse(target, plan, opts);
  }
}

FixedDetResult count_fixed_dets(const MatrixGF& target,
                                const std::vector<gf::FqElem>& alphas,
                                const CountOptions& opts) {
  const gf::FieldTable& f = target.field();
  gf::FqElem prod = f.one();
  for (auto a : alphas) prod = f.mul(prod, a);
  if (!(prod == target.det())) return {BigInt(0), true};
  return {count_factorizations(target, StepPlan::fixed_dets(alphas), opts),
          false};
}

std::vector<SurveyRow> survey_regular_elliptic(const gf::FieldTable& f, int n,
                                               int ell,
                                               const CountOptions& opts) {
  GroupIndex idx(f, n, opts.dense_bound);  // dense mode required here
  unsigned threads = resolve_threads(opts.threads);
  DenseEngine eng(f, n, idx, threads, opts.table_budget);
  StepPlan plan = StepPlan::all_reflections(ell);
  uint64_t id_index = idx.index_of(MatrixGF::identity(f, n).key());

  std::vector<SurveyRow> rows;
  auto collect = [&](const auto& vec) {
    for (const auto& p : glnq::irreducible_monic_polys(f, n)) {
      std::vector<gf::FqElem> low(p.c.begin(), p.c.end() - 1);
      MatrixGF comp = MatrixGF::companion(f, low);
      int64_t j = idx.index_of(comp.key());
      if (j < 0) throw InternalError("survey: companion not in group");
      rows.push_back({p.rep_coeffs(), BigInt(vec[j])});
    }
  };
  if (auto v = eng.run<uint64_t>(id_index, plan, 0, ell)) {
    collect(*v);
  } else {
    auto vb = eng.run<BigInt>(id_index, plan, 0, ell);
    if (!vb) throw InternalError("survey: overflow in big-integer mode");
    collect(*vb);
  }
  return rows;
}

GroupAlgebraVector jm_element(const gf::FieldTable& f, int n, int m,
                              gf::FqElem alpha) {
  if (m < 1 || m > n) throw std::invalid_argument("jm_element: bad m");
  GroupAlgebraVector v(f, n);
  for (const auto& r : glnq::enumerate_reflections(f, m, alpha)) {
    MatrixGF t = MatrixGF::from_key(f, m, r.key);
    if (m >= 2) {
      // skip reflections lying in GL_{m-1} (last row and column = e_m)
      bool in_smaller = t.at(m - 1, m - 1) == f.one();
      for (int i = 0; in_smaller && i < m - 1; ++i)
        in_smaller = t.at(m - 1, i).is_zero() && t.at(i, m - 1).is_zero();
      if (in_smaller) continue;
    }
    MatrixGF g = MatrixGF::identity(f, n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) g.set(i, j, t.at(i, j));
    v.add(g.key(), 1);
  }
  return v;
}

JmReport jm_commutation(const gf::FieldTable& f, int n,
                        const CountOptions& opts) {
  JmReport rep;
  rep.n = n;
  rep.q = f.q();
  // dense-bound precondition, mirrored from the group size
  if (glnq::gl_order(f.q(), n) > opts.dense_bound)
    throw BudgetError("jm_commutation: group exceeds dense bound");

  std::vector<gf::FqElem> units;
  for (uint64_t r = 1; r < f.q(); ++r) units.push_back(f.from_rep(r));

  std::vector<std::pair<std::string, GroupAlgebraVector>> js;
  for (int m = 1; m <= n; ++m)
    for (auto a : units) {
      std::string name =
          "J_" + std::to_string(m) + "^" + std::to_string(f.rep(a));
      js.emplace_back(name, jm_element(f, n, m, a));
    }
  rep.elements = static_cast<int>(js.size());

  rep.all_commute = true;
  for (size_t i = 0; i < js.size(); ++i)
    for (size_t j = i; j < js.size(); ++j) {
      ++rep.pairs_checked;
      GroupAlgebraVector comm =
          js[i].second * js[j].second - js[j].second * js[i].second;
      if (!comm.is_zero()) {
        rep.all_commute = false;
        rep.failures.push_back("[" + js[i].first + ", " + js[j].first +
                               "] != 0");
      }
    }

  // z_{n,alpha} = sum_m J_m^alpha must be the reflection class sum
  rep.class_sums_match = true;
  rep.centers_check = true;
  for (auto a : units) {
    GroupAlgebraVector z(f, n);
    for (int m = 1; m <= n; ++m) {
      GroupAlgebraVector jm = jm_element(f, n, m, a);
      for (const auto& [k, c] : jm.terms()) z.add(k, c);
    }
    GroupAlgebraVector direct(f, n);
    for (const auto& r : glnq::enumerate_reflections(f, n, a))
      direct.add(r.key, 1);
    if (!(z == direct)) {
      rep.class_sums_match = false;
      rep.failures.push_back("z_{n," + std::to_string(f.rep(a)) +
                             "} != sum of J_m");
    }
    // centrality against a generating set: elementary transvections and the
    // one-slot diagonal generator
    std::vector<MatrixGF> gens;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        MatrixGF e = MatrixGF::identity(f, n);
        e.set(i, j, f.one());
        gens.push_back(e);
      }
    if (f.q() > 2) {
      MatrixGF d = MatrixGF::identity(f, n);
      d.set(0, 0, f.gen());
      gens.push_back(d);
    }
    for (const auto& h : gens)
      if (!(z.conjugated(h) == z)) {
        rep.centers_check = false;
        rep.failures.push_back("z_{n," + std::to_string(f.rep(a)) +
                               "} not central");
        break;
      }
  }
  return rep;
}

}  // namespace singerfact::factor_count
