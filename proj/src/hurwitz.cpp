#include "singerfact/hurwitz.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "singerfact/errors.hpp"
#include "singerfact/qformula.hpp"

namespace singerfact::hurwitz {

using glnq::MatrixGF;

namespace {

MatrixGF product_of(const gf::FieldTable& f, int n, const FactTuple& t) {
  MatrixGF p = MatrixGF::identity(f, n);
  for (uint64_t k : t.keys) p = p * MatrixGF::from_key(f, n, k);
  return p;
}

// braid move without postcondition checks (BFS fast path); i is 0-based here
FactTuple braid_raw(const gf::FieldTable& f, int n, const FactTuple& t, int i,
                    bool inverse) {
  FactTuple r = t;
  MatrixGF a = MatrixGF::from_key(f, n, t.keys[i]);
  MatrixGF b = MatrixGF::from_key(f, n, t.keys[i + 1]);
  if (!inverse) {
    // (a, b) -> (b, b^-1 a b)
    r.keys[i] = b.key();
    r.keys[i + 1] = (b.inverse() * a * b).key();
  } else {
    // (a, b) -> (a b a^-1, a)
    r.keys[i] = (a * b * a.inverse()).key();
    r.keys[i + 1] = a.key();
  }
  return r;
}

}  // namespace

FactTuple apply_braid(const gf::FieldTable& f, int n, const FactTuple& t,
                      int i, bool inverse) {
  int ell = static_cast<int>(t.keys.size());
  if (i < 1 || i > ell - 1)
    throw std::invalid_argument("apply_braid: strand index out of range");
  FactTuple r = braid_raw(f, n, t, i - 1, inverse);
  // postconditions: product unchanged, both touched factors reflections
  if (!(product_of(f, n, r) == product_of(f, n, t)))
    throw InternalError("apply_braid: product changed");
  for (int j : {i - 1, i})
    if (glnq::fixed_codim(MatrixGF::from_key(f, n, r.keys[j])) != 1)
      throw InternalError("apply_braid: factor left the reflection class");
  return r;
}

std::vector<FactTuple> enumerate_factorizations(const MatrixGF& target,
                                                int ell, uint64_t budget) {
  const gf::FieldTable& f = target.field();
  int n = target.n();
  if (ell < 0) throw std::invalid_argument("enumerate_factorizations: ell < 0");

  auto refl = glnq::enumerate_reflections(f, n);
  std::vector<uint64_t> keys;
  std::vector<MatrixGF> inv;
  for (const auto& r : refl) keys.push_back(r.key);
  std::sort(keys.begin(), keys.end());
  for (uint64_t k : keys)
    inv.push_back(MatrixGF::from_key(f, n, k).inverse());

  std::vector<FactTuple> out;
  std::vector<uint64_t> current(ell);
  auto emit = [&] {
    out.push_back({current});
    if (out.size() > budget)
      throw BudgetError("enumerate_factorizations: tuple budget exceeded",
                        "{\"tuples_found\": " + std::to_string(budget) + "}");
  };
  auto rec = [&](auto&& self, const MatrixGF& rem, int depth) -> void {
    if (depth == ell) {
      if (rem == MatrixGF::identity(f, n)) emit();
      return;
    }
    if (depth == ell - 1) {
      // the last factor is forced to be rem itself
      uint64_t rk = rem.key();
      if (std::binary_search(keys.begin(), keys.end(), rk)) {
        current[depth] = rk;
        emit();
      }
      return;
    }
    for (size_t r = 0; r < keys.size(); ++r) {
      MatrixGF next = inv[r] * rem;
      if (glnq::fixed_codim(next) > ell - depth - 1) continue;
      current[depth] = keys[r];
      self(self, next, depth + 1);
    }
  };
  rec(rec, target, 0);
  // reflections were iterated in sorted key order, so tuples arrive sorted
  return out;
}

OrbitDecomposition orbit_decompose(const gf::FieldTable& f, int n,
                                   const std::vector<FactTuple>& tuples) {
  OrbitDecomposition out;
  if (tuples.empty()) return out;
  int ell = static_cast<int>(tuples.front().keys.size());

  // all tuples must share one product
  MatrixGF prod0 = product_of(f, n, tuples.front());
  for (const auto& t : tuples)
    if (!(product_of(f, n, t) == prod0))
      throw std::invalid_argument("orbit_decompose: mixed products");

  std::vector<FactTuple> sorted = tuples;
  std::sort(sorted.begin(), sorted.end());
  auto index_of = [&](const FactTuple& t) -> int64_t {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), t);
    if (it == sorted.end() || !(*it == t)) return -1;
    return it - sorted.begin();
  };

  // factor keys are reflections; cache decode/inverse/det per key
  std::map<uint64_t, MatrixGF> mats, invs;
  std::map<uint64_t, uint64_t> dets;
  auto mat_of = [&](uint64_t k) -> const MatrixGF& {
    auto it = mats.find(k);
    if (it == mats.end())
      it = mats.emplace(k, MatrixGF::from_key(f, n, k)).first;
    return it->second;
  };
  auto inv_of = [&](uint64_t k) -> const MatrixGF& {
    auto it = invs.find(k);
    if (it == invs.end()) it = invs.emplace(k, mat_of(k).inverse()).first;
    return it->second;
  };
  auto det_of = [&](uint64_t k) -> uint64_t {
    auto it = dets.find(k);
    if (it == dets.end()) it = dets.emplace(k, f.rep(mat_of(k).det())).first;
    return it->second;
  };
  auto det_multiset = [&](const FactTuple& t) {
    std::vector<uint64_t> d;
    for (uint64_t k : t.keys) d.push_back(det_of(k));
    std::sort(d.begin(), d.end());
    return d;
  };

  std::vector<char> visited(sorted.size(), 0);
  FactTuple nb;
  for (size_t seed = 0; seed < sorted.size(); ++seed) {
    if (visited[seed]) continue;
    visited[seed] = 1;
    std::vector<uint64_t> root_dets = det_multiset(sorted[seed]);
    uint64_t size = 0;
    std::deque<int64_t> queue = {static_cast<int64_t>(seed)};
    while (!queue.empty()) {
      int64_t cur = queue.front();
      queue.pop_front();
      ++size;
      for (int i = 0; i + 1 < ell; ++i)
        for (bool inverse : {false, true}) {
          nb = sorted[cur];
          uint64_t ka = nb.keys[i], kb = nb.keys[i + 1];
          if (!inverse) {
            nb.keys[i] = kb;
            nb.keys[i + 1] = (inv_of(kb) * mat_of(ka) * mat_of(kb)).key();
          } else {
            nb.keys[i] = (mat_of(ka) * mat_of(kb) * inv_of(ka)).key();
            nb.keys[i + 1] = ka;
          }
          // determinant multiset is an orbit invariant
          if (det_multiset(nb) != root_dets)
            throw InternalError(
                "orbit_decompose: determinant multiset not invariant");
          int64_t j = index_of(nb);
          if (j < 0)
            throw InternalError("orbit_decompose: input not braid-closed");
          if (!visited[j]) {
            visited[j] = 1;
            queue.push_back(j);
          }
        }
    }
    out.sizes.push_back(size);
    out.representatives.push_back(sorted[seed]);
  }
  return out;
}

TransitivityReport hurwitz_transitivity_check(const gf::FieldTable& f, int n, int ell,
                                      uint64_t budget) {
  TransitivityReport rep;
  rep.n = n;
  rep.q = f.q();
  rep.ell = ell;
  MatrixGF c = glnq::singer_cycle(f, n);
  rep.target_charpoly = glnq::charpoly(c).rep_coeffs();

  auto tuples = enumerate_factorizations(c, ell, budget);
  rep.tuple_count = tuples.size();

  // cross-check the enumeration against the closed-form count
  BigInt expected =
      qformula::tq(n, ell, qformula::TqRoute::binom).eval(BigInt(static_cast<long>(f.q())));
  if (BigInt(static_cast<unsigned long>(rep.tuple_count)) != expected)
    throw InternalError("hurwitz_transitivity_check: enumeration disagrees with t_q");

  // group by determinant multiset
  std::map<std::vector<uint64_t>, std::vector<FactTuple>> by_multiset;
  for (auto& t : tuples) {
    std::vector<uint64_t> dets;
    for (uint64_t k : t.keys)
      dets.push_back(f.rep(MatrixGF::from_key(f, n, k).det()));
    std::sort(dets.begin(), dets.end());
    by_multiset[dets].push_back(std::move(t));
  }

  rep.pass = true;
  for (auto& [dets, members] : by_multiset) {
    OrbitDecomposition dec = orbit_decompose(f, n, members);
    MultisetClass cls;
    cls.det_multiset = dets;
    cls.tuple_count = members.size();
    cls.orbit_sizes = dec.sizes;
    std::sort(cls.orbit_sizes.rbegin(), cls.orbit_sizes.rend());
    if (cls.orbit_sizes.size() != 1) rep.pass = false;
    rep.classes.push_back(std::move(cls));
  }
  return rep;
}

}  // namespace singerfact::hurwitz
