#include "singerfact/absorder.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#include "singerfact/errors.hpp"
#include "singerfact/parallel.hpp"
#include "singerfact/qformula.hpp"

namespace singerfact::absorder {

using glnq::GroupIndex;
using glnq::MatrixGF;

int absolute_length(const MatrixGF& g) { return glnq::fixed_codim(g); }

std::vector<uint64_t> IntervalData::rank_sizes() const {
  std::vector<uint64_t> out;
  for (const auto& members : members_by_rank) out.push_back(members.size());
  return out;
}

bool IntervalData::contains(uint64_t key) const {
  for (const auto& members : members_by_rank)
    if (std::binary_search(members.begin(), members.end(), key)) return true;
  return false;
}

IntervalData interval(const MatrixGF& c, uint64_t dense_bound, int threads) {
  const gf::FieldTable& f = c.field();
  int n = c.n();
  GroupIndex idx(f, n, dense_bound);
  int top = absolute_length(c);

  IntervalData data;
  data.n = n;
  data.q = f.q();
  data.target_key = c.key();
  data.members_by_rank.assign(top + 1, {});

  unsigned nthreads = resolve_threads(threads);
  std::mutex merge_mutex;
  parallel_chunks(idx.size(), nthreads, [&](uint64_t lo, uint64_t hi) {
    std::vector<std::vector<uint64_t>> local(top + 1);
    for (uint64_t i = lo; i < hi; ++i) {
      MatrixGF w = MatrixGF::from_key(f, n, idx.key_at(i));
      int lw = glnq::fixed_codim(w);
      if (lw > top) continue;
      int rest = glnq::fixed_codim(w.inverse() * c);
      if (lw + rest == top) local[lw].push_back(idx.key_at(i));
    }
    std::lock_guard<std::mutex> lock(merge_mutex);
    for (int r = 0; r <= top; ++r)
      data.members_by_rank[r].insert(data.members_by_rank[r].end(),
                                     local[r].begin(), local[r].end());
  });
  for (auto& members : data.members_by_rank)
    std::sort(members.begin(), members.end());
  return data;
}

MatrixGF kreweras(const MatrixGF& w, const MatrixGF& c,
                  const IntervalData& data) {
  if (!data.contains(w.key()))
    throw std::invalid_argument("kreweras: w is not in [e, c]");
  MatrixGF result = w.inverse() * c;
  if (!data.contains(result.key()))
    throw InternalError("kreweras: image left the interval");
  return result;
}

namespace {

// all subspaces of F_q^n of dimension d, as canonical keys
std::set<glnq::SubspaceKey> all_subspaces(const gf::FieldTable& f, int n,
                                          int d) {
  std::set<glnq::SubspaceKey> out;
  if (d == 0) {
    out.insert(glnq::span_key(f, n, {}));
    return out;
  }
  uint64_t q = f.q(), qn = 1;
  for (int i = 0; i < n; ++i) qn *= q;
  auto decode = [&](uint64_t enc) {
    std::vector<gf::FqElem> v(n);
    for (int j = 0; j < n; ++j) {
      v[j] = f.from_rep(enc % q);
      enc /= q;
    }
    return v;
  };
  std::vector<std::vector<gf::FqElem>> vecs(d);
  auto rec = [&](auto&& self, int depth, uint64_t from) -> void {
    if (depth == d) {
      glnq::SubspaceKey key = glnq::span_key(f, n, vecs);
      if (key.dim == d) out.insert(key);
      return;
    }
    for (uint64_t enc = from; enc < qn; ++enc) {
      vecs[depth] = decode(enc);
      self(self, depth + 1, enc + 1);
    }
  };
  rec(rec, 0, 1);
  return out;
}

}  // namespace

PiReport pi_map_report(const IntervalData& data, const gf::FieldTable& f) {
  int n = data.n;
  PiReport rep;
  rep.rank_sizes = data.rank_sizes();
  int top = static_cast<int>(data.members_by_rank.size()) - 1;
  rep.pi_surjective = true;
  for (int r = 0; r <= top; ++r) {
    // rank-r members have fixed spaces of dimension n - r
    rep.lattice_rank_sizes.push_back(
        qformula::q_binom(n, n - r)
            .eval(BigInt(static_cast<long>(f.q())))
            .get_ui());
    std::map<glnq::SubspaceKey, uint64_t> fibers;
    for (uint64_t key : data.members_by_rank[r]) {
      MatrixGF w = MatrixGF::from_key(f, n, key);
      fibers[glnq::fixed_space_key(w)]++;
    }
    rep.pi_image_sizes.push_back(fibers.size());
    std::vector<uint64_t> multiset;
    for (const auto& [sk, cnt] : fibers) multiset.push_back(cnt);
    std::sort(multiset.begin(), multiset.end());
    rep.fiber_multiset_by_rank.push_back(std::move(multiset));
    if (rep.pi_image_sizes[r] > rep.lattice_rank_sizes[r])
      throw InternalError("pi_map_report: image exceeds the lattice layer");
    uint64_t missed = rep.lattice_rank_sizes[r] - rep.pi_image_sizes[r];
    rep.missed_per_rank.push_back(missed);
    if (missed) {
      rep.pi_surjective = false;
      // sanity: the image is genuinely a subset of the full lattice layer
      auto lattice = all_subspaces(f, n, n - r);
      for (const auto& [sk, cnt] : fibers)
        if (!lattice.count(sk))
          throw InternalError("pi_map_report: image outside the lattice");
    }
  }
  return rep;
}

}  // namespace singerfact::absorder
