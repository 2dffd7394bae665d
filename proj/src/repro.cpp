#include "singerfact/repro.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "singerfact/absorder.hpp"
#include "singerfact/charvals.hpp"
#include "singerfact/errors.hpp"
#include "singerfact/factor_count.hpp"
#include "singerfact/glnq.hpp"
#include "singerfact/hurwitz.hpp"
#include "singerfact/qformula.hpp"

namespace singerfact::repro {

using namespace singerfact::glnq;
using namespace singerfact::factor_count;
using singerfact::charvals::Partition;
using singerfact::gf::FieldTable;
using singerfact::gf::FqElem;

namespace {

struct Checker {
  bool pass = true;
  std::ostringstream details;
  int failures = 0;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (++failures <= 12) details << (failures > 1 ? "; " : "") << what;
    if (failures == 13) details << "; ...";
  }
};

const std::vector<std::pair<int, uint64_t>> kGrid = {
    {2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 3}, {4, 2}};

// --- classical S_n oracle -------------------------------------------------
// counts tuples of ell transpositions multiplying to the n-cycle (1 2 .. n),
// by convolution over all of S_n.  Independent of the qformula path.

uint64_t perm_rank(const std::vector<int>& p) {
  // Lehmer code
  int n = static_cast<int>(p.size());
  uint64_t r = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (p[j] < p[i]) ++smaller;
    r = r * (n - i) + smaller;
  }
  return r;
}

BigInt sn_transposition_count(int n, int ell) {
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<int>> perms;
  std::vector<int> p = base;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::sort(perms.begin(), perms.end(),
            [](const auto& a, const auto& b) { return perm_rank(a) < perm_rank(b); });
  auto rank = [&](const std::vector<int>& x) { return perm_rank(x); };

  std::vector<std::vector<int>> transpositions;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<int> t = base;
      std::swap(t[i], t[j]);
      transpositions.push_back(t);
    }

  std::vector<BigInt> v(perms.size(), 0);
  v[rank(base)] = 1;
  for (int s = 0; s < ell; ++s) {
    std::vector<BigInt> w(perms.size(), 0);
    for (size_t i = 0; i < perms.size(); ++i) {
      if (v[i] == 0) continue;
      for (const auto& t : transpositions) {
        std::vector<int> prod(n);
        for (int x = 0; x < n; ++x) prod[x] = perms[i][t[x]];
        w[rank(prod)] += v[i];
      }
    }
    v = std::move(w);
  }
  std::vector<int> cycle(n);
  for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  return v[rank(cycle)];
}

// find a determinant sequence with exactly m ones and product det(c);
// returns empty when impossible
std::vector<FqElem> find_det_sequence(const FieldTable& f, FqElem detc,
                                      int ell, int m, bool shuffled) {
  int rest = ell - m;
  std::vector<FqElem> nonone;
  for (uint64_t r = 2; r < f.q(); ++r) nonone.push_back(f.from_rep(r));
  // nonone = F_q^x \ {1}; rep 1 is the field's one
  std::vector<FqElem> pick(rest, f.zero());
  bool found = false;
  auto rec = [&](auto&& self, int depth, FqElem prod) -> void {
    if (found) return;
    if (depth == rest) {
      if (prod == detc) found = true;
      return;
    }
    for (auto a : nonone) {
      pick[depth] = a;
      self(self, depth + 1, f.mul(prod, a));
      if (found) return;
    }
  };
  rec(rec, 0, f.one());
  if (!found) return {};
  std::vector<FqElem> seq;
  if (!shuffled) {
    for (int i = 0; i < m; ++i) seq.push_back(f.one());
    for (auto a : pick) seq.push_back(a);
  } else {
    // interleave: non-ones first, ones last
    for (auto a : pick) seq.push_back(a);
    for (int i = 0; i < m; ++i) seq.push_back(f.one());
  }
  return seq;
}

std::string fmt_case(int n, uint64_t q, int ell = -1, int m = -1) {
  std::ostringstream s;
  s << "(n=" << n << ",q=" << q;
  if (ell >= 0) s << ",ell=" << ell;
  if (m >= 0) s << ",m=" << m;
  s << ")";
  return s.str();
}

// --- criteria -------------------------------------------------------------

CriterionResult criterion1(int threads) {
  Checker ck;
  CountOptions opts;
  opts.threads = threads;
  for (auto [n, q] : kGrid) {
    const FieldTable& f = gf::field_of_size(q);
    MatrixGF c = singer_cycle(f, n);
    BigInt got = count_factorizations(c, StepPlan::all_reflections(n), opts);
    BigInt expect = big_pow(big_pow(BigInt(static_cast<long>(q)), n) - 1, n - 1);
    ck.expect(got == expect, fmt_case(n, q) + " got " + got.get_str());
    // the count is invariant under conjugating the target
    GroupIndex idx(f, n, opts.dense_bound);
    std::mt19937_64 rng(1000 * n + q);
    for (int trial = 0; trial < 5; ++trial) {
      MatrixGF h = MatrixGF::from_key(f, n, idx.key_at(rng() % idx.size()));
      MatrixGF conj = h.inverse() * c * h;
      ck.expect(count_factorizations(conj, StepPlan::all_reflections(n), opts) ==
                    expect,
                fmt_case(n, q) + " conjugate mismatch");
    }
  }
  return {1, "Shortest factorizations: t_q(n,n) = (q^n-1)^(n-1), brute force", ck.pass,
          ck.details.str(), 0};
}

CriterionResult criterion2(int threads) {
  Checker ck;
  CountOptions opts;
  opts.threads = threads;
  for (auto [n, q] : kGrid) {
    const FieldTable& f = gf::field_of_size(q);
    MatrixGF c = singer_cycle(f, n);
    for (int ell = n; ell <= n + 3; ++ell) {
      BigInt brute = count_factorizations(c, StepPlan::all_reflections(ell), opts);
      BigInt formula = qformula::tq(n, ell, qformula::TqRoute::binom)
                           .eval(BigInt(static_cast<long>(q)));
      ck.expect(brute == formula, fmt_case(n, q, ell) + " total mismatch");
      if (q == 2) continue;
      for (int m = 0; m <= ell - 1; ++m) {
        auto seq = find_det_sequence(f, c.det(), ell, m, false);
        if (seq.empty()) continue;  // no valid determinant sequence
        auto res = count_fixed_dets(c, seq, opts);
        BigInt refined = qformula::tq_nlm(n, ell, m, qformula::TqNlmRoute::binom)
                             .eval(BigInt(static_cast<long>(q)));
        ck.expect(!res.det_obstructed && res.count == refined,
                  fmt_case(n, q, ell, m) + " refined mismatch");
        auto seq2 = find_det_sequence(f, c.det(), ell, m, true);
        if (seq2 != seq) {
          auto res2 = count_fixed_dets(c, seq2, opts);
          ck.expect(res2.count == res.count,
                    fmt_case(n, q, ell, m) + " order dependence");
        }
      }
    }
  }
  return {2, "Closed-form counts match brute force (total and fixed dets)", ck.pass,
          ck.details.str(), 0};
}

CriterionResult criterion3(int) {
  Checker ck;
  for (int n = 2; n <= 6; ++n)
    for (int ell = 0; ell <= n + 4; ++ell) {
      try {
        qformula::tq_all(n, ell);
      } catch (const InternalError& e) {
        ck.expect(false, e.what());
      }
      for (int m = 0; m <= ell - 1; ++m) {
        try {
          qformula::tq_nlm_all(n, ell, m);
        } catch (const InternalError& e) {
          ck.expect(false, e.what());
        }
      }
    }
  return {3, "Symbolic route equivalences for t_q(n,ell) and t_q(n,ell,m)", ck.pass,
          ck.details.str(), 0};
}

CriterionResult criterion4(int) {
  Checker ck;
  for (int n = 2; n <= 5; ++n) {
    ck.expect(qformula::ogf_coefficients_check(n, n + 6),
              "OGF coefficients n=" + std::to_string(n));
    ck.expect(qformula::partial_fraction_check(n),
              "partial fractions n=" + std::to_string(n));
    ck.expect(qformula::egf_check(n, n + 6), "EGF n=" + std::to_string(n));
  }
  return {4, "OGF, partial-fraction, and EGF coefficient checks", ck.pass,
          ck.details.str(), 0};
}

CriterionResult criterion5(int) {
  Checker ck;
  for (int n = 2; n <= 5; ++n)
    for (int ell = 0; ell <= 8; ++ell) {
      BigInt lhs = qformula::tq_q2_dichotomy(n, ell);
      BigInt rhs = qformula::tq(n, ell, qformula::TqRoute::sum).eval(BigInt(2));
      ck.expect(lhs == rhs, fmt_case(n, 2, ell));
    }
  return {5, "q = 2: all-characters sum equals the generic formula at q = 2",
          ck.pass, ck.details.str(), 0};
}

CriterionResult criterion6(bool heavy, int) {
  Checker ck;
  struct Case {
    uint64_t q;
    int n, ell;
  };
  std::vector<Case> cases = {{2, 2, 2}, {2, 3, 3}, {2, 4, 4}, {2, 3, 4},
                             {3, 2, 2}, {3, 2, 3}, {3, 2, 4}, {3, 3, 3},
                             {5, 2, 2}, {5, 2, 3}};
  if (heavy) cases.push_back({2, 5, 5});
  for (const auto& c : cases) {
    const FieldTable& f = gf::field_of_size(c.q);
    auto rep = hurwitz::hurwitz_transitivity_check(f, c.n, c.ell, 2000000);
    ck.expect(rep.pass, fmt_case(c.n, c.q, c.ell) + " has a split class");
  }
  return {6,
          std::string("Hurwitz transitivity per determinant multiset") +
              (heavy ? " (incl. n=ell=5, q=2)" : " (n=ell=5 q=2 needs --heavy)"),
          ck.pass, ck.details.str(), 0};
}

CriterionResult criterion7(int) {
  Checker ck;
  const FieldTable& f2 = gf::field(2, 1);

  // unipotent single Jordan block in GL_4(F_2), ell = 3: orbits {16, 48}
  MatrixGF u = MatrixGF::identity(f2, 4);
  for (int i = 0; i + 1 < 4; ++i) u.set(i, i + 1, f2.one());
  auto tuples = hurwitz::enumerate_factorizations(u, 3);
  ck.expect(tuples.size() == 64,
            "Jordan block tuple count " + std::to_string(tuples.size()));
  auto dec = hurwitz::orbit_decompose(f2, 4, tuples);
  std::vector<uint64_t> sizes = dec.sizes;
  std::sort(sizes.begin(), sizes.end());
  ck.expect(sizes == std::vector<uint64_t>{16, 48}, "Jordan block orbit sizes");

  // Singer in GL_4(F_2), ell = 4: one orbit of 3375
  MatrixGF c = singer_cycle(f2, 4);
  auto st = hurwitz::enumerate_factorizations(c, 4);
  ck.expect(st.size() == 3375, "Singer tuple count");
  auto sdec = hurwitz::orbit_decompose(f2, 4, st);
  ck.expect(sdec.sizes == std::vector<uint64_t>{3375}, "Singer orbit sizes");

  // companion of x^4+x^3+x^2+x+1, ell = 4: 3375 tuples in exactly 4 orbits
  std::vector<FqElem> cs(4, f2.one());
  MatrixGF g = MatrixGF::companion(f2, cs);
  auto gt = hurwitz::enumerate_factorizations(g, 4);
  ck.expect(gt.size() == 3375, "non-Singer tuple count");
  auto gdec = hurwitz::orbit_decompose(f2, 4, gt);
  ck.expect(gdec.sizes.size() == 4, "non-Singer orbit count " +
                                        std::to_string(gdec.sizes.size()));
  return {7, "Orbit structure: Jordan {16,48}; Singer single 3375; g^5=1 four orbits",
          ck.pass, ck.details.str(), 0};
}

CriterionResult criterion8(int threads) {
  Checker ck;
  const FieldTable& f2 = gf::field(2, 1);
  MatrixGF c = singer_cycle(f2, 4);
  auto data = absorder::interval(c, GroupIndex::kDefaultBound, threads);
  ck.expect(data.rank_sizes() == std::vector<uint64_t>{1, 60, 240, 60, 1},
            "GL_4(F_2) interval rank sizes");
  auto rep = absorder::pi_map_report(data, f2);
  ck.expect(rep.lattice_rank_sizes == std::vector<uint64_t>{1, 15, 35, 15, 1},
            "GL_4(F_2) lattice rank sizes");
  // 35 does not divide 240: fibers at rank 2 cannot be constant
  ck.expect(rep.fiber_multiset_by_rank[2].front() !=
                rep.fiber_multiset_by_rank[2].back(),
            "rank-2 fibers unexpectedly constant");

  for (auto [n, q] : std::vector<std::pair<int, uint64_t>>{
           {2, 2}, {3, 2}, {2, 3}, {3, 3}}) {
    const FieldTable& f = gf::field_of_size(q);
    auto d = absorder::interval(singer_cycle(f, n), GroupIndex::kDefaultBound,
                                threads);
    auto r = absorder::pi_map_report(d, f);
    ck.expect(r.pi_surjective, fmt_case(n, q) + " pi not surjective");
  }
  return {8, "Interval rank sizes, subspace lattice, pi surjectivity (n <= 3)",
          ck.pass, ck.details.str(), 0};
}

CriterionResult criterion9(int) {
  Checker ck;
  for (int size = 1; size <= 8; ++size)
    for (const auto& lam : charvals::partitions_of(size)) {
      try {
        charvals::f_lambda_all(lam);
      } catch (const InternalError&) {
        ck.expect(false, "f_lambda routes at |lambda|=" + std::to_string(size));
      }
      ck.expect(charvals::content_identity(lam),
                "content identity at |lambda|=" + std::to_string(size));
    }
  for (int n = 2; n <= 6; ++n)
    for (int ell = 1; ell <= n + 4; ++ell)
      for (int m = 0; m <= ell - 1; ++m)
        ck.expect(charvals::frobenius_count_poly(n, ell, m) ==
                      qformula::tq_nlm_all(n, ell, m),
                  "frobenius != closed " + fmt_case(n, 0, ell, m));
  for (int n = 2; n <= 6; ++n)
    for (int ell = 0; ell <= n + 4; ++ell)
      ck.expect(charvals::frobenius_count(n, 2, ell, ell) ==
                    qformula::tq(n, ell, qformula::TqRoute::binom).eval(BigInt(2)),
                "frobenius q=2 " + fmt_case(n, 2, ell));
  return {9, "Character values: f_lambda routes, content identity, Frobenius sums",
          ck.pass, ck.details.str(), 0};
}

CriterionResult criterion10(int) {
  Checker ck;
  ck.expect(qformula::cyclotomic_orbit_sum(2, 4, 15) == 0, "(q=2,s=4,d=15)");
  ck.expect(qformula::cyclotomic_orbit_sum(2, 4, 5) == -3, "(q=2,s=4,d=5)");
  ck.expect(qformula::cyclotomic_orbit_sum(3, 2, 8) == 0, "(q=3,s=2,d=8)");
  return {10, "Cyclotomic orbit sums: mu(4)=0, the -3 counterexample, q!=2 -> 0",
          ck.pass, ck.details.str(), 0};
}

CriterionResult criterion11(int threads) {
  Checker ck;
  CountOptions opts;
  opts.threads = threads;
  for (auto [n, q] :
       std::vector<std::pair<int, uint64_t>>{{2, 3}, {3, 2}, {2, 4}}) {
    const FieldTable& f = gf::field_of_size(q);
    auto rep = jm_commutation(f, n, opts);
    ck.expect(rep.pass(), fmt_case(n, q) + " JM failure");
  }
  return {11, "Jucys-Murphy elements pairwise commute; class sums central",
          ck.pass, ck.details.str(), 0};
}

CriterionResult criterion12(int) {
  Checker ck;
  for (int n = 2; n <= 6; ++n)
    ck.expect(qformula::classical_t(n, n - 1) == big_pow(BigInt(n), n - 2),
              "t(n,n-1) at n=" + std::to_string(n));
  for (int n = 2; n <= 5; ++n)
    for (int ell = 0; ell <= 7; ++ell)
      ck.expect(qformula::classical_t(n, ell) == sn_transposition_count(n, ell),
                "difference formula vs S_n brute force " + fmt_case(n, 1, ell));
  for (int n = 2; n <= 5; ++n) {
    ck.expect(qformula::classical_egf_check(n, 7),
              "classical EGF n=" + std::to_string(n));
    for (int ell = 0; ell <= 9; ++ell) {
      ck.expect(qformula::q1_limit(n, ell) == qformula::q1_limit_closed(n, ell),
                "q->1 limit " + fmt_case(n, 1, ell));
      for (int m = 0; m <= ell - 1; ++m)
        ck.expect(qformula::q1_limit_m(n, ell, m) ==
                      qformula::q1_limit_m_closed(n, ell, m),
                  "q->1 refined limit " + fmt_case(n, 1, ell, m));
    }
  }
  return {12, "Classical cross-checks: transposition counts vs S_n, q->1 limits",
          ck.pass, ck.details.str(), 0};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(bool heavy, int threads) {
  std::vector<CriterionResult> results;
  auto timed = [&](const char* fallback_name, auto&& fn) {
    auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = fn();
    } catch (const std::exception& e) {
      r.pass = false;
      r.details = std::string("exception: ") + e.what();
    }
    if (r.name.empty()) r.name = fallback_name;
    r.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return r;
  };
  results.push_back(timed("Shortest-count brute force",
                          [&] { return criterion1(threads); }));
  results.push_back(timed("Closed forms vs brute force",
                          [&] { return criterion2(threads); }));
  results.push_back(timed("Symbolic route equivalences",
                          [&] { return criterion3(threads); }));
  results.push_back(timed("OGF/EGF checks", [&] { return criterion4(threads); }));
  results.push_back(timed("q=2 dichotomy", [&] { return criterion5(threads); }));
  results.push_back(timed("Hurwitz transitivity evidence",
                          [&] { return criterion6(heavy, threads); }));
  results.push_back(timed("Orbit structure", [&] { return criterion7(threads); }));
  results.push_back(timed("Interval and pi map",
                          [&] { return criterion8(threads); }));
  results.push_back(timed("Character values", [&] { return criterion9(threads); }));
  results.push_back(timed("Cyclotomic orbit sums",
                          [&] { return criterion10(threads); }));
  results.push_back(timed("Jucys-Murphy commutation",
                          [&] { return criterion11(threads); }));
  results.push_back(timed("Classical cross-checks",
                          [&] { return criterion12(threads); }));
  for (size_t i = 0; i < results.size(); ++i)
    results[i].id = static_cast<int>(i) + 1;
  return results;
}

}  // namespace singerfact::repro
