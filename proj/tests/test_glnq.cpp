#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "singerfact/errors.hpp"
#include "singerfact/glnq.hpp"

using namespace singerfact;
using namespace singerfact::glnq;
using gf::FieldTable;
using gf::FqElem;

namespace {

// Oracle: every key in GL_n(F_q) whose fixed space has codimension 1,
// found by scanning the whole group.
std::set<uint64_t> reflection_scan(const FieldTable& f, int n) {
  GroupIndex idx(f, n, 2000000);
  std::set<uint64_t> out;
  for (uint64_t i = 0; i < idx.size(); ++i) {
    MatrixGF g = MatrixGF::from_key(f, n, idx.key_at(i));
    if (fixed_codim(g) == 1) out.insert(idx.key_at(i));
  }
  return out;
}

// Oracle for regular-elliptic criterion (ii): materialize every nonzero
// proper subspace as a vector set and test g-stability directly.
std::vector<std::set<uint64_t>> all_proper_subspaces(const FieldTable& f,
                                                     int n) {
  uint64_t q = f.q(), qn = 1;
  for (int i = 0; i < n; ++i) qn *= q;
  auto decode = [&](uint64_t enc) {
    std::vector<FqElem> v(n);
    for (int j = 0; j < n; ++j) {
      v[j] = f.from_rep(enc % q);
      enc /= q;
    }
    return v;
  };
  auto encode = [&](const std::vector<FqElem>& v) {
    uint64_t enc = 0, mult = 1;
    for (int j = 0; j < n; ++j) {
      enc += f.rep(v[j]) * mult;
      mult *= q;
    }
    return enc;
  };
  std::set<std::set<uint64_t>> seen;
  // spans of all tuples of up to n-1 vectors, materialized by closure
  std::vector<std::set<uint64_t>> frontier = {{0}};
  for (int round = 0; round < n - 1; ++round) {
    std::vector<std::set<uint64_t>> next;
    for (const auto& space : frontier)
      for (uint64_t w = 1; w < qn; ++w) {
        if (space.count(w)) continue;
        std::set<uint64_t> bigger = space;
        for (uint64_t s : space) {
          auto sv = decode(s), wv = decode(w);
          for (uint64_t c = 1; c < q; ++c) {
            std::vector<FqElem> comb(n);
            for (int j = 0; j < n; ++j)
              comb[j] = f.add(sv[j], f.mul(f.from_rep(c), wv[j]));
            bigger.insert(encode(comb));
          }
        }
        if (bigger.size() < qn && !seen.count(bigger)) {
          seen.insert(bigger);
          next.push_back(bigger);
        }
      }
    frontier = next;
  }
  return {seen.begin(), seen.end()};
}

bool stabilizes(const MatrixGF& g, const std::set<uint64_t>& space) {
  const FieldTable& f = g.field();
  int n = g.n();
  uint64_t q = f.q();
  for (uint64_t enc : space) {
    std::vector<FqElem> v(n);
    uint64_t e = enc;
    for (int j = 0; j < n; ++j) {
      v[j] = f.from_rep(e % q);
      e /= q;
    }
    // column action w = g v
    uint64_t wenc = 0, mult = 1;
    for (int i = 0; i < n; ++i) {
      FqElem acc = f.zero();
      for (int j = 0; j < n; ++j) acc = f.add(acc, f.mul(g.at(i, j), v[j]));
      wenc += f.rep(acc) * mult;
      mult *= q;
    }
    if (!space.count(wenc)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("matrix basics and key round-trip") {
  const FieldTable& f = gf::field(2, 1);
  MatrixGF id = MatrixGF::identity(f, 3);
  CHECK(fixed_codim(id) == 0);
  CHECK(id * id == id);
  CHECK(id.key() == MatrixGF::from_key(f, 3, id.key()).key());
  CHECK(id.det() == f.one());
  CHECK(id.to_json() ==
        "{\"n\": 3, \"q\": 2, \"rows\": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]}");
}

TEST_CASE("companion matrix determinant identity") {
  // det(companion of monic f) = (-1)^n f(0)
  const FieldTable& f = gf::field(3, 1);
  for (uint64_t c0 = 1; c0 < 3; ++c0)
    for (uint64_t c1 = 0; c1 < 3; ++c1)
      for (uint64_t c2 = 0; c2 < 3; ++c2) {
        std::vector<FqElem> cs = {f.from_rep(c0), f.from_rep(c1),
                                  f.from_rep(c2)};
        MatrixGF c = MatrixGF::companion(f, cs);
        FqElem expect = f.from_rep(c0);  // n = 3 odd: (-1)^3 f(0) = -c0
        CHECK(c.det() == f.neg(expect));
        // charpoly of the companion is the polynomial itself
        FPoly cp = charpoly(c);
        CHECK(cp.monic());
        CHECK(cp.c[0] == cs[0]);
        CHECK(cp.c[1] == cs[1]);
        CHECK(cp.c[2] == cs[2]);
      }
}

TEST_CASE("matrix inverse") {
  const FieldTable& f = gf::field(5, 1);
  MatrixGF a(f, 2);
  a.set(0, 0, f.from_rep(1));
  a.set(0, 1, f.from_rep(2));
  a.set(1, 0, f.from_rep(3));
  a.set(1, 1, f.from_rep(4));  // det = 4 - 6 = 3 != 0
  CHECK(a * a.inverse() == MatrixGF::identity(f, 2));
  MatrixGF sing(f, 2);
  sing.set(0, 0, f.one());
  sing.set(1, 0, f.one());
  CHECK_THROWS_AS(sing.inverse(), std::invalid_argument);
}

TEST_CASE("group order and dense index") {
  CHECK(gl_order(2, 2) == 6);
  CHECK(gl_order(2, 4) == 20160);
  CHECK(gl_order(3, 3) == 11232);

  const FieldTable& f2 = gf::field(2, 1);
  GroupIndex idx(f2, 2, 1000);
  CHECK(idx.size() == 6);
  for (uint64_t i = 0; i < idx.size(); ++i) {
    MatrixGF g = MatrixGF::from_key(f2, 2, idx.key_at(i));
    CHECK(!g.det().is_zero());
    CHECK(idx.index_of(g.key()) == static_cast<int64_t>(i));
  }
  CHECK(idx.index_of(0) == -1);  // zero matrix is not in the group

  const FieldTable& f3 = gf::field(3, 1);
  CHECK(GroupIndex(f3, 3, 20000).size() == 11232);
  CHECK_THROWS_AS(GroupIndex(f3, 3, 10000), BudgetError);
}

TEST_CASE("reflection enumeration matches the full-group scan") {
  struct Case {
    uint32_t p, k;
    int n;
    uint64_t transvections, semisimple_per_det;
  };
  // [n]_q (q^{n-1}-1) transvections, [n]_q q^{n-1} per determinant != 1
  std::vector<Case> cases = {
      {2, 1, 2, 3, 0},    {3, 1, 2, 8, 12},   {2, 1, 3, 21, 0},
      {2, 2, 2, 15, 20},  {5, 1, 2, 24, 30},  {3, 1, 3, 104, 117},
      {2, 1, 4, 105, 0},  {7, 1, 2, 48, 56},  {2, 3, 2, 63, 72},
      {3, 2, 2, 80, 90},  {2, 2, 3, 315, 336}, {2, 4, 2, 255, 272},
  };
  for (const auto& c : cases) {
    const FieldTable& f = gf::field(c.p, c.k);
    auto refl = enumerate_reflections(f, c.n);
    uint64_t trans = 0;
    std::map<int32_t, uint64_t> semis;
    std::set<uint64_t> keys;
    for (const auto& r : refl) {
      keys.insert(r.key);
      if (r.kind == ReflKind::transvection) {
        CHECK(r.det == f.one());
        ++trans;
      } else {
        ++semis[r.det.exp];
      }
      MatrixGF g = MatrixGF::from_key(f, c.n, r.key);
      CHECK(fixed_codim(g) == 1);
      CHECK(g.det() == r.det);
    }
    CHECK(keys.size() == refl.size());  // no duplicates
    CHECK(trans == c.transvections);
    CHECK(semis.size() == f.q() - 2);
    for (auto& [det, cnt] : semis) CHECK(cnt == c.semisimple_per_det);
    CHECK(keys == reflection_scan(f, c.n));

    // det filter returns exactly the matching class
    auto only_trans = enumerate_reflections(f, c.n, f.one());
    CHECK(only_trans.size() == c.transvections);
  }
}

TEST_CASE("singer cycles") {
  const FieldTable& f2 = gf::field(2, 1);
  MatrixGF s22 = singer_cycle(f2, 2);
  CHECK(s22.multiplicative_order() == 3);

  MatrixGF s42 = singer_cycle(f2, 4);
  CHECK(s42.multiplicative_order() == 15);
  auto cp = charpoly(s42).rep_coeffs();
  // x^4+x^3+1 or x^4+x+1
  bool a = cp == std::vector<uint64_t>{1, 0, 0, 1, 1};
  bool b = cp == std::vector<uint64_t>{1, 1, 0, 0, 1};
  CHECK((a || b));

  const FieldTable& f3 = gf::field(3, 1);
  CHECK(singer_cycle(f3, 3).multiplicative_order() == 26);

  // composite q: GL_2(F_4)
  const FieldTable& f4 = gf::field(2, 2);
  MatrixGF s24 = singer_cycle(f4, 2);
  CHECK(s24.multiplicative_order() == 15);
  CHECK(is_regular_elliptic(s24));

  // det(singer) generates F_q^x (norm of a primitive root is primitive)
  for (const FieldTable* fp : {&f2, &f3, &f4}) {
    for (int n = 2; n <= 3; ++n) {
      if (fp->q() == 4 && n == 3) continue;
      MatrixGF s = singer_cycle(*fp, n);
      FqElem d = s.det();
      if (fp->q() == 2) CHECK(d == fp->one());
      else CHECK(static_cast<uint64_t>(fp->order(d)) == fp->q() - 1);
    }
  }
}

TEST_CASE("regular elliptic detection") {
  const FieldTable& f2 = gf::field(2, 1);
  CHECK_FALSE(is_regular_elliptic(MatrixGF::identity(f2, 2)));
  CHECK(is_regular_elliptic(singer_cycle(f2, 4)));

  // companion of x^4+x^3+x^2+x+1: regular elliptic of order 5, not Singer
  std::vector<FqElem> cs(4, f2.one());
  MatrixGF g = MatrixGF::companion(f2, cs);
  CHECK(is_regular_elliptic(g));
  CHECK(g.multiplicative_order() == 5);
}

TEST_CASE("criterion (iii) agrees with subspace-stability criterion (ii)") {
  // |GL_n(F_q)| <= 10^4 grid, prime-power fields included
  for (auto [q, n] : std::vector<std::pair<uint64_t, int>>{
           {2, 2}, {3, 2}, {4, 2}, {5, 2}, {7, 2}, {8, 2}, {9, 2}, {2, 3}}) {
    const FieldTable& f = gf::field_of_size(q);
    auto subspaces = all_proper_subspaces(f, n);
    GroupIndex idx(f, n, 1000000);
    for (uint64_t i = 0; i < idx.size(); ++i) {
      MatrixGF g = MatrixGF::from_key(f, n, idx.key_at(i));
      bool stable_free = true;
      for (const auto& sp : subspaces)
        if (stabilizes(g, sp)) {
          stable_free = false;
          break;
        }
      CHECK(stable_free == is_regular_elliptic(g));
    }
  }
}

TEST_CASE("irreducible polynomial enumeration") {
  const FieldTable& f2 = gf::field(2, 1);
  // counts 1/n sum mu(n/d) 2^d: degree 4 over F_2: (16 - 4)/4 = 3
  CHECK(irreducible_monic_polys(f2, 4).size() == 3);
  const FieldTable& f3 = gf::field(3, 1);
  CHECK(irreducible_monic_polys(f3, 2).size() == 3);
}

TEST_CASE("conjugation permutes each reflection class") {
  const FieldTable& f = gf::field(3, 1);
  auto refl = enumerate_reflections(f, 2);
  std::set<uint64_t> trans_keys, semi_keys;
  for (const auto& r : refl)
    (r.kind == ReflKind::transvection ? trans_keys : semi_keys).insert(r.key);
  MatrixGF h = singer_cycle(f, 2);
  MatrixGF hinv = h.inverse();
  for (const auto& r : refl) {
    MatrixGF t = MatrixGF::from_key(f, 2, r.key);
    MatrixGF conj = hinv * t * h;
    if (r.kind == ReflKind::transvection) CHECK(trans_keys.count(conj.key()));
    else CHECK(semi_keys.count(conj.key()));
  }
}
