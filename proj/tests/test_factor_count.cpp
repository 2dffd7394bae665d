#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "singerfact/factor_count.hpp"
#include "singerfact/qformula.hpp"

using namespace singerfact;
using namespace singerfact::factor_count;
using glnq::GroupIndex;
using glnq::MatrixGF;
using glnq::singer_cycle;

TEST_CASE("counting basics") {
  const auto& f2 = gf::field(2, 1);
  MatrixGF c22 = singer_cycle(f2, 2);
  CHECK(count_factorizations(c22, StepPlan::all_reflections(2)) == 3);
  // empty product counts the identity once
  MatrixGF id = MatrixGF::identity(f2, 2);
  CHECK(count_factorizations(id, StepPlan::all_reflections(0)) == 1);
  CHECK(count_factorizations(c22, StepPlan::all_reflections(0)) == 0);
  // below absolute length the count is zero
  CHECK(count_factorizations(c22, StepPlan::all_reflections(1)) == 0);
  MatrixGF c32 = singer_cycle(f2, 3);
  CHECK(count_factorizations(c32, StepPlan::all_reflections(2)) == 0);
  CHECK(count_factorizations(c32, StepPlan::all_reflections(4)) == 1029);
  // GL_1(F_2) is refused
  CHECK_THROWS_AS(
      count_factorizations(MatrixGF::identity(f2, 1), StepPlan::all_reflections(1)),
      std::invalid_argument);
}

TEST_CASE("dense, sparse, and meet-in-the-middle agree bit-exactly") {
  const auto& f3 = gf::field(3, 1);
  MatrixGF c = singer_cycle(f3, 2);
  for (int ell = 2; ell <= 5; ++ell) {
    StepPlan plan = StepPlan::all_reflections(ell);
    CountOptions dense;
    BigInt a = count_factorizations(c, plan, dense);
    CountOptions sparse;
    sparse.dense_bound = 1;  // force the sparse path
    BigInt b = count_factorizations(c, plan, sparse);
    CountOptions mitm;
    mitm.meet_in_middle = true;
    BigInt d = count_factorizations(c, plan, mitm);
    CountOptions mitm_sparse;
    mitm_sparse.meet_in_middle = true;
    mitm_sparse.dense_bound = 1;
    BigInt e = count_factorizations(c, plan, mitm_sparse);
    CHECK(a == b);
    CHECK(a == d);
    CHECK(a == e);
    // and all match the closed formula
    CHECK(a == qformula::tq(2, ell, qformula::TqRoute::binom).eval(BigInt(3)));
  }
}

TEST_CASE("counts are conjugation invariant") {
  const auto& f3 = gf::field(3, 1);
  MatrixGF c = singer_cycle(f3, 2);
  GroupIndex idx(f3, 2, 1000);
  std::mt19937_64 rng(41u);
  BigInt base = count_factorizations(c, StepPlan::all_reflections(3));
  for (int trial = 0; trial < 5; ++trial) {
    MatrixGF h = MatrixGF::from_key(f3, 2, idx.key_at(rng() % idx.size()));
    MatrixGF conj = h.inverse() * c * h;
    CHECK(count_factorizations(conj, StepPlan::all_reflections(3)) == base);
  }
}

TEST_CASE("fixed determinant sequences") {
  const auto& f3 = gf::field(3, 1);
  MatrixGF c = singer_cycle(f3, 2);
  gf::FqElem one = f3.one(), two = f3.from_rep(2);
  REQUIRE(c.det() == two);
  // (1, det c) and (det c, 1) both give [2]_3 = 4
  CHECK(count_fixed_dets(c, {one, two}).count == 4);
  CHECK(count_fixed_dets(c, {two, one}).count == 4);
  // determinant obstruction returns 0 with the flag set
  auto res = count_fixed_dets(c, {one, one});
  CHECK(res.det_obstructed);
  CHECK(res.count == 0);
  // partition of the total count over all determinant sequences
  for (int ell = 2; ell <= 3; ++ell) {
    BigInt total = 0;
    std::vector<gf::FqElem> seq(ell, one);
    auto rec = [&](auto&& self, int depth) -> void {
      if (depth == ell) {
        total += count_fixed_dets(c, seq).count;
        return;
      }
      for (uint64_t r = 1; r < 3; ++r) {
        seq[depth] = f3.from_rep(r);
        self(self, depth + 1);
      }
    };
    rec(rec, 0);
    CHECK(total == count_factorizations(c, StepPlan::all_reflections(ell)));
  }
}

TEST_CASE("refined counts depend only on ell and m, not the sequence") {
  // every determinant sequence for the GL_2(F_4) Singer target, grouped by
  // the number of ones
  const auto& f4 = gf::field(2, 2);
  MatrixGF c = singer_cycle(f4, 2);
  int ell = 3;
  std::map<int, std::set<std::string>> counts_by_m;
  std::vector<gf::FqElem> seq(ell, f4.one());
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == ell) {
      gf::FqElem prod = f4.one();
      int m = 0;
      for (auto a : seq) {
        prod = f4.mul(prod, a);
        if (a == f4.one()) ++m;
      }
      if (!(prod == c.det())) return;
      counts_by_m[m].insert(count_fixed_dets(c, seq).count.get_str());
      return;
    }
    for (uint64_t r = 1; r < 4; ++r) {
      seq[depth] = f4.from_rep(r);
      self(self, depth + 1);
    }
  };
  rec(rec, 0);
  CHECK(!counts_by_m.empty());
  for (const auto& [m, values] : counts_by_m) CHECK(values.size() == 1);
}

TEST_CASE("survey across regular elliptic classes") {
  const auto& f3 = gf::field(3, 1);
  auto rows = survey_regular_elliptic(f3, 2, 2);
  CHECK(rows.size() == 3);  // three irreducible monic quadratics over F_3
  for (const auto& row : rows) CHECK(row.count == 8);
  const auto& f2 = gf::field(2, 1);
  auto rows42 = survey_regular_elliptic(f2, 4, 4);
  CHECK(rows42.size() == 3);
  for (const auto& row : rows42) CHECK(row.count == 3375);
  // regular elliptic classes share counts at longer lengths too
  for (int ell = 5; ell <= 6; ++ell) {
    auto rows_ell = survey_regular_elliptic(f2, 4, ell);
    for (const auto& row : rows_ell) CHECK(row.count == rows_ell.front().count);
  }
}

TEST_CASE("big-integer path: large length stays exact") {
  const auto& f2 = gf::field(2, 1);
  MatrixGF c = singer_cycle(f2, 2);
  // ell = 44 on GL_2(F_2): t_2(2,44) = 3^43 overflows 64 bits, forcing the
  // big-integer fallback
  BigInt got = count_factorizations(c, StepPlan::all_reflections(44));
  CHECK(got == qformula::tq(2, 44, qformula::TqRoute::binom).eval(BigInt(2)));
  CHECK(got == big_pow(BigInt(3), 43));
  CHECK(got > BigInt("18446744073709551615"));
}

TEST_CASE("Jucys-Murphy elements") {
  const auto& f3 = gf::field(3, 1);
  auto rep = jm_commutation(f3, 2);
  CHECK(rep.all_commute);
  CHECK(rep.class_sums_match);
  CHECK(rep.centers_check);
  CHECK(rep.pass());

  const auto& f2 = gf::field(2, 1);
  auto rep32 = jm_commutation(f2, 3);
  CHECK(rep32.pass());

  // J_1^alpha is the lone scalar reflection; J_m^1 excludes GL_1 entirely
  auto j1 = jm_element(f3, 2, 1, f3.from_rep(2));
  CHECK(j1.terms().size() == 1);
  CHECK(jm_element(f3, 2, 1, f3.one()).is_zero());
  // self-commutator vanishes
  auto j2 = jm_element(f3, 2, 2, f3.one());
  CHECK((j2 * j2 - j2 * j2).is_zero());
}
