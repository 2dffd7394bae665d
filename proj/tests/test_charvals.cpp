#include "doctest.h"
#include "singerfact/charvals.hpp"
#include "singerfact/glnq.hpp"
#include "singerfact/qformula.hpp"

using namespace singerfact;
using namespace singerfact::charvals;
using qformula::q_int;

TEST_CASE("partition statistics") {
  Partition lam({2, 1});
  CHECK(lam.size() == 3);
  CHECK(lam.conjugate() == Partition({2, 1}));
  CHECK(lam.n_stat() == 1);
  CHECK(lam.hook_lengths() == std::vector<int>{3, 1, 1});
  CHECK(lam.contents() == std::vector<int>{0, 1, -1});
  CHECK(Partition({4, 2, 1}).conjugate() == Partition({3, 2, 1, 1}));
  CHECK(Partition::hook(5, 2) == Partition({3, 1, 1}));
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  auto down = Partition({3, 2, 2}).down_set();
  CHECK(down.size() == 2);
  CHECK(partitions_of(8).size() == 22);
}

TEST_CASE("f_lambda examples and route agreement") {
  // single row: one SYT with maj 0
  for (int n = 1; n <= 6; ++n) CHECK(f_lambda_all(Partition({n})) == QPoly(1));
  // f_(2,1) = q + q^2
  CHECK(f_lambda_all(Partition({2, 1})) ==
        QPoly::monomial(1) + QPoly::monomial(2));
  // single column: q^binom(n,2)
  for (int n = 2; n <= 6; ++n)
    CHECK(f_lambda_all(Partition(std::vector<int>(n, 1))) ==
          QPoly::monomial(n * (n - 1) / 2));
  // full agreement for |lambda| <= 6 (acceptance extends to 8)
  for (int size = 1; size <= 6; ++size)
    for (const auto& lam : partitions_of(size)) CHECK_NOTHROW(f_lambda_all(lam));
  CHECK_THROWS_AS(f_lambda(Partition({}), FLambdaRoute::product),
                  std::invalid_argument);
}

TEST_CASE("hook degrees") {
  CHECK(hook_degree(4, 1, 0) == QPoly(1));  // trivial character
  for (int n = 2; n <= 5; ++n)
    CHECK(hook_degree(n, 1, n - 1) == QPoly::monomial(n * (n - 1) / 2));
  // s = 1 hook degrees coincide with f on hook shapes
  for (int n = 2; n <= 6; ++n)
    for (int k = 0; k <= n - 1; ++k)
      CHECK(hook_degree(n, 1, k) ==
            f_lambda(Partition::hook(n, k), FLambdaRoute::product));
  // (4,2,0): (q;q)_4/(q^2;q^2)_2 up to sign = (q-1)(q^3-1)
  CHECK(hook_degree(4, 2, 0) ==
        (QPoly::q() - QPoly(1)) * (QPoly::monomial(3) - QPoly(1)));
  CHECK_THROWS_AS(hook_degree(4, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(hook_degree(4, 2, 2), std::invalid_argument);
  // sanity bound: sum of squared s=1 hook degrees stays below |GL_n|
  for (int n = 2; n <= 4; ++n) {
    QPoly sq;
    for (int k = 0; k <= n - 1; ++k) sq += hook_degree(n, 1, k).pow(2);
    BigInt at3 = sq.eval(BigInt(3));
    BigInt order = 1;
    for (int i = 1; i <= n; ++i)
      order *= big_pow(BigInt(3), n) - big_pow(BigInt(3), i - 1);
    CHECK(at3 <= order);
  }
}

TEST_CASE("content identity") {
  CHECK(content_identity(Partition({2})));
  CHECK(content_identity(Partition({2, 1})));
  CHECK(content_identity(Partition({3, 2, 1})));
  for (int size = 1; size <= 6; ++size)
    for (const auto& lam : partitions_of(size)) CHECK(content_identity(lam));
}

TEST_CASE("class-sum values") {
  // s=1, k=0 transvection value is the transvection count (n <= 4, q <= 5)
  for (auto [n, q] : std::vector<std::pair<int, uint64_t>>{
           {2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 3}, {3, 4}, {3, 5},
           {4, 2}, {4, 3}, {4, 4}, {4, 5}}) {
    const auto& f = gf::field_of_size(q);
    auto cs = class_sum_value(n, 1, 0, ReflClass::transvection);
    uint64_t census = glnq::enumerate_reflections(f, n, f.one()).size();
    CHECK(cs.value.eval(BigInt(static_cast<long>(q))) == census);
  }
  // s >= 2: semisimple class sums vanish, transvections give -[n]_q
  CHECK(class_sum_value(4, 2, 1, ReflClass::semisimple).value.is_zero());
  CHECK(class_sum_value(4, 2, 1, ReflClass::transvection).value == -q_int(4));
  CHECK(class_sum_value(6, 3, 0, ReflClass::transvection).value == -q_int(6));
  // semisimple s=1 carries the root-of-unity phase through
  auto v = class_sum_value(3, 1, 1, ReflClass::semisimple, 2);
  CHECK(v.value == q_int(3) * QPoly::monomial(1));
  CHECK(v.u_phase == 2);
}

TEST_CASE("frobenius character-sum counts") {
  // (n=2, q=3, ell=2, m=1): t_3(2,2,1) = [2]_3 = 4
  CHECK(frobenius_count(2, 3, 2, 1) == 4);
  // (n=4, q=2, ell=4, m=4): 3375
  CHECK(frobenius_count(4, 2, 4, 4) == 3375);
  // ell < n gives zero
  CHECK(frobenius_count(3, 3, 2, 1) == 0);
  CHECK(frobenius_count(3, 2, 2, 2) == 0);
  // symbolic equality with the closed formula
  for (int n = 2; n <= 4; ++n)
    for (int ell = 1; ell <= n + 2; ++ell)
      for (int m = 0; m <= ell - 1; ++m)
        CHECK(frobenius_count_poly(n, ell, m) == qformula::tq_nlm_all(n, ell, m));
  // q = 2 full sum against the total count
  for (int n = 2; n <= 4; ++n)
    for (int ell = 0; ell <= n + 2; ++ell)
      CHECK(frobenius_count(n, 2, ell, ell) ==
            qformula::tq(n, ell, qformula::TqRoute::binom).eval(BigInt(2)));
  CHECK_THROWS_AS(frobenius_count(2, 2, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(frobenius_count(2, 3, 3, 3), std::invalid_argument);
}
