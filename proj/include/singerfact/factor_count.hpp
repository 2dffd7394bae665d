#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "singerfact/bigint.hpp"
#include "singerfact/glnq.hpp"

namespace singerfact::factor_count {

// Sparse group-algebra element: element key -> integer coefficient.
// No explicit zeros are stored.
class GroupAlgebraVector {
 public:
  GroupAlgebraVector(const gf::FieldTable& f, int n) : f_(&f), n_(n) {}

  const std::map<uint64_t, BigInt>& terms() const { return terms_; }
  void add(uint64_t key, const BigInt& c);
  bool is_zero() const { return terms_.empty(); }
  int n() const { return n_; }

  GroupAlgebraVector operator*(const GroupAlgebraVector& o) const;
  GroupAlgebraVector operator-(const GroupAlgebraVector& o) const;
  bool operator==(const GroupAlgebraVector& o) const {
    return terms_ == o.terms_;
  }
  // h^{-1} (this) h
  GroupAlgebraVector conjugated(const glnq::MatrixGF& h) const;

 private:
  const gf::FieldTable* f_;
  int n_;
  std::map<uint64_t, BigInt> terms_;
};

// Per-step class filter: ALL reflections or a fixed determinant.
struct StepPlan {
  int ell = 0;
  // one entry per step when nonempty: nullopt = ALL reflections
  std::vector<std::optional<gf::FqElem>> filters;

  static StepPlan all_reflections(int ell) { return {ell, {}}; }
  static StepPlan fixed_dets(const std::vector<gf::FqElem>& alphas);
};

struct CountOptions {
  uint64_t dense_bound = glnq::GroupIndex::kDefaultBound;
  uint64_t sparse_cap = 30000000;   // max sparse support size
  uint64_t table_budget = 40000000; // max |G| * |reflections| for mult tables
  bool meet_in_middle = false;
  int threads = 0;  // 0: SINGERFACT_THREADS or hardware
};

// Number of ordered factorizations target = t_1 ... t_ell with t_i in the
// step-i reflection class.  Exact; deterministic; dense-array convolution
// when the group fits the dense bound, sparse maps otherwise.
BigInt count_factorizations(const glnq::MatrixGF& target, const StepPlan& plan,
                            const CountOptions& opts = {});

struct FixedDetResult {
  BigInt count;
  bool det_obstructed = false;  // prod(alpha) != det(target): count is 0
};

// Count with the exact determinant sequence (alpha_1, ..., alpha_ell).
FixedDetResult count_fixed_dets(const glnq::MatrixGF& target,
                                const std::vector<gf::FqElem>& alphas,
                                const CountOptions& opts = {});

struct SurveyRow {
  std::vector<uint64_t> charpoly;  // c_0..c_n representation codes
  BigInt count;
};

// Factorization counts of the companion matrix of every irreducible monic
// degree-n polynomial (one representative per regular elliptic class).
std::vector<SurveyRow> survey_regular_elliptic(const gf::FieldTable& f, int n,
                                               int ell,
                                               const CountOptions& opts = {});

struct JmReport {
  int n = 0;
  uint64_t q = 0;
  int elements = 0;        // number of J_m^alpha built
  int pairs_checked = 0;
  bool all_commute = false;
  bool class_sums_match = false;  // z_{n,alpha} = sum_m J_m^alpha as vectors
  bool centers_check = false;     // every z_{n,alpha} commutes with generators
  std::vector<std::string> failures;
  bool pass() const { return all_commute && class_sums_match && centers_check; }
};

// Builds the Jucys-Murphy elements J_m^alpha for m = 1..n and alpha in
// F_q^x, verifies pairwise commutation by exact convolution, and verifies
// that the class sums z_{n,alpha} = sum_m J_m^alpha are central.
JmReport jm_commutation(const gf::FieldTable& f, int n,
                        const CountOptions& opts = {});

// The J_m^alpha support itself (reflections of GL_m not in GL_{m-1}, fixed
// determinant), embedded in GL_n.
GroupAlgebraVector jm_element(const gf::FieldTable& f, int n, int m,
                              gf::FqElem alpha);

}  // namespace singerfact::factor_count
