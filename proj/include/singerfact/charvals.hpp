#pragma once

#include <vector>

#include "singerfact/qpoly.hpp"

namespace singerfact::charvals {

// Integer partition with weakly decreasing positive parts.
class Partition {
 public:
  explicit Partition(std::vector<int> parts);
  static Partition hook(int n, int k);  // (n-k, 1^k)

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }              // |lambda|
  int rows() const { return static_cast<int>(parts_.size()); }
  Partition conjugate() const;
  long n_stat() const;                            // n(lambda) = sum (i-1) l_i
  std::vector<int> hook_lengths() const;          // all cells, row-major
  std::vector<int> contents() const;              // c(a) = j - i, row-major
  // partitions mu < lambda with |mu| = |lambda| - 1 (corner removals)
  std::vector<Partition> down_set() const;
  bool operator==(const Partition& o) const { return parts_ == o.parts_; }

 private:
  std::vector<int> parts_;
  int size_;
};

// All partitions of n.
std::vector<Partition> partitions_of(int n);

// f^lambda(q) = sum over standard Young tableaux of q^maj(Q), via three
// independent routes: the q-hook product formula, the principal
// specialization of the Schur function (Jacobi-Trudi determinant of
// specialized complete homogeneous functions), and direct SYT enumeration.
enum class FLambdaRoute { product, principal_spec, maj_sum };
QPoly f_lambda(const Partition& lambda, FLambdaRoute route);
QPoly f_lambda_all(const Partition& lambda);  // checks all three agree

// Degree of the primary irreducible character indexed by a weight-s
// cuspidal and the hook (n/s - k, 1^k); returned as the true (positive)
// degree polynomial, absorbing the formula's (-1)^(n - n/s) sign.
QPoly hook_degree(int n, int s, int k);

// The q-hook-walk identity sum_{mu} f^mu / f^lambda = (1/[n]_q) sum_a q^c(a),
// verified exactly with denominators cleared.
bool content_identity(const Partition& lambda);

// Normalized character value of a hook character on a reflection
// conjugacy-class sum.  U(alpha) for weight-one cuspidals is carried
// symbolically as an exponent modulo q-1 (u_phase; 0 for values without a
// root-of-unity factor, and for transvection classes).
enum class ReflClass { semisimple, transvection };
struct ClassSumValue {
  QPoly value;
  int u_phase = 0;
};
ClassSumValue class_sum_value(int n, int s, int k, ReflClass cls,
                              int u_phase_alpha = 0);

// The Frobenius character-sum count assembled from hook degrees, Singer
// character values, and class-sum values.  For q > 2 only weight-one
// cuspidals survive and the sum is one polynomial in q, valid for every
// q > 2 (requires 0 <= m <= ell-1).
QPoly frobenius_count_poly(int n, int ell, int m);
// Specialization at a prime power: q > 2 evaluates the polynomial above;
// q = 2 (which forces m = ell) assembles the full sum including the
// Moebius-weighted cuspidal layers for s >= 2.
BigInt frobenius_count(int n, uint64_t q, int ell, int m);

}  // namespace singerfact::charvals
