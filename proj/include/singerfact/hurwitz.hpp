#pragma once

#include <cstdint>
#include <vector>

#include "singerfact/bigint.hpp"
#include "singerfact/glnq.hpp"

namespace singerfact::hurwitz {

// Ordered reflection factorization (t_1, ..., t_ell) of a fixed target,
// stored as element keys.
struct FactTuple {
  std::vector<uint64_t> keys;
  auto operator<=>(const FactTuple&) const = default;
};

// Braid generator sigma_i (1-based strand index, 1 <= i <= ell-1):
//   (..., t_i, t_{i+1}, ...) -> (..., t_{i+1}, t_{i+1}^{-1} t_i t_{i+1}, ...)
// and its inverse.  Postconditions (product, reflection factors) asserted.
FactTuple apply_braid(const gf::FieldTable& f, int n, const FactTuple& t,
                      int i, bool inverse = false);

// The complete set of length-ell reflection factorizations of the target,
// by depth-first search with the absolute-length prune
// fixed_codim(p^{-1} target) <= remaining slots.  Output is sorted.
// Throws BudgetError when more than `budget` tuples would be produced.
std::vector<FactTuple> enumerate_factorizations(const glnq::MatrixGF& target,
                                                int ell,
                                                uint64_t budget = 5000000);

struct OrbitDecomposition {
  std::vector<uint64_t> sizes;            // one per orbit, in seed order
  std::vector<FactTuple> representatives; // lex-least member of each orbit
};

// Orbits of the Hurwitz action on a complete factorization set (the input
// must be closed under the braid moves; tuples must share one product).
OrbitDecomposition orbit_decompose(const gf::FieldTable& f, int n,
                                   const std::vector<FactTuple>& tuples);

struct MultisetClass {
  std::vector<uint64_t> det_multiset;  // sorted representation codes
  uint64_t tuple_count = 0;
  std::vector<uint64_t> orbit_sizes;   // sorted descending
};

struct TransitivityReport {
  int n = 0;
  uint64_t q = 0;
  int ell = 0;
  std::vector<uint64_t> target_charpoly;
  uint64_t tuple_count = 0;
  std::vector<MultisetClass> classes;
  bool pass = false;  // every determinant-multiset class is a single orbit
};

// Groups all length-ell factorizations of the Singer cycle by determinant
// multiset and counts Hurwitz orbits per class; PASS iff each class forms a
// single orbit.  The tuple total is cross-checked against the closed-form
// count.
TransitivityReport hurwitz_transitivity_check(const gf::FieldTable& f, int n,
                                              int ell,
                                              uint64_t budget = 5000000);

}  // namespace singerfact::hurwitz
