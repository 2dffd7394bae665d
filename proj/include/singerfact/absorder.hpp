#pragma once

#include <cstdint>
#include <vector>

#include "singerfact/glnq.hpp"

namespace singerfact::absorder {

// Minimum reflection-factorization length = codimension of the fixed space.
int absolute_length(const glnq::MatrixGF& g);

// The interval [e, c] under absolute order: w with l(w) + l(w^-1 c) = l(c),
// members collected by rank from a full-group scan.
struct IntervalData {
  int n = 0;
  uint64_t q = 0;
  uint64_t target_key = 0;
  std::vector<std::vector<uint64_t>> members_by_rank;  // sorted keys per rank

  std::vector<uint64_t> rank_sizes() const;
  bool contains(uint64_t key) const;
};

IntervalData interval(const glnq::MatrixGF& c,
                      uint64_t dense_bound = glnq::GroupIndex::kDefaultBound,
                      int threads = 0);

// Kreweras complementation w -> w^-1 c on [e, c]; order-reversing on ranks.
glnq::MatrixGF kreweras(const glnq::MatrixGF& w, const glnq::MatrixGF& c,
                        const IntervalData& data);

// The fixed-space map pi: [e, c] -> subspace lattice, with image sizes per
// rank against the Gaussian-binomial lattice rank sizes, fiber multisets,
// and surjectivity.
struct PiReport {
  std::vector<uint64_t> rank_sizes;
  std::vector<uint64_t> lattice_rank_sizes;
  std::vector<uint64_t> pi_image_sizes;
  bool pi_surjective = false;
  std::vector<std::vector<uint64_t>> fiber_multiset_by_rank;  // sorted sizes
  std::vector<uint64_t> missed_per_rank;
};

PiReport pi_map_report(const IntervalData& data, const gf::FieldTable& f);

}  // namespace singerfact::absorder
