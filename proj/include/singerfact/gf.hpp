#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace singerfact::gf {

class FieldTable;

// Field element: ZERO or an exponent of the table's fixed generator.
// Tagged with the owning field's id so cross-field mixing is caught.
struct FqElem {
  int32_t exp = -1;   // -1 encodes ZERO, else in [0, q-2]
  uint32_t fid = 0;

  bool is_zero() const { return exp < 0; }
  bool operator==(const FqElem& o) const = default;
};

// Small finite field F_{p^k} realized by exp/log tables over the
// lexicographically smallest primitive polynomial (coefficient vector
// (c_0,...,c_{k-1}) read as a base-p integer with c_0 least significant).
// Addition uses a precomputed Zech-logarithm table.  Immutable after
// construction; operations are pure.
class FieldTable {
 public:
  static constexpr uint64_t kDefaultSizeBound = uint64_t(1) << 20;

  FieldTable(uint32_t p, uint32_t k, uint64_t size_bound = kDefaultSizeBound);
  FieldTable(const FieldTable&) = delete;
  FieldTable& operator=(const FieldTable&) = delete;

  uint32_t p() const { return p_; }
  uint32_t k() const { return k_; }
  uint64_t q() const { return q_; }
  uint32_t id() const { return id_; }
  // Monic primitive polynomial, coefficients c_0..c_k (c_k = 1).
  const std::vector<uint32_t>& prim_poly() const { return prim_poly_; }

  FqElem zero() const { return {-1, id_}; }
  FqElem one() const { return {0, id_}; }
  FqElem gen() const;                 // fixed generator g (q > 2: exp 1)
  FqElem from_exp(int64_t e) const;   // g^e, exponent reduced mod q-1
  FqElem from_rep(uint64_t rep) const;  // polynomial-basis integer in [0,q)
  uint64_t rep(FqElem a) const;

  FqElem add(FqElem a, FqElem b) const;
  FqElem sub(FqElem a, FqElem b) const;
  FqElem neg(FqElem a) const;
  FqElem mul(FqElem a, FqElem b) const;
  FqElem inv(FqElem a) const;         // throws on ZERO
  FqElem pow(FqElem a, int64_t e) const;
  int64_t order(FqElem a) const;      // multiplicative order; throws on ZERO

  std::string describe() const;       // {p, k, prim_poly} as a JSON string

 private:
  void check(FqElem a) const;
  uint32_t p_, k_;
  uint64_t q_;
  uint32_t id_;
  std::vector<uint32_t> prim_poly_;
  std::vector<uint64_t> exp_table_;   // exponent -> representation
  std::vector<int64_t> log_table_;    // representation -> exponent (-1: zero)
  std::vector<int64_t> zech_;         // i -> log(1 + g^i), -1 when 1+g^i = 0
};

// Shared, cached field instances keyed by (p, k); matrices and reflection
// tables hold pointers into this registry.
const FieldTable& field(uint32_t p, uint32_t k,
                        uint64_t size_bound = FieldTable::kDefaultSizeBound);

// Returns (p, k) with p prime and p^k = q, or throws if q is not a prime
// power.
std::pair<uint32_t, uint32_t> prime_power(uint64_t q);

// Convenience: the field of size q.
const FieldTable& field_of_size(uint64_t q);

// Realization of the subfield F_{q^s} = small inside F_{q^n} = big via
// exponent divisibility.  The subfield generator g_s maps to G^(j*r) with
// r = (q^n-1)/(q^s-1) and j >= 1 minimal coprime to q^s-1 such that the
// image is a root of small's primitive polynomial (j = 1 whenever G^r
// itself is one), making the map a genuine field homomorphism.
class SubfieldMap {
 public:
  SubfieldMap(const FieldTable& big, const FieldTable& small);

  const FieldTable& big() const { return *big_; }
  const FieldTable& small() const { return *small_; }

  FqElem embed(FqElem a) const;           // small -> big
  // N_{big/small}(beta) = beta^((Q-1)/(q-1)) expressed in the small field.
  FqElem norm(FqElem beta) const;
  // Partial inverse of embed; throws if the element is outside the subfield.
  FqElem project(FqElem a) const;
  bool in_subfield(FqElem a) const;

 private:
  const FieldTable* big_;
  const FieldTable* small_;
  uint64_t ratio_;       // (Q-1)/(q-1)
  uint64_t unit_;        // j
  uint64_t unit_inv_;    // j^{-1} mod (q-1)
};

}  // namespace singerfact::gf
