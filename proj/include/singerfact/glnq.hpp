#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "singerfact/gf.hpp"

namespace singerfact::glnq {

using gf::FieldTable;
using gf::FqElem;

// Dense n x n matrix over a FieldTable.  Values are immutable in spirit:
// operations return fresh matrices.  The 64-bit element key reads the
// entries row-major as base-q digits of the polynomial-basis representation:
// key = sum entry_{i,j} * q^(i*n + j).
class MatrixGF {
 public:
  MatrixGF(const FieldTable& f, int n);  // zero matrix
  static MatrixGF identity(const FieldTable& f, int n);
  // Companion matrix of a monic polynomial x^n + c_{n-1} x^{n-1} + ... + c_0
  // given by coeffs (c_0, ..., c_{n-1}).
  static MatrixGF companion(const FieldTable& f,
                            const std::vector<FqElem>& coeffs);
  static MatrixGF from_key(const FieldTable& f, int n, uint64_t key);

  const FieldTable& field() const { return *f_; }
  int n() const { return n_; }
  FqElem at(int i, int j) const { return e_[i * n_ + j]; }
  void set(int i, int j, FqElem v);

  MatrixGF operator*(const MatrixGF& o) const;
  bool operator==(const MatrixGF& o) const;
  MatrixGF inverse() const;  // throws std::invalid_argument when singular
  MatrixGF pow(uint64_t e) const;
  FqElem det() const;
  uint64_t key() const;
  uint64_t multiplicative_order() const;

  std::string to_json() const;  // {n, q, rows: [[ints]]}

 private:
  const FieldTable* f_;
  int n_;
  std::vector<FqElem> e_;
};

// Polynomial over F_q, coefficients low to high, trailing zeros trimmed.
struct FPoly {
  const FieldTable* f = nullptr;
  std::vector<FqElem> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  bool monic() const;
  void trim();
  bool operator==(const FPoly& o) const;

  FPoly operator+(const FPoly& o) const;
  FPoly operator-(const FPoly& o) const;
  FPoly operator*(const FPoly& o) const;
  FPoly mod(const FPoly& d) const;  // d monic
  FqElem eval(FqElem x) const;

  // Representation codes (c_0, ..., c_deg), for reports.
  std::vector<uint64_t> rep_coeffs() const;
};

// det(xI - A), monic of degree n; exact in any characteristic
// (memoized minor expansion, no division).
FPoly charpoly(const MatrixGF& a);

int rank(const MatrixGF& a);
// codim of the fixed space = rank(A - I).
int fixed_codim(const MatrixGF& a);

// Canonical fixed space (kernel of A - I): dimension and the RREF basis
// rows encoded base q, packed into a single integer key for set operations.
struct SubspaceKey {
  int dim = 0;
  uint64_t packed = 0;
  auto operator<=>(const SubspaceKey&) const = default;
};
SubspaceKey fixed_space_key(const MatrixGF& a);
// Canonical key of the span of the given row vectors (each a vector of n
// field elements).
SubspaceKey span_key(const FieldTable& f, int n,
                     const std::vector<std::vector<FqElem>>& vecs);

bool is_irreducible(const FPoly& f);
std::vector<FPoly> irreducible_monic_polys(const FieldTable& f, int n);

// True iff charpoly(g) is irreducible over F_q.
bool is_regular_elliptic(const MatrixGF& g);

enum class ReflKind { transvection, semisimple };

struct ReflectionInfo {
  uint64_t key;
  FqElem det;
  ReflKind kind;
  int hyperplane;  // index of the fixed hyperplane's canonical functional
};

// All reflections of GL_n(F_q) (or only those with the given determinant):
// [n]_q (q^{n-1} - 1) transvections and [n]_q q^{n-1} semisimple reflections
// per determinant value != 1.  Deterministic order, no duplicates.
std::vector<ReflectionInfo> enumerate_reflections(
    const FieldTable& f, int n, std::optional<FqElem> det_filter = {});

// The Singer cycle: companion matrix over F_q of the minimal polynomial of
// the canonical generator of F_{q^n}; it has multiplicative order q^n - 1
// and irreducible primitive characteristic polynomial.
MatrixGF singer_cycle(const FieldTable& f, int n,
                      uint64_t field_bound = FieldTable::kDefaultSizeBound);

// Dense index of all of GL_n(F_q): sorted element keys with O(log) key ->
// index and O(1) index -> key.  Construction enumerates invertible matrices
// row by row (each row outside the span of the previous ones) and checks the
// count against the closed-form order.
class GroupIndex {
 public:
  static constexpr uint64_t kDefaultBound = 30000000;

  GroupIndex(const FieldTable& f, int n, uint64_t bound = kDefaultBound);

  const FieldTable& field() const { return *f_; }
  int n() const { return n_; }
  uint64_t size() const { return keys_.size(); }
  uint64_t key_at(uint64_t i) const { return keys_[i]; }
  int64_t index_of(uint64_t key) const;  // -1 when absent

 private:
  const FieldTable* f_;
  int n_;
  std::vector<uint64_t> keys_;
};

// |GL_n(F_q)| = q^{n(n-1)/2} * prod_{i=1..n} (q^i - 1), as a checked uint64.
uint64_t gl_order(uint64_t q, int n);

}  // namespace singerfact::glnq
