#pragma once

// Finite-support vectors over Scalar and incremental echelonization.
// Pivot order is the basis-label index, so results are deterministic for a
// fixed label enumeration.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "limitrep/scalar.hpp"

namespace limitrep::linalg {

// sorted by index, no explicit zeros
struct SparseVec {
  std::vector<std::pair<std::uint32_t, Scalar>> t;

  bool empty() const { return t.empty(); }
  std::uint32_t pivot() const { return t.front().first; }
  const Scalar& pivot_coeff() const { return t.front().second; }
  SparseVec scaled(const Scalar& c) const;
  std::string str(const std::vector<std::string>* labels = nullptr) const;
};

SparseVec sv_unit(std::uint32_t i, const Scalar& one);
SparseVec sv_add(const SparseVec& a, const SparseVec& b);
// a + c*b
SparseVec sv_add_scaled(const SparseVec& a, const SparseVec& b, const Scalar& c);
bool sv_equal(const SparseVec& a, const SparseVec& b);

// Incremental row echelon basis with optional expression tracking: each
// echelon row remembers its coordinates in terms of the inserted vectors.
class SpanSolver {
public:
  explicit SpanSolver(CoeffField F, bool track_expressions = false)
      : F_(std::move(F)), track_(track_expressions) {}

  // returns true when v was independent (a new row was added)
  bool insert(const SparseVec& v);
  // residue of v after reduction against the current basis
  SparseVec reduce(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  // coordinates of v in terms of the inserted independent vectors
  // (insertion order); nullopt if v is outside the span
  std::optional<std::vector<Scalar>> express(const SparseVec& v) const;

  std::uint32_t dim() const { return static_cast<std::uint32_t>(rows_.size()); }
  const CoeffField& field() const { return F_; }
  const std::vector<SparseVec>& rows() const { return rows_raw_; }
  // the reduced echelon rows, sorted by pivot
  std::vector<SparseVec> echelon_rows() const;
  // pivot labels in increasing order
  std::vector<std::uint32_t> pivots() const;
  bool has_pivot(std::uint32_t label) const;

private:
  struct Row {
    SparseVec v;                 // echelonized, monic pivot
    std::vector<Scalar> expr;    // coords over inserted independents
  };
  CoeffField F_;
  bool track_;
  std::vector<Row> rows_;            // kept sorted by pivot
  std::vector<SparseVec> rows_raw_;  // the inserted independent vectors
};

// dense helpers
using Mat = std::vector<std::vector<Scalar>>;

Mat mat_zero(const CoeffField& F, std::uint32_t r, std::uint32_t c);
Mat mat_identity(const CoeffField& F, std::uint32_t n);
Mat mat_mul(const CoeffField& F, const Mat& a, const Mat& b);
std::uint32_t mat_rank(const CoeffField& F, Mat a);
std::optional<Mat> mat_inverse(const CoeffField& F, Mat a);
// basis of the right nullspace of a (a: r x c), as c-vectors
std::vector<std::vector<Scalar>> mat_nullspace(const CoeffField& F, Mat a);

} // namespace limitrep::linalg
