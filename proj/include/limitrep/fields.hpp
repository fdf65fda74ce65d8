#pragma once

// Exact arithmetic in the ground fields F_{p^m}, with the compatible
// embedding lattice F_{q^a} -> F_{q^b} for a | b.
//
// Moduli are Conway polynomials computed by direct search (primitive,
// norm-compatible down the divisor lattice, minimal in the standard word
// order).  The class of x is therefore always a generator of the
// multiplicative group, which the torus-character code relies on.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "limitrep/util.hpp"

namespace limitrep::fields {

class PrimePowerField;
using FieldPtr = std::shared_ptr<const PrimePowerField>;

class FieldElement {
public:
  FieldElement() = default;
  FieldElement(const PrimePowerField* parent, std::vector<std::uint32_t> coeffs);

  const PrimePowerField& parent() const { return *parent_; }
  const std::vector<std::uint32_t>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_one() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;
  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  // total order used wherever a deterministic choice is needed:
  // lexicographic on the coefficient vector (constant term first)
  bool operator<(const FieldElement& o) const;

  std::string str() const;        // e.g. "0", "1", "x^2+x"
  std::uint64_t index() const;    // position in the canonical enumeration

private:
  const PrimePowerField* parent_ = nullptr;
  std::vector<std::uint32_t> c_; // length m, values in [0,p)
  friend class PrimePowerField;
};

// Monic polynomials over F_p as coefficient vectors c0..c_{deg} (c_deg = 1).
using FpPoly = std::vector<std::uint32_t>;

class PrimePowerField : public std::enable_shared_from_this<PrimePowerField> {
public:
  // Registry access; modulus chosen deterministically (Conway search).
  static FieldPtr get(std::uint64_t p, std::uint32_t m);

  std::uint64_t characteristic() const { return p_; }
  std::uint32_t degree() const { return m_; }
  std::uint64_t order() const { return q_; }
  const FpPoly& modulus() const { return modulus_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(std::uint64_t n) const; // image of n under Z -> F_p
  FieldElement generator() const;               // class of x; primitive
  FieldElement element(std::vector<std::uint32_t> coeffs) const;
  FieldElement element_by_index(std::uint64_t i) const; // base-p digits, i < q
  FieldElement scalar_mul(std::uint32_t a, const FieldElement& x) const;

  // discrete log base generator(); only for nonzero x (tables built lazily)
  std::uint64_t dlog(const FieldElement& x) const;
  // trace to the prime field, as an integer in [0,p)
  std::uint32_t trace_to_prime(const FieldElement& x) const;

  std::string str() const; // "F_4"

private:
  PrimePowerField(std::uint64_t p, std::uint32_t m, FpPoly modulus);
  std::uint64_t p_;
  std::uint32_t m_;
  std::uint64_t q_;
  FpPoly modulus_;
  mutable std::vector<std::uint64_t> log_; // index -> dlog, built lazily
  friend class FieldElement;
};

// x^q for q a power of char(parent of x)
FieldElement frobenius(const FieldElement& x, std::uint64_t q);

class TowerEmbedding {
public:
  // requires: same characteristic, degree(src) | degree(tgt)
  static TowerEmbedding get(const FieldPtr& src, const FieldPtr& tgt);

  const FieldPtr& source() const { return src_; }
  const FieldPtr& target() const { return tgt_; }
  const FieldElement& image_of_generator() const { return gen_image_; }
  FieldElement apply(const FieldElement& x) const;

private:
  TowerEmbedding() = default;
  FieldPtr src_, tgt_;
  FieldElement gen_image_;
  std::vector<FieldElement> gen_powers_; // gen_image_^i for i < deg(src)
};

// Conway polynomial by search; memoized. Throws bound_error when p^m is
// beyond the search bound.
FpPoly conway_polynomial(std::uint64_t p, std::uint32_t m);

bool fp_poly_irreducible(const FpPoly& f, std::uint64_t p);

} // namespace limitrep::fields
