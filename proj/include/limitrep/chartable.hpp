#pragma once

// Exact complex character tables of finite groups at desk scale: conjugacy
// classes by exhaustive conjugation, simultaneous eigenvectors of the class
// algebra found modulo a suitable prime, and character values lifted to
// exact elements of Q(zeta_e), e the group exponent.  The table is verified
// against the orthogonality relations before it is returned.

#include <vector>

#include "limitrep/group.hpp"
#include "limitrep/scalar.hpp"

namespace limitrep::chartab {

struct CharacterTable {
  grp::GroupHandle G;
  CoeffField F; // Q(zeta_e)
  std::uint64_t exponent = 1;
  std::vector<std::uint32_t> degrees;          // per irreducible
  std::vector<std::vector<Scalar>> values;     // [irr][class], in F

  std::uint32_t irr_count() const { return static_cast<std::uint32_t>(values.size()); }

  // <a, b> = (1/|G|) sum_k |C_k| a(g_k) b(g_k^{-1}) for class functions
  // given by per-class values over F
  mpq_class inner(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const;
};

const CharacterTable& character_table(const grp::GroupHandle& G);

// class-function inner product over an arbitrary char-0 field: both vectors
// per-class over F; returns the exact rational value
mpq_class class_inner(const grp::FiniteGroup& G, const CoeffField& F,
                      const std::vector<Scalar>& a, const std::vector<Scalar>& b);

} // namespace limitrep::chartab
