#pragma once

// Exact group-algebra module machinery: induction in both realizations,
// restriction, tensor products, spinning, irreducibility certificates,
// composition-length counting and the double-coset disjointness certificate
// for induced modules.
//
// Irreducibility is decided by two engines.  In characteristic zero the
// group is enumerable at desk scale and the certificate is full-span
// spinning plus the exact endomorphism rank, computed as the character
// self-inner-product (the endomorphism rank over a splitting cyclotomic
// extension).  In characteristic ell the certificate is a Norton-style
// test: nullspace lines of a singular algebra element are spun on both the
// module and its transpose; this stays sound for non-semisimple modules.

#include <functional>
#include <optional>

#include "limitrep/chartable.hpp"
#include "limitrep/group.hpp"
#include "limitrep/linalg.hpp"

namespace limitrep::modrep {

using chevalley::Mat;
using linalg::SparseVec;

class Module {
public:
  CoeffField F = CoeffField::rationals();
  grp::GroupHandle group;
  std::vector<std::string> labels;
  // gen_act[gi][b] = image of basis vector b under generator gi
  std::vector<std::vector<SparseVec>> gen_act;
  // optional action of an arbitrary group element on a basis vector
  std::function<SparseVec(const Mat&, std::uint32_t)> elem_act;
  std::string name;

  std::uint32_t dim() const { return static_cast<std::uint32_t>(labels.size()); }
  SparseVec act_gen(std::uint32_t gi, const SparseVec& v) const;
  SparseVec act_elem(const Mat& g, const SparseVec& v) const;
  linalg::Mat matrix_of(const Mat& g) const;
  linalg::Mat gen_matrix(std::uint32_t gi) const;
  // trace of every conjugacy class representative
  std::vector<Scalar> character() const;
  // spot check: identity acts as identity, plus sampled generator relations
  void check_welldefined(std::uint32_t samples = 4) const;
};

// --- constructions ---------------------------------------------------------

Module trivial_module(const grp::GroupHandle& G, const CoeffField& F);
Module one_dim_module(const grp::GroupHandle& G, const CoeffField& F,
                      const std::function<Scalar(const Mat&)>& chi, std::string name);
Module regular_module(const grp::GroupHandle& G, const CoeffField& F);
// cell-module adapter: integer generator matrices over Q
Module module_from_int_matrices(
    const grp::GroupHandle& G, const CoeffField& F,
    const std::vector<std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>>>& cols,
    std::uint32_t dim, std::string name);

enum class Realization { Tensor, Function };
Module induce(const grp::GroupHandle& G, const grp::GroupHandle& H, const Module& M,
              Realization realization);
// the canonical intertwiner from the function to the tensor realization,
// i.e. f goes to the sum of rep_c tensor f(rep_c); on these bases it is a
// relabelling, returned as an explicit matrix for verification
linalg::Mat function_to_tensor_map(const Module& func, const Module& tens);

Module restrict_module(const Module& M, const grp::GroupHandle& H);
Module tensor_module(const Module& A, const Module& B);

// --- submodules ------------------------------------------------------------

struct SubmoduleBasis {
  linalg::SpanSolver span;  // echelonized, canonical
  std::vector<SparseVec> generators; // the vectors that were spun
};

SubmoduleBasis spin(const Module& M, const std::vector<SparseVec>& seeds);
// submodule on a chosen independent basis (ambient coordinates)
Module submodule_on_basis(const Module& M, const std::vector<SparseVec>& basis,
                          std::vector<std::string> labels, std::string name);
Module quotient_module(const Module& M, const linalg::SpanSolver& sub, std::string name);
bool is_generator_closed(const Module& M, const linalg::SpanSolver& span);

// --- certificates ----------------------------------------------------------

struct IrredCertificate {
  bool irreducible = false;
  bool absolutely_irreducible = false;
  std::uint32_t spanning_set_size = 0;
  mpq_class endo_rank = 0;   // exact; for char 0 the splitting-field rank
  std::uint32_t witness_dim = 0; // a proper submodule dimension when reducible
  std::string method;
  std::string json(const std::string& claim, const std::string& spec_str,
                   const std::string& level, const std::string& field) const;
};

IrredCertificate is_irreducible(const Module& M);
std::uint32_t composition_length(const Module& M); // char 0 only

// explicit invertible intertwiner, if any; always verified before return
std::optional<linalg::Mat> iso_witness(const Module& A, const Module& B);
std::uint32_t hom_dimension(const Module& A, const Module& B);

struct ReciprocityReport {
  std::uint32_t hom_G = 0, hom_H = 0;
  bool adjunction_ok = false;
  bool projection_formula_ok = false;
  std::string json() const;
};
ReciprocityReport frobenius_reciprocity_check(const grp::GroupHandle& G,
                                              const grp::GroupHandle& H, const Module& M,
                                              const Module& N);

struct MackeyReport {
  bool certificate = false; // all double cosets pass the disjointness test
  std::vector<std::string> coset_details;
  std::string json() const;
};
// M a module over H inside G; tests, for every double-coset representative s
// outside H, that the restriction of M and its s-twist to sHs^{-1} cap H
// share no composition factor (inner product zero; characteristic 0)
MackeyReport mackey_certificate(const grp::GroupHandle& G, const grp::GroupHandle& H,
                                const Module& M);

// character of M as per-class values coerced into the field of the table
std::vector<Scalar> character_in(const Module& M, const CoeffField& F);

} // namespace limitrep::modrep
