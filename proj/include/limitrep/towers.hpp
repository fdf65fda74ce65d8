#pragma once

// Divisibility-indexed towers of groups with compatible module systems:
// construction of the standard towers (field levels of a Chevalley group,
// nested Coxeter truncations, nested linear groups), verification of the
// transition identities, and the finite-window certificate that a union of
// irreducibles stays irreducible level by level.

#include "limitrep/principal.hpp"

namespace limitrep::towers {

using chevalley::Mat;

enum class TowerKind { ChevalleyLevels, CoxeterA, NestedLinear };

struct TowerSpec {
  TowerKind kind = TowerKind::ChevalleyLevels;
  chevalley::GroupSpec base;          // family and q; n for ChevalleyLevels
  std::vector<std::uint32_t> levels;  // field levels or ranks, ascending
};

struct Tower {
  TowerSpec spec;
  std::vector<grp::GroupHandle> groups;
  std::vector<mpz_class> orders;
  // comparable: level divides (or is contained in) the other
  bool comparable(std::uint32_t i, std::uint32_t j) const;
  Mat embed(std::uint32_t from_pos, std::uint32_t to_pos, const Mat& g) const;
  bool directed() const;
};

Tower build_tower(const TowerSpec& spec);

struct DirectSystem {
  Tower tower;
  std::vector<modrep::Module> modules;
  // column images of phi_{ij} for comparable pairs (positions in the window)
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<linalg::SparseVec>> phi;

  linalg::SparseVec apply_phi(std::uint32_t i, std::uint32_t j,
                              const linalg::SparseVec& v) const;
};

struct SystemCheck {
  bool ok = true;
  std::vector<std::string> violations;
};
SystemCheck check_direct_system(const DirectSystem& D);

struct LimitCertificate {
  std::string lemma = "union_of_irreducibles";
  std::vector<std::uint32_t> window;
  struct PerLevel {
    std::uint32_t level = 0;
    std::uint32_t dim = 0;
    bool irreducible = false;
    bool equivariant = false;
  };
  std::vector<PerLevel> per_level;
  bool verdict = false;
  std::string caveat = "finite window evidence; no statement about the full limit";
  std::string json() const;
};

LimitCertificate union_irreducibility_certificate(const DirectSystem& D);

// the Steinberg system over the field levels of one Chevalley family
DirectSystem steinberg_system(const chevalley::GroupSpec& base,
                              const std::vector<std::uint32_t>& levels, const CoeffField& F);
// the rule-based Steinberg system over nested linear groups of growing rank
DirectSystem nested_steinberg_system(const chevalley::GroupSpec& base,
                                     const std::vector<std::uint32_t>& ranks,
                                     const CoeffField& F);

struct InducedTowerReport {
  std::vector<std::uint32_t> levels;
  std::vector<std::uint32_t> dims;  // dim Y_i
  std::vector<bool> witness_ok;     // induced at level i is isomorphic to Y_i
  bool union_ok = false;            // the top image is the whole module
  std::string json() const;
};

// H = Borel subgroup with the trivial module, induced at the top level; the
// report follows the level images Y_i inside it
InducedTowerReport induced_tower_images(const chevalley::GroupSpec& base,
                                        const std::vector<std::uint32_t>& levels,
                                        const CoeffField& F);

} // namespace limitrep::towers
