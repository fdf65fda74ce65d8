#pragma once

// Representations attached to the Borel subgroup: torus orbits on the
// characters of U/U', the little-groups construction for a semidirect
// product with an abelian normal part, the resulting classification of the
// Borel irreducibles through the U/U' quotient, nondegenerate characters and
// the induced modules they generate.

#include "limitrep/principal.hpp"

namespace limitrep::borelreps {

using chevalley::GroupSpec;
using chevalley::Mat;
using fields::FieldElement;

// a character of U trivial on U': one additive component per simple root
struct UCharacter {
  GroupSpec spec;
  std::vector<FieldElement> components; // c_j, one per simple root
  CoeffField F;                         // must contain p-th roots of unity

  Scalar eval(const Mat& u) const;
  bool nondegenerate() const;
  std::string str() const;
};

struct TorusOrbit {
  UCharacter rep;                 // lexicographically smallest tuple
  std::uint32_t size = 0;
  std::uint32_t stabilizer_order = 0;
  bool nondegenerate = false;
};

std::vector<TorusOrbit> u_character_orbits(const GroupSpec& spec, const CoeffField& F);
std::string orbits_csv(const std::vector<TorusOrbit>& orbits);

// ---- abstract little groups -------------------------------------------------

// G = H x| A with A abelian and normal; every element factors uniquely as
// h * a.  The engine lists the induced modules theta_{alpha,rho} for orbit
// representatives alpha of H on the characters of A and characters rho of
// the stabilizer H_alpha.
struct SemidirectData {
  grp::GroupHandle G, H, A;
};

struct LittleGroupRep {
  std::uint32_t orbit = 0;
  std::uint32_t rho = 0;
  std::uint32_t stabilizer_order = 0;
  modrep::Module module; // over G
  bool irreducible = false;
};

std::vector<LittleGroupRep> little_group_reps(const SemidirectData& data,
                                              const CoeffField& F);

// the quotient B/U' realized as a matrix group: the 2x2 superdiagonal blocks
// of an upper triangular matrix, together with its diagonal
SemidirectData borel_mod_uprime(const GroupSpec& spec);

struct BorelClassification {
  std::uint32_t b_order = 0;
  std::uint32_t quotient_order = 0;
  std::vector<std::uint32_t> dims;       // of the theta_{alpha,rho}
  bool all_irreducible = false;
  bool pairwise_noniso = false;
  bool quotient_complete = false;        // sum of dims^2 = |B/U'|
  std::uint32_t full_irr_count = 0;      // brute-force table of B itself
  std::uint32_t quotient_irr_count = 0;  // produced list
  bool restrictions_in_orbit = false;    // Res_A theta only meets the orbit
  std::string json() const;
};

BorelClassification classify_borel_irreps(const GroupSpec& spec, const CoeffField& F);

struct GelfandGraevReport {
  std::uint32_t dim = 0;
  std::vector<std::uint32_t> multiplicities; // against the table of G
  bool multiplicity_free = false;
  std::uint32_t nondegenerate_orbit_count = 0;
  std::string json() const;
};

GelfandGraevReport gelfand_graev(const GroupSpec& spec, const UCharacter& sigma);

} // namespace limitrep::borelreps
