#pragma once

// Principal series machinery: M(theta) = kG (x)_{kB} k_theta realized on
// Bruhat coset labels, the alternating vectors eta_J and c_w, the submodules
// kUW eta_J and the Steinberg module kU eta_S, the E_J quotients with their
// distinguishing conditions, torus-stable lines, the composition bound
// through W_theta, socle/head generators, level promotion, and the
// rule-based Steinberg action for nested groups.

#include <gmpxx.h>

#include "limitrep/modrep.hpp"

namespace limitrep::principal {

using chevalley::GroupSpec;
using chevalley::Mat;
using linalg::SparseVec;

// characters of the diagonal torus at a level, valued in an exact field
class TorusCharacter {
public:
  static TorusCharacter trivial(const GroupSpec& spec, const CoeffField& F);
  // exponent vector relative to the canonical generator of the multiplicative
  // group: length n for GL, n-1 for SL (the last entry is determined)
  static TorusCharacter from_exponents(const GroupSpec& spec,
                                       std::vector<std::uint64_t> exponents,
                                       const CoeffField& F);

  const GroupSpec& spec() const { return spec_; }
  const CoeffField& field() const { return F_; }
  const std::vector<std::uint64_t>& exponents() const { return exps_; }
  Scalar eval_torus(const Mat& t) const;
  Scalar eval_borel(const Mat& b) const; // through the quotient B -> T
  bool is_trivial() const;
  // ^w theta : t -> theta(n_w^{-1} t n_w)
  TorusCharacter conjugate(const weyl::WElement& w) const;
  bool equals(const TorusCharacter& o) const; // as characters of T(level)

private:
  GroupSpec spec_;
  std::vector<std::uint64_t> exps_;
  CoeffField F_ = CoeffField::rationals();
};

// a shared FiniteGroup handle per Chevalley spec (so tensor products of
// modules built independently act through the same generator list)
grp::GroupHandle level_group(const GroupSpec& spec);

struct PrincipalSeries {
  GroupSpec spec;
  TorusCharacter theta;
  chevalley::GroupPtr Gc;
  grp::GroupHandle G;
  modrep::Module module;
  std::vector<chevalley::CosetLabel> labels;
  std::map<std::string, std::uint32_t> label_index;

  std::uint32_t index_of_label(const chevalley::CosetLabel& l) const;
  std::uint32_t index_of_weyl(const weyl::WElement& w) const; // the label (w, I)
};

PrincipalSeries build_M_theta(const GroupSpec& spec, const TorusCharacter& theta);

// eta_J = sum over W_J of (-1)^{l(w)} (w, I);  c_w = sum_{y <= w} of
// (-1)^{l(y)} P_{y,w}(1) (y, I).  Both live in M(tr).
SparseVec eta_vector(const PrincipalSeries& Mtr, const std::vector<std::uint32_t>& J);
SparseVec c_vector(const PrincipalSeries& Mtr, const weyl::WElement& w);

// the submodule kUW eta_J, by spinning; closure is re-verified
modrep::SubmoduleBasis m_tr_J(const PrincipalSeries& Mtr, const std::vector<std::uint32_t>& J);

struct SteinbergModule {
  PrincipalSeries ambient; // M(tr) at the level
  modrep::Module module;   // basis u * eta_S over the unipotent group
  std::vector<Mat> u_elements;
};
SteinbergModule steinberg(const GroupSpec& spec, const CoeffField& F);

mpz_class poincare_sum(std::uint64_t q, std::uint32_t a, const weyl::CoxPtr& W);
// true iff ell = 0 or ell does not divide the Poincare sum
bool steinberg_criterion(std::uint64_t ell, std::uint64_t q, std::uint32_t a,
                         const weyl::CoxPtr& W);

struct TensorIdentityReport {
  std::string spec, field;
  std::uint32_t level = 1;
  bool dims_ok = false;
  bool witness_ok = false;
  std::uint32_t dim_M = 0, dim_St = 0, index_T = 0;
  std::string json() const;
};
TensorIdentityReport tensor_identity_check(const GroupSpec& spec, const TorusCharacter& theta);

struct TStableLinesReport {
  std::uint32_t weyl_count = 0;        // |W|
  std::uint32_t label_lines = 0;       // torus-stable lines through labels (w, I)
  bool torus_trivial = false;
  bool extra_lines = false;            // stable lines beyond the labelled ones
  std::vector<std::uint32_t> eigenspace_dims;
  bool finite_level_caveat = true;
  std::string json() const;
};
TStableLinesReport t_stable_lines(const PrincipalSeries& M);

struct EJData {
  modrep::Module E;
  std::uint32_t dim_MJ = 0, dim_Mprime = 0;
  // project a vector of M(tr) that lies in M(tr)_J to E_J coordinates
  std::function<SparseVec(const SparseVec&)> project;
};
EJData e_j(const PrincipalSeries& Mtr, const std::vector<std::uint32_t>& J);

struct EJDistinguishReport {
  std::string spec, field;
  std::uint32_t level = 1;
  std::vector<std::uint32_t> J;
  bool conditions_hold = false; // n_i acts by -1 iff i in J; U_i fixes iff i not in J
  std::vector<std::string> detail;
  bool finite_level_caveat = true;
  std::string json() const;
};
EJDistinguishReport distinguish_e_j(const PrincipalSeries& Mtr,
                                    const std::vector<std::uint32_t>& J);

// {w : ^w theta = theta}
std::vector<weyl::WElement> w_theta(const GroupSpec& spec, const TorusCharacter& theta);

struct CompositionBoundReport {
  std::string spec, field;
  std::uint32_t level = 1;
  std::uint32_t w_theta_order = 0;
  std::uint32_t length = 0;
  bool bound_holds = false;
  std::string json() const;
};
CompositionBoundReport composition_bound_check(const GroupSpec& spec,
                                               const TorusCharacter& theta);

struct SocleHeadReport {
  std::string spec, field;
  std::uint32_t level = 1;
  std::uint32_t socle_dim = 0;
  bool socle_irreducible = false;
  std::uint32_t max_submodule_dim = 0;
  std::uint32_t head_dim = 0;
  bool head_irreducible = false;
  std::string json() const;
};
SocleHeadReport socle_head_generators(const GroupSpec& spec, const TorusCharacter& theta,
                                      const std::vector<std::uint32_t>& J);

// M(theta) is induced through any standard parabolic: the Levi principal
// series inflated to P_J and induced up is isomorphic to M(theta)
bool parabolic_factorization_check(const GroupSpec& spec, const TorusCharacter& theta,
                                   const std::vector<std::uint32_t>& J);

// descent classes A_J = {w : right descents of w equal J}
std::vector<std::uint32_t> descent_class(const weyl::CoxPtr& W,
                                         const std::vector<std::uint32_t>& J);

// level promotion: the canonical inclusion of M(theta) at level a into the
// one at level b (labels embed along the field tower)
SparseVec promote(const PrincipalSeries& from, const PrincipalSeries& to, const SparseVec& v);

// ---- rule-based Steinberg action for the nested family ----------------------

struct RuleSteinberg {
  GroupSpec spec; // GL_n or SL_n over F_q, level 1
  chevalley::GroupPtr Gc;
  grp::GroupHandle G;
  modrep::Module module;       // free over the unipotent group: basis u * xi
  std::vector<Mat> u_elements; // deterministic order
  std::map<std::string, std::uint32_t> u_index;
};

RuleSteinberg rule_steinberg(const GroupSpec& spec, const CoeffField& F);
// the three rewrite rules, extended linearly; defined for every g via the
// Bruhat normal form
SparseVec rule_action(const RuleSteinberg& St, const Mat& g, const SparseVec& v);
// the unique (x, t, y) with n_i u_i n_i^{-1} = x n_i t y inside the rank-one
// subgroup of the i-th simple root; checked by recomposition
struct RankOneFactorization {
  Mat x, t, y;
};
RankOneFactorization rank_one_factorization(const chevalley::Group& G, std::uint32_t i,
                                            const fields::FieldElement& c);

} // namespace limitrep::principal
