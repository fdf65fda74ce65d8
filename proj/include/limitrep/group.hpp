#pragma once

// Explicit finite matrix groups: BFS enumeration from generators with word
// tracking, coset and double-coset decompositions, conjugacy classes.
// Everything at desk scale is a subgroup of some GL_n(F_{p^m}), including
// Weyl groups (as signed permutation matrices), so one element type serves.

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "limitrep/chevalley.hpp"

namespace limitrep::grp {

using chevalley::Mat;

class FiniteGroup;
using GroupHandle = std::shared_ptr<const FiniteGroup>;

class FiniteGroup {
public:
  FiniteGroup(std::string name, fields::FieldPtr F, std::uint32_t n,
              std::vector<std::pair<std::string, Mat>> gens,
              std::uint64_t bound = bounds::enumeration());

  static GroupHandle make(std::string name, fields::FieldPtr F, std::uint32_t n,
                          std::vector<std::pair<std::string, Mat>> gens,
                          std::uint64_t bound = bounds::enumeration());
  static GroupHandle trivial(fields::FieldPtr F, std::uint32_t n);
  // a Chevalley-level group with its standard generators
  static GroupHandle from_chevalley(const chevalley::GroupPtr& G);
  // Coxeter group as (signed) permutation matrices over F_3
  static GroupHandle from_coxeter(const weyl::CoxPtr& W);

  const std::string& name() const { return name_; }
  const fields::FieldPtr& field() const { return F_; }
  std::uint32_t mat_size() const { return n_; }
  const std::vector<Mat>& gens() const { return gens_; }
  const std::vector<std::string>& gen_names() const { return gen_names_; }
  Mat identity() const { return Mat::identity(F_, n_); }

  // enumeration (lazy, deterministic BFS order; identity first)
  std::uint32_t size() const;
  const Mat& elem(std::uint32_t i) const;
  std::uint32_t index_of(const Mat& g) const; // throws when absent
  bool contains(const Mat& g) const;
  // g as a product of generators, left to right
  const std::vector<std::uint32_t>& word_of(std::uint32_t i) const;
  std::uint32_t element_order(std::uint32_t i) const;
  std::uint64_t exponent() const;

  struct Classes {
    std::vector<std::uint32_t> rep;           // element index per class
    std::vector<std::uint32_t> class_of;      // per element
    std::vector<std::uint32_t> size;          // per class
    std::vector<std::uint32_t> inverse_class; // per class
  };
  const Classes& classes() const;
  std::uint32_t class_of_mat(const Mat& g) const;

private:
  struct Enum;
  Enum& enumeration() const;
  std::string name_;
  fields::FieldPtr F_;
  std::uint32_t n_;
  std::vector<Mat> gens_;
  std::vector<std::string> gen_names_;
  std::uint64_t bound_;
  mutable std::unique_ptr<Enum> enum_;
  mutable std::unique_ptr<Classes> classes_;
  mutable std::mutex mu_;
};

// left cosets gH: deterministic representatives in enumeration order
struct CosetDecomposition {
  std::vector<std::uint32_t> reps;     // indices into G
  std::vector<std::uint32_t> coset_of; // per G element
  std::uint32_t count() const { return static_cast<std::uint32_t>(reps.size()); }
};
CosetDecomposition left_cosets(const FiniteGroup& G, const FiniteGroup& H);

// representatives of the double cosets H g K (H, K subgroups of G)
std::vector<std::uint32_t> double_coset_reps(const FiniteGroup& G, const FiniteGroup& H,
                                             const FiniteGroup& K);

// the subgroup s H s^{-1} cap H as an explicit element list; returned as a
// FiniteGroup generated by all its elements
GroupHandle conjugate_intersection(const FiniteGroup& G, const FiniteGroup& H, const Mat& s);

// standard subgroups of a Chevalley-level group, with their own generators
enum class StdSubgroup { B, T, U };
GroupHandle standard_subgroup(const chevalley::GroupPtr& G, StdSubgroup which);
// standard parabolic P_J: Borel generators plus the n_j for j in J
GroupHandle standard_parabolic(const chevalley::GroupPtr& G,
                               const std::vector<std::uint32_t>& J);

} // namespace limitrep::grp
