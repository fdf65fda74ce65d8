#pragma once

// GL_n and SL_n over F_{q^a} with the standard BN-pair: torus of diagonal
// matrices, upper unitriangular U, monomial N, root subgroups, chosen Weyl
// representatives, Bruhat normal form and canonical G/B coset labels.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "limitrep/fields.hpp"
#include "limitrep/weyl.hpp"

namespace limitrep::chevalley {

using fields::FieldElement;
using fields::FieldPtr;

enum class Family { GL, SL };

struct GroupSpec {
  Family fam = Family::SL;
  std::uint32_t n = 2;   // matrix size
  std::uint64_t q = 2;   // base field order (a prime power)
  std::uint32_t level = 1;

  static GroupSpec parse(const std::string& s); // "SL(2,3)" or "SL(2,3^2)"
  std::string str() const;
  GroupSpec at_level(std::uint32_t a) const;

  std::uint64_t base_p() const;       // characteristic
  std::uint32_t base_m() const;       // q = p^m
  FieldPtr field() const;             // F_{q^level}
  std::uint64_t field_order() const;  // q^level
  mpz_class order() const;            // |G(F_{q^level})|
  weyl::CoxPtr weyl_group() const;    // A_{n-1}
  std::uint32_t positive_root_count() const { return n * (n - 1) / 2; }
  bool operator==(const GroupSpec& o) const;
};

class Mat {
public:
  Mat() = default;
  Mat(FieldPtr F, std::uint32_t n); // zero matrix
  static Mat identity(const FieldPtr& F, std::uint32_t n);

  std::uint32_t size() const { return n_; }
  const FieldPtr& field() const { return F_; }
  const FieldElement& at(std::uint32_t i, std::uint32_t j) const { return a_[i * n_ + j]; }
  void set(std::uint32_t i, std::uint32_t j, FieldElement v) { a_[i * n_ + j] = std::move(v); }

  Mat operator*(const Mat& o) const;
  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }
  FieldElement det() const;
  Mat inverse() const;

  std::string key() const;  // compact canonical bytes, hashable
  std::string str() const;
  std::string json() const; // row-major lists of coefficient vectors

private:
  FieldPtr F_;
  std::uint32_t n_ = 0;
  std::vector<FieldElement> a_;
};

// roots of type A_{n-1}: e_i - e_j for i != j (1-based); positive iff i < j
struct Root {
  std::uint32_t i = 0, j = 0;
  bool positive() const { return i < j; }
  std::uint32_t height() const { return j > i ? j - i : i - j; }
  bool operator==(const Root& o) const { return i == o.i && j == o.j; }
  bool operator<(const Root& o) const; // height, then lexicographic
};

// positive roots in the canonical order (height, then lexicographic)
std::vector<Root> positive_roots(std::uint32_t n);
Root simple_root(std::uint32_t i); // alpha_i = e_i - e_{i+1}

struct BruhatNormalForm {
  weyl::WElement w;
  Mat u;       // in U_w
  Mat t;       // in T
  Mat uprime;  // in U
};

// canonical G/B label: the Weyl part and the root coordinates of u in U_w,
// listed in the canonical positive-root order restricted to w-inverted roots
struct CosetLabel {
  std::uint32_t w_index;
  std::vector<FieldElement> coords;
  std::string key() const;
};

struct SubgroupTag {
  enum class Kind { B, T, U, N, Uroot, Uprime, Uw, Uwprime, PJ, LJ, UPJ };
  Kind kind = Kind::B;
  Root root{};                     // Uroot
  weyl::WElement w{};              // Uw / Uwprime
  std::vector<std::uint32_t> J{};  // PJ / LJ / UPJ, simple-root indices

  static SubgroupTag simple(Kind k) { return SubgroupTag{k, {}, {}, {}}; }
};

class Group {
public:
  explicit Group(GroupSpec spec);

  const GroupSpec& spec() const { return spec_; }
  const FieldPtr& field() const { return F_; }
  std::uint32_t n() const { return spec_.n; }
  const weyl::CoxPtr& weyl_group() const { return W_; }

  Mat identity() const;
  Mat root_element(const Root& r, const FieldElement& c) const;
  Mat torus_element(const std::vector<FieldElement>& diag) const; // length n
  Mat weyl_representative(const weyl::WElement& w) const;         // n_w (cached)
  Mat frobenius_map(const Mat& g) const;                          // entrywise ^q

  bool member(const Mat& g, const SubgroupTag& tag) const;

  BruhatNormalForm bruhat_decompose(const Mat& g) const;
  CosetLabel coset_index(const Mat& g) const;
  // the fixed representative u * n_w of the labelled coset
  Mat coset_representative(const CosetLabel& label) const;

  // root coordinates of a unitriangular matrix in the canonical order
  std::vector<FieldElement> unipotent_coords(const Mat& u) const;
  Mat from_unipotent_coords(const std::vector<FieldElement>& c) const;
  // u = u_w * u'_w with u_w in U_w and u'_w in U'_w
  std::pair<Mat, Mat> split_u_along(const Mat& u, const weyl::WElement& w) const;

  // every element exactly once (Bruhat-cell order); throws above the bound
  std::vector<Mat> enumerate() const;

  // named generators: simple root elements over a field basis, their
  // opposites, torus generators, and the simple Weyl representatives
  std::vector<std::pair<std::string, Mat>> generators() const;

  bool in_group(const Mat& g) const; // det condition

private:
  GroupSpec spec_;
  FieldPtr F_;
  weyl::CoxPtr W_;
  mutable std::map<std::vector<std::int32_t>, Mat> nw_cache_;
  mutable std::mutex mu_;
};

using GroupPtr = std::shared_ptr<const Group>;
GroupPtr group(const GroupSpec& spec); // registry

Mat mat_from_json(const FieldPtr& F, const std::string& json);

} // namespace limitrep::chevalley
