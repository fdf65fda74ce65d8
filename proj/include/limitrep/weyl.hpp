#pragma once

// Finite Coxeter groups of classical type (A_n, B_n, D_n) in the
// signed-permutation model, with Bruhat order, Kazhdan-Lusztig polynomials,
// cells and cell modules.  Nested unions of type A truncate to W_n here.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "limitrep/util.hpp"

namespace limitrep::weyl {

enum class CoxFamily { A, B, D };

class CoxeterSystem;
using CoxPtr = std::shared_ptr<const CoxeterSystem>;

// Window (one-line) form: type A_n permutes {1..n+1}; types B_n/D_n are
// signed permutations of {1..n}.
class WElement {
public:
  WElement() = default;
  WElement(const CoxeterSystem* W, std::vector<std::int32_t> window);

  const CoxeterSystem& system() const { return *W_; }
  const std::vector<std::int32_t>& window() const { return w_; }
  bool is_identity() const;

  WElement operator*(const WElement& o) const; // composition: (uv)(i) = u(v(i))
  WElement inverse() const;
  bool operator==(const WElement& o) const;
  bool operator!=(const WElement& o) const { return !(*this == o); }
  bool operator<(const WElement& o) const { return w_ < o.w_; }

  WElement right_mul_gen(std::uint32_t s) const; // w * s_i, 1-based
  WElement left_mul_gen(std::uint32_t s) const;  // s_i * w

  std::uint32_t length() const;              // inversion count formula
  bool right_descent(std::uint32_t s) const; // l(w s) < l(w)
  bool left_descent(std::uint32_t s) const;  // l(s w) < l(w)
  std::vector<std::uint32_t> reduced_word() const; // lexicographically smallest

  std::string str() const; // "2,1,3" / "-2,1"

private:
  const CoxeterSystem* W_ = nullptr;
  std::vector<std::int32_t> w_;
};

struct KLPoly {
  std::vector<std::int64_t> c; // low-to-high
  std::int64_t at(std::size_t k) const { return k < c.size() ? c[k] : 0; }
  int degree() const;
  std::int64_t eval_one() const;
  bool operator==(const KLPoly& o) const;
  std::string str() const;
};

enum class CellKind { Left, Right, TwoSided };

struct CellPartition {
  CellKind kind;
  CoxPtr W;
  std::vector<std::vector<std::uint32_t>> blocks; // element indices
  std::vector<std::uint32_t> block_of;            // indexed by element
  std::string json() const;
};

struct CellModule {
  CoxPtr W;
  std::vector<std::uint32_t> cell; // element indices, basis order
  // gen_action[s][j] = column j of the action of s_{s+1}: (index into cell, coeff)
  std::vector<std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>>> gen_action;
  std::uint32_t dim() const { return static_cast<std::uint32_t>(cell.size()); }
};

struct LimitCellReport {
  std::vector<std::uint32_t> levels;   // ranks n tested
  std::vector<bool> same_cell;         // per level
  bool stabilized;                     // all answers equal
  std::string json() const;
};

class CoxeterSystem : public std::enable_shared_from_this<CoxeterSystem> {
public:
  static CoxPtr get(CoxFamily fam, std::uint32_t rank);
  static CoxPtr parse(const std::string& s); // "A3", "B2", "D4"

  CoxFamily family() const { return fam_; }
  std::uint32_t rank() const { return rank_; }
  std::uint32_t coxeter_m(std::uint32_t i, std::uint32_t j) const; // m(s_i, s_j)
  std::uint64_t order() const;
  std::string name() const;

  WElement identity() const;
  WElement generator(std::uint32_t i) const; // 1-based
  WElement from_window(std::vector<std::int32_t> win) const;
  WElement from_word(const std::vector<std::uint32_t>& word) const;
  // longest element of the standard parabolic W_J, J a set of generator indices
  WElement longest_element(const std::vector<std::uint32_t>& J) const;

  // --- enumeration-backed layer (lazy; throws bound_error above the cap) ---
  std::uint32_t index_of(const WElement& w) const;
  const WElement& element(std::uint32_t idx) const;
  std::uint32_t size() const; // enumerated size (== order())
  std::uint32_t right_mult(std::uint32_t idx, std::uint32_t s) const;
  std::uint32_t left_mult(std::uint32_t idx, std::uint32_t s) const;
  std::uint32_t inverse_index(std::uint32_t idx) const;
  std::uint32_t length_of(std::uint32_t idx) const;
  bool bruhat_leq_idx(std::uint32_t y, std::uint32_t w) const;

  const KLPoly& kl(std::uint32_t y, std::uint32_t w) const; // P_{y,w}
  std::int64_t mu(std::uint32_t y, std::uint32_t w) const;

private:
  CoxeterSystem(CoxFamily fam, std::uint32_t rank);
  struct Tables;
  Tables& tables() const;
  CoxFamily fam_;
  std::uint32_t rank_;
  mutable std::unique_ptr<Tables> tables_;
  mutable std::mutex mu_;
};

bool bruhat_leq(const WElement& y, const WElement& w);
KLPoly kl_polynomial(const WElement& y, const WElement& w);
std::int64_t mu_coefficient(const WElement& y, const WElement& w);
std::string klpoly_json(const CoxPtr& W, const WElement& y, const WElement& w,
                        const KLPoly& p);

CellPartition cell_partition(const CoxPtr& W, CellKind kind);
CellModule cell_module(const CellPartition& left_cells, std::uint32_t block);

// star operation for an adjacent pair (m(s,t) = 3); nullopt when w is not in
// the domain (neither or both of s,t in the relevant descent set)
std::optional<WElement> star_operation(const WElement& w, std::uint32_t s, std::uint32_t t,
                                       bool right);

// Do w_P and w_Q share a two-sided cell in the type A truncations
// A_n for n = n_min .. n_min + depth?  A finite witness, not a limit proof.
LimitCellReport limit_cell_probe(const std::vector<std::uint32_t>& P,
                                 const std::vector<std::uint32_t>& Q, std::uint32_t depth);

} // namespace limitrep::weyl
