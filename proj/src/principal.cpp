#include "limitrep/principal.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace limitrep::principal {

using fields::FieldElement;
using linalg::sv_add_scaled;
using linalg::sv_unit;

// ---- torus characters --------------------------------------------------------

TorusCharacter TorusCharacter::trivial(const GroupSpec& spec, const CoeffField& F) {
  TorusCharacter t;
  t.spec_ = spec;
  t.F_ = F;
  t.exps_.assign(spec.fam == chevalley::Family::GL ? spec.n : spec.n - 1, 0);
  return t;
}

TorusCharacter TorusCharacter::from_exponents(const GroupSpec& spec,
                                              std::vector<std::uint64_t> exponents,
                                              const CoeffField& F) {
  TorusCharacter t;
  t.spec_ = spec;
  t.F_ = F;
  const std::uint32_t need = spec.fam == chevalley::Family::GL ? spec.n : spec.n - 1;
  if (exponents.size() != need) throw input_error("wrong exponent count for the torus");
  const std::uint64_t m = spec.field_order() - 1;
  for (auto& e : exponents) e %= m ? m : 1;
  t.exps_ = std::move(exponents);
  // the values must exist in F unless the character is trivial
  bool nontrivial = false;
  for (auto e : t.exps_)
    if (e) nontrivial = true;
  if (nontrivial) (void)F.root_of_unity(m);
  return t;
}

Scalar TorusCharacter::eval_torus(const Mat& t) const {
  const auto F = spec_.field();
  const std::uint64_t m = F->order() - 1;
  if (m == 1) return F_.one();
  std::uint64_t k = 0;
  for (std::uint32_t i = 0; i < exps_.size(); ++i) {
    if (!exps_[i]) continue;
    k = (k + exps_[i] % m * (F->dlog(t.at(i, i)) % m)) % m;
  }
  if (k == 0) return F_.one();
  Scalar z = F_.root_of_unity(m);
  Scalar acc = F_.one();
  Scalar zz = z;
  while (k) {
    if (k & 1) acc = acc * zz;
    zz = zz * zz;
    k >>= 1;
  }
  return acc;
}

Scalar TorusCharacter::eval_borel(const Mat& b) const {
  Mat diag(spec_.field(), spec_.n);
  for (std::uint32_t i = 0; i < spec_.n; ++i) diag.set(i, i, b.at(i, i));
  return eval_torus(diag);
}

bool TorusCharacter::is_trivial() const {
  for (auto e : exps_)
    if (e) return false;
  return true;
}

TorusCharacter TorusCharacter::conjugate(const weyl::WElement& w) const {
  // ^w theta(t) = theta(n_w^{-1} t n_w); on the diagonal this permutes the
  // entries by w, so exponent i moves to position w(i)
  TorusCharacter out = *this;
  const std::uint32_t n = spec_.n;
  std::vector<std::uint64_t> full(n, 0);
  const std::uint64_t m = spec_.field_order() - 1;
  for (std::uint32_t i = 0; i < exps_.size(); ++i) full[i] = exps_[i];
  // for SL the last exponent is 0 in this normalization
  std::vector<std::uint64_t> moved(n, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    std::uint32_t wi = static_cast<std::uint32_t>(w.window()[i]) - 1;
    moved[wi] = full[i];
  }
  if (spec_.fam == chevalley::Family::SL && m > 0) {
    // renormalize so the last exponent is zero: subtract it everywhere
    std::uint64_t last = moved[n - 1] % m;
    for (auto& e : moved) e = (e + m - last) % m;
  }
  moved.resize(exps_.size());
  out.exps_ = std::move(moved);
  return out;
}

bool TorusCharacter::equals(const TorusCharacter& o) const {
  return exps_ == o.exps_;
}

// ---- shared level groups -------------------------------------------------------

grp::GroupHandle level_group(const GroupSpec& spec) {
  static std::map<std::string, grp::GroupHandle> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lk(mu);
  auto key = spec.str();
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto G = grp::FiniteGroup::from_chevalley(chevalley::group(spec));
  cache.emplace(key, G);
  return G;
}

// ---- principal series ------------------------------------------------------------

std::uint32_t PrincipalSeries::index_of_label(const chevalley::CosetLabel& l) const {
  auto it = label_index.find(l.key());
  if (it == label_index.end()) throw internal_error("unknown coset label");
  return it->second;
}

std::uint32_t PrincipalSeries::index_of_weyl(const weyl::WElement& w) const {
  chevalley::CosetLabel l;
  l.w_index = Gc->weyl_group()->index_of(w);
  const auto F = spec.field();
  l.coords.assign(w.length(), F->zero());
  return index_of_label(l);
}

PrincipalSeries build_M_theta(const GroupSpec& spec, const TorusCharacter& theta) {
  PrincipalSeries M;
  M.spec = spec;
  M.theta = theta;
  M.Gc = chevalley::group(spec);
  M.G = level_group(spec);
  const auto W = M.Gc->weyl_group();
  const auto F = spec.field();
  const std::uint64_t Q = F->order();

  // labels (w, coords) in Weyl then lexicographic coordinate order
  for (std::uint32_t wi = 0; wi < W->size(); ++wi) {
    const std::uint32_t lw = W->length_of(wi);
    std::vector<std::uint64_t> idx(lw, 0);
    while (true) {
      chevalley::CosetLabel lab;
      lab.w_index = wi;
      for (std::uint32_t k = 0; k < lw; ++k) lab.coords.push_back(F->element_by_index(idx[k]));
      M.label_index.emplace(lab.key(), static_cast<std::uint32_t>(M.labels.size()));
      M.labels.push_back(std::move(lab));
      std::uint32_t k = 0;
      while (k < lw) {
        if (++idx[k] < Q) break;
        idx[k] = 0;
        ++k;
      }
      if (k == lw || lw == 0) break;
    }
  }
  if (M.labels.size() > bounds::solver())
    throw bound_error("principal series dimension beyond the solver bound");

  modrep::Module& mod = M.module;
  mod.F = theta.field();
  mod.group = M.G;
  mod.name = "M(theta)[" + spec.str() + "]";
  for (const auto& l : M.labels) mod.labels.push_back(l.key());
  auto Gc = M.Gc;
  auto labels = std::make_shared<std::vector<chevalley::CosetLabel>>(M.labels);
  auto index = std::make_shared<std::map<std::string, std::uint32_t>>(M.label_index);
  auto th = std::make_shared<TorusCharacter>(theta);
  mod.elem_act = [Gc, labels, index, th](const Mat& g, std::uint32_t b) {
    Mat rep = Gc->coset_representative((*labels)[b]);
    auto nf = Gc->bruhat_decompose(g * rep);
    chevalley::CosetLabel lab = Gc->coset_index(nf.u * Gc->weyl_representative(nf.w));
    Scalar c = th->eval_torus(nf.t);
    SparseVec out;
    if (!c.is_zero()) out.t.emplace_back(index->at(lab.key()), c);
    return out;
  };
  mod.gen_act.resize(M.G->gens().size());
  for (std::uint32_t gi = 0; gi < M.G->gens().size(); ++gi) {
    mod.gen_act[gi].resize(mod.dim());
    for (std::uint32_t b = 0; b < mod.dim(); ++b)
      mod.gen_act[gi][b] = mod.elem_act(M.G->gens()[gi], b);
  }
  mod.check_welldefined();
  return M;
}

// ---- eta and c vectors ------------------------------------------------------------

SparseVec eta_vector(const PrincipalSeries& Mtr, const std::vector<std::uint32_t>& J) {
  if (!Mtr.theta.is_trivial()) throw input_error("eta lives in M(tr)");
  const auto W = Mtr.Gc->weyl_group();
  SparseVec v;
  // enumerate W_J by closure over the generators in J
  std::vector<std::uint32_t> elems{W->index_of(W->identity())};
  std::vector<bool> seen(W->size(), false);
  seen[elems[0]] = true;
  for (std::uint32_t head = 0; head < elems.size(); ++head)
    for (auto s : J) {
      std::uint32_t nxt = W->right_mult(elems[head], s);
      if (!seen[nxt]) {
        seen[nxt] = true;
        elems.push_back(nxt);
      }
    }
  for (auto wi : elems) {
    std::int64_t sign = (W->length_of(wi) % 2) ? -1 : 1;
    v.t.emplace_back(Mtr.index_of_weyl(W->element(wi)), Mtr.module.F.from_int(sign));
  }
  std::sort(v.t.begin(), v.t.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

SparseVec c_vector(const PrincipalSeries& Mtr, const weyl::WElement& w) {
  if (!Mtr.theta.is_trivial()) throw input_error("c_w lives in M(tr)");
  const auto W = Mtr.Gc->weyl_group();
  const std::uint32_t wi = W->index_of(w);
  SparseVec v;
  for (std::uint32_t y = 0; y < W->size(); ++y) {
    if (!W->bruhat_leq_idx(y, wi)) continue;
    std::int64_t sign = (W->length_of(y) % 2) ? -1 : 1;
    std::int64_t coeff = sign * W->kl(y, wi).eval_one();
    if (!coeff) continue;
    v.t.emplace_back(Mtr.index_of_weyl(W->element(y)), Mtr.module.F.from_int(coeff));
  }
  std::sort(v.t.begin(), v.t.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

modrep::SubmoduleBasis m_tr_J(const PrincipalSeries& Mtr, const std::vector<std::uint32_t>& J) {
  auto basis = modrep::spin(Mtr.module, {eta_vector(Mtr, J)});
  if (!modrep::is_generator_closed(Mtr.module, basis.span))
    throw internal_error("spun submodule is not closed");
  return basis;
}

// ---- Steinberg ---------------------------------------------------------------------

SteinbergModule steinberg(const GroupSpec& spec, const CoeffField& F) {
  SteinbergModule St;
  St.ambient = build_M_theta(spec, TorusCharacter::trivial(spec, F));
  const auto field = spec.field();
  const std::uint64_t Q = field->order();
  const std::uint32_t nroots = spec.positive_root_count();
  // all of U in lexicographic coordinate order
  std::vector<std::uint64_t> idx(nroots, 0);
  std::vector<std::uint32_t> all_J;
  for (std::uint32_t s = 1; s < spec.n; ++s) all_J.push_back(s);
  SparseVec eta = eta_vector(St.ambient, all_J);
  std::vector<SparseVec> basis;
  std::vector<std::string> labels;
  while (true) {
    std::vector<FieldElement> coords;
    for (std::uint32_t k = 0; k < nroots; ++k) coords.push_back(field->element_by_index(idx[k]));
    Mat u = St.ambient.Gc->from_unipotent_coords(coords);
    St.u_elements.push_back(u);
    basis.push_back(St.ambient.module.act_elem(u, eta));
    std::string lab = "u";
    for (std::uint32_t k = 0; k < nroots; ++k) lab += "_" + std::to_string(idx[k]);
    labels.push_back(lab);
    std::uint32_t k = 0;
    while (k < nroots) {
      if (++idx[k] < Q) break;
      idx[k] = 0;
      ++k;
    }
    if (k == nroots) break;
  }
  St.module = modrep::submodule_on_basis(St.ambient.module, basis, labels,
                                         "St[" + spec.str() + "]");
  return St;
}

mpz_class poincare_sum(std::uint64_t q, std::uint32_t a, const weyl::CoxPtr& W) {
  mpz_class Q = static_cast<unsigned long>(nt::pow_u64(q, a));
  mpz_class total = 0;
  for (std::uint32_t i = 0; i < W->size(); ++i) {
    mpz_class term;
    mpz_pow_ui(term.get_mpz_t(), Q.get_mpz_t(), W->length_of(i));
    total += term;
  }
  return total;
}

bool steinberg_criterion(std::uint64_t ell, std::uint64_t q, std::uint32_t a,
                         const weyl::CoxPtr& W) {
  if (ell == 0) return true;
  if (!nt::is_prime(ell)) throw input_error("characteristic must be zero or prime");
  mpz_class sum = poincare_sum(q, a, W);
  return !mpz_divisible_ui_p(sum.get_mpz_t(), static_cast<unsigned long>(ell));
}

// ---- tensor identity -----------------------------------------------------------------

TensorIdentityReport tensor_identity_check(const GroupSpec& spec, const TorusCharacter& theta) {
  TensorIdentityReport rep;
  rep.spec = spec.str();
  rep.level = spec.level;
  rep.field = theta.field().str();
  auto M = build_M_theta(spec, theta);
  auto St = steinberg(spec, theta.field());
  auto T = modrep::tensor_module(M.module, St.module);

  auto Tsub = grp::standard_subgroup(M.Gc, grp::StdSubgroup::T);
  auto th = theta;
  auto ktheta = modrep::one_dim_module(
      Tsub, theta.field(), [th](const Mat& t) { return th.eval_torus(t); }, "k_theta");
  auto ind = modrep::induce(M.G, Tsub, ktheta, modrep::Realization::Tensor);

  rep.dim_M = M.module.dim();
  rep.dim_St = St.module.dim();
  rep.index_T = ind.dim();
  rep.dims_ok = static_cast<std::uint64_t>(rep.dim_M) * rep.dim_St == rep.index_T;

  // the map g 1_theta -> g (1_theta tensor eta): columns are the orbit of the
  // seed vector under the coset representatives
  auto cosets = grp::left_cosets(*M.G, *Tsub);
  const std::uint32_t seed = M.index_of_weyl(M.Gc->weyl_group()->identity()) * St.module.dim() + 0;
  linalg::Mat L = linalg::mat_zero(T.F, T.dim(), ind.dim());
  for (std::uint32_t c = 0; c < cosets.count(); ++c) {
    SparseVec img = T.act_elem(M.G->elem(cosets.reps[c]), sv_unit(seed, T.F.one()));
    for (const auto& [i, coeff] : img.t) L[i][c] = coeff;
  }
  bool ok = T.dim() == ind.dim() && linalg::mat_inverse(T.F, L).has_value();
  if (ok) {
    for (std::uint32_t gi = 0; gi < M.G->gens().size() && ok; ++gi) {
      auto lhs = linalg::mat_mul(T.F, L, ind.gen_matrix(gi));
      auto rhs = linalg::mat_mul(T.F, T.gen_matrix(gi), L);
      for (std::uint32_t i = 0; i < T.dim() && ok; ++i)
        for (std::uint32_t j = 0; j < ind.dim(); ++j)
          if (!(lhs[i][j] == rhs[i][j])) {
            ok = false;
            break;
          }
    }
  }
  rep.witness_ok = ok;
  return rep;
}

std::string TensorIdentityReport::json() const {
  std::ostringstream os;
  os << "{\"schema\":1,\"theorem\":\"tensor_identity\",\"spec\":\"" << spec
     << "\",\"level\":" << level << ",\"field\":\"" << field << "\",\"dim_M\":" << dim_M
     << ",\"dim_St\":" << dim_St << ",\"index_T\":" << index_T
     << ",\"dims_ok\":" << (dims_ok ? "true" : "false")
     << ",\"verdict\":" << (witness_ok && dims_ok ? "true" : "false") << ",\"caveats\":[]}";
  return os.str();
}

// ---- torus-stable lines -----------------------------------------------------------------

TStableLinesReport t_stable_lines(const PrincipalSeries& M) {
  TStableLinesReport rep;
  const auto W = M.Gc->weyl_group();
  rep.weyl_count = W->size();
  auto Tsub = grp::standard_subgroup(M.Gc, grp::StdSubgroup::T);
  if (Tsub->size() == 1) {
    rep.torus_trivial = true;
    rep.label_lines = M.module.dim();
    rep.extra_lines = M.module.dim() > rep.weyl_count;
    return rep;
  }
  // basis lines stable under every torus generator
  std::vector<bool> stable(M.module.dim(), true);
  for (std::uint32_t gi = 0; gi < Tsub->gens().size(); ++gi) {
    for (std::uint32_t b = 0; b < M.module.dim(); ++b) {
      SparseVec v = M.module.act_elem(Tsub->gens()[gi], sv_unit(b, M.module.F.one()));
      if (!(v.t.size() == 1 && v.t[0].first == b)) stable[b] = false;
    }
  }
  for (std::uint32_t b = 0; b < M.module.dim(); ++b)
    if (stable[b]) ++rep.label_lines;

  // full joint eigenspace decomposition against the character table of T
  const auto& TT = chartab::character_table(Tsub);
  CoeffField J = M.module.F.join(TT.F);
  const auto& cls = Tsub->classes();
  std::uint32_t total = 0;
  for (std::uint32_t t = 0; t < TT.irr_count(); ++t) {
    // stack (rho(gen) - psi(gen) I) and take the common nullspace
    const std::uint32_t d = M.module.dim();
    linalg::Mat sys = linalg::mat_zero(J, d * static_cast<std::uint32_t>(Tsub->gens().size()), d);
    for (std::uint32_t gi = 0; gi < Tsub->gens().size(); ++gi) {
      Scalar psi = J.coerce(TT.values[t][cls.class_of[Tsub->index_of(Tsub->gens()[gi])]]);
      linalg::Mat rho = M.module.matrix_of(Tsub->gens()[gi]);
      for (std::uint32_t i = 0; i < d; ++i)
        for (std::uint32_t j = 0; j < d; ++j) {
          Scalar v = J.coerce(rho[i][j]);
          if (i == j) v = v - psi;
          sys[gi * d + i][j] = v;
        }
    }
    auto null = linalg::mat_nullspace(J, sys);
    std::uint32_t dim_e = static_cast<std::uint32_t>(null.size());
    if (dim_e) rep.eigenspace_dims.push_back(dim_e);
    total += dim_e;
    if (dim_e >= 2) rep.extra_lines = true;
    if (dim_e == 1) {
      // an eigenline supported on more than one label is an extra stable line
      std::uint32_t support = 0;
      for (const auto& x : null[0])
        if (!x.is_zero()) ++support;
      if (support > 1) rep.extra_lines = true;
    }
  }
  if (total != M.module.dim())
    throw internal_error("torus eigenspace dimensions do not add up");
  return rep;
}

std::string TStableLinesReport::json() const {
  std::ostringstream os;
  os << "{\"schema\":1,\"theorem\":\"t_stable_lines\",\"weyl_count\":" << weyl_count
     << ",\"label_lines\":" << label_lines
     << ",\"torus_trivial\":" << (torus_trivial ? "true" : "false")
     << ",\"extra_lines\":" << (extra_lines ? "true" : "false")
     << ",\"caveats\":[\"finite_level\"]}";
  return os.str();
}

// ---- E_J ---------------------------------------------------------------------------------

namespace {
std::vector<std::vector<std::uint32_t>> strict_supersets_of(
    const std::vector<std::uint32_t>& J, std::uint32_t rank) {
  // immediate supersets J + {s}; saturation below adds the rest
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t s = 1; s <= rank; ++s) {
    if (std::find(J.begin(), J.end(), s) != J.end()) continue;
    auto K = J;
    K.push_back(s);
    std::sort(K.begin(), K.end());
    out.push_back(std::move(K));
  }
  return out;
}
} // namespace

EJData e_j(const PrincipalSeries& Mtr, const std::vector<std::uint32_t>& J) {
  const std::uint32_t rank = Mtr.Gc->weyl_group()->rank();
  auto MJ = m_tr_J(Mtr, J);
  // M(tr)'_J: sum of the immediate-superset submodules, saturated upward
  linalg::SpanSolver prime(Mtr.module.F);
  std::vector<std::vector<std::uint32_t>> frontier = strict_supersets_of(J, rank);
  std::vector<std::string> seen;
  while (!frontier.empty()) {
    std::vector<std::vector<std::uint32_t>> next;
    for (const auto& K : frontier) {
      std::string key;
      for (auto s : K) key += std::to_string(s) + ",";
      if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
      seen.push_back(key);
      for (const auto& row : m_tr_J(Mtr, K).span.echelon_rows()) prime.insert(row);
      for (auto& K2 : strict_supersets_of(K, rank)) next.push_back(std::move(K2));
    }
    frontier = std::move(next);
  }

  // express M'_J inside the basis of M_J, then take the quotient there
  auto basis_rows = MJ.span.echelon_rows();
  std::vector<std::string> sublabels;
  for (std::uint32_t i = 0; i < basis_rows.size(); ++i)
    sublabels.push_back("m" + std::to_string(i));
  modrep::Module SJ = modrep::submodule_on_basis(Mtr.module, basis_rows, sublabels,
                                                 "M(tr)_J");
  linalg::SpanSolver expressor(Mtr.module.F, true);
  for (const auto& row : basis_rows) expressor.insert(row);
  linalg::SpanSolver prime_in_SJ(Mtr.module.F);
  for (const auto& row : prime.echelon_rows()) {
    auto coords = expressor.express(row);
    if (!coords) throw internal_error("M'_J does not sit inside M_J");
    SparseVec v;
    for (std::uint32_t k = 0; k < coords->size(); ++k)
      if (!(*coords)[k].is_zero()) v.t.emplace_back(k, (*coords)[k]);
    prime_in_SJ.insert(v);
  }

  EJData out;
  out.dim_MJ = MJ.span.dim();
  out.dim_Mprime = prime_in_SJ.dim();
  out.E = modrep::quotient_module(SJ, prime_in_SJ, "E_J");
  auto expr = std::make_shared<linalg::SpanSolver>(std::move(expressor));
  auto prime_ptr = std::make_shared<linalg::SpanSolver>(std::move(prime_in_SJ));
  // remap of the quotient: recompute keep positions
  std::vector<std::uint32_t> keep;
  for (std::uint32_t i = 0; i < SJ.dim(); ++i)
    if (!prime_ptr->has_pivot(i)) keep.push_back(i);
  auto keep_ptr = std::make_shared<std::vector<std::uint32_t>>(keep);
  out.project = [expr, prime_ptr, keep_ptr](const SparseVec& ambient) {
    auto coords = expr->express(ambient);
    if (!coords) throw input_error("vector is not in M(tr)_J");
    SparseVec v;
    for (std::uint32_t k = 0; k < coords->size(); ++k)
      if (!(*coords)[k].is_zero()) v.t.emplace_back(k, (*coords)[k]);
    SparseVec red = prime_ptr->reduce(v);
    SparseVec mapped;
    for (const auto& [i, c] : red.t) {
      auto it = std::lower_bound(keep_ptr->begin(), keep_ptr->end(), i);
      if (it == keep_ptr->end() || *it != i) throw internal_error("projection hit a pivot");
      mapped.t.emplace_back(static_cast<std::uint32_t>(it - keep_ptr->begin()), c);
    }
    return mapped;
  };
  return out;
}

EJDistinguishReport distinguish_e_j(const PrincipalSeries& Mtr,
                                    const std::vector<std::uint32_t>& J) {
  EJDistinguishReport rep;
  rep.spec = Mtr.spec.str();
  rep.level = Mtr.spec.level;
  rep.field = Mtr.module.F.str();
  rep.J = J;
  auto data = e_j(Mtr, J);
  const auto W = Mtr.Gc->weyl_group();
  SparseVec cbar = data.project(c_vector(Mtr, W->longest_element(J)));
  if (cbar.empty()) throw internal_error("cbar vanishes in E_J");
  rep.conditions_hold = true;
  const auto field = Mtr.spec.field();
  for (std::uint32_t i = 1; i <= W->rank(); ++i) {
    const bool in_J = std::find(J.begin(), J.end(), i) != J.end();
    Mat ni = Mtr.Gc->weyl_representative(W->generator(i));
    SparseVec ni_c = data.E.act_elem(ni, cbar);
    bool acts_minus = linalg::sv_equal(ni_c, cbar.scaled(Mtr.module.F.from_int(-1)));
    bool fixes = true;
    for (std::uint64_t ci = 1; ci < field->order(); ++ci) {
      Mat u = Mtr.Gc->root_element(chevalley::simple_root(i), field->element_by_index(ci));
      if (!linalg::sv_equal(data.E.act_elem(u, cbar), cbar)) {
        fixes = false;
        break;
      }
    }
    std::ostringstream os;
    os << "s" << i << ": n acts by -1: " << (acts_minus ? "yes" : "no")
       << ", U fixes: " << (fixes ? "yes" : "no");
    rep.detail.push_back(os.str());
    if (acts_minus != in_J) rep.conditions_hold = false;
    if (fixes != !in_J) rep.conditions_hold = false;
  }
  return rep;
}

std::string EJDistinguishReport::json() const {
  std::ostringstream os;
  os << "{\"schema\":1,\"theorem\":\"e_j_conditions\",\"spec\":\"" << spec
     << "\",\"level\":" << level << ",\"field\":\"" << field << "\",\"J\":[";
  for (size_t i = 0; i < J.size(); ++i) {
    if (i) os << ",";
    os << J[i];
  }
  os << "],\"verdict\":" << (conditions_hold ? "true" : "false") << ",\"detail\":[";
  for (size_t i = 0; i < detail.size(); ++i) {
    if (i) os << ",";
    os << "\"" << detail[i] << "\"";
  }
  os << "],\"caveats\":[\"finite_level\"]}";
  return os.str();
}

// ---- W_theta and the composition bound ------------------------------------------------

std::vector<weyl::WElement> w_theta(const GroupSpec& spec, const TorusCharacter& theta) {
  auto W = spec.weyl_group();
  std::vector<weyl::WElement> out;
  for (std::uint32_t wi = 0; wi < W->size(); ++wi) {
    auto w = W->element(wi);
    if (theta.conjugate(w).equals(theta)) out.push_back(w);
  }
  return out;
}

CompositionBoundReport composition_bound_check(const GroupSpec& spec,
                                               const TorusCharacter& theta) {
  CompositionBoundReport rep;
  rep.spec = spec.str();
  rep.level = spec.level;
  rep.field = theta.field().str();
  rep.w_theta_order = static_cast<std::uint32_t>(w_theta(spec, theta).size());
  auto M = build_M_theta(spec, theta);
  rep.length = modrep::composition_length(M.module);
  rep.bound_holds = rep.length <= rep.w_theta_order;
  return rep;
}

std::string CompositionBoundReport::json() const {
  std::ostringstream os;
  os << "{\"schema\":1,\"theorem\":\"composition_bound\",\"spec\":\"" << spec
     << "\",\"level\":" << level << ",\"field\":\"" << field << "\",\"w_theta\":" << w_theta_order
     << ",\"length\":" << length << ",\"verdict\":" << (bound_holds ? "true" : "false")
     << ",\"caveats\":[]}";
  return os.str();
}

SocleHeadReport socle_head_generators(const GroupSpec& spec, const TorusCharacter& theta,
                                      const std::vector<std::uint32_t>& J) {
  // hypothesis: W_theta is the standard parabolic subgroup W_J
  auto W = spec.weyl_group();
  {
    auto wt = w_theta(spec, theta);
    std::vector<bool> seen(W->size(), false);
    std::vector<std::uint32_t> stack{W->index_of(W->identity())};
    seen[stack[0]] = true;
    for (std::uint32_t head = 0; head < stack.size(); ++head)
      for (auto s : J) {
        auto nxt = W->right_mult(stack[head], s);
        if (!seen[nxt]) {
          seen[nxt] = true;
          stack.push_back(nxt);
        }
      }
    if (wt.size() != stack.size()) throw input_error("W_theta is not W_J");
    for (const auto& w : wt)
      if (!seen[W->index_of(w)]) throw input_error("W_theta is not W_J");
  }
  auto M = build_M_theta(spec, theta);
  SocleHeadReport rep;
  rep.spec = spec.str();
  rep.level = spec.level;
  rep.field = theta.field().str();

  // socle generator: the alternating sum over W_J of w 1_theta
  SparseVec socle_seed;
  {
    std::vector<std::uint32_t> elems{W->index_of(W->identity())};
    std::vector<bool> seen(W->size(), false);
    seen[elems[0]] = true;
    for (std::uint32_t head = 0; head < elems.size(); ++head)
      for (auto s : J) {
        auto nxt = W->right_mult(elems[head], s);
        if (!seen[nxt]) {
          seen[nxt] = true;
          elems.push_back(nxt);
        }
      }
    for (auto wi : elems) {
      std::int64_t sign = (W->length_of(wi) % 2) ? -1 : 1;
      socle_seed.t.emplace_back(M.index_of_weyl(W->element(wi)), M.module.F.from_int(sign));
    }
    std::sort(socle_seed.t.begin(), socle_seed.t.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  auto socle = modrep::spin(M.module, {socle_seed});
  rep.socle_dim = socle.span.dim();
  {
    std::vector<std::string> labs;
    for (std::uint32_t i = 0; i < rep.socle_dim; ++i) labs.push_back("s" + std::to_string(i));
    auto sub = modrep::submodule_on_basis(M.module, socle.span.echelon_rows(), labs, "socle");
    rep.socle_irreducible = modrep::is_irreducible(sub).irreducible;
  }

  // head: the span generated by (s - e) 1_theta for s in J spins to a
  // maximal submodule; its codimension is the head dimension
  std::vector<SparseVec> seeds;
  const std::uint32_t one_idx = M.index_of_weyl(W->identity());
  for (auto s : J) {
    Mat ns = M.Gc->weyl_representative(W->generator(s));
    SparseVec v = M.module.act_elem(ns, sv_unit(one_idx, M.module.F.one()));
    v = sv_add_scaled(v, sv_unit(one_idx, M.module.F.one()), M.module.F.from_int(-1));
    if (!v.empty()) seeds.push_back(v);
  }
  if (seeds.empty()) {
    rep.max_submodule_dim = 0;
    rep.head_dim = M.module.dim();
    rep.head_irreducible = modrep::is_irreducible(M.module).irreducible;
  } else {
    auto maxsub = modrep::spin(M.module, seeds);
    rep.max_submodule_dim = maxsub.span.dim();
    auto quot = modrep::quotient_module(M.module, maxsub.span, "head");
    rep.head_dim = quot.dim();
    rep.head_irreducible = modrep::is_irreducible(quot).irreducible;
  }
  return rep;
}

std::string SocleHeadReport::json() const {
  std::ostringstream os;
  os << "{\"schema\":1,\"theorem\":\"socle_head\",\"spec\":\"" << spec
     << "\",\"level\":" << level << ",\"field\":\"" << field << "\",\"socle_dim\":" << socle_dim
     << ",\"socle_irreducible\":" << (socle_irreducible ? "true" : "false")
     << ",\"max_submodule_dim\":" << max_submodule_dim << ",\"head_dim\":" << head_dim
     << ",\"head_irreducible\":" << (head_irreducible ? "true" : "false")
     << ",\"verdict\":" << ((socle_irreducible && head_irreducible) ? "true" : "false")
     << ",\"caveats\":[]}";
  return os.str();
}

bool parabolic_factorization_check(const GroupSpec& spec, const TorusCharacter& theta,
                                   const std::vector<std::uint32_t>& J) {
  auto M = build_M_theta(spec, theta);
  auto Gc = M.Gc;
  auto B = grp::standard_subgroup(Gc, grp::StdSubgroup::B);
  auto P = grp::standard_parabolic(Gc, J);
  auto th = theta;
  auto ktheta = modrep::one_dim_module(
      B, theta.field(), [th](const Mat& b) { return th.eval_borel(b); }, "k_theta");
  auto ML = modrep::induce(P, B, ktheta, modrep::Realization::Tensor);
  // the unipotent radical of P_J acts trivially on the Levi series
  for (const auto& [name, g] : Gc->generators()) {
    if (name[0] != 'u') continue;
    // test only radical generators: those outside the Levi block structure
    bool in_levi = false;
    for (auto j : J)
      if (name == "u" + std::to_string(j) || name.rfind("u" + std::to_string(j) + "_", 0) == 0)
        in_levi = true;
    if (in_levi) continue;
    for (std::uint32_t b = 0; b < ML.dim(); ++b) {
      SparseVec v = ML.act_elem(g, sv_unit(b, ML.F.one()));
      if (!(v.t.size() == 1 && v.t[0].first == b && v.t[0].second.is_one())) return false;
    }
  }
  auto ind = modrep::induce(M.G, P, ML, modrep::Realization::Tensor);
  return modrep::iso_witness(ind, M.module).has_value();
}

std::vector<std::uint32_t> descent_class(const weyl::CoxPtr& W,
                                         const std::vector<std::uint32_t>& J) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t wi = 0; wi < W->size(); ++wi) {
    bool ok = true;
    for (std::uint32_t s = 1; s <= W->rank() && ok; ++s) {
      bool desc = W->length_of(W->right_mult(wi, s)) < W->length_of(wi);
      bool in_J = std::find(J.begin(), J.end(), s) != J.end();
      if (desc != in_J) ok = false;
    }
    if (ok) out.push_back(wi);
  }
  return out;
}

SparseVec promote(const PrincipalSeries& from, const PrincipalSeries& to, const SparseVec& v) {
  if (!(from.spec.at_level(1) == to.spec.at_level(1)))
    throw input_error("promotion needs the same group family");
  auto emb = fields::TowerEmbedding::get(from.spec.field(), to.spec.field());
  SparseVec out;
  for (const auto& [b, c] : v.t) {
    chevalley::CosetLabel lab = from.labels[b];
    for (auto& x : lab.coords) x = emb.apply(x);
    out.t.emplace_back(to.index_of_label(lab), to.module.F.coerce(c));
  }
  std::sort(out.t.begin(), out.t.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

// ---- rule-based Steinberg ------------------------------------------------------------

RankOneFactorization rank_one_factorization(const chevalley::Group& G, std::uint32_t i,
                                            const fields::FieldElement& c) {
  if (c.is_zero()) throw input_error("rank-one factorization needs a nonzero coordinate");
  const auto F = G.field();
  Mat ni = G.weyl_representative(G.weyl_group()->generator(i));
  Mat m = ni * G.root_element(chevalley::simple_root(i), c) * ni.inverse();
  // inside the rank-one subgroup: m = eps(a) n_i diag(t1, t2) eps(b); matching
  // entries of the 2x2 block gives a, b, t1, t2 uniquely
  FieldElement m11 = m.at(i - 1, i - 1), m12 = m.at(i - 1, i);
  FieldElement m21 = m.at(i, i - 1), m22 = m.at(i, i);
  if (m21.is_zero()) throw internal_error("rank-one block is not in the big cell");
  FieldElement a = m11 * m21.inverse();
  FieldElement b = m22 * m21.inverse();
  FieldElement t1 = m21;
  FieldElement t2 = a * t1 * b - m12;
  RankOneFactorization out;
  out.x = G.root_element(chevalley::simple_root(i), a);
  out.y = G.root_element(chevalley::simple_root(i), b);
  Mat t = G.identity();
  t.set(i - 1, i - 1, t1);
  t.set(i, i, t2);
  out.t = t;
  if (!(out.x * ni * out.t * out.y == m)) throw internal_error("rank-one recomposition failed");
  return out;
}

RuleSteinberg rule_steinberg(const GroupSpec& spec, const CoeffField& F) {
  if (spec.level != 1) throw input_error("rule-based Steinberg works at level 1");
  RuleSteinberg St;
  St.spec = spec;
  St.Gc = chevalley::group(spec);
  St.G = level_group(spec);
  const auto field = spec.field();
  const std::uint64_t Q = field->order();
  const std::uint32_t nroots = spec.positive_root_count();
  std::vector<std::uint64_t> idx(nroots, 0);
  while (true) {
    std::vector<FieldElement> coords;
    for (std::uint32_t k = 0; k < nroots; ++k) coords.push_back(field->element_by_index(idx[k]));
    Mat u = St.Gc->from_unipotent_coords(coords);
    St.u_index.emplace(u.key(), static_cast<std::uint32_t>(St.u_elements.size()));
    St.u_elements.push_back(std::move(u));
    std::uint32_t k = 0;
    while (k < nroots) {
      if (++idx[k] < Q) break;
      idx[k] = 0;
      ++k;
    }
    if (k == nroots) break;
  }

  modrep::Module& mod = St.module;
  mod.F = F;
  mod.group = St.G;
  mod.name = "freeSt[" + spec.str() + "]";
  for (std::uint32_t b = 0; b < St.u_elements.size(); ++b)
    mod.labels.push_back("u" + std::to_string(b));
  auto Gc = St.Gc;
  auto u_elements = std::make_shared<std::vector<Mat>>(St.u_elements);
  auto u_index = std::make_shared<std::map<std::string, std::uint32_t>>(St.u_index);
  auto FF = F;
  std::function<SparseVec(const Mat&, const SparseVec&)> act_rules =
      [Gc, u_elements, u_index, FF](const Mat& g, const SparseVec& v) -> SparseVec {
    // decompose g = u n_w t u' and act factor by factor
    auto nf = Gc->bruhat_decompose(g);
    SparseVec cur = v;
    auto apply_u = [&](const Mat& u0, const SparseVec& in) {
      SparseVec out;
      for (const auto& [b, c] : in.t) {
        std::uint32_t nb = u_index->at((u0 * (*u_elements)[b]).key());
        out = linalg::sv_add_scaled(out, sv_unit(nb, FF.one()), c);
      }
      return out;
    };
    auto apply_t = [&](const Mat& t, const SparseVec& in) {
      SparseVec out;
      Mat tinv = t.inverse();
      for (const auto& [b, c] : in.t) {
        std::uint32_t nb = u_index->at((t * (*u_elements)[b] * tinv).key());
        out = linalg::sv_add_scaled(out, sv_unit(nb, FF.one()), c);
      }
      return out;
    };
    auto apply_ni = [&](std::uint32_t i, const SparseVec& in) {
      SparseVec out;
      Mat ni = Gc->weyl_representative(Gc->weyl_group()->generator(i));
      Mat ni_inv = ni.inverse();
      for (const auto& [b, c] : in.t) {
        const Mat& u = (*u_elements)[b];
        fields::FieldElement x = u.at(i - 1, i);
        if (x.is_zero()) {
          // u in U'_i: n u xi = -(n u n^{-1}) xi
          Mat conj = ni * u * ni_inv;
          out = linalg::sv_add_scaled(out, sv_unit(u_index->at(conj.key()), FF.one()), -c);
        } else {
          Mat ui = Gc->root_element(chevalley::simple_root(i), x);
          Mat uprime = u * Gc->root_element(chevalley::simple_root(i), -x);
          Mat tilde = ni * uprime * ni_inv;
          auto fac = rank_one_factorization(*Gc, i, x);
          // n u'_i u_i xi = (n u'_i n^{-1}) (x - 1) xi
          Mat pos = tilde * fac.x;
          out = linalg::sv_add_scaled(out, sv_unit(u_index->at(pos.key()), FF.one()), c);
          out = linalg::sv_add_scaled(out, sv_unit(u_index->at(tilde.key()), FF.one()), -c);
          (void)ui;
        }
      }
      return out;
    };
    cur = apply_u(nf.uprime, cur);
    cur = apply_t(nf.t, cur);
    auto word = nf.w.reduced_word();
    for (size_t k = word.size(); k-- > 0;) cur = apply_ni(word[k], cur);
    cur = apply_u(nf.u, cur);
    return cur;
  };
  auto rules = std::make_shared<std::function<SparseVec(const Mat&, const SparseVec&)>>(act_rules);
  mod.elem_act = [rules, FF](const Mat& g, std::uint32_t b) {
    return (*rules)(g, sv_unit(b, FF.one()));
  };
  mod.gen_act.resize(St.G->gens().size());
  for (std::uint32_t gi = 0; gi < St.G->gens().size(); ++gi) {
    mod.gen_act[gi].resize(mod.dim());
    for (std::uint32_t b = 0; b < mod.dim(); ++b)
      mod.gen_act[gi][b] = mod.elem_act(St.G->gens()[gi], b);
  }
  return St;
}

SparseVec rule_action(const RuleSteinberg& St, const Mat& g, const SparseVec& v) {
  SparseVec out;
  for (const auto& [b, c] : v.t)
    out = linalg::sv_add_scaled(out, St.module.elem_act(g, b), c);
  return out;
}

} // namespace limitrep::principal
