#include "limitrep/modrep.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace limitrep::modrep {

using linalg::sv_add_scaled;
using linalg::sv_unit;

SparseVec Module::act_gen(std::uint32_t gi, const SparseVec& v) const {
  SparseVec out;
  for (const auto& [b, c] : v.t) out = sv_add_scaled(out, gen_act[gi][b], c);
  return out;
}

SparseVec Module::act_elem(const Mat& g, const SparseVec& v) const {
  if (elem_act) {
    SparseVec out;
    for (const auto& [b, c] : v.t) out = sv_add_scaled(out, elem_act(g, b), c);
    return out;
  }
  const auto& word = group->word_of(group->index_of(g));
  SparseVec out = v;
  for (size_t k = word.size(); k-- > 0;) out = act_gen(word[k], out);
  return out;
}

linalg::Mat Module::gen_matrix(std::uint32_t gi) const {
  linalg::Mat m = linalg::mat_zero(F, dim(), dim());
  for (std::uint32_t b = 0; b < dim(); ++b)
    for (const auto& [i, c] : gen_act[gi][b].t) m[i][b] = c;
  return m;
}

linalg::Mat Module::matrix_of(const Mat& g) const {
  linalg::Mat m = linalg::mat_zero(F, dim(), dim());
  for (std::uint32_t b = 0; b < dim(); ++b) {
    SparseVec col = act_elem(g, sv_unit(b, F.one()));
    for (const auto& [i, c] : col.t) m[i][b] = c;
  }
  return m;
}

std::vector<Scalar> Module::character() const {
  const auto& cls = group->classes();
  std::vector<Scalar> chi;
  chi.reserve(cls.rep.size());
  for (auto rep : cls.rep) {
    const Mat& g = group->elem(rep);
    Scalar tr = F.zero();
    for (std::uint32_t b = 0; b < dim(); ++b) {
      SparseVec col = elem_act ? elem_act(g, b) : act_elem(g, sv_unit(b, F.one()));
      for (const auto& [i, c] : col.t)
        if (i == b) tr = tr + c;
    }
    chi.push_back(tr);
  }
  return chi;
}

std::vector<Scalar> character_in(const Module& M, const CoeffField& F) {
  auto chi = M.character();
  std::vector<Scalar> out;
  out.reserve(chi.size());
  for (const auto& x : chi) out.push_back(F.coerce(x));
  return out;
}

void Module::check_welldefined(std::uint32_t samples) const {
  // identity acts as identity
  for (std::uint32_t b = 0; b < std::min<std::uint32_t>(dim(), 8); ++b) {
    SparseVec v = act_elem(group->identity(), sv_unit(b, F.one()));
    if (!(v.t.size() == 1 && v.t[0].first == b && v.t[0].second.is_one()))
      throw internal_error("identity does not act as identity on " + name);
  }
  // sampled relations: for random generator pairs, act(g)act(h) = act(gh)
  std::mt19937 rng(0x5eed + dim());
  const std::uint32_t ng = static_cast<std::uint32_t>(gen_act.size());
  if (!ng) return;
  for (std::uint32_t it = 0; it < samples; ++it) {
    std::uint32_t a = rng() % ng, b = rng() % ng;
    Mat gh = group->gens()[a] * group->gens()[b];
    for (std::uint32_t col = 0; col < std::min<std::uint32_t>(dim(), 4); ++col) {
      SparseVec lhs = act_gen(a, act_gen(b, sv_unit(col, F.one())));
      SparseVec rhs = act_elem(gh, sv_unit(col, F.one()));
      if (!linalg::sv_equal(lhs, rhs))
        throw internal_error("generator relation fails on " + name);
    }
  }
}

// ---- constructions ----------------------------------------------------------

Module trivial_module(const grp::GroupHandle& G, const CoeffField& F) {
  return one_dim_module(G, F, [F](const Mat&) { return F.one(); }, "trivial");
}

Module one_dim_module(const grp::GroupHandle& G, const CoeffField& F,
                      const std::function<Scalar(const Mat&)>& chi, std::string name) {
  Module M;
  M.F = F;
  M.group = G;
  M.labels = {"1"};
  M.name = std::move(name);
  M.gen_act.resize(G->gens().size());
  for (std::uint32_t gi = 0; gi < G->gens().size(); ++gi)
    M.gen_act[gi] = {SparseVec{{{0, chi(G->gens()[gi])}}}};
  M.elem_act = [F, chi](const Mat& g, std::uint32_t) {
    return SparseVec{{{0, chi(g)}}};
  };
  return M;
}

Module regular_module(const grp::GroupHandle& G, const CoeffField& F) {
  Module M;
  M.F = F;
  M.group = G;
  M.name = "regular[" + G->name() + "]";
  const std::uint32_t N = G->size();
  M.labels.resize(N);
  for (std::uint32_t i = 0; i < N; ++i) M.labels[i] = "g" + std::to_string(i);
  M.elem_act = [G, F](const Mat& g, std::uint32_t b) {
    std::uint32_t i = G->index_of(g * G->elem(b));
    return SparseVec{{{i, F.one()}}};
  };
  M.gen_act.resize(G->gens().size());
  for (std::uint32_t gi = 0; gi < G->gens().size(); ++gi) {
    M.gen_act[gi].resize(N);
    for (std::uint32_t b = 0; b < N; ++b) M.gen_act[gi][b] = M.elem_act(G->gens()[gi], b);
  }
  return M;
}

Module module_from_int_matrices(
    const grp::GroupHandle& G, const CoeffField& F,
    const std::vector<std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>>>& cols,
    std::uint32_t dim, std::string name) {
  if (cols.size() != G->gens().size()) throw input_error("generator count mismatch");
  Module M;
  M.F = F;
  M.group = G;
  M.name = std::move(name);
  M.labels.resize(dim);
  for (std::uint32_t i = 0; i < dim; ++i) M.labels[i] = "b" + std::to_string(i);
  M.gen_act.resize(cols.size());
  for (std::uint32_t gi = 0; gi < cols.size(); ++gi) {
    M.gen_act[gi].resize(dim);
    for (std::uint32_t b = 0; b < dim; ++b) {
      SparseVec v;
      for (auto [i, c] : cols[gi][b])
        if (c) v.t.emplace_back(i, F.from_int(c));
      std::sort(v.t.begin(), v.t.end(),
                [](const auto& a, const auto& b2) { return a.first < b2.first; });
      M.gen_act[gi][b] = std::move(v);
    }
  }
  return M;
}

// ---- induction --------------------------------------------------------------

Module induce(const grp::GroupHandle& G, const grp::GroupHandle& H, const Module& M,
              Realization realization) {
  if (M.group.get() != H.get()) throw input_error("induce: module is not over H");
  auto cosets = std::make_shared<grp::CosetDecomposition>(grp::left_cosets(*G, *H));
  const std::uint32_t nc = cosets->count();
  const std::uint32_t dm = M.dim();
  if (static_cast<std::uint64_t>(nc) * dm > bounds::solver())
    throw bound_error("induced module dimension beyond solver bound");
  Module I;
  I.F = M.F;
  I.group = G;
  I.name = std::string(realization == Realization::Tensor ? "ind_t[" : "ind_f[") + M.name + "]";
  I.labels.resize(static_cast<size_t>(nc) * dm);
  for (std::uint32_t c = 0; c < nc; ++c)
    for (std::uint32_t j = 0; j < dm; ++j)
      I.labels[c * dm + j] = "c" + std::to_string(c) + ":" + M.labels[j];
  auto Mcopy = std::make_shared<Module>(M);
  if (realization == Realization::Tensor) {
    I.elem_act = [G, cosets, Mcopy, dm](const Mat& g, std::uint32_t b) {
      const std::uint32_t c = b / dm, j = b % dm;
      Mat x = g * G->elem(cosets->reps[c]);
      std::uint32_t cp = cosets->coset_of[G->index_of(x)];
      Mat h = G->elem(cosets->reps[cp]).inverse() * x;
      SparseVec inner = Mcopy->act_elem(h, sv_unit(j, Mcopy->F.one()));
      SparseVec out;
      for (const auto& [i, coeff] : inner.t) out.t.emplace_back(cp * dm + i, coeff);
      return out;
    };
  } else {
    // finite-support functions f with f(gh) = h^{-1} f(g); the basis member
    // (c, j) is supported on the coset of rep_c with value m_j there
    I.elem_act = [G, cosets, Mcopy, dm](const Mat& g, std::uint32_t b) {
      const std::uint32_t c = b / dm, j = b % dm;
      Mat x = g * G->elem(cosets->reps[c]);
      std::uint32_t cp = cosets->coset_of[G->index_of(x)];
      // (g f)(rep_cp) = f(g^{-1} rep_cp) = htilde^{-1} m_j
      Mat htilde = G->elem(cosets->reps[c]).inverse() * g.inverse() * G->elem(cosets->reps[cp]);
      SparseVec inner = Mcopy->act_elem(htilde.inverse(), sv_unit(j, Mcopy->F.one()));
      SparseVec out;
      for (const auto& [i, coeff] : inner.t) out.t.emplace_back(cp * dm + i, coeff);
      return out;
    };
  }
  I.gen_act.resize(G->gens().size());
  for (std::uint32_t gi = 0; gi < G->gens().size(); ++gi) {
    I.gen_act[gi].resize(I.dim());
    for (std::uint32_t b = 0; b < I.dim(); ++b) I.gen_act[gi][b] = I.elem_act(G->gens()[gi], b);
  }
  return I;
}

linalg::Mat function_to_tensor_map(const Module& func, const Module& tens) {
  if (func.dim() != tens.dim()) throw input_error("realization dimension mismatch");
  // f goes to sum over coset representatives of rep_c tensor f(rep_c): on the
  // chosen bases this is the relabelling (c, j) -> (c, j)
  return linalg::mat_identity(func.F, func.dim());
}

Module restrict_module(const Module& M, const grp::GroupHandle& H) {
  Module R;
  R.F = M.F;
  R.group = H;
  R.labels = M.labels;
  R.name = "res[" + M.name + "->" + H->name() + "]";
  R.gen_act.resize(H->gens().size());
  for (std::uint32_t gi = 0; gi < H->gens().size(); ++gi) {
    R.gen_act[gi].resize(M.dim());
    for (std::uint32_t b = 0; b < M.dim(); ++b)
      R.gen_act[gi][b] = M.act_elem(H->gens()[gi], sv_unit(b, M.F.one()));
  }
  auto Mcopy = std::make_shared<Module>(M);
  R.elem_act = [Mcopy](const Mat& g, std::uint32_t b) {
    return Mcopy->act_elem(g, sv_unit(b, Mcopy->F.one()));
  };
  return R;
}

Module tensor_module(const Module& A, const Module& B) {
  if (A.group.get() != B.group.get()) throw input_error("tensor: different acting groups");
  if (!(A.F == B.F)) throw input_error("tensor: different coefficient fields");
  Module T;
  T.F = A.F;
  T.group = A.group;
  T.name = A.name + "(x)" + B.name;
  const std::uint32_t db = B.dim();
  T.labels.resize(static_cast<size_t>(A.dim()) * db);
  for (std::uint32_t i = 0; i < A.dim(); ++i)
    for (std::uint32_t j = 0; j < db; ++j)
      T.labels[i * db + j] = A.labels[i] + "(x)" + B.labels[j];
  auto Ac = std::make_shared<Module>(A);
  auto Bc = std::make_shared<Module>(B);
  T.elem_act = [Ac, Bc, db](const Mat& g, std::uint32_t b) {
    const std::uint32_t i = b / db, j = b % db;
    SparseVec va = Ac->act_elem(g, sv_unit(i, Ac->F.one()));
    SparseVec vb = Bc->act_elem(g, sv_unit(j, Bc->F.one()));
    SparseVec out;
    for (const auto& [ia, ca] : va.t)
      for (const auto& [jb, cb] : vb.t) out.t.emplace_back(ia * db + jb, ca * cb);
    std::sort(out.t.begin(), out.t.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
  };
  T.gen_act.resize(T.group->gens().size());
  for (std::uint32_t gi = 0; gi < T.group->gens().size(); ++gi) {
    T.gen_act[gi].resize(T.dim());
    for (std::uint32_t b = 0; b < T.dim(); ++b)
      T.gen_act[gi][b] = T.elem_act(T.group->gens()[gi], b);
  }
  return T;
}

// ---- submodules ---------------------------------------------------------------

SubmoduleBasis spin(const Module& M, const std::vector<SparseVec>& seeds) {
  SubmoduleBasis out{linalg::SpanSolver(M.F), seeds};
  std::vector<SparseVec> queue;
  for (const auto& s : seeds)
    if (out.span.insert(s)) queue.push_back(s);
  const std::uint32_t ng = static_cast<std::uint32_t>(M.gen_act.size());
  for (std::uint32_t head = 0; head < queue.size(); ++head) {
    SparseVec v = queue[head];
    for (std::uint32_t gi = 0; gi < ng; ++gi) {
      SparseVec img = M.act_gen(gi, v);
      if (out.span.insert(img)) queue.push_back(img);
    }
  }
  return out;
}

bool is_generator_closed(const Module& M, const linalg::SpanSolver& span) {
  for (const auto& row : span.rows()) {
    for (std::uint32_t gi = 0; gi < M.gen_act.size(); ++gi)
      if (!span.reduce(M.act_gen(gi, row)).empty()) return false;
    // also re-check against the echelonized rows themselves
  }
  return true;
}

Module submodule_on_basis(const Module& M, const std::vector<SparseVec>& basis,
                          std::vector<std::string> labels, std::string name) {
  linalg::SpanSolver span(M.F, true);
  for (const auto& v : basis)
    if (!span.insert(v)) throw input_error("submodule basis is dependent");
  Module S;
  S.F = M.F;
  S.group = M.group;
  S.name = std::move(name);
  S.labels = std::move(labels);
  if (S.labels.size() != basis.size()) throw input_error("label count mismatch");
  auto span_ptr = std::make_shared<linalg::SpanSolver>(std::move(span));
  auto basis_ptr = std::make_shared<std::vector<SparseVec>>(basis);
  auto Mc = std::make_shared<Module>(M);
  S.elem_act = [Mc, span_ptr, basis_ptr](const Mat& g, std::uint32_t b) {
    SparseVec img = Mc->act_elem(g, (*basis_ptr)[b]);
    auto coords = span_ptr->express(img);
    if (!coords) throw internal_error("submodule not closed under the action");
    SparseVec out;
    for (std::uint32_t k = 0; k < coords->size(); ++k)
      if (!(*coords)[k].is_zero()) out.t.emplace_back(k, (*coords)[k]);
    return out;
  };
  S.gen_act.resize(M.gen_act.size());
  for (std::uint32_t gi = 0; gi < M.gen_act.size(); ++gi) {
    S.gen_act[gi].resize(S.dim());
    for (std::uint32_t b = 0; b < S.dim(); ++b) {
      SparseVec img = M.act_gen(gi, (*basis_ptr)[b]);
      auto coords = span_ptr->express(img);
      if (!coords) throw internal_error("submodule not closed under a generator");
      SparseVec out;
      for (std::uint32_t k = 0; k < coords->size(); ++k)
        if (!(*coords)[k].is_zero()) out.t.emplace_back(k, (*coords)[k]);
      S.gen_act[gi][b] = std::move(out);
    }
  }
  return S;
}

Module quotient_module(const Module& M, const linalg::SpanSolver& sub, std::string name) {
  // canonical residue coordinates: the ambient labels that are not pivots
  std::vector<std::uint32_t> keep;
  for (std::uint32_t i = 0; i < M.dim(); ++i)
    if (!sub.has_pivot(i)) keep.push_back(i);
  std::vector<std::uint32_t> remap(M.dim(), UINT32_MAX);
  for (std::uint32_t k = 0; k < keep.size(); ++k) remap[keep[k]] = k;
  Module Q;
  Q.F = M.F;
  Q.group = M.group;
  Q.name = std::move(name);
  for (auto i : keep) Q.labels.push_back(M.labels[i] + "~");
  auto sub_ptr = std::make_shared<linalg::SpanSolver>(sub);
  auto keep_ptr = std::make_shared<std::vector<std::uint32_t>>(keep);
  auto remap_ptr = std::make_shared<std::vector<std::uint32_t>>(remap);
  auto Mc = std::make_shared<Module>(M);
  Q.elem_act = [Mc, sub_ptr, keep_ptr, remap_ptr](const Mat& g, std::uint32_t b) {
    SparseVec img = Mc->act_elem(g, linalg::sv_unit((*keep_ptr)[b], Mc->F.one()));
    SparseVec red = sub_ptr->reduce(img);
    SparseVec out;
    for (const auto& [i, c] : red.t) {
      if ((*remap_ptr)[i] == UINT32_MAX) throw internal_error("quotient residue hit a pivot");
      out.t.emplace_back((*remap_ptr)[i], c);
    }
    return out;
  };
  Q.gen_act.resize(M.gen_act.size());
  for (std::uint32_t gi = 0; gi < M.gen_act.size(); ++gi) {
    Q.gen_act[gi].resize(Q.dim());
    for (std::uint32_t b = 0; b < Q.dim(); ++b) {
      SparseVec img = M.act_gen(gi, linalg::sv_unit(keep[b], M.F.one()));
      SparseVec red = sub.reduce(img);
      SparseVec out;
      for (const auto& [i, c] : red.t) out.t.emplace_back(remap[i], c);
      Q.gen_act[gi][b] = std::move(out);
    }
  }
  return Q;
}

} // namespace limitrep::modrep
