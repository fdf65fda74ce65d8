#include "limitrep/towers.hpp"

#include <algorithm>
#include <sstream>

namespace limitrep::towers {

using linalg::SparseVec;
using linalg::sv_unit;

bool Tower::comparable(std::uint32_t i, std::uint32_t j) const {
  std::uint32_t a = spec.levels[i], b = spec.levels[j];
  if (spec.kind == TowerKind::ChevalleyLevels) return b % a == 0;
  return a <= b;
}

bool Tower::directed() const {
  for (std::uint32_t i = 0; i < spec.levels.size(); ++i)
    for (std::uint32_t j = 0; j < spec.levels.size(); ++j) {
      bool found = false;
      for (std::uint32_t r = 0; r < spec.levels.size(); ++r)
        if (comparable(i, r) && comparable(j, r)) found = true;
      if (!found) return false;
    }
  return true;
}

Mat Tower::embed(std::uint32_t from_pos, std::uint32_t to_pos, const Mat& g) const {
  if (!comparable(from_pos, to_pos)) throw input_error("levels are not comparable");
  if (spec.kind == TowerKind::ChevalleyLevels) {
    auto src = spec.base.at_level(spec.levels[from_pos]).field();
    auto tgt = spec.base.at_level(spec.levels[to_pos]).field();
    auto e = fields::TowerEmbedding::get(src, tgt);
    Mat out(tgt, g.size());
    for (std::uint32_t i = 0; i < g.size(); ++i)
      for (std::uint32_t j = 0; j < g.size(); ++j) out.set(i, j, e.apply(g.at(i, j)));
    return out;
  }
  // nested groups: top-left block, identity elsewhere
  const auto F = groups[to_pos]->field();
  const std::uint32_t nto = groups[to_pos]->mat_size();
  Mat out = Mat::identity(F, nto);
  for (std::uint32_t i = 0; i < g.size(); ++i)
    for (std::uint32_t j = 0; j < g.size(); ++j) out.set(i, j, g.at(i, j));
  return out;
}

Tower build_tower(const TowerSpec& spec) {
  Tower t;
  t.spec = spec;
  for (auto lvl : spec.levels) {
    switch (spec.kind) {
      case TowerKind::ChevalleyLevels: {
        auto s = spec.base.at_level(lvl);
        t.groups.push_back(principal::level_group(s));
        t.orders.push_back(s.order());
        break;
      }
      case TowerKind::CoxeterA: {
        auto W = weyl::CoxeterSystem::get(weyl::CoxFamily::A, lvl);
        t.groups.push_back(grp::FiniteGroup::from_coxeter(W));
        t.orders.push_back(mpz_class(static_cast<unsigned long>(W->order())));
        break;
      }
      case TowerKind::NestedLinear: {
        chevalley::GroupSpec s = spec.base;
        s.n = lvl;
        s.level = 1;
        t.groups.push_back(principal::level_group(s));
        t.orders.push_back(s.order());
        break;
      }
    }
  }
  if (!t.directed()) throw input_error("tower window is not directed");
  // embeddings are injective homomorphisms: spot-check on the generators
  for (std::uint32_t i = 0; i < t.groups.size(); ++i)
    for (std::uint32_t j = 0; j < t.groups.size(); ++j) {
      if (i == j || !t.comparable(i, j)) continue;
      const auto& gens = t.groups[i]->gens();
      for (size_t a = 0; a < gens.size(); ++a)
        for (size_t b = 0; b < gens.size(); ++b) {
          if (!(t.embed(i, j, gens[a] * gens[b]) ==
                t.embed(i, j, gens[a]) * t.embed(i, j, gens[b])))
            throw internal_error("tower embedding is not a homomorphism");
        }
      for (size_t a = 0; a < gens.size(); ++a)
        for (size_t b = a + 1; b < gens.size(); ++b)
          if (t.embed(i, j, gens[a]) == t.embed(i, j, gens[b]) && !(gens[a] == gens[b]))
            throw internal_error("tower embedding is not injective on generators");
    }
  return t;
}

SparseVec DirectSystem::apply_phi(std::uint32_t i, std::uint32_t j,
                                  const SparseVec& v) const {
  if (i == j) return v;
  auto it = phi.find({i, j});
  if (it == phi.end()) throw input_error("no transition for this pair");
  SparseVec out;
  for (const auto& [b, c] : v.t)
    out = linalg::sv_add_scaled(out, it->second[b], modules[j].F.coerce(c));
  return out;
}

SystemCheck check_direct_system(const DirectSystem& D) {
  SystemCheck chk;
  const std::uint32_t n = static_cast<std::uint32_t>(D.modules.size());
  auto note = [&](const std::string& s) {
    chk.ok = false;
    chk.violations.push_back(s);
  };
  // cocycle identities on comparable triples
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      for (std::uint32_t r = 0; r < n; ++r) {
        if (i == j || j == r) continue;
        if (!D.tower.comparable(i, j) || !D.tower.comparable(j, r)) continue;
        for (std::uint32_t b = 0; b < D.modules[i].dim(); ++b) {
          auto two_step = D.apply_phi(j, r, D.apply_phi(i, j, sv_unit(b, D.modules[i].F.one())));
          auto one_step = D.apply_phi(i, r, sv_unit(b, D.modules[i].F.one()));
          if (!linalg::sv_equal(two_step, one_step)) {
            std::ostringstream os;
            os << "cocycle fails at levels (" << D.tower.spec.levels[i] << ","
               << D.tower.spec.levels[j] << "," << D.tower.spec.levels[r] << ") basis " << b;
            note(os.str());
          }
        }
      }
  // equivariance on generators
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      if (i == j || !D.tower.comparable(i, j)) continue;
      const auto& gens = D.tower.groups[i]->gens();
      for (size_t gi = 0; gi < gens.size(); ++gi) {
        Mat gj = D.tower.embed(i, j, gens[gi]);
        for (std::uint32_t b = 0; b < D.modules[i].dim(); ++b) {
          auto lhs = D.apply_phi(i, j, D.modules[i].act_elem(gens[gi], sv_unit(b, D.modules[i].F.one())));
          auto rhs = D.modules[j].act_elem(gj, D.apply_phi(i, j, sv_unit(b, D.modules[i].F.one())));
          if (!linalg::sv_equal(lhs, rhs)) {
            std::ostringstream os;
            os << "equivariance fails: levels (" << D.tower.spec.levels[i] << "->"
               << D.tower.spec.levels[j] << "), generator " << D.tower.groups[i]->gen_names()[gi]
               << ", basis " << b;
            note(os.str());
          }
        }
      }
    }
  return chk;
}

LimitCertificate union_irreducibility_certificate(const DirectSystem& D) {
  LimitCertificate cert;
  cert.window = D.tower.spec.levels;
  auto chk = check_direct_system(D);
  cert.verdict = D.tower.directed();
  for (std::uint32_t i = 0; i < D.modules.size(); ++i) {
    LimitCertificate::PerLevel pl;
    pl.level = D.tower.spec.levels[i];
    pl.dim = D.modules[i].dim();
    pl.irreducible = modrep::is_irreducible(D.modules[i]).irreducible;
    pl.equivariant = true;
    // injectivity of the outgoing transitions
    for (std::uint32_t j = 0; j < D.modules.size(); ++j) {
      if (i == j || !D.tower.comparable(i, j)) continue;
      linalg::SpanSolver span(D.modules[j].F);
      std::uint32_t rank = 0;
      for (std::uint32_t b = 0; b < D.modules[i].dim(); ++b)
        if (span.insert(D.apply_phi(i, j, sv_unit(b, D.modules[i].F.one())))) ++rank;
      if (rank != D.modules[i].dim()) pl.equivariant = false;
    }
    if (!chk.ok) pl.equivariant = false;
    if (!pl.irreducible || !pl.equivariant) cert.verdict = false;
    cert.per_level.push_back(pl);
  }
  return cert;
}

std::string LimitCertificate::json() const {
  std::ostringstream os;
  os << "{\"schema\":1,\"lemma\":\"" << lemma << "\",\"window\":[";
  for (size_t i = 0; i < window.size(); ++i) {
    if (i) os << ",";
    os << window[i];
  }
  os << "],\"per_level\":[";
  for (size_t i = 0; i < per_level.size(); ++i) {
    if (i) os << ",";
    os << "{\"level\":" << per_level[i].level << ",\"dim\":" << per_level[i].dim
       << ",\"irreducible\":" << (per_level[i].irreducible ? "true" : "false")
       << ",\"equivariant\":" << (per_level[i].equivariant ? "true" : "false") << "}";
  }
  os << "],\"verdict\":" << (verdict ? "true" : "false") << ",\"caveat\":\"" << caveat
     << "\"}";
  return os.str();
}

DirectSystem steinberg_system(const chevalley::GroupSpec& base,
                              const std::vector<std::uint32_t>& levels, const CoeffField& F) {
  DirectSystem D;
  TowerSpec ts;
  ts.kind = TowerKind::ChevalleyLevels;
  ts.base = base;
  ts.levels = levels;
  D.tower = build_tower(ts);
  std::vector<principal::SteinbergModule> sts;
  for (auto lvl : levels) sts.push_back(principal::steinberg(base.at_level(lvl), F));
  for (auto& st : sts) D.modules.push_back(st.module);
  for (std::uint32_t i = 0; i < levels.size(); ++i)
    for (std::uint32_t j = 0; j < levels.size(); ++j) {
      if (i == j || !D.tower.comparable(i, j)) continue;
      // u eta at the lower level goes to embed(u) eta at the higher level
      std::map<std::string, std::uint32_t> key_to_idx;
      for (std::uint32_t b = 0; b < sts[j].u_elements.size(); ++b)
        key_to_idx.emplace(sts[j].u_elements[b].key(), b);
      std::vector<SparseVec> cols;
      for (std::uint32_t b = 0; b < sts[i].u_elements.size(); ++b) {
        Mat em = D.tower.embed(i, j, sts[i].u_elements[b]);
        cols.push_back(sv_unit(key_to_idx.at(em.key()), F.one()));
      }
      D.phi.emplace(std::make_pair(i, j), std::move(cols));
    }
  return D;
}

DirectSystem nested_steinberg_system(const chevalley::GroupSpec& base,
                                     const std::vector<std::uint32_t>& ranks,
                                     const CoeffField& F) {
  DirectSystem D;
  TowerSpec ts;
  ts.kind = TowerKind::NestedLinear;
  ts.base = base;
  ts.levels = ranks;
  D.tower = build_tower(ts);
  std::vector<principal::RuleSteinberg> sts;
  for (auto n : ranks) {
    chevalley::GroupSpec s = base;
    s.n = n;
    s.level = 1;
    sts.push_back(principal::rule_steinberg(s, F));
  }
  for (auto& st : sts) D.modules.push_back(st.module);
  for (std::uint32_t i = 0; i < ranks.size(); ++i)
    for (std::uint32_t j = 0; j < ranks.size(); ++j) {
      if (i == j || !D.tower.comparable(i, j)) continue;
      std::vector<SparseVec> cols;
      for (std::uint32_t b = 0; b < sts[i].u_elements.size(); ++b) {
        Mat em = D.tower.embed(i, j, sts[i].u_elements[b]);
        cols.push_back(sv_unit(sts[j].u_index.at(em.key()), F.one()));
      }
      D.phi.emplace(std::make_pair(i, j), std::move(cols));
    }
  return D;
}

InducedTowerReport induced_tower_images(const chevalley::GroupSpec& base,
                                        const std::vector<std::uint32_t>& levels,
                                        const CoeffField& F) {
  InducedTowerReport rep;
  rep.levels = levels;
  TowerSpec ts;
  ts.kind = TowerKind::ChevalleyLevels;
  ts.base = base;
  ts.levels = levels;
  Tower tower = build_tower(ts);
  const std::uint32_t top = static_cast<std::uint32_t>(levels.size()) - 1;
  auto top_spec = base.at_level(levels[top]);
  auto Gc_top = chevalley::group(top_spec);
  auto G_top = principal::level_group(top_spec);
  auto B_top = grp::standard_subgroup(Gc_top, grp::StdSubgroup::B);
  auto ind = modrep::induce(G_top, B_top, modrep::trivial_module(B_top, F),
                            modrep::Realization::Tensor);

  for (std::uint32_t i = 0; i < levels.size(); ++i) {
    // Y_i: the G_i-submodule generated by the basis vectors over kG_i m
    std::vector<std::pair<std::string, Mat>> embedded;
    for (size_t a = 0; a < tower.groups[i]->gens().size(); ++a)
      embedded.emplace_back(tower.groups[i]->gen_names()[a],
                            tower.embed(i, top, tower.groups[i]->gens()[a]));
    // spin the seed 1 (x) m under the embedded generators only
    linalg::SpanSolver span(F);
    std::vector<SparseVec> queue{sv_unit(0, F.one())};
    span.insert(queue[0]);
    for (std::uint32_t head = 0; head < queue.size(); ++head) {
      for (const auto& [name, g] : embedded) {
        (void)name;
        SparseVec img = ind.act_elem(g, queue[head]);
        if (span.insert(img)) queue.push_back(img);
      }
    }
    rep.dims.push_back(span.dim());

    // package Y_i as a module over the level group and compare with the
    // induced module built at that level
    std::vector<std::string> labs;
    for (std::uint32_t k = 0; k < span.dim(); ++k) labs.push_back("y" + std::to_string(k));
    modrep::Module Y;
    {
      linalg::SpanSolver track(F, true);
      auto rows = span.echelon_rows();
      for (const auto& r : rows) track.insert(r);
      Y.F = F;
      Y.group = tower.groups[i];
      Y.labels = labs;
      Y.name = "Y" + std::to_string(levels[i]);
      Y.gen_act.resize(embedded.size());
      for (size_t gi = 0; gi < embedded.size(); ++gi) {
        Y.gen_act[gi].resize(span.dim());
        for (std::uint32_t b = 0; b < span.dim(); ++b) {
          SparseVec img = ind.act_elem(embedded[gi].second, rows[b]);
          auto coords = track.express(img);
          if (!coords) throw internal_error("level image is not closed");
          SparseVec out;
          for (std::uint32_t k = 0; k < coords->size(); ++k)
            if (!(*coords)[k].is_zero()) out.t.emplace_back(k, (*coords)[k]);
          Y.gen_act[gi][b] = std::move(out);
        }
      }
    }
    auto lvl_spec = base.at_level(levels[i]);
    auto Gc_i = chevalley::group(lvl_spec);
    auto G_i = principal::level_group(lvl_spec);
    auto B_i = grp::standard_subgroup(Gc_i, grp::StdSubgroup::B);
    auto ind_i = modrep::induce(G_i, B_i, modrep::trivial_module(B_i, F),
                                modrep::Realization::Tensor);
    rep.witness_ok.push_back(modrep::iso_witness(ind_i, Y).has_value());
  }
  rep.union_ok = rep.dims.back() == ind.dim();
  return rep;
}

std::string InducedTowerReport::json() const {
  std::ostringstream os;
  os << "{\"schema\":1,\"lemma\":\"induced_tower_images\",\"levels\":[";
  for (size_t i = 0; i < levels.size(); ++i) {
    if (i) os << ",";
    os << levels[i];
  }
  os << "],\"dims\":[";
  for (size_t i = 0; i < dims.size(); ++i) {
    if (i) os << ",";
    os << dims[i];
  }
  os << "],\"witness_ok\":[";
  for (size_t i = 0; i < witness_ok.size(); ++i) {
    if (i) os << ",";
    os << (witness_ok[i] ? "true" : "false");
  }
  os << "],\"union_ok\":" << (union_ok ? "true" : "false") << "}";
  return os.str();
}

} // namespace limitrep::towers
