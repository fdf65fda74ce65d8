#include "limitrep/borelreps.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace limitrep::borelreps {

using linalg::SparseVec;
using linalg::sv_unit;

// ---- characters of U --------------------------------------------------------

Scalar UCharacter::eval(const Mat& u) const {
  const auto field = spec.field();
  const std::uint64_t p = field->characteristic();
  auto Gc = chevalley::group(spec);
  auto coords = Gc->unipotent_coords(u);
  auto roots = chevalley::positive_roots(spec.n);
  std::uint32_t total = 0;
  for (size_t k = 0; k < roots.size(); ++k) {
    if (roots[k].height() != 1) continue;
    std::uint32_t j = roots[k].i; // simple root alpha_j
    total = static_cast<std::uint32_t>(
        (total + field->trace_to_prime(components[j - 1] * coords[k])) % p);
  }
  if (total == 0) return F.one();
  Scalar zp = F.root_of_unity(p);
  Scalar acc = F.one();
  for (std::uint32_t i = 0; i < total; ++i) acc = acc * zp;
  return acc;
}

bool UCharacter::nondegenerate() const {
  for (const auto& c : components)
    if (c.is_zero()) return false;
  return true;
}

std::string UCharacter::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < components.size(); ++i) {
    if (i) os << ",";
    os << components[i].index();
  }
  os << ")";
  return os.str();
}

std::vector<TorusOrbit> u_character_orbits(const GroupSpec& spec, const CoeffField& F) {
  const auto field = spec.field();
  const std::uint64_t Q = field->order();
  const std::uint32_t l = spec.n - 1;
  auto Gc = chevalley::group(spec);
  auto Tsub = grp::standard_subgroup(Gc, grp::StdSubgroup::T);
  const std::uint32_t torus_order = Tsub->size();

  // tuples indexed by element index, lexicographic
  std::vector<std::vector<std::uint64_t>> tuples;
  {
    std::vector<std::uint64_t> idx(l, 0);
    while (true) {
      tuples.push_back(idx);
      std::uint32_t k = 0;
      while (k < l) {
        if (++idx[k] < Q) break;
        idx[k] = 0;
        ++k;
      }
      if (k == l) break;
    }
  }
  auto tuple_key = [](const std::vector<std::uint64_t>& t) {
    std::string s;
    for (auto x : t) s += std::to_string(x) + ",";
    return s;
  };
  std::map<std::string, std::uint32_t> index;
  for (std::uint32_t i = 0; i < tuples.size(); ++i) index.emplace(tuple_key(tuples[i]), i);

  // action of t on the character tuple: c_j -> alpha_j(t)^{-1} c_j
  auto act = [&](const Mat& t, const std::vector<std::uint64_t>& tup) {
    std::vector<std::uint64_t> out(l);
    for (std::uint32_t j = 1; j <= l; ++j) {
      FieldElement alpha = t.at(j - 1, j - 1) * t.at(j, j).inverse();
      FieldElement c = field->element_by_index(tup[j - 1]);
      out[j - 1] = (alpha.inverse() * c).index();
    }
    return out;
  };

  std::vector<bool> seen(tuples.size(), false);
  std::vector<TorusOrbit> orbits;
  for (std::uint32_t i = 0; i < tuples.size(); ++i) {
    if (seen[i]) continue;
    // the enumeration is lexicographic, so the first unseen tuple is the
    // smallest representative of its orbit
    std::vector<std::uint32_t> orbit{i};
    seen[i] = true;
    std::uint32_t stab = 0;
    for (std::uint32_t ti = 0; ti < torus_order; ++ti) {
      auto img = index.at(tuple_key(act(Tsub->elem(ti), tuples[i])));
      if (img == i) ++stab;
      if (!seen[img]) {
        seen[img] = true;
        orbit.push_back(img);
      }
    }
    TorusOrbit o;
    o.rep.spec = spec;
    o.rep.F = F;
    for (std::uint32_t j = 0; j < l; ++j)
      o.rep.components.push_back(field->element_by_index(tuples[i][j]));
    o.size = static_cast<std::uint32_t>(orbit.size());
    o.stabilizer_order = stab;
    o.nondegenerate = o.rep.nondegenerate();
    if (static_cast<std::uint64_t>(o.size) * stab != torus_order)
      throw internal_error("orbit-stabilizer count failed");
    orbits.push_back(std::move(o));
  }
  return orbits;
}

std::string orbits_csv(const std::vector<TorusOrbit>& orbits) {
  std::ostringstream os;
  os << "orbit_rep,size,stabilizer_order\n";
  for (const auto& o : orbits)
    os << "\"" << o.rep.str() << "\"," << o.size << "," << o.stabilizer_order << "\n";
  return os.str();
}

// ---- little groups ------------------------------------------------------------

std::vector<LittleGroupRep> little_group_reps(const SemidirectData& data,
                                              const CoeffField& F) {
  const auto& G = *data.G;
  const auto& H = *data.H;
  const auto& A = *data.A;
  if (static_cast<std::uint64_t>(H.size()) * A.size() != G.size())
    throw input_error("not a semidirect decomposition");

  // unique factorization g = h a
  std::map<std::string, std::pair<std::uint32_t, std::uint32_t>> factor;
  for (std::uint32_t h = 0; h < H.size(); ++h)
    for (std::uint32_t a = 0; a < A.size(); ++a) {
      auto key = (H.elem(h) * A.elem(a)).key();
      if (!factor.emplace(key, std::make_pair(h, a)).second)
        throw input_error("factorization h*a not unique");
    }

  const auto& TA = chartab::character_table(data.A);
  for (auto d : TA.degrees)
    if (d != 1) throw input_error("A is not abelian");
  const auto& clsA = data.A->classes();

  // H-action on the characters of A: ^h chi (a) = chi(h^{-1} a h)
  const std::uint32_t nchi = TA.irr_count();
  auto act_on_char = [&](std::uint32_t h, std::uint32_t chi) {
    std::vector<Scalar> vals(clsA.rep.size(), TA.F.zero());
    Mat hinv = H.elem(h).inverse();
    for (std::uint32_t k = 0; k < clsA.rep.size(); ++k) {
      Mat moved = hinv * A.elem(clsA.rep[k]) * H.elem(h);
      vals[k] = TA.values[chi][A.class_of_mat(moved)];
    }
    for (std::uint32_t c2 = 0; c2 < nchi; ++c2) {
      bool same = true;
      for (std::uint32_t k = 0; k < vals.size() && same; ++k)
        if (!(vals[k] == TA.values[c2][k])) same = false;
      if (same) return c2;
    }
    throw internal_error("conjugated character not in the table");
  };

  std::vector<bool> seen(nchi, false);
  std::vector<LittleGroupRep> out;
  CoeffField FF = F.join(TA.F);
  std::uint32_t orbit_counter = 0;
  for (std::uint32_t chi = 0; chi < nchi; ++chi) {
    if (seen[chi]) continue;
    // orbit and stabilizer of chi
    std::vector<std::uint32_t> stab_elems;
    seen[chi] = true;
    for (std::uint32_t h = 0; h < H.size(); ++h) {
      std::uint32_t img = act_on_char(h, chi);
      if (img == chi) stab_elems.push_back(h);
      seen[img] = true;
    }
    // H_alpha as its own group, and G_alpha = A H_alpha
    std::vector<std::pair<std::string, Mat>> sgens;
    for (auto h : stab_elems) sgens.emplace_back("h" + std::to_string(h), H.elem(h));
    auto Halpha = grp::FiniteGroup::make("H_alpha", H.field(), H.mat_size(), sgens);
    std::vector<std::pair<std::string, Mat>> ggens = sgens;
    for (std::uint32_t gi = 0; gi < A.gens().size(); ++gi)
      ggens.emplace_back("a" + std::to_string(gi), A.gens()[gi]);
    auto Galpha = grp::FiniteGroup::make("G_alpha", G.field(), G.mat_size(), ggens);

    const auto& TH = chartab::character_table(Halpha);
    for (auto d : TH.degrees)
      if (d != 1)
        throw input_error("stabilizer has a higher-dimensional irreducible; out of scope");
    CoeffField FJ = FF.join(TH.F);
    for (std::uint32_t rho = 0; rho < TH.irr_count(); ++rho) {
      // the one-dimensional G_alpha-module: rho through the quotient to
      // H_alpha times the extended chi
      auto TAp = &TA;
      auto THp = &TH;
      auto Ap = data.A;
      auto Hfull = data.H;
      auto fac = std::make_shared<
          std::map<std::string, std::pair<std::uint32_t, std::uint32_t>>>(factor);
      auto value = [TAp, THp, Ap, Hfull, Halpha, fac, FJ, chi, rho](const Mat& g) {
        auto it = fac->find(g.key());
        if (it == fac->end()) throw internal_error("element outside H*A");
        auto [hi, ai] = it->second;
        Scalar va = FJ.coerce(TAp->values[chi][Ap->classes().class_of[ai]]);
        Scalar vh = FJ.coerce(THp->values[rho][Halpha->class_of_mat(Hfull->elem(hi))]);
        return va * vh;
      };
      auto one = modrep::one_dim_module(Galpha, FJ, value, "rho(x)chi");
      LittleGroupRep rep;
      rep.orbit = orbit_counter;
      rep.module = modrep::induce(data.G, Galpha, one, modrep::Realization::Tensor);
      rep.rho = rho;
      rep.stabilizer_order = Halpha->size();
      rep.irreducible = modrep::is_irreducible(rep.module).irreducible;
      out.push_back(std::move(rep));
    }
    ++orbit_counter;
  }
  return out;
}

SemidirectData borel_mod_uprime(const GroupSpec& spec) {
  auto Gc = chevalley::group(spec);
  const auto field = spec.field();
  const std::uint32_t n = spec.n;
  const std::uint32_t l = n - 1;
  const std::uint32_t size = 2 * l + n;
  auto phi = [&](const Mat& b) {
    Mat m(field, size);
    for (std::uint32_t j = 0; j < l; ++j) {
      m.set(2 * j, 2 * j, b.at(j, j));
      m.set(2 * j, 2 * j + 1, b.at(j, j + 1));
      m.set(2 * j + 1, 2 * j + 1, b.at(j + 1, j + 1));
    }
    for (std::uint32_t i = 0; i < n; ++i) m.set(2 * l + i, 2 * l + i, b.at(i, i));
    return m;
  };
  std::vector<std::pair<std::string, Mat>> bgens, hgens, agens;
  for (const auto& [name, g] : Gc->generators()) {
    if (name[0] == 'u') {
      bgens.emplace_back(name, phi(g));
      agens.emplace_back(name, phi(g));
    } else if (name[0] == 't') {
      bgens.emplace_back(name, phi(g));
      hgens.emplace_back(name, phi(g));
    }
  }
  SemidirectData d;
  d.G = grp::FiniteGroup::make("B/U'[" + spec.str() + "]", field, size, bgens);
  d.H = grp::FiniteGroup::make("T[" + spec.str() + "]", field, size, hgens);
  d.A = grp::FiniteGroup::make("U/U'[" + spec.str() + "]", field, size, agens);
  return d;
}

BorelClassification classify_borel_irreps(const GroupSpec& spec, const CoeffField& F) {
  BorelClassification out;
  auto Gc = chevalley::group(spec);
  auto B = grp::standard_subgroup(Gc, grp::StdSubgroup::B);
  out.b_order = B->size();

  auto data = borel_mod_uprime(spec);
  out.quotient_order = data.G->size();
  auto reps = little_group_reps(data, F);
  out.quotient_irr_count = static_cast<std::uint32_t>(reps.size());
  std::uint64_t sumsq = 0;
  out.all_irreducible = true;
  for (const auto& r : reps) {
    out.dims.push_back(r.module.dim());
    sumsq += static_cast<std::uint64_t>(r.module.dim()) * r.module.dim();
    if (!r.irreducible) out.all_irreducible = false;
  }
  out.quotient_complete = sumsq == out.quotient_order;

  // pairwise distinct characters
  out.pairwise_noniso = true;
  CoeffField J = F;
  std::vector<std::vector<Scalar>> chars;
  for (const auto& r : reps) J = J.join(r.module.F);
  for (const auto& r : reps) chars.push_back(modrep::character_in(r.module, J));
  for (size_t a = 0; a < chars.size(); ++a)
    for (size_t b = a + 1; b < chars.size(); ++b) {
      bool same = true;
      for (size_t k = 0; k < chars[a].size() && same; ++k)
        if (!(chars[a][k] == chars[b][k])) same = false;
      if (same) out.pairwise_noniso = false;
    }

  // the restriction to A only meets characters in the matching orbit
  out.restrictions_in_orbit = true;
  const auto& TA = chartab::character_table(data.A);
  // recompute the orbit partition of the characters of A
  std::vector<std::int32_t> orbit_of(TA.irr_count(), -1);
  {
    const auto& clsA = data.A->classes();
    std::int32_t next = 0;
    for (std::uint32_t chi = 0; chi < TA.irr_count(); ++chi) {
      if (orbit_of[chi] >= 0) continue;
      orbit_of[chi] = next;
      for (std::uint32_t h = 0; h < data.H->size(); ++h) {
        std::vector<Scalar> vals(clsA.rep.size(), TA.F.zero());
        Mat hinv = data.H->elem(h).inverse();
        for (std::uint32_t k = 0; k < clsA.rep.size(); ++k)
          vals[k] =
              TA.values[chi][data.A->class_of_mat(hinv * data.A->elem(clsA.rep[k]) *
                                                  data.H->elem(h))];
        for (std::uint32_t c2 = 0; c2 < TA.irr_count(); ++c2) {
          bool same = true;
          for (std::uint32_t k = 0; k < vals.size() && same; ++k)
            if (!(vals[k] == TA.values[c2][k])) same = false;
          if (same) orbit_of[c2] = next;
        }
      }
      ++next;
    }
  }
  for (size_t ri = 0; ri < reps.size(); ++ri) {
    auto resA = modrep::restrict_module(reps[ri].module, data.A);
    CoeffField JA = resA.F.join(TA.F);
    auto chiR = modrep::character_in(resA, JA);
    std::int32_t expected_orbit = -1;
    std::vector<std::uint32_t> support;
    for (std::uint32_t chi = 0; chi < TA.irr_count(); ++chi) {
      std::vector<Scalar> row;
      for (const auto& v : TA.values[chi]) row.push_back(JA.coerce(v));
      if (chartab::class_inner(*data.A, JA, chiR, row) != 0) support.push_back(chi);
    }
    for (auto chi : support) {
      if (expected_orbit < 0) expected_orbit = orbit_of[chi];
      if (orbit_of[chi] != expected_orbit) out.restrictions_in_orbit = false;
    }
  }

  const auto& TB = chartab::character_table(B);
  out.full_irr_count = TB.irr_count();
  return out;
}

std::string BorelClassification::json() const {
  std::ostringstream os;
  os << "{\"schema\":1,\"theorem\":\"borel_classification\",\"b_order\":" << b_order
     << ",\"quotient_order\":" << quotient_order << ",\"dims\":[";
  for (size_t i = 0; i < dims.size(); ++i) {
    if (i) os << ",";
    os << dims[i];
  }
  os << "],\"all_irreducible\":" << (all_irreducible ? "true" : "false")
     << ",\"pairwise_noniso\":" << (pairwise_noniso ? "true" : "false")
     << ",\"quotient_complete\":" << (quotient_complete ? "true" : "false")
     << ",\"full_irr_count\":" << full_irr_count
     << ",\"quotient_irr_count\":" << quotient_irr_count
     << ",\"restrictions_in_orbit\":" << (restrictions_in_orbit ? "true" : "false") << "}";
  return os.str();
}

GelfandGraevReport gelfand_graev(const GroupSpec& spec, const UCharacter& sigma) {
  if (!sigma.nondegenerate()) throw input_error("gelfand_graev needs a nondegenerate character");
  GelfandGraevReport rep;
  auto Gc = chevalley::group(spec);
  auto G = principal::level_group(spec);
  auto U = grp::standard_subgroup(Gc, grp::StdSubgroup::U);
  auto sig = sigma;
  auto one = modrep::one_dim_module(
      U, sigma.F, [sig](const Mat& u) { return sig.eval(u); }, "sigma");
  auto ind = modrep::induce(G, U, one, modrep::Realization::Tensor);
  rep.dim = ind.dim();

  const auto& T = chartab::character_table(G);
  CoeffField J = ind.F.join(T.F);
  auto chiI = modrep::character_in(ind, J);
  rep.multiplicity_free = true;
  for (std::uint32_t i = 0; i < T.irr_count(); ++i) {
    std::vector<Scalar> row;
    for (const auto& v : T.values[i]) row.push_back(J.coerce(v));
    mpq_class m = chartab::class_inner(*G, J, chiI, row);
    if (m.get_den() != 1 || m < 0) throw internal_error("bad multiplicity");
    rep.multiplicities.push_back(static_cast<std::uint32_t>(m.get_num().get_ui()));
    if (m > 1) rep.multiplicity_free = false;
  }
  for (const auto& o : u_character_orbits(spec, sigma.F))
    if (o.nondegenerate) ++rep.nondegenerate_orbit_count;
  return rep;
}

std::string GelfandGraevReport::json() const {
  std::ostringstream os;
  os << "{\"schema\":1,\"theorem\":\"gelfand_graev\",\"dim\":" << dim << ",\"multiplicities\":[";
  for (size_t i = 0; i < multiplicities.size(); ++i) {
    if (i) os << ",";
    os << multiplicities[i];
  }
  os << "],\"multiplicity_free\":" << (multiplicity_free ? "true" : "false")
     << ",\"nondegenerate_orbits\":" << nondegenerate_orbit_count << "}";
  return os.str();
}

} // namespace limitrep::borelreps
