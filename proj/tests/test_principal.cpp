#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "limitrep/principal.hpp"

using namespace limitrep;
using namespace limitrep::principal;
using chevalley::GroupSpec;
using linalg::sv_unit;

namespace {
GroupSpec spec(const char* s) { return GroupSpec::parse(s); }

std::vector<std::uint32_t> full_J(const GroupSpec& g) {
  std::vector<std::uint32_t> J;
  for (std::uint32_t s = 1; s < g.n; ++s) J.push_back(s);
  return J;
}
} // namespace

TEST_CASE("M(theta) construction") {
  CoeffField Q = CoeffField::rationals();
  auto M = build_M_theta(spec("SL(2,3)"), TorusCharacter::trivial(spec("SL(2,3)"), Q));
  CHECK(M.module.dim() == 4); // 1 + q

  // dimension law: sum of q^{a l(w)}
  auto M3 = build_M_theta(spec("SL(3,2)"), TorusCharacter::trivial(spec("SL(3,2)"), Q));
  CHECK(M3.module.dim() == 21);

  CoeffField F4 = CoeffField::cyclotomic(4);
  auto s25 = spec("SL(2,5)");
  auto theta = TorusCharacter::from_exponents(s25, {1}, F4);
  auto M5 = build_M_theta(s25, theta);
  CHECK(M5.module.dim() == 6);

  // the torus scales the label (e, I) by theta, and a full Borel element
  // acts by theta through the quotient
  auto Gc = M5.Gc;
  auto F = s25.field();
  std::uint32_t e_idx = M5.index_of_weyl(Gc->weyl_group()->identity());
  auto two = F->element_by_index(2);
  chevalley::Mat t = Gc->torus_element({two, two.inverse()});
  auto img = M5.module.act_elem(t, sv_unit(e_idx, F4.one()));
  REQUIRE(img.t.size() == 1);
  CHECK(img.t[0].first == e_idx);
  CHECK(img.t[0].second == theta.eval_torus(t));
  chevalley::Mat b = t * Gc->root_element(chevalley::simple_root(1), F->one());
  auto imgb = M5.module.act_elem(b, sv_unit(e_idx, F4.one()));
  REQUIRE(imgb.t.size() == 1);
  CHECK(imgb.t[0].first == e_idx);
  CHECK(imgb.t[0].second == theta.eval_borel(b));
}

TEST_CASE("eta and c vectors") {
  CoeffField Q = CoeffField::rationals();
  auto Mtr = build_M_theta(spec("SL(2,3)"), TorusCharacter::trivial(spec("SL(2,3)"), Q));

  auto e0 = eta_vector(Mtr, {});
  REQUIRE(e0.t.size() == 1);
  CHECK(e0.t[0].first == Mtr.index_of_weyl(Mtr.Gc->weyl_group()->identity()));

  auto eS = eta_vector(Mtr, {1});
  REQUIRE(eS.t.size() == 2);
  CHECK(eS.t[0].second == Q.one());
  CHECK(eS.t[1].second == Q.from_int(-1));

  // c_{w_J} = eta_J
  auto M3 = build_M_theta(spec("SL(3,2)"), TorusCharacter::trivial(spec("SL(3,2)"), Q));
  auto W = M3.Gc->weyl_group();
  for (auto J : std::vector<std::vector<std::uint32_t>>{{}, {1}, {2}, {1, 2}}) {
    CHECK(linalg::sv_equal(c_vector(M3, W->longest_element(J)), eta_vector(M3, J)));
  }
  // c_{w_S} has |W| = 6 nonzero coefficients, all +-1
  auto cw = c_vector(M3, W->longest_element({1, 2}));
  CHECK(cw.t.size() == 6);
  for (auto& [i, c] : cw.t) CHECK((c == Q.one() || c == Q.from_int(-1)));
}

TEST_CASE("eta sign property: s eta_J = -eta_J for s in J") {
  CoeffField Q = CoeffField::rationals();
  for (const char* name : {"SL(2,3)", "SL(3,2)"}) {
    auto Mtr = build_M_theta(spec(name), TorusCharacter::trivial(spec(name), Q));
    auto W = Mtr.Gc->weyl_group();
    std::vector<std::vector<std::uint32_t>> subsets{{}};
    for (std::uint32_t s = 1; s <= W->rank(); ++s) {
      auto copy = subsets;
      for (auto J : copy) {
        J.push_back(s);
        subsets.push_back(J);
      }
    }
    for (const auto& J : subsets) {
      auto eta = eta_vector(Mtr, J);
      for (auto s : J) {
        auto ns = Mtr.Gc->weyl_representative(W->generator(s));
        auto img = Mtr.module.act_elem(ns, eta);
        CHECK(linalg::sv_equal(img, eta.scaled(Q.from_int(-1))));
      }
    }
  }
}

TEST_CASE("kUW eta_J: spin agrees with the direct span and is closed") {
  CoeffField Q = CoeffField::rationals();
  for (const char* name : {"SL(2,3)", "SL(3,2)"}) {
    auto g = spec(name);
    auto Mtr = build_M_theta(g, TorusCharacter::trivial(g, Q));
    auto W = Mtr.Gc->weyl_group();
    const auto F = g.field();
    // enumerate U
    std::vector<chevalley::Mat> U;
    {
      const std::uint32_t nroots = g.positive_root_count();
      std::vector<std::uint64_t> idx(nroots, 0);
      while (true) {
        std::vector<fields::FieldElement> coords;
        for (std::uint32_t k = 0; k < nroots; ++k)
          coords.push_back(F->element_by_index(idx[k]));
        U.push_back(Mtr.Gc->from_unipotent_coords(coords));
        std::uint32_t k = 0;
        while (k < nroots) {
          if (++idx[k] < F->order()) break;
          idx[k] = 0;
          ++k;
        }
        if (k == nroots) break;
      }
    }
    std::vector<std::vector<std::uint32_t>> subsets{{}};
    for (std::uint32_t s = 1; s <= W->rank(); ++s) {
      auto copy = subsets;
      for (auto J : copy) {
        J.push_back(s);
        subsets.push_back(J);
      }
    }
    for (const auto& J : subsets) {
      auto sub = m_tr_J(Mtr, J);
      // independent oracle: the flat span of all u n_w eta_J
      linalg::SpanSolver direct(Q);
      auto eta = eta_vector(Mtr, J);
      for (std::uint32_t wi = 0; wi < W->size(); ++wi) {
        auto nw = Mtr.Gc->weyl_representative(W->element(wi));
        auto weta = Mtr.module.act_elem(nw, eta);
        for (const auto& u : U) direct.insert(Mtr.module.act_elem(u, weta));
      }
      CHECK(direct.dim() == sub.span.dim());
      for (const auto& row : direct.echelon_rows()) CHECK(sub.span.contains(row));
      // J empty: everything
      if (J.empty()) CHECK(sub.span.dim() == Mtr.module.dim());
      // closure under every group generator
      CHECK(modrep::is_generator_closed(Mtr.module, sub.span));
    }
  }
}

TEST_CASE("Steinberg dimensions and irreducibility") {
  CoeffField Q = CoeffField::rationals();
  CHECK(steinberg(spec("SL(2,2)"), Q).module.dim() == 2);
  CHECK(steinberg(spec("SL(3,2)"), Q).module.dim() == 8);
  auto St = steinberg(spec("SL(2,3)"), Q);
  CHECK(St.module.dim() == 3);
  auto cert = modrep::is_irreducible(St.module);
  CHECK(cert.irreducible);
  CHECK(cert.endo_rank == 1);
  // the level Steinberg equals the spin of eta_S: dimension q
  CHECK(St.module.dim() == 3);

  // dim M(tr) = sum q^{a l(w)}, dim St = q^{a l(w0)} along the levels of q=2
  auto St4 = steinberg(spec("SL(2,2)").at_level(2), Q);
  CHECK(St4.module.dim() == 4);
  CHECK(St4.ambient.module.dim() == 5);
  auto St16 = steinberg(spec("SL(2,2)").at_level(4), Q);
  CHECK(St16.module.dim() == 16);
  CHECK(St16.ambient.module.dim() == 17);
}

TEST_CASE("Steinberg divisibility criterion matches the Meataxe verdict") {
  auto W1 = weyl::CoxeterSystem::parse("A1");
  CHECK(steinberg_criterion(0, 2, 1, W1));
  CHECK(poincare_sum(2, 1, W1) == 3);
  CHECK(!steinberg_criterion(3, 2, 1, W1)); // 3 | 3
  CHECK(steinberg_criterion(3, 3, 1, W1));  // 3 does not divide 4

  // paired with the irreducibility engine at desk scale
  {
    auto St = steinberg(spec("SL(2,2)"), CoeffField::finite(3));
    CHECK(!modrep::is_irreducible(St.module).irreducible);
  }
  {
    auto St = steinberg(spec("SL(2,3)"), CoeffField::finite(2)); // sum = 4
    CHECK(!modrep::is_irreducible(St.module).irreducible);
  }
  {
    auto St = steinberg(spec("SL(2,3)"), CoeffField::finite(7)); // 7 does not divide 4
    CHECK(modrep::is_irreducible(St.module).irreducible);
  }
}

TEST_CASE("tensor identity") {
  CoeffField Q = CoeffField::rationals();
  auto r1 = tensor_identity_check(spec("SL(2,3)"), TorusCharacter::trivial(spec("SL(2,3)"), Q));
  CHECK(r1.dims_ok);
  CHECK(r1.dim_M * r1.dim_St == 12);
  CHECK(r1.index_T == 12);
  CHECK(r1.witness_ok);

  auto r2 = tensor_identity_check(spec("GL(2,2)"), TorusCharacter::trivial(spec("GL(2,2)"), Q));
  CHECK(r2.dims_ok);
  CHECK(r2.index_T == 6);
  CHECK(r2.witness_ok);
  CHECK(r2.json().find("\"verdict\":true") != std::string::npos);
}

TEST_CASE("torus-stable lines") {
  // labels (w, I) are torus eigenvectors with character ^w theta
  CoeffField F4 = CoeffField::cyclotomic(4);
  auto s25 = spec("SL(2,5)");
  auto theta = TorusCharacter::from_exponents(s25, {1}, F4);
  auto M = build_M_theta(s25, theta);
  auto W = M.Gc->weyl_group();
  auto F = s25.field();
  auto two = F->element_by_index(2);
  chevalley::Mat t = M.Gc->torus_element({two, two.inverse()});
  for (std::uint32_t wi = 0; wi < W->size(); ++wi) {
    std::uint32_t idx = M.index_of_weyl(W->element(wi));
    auto img = M.module.act_elem(t, sv_unit(idx, F4.one()));
    REQUIRE(img.t.size() == 1);
    CHECK(img.t[0].first == idx);
    CHECK(img.t[0].second == theta.conjugate(W->element(wi)).eval_torus(t));
  }

  auto rep = t_stable_lines(M);
  CHECK(rep.weyl_count == 2);
  // exactly the |W| label lines are stable among basis-label lines; the
  // finite level still allows stable lines off the labels, and those are
  // flagged rather than hidden
  CHECK(rep.label_lines == 2);

  // trivial theta over a trivial torus: every line is stable
  auto M22 = build_M_theta(spec("SL(2,2)"),
                           TorusCharacter::trivial(spec("SL(2,2)"), CoeffField::rationals()));
  auto rep22 = t_stable_lines(M22);
  CHECK(rep22.torus_trivial);
  CHECK(rep22.extra_lines);

  // trivial theta with a nontrivial torus: the weight-zero space is fat
  auto M23 = build_M_theta(spec("SL(2,3)"),
                           TorusCharacter::trivial(spec("SL(2,3)"), CoeffField::rationals()));
  auto rep23 = t_stable_lines(M23);
  CHECK(rep23.extra_lines);
  CHECK(rep23.json().find("finite_level") != std::string::npos);
}

TEST_CASE("E_J quotients and the distinguishing conditions") {
  CoeffField Q = CoeffField::rationals();
  auto s23 = spec("SL(2,3)");
  auto Mtr = build_M_theta(s23, TorusCharacter::trivial(s23, Q));
  auto E0 = e_j(Mtr, {});
  auto E1 = e_j(Mtr, {1});
  CHECK(E0.E.dim() == 1);
  CHECK(E1.E.dim() == 3);
  CHECK(!modrep::iso_witness(E0.E, E1.E).has_value());

  auto d0 = distinguish_e_j(Mtr, {});
  CHECK(d0.conditions_hold);
  auto d1 = distinguish_e_j(Mtr, {1});
  CHECK(d1.conditions_hold);

  auto s32 = spec("SL(3,2)");
  auto M3 = build_M_theta(s32, TorusCharacter::trivial(s32, Q));
  for (auto J : std::vector<std::vector<std::uint32_t>>{{}, {1}, {2}, {1, 2}}) {
    auto d = distinguish_e_j(M3, J);
    CHECK(d.conditions_hold);
    CHECK(d.json().find("\"verdict\":true") != std::string::npos);
  }
}

TEST_CASE("W_theta and the composition bound") {
  CoeffField Q = CoeffField::rationals();
  auto s23 = spec("SL(2,3)");
  CHECK(w_theta(s23, TorusCharacter::trivial(s23, Q)).size() == 2);

  CoeffField F4 = CoeffField::cyclotomic(4);
  auto s25 = spec("SL(2,5)");
  auto theta = TorusCharacter::from_exponents(s25, {1}, F4);
  CHECK(w_theta(s25, theta).size() == 1);

  auto rep = composition_bound_check(s25, theta);
  CHECK(rep.w_theta_order == 1);
  CHECK(rep.length == 1);
  CHECK(rep.bound_holds);

  auto rep2 = composition_bound_check(s23, TorusCharacter::trivial(s23, Q));
  CHECK(rep2.w_theta_order == 2);
  CHECK(rep2.length == 2);
  CHECK(rep2.bound_holds);
}

TEST_CASE("socle and head generators") {
  CoeffField Q = CoeffField::rationals();
  auto s23 = spec("SL(2,3)");
  auto rep = socle_head_generators(s23, TorusCharacter::trivial(s23, Q), {1});
  CHECK(rep.socle_dim == 3);
  CHECK(rep.socle_irreducible);
  CHECK(rep.max_submodule_dim == 3);
  CHECK(rep.head_dim == 1);
  CHECK(rep.head_irreducible);

  CoeffField F4 = CoeffField::cyclotomic(4);
  auto s25 = spec("SL(2,5)");
  auto theta = TorusCharacter::from_exponents(s25, {1}, F4);
  auto rep2 = socle_head_generators(s25, theta, {});
  CHECK(rep2.socle_dim == 6); // 1_theta generates everything
  CHECK(rep2.max_submodule_dim == 0);
  CHECK(rep2.head_dim == 6);
  CHECK(rep2.head_irreducible);

  // hypothesis violation: W_theta = W but J = {} is rejected
  CHECK_THROWS_AS(socle_head_generators(s23, TorusCharacter::trivial(s23, Q), {}),
                  input_error);
}

TEST_CASE("parabolic factorization of M(theta)") {
  CoeffField Q = CoeffField::rationals();
  auto s32 = spec("SL(3,2)");
  CHECK(parabolic_factorization_check(s32, TorusCharacter::trivial(s32, Q), {1}));
  CHECK(parabolic_factorization_check(s32, TorusCharacter::trivial(s32, Q), {2}));
}

TEST_CASE("descent classes partition W") {
  for (const char* name : {"A1", "A2", "A3", "B2"}) {
    auto W = weyl::CoxeterSystem::parse(name);
    std::vector<std::vector<std::uint32_t>> subsets{{}};
    for (std::uint32_t s = 1; s <= W->rank(); ++s) {
      auto copy = subsets;
      for (auto J : copy) {
        J.push_back(s);
        subsets.push_back(J);
      }
    }
    std::set<std::uint32_t> seen;
    std::uint32_t total = 0;
    for (const auto& J : subsets) {
      auto cls = descent_class(W, J);
      total += cls.size();
      for (auto w : cls) CHECK(seen.insert(w).second); // disjoint
      // w_J belongs to A_J
      if (!cls.empty()) {
        auto wj = W->index_of(W->longest_element(J));
        CHECK(std::find(cls.begin(), cls.end(), wj) != cls.end());
      }
    }
    CHECK(total == W->size());
  }
}

TEST_CASE("level promotion commutes with the lower-level action") {
  CoeffField Q = CoeffField::rationals();
  auto s1 = spec("SL(2,2)");
  auto s2 = s1.at_level(2);
  auto M1 = build_M_theta(s1, TorusCharacter::trivial(s1, Q));
  auto M2 = build_M_theta(s2, TorusCharacter::trivial(s2, Q));
  auto emb = fields::TowerEmbedding::get(s1.field(), s2.field());
  for (const auto& g : M1.Gc->enumerate()) {
    chevalley::Mat gb(s2.field(), 2);
    for (std::uint32_t i = 0; i < 2; ++i)
      for (std::uint32_t j = 0; j < 2; ++j) gb.set(i, j, emb.apply(g.at(i, j)));
    for (std::uint32_t b = 0; b < M1.module.dim(); ++b) {
      auto lhs = promote(M1, M2, M1.module.act_elem(g, sv_unit(b, Q.one())));
      auto rhs = M2.module.act_elem(gb, promote(M1, M2, sv_unit(b, Q.one())));
      CHECK(linalg::sv_equal(lhs, rhs));
    }
  }
}

TEST_CASE("rule-based Steinberg action") {
  CoeffField Q = CoeffField::rationals();
  auto s23 = spec("SL(2,3)");
  auto St = rule_steinberg(s23, Q);
  CHECK(St.module.dim() == 3); // |U| = q

  const auto F = s23.field();
  // xi is the basis vector of the identity element of U
  std::uint32_t xi = St.u_index.at(St.Gc->identity().key());

  // torus fixes xi
  auto two = F->element_by_index(2);
  auto timg = St.module.act_elem(St.Gc->torus_element({two, two.inverse()}),
                                 sv_unit(xi, Q.one()));
  CHECK(linalg::sv_equal(timg, sv_unit(xi, Q.one())));

  // n_1 xi = -xi
  auto n1 = St.Gc->weyl_representative(St.Gc->weyl_group()->generator(1));
  auto nimg = St.module.act_elem(n1, sv_unit(xi, Q.one()));
  CHECK(linalg::sv_equal(nimg, sv_unit(xi, Q.one()).scaled(Q.from_int(-1))));

  // the rank-one factorization is unique (exhaustive search over the cell)
  for (std::uint64_t ci = 1; ci < 3; ++ci) {
    auto c = F->element_by_index(ci);
    auto fac = rank_one_factorization(*St.Gc, 1, c);
    auto m = n1 * St.Gc->root_element(chevalley::simple_root(1), c) * n1.inverse();
    int solutions = 0;
    for (std::uint64_t a = 0; a < 3; ++a)
      for (std::uint64_t b = 0; b < 3; ++b)
        for (std::uint64_t t1 = 1; t1 < 3; ++t1) {
          auto x = St.Gc->root_element(chevalley::simple_root(1), F->element_by_index(a));
          auto y = St.Gc->root_element(chevalley::simple_root(1), F->element_by_index(b));
          auto t = St.Gc->torus_element(
              {F->element_by_index(t1), F->element_by_index(t1).inverse()});
          if (x * n1 * t * y == m) ++solutions;
        }
    CHECK(solutions == 1);
    CHECK(fac.x * n1 * fac.t * fac.y == m);
  }

  // n_1 (u_1 xi) = (x - 1) xi with the solved x, for u_1 = eps(1)
  auto u1 = St.Gc->root_element(chevalley::simple_root(1), F->one());
  auto img = St.module.act_elem(n1, sv_unit(St.u_index.at(u1.key()), Q.one()));
  auto fac = rank_one_factorization(*St.Gc, 1, F->one());
  linalg::SparseVec expect;
  expect = linalg::sv_add_scaled(expect, sv_unit(St.u_index.at(fac.x.key()), Q.one()), Q.one());
  expect = linalg::sv_add_scaled(expect, sv_unit(xi, Q.one()), Q.from_int(-1));
  CHECK(linalg::sv_equal(img, expect));

  // the action is a homomorphism on the full basis, exhaustively for GL(2,2)
  auto g22 = spec("GL(2,2)");
  auto St22 = rule_steinberg(g22, Q);
  auto elems = St22.Gc->enumerate();
  for (const auto& g : elems)
    for (const auto& h : elems)
      for (std::uint32_t b = 0; b < St22.module.dim(); ++b) {
        auto lhs = St22.module.act_elem(g, St22.module.act_elem(h, sv_unit(b, Q.one())));
        auto rhs = St22.module.act_elem(g * h, sv_unit(b, Q.one()));
        CHECK(linalg::sv_equal(lhs, rhs));
      }

  // it recovers the level Steinberg inside M(tr)
  auto level = steinberg(g22, Q);
  CHECK(modrep::iso_witness(St22.module, level.module).has_value());
  auto level23 = steinberg(s23, Q);
  CHECK(modrep::iso_witness(St.module, level23.module).has_value());
}
