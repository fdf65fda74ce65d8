#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "limitrep/towers.hpp"

using namespace limitrep;
using namespace limitrep::towers;
using chevalley::GroupSpec;

TEST_CASE("tower construction and orders") {
  TowerSpec ts;
  ts.kind = TowerKind::ChevalleyLevels;
  ts.base = GroupSpec::parse("SL(2,2)");
  ts.levels = {1, 2, 4};
  auto t = build_tower(ts);
  REQUIRE(t.orders.size() == 3);
  CHECK(t.orders[0] == 6);
  CHECK(t.orders[1] == 60);
  CHECK(t.orders[2] == 4080);
  CHECK(t.directed());

  TowerSpec wt;
  wt.kind = TowerKind::CoxeterA;
  wt.levels = {1, 2, 3};
  auto w = build_tower(wt);
  CHECK(w.orders[0] == 2);
  CHECK(w.orders[1] == 6);
  CHECK(w.orders[2] == 24);

  TowerSpec gt;
  gt.kind = TowerKind::NestedLinear;
  gt.base = GroupSpec::parse("GL(2,2)");
  gt.levels = {2, 3};
  auto g = build_tower(gt);
  CHECK(g.orders[0] == 6);
  CHECK(g.orders[1] == 168);

  // a window that is not directed is rejected
  TowerSpec bad;
  bad.kind = TowerKind::ChevalleyLevels;
  bad.base = GroupSpec::parse("SL(2,2)");
  bad.levels = {2, 3};
  CHECK_THROWS_AS(build_tower(bad), input_error);
}

TEST_CASE("tower embeddings land on Frobenius fixed points") {
  TowerSpec ts;
  ts.kind = TowerKind::ChevalleyLevels;
  ts.base = GroupSpec::parse("SL(2,2)");
  ts.levels = {1, 2, 4};
  auto t = build_tower(ts);

  // the image of level a inside level b is exactly the set fixed by the
  // a-fold Frobenius iterate, exhaustively (|G| at the top is 4080)
  for (std::uint32_t from = 0; from < 2; ++from)
    for (std::uint32_t to = from + 1; to < 3; ++to) {
      auto Gc_to = chevalley::group(ts.base.at_level(ts.levels[to]));
      auto lower = chevalley::group(ts.base.at_level(ts.levels[from]))->enumerate();
      std::set<std::string> image;
      for (const auto& g : lower) image.insert(t.embed(from, to, g).key());
      const std::uint32_t a = ts.levels[from];
      std::uint32_t fixed = 0;
      for (const auto& g : Gc_to->enumerate()) {
        auto fg = g;
        for (std::uint32_t k = 0; k < a; ++k) fg = Gc_to->frobenius_map(fg);
        if (fg == g) {
          ++fixed;
          CHECK(image.count(g.key()) == 1);
        }
      }
      CHECK(fixed == image.size());
    }
}

TEST_CASE("direct system checks") {
  CoeffField Q = CoeffField::rationals();

  // constant system: identity transitions on a fixed module
  {
    DirectSystem D;
    TowerSpec ts;
    ts.kind = TowerKind::ChevalleyLevels;
    ts.base = GroupSpec::parse("SL(2,2)");
    ts.levels = {1, 1};
    // two copies of the same level: comparable both ways
    D.tower = build_tower(ts);
    auto St = principal::steinberg(ts.base, Q);
    D.modules = {St.module, St.module};
    std::vector<linalg::SparseVec> id_cols;
    for (std::uint32_t b = 0; b < St.module.dim(); ++b)
      id_cols.push_back(linalg::sv_unit(b, Q.one()));
    D.phi.emplace(std::make_pair(0u, 1u), id_cols);
    D.phi.emplace(std::make_pair(1u, 0u), id_cols);
    auto chk = check_direct_system(D);
    CHECK(chk.ok);
  }

  // the Steinberg system for q = 2, levels {1, 2}
  auto D = steinberg_system(GroupSpec::parse("SL(2,2)"), {1, 2}, Q);
  auto chk = check_direct_system(D);
  CHECK(chk.ok);
  CHECK(chk.violations.empty());

  // a deliberately sign-flipped transition is caught
  auto Dbad = D;
  auto& cols = Dbad.phi.at({0, 1});
  cols[1] = cols[1].scaled(Q.from_int(-1));
  auto chk2 = check_direct_system(Dbad);
  CHECK(!chk2.ok);
  CHECK(!chk2.violations.empty());
}

TEST_CASE("union irreducibility certificate over the level window") {
  CoeffField F = CoeffField::cyclotomic(4);
  auto D = steinberg_system(GroupSpec::parse("SL(2,2)"), {1, 2, 4}, F);
  auto cert = union_irreducibility_certificate(D);
  CHECK(cert.window == std::vector<std::uint32_t>{1, 2, 4});
  REQUIRE(cert.per_level.size() == 3);
  CHECK(cert.per_level[0].dim == 2);
  CHECK(cert.per_level[1].dim == 4);
  CHECK(cert.per_level[2].dim == 16);
  for (const auto& pl : cert.per_level) {
    CHECK(pl.irreducible);
    CHECK(pl.equivariant);
  }
  CHECK(cert.verdict);
  CHECK(cert.json().find("\"verdict\":true") != std::string::npos);
  CHECK(cert.json().find("caveat") != std::string::npos);

  // certificates are monotone: the sub-window agrees
  auto Dsub = steinberg_system(GroupSpec::parse("SL(2,2)"), {1, 2}, F);
  auto csub = union_irreducibility_certificate(Dsub);
  CHECK(csub.verdict);

  // a single-level window with a regular character: trivially certified
  {
    CoeffField F4 = CoeffField::cyclotomic(4);
    auto s25 = GroupSpec::parse("SL(2,5)");
    auto theta = principal::TorusCharacter::from_exponents(s25, {1}, F4);
    auto M = principal::build_M_theta(s25, theta);
    DirectSystem D1;
    TowerSpec ts;
    ts.kind = TowerKind::ChevalleyLevels;
    ts.base = s25;
    ts.levels = {1};
    D1.tower = build_tower(ts);
    D1.modules = {M.module};
    auto c1 = union_irreducibility_certificate(D1);
    CHECK(c1.verdict);
  }

  // a window with a reducible level is reported false with the offender
  {
    auto s23 = GroupSpec::parse("SL(2,3)");
    auto M = principal::build_M_theta(
        s23, principal::TorusCharacter::trivial(s23, CoeffField::rationals()));
    DirectSystem D1;
    TowerSpec ts;
    ts.kind = TowerKind::ChevalleyLevels;
    ts.base = s23;
    ts.levels = {1};
    D1.tower = build_tower(ts);
    D1.modules = {M.module};
    auto c1 = union_irreducibility_certificate(D1);
    CHECK(!c1.verdict);
    CHECK(!c1.per_level[0].irreducible);
  }
}

TEST_CASE("induced tower images") {
  CoeffField Q = CoeffField::rationals();
  auto rep = induced_tower_images(GroupSpec::parse("SL(2,2)"), {1, 2}, Q);
  REQUIRE(rep.dims.size() == 2);
  CHECK(rep.dims[0] == 3); // 1 + q
  CHECK(rep.dims[1] == 5); // 1 + q^2 = the whole induced module
  CHECK(rep.witness_ok[0]);
  CHECK(rep.witness_ok[1]);
  CHECK(rep.union_ok);
  CHECK(rep.json().find("\"union_ok\":true") != std::string::npos);
}

TEST_CASE("nested linear Steinberg system") {
  CoeffField F = CoeffField::cyclotomic(4);
  auto D = nested_steinberg_system(GroupSpec::parse("GL(2,2)"), {2, 3}, F);
  auto chk = check_direct_system(D);
  CHECK(chk.ok);
  auto cert = union_irreducibility_certificate(D);
  CHECK(cert.per_level[0].dim == 2);
  CHECK(cert.per_level[1].dim == 8);
  CHECK(cert.verdict);
}
