#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "limitrep/borelreps.hpp"

using namespace limitrep;
using namespace limitrep::borelreps;
using chevalley::GroupSpec;

namespace {
GroupSpec spec(const char* s) { return GroupSpec::parse(s); }
} // namespace

TEST_CASE("torus orbits on the characters of U/U'") {
  CoeffField F3 = CoeffField::cyclotomic(3);

  // GL(2,3): a fixed trivial orbit and one nondegenerate orbit of size 2
  auto orbs = u_character_orbits(spec("GL(2,3)"), F3);
  REQUIRE(orbs.size() == 2);
  CHECK(orbs[0].size == 1);
  CHECK(!orbs[0].nondegenerate);
  CHECK(orbs[1].size == 2);
  CHECK(orbs[1].nondegenerate);
  CHECK(orbs[1].stabilizer_order == 2); // the scalar matrices

  // SL(2,3): the torus acts through squares, so three singleton orbits
  auto orbs2 = u_character_orbits(spec("SL(2,3)"), F3);
  REQUIRE(orbs2.size() == 3);
  for (const auto& o : orbs2) CHECK(o.size == 1);
  int nondeg = 0;
  for (const auto& o : orbs2)
    if (o.nondegenerate) ++nondeg;
  CHECK(nondeg == 2);

  // orbit sizes always divide the torus order and add up to q^l
  for (const char* name : {"GL(2,3)", "SL(2,3)", "SL(3,2)", "SL(2,5)"}) {
    auto g = spec(name);
    CoeffField F = CoeffField::cyclotomic(static_cast<std::uint32_t>(g.base_p()));
    auto list = u_character_orbits(g, F);
    std::uint64_t total = 0;
    for (const auto& o : list) total += o.size;
    CHECK(total == nt::pow_u64(g.field_order(), g.n - 1));
    // the trivial character is a fixed point and comes first
    CHECK(list[0].size == 1);
    for (const auto& c : list[0].rep.components) CHECK(c.is_zero());
  }

  // CSV serialization
  auto csv = orbits_csv(orbs);
  CHECK(csv.find("orbit_rep,size,stabilizer_order") == 0);
}

TEST_CASE("nondegenerate character counting") {
  CoeffField F2 = CoeffField::cyclotomic(2);
  // SL(3,2): each simple component has exactly one nontrivial character
  auto g = spec("SL(3,2)");
  auto orbs = u_character_orbits(g, F2);
  int nondeg_chars = 0;
  for (const auto& o : orbs)
    if (o.nondegenerate) nondeg_chars += o.size;
  CHECK(nondeg_chars == 1);

  UCharacter sigma;
  sigma.spec = g;
  sigma.F = F2;
  sigma.components = {g.field()->one(), g.field()->one()};
  CHECK(sigma.nondegenerate());
  UCharacter degen = sigma;
  degen.components[0] = g.field()->zero();
  CHECK(!degen.nondegenerate());
}

TEST_CASE("characters of U evaluate multiplicatively") {
  auto g = spec("SL(3,2)");
  CoeffField F = CoeffField::cyclotomic(2);
  UCharacter sigma;
  sigma.spec = g;
  sigma.F = F;
  sigma.components = {g.field()->one(), g.field()->one()};
  auto Gc = chevalley::group(g);
  auto U = grp::standard_subgroup(Gc, grp::StdSubgroup::U);
  for (std::uint32_t i = 0; i < U->size(); ++i)
    for (std::uint32_t j = 0; j < U->size(); ++j) {
      CHECK(sigma.eval(U->elem(i) * U->elem(j)) == sigma.eval(U->elem(i)) * sigma.eval(U->elem(j)));
    }
  // trivial on U'
  for (std::uint32_t i = 0; i < U->size(); ++i) {
    if (Gc->member(U->elem(i), chevalley::SubgroupTag::simple(
                                   chevalley::SubgroupTag::Kind::Uprime)))
      CHECK(sigma.eval(U->elem(i)).is_one());
  }
}

TEST_CASE("little groups classify the Borel irreducibles of GL(2,3)") {
  CoeffField F = CoeffField::cyclotomic(6);
  auto cls = classify_borel_irreps(spec("GL(2,3)"), F);
  CHECK(cls.b_order == 12);
  CHECK(cls.quotient_order == 12); // U' is trivial in rank one
  // four linear characters and two of dimension 2
  std::vector<std::uint32_t> sorted = cls.dims;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<std::uint32_t>{1, 1, 1, 1, 2, 2});
  CHECK(cls.all_irreducible);
  CHECK(cls.pairwise_noniso);
  CHECK(cls.quotient_complete); // 4 + 8 = 12
  CHECK(cls.full_irr_count == 6);
  CHECK(cls.quotient_irr_count == 6);
  CHECK(cls.restrictions_in_orbit);
  CHECK(cls.json().find("\"quotient_complete\":true") != std::string::npos);
}

TEST_CASE("Borel classification through the quotient for other levels") {
  // SL(2,2): B = U of order 2, two linear characters
  auto cls = classify_borel_irreps(spec("SL(2,2)"), CoeffField::cyclotomic(2));
  CHECK(cls.b_order == 2);
  CHECK(cls.quotient_order == 2);
  CHECK(cls.dims == std::vector<std::uint32_t>{1, 1});
  CHECK(cls.quotient_complete);
  CHECK(cls.full_irr_count == 2);

  // SL(3,2): B = U of order 8; the quotient sees 4 linear characters while
  // the full table of B has 5 irreducibles
  auto cls3 = classify_borel_irreps(spec("SL(3,2)"), CoeffField::cyclotomic(2));
  CHECK(cls3.b_order == 8);
  CHECK(cls3.quotient_order == 4);
  CHECK(cls3.dims == std::vector<std::uint32_t>{1, 1, 1, 1});
  CHECK(cls3.quotient_complete);
  CHECK(cls3.full_irr_count == 5);
  CHECK(cls3.quotient_irr_count == 4);
}

TEST_CASE("little group modules: dimensions, irreducibility, distinctness") {
  // the abstract engine on B(GL(2,3)) = T x| U directly
  auto g = spec("GL(2,3)");
  auto data = borel_mod_uprime(g);
  auto reps = little_group_reps(data, CoeffField::cyclotomic(6));
  REQUIRE(reps.size() == 6);
  for (const auto& r : reps) {
    CHECK(r.irreducible);
    // dim = [G : G_alpha] with G_alpha = A H_alpha
    CHECK(r.module.dim() * r.stabilizer_order * data.A->size() == data.G->size());
  }
  // trivial orbit gives the linear characters (stabilizer is all of T)
  int linear = 0, twodim = 0;
  for (const auto& r : reps) {
    if (r.module.dim() == 1) ++linear;
    if (r.module.dim() == 2) ++twodim;
  }
  CHECK(linear == 4);
  CHECK(twodim == 2);
}

TEST_CASE("gelfand-graev modules") {
  // GL(2,2): dim 3 = 6/2, decomposes as sign + the 2-dimensional module
  {
    auto g = spec("GL(2,2)");
    UCharacter sigma;
    sigma.spec = g;
    sigma.F = CoeffField::cyclotomic(2);
    sigma.components = {g.field()->one()};
    auto rep = gelfand_graev(g, sigma);
    CHECK(rep.dim == 3);
    CHECK(rep.multiplicity_free);
    std::vector<std::uint32_t> mults = rep.multiplicities;
    std::sort(mults.begin(), mults.end());
    CHECK(mults == std::vector<std::uint32_t>{0, 1, 1});
  }
  // GL(2,3): dim 16, multiplicity-free, one nondegenerate orbit
  {
    auto g = spec("GL(2,3)");
    UCharacter sigma;
    sigma.spec = g;
    sigma.F = CoeffField::cyclotomic(3);
    sigma.components = {g.field()->one()};
    auto rep = gelfand_graev(g, sigma);
    CHECK(rep.dim == 16);
    CHECK(rep.multiplicity_free);
    CHECK(rep.nondegenerate_orbit_count == 1);
    CHECK(rep.json().find("\"multiplicity_free\":true") != std::string::npos);
  }
  // SL(2,3): two nondegenerate orbits
  {
    auto g = spec("SL(2,3)");
    UCharacter sigma;
    sigma.spec = g;
    sigma.F = CoeffField::cyclotomic(3);
    sigma.components = {g.field()->one()};
    auto rep = gelfand_graev(g, sigma);
    CHECK(rep.dim == 8);
    CHECK(rep.multiplicity_free);
    CHECK(rep.nondegenerate_orbit_count == 2);
  }
  // degenerate input is rejected
  {
    auto g = spec("GL(2,2)");
    UCharacter sigma;
    sigma.spec = g;
    sigma.F = CoeffField::cyclotomic(2);
    sigma.components = {g.field()->zero()};
    CHECK_THROWS_AS(gelfand_graev(g, sigma), input_error);
  }
}
