#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "limitrep/fields.hpp"
#include "limitrep/scalar.hpp"

using namespace limitrep;
using namespace limitrep::fields;

namespace {

// oracle: monic quadratic over F_2 is irreducible iff it has no root
bool quadratic_has_root_f2(std::uint32_t c0, std::uint32_t c1) {
  for (std::uint32_t x : {0u, 1u}) {
    std::uint32_t v = (x * x + c1 * x + c0) % 2;
    if (v == 0) return true;
  }
  return false;
}

} // namespace

TEST_CASE("make_field basics") {
  auto F2 = PrimePowerField::get(2, 1);
  CHECK(F2->order() == 2);
  auto F3 = PrimePowerField::get(3, 1);
  CHECK(F3->order() == 3);

  // F_4: the modulus must be the unique irreducible monic quadratic over F_2
  auto F4 = PrimePowerField::get(2, 2);
  CHECK(F4->order() == 4);
  std::vector<FpPoly> irreducible;
  for (std::uint32_t c0 = 0; c0 < 2; ++c0)
    for (std::uint32_t c1 = 0; c1 < 2; ++c1)
      if (!quadratic_has_root_f2(c0, c1)) irreducible.push_back({c0, c1, 1});
  REQUIRE(irreducible.size() == 1);
  CHECK(F4->modulus() == irreducible[0]);
  CHECK(F4->modulus() == FpPoly{1, 1, 1}); // x^2 + x + 1

  CHECK_THROWS_AS(PrimePowerField::get(4, 1), input_error);
  CHECK_THROWS_AS(PrimePowerField::get(2, 0), input_error);
}

TEST_CASE("field axioms on exhaustive small scans") {
  for (auto [p, m] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{
           {2, 1}, {2, 2}, {2, 4}, {3, 2}, {5, 2}, {7, 1}}) {
    auto F = PrimePowerField::get(p, m);
    const std::uint64_t q = F->order();
    for (std::uint64_t i = 0; i < q; ++i) {
      auto x = F->element_by_index(i);
      CHECK(frobenius(x, q) == x); // x^{p^m} = x
      if (!x.is_zero()) CHECK((x * x.inverse()).is_one());
      for (std::uint64_t j = 0; j < q; ++j) {
        auto y = F->element_by_index(j);
        CHECK(x * y == y * x);
        CHECK(x + y == y + x);
      }
    }
    // multiplicative group cyclic of order q-1: the canonical generator works
    auto g = F->generator();
    std::uint64_t ord = 1;
    auto acc = g;
    while (!acc.is_one()) {
      acc = acc * g;
      ++ord;
    }
    CHECK(ord == q - 1);
  }
}

TEST_CASE("embed fixes prime field and is a ring hom") {
  auto F4 = PrimePowerField::get(2, 2);
  auto F16 = PrimePowerField::get(2, 4);
  auto e = TowerEmbedding::get(F4, F16);

  CHECK(e.apply(F4->zero()) == F16->zero());
  CHECK(e.apply(F4->one()) == F16->one());
  for (std::uint64_t i = 0; i < 4; ++i)
    for (std::uint64_t j = 0; j < 4; ++j) {
      auto x = F4->element_by_index(i), y = F4->element_by_index(j);
      CHECK(e.apply(x * y) == e.apply(x) * e.apply(y));
      CHECK(e.apply(x + y) == e.apply(x) + e.apply(y));
    }

  // image of the generator: a root of the source modulus, found among all
  // roots by exhaustive search over F_16, and the smallest in the
  // deterministic element order
  auto img = e.image_of_generator();
  std::vector<FieldElement> roots;
  for (std::uint64_t i = 0; i < 16; ++i) {
    auto y = F16->element_by_index(i);
    // evaluate x^2 + x + 1 at y
    auto v = y * y + y + F16->one();
    if (v.is_zero()) roots.push_back(y);
  }
  REQUIRE(roots.size() == 2);
  bool found = false;
  for (const auto& r : roots)
    if (r == img) found = true;
  CHECK(found);
  auto smallest = *std::min_element(roots.begin(), roots.end());
  CHECK(img == smallest);

  auto F8 = PrimePowerField::get(2, 3);
  CHECK_THROWS_AS(TowerEmbedding::get(F4, F8), input_error); // 2 does not divide 3
}

TEST_CASE("embedding chains commute (exhaustive to order 256)") {
  // q = 2: 1 | 2 | 4 | 8 ; q = 3: 1 | 2 | 4 (3^4 = 81); q = 5: 1 | 2 (25)
  struct Chain {
    std::uint64_t p;
    std::vector<std::uint32_t> degs;
  };
  for (const Chain& ch : {Chain{2, {1, 2, 4, 8}}, Chain{3, {1, 2, 4}}, Chain{5, {1, 2}}}) {
    for (size_t ai = 0; ai < ch.degs.size(); ++ai)
      for (size_t bi = ai; bi < ch.degs.size(); ++bi)
        for (size_t ci = bi; ci < ch.degs.size(); ++ci) {
          std::uint32_t a = ch.degs[ai], b = ch.degs[bi], c = ch.degs[ci];
          if (b % a || c % b) continue;
          auto Fa = PrimePowerField::get(ch.p, a);
          auto Fb = PrimePowerField::get(ch.p, b);
          auto Fc = PrimePowerField::get(ch.p, c);
          auto ab = TowerEmbedding::get(Fa, Fb);
          auto bc = TowerEmbedding::get(Fb, Fc);
          auto ac = TowerEmbedding::get(Fa, Fc);
          for (std::uint64_t i = 0; i < Fa->order(); ++i) {
            auto x = Fa->element_by_index(i);
            CHECK(bc.apply(ab.apply(x)) == ac.apply(x));
          }
        }
  }
}

TEST_CASE("frobenius") {
  auto F16 = PrimePowerField::get(2, 4);
  CHECK(frobenius(F16->zero(), 2) == F16->zero());

  // additive and multiplicative on exhaustive scans of fields of order <= 256
  for (auto [p, m] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{
           {2, 4}, {2, 8}, {3, 4}, {5, 2}, {13, 1}}) {
    auto F = PrimePowerField::get(p, m);
    for (std::uint64_t i = 0; i < F->order(); ++i)
      for (std::uint64_t j = 0; j < F->order(); j += 3) {
        auto x = F->element_by_index(i), y = F->element_by_index(j);
        CHECK(frobenius(x + y, p) == frobenius(x, p) + frobenius(y, p));
        CHECK(frobenius(x * y, p) == frobenius(x, p) * frobenius(y, p));
      }
  }

  // fixed points of x -> x^2 on F_16 are exactly F_2
  int fixed = 0;
  for (std::uint64_t i = 0; i < 16; ++i) {
    auto x = F16->element_by_index(i);
    if (frobenius(x, 2) == x) ++fixed;
  }
  CHECK(fixed == 2);

  // the fixed set of the a-fold iterate is the embedded F_{q^a}
  auto F4 = PrimePowerField::get(2, 2);
  auto e = TowerEmbedding::get(F4, F16);
  int fixed4 = 0;
  for (std::uint64_t i = 0; i < 16; ++i) {
    auto x = F16->element_by_index(i);
    if (frobenius(frobenius(x, 2), 2) == x) {
      ++fixed4;
      bool in_image = false;
      for (std::uint64_t j = 0; j < 4; ++j)
        if (e.apply(F4->element_by_index(j)) == x) in_image = true;
      CHECK(in_image);
    }
  }
  CHECK(fixed4 == 4);

  CHECK_THROWS_AS(frobenius(F16->one(), 3), input_error);
}

TEST_CASE("cyclotomic fields") {
  auto Q = CyclotomicField::get(1);
  CHECK(Q->phi() == 1);
  CHECK(Q->zeta() == Q->one()); // zeta_1 = 1

  auto Q2 = CyclotomicField::get(2);
  CHECK(Q2->zeta() == Q2->from_mpq(-1));

  auto Q4 = CyclotomicField::get(4);
  CHECK(Q4->minimal_polynomial() == std::vector<mpz_class>{1, 0, 1}); // x^2 + 1
  CHECK(Q4->zeta() * Q4->zeta() == Q4->from_mpq(-1));
  CHECK(Q4->zeta().conj() == Q4->zeta_pow(-1));
  CHECK((Q4->zeta() * Q4->zeta().conj()).is_rational());

  // lift Q(z_4) -> Q(z_12)
  auto Q12 = CyclotomicField::get(12);
  CHECK(Q12->lift(Q4->zeta()) == Q12->zeta_pow(3));
}

TEST_CASE("coefficient scalar arithmetic (randomized exact samples)") {
  std::mt19937 rng(20240811);
  for (const char* name : {"Q", "Q(z_4)", "Q(z_12)", "F_3", "F_3^2"}) {
    CoeffField F = CoeffField::parse(name);
    CHECK(F.str() == name);
    auto rnd = [&]() {
      if (F.char_zero()) {
        long num = static_cast<long>(rng() % 19) - 9;
        long den = 1 + static_cast<long>(rng() % 7);
        Scalar s = F.from_mpq(mpq_class(num, den));
        if (F.cyclo_index() > 2) {
          std::int64_t k = static_cast<std::int64_t>(rng() % F.cyclo_index());
          s = s * F.coerce(Scalar(F.cyclo()->zeta_pow(k)));
        }
        return s;
      }
      std::uint64_t q = F.finite_field()->order();
      return Scalar(F.finite_field()->element_by_index(rng() % q));
    };
    for (int it = 0; it < 50; ++it) {
      Scalar x = rnd(), y = rnd(), z = rnd();
      CHECK((x + y) + z == x + (y + z));
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      if (!x.is_zero()) CHECK((x * x.inverse()).is_one());
    }
  }
}

TEST_CASE("root_of_unity and joins") {
  CoeffField F = CoeffField::cyclotomic(12);
  Scalar z3 = F.root_of_unity(3);
  CHECK((z3 * z3 * z3).is_one());
  CHECK(!z3.is_one());

  CoeffField G = CoeffField::cyclotomic(8);
  CoeffField J = F.join(G);
  CHECK(J.cyclo_index() == 24);
  CHECK(J.coerce(z3) * J.coerce(z3) * J.coerce(z3) == J.one());

  CoeffField F9 = CoeffField::finite(3, 2);
  Scalar w = F9.root_of_unity(8);
  Scalar acc = w;
  int ord = 1;
  while (!acc.is_one()) {
    acc = acc * w;
    ++ord;
  }
  CHECK(ord == 8);
}
