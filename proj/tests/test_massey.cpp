#include <doctest.h>

#include "hhops/catalog.hpp"
#include "hhops/errors.hpp"
#include "hhops/spectral.hpp"
#include "oracle.hpp"

using namespace hhops;

namespace {

LieElement as_dgl(const LieElement& e) {
  LieElement out(BracketConvention::dgl);
  for (const auto& [m, c] : e.terms()) out.add_term(m, c);
  return out;
}

// Brute force: is e in d(span of all left-normed brackets of degree |e|+1)?
// Works in the tensor algebra only; no Hall basis or linalg involved.
bool oracle_bounds(const FreeDgl& dgl, const LieElement& e) {
  int degree = *normalize(e).homogeneous_degree();
  std::vector<Letter> letters;
  for (const auto& g : dgl.generators) letters.push_back(Letter{g, {}});
  oracle::RankAccumulator acc;
  for (const auto& b : oracle::left_normed(letters, degree + 1, static_cast<std::size_t>(-1)))
    acc.add(oracle::expand(apply_derivation(dgl.differential, as_dgl(b), false)));
  return !acc.add(oracle::expand(e));
}

}  // namespace

TEST_CASE("the three-generator fixture squares to zero on every generator") {
  FreeDgl dgl = bmf_fixture(BmfVariant::table);
  for (const auto& g : dgl.generators) {
    CAPTURE(g.name);
    LieElement dd = dgl.d(dgl.d(LieElement::of(g, 1, BracketConvention::dgl)));
    CHECK(dd.is_zero());
    CHECK(oracle::is_zero_in_free_lie(
        apply_derivation(dgl.differential,
                         apply_derivation(dgl.differential, LieElement::of(g, 1, BracketConvention::dgl), false),
                         false)));
  }
}

TEST_CASE("the halved reading of d(w) violates d^2 = 0") {
  FreeDgl dgl = bmf_fixture(BmfVariant::halved);
  for (const auto& g : dgl.generators) {
    CAPTURE(g.name);
    LieElement dd = dgl.d(dgl.d(LieElement::of(g, 1, BracketConvention::dgl)));
    if (g.name == "w") {
      CHECK(equivalent(dd, dgl.parse("1/4*[x, [x, y]]")));
      CHECK_FALSE(dd.is_zero());
    } else {
      CHECK(dd.is_zero());
    }
  }
}

TEST_CASE("alpha is a cycle that does not bound") {
  for (bool seven : {false, true}) {
    for (auto variant : {BmfVariant::table, BmfVariant::halved}) {
      CAPTURE(seven);
      FreeDgl dgl = bmf_fixture(variant, seven);
      LieElement alpha = bmf_alpha(dgl);
      CHECK(dgl.d(alpha).is_zero());
      CHECK(oracle::is_zero_in_free_lie(apply_derivation(dgl.differential, alpha, false)));
      CHECK_FALSE(dgl_boundary_witness(dgl, alpha).has_value());
      CHECK_FALSE(oracle_bounds(dgl, alpha));
    }
  }
  FreeDgl six = bmf_fixture(BmfVariant::table, false);
  CHECK(dgl_homology_rank(six, 6) >= 1);
}

TEST_CASE("the printed minus-sign alpha is not a cycle") {
  FreeDgl dgl = bmf_fixture();
  CHECK_FALSE(dgl.d(dgl.parse("2*[yx, x] - [x2, y]")).is_zero());
  CHECK(normalize(dgl.parse("2*[[y, x], x] + [[x, x], y]")).is_zero());
  CHECK_FALSE(normalize(dgl.parse("2*[[y, x], x] - [[x, x], y]")).is_zero());
}

TEST_CASE("with the degree-7 generators alpha is homologous to -2z") {
  FreeDgl dgl = bmf_fixture(BmfVariant::table, true);
  LieElement diff = bmf_alpha(dgl) + dgl.parse("2*z");
  auto witness = dgl_boundary_witness(dgl, diff);
  REQUIRE(witness.has_value());
  CHECK(equivalent(dgl.d(*witness), diff));
  CHECK(oracle_bounds(dgl, diff));
  CHECK(equivalent(dgl.d(dgl.parse("2*w - 2*y2")), diff));
}

TEST_CASE("<y, x, x> is defined and its value is 2 alpha") {
  for (bool seven : {false, true}) {
    CAPTURE(seven);
    DefiningSystem system = bmf_defining_system(seven);
    DefiningSystemReport r = verify_defining_system(system);
    CHECK(r.valid());
    CHECK(r.inputs_are_cycles);
    CHECK(r.value_is_cycle);
    CHECK(equivalent(r.value, Rational(2) * bmf_alpha(system.dgl)));
    CHECK_FALSE(r.bounding_witness.has_value());
    CHECK_FALSE(oracle_bounds(system.dgl, r.value));
  }
}

TEST_CASE("odd triple products are defined with the expected value") {
  for (int p : {1, 3})
    for (int q : {1, 3, 5})
      for (int r : {1, 3}) {
        CAPTURE(p);
        CAPTURE(q);
        CAPTURE(r);
        DefiningSystem system = odd_triple_system(p, q, r);
        DefiningSystemReport report = verify_defining_system(system);
        CHECK(report.valid());
        CHECK(report.value_is_cycle);
        LieElement expected = system.dgl.parse("[xp, xqr] + [xpq, xr] + [xpr, xq]");
        CHECK(equivalent(report.value, expected));
        CHECK_FALSE(report.value.is_zero());
      }
  DefiningSystem system = odd_triple_system(1, 1, 1);
  CHECK(equivalent(verify_defining_system(system).value, system.dgl.parse("[xp, xqr] + [xpq, xr] + [xpr, xq]")));
  CHECK_THROWS_AS(odd_triple_system(2, 1, 1), DomainError);
  CHECK_THROWS_AS(odd_triple_system(1, 1, -1), DomainError);
}

TEST_CASE("the simplicial odd triple value is a Moore cycle") {
  for (int p : {1, 3})
    for (int q : {1, 3})
      for (int r : {1, 3}) {
        Representative v = odd_triple_simplicial_value(p, q, r);
        CHECK(v.level == 1);
        CHECK(is_moore_cycle(v.object, 1, v.element));
        CHECK_FALSE(normalize(v.element).is_zero());
      }
  CHECK_THROWS_AS(odd_triple_simplicial_value(1, 2, 1), DomainError);
}

TEST_CASE("a corrupted entry is reported with its exact defect") {
  DefiningSystem system = bmf_defining_system();
  system.entries[{2, 3}] = system.dgl.parse("x2");
  DefiningSystemReport r = verify_defining_system(system);
  REQUIRE(r.defects.size() == 1);
  CHECK(r.defects[0].index == std::vector<int>{2, 3});
  CHECK(equivalent(r.defects[0].actual, system.dgl.parse("1/2*[x, x]")));
  CHECK(equivalent(r.defects[0].expected, system.dgl.parse("[x, x]")));
  CHECK_FALSE(r.valid());
}

TEST_CASE("obstructions of a defining system are cycles") {
  DefiningSystem system = odd_triple_system(1, 3, 1);
  for (auto I : std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}, {1, 2, 3}})
    CHECK(system.dgl.d(normalize(lie_massey_obstruction(system, I))).is_zero());
  CHECK_THROWS_AS(lie_massey_obstruction(system, {2, 1}), DomainError);
  CHECK_THROWS_AS(lie_massey_obstruction(system, {1}), DomainError);
}

TEST_CASE("missing entries raise IncompleteSystem") {
  DefiningSystem system = bmf_defining_system();
  system.entries.erase({1, 3});
  CHECK_THROWS_AS(verify_defining_system(system), IncompleteSystem);
  CHECK_THROWS_AS(system.x({1, 3}), IncompleteSystem);
  CHECK_THROWS_AS(system.x({4}), DomainError);
}
