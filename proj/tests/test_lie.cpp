#include <doctest.h>

#include <random>

#include "hhops/errors.hpp"
#include "hhops/lie.hpp"
#include "oracle.hpp"

using namespace hhops;

namespace {

const BracketConvention W = BracketConvention::whitehead;
const BracketConvention D = BracketConvention::dgl;

LieElement gen(const GeneratorSymbol& g, BracketConvention c = W) { return LieElement::of(g, 1, c); }

// Random raw element of degree t over gens, as a sum of random bracket trees.
struct RandomElements {
  std::mt19937 rng;
  std::vector<GeneratorSymbol> gens;
  BracketConvention conv;

  std::optional<LieMonomial> tree(int t, int depth) {
    std::vector<const GeneratorSymbol*> exact;
    for (const auto& g : gens)
      if (g.reduced_degree == t) exact.push_back(&g);
    if (!exact.empty() && (depth == 0 || rng() % 3 == 0))
      return LieMonomial::leaf(Letter{*exact[rng() % exact.size()], {}});
    if (depth == 0 || t < 2) return std::nullopt;
    for (int attempt = 0; attempt < 8; ++attempt) {
      int a = 1 + static_cast<int>(rng() % (t - 1));
      auto l = tree(a, depth - 1);
      auto r = tree(t - a, depth - 1);
      if (l && r) return LieMonomial::bracket(*l, *r);
    }
    return std::nullopt;
  }

  LieElement element(int t, int terms) {
    LieElement e(conv);
    for (int i = 0; i < terms; ++i)
      if (auto m = tree(t, 4)) e.add_term(*m, Rational(static_cast<int>(rng() % 7) - 3, 1 + static_cast<int>(rng() % 3)));
    return e;
  }
};

bool same_in_free_lie(const LieElement& a, const LieElement& b) { return oracle::is_zero_in_free_lie(a - b); }

}  // namespace

TEST_CASE("generator symbols validate") {
  CHECK_THROWS_AS(GeneratorSymbol("x", 0), DomainError);
  CHECK_THROWS_AS(GeneratorSymbol("x", 1, -1), DomainError);
  CHECK_THROWS_AS(GeneratorSymbol("s0", 1), NamingError);
  CHECK_THROWS_AS(GeneratorSymbol("1x", 1), NamingError);
  CHECK_NOTHROW(GeneratorSymbol("sigma", 1));
  CHECK(GeneratorSymbol("x", 2).sphere_dim() == 3);
}

TEST_CASE("degeneracy composition follows s_i s_j = s_{j+1} s_i") {
  CHECK(compose_degeneracy(1, IndexSet{0}) == IndexSet{0, 1});
  CHECK(compose_degeneracy(0, IndexSet{0}) == IndexSet{0, 1});
  for (int j = 0; j < 5; ++j)
    for (unsigned mask = 0; mask < 32; ++mask) {
      std::vector<int> I;
      for (int i = 0; i < 5; ++i)
        if (mask >> i & 1u) I.push_back(i);
      std::vector<int> ops(I.rbegin(), I.rend());
      ops.insert(ops.begin(), j);
      auto expected = oracle::canonical_ops(ops);
      std::sort(expected.begin(), expected.end());
      CHECK(compose_degeneracy(j, IndexSet(I)).elements() == expected);
    }
}

TEST_CASE("antisymmetry sign uses sphere dimensions") {
  for (int p = 1; p <= 4; ++p)
    for (int q = 1; q <= 4; ++q) {
      GeneratorSymbol a("a", p), b("b", q);
      LieElement ab = bracket(gen(a), gen(b)), ba = bracket(gen(b), gen(a));
      int sign = ((p + 1) * (q + 1)) % 2 == 0 ? 1 : -1;
      CHECK(equivalent(ba, sign * ab));
      CHECK(!ab.is_zero());
    }
  CHECK(bracket(gen(GeneratorSymbol("a", 1)), LieElement()).is_zero());
}

TEST_CASE("squares survive exactly for odd reduced degree") {
  for (int p = 1; p <= 6; ++p) {
    GeneratorSymbol x("x", p);
    CHECK(bracket(gen(x), gen(x)).is_zero() == (p % 2 == 0));
    CHECK(bracket(gen(x, D), gen(x, D)).is_zero() == (p % 2 == 0));
  }
}

TEST_CASE("degenerate letters in the degree-2 example anticommute") {
  GeneratorSymbol i3("i3", 2, 1);
  auto table = make_generator_table(std::vector<GeneratorSymbol>{i3});
  auto lhs = normalize(parse_element("[s1 i3, s0 i3]", table));
  auto rhs = normalize(parse_element("-[s0 i3, s1 i3]", table));
  CHECK(lhs == rhs);
  CHECK(!lhs.is_zero());
}

TEST_CASE("normalize is idempotent, linear and exact on random elements") {
  for (auto conv : {W, D}) {
    RandomElements gen_{std::mt19937(1234), {GeneratorSymbol("a", 1), GeneratorSymbol("b", 1), GeneratorSymbol("c", 2),
                                            GeneratorSymbol("d", 3)},
                        conv};
    for (int t = 2; t <= 8; ++t)
      for (int trial = 0; trial < 6; ++trial) {
        LieElement a = gen_.element(t, 3), b = gen_.element(t, 3);
        LieElement na = normalize(a), nb = normalize(b);
        CHECK(normalize(na) == na);
        CHECK(normalize(a + b) == na + nb);
        CHECK(normalize(Rational(-5, 3) * a) == Rational(-5, 3) * na);
        CHECK(same_in_free_lie(a, na));
        CHECK(na.is_zero() == oracle::is_zero_in_free_lie(a));
      }
  }
}

TEST_CASE("antisymmetry and Jacobi hold on Hall monomials up to degree 8") {
  std::vector<GeneratorSymbol> gens{GeneratorSymbol("a", 1), GeneratorSymbol("b", 2), GeneratorSymbol("c", 3)};
  std::vector<LieElement> hall;
  for (int t = 1; t <= 6; ++t)
    for (const auto& m : hall_basis(gens, t, t)) hall.push_back(LieElement::of(m));
  std::size_t checked = 0;
  for (const auto& x : hall)
    for (const auto& y : hall) {
      int p = *x.homogeneous_degree(), q = *y.homogeneous_degree();
      if (p + q > 8) continue;
      int sign = ((p + 1) * (q + 1)) % 2 == 0 ? 1 : -1;
      CHECK(equivalent(bracket_raw(x, y), sign * bracket_raw(y, x)));
      for (const auto& z : hall) {
        int r = *z.homogeneous_degree();
        if (p + q + r > 8) continue;
        // (-1)^{(p+1)(r+1)}[[x,y],z] + cyclic = 0
        auto e = [](int u, int v) { return ((u + 1) * (v + 1)) % 2 == 0 ? 1 : -1; };
        LieElement jacobi = e(p, r) * bracket_raw(bracket_raw(x, y), z) + e(q, p) * bracket_raw(bracket_raw(y, z), x) +
                            e(r, q) * bracket_raw(bracket_raw(z, x), y);
        CHECK(normalize(jacobi).is_zero());
        ++checked;
      }
    }
  CHECK(checked > 100);
}

TEST_CASE("hall_basis examples") {
  GeneratorSymbol x("x", 1), y("y", 1), e2("e", 2);
  auto one = hall_basis(std::vector<GeneratorSymbol>{x}, 2, 2);
  REQUIRE(one.size() == 1);
  CHECK(to_string(one[0]) == "[x, x]");
  CHECK(hall_basis(std::vector<GeneratorSymbol>{x, y}, 2, 2).size() == 3);
  CHECK(hall_basis(std::vector<GeneratorSymbol>{e2}, 4, 2).empty());
}

TEST_CASE("hall_basis dimensions match the span oracle") {
  // Every multiset of at most three generators with degrees <= 3.
  std::vector<std::vector<int>> multisets;
  for (int a = 1; a <= 3; ++a) {
    multisets.push_back({a});
    for (int b = a; b <= 3; ++b) {
      multisets.push_back({a, b});
      for (int c = b; c <= 3; ++c) multisets.push_back({a, b, c});
    }
  }
  for (const auto& ms : multisets) {
    std::vector<GeneratorSymbol> gens;
    for (std::size_t i = 0; i < ms.size(); ++i) gens.emplace_back(std::string(1, static_cast<char>('a' + i)), ms[i]);
    for (int t = 1; t <= 8; ++t) {
      auto basis = hall_basis(gens, t, t);
      std::vector<oracle::Tensor> tensors;
      for (const auto& m : basis) tensors.push_back(oracle::expand(LieElement::of(m)));
      std::size_t expected = oracle::free_lie_dimension(gens, t);
      INFO("degrees " << ms.size() << " target " << t);
      CHECK(basis.size() == expected);
      CHECK(oracle::rank_of(tensors) == basis.size());
    }
  }
}

TEST_CASE("hall_basis respects the weight bound") {
  std::vector<GeneratorSymbol> gens{GeneratorSymbol("a", 1), GeneratorSymbol("b", 2)};
  for (const auto& m : hall_basis(gens, 6, 3)) CHECK(m.weight() <= 3);
  CHECK(hall_basis(gens, 6, 3).size() < hall_basis(gens, 6, 6).size());
}

TEST_CASE("Lie maps preserve brackets") {
  GeneratorSymbol a("a", 1), b("b", 2), u("u", 1), v("v", 1);
  std::vector<GeneratorSymbol> all{a, b, u, v};
  auto table = make_generator_table(all);
  LieAssignment f{{"a", parse_element("u + 2*v", table)},
                  {"b", parse_element("[u, v] - 1/2*[v, v]", table)},
                  {"u", parse_element("u", table)},
                  {"v", parse_element("a", table)}};
  RandomElements r{std::mt19937(99), {a, b}, W};
  for (int t = 2; t <= 6; ++t)
    for (int trial = 0; trial < 4; ++trial) {
      LieElement x = r.element(1 + trial % 2, 2), y = r.element(t, 2);
      CHECK(apply_lie_map(f, bracket_raw(x, y)) == bracket(apply_lie_map(f, x), apply_lie_map(f, y)));
    }
  LieAssignment identity{{"a", gen(a)}, {"b", gen(b)}};
  auto e = parse_element("[a, b] + 3*[[a, a], b]", table);
  CHECK(apply_lie_map(identity, e) == normalize(e));
  LieAssignment kill{{"a", LieElement()}, {"b", gen(b)}};
  CHECK(apply_lie_map(kill, e).is_zero());
  CHECK_THROWS_AS(apply_lie_map(LieAssignment{{"a", gen(a)}}, e), UnboundGenerator);
  CHECK_THROWS_AS(apply_lie_map(LieAssignment{{"a", gen(b)}, {"b", gen(b)}}, e), MalformedMap);
}

TEST_CASE("comparison-map example: i_{i,j} -> 2 i3 and i_k -> i2") {
  GeneratorSymbol ij("i_1_2", 2, 1), k("i_3", 1, 0), i3("i3", 2, 1), i2("i2", 1, 0);
  auto table = make_generator_table(std::vector<GeneratorSymbol>{ij, k, i3, i2});
  LieAssignment f{{"i_1_2", parse_element("2*i3", table)}, {"i_3", parse_element("i2", table)}};
  CHECK(apply_lie_map(f, parse_element("[i_1_2, s0 i_3]", table)) == normalize(parse_element("2*[i3, s0 i2]", table)));
}

TEST_CASE("derivations satisfy their Leibniz rule") {
  GeneratorSymbol x("x", 1), y("y", 2), z("z", 3), w("w", 4);
  std::vector<GeneratorSymbol> gens{x, y, z, w};
  auto table = make_generator_table(gens);
  for (auto conv : {D, W}) {
    auto P = [&](const char* s) { return parse_element(s, table, conv); };
    LieAssignment d{{"x", LieElement(conv)},
                    {"y", P("x")},
                    {"z", P("[x, x]")},
                    {"w", conv == D ? P("[y, x] - z") : P("[y, x] + z")}};
    RandomElements r{std::mt19937(7), gens, conv};
    for (int t = 1; t <= 6; ++t)
      for (int u = 1; u <= 6; ++u) {
        LieElement a = r.element(t, 2), b = r.element(u, 2);
        if (a.is_zero() || b.is_zero()) continue;
        int deg = *a.homogeneous_degree();
        int sign = deg % 2 == 0 ? 1 : -1;
        LieElement expected = (conv == D ? 1 : -1) * bracket_raw(apply_derivation(d, a), b) +
                              sign * bracket_raw(a, apply_derivation(d, b));
        CHECK(apply_derivation(d, bracket_raw(a, b)) == normalize(expected));
      }
    // d^2 vanishes on generators, hence everywhere.
    for (const auto& g : gens) CHECK(apply_derivation(d, apply_derivation(d, LieElement::of(g, 1, conv))).is_zero());
    for (int t = 2; t <= 7; ++t) {
      LieElement a = r.element(t, 3);
      CHECK(apply_derivation(d, apply_derivation(d, a)).is_zero());
    }
    CHECK_THROWS_AS(apply_derivation(LieAssignment{{"x", P("y")}}, P("x")), MalformedMap);
  }
}

TEST_CASE("only the plus-sign Jacobi consequence vanishes") {
  GeneratorSymbol x("x", 1), y("y", 3);
  auto table = make_generator_table(std::vector<GeneratorSymbol>{x, y});
  for (auto conv : {D, W}) {
    CHECK(normalize(parse_element("2*[[y, x], x] + [[x, x], y]", table, conv)).is_zero());
    CHECK(!normalize(parse_element("2*[[y, x], x] - [[x, x], y]", table, conv)).is_zero());
  }
}

TEST_CASE("element printing and parsing round-trip") {
  GeneratorSymbol ip("ip", 2, 1), iq("iq", 2, 1), x("x", 1, 1);
  auto table = make_generator_table(std::vector<GeneratorSymbol>{ip, iq, x});
  const char* texts[] = {"[s0 ip, s1 iq] - [s1 ip, s0 iq]", "-1/2*[x, x]", "0", "x", "3*[[x, x], x]",
                         "[s1 x, s0 x] - 1/3*[[s0 x, s1 x], s0 x]"};
  for (const char* t : texts) {
    auto e = parse_element(t, table);
    CHECK(to_string(e) == t);
    CHECK(parse_element(to_string(e), table) == e);
    CHECK(parse_term_list_json(to_term_list_json(e), table) == e);
  }
  CHECK(to_string(parse_element("  [ s0 ip ,s1   iq ]", table)) == "[s0 ip, s1 iq]");
  CHECK(to_string(parse_element("s0 s0 ip", table)) == "s1 s0 ip");
  CHECK(to_latex(parse_element("[s0 ip, s1 iq] - [s1 ip, s0 iq]", table)).find("s_{0}") != std::string::npos);
}

TEST_CASE("parser errors carry their kind") {
  GeneratorSymbol x("x", 1), y("y", 2);
  auto table = make_generator_table(std::vector<GeneratorSymbol>{x, y});
  CHECK_THROWS_AS(parse_element("[x, ", table), ParseError);
  CHECK_THROWS_AS(parse_element("[x, z]", table), UnboundGenerator);
  CHECK_THROWS_AS(parse_element("[x + y, x]", table), MalformedElement);
  CHECK_THROWS_AS(parse_element("1/0*x", table), ParseError);
  try {
    parse_element("x + + y", table);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() >= 3);
  }
  CHECK_THROWS_AS(parse_term_list_json(R"([{"coeff":"1","monomial":"[x, y]","degree":4}])", table), MalformedElement);
  CHECK_THROWS_AS(make_generator_table(std::vector<GeneratorSymbol>{x, x}), NamingError);
}

TEST_CASE("normalize rejects non-additive declared degrees") {
  GeneratorSymbol x("x", 1);
  auto leaf = LieMonomial::leaf(Letter{x, {}});
  auto bad = LieMonomial::bracket_with_degree(leaf, leaf, 5);
  CHECK_THROWS_AS(normalize(LieElement::of(bad)), MalformedElement);
  CHECK_NOTHROW(normalize(LieElement::of(LieMonomial::bracket_with_degree(leaf, leaf, 2))));
}

TEST_CASE("mixing conventions is rejected") {
  GeneratorSymbol x("x", 1);
  CHECK_THROWS_AS(gen(x, W) + gen(x, D), DomainError);
  CHECK_NOTHROW(LieElement(W) + gen(x, D));
}
