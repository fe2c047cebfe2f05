#include "hhops/catalog.hpp"

#include <algorithm>
#include <numeric>

#include "hhops/errors.hpp"

namespace hhops {

namespace {

LieElement shuffle_bracket_sum(const GeneratorSymbol& a, const GeneratorSymbol& b, int n, int k) {
  LieElement out;
  for (const auto& part : enumerate_index_partitions(n, k)) {
    LieMonomial m = LieMonomial::bracket(LieMonomial::leaf(Letter{a, part.first()}),
                                         LieMonomial::leaf(Letter{b, part.second()}));
    out.add_term(m, shuffle_sign(part.first(), part.second()));
  }
  return out;
}

std::vector<std::vector<int>> subsets_of_size(int n, int m) {
  std::vector<std::vector<int>> out;
  for (const auto& part : enumerate_shuffles(n, m)) out.push_back(part.first().elements());
  return out;
}

}  // namespace

Representative omega_hat(int p, int q, int k, int l) {
  if (p < 2 || q < 2) throw DomainError("omega_hat: sphere dimensions must be >= 2");
  if (l < 0 || k < l) throw DomainError("omega_hat: need k >= l >= 0");
  GeneratorSymbol ip("ip", p - 1, l), iq("iq", q - 1, k);
  SimplicialLieObject W("S^" + std::to_string(p) + "(x)S^" + std::to_string(k) + " v S^" + std::to_string(q) +
                            "(x)S^" + std::to_string(l),
                        {CwGenerator{ip, LieElement()}, CwGenerator{iq, LieElement()}});
  return {std::move(W), shuffle_bracket_sum(ip, iq, k + l, k), k + l};
}

SimplicialLieObject two_generator_object() {
  GeneratorSymbol p("ip", 3, 3), q("iq", 3, 3);
  return SimplicialLieObject("ip v iq at home 3", {{p, LieElement()}, {q, LieElement()}});
}

std::vector<BoundaryIdentity> two_generator_identities() {
  const std::string x = "[s1 s0 ip, s4 s2 iq]";
  const std::string y = "[s1 s0 ip, s3 s2 iq]";
  // The last four witnesses bound the negative of the bracket sum.
  return {
      {"[s0 ip, s3 iq]", x, 1},
      {"[s0 ip, s2 iq]", y, 1},
      {"[s1 ip, s3 iq]", "[s2 s0 ip, s4 s1 iq] - " + x, -1},
      {"[s1 ip, s2 iq] + [s0 ip, s1 iq]", "[s2 s0 ip, s3 s1 iq] - " + y, -1},
      {"[s1 ip, s2 iq] + [s1 ip, s0 iq]", "[s2 s1 ip, s3 s0 iq]", -1},
      {"[s2 ip, s3 iq] - [s0 ip, s1 iq]", "[s3 s0 ip, s4 s1 iq]", -1},
  };
}

Representative omega_triple(int p, int q, int r) {
  if (p < 2 || q < 2 || r < 2) throw DomainError("omega_triple: sphere dimensions must be >= 2");
  GeneratorSymbol ip("ip", p - 1, 1), iq("iq", q - 1, 1), ir("ir", r - 1, 1);
  GeneratorSymbol u("u", ip.reduced_degree + iq.reduced_degree, 2);
  LieElement f = shuffle_bracket_sum(ip, iq, 2, 1);  // level 2
  LieElement g = shuffle_bracket_sum(u, ir, 3, 1);   // level 3
  LieElement composite = map_letters(
      g,
      [&](const Letter& l) {
        if (l.generator.name == "u") return apply_degeneracy_word(l.word, f);
        return LieElement::of(l);
      },
      false);
  SimplicialLieObject W("(S^" + std::to_string(p) + " v S^" + std::to_string(q) + " v S^" + std::to_string(r) +
                            ")(x)S^1",
                        {CwGenerator{ip, LieElement()}, CwGenerator{iq, LieElement()}, CwGenerator{ir, LieElement()}});
  return {std::move(W), std::move(composite), 3};
}

std::string subset_generator_name(const std::vector<int>& subset) {
  std::string name = "i";
  for (int i : subset) name += "_" + std::to_string(i);
  return name;
}

LieElement phi_S(const DegreeVector& degrees, const std::vector<int>& subset) {
  const int m = static_cast<int>(subset.size());
  if (m < 2) throw DomainError("phi_S: subset must have at least two elements");
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] < 1 || subset[i] > static_cast<int>(degrees.size()))
      throw DomainError("phi_S: subset position out of range");
    if (i > 0 && subset[i] <= subset[i - 1]) throw DomainError("phi_S: subset must be strictly ascending");
  }
  std::vector<int> local;
  for (int pos : subset) local.push_back(degrees[pos - 1]);
  DegreeVector local_degrees(local);

  auto generator_for = [&](const IndexSet& positions) {
    std::vector<int> sub;
    int degree = 0;
    for (int x : positions) {
      sub.push_back(subset[x]);
      degree += local[x];
    }
    return GeneratorSymbol(subset_generator_name(sub), degree, static_cast<int>(sub.size()) - 1);
  };

  LieElement out;
  for (int k = 1; k <= m / 2; ++k) {
    for (const auto& shuffle : enumerate_restricted_shuffles(m, m - k)) {
      ShufflePartition blocks = to_multi_index(shuffle);
      const IndexSet& sp = blocks.first();
      const IndexSet& spp = blocks.second();
      int deg_sp = 0;
      for (int x : sp) deg_sp += local[x];
      int coeff = sign_power(deg_sp + k) * koszul_sign(local_degrees, blocks);
      GeneratorSymbol a = generator_for(sp), b = generator_for(spp);
      for (const auto& inner : enumerate_index_partitions(m - 2, k - 1)) {
        LieMonomial mono = LieMonomial::bracket(LieMonomial::leaf(Letter{a, inner.first()}),
                                                LieMonomial::leaf(Letter{b, inner.second()}));
        out.add_term(mono, coeff * shuffle_sign(inner.first(), inner.second()));
      }
    }
  }
  return out;
}

SimplicialLieObject higher_wp_resolution(const DegreeVector& degrees) {
  const int n = static_cast<int>(degrees.size());
  if (n < 2) throw DomainError("higher_wp_resolution: need at least two spheres");
  std::vector<CwGenerator> basis;
  for (int m = 1; m <= n; ++m)
    for (const auto& subset : subsets_of_size(n, m)) {
      int degree = 0;
      for (int pos : subset) degree += degrees[pos - 1];
      GeneratorSymbol g(subset_generator_name(subset), degree, m - 1);
      basis.push_back(CwGenerator{g, m >= 2 ? phi_S(degrees, subset) : LieElement()});
    }
  std::string label = "W(";
  for (int i = 0; i < n; ++i) label += (i ? "," : "") + std::string("S^") + std::to_string(degrees[i] + 1);
  return SimplicialLieObject(label + ")", std::move(basis));
}

FatWedgeSummary fat_wedge_summands(const std::vector<int>& sphere_dims, int k) {
  const int m = static_cast<int>(sphere_dims.size());
  if (k <= 0 || k >= m) throw DomainError("fat_wedge_summands: need 0 < k < m");
  for (int d : sphere_dims)
    if (d < 1) throw DomainError("fat_wedge_summands: sphere dimensions must be positive");
  FatWedgeSummary out{sphere_dims, k, {}};
  for (const auto& subset : subsets_of_size(m, m - k + 1)) {
    int total = 0;
    for (int pos : subset) total += sphere_dims[pos - 1];
    out.summands.push_back({subset, total - 1});
  }
  return out;
}

namespace {

GeneratorSymbol cpn_generator(int sphere) { return GeneratorSymbol("i" + std::to_string(sphere), sphere - 1, sphere - 2); }

}  // namespace

LieElement cpn_gamma(int n) {
  if (n < 1) throw DomainError("cpn_gamma: n must be >= 1");
  if (n == 1) {
    LieMonomial c2 = LieMonomial::leaf(Letter{cpn_generator(2), {}});
    return LieElement::of(LieMonomial::bracket(c2, c2), Rational(1, 2));
  }
  LieElement out;
  for (int j = 2; j <= (n + 3) / 2; ++j) {
    GeneratorSymbol a = cpn_generator(n - j + 3), b = cpn_generator(j);
    bool symmetric = (n - j + 3 == j);
    for (const auto& part : enumerate_index_partitions(n - 1, j - 2)) {
      if (symmetric && !part.first().contains(0)) continue;
      LieMonomial mono = LieMonomial::bracket(LieMonomial::leaf(Letter{a, part.first()}),
                                              LieMonomial::leaf(Letter{b, part.second()}));
      out.add_term(mono, sign_power(static_cast<long>(n) * j) * shuffle_sign(part.first(), part.second()));
    }
  }
  return out;
}

SimplicialLieObject cpn_resolution(int n) {
  if (n < 1) throw DomainError("cpn_resolution: n must be >= 1");
  std::vector<CwGenerator> basis;
  for (int k = 0; k < n; ++k) {
    CwGenerator cw{cpn_generator(k + 2), k >= 1 ? cpn_gamma(k) : LieElement()};
    cw.rationalized = (k == 1);
    basis.push_back(std::move(cw));
  }
  return SimplicialLieObject("V(CP^" + std::to_string(n) + ")", std::move(basis));
}

Integer comparison_coefficient(int k) {
  Integer f = 1;
  for (int i = 2; i <= k + 1; ++i) f *= i;
  return (k / 2) % 2 == 0 ? f : Integer(-f);
}

ComparisonMap cpn_comparison_map(int n) {
  if (n < 1) throw DomainError("cpn_comparison_map: n must be >= 1");
  ComparisonMap out{higher_wp_resolution(DegreeVector(std::vector<int>(n + 1, 1))), cpn_resolution(n + 1), {}};
  for (const auto& cw : out.source.cw_basis()) {
    int k = cw.generator.home_dim;
    out.assignment.emplace(cw.generator.name,
                           LieElement::of(cpn_generator(k + 2), Rational(comparison_coefficient(k))));
  }
  return out;
}

ChainMapReport verify_chain_map(const LieAssignment& f, const SimplicialLieObject& W, const SimplicialLieObject& V,
                                int up_to_level) {
  ChainMapReport report;
  for (const auto& cw : W.cw_basis()) {
    const int home = cw.generator.home_dim;
    if (home < 1 || home > up_to_level) continue;
    auto it = f.find(cw.generator.name);
    if (it == f.end()) throw UnboundGenerator("chain map has no value on '" + cw.generator.name + "'");
    LieElement lhs = face(V, home, 0, it->second);
    LieElement rhs = apply_lie_map(f, cw.attaching);
    ++report.checked;
    if (!equivalent(lhs, rhs)) report.violations.push_back({cw.generator.name, lhs, rhs});
  }
  return report;
}

}  // namespace hhops
