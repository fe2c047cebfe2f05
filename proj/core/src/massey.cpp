// Lie-Massey defining systems and the DGL fixtures they are tested on.

#include <algorithm>

#include "hhops/catalog.hpp"
#include "hhops/errors.hpp"
#include "hhops/spectral.hpp"

namespace hhops {

const LieElement& DefiningSystem::x(const std::vector<int>& I) const {
  if (I.size() == 1) {
    if (I[0] < 1 || I[0] > static_cast<int>(inputs.size())) throw DomainError("input index out of range");
    return inputs[I[0] - 1];
  }
  auto it = entries.find(I);
  if (it == entries.end()) {
    std::string key;
    for (int i : I) key += (key.empty() ? "" : ",") + std::to_string(i);
    throw IncompleteSystem("defining system has no entry x_{" + key + "}");
  }
  return it->second;
}

LieElement lie_massey_obstruction(const DefiningSystem& system, const std::vector<int>& I) {
  const int n = static_cast<int>(I.size());
  if (n < 2) throw DomainError("lie_massey_obstruction: need at least two indices");
  if (!std::is_sorted(I.begin(), I.end()) || std::adjacent_find(I.begin(), I.end()) != I.end())
    throw DomainError("lie_massey_obstruction: index tuple must be strictly ascending");
  auto input_degree = [&](int i) { return system.x({i}).homogeneous_degree().value_or(0); };

  LieElement out(BracketConvention::dgl);
  // J always holds I's first element (j_1 < k_1).
  for (unsigned mask = 1; mask < (1u << n) - 1; mask += 2) {
    std::vector<int> J, K;
    for (int i = 0; i < n; ++i) ((mask >> i) & 1u ? J : K).push_back(I[i]);
    long epsilon = 0;
    for (int j : J)
      for (int k : K)
        if (k < j) epsilon += static_cast<long>(input_degree(j) + 1) * (input_degree(k) + 1);
    const LieElement& xJ = system.x(J);
    const LieElement& xK = system.x(K);
    if (xJ.is_zero() || xK.is_zero()) continue;
    int sign = sign_power(epsilon + *xJ.homogeneous_degree() + 1);
    out += Rational(sign) * bracket_raw(xJ, xK);
  }
  return out;
}

DefiningSystemReport verify_defining_system(const DefiningSystem& system) {
  DefiningSystemReport report;
  for (const auto& x : system.inputs)
    if (!system.dgl.d(x).is_zero()) report.inputs_are_cycles = false;
  for (const auto& [I, xI] : system.entries) {
    LieElement expected = normalize(lie_massey_obstruction(system, I));
    LieElement actual = system.dgl.d(xI);
    if (!equivalent(expected, actual)) report.defects.push_back({I, expected, actual});
  }
  std::vector<int> full(system.inputs.size());
  for (std::size_t i = 0; i < full.size(); ++i) full[i] = static_cast<int>(i) + 1;
  report.value = normalize(lie_massey_obstruction(system, full));
  report.value_is_cycle = system.dgl.d(report.value).is_zero();
  if (report.value_is_cycle) report.bounding_witness = dgl_boundary_witness(system.dgl, report.value);
  return report;
}

FreeDgl bmf_fixture(BmfVariant variant, bool include_degree_seven) {
  FreeDgl dgl;
  dgl.generators = {GeneratorSymbol("x", 1), GeneratorSymbol("y", 3), GeneratorSymbol("x2", 3),
                    GeneratorSymbol("x3", 5), GeneratorSymbol("yx", 5), GeneratorSymbol("z", 6)};
  if (include_degree_seven) {
    dgl.generators.emplace_back("y2", 7);
    dgl.generators.emplace_back("w", 7);
  }
  const auto table = dgl.table();
  auto d = [&](const char* name, const char* text) {
    dgl.differential.emplace(name, parse_element(text, table, BracketConvention::dgl));
  };
  d("x", "0");
  d("y", "0");
  d("x2", "1/2*[x, x]");
  d("x3", "[x2, x]");
  d("yx", "1/2*[y, x]");
  d("z", "0");
  if (include_degree_seven) {
    d("y2", "1/2*[y, y]");
    if (variant == BmfVariant::table)
      d("w", "z + 1/2*[y, y] + [yx, x] + 1/2*[x2, y]");
    else
      d("w", "z + 1/2*[y, y] + 1/2*[yx, x] + 1/2*[x2, y]");
  }
  return dgl;
}

LieElement bmf_alpha(const FreeDgl& dgl) { return dgl.parse("2*[yx, x] + [x2, y]"); }

DefiningSystem bmf_defining_system(bool include_degree_seven) {
  DefiningSystem system;
  system.dgl = bmf_fixture(BmfVariant::table, include_degree_seven);
  system.inputs = {system.dgl.parse("y"), system.dgl.parse("x"), system.dgl.parse("x")};
  system.entries.emplace(std::vector<int>{1, 2}, system.dgl.parse("2*yx"));
  system.entries.emplace(std::vector<int>{1, 3}, system.dgl.parse("2*yx"));
  system.entries.emplace(std::vector<int>{2, 3}, system.dgl.parse("2*x2"));
  return system;
}

DefiningSystem odd_triple_system(int p, int q, int r) {
  if (p % 2 == 0 || q % 2 == 0 || r % 2 == 0 || p < 1 || q < 1 || r < 1)
    throw DomainError("odd_triple_system: degrees must be odd and positive");
  DefiningSystem system;
  system.dgl.generators = {GeneratorSymbol("xp", p), GeneratorSymbol("xq", q), GeneratorSymbol("xr", r),
                           GeneratorSymbol("xpq", p + q + 1), GeneratorSymbol("xpr", p + r + 1),
                           GeneratorSymbol("xqr", q + r + 1)};
  const auto table = system.dgl.table();
  auto parse = [&](const char* text) { return parse_element(text, table, BracketConvention::dgl); };
  for (const char* g : {"xp", "xq", "xr"}) system.dgl.differential.emplace(g, parse("0"));
  system.dgl.differential.emplace("xpq", parse("[xp, xq]"));
  system.dgl.differential.emplace("xpr", parse("[xp, xr]"));
  system.dgl.differential.emplace("xqr", parse("[xq, xr]"));
  system.inputs = {parse("xp"), parse("xq"), parse("xr")};
  system.entries.emplace(std::vector<int>{1, 2}, parse("xpq"));
  system.entries.emplace(std::vector<int>{1, 3}, parse("xpr"));
  system.entries.emplace(std::vector<int>{2, 3}, parse("xqr"));
  return system;
}

Representative odd_triple_simplicial_value(int p, int q, int r) {
  if (p % 2 == 0 || q % 2 == 0 || r % 2 == 0 || p < 1 || q < 1 || r < 1)
    throw DomainError("odd_triple_simplicial_value: degrees must be odd and positive");
  std::vector<GeneratorSymbol> symbols = {
      GeneratorSymbol("ip", p, 0),         GeneratorSymbol("iq", q, 0),         GeneratorSymbol("ir", r, 0),
      GeneratorSymbol("ipq", p + q, 1), GeneratorSymbol("ipr", p + r, 1), GeneratorSymbol("iqr", q + r, 1)};
  const auto table = make_generator_table(symbols);
  auto parse = [&](const char* text) { return parse_element(text, table); };
  SimplicialLieObject V("V(odd triple)", {CwGenerator{symbols[0], LieElement()},
                                          CwGenerator{symbols[1], LieElement()},
                                          CwGenerator{symbols[2], LieElement()},
                                          CwGenerator{symbols[3], parse("[ip, iq]")},
                                          CwGenerator{symbols[4], parse("[ip, ir]")},
                                          CwGenerator{symbols[5], parse("[iq, ir]")}});
  return {std::move(V), parse("[s0 ip, iqr] + [ipq, s0 ir] + [ipr, s0 iq]"), 1};
}

}  // namespace hhops
