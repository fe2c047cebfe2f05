#include "commands.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "hhops/catalog.hpp"
#include "hhops/errors.hpp"
#include "hhops/spectral.hpp"

#ifndef HHOPS_DEFAULT_FIXTURE_DIR
#define HHOPS_DEFAULT_FIXTURE_DIR "fixtures"
#endif

namespace cli {

using namespace hhops;
namespace fs = std::filesystem;

namespace {

int need(const std::optional<int>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required flag --") + flag);
  return *v;
}

std::vector<int> parse_int_list(const std::string& text, const char* flag) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw UsageError(std::string("--") + flag + ": expected comma-separated integers, got '" + text + "'");
    }
  }
  if (out.empty()) throw UsageError(std::string("missing required flag --") + flag);
  return out;
}

Json terms_json(const LieElement& e) { return Json::parse(to_term_list_json(e)); }

std::string read_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// A path as given, else the same file name inside the fixture directory.
fs::path resolve(const std::string& path) {
  if (path.empty()) throw UsageError("missing file path");
  fs::path p(path);
  if (fs::exists(p)) return p;
  fs::path alt = fs::path(fixture_dir()) / p.filename();
  if (fs::exists(alt)) return alt;
  throw UsageError("no such file: " + path + " (also looked in " + fixture_dir() + ")");
}

SimplicialLieObject load_object(const std::string& path) { return load_resolution_spec(resolve(path).string()); }

struct ExprFile {
  std::map<std::string, std::string> header;  // from "# key: value" lines
  std::string text;
};

ExprFile parse_expr_file(const std::string& content) {
  ExprFile f;
  std::istringstream in(content);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      auto colon = line.find(':');
      if (colon == std::string::npos) continue;
      auto trim = [](std::string s) {
        s.erase(0, s.find_first_not_of(" \t"));
        s.erase(s.find_last_not_of(" \t\r") + 1);
        return s;
      };
      f.header[trim(line.substr(1, colon - 1))] = trim(line.substr(colon + 1));
      continue;
    }
    f.text += (f.text.empty() ? "" : " ") + line;
  }
  return f;
}

// --expr is a file when one exists under that name, else inline text.
ExprFile load_expr(const std::string& expr) {
  if (expr.empty()) throw UsageError("missing required flag --expr");
  fs::path p(expr);
  std::error_code ec;
  if (fs::exists(p, ec)) return parse_expr_file(read_file(p));
  fs::path alt = fs::path(fixture_dir()) / p.filename();
  if (p.extension() == ".expr" && fs::exists(alt, ec)) return parse_expr_file(read_file(alt));
  return ExprFile{{}, expr};
}

Json object_summary(const SimplicialLieObject& X) {
  Json gens = Json::array();
  for (const auto& cw : X.cw_basis())
    gens.push_back({{"name", cw.generator.name},
                    {"reduced_degree", cw.generator.reduced_degree},
                    {"home_dim", cw.generator.home_dim},
                    {"attaching", to_string(cw.attaching)}});
  return Json{{"label", X.label()}, {"generators", gens}};
}

// Catalog objects addressable by --target.
SimplicialLieObject catalog_object(const Request& req) {
  const auto& t = req.target;
  if (t == "omega_hat") return omega_hat(need(req.p, "p"), need(req.q, "q"), need(req.k, "k"), need(req.l, "l")).object;
  if (t == "omega_triple") return omega_triple(need(req.p, "p"), need(req.q, "q"), need(req.r, "r")).object;
  if (t == "cpn") return cpn_resolution(need(req.n, "n"));
  if (t == "wp") return higher_wp_resolution(DegreeVector(parse_int_list(req.degrees, "degrees")));
  if (t == "two_generators") return two_generator_object();
  throw UsageError("unknown object target '" + t + "' (omega_hat, omega_triple, cpn, wp, two_generators)");
}

struct Checks {
  Json list = Json::array();
  bool ok = true;

  void add(const std::string& name, bool pass, const std::string& detail = "", Json witness = nullptr) {
    Json c{{"name", name}, {"ok", pass}, {"detail", detail}};
    if (!witness.is_null()) c["witness"] = std::move(witness);
    list.push_back(std::move(c));
    ok = ok && pass;
  }
};

void suite_omega_hat(Checks& c) {
  for (int p = 3; p <= 5; ++p)
    for (int q = 3; q <= 5; ++q)
      for (int k = 0; k <= 3; ++k)
        for (int l = 0; l <= k; ++l) {
          Representative w = omega_hat(p, q, k, l);
          std::ostringstream name;
          name << "omega_hat(" << p << "," << q << "," << k << "," << l << ") is a Moore cycle";
          c.add(name.str(), is_moore_cycle(w.object, w.level, w.element));
        }
}

void suite_phi_s(Checks& c, const Request& req) {
  std::vector<std::vector<int>> tuples;
  if (!req.degrees.empty()) {
    tuples.push_back(parse_int_list(req.degrees, "degrees"));
  } else {
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b)
        for (int d = 1; d <= 3; ++d) {
          tuples.push_back({a, b, d});
          for (int e = 1; e <= 3; ++e) tuples.push_back({a, b, d, e});
        }
    tuples.push_back({1, 1, 1, 1, 1});
  }
  for (const auto& t : tuples) {
    DegreeVector dv(t);
    const int n = static_cast<int>(t.size());
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i + 1;
    std::string name = "phi_S(";
    for (int i = 0; i < n; ++i) name += (i ? "," : "") + std::to_string(t[i]);
    name += ") is a Moore cycle";
    c.add(name, is_moore_cycle(higher_wp_resolution(dv), n - 2, phi_S(dv, all)));
  }
}

void suite_wedge(Checks& c) {
  SimplicialLieObject X = two_generator_object();
  auto table = X.generator_table();
  int index = 1;
  for (const auto& id : two_generator_identities()) {
    LieElement lhs = Rational(id.sign) * parse_element(id.lhs, table);
    LieElement boundary = total_boundary(X, 5, parse_element(id.witness, table));
    bool ok = equivalent(boundary, lhs);
    std::string name = "identity " + std::to_string(index++) + ": boundary of " + id.witness;
    c.add(name, ok, (id.sign < 0 ? "-(" + id.lhs + ")" : id.lhs),
          ok ? Json(nullptr) : Json{{"boundary", to_string(normalize(boundary))}});
  }
  Representative w = omega_hat(4, 4, 2, 2);
  Grouping g{{"ip", "p"}, {"iq", "q"}};
  for (int t : {6, 7}) {
    auto r = cross_term_e2(w.object, g, 2, t);
    c.add("cross-term E2 rank at (2," + std::to_string(t) + ")", r.rational_rank == 0,
          std::to_string(r.rational_rank));
  }
  c.add("class of omega_hat(4,4,2,2) is nonzero in E2(4,6)", !is_boundary(w.object, 4, 6, w.element).has_value());
}

void suite_cpn(Checks& c, int n_max) {
  for (int n = 1; n <= n_max; ++n) {
    ComparisonMap f = cpn_comparison_map(n);
    ChainMapReport r = verify_chain_map(f.assignment, f.source, f.target, n);
    Json witness = nullptr;
    if (!r.ok()) {
      const auto& v = r.violations.front();
      witness = {{"generator", v.generator}, {"lhs", to_string(v.lhs)}, {"rhs", to_string(v.rhs)}};
    }
    c.add("comparison map n=" + std::to_string(n) + " commutes with d0", r.ok(),
          std::to_string(r.checked) + " generators", witness);
  }
  auto table = cpn_resolution(4).generator_table();
  c.add("gamma_2 = [i3, s0 i2]", equivalent(cpn_gamma(2), parse_element("[i3, s0 i2]", table)));
  c.add("gamma_3 = [i4, s1 s0 i2] - [s0 i3, s1 i3]",
        equivalent(cpn_gamma(3), parse_element("[i4, s1 s0 i2] - [s0 i3, s1 i3]", table)));
  ComparisonMap f = cpn_comparison_map(3);
  LieElement image = apply_lie_map(f.assignment, phi_S(DegreeVector({1, 1, 1, 1}), {1, 2, 3, 4}));
  c.add("f(phi_S) = -24 gamma_3", equivalent(image, Rational(-24) * cpn_gamma(3)), to_string(normalize(image)));
  Integer factorial = 1;
  for (int k = 0; k <= 5; ++k) {
    factorial *= k + 1;
    Integer expected = (k / 2) % 2 ? Integer(-factorial) : factorial;
    c.add("coefficient k=" + std::to_string(k), comparison_coefficient(k) == expected,
          comparison_coefficient(k).get_str());
  }
}

void suite_massey(Checks& c) {
  FreeDgl dgl = bmf_fixture(BmfVariant::table);
  for (const auto& g : dgl.generators)
    c.add("d^2(" + g.name + ") = 0", dgl.d(dgl.d(LieElement::of(g, 1, BracketConvention::dgl))).is_zero());
  LieElement alpha = bmf_alpha(dgl);
  c.add("d(alpha) = 0", dgl.d(alpha).is_zero(), to_string(alpha));
  DefiningSystem yxx = bmf_defining_system(false);
  DefiningSystemReport m = verify_defining_system(yxx);
  c.add("<y,x,x> defining system is valid", m.valid());
  c.add("<y,x,x> value = 2 alpha", equivalent(m.value, Rational(2) * bmf_alpha(yxx.dgl)), to_string(m.value));
  c.add("alpha is not a boundary", !dgl_boundary_witness(yxx.dgl, bmf_alpha(yxx.dgl)).has_value());
  DefiningSystem odd = odd_triple_system(1, 1, 1);
  DefiningSystemReport o = verify_defining_system(odd);
  c.add("odd triple defining system is valid", o.valid() && o.value_is_cycle, to_string(o.value));
}

void suite_identities(Checks& c, const Request& req) {
  SimplicialLieObject X = load_object(req.spec);
  int level = req.level.value_or(6);
  IdentityReport r = verify_simplicial_identities(X, level, req.max_degree);
  Json witness = nullptr;
  if (!r.ok()) {
    const auto& v = r.violations.front();
    witness = {{"level", v.level}, {"i", v.i},           {"j", v.j},
               {"letter", to_string(v.witness)}, {"difference", to_string(v.difference)}};
  }
  c.add("d_i d_j = d_{j-1} d_i on " + X.label(), r.ok(),
        std::to_string(r.checked) + " checked, " + std::to_string(r.violations.size()) + " violations", witness);
}

void suite_cycle(Checks& c, const Request& req) {
  SimplicialLieObject X = load_object(req.spec);
  ExprFile f = load_expr(req.expr);
  int level = req.level ? *req.level : f.header.count("level") ? std::stoi(f.header.at("level")) : -1;
  if (level < 0) throw UsageError("missing required flag --level (or a '# level:' line in the .expr file)");
  LieElement e = parse_element(f.text, X.generator_table());
  c.add("is a Moore chain", is_moore_chain(X, level, e));
  c.add("is a Moore cycle", is_moore_cycle(X, level, e));
  LieElement n = normalize(e);
  if (n.is_zero()) {
    c.add("is nonzero", false);
    return;
  }
  int t = *n.homogeneous_degree();
  SliceBounds bounds;
  bounds.max_dim = req.max_dim;
  c.add("class is nonzero in E2(" + std::to_string(level) + "," + std::to_string(t) + ")",
        !is_boundary(X, level, t, e, bounds).has_value());
}

// Random Hall-free monomials on a(1), b(2), c(3).
struct RandomLie {
  std::mt19937 rng;
  std::vector<GeneratorSymbol> gens{GeneratorSymbol("a", 1), GeneratorSymbol("b", 2), GeneratorSymbol("c", 3)};

  LieMonomial monomial(int degree) {
    std::vector<const GeneratorSymbol*> leaves;
    for (const auto& g : gens)
      if (g.reduced_degree == degree) leaves.push_back(&g);
    if (!leaves.empty() && (degree == 1 || rng() % 3 == 0))
      return LieMonomial::leaf(Letter{*leaves[rng() % leaves.size()], {}});
    int left = 1 + static_cast<int>(rng() % static_cast<unsigned>(degree - 1));
    return LieMonomial::bracket(monomial(left), monomial(degree - left));
  }
  LieElement element(int degree) {
    LieElement e;
    for (int i = 0; i < 3; ++i) e.add_term(monomial(degree), Rational(static_cast<int>(rng() % 7) - 3));
    return e;
  }
};

void suite_normalize(Checks& c, unsigned seed) {
  RandomLie r{std::mt19937(seed)};
  int failures[4] = {0, 0, 0, 0};
  const int trials = 40;
  for (int i = 0; i < trials; ++i) {
    int p = 1 + i % 3, q = 2 + i % 2, s = 1 + (i / 3) % 2;
    LieElement x = r.element(p), y = r.element(q), z = r.element(s);
    LieElement nx = normalize(x);
    if (!(normalize(nx) == nx)) ++failures[0];
    LieElement y2 = r.element(p);
    if (!(normalize(x + y2) == normalize(nx + normalize(y2)))) ++failures[1];
    int sign = ((p + 1) * (q + 1)) % 2 ? -1 : 1;
    if (!equivalent(bracket_raw(x, y), Rational(sign) * bracket_raw(y, x))) ++failures[2];
    auto e = [](int u, int v) { return Rational(((u + 1) * (v + 1)) % 2 ? -1 : 1); };
    LieElement jacobi = e(p, s) * bracket_raw(bracket_raw(x, y), z) + e(q, p) * bracket_raw(bracket_raw(y, z), x) +
                        e(s, q) * bracket_raw(bracket_raw(z, x), y);
    if (!normalize(jacobi).is_zero()) ++failures[3];
  }
  const char* names[4] = {"normalize is idempotent", "normalize is additive", "antisymmetry", "Jacobi"};
  for (int i = 0; i < 4; ++i)
    c.add(names[i], failures[i] == 0, std::to_string(trials - failures[i]) + "/" + std::to_string(trials) +
                                          " random trials (seed " + std::to_string(seed) + ")");
}

}  // namespace

std::string fixture_dir() {
  if (const char* env = std::getenv("HHOPS_FIXTURE_DIR"); env && *env) return env;
  return HHOPS_DEFAULT_FIXTURE_DIR;
}

Range parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      int v = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    Range r;
    std::string a = text.substr(0, dots), b = text.substr(dots + 2);
    r.lo = std::stoi(a, &used);
    if (used != a.size()) throw std::invalid_argument(a);
    r.hi = std::stoi(b, &used);
    if (used != b.size()) throw std::invalid_argument(b);
    if (r.lo > r.hi) throw UsageError("empty range '" + text + "'");
    return r;
  } catch (const std::logic_error&) {
    throw UsageError("expected a range A..B, got '" + text + "'");
  }
}

Result run_formula(const Request& req) {
  const auto& t = req.target;
  Json params = Json::object();
  std::optional<int> level;
  LieElement e;
  if (t == "omega_hat") {
    params = {{"p", need(req.p, "p")}, {"q", need(req.q, "q")}, {"k", need(req.k, "k")}, {"l", need(req.l, "l")}};
    Representative w = omega_hat(*req.p, *req.q, *req.k, *req.l);
    e = w.element;
    level = w.level;
  } else if (t == "omega_triple") {
    params = {{"p", need(req.p, "p")}, {"q", need(req.q, "q")}, {"r", need(req.r, "r")}};
    Representative w = omega_triple(*req.p, *req.q, *req.r);
    e = w.element;
    level = w.level;
  } else if (t == "phi_S") {
    auto degrees = parse_int_list(req.degrees, "degrees");
    params = {{"degrees", degrees}};
    std::vector<int> all(degrees.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i) + 1;
    e = phi_S(DegreeVector(degrees), all);
    level = static_cast<int>(degrees.size()) - 2;
  } else if (t == "cpn_gamma") {
    params = {{"n", need(req.n, "n")}};
    e = cpn_gamma(*req.n);
    level = *req.n - 1;
  } else if (t == "bmf_alpha") {
    e = bmf_alpha(bmf_fixture());
  } else if (t == "massey_yxx") {
    e = verify_defining_system(bmf_defining_system()).value;
  } else if (t == "odd_triple") {
    params = {{"p", need(req.p, "p")}, {"q", need(req.q, "q")}, {"r", need(req.r, "r")}};
    e = verify_defining_system(odd_triple_system(*req.p, *req.q, *req.r)).value;
  } else {
    throw UsageError("unknown formula target '" + t +
                     "' (omega_hat, omega_triple, phi_S, cpn_gamma, bmf_alpha, massey_yxx, odd_triple)");
  }
  if (req.normalize) e = normalize(e);
  Json report{{"verb", "formula"}, {"target", t}, {"parameters", params}};
  report["level"] = level ? Json(*level) : Json(nullptr);
  report["convention"] = e.convention() == BracketConvention::dgl ? "dgl" : "whitehead";
  report["normalized"] = req.normalize;
  report["expression"] = to_string(e);
  report["latex"] = to_latex(e);
  report["terms"] = terms_json(e);
  return {std::move(report), true};
}

Result run_verify(const Request& req) {
  static const std::vector<std::string> suites{"omega_hat", "phi_S",      "wedge", "cpn",
                                               "massey",    "identities", "cycle", "normalize"};
  if (std::find(suites.begin(), suites.end(), req.suite) == suites.end())
    throw UsageError("unknown suite '" + req.suite +
                     "' (omega_hat, phi_S, wedge, cpn, massey, identities, cycle, normalize)");
  Checks c;
  Json params = Json::object();
  if (req.suite == "omega_hat") {
    suite_omega_hat(c);
  } else if (req.suite == "phi_S") {
    suite_phi_s(c, req);
  } else if (req.suite == "wedge") {
    suite_wedge(c);
  } else if (req.suite == "cpn") {
    int n = req.n.value_or(6);
    if (n < 1) throw UsageError("--n must be >= 1");
    params["n"] = n;
    suite_cpn(c, n);
  } else if (req.suite == "massey") {
    suite_massey(c);
  } else if (req.suite == "identities") {
    params = {{"spec", req.spec}, {"level", req.level.value_or(6)}, {"max_degree", req.max_degree}};
    suite_identities(c, req);
  } else if (req.suite == "cycle") {
    params = {{"spec", req.spec}, {"expr", req.expr}};
    suite_cycle(c, req);
  } else {
    params["seed"] = req.seed;
    suite_normalize(c, req.seed);
  }
  std::size_t passed = 0;
  for (const auto& check : c.list)
    if (check["ok"].get<bool>()) ++passed;
  Json report{{"verb", "verify"}, {"suite", req.suite}, {"parameters", params}, {"checks", c.list}};
  report["passed"] = passed;
  report["failed"] = c.list.size() - passed;
  return {std::move(report), c.ok};
}

Result run_e2(const Request& req) {
  Range s = parse_range(req.s_range), t = parse_range(req.t_range);
  if (s.lo < 0 || t.lo < 1) throw UsageError("need s >= 0 and t >= 1");
  SimplicialLieObject X = !req.spec.empty() ? load_object(req.spec) : catalog_object(req);
  SliceBounds bounds;
  bounds.max_dim = req.max_dim;
  auto table = e2_table(X, s.lo, s.hi, t.lo, t.hi, req.integral, bounds, req.threads);
  Json cells = Json::array();
  for (const auto& r : table) {
    Json cell{{"s", r.bidegree.s},       {"t", r.bidegree.t},     {"dimension", r.dimension},
              {"kernel", r.kernel_dim}, {"image", r.image_dim}, {"rank", r.rational_rank}};
    if (r.torsion) {
      Json tor = Json::array();
      for (const auto& d : *r.torsion) tor.push_back(d.get_str());
      cell["torsion"] = tor;
    }
    cells.push_back(std::move(cell));
  }
  Json report{{"verb", "e2"},
              {"object", X.label()},
              {"s", {s.lo, s.hi}},
              {"t", {t.lo, t.hi}},
              {"integral", req.integral},
              {"max_dim", req.max_dim},
              {"cells", cells}};
  if (req.integral) report["note"] = "Lie-lattice torsion only";
  return {std::move(report), true};
}

Result run_splice(const Request& req) {
  SimplicialLieObject Z = load_object(req.spec);
  SimplicialLieObject W = load_object(req.into);
  int m = need(req.level, "level");
  auto table = W.generator_table();
  LieAssignment fhat;
  std::stringstream ss(req.map);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.find_first_not_of(" ") == std::string::npos) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--map entries look like name=expression; got '" + item + "'");
    std::string name = item.substr(0, eq);
    name.erase(0, name.find_first_not_of(' '));
    name.erase(name.find_last_not_of(' ') + 1);
    fhat[name] = parse_element(item.substr(eq + 1), table);
  }
  SpliceOptions options;
  options.require_moore_chain = !req.lax;
  SimplicialLieObject X = splice(Z, W, fhat, m, options);
  const int top = req.level.value() + 3;
  IdentityReport r = verify_simplicial_identities(X, top, req.max_degree);
  Json violations = Json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"level", v.level}, {"i", v.i},           {"j", v.j},
                          {"letter", to_string(v.witness)}, {"difference", to_string(v.difference)}});
  Json report{{"verb", "splice"},
              {"junction_level", m},
              {"object", object_summary(X)},
              {"spec", Json::parse(to_resolution_spec(X))},
              {"identities", {{"max_level", top}, {"checked", r.checked}, {"violations", violations}}}};
  return {std::move(report), r.ok()};
}

Result run_hall(const Request& req) {
  if (req.generators.empty()) throw UsageError("missing required flag --generators (e.g. a:1,b:2)");
  std::vector<GeneratorSymbol> gens;
  std::stringstream ss(req.generators);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) throw UsageError("--generators entries look like name:degree; got '" + item + "'");
    int degree = 0;
    try {
      degree = std::stoi(item.substr(colon + 1));
    } catch (const std::logic_error&) {
      throw UsageError("bad degree in '" + item + "'");
    }
    gens.emplace_back(item.substr(0, colon), degree);
  }
  make_generator_table(gens);  // rejects duplicate names
  Range t = parse_range(req.t_range);
  if (t.lo < 1) throw UsageError("need t >= 1");
  Json gj = Json::array();
  for (const auto& g : gens) gj.push_back({{"name", g.name}, {"degree", g.reduced_degree}});
  Json degrees = Json::array();
  for (int d = t.lo; d <= t.hi; ++d) {
    auto basis = hall_basis(gens, d, d);
    if (basis.size() > req.max_dim)
      throw BoundError("degree " + std::to_string(d) + " has " + std::to_string(basis.size()) + " basis elements > max-dim");
    Json b = Json::array();
    for (const auto& m : basis) b.push_back(to_string(m));
    degrees.push_back({{"t", d}, {"dimension", basis.size()}, {"basis", b}});
  }
  return {Json{{"verb", "hall"}, {"generators", gj}, {"degrees", degrees}}, true};
}

Result run_fixtures(const Request& req) {
  if (!req.export_dir.empty()) {
    fs::create_directories(req.export_dir);
    struct Item {
      std::string file;
      SimplicialLieObject object;
      std::optional<Representative> rep;
    };
    std::vector<Item> items;
    auto rep = [](Representative r) { return std::optional<Representative>(std::move(r)); };
    items.push_back({"wedge_pq_11", omega_hat(3, 3, 1, 1).object, rep(omega_hat(3, 3, 1, 1))});
    items.push_back({"wedge_pq_21", omega_hat(3, 3, 2, 1).object, rep(omega_hat(3, 3, 2, 1))});
    items.push_back({"wedge_pq_22", omega_hat(4, 4, 2, 2).object, rep(omega_hat(4, 4, 2, 2))});
    items.push_back({"wedge_triple", omega_triple(3, 3, 3).object, rep(omega_triple(3, 3, 3))});
    items.push_back({"two_generators", two_generator_object(), std::nullopt});
    items.push_back({"susp_z3_m2", suspension_resolution(std::vector<GeneratorSymbol>{GeneratorSymbol("z", 3)}, 2),
                     std::nullopt});
    items.push_back({"susp_c4_m3", suspension_resolution(std::vector<GeneratorSymbol>{GeneratorSymbol("c", 4)}, 3),
                     std::nullopt});
    items.push_back({"odd_triple", odd_triple_simplicial_value(1, 1, 1).object, rep(odd_triple_simplicial_value(1, 1, 1))});
    items.push_back({"cpn_4", cpn_resolution(4), Representative{cpn_resolution(4), cpn_gamma(3), 2}});
    for (auto degrees : std::vector<std::vector<int>>{{1, 1, 1}, {1, 2, 3}, {1, 1, 1, 1}}) {
      std::string name = "wp";
      for (int d : degrees) name += "_" + std::to_string(d);
      DegreeVector dv(degrees);
      std::vector<int> all(degrees.size());
      for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i) + 1;
      auto W = higher_wp_resolution(dv);
      items.push_back({name, W, Representative{W, phi_S(dv, all), static_cast<int>(degrees.size()) - 2}});
    }
    Json written = Json::array();
    for (const auto& item : items) {
      fs::path spec = fs::path(req.export_dir) / (item.file + ".json");
      std::ofstream(spec) << to_resolution_spec(item.object);
      written.push_back(spec.filename().string());
      if (item.rep) {
        fs::path expr = fs::path(req.export_dir) / (item.file + ".expr");
        std::ofstream(expr) << "# object: " << item.file << ".json\n# level: " << item.rep->level << "\n"
                            << to_string(item.rep->element) << "\n";
        written.push_back(expr.filename().string());
      }
    }
    return {Json{{"verb", "fixtures"}, {"directory", req.export_dir}, {"written", written}}, true};
  }
  fs::path dir(fixture_dir());
  if (!fs::is_directory(dir)) throw UsageError("fixture directory " + dir.string() + " does not exist");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".json" || entry.path().extension() == ".expr") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  Json list = Json::array();
  for (const auto& f : files) {
    if (f.extension() == ".json") {
      SimplicialLieObject X = load_resolution_spec(f.string());
      list.push_back({{"file", f.filename().string()}, {"kind", "resolution"}, {"label", X.label()},
                      {"generators", X.cw_basis().size()}});
    } else {
      ExprFile e = parse_expr_file(read_file(f));
      list.push_back({{"file", f.filename().string()}, {"kind", "element"},
                      {"object", e.header.count("object") ? e.header.at("object") : ""}, {"expression", e.text}});
    }
  }
  return {Json{{"verb", "fixtures"}, {"directory", dir.string()}, {"fixtures", list}}, true};
}

}  // namespace cli
