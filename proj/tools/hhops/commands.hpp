#pragma once

#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

namespace cli {

using Json = nlohmann::ordered_json;

struct Range {
  int lo = 0;
  int hi = 0;
};

// Parses "A..B" (or a single integer A meaning A..A).
Range parse_range(const std::string& text);

struct Request {
  std::string verb;
  std::string target;
  std::string suite;
  std::string spec;
  std::string into;
  std::string map;
  std::string expr;
  std::string generators;
  std::string degrees;
  std::string export_dir;
  std::string format = "text";
  std::optional<int> p, q, k, l, r, n, level, t;
  std::string s_range = "0..4";
  std::string t_range = "1..8";
  bool integral = false;
  bool normalize = false;
  bool lax = false;
  std::size_t max_dim = 4000;
  int max_degree = 12;
  unsigned seed = 1;
  unsigned threads = 0;
};

// Bad flag values and unknown targets; exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Result {
  Json report;
  bool ok = true;  // false when a requested check failed
};

Result run_formula(const Request& req);
Result run_verify(const Request& req);
Result run_e2(const Request& req);
Result run_splice(const Request& req);
Result run_hall(const Request& req);
Result run_fixtures(const Request& req);

// Renderers; each reads only the report so text and JSON cannot drift apart.
std::string render_text(const Json& report);
std::string render_latex(const Json& report);

// HHOPS_FIXTURE_DIR, else the directory configured at build time.
std::string fixture_dir();

}  // namespace cli
