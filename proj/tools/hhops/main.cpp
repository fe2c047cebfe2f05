// hhops: command-line front end to the higher homotopy operations library.
//
// Exit status: 0 all requested checks pass, 1 a verification failed,
// 2 malformed input (flags, spec files, element text), 3 a resource bound
// was exceeded.

#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "hhops/errors.hpp"

namespace {

enum Exit { ok = 0, verification_failed = 1, bad_input = 2, bound_exceeded = 3 };

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symbolic engine for higher homotopy operations", "hhops"};
  app.require_subcommand(1);
  app.fallthrough();
  cli::Request req;

  app.add_option("--target", req.target, "catalog name");
  app.add_option("--suite", req.suite, "verification suite");
  app.add_option("--spec", req.spec, "resolution spec file");
  app.add_option("--into", req.into, "spec file of the object spliced into");
  app.add_option("--map", req.map, "f-hat on junction generators: name=expr;name=expr");
  app.add_option("--expr", req.expr, "element text or .expr file");
  app.add_option("--generators", req.generators, "name:degree,... for hall");
  app.add_option("--degrees", req.degrees, "comma-separated reduced degrees");
  app.add_option("--s", req.s_range, "simplicial range A..B")->capture_default_str();
  app.add_option("--t", req.t_range, "internal degree range A..B")->capture_default_str();
  app.add_option("--format", req.format, "output format")
      ->check(CLI::IsMember({"text", "json", "latex"}))
      ->capture_default_str();
  app.add_flag("--integral", req.integral, "report Lie-lattice torsion");
  app.add_flag("--normalize", req.normalize, "print the Hall normal form");
  app.add_flag("--lax", req.lax, "splice even when f-hat is not a Moore chain");
  app.add_option("--max-dim", req.max_dim, "largest slice dimension")->capture_default_str();
  app.add_option("--max-degree", req.max_degree, "largest generator degree for identity checks")->capture_default_str();
  app.add_option("--seed", req.seed, "seed for randomized suites")->capture_default_str();
  app.add_option("--threads", req.threads, "E2 workers (0: one per core)")->capture_default_str();
  app.add_option("--export", req.export_dir, "write the catalog fixtures to this directory");
  app.add_option("--p", req.p);
  app.add_option("--q", req.q);
  app.add_option("--k", req.k);
  app.add_option("--l", req.l);
  app.add_option("--r", req.r);
  app.add_option("--n", req.n);
  app.add_option("--level", req.level, "simplicial level");

  app.add_subcommand("formula", "print a named element");
  app.add_subcommand("verify", "run a verification suite");
  app.add_subcommand("e2", "E2 table of a resolution");
  app.add_subcommand("splice", "splice a resolution into another and check the identities");
  app.add_subcommand("hall", "Hall basis of a free graded Lie algebra");
  app.add_subcommand("fixtures", "list or export fixture files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "hhops: " << e.what() << "\n";
    return bad_input;
  }
  req.verb = app.get_subcommands().front()->get_name();

  try {
    if (req.format == "latex" && req.verb != "formula" && req.verb != "e2")
      throw cli::UsageError("--format latex is available for formula and e2 only");
    cli::Result result;
    if (req.verb == "formula") result = cli::run_formula(req);
    else if (req.verb == "verify") result = cli::run_verify(req);
    else if (req.verb == "e2") result = cli::run_e2(req);
    else if (req.verb == "splice") result = cli::run_splice(req);
    else if (req.verb == "hall") result = cli::run_hall(req);
    else result = cli::run_fixtures(req);

    if (req.format == "json") std::cout << result.report.dump(2) << "\n";
    else if (req.format == "latex") std::cout << cli::render_latex(result.report);
    else std::cout << cli::render_text(result.report);
    return result.ok ? ok : verification_failed;
  } catch (const hhops::BoundError& e) {
    std::cerr << "hhops: bound exceeded: " << e.what() << "\n";
    return bound_exceeded;
  } catch (const hhops::ParseError& e) {
    std::cerr << "hhops: parse error: " << e.what() << "\n";
    return bad_input;
  } catch (const cli::UsageError& e) {
    std::cerr << "hhops: " << e.what() << "\n";
    return bad_input;
  } catch (const hhops::Error& e) {
    std::cerr << "hhops: " << e.what() << "\n";
    return bad_input;
  }
}
