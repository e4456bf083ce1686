// Command line front end: KL / p-KL tables, heatmap figures and the
// verification suites.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cominkl/tables.hpp"

using namespace cominkl;

namespace {

struct Options {
  std::string type = "B";
  std::string format;
  std::string out;
  std::string suite = "all";
  int suite_rank = 0;
  RunConfig cfg;
};

void add_table_flags(CLI::App* app, Options& o) {
  app->add_option("--type", o.type, "B or C")->check(CLI::IsMember({"B", "C"}));
  app->add_option("--mode", o.cfg.mode, "cominuscule, quadric or spherical")
      ->check(CLI::IsMember({"cominuscule", "quadric", "spherical"}));
  app->add_option("--rank", o.cfg.rank, "rank n")->required();
  app->add_option("--p", o.cfg.p, "characteristic, 0 or 2")->check(CLI::IsMember({0, 2}));
  app->add_option("--basis", o.cfg.basis, "kl, pkl or bs")->check(CLI::IsMember({"kl", "pkl", "bs"}));
  app->add_option("--out", o.out, "output path (default stdout)");
  app->add_option("--jobs", o.cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
}

// Binary formats go through a file; text goes to stdout when --out is empty.
template <class Writer>
std::size_t emit(const std::string& out, Writer&& write) {
  if (out.empty()) return write(std::cout);
  std::ofstream f(out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + out);
  std::size_t r = write(f);
  if (!f) throw std::runtime_error("write failed: " + out);
  return r;
}

int run_matrix(Options& o) {
  o.cfg.family = parse_family(o.type);
  Matrix m = build_matrix(o.cfg);
  for (auto& w : m.warnings) std::cerr << "warning: " << w << '\n';
  std::string fmt = o.format.empty() ? "csv" : o.format;
  emit(o.out, [&](std::ostream& os) {
    if (fmt == "csv")
      write_csv(os, m);
    else
      write_json(os, m);
    return std::size_t{0};
  });
  return 0;
}

int run_figure(Options& o) {
  o.cfg.family = parse_family(o.type);
  Matrix m = build_matrix(o.cfg);
  for (auto& w : m.warnings) std::cerr << "warning: " << w << '\n';
  std::string fmt = o.format.empty() ? "ppm" : o.format;
  std::size_t bad = emit(o.out, [&](std::ostream& os) { return fmt == "ppm" ? write_ppm(os, m) : write_svg(os, m); });
  if (bad) std::cerr << "warning: " << bad << " non-monomial cells drawn in red\n";
  return 0;
}

int run_verify(Options& o) {
  std::vector<std::string> names;
  if (o.suite == "all")
    names = suite_names();
  else
    names.push_back(o.suite);
  bool ok = true;
  for (auto& name : names) {
    SuiteResult r = run_suite(name, o.suite_rank, o.cfg.jobs);
    std::ostringstream secs;
    secs.precision(3);
    secs << std::fixed << r.seconds;
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " checked=" << r.checked << " seconds=" << secs.str()
              << '\n';
    for (auto& f : r.failures) std::cout << "  " << f << '\n';
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kazhdan-Lusztig and p-Kazhdan-Lusztig tables for cominuscule quotients"};
  app.require_subcommand(1);
  Options o;

  auto* matrix = app.add_subcommand("matrix", "print a basis as a matrix in the standard basis");
  add_table_flags(matrix, o);
  matrix->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* figure = app.add_subcommand("figure", "draw a heatmap of a basis");
  add_table_flags(figure, o);
  figure->add_option("--format", o.format, "ppm or svg")->check(CLI::IsMember({"ppm", "svg"}));

  auto* verify = app.add_subcommand("verify", "run verification suites");
  std::string suites = "all";
  for (auto& s : suite_names()) suites += ", " + s;
  verify->add_option("--suite", o.suite, suites);
  verify->add_option("--rank", o.suite_rank, "check this rank only (default: every rank up to the suite limit)");
  verify->add_option("--jobs", o.cfg.jobs, "worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  try {
    if (*matrix) return run_matrix(o);
    if (*figure) {
      if (figure->count("--out") == 0 && (o.format.empty() || o.format == "ppm"))
        throw std::invalid_argument("figure: --out is required for ppm output");
      return run_figure(o);
    }
    if (o.suite != "all") {
      auto names = suite_names();
      if (std::find(names.begin(), names.end(), o.suite) == names.end())
        throw std::invalid_argument("unknown suite '" + o.suite + "'");
    }
    return run_verify(o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
