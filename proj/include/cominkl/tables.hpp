#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "cominkl/coxeter.hpp"
#include "cominkl/parabolic.hpp"

namespace cominkl {

struct RunConfig {
  Family family = Family::B;
  std::string mode = "cominuscule";  // cominuscule | quadric | spherical
  int rank = 2;
  int p = 0;
  std::string basis = "pkl";  // kl | pkl | bs
  int jobs = 1;
};

// Rank cap for tables; COMINKL_MAX_RANK overrides the default of 12.
int max_table_rank();
void validate(const RunConfig& cfg);

// Column c holds the basis element for order[c], expanded in the standard
// basis; entry (r, c) is the coefficient of order[r].
struct Matrix {
  RunConfig cfg;
  bool experimental = false;
  std::vector<std::uint64_t> order;
  std::vector<std::string> labels;
  std::vector<ModuleElt> columns;
  std::vector<std::string> warnings;

  LaurentPoly entry(std::size_t row, std::size_t col) const;
};

Matrix build_matrix(const RunConfig& cfg);

void write_csv(std::ostream& os, const Matrix& m);
void write_json(std::ostream& os, const Matrix& m);
// Returns the number of non-monomial cells (drawn red).
std::size_t write_ppm(std::ostream& os, const Matrix& m);
std::size_t write_svg(std::ostream& os, const Matrix& m);

struct Rgb {
  std::uint8_t r, g, b;
};
// White for 0, a blue ramp for v^k (k clamped to 0..5), red otherwise.
Rgb cell_color(const LaurentPoly& p, bool* non_monomial = nullptr);

// Runs f(i) for i in [0, count) on `jobs` threads.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& f);

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::vector<std::string> failures;  // first few only
  double seconds = 0;

  void fail(std::string msg);
};

std::vector<std::string> suite_names();
// rank > 0 checks that rank only; otherwise every rank up to the suite default.
SuiteResult run_suite(const std::string& name, int rank = 0, int jobs = 1);

}  // namespace cominkl
