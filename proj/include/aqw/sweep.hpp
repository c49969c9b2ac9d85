#ifndef AQW_SWEEP_HPP
#define AQW_SWEEP_HPP

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "aqw/entanglement.hpp"

namespace aqw {

enum class SweepParam { Phi, Alpha, Beta, Gamma };

const char* sweep_param_name(SweepParam p);

struct VariedParam {
  SweepParam name;
  int n;  // sample count along this axis
};

// Grid over (phi, alpha, beta, gamma): one or two parameters varied over
// [0, 2*pi), the rest fixed. Default sampling excludes the 2*pi endpoint
// (sample k of n at 2*pi*k/n); with include_endpoints the n samples span
// [0, 2*pi] inclusive at 2*pi*k/(n-1).
struct SweepGrid {
  std::vector<VariedParam> varied;
  std::map<SweepParam, double> fixed;
  int T = 2;
  Measure measure = Measure::PiTangle;
  int n_theta = 33;
  bool include_endpoints = false;
  int workers = 1;

  void validate() const;  // throws std::invalid_argument
  double axis_value(std::size_t axis, int k) const;
};

struct SweepRow {
  std::array<int, 2> idx{0, 0};  // idx[1] stays 0 for 1-D sweeps
  double phi = 0.0, alpha = 0.0, beta = 0.0, gamma = 0.0;
  double value = 0.0;
};

struct SweepResult {
  SweepGrid grid;
  std::vector<SweepRow> rows;  // lexicographic grid order
};

// One theta-averaged measure evaluation per grid point. Grid points are
// independent jobs pulled from a shared counter; each result is written to
// its pre-assigned row so output order does not depend on scheduling.
SweepResult run_sweep(const SweepGrid& g);

// Indices of all rows with value >= max - rel_tol*|max|, in grid order.
std::vector<std::size_t> find_maxima(const SweepResult& r, double rel_tol);

struct TableRowMatch {
  int row = 0;  // 1-based
  std::string description;
  double max_value = 0.0;
  std::set<std::pair<int, int>> expected;  // (phi index, second index), mod n
  std::set<std::pair<int, int>> actual;
  bool pass = false;
};

struct TableMatchReport {
  int table = 0;
  std::vector<TableRowMatch> rows;
  bool all_pass() const;
  std::string to_text() const;
};

// Runs the four two-parameter sweeps of the named argmax table at T=2 and
// compares the computed argmax index sets (grid units 2*pi/32 for table 1,
// 2*pi/128 for table 2) against the published sets.
TableMatchReport reproduce_table(int which, int n_theta = 33, int workers = 1);

}  // namespace aqw

#endif
