#ifndef AQW_CSV_HPP
#define AQW_CSV_HPP

#include <ostream>
#include <string>

#include "aqw/sweep.hpp"
#include "aqw/walk.hpp"

namespace aqw {

// Shortest round-trip decimal form (17 significant digits); deterministic.
std::string format_double(double v);

// Header x,y,c,re,im; one row per nonzero stored amplitude, sorted by (x,y,c).
void write_state_csv(std::ostream& os, const WalkState& s);

// Header idx0,idx1,phi,alpha,beta,gamma,value.
void write_sweep_csv(std::ostream& os, const SweepResult& r);

struct MeasureRow {
  int t = 0;
  bool has_theta = false;  // averaged measures leave the theta field empty
  double theta = 0.0;
  double phi = 0.0;
  std::string measure;
  double value = 0.0;
};

// Header t,theta,phi,measure,value.
void write_measure_csv(std::ostream& os, const std::vector<MeasureRow>& rows);

}  // namespace aqw

#endif
