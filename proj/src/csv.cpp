#include "aqw/csv.hpp"

#include <cstdio>

namespace aqw {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_state_csv(std::ostream& os, const WalkState& s) {
  os << "x,y,c,re,im\n";
  const int t = s.t_max();
  for (int x = -t; x <= t; ++x)
    for (int y = -t; y <= t; ++y)
      for (int c = 0; c < 2; ++c) {
        const std::complex<double> a = s.amplitude(x, y, c);
        if (a == 0.0) continue;
        os << x << "," << y << "," << c << "," << format_double(a.real()) << ","
           << format_double(a.imag()) << "\n";
      }
}

void write_sweep_csv(std::ostream& os, const SweepResult& r) {
  os << "idx0,idx1,phi,alpha,beta,gamma,value\n";
  for (const auto& row : r.rows) {
    os << row.idx[0] << "," << row.idx[1] << "," << format_double(row.phi) << ","
       << format_double(row.alpha) << "," << format_double(row.beta) << ","
       << format_double(row.gamma) << "," << format_double(row.value) << "\n";
  }
}

void write_measure_csv(std::ostream& os, const std::vector<MeasureRow>& rows) {
  os << "t,theta,phi,measure,value\n";
  for (const auto& row : rows) {
    os << row.t << ",";
    if (row.has_theta) os << format_double(row.theta);
    os << "," << format_double(row.phi) << "," << row.measure << "," << format_double(row.value)
       << "\n";
  }
}

}  // namespace aqw
