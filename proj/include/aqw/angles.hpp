#ifndef AQW_ANGLES_HPP
#define AQW_ANGLES_HPP

#include <string>
#include <string_view>

namespace aqw {

// Angle in radians, optionally carrying an exact n*pi/d form so that
// grid points and CLI literals round-trip without drift.
struct Angle {
  double value = 0.0;
  bool rational = false;  // true when value == num*pi/den exactly by construction
  long long num = 0;
  long long den = 1;

  static Angle of(double v);
  static Angle pi_ratio(long long num, long long den);
};

// Accepts "0", "pi", "2pi", "pi/2", "5pi/16", "-3pi/4" and plain decimal
// radians like "1.5707963". Throws std::invalid_argument on malformed input.
Angle parse_angle(std::string_view text);

// Canonical text form: rational angles as "npi/d", others as decimal.
// parse_angle(format_angle(a)) reproduces a for rational literals.
std::string format_angle(const Angle& a);

double canonical_two_pi(double v);  // wrap into [0, 2*pi)

}  // namespace aqw

#endif
