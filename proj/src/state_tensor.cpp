#include "aqw/state_tensor.hpp"

namespace aqw {

const char* dof_name(Dof d) {
  switch (d) {
    case Dof::X: return "x";
    case Dof::Y: return "y";
    default: return "c";
  }
}

double StateTensor::squared_norm() const {
  double s = 0.0;
  for (const auto& a : amp) s += std::norm(a);
  return s;
}

StateTensor to_tensor(const WalkState& s) {
  const int t = s.t();
  StateTensor out(2 * t + 1, 2 * t + 1);
  for (int x = -t; x <= t; ++x)
    for (int y = -t; y <= t; ++y)
      for (int c = 0; c < 2; ++c)
        out.at(x + t, y + t, c) = s.amplitude(x, y, c);
  return out;
}

}  // namespace aqw
