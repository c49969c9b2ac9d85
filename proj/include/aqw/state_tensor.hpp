#ifndef AQW_STATE_TENSOR_HPP
#define AQW_STATE_TENSOR_HPP

#include <array>
#include <complex>
#include <vector>

#include "aqw/walk.hpp"

namespace aqw {

// Degree-of-freedom labels, in storage order.
enum class Dof : int { X = 0, Y = 1, C = 2 };

constexpr int dof_index(Dof d) { return static_cast<int>(d); }
const char* dof_name(Dof d);

// Pure-state amplitude tensor on dims (dx, dy, 2), stored x-major then y
// then coin. Walk states are converted with the position window trimmed to
// the occupied (2t+1) sites per axis; canonical 2x2x2 states use it directly.
struct StateTensor {
  int dx = 1;
  int dy = 1;
  std::vector<std::complex<double>> amp;  // size dx*dy*2

  StateTensor() : amp(2, 0.0) {}
  StateTensor(int dx_, int dy_) : dx(dx_), dy(dy_), amp(static_cast<std::size_t>(dx_) * dy_ * 2, 0.0) {}

  int dim(Dof d) const {
    switch (d) {
      case Dof::X: return dx;
      case Dof::Y: return dy;
      default: return 2;
    }
  }

  std::size_t flat(int ix, int iy, int c) const {
    return (static_cast<std::size_t>(ix) * dy + iy) * 2 + c;
  }

  std::complex<double>& at(int ix, int iy, int c) { return amp[flat(ix, iy, c)]; }
  const std::complex<double>& at(int ix, int iy, int c) const { return amp[flat(ix, iy, c)]; }

  double squared_norm() const;
};

// Trims to the occupied window |x|,|y| <= t.
StateTensor to_tensor(const WalkState& s);

}  // namespace aqw

#endif
