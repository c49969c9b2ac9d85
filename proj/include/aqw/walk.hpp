#ifndef AQW_WALK_HPP
#define AQW_WALK_HPP

#include <complex>
#include <vector>

#include "aqw/coin.hpp"

namespace aqw {

// Separable localized initial state
//   |0_x, 0_y> (x) [cos(theta/2)|0_c> + e^{i phi} sin(theta/2)|1_c>].
// theta must lie in [0, pi]; phi is wrapped into [0, 2*pi).
struct InitParams {
  double theta;
  double phi;

  InitParams(double theta, double phi);
};

// One coin per time step. A constant coin is a run of identical entries.
using EvolutionSequence = std::vector<CoinParams>;

EvolutionSequence constant_sequence(const CoinParams& p, int steps);

// State of the walker on the open lattice x, y in [-t_max, t_max] with a
// coin qubit. Amplitudes are stored x-major, then y, then coin, so index
// arithmetic matches the H_x (x) H_y (x) H_c tensor order. Support stays
// inside |x|,|y| <= t with x = y = t (mod 2); sites outside are exact zeros.
class WalkState {
 public:
  explicit WalkState(int t_max);

  int t() const { return t_; }
  int t_max() const { return t_max_; }
  int side() const { return 2 * t_max_ + 1; }

  // Stored amplitude at lattice site (x, y) and coin c in {0, 1}.
  // Throws std::out_of_range when |x| or |y| exceeds t_max.
  std::complex<double> amplitude(int x, int y, int c) const;

  double squared_norm() const;

  const std::vector<std::complex<double>>& raw() const { return amp_; }

  friend WalkState initial_state(const InitParams& ip, int t_max);
  friend WalkState step(const WalkState& s, const CoinParams& p);

 private:
  std::size_t index(int x, int y, int c) const;

  int t_ = 0;
  int t_max_ = 0;
  std::vector<std::complex<double>> amp_;
};

// Localized state at t = 0. Throws std::invalid_argument for t_max < 0.
WalkState initial_state(const InitParams& ip, int t_max);

// One full time step: coin, shift in x, coin, shift in y.
// Throws std::runtime_error when s.t == s.t_max (horizon exhausted).
WalkState step(const WalkState& s, const CoinParams& p);

// T-fold composition of step starting from initial_state(ip, T).
// seq must provide at least T coins.
WalkState evolve(const InitParams& ip, const EvolutionSequence& seq, int T);

}  // namespace aqw

#endif
