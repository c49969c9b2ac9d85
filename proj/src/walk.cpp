#include "aqw/walk.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "aqw/angles.hpp"

namespace aqw {

InitParams::InitParams(double theta_, double phi_) : theta(theta_), phi(canonical_two_pi(phi_)) {
  if (!(theta >= 0.0 && theta <= M_PI))
    throw std::invalid_argument("InitParams: theta must lie in [0, pi]");
}

EvolutionSequence constant_sequence(const CoinParams& p, int steps) {
  if (steps < 0) throw std::invalid_argument("constant_sequence: negative length");
  return EvolutionSequence(static_cast<std::size_t>(steps), p);
}

WalkState::WalkState(int t_max) : t_max_(t_max) {
  if (t_max < 0) throw std::invalid_argument("WalkState: t_max must be >= 0");
  const std::size_t p = static_cast<std::size_t>(side());
  amp_.assign(p * p * 2, std::complex<double>(0.0, 0.0));
}

std::size_t WalkState::index(int x, int y, int c) const {
  return (static_cast<std::size_t>(x + t_max_) * side() + (y + t_max_)) * 2 + c;
}

std::complex<double> WalkState::amplitude(int x, int y, int c) const {
  if (std::abs(x) > t_max_ || std::abs(y) > t_max_ || c < 0 || c > 1)
    throw std::out_of_range("amplitude: index outside allocated lattice");
  return amp_[index(x, y, c)];
}

double WalkState::squared_norm() const {
  double s = 0.0;
  for (const auto& a : amp_) s += std::norm(a);
  return s;
}

WalkState initial_state(const InitParams& ip, int t_max) {
  WalkState s(t_max);
  s.amp_[s.index(0, 0, 0)] = std::cos(ip.theta / 2);
  s.amp_[s.index(0, 0, 1)] = std::exp(std::complex<double>(0, ip.phi)) * std::sin(ip.theta / 2);
  return s;
}

WalkState step(const WalkState& s, const CoinParams& p) {
  if (s.t() >= s.t_max())
    throw std::runtime_error("step: time horizon exhausted (t == t_max)");

  const Eigen::Matrix2cd c = build_coin(p);
  const std::complex<double> c00 = c(0, 0), c01 = c(0, 1), c10 = c(1, 0), c11 = c(1, 1);

  WalkState out(s.t_max());
  out.t_ = s.t_ + 1;
  const int t = s.t_;
  for (int x = -t; x <= t; ++x) {
    for (int y = -t; y <= t; ++y) {
      const std::complex<double> h = s.amp_[s.index(x, y, 0)];
      const std::complex<double> v = s.amp_[s.index(x, y, 1)];
      if (h == 0.0 && v == 0.0) continue;
      // coin then shift in x: coin-0 moves to x-1, coin-1 to x+1
      const std::complex<double> a = c00 * h + c01 * v;
      const std::complex<double> b = c10 * h + c11 * v;
      // coin again then shift in y
      out.amp_[out.index(x - 1, y - 1, 0)] += c00 * a;
      out.amp_[out.index(x - 1, y + 1, 1)] += c10 * a;
      out.amp_[out.index(x + 1, y - 1, 0)] += c01 * b;
      out.amp_[out.index(x + 1, y + 1, 1)] += c11 * b;
    }
  }
  return out;
}

WalkState evolve(const InitParams& ip, const EvolutionSequence& seq, int T) {
  if (T < 0) throw std::invalid_argument("evolve: T must be >= 0");
  if (seq.size() < static_cast<std::size_t>(T))
    throw std::invalid_argument("evolve: sequence provides " + std::to_string(seq.size()) +
                                " coins, need " + std::to_string(T));
  WalkState s = initial_state(ip, T);
  for (int n = 0; n < T; ++n) s = step(s, seq[static_cast<std::size_t>(n)]);
  return s;
}

}  // namespace aqw
