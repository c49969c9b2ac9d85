#ifndef AQW_ENTANGLEMENT_HPP
#define AQW_ENTANGLEMENT_HPP

#include <array>
#include <functional>

#include "aqw/state_tensor.hpp"
#include "aqw/walk.hpp"

namespace aqw {

// Two negativity conventions coexist and are never mixed:
//   half convention  N = sum (|lambda| - lambda)/2   (xy entanglement curves)
//   full convention  N = ||rho^T|| - 1               (building block of pi)
// The half convention applies to the coin-traced rho_xy; the full convention
// to the one-vs-rest and pairwise negativities entering the pi-tangle.

// Half-convention xy negativity: traces out the coin, transposes on x.
double negativity_half(const StateTensor& s);
double negativity_half(const WalkState& s);

// Full-convention one-vs-rest negativity N_{i|jk} via the pure-state
// Schmidt fast path (sum of singular values squared, minus 1).
double negativity_full(const StateTensor& s, Dof i);
double negativity_full(const WalkState& s, Dof i);

// Full-convention pairwise negativity N_{ij}: traces out the third label,
// transposes on i. Throws std::invalid_argument when i == j.
double pairwise_negativity(const StateTensor& s, Dof i, Dof j);
double pairwise_negativity(const WalkState& s, Dof i, Dof j);

// All nine negativities of a pure tripartite state.
struct NegativitySet {
  std::array<double, 3> one_vs_rest{};            // N_{i|jk}, indexed by Dof
  std::array<std::array<double, 3>, 3> pairwise{};  // N_{ij}; diagonal unused

  double one(Dof i) const { return one_vs_rest[dof_index(i)]; }
  double pair(Dof i, Dof j) const { return pairwise[dof_index(i)][dof_index(j)]; }
};

NegativitySet compute_negativities(const StateTensor& s);

// Residual negativity pi_i = N_{i|jk}^2 - N_{ij}^2 - N_{ik}^2.
double residual_pi(const StateTensor& s, Dof i);
double residual_pi(const WalkState& s, Dof i);

struct PiTangleResult {
  double pi_x = 0.0;
  double pi_y = 0.0;
  double pi_c = 0.0;
  double pi_xyc = 0.0;  // mean of the three residuals
  NegativitySet negativities;
};

PiTangleResult pi_tangle(const StateTensor& s);
PiTangleResult pi_tangle(const WalkState& s);

enum class Measure { NegativityHalf, PiTangle };

// (1/pi) * integral over theta in [0, pi] of the measure at fixed phi,
// composite trapezoid on n_theta uniform samples including both endpoints.
// n_theta must be >= 2.
double theta_average(Measure measure, double phi, const EvolutionSequence& seq,
                     int T, int n_theta = 33);

// Generalized form used by report and figure code.
double theta_average_fn(const std::function<double(const StateTensor&)>& f,
                        double phi, const EvolutionSequence& seq, int T,
                        int n_theta);

// Measure value at every t in [1, T] from one incremental trajectory.
std::vector<double> measure_series(const std::function<double(const StateTensor&)>& f,
                                   const InitParams& ip, const EvolutionSequence& seq,
                                   int T);

// Theta-averaged measure at every t in [1, T]; n_theta trajectories total.
std::vector<double> averaged_series(const std::function<double(const StateTensor&)>& f,
                                    double phi, const EvolutionSequence& seq, int T,
                                    int n_theta);

}  // namespace aqw

#endif
