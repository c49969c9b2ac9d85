#include "aqw/entanglement.hpp"

#include <cmath>
#include <stdexcept>

#include "aqw/density.hpp"
#include "aqw/spectra.hpp"

namespace aqw {

namespace {

// Negativities with the transpose on either side of the same reduced matrix
// must agree (the two partial transposes are mutual matrix transposes); a
// larger gap signals a broken reduction or solver.
constexpr double kOrderTol = 1e-8;

double full_negativity_of(const DensityMatrix& rho, Dof transpose_on) {
  return trace_norm(partial_transpose(rho, transpose_on).mat) - 1.0;
}

}  // namespace

double negativity_half(const StateTensor& s) {
  DensityMatrix rho_xy = reduced_density(s, {Dof::X, Dof::Y});
  SpectrumResult spec = hermitian_eigenvalues(partial_transpose(rho_xy, Dof::X).mat);
  double n_half = 0.0, abs_sum = 0.0;
  for (double lam : spec.eigenvalues) {
    n_half += (std::abs(lam) - lam) / 2.0;
    abs_sum += std::abs(lam);
  }
  // consistency of the two algebraic forms: sum(|l|-l)/2 == (sum|l| - 1)/2
  if (std::abs(n_half - (abs_sum - 1.0) / 2.0) > kOrderTol)
    throw std::logic_error("negativity_half: convention consistency check failed");
  return n_half;
}

double negativity_half(const WalkState& s) { return negativity_half(to_tensor(s)); }

double negativity_full(const StateTensor& s, Dof i) {
  // a one-dimensional factor on either side of the cut forces Schmidt rank
  // one: the normalized state is a product there, negativity exactly zero
  const long long complement =
      static_cast<long long>(s.amp.size()) / s.dim(i);
  if (s.dim(i) == 1 || complement == 1) return 0.0;
  const std::vector<double> sv = schmidt_singulars(s, i);
  double sum = 0.0;
  for (double v : sv) sum += v;
  return sum * sum - 1.0;
}

double negativity_full(const WalkState& s, Dof i) { return negativity_full(to_tensor(s), i); }

double pairwise_negativity(const StateTensor& s, Dof i, Dof j) {
  if (i == j) throw std::invalid_argument("pairwise_negativity: labels must differ");
  // a one-dimensional party makes the partial transpose a plain transpose
  // of (or the identity on) a positive matrix: exactly zero negativity
  if (s.dim(i) == 1 || s.dim(j) == 1) return 0.0;
  DensityMatrix rho = reduced_density(s, {i, j});
  return full_negativity_of(rho, i);
}

double pairwise_negativity(const WalkState& s, Dof i, Dof j) {
  return pairwise_negativity(to_tensor(s), i, j);
}

NegativitySet compute_negativities(const StateTensor& s) {
  NegativitySet out;
  for (Dof i : {Dof::X, Dof::Y, Dof::C})
    out.one_vs_rest[dof_index(i)] = negativity_full(s, i);

  const std::pair<Dof, Dof> pairs[] = {{Dof::X, Dof::Y}, {Dof::X, Dof::C}, {Dof::Y, Dof::C}};
  for (auto [i, j] : pairs) {
    if (s.dim(i) == 1 || s.dim(j) == 1) continue;  // trivial party, stays zero
    DensityMatrix rho = reduced_density(s, {i, j});
    const double nij = full_negativity_of(rho, i);
    const double nji = full_negativity_of(rho, j);
    if (std::abs(nij - nji) > kOrderTol)
      throw std::logic_error("compute_negativities: transpose-side mismatch");
    out.pairwise[dof_index(i)][dof_index(j)] = nij;
    out.pairwise[dof_index(j)][dof_index(i)] = nji;
  }

  for (double v : out.one_vs_rest)
    if (v < -1e-10) throw std::logic_error("compute_negativities: negative one-vs-rest value");
  for (auto [i, j] : pairs) {
    if (out.pair(i, j) < -1e-10 || out.pair(j, i) < -1e-10)
      throw std::logic_error("compute_negativities: negative pairwise value");
  }
  return out;
}

namespace {

double residual_from(const NegativitySet& n, Dof i) {
  Dof j, k;
  switch (i) {
    case Dof::X: j = Dof::Y; k = Dof::C; break;
    case Dof::Y: j = Dof::C; k = Dof::X; break;
    default: j = Dof::X; k = Dof::Y; break;
  }
  const double a = n.one(i);
  return a * a - n.pair(i, j) * n.pair(i, j) - n.pair(i, k) * n.pair(i, k);
}

}  // namespace

double residual_pi(const StateTensor& s, Dof i) {
  Dof j, k;
  switch (i) {
    case Dof::X: j = Dof::Y; k = Dof::C; break;
    case Dof::Y: j = Dof::C; k = Dof::X; break;
    default: j = Dof::X; k = Dof::Y; break;
  }
  const double a = negativity_full(s, i);
  const double nij = pairwise_negativity(s, i, j);
  const double nik = pairwise_negativity(s, i, k);
  return a * a - nij * nij - nik * nik;
}

double residual_pi(const WalkState& s, Dof i) { return residual_pi(to_tensor(s), i); }

PiTangleResult pi_tangle(const StateTensor& s) {
  PiTangleResult r;
  r.negativities = compute_negativities(s);
  r.pi_x = residual_from(r.negativities, Dof::X);
  r.pi_y = residual_from(r.negativities, Dof::Y);
  r.pi_c = residual_from(r.negativities, Dof::C);
  r.pi_xyc = (r.pi_x + r.pi_y + r.pi_c) / 3.0;
  return r;
}

PiTangleResult pi_tangle(const WalkState& s) { return pi_tangle(to_tensor(s)); }

double theta_average_fn(const std::function<double(const StateTensor&)>& f, double phi,
                        const EvolutionSequence& seq, int T, int n_theta) {
  if (n_theta < 2) throw std::invalid_argument("theta_average: n_theta must be >= 2");
  const double h = M_PI / (n_theta - 1);
  double acc = 0.0;
  for (int k = 0; k < n_theta; ++k) {
    const double theta = (k == n_theta - 1) ? M_PI : h * k;
    const double w = (k == 0 || k == n_theta - 1) ? h / 2.0 : h;
    const WalkState s = evolve(InitParams(theta, phi), seq, T);
    acc += w * f(to_tensor(s));
  }
  return acc / M_PI;
}

double theta_average(Measure measure, double phi, const EvolutionSequence& seq, int T,
                     int n_theta) {
  if (measure == Measure::NegativityHalf)
    return theta_average_fn([](const StateTensor& s) { return negativity_half(s); }, phi, seq, T,
                            n_theta);
  return theta_average_fn([](const StateTensor& s) { return pi_tangle(s).pi_xyc; }, phi, seq, T,
                          n_theta);
}

std::vector<double> measure_series(const std::function<double(const StateTensor&)>& f,
                                   const InitParams& ip, const EvolutionSequence& seq, int T) {
  if (seq.size() < static_cast<std::size_t>(T))
    throw std::invalid_argument("measure_series: insufficient sequence length");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(T));
  WalkState s = initial_state(ip, T);
  for (int n = 0; n < T; ++n) {
    s = step(s, seq[static_cast<std::size_t>(n)]);
    out.push_back(f(to_tensor(s)));
  }
  return out;
}

std::vector<double> averaged_series(const std::function<double(const StateTensor&)>& f, double phi,
                                    const EvolutionSequence& seq, int T, int n_theta) {
  if (n_theta < 2) throw std::invalid_argument("averaged_series: n_theta must be >= 2");
  std::vector<double> acc(static_cast<std::size_t>(T), 0.0);
  const double h = M_PI / (n_theta - 1);
  for (int k = 0; k < n_theta; ++k) {
    const double theta = (k == n_theta - 1) ? M_PI : h * k;
    const double w = (k == 0 || k == n_theta - 1) ? h / 2.0 : h;
    const std::vector<double> series = measure_series(f, InitParams(theta, phi), seq, T);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += w * series[i];
  }
  for (double& v : acc) v /= M_PI;
  return acc;
}

}  // namespace aqw
