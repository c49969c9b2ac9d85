#ifndef AQW_TESTS_DENSE_ORACLE_HPP
#define AQW_TESTS_DENSE_ORACLE_HPP

// Brute-force reference implementations used only by tests. Everything here
// is built from explicit operator products and index loops with Eigen's own
// eigensolver, independent of the library's reduction/LAPACK code paths.

#include <Eigen/Dense>
#include <random>
#include <vector>

#include "aqw/state_tensor.hpp"
#include "aqw/walk.hpp"

namespace oracle {

// Dense evolution on the cyclic lattice of P = 2T+1 sites per axis via the
// explicit S_y [1 (x) C] S_x [1 (x) C] operator product. The walker never
// reaches the boundary for t <= T, so cyclic and open lattices agree.
Eigen::MatrixXcd shift_x(int sites);
Eigen::MatrixXcd shift_y(int sites);
Eigen::MatrixXcd coin_on_lattice(int sites, const Eigen::Matrix2cd& c);
Eigen::VectorXcd initial_vector(int sites, double theta, double phi);
Eigen::VectorXcd dense_evolve(double theta, double phi, const std::vector<aqw::CoinParams>& seq,
                              int T);

// Reference density-matrix machinery (explicit loops, Eigen eigensolver).
Eigen::MatrixXcd full_density(const aqw::StateTensor& s);
Eigen::MatrixXcd pair_density(const aqw::StateTensor& s, aqw::Dof i, aqw::Dof j);
Eigen::MatrixXcd transpose_first_factor(const Eigen::MatrixXcd& m, int d_first, int d_rest);
std::vector<double> eigenvalues(const Eigen::MatrixXcd& herm);

double trace_norm(const Eigen::MatrixXcd& herm);
double negativity_half_xy(const aqw::StateTensor& s);
double negativity_full(const aqw::StateTensor& s, aqw::Dof i);
double pairwise_negativity(const aqw::StateTensor& s, aqw::Dof i, aqw::Dof j);
double pi_tangle(const aqw::StateTensor& s);

// Seeded random draws shared by property suites.
aqw::CoinParams random_coin(std::mt19937_64& rng);
aqw::InitParams random_init(std::mt19937_64& rng);
aqw::StateTensor random_pure_tensor(std::mt19937_64& rng, int dx, int dy);

}  // namespace oracle

#endif
