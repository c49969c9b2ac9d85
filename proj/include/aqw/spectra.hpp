#ifndef AQW_SPECTRA_HPP
#define AQW_SPECTRA_HPP

#include <Eigen/Dense>
#include <vector>

#include "aqw/state_tensor.hpp"

namespace aqw {

struct SpectrumResult {
  std::vector<double> eigenvalues;  // ascending
};

// Full real spectrum of a Hermitian matrix (LAPACK zheevd, eigenvalues
// only). The input is symmetrized as (m + m^dagger)/2 before solving.
// Throws std::invalid_argument when max|m - m^dagger| exceeds 1e-8.
SpectrumResult hermitian_eigenvalues(const Eigen::MatrixXcd& m);

// Sum of |eigenvalue| over the spectrum; for Hermitian input this is the
// trace norm. Same Hermiticity precondition as hermitian_eigenvalues.
double trace_norm(const Eigen::MatrixXcd& m);

// Singular values (descending) of the amplitude tensor reshaped as
// (subsystem) x (complement). For a normalized pure state the squared sum
// equals the trace norm of the partial transpose on that subsystem.
std::vector<double> schmidt_singulars(const StateTensor& s, Dof subsystem);
std::vector<double> schmidt_singulars(const WalkState& s, Dof subsystem);

}  // namespace aqw

#endif
