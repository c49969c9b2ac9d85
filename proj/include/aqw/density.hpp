#ifndef AQW_DENSITY_HPP
#define AQW_DENSITY_HPP

#include <Eigen/Dense>
#include <vector>

#include "aqw/state_tensor.hpp"

namespace aqw {

// Hermitian matrix on a labeled tensor-product space. True densities are
// unit-trace and positive semidefinite; partial transposes keep the labels
// and the trace but may have negative eigenvalues.
struct DensityMatrix {
  std::vector<Dof> labels;  // ordered subset of {X, Y, C}
  std::vector<int> dims;    // per-label dimension
  Eigen::MatrixXcd mat;

  Eigen::Index dim() const { return mat.rows(); }
};

// Full rank-1 projector |psi><psi| with labels {X, Y, C}.
DensityMatrix pure_density(const StateTensor& s);

// Reduced density over `keep`, contracted directly from the amplitudes
// (rho_K = M M^dagger over the kept/traced bipartition) without forming the
// full projector. `keep` is canonicalized to X<Y<C order; must be nonempty.
DensityMatrix reduced_density(const StateTensor& s, std::vector<Dof> keep);

// Partial trace over the labels not in `keep`. Preserves trace and
// Hermiticity. Throws std::invalid_argument for an empty keep set or a
// label not present in d.
DensityMatrix partial_trace(const DensityMatrix& d, const std::vector<Dof>& keep);

// Transposes the indices of one subsystem. Involutive and trace-preserving.
// Throws std::invalid_argument for a label not present in d.
DensityMatrix partial_transpose(const DensityMatrix& d, Dof subsystem);

}  // namespace aqw

#endif
