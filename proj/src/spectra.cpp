#include "aqw/spectra.hpp"

#include <complex>
#include <stdexcept>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace aqw {

namespace {

constexpr double kHermTol = 1e-8;

void require_hermitian(const Eigen::MatrixXcd& m, const char* who) {
  if (m.rows() != m.cols()) throw std::invalid_argument(std::string(who) + ": matrix not square");
  const double residue = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (!(residue <= kHermTol))
    throw std::invalid_argument(std::string(who) + ": input not Hermitian (residue " +
                                std::to_string(residue) + ")");
}

// LAPACK divide-and-conquer Hermitian eigensolver, eigenvalues only,
// ascending. Destroys its input.
Eigen::VectorXd zheevd_ascending(Eigen::MatrixXcd& a) {
  const lapack_int n = static_cast<lapack_int>(a.rows());
  Eigen::VectorXd w(n);
  if (n == 0) return w;
  lapack_int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'N', 'L', n, a.data(), n, w.data());
  if (info != 0)
    throw std::runtime_error("zheevd failed with info " + std::to_string(info));
  return w;
}

}  // namespace

SpectrumResult hermitian_eigenvalues(const Eigen::MatrixXcd& m) {
  require_hermitian(m, "hermitian_eigenvalues");
  Eigen::MatrixXcd sym = 0.5 * (m + m.adjoint());
  Eigen::VectorXd w = zheevd_ascending(sym);
  SpectrumResult r;
  r.eigenvalues.assign(w.data(), w.data() + w.size());
  return r;
}

double trace_norm(const Eigen::MatrixXcd& m) {
  SpectrumResult s = hermitian_eigenvalues(m);
  double acc = 0.0;
  for (double v : s.eigenvalues) acc += std::abs(v);
  return acc;
}

std::vector<double> schmidt_singulars(const StateTensor& s, Dof subsystem) {
  const Eigen::Index dx = s.dx, dy = s.dy;
  Eigen::MatrixXcd m;
  switch (subsystem) {
    case Dof::X: {
      // flat layout is already x-major: rows x, cols (y, c)
      m = Eigen::Map<const Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic,
                                         Eigen::RowMajor>>(s.amp.data(), dx, dy * 2);
      break;
    }
    case Dof::Y: {
      m.resize(dy, dx * 2);
      for (Eigen::Index x = 0; x < dx; ++x)
        for (Eigen::Index y = 0; y < dy; ++y)
          for (Eigen::Index c = 0; c < 2; ++c)
            m(y, x * 2 + c) = s.amp[s.flat(static_cast<int>(x), static_cast<int>(y), static_cast<int>(c))];
      break;
    }
    case Dof::C: {
      m.resize(2, dx * dy);
      for (Eigen::Index x = 0; x < dx; ++x)
        for (Eigen::Index y = 0; y < dy; ++y)
          for (Eigen::Index c = 0; c < 2; ++c)
            m(c, x * dy + y) = s.amp[s.flat(static_cast<int>(x), static_cast<int>(y), static_cast<int>(c))];
      break;
    }
  }
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
  const Eigen::VectorXd& sv = svd.singularValues();
  return std::vector<double>(sv.data(), sv.data() + sv.size());
}

std::vector<double> schmidt_singulars(const WalkState& s, Dof subsystem) {
  return schmidt_singulars(to_tensor(s), subsystem);
}

}  // namespace aqw
