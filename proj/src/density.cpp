#include "aqw/density.hpp"

#include <algorithm>
#include <stdexcept>

namespace aqw {

namespace {

// Row strides for a big-endian mixed-radix index over dims.
std::vector<Eigen::Index> strides_of(const std::vector<int>& dims) {
  std::vector<Eigen::Index> s(dims.size(), 1);
  for (std::size_t i = dims.size(); i-- > 1;) s[i - 1] = s[i] * dims[i];
  return s;
}

std::vector<Dof> canonical_subset(std::vector<Dof> labels) {
  std::sort(labels.begin(), labels.end(),
            [](Dof a, Dof b) { return dof_index(a) < dof_index(b); });
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

}  // namespace

DensityMatrix pure_density(const StateTensor& s) {
  const Eigen::Index n = static_cast<Eigen::Index>(s.amp.size());
  Eigen::Map<const Eigen::VectorXcd> psi(s.amp.data(), n);
  DensityMatrix d;
  d.labels = {Dof::X, Dof::Y, Dof::C};
  d.dims = {s.dx, s.dy, 2};
  d.mat.noalias() = psi * psi.adjoint();
  return d;
}

DensityMatrix reduced_density(const StateTensor& s, std::vector<Dof> keep) {
  keep = canonical_subset(std::move(keep));
  if (keep.empty()) throw std::invalid_argument("reduced_density: empty keep set");

  const std::vector<int> full_dims = {s.dx, s.dy, 2};
  std::vector<int> kept_pos, traced_pos;
  for (int i = 0; i < 3; ++i) {
    if (std::find(keep.begin(), keep.end(), static_cast<Dof>(i)) != keep.end())
      kept_pos.push_back(i);
    else
      traced_pos.push_back(i);
  }

  Eigen::Index rows = 1, cols = 1;
  for (int p : kept_pos) rows *= full_dims[p];
  for (int p : traced_pos) cols *= full_dims[p];

  // Amplitudes reshaped as (kept) x (traced); rho_K = M M^dagger.
  Eigen::MatrixXcd m(rows, cols);
  const auto st = strides_of(full_dims);
  std::array<int, 3> idx{};
  for (idx[0] = 0; idx[0] < full_dims[0]; ++idx[0])
    for (idx[1] = 0; idx[1] < full_dims[1]; ++idx[1])
      for (idx[2] = 0; idx[2] < full_dims[2]; ++idx[2]) {
        Eigen::Index r = 0, c = 0, flat = 0;
        for (int p : kept_pos) r = r * full_dims[p] + idx[p];
        for (int p : traced_pos) c = c * full_dims[p] + idx[p];
        for (int p = 0; p < 3; ++p) flat += st[p] * idx[p];
        m(r, c) = s.amp[static_cast<std::size_t>(flat)];
      }

  DensityMatrix d;
  d.labels = keep;
  for (int p : kept_pos) d.dims.push_back(full_dims[p]);
  d.mat.noalias() = m * m.adjoint();
  return d;
}

DensityMatrix partial_trace(const DensityMatrix& d, const std::vector<Dof>& keep_in) {
  const std::vector<Dof> keep = canonical_subset(keep_in);
  if (keep.empty()) throw std::invalid_argument("partial_trace: empty keep set");
  for (Dof k : keep)
    if (std::find(d.labels.begin(), d.labels.end(), k) == d.labels.end())
      throw std::invalid_argument("partial_trace: label not present");

  std::vector<int> kept_pos, traced_pos;
  for (std::size_t i = 0; i < d.labels.size(); ++i) {
    if (std::find(keep.begin(), keep.end(), d.labels[i]) != keep.end())
      kept_pos.push_back(static_cast<int>(i));
    else
      traced_pos.push_back(static_cast<int>(i));
  }

  const auto st = strides_of(d.dims);
  Eigen::Index kdim = 1, tdim = 1;
  for (int p : kept_pos) kdim *= d.dims[p];
  for (int p : traced_pos) tdim *= d.dims[p];

  // Flat offsets of every kept and traced sub-index combination.
  auto offsets = [&](const std::vector<int>& pos, Eigen::Index count) {
    std::vector<Eigen::Index> out(static_cast<std::size_t>(count), 0);
    for (Eigen::Index flat = 0; flat < count; ++flat) {
      Eigen::Index rem = flat, off = 0;
      for (std::size_t q = pos.size(); q-- > 0;) {
        const int p = pos[q];
        off += (rem % d.dims[p]) * st[p];
        rem /= d.dims[p];
      }
      out[static_cast<std::size_t>(flat)] = off;
    }
    return out;
  };
  const auto koff = offsets(kept_pos, kdim);
  const auto toff = offsets(traced_pos, tdim);

  DensityMatrix out;
  out.labels = keep;
  for (int p : kept_pos) out.dims.push_back(d.dims[p]);
  out.mat = Eigen::MatrixXcd::Zero(kdim, kdim);
  for (Eigen::Index r = 0; r < kdim; ++r)
    for (Eigen::Index c = 0; c < kdim; ++c) {
      std::complex<double> acc = 0.0;
      for (Eigen::Index m = 0; m < tdim; ++m)
        acc += d.mat(koff[static_cast<std::size_t>(r)] + toff[static_cast<std::size_t>(m)],
                     koff[static_cast<std::size_t>(c)] + toff[static_cast<std::size_t>(m)]);
      out.mat(r, c) = acc;
    }
  return out;
}

DensityMatrix partial_transpose(const DensityMatrix& d, Dof subsystem) {
  auto it = std::find(d.labels.begin(), d.labels.end(), subsystem);
  if (it == d.labels.end()) throw std::invalid_argument("partial_transpose: label not present");
  const std::size_t p = static_cast<std::size_t>(it - d.labels.begin());

  const auto st = strides_of(d.dims);
  const Eigen::Index stride = st[p];
  const Eigen::Index dim_p = d.dims[p];
  const Eigen::Index n = d.mat.rows();

  DensityMatrix out;
  out.labels = d.labels;
  out.dims = d.dims;
  out.mat.resize(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const Eigen::Index rp = (r / stride) % dim_p;
    for (Eigen::Index c = 0; c < n; ++c) {
      const Eigen::Index cp = (c / stride) % dim_p;
      out.mat(r + (cp - rp) * stride, c + (rp - cp) * stride) = d.mat(r, c);
    }
  }
  return out;
}

}  // namespace aqw
