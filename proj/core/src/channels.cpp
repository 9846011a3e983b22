#include "qssim/channels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qssim {

KrausChannel::KrausChannel(std::vector<Operator> operators)
    : ops_(std::move(operators)) {
  if (ops_.empty())
    throw std::invalid_argument("channel needs at least one Kraus operator");
  Eigen::Index d = ops_.front().dim();
  Matrix sum = Matrix::Zero(d, d);
  for (const Operator& k : ops_) {
    if (k.dim() != d)
      throw std::invalid_argument("Kraus operators must share one dimension");
    sum += k.matrix().adjoint() * k.matrix();
  }
  if ((sum - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() > kAlgebraTol)
    throw std::invalid_argument("Kraus set is not trace preserving");
}

namespace {

void check_targets(const std::vector<int>& targets, int register_qubits) {
  if (targets.empty())
    throw std::invalid_argument("target list must be nonempty");
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] < 0 || targets[i] >= register_qubits)
      throw std::invalid_argument("target qubit out of range");
    for (std::size_t j = i + 1; j < targets.size(); ++j)
      if (targets[i] == targets[j])
        throw std::invalid_argument("target qubits must be distinct");
  }
}

Eigen::Index gather_bits(Eigen::Index index, const std::vector<int>& qubits,
                         int total) {
  Eigen::Index out = 0;
  for (int q : qubits) out = (out << 1) | bit_of(index, q, total);
  return out;
}

Eigen::Index scatter_bits(Eigen::Index index, Eigen::Index value,
                          const std::vector<int>& qubits, int total) {
  Eigen::Index out = index;
  int m = static_cast<int>(qubits.size());
  for (int t = 0; t < m; ++t) {
    Eigen::Index pos = total - 1 - qubits[t];
    Eigen::Index bit = (value >> (m - 1 - t)) & 1;
    out = (out & ~(Eigen::Index{1} << pos)) | (bit << pos);
  }
  return out;
}

}  // namespace

Matrix embed(const Matrix& u, const std::vector<int>& targets,
             int register_qubits) {
  check_targets(targets, register_qubits);
  int m = static_cast<int>(targets.size());
  if (u.rows() != (Eigen::Index{1} << m) || u.rows() != u.cols())
    throw std::invalid_argument("operator dimension does not match targets");
  Eigen::Index dim = Eigen::Index{1} << register_qubits;
  Eigen::Index small = u.rows();
  Matrix full = Matrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    Eigen::Index r = gather_bits(i, targets, register_qubits);
    for (Eigen::Index c = 0; c < small; ++c) {
      Eigen::Index j = scatter_bits(i, c, targets, register_qubits);
      full(i, j) = u(r, c);
    }
  }
  return full;
}

DensityMatrix apply_unitary(const DensityMatrix& rho, const Operator& u,
                            const std::vector<int>& targets) {
  if (!u.is_unitary())
    throw std::invalid_argument("apply_unitary requires a unitary operator");
  Matrix full = embed(u.matrix(), targets, rho.qubits());
  Matrix out = full * rho.matrix() * full.adjoint();
  return DensityMatrix(((out + out.adjoint()) / 2.0).eval());
}

DensityMatrix apply_channel(const DensityMatrix& rho, const KrausChannel& ch,
                            const std::vector<int>& targets) {
  if (ch.qubits() != static_cast<int>(targets.size()))
    throw std::invalid_argument("channel dimension does not match targets");
  Matrix out = Matrix::Zero(rho.dim(), rho.dim());
  for (const Operator& k : ch.operators()) {
    Matrix full = embed(k.matrix(), targets, rho.qubits());
    out += full * rho.matrix() * full.adjoint();
  }
  return DensityMatrix(((out + out.adjoint()) / 2.0).eval());
}

DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<int>& keep) {
  int n = rho.qubits();
  check_targets(keep, n);
  std::vector<int> traced;
  for (int q = 0; q < n; ++q)
    if (std::find(keep.begin(), keep.end(), q) == keep.end())
      traced.push_back(q);
  if (traced.empty()) return rho;
  int m = static_cast<int>(keep.size());
  Eigen::Index out_dim = Eigen::Index{1} << m;
  Eigen::Index env_dim = Eigen::Index{1} << traced.size();
  Matrix out = Matrix::Zero(out_dim, out_dim);
  for (Eigen::Index r = 0; r < out_dim; ++r)
    for (Eigen::Index c = 0; c < out_dim; ++c)
      for (Eigen::Index a = 0; a < env_dim; ++a) {
        Eigen::Index i = scatter_bits(scatter_bits(0, r, keep, n), a, traced, n);
        Eigen::Index j = scatter_bits(scatter_bits(0, c, keep, n), a, traced, n);
        out(r, c) += rho.matrix()(i, j);
      }
  return DensityMatrix(((out + out.adjoint()) / 2.0).eval());
}

double measure_probability(const DensityMatrix& rho, int target, Basis basis,
                           int outcome) {
  if (outcome != 0 && outcome != 1)
    throw std::invalid_argument("outcome must be 0 or 1");
  Vector v(2);
  if (basis == Basis::Computational) {
    v << (outcome == 0 ? 1.0 : 0.0), (outcome == 1 ? 1.0 : 0.0);
  } else {
    const double s = 1.0 / std::sqrt(2.0);
    v << s, (outcome == 0 ? s : -s);
  }
  Matrix proj = embed(v * v.adjoint(), {target}, rho.qubits());
  double p = (proj * rho.matrix()).trace().real();
  return std::clamp(p, 0.0, 1.0);
}

double fidelity(const DensityMatrix& rho, const StateVector& psi) {
  if (rho.dim() != psi.dim())
    throw std::invalid_argument("fidelity: dimension mismatch");
  cd f = psi.amplitudes().adjoint() * rho.matrix() * psi.amplitudes();
  return std::clamp(f.real(), 0.0, 1.0);
}

double purity(const DensityMatrix& rho) {
  return (rho.matrix() * rho.matrix()).trace().real();
}

}  // namespace qssim
