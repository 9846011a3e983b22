#include "qssim/states.hpp"

#include <cmath>
#include <stdexcept>

namespace qssim {

int qubit_count(Eigen::Index dim) {
  if (dim < 2 || (dim & (dim - 1)) != 0)
    throw std::invalid_argument("dimension must be a power of two >= 2");
  int k = 0;
  while ((Eigen::Index{1} << k) < dim) ++k;
  return k;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Vector kron(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

bool all_finite(const Matrix& m) { return m.allFinite(); }
bool all_finite(const Vector& v) { return v.allFinite(); }

StateVector::StateVector(Vector amplitudes) : amps_(std::move(amplitudes)) {
  qubits_ = qubit_count(amps_.size());
  if (!all_finite(amps_))
    throw std::invalid_argument("state amplitudes must be finite");
  if (std::abs(amps_.norm() - 1.0) > kAlgebraTol)
    throw std::invalid_argument("state vector must be normalized");
}

Operator::Operator(Matrix m, bool unitary) : m_(std::move(m)), unitary_(unitary) {
  if (m_.rows() != m_.cols())
    throw std::invalid_argument("operator must be square");
  qubits_ = qubit_count(m_.rows());
  if (!all_finite(m_))
    throw std::invalid_argument("operator entries must be finite");
  if (unitary_) {
    Matrix gram = m_.adjoint() * m_;
    if ((gram - Matrix::Identity(m_.rows(), m_.cols())).cwiseAbs().maxCoeff() >
        kAlgebraTol)
      throw std::invalid_argument("operator flagged unitary fails U†U = I");
  }
}

Operator Operator::dagger() const { return Operator(m_.adjoint(), unitary_); }

DensityMatrix::DensityMatrix(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols())
    throw std::invalid_argument("density matrix must be square");
  qubits_ = qubit_count(m_.rows());
  if (!all_finite(m_))
    throw std::invalid_argument("density matrix entries must be finite");
  if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > kAlgebraTol)
    throw std::invalid_argument("density matrix must be Hermitian");
  if (std::abs(m_.trace().real() - 1.0) > kAlgebraTol ||
      std::abs(m_.trace().imag()) > kAlgebraTol)
    throw std::invalid_argument("density matrix must have unit trace");
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
  Matrix m = psi.amplitudes() * psi.amplitudes().adjoint();
  // Exact Hermitization guards against last-bit asymmetry in the product.
  return DensityMatrix(((m + m.adjoint()) / 2.0).eval());
}

bool DensityMatrix::is_positive_semidefinite(double tol) const {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m_);
  return solver.eigenvalues().minCoeff() >= -tol;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  return StateVector(kron(a.amplitudes(), b.amplitudes()));
}

Operator tensor(const Operator& a, const Operator& b) {
  return Operator(kron(a.matrix(), b.matrix()),
                  a.is_unitary() && b.is_unitary());
}

namespace gates {

Operator identity(int qubits) {
  Eigen::Index dim = Eigen::Index{1} << qubits;
  return Operator(Matrix::Identity(dim, dim), true);
}

Operator pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return Operator(m, true);
}

Operator pauli_y() {
  Matrix m(2, 2);
  m << 0, cd(0, -1), cd(0, 1), 0;
  return Operator(m, true);
}

Operator pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return Operator(m, true);
}

Operator hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  Matrix m(2, 2);
  m << s, s, s, -s;
  return Operator(m, true);
}

}  // namespace gates

namespace states {

StateVector zero() { return basis(1, 0); }
StateVector one() { return basis(1, 1); }

StateVector plus() {
  Vector v(2);
  v << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  return StateVector(v);
}

StateVector minus() {
  Vector v(2);
  v << 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
  return StateVector(v);
}

StateVector basis(int qubits, Eigen::Index index) {
  Eigen::Index dim = Eigen::Index{1} << qubits;
  if (index < 0 || index >= dim)
    throw std::invalid_argument("basis index out of range");
  Vector v = Vector::Zero(dim);
  v(index) = 1.0;
  return StateVector(v);
}

}  // namespace states

}  // namespace qssim
