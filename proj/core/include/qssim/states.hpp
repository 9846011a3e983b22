#pragma once

#include <vector>

#include "qssim/linalg.hpp"

namespace qssim {

/// Normalized pure state on a power-of-two dimensional register.
class StateVector {
 public:
  explicit StateVector(Vector amplitudes);

  Eigen::Index dim() const { return amps_.size(); }
  int qubits() const { return qubits_; }
  const Vector& amplitudes() const { return amps_; }

 private:
  Vector amps_;
  int qubits_;
};

/// Dense operator on a qubit register. When constructed with
/// `unitary = true`, U†U = I is checked at kAlgebraTol.
class Operator {
 public:
  explicit Operator(Matrix m, bool unitary = false);

  Eigen::Index dim() const { return m_.rows(); }
  int qubits() const { return qubits_; }
  bool is_unitary() const { return unitary_; }
  const Matrix& matrix() const { return m_; }
  Operator dagger() const;

 private:
  Matrix m_;
  int qubits_;
  bool unitary_;
};

/// Trace-one Hermitian operator; the simulation substrate. Hermiticity and
/// unit trace are enforced at construction; positivity is checkable on
/// demand (it is preserved by every operation in this library).
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix m);
  static DensityMatrix pure(const StateVector& psi);

  Eigen::Index dim() const { return m_.rows(); }
  int qubits() const { return qubits_; }
  const Matrix& matrix() const { return m_; }
  bool is_positive_semidefinite(double tol = 1e-10) const;

 private:
  Matrix m_;
  int qubits_;
};

StateVector tensor(const StateVector& a, const StateVector& b);
Operator tensor(const Operator& a, const Operator& b);

namespace gates {
Operator identity(int qubits = 1);
Operator pauli_x();
Operator pauli_y();
Operator pauli_z();
Operator hadamard();
}  // namespace gates

namespace states {
StateVector zero();
StateVector one();
StateVector plus();
StateVector minus();
StateVector basis(int qubits, Eigen::Index index);
}  // namespace states

}  // namespace qssim
