#pragma once

#include <complex>

#include <Eigen/Dense>

namespace qssim {

using cd = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Tolerance constants used throughout the library. Algebraic identities
// (unitarity, trace preservation, completeness sums) are enforced at
// kAlgebraTol; analytic-vs-simulation comparisons use kCompareTol.
inline constexpr double kAlgebraTol = 1e-12;
inline constexpr double kCompareTol = 1e-9;

// Number of qubits for a register of dimension `dim`. Throws
// std::invalid_argument unless dim is a positive power of two.
int qubit_count(Eigen::Index dim);

// Kronecker product with `a` occupying the high-order qubits.
Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(const Vector& a, const Vector& b);

bool all_finite(const Matrix& m);
bool all_finite(const Vector& v);

// Bit of `qubit` in basis index `index` of a `total`-qubit register.
// Qubit 0 is the most significant bit of the basis index.
inline int bit_of(Eigen::Index index, int qubit, int total) {
  return static_cast<int>((index >> (total - 1 - qubit)) & 1);
}

}  // namespace qssim
