#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qssim/channels.hpp"
#include "qssim/states.hpp"

using namespace qssim;

TEST_CASE("qubit_count accepts powers of two only") {
  CHECK(qubit_count(2) == 1);
  CHECK(qubit_count(32) == 5);
  CHECK_THROWS_AS(qubit_count(3), std::invalid_argument);
  CHECK_THROWS_AS(qubit_count(1), std::invalid_argument);
  CHECK_THROWS_AS(qubit_count(0), std::invalid_argument);
}

TEST_CASE("kron matches hand-computed blocks") {
  Matrix a(2, 2), b(2, 2);
  a << 1, 2, 3, 4;
  b << 0, 1, 1, 0;
  Matrix k = kron(a, b);
  CHECK(k.rows() == 4);
  CHECK(k(0, 1) == cd(1.0));
  CHECK(k(0, 3) == cd(2.0));
  CHECK(k(3, 0) == cd(3.0));
  Vector u(2), v(2);
  u << 1, 2;
  v << 3, 4;
  Vector kv = kron(u, v);
  CHECK(kv(0) == cd(3.0));
  CHECK(kv(3) == cd(8.0));
}

TEST_CASE("StateVector enforces normalization and finite entries") {
  Vector bad(2);
  bad << 1.0, 1.0;
  CHECK_THROWS_AS(StateVector{bad}, std::invalid_argument);
  CHECK_NOTHROW(states::plus());
  Vector nan(2);
  nan << std::numeric_limits<double>::quiet_NaN(), 0.0;
  CHECK_THROWS_AS(StateVector{nan}, std::invalid_argument);
}

TEST_CASE("Operator rejects a false unitary flag") {
  Matrix m(2, 2);
  m << 1, 1, 0, 1;
  CHECK_NOTHROW(Operator{m});
  CHECK_THROWS_AS(Operator(m, true), std::invalid_argument);
}

TEST_CASE("DensityMatrix enforces Hermiticity and unit trace") {
  Matrix m(2, 2);
  m << 0.5, cd(0, 0.1), cd(0, 0.1), 0.5;  // not Hermitian (sign)
  CHECK_THROWS_AS(DensityMatrix{m}, std::invalid_argument);
  Matrix t = Matrix::Identity(2, 2);  // trace 2
  CHECK_THROWS_AS(DensityMatrix{t}, std::invalid_argument);
  DensityMatrix rho = DensityMatrix::pure(states::plus());
  CHECK(rho.is_positive_semidefinite());
  CHECK(std::abs(rho.matrix()(0, 1).real() - 0.5) < kAlgebraTol);
}

TEST_CASE("standard gates are unitary and satisfy basic identities") {
  const Matrix h = gates::hadamard().matrix();
  const Matrix x = gates::pauli_x().matrix();
  const Matrix y = gates::pauli_y().matrix();
  const Matrix z = gates::pauli_z().matrix();
  CHECK((h * h - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < kAlgebraTol);
  CHECK((x * y - cd(0, 1) * z).cwiseAbs().maxCoeff() < kAlgebraTol);
  CHECK((h * x * h - z).cwiseAbs().maxCoeff() < kAlgebraTol);
}

TEST_CASE("basis state helpers") {
  CHECK(states::basis(2, 3).amplitudes()(3) == cd(1.0));
  CHECK_THROWS_AS(states::basis(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(states::basis(2, -1), std::invalid_argument);
}

TEST_CASE("embed places a single-qubit operator on the requested wire") {
  const Matrix x = gates::pauli_x().matrix();
  const Matrix i2 = Matrix::Identity(2, 2);
  CHECK((embed(x, {0}, 2) - kron(x, i2)).cwiseAbs().maxCoeff() < kAlgebraTol);
  CHECK((embed(x, {1}, 2) - kron(i2, x)).cwiseAbs().maxCoeff() < kAlgebraTol);
  // Two-qubit embed with reversed target order swaps the operand wires.
  Matrix cnot = Matrix::Zero(4, 4);
  cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1.0;
  Matrix lifted = embed(cnot, {2, 0}, 3);
  StateVector in = states::basis(3, 0b001);  // qubit 2 (control) is 1
  Vector out = lifted * in.amplitudes();
  CHECK(std::abs(out(0b101) - cd(1.0)) < kAlgebraTol);  // qubit 0 flipped
  CHECK_THROWS_AS(embed(x, {2}, 2), std::invalid_argument);
  CHECK_THROWS_AS(embed(x, {0, 0}, 2), std::invalid_argument);
}

TEST_CASE("apply_unitary preserves purity and requires unitarity") {
  DensityMatrix rho = DensityMatrix::pure(tensor(states::plus(), states::one()));
  DensityMatrix out = apply_unitary(rho, gates::hadamard(), {1});
  CHECK(std::abs(purity(out) - 1.0) < 1e-12);
  Matrix m(2, 2);
  m << 1, 1, 0, 1;
  CHECK_THROWS_AS(apply_unitary(rho, Operator{m}, {0}), std::invalid_argument);
}

TEST_CASE("partial trace undoes tensoring with an ancilla") {
  DensityMatrix a = DensityMatrix::pure(states::plus());
  DensityMatrix b = DensityMatrix::pure(states::one());
  DensityMatrix joint(kron(a.matrix(), b.matrix()));
  DensityMatrix back = partial_trace(joint, {0});
  CHECK((back.matrix() - a.matrix()).cwiseAbs().maxCoeff() < 1e-12);
  DensityMatrix other = partial_trace(joint, {1});
  CHECK((other.matrix() - b.matrix()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("partial trace of an entangled pair is maximally mixed") {
  Vector bell(4);
  bell << 1.0 / std::sqrt(2.0), 0, 0, 1.0 / std::sqrt(2.0);
  DensityMatrix rho = DensityMatrix::pure(StateVector{bell});
  DensityMatrix reduced = partial_trace(rho, {0});
  CHECK((reduced.matrix() - Matrix::Identity(2, 2) / 2.0).cwiseAbs().maxCoeff() <
        1e-12);
  CHECK(std::abs(purity(reduced) - 0.5) < 1e-12);
}

TEST_CASE("measurement probabilities sum to one in both bases") {
  DensityMatrix rho = DensityMatrix::pure(tensor(states::plus(), states::zero()));
  for (int q = 0; q < 2; ++q)
    for (Basis basis : {Basis::Computational, Basis::Hadamard}) {
      double total = measure_probability(rho, q, basis, 0) +
                     measure_probability(rho, q, basis, 1);
      CHECK(std::abs(total - 1.0) < 1e-12);
    }
  CHECK(std::abs(measure_probability(rho, 0, Basis::Hadamard, 0) - 1.0) <
        1e-12);
  CHECK(std::abs(measure_probability(rho, 1, Basis::Computational, 0) - 1.0) <
        1e-12);
}

TEST_CASE("fidelity and purity basics") {
  DensityMatrix rho = DensityMatrix::pure(states::plus());
  CHECK(std::abs(fidelity(rho, states::plus()) - 1.0) < 1e-12);
  CHECK(std::abs(fidelity(rho, states::minus())) < 1e-12);
  CHECK(std::abs(fidelity(rho, states::zero()) - 0.5) < 1e-12);
}
