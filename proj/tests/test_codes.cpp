#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qssim/codes.hpp"
#include "qssim/noise.hpp"

using namespace qssim;

namespace {

StateVector sample_state() {
  Vector v(2);
  v << cd(0.6, 0.1), cd(0.2, -0.7745966692414834);
  v /= v.norm();
  return StateVector{v};
}

}  // namespace

TEST_CASE("majority vote over all eight bit patterns") {
  CHECK(rep3_majority(0, 0, 0) == 0);
  CHECK(rep3_majority(1, 0, 1) == 1);
  CHECK(rep3_majority(1, 1, 0) == 1);
  CHECK(rep3_majority(0, 1, 0) == 0);
  CHECK(rep3_majority(1, 1, 1) == 1);
  for (int a : {0, 1})
    for (int b : {0, 1}) CHECK(rep3_majority(a, a, b) == a);
  CHECK_THROWS_AS(rep3_majority(2, 0, 0), std::invalid_argument);
}

TEST_CASE("five-qubit logical states carry the published amplitudes") {
  FiveQubitCode code;
  const double amp = 1.0 / (2.0 * std::sqrt(2.0));
  StateVector z = code.encode(states::zero());
  CHECK(std::abs(z.amplitudes()(0b00000) - cd(-amp)) < 1e-12);
  CHECK(std::abs(z.amplitudes()(0b00110) - cd(amp)) < 1e-12);
  CHECK(std::abs(z.amplitudes()(0b10011) - cd(-amp)) < 1e-12);
  StateVector o = code.encode(states::one());
  CHECK(std::abs(o.amplitudes()(0b11111) - cd(-amp)) < 1e-12);
  CHECK(std::abs(o.amplitudes()(0b01010) - cd(-amp)) < 1e-12);
  CHECK(std::abs(o.amplitudes()(0b10000) - cd(amp)) < 1e-12);
  StateVector superposed = code.encode(states::plus());
  CHECK(std::abs(superposed.amplitudes().norm() - 1.0) < 1e-12);
  Vector expect = (z.amplitudes() + o.amplitudes()) / std::sqrt(2.0);
  CHECK((superposed.amplitudes() - expect).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("five-qubit encoder is unitary with the data on the middle wire") {
  FiveQubitCode code;
  const Matrix& enc = code.encoding_unitary().matrix();
  CHECK((enc.adjoint() * enc - Matrix::Identity(32, 32)).cwiseAbs().maxCoeff() <
        1e-12);
  // Data bit b with zeroed ancillas sits at basis index 4b.
  CHECK((enc.col(0) - code.logical_zero()).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((enc.col(4) - code.logical_one()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("five-qubit recovery operators are complete") {
  FiveQubitCode code;
  CHECK(code.recovery_operators().size() == 16);
  Matrix sum = Matrix::Zero(32, 32);
  for (const Matrix& r : code.recovery_operators()) sum += r.adjoint() * r;
  CHECK((sum - Matrix::Identity(32, 32)).cwiseAbs().maxCoeff() < 1e-12);
  Matrix sum2 = Matrix::Zero(32, 32);
  for (const Matrix& a : code.recover_decode_kraus()) sum2 += a.adjoint() * a;
  CHECK((sum2 - Matrix::Identity(32, 32)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("five-qubit code corrects every single-qubit Pauli exactly") {
  FiveQubitCode code;
  const Operator paulis[3] = {gates::pauli_x(), gates::pauli_y(),
                              gates::pauli_z()};
  for (const StateVector& psi :
       {states::zero(), states::one(), states::plus(), sample_state()}) {
    StateVector enc = code.encode(psi);
    CHECK(fidelity(code.recover_decode(DensityMatrix::pure(enc)), psi) >
          1.0 - 1e-12);
    for (int q = 0; q < 5; ++q)
      for (const Operator& p : paulis) {
        DensityMatrix noisy = apply_unitary(DensityMatrix::pure(enc), p, {q});
        CHECK(fidelity(code.recover_decode(noisy), psi) > 1.0 - 1e-12);
      }
  }
}

TEST_CASE("a weight-two error defeats the five-qubit code") {
  FiveQubitCode code;
  StateVector psi = states::zero();
  DensityMatrix rho = DensityMatrix::pure(code.encode(psi));
  rho = apply_unitary(rho, gates::pauli_x(), {1});
  rho = apply_unitary(rho, gates::pauli_x(), {2});
  CHECK(fidelity(code.recover_decode(rho), psi) < 1.0 - 1e-6);
}

TEST_CASE("five-qubit logical operators act on the code space") {
  FiveQubitCode code;
  Operator id = code.logical(gates::identity());
  CHECK((id.matrix() - Matrix::Identity(32, 32)).cwiseAbs().maxCoeff() < 1e-12);
  Operator ylog = code.logical(gates::pauli_y());
  Vector image = ylog.matrix() * code.logical_zero();
  CHECK(std::abs(std::abs((code.logical_one().adjoint() * image).value()) -
                 1.0) < 1e-12);
  Operator hlog = code.logical(gates::hadamard());
  CHECK((hlog.matrix() * hlog.matrix() - Matrix::Identity(32, 32))
            .cwiseAbs()
            .maxCoeff() < 1e-12);
  Matrix bad(2, 2);
  bad << 1, 1, 0, 1;
  CHECK_THROWS_AS(code.logical(Operator{bad}), std::invalid_argument);
}

TEST_CASE("four-qubit codewords and encoder layout") {
  FourQubitCode code;
  const double s = 1.0 / std::sqrt(2.0);
  StateVector z = code.encode(states::zero());
  CHECK(std::abs(z.amplitudes()(0b0000) - cd(s)) < 1e-12);
  CHECK(std::abs(z.amplitudes()(0b1111) - cd(s)) < 1e-12);
  StateVector o = code.encode(states::one());
  CHECK(std::abs(o.amplitudes()(0b0011) - cd(s)) < 1e-12);
  CHECK(std::abs(o.amplitudes()(0b1100) - cd(s)) < 1e-12);
  const Matrix& enc = code.encoding_unitary().matrix();
  CHECK((enc.adjoint() * enc - Matrix::Identity(16, 16)).cwiseAbs().maxCoeff() <
        1e-12);
  CHECK((enc.col(0) - z.amplitudes()).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((enc.col(8) - o.amplitudes()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("four-qubit recovery is trace preserving for any gamma") {
  FourQubitCode code;
  for (double g : {0.0, 0.2, 0.7, 1.0}) {
    Matrix sum = Matrix::Zero(16, 16);
    for (const Matrix& a : code.recover_decode_kraus(g))
      sum += a.adjoint() * a;
    CHECK((sum - Matrix::Identity(16, 16)).cwiseAbs().maxCoeff() < 1e-12);
  }
  CHECK_THROWS_AS(code.recover_decode_kraus(-0.1), std::invalid_argument);
}

TEST_CASE("four-qubit round trip at gamma zero") {
  FourQubitCode code;
  for (const StateVector& psi :
       {states::zero(), states::one(), states::plus(), sample_state()}) {
    DensityMatrix out =
        code.recover_decode(DensityMatrix::pure(code.encode(psi)), 0.0);
    CHECK(fidelity(out, psi) > 1.0 - 1e-12);
  }
}

TEST_CASE("post-selected single damping events recover exactly") {
  FourQubitCode code;
  const double g = 0.2;
  Matrix e1(2, 2);
  e1 << 0, std::sqrt(g), 0, 0;
  for (const StateVector& psi : {states::plus(), sample_state()}) {
    Vector enc = code.encode(psi).amplitudes();
    for (int q = 0; q < 4; ++q) {
      Vector damped = embed(e1, {q}, 4) * enc;
      Matrix rho = damped * damped.adjoint() / damped.squaredNorm();
      DensityMatrix out = code.recover_decode(
          DensityMatrix(((rho + rho.adjoint()) / 2.0).eval()), g);
      CHECK(fidelity(out, psi) > 1.0 - 1e-12);
    }
  }
}

TEST_CASE("iid damping infidelity scales quadratically") {
  FourQubitCode code;
  StateVector psi = states::plus();
  StateVector enc = code.encode(psi);
  auto infidelity = [&](double g) {
    DensityMatrix rho = lift_iid(DensityMatrix::pure(enc),
                                 amplitude_damping(g));
    return 1.0 - fidelity(code.recover_decode(rho, g), psi);
  };
  double slope =
      std::log(infidelity(1e-2) / infidelity(1e-3)) / std::log(10.0);
  CHECK(std::abs(slope - 2.0) < 0.1);
}

TEST_CASE("double damping falls back to |0>") {
  FourQubitCode code;
  StateVector psi = sample_state();
  Vector enc = code.encode(psi).amplitudes();
  Matrix e1 = Matrix::Zero(2, 2);
  e1(0, 1) = 1.0;
  // Damp qubits 0 and 2 deterministically: |1100> -> |0100> -> |0000>?  Both
  // pair parities turn odd only when one qubit per pair damps.
  Vector damped = embed(e1, {2}, 4) * (embed(e1, {0}, 4) * enc);
  REQUIRE(damped.norm() > 1e-9);
  Matrix rho = damped * damped.adjoint() / damped.squaredNorm();
  DensityMatrix out = code.recover_decode(
      DensityMatrix(((rho + rho.adjoint()) / 2.0).eval()), 0.3);
  CHECK(fidelity(out, states::zero()) > 1.0 - 1e-12);
}
