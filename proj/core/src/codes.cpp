#include "qssim/codes.hpp"

#include <cmath>
#include <stdexcept>

namespace qssim {

std::string to_string(CodeScheme s) {
  switch (s) {
    case CodeScheme::None: return "none";
    case CodeScheme::Repetition: return "repetition";
    case CodeScheme::FiveQubit: return "five_qubit";
    case CodeScheme::FourQubit: return "four_qubit";
  }
  return "?";
}

std::string to_string(QecMode m) {
  return m == QecMode::SingleCycle ? "single_cycle" : "per_hop";
}

int rep3_majority(int a, int b, int c) {
  for (int v : {a, b, c})
    if (v != 0 && v != 1)
      throw std::invalid_argument("majority inputs must be bits");
  return (a + b + c >= 2) ? 1 : 0;
}

namespace {

Matrix apply_kraus_map(const std::vector<Matrix>& kraus, const Matrix& rho) {
  Matrix out = Matrix::Zero(kraus.front().rows(), kraus.front().rows());
  for (const Matrix& k : kraus) out += k * rho * k.adjoint();
  return ((out + out.adjoint()) / 2.0).eval();
}

Vector five_logical_state(const int (&kets)[8], const int (&signs)[8]) {
  Vector v = Vector::Zero(32);
  const double amp = 1.0 / (2.0 * std::sqrt(2.0));
  for (int i = 0; i < 8; ++i) v(kets[i]) = signs[i] * amp;
  return v;
}

}  // namespace

FiveQubitCode::FiveQubitCode()
    : enc_(Matrix::Identity(32, 32), true) {
  // Logical basis states; basis kets written with qubit 0 as the most
  // significant bit.
  const int kets0[8] = {0b00000, 0b00110, 0b01001, 0b01111,
                        0b10011, 0b10101, 0b11010, 0b11100};
  const int signs0[8] = {-1, 1, 1, 1, -1, 1, 1, 1};
  const int kets1[8] = {0b11111, 0b11001, 0b10110, 0b10000,
                        0b01100, 0b01010, 0b00101, 0b00011};
  const int signs1[8] = {-1, 1, 1, 1, 1, -1, -1, -1};
  logical0_ = five_logical_state(kets0, signs0);
  logical1_ = five_logical_state(kets1, signs1);

  const Matrix i2 = gates::identity().matrix();
  const Matrix x = gates::pauli_x().matrix();
  const Matrix y = gates::pauli_y().matrix();
  const Matrix z = gates::pauli_z().matrix();

  // Data-wire Pauli of each recovery operator, indexed by syndrome
  // k = 4*(left ancilla pair) + (right ancilla pair).
  std::vector<Matrix> syndrome_pauli = {
      i2, z, i2, i2,  i2, z, x, x,  i2, x, z, x,  z, Matrix(x * z), x, z};

  // One single-qubit error per nonzero syndrome; the encoder below is
  // completed so that this assignment is exact.
  std::vector<Matrix> syndrome_error(16, Matrix());
  {
    int k = 1;
    for (const Matrix& p : {x, z, y})
      for (int q = 0; q < 5; ++q)
        syndrome_error[k++] = embed(p, {q}, 5);
  }

  Matrix enc = Matrix::Zero(32, 32);
  for (int s1 = 0; s1 < 4; ++s1) {
    for (int s2 = 0; s2 < 4; ++s2) {
      int k = s1 * 4 + s2;
      for (int c = 0; c < 2; ++c) {
        // P_k† |c> expressed on the logical basis, hit by the error E_k.
        Vector pc = syndrome_pauli[k].adjoint().col(c);
        Vector codeword = pc(0) * logical0_ + pc(1) * logical1_;
        if (k != 0) codeword = syndrome_error[k] * codeword;
        enc.col((s1 << 3) | (c << 2) | s2) = codeword;
      }
    }
  }
  if ((enc.adjoint() * enc - Matrix::Identity(32, 32)).cwiseAbs().maxCoeff() >
      kAlgebraTol)
    throw std::logic_error("five-qubit encoder completion is not unitary");
  enc_ = Operator(std::move(enc), true);

  // R_k = |00><s1| ⊗ P_k ⊗ |00><s2|.
  for (int s1 = 0; s1 < 4; ++s1)
    for (int s2 = 0; s2 < 4; ++s2) {
      Matrix left = Matrix::Zero(4, 4), right = Matrix::Zero(4, 4);
      left(0, s1) = 1.0;
      right(0, s2) = 1.0;
      recovery_.push_back(kron(kron(left, syndrome_pauli[s1 * 4 + s2]), right));
    }

  // Decode + recover + ancilla discard in one step: A_k = S R_k Enc†,
  // where S reads the data wire off the zeroed ancillas.
  Matrix select = Matrix::Zero(2, 32);
  select(0, 0) = 1.0;
  select(1, 4) = 1.0;
  for (const Matrix& r : recovery_)
    composite_.push_back(select * r * enc_.matrix().adjoint());
}

StateVector FiveQubitCode::encode(const StateVector& psi) const {
  if (psi.dim() != 2)
    throw std::invalid_argument("five-qubit code encodes one qubit");
  return StateVector(psi.amplitudes()(0) * logical0_ +
                     psi.amplitudes()(1) * logical1_);
}

DensityMatrix FiveQubitCode::recover_decode(const DensityMatrix& rho5) const {
  if (rho5.qubits() != 5)
    throw std::invalid_argument("expected a five-qubit state");
  return DensityMatrix(apply_kraus_map(composite_, rho5.matrix()));
}

Operator FiveQubitCode::logical(const Operator& u) const {
  if (!u.is_unitary() || u.dim() != 2)
    throw std::invalid_argument("logical operator must be a 1-qubit unitary");
  Matrix lifted = embed(u.matrix(), {kDataQubit}, 5);
  return Operator(enc_.matrix() * lifted * enc_.matrix().adjoint(), true);
}

FourQubitCode::FourQubitCode() : enc_(Matrix::Identity(16, 16), true) {
  const double s = 1.0 / std::sqrt(2.0);
  logical0_ = Vector::Zero(16);
  logical0_(0b0000) = s;
  logical0_(0b1111) = s;
  logical1_ = Vector::Zero(16);
  logical1_(0b0011) = s;
  logical1_(0b1100) = s;

  // Columns 0 and 8 carry the codewords; the rest is a fixed Gram-Schmidt
  // completion over the computational basis.
  Matrix enc = Matrix::Zero(16, 16);
  enc.col(0) = logical0_;
  enc.col(8) = logical1_;
  int next = 0;
  for (int col = 0; col < 16; ++col) {
    if (col == 0 || col == 8) continue;
    Vector v;
    while (true) {
      v = Vector::Zero(16);
      v(next++) = 1.0;
      for (int prior = 0; prior < 16; ++prior)
        if (enc.col(prior).norm() > 0.5)
          v -= (enc.col(prior).adjoint() * v).value() * enc.col(prior);
      if (v.norm() > 1e-6) break;
    }
    enc.col(col) = v / v.norm();
  }
  if ((enc.adjoint() * enc - Matrix::Identity(16, 16)).cwiseAbs().maxCoeff() >
      kAlgebraTol)
    throw std::logic_error("four-qubit encoder completion is not unitary");
  enc_ = Operator(std::move(enc), true);
}

StateVector FourQubitCode::encode(const StateVector& psi) const {
  if (psi.dim() != 2)
    throw std::invalid_argument("four-qubit code encodes one qubit");
  return StateVector(psi.amplitudes()(0) * logical0_ +
                     psi.amplitudes()(1) * logical1_);
}

std::vector<Matrix> FourQubitCode::recover_decode_kraus(double gamma) const {
  if (!(gamma >= 0.0 && gamma <= 1.0))
    throw std::invalid_argument("rebalancing gamma must lie in [0,1]");
  std::vector<Matrix> kraus;

  // (even,even): rotate in span{|0000>,|1111>} to undo the no-damping skew,
  // decode, then trace the ancillas via their measurement operators.
  const double theta = M_PI / 4.0 - std::atan((1.0 - gamma) * (1.0 - gamma));
  Matrix w = Matrix::Identity(16, 16);
  w(0, 0) = std::cos(theta);
  w(0, 15) = -std::sin(theta);
  w(15, 0) = std::sin(theta);
  w(15, 15) = std::cos(theta);
  Matrix even_proj = Matrix::Zero(16, 16);
  for (int i : {0b0000, 0b0011, 0b1100, 0b1111}) even_proj(i, i) = 1.0;
  Matrix stage = enc_.matrix().adjoint() * w * even_proj;
  for (int anc = 0; anc < 8; ++anc) {
    Matrix read = Matrix::Zero(2, 16);
    read(0, anc) = 1.0;        // data 0, ancillas = anc
    read(1, 8 | anc) = 1.0;    // data 1
    kraus.push_back(read * stage);
  }

  // Odd syndromes: the damped qubit is identified by the surviving pattern
  // and a fixed isometry restores the codeword; composed with decoding this
  // reads the logical amplitudes directly off the two surviving kets.
  auto branch = [&kraus](int ket_for_zero, int ket_for_one) {
    Matrix a = Matrix::Zero(2, 16);
    a(0, ket_for_zero) = 1.0;
    a(1, ket_for_one) = 1.0;
    kraus.push_back(a);
  };
  branch(0b0111, 0b0100);  // (odd,even), qubit 1 damped
  branch(0b1011, 0b1000);  // (odd,even), qubit 2 damped
  branch(0b1101, 0b0001);  // (even,odd), qubit 3 damped
  branch(0b1110, 0b0010);  // (even,odd), qubit 4 damped

  // (odd,odd): double damping, uncorrectable; decode to |0>.
  for (int i : {0b0101, 0b0110, 0b1001, 0b1010}) {
    Matrix a = Matrix::Zero(2, 16);
    a(0, i) = 1.0;
    kraus.push_back(a);
  }
  return kraus;
}

DensityMatrix FourQubitCode::recover_decode(const DensityMatrix& rho4,
                                            double gamma) const {
  if (rho4.qubits() != 4)
    throw std::invalid_argument("expected a four-qubit state");
  return DensityMatrix(
      apply_kraus_map(recover_decode_kraus(gamma), rho4.matrix()));
}

Operator FourQubitCode::logical(const Operator& u) const {
  if (!u.is_unitary() || u.dim() != 2)
    throw std::invalid_argument("logical operator must be a 1-qubit unitary");
  Matrix lifted = embed(u.matrix(), {kDataQubit}, 4);
  return Operator(enc_.matrix() * lifted * enc_.matrix().adjoint(), true);
}

}  // namespace qssim
