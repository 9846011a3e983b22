#pragma once

#include <string>
#include <vector>

#include "qssim/channels.hpp"

namespace qssim {

enum class CodeScheme { None, Repetition, FiveQubit, FourQubit };
enum class QecMode { SingleCycle, PerHop };

std::string to_string(CodeScheme s);
std::string to_string(QecMode m);

/// Majority vote over three decoded classical bits.
int rep3_majority(int a, int b, int c);

/// The [[5,1,3]] perfect code: encoder unitary, the sixteen-operator
/// recovery map, and logical single-qubit operations realized by
/// conjugation with the encoder. The data qubit sits on the middle wire
/// (position 2) after decoding, so each recovery operator factors as a
/// two-qubit ancilla projector, a data Pauli, and another ancilla projector.
class FiveQubitCode {
 public:
  FiveQubitCode();

  static constexpr int kPhysicalQubits = 5;
  static constexpr int kDataQubit = 2;

  StateVector encode(const StateVector& psi) const;
  const Operator& encoding_unitary() const { return enc_; }

  // Enc†, then rho -> Σ R_k rho R_k†, then trace out the four ancillas.
  DensityMatrix recover_decode(const DensityMatrix& rho5) const;

  // Enc · (u on the data wire) · Enc†.
  Operator logical(const Operator& u) const;

  const std::vector<Matrix>& recovery_operators() const { return recovery_; }
  // The full recover+decode map flattened to 16 Kraus operators of shape
  // 2x32 (decode, recover, discard ancillas in one step).
  const std::vector<Matrix>& recover_decode_kraus() const { return composite_; }

  const Vector& logical_zero() const { return logical0_; }
  const Vector& logical_one() const { return logical1_; }

 private:
  Operator enc_;
  std::vector<Matrix> recovery_;
  std::vector<Matrix> composite_;
  Vector logical0_, logical1_;
};

/// The [[4,1]] approximate amplitude-damping code. Recovery measures the
/// parities of qubit pairs (1,2) and (3,4), identifies the damped qubit on
/// an odd syndrome, applies the matching restoring isometry, and on the
/// even/even syndrome rebalances the |0000>/|1111> weights with a rotation
/// by pi/4 - atan((1-gamma)^2). A double-damping (odd,odd) syndrome is
/// uncorrectable and decodes to |0>.
class FourQubitCode {
 public:
  FourQubitCode();

  static constexpr int kPhysicalQubits = 4;
  static constexpr int kDataQubit = 0;

  StateVector encode(const StateVector& psi) const;
  const Operator& encoding_unitary() const { return enc_; }

  DensityMatrix recover_decode(const DensityMatrix& rho4, double gamma) const;

  // Recovery, decode and ancilla discard as Kraus operators of shape 2x16.
  std::vector<Matrix> recover_decode_kraus(double gamma) const;

  Operator logical(const Operator& u) const;

  const Vector& logical_zero() const { return logical0_; }
  const Vector& logical_one() const { return logical1_; }

 private:
  Operator enc_;
  Vector logical0_, logical1_;
};

}  // namespace qssim
