#pragma once

#include <vector>

#include "qssim/states.hpp"

namespace qssim {

/// Finite Kraus set defining a CPTP map; Σ K†K = I is enforced at
/// construction (kAlgebraTol).
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<Operator> operators);

  Eigen::Index dim() const { return ops_.front().dim(); }
  int qubits() const { return ops_.front().qubits(); }
  const std::vector<Operator>& operators() const { return ops_; }

 private:
  std::vector<Operator> ops_;
};

enum class Basis { Computational, Hadamard };

// Lift an operator acting on `targets` (ordered, distinct) to the full
// register. targets[t] becomes qubit t of the small operator.
Matrix embed(const Matrix& u, const std::vector<int>& targets,
             int register_qubits);

// rho -> U rho U† with u lifted to the register. Rejects non-unitary u and
// out-of-range or repeated targets.
DensityMatrix apply_unitary(const DensityMatrix& rho, const Operator& u,
                            const std::vector<int>& targets);

// rho -> Σ_k K rho K† on the given targets.
DensityMatrix apply_channel(const DensityMatrix& rho, const KrausChannel& ch,
                            const std::vector<int>& targets);

// Reduced state on `keep` (ordered, distinct, nonempty); keep[t] becomes
// qubit t of the result.
DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<int>& keep);

// Tr(P rho) for the projector onto `outcome` of `target` in `basis`.
double measure_probability(const DensityMatrix& rho, int target, Basis basis,
                           int outcome);

// <psi| rho |psi> for a pure target.
double fidelity(const DensityMatrix& rho, const StateVector& psi);

double purity(const DensityMatrix& rho);

}  // namespace qssim
