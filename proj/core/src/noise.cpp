#include "qssim/noise.hpp"

#include <cmath>
#include <stdexcept>

namespace qssim {

namespace {

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument(std::string(name) + " must lie in [0,1]");
}

}  // namespace

KrausChannel bit_flip(double p) {
  check_probability(p, "bit-flip probability");
  std::vector<Operator> ops;
  ops.emplace_back(Matrix(std::sqrt(1.0 - p) *
                          gates::identity().matrix()));
  ops.emplace_back(Matrix(std::sqrt(p) * gates::pauli_x().matrix()));
  return KrausChannel(std::move(ops));
}

KrausChannel phase_flip(double p) {
  check_probability(p, "phase-flip probability");
  std::vector<Operator> ops;
  ops.emplace_back(Matrix(std::sqrt(1.0 - p) *
                          gates::identity().matrix()));
  ops.emplace_back(Matrix(std::sqrt(p) * gates::pauli_z().matrix()));
  return KrausChannel(std::move(ops));
}

KrausChannel amplitude_damping(double gamma) {
  check_probability(gamma, "damping strength");
  Matrix e0(2, 2), e1(2, 2);
  e0 << 1, 0, 0, std::sqrt(1.0 - gamma);
  e1 << 0, std::sqrt(gamma), 0, 0;
  std::vector<Operator> ops;
  ops.emplace_back(std::move(e0));
  ops.emplace_back(std::move(e1));
  return KrausChannel(std::move(ops));
}

KrausChannel pauli_hop(double p_bit, double p_phase) {
  check_probability(p_bit, "bit-flip probability");
  check_probability(p_phase, "phase-flip probability");
  const Matrix i2 = gates::identity().matrix();
  const Matrix x = gates::pauli_x().matrix();
  const Matrix z = gates::pauli_z().matrix();
  std::vector<Operator> ops;
  ops.emplace_back(Matrix(std::sqrt((1 - p_phase) * (1 - p_bit)) * i2));
  ops.emplace_back(Matrix(std::sqrt((1 - p_phase) * p_bit) * x));
  ops.emplace_back(Matrix(std::sqrt(p_phase * (1 - p_bit)) * z));
  ops.emplace_back(Matrix(std::sqrt(p_phase * p_bit) * (z * x)));
  return KrausChannel(std::move(ops));
}

KrausChannel channel_for(const NoiseSpec& spec) {
  if (const auto* pauli = std::get_if<PauliNoise>(&spec))
    return pauli_hop(pauli->p_bit, pauli->p_phase);
  return amplitude_damping(std::get<DampingNoise>(spec).gamma);
}

DensityMatrix lift_iid(const DensityMatrix& rho, const KrausChannel& ch) {
  if (ch.qubits() != 1)
    throw std::invalid_argument("lift_iid expects a single-qubit channel");
  DensityMatrix out = rho;
  for (int q = 0; q < rho.qubits(); ++q) out = apply_channel(out, ch, {q});
  return out;
}

}  // namespace qssim
