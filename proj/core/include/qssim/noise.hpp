#pragma once

#include <variant>
#include <vector>

#include "qssim/channels.hpp"

namespace qssim {

struct PauliNoise {
  double p_bit = 0.0;
  double p_phase = 0.0;
};

struct DampingNoise {
  double gamma = 0.0;
};

using NoiseSpec = std::variant<PauliNoise, DampingNoise>;

// One entry per hop of the protocol, in transmission order:
// Bob -> P2, P2 -> P3, ..., P_{n-1} -> Alice, Alice -> first receiver.
using HopAssignment = std::vector<NoiseSpec>;

// {sqrt(1-p) I, sqrt(p) X}
KrausChannel bit_flip(double p);
// {sqrt(1-p) I, sqrt(p) Z}
KrausChannel phase_flip(double p);
// {E0 = diag(1, sqrt(1-gamma)), E1 = sqrt(gamma) |0><1|}
KrausChannel amplitude_damping(double gamma);
// phase_flip(p_phase) ∘ bit_flip(p_bit) as one four-operator channel.
KrausChannel pauli_hop(double p_bit, double p_phase);

KrausChannel channel_for(const NoiseSpec& spec);

// Apply a single-qubit channel independently to every qubit of rho.
DensityMatrix lift_iid(const DensityMatrix& rho, const KrausChannel& ch);

}  // namespace qssim
