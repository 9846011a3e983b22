#include "qssim/protocol.hpp"

#include <cmath>
#include <stdexcept>

#include "qssim/rng.hpp"

namespace qssim {

std::string to_string(PartyOp op) {
  switch (op) {
    case PartyOp::Identity: return "I";
    case PartyOp::PauliY: return "Y";
    case PartyOp::Hadamard: return "H";
  }
  return "?";
}

std::string to_string(Preparation p) {
  switch (p) {
    case Preparation::Zero: return "0";
    case Preparation::One: return "1";
    case Preparation::Plus: return "+";
    case Preparation::Minus: return "-";
  }
  return "?";
}

namespace {

Matrix op_matrix(PartyOp op) {
  switch (op) {
    case PartyOp::Identity: return gates::identity().matrix();
    case PartyOp::PauliY: return gates::pauli_y().matrix();
    case PartyOp::Hadamard: return gates::hadamard().matrix();
  }
  throw std::logic_error("unreachable");
}

// U_B with U_B|0> the prepared state.
Matrix prep_matrix(Preparation p) {
  switch (p) {
    case Preparation::Zero: return gates::identity().matrix();
    case Preparation::One: return gates::pauli_y().matrix();
    case Preparation::Plus: return gates::hadamard().matrix();
    case Preparation::Minus:
      return Matrix(gates::pauli_y().matrix() * gates::hadamard().matrix());
  }
  throw std::logic_error("unreachable");
}

StateVector prep_state(Preparation p) {
  switch (p) {
    case Preparation::Zero: return states::zero();
    case Preparation::One: return states::one();
    case Preparation::Plus: return states::plus();
    case Preparation::Minus: return states::minus();
  }
  throw std::logic_error("unreachable");
}

Matrix secret_matrix(int secret) {
  return secret == 0 ? gates::identity().matrix() : gates::pauli_y().matrix();
}

std::vector<int> make_all_targets(int qubits) {
  std::vector<int> targets(qubits);
  for (int q = 0; q < qubits; ++q) targets[q] = q;
  return targets;
}

double hop_gamma(const NoiseSpec& spec) {
  if (const auto* damp = std::get_if<DampingNoise>(&spec)) return damp->gamma;
  return 0.0;
}

double readout_error(const DensityMatrix& rho, const ChoiceTuple& t, int n) {
  DensityMatrix out = rho;
  for (int i = n - 3; i >= 0; --i)
    out = apply_unitary(
        out, Operator(op_matrix(t.intermediate_ops[i]).adjoint(), true), {0});
  out = apply_unitary(out, Operator(prep_matrix(t.prep).adjoint(), true), {0});
  double p1 = measure_probability(out, 0, Basis::Computational, 1);
  return t.secret == 1 ? 1.0 - p1 : p1;
}

double pipeline_plain(const ProtocolConfig& cfg, const ChoiceTuple& t) {
  const int n = cfg.parties;
  DensityMatrix rho = DensityMatrix::pure(prep_state(t.prep));
  for (int hop = 0; hop < n; ++hop) {
    if (hop >= 1 && hop <= n - 2)
      rho = apply_unitary(
          rho, Operator(op_matrix(t.intermediate_ops[hop - 1]), true), {0});
    if (hop == n - 1)
      rho = apply_unitary(rho, Operator(secret_matrix(t.secret), true), {0});
    rho = apply_channel(rho, channel_for(cfg.hops[hop]), {0});
  }
  return readout_error(rho, t, n);
}

// One hop under per-hop QEC: encode, noise on every physical qubit,
// recover and decode back to the bare qubit.
template <typename Code>
DensityMatrix qec_hop(const Code& code, const DensityMatrix& rho,
                      const NoiseSpec& spec) {
  Matrix anc2 = Matrix::Zero(4, 4);
  anc2(0, 0) = 1.0;
  Matrix reg;
  if constexpr (std::is_same_v<Code, FiveQubitCode>) {
    reg = kron(kron(anc2, rho.matrix()), anc2);
  } else {
    Matrix anc3 = Matrix::Zero(8, 8);
    anc3(0, 0) = 1.0;
    reg = kron(rho.matrix(), anc3);
  }
  const Matrix& enc = code.encoding_unitary().matrix();
  DensityMatrix big(((enc * reg * enc.adjoint()).eval() +
                     (enc * reg * enc.adjoint()).eval().adjoint()) /
                    2.0);
  big = lift_iid(big, channel_for(spec));
  if constexpr (std::is_same_v<Code, FiveQubitCode>)
    return code.recover_decode(big);
  else
    return code.recover_decode(big, hop_gamma(spec));
}

template <typename Code>
double pipeline_perhop(const ProtocolConfig& cfg, const ChoiceTuple& t,
                       const Code& code) {
  const int n = cfg.parties;
  DensityMatrix rho = DensityMatrix::pure(prep_state(t.prep));
  for (int hop = 0; hop < n; ++hop) {
    if (hop >= 1 && hop <= n - 2)
      rho = apply_unitary(
          rho, Operator(op_matrix(t.intermediate_ops[hop - 1]), true), {0});
    if (hop == n - 1)
      rho = apply_unitary(rho, Operator(secret_matrix(t.secret), true), {0});
    rho = qec_hop(code, rho, cfg.hops[hop]);
  }
  return readout_error(rho, t, n);
}

template <typename Code>
double pipeline_single_cycle(const ProtocolConfig& cfg, const ChoiceTuple& t,
                             const Code& code) {
  const int n = cfg.parties;
  DensityMatrix rho = DensityMatrix::pure(code.encode(prep_state(t.prep)));
  for (int hop = 0; hop < n; ++hop) {
    if (hop >= 1 && hop <= n - 2)
      rho = apply_unitary(
          rho, code.logical(Operator(op_matrix(t.intermediate_ops[hop - 1]), true)),
          make_all_targets(rho.qubits()));
    if (hop == n - 1)
      rho = apply_unitary(rho, code.logical(Operator(secret_matrix(t.secret), true)),
                          make_all_targets(rho.qubits()));
    rho = lift_iid(rho, channel_for(cfg.hops[hop]));
  }
  for (int i = n - 3; i >= 0; --i)
    rho = apply_unitary(
        rho,
        code.logical(Operator(op_matrix(t.intermediate_ops[i]).adjoint(), true)),
        make_all_targets(rho.qubits()));
  DensityMatrix bare = [&] {
    if constexpr (std::is_same_v<Code, FiveQubitCode>) {
      return code.recover_decode(rho);
    } else {
      // Damping composes multiplicatively across hops; rebalance for the
      // accumulated strength.
      double survive = 1.0;
      for (const NoiseSpec& spec : cfg.hops) survive *= 1.0 - hop_gamma(spec);
      return code.recover_decode(rho, 1.0 - survive);
    }
  }();
  bare = apply_unitary(bare, Operator(prep_matrix(t.prep).adjoint(), true), {0});
  double p1 = measure_probability(bare, 0, Basis::Computational, 1);
  return t.secret == 1 ? 1.0 - p1 : p1;
}

const FiveQubitCode& five_code() {
  static const FiveQubitCode code;
  return code;
}

const FourQubitCode& four_code() {
  static const FourQubitCode code;
  return code;
}

}  // namespace

void validate(const ProtocolConfig& cfg) {
  if (cfg.parties < 3)
    throw std::invalid_argument("protocol needs at least 3 parties");
  if (static_cast<int>(cfg.hops.size()) != cfg.parties)
    throw std::invalid_argument("hop count must equal the number of parties");
  if (cfg.qec.scheme == CodeScheme::Repetition &&
      cfg.qec.mode == QecMode::PerHop)
    throw std::invalid_argument(
        "the repetition code is basis dependent and has no per-hop mode");
  if (cfg.evaluation == EvaluationMode::MonteCarlo && cfg.trials < 1)
    throw std::invalid_argument("Monte Carlo needs at least one trial");
}

std::vector<ChoiceTuple> enumerate_tuples(int parties) {
  if (parties < 3 || parties > 8)
    throw std::invalid_argument("tuple enumeration supports 3..8 parties");
  const Preparation preps[] = {Preparation::Zero, Preparation::One,
                               Preparation::Plus, Preparation::Minus};
  const PartyOp ops[] = {PartyOp::Identity, PartyOp::PauliY, PartyOp::Hadamard};
  int intermediates = parties - 2;
  long combos = 1;
  for (int i = 0; i < intermediates; ++i) combos *= 3;
  std::vector<ChoiceTuple> out;
  out.reserve(4 * combos * 2);
  for (Preparation prep : preps)
    for (long c = 0; c < combos; ++c) {
      std::vector<PartyOp> chosen(intermediates);
      long rest = c;
      for (int i = intermediates - 1; i >= 0; --i) {
        chosen[i] = ops[rest % 3];
        rest /= 3;
      }
      for (int secret : {0, 1})
        out.push_back(ChoiceTuple{prep, chosen, secret});
    }
  return out;
}

std::string tuple_label(const ChoiceTuple& t) {
  std::string ops;
  for (PartyOp op : t.intermediate_ops) ops += to_string(op);
  return to_string(t.prep) + ":" + ops + ":" + std::to_string(t.secret);
}

double run_tuple(const ProtocolConfig& cfg, const ChoiceTuple& t) {
  validate(cfg);
  if (static_cast<int>(t.intermediate_ops.size()) != cfg.parties - 2)
    throw std::invalid_argument("tuple does not match the party count");
  switch (cfg.qec.scheme) {
    case CodeScheme::None:
      return pipeline_plain(cfg, t);
    case CodeScheme::Repetition: {
      // Three protocol copies sharing one choice tuple; majority vote.
      double e = pipeline_plain(cfg, t);
      return e * e * (3.0 - 2.0 * e);
    }
    case CodeScheme::FiveQubit:
      return cfg.qec.mode == QecMode::PerHop
                 ? pipeline_perhop(cfg, t, five_code())
                 : pipeline_single_cycle(cfg, t, five_code());
    case CodeScheme::FourQubit:
      return cfg.qec.mode == QecMode::PerHop
                 ? pipeline_perhop(cfg, t, four_code())
                 : pipeline_single_cycle(cfg, t, four_code());
  }
  throw std::logic_error("unreachable");
}

ErrorReport run_exact(const ProtocolConfig& cfg) {
  validate(cfg);
  auto tuples = enumerate_tuples(cfg.parties);
  ErrorReport report;
  double sum = 0.0;
  for (const ChoiceTuple& t : tuples) {
    double e = run_tuple(cfg, t);
    report.per_tuple[tuple_label(t)] = e;
    sum += e;
  }
  report.error_exact = sum / static_cast<double>(tuples.size());
  return report;
}

namespace {

// --- Monte Carlo trajectory machinery -------------------------------------

using Matrix2 = Eigen::Matrix2cd;
using Vector2 = Eigen::Vector2cd;

struct PlainHop {
  std::vector<Matrix2> kraus;
};

// Per-tuple precomputation so the hot sampling loop touches only fixed-size
// 2x2 algebra: the sender operation of each hop (identity left as a null
// slot) and the whole reconstruction collapsed into one matrix.
struct PlainTuple {
  Vector2 prep;
  std::vector<std::optional<Matrix2>> op_at_hop;
  Matrix2 recon;
};

PlainTuple compile_plain_tuple(const ChoiceTuple& t, int parties) {
  PlainTuple pt;
  pt.prep = prep_state(t.prep).amplitudes();
  pt.op_at_hop.resize(parties);
  for (int hop = 1; hop <= parties - 2; ++hop)
    pt.op_at_hop[hop] = Matrix2(op_matrix(t.intermediate_ops[hop - 1]));
  pt.op_at_hop[parties - 1] = Matrix2(secret_matrix(t.secret));
  Matrix recon = prep_matrix(t.prep).adjoint();
  for (int i = 0; i <= parties - 3; ++i)
    recon = recon * op_matrix(t.intermediate_ops[i]).adjoint();
  pt.recon = recon;
  return pt;
}

int sample_plain_bit(const PlainTuple& t, const std::vector<PlainHop>& hops,
                     Prng& rng) {
  Vector2 psi = t.prep;
  for (std::size_t hop = 0; hop < hops.size(); ++hop) {
    if (t.op_at_hop[hop]) psi = (*t.op_at_hop[hop] * psi).eval();
    const auto& kraus = hops[hop].kraus;
    double w[4];
    Vector2 cand[4];
    double total = 0.0;
    for (std::size_t k = 0; k < kraus.size(); ++k) {
      cand[k] = kraus[k] * psi;
      w[k] = cand[k].squaredNorm();
      total += w[k];
    }
    double u = rng.uniform() * total;
    std::size_t k = 0;
    while (k + 1 < kraus.size() && u >= w[k]) u -= w[k], ++k;
    psi = cand[k] / std::sqrt(w[k]);
  }
  psi = (t.recon * psi).eval();
  double p1 = std::norm(psi(1)) / psi.squaredNorm();
  return rng.uniform() < p1 ? 1 : 0;
}

struct CodedHop {
  std::vector<std::vector<Matrix>> per_qubit_kraus;  // lifted to the register
  std::vector<Matrix> recovery;                      // 2 x dim, per-hop mode
};

Vector sample_kraus(const std::vector<Matrix>& kraus, const Vector& psi,
                    Prng& rng) {
  std::vector<Vector> cand(kraus.size());
  std::vector<double> w(kraus.size());
  for (std::size_t k = 0; k < kraus.size(); ++k) {
    cand[k] = kraus[k] * psi;
    w[k] = cand[k].squaredNorm();
  }
  std::size_t k = rng.pick(w);
  return cand[k] / std::sqrt(w[k]);
}

struct CodedMachine {
  Matrix enc;
  Eigen::Index idx0 = 0, idx1 = 0;  // encoder columns of |0>, |1> inputs
  std::vector<CodedHop> hops;
  std::vector<Matrix> final_recovery;  // single-cycle mode
  int physical = 0;
};

CodedMachine build_coded(const ProtocolConfig& cfg) {
  CodedMachine m;
  const bool five = cfg.qec.scheme == CodeScheme::FiveQubit;
  m.physical = five ? 5 : 4;
  m.enc = five ? five_code().encoding_unitary().matrix()
               : four_code().encoding_unitary().matrix();
  m.idx0 = 0;
  m.idx1 = five ? 4 : 8;
  for (const NoiseSpec& spec : cfg.hops) {
    CodedHop hop;
    KrausChannel ch = channel_for(spec);
    for (int q = 0; q < m.physical; ++q) {
      std::vector<Matrix> lifted;
      for (const Operator& k : ch.operators())
        lifted.push_back(embed(k.matrix(), {q}, m.physical));
      hop.per_qubit_kraus.push_back(std::move(lifted));
    }
    if (cfg.qec.mode == QecMode::PerHop)
      hop.recovery = five ? five_code().recover_decode_kraus()
                          : four_code().recover_decode_kraus(hop_gamma(spec));
    m.hops.push_back(std::move(hop));
  }
  if (cfg.qec.mode == QecMode::SingleCycle) {
    if (five) {
      m.final_recovery = five_code().recover_decode_kraus();
    } else {
      double survive = 1.0;
      for (const NoiseSpec& spec : cfg.hops) survive *= 1.0 - hop_gamma(spec);
      m.final_recovery = four_code().recover_decode_kraus(1.0 - survive);
    }
  }
  return m;
}

int sample_coded_bit(const ChoiceTuple& t, const ProtocolConfig& cfg,
                     const CodedMachine& m, Prng& rng) {
  const int n = cfg.parties;
  const bool per_hop = cfg.qec.mode == QecMode::PerHop;
  Vector psi2 = prep_state(t.prep).amplitudes();
  Vector big;
  auto encode = [&](const Vector& v) {
    return Vector(m.enc.col(m.idx0) * v(0) + m.enc.col(m.idx1) * v(1));
  };
  auto logical = [&](const Matrix& u) {
    return Matrix(m.enc * embed(u, {per_hop ? 0 : (m.physical == 5 ? 2 : 0)},
                                m.physical) *
                  m.enc.adjoint());
  };
  if (!per_hop) big = encode(psi2);
  for (int hop = 0; hop < n; ++hop) {
    Matrix u = Matrix::Identity(2, 2);
    bool has_op = false;
    if (hop >= 1 && hop <= n - 2) {
      u = op_matrix(t.intermediate_ops[hop - 1]);
      has_op = true;
    }
    if (hop == n - 1) {
      u = secret_matrix(t.secret);
      has_op = true;
    }
    if (per_hop) {
      if (has_op) psi2 = (u * psi2).eval();
      big = encode(psi2);
      for (int q = 0; q < m.physical; ++q)
        big = sample_kraus(m.hops[hop].per_qubit_kraus[q], big, rng);
      psi2 = sample_kraus(m.hops[hop].recovery, big, rng);
    } else {
      if (has_op) big = (logical(u) * big).eval();
      for (int q = 0; q < m.physical; ++q)
        big = sample_kraus(m.hops[hop].per_qubit_kraus[q], big, rng);
    }
  }
  if (!per_hop) {
    const int data = m.physical == 5 ? 2 : 0;
    for (int i = n - 3; i >= 0; --i) {
      Matrix u = op_matrix(t.intermediate_ops[i]).adjoint();
      big = (m.enc * embed(u, {data}, m.physical) * m.enc.adjoint() * big).eval();
    }
    psi2 = sample_kraus(m.final_recovery, big, rng);
  } else {
    for (int i = n - 3; i >= 0; --i)
      psi2 = (op_matrix(t.intermediate_ops[i]).adjoint() * psi2).eval();
  }
  psi2 = (prep_matrix(t.prep).adjoint() * psi2).eval();
  double p1 = std::norm(psi2(1)) / psi2.squaredNorm();
  return rng.uniform() < p1 ? 1 : 0;
}

}  // namespace

ErrorReport run_montecarlo(const ProtocolConfig& cfg) {
  validate(cfg);
  if (cfg.evaluation != EvaluationMode::MonteCarlo)
    throw std::invalid_argument("run_montecarlo needs Monte Carlo settings");
  auto tuples = enumerate_tuples(cfg.parties);
  Prng rng(cfg.seed);

  const bool plain = cfg.qec.scheme == CodeScheme::None ||
                     cfg.qec.scheme == CodeScheme::Repetition;
  std::vector<PlainHop> plain_hops;
  CodedMachine coded;
  if (plain) {
    for (const NoiseSpec& spec : cfg.hops) {
      PlainHop hop;
      KrausChannel ch = channel_for(spec);
      for (const Operator& k : ch.operators()) hop.kraus.push_back(k.matrix());
      plain_hops.push_back(std::move(hop));
    }
  } else {
    coded = build_coded(cfg);
  }

  std::vector<PlainTuple> compiled;
  if (plain) {
    compiled.reserve(tuples.size());
    for (const ChoiceTuple& t : tuples)
      compiled.push_back(compile_plain_tuple(t, cfg.parties));
  }

  long wrong = 0;
  for (long trial = 0; trial < cfg.trials; ++trial) {
    std::size_t ti = rng.uniform_index(tuples.size());
    int bit;
    if (cfg.qec.scheme == CodeScheme::Repetition) {
      int b0 = sample_plain_bit(compiled[ti], plain_hops, rng);
      int b1 = sample_plain_bit(compiled[ti], plain_hops, rng);
      int b2 = sample_plain_bit(compiled[ti], plain_hops, rng);
      bit = rep3_majority(b0, b1, b2);
    } else if (plain) {
      bit = sample_plain_bit(compiled[ti], plain_hops, rng);
    } else {
      bit = sample_coded_bit(tuples[ti], cfg, coded, rng);
    }
    if (bit != tuples[ti].secret) ++wrong;
  }
  ErrorReport report;
  double ehat = static_cast<double>(wrong) / static_cast<double>(cfg.trials);
  report.error_mc = ehat;
  report.mc_stderr =
      std::sqrt(ehat * (1.0 - ehat) / static_cast<double>(cfg.trials));
  report.trials = cfg.trials;
  report.seed = cfg.seed;
  return report;
}

double teleport_fidelity(double e_phase_bit, double e_flip_bit,
                         const StateVector& input) {
  if (input.dim() != 2)
    throw std::invalid_argument("teleportation input must be one qubit");
  for (double e : {e_phase_bit, e_flip_bit})
    if (!(e >= 0.0 && e <= 1.0))
      throw std::invalid_argument("bit-error probability out of range");
  const double s = 1.0 / std::sqrt(2.0);
  const Vector& psi = input.amplitudes();
  // Register: qubit 0 input, qubits 1-2 the Bell pair (|00>+|11>)/sqrt 2.
  Vector full = Vector::Zero(8);
  for (int i = 0; i < 2; ++i) {
    full((i << 2) | 0b00) += psi(i) * s;
    full((i << 2) | 0b11) += psi(i) * s;
  }
  const Matrix x = gates::pauli_x().matrix();
  const Matrix z = gates::pauli_z().matrix();
  double fid = 0.0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      // Bob's unnormalized branch for Bell outcome (a, b).
      Vector2 phi;
      for (int c = 0; c < 2; ++c)
        phi(c) = (full((0 << 2) | (b << 1) | c) +
                  (a ? -1.0 : 1.0) * full((1 << 2) | ((1 - b) << 1) | c)) *
                 s;
      for (int fa = 0; fa < 2; ++fa)
        for (int fb = 0; fb < 2; ++fb) {
          double w = (fa ? e_phase_bit : 1.0 - e_phase_bit) *
                     (fb ? e_flip_bit : 1.0 - e_flip_bit);
          Vector2 corrected = phi;
          if ((b ^ fb) != 0) corrected = (x * corrected).eval();
          if ((a ^ fa) != 0) corrected = (z * corrected).eval();
          cd overlap = std::conj(psi(0)) * corrected(0) +
                       std::conj(psi(1)) * corrected(1);
          fid += w * std::norm(overlap);
        }
    }
  return fid;
}

double run_ssqi(const ProtocolConfig& cfg, const StateVector& input) {
  ErrorReport report = run_exact(cfg);
  double e = *report.error_exact;
  return teleport_fidelity(e, e, input);
}

}  // namespace qssim
