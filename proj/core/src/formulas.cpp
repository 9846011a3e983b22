#include "qssim/formulas.hpp"

#include <cmath>
#include <stdexcept>

namespace qssim::formulas {

namespace {

void check_unit(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0))
    throw std::invalid_argument(std::string(name) + " must lie in [0,1]");
}

void check_secret(int secret) {
  if (secret != 0 && secret != 1)
    throw std::invalid_argument("secret must be 0 or 1");
}

}  // namespace

double e1_flip(double p) {
  check_unit(p, "flip probability");
  return 3.0 * p * (1.0 - p) * (1.0 - p) + p * p * p;
}

double e1_flip_three(double p_a, double p_b, double p_c) {
  check_unit(p_a, "flip probability");
  check_unit(p_b, "flip probability");
  check_unit(p_c, "flip probability");
  // Probability of an odd number of flips over three independent channels.
  return 0.5 * (1.0 - (1.0 - 2.0 * p_a) * (1.0 - 2.0 * p_b) *
                          (1.0 - 2.0 * p_c));
}

double e1_flip_nparty(double p, int n) {
  check_unit(p, "flip probability");
  if (n < 1) throw std::invalid_argument("channel count must be positive");
  return 0.5 * (1.0 - std::pow(1.0 - 2.0 * p, n));
}

double e1_damp(double gamma) {
  check_unit(gamma, "damping strength");
  const double g = gamma;
  return (3.0 + 8.0 * g - 7.0 * g * g + 2.0 * g * g * g -
          2.0 * std::pow(1.0 - g, 1.5) - std::pow(1.0 - g, 2.5)) /
         12.0;
}

double e1_damp_general(double gamma_a, double gamma_b, double gamma_c) {
  check_unit(gamma_a, "damping strength");
  check_unit(gamma_b, "damping strength");
  check_unit(gamma_c, "damping strength");
  const double a = gamma_a, b = gamma_b, c = gamma_c;
  return (4.0 + 2.0 * (a + b + c) - 2.0 * (a * b + b * c + c * a) +
          2.0 * a * b * c -
          (1.0 - a) * (1.0 - c) * std::sqrt(1.0 - b) -
          (1.0 - b) * std::sqrt((1.0 - a) * (1.0 - c)) -
          2.0 * std::sqrt((1.0 - a) * (1.0 - b) * (1.0 - c))) /
         12.0;
}

double table1_entry(Prep prep, Op op, int secret, double gamma) {
  check_unit(gamma, "damping strength");
  check_secret(secret);
  const double g = gamma;
  switch (prep) {
    case Prep::Zero:
      switch (op) {
        case Op::Identity: return secret == 0 ? 0.0 : g;
        case Op::PauliY:
          return secret == 0 ? 2.0 * g - g * g : g - g * g;
        case Op::Hadamard: return g / 2.0;
      }
      break;
    case Prep::One:
      switch (op) {
        case Op::Identity:
          return secret == 0 ? 3.0 * g - 3.0 * g * g + g * g * g
                             : 2.0 * g - 3.0 * g * g + g * g * g;
        case Op::PauliY:
          return secret == 0 ? g - 2.0 * g * g + g * g * g
                             : 2.0 * g - 2.0 * g * g + g * g * g;
        case Op::Hadamard: return (3.0 * g - 2.0 * g * g) / 2.0;
      }
      break;
    case Prep::Plus:
      switch (op) {
        case Op::Identity:
        case Op::PauliY:
          return (1.0 - std::pow(1.0 - g, 1.5)) / 2.0;
        case Op::Hadamard:
          return secret == 0
                     ? (1.0 - 2.0 * g + g * g - std::pow(1.0 - g, 2.5)) / 2.0
                     : (1.0 + g * g - std::pow(1.0 - g, 2.5)) / 2.0;
      }
      break;
    case Prep::Minus:
      switch (op) {
        case Op::Identity:
        case Op::PauliY:
          return (1.0 - std::pow(1.0 - g, 1.5)) / 2.0;
        case Op::Hadamard:
          return secret == 0
                     ? (1.0 + 2.0 * g - g * g - std::pow(1.0 - g, 2.5)) / 2.0
                     : (1.0 - g * g - std::pow(1.0 - g, 2.5)) / 2.0;
      }
      break;
  }
  throw std::logic_error("unreachable");
}

double table2_entry(Prep prep, Op op, int secret, double gamma_a,
                    double gamma_b, double gamma_c) {
  check_unit(gamma_a, "damping strength");
  check_unit(gamma_b, "damping strength");
  check_unit(gamma_c, "damping strength");
  check_secret(secret);
  const double a = gamma_a, b = gamma_b, c = gamma_c;
  const double root_ac = std::sqrt((1.0 - a) * (1.0 - c));
  const double root_abc = std::sqrt((1.0 - a) * (1.0 - b) * (1.0 - c));
  const double poly_b = (1.0 - a) * (1.0 - c) * std::sqrt(1.0 - b);
  switch (prep) {
    case Prep::Zero:
      switch (op) {
        case Op::Identity: return secret == 0 ? 0.0 : a;
        case Op::PauliY: return secret == 0 ? a + c - a * c : c - a * c;
        case Op::Hadamard: return (1.0 - root_ac) / 2.0;
      }
      break;
    case Prep::One:
      switch (op) {
        case Op::Identity:
          return secret == 0
                     ? a + b + c - a * b - b * c - c * a + a * b * c
                     : b + c - a * b - b * c - c * a + a * b * c;
        case Op::PauliY:
          return secret == 0 ? b - a * b - b * c + a * b * c
                             : a + b - a * b - b * c + a * b * c;
        case Op::Hadamard:
          return (1.0 + (2.0 * b - 1.0) * root_ac) / 2.0;
      }
      break;
    case Prep::Plus:
      switch (op) {
        case Op::Identity:
        case Op::PauliY:
          return (1.0 - root_abc) / 2.0;
        case Op::Hadamard:
          return secret == 0 ? (1.0 - a - c + a * c - poly_b) / 2.0
                             : (1.0 + a - c + a * c - poly_b) / 2.0;
      }
      break;
    case Prep::Minus:
      switch (op) {
        case Op::Identity:
        case Op::PauliY:
          return (1.0 - root_abc) / 2.0;
        case Op::Hadamard:
          return secret == 0 ? (1.0 + a + c - a * c - poly_b) / 2.0
                             : (1.0 - a + c - a * c - poly_b) / 2.0;
      }
      break;
  }
  throw std::logic_error("unreachable");
}

double e_majority(double e) {
  check_unit(e, "error probability");
  return 3.0 * e * e * (1.0 - e) + e * e * e;
}

double ef_flip_nparty(double p, int n) {
  check_unit(p, "flip probability");
  if (n < 1) throw std::invalid_argument("channel count must be positive");
  const double q = std::pow(1.0 - 2.0 * p, n);
  return (1.0 - q) * (1.0 - q) * (2.0 + q) / 4.0;
}

double ef_damp(double gamma) { return e_majority(e1_damp(gamma)); }

bool correction_effective(double e) {
  check_unit(e, "error probability");
  return e > 0.0 && e < 0.5;
}

std::string to_string(Prep p) {
  switch (p) {
    case Prep::Zero: return "0";
    case Prep::One: return "1";
    case Prep::Plus: return "+";
    case Prep::Minus: return "-";
  }
  return "?";
}

std::string to_string(Op o) {
  switch (o) {
    case Op::Identity: return "I";
    case Op::PauliY: return "Y";
    case Op::Hadamard: return "H";
  }
  return "?";
}

}  // namespace qssim::formulas
