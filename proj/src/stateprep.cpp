#include "ctqw/stateprep.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ctqw {

namespace {

int log2_exact(std::size_t size) {
  int n = 0;
  while ((std::size_t{1} << n) < size) ++n;
  if ((std::size_t{1} << n) != size) {
    throw std::invalid_argument("state length " + std::to_string(size) + " is not a power of two");
  }
  return n;
}

}  // namespace

AlphaDecomposition alphas_from_state(std::span<const double> amplitudes) {
  const int n = log2_exact(amplitudes.size());
  if (n < 1) {
    throw std::invalid_argument("state must span at least one qubit");
  }
  double norm2 = 0.0;
  for (double a : amplitudes) norm2 += a * a;
  if (!(norm2 > 0.0) || !std::isfinite(norm2)) {
    throw std::invalid_argument("cannot decompose a zero or non-finite state");
  }
  const double norm = std::sqrt(norm2);

  AlphaDecomposition out;
  out.qubits = n;
  out.norm = norm;
  out.alphas.assign(static_cast<std::size_t>(n) + 1, 0.0);
  out.alphas[0] = amplitudes[0] / norm;

  double outside = 0.0;
  for (int k = 1; k <= n; ++k) {
    const std::size_t lo = std::size_t{1} << (k - 1);
    const std::size_t hi = std::size_t{1} << k;
    double sum = 0.0;
    for (std::size_t j = lo; j < hi; ++j) sum += amplitudes[j];
    const double mean = sum / static_cast<double>(lo);
    for (std::size_t j = lo; j < hi; ++j) {
      const double d = (amplitudes[j] - mean) / norm;
      outside += d * d;
    }
    out.alphas[static_cast<std::size_t>(k)] = sum / std::sqrt(static_cast<double>(lo)) / norm;
  }
  out.residual = std::sqrt(outside);
  if (out.residual > kAlphaResidualTolerance) {
    throw std::invalid_argument("state is not constant on dyadic blocks (residual " + std::to_string(out.residual) +
                                ")");
  }
  return out;
}

AnglePlan angles_from_alphas(const AlphaDecomposition& alphas) {
  const int n = alphas.qubits;
  if (n < 1 || alphas.alphas.size() != static_cast<std::size_t>(n) + 1) {
    throw std::invalid_argument("alpha decomposition needs n >= 1 and n+1 coefficients");
  }
  double sum = 0.0;
  for (double a : alphas.alphas) sum += a * a;
  if (std::abs(sum - 1.0) > kAlphaNormTolerance) {
    throw std::invalid_argument("alpha coefficients are not unit norm (sum of squares " + std::to_string(sum) + ")");
  }

  AnglePlan plan;
  plan.qubits = n;
  plan.negated = alphas.alphas[0] < 0.0;
  const double sign = plan.negated ? -1.0 : 1.0;

  plan.theta_prime.assign(static_cast<std::size_t>(n) + 1, 0.0);
  plan.theta_prime[0] = kPi / 2.0;
  double head = 0.0;  // sum_{j<k} alpha_j^2
  for (int k = 1; k <= n; ++k) {
    const double prev = alphas.alphas[static_cast<std::size_t>(k) - 1];
    head += prev * prev;
    plan.theta_prime[static_cast<std::size_t>(k)] = std::atan2(sign * alphas.alphas[static_cast<std::size_t>(k)],
                                                               std::sqrt(head));
  }

  plan.theta.resize(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    plan.theta[static_cast<std::size_t>(k) - 1] = 2.0 * plan.theta_prime[static_cast<std::size_t>(n - k + 1)] - kPi / 2.0;
  }
  return plan;
}

Circuit build_stateprep_circuit(const AnglePlan& plan) {
  const int n = plan.qubits;
  if (n < 1 || plan.theta.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("angle plan needs n >= 1 and n angles");
  }
  Circuit c(n);
  for (int q = 0; q < n; ++q) c.add(Gate::h(q));
  for (int k = 1; k <= n; ++k) {
    const int target = n - k;
    std::vector<Control> controls;
    for (int q = target + 1; q < n; ++q) controls.push_back({q, Polarity::OnZero});
    c.add(Gate::ry(target, plan.theta[static_cast<std::size_t>(k) - 1]).controlled_by(std::move(controls)));
  }
  if (plan.negated) c.add_global_phase(kPi);
  return c;
}

Circuit stateprep_circuit(std::span<const double> amplitudes) {
  return build_stateprep_circuit(angles_from_alphas(alphas_from_state(amplitudes)));
}

std::vector<double> state_from_alphas(std::span<const double> alphas) {
  if (alphas.size() < 2) {
    throw std::invalid_argument("need alpha_0 .. alpha_n with n >= 1");
  }
  const int n = static_cast<int>(alphas.size()) - 1;
  std::vector<double> state(std::size_t{1} << n, 0.0);
  state[0] = alphas[0];
  for (int k = 1; k <= n; ++k) {
    const std::size_t lo = std::size_t{1} << (k - 1);
    const double v = alphas[static_cast<std::size_t>(k)] / std::sqrt(static_cast<double>(lo));
    for (std::size_t j = lo; j < 2 * lo; ++j) state[j] = v;
  }
  return state;
}

}  // namespace ctqw
