#include <bit>
#include <cmath>
#include <random>

#include "ctqw/spectral.hpp"
#include "ctqw/stateprep.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace ctqw;

namespace {

double prep_error(const std::vector<double>& target) {
  const int n = std::countr_zero(target.size());
  double norm2 = 0.0;
  for (double v : target) norm2 += v * v;
  const auto out = simulate(stateprep_circuit(target), StateVector(n));
  double err = 0.0;
  for (std::size_t j = 0; j < target.size(); ++j) err += std::norm(out[j] - target[j] / std::sqrt(norm2));
  return std::sqrt(err);
}

double complete_angle(int k, int n, double sign) {
  const double big_n = std::ldexp(1.0, n);
  return -sign * 2.0 * std::atan(1.0 / std::sqrt(1.0 + std::ldexp(1.0, k) - sign * std::ldexp(1.0, k + 1) / std::sqrt(big_n))) -
         kPi / 2.0;
}

// Bipartite closed form; `b_selected` picks b in the numerator.
double bipartite_angle(int k, int m, double lambda, bool b_selected) {
  const auto co = bipartite_coefficients(lambda, m);
  const double num = b_selected ? co.b : co.a;
  const double den = co.a * co.a * (1.0 - std::ldexp(1.0, k - 1)) - co.b * co.b * std::ldexp(1.0, k - 1) +
                     co.c * std::ldexp(1.0, k - m);
  return 2.0 * std::atan(num / std::sqrt(den)) - kPi / 2.0;
}

}  // namespace

TEST_CASE("alphas_from_state") {
  SUBCASE("basis state") {
    std::vector<double> v(16, 0.0);
    v[0] = 1.0;
    const auto a = alphas_from_state(v);
    CHECK(a.qubits == 4);
    CHECK(a.alphas == std::vector<double>{1, 0, 0, 0, 0});
    CHECK(a.residual == 0.0);
  }
  SUBCASE("uniform state") {
    const std::vector<double> v(4, 0.5);
    const auto a = alphas_from_state(v);
    CHECK(a.alphas[0] == doctest::Approx(0.5));
    CHECK(a.alphas[1] == doctest::Approx(0.5));
    CHECK(a.alphas[2] == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(a.residual < 1e-15);
  }
  SUBCASE("norm is reported") {
    const std::vector<double> v(4, 1.0);
    CHECK(alphas_from_state(v).norm == doctest::Approx(2.0));
  }
  SUBCASE("rejections") {
    CHECK_THROWS_AS(alphas_from_state(std::vector<double>{0.5, 0.5, 0.6, 0.4}), std::invalid_argument);
    CHECK_THROWS_AS(alphas_from_state(std::vector<double>(8, 0.0)), std::invalid_argument);
    CHECK_THROWS_AS(alphas_from_state(std::vector<double>(6, 1.0)), std::invalid_argument);
  }
}

TEST_CASE("angles_from_alphas") {
  SUBCASE("basis state gives -pi/2 everywhere") {
    const auto plan = angles_from_alphas({4, {1, 0, 0, 0, 0}});
    CHECK(plan.theta_prime[0] == doctest::Approx(kPi / 2));
    for (int k = 1; k <= 4; ++k) CHECK(plan.theta_prime[k] == 0.0);
    for (double t : plan.theta) CHECK(t == doctest::Approx(-kPi / 2));
  }
  SUBCASE("exhausted tails") {
    const auto plan = angles_from_alphas({3, {0, 0, 1, 0}});
    CHECK(plan.theta_prime[1] == 0.0);
    CHECK(plan.theta_prime[2] == doctest::Approx(kPi / 2));
    CHECK(plan.theta_prime[3] == 0.0);
  }
  SUBCASE("theta relation and reconstruction") {
    std::mt19937_64 rng(1);
    std::normal_distribution<double> normal;
    for (int trial = 0; trial < 50; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 10);
      std::vector<double> a(n + 1);
      double s = 0.0;
      for (auto& x : a) {
        x = normal(rng);
        s += x * x;
      }
      for (auto& x : a) x /= std::sqrt(s);
      a[0] = std::abs(a[0]);
      const auto plan = angles_from_alphas({n, a});
      for (int k = 1; k <= n; ++k) {
        REQUIRE(plan.theta[k - 1] == doctest::Approx(2 * plan.theta_prime[n - k + 1] - kPi / 2).epsilon(1e-15));
      }
      for (int k = 0; k <= n; ++k) {
        double r = std::sin(plan.theta_prime[k]);
        for (int j = k + 1; j <= n; ++j) r *= std::cos(plan.theta_prime[j]);
        REQUIRE(std::abs(r - a[k]) <= 1e-12);
      }
    }
  }
  SUBCASE("rejects non-unit alphas") {
    CHECK_THROWS_AS(angles_from_alphas({2, {1.0, 0.5, 0.0}}), std::invalid_argument);
  }
}

TEST_CASE("closed-form angles") {
  SUBCASE("complete graph") {
    for (int n = 1; n <= 10; ++n) {
      const auto model = complete_spectrum(n);
      for (const double sign : {-1.0, 1.0}) {
        const auto& e = sign > 0 ? model.plus() : model.minus();
        const auto plan = angles_from_alphas(alphas_from_state(e.materialize(model.vertices)));
        for (int k = 1; k <= n; ++k) REQUIRE(std::abs(plan.theta[k - 1] - complete_angle(k, n, sign)) <= 1e-9);
      }
    }
  }
  SUBCASE("complete bipartite graph") {
    for (int m = 2; m <= 10; ++m) {
      const auto model = bipartite_spectrum(m);
      for (const auto& e : model.eigen) {
        const auto plan = angles_from_alphas(alphas_from_state(e.materialize(model.vertices)));
        for (int k = 1; k <= m; ++k) {
          // The selector that matches is k = 1 (the b block sits on the top qubit).
          REQUIRE(std::abs(plan.theta[k - 1] - bipartite_angle(k, m, e.value, k == 1)) <= 1e-9);
          if (k > 1 && k < m) {
            REQUIRE(std::abs(plan.theta[k - 1] - bipartite_angle(k, m, e.value, k == m)) <= 1e-9);
          }
        }
      }
    }
  }
  SUBCASE("hypercube") {
    for (int n = 2; n <= 10; ++n) {
      const auto model = hypercube_spectral(n);
      for (const double sign : {-1.0, 1.0}) {
        const auto& e = sign > 0 ? model.plus() : model.minus();
        const auto raw = e.materialize(model.vertices);
        // Normalised entries coincide with the complete-graph eigenvectors.
        const auto plan = angles_from_alphas(alphas_from_state(raw));
        for (int k = 1; k <= n; ++k) REQUIRE(std::abs(plan.theta[k - 1] - complete_angle(k, n, sign)) <= 1e-9);

        // The printed form follows from the raw, unnormalised alphas with a 1 - sum denominator.
        std::vector<double> alpha(n + 1);
        alpha[0] = raw[0];
        for (int k = 1; k <= n; ++k) alpha[k] = raw[std::size_t{1} << (k - 1)] * std::sqrt(std::ldexp(1.0, k - 1));
        std::vector<double> tp(n + 1);
        for (int k = 1; k <= n; ++k) {
          double tail = 0.0;
          for (int j = k; j <= n; ++j) tail += alpha[j] * alpha[j];
          tp[k] = std::atan(alpha[k] / std::sqrt(1.0 - tail));
        }
        for (int k = 1; k <= n; ++k) {
          const double printed = -sign * 2.0 * std::atan(1.0 / std::sqrt(1.0 + std::ldexp(1.0, k))) - kPi / 2.0;
          REQUIRE(std::abs(2.0 * tp[n - k + 1] - kPi / 2.0 - printed) <= 1e-9);
        }
      }
    }
    // k = 1 term: arctan(1/sqrt 3) = pi/6.
    const double k1 = -2.0 * std::atan(1.0 / std::sqrt(3.0)) - kPi / 2.0;
    CHECK(k1 == doctest::Approx(-kPi / 3 - kPi / 2).epsilon(1e-15));
  }
}

TEST_CASE("build_stateprep_circuit") {
  SUBCASE("structure") {
    for (int n = 1; n <= 8; ++n) {
      std::vector<double> a(n + 1, 1.0 / std::sqrt(n + 1.0));
      const auto c = build_stateprep_circuit(angles_from_alphas({n, a}));
      int hadamards = 0;
      int rotations = 0;
      for (const auto& g : c.gates()) {
        if (g.kind == GateKind::H) {
          ++hadamards;
          CHECK(g.controls.empty());
        } else {
          REQUIRE(g.kind == GateKind::Ry);
          ++rotations;
          CHECK(g.controls.size() == static_cast<std::size_t>(rotations - 1));
          for (const auto& ctl : g.controls) CHECK(ctl.polarity == Polarity::OnZero);
        }
      }
      CHECK(hadamards == n);
      CHECK(rotations == n);
    }
  }
  SUBCASE("basis state") {
    const auto out = simulate(build_stateprep_circuit(angles_from_alphas({4, {1, 0, 0, 0, 0}})), StateVector(4));
    CHECK(out.probability(0) == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("complete graph lambda+ at N = 16") {
    const auto model = complete_spectrum(4);
    CHECK(prep_error(model.plus().materialize(16)) <= 1e-10);
  }
  SUBCASE("bipartite lambda_0 at n = 8") {
    const auto model = bipartite_spectrum(4);
    CHECK(prep_error(model.zero()->materialize(16)) <= 1e-10);
  }
  SUBCASE("every family eigenvector up to 10 qubits") {
    for (int q = 1; q <= 10; ++q) {
      std::vector<SpectralModel> models{complete_spectrum(q)};
      if (q >= 2) {
        models.push_back(bipartite_spectrum(q));
        models.push_back(hypercube_spectral(q));
      }
      for (const auto& model : models) {
        for (const auto& e : model.eigen) REQUIRE(prep_error(e.materialize(model.vertices)) <= 1e-10);
      }
    }
  }
  SUBCASE("negative alpha_0 is handled with a global phase") {
    std::vector<double> v{-0.6, 0.8};
    CHECK(prep_error(v) <= 1e-14);
  }
}

TEST_CASE("random alpha round trip") {
  std::mt19937_64 rng(2024);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 10;
    std::vector<double> a(n + 1);
    double s = 0.0;
    for (auto& x : a) {
      x = normal(rng);
      s += x * x;
    }
    for (auto& x : a) x /= std::sqrt(s);
    const auto out = simulate(build_stateprep_circuit(angles_from_alphas({n, a})), StateVector(n));
    std::vector<double> real(out.size());
    for (std::size_t j = 0; j < out.size(); ++j) {
      REQUIRE(std::abs(out[j].imag()) <= 1e-12);
      real[j] = out[j].real();
    }
    const auto back = alphas_from_state(real);
    for (int k = 0; k <= n; ++k) REQUIRE(std::abs(back.alphas[k] - a[k]) <= 1e-9);
  }
}
