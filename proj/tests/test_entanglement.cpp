#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "aqw/canonical.hpp"
#include "aqw/density.hpp"
#include "aqw/entanglement.hpp"
#include "aqw/spectra.hpp"
#include "support/dense_oracle.hpp"

using namespace aqw;

namespace {

StateTensor random_walk_tensor(std::mt19937_64& rng, int t) {
  const CoinParams coin = oracle::random_coin(rng);
  return to_tensor(evolve(oracle::random_init(rng), constant_sequence(coin, t), t));
}

}  // namespace

TEST_CASE("half-convention negativity") {
  SUBCASE("separable start has none") {
    CHECK(negativity_half(initial_state(InitParams(1.2, 0.3), 0)) == doctest::Approx(0.0));
  }
  SUBCASE("one step is still xy-separable for any coin") {
    for (const CoinParams& coin : {coins::g1(), coins::m1(), coins::hadamard()}) {
      const WalkState s = evolve(InitParams(M_PI / 2, M_PI), constant_sequence(coin, 1), 1);
      CHECK(std::abs(negativity_half(s)) <= 1e-12);
    }
  }
  SUBCASE("matches the loop-built reference") {
    std::mt19937_64 rng(77);
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
      const StateTensor s = random_walk_tensor(rng, 2 + (k % 2));
      worst = std::max(worst, std::abs(negativity_half(s) - oracle::negativity_half_xy(s)));
    }
    CHECK(worst <= 1e-10);
  }
  SUBCASE("half convention is half the full convention on rho_xy") {
    std::mt19937_64 rng(78);
    const StateTensor s = random_walk_tensor(rng, 3);
    const DensityMatrix rho = reduced_density(s, {Dof::X, Dof::Y});
    const double full = trace_norm(partial_transpose(rho, Dof::X).mat) - 1.0;
    CHECK(negativity_half(s) == doctest::Approx(full / 2.0).epsilon(1e-10));
  }
}

TEST_CASE("full-convention one-vs-rest negativity") {
  CHECK(negativity_full(make_canonical(CanonicalName::GHZ).amplitudes, Dof::X) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(negativity_full(make_canonical(CanonicalName::BisepX).amplitudes, Dof::X)) <=
        1e-12);
  for (Dof d : {Dof::X, Dof::Y, Dof::C})
    CHECK(std::abs(negativity_full(make_canonical(CanonicalName::Product).amplitudes, d)) <=
          1e-12);
}

TEST_CASE("pairwise negativity") {
  SUBCASE("Bell pair on (x,y) with a spectator coin") {
    const auto s = make_canonical(CanonicalName::BisepC).amplitudes;
    CHECK(pairwise_negativity(s, Dof::X, Dof::Y) == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("bisep_x splits cleanly") {
    const auto s = make_canonical(CanonicalName::BisepX).amplitudes;
    CHECK(std::abs(pairwise_negativity(s, Dof::X, Dof::Y)) <= 1e-12);
    CHECK(pairwise_negativity(s, Dof::Y, Dof::C) == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("W-state pairwise value, frozen from the dense reference") {
    // (sqrt(5)-1)/3; consistent with pi_c = N_{c|xy}^2 - N_cx^2 - N_cy^2
    const auto w = make_canonical(CanonicalName::W).amplitudes;
    const double expect = (std::sqrt(5.0) - 1.0) / 3.0;
    const double ncx = pairwise_negativity(w, Dof::C, Dof::X);
    const double ncy = pairwise_negativity(w, Dof::C, Dof::Y);
    CHECK(ncx == doctest::Approx(expect).epsilon(1e-9));
    CHECK(ncy == doctest::Approx(expect).epsilon(1e-9));
    CHECK(ncx == doctest::Approx(oracle::pairwise_negativity(w, Dof::C, Dof::X)).epsilon(1e-10));
    const double ncxy = negativity_full(w, Dof::C);
    CHECK(ncxy * ncxy - ncx * ncx - ncy * ncy ==
          doctest::Approx(pi_tangle(w).pi_c).epsilon(1e-10));
  }
  SUBCASE("equal labels are rejected") {
    const auto s = make_canonical(CanonicalName::GHZ).amplitudes;
    CHECK_THROWS_AS(pairwise_negativity(s, Dof::X, Dof::X), std::invalid_argument);
  }
}

TEST_CASE("negativity set invariants on random states") {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 8; ++k) {
    const StateTensor s =
        k % 2 == 0 ? random_walk_tensor(rng, 2) : oracle::random_pure_tensor(rng, 2, 2);
    const NegativitySet n = compute_negativities(s);
    for (Dof i : {Dof::X, Dof::Y, Dof::C}) CHECK(n.one(i) >= -1e-10);
    const std::pair<Dof, Dof> pairs[] = {{Dof::X, Dof::Y}, {Dof::X, Dof::C}, {Dof::Y, Dof::C}};
    for (auto [i, j] : pairs) {
      CHECK(n.pair(i, j) >= -1e-10);
      CHECK(std::abs(n.pair(i, j) - n.pair(j, i)) <= 1e-8);
    }
  }
}

TEST_CASE("residual negativities") {
  SUBCASE("product state") {
    const auto s = make_canonical(CanonicalName::Product).amplitudes;
    for (Dof i : {Dof::X, Dof::Y, Dof::C}) CHECK(std::abs(residual_pi(s, i)) <= 1e-12);
  }
  SUBCASE("GHZ") {
    const auto s = make_canonical(CanonicalName::GHZ).amplitudes;
    for (Dof i : {Dof::X, Dof::Y, Dof::C})
      CHECK(residual_pi(s, i) == doctest::Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("walk states respect monogamy") {
    std::mt19937_64 rng(63);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const EvolutionSequence seq = constant_sequence(coins::m1(), 6);
    for (int k = 0; k < 4; ++k) {
      WalkState s = initial_state(InitParams(M_PI * u01(rng), 2 * M_PI * u01(rng)), 6);
      for (int t = 1; t <= 6; ++t) {
        s = step(s, seq[t - 1]);
        for (Dof i : {Dof::X, Dof::Y, Dof::C}) CHECK(residual_pi(s, i) >= -1e-8);
      }
    }
  }
}

TEST_CASE("pi-tangle on canonical states") {
  CHECK(pi_tangle(make_canonical(CanonicalName::GHZ).amplitudes).pi_xyc ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(pi_tangle(make_canonical(CanonicalName::W).amplitudes).pi_xyc ==
        doctest::Approx(0.54936354).epsilon(1e-6));
  CHECK(pi_tangle(make_canonical(CanonicalName::FlippedW).amplitudes).pi_xyc ==
        doctest::Approx(0.54936354).epsilon(1e-6));
  // the result is assembled from its own stored negativity set
  const PiTangleResult r = pi_tangle(make_canonical(CanonicalName::W).amplitudes);
  CHECK(r.pi_xyc == doctest::Approx((r.pi_x + r.pi_y + r.pi_c) / 3.0).epsilon(1e-15));
}

TEST_CASE("pi-tangle matches the dense reference on random states") {
  std::mt19937_64 rng(8);
  double worst = 0.0;
  for (int k = 0; k < 6; ++k) {
    const StateTensor s =
        k % 2 == 0 ? random_walk_tensor(rng, 2) : oracle::random_pure_tensor(rng, 2, 2);
    worst = std::max(worst, std::abs(pi_tangle(s).pi_xyc - oracle::pi_tangle(s)));
  }
  CHECK(worst <= 1e-8);
}

TEST_CASE("theta averages") {
  SUBCASE("T=0 vanishes for both measures") {
    CHECK(std::abs(theta_average(Measure::NegativityHalf, 1.0, {}, 0)) <= 1e-14);
    CHECK(std::abs(theta_average(Measure::PiTangle, 1.0, {}, 0)) <= 1e-14);
  }
  SUBCASE("n_theta below 2 is rejected") {
    CHECK_THROWS_AS(theta_average(Measure::PiTangle, 0.0, {}, 0, 1), std::invalid_argument);
  }
  SUBCASE("averaged 3-way value at t=2") {
    const double v =
        theta_average(Measure::PiTangle, M_PI, constant_sequence(coins::m1(), 2), 2);
    CHECK(v == doctest::Approx(2.0656).epsilon(0.01));
  }
  SUBCASE("averaged 3-way value after a single step, frozen from the dense reference") {
    const double v =
        theta_average(Measure::PiTangle, M_PI, constant_sequence(coins::m1(), 1), 1);
    CHECK(v == doctest::Approx(0.9267766953).epsilon(1e-9));
  }
  SUBCASE("averaged 2-way value at t=2") {
    const double v =
        theta_average(Measure::NegativityHalf, M_PI, constant_sequence(coins::g1(), 2), 2);
    CHECK(v == doctest::Approx(0.4290).epsilon(0.01));
  }
  SUBCASE("one Hadamard step averages to zero") {
    const double v =
        theta_average(Measure::NegativityHalf, M_PI / 2, constant_sequence(coins::hadamard(), 1), 1);
    CHECK(std::abs(v) <= 1e-12);
  }
}

TEST_CASE("the two reference 3-way sequences produce identical averages for t <= 6") {
  const auto a = averaged_series([](const StateTensor& s) { return pi_tangle(s).pi_xyc; }, M_PI,
                                 constant_sequence(coins::m1(), 6), 6, 33);
  const auto b = averaged_series([](const StateTensor& s) { return pi_tangle(s).pi_xyc; },
                                 M_PI / 2, constant_sequence(coins::m2(), 6), 6, 33);
  for (int t = 0; t < 6; ++t)
    CHECK(std::abs(a[static_cast<std::size_t>(t)] - b[static_cast<std::size_t>(t)]) <= 1e-6);
}

TEST_CASE("averaged xy negativity is independent of gamma for the beta=pi family") {
  double lo = 1e300, hi = -1e300;
  for (int k = 0; k < 16; ++k) {
    const double gamma = 2 * M_PI * k / 16;
    const double v = theta_average(Measure::NegativityHalf, M_PI / 2,
                                   constant_sequence(CoinParams(19 * M_PI / 16, M_PI, gamma), 2), 2);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  CHECK(hi - lo < 1e-8);
}

TEST_CASE("quick seeded monogamy suite") {
  const CheckReport rep = ckw_report(20, 4, 20240901ull);
  CHECK(rep.all_pass());
}
