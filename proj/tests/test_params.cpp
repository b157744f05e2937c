#include <doctest.h>

#include <cmath>
#include <random>

#include "eit2des/errors.hpp"
#include "eit2des/params.hpp"

using namespace eit2des;

namespace {

SystemParams reference() { return SystemParams{}; }

}  // namespace

TEST_CASE("derived rates for the reference parameter set") {
  const DerivedRates g = derive_rates(reference());
  CHECK(g.gamma1 == doctest::Approx(41.00005).epsilon(1e-12));
  CHECK(g.gamma2 == doctest::Approx(1.00005).epsilon(1e-12));
  CHECK(g.gamma3 == doctest::Approx(41.0).epsilon(1e-12));
  // 0.5 * sqrt(4 * 50^2 - 41^2) = 0.5 * sqrt(8319)
  CHECK(g.omega_tilde == doctest::Approx(45.604276115294276).epsilon(1e-12));
  CHECK(g.oscillatory);
}

TEST_CASE("derived rates zero case") {
  // derive_rates is pure arithmetic; the all-zero corner is well defined even
  // though propagation would reject it (Gamma1 + Gamma2 = 0).
  SystemParams p;
  p.Gamma1 = p.Gamma2 = 0.0;
  p.gamma0_a = p.gamma0_b = p.gamma0_c = 0.0;
  p.Omega = 0.0;
  const DerivedRates g = derive_rates(p);
  CHECK(g.gamma1 == 0.0);
  CHECK(g.gamma2 == 0.0);
  CHECK(g.gamma3 == 0.0);
  CHECK(g.omega_tilde == 0.0);
  CHECK_FALSE(g.oscillatory);
}

TEST_CASE("derived rates overdamped example") {
  SystemParams p;
  p.Gamma1 = p.Gamma2 = p.gamma0_a = p.gamma0_b = p.gamma0_c = 2.0;
  p.Omega = 1.0;
  const DerivedRates g = derive_rates(p);
  CHECK(g.gamma1 == 4.0);
  CHECK(g.gamma2 == 3.0);
  CHECK(g.gamma3 == 3.0);
  CHECK_FALSE(g.oscillatory);  // 4 * 1 < 9
}

TEST_CASE("derive_rates is scale covariant") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> rate(0.01, 100.0);
  std::uniform_real_distribution<double> scale_dist(0.01, 1000.0);
  for (int i = 0; i < 200; ++i) {
    SystemParams p;
    p.Gamma1 = rate(rng);
    p.Gamma2 = rate(rng);
    p.gamma0_a = rate(rng);
    p.gamma0_b = rate(rng);
    p.gamma0_c = rate(rng);
    p.Omega = rate(rng);
    const double s = scale_dist(rng);
    SystemParams q = p;
    q.Gamma1 *= s;
    q.Gamma2 *= s;
    q.gamma0_a *= s;
    q.gamma0_b *= s;
    q.gamma0_c *= s;
    q.Omega *= s;
    const DerivedRates gp = derive_rates(p);
    const DerivedRates gq = derive_rates(q);
    CHECK(gq.gamma1 == doctest::Approx(s * gp.gamma1).epsilon(1e-12));
    CHECK(gq.gamma2 == doctest::Approx(s * gp.gamma2).epsilon(1e-12));
    CHECK(gq.gamma3 == doctest::Approx(s * gp.gamma3).epsilon(1e-12));
    CHECK(gq.omega_tilde == doctest::Approx(s * gp.omega_tilde).epsilon(1e-12));
    CHECK(gq.oscillatory == gp.oscillatory);  // same regime under scaling
  }
}

TEST_CASE("parameter validation") {
  SystemParams p;
  p.Omega = -5.0;
  CHECK_THROWS_WITH_AS(p.validate(), doctest::Contains("Omega"), ConfigError);

  p = SystemParams{};
  p.omega_ab = 0.0;
  CHECK_THROWS_WITH_AS(p.validate(), doctest::Contains("omega_ab"), ConfigError);

  p = SystemParams{};
  p.Gamma1 = 0.0;
  p.Gamma2 = 0.0;
  CHECK_THROWS_AS(p.validate(), ConfigError);

  p = SystemParams{};
  p.Gamma2 = std::nan("");
  CHECK_THROWS_WITH_AS(p.validate(), doctest::Contains("Gamma2"), ConfigError);

  CHECK_NOTHROW(reference().validate());
}
