#include "doctest.h"

#include <cmath>
#include <functional>

#include "morsemap/errors.hpp"
#include "morsemap/langer.hpp"
#include "morsemap/potentials.hpp"
#include "morsemap/specfun.hpp"

using namespace morsemap;
using namespace morsemap::potentials;

namespace {

// Hyperspherical label chains l = l_{D-1} >= l_{D-2} >= ... >= l_2 >= |l_1|.
std::uint64_t count_chains(int dim, int l) {
  std::function<std::uint64_t(int, int)> below = [&](int levels_left, int top) -> std::uint64_t {
    if (levels_left == 1) {
      return 2 * static_cast<std::uint64_t>(top) + 1;  // l_1 = -top..top
    }
    std::uint64_t total = 0;
    for (int next = 0; next <= top; ++next) {
      total += below(levels_left - 1, next);
    }
    return total;
  };
  if (dim == 2) {
    return l == 0 ? 1 : 2;  // l_1 = +-l
  }
  return below(dim - 2, l);
}

// D-tuples of non-negative integers summing to total.
std::uint64_t count_compositions(int parts, int total) {
  if (parts == 1) {
    return 1;
  }
  std::uint64_t sum = 0;
  for (int first = 0; first <= total; ++first) {
    sum += count_compositions(parts - 1, total - first);
  }
  return sum;
}

double sho_overlap(const RadialState& a, const RadialState& b, double omega, double mass, double hbar) {
  return specfun::integrate_halfline(
             [&](double r) {
               return sho_eigenfunction(a, omega, mass, hbar, r) *
                      sho_eigenfunction(b, omega, mass, hbar, r);
             },
             std::sqrt(hbar / (mass * omega)), 1e-11)
      .value;
}

double coulomb_overlap(const RadialState& a, const RadialState& b, double z, double mass, double hbar) {
  const double scale = coulomb_length(z, mass, hbar) * (std::max(a.n, b.n) + 0.5 + a.s);
  return specfun::integrate_halfline(
             [&](double r) {
               return coulomb_eigenfunction(a, z, mass, hbar, r) *
                      coulomb_eigenfunction(b, z, mass, hbar, r);
             },
             scale, 1e-11)
      .value;
}

template <typename F>
int sign_changes(F&& f, double to) {
  int changes = 0;
  int last = 0;
  constexpr int kSamples = 20000;
  for (int i = 1; i <= kSamples; ++i) {
    const double v = f(to * i / kSamples);
    const int s = (v > 0.0) - (v < 0.0);
    if (s != 0 && last != 0 && s != last) {
      ++changes;
    }
    if (s != 0) {
      last = s;
    }
  }
  return changes;
}

}  // namespace

TEST_CASE("degeneracy") {
  CHECK(degeneracy(3, 1).count == 3);
  CHECK(degeneracy(4, 2).count == 9);
  CHECK(degeneracy(2, 0).count == 1);
  for (int l = 1; l <= 8; ++l) {
    CHECK(degeneracy(2, l).count == 2);
    CHECK(degeneracy(3, l).count == 2 * static_cast<std::uint64_t>(l) + 1);
  }
  for (int d = 2; d <= 10; ++d) {
    for (int l = 0; l <= 6; ++l) {
      CHECK(degeneracy(d, l).count == count_chains(d, l));
    }
  }
  CHECK_THROWS_AS(degeneracy(1, 0), DomainError);
  CHECK_THROWS_AS(degeneracy(3, -1), DomainError);
}

TEST_CASE("sho_spectrum") {
  CHECK(sho_spectrum(3, 0, 0.0, 1.0, 1.0, 1.0, 0)[0].energy == 1.5);
  CHECK(sho_spectrum(3, 1, 0.0, 1.0, 1.0, 1.0, 0)[0].energy == 2.5);
  const auto st = sho_spectrum(3, 0, 0.75, 1.0, 1.0, 1.0, 1);
  REQUIRE(st.size() == 2);
  CHECK(st[1].s == 1.0);
  CHECK(st[1].energy == 4.0);
  CHECK(st[1].family == Family::oscillator);
  // hbar omega scaling
  CHECK(sho_spectrum(3, 0, 0.0, 2.0, 3.0, 0.5, 0)[0].energy == doctest::Approx(1.5).epsilon(1e-15));

  CHECK_THROWS_AS(sho_spectrum(3, 0, 0.0, 0.0, 1.0, 1.0, 2), DomainError);
  CHECK_THROWS_AS(sho_spectrum(3, 0, 0.0, -1.0, 1.0, 1.0, 2), DomainError);
  CHECK_THROWS_AS(sho_spectrum(3, 0, -0.25, 1.0, 1.0, 1.0, 2), CriticalCouplingError);
}

TEST_CASE("coulomb_spectrum") {
  const auto h = coulomb_spectrum(3, 0, 0.0, -1.0, 1.0, 1.0, 4);
  CHECK(h[0].energy == -0.5);
  CHECK(h[1].energy == -0.125);
  for (std::size_t i = 1; i < h.size(); ++i) {
    CHECK(h[i - 1].energy < h[i].energy);
    CHECK(h[i].energy < 0.0);
  }
  CHECK(coulomb_spectrum(3, 0, 0.75, -1.0, 1.0, 1.0, 0)[0].energy ==
        doctest::Approx(-2.0 / 9.0).epsilon(1e-15));
  CHECK_THROWS_AS(coulomb_spectrum(3, 0, 0.0, 0.0, 1.0, 1.0, 2), DomainError);
  CHECK_THROWS_AS(coulomb_spectrum(3, 0, 0.0, 1.0, 1.0, 1.0, 2), DomainError);
  CHECK_THROWS_AS(coulomb_spectrum(4, 0, -1.0, -1.0, 1.0, 1.0, 2), CriticalCouplingError);
}

TEST_CASE("mapping consistency conditions") {
  for (int l = 0; l <= 3; ++l) {
    for (double beta : {0.0, 0.75, 2.0}) {
      for (const auto& st : sho_spectrum(3, l, beta, 1.7, 1.0, 1.0, 5)) {
        CHECK(st.energy > 2.0 * 1.7 * (st.n + 0.5));
      }
      const double a = coulomb_length(-1.3, 1.0, 1.0);
      for (const auto& st : coulomb_spectrum(3, l, beta, -1.3, 1.0, 1.0, 5)) {
        CHECK(st.energy > -1.0 / (2.0 * a * a * (st.n + 0.5) * (st.n + 0.5)));
      }
    }
  }
}

TEST_CASE("energies through the Morse image equal the closed forms") {
  for (int d = 2; d <= 6; ++d) {
    for (int l = 0; l <= 3; ++l) {
      for (double beta : {0.0, 0.75, 2.0}) {
        if (d == 2 && l == 0 && beta == 0.0) {
          continue;  // S = 0
        }
        const auto osc = sho_spectrum(d, l, beta, 1.0, 1.0, 1.0, 4);
        const auto cou = coulomb_spectrum(d, l, beta, -1.0, 1.0, 1.0, 4);
        for (int n = 0; n <= 4; ++n) {
          const double e_osc = langer::energy_via_morse(langer::oscillator_problem(d, l, beta, 1.0), n);
          const double e_cou = langer::energy_via_morse(langer::coulomb_problem(d, l, beta, -1.0), n);
          CHECK(std::abs(e_osc - osc[n].energy) <= 1e-12 * std::abs(osc[n].energy));
          CHECK(std::abs(e_cou - cou[n].energy) <= 1e-12 * std::abs(cou[n].energy));
        }
      }
    }
  }
}

TEST_CASE("eigenfunctions vanish at the origin") {
  const auto s = sho_spectrum(3, 0, 0.0, 1.0, 1.0, 1.0, 0)[0];
  const auto c = coulomb_spectrum(3, 0, 0.0, -1.0, 1.0, 1.0, 0)[0];
  CHECK(sho_eigenfunction(s, 1.0, 1.0, 1.0, 0.0) == 0.0);
  CHECK(coulomb_eigenfunction(c, -1.0, 1.0, 1.0, 0.0) == 0.0);
  // u ~ r^(1/2+S) near 0
  const auto sing = coulomb_spectrum(3, 0, 0.75, -1.0, 1.0, 1.0, 0)[0];
  const double ratio = coulomb_eigenfunction(sing, -1.0, 1.0, 1.0, 2e-6) /
                       coulomb_eigenfunction(sing, -1.0, 1.0, 1.0, 1e-6);
  CHECK(ratio == doctest::Approx(std::pow(2.0, 1.5)).epsilon(1e-5));
}

TEST_CASE("hydrogen 1s") {
  const auto st = coulomb_spectrum(3, 0, 0.0, -1.0, 1.0, 1.0, 0)[0];
  for (double r : {0.1, 0.7, 2.0, 9.0}) {
    CHECK(coulomb_eigenfunction(st, -1.0, 1.0, 1.0, r) ==
          doctest::Approx(2.0 * r * std::exp(-r)).epsilon(1e-13));
  }
  // a = hbar^2 / (m |Z|) = 0.5 here
  const auto st2 = coulomb_spectrum(3, 0, 0.0, -2.0, 1.0, 1.0, 0)[0];
  const double a = 0.5;
  for (double r : {0.1, 0.7, 2.0}) {
    CHECK(coulomb_eigenfunction(st2, -2.0, 1.0, 1.0, r) ==
          doctest::Approx(2.0 / std::pow(a, 1.5) * r * std::exp(-r / a)).epsilon(1e-13));
  }
}

TEST_CASE("closed-form normalization agrees with quadrature") {
  for (int d : {2, 3, 5}) {
    for (int l = 0; l <= 2; ++l) {
      for (double beta : {0.0, 0.75, 2.0}) {
        if (d == 2 && l == 0 && beta == 0.0) {
          continue;
        }
        const auto osc = sho_spectrum(d, l, beta, 1.4, 0.9, 1.2, 3);
        const auto cou = coulomb_spectrum(d, l, beta, -1.1, 0.9, 1.2, 3);
        for (int n = 0; n <= 3; ++n) {
          CHECK(std::abs(sho_overlap(osc[n], osc[n], 1.4, 0.9, 1.2) - 1.0) < 1e-8);
          CHECK(std::abs(coulomb_overlap(cou[n], cou[n], -1.1, 0.9, 1.2) - 1.0) < 1e-8);
        }
      }
    }
  }
}

TEST_CASE("orthogonality at fixed l") {
  for (int d : {2, 3, 4}) {
    for (int l = 0; l <= 2; ++l) {
      for (double beta : {0.0, 0.75}) {
        if (d == 2 && l == 0 && beta == 0.0) {
          continue;
        }
        const auto osc = sho_spectrum(d, l, beta, 1.0, 1.0, 1.0, 3);
        const auto cou = coulomb_spectrum(d, l, beta, -1.0, 1.0, 1.0, 3);
        for (int n = 0; n <= 3; ++n) {
          for (int m = n + 1; m <= 3; ++m) {
            CHECK(std::abs(sho_overlap(osc[n], osc[m], 1.0, 1.0, 1.0)) < 1e-8);
            CHECK(std::abs(coulomb_overlap(cou[n], cou[m], -1.0, 1.0, 1.0)) < 1e-8);
          }
        }
      }
    }
  }
}

TEST_CASE("node counts") {
  for (int l = 0; l <= 1; ++l) {
    const auto osc = sho_spectrum(3, l, 0.0, 1.0, 1.0, 1.0, 2);
    const auto cou = coulomb_spectrum(3, l, 0.0, -1.0, 1.0, 1.0, 2);
    for (int n = 0; n <= 2; ++n) {
      CHECK(sign_changes([&](double r) { return sho_eigenfunction(osc[n], 1.0, 1.0, 1.0, r); }, 12.0) == n);
      CHECK(sign_changes([&](double r) { return coulomb_eigenfunction(cou[n], -1.0, 1.0, 1.0, r); }, 120.0) == n);
    }
  }
}

TEST_CASE("family mismatch") {
  const auto s = sho_spectrum(3, 0, 0.0, 1.0, 1.0, 1.0, 0)[0];
  const auto c = coulomb_spectrum(3, 0, 0.0, -1.0, 1.0, 1.0, 0)[0];
  CHECK_THROWS_AS(coulomb_eigenfunction(s, -1.0, 1.0, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(sho_eigenfunction(c, 1.0, 1.0, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(sho_eigenfunction(s, 1.0, 1.0, 1.0, -1.0), DomainError);
}

TEST_CASE("pure oscillator levels") {
  const auto d3 = pure_sho_levels(3, 1.0, 1.0, 1.0, 2);
  CHECK(d3[0].energy == 1.5);
  CHECK(d3[0].degeneracy == 1);
  CHECK(d3[2].energy == 3.5);
  CHECK(d3[2].degeneracy == 6);
  const auto d2 = pure_sho_levels(2, 1.0, 1.0, 1.0, 1);
  CHECK(d2[1].energy == 2.0);
  CHECK(d2[1].degeneracy == 2);

  for (int d = 2; d <= 5; ++d) {
    const auto levels = pure_sho_levels(d, 1.0, 1.0, 1.0, 6);
    for (const auto& lv : levels) {
      CHECK(lv.degeneracy == count_compositions(d, lv.big_n));
      CHECK(lv.energy == lv.big_n + 0.5 * d);
    }
  }
}

TEST_CASE("pure levels coincide with every (n, l) relabeling") {
  for (int d = 3; d <= 6; ++d) {
    const auto osc_levels = pure_sho_levels(d, 1.0, 1.0, 1.0, 6);
    for (const auto& lv : osc_levels) {
      for (int l = lv.big_n % 2; l <= lv.big_n; l += 2) {
        const int n = (lv.big_n - l) / 2;
        CHECK(sho_spectrum(d, l, 0.0, 1.0, 1.0, 1.0, n)[n].energy ==
              doctest::Approx(lv.energy).epsilon(1e-14));
      }
    }
    const auto cou_levels = pure_coulomb_levels(d, -1.0, 1.0, 1.0, 6);
    for (const auto& lv : cou_levels) {
      std::uint64_t total = 0;
      for (int l = 0; l <= lv.big_n - 1; ++l) {
        const int n = lv.big_n - l - 1;
        CHECK(coulomb_spectrum(d, l, 0.0, -1.0, 1.0, 1.0, n)[n].energy ==
              doctest::Approx(lv.energy).epsilon(1e-14));
        total += count_chains(d, l);
      }
      CHECK(lv.degeneracy == total);
    }
  }
}

TEST_CASE("pure Coulomb levels") {
  const auto h = pure_coulomb_levels(3, -1.0, 1.0, 1.0, 5);
  REQUIRE(h.size() == 5);
  CHECK(h[0].big_n == 1);
  CHECK(h[0].energy == -0.5);
  CHECK(h[0].degeneracy == 1);
  CHECK(h[1].energy == -0.125);
  CHECK(h[1].degeneracy == 4);
  for (const auto& lv : h) {
    CHECK(lv.energy == doctest::Approx(-1.0 / (2.0 * lv.big_n * lv.big_n)).epsilon(1e-15));
    CHECK(lv.degeneracy == static_cast<std::uint64_t>(lv.big_n * lv.big_n));
  }
  CHECK(pure_coulomb_levels(5, -1.0, 1.0, 1.0, 1)[0].energy == -0.125);
  // Extrapolated D = 2 labelling: N - 1/2.
  CHECK(pure_coulomb_levels(2, -1.0, 1.0, 1.0, 1)[0].energy == -2.0);
  CHECK_THROWS_AS(pure_coulomb_levels(3, 1.0, 1.0, 1.0, 2), DomainError);
}
