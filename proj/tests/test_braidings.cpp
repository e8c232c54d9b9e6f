#include <doctest.h>

#include <set>

#include "cocycle_lab/braidings.hpp"
#include "cocycle_lab/coherence.hpp"
#include "cocycle_lab/reference_tables.hpp"
#include "cocycle_lab/scalar_parse.hpp"
#include "oracles.hpp"

using namespace cocycle_lab;
using namespace cocycle_lab::kl;

namespace {

const KleinSubset kST{KleinSubset::sigma | KleinSubset::tau}, kSR{KleinSubset::sigma | KleinSubset::rho},
    kTR{KleinSubset::tau | KleinSubset::rho};

// Both hexagon identities transcribed directly.
bool naive_hexagons(const Cochain& phi, const Cochain& R) {
  const auto& g = phi.group();
  auto f = [&](std::size_t x, std::size_t y, std::size_t z) { return phi.at({{x, y, z}}); };
  auto r = [&](std::size_t x, std::size_t y) { return R.at({{x, y}}); };
  for (const auto& t : tuples(g, 3)) {
    const std::size_t x = t[0], y = t[1], z = t[2];
    if (!(r(oracle::mul(g, x, y), z) * f(x, z, y) == f(x, y, z) * r(x, z) * f(z, x, y) * r(y, z))) return false;
    if (!(f(x, y, z) * r(x, oracle::mul(g, y, z)) * f(y, z, x) == r(x, y) * f(y, x, z) * r(x, z))) return false;
  }
  return true;
}

const AbelianCocycle& find(const std::vector<AbelianCocycle>& reps, const std::string& label) {
  for (const auto& r : reps)
    if (r.label == label) return r;
  throw std::runtime_error("missing " + label);
}

CycScalar cell(const AbelianCocycle& ac, std::size_t x, std::size_t y) { return ac.R.at({{x, y}}); }

Cochain ones(std::size_t degree) {
  return Cochain::from_function(klein(), degree, [](std::span<const std::size_t>) { return CycScalar(1); });
}

}  // namespace

TEST_SUITE("braidings") {
  TEST_CASE("hexagon test") {
    CHECK(is_abelian_cocycle(ones(3), ones(2)));
    std::mt19937 rng(1);
    for (int t = 0; t < 20; ++t) {
      const Cochain R = oracle::random_mu2(rng, klein(), 4);
      CHECK_FALSE(is_abelian_cocycle(phi_X(KleinSubset{KleinSubset::sigma}), R));
      const Cochain phi = t % 2 ? phi_X(kST) : ones(3);
      CHECK(is_abelian_cocycle(phi, R) == naive_hexagons(phi, R));
    }
    // g_i is not a coboundary, so no mu_4-valued R turns it into an abelian cocycle.
    CHECK(hexagon_solutions(g_b(CycScalar::i()), 4).empty());
    CHECK_FALSE(hexagon_solutions(g_b(-1), 4).empty());
  }

  TEST_CASE("abelian coboundaries") {
    const AbelianCocycle triv = abelian_coboundary(ones(2));
    CHECK(triv.phi == ones(3));
    CHECK(triv.R == ones(2));
    std::mt19937 rng(2);
    for (int t = 0; t < 100; ++t) {
      const Cochain psi = oracle::random_mu2(rng, klein(), 4);
      const AbelianCocycle ac = abelian_coboundary(psi);
      CHECK(is_abelian_cocycle(ac));
      if (t < 10) CHECK(naive_hexagons(ac.phi, ac.R));
      const Cochain sym = Cochain::from_function(klein(), 2, [&](std::span<const std::size_t> xy) {
        return psi.at(xy) * psi.at({{xy[1], xy[0]}});
      });
      for (const auto& v : abelian_coboundary(sym).R.values()) CHECK(v.is_one());
    }
    KleinTwoCochainParams p;
    p.a1 = p.a2 = p.a3 = p.b4 = p.b5 = p.b6 = CycScalar(-1);
    const AbelianCocycle ac = abelian_coboundary(klein_two_cochain(p));
    CHECK(ac.phi == ones(3));
    CHECK(cell(ac, sigma, tau) == CycScalar(-1));
    Cochain bad = ones(2);
    bad.set({{e, sigma}}, CycScalar(2));
    CHECK_THROWS_AS(abelian_coboundary(bad), PreconditionError);
  }

  TEST_CASE("quadratic forms") {
    CHECK(is_quadratic_form(klein_form(1, 1, 1)));
    const CycScalar i = CycScalar::i();
    CHECK(is_quadratic_form(klein_form(i, i, 1)));
    CHECK_FALSE(is_quadratic_form(klein_form(i, i, i)));
    CHECK_FALSE(satisfies_klein_form_conditions(klein_form(i, i, i)));
    // The general identity and the Klein criterion agree on all 4^3 candidate triples.
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c) {
          const QuadraticForm q = klein_form(root_of_unity(4, a), root_of_unity(4, b), root_of_unity(4, c));
          CHECK(is_quadratic_form(q) == satisfies_klein_form_conditions(q));
        }
    CHECK(klein_form_label(klein_form_generator("E1")) == "E1");
    CHECK(klein_form_label(klein_form(i, i, i)).empty());
  }

  TEST_CASE("traces") {
    const auto reps = enumerate_klein_braidings(4);
    const QuadraticForm a = trace(find(reps, "A"));
    CHECK(a(sigma) == CycScalar(1));
    CHECK(a(tau) == CycScalar(1));
    CHECK(a(rho) == CycScalar(-1));
    const QuadraticForm e1 = trace(find(reps, "E1"));
    CHECK(e1(sigma) == CycScalar::i());
    CHECK(e1(tau) == CycScalar::i());
    CHECK(e1(rho) == CycScalar(1));
    CHECK(trace(abelian_coboundary(ones(2))).is_trivial());
    for (const auto& x : reps) {
      CHECK(is_quadratic_form(trace(x)));
      for (const auto& y : reps) {
        const AbelianCocycle xy = x * y;
        CHECK(trace(xy) == trace(x) * trace(y));
      }
    }
    // E1 E2 = C E3 read off the product of the representatives.
    CHECK(klein_form_label(trace(find(reps, "E1") * find(reps, "E2"))) == "CE3");
  }

  TEST_CASE("trivial-underlying braidings") {
    const AbelianCocycle a = klein_braiding_trivial(1, 1, -1);
    CHECK(cell(a, tau, sigma) == CycScalar(-1));
    CHECK(cell(a, tau, rho) == CycScalar(-1));
    CHECK(klein_form_label(trace(a)) == "A");
    const AbelianCocycle id = klein_braiding_trivial(1, 1, 1);
    CHECK(id.R == ones(2));
    const AbelianCocycle abc = klein_braiding_trivial(-1, -1, -1);
    CHECK(cell(abc, rho, sigma) == CycScalar(1));
    CHECK(klein_form_label(trace(abc)) == "ABC");
    for (int m = 0; m < 8; ++m) {
      const AbelianCocycle ac = klein_braiding_trivial(m & 1 ? -1 : 1, m & 2 ? -1 : 1, m & 4 ? -1 : 1);
      CHECK(naive_hexagons(ac.phi, ac.R));
      CHECK(is_bilinear(ac.R));
    }
    CHECK_THROWS_AS(klein_braiding_trivial(2, 1, 1), PreconditionError);
  }

  TEST_CASE("braidings over phi_X") {
    const CycScalar i = CycScalar::i();
    const AbelianCocycle e1 = klein_braiding_phiX(kST, i, i, 1);
    CHECK(cell(e1, rho, sigma) == -i);
    CHECK(cell(e1, tau, rho) == -i);
    CHECK(klein_form_label(trace(e1)) == "E1");
    const AbelianCocycle e2 = klein_braiding_phiX(kSR, i, 1, i);
    CHECK(cell(e2, tau, rho) == CycScalar(1));
    CHECK(cell(e2, rho, sigma) == i);
    const AbelianCocycle e3 = klein_braiding_phiX(kTR, 1, i, i);
    CHECK(cell(e3, tau, rho) == i);
    // alpha = -1 versions are cohomologous to alpha = +1 and have equal traces.
    for (KleinSubset x : {kST, kSR, kTR})
      for (int k = 0; k < 8; ++k) {
        auto mu = [&](std::size_t el, int bit) {
          const CycScalar base = x.contains(el) ? i : CycScalar(1);
          return k >> bit & 1 ? -base : base;
        };
        const AbelianCocycle plus = klein_braiding_phiX(x, mu(sigma, 0), mu(tau, 1), mu(rho, 2), 1);
        const AbelianCocycle minus = klein_braiding_phiX(x, mu(sigma, 0), mu(tau, 1), mu(rho, 2), -1);
        CHECK(naive_hexagons(plus.phi, plus.R));
        CHECK(naive_hexagons(minus.phi, minus.R));
        CHECK(trace(plus) == trace(minus));
        const auto w = abelian_cohomologous(plus, minus, 4);
        REQUIRE(w);
        CHECK(abelian_coboundary(*w) == plus * minus.inverse());
      }
    CHECK_THROWS_AS(klein_braiding_phiX(KleinSubset{KleinSubset::sigma}, i, 1, 1), PreconditionError);
    CHECK_THROWS_AS(klein_braiding_phiX(kST, 1, i, 1), PreconditionError);
  }

  TEST_CASE("enumeration of representatives") {
    const auto reps = enumerate_klein_braidings(4);
    CHECK(reps.size() == 32);
    CHECK(enumerate_klein_braidings(2).size() == 8);
    CHECK(enumerate_klein_braidings(12).size() == 32);
    std::set<std::string> labels;
    for (const auto& r : reps) {
      labels.insert(r.label);
      CHECK(klein_form_label(trace(r)) == r.label);
      // R(e,x) = R(x,e) = 1.
      for (std::size_t x = 0; x < 4; ++x) {
        CHECK(cell(r, e, x).is_one());
        CHECK(cell(r, x, e).is_one());
      }
    }
    CHECK(labels.size() == 32);
    CHECK(reps.front().label == "I");
    CHECK(reps.back().label == "ABCE3");
  }

  TEST_CASE("relations derived from the hexagons for the 24 nontrivial representatives") {
    const auto& g = klein();
    for (const auto& r : enumerate_klein_braidings(4)) {
      if (r.phi == ones(3)) {
        CHECK(is_bilinear(r.R));
        continue;
      }
      CHECK_FALSE(is_bilinear(r.R));
      auto f = [&](std::size_t x, std::size_t y, std::size_t z) { return r.phi.at({{x, y, z}}); };
      for (std::size_t x = 1; x < 4; ++x)
        for (std::size_t y = 1; y < 4; ++y) {
          if (x == y) continue;
          CHECK(cell(r, g.mul_index(x, y), x) == f(x, y, x) * cell(r, x, x) * cell(r, y, x));
          CHECK(f(x, y, x) == f(x, x, y) * cell(r, x, y).pow(2) * f(y, x, x));
          CHECK(f(x, y, x) * cell(r, x, g.mul_index(x, y)) == cell(r, x, x) * cell(r, x, y));
          CHECK(f(x, y, y) * f(y, y, x) == cell(r, x, y).pow(2) * f(y, x, y));
        }
      CHECK(cell(r, sigma, tau).pow(2).is_one());
    }
  }

  TEST_CASE("symmetric braidings") {
    const auto reps = enumerate_klein_braidings(4);
    for (const auto& r : reps) {
      const bool sym = r.label == "I" || r.label == "AB" || r.label == "AC" || r.label == "BC";
      CHECK(is_symmetric(r) == sym);
      CHECK(categorical_symmetry_check(r.phi, r.R) == sym);
    }
    CHECK(categorical_hexagon_check(find(reps, "A").phi, find(reps, "A").R));
    CHECK_FALSE(categorical_symmetry_check(find(reps, "A").phi, find(reps, "A").R));
  }

  TEST_CASE("cyclic braidings") {
    const AbelianCocycle a = cyclic_braiding(2, CycScalar::i());
    CHECK(a.phi == cyclic_phi_q(2, -1));
    CHECK(a.R.at({{1, 1}}) == CycScalar::i());
    const AbelianCocycle b = cyclic_braiding(2, -1);
    CHECK(b.phi == cyclic_phi_q(2, 1));
    CHECK(b.R.at({{1, 1}}) == CycScalar(-1));
    const AbelianCocycle c = cyclic_braiding(3, 1);
    for (const auto& v : c.R.values()) CHECK(v.is_one());
    for (int n = 1; n <= 6; ++n) {
      const int m = std::gcd(n * n, 2 * n);
      for (int k = 0; k < m; ++k) {
        const AbelianCocycle ac = cyclic_braiding(n, root_of_unity(m, k));
        CHECK(naive_hexagons(ac.phi, ac.R));
        CHECK(categorical_hexagon_check(ac.phi, ac.R));
      }
    }
    CHECK_THROWS_AS(cyclic_braiding(3, root_of_unity(6, 1)), PreconditionError);
  }

  TEST_CASE("cohomologous abelian cocycles") {
    const auto reps = enumerate_klein_braidings(4);
    const auto self = abelian_cohomologous(find(reps, "E1"), find(reps, "E1"), 4);
    REQUIRE(self);
    CHECK(abelian_coboundary(*self).R == ones(2));
    CHECK(abelian_coboundary(*self).phi == ones(3));
    CHECK_FALSE(abelian_cohomologous(find(reps, "E1"), find(reps, "AE1"), 4));
    // Distinct traces are never cohomologous.
    for (std::size_t a = 0; a < reps.size(); a += 5)
      for (std::size_t b = 0; b < reps.size(); b += 3)
        CHECK(abelian_cohomologous(reps[a], reps[b], 4).has_value() == (a == b));
  }

  TEST_CASE("transports of braidings from C2") {
    const auto reps = enumerate_klein_braidings(4);
    const auto c2 = c2_abelian_cocycles(4);
    REQUIRE(c2.size() == 4);
    CHECK(c2_abelian_cocycles(2).size() == 2);
    CHECK(transport_t_ab(1, c2[1]) == find(reps, "AB"));
    CHECK(transport_t_ab(2, c2[1]) == find(reps, "AC"));
    CHECK(klein_form_label(trace(transport_t_ab(3, c2[1]))) == "BC");
    // The third projection pulls back to an R with R(sigma,tau) = -1, so only the class agrees.
    CHECK(cell(transport_t_ab(3, c2[1]), sigma, tau) == CycScalar(-1));
    CHECK(abelian_cohomologous(transport_t_ab(3, c2[1]), find(reps, "BC"), 4));
    CHECK(transport_t_ab(1, c2[2]).phi == phi_X(kTR));
    CHECK(klein_form_label(trace(transport_t_ab(1, c2[2]))) == "E3");
    CHECK(klein_form_label(trace(transport_t_ab(1, c2[3]))) == "ABE3");
    CHECK(klein_form_label(trace(transport_t_ab(2, c2[2]))) == "E2");
    const AbelianCocycle t3 = transport_t_ab(3, c2[2]);
    const auto w = abelian_cohomologous(t3, find(reps, "E1"), 4);
    REQUIRE(w);
    CHECK(abelian_coboundary(*w) == t3 * find(reps, "E1").inverse());
    for (int i = 1; i <= 3; ++i)
      for (const auto& ac : c2) CHECK(naive_hexagons(transport_t_ab(i, ac).phi, transport_t_ab(i, ac).R));
  }

  TEST_CASE("matrix coherence oracle") {
    CHECK(categorical_pentagon_check(phi_X(kST)));
    const auto reps = enumerate_klein_braidings(4);
    CHECK(categorical_hexagon_check(find(reps, "E1").phi, find(reps, "E1").R));
    std::mt19937 rng(77);
    for (int t = 0; t < 30; ++t) {
      Cochain phi = phi_X(KleinSubset{static_cast<unsigned>(t % 8)}) * delta2(oracle::random_mu2(rng, klein(), 4));
      if (t % 3 == 0) phi.set_flat(static_cast<std::size_t>(rng() % 64), CycScalar(-1) * phi[static_cast<std::size_t>(rng() % 64)]);
      if (is_normalized3(phi)) CHECK(categorical_pentagon_check(phi) == is_cocycle3(phi));
      const Cochain R = t % 2 ? reps[static_cast<std::size_t>(t)].R : oracle::random_mu2(rng, klein(), 4);
      const Cochain p = reps[static_cast<std::size_t>(t)].phi;
      CHECK(categorical_hexagon_check(p, R) == is_abelian_cocycle(p, R));
    }
  }
}
