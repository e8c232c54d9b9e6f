#include <doctest.h>

#include "cocycle_lab/cohomology.hpp"
#include "cocycle_lab/klein.hpp"
#include "oracles.hpp"

using namespace cocycle_lab;
using namespace cocycle_lab::kl;

namespace {

const KleinSubset kSigma{KleinSubset::sigma}, kTau{KleinSubset::tau}, kRho{KleinSubset::rho};

// The nine relations any normalized cocycle satisfies, for one ordering (s,t,r) of sigma, tau, rho.
bool nine_relations(const Cochain& phi, std::size_t s, std::size_t t, std::size_t r) {
  auto f = [&](std::size_t x, std::size_t y, std::size_t z) { return phi.at({{x, y, z}}); };
  const CycScalar es = f(s, s, s), et = f(t, t, t), er = f(r, r, r);
  return f(r, t, t) == et * f(s, t, t) && f(t, t, r) == et * f(t, t, s) && f(t, r, t) * f(t, s, t) == et &&
         (f(s, t, t) * f(s, s, t) * f(s, r, t)).is_one() &&
         f(t, s, t) * f(s, t, s) * f(s, r, t) == f(r, s, t) * f(s, t, r) &&
         f(s, t, t) * f(t, t, s) == f(r, t, s) * f(s, t, r) && es * f(t, r, s) * f(s, t, r) == f(r, r, s) * f(s, t, t) &&
         f(t, r, t) * f(s, s, t) * f(s, t, r) == f(r, r, t) * f(s, t, s) &&
         f(t, r, r) * f(s, s, r) * f(s, t, r) == er;
}

bool all_orderings(const Cochain& phi) {
  std::array<std::size_t, 3> p = {sigma, tau, rho};
  do {
    if (!nine_relations(phi, p[0], p[1], p[2])) return false;
  } while (std::next_permutation(p.begin(), p.end()));
  return true;
}

// phi(pi x, pi y, pi z) for the automorphism of V4 permuting sigma, tau, rho as p.
Cochain relabel(const Cochain& phi, const std::array<std::size_t, 4>& p) {
  return Cochain::from_function(klein(), 3, [&](std::span<const std::size_t> t) { return phi.at({{p[t[0]], p[t[1]], p[t[2]]}}); });
}

KleinSubset relabel(KleinSubset x, const std::array<std::size_t, 4>& p) {
  KleinSubset out{};
  for (std::size_t v : {sigma, tau, rho})
    if (x.contains(p[v])) out.bits |= 1u << (v - 1);
  return out;
}

}  // namespace

TEST_SUITE("klein") {
  TEST_CASE("subsets") {
    CHECK(to_string(parse_klein_subset("sigma,rho")) == "{sigma,rho}");
    CHECK(parse_klein_subset("").bits == 0);
    CHECK(parse_klein_subset("rho, tau").bits == (KleinSubset::tau | KleinSubset::rho));
    CHECK_THROWS(parse_klein_subset("omega"));
  }

  TEST_CASE("phi_X values") {
    for (const auto& v : phi_X(KleinSubset{}).values()) CHECK(v.is_one());
    const Cochain sr = phi_X(KleinSubset{KleinSubset::sigma | KleinSubset::rho});
    CHECK(sr.at({{sigma, sigma, sigma}}) == CycScalar(-1));
    CHECK(sr.at({{sigma, tau, rho}}) == CycScalar(1));
    CHECK(phi_X(kSigma).at({{sigma, tau, rho}}) == CycScalar(-1));
    for (unsigned b = 0; b < 8; ++b) {
      const Cochain phi = phi_X(KleinSubset{b});
      CHECK(oracle::naive_cocycle3(phi));
      CHECK(is_happy(phi));
      std::array<std::size_t, 4> p = {e, sigma, tau, rho};
      do {
        const Cochain moved = relabel(phi, p);
        const KleinSubset target = relabel(KleinSubset{b}, p);
        REQUIRE(is_happy(moved));
        const HappyParams hp = happy_params(moved);
        CHECK(hp.eps_sigma == (target.contains(sigma) ? -1 : 1));
        CHECK(hp.eps_tau == (target.contains(tau) ? -1 : 1));
        CHECK(hp.eps_rho == (target.contains(rho) ? -1 : 1));
        CHECK(classify(moved, 4) == classify(phi_X(target), 4));
      } while (std::next_permutation(p.begin() + 1, p.end()));
      for (const auto& v : phi.values()) CHECK((v == CycScalar(1) || v == CycScalar(-1)));
      for (unsigned c = 0; c < 8; ++c) CHECK(phi * phi_X(KleinSubset{c}) == phi_X(KleinSubset{b ^ c}));
    }
  }

  TEST_CASE("h_a and g_b") {
    const CycScalar b(5), a(Rational(2, 3));
    CHECK(g_b(b).at({{sigma, tau, sigma}}) == b);
    CHECK(g_b(b).at({{tau, sigma, tau}}) == b.inverse());
    CHECK(h_a(a).at({{tau, sigma, sigma}}) == a);
    CHECK(h_a(a).at({{sigma, sigma, tau}}) == a.inverse());
    CHECK(h_a(1) == phi_X(KleinSubset{}));
    CHECK(g_b(1) == phi_X(KleinSubset{}));
    CHECK(is_happy(h_a(a)));
    CHECK(is_happy(g_b(b)));
    CHECK(oracle::naive_cocycle3(h_a(a) * g_b(b)));
    CHECK_THROWS_AS(h_a(CycScalar()), PreconditionError);
    CHECK_THROWS_AS(g_b(CycScalar()), PreconditionError);
  }

  TEST_CASE("automorphisms preserve cocycles and happiness") {
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        const Cochain phi = h_a(root_of_unity(4, j)) * g_b(root_of_unity(4, k));
        std::array<std::size_t, 4> p = {e, sigma, tau, rho};
        do {
          const Cochain moved = relabel(phi, p);
          CHECK(oracle::naive_cocycle3(moved));
          CHECK(is_happy(moved));
        } while (std::next_permutation(p.begin() + 1, p.end()));
      }
  }

  TEST_CASE("happy test detects unhappy coboundaries") {
    Cochain g = Cochain::from_function(klein(), 2, [](std::span<const std::size_t>) { return CycScalar(1); });
    g.set({{sigma, tau}}, CycScalar(2));
    const Cochain d = delta2(g);
    CHECK(oracle::naive_delta2(g, sigma, tau, rho) != oracle::naive_delta2(g, tau, sigma, rho));
    CHECK_FALSE(is_happy(d));
  }

  TEST_CASE("reconstruct") {
    HappyParams hb;
    hb.b = CycScalar(7);
    CHECK(reconstruct(hb).at({{rho, sigma, rho}}) == CycScalar(7));
    HappyParams ha;
    ha.a = CycScalar(7);
    CHECK(reconstruct(ha).at({{rho, rho, sigma}}) == CycScalar(Rational(1, 7)));
    HappyParams st;
    st.eps_sigma = st.eps_tau = -1;
    CHECK(reconstruct(st) == phi_X(KleinSubset{KleinSubset::sigma | KleinSubset::tau}));
    CHECK(st.p() == 1);

    // All epsilon choices and (a, b) in mu_4 x mu_4, plus random cyclotomic parameters.
    std::vector<std::pair<CycScalar, CycScalar>> ab;
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) ab.emplace_back(root_of_unity(4, j), root_of_unity(4, k));
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> d(1, 9), z(0, 11);
    for (int t = 0; t < 20; ++t)
      ab.emplace_back(CycScalar(d(rng) + 1) + root_of_unity(12, z(rng)), CycScalar(Rational(d(rng), d(rng))) * root_of_unity(3, z(rng)));
    for (unsigned bits = 0; bits < 8; ++bits)
      for (const auto& [a, b] : ab) {
        HappyParams hp;
        hp.eps_sigma = bits & 1 ? -1 : 1;
        hp.eps_tau = bits & 2 ? -1 : 1;
        hp.eps_rho = bits & 4 ? -1 : 1;
        hp.a = a;
        hp.b = b;
        const Cochain phi = reconstruct(hp);
        REQUIRE(is_cocycle3(phi));
        CHECK(is_happy(phi));
        CHECK(all_orderings(phi));
        const HappyParams back = happy_params(phi);
        CHECK(back.eps_sigma == hp.eps_sigma);
        CHECK(back.eps_tau == hp.eps_tau);
        CHECK(back.eps_rho == hp.eps_rho);
        CHECK(back.a == a);
        CHECK(back.b == b);
        CHECK(reconstruct(back) == phi);
        // Unique factorization phi_X h_a g_b.
        CHECK(phi == phi_X(KleinSubset{bits}) * h_a(a) * g_b(b));
        const auto [p, q] = distinct_triple_products(phi);
        CHECK(p == CycScalar(hp.p()));
        CHECK(q == CycScalar(hp.p()));
      }
  }

  TEST_CASE("happify") {
    std::mt19937 rng(12);
    for (int t = 0; t < 40; ++t) {
      const KleinSubset x{static_cast<unsigned>(t % 8)};
      const Cochain phi = phi_X(x) * delta2(oracle::random_mu2(rng, klein(), 4));
      REQUIRE(is_normalized3(phi));
      const Happified h = happify(phi);
      CHECK(is_happy(h.phi));
      CHECK(h.phi == phi * delta2(h.witness));
      const HappyParams hp = happy_params(h.phi);
      CHECK(hp.eps_sigma == (x.contains(sigma) ? -1 : 1));
      CHECK(hp.eps_tau == (x.contains(tau) ? -1 : 1));
      CHECK(hp.eps_rho == (x.contains(rho) ? -1 : 1));
      const auto [p, q] = distinct_triple_products(phi);
      CHECK(p == CycScalar(hp.p()));
      CHECK(q == CycScalar(hp.p()));
      CHECK(all_orderings(phi));
    }
    const Cochain happy = phi_X(kTau) * g_b(CycScalar::i());
    CHECK(happify(happy).phi == happy);
    Cochain shifted = Cochain::from_function(klein(), 2, [](std::span<const std::size_t>) { return CycScalar(1); });
    shifted.set({{sigma, e}}, CycScalar(3));
    REQUIRE_FALSE(is_normalized3(delta2(shifted)));
    CHECK_THROWS_AS(happify(delta2(shifted)), PreconditionError);
  }

  TEST_CASE("classification") {
    auto cls = [](const Cochain& phi) { return classify(phi, 4); };
    CHECK(cls(g_b(4)).eps == std::array{1, 1, 1});
    CHECK(cls(g_b(4)).b_class == SquareClass::trivial);
    CHECK(cls(g_b(CycScalar::i())).b_class == SquareClass::nontrivial);
    CHECK_FALSE(is_coboundary_mu(g_b(CycScalar::i()), 4));
    for (const CycScalar& a : {CycScalar(2), CycScalar(-1), CycScalar(Rational(1, 3)), CycScalar::i()}) {
      const auto c = cls(h_a(a) * phi_X(KleinSubset{KleinSubset::tau | KleinSubset::rho}));
      CHECK(c.eps == std::array{1, -1, -1});
      CHECK(c.b_class == SquareClass::trivial);
    }
    const auto c9 = cls(h_a(3) * g_b(9));
    CHECK(c9.eps == std::array{1, 1, 1});
    CHECK(c9.b_class == SquareClass::trivial);
    CHECK(cls(g_b(CycScalar(1) + CycScalar::i())).b_class == SquareClass::undecided);
    CHECK(classify(g_b(2), 8).b_class == SquareClass::trivial);
    CHECK(classify(g_b(2), 4).b_class == SquareClass::nontrivial);

    std::mt19937 rng(31);
    for (int t = 0; t < 50; ++t) {
      const Cochain base = phi_X(KleinSubset{static_cast<unsigned>(t % 8)}) * g_b(root_of_unity(4, t % 4));
      const Cochain moved = base * delta2(oracle::random_mu2(rng, klein(), 4));
      CHECK(cls(moved) == cls(base));
      // Equal classes are cohomologous, unequal are not.
      const Cochain other = phi_X(KleinSubset{static_cast<unsigned>((t * 5) % 8)}) * g_b(root_of_unity(4, (t / 4) % 4));
      CHECK((cls(base) == cls(other)) == is_coboundary_mu(base * other.inverse(), 4).has_value());
    }
    Cochain bad = phi_X(kSigma);
    bad.set({{sigma, tau, tau}}, CycScalar(5));
    CHECK_THROWS_AS(classify(bad, 4), PreconditionError);
  }

  TEST_CASE("explicit coboundary witnesses") {
    const CycScalar a(Rational(-5, 2)), d = CycScalar(1) + CycScalar::i();
    CHECK(delta2(coboundary_witness_h(a)).at({{tau, sigma, sigma}}) == a);
    CHECK(delta2(coboundary_witness_g(d)).at({{sigma, tau, sigma}}) == d * d);
    for (const auto& v : delta2(coboundary_witness_g(1)).values()) CHECK(v.is_one());
    CHECK(delta2(coboundary_witness_h(a)) == h_a(a));
    CHECK(delta2(coboundary_witness_g(d)) == g_b(d * d));
    CHECK(is_normalized2(coboundary_witness_h(a)));
    CHECK_THROWS_AS(coboundary_witness_h(CycScalar()), PreconditionError);
    CHECK_THROWS_AS(coboundary_witness_g(CycScalar()), PreconditionError);
  }

  TEST_CASE("transport from C2") {
    const Cochain c2 = cyclic_phi_q(2, -1);
    CHECK(transport_t(1, c2) == phi_X(KleinSubset{KleinSubset::tau | KleinSubset::rho}));
    CHECK(transport_t(2, c2) == phi_X(KleinSubset{KleinSubset::sigma | KleinSubset::rho}));
    CHECK(transport_t(3, c2) == h_a(-1) * g_b(-1) * phi_X(KleinSubset{KleinSubset::sigma | KleinSubset::tau}));
    // The projections kill sigma, tau, rho respectively.
    CHECK(klein_projection(1) == std::array<std::size_t, 4>{0, 0, 1, 1});
    CHECK(klein_projection(2) == std::array<std::size_t, 4>{0, 1, 0, 1});
    CHECK(klein_projection(3) == std::array<std::size_t, 4>{0, 1, 1, 0});
    for (int i = 1; i <= 3; ++i) CHECK(oracle::naive_cocycle3(transport_t(i, c2)));
    CHECK_THROWS_AS(transport_t(1, phi_X(kSigma)), PreconditionError);
    CHECK_THROWS_AS(transport_t(4, c2), PreconditionError);
  }
}
