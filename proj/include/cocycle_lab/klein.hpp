#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "cocycle_lab/cochains.hpp"

namespace cocycle_lab {

/// Subset of {sigma, tau, rho} as a bit mask.
struct KleinSubset {
  static constexpr unsigned sigma = 1, tau = 2, rho = 4;
  unsigned bits = 0;

  bool contains(std::size_t element) const { return element != kl::e && (bits >> (element - 1)) & 1u; }
  std::size_t size() const { return static_cast<std::size_t>(__builtin_popcount(bits)); }
  friend KleinSubset operator^(KleinSubset a, KleinSubset b) { return {a.bits ^ b.bits}; }
  friend bool operator==(KleinSubset, KleinSubset) = default;
};

/// "{}", "{sigma}", "{sigma,rho}", ...
std::string to_string(KleinSubset x);
/// Parses a comma-separated list of sigma/tau/rho (empty string gives the empty set).
KleinSubset parse_klein_subset(const std::string& text);

struct HappyParams {
  int eps_sigma = 1, eps_tau = 1, eps_rho = 1;
  CycScalar a{1}, b{1};

  int p() const { return eps_sigma * eps_tau * eps_rho; }
  int eps(std::size_t element) const;
};

/// The 2-cochain family used by every explicit coboundary witness.
struct KleinTwoCochainParams {
  CycScalar a1{1}, a2{1}, a3{1};  // (s,s), (t,t), (r,r)
  CycScalar b1{1}, b2{1}, b3{1};  // (s,t), (t,r), (r,s)
  CycScalar b4{1}, b5{1}, b6{1};  // (t,s), (s,r), (r,t)
  CycScalar c{1};                 // (x,e) and (e,x)
};
Cochain klein_two_cochain(const KleinTwoCochainParams& p);

/// The happy normalized cocycle with the given parameters.
Cochain reconstruct(const HappyParams& params);

Cochain phi_X(KleinSubset x);
Cochain h_a(const CycScalar& a);
Cochain g_b(const CycScalar& b);

bool is_happy(const Cochain& phi);
HappyParams happy_params(const Cochain& phi);

struct Happified {
  Cochain phi;      // phi * delta2(witness)
  Cochain witness;
};
Happified happify(const Cochain& phi);

/// The two products of phi over the cyclic orbits of pairwise-distinct triples.
std::pair<CycScalar, CycScalar> distinct_triple_products(const Cochain& phi);

struct KleinCohomologyClass {
  std::array<int, 3> eps{1, 1, 1};
  SquareClass b_class = SquareClass::trivial;
  CycScalar b{1};

  // Compares invariants only; b itself is a representative.
  friend bool operator==(const KleinCohomologyClass& x, const KleinCohomologyClass& y) {
    return x.eps == y.eps && x.b_class == y.b_class;
  }
};
std::string to_string(SquareClass c);

/// Cohomology class of a 3-cocycle on the Klein group over Q(zeta_conductor).
KleinCohomologyClass classify(const Cochain& phi, int conductor);

Cochain coboundary_witness_h(const CycScalar& a);
Cochain coboundary_witness_g(const CycScalar& d);

/// The projection C2 x C2 -> C2 killing sigma (i=1), tau (i=2) or rho (i=3),
/// as a table of C2 indices for e, sigma, tau, rho.
std::array<std::size_t, 4> klein_projection(int i);

/// Precomposition of a cochain on `source` with a group map given on indices.
Cochain pullback(const Cochain& c, const FiniteAbelianGroup& target, std::span<const std::size_t> map);

/// t_i(phi)(x,y,z) = phi(pi_i x, pi_i y, pi_i z) for a cochain on C2.
Cochain transport_t(int i, const Cochain& phi);

}  // namespace cocycle_lab
