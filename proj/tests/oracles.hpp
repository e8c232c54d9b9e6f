#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "cocycle_lab/cochains.hpp"

// Independent reference computations used only by the tests.
namespace oracle {

using cx = std::complex<long double>;

inline cx eval(const cocycle_lab::CycScalar& x) {
  const long double t = 2 * std::numbers::pi_v<long double> / x.conductor();
  cx z(0, 0);
  for (std::size_t j = 0; j < x.coeffs().size(); ++j)
    z += static_cast<long double>(x.coeffs()[j].get_d()) * std::polar<long double>(1, t * static_cast<long double>(j));
  return z;
}

inline bool near(cx a, cx b) { return std::abs(a - b) < 1e-12L; }

inline cx root(int n, long long k) {
  return std::polar<long double>(1, 2 * std::numbers::pi_v<long double> * static_cast<long double>(k) / n);
}

// Group law on dense indices recomputed from exponent vectors.
inline std::size_t mul(const cocycle_lab::FiniteAbelianGroup& g, std::size_t x, std::size_t y) {
  return g.index_of(g.mul(g.element(x), g.element(y)));
}

// Straight transcription of the four-variable cocycle identity.
inline bool naive_cocycle3(const cocycle_lab::Cochain& f) {
  const auto& g = f.group();
  const std::size_t n = g.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t t = 0; t < n; ++t) {
          const auto lhs = f.at({{y, z, t}}) * f.at({{x, mul(g, y, z), t}}) * f.at({{x, y, z}});
          const auto rhs = f.at({{mul(g, x, y), z, t}}) * f.at({{x, y, mul(g, z, t)}});
          if (!(lhs == rhs)) return false;
        }
  return true;
}

// delta2 written directly from g(y,z) g(xy,z)^-1 g(x,yz) g(x,y)^-1.
inline cocycle_lab::CycScalar naive_delta2(const cocycle_lab::Cochain& c, std::size_t x, std::size_t y, std::size_t z) {
  const auto& g = c.group();
  return c.at({{y, z}}) * c.at({{mul(g, x, y), z}}).inverse() * c.at({{x, mul(g, y, z)}}) * c.at({{x, y}}).inverse();
}

inline cocycle_lab::Cochain random_mu2(std::mt19937& rng, const cocycle_lab::FiniteAbelianGroup& g, int m,
                                       bool normalized = true) {
  std::uniform_int_distribution<int> d(0, m - 1);
  return cocycle_lab::Cochain::from_function(g, 2, [&](std::span<const std::size_t> t) {
    if (normalized && (t[0] == 0 || t[1] == 0)) return cocycle_lab::CycScalar(1);
    return cocycle_lab::root_of_unity(m, d(rng));
  });
}

}  // namespace oracle
