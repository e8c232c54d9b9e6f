#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cocycle_lab/cochains.hpp"
#include "cocycle_lab/modular.hpp"

namespace cocycle_lab {

/// Matrix of Delta_n acting on exponent vectors of mu_m-valued cochains:
/// Delta_n(zeta_m^v) = zeta_m^(M v). Shape |G|^(n+1) x |G|^n.
ModMatrix boundary_matrix(const FiniteAbelianGroup& g, std::size_t n, std::int64_t m);

/// Exponents of every value as a power of zeta_m; throws UndecidableError
/// when some value lies outside mu_m.
std::vector<std::int64_t> encode_mu(const Cochain& c, std::int64_t m);
Cochain decode_mu(const FiniteAbelianGroup& g, std::size_t degree, const std::vector<std::int64_t>& exps,
                  std::int64_t m);

/// A cochain g of degree n-1 with delta(g) = phi, if one exists over mu_m.
std::optional<Cochain> is_coboundary_mu(const Cochain& phi, std::int64_t m);

struct CohomologyReport {
  std::int64_t modulus;
  std::vector<std::int64_t> factors;  // invariant factors, each dividing the next
  std::vector<Cochain> generators;    // one per factor
  std::uint64_t order() const;
};

/// H^n(G, mu_m) = ker(Delta_n) / im(Delta_{n-1}) computed by Smith reduction over Z/m.
CohomologyReport cohomology(const FiniteAbelianGroup& g, std::size_t n, std::int64_t m);

}  // namespace cocycle_lab
