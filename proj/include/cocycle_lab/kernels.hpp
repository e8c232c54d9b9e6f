#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cocycle_lab/cochains.hpp"

// Exhaustive-check kernels. Each kernel has an OpenMP implementation and a
// plain serial reference; both return identical results (the first failure
// is always the lexicographically smallest one).
namespace cocycle_lab::kernels {

enum class Exec { serial, parallel };

/// Flat index of the first quadruple violating the 3-cocycle identity.
std::optional<std::size_t> first_cocycle3_failure(const Cochain& phi, Exec exec);

/// Same test on a mu_m-valued cochain given by exponents.
std::optional<std::size_t> first_cocycle3_failure_mu(const FiniteAbelianGroup& g, std::span<const std::int64_t> phi,
                                                     std::int64_t m, Exec exec);

struct HexagonFailure {
  std::size_t flat;  // flat index of (x, y, z)
  int hexagon;       // 1 or 2
  friend bool operator==(const HexagonFailure&, const HexagonFailure&) = default;
};

/// First triple violating either hexagon identity, first hexagon checked first.
std::optional<HexagonFailure> first_hexagon_failure(const Cochain& phi, const Cochain& r, Exec exec);

std::optional<HexagonFailure> first_hexagon_failure_mu(const FiniteAbelianGroup& g, std::span<const std::int64_t> phi,
                                                       std::span<const std::int64_t> r, std::int64_t m, Exec exec);

/// Every mu_m-valued R with R(e,-) = R(-,e) = 1 solving both hexagons for phi,
/// as exponent tables in candidate order. There are m^((|G|-1)^2) candidates.
std::vector<std::vector<std::int64_t>> hexagon_solutions_mu(const FiniteAbelianGroup& g,
                                                            std::span<const std::int64_t> phi, std::int64_t m,
                                                            Exec exec);

/// Number of candidates the search above enumerates; throws past 10^8.
std::uint64_t hexagon_candidate_count(const FiniteAbelianGroup& g, std::int64_t m);

}  // namespace cocycle_lab::kernels
