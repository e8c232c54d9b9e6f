#pragma once

#include <array>
#include <string>
#include <vector>

#include "cocycle_lab/groups.hpp"

// Transcriptions of the published classification tables, kept as printed.
namespace cocycle_lab::reference {

/// Cells of a braiding table, in printed row order.
inline constexpr std::array<std::array<std::size_t, 2>, 9> kBraidingCells = {{
    {kl::sigma, kl::sigma}, {kl::tau, kl::tau}, {kl::rho, kl::rho},
    {kl::sigma, kl::tau}, {kl::tau, kl::sigma}, {kl::sigma, kl::rho},
    {kl::rho, kl::sigma}, {kl::tau, kl::rho}, {kl::rho, kl::tau},
}};

struct FormColumn {
  std::string label;
  std::array<std::string, 3> q;  // Q(sigma), Q(tau), Q(rho)
};

struct BraidingColumn {
  std::string label;
  std::array<std::string, 9> r;  // indexed like kBraidingCells; all other cells are 1
};

struct BraidingTable {
  std::string name;
  unsigned underlying;  // KleinSubset bits of the underlying cocycle
  std::vector<BraidingColumn> columns;
};

/// Coefficient param^power in front of a group element.
struct ProductCell {
  int power;
  std::size_t element;
};

/// (1/4) param^power left (x) right.
struct DeltaTerm {
  int power;
  std::size_t left, right;
};

struct WeakHopfTable {
  std::string name;
  std::array<std::array<ProductCell, 4>, 4> product;  // [row][column]
  std::array<std::vector<DeltaTerm>, 4> delta;
};

struct ReferenceData {
  std::vector<FormColumn> forms;         // 32 columns
  std::vector<BraidingTable> braidings;  // trivial, sigma_tau, sigma_rho, tau_rho
  WeakHopfTable klein_h;                 // parameter a
  WeakHopfTable klein_g;                 // parameter d
};

const ReferenceData& reference_data();

}  // namespace cocycle_lab::reference
