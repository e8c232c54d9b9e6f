#include "cocycle_lab/reference_tables.hpp"

namespace cocycle_lab::reference {

namespace {

using namespace kl;

std::vector<FormColumn> forms() {
  const std::array<const char*, 8> prefix = {"", "A", "B", "C", "AB", "AC", "BC", "ABC"};
  const std::array<std::array<std::array<const char*, 8>, 3>, 4> rows = {{
      {{{"1", "1", "1", "-1", "1", "-1", "-1", "-1"},
        {"1", "1", "-1", "1", "-1", "1", "-1", "-1"},
        {"1", "-1", "1", "1", "-1", "-1", "1", "-1"}}},
      {{{"i", "i", "i", "-i", "i", "-i", "-i", "-i"},
        {"i", "i", "-i", "i", "-i", "i", "-i", "-i"},
        {"1", "-1", "1", "1", "-1", "-1", "1", "-1"}}},
      {{{"i", "i", "i", "-i", "i", "-i", "i", "-i"},
        {"1", "1", "-1", "1", "-1", "1", "-1", "-1"},
        {"i", "-i", "i", "i", "-i", "-i", "i", "-i"}}},
      {{{"1", "1", "1", "-1", "1", "-1", "-1", "-1"},
        {"i", "i", "-i", "i", "-i", "i", "-i", "-i"},
        {"i", "-i", "i", "i", "-i", "-i", "i", "-i"}}},
  }};
  const std::array<const char*, 4> suffix = {"", "E1", "E2", "E3"};
  std::vector<FormColumn> out;
  for (std::size_t t = 0; t < 4; ++t)
    for (std::size_t c = 0; c < 8; ++c) {
      std::string label = std::string(prefix[c]) + suffix[t];
      if (label.empty()) label = "I";
      out.push_back({label, {rows[t][0][c], rows[t][1][c], rows[t][2][c]}});
    }
  return out;
}

BraidingTable braiding_table(std::string name, unsigned underlying, const std::array<const char*, 8>& labels,
                             const std::array<std::array<const char*, 8>, 9>& rows) {
  BraidingTable t{std::move(name), underlying, {}};
  for (std::size_t c = 0; c < 8; ++c) {
    BraidingColumn col{labels[c], {}};
    for (std::size_t r = 0; r < 9; ++r) col.r[r] = rows[r][c];
    t.columns.push_back(std::move(col));
  }
  return t;
}

std::vector<BraidingTable> braidings() {
  std::vector<BraidingTable> out;
  out.push_back(braiding_table("trivial", 0, {"I", "A", "B", "C", "AB", "AC", "BC", "ABC"},
                               {{{"1", "1", "1", "-1", "1", "-1", "-1", "-1"},
                                 {"1", "1", "-1", "1", "-1", "1", "-1", "-1"},
                                 {"1", "-1", "1", "1", "-1", "-1", "1", "-1"},
                                 {"1", "1", "1", "1", "1", "1", "1", "1"},
                                 {"1", "-1", "-1", "-1", "1", "1", "1", "-1"},
                                 {"1", "1", "1", "-1", "1", "-1", "-1", "-1"},
                                 {"1", "-1", "-1", "1", "1", "-1", "-1", "1"},
                                 {"1", "-1", "1", "-1", "-1", "1", "-1", "1"},
                                 {"1", "1", "-1", "1", "-1", "1", "-1", "-1"}}}));
  out.push_back(braiding_table("sigma_tau", 3, {"E1", "AE1", "BE1", "CE1", "ABE1", "ACE1", "BCE1", "ABCE1"},
                               {{{"i", "i", "i", "-i", "i", "-i", "-i", "-i"},
                                 {"i", "i", "-i", "i", "-i", "i", "-i", "-i"},
                                 {"1", "-1", "1", "1", "-1", "-1", "1", "-1"},
                                 {"1", "1", "1", "1", "1", "1", "1", "1"},
                                 {"-1", "1", "1", "1", "-1", "-1", "-1", "1"},
                                 {"i", "i", "i", "-i", "i", "-i", "-i", "-i"},
                                 {"-i", "i", "i", "-i", "-i", "i", "i", "-i"},
                                 {"-i", "i", "-i", "i", "i", "-i", "i", "-i"},
                                 {"i", "i", "-i", "i", "-i", "i", "-i", "-i"}}}));
  out.push_back(braiding_table("sigma_rho", 5, {"E2", "AE2", "BE2", "CE2", "ABE2", "ACE2", "BCE2", "ABCE2"},
                               {{{"i", "i", "i", "-i", "i", "-i", "-i", "-i"},
                                 {"1", "1", "-1", "1", "-1", "1", "-1", "-1"},
                                 {"i", "-i", "i", "i", "-i", "-i", "i", "-i"},
                                 {"1", "1", "1", "1", "1", "1", "1", "1"},
                                 {"1", "-1", "-1", "-1", "1", "1", "1", "-1"},
                                 {"i", "i", "i", "-i", "i", "-i", "-i", "-i"},
                                 {"i", "-i", "-i", "i", "i", "-i", "-i", "i"},
                                 {"1", "-1", "1", "-1", "-1", "1", "-1", "1"},
                                 {"1", "1", "-1", "1", "-1", "1", "-1", "-1"}}}));
  out.push_back(braiding_table("tau_rho", 6, {"E3", "AE3", "BE3", "CE3", "ABE3", "ACE3", "BCE3", "ABCE3"},
                               {{{"1", "1", "1", "-1", "1", "-1", "-1", "-1"},
                                 {"i", "i", "-i", "i", "-i", "i", "-i", "-i"},
                                 {"i", "-i", "i", "i", "-i", "-i", "i", "-i"},
                                 {"1", "1", "1", "1", "1", "1", "1", "1"},
                                 {"1", "-1", "-1", "-1", "1", "1", "1", "-1"},
                                 {"1", "1", "1", "-1", "1", "-1", "-1", "-1"},
                                 {"1", "-1", "-1", "1", "1", "-1", "-1", "1"},
                                 {"i", "-i", "i", "-i", "-i", "i", "-i", "i"},
                                 {"i", "i", "-i", "i", "-i", "i", "-i", "-i"}}}));
  return out;
}

WeakHopfTable klein_h() {
  WeakHopfTable t;
  t.name = "klein_h";
  t.product = {{
      {{{0, e}, {0, sigma}, {0, tau}, {0, rho}}},
      {{{0, sigma}, {-1, e}, {0, rho}, {0, tau}}},
      {{{0, tau}, {0, rho}, {-1, e}, {0, sigma}}},
      {{{0, rho}, {0, tau}, {0, sigma}, {-1, e}}},
  }};
  t.delta[e] = {{0, e, e}, {1, sigma, sigma}, {1, tau, tau}, {1, rho, rho}};
  t.delta[sigma] = {{0, e, sigma}, {0, sigma, e}, {0, tau, rho}, {0, rho, tau}};
  t.delta[tau] = {{0, e, tau}, {0, tau, e}, {0, sigma, rho}, {0, rho, sigma}};
  t.delta[rho] = {{0, e, rho}, {0, rho, e}, {0, sigma, tau}, {0, tau, sigma}};
  return t;
}

WeakHopfTable klein_g() {
  WeakHopfTable t;
  t.name = "klein_g";
  t.product = {{
      {{{0, e}, {0, sigma}, {0, tau}, {0, rho}}},
      {{{0, sigma}, {-1, e}, {0, rho}, {-1, tau}}},
      {{{0, tau}, {-1, rho}, {-1, e}, {0, sigma}}},
      {{{0, rho}, {0, tau}, {-1, sigma}, {-1, e}}},
  }};
  t.delta[e] = {{0, e, e}, {1, sigma, sigma}, {1, tau, tau}, {1, rho, rho}};
  t.delta[sigma] = {{0, e, sigma}, {0, sigma, e}, {0, tau, rho}, {1, rho, tau}};
  t.delta[tau] = {{0, e, tau}, {0, tau, e}, {1, sigma, rho}, {0, rho, sigma}};
  t.delta[rho] = {{0, e, rho}, {0, rho, e}, {0, sigma, tau}, {1, tau, sigma}};
  return t;
}

}  // namespace

const ReferenceData& reference_data() {
  static const ReferenceData data{forms(), braidings(), klein_h(), klein_g()};
  return data;
}

}  // namespace cocycle_lab::reference
