#include "cocycle_lab/cohomology.hpp"

#include <numeric>

namespace cocycle_lab {

ModMatrix boundary_matrix(const FiniteAbelianGroup& g, std::size_t n, std::int64_t m) {
  if (n == 0) throw PreconditionError("boundary matrix needs degree at least 1");
  const std::size_t rows = tuple_count(g, n + 1);
  const std::size_t cols = tuple_count(g, n);
  if (rows * cols > 50'000'000) throw PreconditionError("boundary matrix exceeds the supported size");
  const std::size_t base = g.size();
  ModMatrix mat(rows, cols, m);
  std::vector<std::size_t> face(n);
  std::size_t row = 0;
  for (const auto& x : tuples(g, n + 1)) {
    std::span<const std::size_t> xs(x);
    mat.add(row, flatten_tuple(xs.subspan(1), base), 1);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < i; ++k) face[k] = x[k];
      face[i] = g.mul_index(x[i], x[i + 1]);
      for (std::size_t k = i + 2; k <= n; ++k) face[k - 1] = x[k];
      mat.add(row, flatten_tuple(face, base), i % 2 == 0 ? -1 : 1);
    }
    mat.add(row, flatten_tuple(xs.first(n), base), n % 2 == 0 ? -1 : 1);
    ++row;
  }
  return mat;
}

std::vector<std::int64_t> encode_mu(const Cochain& c, std::int64_t m) {
  std::vector<std::int64_t> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    auto k = as_root_exponent(c[i], static_cast<int>(m));
    if (!k) throw UndecidableError("undecidable in mu_" + std::to_string(m) + " backend: value " + c[i].to_string());
    out[i] = *k;
  }
  return out;
}

Cochain decode_mu(const FiniteAbelianGroup& g, std::size_t degree, const std::vector<std::int64_t>& exps,
                  std::int64_t m) {
  Cochain c(g, degree);
  if (exps.size() != c.size()) throw PreconditionError("exponent vector has wrong length");
  for (std::size_t i = 0; i < exps.size(); ++i) c.set_flat(i, root_of_unity(static_cast<int>(m), exps[i]));
  return c;
}

std::optional<Cochain> is_coboundary_mu(const Cochain& phi, std::int64_t m) {
  if (phi.degree() < 2) throw PreconditionError("coboundary test needs degree at least 2");
  auto b = encode_mu(phi, m);
  auto v = solve_mod(boundary_matrix(phi.group(), phi.degree() - 1, m), b);
  if (!v) return std::nullopt;
  return decode_mu(phi.group(), phi.degree() - 1, *v, m);
}

std::uint64_t CohomologyReport::order() const {
  std::uint64_t o = 1;
  for (auto f : factors) o *= static_cast<std::uint64_t>(f);
  return o;
}

CohomologyReport cohomology(const FiniteAbelianGroup& g, std::size_t n, std::int64_t m) {
  if (n == 0) throw PreconditionError("cohomology degree must be at least 1");
  CohomologyReport report{m, {}, {}};
  if (m == 1) return report;

  // ker(Delta_n) = V * (prod over columns of (m/g_i) Z/m), g_i = gcd(d_i, m).
  SmithForm top = smith_form(boundary_matrix(g, n, m), {.track_left = false, .track_right = true});
  const std::size_t cols = tuple_count(g, n);
  std::vector<std::size_t> kernel_cols;
  std::vector<std::int64_t> kernel_orders;
  for (std::size_t i = 0; i < cols; ++i) {
    std::int64_t d = i < top.diagonal.size() ? top.diagonal[i] : m;
    std::int64_t order = std::gcd(d, m);
    if (order > 1) kernel_cols.push_back(i), kernel_orders.push_back(order);
  }
  const std::size_t k = kernel_cols.size();
  if (k == 0) return report;

  // Relations: order relations plus images of Delta_{n-1} in kernel coordinates.
  std::size_t image_gens = n >= 2 ? tuple_count(g, n - 1) : 0;
  ModMatrix pres(k, k + image_gens, m);
  for (std::size_t j = 0; j < k; ++j) pres.set(j, j, kernel_orders[j]);
  if (image_gens > 0) {
    ModMatrix lower = boundary_matrix(g, n - 1, m);
    ModMatrix w = top.Vinv * lower;
    for (std::size_t c = 0; c < image_gens; ++c)
      for (std::size_t j = 0; j < k; ++j) {
        std::int64_t step = m / kernel_orders[j];
        std::int64_t coord = w(kernel_cols[j], c);
        if (coord % step != 0) throw std::logic_error("image is not contained in the kernel");
        pres.set(j, k + c, (coord / step) % kernel_orders[j]);
      }
  }

  SmithForm low = smith_form(pres, {.track_left = true, .track_right = false});
  std::vector<std::int64_t> cyclic_orders;
  std::vector<std::vector<std::int64_t>> cyclic_gens;  // kernel-coordinate vectors
  for (std::size_t j = 0; j < k; ++j) {
    std::int64_t order = std::gcd(low.diagonal[j], m);
    if (order == 1) continue;
    cyclic_orders.push_back(order);
    cyclic_gens.push_back(low.Uinv.column(j));
  }

  auto to_cochain = [&](const std::vector<std::int64_t>& t) {
    std::vector<std::int64_t> w(cols, 0);
    for (std::size_t j = 0; j < k; ++j) w[kernel_cols[j]] = (m / kernel_orders[j]) * t[j] % m;
    return top.V * w;
  };

  InvariantFactorization inv = invariant_factors(cyclic_orders);
  report.factors = inv.factors;
  for (const auto& combo : inv.combos) {
    std::vector<std::int64_t> v(cols, 0);
    for (auto [src, mult] : combo) {
      auto part = to_cochain(cyclic_gens[src]);
      for (std::size_t i = 0; i < cols; ++i) v[i] = (v[i] + mult * part[i]) % m;
    }
    report.generators.push_back(decode_mu(g, n, v, m));
  }
  return report;
}

}  // namespace cocycle_lab
