#include "cocycle_lab/kernels.hpp"

#include <omp.h>

#include <limits>

namespace cocycle_lab::kernels {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Smallest i in [0, count) with fails(i), or kNone.
template <class Pred>
std::size_t first_index(std::size_t count, Exec exec, const Pred& fails) {
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < count; ++i)
      if (fails(i)) return i;
    return kNone;
  }
  std::size_t first = kNone;
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(static) reduction(min : first)
  for (std::int64_t i = 0; i < n; ++i) {
    auto idx = static_cast<std::size_t>(i);
    if (idx < first && fails(idx)) first = idx;
  }
  return first;
}

std::optional<std::size_t> as_optional(std::size_t v) {
  if (v == kNone) return std::nullopt;
  return v;
}

struct Quad {
  std::size_t x, y, z, t;
};

Quad unflatten4(std::size_t flat, std::size_t n) {
  Quad q;
  q.t = flat % n, flat /= n;
  q.z = flat % n, flat /= n;
  q.y = flat % n, flat /= n;
  q.x = flat;
  return q;
}

std::size_t idx3(std::size_t n, std::size_t a, std::size_t b, std::size_t c) { return (a * n + b) * n + c; }
std::size_t idx2(std::size_t n, std::size_t a, std::size_t b) { return a * n + b; }

std::optional<HexagonFailure> decode_hexagon(std::size_t v) {
  if (v == kNone) return std::nullopt;
  return HexagonFailure{v / 2, static_cast<int>(v % 2) + 1};
}

}  // namespace

std::optional<std::size_t> first_cocycle3_failure(const Cochain& phi, Exec exec) {
  const auto& g = phi.group();
  const std::size_t n = g.size();
  const auto& v = phi.values();
  return as_optional(first_index(n * n * n * n, exec, [&](std::size_t flat) {
    auto [x, y, z, t] = unflatten4(flat, n);
    std::size_t xy = g.mul_index(x, y), yz = g.mul_index(y, z), zt = g.mul_index(z, t);
    CycScalar lhs = v[idx3(n, y, z, t)] * v[idx3(n, x, yz, t)] * v[idx3(n, x, y, z)];
    CycScalar rhs = v[idx3(n, xy, z, t)] * v[idx3(n, x, y, zt)];
    return !(lhs == rhs);
  }));
}

std::optional<std::size_t> first_cocycle3_failure_mu(const FiniteAbelianGroup& g, std::span<const std::int64_t> phi,
                                                     std::int64_t m, Exec exec) {
  const std::size_t n = g.size();
  if (phi.size() != n * n * n) throw PreconditionError("exponent table has wrong size");
  return as_optional(first_index(n * n * n * n, exec, [&](std::size_t flat) {
    auto [x, y, z, t] = unflatten4(flat, n);
    std::size_t xy = g.mul_index(x, y), yz = g.mul_index(y, z), zt = g.mul_index(z, t);
    std::int64_t d = phi[idx3(n, y, z, t)] + phi[idx3(n, x, yz, t)] + phi[idx3(n, x, y, z)] -
                     phi[idx3(n, xy, z, t)] - phi[idx3(n, x, y, zt)];
    return d % m != 0;
  }));
}

std::optional<HexagonFailure> first_hexagon_failure(const Cochain& phi, const Cochain& r, Exec exec) {
  const auto& g = phi.group();
  if (!(r.group() == g) || phi.degree() != 3 || r.degree() != 2)
    throw PreconditionError("hexagon test needs a 3-cochain and a 2-cochain on one group");
  const std::size_t n = g.size();
  const auto& p = phi.values();
  const auto& rv = r.values();
  return decode_hexagon(first_index(2 * n * n * n, exec, [&](std::size_t code) {
    std::size_t flat = code / 2;
    std::size_t z = flat % n, y = (flat / n) % n, x = flat / (n * n);
    if (code % 2 == 0) {
      CycScalar lhs = rv[idx2(n, g.mul_index(x, y), z)] * p[idx3(n, x, z, y)];
      CycScalar rhs = p[idx3(n, x, y, z)] * rv[idx2(n, x, z)] * p[idx3(n, z, x, y)] * rv[idx2(n, y, z)];
      return !(lhs == rhs);
    }
    CycScalar lhs = p[idx3(n, x, y, z)] * rv[idx2(n, x, g.mul_index(y, z))] * p[idx3(n, y, z, x)];
    CycScalar rhs = rv[idx2(n, x, y)] * p[idx3(n, y, x, z)] * rv[idx2(n, x, z)];
    return !(lhs == rhs);
  }));
}

namespace {

bool hexagon_fails_mu(const FiniteAbelianGroup& g, std::span<const std::int64_t> p, std::span<const std::int64_t> r,
                      std::int64_t m, std::size_t code) {
  const std::size_t n = g.size();
  std::size_t flat = code / 2;
  std::size_t z = flat % n, y = (flat / n) % n, x = flat / (n * n);
  std::int64_t d;
  if (code % 2 == 0)
    d = r[idx2(n, g.mul_index(x, y), z)] + p[idx3(n, x, z, y)] - p[idx3(n, x, y, z)] - r[idx2(n, x, z)] -
        p[idx3(n, z, x, y)] - r[idx2(n, y, z)];
  else
    d = p[idx3(n, x, y, z)] + r[idx2(n, x, g.mul_index(y, z))] + p[idx3(n, y, z, x)] - r[idx2(n, x, y)] -
        p[idx3(n, y, x, z)] - r[idx2(n, x, z)];
  return d % m != 0;
}

}  // namespace

std::optional<HexagonFailure> first_hexagon_failure_mu(const FiniteAbelianGroup& g, std::span<const std::int64_t> phi,
                                                       std::span<const std::int64_t> r, std::int64_t m, Exec exec) {
  const std::size_t n = g.size();
  if (phi.size() != n * n * n || r.size() != n * n) throw PreconditionError("exponent tables have wrong size");
  return decode_hexagon(
      first_index(2 * n * n * n, exec, [&](std::size_t code) { return hexagon_fails_mu(g, phi, r, m, code); }));
}

std::uint64_t hexagon_candidate_count(const FiniteAbelianGroup& g, std::int64_t m) {
  std::uint64_t count = 1;
  const std::size_t free = (g.size() - 1) * (g.size() - 1);
  for (std::size_t i = 0; i < free; ++i) {
    count *= static_cast<std::uint64_t>(m);
    if (count > 100'000'000) throw PreconditionError("R-matrix search exceeds 10^8 candidates");
  }
  return count;
}

std::vector<std::vector<std::int64_t>> hexagon_solutions_mu(const FiniteAbelianGroup& g,
                                                            std::span<const std::int64_t> phi, std::int64_t m,
                                                            Exec exec) {
  const std::size_t n = g.size();
  if (phi.size() != n * n * n) throw PreconditionError("exponent table has wrong size");
  const std::uint64_t count = hexagon_candidate_count(g, m);
  const std::size_t checks = 2 * n * n * n;

  auto candidate = [&](std::uint64_t c, std::vector<std::int64_t>& r) {
    for (std::size_t x = n - 1; x >= 1; --x)
      for (std::size_t y = n - 1; y >= 1; --y) {
        r[idx2(n, x, y)] = static_cast<std::int64_t>(c % static_cast<std::uint64_t>(m));
        c /= static_cast<std::uint64_t>(m);
      }
  };
  auto solves = [&](const std::vector<std::int64_t>& r) {
    for (std::size_t code = 0; code < checks; ++code)
      if (hexagon_fails_mu(g, phi, r, m, code)) return false;
    return true;
  };

  std::vector<std::vector<std::int64_t>> out;
  if (exec == Exec::serial) {
    std::vector<std::int64_t> r(n * n, 0);
    for (std::uint64_t c = 0; c < count; ++c) {
      candidate(c, r);
      if (solves(r)) out.push_back(r);
    }
    return out;
  }

  const int threads = omp_get_max_threads();
  std::vector<std::vector<std::vector<std::int64_t>>> found(static_cast<std::size_t>(threads));
#pragma omp parallel num_threads(threads)
  {
    auto& mine = found[static_cast<std::size_t>(omp_get_thread_num())];
    std::vector<std::int64_t> r(n * n, 0);
    // Static contiguous chunks keep each thread's hits in candidate order.
#pragma omp for schedule(static)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(count); ++c) {
      candidate(static_cast<std::uint64_t>(c), r);
      if (solves(r)) mine.push_back(r);
    }
  }
  for (auto& part : found)
    for (auto& r : part) out.push_back(std::move(r));
  return out;
}

}  // namespace cocycle_lab::kernels
