#include "cocycle_lab/modular.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "cocycle_lab/groups.hpp"

namespace cocycle_lab {

ModMatrix::ModMatrix(std::size_t rows, std::size_t cols, std::int64_t modulus)
    : rows_(rows), cols_(cols), m_(modulus), data_(rows * cols, 0) {
  if (modulus < 1) throw PreconditionError("modulus must be positive");
}

ModMatrix ModMatrix::identity(std::size_t n, std::int64_t modulus) {
  ModMatrix id(n, n, modulus);
  for (std::size_t i = 0; i < n; ++i) id.set(i, i, 1);
  return id;
}

void ModMatrix::set(std::size_t r, std::size_t c, std::int64_t v) { data_[r * cols_ + c] = reduce(v); }
void ModMatrix::add(std::size_t r, std::size_t c, std::int64_t v) {
  auto& x = data_[r * cols_ + c];
  x = reduce(x + reduce(v));
}

std::vector<std::int64_t> ModMatrix::column(std::size_t c) const {
  std::vector<std::int64_t> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

std::vector<std::int64_t> ModMatrix::operator*(const std::vector<std::int64_t>& v) const {
  if (v.size() != cols_) throw PreconditionError("matrix-vector shape mismatch");
  std::vector<std::int64_t> out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::int64_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc = reduce(acc + (*this)(r, c) * reduce(v[c]));
    out[r] = acc;
  }
  return out;
}

ModMatrix ModMatrix::operator*(const ModMatrix& o) const {
  if (cols_ != o.rows_ || m_ != o.m_) throw PreconditionError("matrix product shape mismatch");
  ModMatrix out(rows_, o.cols_, m_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      std::int64_t a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) out.data_[r * o.cols_ + c] = reduce(out.data_[r * o.cols_ + c] + a * o(k, c));
    }
  return out;
}

bool ModMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::int64_t v) { return v == 0; });
}

void ModMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(data_[i * cols_ + c], data_[j * cols_ + c]);
}

void ModMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap(data_[r * cols_ + i], data_[r * cols_ + j]);
}

void ModMatrix::scale_row(std::size_t i, std::int64_t u) {
  u = reduce(u);
  for (std::size_t c = 0; c < cols_; ++c) data_[i * cols_ + c] = reduce(data_[i * cols_ + c] * u);
}

void ModMatrix::scale_col(std::size_t i, std::int64_t u) {
  u = reduce(u);
  for (std::size_t r = 0; r < rows_; ++r) data_[r * cols_ + i] = reduce(data_[r * cols_ + i] * u);
}

void ModMatrix::add_row_multiple(std::size_t dst, std::size_t src, std::int64_t k) {
  k = reduce(k);
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    std::int64_t s = data_[src * cols_ + c];
    if (s != 0) data_[dst * cols_ + c] = reduce(data_[dst * cols_ + c] + k * s);
  }
}

void ModMatrix::add_col_multiple(std::size_t dst, std::size_t src, std::int64_t k) {
  k = reduce(k);
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) {
    std::int64_t s = data_[r * cols_ + src];
    if (s != 0) data_[r * cols_ + dst] = reduce(data_[r * cols_ + dst] + k * s);
  }
}

void ModMatrix::combine_rows(std::size_t i, std::size_t j, std::int64_t a, std::int64_t b, std::int64_t c,
                             std::int64_t d) {
  a = reduce(a), b = reduce(b), c = reduce(c), d = reduce(d);
  for (std::size_t k = 0; k < cols_; ++k) {
    std::int64_t x = data_[i * cols_ + k], y = data_[j * cols_ + k];
    data_[i * cols_ + k] = reduce(a * x + b * y);
    data_[j * cols_ + k] = reduce(c * x + d * y);
  }
}

void ModMatrix::combine_cols(std::size_t i, std::size_t j, std::int64_t a, std::int64_t b, std::int64_t c,
                             std::int64_t d) {
  a = reduce(a), b = reduce(b), c = reduce(c), d = reduce(d);
  for (std::size_t k = 0; k < rows_; ++k) {
    std::int64_t x = data_[k * cols_ + i], y = data_[k * cols_ + j];
    data_[k * cols_ + i] = reduce(a * x + b * y);
    data_[k * cols_ + j] = reduce(c * x + d * y);
  }
}

namespace {

struct Egcd {
  std::int64_t g, s, t;
};

Egcd extended_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    old_r -= q * r, std::swap(old_r, r);
    old_s -= q * s, std::swap(old_s, s);
    old_t -= q * t, std::swap(old_t, t);
  }
  return {old_r, old_s, old_t};
}

// A unit u of Z/m with a*u = gcd(a, m) (mod m).
std::int64_t normalizing_unit(std::int64_t a, std::int64_t m) {
  std::int64_t g = std::gcd(a, m);
  std::int64_t mg = m / g;
  std::int64_t u0 = mg == 1 ? 1 : mod_inverse((a / g) % mg, mg);
  for (std::int64_t u = u0; u < m + u0; u += mg)
    if (std::gcd(u, m) == 1) return u % m;
  throw std::logic_error("no normalizing unit found");
}

class SmithReducer {
 public:
  SmithReducer(const ModMatrix& a, SmithOptions opts)
      : a_(a),
        m_(a.modulus()),
        opts_(opts),
        u_(ModMatrix::identity(opts.track_left ? a.rows() : 0, a.modulus())),
        uinv_(u_),
        v_(ModMatrix::identity(opts.track_right ? a.cols() : 0, a.modulus())),
        vinv_(v_) {}

  SmithForm run() {
    const std::size_t n = std::min(a_.rows(), a_.cols());
    std::vector<std::int64_t> diag(n, m_);
    for (std::size_t t = 0; t < n; ++t) {
      if (!place_pivot(t)) break;
      reduce_cross(t);
      diag[t] = a_(t, t);
    }
    return {std::move(diag), std::move(u_), std::move(uinv_), std::move(v_), std::move(vinv_)};
  }

 private:
  void row_swap(std::size_t i, std::size_t j) {
    a_.swap_rows(i, j);
    if (opts_.track_left) u_.swap_rows(i, j), uinv_.swap_cols(i, j);
  }
  void col_swap(std::size_t i, std::size_t j) {
    a_.swap_cols(i, j);
    if (opts_.track_right) v_.swap_cols(i, j), vinv_.swap_rows(i, j);
  }
  void row_scale(std::size_t i, std::int64_t u) {
    a_.scale_row(i, u);
    if (opts_.track_left) u_.scale_row(i, u), uinv_.scale_col(i, mod_inverse(u, m_));
  }
  void row_add(std::size_t dst, std::size_t src, std::int64_t k) {
    a_.add_row_multiple(dst, src, k);
    if (opts_.track_left) u_.add_row_multiple(dst, src, k), uinv_.add_col_multiple(src, dst, -k);
  }
  void col_add(std::size_t dst, std::size_t src, std::int64_t k) {
    a_.add_col_multiple(dst, src, k);
    if (opts_.track_right) v_.add_col_multiple(dst, src, k), vinv_.add_row_multiple(src, dst, -k);
  }
  void row_combine(std::size_t i, std::size_t j, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    a_.combine_rows(i, j, a, b, c, d);
    if (opts_.track_left) u_.combine_rows(i, j, a, b, c, d), uinv_.combine_cols(i, j, d, -c, -b, a);
  }
  void col_combine(std::size_t i, std::size_t j, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    a_.combine_cols(i, j, a, b, c, d);
    if (opts_.track_right) v_.combine_cols(i, j, a, b, c, d), vinv_.combine_rows(i, j, d, -c, -b, a);
  }

  // Moves the entry generating the largest ideal into (t, t), normalized to a divisor of m.
  bool place_pivot(std::size_t t) {
    std::int64_t best = m_;
    std::size_t br = 0, bc = 0;
    for (std::size_t r = t; r < a_.rows() && best > 1; ++r)
      for (std::size_t c = t; c < a_.cols(); ++c) {
        std::int64_t v = a_(r, c);
        if (v == 0) continue;
        std::int64_t g = std::gcd(v, m_);
        if (g < best) {
          best = g, br = r, bc = c;
          if (g == 1) break;
        }
      }
    if (best == m_) return false;
    row_swap(t, br);
    col_swap(t, bc);
    normalize_pivot(t);
    return true;
  }

  void normalize_pivot(std::size_t t) {
    std::int64_t v = a_(t, t);
    if (v == std::gcd(v, m_)) return;
    row_scale(t, normalizing_unit(v, m_));
  }

  void reduce_cross(std::size_t t) {
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t r = t + 1; r < a_.rows(); ++r) {
        std::int64_t p = a_(t, t), b = a_(r, t);
        if (b == 0) continue;
        if (b % p == 0) {
          row_add(r, t, -(b / p));
        } else {
          auto [h, s, x] = extended_gcd(p, b);
          row_combine(t, r, s, x, -(b / h), p / h);
          normalize_pivot(t);
        }
      }
      for (std::size_t c = t + 1; c < a_.cols(); ++c) {
        std::int64_t p = a_(t, t), b = a_(t, c);
        if (b == 0) continue;
        if (b % p == 0) {
          col_add(c, t, -(b / p));
        } else {
          auto [h, s, x] = extended_gcd(p, b);
          col_combine(t, c, s, x, -(b / h), p / h);
          normalize_pivot(t);
          dirty = true;
        }
      }
    }
  }

  ModMatrix a_;
  std::int64_t m_;
  SmithOptions opts_;
  ModMatrix u_, uinv_, v_, vinv_;
};

}  // namespace

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  if (m == 1) return 0;
  a %= m;
  if (a < 0) a += m;
  auto [g, s, t] = extended_gcd(a, m);
  (void)t;
  if (g != 1) throw PreconditionError("element is not a unit modulo m");
  s %= m;
  return s < 0 ? s + m : s;
}

SmithForm smith_form(const ModMatrix& a, SmithOptions opts) { return SmithReducer(a, opts).run(); }

std::optional<std::vector<std::int64_t>> solve_mod(const ModMatrix& a, const std::vector<std::int64_t>& b) {
  if (b.size() != a.rows()) throw PreconditionError("right-hand side has wrong length");
  const std::int64_t m = a.modulus();
  SmithForm s = smith_form(a);
  std::vector<std::int64_t> c = s.U * b;
  std::vector<std::int64_t> w(a.cols(), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::int64_t d = i < s.diagonal.size() ? s.diagonal[i] : m;
    if (c[i] % d != 0) return std::nullopt;
    if (d != m) w[i] = c[i] / d;
  }
  return s.V * w;
}

namespace {

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) n /= p, ++e;
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

}  // namespace

InvariantFactorization invariant_factors(const std::vector<std::int64_t>& orders) {
  struct Primary {
    std::int64_t power;
    std::size_t source;
    std::int64_t multiplier;
  };
  std::map<std::int64_t, std::vector<Primary>> by_prime;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    for (auto [p, e] : factorize(orders[i])) {
      std::int64_t pe = 1;
      for (int k = 0; k < e; ++k) pe *= p;
      by_prime[p].push_back({pe, i, orders[i] / pe});
    }
  }
  std::size_t count = 0;
  for (auto& [p, parts] : by_prime) {
    std::stable_sort(parts.begin(), parts.end(), [](const Primary& x, const Primary& y) { return x.power > y.power; });
    count = std::max(count, parts.size());
  }
  // Largest factor first while assembling, reversed at the end.
  InvariantFactorization out;
  out.factors.assign(count, 1);
  out.combos.assign(count, {});
  for (const auto& [p, parts] : by_prime)
    for (std::size_t k = 0; k < parts.size(); ++k) {
      out.factors[k] *= parts[k].power;
      out.combos[k].emplace_back(parts[k].source, parts[k].multiplier);
    }
  std::reverse(out.factors.begin(), out.factors.end());
  std::reverse(out.combos.begin(), out.combos.end());
  return out;
}

}  // namespace cocycle_lab
