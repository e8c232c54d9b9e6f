#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace cocycle_lab {

/// Dense matrix over Z/m with entries kept in [0, m).
class ModMatrix {
 public:
  ModMatrix(std::size_t rows, std::size_t cols, std::int64_t modulus);

  static ModMatrix identity(std::size_t n, std::int64_t modulus);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::int64_t modulus() const noexcept { return m_; }

  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::int64_t v);
  void add(std::size_t r, std::size_t c, std::int64_t v);

  std::vector<std::int64_t> column(std::size_t c) const;
  std::vector<std::int64_t> operator*(const std::vector<std::int64_t>& v) const;
  ModMatrix operator*(const ModMatrix& o) const;
  bool is_zero() const;

  // Elementary operations; the 2x2 forms act as [a b; c d] on (row i, row j).
  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void scale_row(std::size_t i, std::int64_t u);
  void scale_col(std::size_t i, std::int64_t u);
  void add_row_multiple(std::size_t dst, std::size_t src, std::int64_t k);
  void add_col_multiple(std::size_t dst, std::size_t src, std::int64_t k);
  void combine_rows(std::size_t i, std::size_t j, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);
  void combine_cols(std::size_t i, std::size_t j, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

  friend bool operator==(const ModMatrix&, const ModMatrix&) = default;

 private:
  std::int64_t reduce(std::int64_t v) const noexcept {
    v %= m_;
    return v < 0 ? v + m_ : v;
  }

  std::size_t rows_, cols_;
  std::int64_t m_;
  std::vector<std::int64_t> data_;
};

/// D = U * A * V with D diagonal and U, V invertible over Z/m.
/// Diagonal entries are normalized to divisors of m (m itself stands for 0).
struct SmithForm {
  std::vector<std::int64_t> diagonal;  // length min(rows, cols)
  ModMatrix U, Uinv, V, Vinv;
};

struct SmithOptions {
  bool track_left = true;
  bool track_right = true;
};

SmithForm smith_form(const ModMatrix& a, SmithOptions opts = {});

/// Some solution of A v = b over Z/m, or nothing if none exists.
std::optional<std::vector<std::int64_t>> solve_mod(const ModMatrix& a, const std::vector<std::int64_t>& b);

/// Regroups the cyclic decomposition prod Z/d_i into invariant factors
/// f_1 | f_2 | ... (each > 1). Also returns, per output factor, the input
/// positions whose generators sum to a generator of that factor, and the
/// multiplier applied to each.
struct InvariantFactorization {
  std::vector<std::int64_t> factors;
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> combos;
};
InvariantFactorization invariant_factors(const std::vector<std::int64_t>& orders);

std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

}  // namespace cocycle_lab
