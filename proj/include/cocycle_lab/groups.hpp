#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cocycle_lab {

/// Raised when an operation's documented precondition does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An element of a product of cyclic groups, stored by its canonical
/// exponent vector (each exponent reduced into [0, order)).
class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(std::vector<int> exponents) : exponents_(std::move(exponents)) {}

  const std::vector<int>& exponents() const noexcept { return exponents_; }
  int operator[](std::size_t i) const { return exponents_.at(i); }
  std::size_t rank() const noexcept { return exponents_.size(); }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

 private:
  std::vector<int> exponents_;
};

std::ostream& operator<<(std::ostream& os, const GroupElement& x);

/// Finite abelian group C_{n_1} x ... x C_{n_k}.
///
/// Elements are also addressed by a dense index in [0, size()). The index is
/// mixed radix with the first factor varying fastest, so that on the Klein
/// group the order is e, sigma, tau, rho.
class FiniteAbelianGroup {
 public:
  static constexpr std::size_t kMaxOrder = 256;

  explicit FiniteAbelianGroup(std::vector<int> orders);

  const std::vector<int>& orders() const noexcept { return orders_; }
  std::size_t size() const noexcept { return size_; }
  std::size_t rank() const noexcept { return orders_.size(); }

  GroupElement identity() const;
  GroupElement element(std::size_t index) const;
  std::size_t index_of(const GroupElement& x) const;

  /// Reduces an arbitrary integer vector to its canonical representative.
  GroupElement reduce(std::span<const long long> exponents) const;

  GroupElement mul(const GroupElement& x, const GroupElement& y) const;
  GroupElement inverse(const GroupElement& x) const;
  GroupElement pow(const GroupElement& x, long long k) const;
  std::size_t order_of(const GroupElement& x) const;

  std::size_t mul_index(std::size_t x, std::size_t y) const noexcept {
    return tables_->mul[x * size_ + y];
  }
  std::size_t inverse_index(std::size_t x) const noexcept { return tables_->inv[x]; }
  static constexpr std::size_t identity_index() noexcept { return 0; }

  std::string to_string() const;

  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    return a.orders_ == b.orders_;
  }

 private:
  struct Tables {
    std::vector<std::size_t> mul;
    std::vector<std::size_t> inv;
  };

  void check_element(const GroupElement& x) const;

  std::vector<int> orders_;
  std::size_t size_ = 1;
  std::shared_ptr<const Tables> tables_;
};

/// C_2 x C_2 with sigma = (1,0), tau = (0,1), rho = (1,1).
FiniteAbelianGroup klein();

/// Cyclic group of order n, generated by the element with exponent 1.
FiniteAbelianGroup cyclic(int n);

bool is_klein(const FiniteAbelianGroup& g);

/// Dense indices of the named Klein elements.
namespace kl {
inline constexpr std::size_t e = 0;
inline constexpr std::size_t sigma = 1;
inline constexpr std::size_t tau = 2;
inline constexpr std::size_t rho = 3;
}  // namespace kl

struct KleinElements {
  GroupElement e, sigma, tau, rho;
};
KleinElements klein_elements();

/// Display name of an element: e/sigma/tau/rho on the Klein group, c^k on a
/// cyclic group, the exponent vector otherwise.
std::string element_name(const FiniteAbelianGroup& g, std::size_t index);

/// Lexicographic enumeration of G^n by dense indices. The first position is
/// the most significant; within a position elements follow index order.
class TupleRange {
 public:
  static constexpr std::uint64_t kMaxTuples = 100'000'000;

  class iterator {
   public:
    using value_type = std::vector<std::size_t>;
    using difference_type = std::ptrdiff_t;
    using reference = const value_type&;
    using pointer = const value_type*;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    iterator(std::size_t base, std::size_t arity, std::uint64_t pos);

    reference operator*() const noexcept { return current_; }
    pointer operator->() const noexcept { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      iterator t = *this;
      ++*this;
      return t;
    }
    friend bool operator==(const iterator& a, const iterator& b) noexcept { return a.pos_ == b.pos_; }

   private:
    std::size_t base_ = 1;
    std::uint64_t pos_ = 0;
    std::vector<std::size_t> current_;
  };

  TupleRange(const FiniteAbelianGroup& g, std::size_t arity);

  std::uint64_t size() const noexcept { return count_; }
  iterator begin() const { return iterator(base_, arity_, 0); }
  iterator end() const { return iterator(base_, arity_, count_); }

 private:
  std::size_t base_;
  std::size_t arity_;
  std::uint64_t count_;
};

TupleRange tuples(const FiniteAbelianGroup& g, std::size_t arity);

/// |G|^n, throwing PreconditionError past TupleRange::kMaxTuples.
std::uint64_t tuple_count(const FiniteAbelianGroup& g, std::size_t arity);

/// Dense flat index of a tuple (first position most significant).
inline std::size_t flatten_tuple(std::span<const std::size_t> t, std::size_t base) noexcept {
  std::size_t idx = 0;
  for (std::size_t v : t) idx = idx * base + v;
  return idx;
}

inline void unflatten_tuple(std::size_t flat, std::size_t base, std::span<std::size_t> out) noexcept {
  for (std::size_t k = out.size(); k-- > 0;) {
    out[k] = flat % base;
    flat /= base;
  }
}

}  // namespace cocycle_lab
