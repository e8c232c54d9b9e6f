#pragma once

#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "cocycle_lab/groups.hpp"
#include "cocycle_lab/scalars.hpp"

namespace cocycle_lab {

/// Total map G^n -> k*, stored densely by flat tuple index.
class Cochain {
 public:
  using Index = std::vector<std::size_t>;

  /// The constant cochain 1.
  Cochain(FiniteAbelianGroup group, std::size_t degree);

  static Cochain from_function(const FiniteAbelianGroup& group, std::size_t degree,
                               const std::function<CycScalar(std::span<const std::size_t>)>& f);

  const FiniteAbelianGroup& group() const noexcept { return group_; }
  std::size_t degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<CycScalar>& values() const& noexcept { return values_; }
  std::vector<CycScalar> values() && noexcept { return std::move(values_); }

  const CycScalar& at(std::span<const std::size_t> args) const;
  const CycScalar& at(std::initializer_list<std::size_t> args) const {
    return at(std::span<const std::size_t>(args.begin(), args.size()));
  }
  const CycScalar& operator[](std::size_t flat) const { return values_.at(flat); }

  /// Rejects zero, since cochains take values in k*.
  void set(std::span<const std::size_t> args, CycScalar v);
  void set(std::initializer_list<std::size_t> args, CycScalar v) {
    set(std::span<const std::size_t>(args.begin(), args.size()), std::move(v));
  }
  void set_flat(std::size_t flat, CycScalar v);

  std::size_t flat_index(std::span<const std::size_t> args) const;

  Cochain inverse() const;
  Cochain& operator*=(const Cochain& o);
  friend Cochain operator*(Cochain a, const Cochain& b) { return a *= b; }
  friend bool operator==(const Cochain& a, const Cochain& b);

  /// Smallest conductor in which every value lives.
  int conductor() const;

 private:
  FiniteAbelianGroup group_;
  std::size_t degree_;
  std::vector<CycScalar> values_;
};

/// Coboundary Delta_n of a degree-n cochain (alternating-face formula).
Cochain delta(const Cochain& f);
Cochain delta2(const Cochain& g);
Cochain delta3(const Cochain& f);

/// First quadruple (x,y,z,t) violating the 3-cocycle identity, if any.
std::optional<Cochain::Index> first_cocycle3_violation(const Cochain& phi);
bool is_cocycle3(const Cochain& phi);

bool is_normalized3(const Cochain& phi);
bool is_normalized2(const Cochain& psi);

struct Normalized3 {
  Cochain phi;      // phi * delta2(witness)
  Cochain witness;  // degree 2
};

/// Normalizes a 3-cocycle with witness g(x,y) = phi(e,e,y)^-1 phi(x,e,e).
Normalized3 normalize3(const Cochain& phi);

/// phi_q(x,y,z) = 1 if y+z < n, else q^x, on canonical representatives.
Cochain cyclic_phi_q(int n, const CycScalar& q);

/// phi(c^a, c^b, c^c) = q^(abc).
Cochain cyclic_qabc(int n, const CycScalar& q);

/// g(c^a, c^b) = q^f(a,b), f(a,b) = -(a-1)ab/2; requires q^(n(n-1)/2) = 1.
Cochain cyclic_qabc_coboundary_witness(int n, const CycScalar& q);

}  // namespace cocycle_lab
