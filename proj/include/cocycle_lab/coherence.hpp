#pragma once

#include <memory>
#include <vector>

#include "cocycle_lab/cochains.hpp"

// Matrix-level coherence oracle. Objects are iterated tensor products of the
// regular graded space k[G] (one basis vector per group element); structure
// maps are materialized as monomial matrices and composed explicitly.
namespace cocycle_lab::coherence {

/// A binary tree whose leaves are copies of k[G].
class Object {
 public:
  static std::shared_ptr<const Object> leaf();
  static std::shared_ptr<const Object> tensor(std::shared_ptr<const Object> l, std::shared_ptr<const Object> r);

  std::size_t leaves() const noexcept { return leaves_; }
  bool is_leaf() const noexcept { return !left_; }
  const Object& left() const { return *left_; }
  const Object& right() const { return *right_; }

 private:
  std::shared_ptr<const Object> left_, right_;
  std::size_t leaves_ = 1;
};
using ObjectPtr = std::shared_ptr<const Object>;

/// Column j is sent to row target[j] with coefficient coeff[j].
class MonomialMatrix {
 public:
  static MonomialMatrix identity(std::size_t dim);
  MonomialMatrix(std::vector<std::size_t> target, std::vector<CycScalar> coeff);

  std::size_t dim() const noexcept { return target_.size(); }
  MonomialMatrix operator*(const MonomialMatrix& rhs) const;  // composition: this after rhs
  MonomialMatrix inverse() const;
  friend MonomialMatrix kron(const MonomialMatrix& a, const MonomialMatrix& b);
  friend bool operator==(const MonomialMatrix&, const MonomialMatrix&) = default;

 private:
  std::vector<std::size_t> target_;
  std::vector<CycScalar> coeff_;
};

class Category {
 public:
  Category(Cochain phi, std::optional<Cochain> r = std::nullopt);

  std::size_t dim(const Object& o) const;
  /// Degree of basis vector `index` of o (product of its leaf degrees).
  std::size_t degree(const Object& o, std::size_t index) const;

  MonomialMatrix id(const Object& o) const { return MonomialMatrix::identity(dim(o)); }
  /// a_{A,B,C}: (A (x) B) (x) C -> A (x) (B (x) C).
  MonomialMatrix associator(const Object& a, const Object& b, const Object& c) const;
  /// c_{A,B}: A (x) B -> B (x) A.
  MonomialMatrix braiding(const Object& a, const Object& b) const;

 private:
  FiniteAbelianGroup group_;
  Cochain phi_;
  std::optional<Cochain> r_;
};

bool pentagon_holds(const Category& cat, const Object& v, const Object& w, const Object& x, const Object& y);
bool hexagons_hold(const Category& cat, const Object& a, const Object& b, const Object& c);

}  // namespace cocycle_lab::coherence

namespace cocycle_lab {

/// Pentagon on ((V (x) W) (x) X) (x) Y with V = W = X = Y = k[G].
bool categorical_pentagon_check(const Cochain& phi);
/// Both hexagon diagrams with A = B = C = k[G].
bool categorical_hexagon_check(const Cochain& phi, const Cochain& r);
/// c_{W,V} c_{V,W} = id on k[G] (x) k[G].
bool categorical_symmetry_check(const Cochain& phi, const Cochain& r);

}  // namespace cocycle_lab
