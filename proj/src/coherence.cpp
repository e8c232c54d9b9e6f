#include "cocycle_lab/coherence.hpp"

namespace cocycle_lab::coherence {

ObjectPtr Object::leaf() { return std::make_shared<const Object>(); }

ObjectPtr Object::tensor(ObjectPtr l, ObjectPtr r) {
  auto o = std::make_shared<Object>();
  o->leaves_ = l->leaves() + r->leaves();
  o->left_ = std::move(l);
  o->right_ = std::move(r);
  return o;
}

MonomialMatrix MonomialMatrix::identity(std::size_t dim) {
  std::vector<std::size_t> t(dim);
  for (std::size_t i = 0; i < dim; ++i) t[i] = i;
  return MonomialMatrix(std::move(t), std::vector<CycScalar>(dim, CycScalar(1)));
}

MonomialMatrix::MonomialMatrix(std::vector<std::size_t> target, std::vector<CycScalar> coeff)
    : target_(std::move(target)), coeff_(std::move(coeff)) {
  if (target_.size() != coeff_.size()) throw PreconditionError("monomial matrix arrays differ in length");
  std::vector<bool> hit(target_.size(), false);
  for (std::size_t t : target_) {
    if (t >= target_.size() || hit[t]) throw PreconditionError("monomial matrix target is not a permutation");
    hit[t] = true;
  }
}

MonomialMatrix MonomialMatrix::operator*(const MonomialMatrix& rhs) const {
  if (dim() != rhs.dim()) throw PreconditionError("monomial matrix dimensions differ");
  std::vector<std::size_t> t(dim());
  std::vector<CycScalar> c(dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    std::size_t mid = rhs.target_[j];
    t[j] = target_[mid];
    c[j] = coeff_[mid] * rhs.coeff_[j];
  }
  return MonomialMatrix(std::move(t), std::move(c));
}

MonomialMatrix MonomialMatrix::inverse() const {
  std::vector<std::size_t> t(dim());
  std::vector<CycScalar> c(dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    t[target_[j]] = j;
    c[target_[j]] = coeff_[j].inverse();
  }
  return MonomialMatrix(std::move(t), std::move(c));
}

MonomialMatrix kron(const MonomialMatrix& a, const MonomialMatrix& b) {
  const std::size_t db = b.dim();
  std::vector<std::size_t> t(a.dim() * db);
  std::vector<CycScalar> c(t.size());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < db; ++j) {
      t[i * db + j] = a.target_[i] * db + b.target_[j];
      c[i * db + j] = a.coeff_[i] * b.coeff_[j];
    }
  return MonomialMatrix(std::move(t), std::move(c));
}

Category::Category(Cochain phi, std::optional<Cochain> r) : group_(phi.group()), phi_(std::move(phi)), r_(std::move(r)) {
  if (phi_.degree() != 3) throw PreconditionError("associator data must be a 3-cochain");
  if (r_ && (r_->degree() != 2 || !(r_->group() == group_)))
    throw PreconditionError("braiding data must be a 2-cochain on the same group");
}

std::size_t Category::dim(const Object& o) const {
  std::size_t d = 1;
  for (std::size_t k = 0; k < o.leaves(); ++k) d *= group_.size();
  return d;
}

std::size_t Category::degree(const Object& o, std::size_t index) const {
  if (o.is_leaf()) return index;
  const std::size_t dr = dim(o.right());
  return group_.mul_index(degree(o.left(), index / dr), degree(o.right(), index % dr));
}

MonomialMatrix Category::associator(const Object& a, const Object& b, const Object& c) const {
  const std::size_t da = dim(a), db = dim(b), dc = dim(c);
  std::vector<std::size_t> t(da * db * dc);
  std::vector<CycScalar> coeff(t.size());
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j)
      for (std::size_t k = 0; k < dc; ++k) {
        std::size_t idx = (i * db + j) * dc + k;
        t[idx] = idx;
        coeff[idx] = phi_.at({degree(a, i), degree(b, j), degree(c, k)});
      }
  return MonomialMatrix(std::move(t), std::move(coeff));
}

MonomialMatrix Category::braiding(const Object& a, const Object& b) const {
  if (!r_) throw PreconditionError("category has no braiding");
  const std::size_t da = dim(a), db = dim(b);
  std::vector<std::size_t> t(da * db);
  std::vector<CycScalar> coeff(t.size());
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j) {
      t[i * db + j] = j * da + i;
      coeff[i * db + j] = r_->at({degree(a, i), degree(b, j)});
    }
  return MonomialMatrix(std::move(t), std::move(coeff));
}

bool pentagon_holds(const Category& cat, const Object& v, const Object& w, const Object& x, const Object& y) {
  auto vw = Object::tensor(std::make_shared<const Object>(v), std::make_shared<const Object>(w));
  auto xy = Object::tensor(std::make_shared<const Object>(x), std::make_shared<const Object>(y));
  auto wx = Object::tensor(std::make_shared<const Object>(w), std::make_shared<const Object>(x));
  MonomialMatrix lhs = cat.associator(v, w, *xy) * cat.associator(*vw, x, y);
  MonomialMatrix rhs = kron(cat.id(v), cat.associator(w, x, y)) * cat.associator(v, *wx, y) *
                       kron(cat.associator(v, w, x), cat.id(y));
  return lhs == rhs;
}

bool hexagons_hold(const Category& cat, const Object& a, const Object& b, const Object& c) {
  auto ab = Object::tensor(std::make_shared<const Object>(a), std::make_shared<const Object>(b));
  auto bc = Object::tensor(std::make_shared<const Object>(b), std::make_shared<const Object>(c));
  // (A B) C -> B (C A)
  MonomialMatrix h1l = cat.associator(b, c, a) * cat.braiding(a, *bc) * cat.associator(a, b, c);
  MonomialMatrix h1r =
      kron(cat.id(b), cat.braiding(a, c)) * cat.associator(b, a, c) * kron(cat.braiding(a, b), cat.id(c));
  // A (B C) -> (C A) B
  MonomialMatrix h2l =
      cat.associator(c, a, b).inverse() * cat.braiding(*ab, c) * cat.associator(a, b, c).inverse();
  MonomialMatrix h2r = kron(cat.braiding(a, c), cat.id(b)) * cat.associator(a, c, b).inverse() *
                       kron(cat.id(a), cat.braiding(b, c));
  return h1l == h1r && h2l == h2r;
}

}  // namespace cocycle_lab::coherence

namespace cocycle_lab {

bool categorical_pentagon_check(const Cochain& phi) {
  coherence::Category cat(phi);
  auto v = coherence::Object::leaf();
  return coherence::pentagon_holds(cat, *v, *v, *v, *v);
}

bool categorical_hexagon_check(const Cochain& phi, const Cochain& r) {
  coherence::Category cat(phi, r);
  auto v = coherence::Object::leaf();
  return coherence::hexagons_hold(cat, *v, *v, *v);
}

bool categorical_symmetry_check(const Cochain& phi, const Cochain& r) {
  coherence::Category cat(phi, r);
  auto v = coherence::Object::leaf();
  return cat.braiding(*v, *v) * cat.braiding(*v, *v) == cat.id(*coherence::Object::tensor(v, v));
}

}  // namespace cocycle_lab
