#include "cocycle_lab/cochains.hpp"

#include <numeric>

#include "cocycle_lab/kernels.hpp"

namespace cocycle_lab {

Cochain::Cochain(FiniteAbelianGroup group, std::size_t degree)
    : group_(std::move(group)), degree_(degree), values_(tuple_count(group_, degree), CycScalar(1)) {}

Cochain Cochain::from_function(const FiniteAbelianGroup& group, std::size_t degree,
                               const std::function<CycScalar(std::span<const std::size_t>)>& f) {
  Cochain c(group, degree);
  std::size_t flat = 0;
  for (const auto& t : tuples(group, degree)) c.set_flat(flat++, f(t));
  return c;
}

std::size_t Cochain::flat_index(std::span<const std::size_t> args) const {
  if (args.size() != degree_) throw PreconditionError("argument count does not match cochain degree");
  for (std::size_t a : args)
    if (a >= group_.size()) throw PreconditionError("group element index out of range");
  return flatten_tuple(args, group_.size());
}

const CycScalar& Cochain::at(std::span<const std::size_t> args) const { return values_[flat_index(args)]; }

void Cochain::set(std::span<const std::size_t> args, CycScalar v) { set_flat(flat_index(args), std::move(v)); }

void Cochain::set_flat(std::size_t flat, CycScalar v) {
  if (v.is_zero()) throw PreconditionError("cochain values must be nonzero");
  values_.at(flat) = std::move(v);
}

Cochain Cochain::inverse() const {
  Cochain out = *this;
  for (auto& v : out.values_) v = v.inverse();
  return out;
}

Cochain& Cochain::operator*=(const Cochain& o) {
  if (!(group_ == o.group_) || degree_ != o.degree_) throw PreconditionError("cochain shapes differ");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] *= o.values_[i];
  return *this;
}

bool operator==(const Cochain& a, const Cochain& b) {
  return a.group_ == b.group_ && a.degree_ == b.degree_ && a.values_ == b.values_;
}

int Cochain::conductor() const {
  int c = 1;
  for (const auto& v : values_) c = std::lcm(c, v.conductor());
  return c;
}

Cochain delta(const Cochain& f) {
  const auto& g = f.group();
  const std::size_t n = f.degree();
  if (n == 0) throw PreconditionError("coboundary needs degree at least 1");
  Cochain out(g, n + 1);
  std::vector<std::size_t> face(n);
  std::size_t flat = 0;
  for (const auto& x : tuples(g, n + 1)) {
    CycScalar num(1), den(1);
    num *= f.at(std::span<const std::size_t>(x).subspan(1));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < i; ++k) face[k] = x[k];
      face[i] = g.mul_index(x[i], x[i + 1]);
      for (std::size_t k = i + 2; k <= n; ++k) face[k - 1] = x[k];
      ((i % 2 == 0) ? den : num) *= f.at(face);
    }
    (((n + 1) % 2 == 0) ? num : den) *= f.at(std::span<const std::size_t>(x).first(n));
    out.set_flat(flat++, num / den);
  }
  return out;
}

Cochain delta2(const Cochain& g) {
  if (g.degree() != 2) throw PreconditionError("delta2 expects a degree-2 cochain");
  return delta(g);
}

Cochain delta3(const Cochain& f) {
  if (f.degree() != 3) throw PreconditionError("delta3 expects a degree-3 cochain");
  return delta(f);
}

std::optional<Cochain::Index> first_cocycle3_violation(const Cochain& phi) {
  if (phi.degree() != 3) throw PreconditionError("3-cocycle test expects a degree-3 cochain");
  auto flat = kernels::first_cocycle3_failure(phi, kernels::Exec::parallel);
  if (!flat) return std::nullopt;
  Cochain::Index q(4);
  unflatten_tuple(*flat, phi.group().size(), q);
  return q;
}

bool is_cocycle3(const Cochain& phi) { return !first_cocycle3_violation(phi); }

bool is_normalized3(const Cochain& phi) {
  if (phi.degree() != 3) throw PreconditionError("expected a degree-3 cochain");
  const std::size_t e = FiniteAbelianGroup::identity_index();
  for (std::size_t x = 0; x < phi.group().size(); ++x)
    for (std::size_t z = 0; z < phi.group().size(); ++z)
      if (!phi.at({x, e, z}).is_one()) return false;
  return true;
}

bool is_normalized2(const Cochain& psi) {
  if (psi.degree() != 2) throw PreconditionError("expected a degree-2 cochain");
  const std::size_t e = FiniteAbelianGroup::identity_index();
  const CycScalar& c = psi.at({e, e});
  for (std::size_t x = 0; x < psi.group().size(); ++x)
    if (!(psi.at({e, x}) == c) || !(psi.at({x, e}) == c)) return false;
  return true;
}

Normalized3 normalize3(const Cochain& phi) {
  if (first_cocycle3_violation(phi)) throw PreconditionError("normalize3 input is not a 3-cocycle");
  const std::size_t e = FiniteAbelianGroup::identity_index();
  Cochain g = Cochain::from_function(phi.group(), 2, [&](std::span<const std::size_t> xy) {
    return phi.at({e, e, xy[1]}).inverse() * phi.at({xy[0], e, e});
  });
  Cochain normalized = phi * delta2(g);
  return {std::move(normalized), std::move(g)};
}

namespace {

void require_root(int n, const CycScalar& q, long long power, const char* what) {
  if (n < 1) throw PreconditionError("cyclic group order must be at least 1");
  if (!q.pow(power).is_one()) throw PreconditionError(what);
}

}  // namespace

Cochain cyclic_phi_q(int n, const CycScalar& q) {
  require_root(n, q, n, "q^n must equal 1");
  return Cochain::from_function(cyclic(n), 3, [&](std::span<const std::size_t> a) {
    if (a[1] + a[2] < static_cast<std::size_t>(n)) return CycScalar(1);
    return q.pow(static_cast<long long>(a[0]));
  });
}

Cochain cyclic_qabc(int n, const CycScalar& q) {
  require_root(n, q, n, "q^n must equal 1");
  return Cochain::from_function(cyclic(n), 3, [&](std::span<const std::size_t> a) {
    return q.pow(static_cast<long long>(a[0] * a[1] * a[2]));
  });
}

Cochain cyclic_qabc_coboundary_witness(int n, const CycScalar& q) {
  if (n < 1) throw PreconditionError("cyclic group order must be at least 1");
  if (!q.pow(n).is_one()) throw PreconditionError("q^n must equal 1");
  if (!q.pow(static_cast<long long>(n) * (n - 1) / 2).is_one())
    throw PreconditionError("not a coboundary for this q: q^(n(n-1)/2) != 1");
  return Cochain::from_function(cyclic(n), 2, [&](std::span<const std::size_t> ab) {
    long long a = static_cast<long long>(ab[0]), b = static_cast<long long>(ab[1]);
    return q.pow(-((a - 1) * a / 2) * b);
  });
}

}  // namespace cocycle_lab
