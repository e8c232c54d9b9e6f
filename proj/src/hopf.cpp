#include "cocycle_lab/hopf.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cocycle_lab {

namespace {

void require_same_shape(const GroupAlgebraTensor& a, const GroupAlgebraTensor& b) {
  if (!(a.group() == b.group()) || a.arity() != b.arity())
    throw PreconditionError("tensors live in different spaces");
}

void require_leg(const GroupAlgebraTensor& t, std::size_t leg) {
  if (leg < 1 || leg > t.arity()) throw PreconditionError("leg " + std::to_string(leg) + " out of range");
}

}  // namespace

GroupAlgebraTensor::GroupAlgebraTensor(FiniteAbelianGroup group, std::size_t arity)
    : group_(std::move(group)), arity_(arity) {
  if (arity_ == 0) throw PreconditionError("tensor arity must be positive");
}

GroupAlgebraTensor GroupAlgebraTensor::one(const FiniteAbelianGroup& g, std::size_t arity) {
  return basis(g, Key(arity, FiniteAbelianGroup::identity_index()));
}

GroupAlgebraTensor GroupAlgebraTensor::basis(const FiniteAbelianGroup& g, Key elems, CycScalar coeff) {
  GroupAlgebraTensor t(g, elems.size());
  t.add_term(elems, coeff);
  return t;
}

CycScalar GroupAlgebraTensor::coeff(const Key& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? CycScalar() : it->second;
}

void GroupAlgebraTensor::add_term(const Key& k, const CycScalar& c) {
  if (k.size() != arity_) throw PreconditionError("term arity mismatch");
  for (std::size_t x : k)
    if (x >= group_.size()) throw PreconditionError("element index out of range");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GroupAlgebraTensor& GroupAlgebraTensor::operator+=(const GroupAlgebraTensor& o) {
  require_same_shape(*this, o);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

GroupAlgebraTensor& GroupAlgebraTensor::operator-=(const GroupAlgebraTensor& o) {
  require_same_shape(*this, o);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

GroupAlgebraTensor& GroupAlgebraTensor::operator*=(const CycScalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

GroupAlgebraTensor operator*(const GroupAlgebraTensor& a, const GroupAlgebraTensor& b) {
  require_same_shape(a, b);
  GroupAlgebraTensor out(a.group_, a.arity_);
  GroupAlgebraTensor::Key k(a.arity_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      for (std::size_t i = 0; i < k.size(); ++i) k[i] = a.group_.mul_index(ka[i], kb[i]);
      out.add_term(k, ca * cb);
    }
  return out;
}

bool operator==(const GroupAlgebraTensor& a, const GroupAlgebraTensor& b) {
  return a.group_ == b.group_ && a.arity_ == b.arity_ && a.terms_ == b.terms_;
}

GroupAlgebraTensor tensor_product(const GroupAlgebraTensor& a, const GroupAlgebraTensor& b) {
  if (!(a.group() == b.group())) throw PreconditionError("tensors over different groups");
  GroupAlgebraTensor out(a.group(), a.arity() + b.arity());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      GroupAlgebraTensor::Key k = ka;
      k.insert(k.end(), kb.begin(), kb.end());
      out.add_term(k, ca * cb);
    }
  }
  return out;
}

GroupAlgebraTensor GroupAlgebraTensor::apply_delta_on_leg(std::size_t leg) const {
  require_leg(*this, leg);
  GroupAlgebraTensor out(group_, arity_ + 1);
  for (const auto& [k, c] : terms_) {
    Key nk = k;
    nk.insert(nk.begin() + static_cast<std::ptrdiff_t>(leg), k[leg - 1]);
    out.add_term(nk, c);
  }
  return out;
}

GroupAlgebraTensor GroupAlgebraTensor::apply_counit_on_leg(std::size_t leg) const {
  require_leg(*this, leg);
  if (arity_ == 1) throw PreconditionError("cannot remove the only leg");
  GroupAlgebraTensor out(group_, arity_ - 1);
  for (const auto& [k, c] : terms_) {
    Key nk = k;
    nk.erase(nk.begin() + static_cast<std::ptrdiff_t>(leg - 1));
    out.add_term(nk, c);
  }
  return out;
}

std::string GroupAlgebraTensor::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.to_string() << ") ";
    for (std::size_t i = 0; i < k.size(); ++i) os << (i ? "(x)" : "") << element_name(group_, k[i]);
  }
  return os.str();
}

CharacterRoots default_roots(const FiniteAbelianGroup& g) {
  CharacterRoots r;
  for (int n : g.orders()) r.push_back(root_of_unity(n, 1));
  return r;
}

namespace {

void check_roots(const FiniteAbelianGroup& g, const CharacterRoots& roots) {
  if (roots.size() != g.rank()) throw PreconditionError("need one root of unity per cyclic factor");
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const int n = g.orders()[i];
    auto k = as_root_exponent(roots[i], n);
    if (!k || std::gcd(*k, n) != 1)
      throw PreconditionError("root for factor " + std::to_string(i) + " is not a primitive " +
                              std::to_string(n) + "-th root of unity");
  }
}

// chi[x][h] for all x, h.
std::vector<std::vector<CycScalar>> character_table(const FiniteAbelianGroup& g, const CharacterRoots& roots) {
  check_roots(g, roots);
  std::vector<std::vector<CycScalar>> t(g.size(), std::vector<CycScalar>(g.size()));
  for (std::size_t x = 0; x < g.size(); ++x) {
    GroupElement ex = g.element(x);
    for (std::size_t h = 0; h < g.size(); ++h) {
      GroupElement eh = g.element(h);
      CycScalar v(1);
      for (std::size_t i = 0; i < g.rank(); ++i) v *= roots[i].pow(static_cast<long long>(ex[i]) * eh[i]);
      t[x][h] = v;
    }
  }
  return t;
}

// Values of t on the idempotent basis, indexed by flat tuple.
std::vector<CycScalar> idempotent_coefficients(const GroupAlgebraTensor& t, const CharacterRoots& roots) {
  const auto& g = t.group();
  auto chi = character_table(g, roots);
  std::vector<CycScalar> out(tuple_count(g, t.arity()));
  std::vector<std::size_t> x(t.arity());
  for (std::size_t flat = 0; flat < out.size(); ++flat) {
    unflatten_tuple(flat, g.size(), x);
    CycScalar v;
    for (const auto& [k, c] : t.terms()) {
      CycScalar term = c;
      for (std::size_t i = 0; i < x.size(); ++i) term *= chi[x[i]][k[i]];
      v += term;
    }
    out[flat] = std::move(v);
  }
  return out;
}

GroupAlgebraTensor from_idempotent_coefficients(const FiniteAbelianGroup& g, std::size_t arity,
                                                const std::vector<CycScalar>& vals, const CharacterRoots& roots) {
  auto chi = character_table(g, roots);
  std::vector<std::vector<CycScalar>> chi_inv(g.size(), std::vector<CycScalar>(g.size()));
  for (std::size_t x = 0; x < g.size(); ++x)
    for (std::size_t h = 0; h < g.size(); ++h) chi_inv[x][h] = chi[x][h].inverse();
  const Rational scale = Rational(1) / Rational(static_cast<long>(tuple_count(g, arity)));
  GroupAlgebraTensor out(g, arity);
  std::vector<std::size_t> x(arity), h(arity);
  for (std::size_t hf = 0; hf < vals.size(); ++hf) {
    unflatten_tuple(hf, g.size(), h);
    CycScalar c;
    for (std::size_t xf = 0; xf < vals.size(); ++xf) {
      if (vals[xf].is_zero()) continue;
      unflatten_tuple(xf, g.size(), x);
      CycScalar term = vals[xf];
      for (std::size_t i = 0; i < arity; ++i) term *= chi_inv[x[i]][h[i]];
      c += term;
    }
    out.add_term(h, c * CycScalar(scale));
  }
  return out;
}

}  // namespace

CycScalar character(const FiniteAbelianGroup& g, const CharacterRoots& roots, std::size_t x, std::size_t h) {
  check_roots(g, roots);
  GroupElement ex = g.element(x), eh = g.element(h);
  CycScalar v(1);
  for (std::size_t i = 0; i < g.rank(); ++i) v *= roots[i].pow(static_cast<long long>(ex[i]) * eh[i]);
  return v;
}

GroupAlgebraTensor dual_idempotent(const FiniteAbelianGroup& g, const CharacterRoots& roots, std::size_t x) {
  if (x >= g.size()) throw PreconditionError("element index out of range");
  GroupAlgebraTensor out(g, 1);
  const CycScalar scale(Rational(1, static_cast<unsigned long>(g.size())));
  for (std::size_t h = 0; h < g.size(); ++h) out.add_term({h}, scale * character(g, roots, x, h).inverse());
  return out;
}

std::vector<CycScalar> dual_character(const FiniteAbelianGroup& g, const CharacterRoots& roots, std::size_t x) {
  if (x >= g.size()) throw PreconditionError("element index out of range");
  std::vector<CycScalar> v(g.size());
  for (std::size_t h = 0; h < g.size(); ++h) v[h] = character(g, roots, x, h);
  return v;
}

GroupAlgebraTensor cyclic_dual_idempotent(int n, const CycScalar& xi, std::size_t j) {
  return dual_idempotent(cyclic(n), {xi}, j);
}

GroupAlgebraTensor transport(const Cochain& phi, const CharacterRoots& roots) {
  return from_idempotent_coefficients(phi.group(), phi.degree(), phi.values(), roots);
}

Cochain untransport(const GroupAlgebraTensor& t, const CharacterRoots& roots) {
  auto vals = idempotent_coefficients(t, roots);
  Cochain out(t.group(), t.arity());
  for (std::size_t f = 0; f < vals.size(); ++f) {
    if (vals[f].is_zero()) throw PreconditionError("tensor is not invertible");
    out.set_flat(f, vals[f]);
  }
  return out;
}

GroupAlgebraTensor tensor_inverse(const GroupAlgebraTensor& t) {
  auto roots = default_roots(t.group());
  return transport(untransport(t, roots).inverse(), roots);
}

HarrisonCheck harrison_check(const GroupAlgebraTensor& phi) {
  if (phi.arity() != 3) throw PreconditionError("a reassociator has arity 3");
  HarrisonCheck r;
  const auto& g = phi.group();
  auto vals = idempotent_coefficients(phi, default_roots(g));
  r.invertible = std::none_of(vals.begin(), vals.end(), [](const CycScalar& v) { return v.is_zero(); });

  const auto one1 = GroupAlgebraTensor::one(g, 1);
  GroupAlgebraTensor lhs = tensor_product(one1, phi) * phi.apply_delta_on_leg(2) * tensor_product(phi, one1);
  GroupAlgebraTensor rhs = phi.apply_delta_on_leg(3) * phi.apply_delta_on_leg(1);
  r.pentagon = lhs == rhs;
  r.normalized = phi.apply_counit_on_leg(2) == GroupAlgebraTensor::one(g, 2);
  return r;
}

bool is_harrison_3cocycle(const GroupAlgebraTensor& phi) { return harrison_check(phi).ok(); }

namespace {

void check_cyclic_params(int n, int l, const CycScalar& xi) {
  if (n < 1) throw PreconditionError("n must be positive");
  if (l < 0 || l >= n) throw PreconditionError("l must satisfy 0 <= l < n");
  auto k = as_root_exponent(xi, n);
  if (!k || std::gcd(*k, n) != 1)
    throw PreconditionError("xi is not a primitive " + std::to_string(n) + "-th root of unity");
}

}  // namespace

GroupAlgebraTensor reassociator_phi_l(int n, int l, const CycScalar& xi) {
  check_cyclic_params(n, l, xi);
  const FiniteAbelianGroup g = cyclic(n);
  const std::size_t cl = static_cast<std::size_t>(l);
  GroupAlgebraTensor out = GroupAlgebraTensor::one(g, 3);
  const CycScalar scale(Rational(-1, n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      CycScalar a = CycScalar(i == j ? 1 - n : 1) * (xi.pow(j) - CycScalar(j == 0 ? n : 0));
      if (a.is_zero()) continue;
      a *= scale;
      const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
      out.add_term({0, ui, uj}, a);
      out.add_term({cl, ui, uj}, -a);
    }
  return out;
}

GroupAlgebraTensor reassociator_transport(int n, int l, const CycScalar& xi) {
  check_cyclic_params(n, l, xi);
  return transport(cyclic_phi_q(n, xi.pow(l)), {xi});
}

GroupAlgebraTensor klein_reassociator(const Cochain& phi) {
  if (!is_klein(phi.group()) || phi.degree() != 3) throw PreconditionError("expected a Klein 3-cochain");
  if (!is_cocycle3(phi)) throw PreconditionError("not a 3-cocycle");
  return transport(phi, default_roots(phi.group()));
}

GroupAlgebraTensor klein_phi_x(std::size_t x) {
  const FiniteAbelianGroup g = klein();
  if (x == kl::e || x >= g.size()) throw PreconditionError("x must be sigma, tau or rho");
  GroupAlgebraTensor p(g, 1);
  p.add_term({kl::e}, CycScalar(Rational(1, 2)));
  p.add_term({x}, CycScalar(Rational(-1, 2)));
  return GroupAlgebraTensor::one(g, 3) - CycScalar(2) * tensor_product(tensor_product(p, p), p);
}

WeakBraidedHopf::WeakBraidedHopf(Cochain f) : f_(std::move(f)), ambient_(abelian_coboundary(Cochain(f_.group(), 2))) {
  if (f_.degree() != 2) throw PreconditionError("F must be a 2-cochain");
  const auto& g = f_.group();
  for (std::size_t x = 0; x < g.size(); ++x)
    if (!f_.at({0, x}).is_one() || !f_.at({x, 0}).is_one())
      throw PreconditionError("F is not normalized at " + element_name(g, x));
  ambient_ = abelian_coboundary(f_.inverse());
  ambient_.label = "ambient";
}

std::pair<CycScalar, std::size_t> WeakBraidedHopf::mul(std::size_t x, std::size_t y) const {
  return {f_.at({x, y}), group().mul_index(x, y)};
}

GroupAlgebraTensor WeakBraidedHopf::delta(std::size_t x) const {
  const auto& g = group();
  GroupAlgebraTensor out(g, 2);
  const CycScalar scale(Rational(1, static_cast<unsigned long>(g.size())));
  for (std::size_t u = 0; u < g.size(); ++u) {
    std::size_t v = g.mul_index(g.inverse_index(u), x);
    out.add_term({u, v}, scale * f_.at({u, v}).inverse());
  }
  return out;
}

CycScalar WeakBraidedHopf::counit(std::size_t x) const {
  return x == FiniteAbelianGroup::identity_index() ? CycScalar(static_cast<long>(group().size())) : CycScalar(0);
}

WeakBraidedHopf weak_hopf_build(const Cochain& f) { return WeakBraidedHopf(f); }

bool WeakHopfReport::all() const {
  return std::all_of(passed.begin(), passed.end(), [](bool b) { return b; });
}

std::string WeakHopfReport::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < passed.size(); ++i) {
    os << '(' << i + 1 << ") " << names[i] << ": " << (passed[i] ? "pass" : "FAIL");
    if (!detail[i].empty()) os << " [" << detail[i] << ']';
    os << '\n';
  }
  return os.str();
}

namespace {

std::string names_of(const FiniteAbelianGroup& g, std::initializer_list<std::size_t> xs) {
  std::string s = "(";
  bool first = true;
  for (std::size_t x : xs) {
    if (!first) s += ",";
    first = false;
    s += element_name(g, x);
  }
  return s + ")";
}

// a o (Delta (x) id) o Delta, the associator applied leg-wise by phi.
GroupAlgebraTensor associate(const GroupAlgebraTensor& t, const Cochain& phi) {
  GroupAlgebraTensor out(t.group(), 3);
  for (const auto& [k, c] : t.terms()) out.add_term(k, c * phi.at({k[0], k[1], k[2]}));
  return out;
}

GroupAlgebraTensor delta_on(const WeakBraidedHopf& w, const GroupAlgebraTensor& t, std::size_t leg) {
  GroupAlgebraTensor out(w.group(), t.arity() + 1);
  for (const auto& [k, c] : t.terms()) {
    const GroupAlgebraTensor dx = w.delta(k[leg - 1]);
    for (const auto& [dk, dc] : dx.terms()) {
      GroupAlgebraTensor::Key nk = k;
      nk[leg - 1] = dk[1];
      nk.insert(nk.begin() + static_cast<std::ptrdiff_t>(leg - 1), dk[0]);
      out.add_term(nk, c * dc);
    }
  }
  return out;
}

}  // namespace

WeakHopfReport check_weak_hopf(const WeakBraidedHopf& w) {
  const auto& g = w.group();
  tuple_count(g, 4);
  const Cochain& phi = w.ambient().phi;
  const Cochain& R = w.ambient().R;
  const std::size_t n = g.size();
  WeakHopfReport rep;
  rep.passed.fill(true);
  auto fail = [&](std::size_t i, std::string where) {
    if (rep.passed[i]) rep.detail[i] = "first failure at " + std::move(where);
    rep.passed[i] = false;
  };

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      auto [cxy, xy] = w.mul(x, y);
      for (std::size_t z = 0; z < n; ++z) {
        auto [cyz, yz] = w.mul(y, z);
        CycScalar left = cxy * w.mul(xy, z).first;
        CycScalar right = phi.at({x, y, z}) * cyz * w.mul(x, yz).first;
        if (left != right) fail(0, names_of(g, {x, y, z}));
      }
      if (cxy != R.at({x, y}) * w.mul(y, x).first) fail(1, names_of(g, {x, y}));
    }

  for (std::size_t x = 0; x < n; ++x) {
    const GroupAlgebraTensor dx = w.delta(x);
    GroupAlgebraTensor flipped(g, 2);
    for (const auto& [k, c] : dx.terms()) flipped.add_term({k[1], k[0]}, c * R.at({k[0], k[1]}));
    if (!(flipped == dx)) fail(2, names_of(g, {x}));

    GroupAlgebraTensor left(g, 1), right(g, 1);
    for (const auto& [k, c] : dx.terms()) {
      left.add_term({k[1]}, w.counit(k[0]) * c);
      right.add_term({k[0]}, c * w.counit(k[1]));
    }
    const GroupAlgebraTensor xs = GroupAlgebraTensor::basis(g, {x});
    if (!(left == xs) || !(right == xs)) fail(3, names_of(g, {x}));

    if (!(associate(delta_on(w, dx, 1), phi) == delta_on(w, dx, 2))) fail(4, names_of(g, {x}));
  }

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      auto [cxy, xy] = w.mul(x, y);
      GroupAlgebraTensor lhs = w.delta(xy) * cxy;
      GroupAlgebraTensor rhs(g, 2);
      const GroupAlgebraTensor dx = w.delta(x), dy = w.delta(y);
      for (const auto& [k1, c1] : dx.terms())
        for (const auto& [k2, c2] : dy.terms()) {
          const std::size_t a = k1[0], b = k1[1], c = k2[0], d = k2[1];
          CycScalar f = phi.at({a, b, g.mul_index(c, d)}) * phi.at({b, c, d}).inverse() * R.at({b, c}) *
                        phi.at({c, b, d}) * phi.at({a, c, g.mul_index(b, d)}).inverse();
          auto [cac, ac] = w.mul(a, c);
          auto [cbd, bd] = w.mul(b, d);
          rhs.add_term({ac, bd}, c1 * c2 * f * cac * cbd);
        }
      if (!(lhs == rhs)) fail(5, names_of(g, {x, y}));
    }
  return rep;
}

Cochain prop53_cochain(int n, const CycScalar& q) {
  if (n < 1) throw PreconditionError("n must be positive");
  if (!q.pow(n).is_one()) throw PreconditionError("q^n != 1");
  return Cochain::from_function(cyclic(n), 2, [&](std::span<const std::size_t> ab) {
    const auto a = static_cast<long long>(ab[0]), b = static_cast<long long>(ab[1]);
    return q.pow(-((a - 1) * a / 2) * b);
  });
}

WeakBraidedHopf prop53_structure(int n, const CycScalar& q) {
  if (n < 1) throw PreconditionError("n must be positive");
  if (!q.pow(n).is_one()) throw PreconditionError("q^n != 1");
  if (!q.pow(static_cast<long long>(n) * (n - 1) / 2).is_one())
    throw PreconditionError("q^(n(n-1)/2) != 1");
  return WeakBraidedHopf(prop53_cochain(n, q));
}

std::size_t DeltaCrosscheck::agreements() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.agree; }));
}

std::string DeltaCrosscheck::to_string() const {
  std::ostringstream os;
  os << "n=" << n << " q=" << q << ": " << agreements() << "/" << rows.size() << " coefficients agree\n";
  for (const auto& r : rows)
    os << "  a=" << r.a << " l=" << r.l << " displayed q^" << r.displayed_exponent << " = " << r.displayed
       << ", derived q^" << r.derived_exponent << " = " << r.derived << (r.agree ? "" : "  MISMATCH") << '\n';
  return os.str();
}

DeltaCrosscheck prop53_delta_crosscheck(int n, const CycScalar& q) {
  const Cochain f = prop53_cochain(n, q);
  const WeakBraidedHopf w(f);
  DeltaCrosscheck out{n, q, {}};
  for (int a = 0; a < n; ++a) {
    const GroupAlgebraTensor d = w.delta(static_cast<std::size_t>(a));
    for (int l = 0; l < n; ++l) {
      const long long b = ((a - l) % n + n) % n;
      DeltaCrosscheckRow row{a, l, static_cast<long long>(l - 1) * l * (a - l), static_cast<long long>(l - 1) * l * b / 2,
                             {}, {}, false};
      row.displayed = q.pow(row.displayed_exponent);
      row.derived = d.coeff({static_cast<std::size_t>(l), static_cast<std::size_t>(b)}) * CycScalar(n);
      if (row.derived != q.pow(row.derived_exponent)) throw std::logic_error("comultiplication coefficient drift");
      row.agree = row.displayed == row.derived;
      out.rows.push_back(std::move(row));
    }
  }
  return out;
}

WeakBraidedHopf klein_weak_hopf_h(const CycScalar& a) { return WeakBraidedHopf(coboundary_witness_h(a).inverse()); }

WeakBraidedHopf klein_weak_hopf_g(const CycScalar& d) { return WeakBraidedHopf(coboundary_witness_g(d).inverse()); }

}  // namespace cocycle_lab
