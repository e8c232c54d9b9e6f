#include "cocycle_lab/braidings.hpp"

#include <algorithm>
#include <array>

#include "cocycle_lab/cohomology.hpp"

namespace cocycle_lab {

using namespace kl;

AbelianCocycle operator*(const AbelianCocycle& x, const AbelianCocycle& y) {
  return {x.phi * y.phi, x.R * y.R, ""};
}

AbelianCocycle AbelianCocycle::inverse() const { return {phi.inverse(), R.inverse(), ""}; }

std::optional<kernels::HexagonFailure> first_hexagon_violation(const Cochain& phi, const Cochain& R) {
  return kernels::first_hexagon_failure(phi, R, kernels::Exec::parallel);
}

bool is_abelian_cocycle(const Cochain& phi, const Cochain& R) { return !first_hexagon_violation(phi, R); }

AbelianCocycle abelian_coboundary(const Cochain& psi) {
  if (psi.degree() != 2) throw PreconditionError("abelian coboundary expects a degree-2 cochain");
  if (!is_normalized2(psi)) throw PreconditionError("abelian coboundary expects a normalized 2-cochain");
  Cochain r = Cochain::from_function(psi.group(), 2, [&](std::span<const std::size_t> xy) {
    return psi.at({xy[1], xy[0]}) / psi.at({xy[0], xy[1]});
  });
  return {delta2(psi), std::move(r), ""};
}

QuadraticForm::QuadraticForm(FiniteAbelianGroup group, std::vector<CycScalar> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (values_.size() != group_.size()) throw PreconditionError("quadratic form needs one value per element");
  for (const auto& v : values_)
    if (v.is_zero()) throw PreconditionError("quadratic form values must be nonzero");
}

QuadraticForm operator*(const QuadraticForm& a, const QuadraticForm& b) {
  if (!(a.group_ == b.group_)) throw PreconditionError("quadratic forms live on different groups");
  std::vector<CycScalar> v(a.values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.values_[i] * b.values_[i];
  return QuadraticForm(a.group_, std::move(v));
}

bool QuadraticForm::is_trivial() const {
  return std::all_of(values_.begin(), values_.end(), [](const CycScalar& v) { return v.is_one(); });
}

int QuadraticForm::order() const {
  QuadraticForm acc = *this;
  for (int k = 1; k <= 1024; ++k) {
    if (acc.is_trivial()) return k;
    acc = acc * *this;
  }
  return 0;
}

QuadraticForm trace(const AbelianCocycle& ac) {
  std::vector<CycScalar> v(ac.group().size());
  for (std::size_t x = 0; x < v.size(); ++x) v[x] = ac.R.at({x, x});
  return QuadraticForm(ac.group(), std::move(v));
}

bool is_quadratic_form(const QuadraticForm& q) {
  const auto& g = q.group();
  const std::size_t n = g.size();
  for (std::size_t x = 0; x < n; ++x)
    if (!(q(g.inverse_index(x)) == q(x))) return false;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        std::size_t xy = g.mul_index(x, y), xz = g.mul_index(x, z), yz = g.mul_index(y, z);
        if (!(q(g.mul_index(xy, z)) * q(x) * q(y) * q(z) == q(xy) * q(xz) * q(yz))) return false;
      }
  return true;
}

std::vector<QuadraticForm> enumerate_quadratic_forms(const FiniteAbelianGroup& g, int conductor) {
  const int w = roots_of_unity_order(conductor);
  const std::size_t free = g.size() - 1;
  std::uint64_t count = 1;
  for (std::size_t k = 0; k < free; ++k) {
    count *= static_cast<std::uint64_t>(w);
    if (count > 1'000'000) throw PreconditionError("too many candidate quadratic forms");
  }
  std::vector<CycScalar> roots;
  for (int k = 0; k < w; ++k) roots.push_back(root_of_unity(w, k));
  std::vector<QuadraticForm> out;
  std::vector<CycScalar> vals(g.size(), CycScalar(1));
  for (std::uint64_t c = 0; c < count; ++c) {
    std::uint64_t rest = c;
    for (std::size_t x = 1; x < g.size(); ++x) {
      vals[x] = roots[rest % static_cast<std::uint64_t>(w)];
      rest /= static_cast<std::uint64_t>(w);
    }
    QuadraticForm q(g, vals);
    if (is_quadratic_form(q)) out.push_back(std::move(q));
  }
  return out;
}

bool satisfies_klein_form_conditions(const QuadraticForm& q) {
  if (!is_klein(q.group())) throw PreconditionError("expected a form on C2xC2");
  if (!q(e).is_one()) return false;
  for (std::size_t x : {sigma, tau, rho})
    if (!q(x).pow(4).is_one()) return false;
  return (q(sigma).pow(2) * q(tau).pow(2) * q(rho).pow(2)).is_one();
}

QuadraticForm klein_form(const CycScalar& qs, const CycScalar& qt, const CycScalar& qr) {
  return QuadraticForm(klein(), {CycScalar(1), qs, qt, qr});
}

QuadraticForm klein_form_generator(const std::string& name) {
  const CycScalar i = CycScalar::i(), one(1), m1(-1);
  if (name == "A") return klein_form(one, one, m1);
  if (name == "B") return klein_form(one, m1, one);
  if (name == "C") return klein_form(m1, one, one);
  if (name == "E1") return klein_form(i, i, one);
  if (name == "E2") return klein_form(i, one, i);
  if (name == "E3") return klein_form(one, i, i);
  throw PreconditionError("unknown quadratic form generator '" + name + "'");
}

namespace {

const std::array<const char*, 8> kSubsetNames = {"", "A", "B", "C", "AB", "AC", "BC", "ABC"};
const std::array<const char*, 4> kCosetNames = {"", "E1", "E2", "E3"};

std::string label_at(int rank) {
  std::string s = std::string(kSubsetNames[static_cast<std::size_t>(rank % 8)]) +
                  kCosetNames[static_cast<std::size_t>(rank / 8)];
  return s.empty() ? "I" : s;
}

QuadraticForm form_at(int rank) {
  QuadraticForm q = klein_form(1, 1, 1);
  for (char c : std::string(kSubsetNames[static_cast<std::size_t>(rank % 8)])) q = q * klein_form_generator(std::string(1, c));
  if (rank / 8 > 0) q = q * klein_form_generator(kCosetNames[static_cast<std::size_t>(rank / 8)]);
  return q;
}

}  // namespace

std::string klein_form_label(const QuadraticForm& q) {
  if (!is_klein(q.group())) return "";
  for (int r = 0; r < 32; ++r)
    if (form_at(r) == q) return label_at(r);
  return "";
}

int klein_label_rank(const std::string& label) {
  for (int r = 0; r < 32; ++r)
    if (label_at(r) == label) return r;
  return -1;
}

namespace {

AbelianCocycle klein_braiding(const Cochain& phi, const std::array<CycScalar, 3>& eps, const CycScalar& ms,
                              const CycScalar& mt, const CycScalar& mr, int alpha) {
  const CycScalar a(alpha);
  Cochain r(klein(), 2);
  r.set({sigma, sigma}, ms);
  r.set({tau, tau}, mt);
  r.set({rho, rho}, mr);
  r.set({sigma, tau}, a);
  r.set({tau, sigma}, a * eps[2] * ms * mt * mr);
  r.set({sigma, rho}, a * ms);
  r.set({rho, sigma}, a * eps[1] * mt * mr);
  r.set({tau, rho}, a * eps[0] * ms * mr);
  r.set({rho, tau}, a * mt);
  AbelianCocycle ac{phi, std::move(r), ""};
  ac.label = klein_form_label(trace(ac));
  return ac;
}

}  // namespace

AbelianCocycle klein_braiding_trivial(int mu_sigma, int mu_tau, int mu_rho) {
  for (int mu : {mu_sigma, mu_tau, mu_rho})
    if (mu != 1 && mu != -1) throw PreconditionError("mu values must be +1 or -1");
  return klein_braiding(Cochain(klein(), 3), {CycScalar(1), CycScalar(1), CycScalar(1)}, mu_sigma, mu_tau, mu_rho, 1);
}

AbelianCocycle klein_braiding_phiX(KleinSubset x, const CycScalar& ms, const CycScalar& mt, const CycScalar& mr,
                                   int alpha) {
  if (x.size() != 2) throw PreconditionError("braidings over phi_X need |X| = 2");
  if (alpha != 1 && alpha != -1) throw PreconditionError("alpha must be +1 or -1");
  std::array<CycScalar, 3> eps{CycScalar(x.contains(sigma) ? -1 : 1), CycScalar(x.contains(tau) ? -1 : 1),
                               CycScalar(x.contains(rho) ? -1 : 1)};
  const std::array<const CycScalar*, 3> mu{&ms, &mt, &mr};
  for (std::size_t k = 0; k < 3; ++k)
    if (!(mu[k]->pow(2) == eps[k])) throw PreconditionError("mu_x^2 must equal eps_x");
  return klein_braiding(phi_X(x), eps, ms, mt, mr, alpha);
}

std::vector<AbelianCocycle> enumerate_klein_braidings(int conductor) {
  std::vector<AbelianCocycle> out;
  for (int s : {1, -1})
    for (int t : {1, -1})
      for (int r : {1, -1}) out.push_back(klein_braiding_trivial(s, t, r));
  if (conductor % 4 == 0) {
    const CycScalar i = CycScalar::i();
    for (unsigned bits : {KleinSubset::sigma | KleinSubset::tau, KleinSubset::sigma | KleinSubset::rho,
                          KleinSubset::tau | KleinSubset::rho}) {
      KleinSubset x{bits};
      auto choices = [&](std::size_t el) {
        return x.contains(el) ? std::array{i, -i} : std::array{CycScalar(1), CycScalar(-1)};
      };
      for (const auto& ms : choices(sigma))
        for (const auto& mt : choices(tau))
          for (const auto& mr : choices(rho)) out.push_back(klein_braiding_phiX(x, ms, mt, mr, 1));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const AbelianCocycle& a, const AbelianCocycle& b) {
    return klein_label_rank(a.label) < klein_label_rank(b.label);
  });
  return out;
}

bool is_symmetric(const AbelianCocycle& ac) {
  const std::size_t n = ac.group().size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (!(ac.R.at({x, y}) * ac.R.at({y, x})).is_one()) return false;
  return true;
}

bool is_bilinear(const Cochain& R) {
  const auto& g = R.group();
  const std::size_t n = g.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (!(R.at({g.mul_index(x, y), z}) == R.at({x, z}) * R.at({y, z}))) return false;
  return true;
}

AbelianCocycle cyclic_braiding(int n, const CycScalar& nu) {
  if (n < 1) throw PreconditionError("cyclic group order must be at least 1");
  if (!nu.pow(static_cast<long long>(n) * n).is_one() || !nu.pow(2LL * n).is_one())
    throw PreconditionError("nu must satisfy nu^(n^2) = nu^(2n) = 1");
  Cochain r = Cochain::from_function(cyclic(n), 2, [&](std::span<const std::size_t> xy) {
    return nu.pow(static_cast<long long>(xy[0] * xy[1]));
  });
  return {cyclic_phi_q(n, nu.pow(n)), std::move(r), ""};
}

std::optional<Cochain> abelian_cohomologous(const AbelianCocycle& x, const AbelianCocycle& y, std::int64_t m) {
  if (!(x.group() == y.group())) throw PreconditionError("abelian cocycles live on different groups");
  const auto& g = x.group();
  AbelianCocycle q = x * y.inverse();
  auto phi = encode_mu(q.phi, m);
  auto r = encode_mu(q.R, m);
  const std::size_t n = g.size(), n2 = n * n, n3 = n2 * n;

  ModMatrix sys(n3 + n2 + 2 * n, n2, m);
  std::vector<std::int64_t> rhs(sys.rows(), 0);
  ModMatrix d2 = boundary_matrix(g, 2, m);
  for (std::size_t row = 0; row < n3; ++row) {
    for (std::size_t c = 0; c < n2; ++c) sys.set(row, c, d2(row, c));
    rhs[row] = phi[row];
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t row = n3 + a * n + b;
      sys.add(row, a * n + b, -1);
      sys.add(row, b * n + a, 1);
      rhs[row] = r[a * n + b];
    }
  // psi(e,x) = psi(x,e) = psi(e,e)
  for (std::size_t a = 0; a < n; ++a) {
    sys.add(n3 + n2 + a, a, 1);
    sys.add(n3 + n2 + a, 0, -1);
    sys.add(n3 + n2 + n + a, a * n, 1);
    sys.add(n3 + n2 + n + a, 0, -1);
  }
  auto v = solve_mod(sys, rhs);
  if (!v) return std::nullopt;
  return decode_mu(g, 2, *v, m);
}

std::vector<AbelianCocycle> c2_abelian_cocycles(int conductor) {
  const auto c2 = cyclic(2);
  auto r_with = [&](const CycScalar& v) {
    Cochain r(c2, 2);
    r.set({1, 1}, v);
    return r;
  };
  std::vector<AbelianCocycle> out;
  out.push_back({Cochain(c2, 3), Cochain(c2, 2), "(1,1)"});
  out.push_back({Cochain(c2, 3), r_with(-1), "(1,R2)"});
  if (conductor % 4 == 0) {
    Cochain phi = cyclic_phi_q(2, -1);
    out.push_back({phi, r_with(CycScalar::i()), "(phi,R3)"});
    out.push_back({phi, r_with(-CycScalar::i()), "(phi,R4)"});
  }
  return out;
}

AbelianCocycle transport_t_ab(int i, const AbelianCocycle& ac) {
  if (!(ac.group() == cyclic(2))) throw PreconditionError("transport expects an abelian cocycle on C2");
  auto proj = klein_projection(i);
  AbelianCocycle out{pullback(ac.phi, klein(), proj), pullback(ac.R, klein(), proj), ""};
  out.label = klein_form_label(trace(out));
  return out;
}

std::vector<Cochain> hexagon_solutions(const Cochain& phi, std::int64_t m, kernels::Exec exec) {
  auto exps = encode_mu(phi, m);
  std::vector<Cochain> out;
  for (const auto& r : kernels::hexagon_solutions_mu(phi.group(), exps, m, exec))
    out.push_back(decode_mu(phi.group(), 2, r, m));
  return out;
}

}  // namespace cocycle_lab
