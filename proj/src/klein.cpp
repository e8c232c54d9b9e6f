#include "cocycle_lab/klein.hpp"

#include <sstream>

namespace cocycle_lab {

using namespace kl;

std::string to_string(KleinSubset x) {
  static const char* names[] = {"sigma", "tau", "rho"};
  std::string out = "{";
  bool first = true;
  for (unsigned k = 0; k < 3; ++k)
    if ((x.bits >> k) & 1u) {
      out += first ? "" : ",";
      out += names[k];
      first = false;
    }
  return out + "}";
}

KleinSubset parse_klein_subset(const std::string& text) {
  KleinSubset out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t{}"), e = item.find_last_not_of(" \t{}");
    if (b == std::string::npos) continue;
    item = item.substr(b, e - b + 1);
    if (item == "sigma" || item == "s") out.bits |= KleinSubset::sigma;
    else if (item == "tau" || item == "t") out.bits |= KleinSubset::tau;
    else if (item == "rho" || item == "r") out.bits |= KleinSubset::rho;
    else throw PreconditionError("unknown Klein element '" + item + "'");
  }
  return out;
}

int HappyParams::eps(std::size_t element) const {
  switch (element) {
    case sigma: return eps_sigma;
    case tau: return eps_tau;
    case rho: return eps_rho;
    default: throw PreconditionError("epsilon is defined for sigma, tau, rho only");
  }
}

Cochain klein_two_cochain(const KleinTwoCochainParams& p) {
  Cochain g(klein(), 2);
  for (std::size_t x = 0; x < 4; ++x) {
    g.set({x, e}, p.c);
    g.set({e, x}, p.c);
  }
  g.set({sigma, sigma}, p.a1);
  g.set({tau, tau}, p.a2);
  g.set({rho, rho}, p.a3);
  g.set({sigma, tau}, p.b1);
  g.set({tau, rho}, p.b2);
  g.set({rho, sigma}, p.b3);
  g.set({tau, sigma}, p.b4);
  g.set({sigma, rho}, p.b5);
  g.set({rho, tau}, p.b6);
  return g;
}

Cochain reconstruct(const HappyParams& hp) {
  for (int eps : {hp.eps_sigma, hp.eps_tau, hp.eps_rho})
    if (eps != 1 && eps != -1) throw PreconditionError("epsilon values must be +1 or -1");
  if (hp.a.is_zero() || hp.b.is_zero()) throw PreconditionError("parameters a and b must be nonzero");
  const CycScalar p(hp.p()), es(hp.eps_sigma), et(hp.eps_tau);
  const CycScalar a = hp.a, ai = hp.a.inverse(), b = hp.b, bi = hp.b.inverse();

  Cochain phi(klein(), 3);
  phi.set({sigma, sigma, sigma}, es);
  phi.set({tau, tau, tau}, et);
  phi.set({rho, rho, rho}, CycScalar(hp.eps_rho));
  for (auto [x, y, z] : {std::array{sigma, tau, rho}, {tau, rho, sigma}, {rho, sigma, tau}, {rho, tau, sigma},
                         {sigma, rho, tau}, {tau, sigma, rho}})
    phi.set({x, y, z}, p);

  phi.set({tau, sigma, sigma}, a);
  phi.set({sigma, tau, tau}, p * a);
  phi.set({tau, tau, sigma}, p * ai);
  phi.set({sigma, sigma, tau}, ai);
  phi.set({rho, sigma, sigma}, a * es);
  phi.set({sigma, rho, rho}, p * a * es);
  phi.set({sigma, sigma, rho}, ai * es);
  phi.set({rho, rho, sigma}, p * ai * es);
  phi.set({rho, tau, tau}, p * a * et);
  phi.set({tau, rho, rho}, a * et);
  phi.set({tau, tau, rho}, p * ai * et);
  phi.set({rho, rho, tau}, ai * et);

  phi.set({sigma, tau, sigma}, b);
  phi.set({rho, sigma, rho}, p * es * b);
  phi.set({tau, rho, tau}, p * et * b);
  phi.set({tau, sigma, tau}, p * bi);
  phi.set({sigma, rho, sigma}, es * bi);
  phi.set({rho, tau, rho}, et * bi);
  return phi;
}

Cochain phi_X(KleinSubset x) {
  HappyParams hp;
  hp.eps_sigma = x.contains(sigma) ? -1 : 1;
  hp.eps_tau = x.contains(tau) ? -1 : 1;
  hp.eps_rho = x.contains(rho) ? -1 : 1;
  return reconstruct(hp);
}

Cochain h_a(const CycScalar& a) {
  HappyParams hp;
  hp.a = a;
  return reconstruct(hp);
}

Cochain g_b(const CycScalar& b) {
  HappyParams hp;
  hp.b = b;
  return reconstruct(hp);
}

namespace {

void require_klein(const Cochain& phi, std::size_t degree) {
  if (!is_klein(phi.group()) || phi.degree() != degree)
    throw PreconditionError("expected a degree-" + std::to_string(degree) + " cochain on C2xC2");
}

std::optional<int> sign_of(const CycScalar& v) {
  if (v.is_one()) return 1;
  if ((-v).is_one()) return -1;
  return std::nullopt;
}

}  // namespace

bool is_happy(const Cochain& phi) {
  require_klein(phi, 3);
  int p = 1;
  for (std::size_t x : {sigma, tau, rho}) {
    auto s = sign_of(phi.at({x, x, x}));
    if (!s) return false;
    p *= *s;
  }
  const CycScalar pv(p);
  for (auto [x, y, z] : {std::array{sigma, tau, rho}, {tau, rho, sigma}, {rho, sigma, tau}, {rho, tau, sigma},
                         {sigma, rho, tau}, {tau, sigma, rho}})
    if (!(phi.at({x, y, z}) == pv)) return false;
  return true;
}

HappyParams happy_params(const Cochain& phi) {
  if (!is_happy(phi)) throw PreconditionError("cocycle is not happy");
  HappyParams hp;
  hp.eps_sigma = *sign_of(phi.at({sigma, sigma, sigma}));
  hp.eps_tau = *sign_of(phi.at({tau, tau, tau}));
  hp.eps_rho = *sign_of(phi.at({rho, rho, rho}));
  hp.a = phi.at({tau, sigma, sigma});
  hp.b = phi.at({sigma, tau, sigma});
  return hp;
}

Happified happify(const Cochain& phi) {
  require_klein(phi, 3);
  if (!is_normalized3(phi) || !is_cocycle3(phi)) throw PreconditionError("happify expects a normalized 3-cocycle");
  const CycScalar p = phi.at({sigma, sigma, sigma}) * phi.at({tau, tau, tau}) * phi.at({rho, rho, rho});
  KleinTwoCochainParams w;
  w.b1 = p;
  w.b5 = p;
  w.b2 = phi.at({sigma, tau, rho}).inverse();
  w.b3 = phi.at({rho, sigma, tau});
  w.b4 = phi.at({tau, sigma, rho});
  w.b6 = phi.at({sigma, rho, tau}).inverse();
  Cochain g = klein_two_cochain(w);
  return {phi * delta2(g), std::move(g)};
}

std::pair<CycScalar, CycScalar> distinct_triple_products(const Cochain& phi) {
  require_klein(phi, 3);
  CycScalar p = phi.at({sigma, tau, rho}) * phi.at({tau, rho, sigma}) * phi.at({rho, sigma, tau});
  CycScalar q = phi.at({rho, tau, sigma}) * phi.at({sigma, rho, tau}) * phi.at({tau, sigma, rho});
  return {p, q};
}

std::string to_string(SquareClass c) {
  switch (c) {
    case SquareClass::trivial: return "trivial";
    case SquareClass::nontrivial: return "nontrivial";
    case SquareClass::undecided: return "undecided";
  }
  return "undecided";
}

KleinCohomologyClass classify(const Cochain& phi, int conductor) {
  require_klein(phi, 3);
  if (first_cocycle3_violation(phi)) throw PreconditionError("classify expects a 3-cocycle");
  Normalized3 n = normalize3(phi);
  Happified h = happify(n.phi);
  HappyParams hp = happy_params(h.phi);
  KleinCohomologyClass out;
  out.eps = {hp.eps_sigma, hp.eps_tau, hp.eps_rho};
  out.b = hp.b;
  out.b_class = square_class(hp.b, conductor);
  return out;
}

Cochain coboundary_witness_h(const CycScalar& a) {
  if (a.is_zero()) throw PreconditionError("parameter a must be nonzero");
  KleinTwoCochainParams w;
  w.a1 = w.a2 = w.a3 = a;
  return klein_two_cochain(w);
}

Cochain coboundary_witness_g(const CycScalar& d) {
  if (d.is_zero()) throw PreconditionError("parameter d must be nonzero");
  KleinTwoCochainParams w;
  w.a1 = w.a2 = w.a3 = d;
  w.b4 = w.b5 = w.b6 = d;
  return klein_two_cochain(w);
}

std::array<std::size_t, 4> klein_projection(int i) {
  switch (i) {
    case 1: return {0, 0, 1, 1};
    case 2: return {0, 1, 0, 1};
    case 3: return {0, 1, 1, 0};
    default: throw PreconditionError("transport index must be 1, 2 or 3");
  }
}

Cochain pullback(const Cochain& c, const FiniteAbelianGroup& target, std::span<const std::size_t> map) {
  if (map.size() != target.size()) throw PreconditionError("group map has wrong domain size");
  std::vector<std::size_t> img(c.degree());
  return Cochain::from_function(target, c.degree(), [&](std::span<const std::size_t> args) {
    for (std::size_t k = 0; k < args.size(); ++k) img[k] = map[args[k]];
    return c.at(img);
  });
}

Cochain transport_t(int i, const Cochain& phi) {
  if (!(phi.group() == cyclic(2))) throw PreconditionError("transport expects a cochain on C2");
  auto proj = klein_projection(i);
  return pullback(phi, klein(), proj);
}

}  // namespace cocycle_lab
