#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "cocycle_lab/braidings.hpp"

namespace cocycle_lab {

/// Sparse element of k[G]^{(x) m}: coefficients on tensors of group elements.
/// Legs are numbered from 1 in the leg-wise operations.
class GroupAlgebraTensor {
 public:
  using Key = std::vector<std::size_t>;

  GroupAlgebraTensor(FiniteAbelianGroup group, std::size_t arity);

  static GroupAlgebraTensor one(const FiniteAbelianGroup& g, std::size_t arity);
  static GroupAlgebraTensor basis(const FiniteAbelianGroup& g, Key elems, CycScalar coeff = CycScalar(1));

  const FiniteAbelianGroup& group() const { return group_; }
  std::size_t arity() const { return arity_; }
  const std::map<Key, CycScalar>& terms() const { return terms_; }
  CycScalar coeff(const Key& k) const;

  void add_term(const Key& k, const CycScalar& c);

  GroupAlgebraTensor& operator+=(const GroupAlgebraTensor& o);
  GroupAlgebraTensor& operator-=(const GroupAlgebraTensor& o);
  GroupAlgebraTensor& operator*=(const CycScalar& s);
  friend GroupAlgebraTensor operator+(GroupAlgebraTensor a, const GroupAlgebraTensor& b) { return a += b; }
  friend GroupAlgebraTensor operator-(GroupAlgebraTensor a, const GroupAlgebraTensor& b) { return a -= b; }
  friend GroupAlgebraTensor operator*(GroupAlgebraTensor a, const CycScalar& s) { return a *= s; }
  friend GroupAlgebraTensor operator*(const CycScalar& s, GroupAlgebraTensor a) { return a *= s; }
  /// Product in the algebra k[G]^{(x) m} (componentwise group multiplication).
  friend GroupAlgebraTensor operator*(const GroupAlgebraTensor& a, const GroupAlgebraTensor& b);
  friend bool operator==(const GroupAlgebraTensor& a, const GroupAlgebraTensor& b);

  friend GroupAlgebraTensor tensor_product(const GroupAlgebraTensor& a, const GroupAlgebraTensor& b);
  /// Applies g -> g (x) g on the given leg.
  GroupAlgebraTensor apply_delta_on_leg(std::size_t leg) const;
  /// Applies g -> 1 on the given leg.
  GroupAlgebraTensor apply_counit_on_leg(std::size_t leg) const;

  std::string to_string() const;

 private:
  FiniteAbelianGroup group_;
  std::size_t arity_;
  std::map<Key, CycScalar> terms_;
};

/// Primitive roots used for the characters of G, one per cyclic factor.
using CharacterRoots = std::vector<CycScalar>;
CharacterRoots default_roots(const FiniteAbelianGroup& g);

/// chi_x(g) = prod_i xi_i^(x_i g_i).
CycScalar character(const FiniteAbelianGroup& g, const CharacterRoots& roots, std::size_t x, std::size_t h);

/// Image of the dual basis vector P_x in k[G]: (1/|G|) sum_g chi_x(g)^-1 g.
GroupAlgebraTensor dual_idempotent(const FiniteAbelianGroup& g, const CharacterRoots& roots, std::size_t x);
/// Image of the basis element x in k[G]^* as values on the group: g -> chi_x(g).
std::vector<CycScalar> dual_character(const FiniteAbelianGroup& g, const CharacterRoots& roots, std::size_t x);

/// Cyclic case with a chosen primitive n-th root xi.
GroupAlgebraTensor cyclic_dual_idempotent(int n, const CycScalar& xi, std::size_t j);

/// sum phi(x_1..x_m) P_{x_1} (x) ... (x) P_{x_m}, mapped leg-wise into k[G].
GroupAlgebraTensor transport(const Cochain& phi, const CharacterRoots& roots);
/// Inverse of transport: coefficients on the idempotent basis.
Cochain untransport(const GroupAlgebraTensor& t, const CharacterRoots& roots);

/// Multiplicative inverse in k[G]^{(x) m}; throws if not invertible.
GroupAlgebraTensor tensor_inverse(const GroupAlgebraTensor& t);

struct HarrisonCheck {
  bool invertible = false;
  bool pentagon = false;
  bool normalized = false;
  bool ok() const { return invertible && pentagon && normalized; }
};
HarrisonCheck harrison_check(const GroupAlgebraTensor& phi);
bool is_harrison_3cocycle(const GroupAlgebraTensor& phi);

/// Closed expression 1 - (1/n^2)(1 - c^l) (x) sum_{i,j} (1 - n d_ij)(xi^j - n d_j0) c^i (x) c^j.
GroupAlgebraTensor reassociator_phi_l(int n, int l, const CycScalar& xi);
/// sum phi_q(c^u,c^v,c^s) P_u (x) P_v (x) P_s with q = xi^l, mapped into k[C_n].
GroupAlgebraTensor reassociator_transport(int n, int l, const CycScalar& xi);

/// Leg-wise image of a Klein 3-cocycle under P_x -> u_x.
GroupAlgebraTensor klein_reassociator(const Cochain& phi);
/// 1 - 2 p (x) p (x) p with p = (1 - x)/2.
GroupAlgebraTensor klein_phi_x(std::size_t x);

/// k_F^F[G]: x.y = F(x,y) xy, Delta_F(x) = (1/|G|) sum_u F(u,u^-1 x)^-1 u (x) u^-1 x,
/// eps(x) = |G| delta_{x,e}, living in the category braided by (delta2(F^-1), R_{F^-1}).
class WeakBraidedHopf {
 public:
  explicit WeakBraidedHopf(Cochain f);

  const FiniteAbelianGroup& group() const { return f_.group(); }
  const Cochain& F() const { return f_; }
  const AbelianCocycle& ambient() const { return ambient_; }

  /// x.y as (coefficient, element).
  std::pair<CycScalar, std::size_t> mul(std::size_t x, std::size_t y) const;
  GroupAlgebraTensor delta(std::size_t x) const;
  CycScalar counit(std::size_t x) const;

 private:
  Cochain f_;
  AbelianCocycle ambient_;
};

WeakBraidedHopf weak_hopf_build(const Cochain& f);

struct WeakHopfReport {
  static constexpr std::array<const char*, 6> names = {
      "associativity up to the associator", "braided commutativity", "braided cocommutativity",
      "counit law", "coassociativity up to the associator", "multiplicativity of the comultiplication"};
  std::array<bool, 6> passed{};
  std::array<std::string, 6> detail{};
  bool all() const;
  std::string to_string() const;
};
WeakHopfReport check_weak_hopf(const WeakBraidedHopf& w);

/// F(c^a, c^b) = q^(-(a-1)ab/2) on C_n.
Cochain prop53_cochain(int n, const CycScalar& q);
WeakBraidedHopf prop53_structure(int n, const CycScalar& q);

struct DeltaCrosscheckRow {
  int a, l;
  long long displayed_exponent;  // (l-1) l (a-l)
  long long derived_exponent;    // (l-1) l ((a-l) mod n) / 2
  CycScalar displayed, derived;
  bool agree;
};
struct DeltaCrosscheck {
  int n;
  CycScalar q;
  std::vector<DeltaCrosscheckRow> rows;
  std::size_t agreements() const;
  std::string to_string() const;
};
/// Compares the displayed comultiplication coefficients with those of Delta_F.
DeltaCrosscheck prop53_delta_crosscheck(int n, const CycScalar& q);

/// F = (witness)^-1 for the two Klein families.
WeakBraidedHopf klein_weak_hopf_h(const CycScalar& a);
WeakBraidedHopf klein_weak_hopf_g(const CycScalar& d);

}  // namespace cocycle_lab
