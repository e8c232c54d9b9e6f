#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cocycle_lab/kernels.hpp"
#include "cocycle_lab/klein.hpp"

namespace cocycle_lab {

/// A pair (phi, R) describing a braided monoidal structure on G-graded spaces.
struct AbelianCocycle {
  Cochain phi;  // degree 3
  Cochain R;    // degree 2
  std::string label;

  const FiniteAbelianGroup& group() const { return phi.group(); }
  friend AbelianCocycle operator*(const AbelianCocycle& x, const AbelianCocycle& y);
  AbelianCocycle inverse() const;
  friend bool operator==(const AbelianCocycle& x, const AbelianCocycle& y) { return x.phi == y.phi && x.R == y.R; }
};

std::optional<kernels::HexagonFailure> first_hexagon_violation(const Cochain& phi, const Cochain& R);
bool is_abelian_cocycle(const Cochain& phi, const Cochain& R);
inline bool is_abelian_cocycle(const AbelianCocycle& ac) { return is_abelian_cocycle(ac.phi, ac.R); }

/// (delta2(psi), R_psi) with R_psi(x,y) = psi(x,y)^-1 psi(y,x).
AbelianCocycle abelian_coboundary(const Cochain& psi);

class QuadraticForm {
 public:
  QuadraticForm(FiniteAbelianGroup group, std::vector<CycScalar> values);

  const FiniteAbelianGroup& group() const { return group_; }
  const CycScalar& operator()(std::size_t x) const { return values_.at(x); }
  const std::vector<CycScalar>& values() const& { return values_; }
  std::vector<CycScalar> values() && { return std::move(values_); }

  friend QuadraticForm operator*(const QuadraticForm& a, const QuadraticForm& b);
  friend bool operator==(const QuadraticForm& a, const QuadraticForm& b) {
    return a.group_ == b.group_ && a.values_ == b.values_;
  }
  bool is_trivial() const;
  /// Order in the group of quadratic forms under pointwise product.
  int order() const;

 private:
  FiniteAbelianGroup group_;
  std::vector<CycScalar> values_;
};

/// Q(x) = R(x,x).
QuadraticForm trace(const AbelianCocycle& ac);

bool is_quadratic_form(const QuadraticForm& q);

/// All quadratic forms on G with values in the roots of unity of Q(zeta_conductor).
std::vector<QuadraticForm> enumerate_quadratic_forms(const FiniteAbelianGroup& g, int conductor);
/// The Klein-group criterion: Q(e)=1, Q(x)^4=1, Q(s)^2 Q(t)^2 Q(r)^2 = 1.
bool satisfies_klein_form_conditions(const QuadraticForm& q);

/// Generators of the Klein quadratic-form group, as (Q(sigma), Q(tau), Q(rho)).
QuadraticForm klein_form(const CycScalar& qs, const CycScalar& qt, const CycScalar& qr);
QuadraticForm klein_form_generator(const std::string& name);  // "A","B","C","E1","E2","E3"

/// Name of a Klein quadratic form as a product of the generators, such as "I",
/// "AB" or "BCE2"; derived from the group law. Empty if not in the group.
std::string klein_form_label(const QuadraticForm& q);
/// Position of a label in the canonical listing I, A, B, C, AB, AC, BC, ABC, E1, AE1, ...
int klein_label_rank(const std::string& label);

AbelianCocycle klein_braiding_trivial(int mu_sigma, int mu_tau, int mu_rho);

/// (phi_X, R) for |X| = 2 with mu_x^2 = eps_x and alpha = +1 or -1.
AbelianCocycle klein_braiding_phiX(KleinSubset x, const CycScalar& mu_sigma, const CycScalar& mu_tau,
                                   const CycScalar& mu_rho, int alpha = 1);

/// Class representatives, ordered by label rank: 32 when the conductor is
/// divisible by 4, else the 8 with trivial underlying cocycle.
std::vector<AbelianCocycle> enumerate_klein_braidings(int conductor);

bool is_symmetric(const AbelianCocycle& ac);
bool is_bilinear(const Cochain& R);

/// (phi_{nu^n}, R_nu) on C_n with R_nu(x,y) = nu^(xy); needs nu^(n^2) = nu^(2n) = 1.
AbelianCocycle cyclic_braiding(int n, const CycScalar& nu);

/// Normalized psi with x * y^-1 = (delta2(psi), R_psi), if one exists over mu_m.
std::optional<Cochain> abelian_cohomologous(const AbelianCocycle& x, const AbelianCocycle& y, std::int64_t m);

/// (1,1), (1,R2), (phi,R3), (phi,R4) on C2; only the first two when i is missing.
std::vector<AbelianCocycle> c2_abelian_cocycles(int conductor);
AbelianCocycle transport_t_ab(int i, const AbelianCocycle& ac);

/// All mu_m-valued R matrices (normalized) solving both hexagons with phi.
std::vector<Cochain> hexagon_solutions(const Cochain& phi, std::int64_t m,
                                       kernels::Exec exec = kernels::Exec::parallel);

}  // namespace cocycle_lab
