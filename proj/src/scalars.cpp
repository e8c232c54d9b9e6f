#include "cocycle_lab/scalars.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include "cocycle_lab/groups.hpp"

namespace cocycle_lab {
namespace {

// Q(zeta_{2m}) = Q(zeta_m) for odd m; stored conductors are never 2 mod 4.
int normalized_conductor(int n) { return n % 4 == 2 ? n / 2 : n; }

struct FieldData {
  int conductor = 1;
  int degree = 1;
  // x^k mod Phi_N for k in [0, N), each of length degree.
  std::vector<std::vector<long long>> powers;
};

std::vector<long long> poly_divide_exact(std::vector<long long> num, const std::vector<long long>& den) {
  // den is monic; num is divisible by den.
  std::size_t dn = den.size() - 1;
  std::vector<long long> q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    long long c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

const std::vector<long long>& cyclotomic_locked(int n, std::map<int, std::vector<long long>>& cache) {
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  std::vector<long long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = poly_divide_exact(p, cyclotomic_locked(d, cache));
  return cache.emplace(n, std::move(p)).first->second;
}

std::map<int, std::vector<long long>>& cyclotomic_cache() {
  static std::map<int, std::vector<long long>> c;
  return c;
}

const FieldData& field_data(int n) {
  static std::map<int, std::unique_ptr<FieldData>> cache;
  std::lock_guard lock(cache_mutex());
  if (auto it = cache.find(n); it != cache.end()) return *it->second;
  const auto& phi = cyclotomic_locked(n, cyclotomic_cache());
  auto fd = std::make_unique<FieldData>();
  fd->conductor = n;
  fd->degree = static_cast<int>(phi.size()) - 1;
  std::size_t deg = static_cast<std::size_t>(fd->degree);
  fd->powers.assign(static_cast<std::size_t>(n), std::vector<long long>(deg, 0));
  std::vector<long long> cur(deg, 0);
  cur[0] = 1;
  if (deg == 1 && n == 1) cur[0] = 1;
  for (int k = 0; k < n; ++k) {
    fd->powers[static_cast<std::size_t>(k)] = cur;
    // multiply by x and reduce with the monic Phi_n
    std::vector<long long> next(deg, 0);
    long long top = cur[deg - 1];
    for (std::size_t j = deg - 1; j > 0; --j) next[j] = cur[j - 1];
    next[0] = 0;
    if (top != 0)
      for (std::size_t j = 0; j < deg; ++j) next[j] -= top * phi[j];
    cur = std::move(next);
  }
  return *cache.emplace(n, std::move(fd)).first->second;
}

std::vector<Rational> reduce_mod_cyclotomic(int n, const std::vector<Rational>& poly) {
  const FieldData& fd = field_data(n);
  std::vector<Rational> out(static_cast<std::size_t>(fd.degree), Rational(0));
  for (std::size_t k = 0; k < poly.size(); ++k) {
    if (sgn(poly[k]) == 0) continue;
    const auto& row = fd.powers[k % static_cast<std::size_t>(n)];
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) out[j] += poly[k] * Rational(static_cast<long>(row[j]));
  }
  return out;
}

}  // namespace

const std::vector<long long>& cyclotomic_polynomial(int n) {
  if (n < 1) throw PreconditionError("conductor must be positive");
  std::lock_guard lock(cache_mutex());
  return cyclotomic_locked(n, cyclotomic_cache());
}

int totient(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

CycScalar::CycScalar() : conductor_(1), coeffs_{Rational(0)} {}
CycScalar::CycScalar(long v) : conductor_(1), coeffs_{Rational(v)} {}
CycScalar::CycScalar(const Rational& r) : conductor_(1), coeffs_{r} { coeffs_[0].canonicalize(); }

CycScalar::CycScalar(int conductor, std::vector<Rational> coeffs) {
  if (conductor < 1) throw PreconditionError("conductor must be positive");
  for (auto& c : coeffs) c.canonicalize();
  int target = normalized_conductor(conductor);
  if (target != conductor) {
    // zeta_{2m} = -zeta_m^{(m+1)/2} for odd m
    int m = target;
    std::vector<Rational> poly(static_cast<std::size_t>(m), Rational(0));
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      long long e = (static_cast<long long>(j) * ((m + 1) / 2)) % m;
      Rational c = coeffs[j];
      if (j % 2 == 1) c = -c;
      poly[static_cast<std::size_t>(e)] += c;
    }
    coeffs = std::move(poly);
  }
  conductor_ = target;
  coeffs_ = reduce_mod_cyclotomic(target, coeffs);
}

CycScalar CycScalar::root_of_unity(int conductor, long long k) {
  if (conductor < 1) throw PreconditionError("conductor must be positive");
  long long n = conductor;
  long long r = ((k % n) + n) % n;
  std::vector<Rational> poly(static_cast<std::size_t>(r) + 1, Rational(0));
  poly[static_cast<std::size_t>(r)] = 1;
  return CycScalar(conductor, std::move(poly));
}

CycScalar root_of_unity(int conductor, long long k) { return CycScalar::root_of_unity(conductor, k); }

CycScalar CycScalar::lifted(int target) const {
  target = normalized_conductor(target);
  if (target == conductor_) return *this;
  if (target % conductor_ != 0) throw PreconditionError("lift target is not a multiple of the conductor");
  std::size_t step = static_cast<std::size_t>(target / conductor_);
  std::vector<Rational> poly((coeffs_.size() - 1) * step + 1, Rational(0));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) poly[j * step] = coeffs_[j];
  CycScalar out;
  out.conductor_ = target;
  out.coeffs_ = reduce_mod_cyclotomic(target, poly);
  return out;
}

bool CycScalar::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

bool CycScalar::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (std::size_t j = 1; j < coeffs_.size(); ++j)
    if (sgn(coeffs_[j]) != 0) return false;
  return true;
}

std::optional<Rational> CycScalar::as_rational() const {
  for (std::size_t j = 1; j < coeffs_.size(); ++j)
    if (sgn(coeffs_[j]) != 0) return std::nullopt;
  return coeffs_[0];
}

CycScalar CycScalar::operator-() const {
  CycScalar out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

namespace {
void align(CycScalar& a, CycScalar& b) {
  if (a.conductor() == b.conductor()) return;
  int l = std::lcm(a.conductor(), b.conductor());
  a = a.lifted(l);
  b = b.lifted(l);
}
}  // namespace

CycScalar& CycScalar::operator+=(const CycScalar& o) {
  CycScalar rhs = o;
  align(*this, rhs);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
  return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& o) { return *this += -o; }

CycScalar& CycScalar::operator*=(const CycScalar& o) {
  CycScalar rhs = o;
  align(*this, rhs);
  if (coeffs_.size() == 1) {
    coeffs_[0] *= rhs.coeffs_[0];
    return *this;
  }
  std::vector<Rational> prod(coeffs_.size() * 2 - 1, Rational(0));
  for (std::size_t a = 0; a < coeffs_.size(); ++a) {
    if (sgn(coeffs_[a]) == 0) continue;
    for (std::size_t b = 0; b < rhs.coeffs_.size(); ++b)
      if (sgn(rhs.coeffs_[b]) != 0) prod[a + b] += coeffs_[a] * rhs.coeffs_[b];
  }
  coeffs_ = reduce_mod_cyclotomic(conductor_, prod);
  return *this;
}

CycScalar& CycScalar::operator/=(const CycScalar& o) { return *this *= o.inverse(); }

bool operator==(const CycScalar& a, const CycScalar& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  CycScalar x = a, y = b;
  align(x, y);
  return x.coeffs_ == y.coeffs_;
}

CycScalar CycScalar::galois(long long k) const {
  long long n = conductor_;
  long long kk = ((k % n) + n) % n;
  if (std::gcd(kk, n) != 1) throw PreconditionError("Galois exponent must be coprime to the conductor");
  std::vector<Rational> poly(static_cast<std::size_t>(n), Rational(0));
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    poly[static_cast<std::size_t>((static_cast<long long>(j) * kk) % n)] += coeffs_[j];
  CycScalar out;
  out.conductor_ = conductor_;
  out.coeffs_ = reduce_mod_cyclotomic(conductor_, poly);
  return out;
}

CycScalar CycScalar::inverse() const {
  if (is_zero()) throw std::domain_error("inversion of zero");
  if (coeffs_.size() == 1) return CycScalar(Rational(1) / coeffs_[0]);
  // x^{-1} = (product of the other conjugates) / norm(x)
  CycScalar others(1);
  for (int k = 2; k < conductor_; ++k)
    if (std::gcd(k, conductor_) == 1) others *= galois(k);
  CycScalar norm = *this * others;
  auto r = norm.as_rational();
  if (!r) throw std::logic_error("field norm is not rational");
  Rational inv_norm = Rational(1) / *r;
  for (auto& c : others.coeffs_) c *= inv_norm;
  return others;
}

CycScalar CycScalar::pow(long long k) const {
  if (k < 0) return inverse().pow(-k);
  CycScalar result(1), base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

std::string CycScalar::to_string() const {
  if (auto r = as_rational()) return r->get_str();
  if (auto k = as_root_exponent(*this, roots_of_unity_order(conductor_))) {
    int n = roots_of_unity_order(conductor_);
    if (n == 4) return *k == 1 ? "i" : "-i";
    return "zeta" + std::to_string(n) + (*k == 1 ? "" : "^" + std::to_string(*k));
  }
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const Rational& c = coeffs_[j];
    if (sgn(c) == 0) continue;
    std::string unit = j == 0 ? "" : (conductor_ == 4 ? "i" : "zeta" + std::to_string(conductor_) + (j == 1 ? "" : "^" + std::to_string(j)));
    if (!first) os << (sgn(c) > 0 ? "+" : "-");
    else if (sgn(c) < 0) os << "-";
    Rational a = abs(c);
    if (unit.empty()) os << a.get_str();
    else if (a == 1) os << unit;
    else os << a.get_str() << "*" << unit;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycScalar& x) { return os << x.to_string(); }

std::optional<int> as_root_exponent(const CycScalar& x, int n) {
  if (n < 1) throw PreconditionError("root order must be positive");
  if (x.is_zero()) return std::nullopt;
  int l = std::lcm(x.conductor(), normalized_conductor(n));
  CycScalar xl = x.lifted(l);
  for (int k = 0; k < n; ++k)
    if (CycScalar::root_of_unity(n, k).lifted(l) == xl) return k;
  return std::nullopt;
}

bool is_square_in_mu(const CycScalar& x, int n) {
  auto k = as_root_exponent(x, n);
  if (!k) throw UndecidableError("square-class undecidable in this backend: value is not in mu_" + std::to_string(n));
  if (n % 2 == 1) return true;
  return *k % 2 == 0;
}

int roots_of_unity_order(int n) {
  n = normalized_conductor(n);
  return n % 2 == 1 ? 2 * n : n;
}

bool field_contains(int field, int value_conductor) {
  return normalized_conductor(field) % normalized_conductor(value_conductor) == 0;
}

namespace {
// Squarefree kernel of a positive integer together with perfect-square test.
mpz_class squarefree_part(mpz_class v) {
  mpz_class result = 1;
  for (mpz_class p = 2; p * p <= v; ++p) {
    int e = 0;
    while (v % p == 0) {
      v /= p;
      ++e;
    }
    if (e % 2 == 1) result *= p;
  }
  return result * v;
}
}  // namespace

bool is_rational_square_in_field(const Rational& r, int conductor) {
  if (sgn(r) == 0) return true;
  // r = s^2 * t with t a squarefree integer (sign included)
  mpz_class num = abs(r.get_num()), den = r.get_den();
  mpz_class t = squarefree_part(num * den);
  if (sgn(r) < 0) t = -t;
  if (t == 1) return true;
  // sqrt(t) lies in Q(zeta_N) iff the conductor of Q(sqrt t) divides N
  mpz_class t_mod4 = ((t % 4) + 4) % 4;
  mpz_class quad_conductor = t_mod4 == 1 ? mpz_class(abs(t)) : mpz_class(4 * abs(t));
  mpz_class n = normalized_conductor(conductor);
  return n % quad_conductor == 0;
}

SquareClass square_class(const CycScalar& x, int conductor) {
  if (x.is_zero()) throw PreconditionError("square class of zero is undefined");
  if (!field_contains(conductor, x.conductor())) throw PreconditionError("value lies outside the coefficient field");
  int w = roots_of_unity_order(conductor);
  if (as_root_exponent(x, w)) return is_square_in_mu(x, w) ? SquareClass::trivial : SquareClass::nontrivial;
  if (auto r = x.as_rational())
    return is_rational_square_in_field(*r, conductor) ? SquareClass::trivial : SquareClass::nontrivial;
  return SquareClass::undecided;
}

}  // namespace cocycle_lab
