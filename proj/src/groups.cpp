#include "cocycle_lab/groups.hpp"

#include <numeric>
#include <ostream>
#include <sstream>

namespace cocycle_lab {

std::ostream& operator<<(std::ostream& os, const GroupElement& x) {
  os << '(';
  for (std::size_t i = 0; i < x.rank(); ++i) os << (i ? "," : "") << x[i];
  return os << ')';
}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> orders) : orders_(std::move(orders)) {
  for (int n : orders_) {
    if (n < 1) throw PreconditionError("cyclic factor orders must be positive");
    size_ *= static_cast<std::size_t>(n);
    if (size_ > kMaxOrder) throw PreconditionError("group order exceeds supported bound of 256");
  }
  auto t = std::make_shared<Tables>();
  t->mul.resize(size_ * size_);
  t->inv.resize(size_);
  for (std::size_t x = 0; x < size_; ++x) {
    GroupElement ex = element(x);
    t->inv[x] = index_of(inverse(ex));
    for (std::size_t y = 0; y < size_; ++y) t->mul[x * size_ + y] = index_of(mul(ex, element(y)));
  }
  tables_ = std::move(t);
}

void FiniteAbelianGroup::check_element(const GroupElement& x) const {
  if (x.rank() != rank()) throw PreconditionError("element rank does not match group");
  for (std::size_t i = 0; i < rank(); ++i)
    if (x[i] < 0 || x[i] >= orders_[i]) throw PreconditionError("element exponent is not canonical");
}

GroupElement FiniteAbelianGroup::identity() const { return GroupElement(std::vector<int>(rank(), 0)); }

GroupElement FiniteAbelianGroup::element(std::size_t index) const {
  if (index >= size_) throw std::out_of_range("group element index");
  std::vector<int> e(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    e[i] = static_cast<int>(index % static_cast<std::size_t>(orders_[i]));
    index /= static_cast<std::size_t>(orders_[i]);
  }
  return GroupElement(std::move(e));
}

std::size_t FiniteAbelianGroup::index_of(const GroupElement& x) const {
  check_element(x);
  std::size_t idx = 0;
  for (std::size_t i = rank(); i-- > 0;) idx = idx * static_cast<std::size_t>(orders_[i]) + static_cast<std::size_t>(x[i]);
  return idx;
}

GroupElement FiniteAbelianGroup::reduce(std::span<const long long> exponents) const {
  if (exponents.size() != rank()) throw PreconditionError("exponent vector rank does not match group");
  std::vector<int> e(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    long long n = orders_[i];
    e[i] = static_cast<int>(((exponents[i] % n) + n) % n);
  }
  return GroupElement(std::move(e));
}

GroupElement FiniteAbelianGroup::mul(const GroupElement& x, const GroupElement& y) const {
  check_element(x);
  check_element(y);
  std::vector<int> e(rank());
  for (std::size_t i = 0; i < rank(); ++i) e[i] = (x[i] + y[i]) % orders_[i];
  return GroupElement(std::move(e));
}

GroupElement FiniteAbelianGroup::inverse(const GroupElement& x) const {
  check_element(x);
  std::vector<int> e(rank());
  for (std::size_t i = 0; i < rank(); ++i) e[i] = (orders_[i] - x[i]) % orders_[i];
  return GroupElement(std::move(e));
}

GroupElement FiniteAbelianGroup::pow(const GroupElement& x, long long k) const {
  check_element(x);
  std::vector<long long> e(rank());
  for (std::size_t i = 0; i < rank(); ++i) e[i] = static_cast<long long>(x[i]) * (k % orders_[i]);
  return reduce(e);
}

std::size_t FiniteAbelianGroup::order_of(const GroupElement& x) const {
  check_element(x);
  std::size_t ord = 1;
  for (std::size_t i = 0; i < rank(); ++i) {
    std::size_t n = static_cast<std::size_t>(orders_[i]);
    std::size_t oi = n / std::gcd(n, static_cast<std::size_t>(x[i]));
    ord = std::lcm(ord, oi);
  }
  return ord;
}

std::string FiniteAbelianGroup::to_string() const {
  if (is_klein(*this)) return "C2xC2";
  std::ostringstream os;
  if (orders_.empty()) return "trivial";
  for (std::size_t i = 0; i < rank(); ++i) os << (i ? "x" : "") << 'C' << orders_[i];
  return os.str();
}

FiniteAbelianGroup klein() { return FiniteAbelianGroup({2, 2}); }

FiniteAbelianGroup cyclic(int n) {
  if (n < 1) throw PreconditionError("cyclic group order must be at least 1");
  return FiniteAbelianGroup({n});
}

bool is_klein(const FiniteAbelianGroup& g) { return g.orders() == std::vector<int>{2, 2}; }

KleinElements klein_elements() {
  return {GroupElement({0, 0}), GroupElement({1, 0}), GroupElement({0, 1}), GroupElement({1, 1})};
}

std::string element_name(const FiniteAbelianGroup& g, std::size_t index) {
  if (is_klein(g)) {
    static const char* names[] = {"e", "sigma", "tau", "rho"};
    return names[index];
  }
  if (g.rank() == 1) {
    if (index == 0) return "e";
    if (index == 1) return "c";
    return "c^" + std::to_string(index);
  }
  std::ostringstream os;
  os << g.element(index);
  return os.str();
}

std::uint64_t tuple_count(const FiniteAbelianGroup& g, std::size_t arity) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    count *= g.size();
    if (count > TupleRange::kMaxTuples) throw PreconditionError("tuple enumeration exceeds 10^8 tuples");
  }
  return count;
}

TupleRange::TupleRange(const FiniteAbelianGroup& g, std::size_t arity)
    : base_(g.size()), arity_(arity), count_(tuple_count(g, arity)) {}

TupleRange::iterator::iterator(std::size_t base, std::size_t arity, std::uint64_t pos)
    : base_(base), pos_(pos), current_(arity, 0) {
  unflatten_tuple(static_cast<std::size_t>(pos), base, current_);
}

TupleRange::iterator& TupleRange::iterator::operator++() {
  ++pos_;
  for (std::size_t k = current_.size(); k-- > 0;) {
    if (++current_[k] < base_) break;
    current_[k] = 0;
  }
  return *this;
}

TupleRange tuples(const FiniteAbelianGroup& g, std::size_t arity) { return TupleRange(g, arity); }

}  // namespace cocycle_lab
