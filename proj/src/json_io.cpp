#include "cocycle_lab/json_io.hpp"

#include "cocycle_lab/scalar_parse.hpp"

namespace cocycle_lab::json_io {

namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

std::vector<std::size_t> tuple_from_json(const FiniteAbelianGroup& g, const json& j, std::size_t arity) {
  if (!j.is_array() || j.size() != arity) throw ParseError("expected " + std::to_string(arity) + " elements");
  std::vector<std::size_t> t;
  for (const auto& e : j) t.push_back(g.index_of(element_from_json(g, e)));
  return t;
}

}  // namespace

json to_json(const FiniteAbelianGroup& g) { return {{"orders", g.orders()}}; }

json to_json(const GroupElement& x) { return x.exponents(); }

json to_json(const CycScalar& x) {
  json coeffs = json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back({c.get_num().get_str(), c.get_den().get_str()});
  return {{"conductor", x.conductor()}, {"coeffs", coeffs}};
}

json to_json(const Cochain& c) {
  const auto& g = c.group();
  json values = json::array();
  for (const auto& t : tuples(g, c.degree())) {
    json args = json::array();
    for (std::size_t x : t) args.push_back(to_json(g.element(x)));
    values.push_back({{"args", args}, {"value", to_json(c.at(t))}});
  }
  return {{"group", to_json(g)}, {"degree", c.degree()}, {"values", values}};
}

json to_json(const AbelianCocycle& ac) {
  return {{"phi", to_json(ac.phi)}, {"R", to_json(ac.R)}, {"label", ac.label}};
}

json to_json(const GroupAlgebraTensor& t) {
  json terms = json::array();
  for (const auto& [k, c] : t.terms()) {
    json elems = json::array();
    for (std::size_t x : k) elems.push_back(to_json(t.group().element(x)));
    terms.push_back({{"elems", elems}, {"coeff", to_json(c)}});
  }
  return {{"group", to_json(t.group())}, {"arity", t.arity()}, {"terms", terms}};
}

json to_json(const KleinCohomologyClass& c) {
  return {{"eps", c.eps}, {"b_class", to_string(c.b_class)}, {"b", to_json(c.b)}};
}

json to_json(const CohomologyReport& r) {
  json gens = json::array();
  for (const auto& g : r.generators) gens.push_back(to_json(g));
  return {{"modulus", r.modulus}, {"factors", r.factors}, {"order", r.order()}, {"generators", gens}};
}

FiniteAbelianGroup group_from_json(const json& j) {
  const json& o = field(j, "orders");
  if (!o.is_array()) throw ParseError("\"orders\" must be an array");
  std::vector<int> orders;
  for (const auto& v : o) {
    if (!v.is_number_integer()) throw ParseError("group orders must be integers");
    orders.push_back(v.get<int>());
  }
  return FiniteAbelianGroup(std::move(orders));
}

GroupElement element_from_json(const FiniteAbelianGroup& g, const json& j) {
  if (!j.is_array() || j.size() != g.rank()) throw ParseError("element must be an array of " + std::to_string(g.rank()) + " exponents");
  std::vector<long long> ex;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ParseError("element exponents must be integers");
    ex.push_back(v.get<long long>());
  }
  return g.reduce(ex);
}

CycScalar scalar_from_json(const json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return CycScalar(j.get<long>());
  const int n = field(j, "conductor").get<int>();
  if (n < 1) throw ParseError("conductor must be positive");
  std::vector<Rational> coeffs;
  for (const auto& c : field(j, "coeffs")) {
    if (!c.is_array() || c.size() != 2) throw ParseError("rational coefficients are [numerator, denominator] pairs");
    Rational r(mpz_class(c[0].get<std::string>()), mpz_class(c[1].get<std::string>()));
    if (r.get_den() == 0) throw ParseError("zero denominator");
    r.canonicalize();
    coeffs.push_back(std::move(r));
  }
  return CycScalar(n, std::move(coeffs));
}

Cochain cochain_from_json(const json& j) {
  const FiniteAbelianGroup g = group_from_json(field(j, "group"));
  const auto degree = field(j, "degree").get<std::size_t>();
  Cochain c(g, degree);
  std::vector<bool> seen(c.size(), false);
  for (const auto& entry : field(j, "values")) {
    auto t = tuple_from_json(g, field(entry, "args"), degree);
    const std::size_t flat = c.flat_index(t);
    if (seen[flat]) throw ParseError("duplicate cochain entry");
    seen[flat] = true;
    CycScalar v = scalar_from_json(field(entry, "value"));
    if (v.is_zero()) throw ParseError("cochain values must be nonzero");
    c.set_flat(flat, std::move(v));
  }
  for (bool s : seen)
    if (!s) throw ParseError("cochain table is incomplete: expected " + std::to_string(c.size()) + " entries");
  return c;
}

AbelianCocycle abelian_cocycle_from_json(const json& j) {
  AbelianCocycle ac{cochain_from_json(field(j, "phi")), cochain_from_json(field(j, "R")),
                    j.value("label", std::string())};
  if (ac.phi.degree() != 3 || ac.R.degree() != 2 || !(ac.phi.group() == ac.R.group()))
    throw ParseError("braiding needs a 3-cochain and a 2-cochain on one group");
  return ac;
}

GroupAlgebraTensor tensor_from_json(const json& j) {
  const FiniteAbelianGroup g = group_from_json(field(j, "group"));
  const auto arity = field(j, "arity").get<std::size_t>();
  GroupAlgebraTensor t(g, arity);
  for (const auto& term : field(j, "terms")) t.add_term(tuple_from_json(g, field(term, "elems"), arity), scalar_from_json(field(term, "coeff")));
  return t;
}

}  // namespace cocycle_lab::json_io
