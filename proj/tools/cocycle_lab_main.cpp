// cocycle-lab: command-line front-end for the cocycle_lab library.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "cocycle_lab/coherence.hpp"
#include "cocycle_lab/cohomology.hpp"
#include "cocycle_lab/hopf.hpp"
#include "cocycle_lab/json_io.hpp"
#include "cocycle_lab/klein.hpp"
#include "cocycle_lab/scalar_parse.hpp"
#include "cocycle_lab/verify.hpp"

namespace {

using namespace cocycle_lab;
using json_io::json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUndecided = 2;

// Thrown to leave a subcommand with a specific exit code after output was written.
struct ExitStatus {
  int code;
};

struct Global {
  int conductor = 4;
  bool conductor_given = false;
};

json read_json(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    buf << in.rdbuf();
  }
  return json::parse(buf.str());
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

int field_conductor(const Global& g, int needed) {
  if (g.conductor_given) {
    if (!field_contains(g.conductor, needed))
      throw PreconditionError("values need Q(zeta_" + std::to_string(needed) + "), which is not inside Q(zeta_" +
                              std::to_string(g.conductor) + ")");
    return g.conductor;
  }
  return std::lcm(g.conductor, needed);
}

CycScalar scalar_in_field(const Global& g, const std::string& text) {
  CycScalar v = parse_scalar(text);
  if (!field_contains(g.conductor, v.conductor()))
    throw PreconditionError("scalar " + text + " does not lie in Q(zeta_" + std::to_string(g.conductor) + ")");
  return v;
}

Cochain lifted(const Cochain& c, int conductor) {
  return Cochain::from_function(c.group(), c.degree(),
                                [&](std::span<const std::size_t> t) { return c.at(t).lifted(conductor); });
}

FiniteAbelianGroup parse_group(const std::string& text, int n) {
  if (text == "klein") return klein();
  if (text == "cyclic") return cyclic(n);
  std::vector<int> orders;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ',');) orders.push_back(std::stoi(part));
  if (orders.empty()) throw std::invalid_argument("group must be klein, cyclic or a list of orders such as 2,4");
  return FiniteAbelianGroup(std::move(orders));
}

std::string tuple_name(const FiniteAbelianGroup& g, std::span<const std::size_t> t) {
  std::string s = "(";
  for (std::size_t k = 0; k < t.size(); ++k) s += (k ? "," : "") + element_name(g, t[k]);
  return s + ")";
}

// ---- generate ----

struct GenerateArgs {
  std::string family;
  std::string X;
  std::string a = "1", b = "1", q;
  int n = 2;
};

void cmd_generate(Global g, const GenerateArgs& args) {
  Cochain phi(klein(), 3);
  int needed = 4;
  if (args.family == "phi_X") {
    phi = phi_X(parse_klein_subset(args.X));
  } else if (args.family == "h_a") {
    phi = h_a(scalar_in_field(g, args.a));
  } else if (args.family == "g_b") {
    phi = g_b(scalar_in_field(g, args.b));
  } else if (args.family == "phi_q" || args.family == "qabc") {
    if (args.n < 1) throw PreconditionError("n must be positive");
    needed = args.n;
    g.conductor = field_conductor(g, needed);
    const CycScalar q = args.q.empty() ? root_of_unity(args.n, 1) : scalar_in_field(g, args.q);
    phi = args.family == "phi_q" ? cyclic_phi_q(args.n, q) : cyclic_qabc(args.n, q);
  } else {
    throw std::invalid_argument("unknown family " + args.family);
  }
  emit(json_io::to_json(lifted(phi, g.conductor)));
}

// ---- classify ----

void cmd_classify(const Global& g, const std::string& input) {
  const Cochain phi = json_io::cochain_from_json(read_json(input));
  if (!is_klein(phi.group()) || phi.degree() != 3) throw PreconditionError("classify expects a 3-cochain on C2xC2");
  if (auto bad = first_cocycle3_violation(phi)) {
    std::cerr << "not a 3-cocycle: the cocycle identity fails at " << tuple_name(phi.group(), *bad) << '\n';
    emit({{"cocycle", false}, {"failing_quadruple", tuple_name(phi.group(), *bad)}});
    throw ExitStatus{kExitInvalid};
  }
  KleinCohomologyClass cls;
  try {
    cls = classify(phi, g.conductor);
  } catch (const UndecidableError& e) {
    std::cerr << "undecided: " << e.what() << '\n';
    emit({{"b_class", "undecided"}});
    throw ExitStatus{kExitUndecided};
  }
  emit(json_io::to_json(cls));
  if (cls.b_class == SquareClass::undecided) throw ExitStatus{kExitUndecided};
}

// ---- braidings ----

std::vector<AbelianCocycle> cyclic_braidings(int n, int conductor) {
  const int m = std::gcd(n * n, 2 * n);
  if (!field_contains(conductor, m))
    throw PreconditionError("braidings on C_" + std::to_string(n) + " need Q(zeta_" + std::to_string(m) + ")");
  std::vector<AbelianCocycle> out;
  for (int k = 0; k < m; ++k) {
    out.push_back(cyclic_braiding(n, root_of_unity(m, k)));
    out.back().label = "nu=zeta" + std::to_string(m) + "^" + std::to_string(k);
  }
  return out;
}

std::string braiding_row(const AbelianCocycle& ac) {
  const auto& g = ac.group();
  std::ostringstream os;
  os << ac.label << "\tQ:";
  const QuadraticForm q = trace(ac);
  for (std::size_t x = 1; x < g.size(); ++x) os << ' ' << element_name(g, x) << '=' << q(x).to_string();
  os << "\tR:";
  bool any = false;
  for (const auto& t : tuples(g, 2))
    if (!ac.R.at(t).is_one()) {
      os << ' ' << tuple_name(g, t) << '=' << ac.R.at(t).to_string();
      any = true;
    }
  if (!any) os << " trivial";
  return os.str();
}

void cmd_braidings(const Global& g, const std::string& group, int n, const std::string& format) {
  std::vector<AbelianCocycle> reps;
  if (group == "klein") {
    reps = enumerate_klein_braidings(g.conductor);
  } else if (group == "cyclic") {
    reps = cyclic_braidings(n, g.conductor);
  } else {
    throw std::invalid_argument("--group must be klein or cyclic");
  }
  if (format == "table") {
    for (const auto& r : reps) std::cout << braiding_row(r) << '\n';
    return;
  }
  json out = json::array();
  for (const auto& r : reps) out.push_back(json_io::to_json(r));
  emit(out);
}

// ---- check-hexagon ----

void cmd_check_hexagon(const std::string& phi_path, const std::string& r_path, const std::string& input) {
  AbelianCocycle ac{Cochain(klein(), 3), Cochain(klein(), 2), ""};
  if (!input.empty()) {
    ac = json_io::abelian_cocycle_from_json(read_json(input));
  } else {
    if (phi_path.empty() || r_path.empty()) throw std::invalid_argument("give --phi and --r, or --input");
    ac.phi = json_io::cochain_from_json(read_json(phi_path));
    ac.R = json_io::cochain_from_json(read_json(r_path));
    if (ac.phi.degree() != 3 || ac.R.degree() != 2 || !(ac.phi.group() == ac.R.group()))
      throw PreconditionError("--phi must be a 3-cochain and --r a 2-cochain on the same group");
  }
  json out = {{"pentagon", is_cocycle3(ac.phi)}};
  const auto fail = first_hexagon_violation(ac.phi, ac.R);
  out["hexagons"] = !fail;
  if (fail) {
    std::vector<std::size_t> t(3);
    unflatten_tuple(fail->flat, ac.group().size(), t);
    out["failure"] = {{"hexagon", fail->hexagon}, {"triple", tuple_name(ac.group(), t)}};
  } else {
    out["label"] = is_klein(ac.group()) ? klein_form_label(trace(ac)) : "";
  }
  emit(out);
  if (!out["pentagon"].get<bool>() || fail) throw ExitStatus{kExitInvalid};
}

// ---- cohomology ----

void cmd_cohomology(const std::string& group, int n, std::size_t degree, std::int64_t modulus) {
  emit(json_io::to_json(cohomology(parse_group(group, n), degree, modulus)));
}

// ---- hopf ----

void cmd_hopf_reassociator(const Global& g, int n, int l, const std::string& form, bool check) {
  if (n < 1) throw PreconditionError("n must be positive");
  if (l < 0 || l >= n) throw PreconditionError("l must lie in 0..n-1");
  (void)field_conductor(g, n);
  const CycScalar xi = root_of_unity(n, 1);
  GroupAlgebraTensor t = form == "closed" ? reassociator_phi_l(n, l, xi) : reassociator_transport(n, l, xi);
  json out = json_io::to_json(t);
  if (check) {
    const HarrisonCheck h = harrison_check(t);
    out["harrison"] = {{"invertible", h.invertible}, {"pentagon", h.pentagon}, {"normalized", h.normalized}};
    emit(out);
    if (!h.ok()) throw ExitStatus{kExitInvalid};
    return;
  }
  emit(out);
}

struct BuildArgs {
  std::string group = "klein";
  std::string family;
  std::string a = "-1", d = "i", q;
  int n = 3;
  bool check = false;
};

void cmd_hopf_build(Global g, const BuildArgs& args) {
  auto require_group = [&](const char* want) {
    if (args.group != want) throw PreconditionError("family " + args.family + " lives on the " + want + " group");
  };
  std::optional<WeakBraidedHopf> w;
  if (args.family == "prop54i") {
    require_group("klein");
    w.emplace(klein_weak_hopf_h(scalar_in_field(g, args.a)));
  } else if (args.family == "prop54ii") {
    require_group("klein");
    w.emplace(klein_weak_hopf_g(scalar_in_field(g, args.d)));
  } else if (args.family == "prop53") {
    require_group("cyclic");
    if (args.n < 1) throw PreconditionError("n must be positive");
    g.conductor = field_conductor(g, args.n);
    w.emplace(prop53_structure(args.n, args.q.empty() ? root_of_unity(args.n, 1) : scalar_in_field(g, args.q)));
  } else {
    throw std::invalid_argument("unknown family " + args.family);
  }
  if (args.check) {
    const WeakHopfReport r = check_weak_hopf(*w);
    std::cout << r.to_string();
    if (!r.all()) throw ExitStatus{kExitInvalid};
    return;
  }
  const auto& grp = w->group();
  json product = json::array(), delta = json::array(), counit = json::array();
  for (std::size_t x = 0; x < grp.size(); ++x) {
    for (std::size_t y = 0; y < grp.size(); ++y) {
      const auto [c, z] = w->mul(x, y);
      product.push_back({{"x", json_io::to_json(grp.element(x))},
                         {"y", json_io::to_json(grp.element(y))},
                         {"coeff", json_io::to_json(c)},
                         {"element", json_io::to_json(grp.element(z))}});
    }
    delta.push_back({{"x", json_io::to_json(grp.element(x))}, {"delta", json_io::to_json(w->delta(x))}});
    counit.push_back(json_io::to_json(w->counit(x)));
  }
  emit({{"F", json_io::to_json(w->F())},
        {"product", product},
        {"delta", delta},
        {"counit", counit},
        {"ambient", json_io::to_json(w->ambient())}});
}

// ---- verify-paper ----

void cmd_verify_paper(const std::vector<std::string>& only, const std::string& format) {
  VerifyOptions opts;
  for (const auto& item : only) {
    std::stringstream ss(item);
    for (std::string tok; std::getline(ss, tok, ',');)
      if (!tok.empty()) opts.only.push_back(tok);
  }
  const VerificationReport report = verify_paper(opts);
  if (format == "json") {
    json claims = json::array();
    for (const auto& c : report.claims)
      claims.push_back({{"id", c.id}, {"criterion", c.criterion}, {"statement", c.statement}, {"pass", c.pass},
                        {"detail", c.detail}});
    emit({{"claims", claims}, {"passed", report.passed()}, {"failed", report.failed()}});
  } else {
    std::cout << report.to_text();
  }
  if (!report.all_pass()) throw ExitStatus{kExitInvalid};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with 3-cocycles, braidings and weak braided Hopf algebras on abelian groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Global global;
  app.add_option("--conductor", global.conductor, "All scalars live in Q(zeta_conductor)")
      ->check(CLI::PositiveNumber)
      ->each([&](const std::string&) { global.conductor_given = true; });

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Print a 3-cochain of a named family as JSON");
  generate->add_option("--family", gen.family, "phi_X, h_a, g_b, phi_q or qabc")
      ->required()
      ->check(CLI::IsMember({"phi_X", "h_a", "g_b", "phi_q", "qabc"}));
  generate->add_option("--X", gen.X, "Subset of {sigma,tau,rho}, comma separated");
  generate->add_option("--a", gen.a, "Parameter of h_a");
  generate->add_option("--b", gen.b, "Parameter of g_b");
  generate->add_option("--n", gen.n, "Order of the cyclic group");
  generate->add_option("--q", gen.q, "Root of unity for phi_q and qabc (default zeta_n)");

  std::string classify_input;
  auto* classify_cmd = app.add_subcommand("classify", "Cohomology class of a Klein 3-cocycle");
  classify_cmd->add_option("--input", classify_input, "Cochain JSON file, - for stdin")->required();

  std::string br_group = "klein", br_format = "json";
  int br_n = 2;
  auto* braidings = app.add_subcommand("braidings", "List representatives of all braidings");
  braidings->add_option("--group", br_group)->check(CLI::IsMember({"klein", "cyclic"}));
  braidings->add_option("--n", br_n, "Order of the cyclic group");
  braidings->add_option("--format", br_format)->check(CLI::IsMember({"table", "json"}));

  std::string hx_phi, hx_r, hx_input;
  auto* hexagon = app.add_subcommand("check-hexagon", "Check the hexagon identities for a pair (phi, R)");
  hexagon->add_option("--phi", hx_phi, "3-cochain JSON");
  hexagon->add_option("--r", hx_r, "2-cochain JSON");
  hexagon->add_option("--input", hx_input, "Braiding JSON {phi, R, label}");

  std::string co_group = "klein";
  int co_n = 2;
  std::size_t co_degree = 3;
  std::int64_t co_modulus = 4;
  auto* cohom = app.add_subcommand("cohomology", "H^n(G, mu_m) with generators");
  cohom->add_option("--group", co_group, "klein, cyclic, or orders such as 2,4");
  cohom->add_option("--n", co_n, "Order of the cyclic group");
  cohom->add_option("--degree", co_degree)->check(CLI::Range(1, 4));
  cohom->add_option("--modulus", co_modulus)->check(CLI::Range(1, 1 << 20));

  auto* hopf = app.add_subcommand("hopf", "Reassociators and weak braided Hopf algebras");
  hopf->require_subcommand(1);
  int re_n = 2, re_l = 1;
  std::string re_form = "transport";
  bool re_check = false;
  auto* reassoc = hopf->add_subcommand("reassociator", "Reassociator on k[C_n] as a 3-tensor");
  reassoc->add_option("--n", re_n)->required();
  reassoc->add_option("--l", re_l)->required();
  reassoc->add_option("--form", re_form, "closed or transport")->check(CLI::IsMember({"closed", "transport"}));
  reassoc->add_flag("--check", re_check, "Include the Harrison cocycle check");

  BuildArgs build_args;
  auto* build = hopf->add_subcommand("build", "Weak braided Hopf algebra from a twist");
  build->add_option("--group", build_args.group)->check(CLI::IsMember({"klein", "cyclic"}));
  build->add_option("--family", build_args.family)
      ->required()
      ->check(CLI::IsMember({"prop54i", "prop54ii", "prop53"}));
  build->add_option("--a", build_args.a, "Parameter of the h-family twist");
  build->add_option("--d", build_args.d, "Parameter of the g-family twist");
  build->add_option("--n", build_args.n, "Order of the cyclic group");
  build->add_option("--q", build_args.q, "Root of unity (default zeta_n)");
  build->add_flag("--check", build_args.check, "Print the axiom report instead of the structure");

  std::vector<std::string> vp_only;
  std::string vp_format = "text";
  auto* verify = app.add_subcommand("verify-paper", "Run the full verification suite");
  verify->add_option("--only", vp_only, "Groups (cocycles, braidings, hopf), criterion numbers or claim ids");
  verify->add_option("--format", vp_format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*generate) cmd_generate(global, gen);
    else if (*classify_cmd) cmd_classify(global, classify_input);
    else if (*braidings) cmd_braidings(global, br_group, br_n, br_format);
    else if (*hexagon) cmd_check_hexagon(hx_phi, hx_r, hx_input);
    else if (*cohom) cmd_cohomology(co_group, co_n, co_degree, co_modulus);
    else if (*reassoc) cmd_hopf_reassociator(global, re_n, re_l, re_form, re_check);
    else if (*build) cmd_hopf_build(global, build_args);
    else if (*verify) cmd_verify_paper(vp_only, vp_format);
  } catch (const ExitStatus& s) {
    return s.code;
  } catch (const UndecidableError& e) {
    std::cerr << "undecided: " << e.what() << '\n';
    return kExitUndecided;
  } catch (const json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitOk;
}
