// Command-line front end. Every subcommand reads JSON (from --in, or stdin),
// writes one JSON object per line, and exits with 0 on success, 1 when a
// verification fails, 2 on malformed input and 3 when a depth or size limit
// is hit.

#include "ample/error.hpp"
#include "ample/io.hpp"
#include "ample/selftest.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace ample;

namespace {

constexpr int kMaxDepthLimit = 60;

class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string base = "2";
  int depth_limit = kDefaultDepthLimit;
  std::uint64_t seed = 1;
  std::string in = "-";
  std::string out = "-";
};

class Session {
 public:
  explicit Session(const Options& opt) : opt_(opt) {
    if (opt.depth_limit < 0 || opt.depth_limit > kMaxDepthLimit)
      throw ParseError("--depth-limit must lie in [0, " + std::to_string(kMaxDepthLimit) + "]");
    Json spec;
    try {
      spec = Json::parse(opt.base);
    } catch (const nlohmann::json::exception&) {
      throw ParseError("--base must be a radix or a JSON base object");
    }
    base_ = base_from_json(spec).with_depth_limit(opt.depth_limit);
    if (opt.out != "-") {
      file_.open(opt.out);
      if (!file_) throw ParseError("cannot open output file " + opt.out);
    }
  }

  const BaseSequence& base() const { return base_; }
  std::uint64_t seed() const { return opt_.seed; }

  Json input() const {
    std::stringstream text;
    if (opt_.in == "-") {
      text << std::cin.rdbuf();
    } else {
      std::ifstream f(opt_.in);
      if (!f) throw ParseError("cannot open input file " + opt_.in);
      text << f.rdbuf();
    }
    try {
      return Json::parse(text.str());
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("input is not valid JSON: ") + e.what());
    }
  }

  void emit(const Json& j) {
    std::ostream& os = opt_.out == "-" ? std::cout : file_;
    os << j.dump() << '\n';
  }

 private:
  Options opt_;
  BaseSequence base_;
  std::ofstream file_;
};

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

// A bare element, or an object holding it under "g".
TfgElement element_arg(const Json& j, const BaseSequence& base) {
  if (j.is_object() && j.contains("g")) return element_from_json(j.at("g"), base);
  return element_from_json(j, base);
}

std::vector<Point> points_arg(const Json& j, const BaseSequence& base) {
  std::vector<Point> out;
  for (const auto& p : j) out.push_back(point_from_json(p, base));
  return out;
}

void verify(bool ok, const std::string& what) {
  if (!ok) throw VerificationFailure(what);
}

void run_elem(Session& s, const std::string& op) {
  const BaseSequence& base = s.base();
  Json report{{"command", "elem"}, {"op", op}};
  if (op == "odometer") {
    report["element"] = to_json(odometer(base));
    s.emit(report);
    return;
  }
  const Json in = s.input();
  report["input"] = in;
  if (op == "compose") {
    report["element"] = to_json(compose(element_from_json(field(in, "g"), base), element_from_json(field(in, "h"), base)));
  } else if (op == "power") {
    report["element"] = to_json(power(element_from_json(field(in, "g"), base), field(in, "k").get<Integer>()));
  } else if (op == "apply") {
    const TfgElement g = element_from_json(field(in, "g"), base);
    report["point"] = to_json(apply_to_point(g, point_from_json(field(in, "x"), g.base())));
  } else if (op == "image") {
    const TfgElement g = element_from_json(field(in, "g"), base);
    const ClopenSet u = clopen_from_json(field(in, "u"), g.base());
    report["image"] = to_json(image_of_clopen(g, u));
    report["preimage"] = to_json(preimage_of_clopen(g, u));
    report["measure"] = to_string(measure(u));
  } else {
    const TfgElement g = element_arg(in, base);
    if (op == "index") {
      report["index"] = index(g);
    } else if (op == "order") {
      const OrderResult o = order(g);
      report["order"] = o.is_finite() ? Json(*o.order) : Json("infinite");
    } else if (op == "support") {
      const ClopenSet supp = support(g);
      report["support"] = to_json(supp);
      report["measure"] = to_string(measure(supp));
    } else if (op == "inverse") {
      report["element"] = to_json(inverse(g));
    } else if (op == "canonical") {
      report["element"] = to_json(g);
    } else if (op == "wreath") {
      const WreathForm w = wreath_form(g);
      verify(lift(w) == g, "wreath form does not lift back");
      report["wreath"] = to_json(w);
    } else if (op == "torsion") {
      Json specs = Json::array();
      for (const auto& spec : torsion_to_genperms(g)) {
        Json cycles = Json::array();
        for (const auto& delta : genperm_to_two_cycles(spec)) cycles.push_back(to_json(delta));
        specs.push_back(Json{{"spec", to_json(spec)}, {"two_cycles", cycles}});
      }
      report["genperms"] = specs;
    } else {
      throw ParseError("unknown elem operation: " + op);
    }
  }
  s.emit(report);
}

void run_kr(Session& s) {
  const Json in = s.input();
  const BaseSequence& base = s.base();
  const TfgElement g = element_from_json(field(in, "g"), base);
  const ClopenSet u = clopen_from_json(field(in, "u"), g.base());
  const KRPartition kr = build_kr(u, g);
  const TfgElement e = parity_exchange(u, g);
  const ClopenSet out = exit_set(u, g), enter = entrance_set(u, g);
  verify(image_of_clopen(e, out) == enter && compose(e, e).is_identity(), "parity exchange check failed");
  Json report{{"command", "kr"}, {"input", in}, {"partition", to_json(kr)},
              {"recurrent", to_json(kr.recurrent)}, {"u_out", to_json(out)}, {"u_in", to_json(enter)},
              {"parity_exchange", to_json(e)}};
  s.emit(report);
}

void run_return_map(Session& s, std::optional<Integer> power_n, int test_depth) {
  const BaseSequence& base = s.base();
  if (power_n) {
    const auto pieces = minimal_power_partition(base, *power_n);
    Json ps = Json::array();
    for (const auto& p : pieces) ps.push_back(to_json(p));
    const bool certified = certify_minimal_pieces(pieces, *power_n, test_depth);
    s.emit(Json{{"command", "return-map"}, {"power", *power_n}, {"pieces", ps},
                {"test_depth", test_depth}, {"certified", certified}});
    verify(certified, "minimality certificate failed");
    return;
  }
  const Json in = s.input();
  const ClopenSet u = clopen_from_json(in.is_object() && in.contains("u") ? in.at("u") : in, base);
  const FirstReturn fr = first_return(u);
  const OrderResult o = order(fr.h_u);
  const bool ok = compose(fr.f_u, fr.h_u) == odometer(base) && index(fr.f_u) == 1 && o.is_finite();
  s.emit(Json{{"command", "return-map"}, {"input", in}, {"f_u", to_json(fr.f_u)}, {"h_u", to_json(fr.h_u)},
              {"index_f_u", index(fr.f_u)}, {"order_h_u", o.is_finite() ? Json(*o.order) : Json("infinite")},
              {"verified", ok}});
  verify(ok, "first-return factorization failed");
}

void run_prop_e(Session& s, bool verify_only, bool kernel) {
  const Json in = s.input();
  const BaseSequence& base = s.base();
  if (verify_only) {
    const Certificate c = certificate_from_json(in, base);
    const bool ok = verify_certificate(c);
    s.emit(Json{{"command", "prop-e"}, {"mode", "verify"}, {"factors", c.factors.size()}, {"verified", ok}});
    verify(ok, "certificate does not verify");
    return;
  }
  if (kernel) {
    const TfgElement h = element_arg(in, base);
    std::optional<ClopenSet> w;
    if (in.is_object() && in.contains("w")) w = clopen_from_json(in.at("w"), h.base());
    const TorsionFactorization tf = factor_kernel(h, w);
    const bool ok = compose(tf.t2, tf.t1) == h;
    s.emit(Json{{"command", "prop-e"}, {"mode", "kernel"}, {"factorization", to_json(tf)}, {"verified", ok}});
    verify(ok, "kernel factorization does not recompose");
    return;
  }
  const TfgElement g = element_from_json(field(in, "g"), base);
  const Certificate c = decompose_local(g, clopen_from_json(field(in, "u1"), g.base()),
                                        clopen_from_json(field(in, "u2"), g.base()));
  const bool ok = verify_certificate(c);
  s.emit(Json{{"command", "prop-e"}, {"mode", "decompose"}, {"certificate", to_json(c)},
              {"length", c.factors.size()}, {"verified", ok}});
  verify(ok, "certificate does not verify");
}

void run_stab(Session& s, const std::string& op) {
  const Json in = s.input();
  const BaseSequence& base = s.base();
  Json report{{"command", "stab"}, {"op", op}, {"input", in}};
  if (op == "same-orbit") {
    report["same_orbit"] = same_orbit(point_from_json(field(in, "x"), base), point_from_json(field(in, "y"), base));
  } else if (op == "classify") {
    report["verdict"] = to_json(classify_finite_stabilizer(FinitePointSet(points_arg(field(in, "points"), base))));
  } else if (op == "realize") {
    const FinitePointSet y(points_arg(field(in, "y"), base));
    const FinitePointSet z(in.contains("z") ? points_arg(in.at("z"), base) : std::vector<Point>{});
    const Permutation pi = permutation_from_json(field(in, "pi"));
    const TfgElement g = realize_permutation(y, pi, z);
    bool ok = true;
    for (std::size_t i = 0; i < y.size(); ++i)
      ok = ok && apply_to_point(g, y[i]) == y[static_cast<std::size_t>(pi(static_cast<Integer>(i)))];
    for (std::size_t i = 0; i < z.size(); ++i) ok = ok && apply_to_point(g, z[i]) == z[i];
    report["element"] = to_json(g);
    report["verified"] = ok;
    s.emit(report);
    verify(ok, "realized element does not act as requested");
    return;
  } else if (op == "transitive") {
    std::vector<TfgElement> gens;
    for (const auto& g : field(in, "generators")) gens.push_back(element_from_json(g, base));
    std::vector<ClopenSet> parts;
    for (const auto& p : field(in, "parts")) parts.push_back(clopen_from_json(p, base));
    report["transitive"] = partition_action_transitive(gens, parts);
  } else {
    throw ParseError("unknown stab operation: " + op);
  }
  s.emit(report);
}

void run_nd(Session& s, std::size_t stages, const std::string& omega_text, bool from_input) {
  const NDConstruction c =
      from_input ? construction_from_json(s.input(), s.base()) : build_construction(s.base(), stages, s.seed());
  const OmegaWord omega(omega_text.empty() ? std::string(c.stages.size(), '1') : omega_text);
  const InvariantReport inv = check_construction_invariants(c);
  const ClopenSet cover = y_cover(c, omega);
  const bool dense_free = check_nowhere_dense(c, omega);
  const bool preserved = check_generators_preserve_cover(c, omega);
  const bool minimal = check_minimality_on_y(c, omega);
  Json orders = Json::array();
  for (std::size_t n = 0; n <= std::min<std::size_t>(omega.size(), 3); ++n)
    orders.push_back(Json{{"n", n}, {"order", truncated_group_order(c, omega, n)}, {"model_order", gamma_model_order(n)}});
  Json invariants{{"nested", inv.nested},           {"contains_base_point", inv.contains_base_point},
                  {"disjoint_images", inv.disjoint_images}, {"proper", inv.proper},
                  {"single_cylinders", inv.single_cylinders}, {"involutions", inv.involutions}};
  s.emit(Json{{"command", "nd"},
              {"construction", to_json(c)},
              {"omega", omega.letters()},
              {"invariants", invariants},
              {"y_cover", to_json(cover)},
              {"y_cover_measure", to_string(measure(cover))},
              {"nowhere_dense", dense_free},
              {"generators_preserve_cover", preserved},
              {"minimal_on_cover", minimal},
              {"group_orders", orders}});
  verify(inv.ok() && dense_free && preserved && minimal, "construction check failed");
}

void run_oracle(Session& s, bool property_e) {
  const Json in = s.input();
  const auto n = field(in, "n").get<std::size_t>();
  if (property_e) {
    const FinitePropertyEReport r =
        finite_property_e(n, field(in, "u1").get<std::vector<Integer>>(), field(in, "u2").get<std::vector<Integer>>());
    s.emit(Json{{"command", "oracle"}, {"mode", "property-e"}, {"input", in}, {"generated_order", r.generated_order},
                {"expected_order", r.expected_order}, {"holds", r.holds}});
    return;
  }
  FiniteModel model{n, {}};
  if (in.contains("generators")) {
    for (const auto& g : in.at("generators")) model.generators.push_back(permutation_from_json(g));
  } else {
    std::vector<Integer> cycle(n);
    for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<Integer>(i);
    model.generators = {Permutation::cycle(n, cycle)};
    if (n >= 2) model.generators.push_back(Permutation::transposition(n, 0, 1));
  }
  const FiniteOracleReport r = finite_oracle_maximality(model, field(in, "y").get<std::vector<Integer>>());
  Json report{{"command", "oracle"},          {"input", in},
              {"verdict", to_json(r.verdict)}, {"group_order", r.group_order},
              {"stabilizer_order", r.stabilizer_order}, {"brute_maximal", r.brute_maximal},
              {"brute_whole", r.brute_whole},  {"agree", r.agree}};
  if (r.partition_stabilizer_order) {
    report["partition_stabilizer_order"] = *r.partition_stabilizer_order;
    report["partition_stabilizer_maximal"] = *r.partition_stabilizer_maximal;
  }
  s.emit(report);
  verify(r.agree, "classifier disagrees with brute force");
}

void run_selftest(Session& s, const std::string& suite) {
  std::vector<std::string> names;
  if (suite == "all")
    names = suite_names();
  else
    names = {suite};
  bool all_ok = true;
  for (const auto& name : names) {
    SuiteResult r;
    try {
      r = run_suite(name, s.seed());
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
    all_ok = all_ok && r.passed;
    s.emit(Json{{"suite", r.name}, {"passed", r.passed}, {"checks", r.checks}, {"detail", r.detail}});
  }
  verify(all_ok, "self-test failure");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the ample group of an odometer"};
  app.require_subcommand(1);
  // Global options may also follow the subcommand.
  app.fallthrough();
  Options opt;
  app.add_option("--base", opt.base, "radix, or JSON {\"pre\":[...],\"period\":[...]}")->capture_default_str();
  app.add_option("--depth-limit", opt.depth_limit, "largest cylinder depth accepted")->capture_default_str();
  app.add_option("--seed", opt.seed, "seed for random choices")->capture_default_str();
  app.add_option("--in", opt.in, "input JSON file, - for stdin")->capture_default_str();
  app.add_option("--out", opt.out, "output file, - for stdout")->capture_default_str();

  std::function<void(Session&)> action;

  auto* elem = app.add_subcommand("elem", "element arithmetic");
  std::string elem_op;
  elem->add_option("op", elem_op,
                   "odometer|index|order|support|inverse|canonical|wreath|torsion|compose|power|apply|image")
      ->required();
  elem->callback([&] { action = [&](Session& s) { run_elem(s, elem_op); }; });

  auto* kr = app.add_subcommand("kr", "Kakutani-Rokhlin partition and parity exchange of {u, g}");
  kr->callback([&] { action = [](Session& s) { run_kr(s); }; });

  auto* rm = app.add_subcommand("return-map", "first-return factorization f = f_u h_u of {u}");
  std::optional<Integer> power_n;
  int test_depth = 6;
  rm->add_option("--power", power_n, "instead: partition X into f^n-minimal pieces");
  rm->add_option("--test-depth", test_depth, "depth of the minimality certificate")->capture_default_str();
  rm->callback([&] { action = [&](Session& s) { run_return_map(s, power_n, test_depth); }; });

  auto* pe = app.add_subcommand("prop-e", "decompose {g, u1, u2} into local factors");
  bool verify_only = false, kernel = false;
  pe->add_flag("--verify", verify_only, "re-check a certificate given as input");
  pe->add_flag("--kernel", kernel, "factor an index-zero element {g, w?} into two torsion elements");
  pe->callback([&] { action = [&](Session& s) { run_prop_e(s, verify_only, kernel); }; });

  auto* st = app.add_subcommand("stab", "orbits and stabilizers of finite point sets");
  std::string stab_op;
  st->add_option("op", stab_op, "same-orbit|classify|realize|transitive")->required();
  st->callback([&] { action = [&](Session& s) { run_stab(s, stab_op); }; });

  auto* nd = app.add_subcommand("nd", "nested 2-cycle construction and its checks");
  std::size_t stages = 3;
  std::string omega;
  bool nd_from_input = false;
  nd->add_option("--stages", stages, "number of stages to build")->capture_default_str();
  nd->add_option("--omega", omega, "word over {1,2}; defaults to all 1s");
  nd->add_flag("--from-input", nd_from_input, "read the construction from --in");
  nd->callback([&] { action = [&](Session& s) { run_nd(s, stages, omega, nd_from_input); }; });

  auto* oracle = app.add_subcommand("oracle", "finite symmetric-group oracle for {n, y, generators?}");
  bool oracle_pe = false;
  oracle->add_flag("--property-e", oracle_pe, "compare <Sym(u1) ∪ Sym(u2)> with Sym(u1 ∪ u2) for {n, u1, u2}");
  oracle->callback([&] { action = [&](Session& s) { run_oracle(s, oracle_pe); }; });

  auto* self = app.add_subcommand("selftest", "run consistency suites");
  std::string suite = "all";
  self->add_option("--suite", suite, "suite name or all")->capture_default_str();
  self->callback([&] { action = [&](Session& s) { run_selftest(s, suite); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    Session session(opt);
    action(session);
    return 0;
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return 1;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal check failed: " << e.what() << '\n';
    return 1;
  }
}
