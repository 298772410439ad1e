#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "acceptance.hpp"
#include "hololab/cs.hpp"
#include "hololab/error.hpp"
#include "hololab/holomorph.hpp"
#include "hololab/homomorphism.hpp"
#include "hololab/io.hpp"
#include "hololab/lifting.hpp"
#include "hololab/regsub.hpp"
#include "registry.hpp"

#ifndef HOLOLAB_VERSION_STRING
#define HOLOLAB_VERSION_STRING "0.0.0"
#endif

using namespace hololab;
using io::json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kCap = 2, kVerification = 3 };

struct Options {
  std::string format = "json";
  std::size_t max_degree = 0;
  unsigned threads = 1;
  std::uint64_t seed = Limits{}.seed;
  std::string out;

  std::string group;
  std::vector<std::string> n_groups;
  bool brute = false;
  std::string t;
  std::uint32_t p = 0;
  std::size_t samples = 1000;
  std::string h;
  std::size_t n = 0;
  std::size_t m = 0;
  std::string expect;
  std::vector<int> only;
};

/// Command result before it is wrapped into a certificate.
struct Outcome {
  json inputs = json::object();
  json outputs = json::object();
  std::vector<NamedCheck> checks;
  /// Extra human-readable lines for --format text.
  std::vector<std::string> text;
};

void add_check(Outcome& o, std::string name, bool passed) { o.checks.push_back({std::move(name), passed}); }

/// Moves a nested "cross_checks" array out of a report into the outcome.
json lift_checks(json report, Outcome& o, const std::vector<NamedCheck>& checks) {
  report.erase("cross_checks");
  o.checks.insert(o.checks.end(), checks.begin(), checks.end());
  return report;
}

json group_summary(const GroupTable& g) { return json{{"name", g.name()}, {"order", g.order()}}; }

Outcome cmd_group(const Options& opt, const Limits& limits) {
  const auto g = cli::resolve_group(opt.group);
  Outcome o;
  o.inputs["group"] = opt.group;
  const auto z = center(g);
  const auto aut = automorphisms(g, limits);
  const auto inn = inner_automorphisms(g);
  const auto dec = is_decomposable(g, limits);
  o.outputs = io::to_json(g);
  o.outputs["abelian"] = g.is_abelian();
  o.outputs["center_order"] = z.order();
  o.outputs["aut_order"] = aut.size();
  o.outputs["inn_order"] = inn.size();
  o.outputs["out_order"] = aut.size() / inn.size();
  o.outputs["decomposable"] = dec.has_value();
  add_check(o, "inn_order_is_index_of_center", inn.size() * z.order() == g.order());
  add_check(o, "inn_divides_aut", aut.size() % inn.size() == 0);
  o.text.push_back(g.name() + ": order " + std::to_string(g.order()) + ", |Z| = " + std::to_string(z.order()) +
                   ", |Aut| = " + std::to_string(aut.size()) + ", |Out| = " +
                   std::to_string(aut.size() / inn.size()));
  return o;
}

Outcome cmd_hol(const Options& opt, const Limits& limits) {
  const auto g = cli::resolve_group(opt.group);
  Outcome o;
  o.inputs["group"] = opt.group;
  const auto h = hol(g, limits);
  const auto aut = automorphisms(g, limits).size();
  o.outputs = io::to_json(h);
  o.outputs["group"] = group_summary(g);
  add_check(o, "order_is_g_times_aut", h.order() == g.order() * aut);
  add_check(o, "contains_lambda", lambda_rep(g).group.is_subgroup_of(h));
  add_check(o, "contains_rho", rho_rep(g).group.is_subgroup_of(h));
  o.text.push_back("|Hol(" + g.name() + ")| = " + std::to_string(h.order()));
  return o;
}

Outcome cmd_inhol(const Options& opt, const Limits& limits) {
  const auto g = cli::resolve_group(opt.group);
  Outcome o;
  o.inputs["group"] = opt.group;
  const auto h = inhol(g, limits);
  o.outputs = io::to_json(h);
  o.outputs["group"] = group_summary(g);
  add_check(o, "order_is_g_times_inn", h.order() == g.order() * inner_automorphisms(g).size());
  add_check(o, "inside_hol", h.is_subgroup_of(hol(g, limits)));
  o.text.push_back("|InHol(" + g.name() + ")| = " + std::to_string(h.order()));
  return o;
}

Outcome cmd_nhol(const Options& opt, const Limits& limits) {
  const auto g = cli::resolve_group(opt.group);
  Outcome o;
  o.inputs["group"] = opt.group;
  const auto h = hol(g, limits);
  const auto nh = nhol(g, limits);
  o.outputs = io::to_json(nh);
  o.outputs["group"] = group_summary(g);
  o.outputs["hol_order"] = h.order();
  o.outputs["index_over_hol"] = nh.order() / h.order();
  add_check(o, "hol_normal_in_nhol", h.is_subgroup_of(nh) && nh.order() % h.order() == 0);
  o.text.push_back("|NHol(" + g.name() + ")| = " + std::to_string(nh.order()) + " = " +
                   std::to_string(nh.order() / h.order()) + " * |Hol|");
  return o;
}

Outcome cmd_normalizer(const Options& opt, const Limits& limits) {
  const auto g = cli::resolve_group(opt.group);
  Outcome o;
  o.inputs["group"] = opt.group;
  const auto in = inhol(g, limits);
  const auto n = normalizer_in_sym(g.order(), in, limits);
  auto gens = hol(g, limits).generators();
  gens.push_back(inv_perm(g));
  const auto hol_inv = PermSubgroup::generate(g.order(), gens, limits);
  o.outputs = io::to_json(n);
  o.outputs["group"] = group_summary(g);
  o.outputs["inhol_order"] = in.order();
  o.outputs["hol_inv_order"] = hol_inv.order();
  o.outputs["equals_hol_inv"] = n.same_elements(hol_inv);
  add_check(o, "contains_hol_inv", hol_inv.is_subgroup_of(n));
  o.text.push_back("|N_Sym(" + std::to_string(g.order()) + ")(InHol(" + g.name() + "))| = " +
                   std::to_string(n.order()) + (n.same_elements(hol_inv) ? " = " : " != ") + "|<Hol, inv>|");
  return o;
}

Outcome cmd_regsub(const Options& opt, const Limits& limits) {
  const auto g = cli::resolve_group(opt.group);
  Outcome o;
  o.inputs["group"] = opt.group;
  const auto names = opt.n_groups.empty() ? std::vector<std::string>{opt.group} : opt.n_groups;
  o.inputs["n"] = names;
  o.inputs["brute"] = opt.brute;
  const auto ctx = HolomorphContext::build(g, limits);
  std::set<std::vector<Permutation>> realized;
  json per_n = json::array();
  std::size_t pairs = 0;
  for (const auto& name : names) {
    const auto n = cli::resolve_group(name);
    std::size_t lam = 0, rho = 0, other = 0;
    const auto found = enumerate_fpf_pairs(n, g, limits);
    for (const auto& p : found) {
      const auto w = regular_from_pair(p, ctx);
      realized.insert(w.subgroup.elements());
      lam += w.classification == Classification::Lambda;
      rho += w.classification == Classification::Rho;
      other += w.classification == Classification::Other;
    }
    pairs += found.size();
    per_n.push_back({{"n", group_summary(n)},
                     {"fpf_pairs", found.size()},
                     {"lambda", lam},
                     {"rho", rho},
                     {"other", other}});
  }
  o.outputs["group"] = group_summary(g);
  o.outputs["by_n"] = per_n;
  o.outputs["fpf_pairs"] = pairs;
  o.outputs["distinct_realizations"] = realized.size();
  o.text.push_back(std::to_string(pairs) + " fpf pairs, " + std::to_string(realized.size()) +
                   " distinct regular subgroups of InHol(" + g.name() + ")");
  if (opt.brute) {
    std::set<std::vector<Permutation>> brute;
    for (const auto& r : enumerate_regular_subgroups_brute(g, limits)) brute.insert(r.elements());
    o.outputs["brute_regular_subgroups"] = brute.size();
    std::size_t covered = 0;
    for (const auto& r : realized) covered += brute.count(r);
    add_check(o, "realizations_are_regular_subgroups", covered == realized.size());
    add_check(o, "realizations_equal_brute", brute == realized);
  }
  return o;
}

Outcome cmd_thm13(const Options& opt, const Limits& limits) {
  const auto g = cli::resolve_group(opt.group);
  Outcome o;
  o.inputs["group"] = opt.group;
  const auto r = thm13_check(g, limits);
  o.outputs = lift_checks(io::to_json(r), o, r.checks);
  o.outputs["group"] = group_summary(g);
  o.text.push_back(g.name() + ": " + std::string(to_string(r.verdict.kind)) + " (" +
                   std::to_string(r.verdict.fpf_pairs) + " fpf pairs, " +
                   std::to_string(r.verdict.witness_count) + " witnesses); decomposable: " +
                   (r.decomposition ? "yes" : "no"));
  return o;
}

Outcome cmd_cs_build(const Options& opt, const Limits&) {
  const auto t = cli::resolve_group(opt.t);
  Outcome o;
  o.inputs = {{"t", opt.t}, {"p", opt.p}};
  const auto g = CsGroup::build({t, opt.p});
  o.outputs = io::build_certificate(g);
  add_check(o, "rank_at_most_degree_n_dimension", g.rank() <= g.dims().back());
  o.text.push_back("CS(" + t.name() + "," + std::to_string(opt.p) + "): D = " + std::to_string(g.dimension()) +
                   ", r = " + std::to_string(g.rank()) + ", order " + g.order().to_string());
  return o;
}

Outcome cmd_cs_center(const Options& opt, const Limits& limits) {
  const auto t = cli::resolve_group(opt.t);
  Outcome o;
  o.inputs = {{"t", opt.t}, {"p", opt.p}, {"samples", opt.samples}};
  const auto g = CsGroup::build({t, opt.p});
  const auto c = compute_center_certificate(g, limits, opt.samples);
  o.outputs = io::to_json(c, g);
  add_check(o, "q_fixed_subspaces_zero", c.q_fixed_all_zero);
  add_check(o, "degree1_faithful", c.faithful_degree1);
  add_check(o, "semidirect_center_argument", c.q_abelian && c.semidirect_center_trivial);
  add_check(o, "random_center_search", c.witnesses == 0);
  o.text.push_back("CS(" + t.name() + "," + std::to_string(opt.p) + ") center certificate " +
                   (c.passed() ? "passed" : "FAILED"));
  return o;
}

Outcome cmd_lift(const Options& opt, const Limits& limits) {
  Outcome o;
  o.inputs = {{"h", opt.h}, {"n", opt.n}, {"m", opt.m}, {"expect", opt.expect}};
  const auto h = cli::resolve_perm_subgroup(opt.h, opt.n, limits);
  const auto expected = cli::resolve_group(opt.expect);
  const auto r = lift_check(h, opt.n, opt.m, expected, limits);
  o.outputs = lift_checks(io::to_json(r), o, r.checks);
  add_check(o, "sym_quotient_iso_to_expected", r.sym_iso_to_expected);
  add_check(o, "alt_quotient_iso_to_expected", r.alt_iso_to_expected);
  o.text.push_back("N_S" + std::to_string(opt.m) + "(H1)/H1 has order " + std::to_string(r.sym_quotient.order()) +
                   ", N_A" + std::to_string(opt.m) + "(H2)/H2 has order " +
                   std::to_string(r.alt_quotient.order()) + ", expected " + expected.name());
  return o;
}

Outcome cmd_assemble(const Options& opt, const Limits& limits) {
  const auto g = cli::resolve_group(opt.group);
  Outcome o;
  o.inputs["group"] = opt.group;
  const auto r = main_theorem_assembly(g, limits);
  o.outputs = lift_checks(io::to_json(r), o, r.checks);
  o.text.push_back("[" + r.label + "] |H| = " + std::to_string(r.h_order) + ", |N(H)| = " +
                   std::to_string(r.normalizer_order) + ", |N(H)/H| = " + std::to_string(r.quotient.order()) +
                   ", |Out| = " + std::to_string(r.out.order()));
  return o;
}

Outcome cmd_selftest(const Options& opt, const Limits& limits) {
  Outcome o;
  o.inputs["only"] = opt.only;
  std::ostringstream log;
  const auto results = acceptance::run(limits, opt.format == "text" ? std::cerr : log, opt.only);
  json list = json::array();
  for (const auto& r : results) {
    // Timings are left out so the certificate stays reproducible.
    list.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail},
                    {"failures", r.failures}});
    add_check(o, "criterion_" + std::to_string(r.id), r.passed);
  }
  o.outputs["criteria"] = list;
  return o;
}

json certificate(const std::string& command, const Outcome& o, const Limits& limits) {
  json failed = json::array();
  for (const auto& c : o.checks)
    if (!c.passed) failed.push_back(c.name);
  return json{{"command", command},
              {"version", HOLOLAB_VERSION_STRING},
              {"inputs", o.inputs},
              {"outputs", o.outputs},
              {"cross_checks", io::to_json(o.checks)},
              {"failed_checks", failed},
              {"passed", failed.empty()},
              {"seed", limits.seed}};
}

std::string render_text(const std::string& command, const Outcome& o) {
  std::ostringstream s;
  s << command << "\n";
  for (const auto& line : o.text) s << "  " << line << "\n";
  for (const auto& c : o.checks) s << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name << "\n";
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hololab: holomorph, regular-subgroup and normalizer-quotient computations"};
  app.require_subcommand(1);
  Options opt;
  if (const char* env = std::getenv("HOLOLAB_MAX_DEGREE")) {
    try {
      opt.max_degree = std::stoul(env);
    } catch (const std::exception&) {
      std::cerr << "HOLOLAB_MAX_DEGREE must be an integer\n";
      return kUsage;
    }
  }
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--max-degree", opt.max_degree, "largest degree for Sym(d) scans (env HOLOLAB_MAX_DEGREE)");
  app.add_option("--threads", opt.threads, "worker threads for scans")->check(CLI::Range(1u, 256u));
  app.add_option("--seed", opt.seed, "seed for randomized checks");
  app.add_option("--out", opt.out, "write the certificate to this file instead of stdout");

  using Handler = std::function<Outcome(const Options&, const Limits&)>;
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto sub = [&](const char* name, const char* help, Handler h) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    commands.emplace_back(s, std::move(h));
    return s;
  };
  auto group_opt = [&](CLI::App* s) {
    s->add_option("--group,-g", opt.group, "group: builtin:NAME, NAME, or a JSON file")->required();
  };
  group_opt(sub("group", "summarize a group", cmd_group));
  group_opt(sub("hol", "holomorph Hol(G)", cmd_hol));
  group_opt(sub("inhol", "inner holomorph InHol(G)", cmd_inhol));
  group_opt(sub("nhol", "multiple holomorph NHol(G)", cmd_nhol));
  group_opt(sub("normalizer", "normalizer of InHol(G) in Sym(G) by exhaustive scan", cmd_normalizer));
  auto* regsub = sub("regsub", "regular subgroups of InHol(G) from fixed-point-free pairs", cmd_regsub);
  group_opt(regsub);
  regsub->add_option("--n", opt.n_groups, "source groups N (default: G itself)");
  regsub->add_flag("--brute", opt.brute, "cross-check against brute-force enumeration");
  group_opt(sub("thm13", "minimality verdict for N(InHol(G)) = <Hol(G), inv>", cmd_thm13));
  for (auto* s : {sub("cs-build", "build CS(T,p)", cmd_cs_build), sub("cs-center", "center certificate for CS(T,p)", cmd_cs_center)}) {
    s->add_option("--t", opt.t, "transitive group T as an abstract group")->required();
    s->add_option("--p", opt.p, "prime p > n+1")->required();
  }
  commands.back().first->add_option("--samples", opt.samples, "random samples for the center search");
  auto* lift = sub("lift", "lift a normalizer quotient from S_n to S_m and A_m", cmd_lift);
  lift->set_help_flag("--help", "Print this help message and exit");  // frees -h for --h
  lift->add_option("--h", opt.h, "trivial, sym, alt, cyclic, or a JSON permutation group")->required();
  lift->add_option("--n", opt.n, "degree of H")->required();
  lift->add_option("--m", opt.m, "target degree, at least 2n+1")->required();
  lift->add_option("--expect", opt.expect, "expected quotient group")->required();
  group_opt(sub("assemble", "N(H)/H for H = <InHol(G), inv> compared with Out(G)", cmd_assemble));
  sub("selftest", "run the acceptance suite", cmd_selftest)
      ->add_option("--only", opt.only, "criterion ids to run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  Limits limits;
  limits.threads = opt.threads;
  limits.seed = opt.seed;
  if (opt.max_degree != 0) limits.max_degree = opt.max_degree;
  if (limits.max_degree > kHardDegreeCeiling) {
    std::cerr << "--max-degree cannot exceed " << kHardDegreeCeiling << "\n";
    return kCap;
  }

  for (const auto& [s, handler] : commands) {
    if (!s->parsed()) continue;
    const std::string command = s->get_name();
    Outcome o;
    try {
      o = handler(opt, limits);
    } catch (const Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      if (e.code() == ErrorCode::CapExceeded) return kCap;
      if (e.code() == ErrorCode::CertificateFailed) return kVerification;
      return kUsage;
    }
    const json cert = certificate(command, o, limits);
    const std::string body = opt.format == "json" ? cert.dump(2) + "\n" : render_text(command, o);
    if (opt.out.empty()) {
      std::cout << body;
    } else {
      std::ofstream f(opt.out);
      if (!f) {
        std::cerr << "cannot write '" << opt.out << "'\n";
        return kUsage;
      }
      f << body;
    }
    if (!cert["passed"].get<bool>()) {
      std::cerr << "verification failed:";
      for (const auto& name : cert["failed_checks"]) std::cerr << " " << name.get<std::string>();
      std::cerr << "\n";
      return kVerification;
    }
    return kOk;
  }
  return kUsage;
}
