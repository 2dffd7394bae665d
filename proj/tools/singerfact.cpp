// Command-line front end: exact Singer-cycle reflection-factorization
// counting, symbolic q-identity verification, Hurwitz orbits, absolute-order
// intervals, and Jucys-Murphy checks, with machine-readable output.
//
// Exit codes: 0 all requested checks pass / result produced; 1 a requested
// verification failed; 2 usage error; 3 resource budget exceeded (partial
// JSON on stdout); 4 internal invariant violation.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "singerfact/absorder.hpp"
#include "singerfact/charvals.hpp"
#include "singerfact/errors.hpp"
#include "singerfact/factor_count.hpp"
#include "singerfact/glnq.hpp"
#include "singerfact/hurwitz.hpp"
#include "singerfact/qformula.hpp"
#include "singerfact/repro.hpp"

using njson = nlohmann::ordered_json;
using namespace singerfact;
using glnq::GroupIndex;
using glnq::MatrixGF;

namespace {

struct CommonOpts {
  int n = 2;
  uint64_t q = 2;
  int ell = 2;
  int m = -1;
  std::string target = "singer";
  std::vector<uint64_t> charpoly;  // c_0..c_{n-1} when target = charpoly
  uint64_t key = 0;                // when target = key
  uint64_t dense_bound = GroupIndex::kDefaultBound;
  uint64_t tuple_budget = 5000000;
  uint64_t field_bound = gf::FieldTable::kDefaultSizeBound;
  int threads = 0;
  std::string format = "json";
  bool meet_in_middle = false;
  bool heavy = false;
  uint64_t seed = 0;  // reserved for sampled property checks
};

MatrixGF resolve_target(const CommonOpts& o) {
  const gf::FieldTable& f = gf::field_of_size(o.q);
  if (o.target == "singer") return glnq::singer_cycle(f, o.n, o.field_bound);
  if (o.target == "charpoly") {
    if (static_cast<int>(o.charpoly.size()) != o.n)
      throw CLI::ValidationError("--charpoly needs n coefficients c_0..c_{n-1}");
    std::vector<gf::FqElem> cs;
    for (uint64_t r : o.charpoly) cs.push_back(f.from_rep(r));
    return MatrixGF::companion(f, cs);
  }
  if (o.target == "key") return MatrixGF::from_key(f, o.n, o.key);
  throw CLI::ValidationError("--target must be singer, charpoly, or key");
}

factor_count::CountOptions count_opts(const CommonOpts& o) {
  factor_count::CountOptions c;
  c.dense_bound = o.dense_bound;
  c.threads = o.threads;
  c.meet_in_middle = o.meet_in_middle;
  return c;
}

njson poly_json(const QPoly& p) {
  njson arr = njson::array();
  for (const auto& s : p.coeff_strings()) arr.push_back(s);
  return arr;
}

void emit(const njson& j, const std::string& format) {
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  if (format == "csv" || format == "table") {
    // flat tabular rendering for report-style payloads
    const char sep = (format == "csv") ? ',' : '\t';
    if (j.is_array()) {
      bool header = false;
      for (const auto& row : j) {
        if (!header && row.is_object()) {
          bool first = true;
          for (auto it = row.begin(); it != row.end(); ++it) {
            std::cout << (first ? "" : std::string(1, sep)) << it.key();
            first = false;
          }
          std::cout << "\n";
          header = true;
        }
        bool first = true;
        for (auto it = row.begin(); it != row.end(); ++it) {
          std::cout << (first ? "" : std::string(1, sep))
                    << (it.value().is_string() ? it.value().get<std::string>()
                                               : it.value().dump());
          first = false;
        }
        std::cout << "\n";
      }
      return;
    }
    for (auto it = j.begin(); it != j.end(); ++it)
      std::cout << it.key() << sep
                << (it.value().is_string() ? it.value().get<std::string>()
                                           : it.value().dump())
                << "\n";
    return;
  }
  throw CLI::ValidationError("--format must be json, csv, or table");
}

void add_common(CLI::App* cmd, CommonOpts& o, bool with_len = true) {
  cmd->add_option("--n", o.n, "matrix dimension n");
  cmd->add_option("--q", o.q, "field size q (prime power)");
  if (with_len) cmd->add_option("--len,--ell", o.ell, "number of factors");
  cmd->add_option("--target", o.target, "singer | charpoly | key");
  cmd->add_option("--charpoly", o.charpoly,
                  "c_0..c_{n-1} of a monic charpoly (with --target charpoly)");
  cmd->add_option("--key", o.key, "element key (with --target key)");
  cmd->add_option("--dense-bound", o.dense_bound, "dense group-order bound");
  cmd->add_option("--tuple-budget", o.tuple_budget, "enumeration budget");
  cmd->add_option("--field-bound", o.field_bound, "field size bound");
  cmd->add_option("--threads", o.threads,
                  "worker threads (or SINGERFACT_THREADS)");
  cmd->add_option("--format", o.format, "json | csv | table");
  cmd->add_option("--seed", o.seed, "seed for sampled property checks");
}

int run_count(const CommonOpts& o) {
  MatrixGF target = resolve_target(o);
  BigInt count = factor_count::count_factorizations(
      target, factor_count::StepPlan::all_reflections(o.ell), count_opts(o));
  njson out;
  out["n"] = o.n;
  out["q"] = o.q;
  out["ell"] = o.ell;
  njson cp = njson::array();
  for (uint64_t c : glnq::charpoly(target).rep_coeffs()) cp.push_back(c);
  out["target_charpoly"] = cp;
  out["filter"] = "all";
  out["count"] = count.get_str();
  emit(out, o.format);
  return 0;
}

int run_count_dets(const CommonOpts& o, const std::vector<uint64_t>& dets) {
  const gf::FieldTable& f = gf::field_of_size(o.q);
  MatrixGF target = resolve_target(o);
  std::vector<gf::FqElem> alphas;
  for (uint64_t r : dets) alphas.push_back(f.from_rep(r));
  auto res = factor_count::count_fixed_dets(target, alphas, count_opts(o));
  njson out;
  out["n"] = o.n;
  out["q"] = o.q;
  out["ell"] = alphas.size();
  njson cp = njson::array();
  for (uint64_t c : glnq::charpoly(target).rep_coeffs()) cp.push_back(c);
  out["target_charpoly"] = cp;
  njson filt = njson::array();
  for (uint64_t r : dets) filt.push_back(r);
  out["filter"] = filt;
  out["det_obstructed"] = res.det_obstructed;
  out["count"] = res.count.get_str();
  emit(out, o.format);
  return 0;
}

int run_formula(const CommonOpts& o, const std::string& route) {
  njson out;
  out["n"] = o.n;
  out["ell"] = o.ell;
  auto add_route = [&](const std::string& name, const QPoly& p) {
    out["routes"][name] = poly_json(p);
  };
  if (o.m >= 0) {
    out["m"] = o.m;
    QPoly a = qformula::tq_nlm(o.n, o.ell, o.m, qformula::TqNlmRoute::binom);
    QPoly b = qformula::tq_nlm(o.n, o.ell, o.m, qformula::TqNlmRoute::diff);
    if (route == "binom" || route == "all") add_route("binom", a);
    if (route == "diff" || route == "all") add_route("diff", b);
    if (route == "all") out["routes_agree"] = (a == b);
  } else {
    QPoly s = qformula::tq(o.n, o.ell, qformula::TqRoute::sum);
    QPoly d = qformula::tq(o.n, o.ell, qformula::TqRoute::diff);
    QPoly b = qformula::tq(o.n, o.ell, qformula::TqRoute::binom);
    if (route == "sum" || route == "all") add_route("sum", s);
    if (route == "diff" || route == "all") add_route("diff", d);
    if (route == "binom" || route == "all") add_route("binom", b);
    if (route == "all") out["routes_agree"] = (s == d && d == b);
  }
  if (o.q > 0) {
    QPoly p = (o.m >= 0)
                  ? qformula::tq_nlm(o.n, o.ell, o.m, qformula::TqNlmRoute::binom)
                  : qformula::tq(o.n, o.ell, qformula::TqRoute::binom);
    out["value_at_q"] = {{"q", o.q},
                         {"value", p.eval(BigInt(static_cast<long>(o.q))).get_str()}};
  }
  emit(out, o.format);
  return 0;
}

int run_verify(const CommonOpts& o, const std::string& suite, int max_n) {
  njson checks = njson::array();
  bool all = true;
  auto record = [&](const std::string& name, const njson& params, bool pass) {
    checks.push_back({{"check", name}, {"params", params}, {"pass", pass}});
    all = all && pass;
  };
  bool run_identities = suite == "identities" || suite == "all";
  bool run_charvals = suite == "charvals" || suite == "all";
  if (!run_identities && !run_charvals)
    throw CLI::ValidationError("--suite must be identities, charvals, or all");

  if (run_identities) {
    for (int n = 2; n <= max_n; ++n)
      for (int ell = 0; ell <= n + 4; ++ell) {
        bool ok = true;
        try {
          qformula::tq_all(n, ell);
          for (int m = 0; m <= ell - 1; ++m) qformula::tq_nlm_all(n, ell, m);
        } catch (const InternalError&) {
          ok = false;
        }
        record("route_equivalence", {{"n", n}, {"ell", ell}}, ok);
      }
    // q-binomial theorem up to N = 12
    for (int N = 0; N <= 12; ++N) {
      XPoly lhs = qformula::x_poch(N);
      XPoly rhs;
      for (int k = 0; k <= N; ++k)
        rhs = rhs + XPoly::monomial(
                        k, QPoly((k % 2) ? BigInt(-1) : BigInt(1)) *
                               QPoly::monomial(k * (k - 1) / 2) *
                               qformula::q_binom(N, k));
      record("q_binomial_theorem", {{"N", N}}, lhs == rhs);
    }
    for (int n = 2; n <= max_n; ++n) {
      for (int ell = 0; ell <= n + 3; ++ell)
        record("aggregate_identity", {{"n", n}, {"ell", ell}},
               qformula::aggregate_identity(n, ell));
      record("ogf", {{"n", n}}, qformula::ogf_check(n, n + 6));
      record("egf", {{"n", n}}, qformula::egf_check(n, n + 6));
      for (int ell = 0; ell <= 8; ++ell)
        record("q2_dichotomy", {{"n", n}, {"ell", ell}},
               qformula::tq_q2_dichotomy(n, ell) ==
                   qformula::tq(n, ell, qformula::TqRoute::binom).eval(BigInt(2)));
    }
  }
  if (run_charvals) {
    int max_size = std::min(max_n + 3, 8);
    for (int size = 1; size <= max_size; ++size)
      for (const auto& lam : charvals::partitions_of(size)) {
        bool ok = true;
        try {
          charvals::f_lambda_all(lam);
        } catch (const InternalError&) {
          ok = false;
        }
        record("f_lambda_routes", {{"size", size}}, ok);
        record("content_identity", {{"size", size}},
               charvals::content_identity(lam));
      }
    for (int n = 2; n <= max_n; ++n)
      for (int ell = 1; ell <= n + 3; ++ell)
        for (int m = 0; m <= ell - 1; ++m)
          record("frobenius_vs_closed", {{"n", n}, {"ell", ell}, {"m", m}},
                 charvals::frobenius_count_poly(n, ell, m) ==
                     qformula::tq_nlm_all(n, ell, m));
  }
  njson out;
  out["suite"] = suite;
  out["checks"] = checks;
  out["pass"] = all;
  emit(out, o.format);
  return all ? 0 : 1;
}

int run_hurwitz(const CommonOpts& o) {
  const gf::FieldTable& f = gf::field_of_size(o.q);
  njson out;
  if (o.target == "singer") {
    auto rep = hurwitz::hurwitz_transitivity_check(f, o.n, o.ell, o.tuple_budget);
    njson cp = njson::array();
    for (uint64_t c : rep.target_charpoly) cp.push_back(c);
    out["target_charpoly"] = cp;
    out["ell"] = rep.ell;
    njson classes = njson::array();
    for (const auto& cls : rep.classes) {
      njson c;
      c["det_multiset"] = cls.det_multiset;
      c["tuple_count"] = cls.tuple_count;
      c["orbit_sizes"] = cls.orbit_sizes;
      classes.push_back(c);
    }
    out["classes"] = classes;
    out["single_orbit_per_class"] = rep.pass;
    emit(out, o.format);
    return 0;
  }
  MatrixGF target = resolve_target(o);
  auto tuples = hurwitz::enumerate_factorizations(target, o.ell, o.tuple_budget);
  auto dec = hurwitz::orbit_decompose(f, o.n, tuples);
  njson cp = njson::array();
  for (uint64_t c : glnq::charpoly(target).rep_coeffs()) cp.push_back(c);
  out["target_charpoly"] = cp;
  out["ell"] = o.ell;
  out["tuple_count"] = tuples.size();
  std::vector<uint64_t> sizes = dec.sizes;
  std::sort(sizes.rbegin(), sizes.rend());
  out["orbit_sizes"] = sizes;
  emit(out, o.format);
  return 0;
}

int run_interval(const CommonOpts& o) {
  const gf::FieldTable& f = gf::field_of_size(o.q);
  MatrixGF c = resolve_target(o);
  auto data = absorder::interval(c, o.dense_bound, o.threads);
  auto rep = absorder::pi_map_report(data, f);
  njson out;
  out["n"] = o.n;
  out["q"] = o.q;
  out["rank_sizes"] = rep.rank_sizes;
  out["lattice_rank_sizes"] = rep.lattice_rank_sizes;
  out["pi_image_sizes"] = rep.pi_image_sizes;
  out["pi_surjective"] = rep.pi_surjective;
  out["fiber_multiset_by_rank"] = rep.fiber_multiset_by_rank;
  emit(out, o.format);
  return 0;
}

int run_jm(const CommonOpts& o) {
  const gf::FieldTable& f = gf::field_of_size(o.q);
  auto rep = factor_count::jm_commutation(f, o.n, count_opts(o));
  njson out;
  out["n"] = rep.n;
  out["q"] = rep.q;
  out["elements"] = rep.elements;
  out["pairs_checked"] = rep.pairs_checked;
  out["all_commute"] = rep.all_commute;
  out["class_sums_match"] = rep.class_sums_match;
  out["centers_check"] = rep.centers_check;
  out["failures"] = rep.failures;
  out["pass"] = rep.pass();
  emit(out, o.format);
  return rep.pass() ? 0 : 1;
}

int run_survey(const CommonOpts& o) {
  const gf::FieldTable& f = gf::field_of_size(o.q);
  auto rows = factor_count::survey_regular_elliptic(f, o.n, o.ell, count_opts(o));
  njson arr = njson::array();
  bool all_equal = true;
  for (const auto& row : rows) {
    njson r;
    njson cp = njson::array();
    for (uint64_t c : row.charpoly) cp.push_back(c);
    r["charpoly"] = cp;
    r["count"] = row.count.get_str();
    arr.push_back(r);
    all_equal = all_equal && row.count == rows.front().count;
  }
  njson out;
  out["n"] = o.n;
  out["q"] = o.q;
  out["ell"] = o.ell;
  out["rows"] = arr;
  out["all_counts_equal"] = all_equal;
  emit(out, o.format);
  return 0;
}

int run_repro(const CommonOpts& o) {
  auto results = repro::run_acceptance(o.heavy, o.threads);
  njson arr = njson::array();
  bool all = true;
  for (const auto& r : results) {
    njson c;
    c["id"] = r.id;
    c["name"] = r.name;
    c["pass"] = r.pass;
    if (!r.details.empty()) c["details"] = r.details;
    c["seconds"] = r.seconds;
    arr.push_back(c);
    all = all && r.pass;
  }
  njson out;
  out["heavy"] = o.heavy;
  out["criteria"] = arr;
  out["pass"] = all;
  emit(out, o.format);
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"singerfact: exact reflection-factorization counts for Singer "
               "cycles in GL_n(F_q), with symbolic q-identity verification"};
  app.require_subcommand(1);

  CommonOpts o;
  std::vector<uint64_t> dets;
  std::string route = "all";
  std::string suite = "all";
  int max_n = 5;

  auto* count = app.add_subcommand("count", "count reflection factorizations");
  add_common(count, o);

  auto* count_dets = app.add_subcommand(
      "count-dets", "count factorizations with a fixed determinant sequence");
  add_common(count_dets, o, false);
  count_dets->add_option("--dets", dets,
                         "determinant sequence (representation codes)")
      ->required();

  auto* formula = app.add_subcommand("formula", "evaluate closed formulas");
  add_common(formula, o);
  formula->add_option("--m", o.m, "number of transvection steps (refined count)");
  formula->add_option("--route", route, "sum | diff | binom | all");

  auto* verify = app.add_subcommand("verify", "run identity/property suites");
  add_common(verify, o, false);
  verify->add_option("--suite", suite, "identities | charvals | all");
  verify->add_option("--max-n", max_n, "largest n in the grid");

  auto* hur = app.add_subcommand("hurwitz", "Hurwitz orbit decomposition");
  add_common(hur, o);

  auto* interval = app.add_subcommand("interval", "absolute-order interval [e,c]");
  add_common(interval, o, false);

  auto* jm = app.add_subcommand("jm", "Jucys-Murphy commutation report");
  add_common(jm, o, false);

  auto* survey = app.add_subcommand(
      "survey-re", "factorization counts across regular elliptic classes");
  add_common(survey, o);

  auto* rep = app.add_subcommand("repro", "run the full acceptance suite");
  add_common(rep, o, false);
  rep->add_flag("--heavy", o.heavy, "include the long Hurwitz n=ell=5 case");

  count->add_flag("--meet-in-middle", o.meet_in_middle,
                  "use the meet-in-the-middle convolution");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (count->parsed()) return run_count(o);
    if (count_dets->parsed()) return run_count_dets(o, dets);
    if (formula->parsed()) return run_formula(o, route);
    if (verify->parsed()) return run_verify(o, suite, max_n);
    if (hur->parsed()) return run_hurwitz(o);
    if (interval->parsed()) return run_interval(o);
    if (jm->parsed()) return run_jm(o);
    if (survey->parsed()) return run_survey(o);
    if (rep->parsed()) return run_repro(o);
  } catch (const BudgetError& e) {
    njson out;
    out["error"] = "budget";
    out["message"] = e.what();
    if (!e.partial_json.empty())
      out["partial"] = njson::parse(e.partial_json, nullptr, false);
    std::cout << out.dump(2) << "\n";
    return 3;
  } catch (const InternalError& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
