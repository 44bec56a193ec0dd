// ramfac command-line frontend. Every invocation prints one run report (JSON by
// default, or indented text with --format pretty).
//
// Exit codes: 0 success / no bad coloring, 1 bad coloring found, 2 budget
// exhausted, 64 usage or input error.

#include <sys/resource.h>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "ramfac/amalgam.hpp"
#include "ramfac/boolmat.hpp"
#include "ramfac/bounds.hpp"
#include "ramfac/colorsearch.hpp"
#include "ramfac/ffmat.hpp"
#include "ramfac/json_io.hpp"
#include "ramfac/metricfree.hpp"
#include "ramfac/nets.hpp"
#include "ramfac/normgeo.hpp"

using namespace ramfac;

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr int kExitBad = 1, kExitBudget = 2, kExitUsage = 64;

struct Result {
  Json outcome = Json::object();
  int exit_code = 0;
  std::uint64_t nodes = 0;
};

using Runner = std::function<Result()>;

// Payload arguments: "-" reads stdin, "@path" reads a file, anything else is
// taken literally.
std::string read_payload(const std::string& arg) {
  if (arg == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw ParseError("cannot open " + arg.substr(1));
    return {std::istreambuf_iterator<char>(in), {}};
  }
  return arg;
}

bool looks_like_json(const std::string& s) {
  const auto i = s.find_first_not_of(" \t\r\n");
  return i != std::string::npos && (s[i] == '{' || s[i] == '[');
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(what + ": " + e.what());
  }
}

PrimeFieldMatrix ff_matrix(std::uint32_t p, const std::string& arg) {
  const std::string text = read_payload(arg);
  if (looks_like_json(text)) {
    auto m = ffmatrix_from_json(parse_json(text, "matrix"));
    if (m.p() != p) throw ParseError("matrix.p: differs from --p");
    return m;
  }
  return PrimeFieldMatrix::from_rows(p, parse_int_rows(text));
}

RatMatrix rat_matrix(const std::string& arg) {
  const std::string text = read_payload(arg);
  if (looks_like_json(text)) return RatMatrix::from_rows(rows_from_json(parse_json(text, "matrix"), "matrix"));
  return RatMatrix::from_rows(parse_rational_rows(text));
}

RatVec rat_vector(const std::string& arg) {
  const std::string text = read_payload(arg);
  if (looks_like_json(text)) return ratvec_from_json(parse_json(text, "vector"), "vector");
  const auto rows = parse_rational_rows(text);
  if (rows.size() != 1) throw ParseError("vector: expected a single row");
  return rows[0];
}

// "linf:K", "l1:K", or a PolyhedralSpace JSON payload.
PolyhedralSpace space_arg(const std::string& arg) {
  for (const auto& [prefix, make] :
       {std::pair<std::string, PolyhedralSpace (*)(std::size_t)>{"linf:", &PolyhedralSpace::ell_inf},
        {"l1:", &PolyhedralSpace::ell_1}}) {
    if (arg.rfind(prefix, 0) == 0) {
      try {
        return make(std::stoul(arg.substr(prefix.size())));
      } catch (const std::logic_error&) {
        throw ParseError("space: bad dimension in '" + arg + "'");
      }
    }
  }
  return space_from_json(parse_json(read_payload(arg), "space"));
}

FiniteMetricSpace metric_arg(const std::string& arg, std::optional<std::size_t> base) {
  const std::string text = read_payload(arg);
  if (looks_like_json(text)) {
    Json j = parse_json(text, "metric");
    if (base) j["basepoint"] = *base;
    return metric_from_json(j);
  }
  return metric_from_csv(text, base.value_or(0));
}

std::vector<std::uint32_t> index_list(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
    } catch (const std::logic_error&) {
      throw ParseError("bad index '" + tok + "'");
    }
  }
  return out;
}

Json log_json(const LogValue& l) { return Json{{"arg", to_string(l.arg)}, {"log", l.value}}; }

Json opt_rational(const std::optional<Rational>& q) { return q ? Json(to_string(*q)) : Json("inf"); }

int status_exit(SearchStatus s) {
  switch (s) {
    case SearchStatus::BadColoringFound: return kExitBad;
    case SearchStatus::BudgetExhausted: return kExitBudget;
    default: return 0;
  }
}

long max_rss_kb() {
  rusage u{};
  getrusage(RUSAGE_SELF, &u);
  return u.ru_maxrss;
}

void print_pretty(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) print_pretty(v, prefix.empty() ? k : prefix + "." + k, out);
    return;
  }
  bool flat = j.is_array();
  if (flat)
    for (const auto& e : j)
      if (e.is_object()) flat = false;
  if (j.is_array() && !flat) {
    for (std::size_t i = 0; i < j.size(); ++i) print_pretty(j[i], prefix + "[" + std::to_string(i) + "]", out);
    return;
  }
  out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

struct Globals {
  std::string format = "json";
  bool pretty = false;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  std::uint64_t max_nodes = 10'000'000;
  double max_seconds = 60.0;

  SearchOptions search() const {
    SearchOptions o;
    o.budget.max_nodes = max_nodes;
    o.budget.max_seconds = max_seconds;
    o.jobs = jobs;
    return o;
  }
};

Json echo_parameters(const CLI::App* app) {
  Json p = Json::object();
  for (const CLI::Option* o : app->get_options()) {
    if (o->get_name() == "--help" || o->get_name().empty()) continue;
    std::string name = o->get_single_name();
    if (o->count() > 0) {
      const auto& r = o->results();
      if (o->get_type_size() == 0) p[name] = true;
      else if (r.size() == 1) p[name] = r[0];
      else p[name] = r;
    } else if (!o->get_default_str().empty()) {
      p[name] = o->get_default_str();
    }
  }
  return p;
}

// ---------------------------------------------------------------------------
// Subcommands. Each registers its options and sets `run` when selected.

struct Cli {
  CLI::App app{"Finite Ramsey factorization and polyhedral norm toolkit", "ramfac"};
  Globals g;
  Runner run;
  CLI::App* selected = nullptr;

  void select(CLI::App* sub, Runner r) {
    sub->callback([this, sub, r] {
      selected = sub;
      run = r;
    });
  }

  void add_matrix_commands() {
    auto* dec = app.add_subcommand("decompose", "A = red(A) * tau(A)^-1 for A of full column rank");
    auto p = std::make_shared<std::uint32_t>(2);
    auto m = std::make_shared<std::string>();
    dec->add_option("--p", *p, "prime modulus")->capture_default_str();
    dec->add_option("--matrix", *m, "digit rows '11,01,10', matrix JSON, '-' or @file")->required();
    select(dec, [p, m] {
      const auto a = ff_matrix(*p, *m);
      const auto d = rcef_decompose(a);
      Result r;
      r.outcome = {{"input", to_json(a)}, {"red", to_json(d.red)}, {"tau", to_json(d.tau.matrix())},
                   {"tau_inverse", to_json(d.tau.inverse())}};
      return r;
    });

    auto* t2 = app.add_subcommand("tau2", "A = a0 * gamma * a1^t for square A");
    auto p2 = std::make_shared<std::uint32_t>(2);
    auto m2 = std::make_shared<std::string>();
    t2->add_option("--p", *p2, "prime modulus")->capture_default_str();
    t2->add_option("--matrix", *m2, "digit rows, matrix JSON, '-' or @file")->required();
    select(t2, [p2, m2] {
      const auto a = ff_matrix(*p2, *m2);
      const auto d = tau2(a);
      Result r;
      r.outcome = {{"input", to_json(a)}, {"rank", a.rank()}, {"gamma", to_json(d.gamma.matrix())},
                   {"a0", to_json(d.a0)}, {"a1", to_json(d.a1)}};
      return r;
    });

    auto* pic = app.add_subcommand("pi", "column-sorting permutation of a Boolean partition matrix");
    auto mb = std::make_shared<std::string>();
    pic->add_option("--matrix", *mb, "0/1 digit rows (n rows, k columns)")->required();
    select(pic, [mb] {
      const auto rows = parse_int_rows(read_payload(*mb));
      std::vector<std::vector<std::size_t>> cols(rows[0].size());
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
          if (rows[i][j] != 0 && rows[i][j] != 1) throw ParseError("matrix row " + std::to_string(i) + ": entries must be 0 or 1");
          if (rows[i][j]) cols[j].push_back(i);
        }
      const auto b = BooleanMatrix::from_columns(rows.size(), cols);
      const auto s = pi(b);
      const auto sorted = b * s;
      Json srt = Json::array();
      for (std::size_t i = 0; i < sorted.rows(); ++i) {
        std::string row;
        for (std::size_t j = 0; j < sorted.cols(); ++j) row += sorted.at(i, j) ? '1' : '0';
        srt.push_back(row);
      }
      Result r;
      r.outcome = {{"pi", s.values()}, {"sorted", srt}, {"rigid_surjection", boolean_to_epi(sorted).map()}};
      return r;
    });

    auto* ph = app.add_subcommand("phi", "matrix of a rigid surjection onto F_p^k (antilex order)");
    auto p3 = std::make_shared<std::uint32_t>(2);
    auto k3 = std::make_shared<std::size_t>(1);
    auto map = std::make_shared<std::string>();
    ph->add_option("--p", *p3, "prime modulus")->capture_default_str();
    ph->add_option("--k", *k3, "codomain dimension")->capture_default_str();
    ph->add_option("--map", *map, "comma separated values f(0),f(1),... as antilex ranks")->required();
    select(ph, [p3, k3, map] {
      if (!is_prime(*p3)) throw DomainError("--p must be prime");
      const auto order = LinearOrder::field_vectors(*p3, *k3);
      const RigidSurjection f(index_list(read_payload(*map)), order.size());
      const auto a = phi(f, order);
      Result r;
      r.outcome = {{"matrix", to_json(a)}, {"is_rcef", is_rcef(a)}, {"rref_transpose", is_rref(a.transpose())}};
      return r;
    });
  }

  void add_family_options(CLI::App* sub, std::shared_ptr<FamilyParams> fp) {
    sub->add_option("--p", fp->p, "prime modulus (glr, ff-factor, sq-factor)")->capture_default_str();
    sub->add_option("--k", fp->k, "copy dimension; kR for drt")->capture_default_str();
    sub->add_option("--m", fp->m, "target dimension; kS for drt")->capture_default_str();
    sub->add_option("--r", fp->r, "number of colors")->capture_default_str();
  }

  static Json step_json(const MinNStep& s) {
    Json j = to_json(s.outcome);
    j["n"] = s.n;
    j["ground"] = s.ground;
    j["copies"] = s.copies;
    return j;
  }

  void add_search_commands() {
    auto* ver = app.add_subcommand("verify", "search for a bad coloring of one instance");
    auto fam = std::make_shared<std::string>();
    auto fp = std::make_shared<FamilyParams>();
    auto n = std::make_shared<std::size_t>(0);
    auto upto = std::make_shared<std::size_t>(0);
    auto naive = std::make_shared<bool>(false);
    ver->add_option("family", *fam, "drt|glr|ff-factor|bool-factor|gowers|sq-factor")->required();
    add_family_options(ver, fp);
    ver->add_option("--n", *n, "ground parameter")->required();
    ver->add_option("--min-n", *upto, "scan n..MAX and report the least n without a bad coloring");
    ver->add_flag("--naive", *naive, "also run full enumeration and compare");
    select(ver, [this, fam, fp, n, upto, naive] {
      const Family f = parse_family(*fam);
      Result r;
      if (*upto) {
        const auto res = min_n(f, *fp, *n, *upto, g.search());
        r.outcome["min_n"] = res.n ? Json(*res.n) : Json(nullptr);
        r.outcome["steps"] = Json::array();
        for (const auto& s : res.steps) {
          r.outcome["steps"].push_back(step_json(s));
          r.nodes += s.outcome.stats.nodes;
        }
        r.exit_code = res.budget_hit ? kExitBudget : res.n ? 0 : kExitBad;
        return r;
      }
      const auto inst = build_instance(f, *fp, *n);
      const auto out = exists_bad_coloring(inst, g.search());
      r.outcome = to_json(out);
      r.outcome["ground"] = inst.ground_size;
      r.outcome["copies"] = inst.copies.size();
      if (out.witness && inst.labels.size() == inst.ground_size) {
        // color classes keyed by the canonical element encodings
        Json classes = Json::array();
        for (std::uint32_t c = 0; c < inst.r; ++c) {
          Json cls = Json::array();
          for (std::size_t e = 0; e < inst.ground_size; ++e)
            if ((*out.witness)[e] == c) cls.push_back(inst.labels[e]);
          classes.push_back(cls);
        }
        r.outcome["witness_classes"] = classes;
      }
      if (*naive) {
        const auto nv = naive_bad_coloring(inst);
        r.outcome["naive"] = {{"found", nv.found},
                              {"witness", nv.found ? Json(nv.witness) : Json(nullptr)},
                              {"colorings_checked", nv.colorings_checked}};
        const bool agree = out.status == SearchStatus::BudgetExhausted ||
                           (nv.found == (out.status == SearchStatus::BadColoringFound) &&
                            (!nv.found || nv.witness == *out.witness));
        r.outcome["naive"]["agrees"] = agree;
        if (!agree) throw Error("search and naive enumeration disagree");
      }
      r.nodes = out.stats.nodes;
      r.exit_code = status_exit(out.status);
      return r;
    });

    auto* mn = app.add_subcommand("min-n", "least n without a bad coloring");
    auto fam2 = std::make_shared<std::string>();
    auto fp2 = std::make_shared<FamilyParams>();
    auto lo = std::make_shared<std::size_t>(0);
    auto hi = std::make_shared<std::size_t>(8);
    mn->add_option("family", *fam2, "drt|glr|ff-factor|bool-factor|gowers|sq-factor")->required();
    add_family_options(mn, fp2);
    mn->add_option("--n-min", *lo, "first n to try (default: smallest well-formed n)");
    mn->add_option("--n-max", *hi, "last n to try")->capture_default_str();
    select(mn, [this, fam2, fp2, lo, hi] {
      const Family f = parse_family(*fam2);
      const std::size_t start = *lo ? *lo : family_min_n(f, *fp2);
      const auto res = min_n(f, *fp2, start, *hi, g.search());
      Result r;
      r.outcome["min_n"] = res.n ? Json(*res.n) : Json(nullptr);
      r.outcome["budget_hit"] = res.budget_hit;
      r.outcome["steps"] = Json::array();
      for (const auto& s : res.steps) {
        r.outcome["steps"].push_back(step_json(s));
        r.nodes += s.outcome.stats.nodes;
      }
      r.exit_code = res.budget_hit ? kExitBudget : res.n ? 0 : kExitBad;
      return r;
    });
  }

  void add_geo_commands() {
    auto* geo = app.add_subcommand("geo", "polyhedral normed spaces");
    geo->require_subcommand(1);
    geo->add_flag("--json", "JSON output (the default)");

    auto* nrm = geo->add_subcommand("norm", "norm (and optionally dual norm) of a vector");
    auto s1 = std::make_shared<std::string>(), v1 = std::make_shared<std::string>(), f1 = std::make_shared<std::string>();
    nrm->add_option("--space", *s1, "linf:K, l1:K or space JSON")->required();
    nrm->add_option("--x", *v1, "vector, e.g. '1 -1/2'");
    nrm->add_option("--f", *f1, "functional for the dual norm");
    select(nrm, [s1, v1, f1] {
      const auto x = space_arg(*s1);
      Result r;
      r.outcome["space"] = to_json(x);
      if (!v1->empty()) r.outcome["norm"] = to_string(x.norm(rat_vector(*v1)));
      if (!f1->empty()) r.outcome["dual_norm"] = to_string(x.dual_norm(rat_vector(*f1)));
      return r;
    });

    auto* opn = geo->add_subcommand("opnorm", "operator norm and inverse norm of T: X -> Y");
    auto x2 = std::make_shared<std::string>(), y2 = std::make_shared<std::string>(), t2 = std::make_shared<std::string>();
    opn->add_option("--x", *x2, "domain space")->required();
    opn->add_option("--y", *y2, "codomain space")->required();
    opn->add_option("--t", *t2, "matrix rows, e.g. '1 1; 1 -1'")->required();
    select(opn, [x2, y2, t2] {
      const auto x = space_arg(*x2), y = space_arg(*y2);
      const auto t = rat_matrix(*t2);
      Result r;
      r.outcome = {{"norm", to_string(op_norm(t, x, y))}, {"inv_norm", opt_rational(inv_norm(t, x, y))}};
      return r;
    });

    auto* om = geo->add_subcommand("omega", "log max(|Id|_{N,P}, |Id|_{P,N})");
    auto n3 = std::make_shared<std::string>(), p3 = std::make_shared<std::string>();
    om->add_option("--n", *n3, "first space")->required();
    om->add_option("--p", *p3, "second space")->required();
    select(om, [n3, p3] {
      Result r;
      r.outcome["omega"] = log_json(omega(space_arg(*n3), space_arg(*p3)));
      return r;
    });

    auto* al = geo->add_subcommand("alpha", "dual-ball Hausdorff distance alpha_N(P, Q) with the sandwich check");
    auto n4 = std::make_shared<std::string>(), p4 = std::make_shared<std::string>(), q4 = std::make_shared<std::string>();
    al->add_option("--n", *n4, "reference space N")->required();
    al->add_option("--p", *p4, "space P")->required();
    al->add_option("--q", *q4, "space Q")->required();
    select(al, [n4, p4, q4] {
      const auto n = space_arg(*n4), p = space_arg(*p4), q = space_arg(*q4);
      const auto s = sandwich_check(n, p, q);
      Result r;
      r.outcome = {{"alpha", to_string(s.alpha_pq)},
                   {"omega", log_json(s.omega_pq)},
                   {"lambda", to_string(s.lambda)},
                   {"sandwich_certificate", s.rational_certificate},
                   {"sandwich_log_form", s.log_form}};
      return r;
    });

    auto* gp = geo->add_subcommand("gap", "gap distance between two subspaces of Z");
    auto z5 = std::make_shared<std::string>(), v5 = std::make_shared<std::string>(), w5 = std::make_shared<std::string>();
    gp->add_option("--z", *z5, "ambient space")->required();
    gp->add_option("--v", *v5, "basis of V as matrix columns")->required();
    gp->add_option("--w", *w5, "basis of W as matrix columns")->required();
    select(gp, [z5, v5, w5] {
      Result r;
      r.outcome["gap"] = to_string(gap_metric(rat_matrix(*v5), rat_matrix(*w5), space_arg(*z5)));
      return r;
    });

    auto* bm = geo->add_subcommand("bm", "upper bound for the Banach-Mazur distance");
    auto x6 = std::make_shared<std::string>(), y6 = std::make_shared<std::string>();
    auto effort = std::make_shared<std::size_t>(2000);
    bm->add_option("--x", *x6, "first space")->required();
    bm->add_option("--y", *y6, "second space")->required();
    bm->add_option("--effort", *effort, "candidate evaluations")->capture_default_str();
    select(bm, [this, x6, y6, effort] {
      const auto e = bm_upper(space_arg(*x6), space_arg(*y6), *effort, g.seed);
      Result r;
      r.outcome = {{"kappa", to_string(e.kappa)}, {"log_kappa", e.log_kappa}, {"map", to_json(e.map)},
                   {"candidates", e.candidates}};
      return r;
    });

    auto* nt = geo->add_subcommand("net", "greedy eps-net of the ball or the shell family");
    auto s7 = std::make_shared<std::string>(), e7 = std::make_shared<std::string>("1"), mode = std::make_shared<std::string>("ball");
    auto rad = std::make_shared<std::string>("1");
    auto samples = std::make_shared<std::size_t>(0);
    auto grid = std::make_shared<std::size_t>(0);
    nt->add_option("--space", *s7, "linf:K, l1:K or space JSON")->required();
    nt->add_option("--eps", *e7, "rational eps > 0")->capture_default_str();
    nt->add_option("--mode", *mode, "ball|shell")->capture_default_str()->check(CLI::IsMember({"ball", "shell"}));
    nt->add_option("--radius", *rad, "ball radius (ball mode)")->capture_default_str();
    nt->add_option("--grid", *grid, "grid points per unit (0: automatic)")->capture_default_str();
    nt->add_option("--samples", *samples, "shell-property samples (shell mode)")->capture_default_str();
    select(nt, [this, s7, e7, mode, rad, samples, grid] {
      const auto x = space_arg(*s7);
      NetOptions o;
      o.radius = parse_rational(*rad);
      o.grid_per_unit = *grid;
      const bool shell = *mode == "shell";
      const auto net = eps_net(x, parse_rational(*e7), shell ? NetMode::Shell : NetMode::BallGreedy, o);
      Result r;
      r.outcome = {{"size", net.points.size()}, {"bound", net.bound.str()},      {"within_bound", BigInt(net.points.size()) <= net.bound},
                   {"candidates", net.candidates}, {"grid_step", to_string(net.grid_step)},
                   {"separated", net.separated}, {"dense_on_grid", net.dense_on_grid}, {"points", to_json(net.points)}};
      if (shell && *samples) {
        const auto rep = check_shell_property(x, net, *samples, g.seed);
        r.outcome["shell_samples"] = rep.samples;
        r.outcome["shell_failures"] = rep.failures;
      }
      return r;
    });

    auto* am = geo->add_subcommand("amalgam", "amalgam of X and Y along T");
    auto x8 = std::make_shared<std::string>(), y8 = std::make_shared<std::string>(), t8 = std::make_shared<std::string>();
    auto d8 = std::make_shared<std::string>();
    am->add_option("--x", *x8, "space X")->required();
    am->add_option("--y", *y8, "space Y")->required();
    am->add_option("--t", *t8, "injective T: X -> Y as matrix rows")->required();
    am->add_option("--d", *d8, "functional set D on Y (matrix rows); default: one extension per extreme point");
    select(am, [x8, y8, t8, d8] {
      std::optional<std::vector<RatVec>> d;
      if (!d8->empty()) d = rat_matrix(*d8).row_list();
      const auto a = amalgam(space_arg(*x8), space_arg(*y8), rat_matrix(*t8), d);
      Result r;
      r.outcome = {{"z", to_json(a.z, false)},
                   {"i", to_json(a.i)},
                   {"j", to_json(a.j)},
                   {"t_norm", to_string(a.t_norm)},
                   {"t_inv_norm", to_string(a.t_inv_norm)},
                   {"defect", to_string(a.defect)},
                   {"defect_bound", to_string(a.defect_bound)},
                   {"i_isometric", a.i_isometric},
                   {"j_isometric", a.j_isometric},
                   {"d", to_json(a.d)}};
      return r;
    });

    auto* cp = geo->add_subcommand("correcting", "correcting pair for X_0, ..., X_n");
    auto sp = std::make_shared<std::vector<std::string>>();
    auto th = std::make_shared<std::string>(), ta = std::make_shared<std::string>();
    auto cap = std::make_shared<std::size_t>(12);
    cp->add_option("--space", *sp, "spaces X_0 ... X_n in order (repeat the option)")->required();
    cp->add_option("--theta", *th, "theta > 1")->required();
    cp->add_option("--tau", *ta, "tau > theta")->required();
    cp->add_option("--max-dim", *cap, "cap on dim Y")->capture_default_str();
    select(cp, [sp, th, ta, cap] {
      std::vector<PolyhedralSpace> xs;
      for (const auto& s : *sp) xs.push_back(space_arg(s));
      CorrectingOptions o;
      o.max_dim = *cap;
      const auto c = correcting_pair(xs, parse_rational(*th), parse_rational(*ta), o);
      Json checks = Json::array();
      for (const auto& e : c.checks)
        checks.push_back({{"source", e.source}, {"distance", to_string(e.distance)}, {"i_isometric", e.i_isometric}});
      Result r;
      r.outcome = {{"y", to_json(c.y, false)},      {"j", to_json(c.j)},
                   {"j_isometric", c.j_isometric},  {"net_sizes", c.net_sizes},
                   {"dim_bound", c.dim_bound_actual.str()}, {"checks", checks},
                   {"log", c.log}};
      return r;
    });

    auto* en = geo->add_subcommand("envelope", "injective envelope F -> l_inf^d");
    auto s9 = std::make_shared<std::string>(), t9 = std::make_shared<std::string>();
    en->add_option("--space", *s9, "space F")->required();
    en->add_option("--t", *t9, "isometric T: F -> l_inf^n to factor through the envelope");
    select(en, [s9, t9] {
      const auto f = space_arg(*s9);
      const auto env = injective_envelope(f);
      Result r;
      r.outcome = {{"d", env.d}, {"psi", to_json(env.psi)}};
      if (!t9->empty()) {
        const auto u = factor_through_envelope(env, f, rat_matrix(*t9));
        r.outcome["u"] = u ? to_json(*u) : Json(nullptr);
      }
      return r;
    });

    auto* ap = geo->add_subcommand("approx", "polyhedral (1+eps)-approximation of a norm");
    auto s10 = std::make_shared<std::string>(), a10 = std::make_shared<std::string>(), e10 = std::make_shared<std::string>();
    auto pnorm = std::make_shared<std::string>("2");
    ap->add_option("--space", *s10, "polyhedral input space");
    ap->add_option("--push", *a10, "matrix A: use x -> |Ax|_p instead of --space");
    ap->add_option("--p", *pnorm, "1|2|inf for --push")->capture_default_str()->check(CLI::IsMember({"1", "2", "inf"}));
    ap->add_option("--eps", *e10, "0 < eps < 1")->required();
    select(ap, [s10, a10, e10, pnorm] {
      if (s10->empty() == a10->empty()) throw ParseError("approx: give exactly one of --space and --push");
      const NormInput in = s10->empty() ? pushforward_norm(rat_matrix(*a10), *pnorm == "inf" ? 0 : std::stoi(*pnorm))
                                        : NormInput(space_arg(*s10));
      const auto a = polyhedral_approx(in, parse_rational(*e10));
      Result r;
      r.outcome = {{"delta", to_string(a.delta)},
                   {"bound", a.bound.str()},
                   {"functionals", a.space.functionals().size()},
                   {"within_bound", BigInt(2 * a.space.functionals().size()) <= a.bound},
                   {"exact_copy", a.exact_copy},
                   {"space", to_json(a.space, false)}};
      return r;
    });

    auto* gb = geo->add_subcommand("bound", "dimension bound of a correcting pair for given dims and net sizes");
    auto dims = std::make_shared<std::vector<std::size_t>>();
    auto nets = std::make_shared<std::vector<std::size_t>>();
    gb->add_option("--dims", *dims, "dim X_0 ... dim X_n")->required()->delimiter(',');
    gb->add_option("--nets", *nets, "net sizes l_0 ... l_{n-1}")->required()->delimiter(',');
    select(gb, [dims, nets] {
      if (dims->size() != nets->size() + 1) throw ParseError("--nets must have one entry fewer than --dims");
      BigInt b = dims->back();
      for (std::size_t i = 0; i < nets->size(); ++i) b *= boost::multiprecision::pow(BigInt((*dims)[i]), (*nets)[i]);
      Result r;
      r.outcome = {{"dim_bound", b.str()}};
      return r;
    });
  }

  void add_free_commands() {
    auto* fr = app.add_subcommand("free", "finite metric spaces and their free spaces");
    fr->require_subcommand(1);
    auto metric_opt = [](CLI::App* sub, std::shared_ptr<std::string> m, const std::string& name) {
      sub->add_option(name, *m, "metric JSON or CSV distance matrix, '-' or @file")->required();
    };

    auto* nm = fr->add_subcommand("norm", "free-space norm of a vector (primal and dual LP)");
    auto m1 = std::make_shared<std::string>(), v1 = std::make_shared<std::string>();
    auto b1 = std::make_shared<std::optional<std::size_t>>();
    metric_opt(nm, m1, "--metric");
    nm->add_option("--basepoint", *b1, "basepoint index (overrides the payload; default 0)");
    nm->add_option("--v", *v1, "coefficients over non-basepoint points")->required();
    select(nm, [m1, v1, b1] {
      const auto m = metric_arg(*m1, *b1);
      const auto lp = free_norm_lps(m, rat_vector(*v1));
      if (lp.primal != lp.dual) throw Error("primal and dual LP values differ");
      Result r;
      r.outcome = {{"norm", to_string(lp.primal)}, {"primal", to_string(lp.primal)}, {"dual", to_string(lp.dual)}};
      return r;
    });

    auto* sp = fr->add_subcommand("space", "free space as a polyhedral space");
    auto m2 = std::make_shared<std::string>();
    auto b2 = std::make_shared<std::optional<std::size_t>>();
    metric_opt(sp, m2, "--metric");
    sp->add_option("--basepoint", *b2, "basepoint index (overrides the payload; default 0)");
    select(sp, [m2, b2] {
      const auto m = metric_arg(*m2, *b2);
      Result r;
      r.outcome = {{"metric", to_json(m)}, {"space", to_json(free_space(m))}};
      return r;
    });

    auto* ext = fr->add_subcommand("extend", "extend an isometric embedding through one-point extensions");
    auto m3 = std::make_shared<std::string>(), n3 = std::make_shared<std::string>(), s3 = std::make_shared<std::string>();
    metric_opt(ext, m3, "--m");
    metric_opt(ext, n3, "--n");
    ext->add_option("--sigma", *s3, "images of the points of M, comma separated")->required();
    select(ext, [m3, n3, s3] {
      const auto m = metric_arg(*m3, std::nullopt), n = metric_arg(*n3, std::nullopt);
      const auto sig32 = index_list(*s3);
      const std::vector<std::size_t> sigma(sig32.begin(), sig32.end());
      const auto e = extend_embedding(m, n, sigma);
      Result r;
      r.outcome = {{"m_inf", to_json(e.m_inf)}, {"n_inf", to_json(e.n_inf)}, {"t", to_json(e.t)},
                   {"t_isometric", op_norm(e.t, free_space(e.m_inf), free_space(e.n_inf)) == 1 &&
                                       inv_norm(e.t, free_space(e.m_inf), free_space(e.n_inf)) == Rational(1)}};
      return r;
    });

    auto* lip = fr->add_subcommand("lip", "Lipschitz constant of f vanishing at the basepoint");
    auto m4 = std::make_shared<std::string>(), f4 = std::make_shared<std::string>();
    auto b4 = std::make_shared<std::optional<std::size_t>>();
    metric_opt(lip, m4, "--metric");
    lip->add_option("--basepoint", *b4, "basepoint index (overrides the payload; default 0)");
    lip->add_option("--f", *f4, "one value per point")->required();
    select(lip, [m4, f4, b4] {
      Result r;
      r.outcome["lipschitz"] = to_string(lipschitz_norm(metric_arg(*m4, *b4), rat_vector(*f4)));
      return r;
    });

    auto* arp = fr->add_subcommand("arp-probe", "count isometric copies of M in an l_inf grid");
    auto m5 = std::make_shared<std::string>();
    auto dim = std::make_shared<std::size_t>(2);
    auto rho = std::make_shared<std::string>("1"), step = std::make_shared<std::string>("1/2");
    auto cap = std::make_shared<std::size_t>(100000);
    metric_opt(arp, m5, "--metric");
    arp->add_option("--dim", *dim, "grid dimension")->capture_default_str();
    arp->add_option("--rho", *rho, "grid radius")->capture_default_str();
    arp->add_option("--step", *step, "grid step")->capture_default_str();
    arp->add_option("--max-embeddings", *cap, "stop counting here")->capture_default_str();
    select(arp, [m5, dim, rho, step, cap] {
      const auto p = arp_probe(metric_arg(*m5, std::nullopt), *dim, parse_rational(*rho), parse_rational(*step), *cap);
      Result r;
      r.outcome = {{"grid_points", p.grid_points}, {"embeddings", p.embeddings}, {"capped", p.capped},
                   {"first", p.first}, {"first_points", to_json(p.grid)}};
      return r;
    });

    auto* emb = app.add_subcommand("emb", "all isometric embeddings M -> N");
    auto m6 = std::make_shared<std::string>(), n6 = std::make_shared<std::string>();
    auto maxr = std::make_shared<std::size_t>(1000000);
    metric_opt(emb, m6, "--source");
    metric_opt(emb, n6, "--target");
    emb->add_option("--max-results", *maxr, "budget on the number of embeddings")->capture_default_str();
    select(emb, [m6, n6, maxr] {
      const auto list = enumerate_emb(metric_arg(*m6, std::nullopt), metric_arg(*n6, std::nullopt), 10, *maxr);
      Result r;
      r.outcome = {{"count", list.size()}, {"embeddings", list}};
      return r;
    });
  }

  void add_bound_commands() {
    auto* bd = app.add_subcommand("bound", "closed-form Ramsey-number bounds");
    bd->require_subcommand(1);

    auto* ni = bd->add_subcommand("n-infty", "symbolic bound for n_inf(d, m, r, eps); n_pol has the same bound");
    auto d = std::make_shared<unsigned long>(1), m = std::make_shared<unsigned long>(2), r = std::make_shared<unsigned long>(2);
    auto eps = std::make_shared<std::string>("1");
    ni->add_option("--d", *d)->capture_default_str();
    ni->add_option("--m", *m)->capture_default_str();
    ni->add_option("--r", *r)->capture_default_str();
    ni->add_option("--eps", *eps)->capture_default_str();
    select(ni, [d, m, r, eps] {
      const auto b = bound_n_infty(*d, *m, *r, parse_rational(*eps));
      Result res;
      res.outcome = {{"n_infty", b.to_string()}, {"n_pol", b.to_string()}, {"gr_d", b.d.str()},
                     {"gr_m", b.m.str()},        {"gr_r", b.r.str()},      {"context", b.context}};
      return res;
    });

    auto* dh = bd->add_subcommand("dim-h", "dimension bound for the universal space H");
    auto df = std::make_shared<unsigned long>(1), dg = std::make_shared<unsigned long>(1);
    auto e2 = std::make_shared<std::string>("1"), n = std::make_shared<std::string>();
    auto cap = std::make_shared<unsigned long>(1UL << 22);
    dh->add_option("--dim-f", *df)->capture_default_str();
    dh->add_option("--dim-g", *dg)->capture_default_str();
    dh->add_option("--eps", *e2)->capture_default_str();
    dh->add_option("--n", *n, "an admissible n (at least the printed n_pol bound)")->required();
    dh->add_option("--cap-bits", *cap, "largest exact value kept, in bits")->capture_default_str();
    select(dh, [df, dg, e2, n, cap] {
      BigInt nn;
      try {
        nn = BigInt(*n);
      } catch (const std::exception&) {
        throw ParseError("--n: expected an integer");
      }
      const auto b = bound_dim_h(*df, *dg, parse_rational(*e2), nn, *cap);
      Result res;
      res.outcome = {{"expression", b.expression},
                     {"base", to_string(b.base)},
                     {"exp_f", b.exp_f.str()},
                     {"exp_g", b.exp_g.str()},
                     {"value", b.value ? Json(b.value->str()) : Json(nullptr)},
                     {"log2_value", b.log2_value ? Json(*b.log2_value) : Json(nullptr)},
                     {"n_requires", "n >= n_pol(" + b.npol_d.str() + "," + b.npol_m.str() + ",r," + to_string(b.npol_eps) + ")"}};
      return res;
    });
  }

  Cli() {
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    app.add_option("--format", g.format, "json|pretty")->capture_default_str()->check(CLI::IsMember({"json", "pretty"}));
    app.add_flag("--pretty", g.pretty, "same as --format pretty");
    app.add_option("--seed", g.seed, "seed for randomized steps")->capture_default_str();
    app.add_option("--jobs", g.jobs, "search workers")->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--max-nodes", g.max_nodes, "search node budget")->capture_default_str();
    app.add_option("--max-seconds", g.max_seconds, "search time budget")->capture_default_str();
    app.fallthrough();
    add_matrix_commands();
    add_search_commands();
    add_geo_commands();
    add_free_commands();
    add_bound_commands();
  }
};

std::string command_path(const CLI::App* sub) {
  std::string s;
  for (const CLI::App* a = sub; a && a->get_parent(); a = a->get_parent()) s = a->get_name() + (s.empty() ? "" : " " + s);
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  Cli cli;
  try {
    cli.app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = cli.app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const auto t0 = std::chrono::steady_clock::now();
  Json report;
  report["tool"] = "ramfac";
  report["version"] = kVersion;
  report["command"] = command_path(cli.selected);
  report["argv"] = std::vector<std::string>(argv + 1, argv + argc);
  Json params = echo_parameters(&cli.app);
  const Json sub_params = echo_parameters(cli.selected);
  for (const auto& [k, v] : sub_params.items()) params[k] = v;
  report["parameters"] = params;

  Result res;
  try {
    res = cli.run();
  } catch (const BudgetError& e) {
    res.outcome = {{"error", "budget"}, {"message", e.what()}};
    res.exit_code = kExitBudget;
  } catch (const Error& e) {
    res.outcome = {{"error", "input"}, {"message", e.what()}};
    res.exit_code = kExitUsage;
  } catch (const std::exception& e) {
    res.outcome = {{"error", "input"}, {"message", e.what()}};
    res.exit_code = kExitUsage;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report["outcome"] = res.outcome;
  report["exit_code"] = res.exit_code;
  report["stats"] = {{"seconds", secs}, {"nodes", res.nodes}, {"max_rss_kb", max_rss_kb()}};

  if (cli.g.pretty || cli.g.format == "pretty") {
    print_pretty(report, "", std::cout);
  } else {
    std::cout << report.dump() << "\n";
  }
  if (res.outcome.contains("error")) std::cerr << "ramfac: " << res.outcome["message"].get<std::string>() << "\n";
  return res.exit_code;
}
