// dirichlet_lab: batch command surface.
//
// Exit codes: 0 success, 2 parse or domain error, 3 theorem-check violation,
// 4 budget exceeded.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>

#include "dirichlet_lab/io/parse.hpp"
#include "dirichlet_lab/io/report.hpp"
#include "dirichlet_lab/sets/corpus.hpp"
#include "dirichlet_lab/sets/dsl.hpp"

using namespace dirichlet_lab;
using io::Json;
using io::Table;

namespace {

struct Globals {
  std::string format = "json";
  std::string out;
  unsigned threads = 0;
  std::uint64_t seed = 0;
  unsigned precision = kDefaultPrecisionBits;
  bool timing = false;
};

struct Output {
  Json payload;
  Table table;
  int exit_code = 0;
};

std::string dec(long double v) { return io::decimal(v); }
std::string str(const Json& j) { return io::cell(j); }

struct FunctionArgs {
  std::string psi, Psi, f, phi;

  void echo(Json& config) const {
    if (!psi.empty()) config["psi"] = psi;
    if (!Psi.empty()) config["Psi"] = Psi;
    if (!f.empty()) config["f"] = f;
    if (!phi.empty()) config["phi"] = phi;
  }

  // Psi from --Psi, or derived from --psi.
  sets::AuxFunction aux() const {
    require(psi.empty() != Psi.empty(), ErrorKind::ParseError, "give exactly one of --psi and --Psi");
    if (!Psi.empty()) return sets::parse_aux(Psi);
    return sets::AuxFunction::derived(sets::parse_approx(psi));
  }

  sets::ApproxFunction approx() const {
    require(psi.empty() != Psi.empty(), ErrorKind::ParseError, "give exactly one of --psi and --Psi");
    if (!psi.empty()) return sets::parse_approx(psi);
    return sets::ApproxFunction(sets::PsiFromAux{std::make_shared<const sets::AuxFunction>(sets::parse_aux(Psi))});
  }

  criteria::DimensionFunction dimension() const {
    require(!f.empty(), ErrorKind::ParseError, "--f is required");
    return criteria::parse_dimension(f);
  }
};

// ---------------------------------------------------------------- expand

struct ExpandArgs {
  std::string x, depth = "20";
};

Output cmd_expand(const ExpandArgs& a, const Globals& g) {
  cf::RealInput x = io::parse_real_input(a.x);
  std::size_t depth = io::parse_count(a.depth);
  auto e = cf::continued_fraction(x, depth);
  Output out;
  Json value;
  if (const auto* r = std::get_if<cf::ExactRational>(&x)) {
    value = {{"kind", "rational"}, {"exact", r->value.get_str()}};
  } else if (const auto* w = std::get_if<cf::PeriodicWord>(&x)) {
    QuadraticSurd s = cf::surd_value(*w);
    value = {{"kind", "quadratic-surd"}, {"exact", s.to_string()}, {"enclosure", io::to_json(enclose(s, g.precision))}};
  } else {
    value = {{"kind", "interval"}, {"enclosure", io::to_json(std::get<cf::ValidatedInterval>(x).enclosure())}};
  }
  out.payload = {{"input", cf::describe(x)},
                 {"value", value},
                 {"status", cf::to_string(e.status)},
                 {"certified", e.certified},
                 {"word", io::to_json(e.word)},
                 {"convergents", io::convergent_rows(e.word)},
                 {"cylinder", e.word.empty() ? Json(nullptr) : io::to_json(cf::cylinder(e.word))}};
  out.table.columns = {"n", "a", "p", "q"};
  for (const auto& row : out.payload["convergents"]) out.table.add({str(row["n"]), str(row["a"]), str(row["p"]), str(row["q"])});
  return out;
}

// ---------------------------------------------------------------- audit

struct AuditArgs {
  std::string x;
  FunctionArgs fn;
  std::string start = "1", horizon = "50", max_precision = "4096", random = "0";
};

sets::Horizon horizon_of(const AuditArgs& a, const Globals& g) {
  sets::Horizon h;
  h.start = io::parse_count(a.start);
  h.end = io::parse_count(a.horizon);
  h.precision_bits = g.precision;
  h.max_precision_bits = static_cast<unsigned>(io::parse_count(a.max_precision));
  h.validate();
  return h;
}

struct AuditItem {
  std::string x, psi, error;
  std::vector<sets::AuditReport> audits;
  sets::EquivalenceReport equivalence;

  std::size_t violations() const {
    std::size_t v = equivalence.mismatches.size();
    for (const auto& r : audits) v += r.violations();
    return v;
  }
};

AuditItem run_audits(const cf::RealInput& x, const sets::ApproxFunction& psi, const sets::AuxFunction& aux,
                     const sets::Horizon& h) {
  AuditItem item;
  item.x = cf::describe(x);
  item.psi = psi.describe();
  item.audits.push_back(sets::kwlem_audit(x, aux, h));
  item.audits.push_back(sets::inclusion_audit(x, psi, h));
  item.equivalence = sets::equivalence_audit(x, psi, h);
  return item;
}

Output cmd_audit_single(const AuditArgs& a, const Globals& g) {
  require(!a.x.empty(), ErrorKind::ParseError, "--x is required (or use --random N)");
  cf::RealInput x = io::parse_real_input(a.x);
  auto psi = a.fn.approx();
  auto aux = a.fn.aux();
  auto h = horizon_of(a, g);
  std::optional<sets::RateFunction> phi;
  if (!a.fn.phi.empty()) phi = sets::parse_rate(a.fn.phi);

  std::vector<sets::MembershipReport> events = {
      sets::dirichlet_events(x, psi, h), sets::product_events(x, aux, h), sets::g_membership(x, aux, h),
      sets::g1_membership(x, aux, h),    sets::k_membership(x, aux, h)};
  if (phi) events.push_back(sets::f_membership(x, *phi, h));
  AuditItem item = run_audits(x, psi, aux, h);

  Output out;
  Json ev = Json::array(), au = Json::array();
  for (const auto& r : events) ev.push_back(io::to_json(r));
  for (const auto& r : item.audits) au.push_back(io::to_json(r));
  out.payload = {{"x", item.x},
                 {"psi", psi.describe()},
                 {"Psi", aux.describe()},
                 {"events", ev},
                 {"audits", au},
                 {"equivalence", {{"compared", item.equivalence.compared}, {"mismatches", item.equivalence.mismatches}}},
                 {"violations", item.violations()}};
  out.table.columns = {"n"};
  for (const auto& r : events) out.table.columns.push_back(sets::to_string(r.set));
  for (std::size_t n = h.start; n <= h.end; ++n) {
    std::vector<std::string> row = {std::to_string(n)};
    for (const auto& r : events) row.push_back(sets::to_string(r.at(n)));
    out.table.add(row);
  }
  out.exit_code = item.violations() ? 3 : 0;
  return out;
}

Output cmd_audit_random(const AuditArgs& a, const Globals& g) {
  std::size_t trials = io::parse_count(a.random);
  auto h = horizon_of(a, g);
  std::vector<AuditItem> items(trials);
  parallel_for(trials, thread_count(g.threads), [&](std::size_t i) {
    Rng rng(g.seed, i);
    cf::RealInput x = sets::random_periodic(rng);
    auto psi = sets::random_approx(rng);
    try {
      items[i] = run_audits(x, psi, sets::AuxFunction::derived(psi), h);
    } catch (const Error& e) {
      items[i].x = cf::describe(x);
      items[i].psi = psi.describe();
      items[i].error = e.what();
    }
  });

  // aggregate in index order
  std::vector<sets::ImplicationCheck> totals;
  std::size_t compared = 0, mismatches = 0, errors = 0, violations = 0;
  Json failures = Json::array();
  for (std::size_t i = 0; i < trials; ++i) {
    const auto& it = items[i];
    if (!it.error.empty()) {
      ++errors;
      failures.push_back({{"item", i}, {"x", it.x}, {"psi", it.psi}, {"error", it.error}});
      continue;
    }
    for (const auto& r : it.audits) {
      for (const auto& c : r.checks) {
        auto t = std::find_if(totals.begin(), totals.end(), [&](const auto& s) { return s.name == c.name; });
        if (t == totals.end()) {
          totals.push_back({c.name, 0, 0, 0, {}});
          t = totals.end() - 1;
        }
        t->fired += c.fired;
        t->confirmed += c.confirmed;
        t->undecided += c.undecided;
        for (auto n : c.violations) {
          t->violations.push_back(i);
          failures.push_back({{"item", i}, {"x", it.x}, {"psi", it.psi}, {"check", c.name}, {"n", n}});
        }
      }
    }
    compared += it.equivalence.compared;
    mismatches += it.equivalence.mismatches.size();
    for (auto n : it.equivalence.mismatches)
      failures.push_back({{"item", i}, {"x", it.x}, {"psi", it.psi}, {"check", "equivalence"}, {"n", n}});
    violations += it.violations();
  }

  Output out;
  Json checks = Json::array();
  for (const auto& c : totals)
    checks.push_back({{"name", c.name},
                      {"fired", c.fired},
                      {"confirmed", c.confirmed},
                      {"undecided", c.undecided},
                      {"violations", c.violations.size()}});
  out.payload = {{"trials", trials},
                 {"horizon", io::to_json(h)},
                 {"checks", checks},
                 {"equivalence", {{"compared", compared}, {"mismatches", mismatches}}},
                 {"errors", errors},
                 {"violations", violations},
                 {"failures", failures}};
  out.table.columns = {"item", "x", "psi", "violations", "error"};
  for (std::size_t i = 0; i < trials; ++i)
    out.table.add({std::to_string(i), items[i].x, items[i].psi, std::to_string(items[i].violations()), items[i].error});
  out.exit_code = violations ? 3 : 0;
  return out;
}

// ---------------------------------------------------------------- series / classify / dim

struct SeriesArgs {
  std::string kind = "hausdorff";
  FunctionArgs fn;
  std::string T = "1e6", block = "65536";
};

Table series_table(const criteria::SeriesVerdict& v) {
  Table t{{"t_end", "partial", "lower", "upper"}, {}};
  for (const auto& b : v.blocks) t.add({std::to_string(b.t_end), dec(b.partial), dec(b.lower), dec(b.upper)});
  return t;
}

Output cmd_series(const SeriesArgs& a, const Globals& g) {
  auto kind = criteria::parse_series_kind(a.kind);
  auto aux = a.fn.aux();
  std::optional<criteria::DimensionFunction> f;
  if (kind == criteria::SeriesKind::Hausdorff) f = a.fn.dimension();
  std::uint64_t T = io::parse_count(a.T);
  criteria::SeriesOptions opt{thread_count(g.threads), io::parse_count(a.block)};
  criteria::SeriesVerdict v;
  switch (kind) {
    case criteria::SeriesKind::Hausdorff: v = criteria::hausdorff_series(*f, aux, T, opt); break;
    case criteria::SeriesKind::KW: v = criteria::kw_series(aux, T, opt); break;
    default: v = criteria::example_series(kind, aux, T, opt);
  }
  Output out;
  out.payload = {{"Psi", aux.describe()}, {"T", T}, {"series", io::to_json(v)}};
  out.table = series_table(v);
  return out;
}

struct ClassifyArgs {
  FunctionArgs fn;
  std::string T = "1e6";
};

Output cmd_classify(const ClassifyArgs& a, const Globals& g) {
  auto f = a.fn.dimension();
  std::uint64_t T = io::parse_count(a.T);
  criteria::SeriesOptions opt{thread_count(g.threads), 65536};
  criteria::ClassifyResult r = a.fn.psi.empty() ? criteria::classify(a.fn.aux(), f, T, opt)
                                                : criteria::classify(a.fn.approx(), f, T, opt);
  Output out;
  out.payload = {{"f", f.describe()}, {"T", T}, {"result", io::to_json(r)}};
  out.table.columns = {"field", "value"};
  out.table.add({"classification", criteria::to_string(r.classification)});
  if (r.series) out.table.add({"series_verdict", criteria::to_string(r.series->verdict)});
  if (r.certificate) out.table.add({"essentially_sublinear", r.certificate->essentially_sublinear ? "true" : "false"});
  if (r.dimension) out.table.add({"dimension", dec(*r.dimension)});
  for (const auto& d : r.diagnostics) out.table.add({"diagnostic", d});
  return out;
}

struct DimArgs {
  FunctionArgs fn;
  std::string Q = "1e6", jmax = "256";
};

Output cmd_dim(const DimArgs& a, const Globals& g) {
  auto aux = a.fn.aux();
  std::uint64_t Q = io::parse_count(a.Q);
  auto tau = criteria::tau_liminf(aux, 4, static_cast<unsigned>(io::parse_count(a.jmax)));
  auto crit = criteria::critical_exponent(aux, Q, thread_count(g.threads));
  Output out;
  out.payload = {{"Psi", aux.describe()},
                 {"Q", Q},
                 {"tau", io::to_json(tau)},
                 {"dimension_from_tau_hat", dec(criteria::dimension_of_complement(tau.tau_hat))},
                 {"critical", io::to_json(crit)}};
  out.table.columns = {"series", "x", "y"};
  for (const auto& p : tau.grid) out.table.add({"tau_ratio", std::to_string(p.j), dec(p.ratio)});
  for (const auto& p : crit.trace)
    out.table.add({"s_star", std::to_string(p.Q), p.s_star ? dec(*p.s_star) : "undecided"});
  return out;
}

// ---------------------------------------------------------------- covers

struct CoversArgs {
  FunctionArgs fn;
  std::string fiber, jset, pairs;
  bool pair_sum = false, blocks = false, cover = false, certify = false;
  std::string qmax, q, n = "3", n_min, cap = "6", budget = "20000000";
  std::vector<std::string> B;

  int modes() const {
    return !fiber.empty() + !jset.empty() + !pairs.empty() + pair_sum + blocks + cover + certify;
  }
};

criteria::SublinearityCertificate certificate_of(const CoversArgs& a, const criteria::DimensionFunction& f) {
  if (a.B.empty()) return criteria::certify_sublinear(f);
  std::vector<long double> grid;
  for (const auto& s : a.B) grid.push_back(static_cast<long double>(parse_rational(s).get_d()));
  return criteria::certify_sublinear(f, grid);
}

Output cmd_covers(const CoversArgs& a, const Globals& g) {
  require(a.modes() == 1, ErrorKind::ParseError,
          "give exactly one of --fiber, --jset, --pairs, --pair-sum, --blocks, --cover, --certify");
  Output out;
  if (!a.fiber.empty()) {
    auto slash = a.fiber.find('/');
    require(slash != std::string::npos, ErrorKind::ParseError, "--fiber takes p/q");
    Integer p(io::parse_count(a.fiber.substr(0, slash))), q(io::parse_count(a.fiber.substr(slash + 1)));
    auto fb = covers::fiber(p, q);
    out.payload = {{"fiber", io::to_json(fb)}};
    out.table.columns = {"index", "word"};
    for (std::size_t i = 0; i < fb.words.size(); ++i) out.table.add({std::to_string(i), fb.words[i].to_string()});
    out.exit_code = fb.verified ? 0 : 3;
  } else if (!a.jset.empty()) {
    auto aux = a.fn.aux();
    auto j = covers::j_set(io::parse_word(a.jset), aux, g.precision);
    out.payload = {{"Psi", aux.describe()}, {"jset", io::to_json(j)}};
    out.table.columns = {"word", "first_digit", "left", "right", "diameter", "bound_holds"};
    out.table.add({j.base.to_string(), j.first_digit.get_str(), j.left.get_str(), j.right.get_str(),
                   j.diameter.get_str(), to_string(j.bound_holds)});
    out.exit_code = j.bound_holds == Truth::False ? 3 : 0;
  } else if (!a.pairs.empty()) {
    unsigned N = static_cast<unsigned>(io::parse_count(a.pairs));
    require(!a.qmax.empty(), ErrorKind::ParseError, "--pairs needs --qmax");
    auto pairs = covers::enumerate_pairs(N, io::parse_count(a.qmax));
    Json list = Json::array();
    out.table.columns = {"p", "q"};
    for (const auto& c : pairs) {
      list.push_back({c.p, c.q});
      out.table.add({std::to_string(c.p), std::to_string(c.q)});
    }
    out.payload = {{"N", N}, {"q_min", covers::pair_q_min(N)}, {"count", pairs.size()}, {"pairs", list}};
  } else if (a.pair_sum) {
    auto f = a.fn.dimension();
    auto aux = a.fn.aux();
    require(!a.qmax.empty(), ErrorKind::ParseError, "--pair-sum needs --qmax");
    auto s = covers::pair_sum(f, aux, io::parse_count(a.qmax));
    out.payload = {{"f", f.describe()}, {"Psi", aux.describe()}, {"pair_sum", io::to_json(s)}};
    out.table.columns = {"q", "inner", "comparison", "kappa"};
    for (const auto& r : s.rows) out.table.add({std::to_string(r.q), dec(r.inner.value), dec(r.comparison.value), dec(r.kappa)});
  } else if (a.blocks) {
    auto f = a.fn.dimension();
    auto aux = a.fn.aux();
    auto cert = certificate_of(a, f);
    out.payload = {{"f", f.describe()}, {"Psi", aux.describe()}, {"certificate", io::to_json(cert)}};
    out.table.columns = {"q", "t", "max_decay", "kappa", "kappa_bound", "ok"};
    auto row = [&](const covers::BlockCheck& b) {
      out.table.add({std::to_string(b.q), std::to_string(b.t), dec(b.max_decay), dec(b.kappa), dec(b.kappa_bound),
                     b.decay_ok && b.kappa_ok && b.inner_ok ? "true" : "false"});
    };
    if (!a.q.empty()) {
      auto b = covers::block_bound_check(f, cert, aux, io::parse_count(a.q));
      out.payload["check"] = io::to_json(b);
      row(b);
      out.exit_code = b.decay_ok && b.kappa_ok && b.inner_ok ? 0 : 3;
    } else {
      require(!a.qmax.empty(), ErrorKind::ParseError, "--blocks needs --q or --qmax");
      auto s = covers::block_sweep(f, cert, aux, io::parse_count(a.qmax), thread_count(g.threads));
      out.payload["sweep"] = io::to_json(s);
      for (const auto& b : s.samples) row(b);
      bool ok = s.decay_violations.empty() && s.kappa_violations.empty() && s.inner_violations.empty();
      out.exit_code = ok ? 0 : 3;
    }
  } else if (a.cover) {
    auto f = a.fn.dimension();
    auto aux = a.fn.aux();
    unsigned n = static_cast<unsigned>(io::parse_count(a.n));
    std::optional<unsigned> n_min;
    if (!a.n_min.empty()) n_min = static_cast<unsigned>(io::parse_count(a.n_min));
    auto c = covers::cover_sum_direct(f, aux, n, io::parse_count(a.cap), n_min, io::parse_count(a.budget));
    out.payload = {{"f", f.describe()}, {"Psi", aux.describe()}, {"cover", io::to_json(c)}};
    out.table.columns = {"n", "value", "lower", "upper"};
    for (unsigned k = c.n_min; k <= c.n_max; ++k) {
      const auto& s = c.by_length[k];
      out.table.add({std::to_string(k), dec(s.value), dec(s.lower), dec(s.upper)});
    }
    out.exit_code = c.holds ? 0 : 3;
  } else {
    auto f = a.fn.dimension();
    auto cert = certificate_of(a, f);
    auto cons = criteria::sublinear_consequences(f, cert);
    out.payload = {{"f", f.describe()}, {"certificate", io::to_json(cert)}, {"consequences", io::to_json(cons)}};
    out.table.columns = {"essentially_sublinear", "B", "b", "x0", "C"};
    out.table.add({cert.essentially_sublinear ? "true" : "false", dec(cert.B), dec(cert.b), dec(cert.x0), dec(cert.C)});
    out.exit_code = cons.violations.empty() ? 0 : 3;
  }
  return out;
}

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::BudgetExceeded: return 4;
    case ErrorKind::PrecisionExhausted: return 0;
    default: return 2;
  }
}

void emit(const Json& report, const Table& table, const Globals& g) {
  std::string text = g.format == "csv" ? io::to_csv(table) : report.dump(2) + "\n";
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(g.out, std::ios::binary);
  require(static_cast<bool>(file), ErrorKind::InvalidArgument, "cannot open " + g.out);
  file << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Continued fractions, Dirichlet improvability and Hausdorff measure experiments"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", g.out, "output file (default stdout)");
  app.add_option("--threads", g.threads, "worker threads, 0 = hardware (capped by DIRICHLET_LAB_THREADS)");
  app.add_option("--seed", g.seed, "64-bit RNG seed");
  app.add_option("--precision", g.precision, "working precision in bits");
  app.add_flag("--timing", g.timing, "add wall-clock and thread count to the report");

  auto add_functions = [](CLI::App* c, FunctionArgs& fn) {
    c->add_option("--psi", fn.psi, "approximation function, e.g. \"scaled c=0.9\"");
    c->add_option("--Psi", fn.Psi, "auxiliary function, e.g. \"power tau=1\"");
    c->add_option("--f", fn.f, "dimension function, e.g. \"power s=0.8\"");
  };

  ExpandArgs expand;
  auto* c_expand = app.add_subcommand("expand", "continued fraction, convergents and cylinder of x");
  c_expand->add_option("--x", expand.x, "p/q, periodic:[pre];[per], interval:[lo,hi], golden or a decimal")->required();
  c_expand->add_option("--depth", expand.depth, "maximum number of digits");

  AuditArgs audit;
  auto* c_audit = app.add_subcommand("audit", "membership events and pointwise implication audits");
  c_audit->add_option("--x", audit.x, "point of [0,1)");
  add_functions(c_audit, audit.fn);
  c_audit->add_option("--phi", audit.fn.phi, "rate function for F(phi), e.g. \"power c=1 e=1\"");
  c_audit->add_option("--start", audit.start, "first index n");
  c_audit->add_option("--horizon", audit.horizon, "last index n");
  c_audit->add_option("--max-precision", audit.max_precision, "precision ceiling in bits");
  c_audit->add_option("--random", audit.random, "run N seeded random (x, psi) trials instead of --x");

  SeriesArgs series;
  auto* c_series = app.add_subcommand("series", "series classifier with tail envelopes");
  c_series->add_option("--kind", series.kind, "hausdorff, kw, weak, lebesgue, xlogx-upper, xlogx-lower, simmons");
  add_functions(c_series, series.fn);
  c_series->add_option("--T", series.T, "partial-sum cutoff");
  c_series->add_option("--block-size", series.block, "terms per reported block");

  ClassifyArgs classify;
  auto* c_classify = app.add_subcommand("classify", "H^f zero or infinity, or Lebesgue null or full");
  add_functions(c_classify, classify.fn);
  c_classify->add_option("--T", classify.T, "partial-sum cutoff");

  DimArgs dim;
  auto* c_dim = app.add_subcommand("dim", "lower order tau and critical exponent of the Hausdorff sum");
  add_functions(c_dim, dim.fn);
  c_dim->add_option("--Q", dim.Q, "largest cutoff");
  c_dim->add_option("--jmax", dim.jmax, "tau grid runs over t = 2^j, j <= jmax");

  CoversArgs cov;
  auto* c_covers = app.add_subcommand("covers", "fibers, J-sets, pair sums, block bounds and cover sums");
  add_functions(c_covers, cov.fn);
  c_covers->add_option("--fiber", cov.fiber, "p/q: the words mapping to (p, q)");
  c_covers->add_option("--jset", cov.jset, "word: the J-set over its cylinder (needs --Psi)");
  c_covers->add_option("--pairs", cov.pairs, "N: coprime pairs with q >= sqrt(N) (needs --qmax)");
  c_covers->add_flag("--pair-sum", cov.pair_sum, "pair sum up to --qmax");
  c_covers->add_flag("--blocks", cov.blocks, "dyadic block bounds at --q or for every q <= --qmax");
  c_covers->add_flag("--cover", cov.cover, "direct cover sum over words of length --n");
  c_covers->add_flag("--certify", cov.certify, "essential sub-linearity certificate of --f");
  c_covers->add_option("--qmax", cov.qmax, "largest q");
  c_covers->add_option("--q", cov.q, "single q for --blocks");
  c_covers->add_option("--n", cov.n, "word length for --cover");
  c_covers->add_option("--n-min", cov.n_min, "shortest word length for --cover (default --n)");
  c_covers->add_option("--cap", cov.cap, "digit cap for --cover");
  c_covers->add_option("--budget", cov.budget, "word budget for --cover");
  c_covers->add_option("--B", cov.B, "candidate B values for the certificate");

  for (auto* c : {c_expand, c_audit, c_series, c_classify, c_dim, c_covers}) c->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  auto started = std::chrono::steady_clock::now();
  std::string command = app.get_subcommands().front()->get_name();
  Json config = {{"seed", g.seed}, {"precision_bits", g.precision}, {"format", g.format}};
  Output out;
  try {
    if (command == "expand") {
      config["x"] = expand.x;
      config["depth"] = expand.depth;
      out = cmd_expand(expand, g);
    } else if (command == "audit") {
      if (!audit.x.empty()) config["x"] = audit.x;
      audit.fn.echo(config);
      config["start"] = audit.start;
      config["horizon"] = audit.horizon;
      config["max_precision_bits"] = audit.max_precision;
      config["random"] = audit.random;
      out = io::parse_count(audit.random) > 0 ? cmd_audit_random(audit, g) : cmd_audit_single(audit, g);
    } else if (command == "series") {
      config["kind"] = series.kind;
      series.fn.echo(config);
      config["T"] = series.T;
      config["block_size"] = series.block;
      out = cmd_series(series, g);
    } else if (command == "classify") {
      classify.fn.echo(config);
      config["T"] = classify.T;
      out = cmd_classify(classify, g);
    } else if (command == "dim") {
      dim.fn.echo(config);
      config["Q"] = dim.Q;
      config["jmax"] = dim.jmax;
      out = cmd_dim(dim, g);
    } else {
      cov.fn.echo(config);
      for (auto [k, v] : {std::pair<const char*, const std::string*>{"fiber", &cov.fiber}, {"jset", &cov.jset},
                          {"pairs", &cov.pairs}, {"qmax", &cov.qmax}, {"q", &cov.q}, {"n_min", &cov.n_min}})
        if (!v->empty()) config[k] = *v;
      for (auto [k, v] : {std::pair<const char*, bool>{"pair_sum", cov.pair_sum}, {"blocks", cov.blocks},
                          {"cover", cov.cover}, {"certify", cov.certify}})
        if (v) config[k] = true;
      if (cov.cover) {
        config["n"] = cov.n;
        config["cap"] = cov.cap;
        config["budget"] = cov.budget;
      }
      if (!cov.B.empty()) config["B"] = cov.B;
      out = cmd_covers(cov, g);
    }
  } catch (const Error& e) {
    std::cerr << "dirichlet_lab: " << e.what() << "\n";
    out.payload = {{"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}}};
    out.table = {{"error_kind", "message"}, {{std::string(to_string(e.kind())), e.what()}}};
    out.exit_code = exit_code_for(e.kind());
  }

  Json report = io::make_report(command, config, out.payload);
  if (g.timing) {
    std::chrono::duration<double> wall = std::chrono::steady_clock::now() - started;
    report["timing"] = {{"wall_seconds", io::decimal(static_cast<long double>(wall.count()))},
                        {"threads", thread_count(g.threads)}};
  }
  try {
    emit(report, out.table, g);
  } catch (const Error& e) {
    std::cerr << "dirichlet_lab: " << e.what() << "\n";
    return 2;
  }
  return out.exit_code;
}
