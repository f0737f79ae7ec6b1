#include "barrlab/cli/run.hpp"

#include <chrono>
#include <deque>
#include <filesystem>
#include <random>
#include <sstream>

#include "barrlab/chains/lemmas.hpp"
#include "barrlab/error.hpp"
#include "barrlab/kernels.hpp"
#include "barrlab/lifting/checks.hpp"

namespace barrlab::cli {

using io::Json;

namespace {

constexpr Card kMaxListed = 4096;

struct Context {
  explicit Context(const RunConfig& c) : cfg(c) {}

  const RunConfig& cfg;
  std::deque<Json> docs;
  Json checks = Json::array();
  Json data = Json::object();
  bool failed = false;
  bool incomplete = false;
  std::string status_override;

  void add(const LawReport& r) {
    checks.push_back(io::report_json(r));
    failed = failed || r.failed();
    incomplete = incomplete || !r.complete();
  }

  // A file path is loaded as JSON; anything else is taken as a builtin name.
  io::Cursor input(const std::string& arg) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
      docs.push_back(io::read_json(arg));
      return io::Cursor(arg, docs.back());
    }
    docs.push_back(Json(arg));
    return io::Cursor("<argument>", docs.back());
  }

  const std::string& arg(std::size_t i, const char* what) const {
    if (i >= cfg.args.size()) {
      throw Error(ErrorKind::InvalidInput, cfg.command + " needs " + what);
    }
    return cfg.args[i];
  }
};

LawReport single(const std::string& subject, const std::string& law, const std::string& scope,
                 bool ok, std::uint64_t checked, const std::string& lhs = {},
                 const std::string& rhs = {}, const std::string& context = {}) {
  LawResult r{law, scope, ok ? Verdict::Pass : Verdict::Fail, checked, std::nullopt, {}};
  if (!ok) r.counterexample = Counterexample{scope, 0, "", lhs, rhs, context};
  return LawReport{subject, {r}};
}

Json table_json(const FinFn& f) {
  Json t = Json::array();
  for (Element e : f.table()) t.push_back(e);
  return t;
}

std::string functor_text(const Context& ctx, std::size_t positional) {
  if (!ctx.cfg.functor.empty()) return ctx.cfg.functor;
  return ctx.arg(positional, "--functor");
}

MonadPtr monad_for(const Context& ctx, const std::string& functor) {
  if (!ctx.cfg.monad.empty()) return make_builtin_monad(ctx.cfg.monad);
  if (auto m = io::default_monad_for(functor)) return make_builtin_monad(*m);
  throw Error(ErrorKind::InvalidInput, "--monad is required for functor '" + functor + "'");
}

EMAlgebra algebra_spec(Context& ctx, const std::string& spec, const MonadPtr& m) {
  if (spec.rfind("free:", 0) == 0) {
    Card n = 0;
    try {
      n = std::stoull(spec.substr(5));
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput, "expected free:<generators>, got '" + spec + "'");
    }
    return free_algebra(m, FinSet::canonical(n));
  }
  if (spec == "terminal") return terminal_algebra(m);
  io::Cursor c = ctx.input(spec);
  if (c.value().is_string()) {
    throw Error(ErrorKind::InvalidInput, "unknown algebra '" + spec + "'");
  }
  return io::parse_algebra(c, m);
}

Json structure_json(const MonadPtr& m, const EMAlgebra& a) {
  const Card dom = monad_size(*m, a.carrier.size());
  Json j{{"carrier", a.carrier.name()}, {"size", a.carrier.size()}, {"domain_size", dom}};
  if (dom <= kMaxListed) j["structure"] = table_json(structure_table(*m, a));
  return j;
}

// --- commands ----------------------------------------------------------------

void check_monad(Context& ctx) {
  const MonadPtr m = io::parse_monad(ctx.input(ctx.arg(0, "a monad")));
  ctx.data["monad"] = m->name();
  if (auto m0 = m->size(0)) ctx.data["free_algebra_on_empty_size"] = *m0;
  ctx.add(check_monad_laws(m, ctx.cfg.max_size));
}

void check_algebra(Context& ctx) {
  const std::string& spec = ctx.arg(0, "an algebra");
  MonadPtr m;
  EMAlgebra a;
  if (spec.rfind("free:", 0) == 0 || spec.rfind("terminal:", 0) == 0) {
    // free:<n>:<monad> or terminal:<monad>
    const bool free = spec[0] == 'f';
    std::string rest = spec.substr(free ? 5 : 9);
    std::string gens = "1";
    if (free) {
      const auto colon = rest.find(':');
      if (colon == std::string::npos) {
        throw Error(ErrorKind::InvalidInput, "expected free:<generators>:<monad>");
      }
      gens = rest.substr(0, colon);
      rest = rest.substr(colon + 1);
    }
    m = make_builtin_monad(rest);
    a = algebra_spec(ctx, free ? "free:" + gens : "terminal", m);
  } else {
    const io::Cursor c = ctx.input(spec);
    m = io::parse_monad(c.at("monad"));
    a = io::parse_algebra(c.has("algebra") ? c.at("algebra") : c, m);
  }
  ctx.data["monad"] = m->name();
  ctx.data["carrier"] = a.carrier.name();
  ctx.add(check_em_algebra(m, a));
}

void check_distlaw(Context& ctx) {
  const std::string& dir = ctx.arg(0, "em or kl");
  if (dir != "em" && dir != "kl") {
    throw Error(ErrorKind::InvalidInput, "check-distlaw expects em or kl, got '" + dir + "'");
  }
  const auto law = io::parse_law(ctx.input(ctx.arg(1, "a law")));
  if (dir == "em") {
    if (!law.em) throw Error(ErrorKind::InvalidInput, "not a law of the form MH => HM");
    ctx.data["law"] = law.em->name();
    ctx.add(check_distlaw_em(*law.em, ctx.cfg.max_size));
  } else {
    if (!law.kl) throw Error(ErrorKind::InvalidInput, "not a law of the form TM => MT");
    ctx.data["law"] = law.kl->name();
    ctx.add(check_distlaw_kl(*law.kl, ctx.cfg.max_size));
  }
}

void lift(Context& ctx) {
  const auto law = io::parse_law(ctx.input(ctx.arg(0, "a law")));
  if (!law.em) throw Error(ErrorKind::InvalidInput, "lift needs a law of the form MH => HM");
  const MonadPtr m = law.em->monad();
  const EMAlgebra a =
      algebra_spec(ctx, ctx.cfg.algebra.empty() ? "free:1" : ctx.cfg.algebra, m);
  const EMAlgebra lifted = lift_algebra(*law.em, a);
  ctx.data["law"] = law.em->name();
  ctx.data["algebra"] = a.carrier.name();
  ctx.data["lifted"] = structure_json(m, lifted);
  ctx.add(check_em_algebra(m, lifted));
}

void diff(Context& ctx) {
  const auto first = io::parse_law(ctx.input(ctx.arg(0, "a law")));
  DistLawEMPtr a = first.em;
  DistLawEMPtr b = first.companion;
  if (ctx.cfg.args.size() > 1) b = io::parse_law(ctx.input(ctx.cfg.args[1])).em;
  if (!a || !b) throw Error(ErrorKind::InvalidInput, "diff-liftings needs two laws MH => HM");
  if (a->monad()->name() != b->monad()->name()) {
    throw Error(ErrorKind::DomainMismatch, "the laws are over different monads");
  }
  const MonadPtr m = a->monad();
  const EMAlgebra alg =
      algebra_spec(ctx, ctx.cfg.algebra.empty() ? "free:1" : ctx.cfg.algebra, m);
  const LiftingDiff d = diff_liftings(*a, *b, alg);
  ctx.data["first"] = a->name();
  ctx.data["second"] = b->name();
  ctx.data["algebra"] = alg.carrier.name();
  ctx.data["differ"] = d.difference.has_value();
  if (d.difference) {
    const Element e = *d.difference;
    ctx.data["difference"] = Json{{"element", e},
                                  {"label", d.first.dom().label(e)},
                                  {"first", d.first.cod().label(d.first(e))},
                                  {"second", d.second.cod().label(d.second(e))}};
  }
  ctx.data["first_structure"] = table_json(d.first);
  ctx.data["second_structure"] = table_json(d.second);
}

void chain(Context& ctx) {
  const std::string f = functor_text(ctx, 0);
  const TerminalChain c(io::parse_functor(ctx.input(f)), ctx.cfg.depth);
  ctx.data["functor"] = c.functor().to_string();
  Json levels = Json::array();
  for (Card n = 0; n <= c.depth(); ++n) levels.push_back(Json{{"n", n}, {"size", c.size(n)}});
  ctx.data["levels"] = levels;
  if (ctx.cfg.n) {
    const FinSet& level = c.level(*ctx.cfg.n);
    Json elems = Json::array();
    for (Element e = 0; e < std::min<Card>(level.size(), 256); ++e) {
      Json item{{"element", e}, {"label", level.label(e)}};
      if (*ctx.cfg.n > 0) item["connect"] = c.connect(*ctx.cfg.n - 1, e);
      elems.push_back(item);
    }
    ctx.data["elements"] = elems;
  }
}

void anamorphism_cmd(Context& ctx) {
  const io::Cursor c = ctx.input(ctx.arg(0, "a coalgebra or automaton"));
  const Card depth = ctx.cfg.depth;
  FinFn xi;
  std::optional<MooreAutomaton> aut;
  if (c.has("states")) {
    aut = io::parse_automaton(c);
    xi = moore_coalgebra(*aut);
  } else {
    const FunctorExpr h = io::parse_functor(c.at("functor"));
    const FinSet carrier = io::parse_set(c.at("carrier"), "C");
    xi = io::parse_function(c.at("structure"), carrier, eval_functor(h, carrier));
  }
  const FunctorExpr h = aut ? moore_functor(aut->k, aut->alphabet) : io::parse_functor(c.at("functor"));
  const TerminalChain chain(h, depth);
  const auto cone = anamorphism_cone(xi, depth, chain);
  const FinSet& carrier = xi.dom();

  Json alpha = Json::object();
  for (Element s = 0; s < carrier.size(); ++s) {
    Json reps = Json::array();
    for (Card n = 0; n <= depth; ++n) reps.push_back(cone[n](s));
    alpha[carrier.label(s)] = reps;
  }
  ctx.data["functor"] = h.to_string();
  ctx.data["alpha"] = alpha;

  const Card cells = carrier.size() * depth;
  LawReport r{"anamorphism cone on " + carrier.name(), {}};
  r.results.push_back(check_pointwise(PointwiseLaw{
      "cone compatibility", "n<" + std::to_string(depth), "C x levels", cells,
      [&](Element i) {
        const Card n = i % depth;
        const Element s = i / depth;
        return std::pair{chain.connect(n, cone[n + 1](s)), cone[n](s)};
      },
      [&](Element i) { return carrier.label(i / depth) + " at n=" + std::to_string(i % depth); },
      [](Element v) { return std::to_string(v); }, {}}));
  if (aut) {
    const Card rows = carrier.size() * (depth + 1);
    r.results.push_back(check_pointwise(PointwiseLaw{
        "behavior encoding", "n<=" + std::to_string(depth), "states x levels", rows,
        [&](Element i) {
          const Card n = i % (depth + 1);
          const Element s = i / (depth + 1);
          return std::pair{encode_series(behavior(*aut, s, n), chain), cone[n](s)};
        },
        [&](Element i) {
          return carrier.label(i / (depth + 1)) + " at n=" + std::to_string(i % (depth + 1));
        },
        [](Element v) { return std::to_string(v); }, {}}));
  }
  ctx.add(r);
}

void behavior_cmd(Context& ctx) {
  const MooreAutomaton aut = io::parse_automaton(ctx.input(ctx.arg(0, "an automaton")));
  Element s = 0;
  if (ctx.cfg.state) {
    auto found = aut.states.find(*ctx.cfg.state);
    if (!found) throw Error(ErrorKind::InvalidInput, "unknown state '" + *ctx.cfg.state + "'");
    s = *found;
  }
  const Card n = ctx.cfg.n.value_or(ctx.cfg.depth);
  const TruncatedSeries f = behavior(aut, s, n);
  const TruncatedSeries g = serial::behavior(aut, s, n);
  ctx.data["state"] = aut.states.label(s);
  ctx.data["series"] = io::series_json(f);
  ctx.add(single("behavior of " + aut.states.label(s), "serial reference",
                 "n=" + std::to_string(n), f == g, f.coeffs.size()));
}

void distance_cmd(Context& ctx) {
  TruncatedSeries f = io::parse_series(ctx.input(ctx.arg(0, "two series")));
  TruncatedSeries g = io::parse_series(ctx.input(ctx.arg(1, "two series")));
  if (f.bound != g.bound) {
    throw Error(ErrorKind::BoundMismatch, "series truncated at " + std::to_string(f.bound) +
                                              " and " + std::to_string(g.bound));
  }
  const Card probe = std::min(ctx.cfg.probe_depth.value_or(f.bound), f.bound);
  f = f.truncate(probe);
  g = g.truncate(probe);
  const DyadicDist d = series_distance(f, g);
  ctx.data["probe_depth"] = probe;
  ctx.data["series"] = io::dist_json(d);
  if (!f.k.finite()) return;
  try {
    auto chain = std::make_shared<const TerminalChain>(moore_functor(f.k, f.alphabet), probe);
    const DyadicDist cd = distance(series_point(chain, f), series_point(chain, g), probe);
    ctx.data["chain"] = io::dist_json(cd);
    const DyadicDist expected = d.exact ? DyadicDist::at(d.depth + 1) : d;
    ctx.add(single("series against limit points", "chain consistency",
                   "probe=" + std::to_string(probe), cd == expected, 1, cd.to_string(),
                   expected.to_string(), "chain levels count words of length < n"));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::BlowUpGuard) throw;
    ctx.data["chain_note"] = e.what();
  }
}

void limit_cmd(Context& ctx) {
  const CauchySequence seq = io::parse_sequence(ctx.input(ctx.arg(0, "a sequence")));
  ctx.data["horizon"] = seq.horizon;
  ctx.data["limit"] = io::series_json(cauchy_limit_series(seq, ctx.cfg.depth));
}

void density_cmd(Context& ctx) {
  const std::string f = ctx.cfg.functor.empty() ? "moore:z2:1letter" : ctx.cfg.functor;
  const FunctorExpr h = io::parse_functor(ctx.input(f));
  const MonadPtr m = monad_for(ctx, f);
  const Card n = ctx.cfg.n.value_or(3);
  const Card depth = std::max(ctx.cfg.depth, n + 1);
  const Card probe = std::min(ctx.cfg.probe_depth.value_or(ctx.cfg.depth), depth);
  auto chain = std::make_shared<const TerminalChain>(h, depth);
  const InitialChain ic(product_law(h, m), chain);

  std::optional<LimitPoint> x;
  if (ctx.cfg.series) {
    const TruncatedSeries s = io::parse_series(ctx.input(*ctx.cfg.series));
    if (moore_functor(s.k, s.alphabet).to_string() != h.to_string()) {
      throw Error(ErrorKind::DomainMismatch, "the series does not live in " + h.to_string());
    }
    if (s.bound < depth) {
      throw Error(ErrorKind::DepthExceeded,
                  "the series needs a bound of at least " + std::to_string(depth));
    }
    x = series_point(chain, s);
  } else {
    std::mt19937_64 rng(ctx.cfg.seed);
    x = LimitPoint::random(chain, rng);
  }
  const LimitPoint y = ic.density(*x, n);
  Json xs = Json::array();
  Json ys = Json::array();
  for (Card k = 0; k <= depth; ++k) {
    xs.push_back(x->rep(k));
    ys.push_back(y.rep(k));
  }
  const DyadicDist d = distance(*x, y, probe);
  ctx.data["functor"] = h.to_string();
  ctx.data["monad"] = m->name();
  ctx.data["n"] = n;
  ctx.data["depth"] = depth;
  ctx.data["x"] = xs;
  ctx.data["h_n(x)"] = ys;
  ctx.data["distance"] = io::dist_json(d);
  const std::string scope = "n=" + std::to_string(n);
  LawReport r = single("density map h_" + std::to_string(n), "projection", scope,
                       x->rep(n) == y.rep(n), 1, std::to_string(y.rep(n)),
                       std::to_string(x->rep(n)), "p_n(h_n(x)) vs p_n(x)");
  r.append(single("", "distance bound", scope, d.within(n), 1, d.to_string(),
                  "2^-" + std::to_string(n)));
  ctx.add(r);
}

void lemma_cmd(Context& ctx, bool second) {
  const std::string f = functor_text(ctx, 0);
  const FunctorExpr h = io::parse_functor(ctx.input(f));
  const auto law = product_law(h, monad_for(ctx, f));
  ctx.data["law"] = law->name();
  ctx.data["depth"] = ctx.cfg.depth;
  ctx.add(second ? check_lemma2(law, ctx.cfg.depth) : check_lemma1(law, ctx.cfg.depth));
}

io::LoadedCandidate candidate_from(Context& ctx, std::optional<PartnerCase>& kind) {
  if (ctx.cfg.args.size() > 1) {
    const io::Cursor c = ctx.input(ctx.cfg.args[1]);
    if (c.has("case")) kind = parse_partner_case(c.at("case").str());
    return io::parse_candidate(c);
  }
  const std::string which = ctx.cfg.partner.empty() ? "moore" : ctx.cfg.partner;
  kind = parse_partner_case(which);
  if (!kind) throw Error(ErrorKind::InvalidInput, "unknown pair '" + which + "'");
  std::vector<std::string> labels;
  std::stringstream ss(ctx.cfg.alphabet.empty() ? "a" : ctx.cfg.alphabet);
  for (std::string l; std::getline(ss, l, ',');) labels.push_back(l);
  const FinSet b = FinSet::labelled(*kind == PartnerCase::Moore ? "A" : "B", labels);
  auto pair = partner_for_product(
      *kind, b, make_builtin_monad(ctx.cfg.monad.empty() ? "semimodule:z2" : ctx.cfg.monad));
  return io::LoadedCandidate{pair.candidate, pair.h_law};
}

void commute(Context& ctx) {
  const std::string& mode = ctx.arg(0, "check or search");
  if (mode != "check" && mode != "search") {
    throw Error(ErrorKind::InvalidInput, "commute expects check or search, got '" + mode + "'");
  }
  std::optional<PartnerCase> kind;
  const auto loaded = candidate_from(ctx, kind);
  const CommutingCandidate& c = loaded.candidate;
  ctx.data["pair"] = c.name;
  ctx.data["t"] = c.t.to_string();
  ctx.data["h"] = c.h.to_string();
  ctx.data["monad"] = c.m->name();
  if (mode == "check") {
    if (kind == PartnerCase::Moore) {
      // the Kleisli law of T that the pair rests on
      const FinSet a = c.t.children()[1].children()[0].set();
      ctx.add(check_distlaw_kl(*kleisli_lift_poly(a, c.m).law, std::min<Card>(ctx.cfg.max_size, 2)));
    }
    ctx.add(check_commuting(c, *loaded.law, ctx.cfg.max_size));
    return;
  }
  const ComponentFn sigma = c.sigma;
  ComponentFn preferred = [sigma](Card n, Element e) -> Element {
    try {
      return sigma(n, e);
    } catch (const Error&) {
      return ~Element{0};
    }
  };
  const CommutingSearch s = search_commuting(c.t, c.h, c.m, *loaded.law, ctx.cfg.max_size,
                                             ctx.cfg.search_cap, preferred);
  ctx.data["search"] = std::string(to_string(s.status));
  ctx.data["candidates"] = s.candidates;
  ctx.data["cap"] = ctx.cfg.search_cap;
  if (s.status == CommutingSearch::Status::Found) {
    Json tables = Json::object();
    for (const auto& [n, t] : s.tables) {
      Json row = Json::array();
      for (Element v : t) row.push_back(v);
      tables[std::to_string(n)] = row;
    }
    ctx.data["sigma"] = tables;
  } else {
    ctx.failed = true;
    ctx.status_override = std::string(to_string(s.status));
  }
}

void words_cmd(Context& ctx) {
  std::vector<std::string> labels;
  std::stringstream ss(ctx.cfg.alphabet.empty() ? "a,b" : ctx.cfg.alphabet);
  for (std::string l; std::getline(ss, l, ',');) labels.push_back(l);
  const FinSet a = FinSet::labelled("A", labels);
  const Card depth = ctx.cfg.n.value_or(ctx.cfg.depth);
  const auto words = initial_T_algebra_words(a, depth);
  Json list = Json::array();
  for (const auto& w : words) list.push_back(format_word(a, w));
  ctx.data["alphabet"] = labels;
  ctx.data["depth"] = depth;
  ctx.data["count"] = words.size();
  ctx.data["words"] = list;
}

int exit_for(ErrorKind kind) { return kind == ErrorKind::NotCauchy ? 1 : 2; }

}  // namespace

Report run(const RunConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  Context ctx(cfg);
  Json doc;
  doc["tool"] = "barrlab";
  doc["version"] = kVersion;
  doc["command"] = cfg.argv;
  doc["config"] = Json{{"command", cfg.command},
                       {"max_size", cfg.max_size},
                       {"depth", cfg.depth},
                       {"probe_depth", cfg.probe_depth.value_or(cfg.depth)},
                       {"search_cap", cfg.search_cap},
                       {"seed", cfg.seed},
                       {"blowup_guard", blowup_guard()}};
  int code = 0;
  std::string status;
  try {
    if (cfg.jobs > 0) kernels::set_num_threads(cfg.jobs);
    if (cfg.max_size < 1) throw Error(ErrorKind::InvalidInput, "--max-size must be positive");
    const std::string& c = cfg.command;
    if (c == "check-monad") check_monad(ctx);
    else if (c == "check-algebra") check_algebra(ctx);
    else if (c == "check-distlaw") check_distlaw(ctx);
    else if (c == "lift") lift(ctx);
    else if (c == "diff-liftings") diff(ctx);
    else if (c == "chain") chain(ctx);
    else if (c == "anamorphism") anamorphism_cmd(ctx);
    else if (c == "behavior") behavior_cmd(ctx);
    else if (c == "distance") distance_cmd(ctx);
    else if (c == "limit") limit_cmd(ctx);
    else if (c == "density") density_cmd(ctx);
    else if (c == "lemma1") lemma_cmd(ctx, false);
    else if (c == "lemma2") lemma_cmd(ctx, true);
    else if (c == "commute") commute(ctx);
    else if (c == "words") words_cmd(ctx);
    else throw Error(ErrorKind::InvalidInput, "unknown command '" + c + "'");

    if (ctx.failed) {
      code = 1;
      status = ctx.status_override.empty() ? "fail" : ctx.status_override;
    } else if (ctx.incomplete) {
      code = 2;
      status = "incomplete";
    } else {
      status = "pass";
    }
  } catch (const Error& e) {
    code = exit_for(e.kind());
    status = code == 1 ? "fail" : "error";
    doc["error"] = Json{{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
  } catch (const std::exception& e) {
    code = 2;
    status = "error";
    doc["error"] = Json{{"kind", "InvalidInput"}, {"message", e.what()}};
  }
  doc["status"] = status;
  doc["exit_code"] = code;
  doc["checks"] = ctx.checks;
  doc["data"] = ctx.data;
  const auto elapsed = std::chrono::steady_clock::now() - start;
  doc["timing_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
  return Report{std::move(doc), code};
}

std::string render(const Report& report, const std::string& format) {
  const Json& d = report.doc;
  if (format == "json") return d.dump(2) + "\n";
  std::ostringstream out;
  std::string cmd;
  for (const auto& a : d["command"]) cmd += (cmd.empty() ? "" : " ") + a.get<std::string>();
  out << cmd << "\n";
  out << "status: " << d["status"].get<std::string>() << " (exit " << report.exit_code << ")\n";
  if (d.contains("error")) {
    out << "error: " << d["error"]["message"].get<std::string>() << "\n";
  }
  for (const auto& block : d["checks"]) {
    if (!block["subject"].get<std::string>().empty()) {
      out << block["subject"].get<std::string>() << "\n";
    }
    for (const auto& r : block["results"]) {
      char line[256];
      std::snprintf(line, sizeof line, "  %-26s %-14s %-8s %12llu", r["law"].get<std::string>().c_str(),
                    r["scope"].get<std::string>().c_str(), r["verdict"].get<std::string>().c_str(),
                    static_cast<unsigned long long>(r["checked"].get<std::uint64_t>()));
      out << line << "\n";
      if (r.contains("counterexample")) {
        const auto& ce = r["counterexample"];
        out << "    at " << ce["label"].get<std::string>() << ": " << ce["lhs"].get<std::string>()
            << " vs " << ce["rhs"].get<std::string>();
        if (!ce["context"].get<std::string>().empty()) out << " (" << ce["context"].get<std::string>() << ")";
        out << "\n";
      }
      if (r.contains("note")) out << "    note: " << r["note"].get<std::string>() << "\n";
    }
  }
  for (const auto& [key, value] : d["data"].items()) {
    std::string v = value.dump();
    if (v.size() > 400) v = v.substr(0, 397) + "...";
    out << key << ": " << v << "\n";
  }
  char t[64];
  std::snprintf(t, sizeof t, "time: %.1f ms\n", d["timing_ms"].get<double>());
  out << t;
  return out.str();
}

}  // namespace barrlab::cli
