#include "blowup/runner.hpp"

#include <chrono>
#include <map>

namespace blowup {

const char kArtifactVersion[] = "0.1.0";

std::vector<std::string> standing_caveats() {
  return {
      "local rings are modeled as graded quotients with the irrelevant "
      "maximal ideal in place of the local one",
      "coefficients live in a large prime field standing in for an infinite "
      "residue field; genericity uses seeded random draws",
  };
}

bool RunReport::any_violation() const {
  for (const auto& inst : instances) {
    for (const auto& t : inst.theorems) {
      if (t.verdict == Verdict::VIOLATION) return true;
    }
  }
  return false;
}

bool RunReport::any_error() const {
  for (const auto& inst : instances) {
    if (inst.error) return true;
  }
  return false;
}

InvariantSummary summarize(const InvariantReport& rep) {
  InvariantSummary s;
  s.dim = rep.dim_R;
  s.depth_R = rep.depth_R;
  s.g = rep.height;
  s.l = rep.spread;
  s.deviation = rep.deviation;
  if (rep.reduction.verified) s.r_J = rep.reduction.r_j;
  s.s = rep.reduction.s();
  s.depths = rep.depths;
  s.depth_G = rep.depth_G;
  s.grade_Gplus = rep.grade_Gplus;
  s.reg_value = rep.regularity.value;
  switch (rep.regularity.status) {
    case RegStatus::exact: s.reg_status = "exact"; break;
    case RegStatus::lower_bound_only: s.reg_status = "lower-bound-only"; break;
    case RegStatus::unresolved: s.reg_status = "unresolved"; break;
  }
  return s;
}

namespace {

struct EvalContext {
  RingPtr ring;
  std::map<std::string, int> var_index;
};

Polynomial eval_expr(const PolyExpr& e, const EvalContext& cx) {
  switch (e.kind) {
    case PolyExpr::Kind::number: {
      long v = e.number % static_cast<long>(cx.ring->field().p());
      if (v < 0) v += cx.ring->field().p();
      return Polynomial::constant(cx.ring, static_cast<uint32_t>(v));
    }
    case PolyExpr::Kind::variable: {
      auto it = cx.var_index.find(e.name);
      if (it == cx.var_index.end())
        throw parse_error(e.loc, "unknown variable '" + e.name + "'",
                          "declare it in the ring's vars=[...] list");
      return Polynomial::variable(cx.ring, it->second);
    }
    case PolyExpr::Kind::add:
      return eval_expr(e.args[0], cx) + eval_expr(e.args[1], cx);
    case PolyExpr::Kind::sub:
      return eval_expr(e.args[0], cx) - eval_expr(e.args[1], cx);
    case PolyExpr::Kind::mul:
      return eval_expr(e.args[0], cx) * eval_expr(e.args[1], cx);
    case PolyExpr::Kind::neg:
      return -eval_expr(e.args[0], cx);
    case PolyExpr::Kind::pow:
      return poly_pow(eval_expr(e.args[0], cx), e.exponent);
  }
  throw kernel_error("unreachable expression kind");
}

EvalContext context_of(const RingPtr& ring) {
  EvalContext cx;
  cx.ring = ring;
  for (int i = 0; i < ring->nvars(); ++i) cx.var_index[ring->vars()[i]] = i;
  return cx;
}

long elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

void run_check(const CheckStmt& c,
               const std::map<std::string, QuotientRing>& quotients,
               const std::map<std::string, std::vector<PolyExpr>>& ideals,
               const RunOptions& opt, uint64_t stmt_seed, RunReport& out) {
  InstanceResult inst;
  auto t0 = std::chrono::steady_clock::now();
  try {
    const QuotientRing& R = quotients.at(c.quotient);
    EvalContext cx = context_of(R.ambient());
    std::vector<Polynomial> igens;
    for (const auto& e : ideals.at(c.ideal)) igens.push_back(eval_expr(e, cx));

    InstanceOptions io;
    io.seed = stmt_seed;
    io.rmax = opt.rmax;
    io.max_power = opt.max_power;
    io.localization_asserted = c.locflag;
    io.s_override = c.s;
    if (c.j_gens) {
      std::vector<Polynomial> jg;
      for (const auto& e : *c.j_gens) jg.push_back(eval_expr(e, cx));
      io.user_j = std::move(jg);
    }
    AnalyzedInstance a =
        analyze_instance(R, Ideal(R.ambient(), igens), io);
    inst.ring = a.report.ring_desc;
    inst.ideal = a.report.ideal_desc;
    inst.notes = a.report.notes;
    if (!a.report.reduction.note.empty())
      inst.notes.push_back("reduction: " + a.report.reduction.note);
    if (!a.report.regularity.note.empty())
      inst.notes.push_back("regularity: " + a.report.regularity.note);
    inst.invariants = summarize(a.report);
    if (c.checker == "all") {
      inst.theorems = check_all(a);
    } else {
      auto tr = check_by_id(c.checker, a);
      if (tr) inst.theorems.push_back(*tr);
    }
  } catch (const parse_error& e) {
    inst.error = std::string(e.what()) + " (hint: " + e.hint + ")";
  } catch (const kernel_error& e) {
    inst.error = e.what();
  }
  inst.timing_ms = opt.timings ? elapsed_ms(t0) : 0;
  out.instances.push_back(std::move(inst));
}

}  // namespace

std::vector<Polynomial> random_monomial_ideal_gens(const RingPtr& ring,
                                                   std::mt19937_64& rng,
                                                   int maxdeg) {
  const int n = ring->nvars();
  const int ngens = 1 + static_cast<int>(rng() % n);
  std::vector<Monomial> monos;
  for (int k = 0; k < ngens; ++k) {
    std::vector<uint16_t> e(n, 0);
    int budget = 1 + static_cast<int>(rng() % maxdeg);
    for (int b = 0; b < budget; ++b) e[rng() % n]++;
    monos.push_back(ring->mono(std::move(e)));
  }
  // minimalize under divisibility
  std::vector<Monomial> keep;
  for (size_t i = 0; i < monos.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < monos.size() && !redundant; ++j) {
      if (i == j) continue;
      if (PolyRing::divides(monos[j], monos[i]) &&
          !(monos[i] == monos[j] && j > i))
        redundant = true;
    }
    if (!redundant) keep.push_back(monos[i]);
  }
  std::vector<Polynomial> gens;
  for (auto& m : keep) gens.push_back(Polynomial::term(ring, m, 1));
  return gens;
}

RunReport run_corpus_instances(int vars, int maxdeg, int count, uint64_t seed,
                               const RunOptions& opt) {
  RunReport out;
  out.version = kArtifactVersion;
  out.prime = opt.prime_override.value_or(PrimeField::kDefaultPrime);
  out.seed = seed;
  out.caveats = standing_caveats();

  std::vector<std::string> names;
  for (int i = 0; i < vars; ++i) names.push_back("x" + std::to_string(i + 1));
  RingPtr ring = PolyRing::make(PrimeField(out.prime), names);
  QuotientRing R = QuotientRing::whole(ring);

  for (int idx = 0; idx < count; ++idx) {
    std::mt19937_64 rng(seed * 1000003ULL + static_cast<uint64_t>(idx));
    InstanceResult inst;
    auto t0 = std::chrono::steady_clock::now();
    try {
      auto gens = random_monomial_ideal_gens(ring, rng, maxdeg);
      InstanceOptions io;
      io.seed = rng();
      io.rmax = opt.rmax;
      io.max_power = opt.max_power;
      AnalyzedInstance a = analyze_instance(R, Ideal(ring, gens), io);
      inst.ring = a.report.ring_desc;
      inst.ideal = a.report.ideal_desc;
      inst.notes = a.report.notes;
      inst.invariants = summarize(a.report);
      inst.theorems = check_all(a);
    } catch (const kernel_error& e) {
      inst.error = e.what();
    }
    inst.timing_ms = opt.timings ? elapsed_ms(t0) : 0;
    out.instances.push_back(std::move(inst));
  }
  return out;
}

RunReport run_session(const SessionAST& ast, const RunOptions& opt) {
  RunReport out;
  out.version = kArtifactVersion;
  out.prime = opt.prime_override.value_or(PrimeField::kDefaultPrime);
  out.seed = opt.seed;
  out.caveats = standing_caveats();

  std::map<std::string, RingPtr> rings;
  std::map<std::string, QuotientRing> quotients;
  std::map<std::string, std::vector<PolyExpr>> ideals;

  auto record_decl_error = [&out](const std::string& what) {
    InstanceResult inst;
    inst.error = what;
    out.instances.push_back(std::move(inst));
  };

  uint64_t stmt_index = 0;
  for (const auto& stmt : ast.statements) {
    ++stmt_index;
    try {
      if (const auto* rd = std::get_if<RingDecl>(&stmt)) {
        uint32_t p = opt.prime_override.value_or(
            rd->p.value_or(PrimeField::kDefaultPrime));
        MonomialOrder ord = rd->order == "lex" ? MonomialOrder::lex()
                                               : MonomialOrder::grevlex();
        rings[rd->name] =
            PolyRing::make(PrimeField(p), rd->vars, ord, rd->weights);
        if (opt.prime_override && rd->p && *rd->p != *opt.prime_override) {
          out.caveats.push_back("ring " + rd->name +
                                ": declared prime overridden from the "
                                "command line");
        }
      } else if (const auto* qd = std::get_if<QuotientDecl>(&stmt)) {
        auto rit = rings.find(qd->ring_name);
        if (rit == rings.end())
          throw kernel_error("ring '" + qd->ring_name +
                             "' failed to construct earlier");
        EvalContext cx = context_of(rit->second);
        std::vector<Polynomial> kg;
        for (const auto& e : qd->gens) kg.push_back(eval_expr(e, cx));
        quotients.emplace(qd->name,
                          QuotientRing(rit->second, Ideal(rit->second, kg)));
      } else if (const auto* id = std::get_if<IdealDecl>(&stmt)) {
        ideals[id->name] = id->gens;
      } else if (const auto* cs = std::get_if<CheckStmt>(&stmt)) {
        if (!quotients.count(cs->quotient)) {
          throw kernel_error("quotient ring '" + cs->quotient +
                             "' is unavailable (its declaration failed)");
        }
        run_check(*cs, quotients, ideals, opt,
                  opt.seed * 7919ULL + stmt_index, out);
      } else if (const auto* co = std::get_if<CorpusStmt>(&stmt)) {
        RunReport sub = run_corpus_instances(co->vars, co->maxdeg, co->count,
                                             co->seed, opt);
        for (auto& inst : sub.instances)
          out.instances.push_back(std::move(inst));
      }
    } catch (const kernel_error& e) {
      record_decl_error(e.what());
    }
  }
  return out;
}

}  // namespace blowup
