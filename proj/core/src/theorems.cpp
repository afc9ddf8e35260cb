#include "skewlab/theorems.hpp"

#include <algorithm>

#include "skewlab/error.hpp"

namespace skewlab {

  char const* to_string(TruthValue t) noexcept {
    switch (t) {
      case TruthValue::yes:
        return "true";
      case TruthValue::no:
        return "false";
      case TruthValue::unknown:
        break;
    }
    return "inconclusive";
  }

  std::optional<TruthValue> truth_from_string(std::string_view s) noexcept {
    for (auto t : {TruthValue::yes, TruthValue::no, TruthValue::unknown}) {
      if (s == to_string(t)) {
        return t;
      }
    }
    return std::nullopt;
  }

  char const* to_string(TheoremStatus s) noexcept {
    switch (s) {
      case TheoremStatus::verified:
        return "verified";
      case TheoremStatus::vacuous:
        return "vacuous";
      case TheoremStatus::refuted:
        return "REFUTED";
      case TheoremStatus::inconclusive:
        break;
    }
    return "inconclusive";
  }

  std::optional<TheoremStatus> status_from_string(std::string_view s) noexcept {
    for (auto t : {TheoremStatus::verified,
                   TheoremStatus::vacuous,
                   TheoremStatus::refuted,
                   TheoremStatus::inconclusive}) {
      if (s == to_string(t)) {
        return t;
      }
    }
    return std::nullopt;
  }

  Formula Formula::atom(std::string property) {
    Formula f;
    f.op       = Op::atom;
    f.property = std::move(property);
    return f;
  }

  Formula Formula::negation(Formula g) {
    Formula f;
    f.op = Op::negation;
    f.args.push_back(std::move(g));
    return f;
  }

  Formula Formula::all(std::vector<Formula> fs) {
    Formula f;
    f.op   = Op::conjunction;
    f.args = std::move(fs);
    return f;
  }

  Formula Formula::any(std::vector<Formula> fs) {
    Formula f;
    f.op   = Op::disjunction;
    f.args = std::move(fs);
    return f;
  }

  Formula Formula::implies(Formula lhs, Formula rhs) {
    Formula f;
    f.op   = Op::implication;
    f.args = {std::move(lhs), std::move(rhs)};
    return f;
  }

  Formula Formula::equivalent(std::vector<Formula> fs) {
    Formula f;
    f.op   = Op::equivalence;
    f.args = std::move(fs);
    return f;
  }

  std::string Formula::to_string() const {
    auto join = [&](char const* sep) {
      std::string s = "(";
      for (std::size_t i = 0; i < args.size(); ++i) {
        s += (i ? sep : "") + args[i].to_string();
      }
      return s + ")";
    };
    switch (op) {
      case Op::atom:
        return property;
      case Op::negation:
        return "!" + args[0].to_string();
      case Op::conjunction:
        return args.empty() ? "true" : args.size() == 1 ? args[0].to_string() : join(" & ");
      case Op::disjunction:
        return args.empty() ? "false" : args.size() == 1 ? args[0].to_string() : join(" | ");
      case Op::implication:
        return join(" -> ");
      case Op::equivalence:
        break;
    }
    return join(" <-> ");
  }

  std::vector<std::string> Formula::atoms() const {
    if (op == Op::atom) {
      return {property};
    }
    std::vector<std::string> out;
    for (auto const& a : args) {
      for (auto& p : a.atoms()) {
        if (std::find(out.begin(), out.end(), p) == out.end()) {
          out.push_back(std::move(p));
        }
      }
    }
    return out;
  }

  namespace {

    Formula at(char const* p) {
      return Formula::atom(p);
    }

    std::vector<TheoremSpec> build_theorems() {
      using F = Formula;
      auto const four = F::equivalent({at("pp"), at("pq-baer"), at("poly:pp"), at("poly:pq-baer")});

      std::vector<TheoremSpec> v;
      v.push_back({"cor_2_4",
                   F::all({at("sigma-identity")}),
                   F::equivalent({at("pq-baer"), at("poly:pq-baer")}),
                   "for sigma the identity, M is p.q.-Baer iff M[x] is p.q.-Baer",
                   ""});
      v.push_back({"cor_2_5",
                   F::all({at("sigma-identity"), at("module-regular")}),
                   F::equivalent({at("pq-baer"), at("poly:pq-baer")}),
                   "R is right p.q.-Baer iff R[x] is, read through the regular module",
                   ""});
      v.push_back({"cor_2_6_7",
                   F::all({at("compatible")}),
                   F::all({F::implies(at("poly:pq-baer"), at("pq-baer")),
                           F::implies(at("series:pq-baer"), at("pq-baer")),
                           F::equivalent({at("pq-baer"), at("poly:pq-baer")}),
                           F::implies(at("sigma-reduced"),
                                      F::implies(at("pq-baer"), at("poly:pq-baer")))}),
                   "for sigma-compatible M, p.q.-Baer passes between M and M[x;sigma]; "
                   "the converse direction is also checked under sigma-reduced",
                   "series:pq-baer compares annihilating series on their degree <= D prefixes"});
      v.push_back({"cor_3_5",
                   F::all({at("semicommutative"), at("c1"), F::any({at("pq-baer"), at("pp")})}),
                   F::all({at("poly:semicommutative"), at("series:semicommutative")}),
                   "semicommutative, C1 and p.q.-Baer or p.p. imply M[x;sigma] and "
                   "M[[x;sigma]] are semicommutative",
                   "series:semicommutative is checked on series that are polynomials of degree <= D"});
      v.push_back({"cor_3_7",
                   F::all({at("semicommutative"), at("sigma-identity")}),
                   four,
                   "for semicommutative M and sigma the identity, M p.p., M p.q.-Baer, "
                   "M[x] p.p. and M[x] p.q.-Baer are equivalent",
                   ""});
      v.push_back({"cor_3_8",
                   F::all({at("reduced"), at("sigma-identity")}),
                   four,
                   "for reduced M and sigma the identity, M p.p., M p.q.-Baer, M[x] p.p. "
                   "and M[x] p.q.-Baer are equivalent",
                   "reduced implies semicommutative, so this specializes cor_3_7"});
      v.push_back({"lemma_2_2",
                   F::any({at("c1"), at("c2")}),
                   at("idempotent-sigma-invariant"),
                   "C1 or C2 implies m e = m sigma(e) for every m in M and idempotent e",
                   ""});
      v.push_back({"lemma_3_3",
                   F::all({at("semicommutative"), at("star")}),
                   at("sigma-skew-armendariz"),
                   "semicommutative with m sigma(a) a = 0 => m sigma(a) = 0 implies "
                   "sigma-skew Armendariz",
                   ""});
      v.push_back({"prop_2_3_1",
                   F::all({at("pq-baer"), at("c2")}),
                   at("poly:pq-baer"),
                   "M p.q.-Baer with C2 implies M[x;sigma] p.q.-Baer",
                   ""});
      v.push_back({"prop_2_3_2",
                   F::all({F::any({at("poly:pq-baer"), at("series:pq-baer")}), at("c1")}),
                   at("pq-baer"),
                   "M[x;sigma] or M[[x;sigma]] p.q.-Baer with C1 implies M p.q.-Baer",
                   "series:pq-baer compares annihilating series on their degree <= D prefixes"});
      v.push_back({"prop_3_1",
                   F::all({at("sigma-skew-armendariz"), at("c2")}),
                   F::all({F::equivalent({at("pp"), at("poly:pp")}),
                           F::implies(at("sigma-automorphism"),
                                      F::equivalent({at("pp"), at("laurent:pp")}))}),
                   "sigma-skew Armendariz with C2: M p.p. iff M[x;sigma] p.p., and for an "
                   "automorphism iff M[x,x^-1;sigma] p.p.",
                   ""});
      v.push_back({"prop_3_4",
                   F::all({at("semicommutative"), at("star")}),
                   F::all({at("poly:semicommutative"), at("series:semicommutative")}),
                   "semicommutative with m sigma(a) a = 0 => m sigma(a) = 0 implies "
                   "M[x;sigma] and M[[x;sigma]] semicommutative",
                   "series:semicommutative is checked on series that are polynomials of degree <= D"});
      v.push_back({"remark_def_2_1",
                   F::all({}),
                   F::equivalent({at("compatible"), F::all({at("c1"), at("c2")})}),
                   "sigma-compatible iff C1 and C2",
                   ""});
      v.push_back({"remark_pre_3_3",
                   F::all({at("semicommutative"), at("star")}),
                   F::all({at("sigma-semicommutative"), at("c1")}),
                   "semicommutative with m sigma(a) a = 0 => m sigma(a) = 0 implies "
                   "sigma-semicommutative and C1",
                   ""});
      v.push_back({"thm_3_6",
                   F::all({at("semicommutative"), at("compatible")}),
                   four,
                   "for semicommutative sigma-compatible M: M p.p., M p.q.-Baer, M[x;sigma] "
                   "p.p. and M[x;sigma] p.q.-Baer are equivalent",
                   ""});
      std::sort(v.begin(), v.end(), [](auto const& a, auto const& b) { return a.id < b.id; });
      return v;
    }

    TruthValue truth(PropertyReport const& r) {
      if (r.positive()) {
        return TruthValue::yes;
      }
      return r.verdict == Verdict::fails ? TruthValue::no : TruthValue::unknown;
    }

    int rank(TheoremStatus s) {
      switch (s) {
        case TheoremStatus::verified:
          return 0;
        case TheoremStatus::vacuous:
          return 1;
        case TheoremStatus::inconclusive:
          return 2;
        case TheoremStatus::refuted:
          break;
      }
      return 3;
    }

  }  // namespace

  std::vector<TheoremSpec> const& builtin_theorems() {
    static std::vector<TheoremSpec> const specs = build_theorems();
    return specs;
  }

  TheoremSpec const& find_theorem(std::string_view id) {
    for (auto const& s : builtin_theorems()) {
      if (s.id == id) {
        return s;
      }
    }
    std::string valid;
    for (auto const& s : builtin_theorems()) {
      valid += (valid.empty() ? "" : ", ") + s.id;
    }
    throw UsageError("unknown theorem '" + std::string(id) + "'; valid ids: " + valid);
  }

  Evaluator::Evaluator(Instance inst, DegreeBound bound, EnumerationBudget budget)
      : _inst(std::move(inst)), _bound(bound), _budget(budget) {}

  PropertyReport const& Evaluator::property(std::string const& id) {
    auto it = _cache.find(id);
    if (it == _cache.end()) {
      it = _cache.emplace(id, check_property(_inst, id, _bound, _budget)).first;
    }
    return it->second;
  }

  TruthValue Evaluator::evaluate(Formula const& f, std::vector<std::string>& touched) {
    using Op = Formula::Op;
    switch (f.op) {
      case Op::atom: {
        if (std::find(touched.begin(), touched.end(), f.property) == touched.end()) {
          touched.push_back(f.property);
        }
        return truth(property(f.property));
      }
      case Op::negation: {
        auto const t = evaluate(f.args[0], touched);
        return t == TruthValue::unknown ? t : t == TruthValue::yes ? TruthValue::no : TruthValue::yes;
      }
      case Op::conjunction:
      case Op::disjunction: {
        auto const decisive = f.op == Op::conjunction ? TruthValue::no : TruthValue::yes;
        auto       result   = f.op == Op::conjunction ? TruthValue::yes : TruthValue::no;
        for (auto const& a : f.args) {
          auto const t = evaluate(a, touched);
          if (t == decisive) {
            return t;
          }
          if (t == TruthValue::unknown) {
            result = t;
          }
        }
        return result;
      }
      case Op::implication: {
        auto const lhs = evaluate(f.args[0], touched);
        if (lhs == TruthValue::no) {
          return TruthValue::yes;
        }
        auto const rhs = evaluate(f.args[1], touched);
        if (rhs == TruthValue::yes) {
          return rhs;
        }
        return lhs == TruthValue::yes && rhs == TruthValue::no ? TruthValue::no : TruthValue::unknown;
      }
      case Op::equivalence:
        break;
    }
    std::vector<TruthValue> vals;
    for (auto const& a : f.args) {
      vals.push_back(evaluate(a, touched));
    }
    auto has = [&](TruthValue t) { return std::find(vals.begin(), vals.end(), t) != vals.end(); };
    // one true and one false member decide the matter whatever the unknowns are
    if (has(TruthValue::yes) && has(TruthValue::no)) {
      return TruthValue::no;
    }
    return has(TruthValue::unknown) ? TruthValue::unknown : TruthValue::yes;
  }

  TheoremReport run_theorem(TheoremSpec const& spec, Evaluator& ev) {
    TheoremReport rep;
    rep.theorem      = spec.id;
    rep.instance     = ev.instance().id();
    rep.degree_bound = ev.bound().value();
    rep.statement    = spec.statement;
    rep.note         = spec.note;

    std::vector<std::string> touched;
    rep.hypotheses = ev.evaluate(spec.hypotheses, touched);
    rep.conclusion = ev.evaluate(spec.conclusion, touched);
    for (auto const& id : touched) {
      rep.evidence.push_back(ev.property(id));
    }
    switch (rep.hypotheses) {
      case TruthValue::no:
        rep.status = TheoremStatus::vacuous;
        break;
      case TruthValue::unknown:
        rep.status = TheoremStatus::inconclusive;
        break;
      case TruthValue::yes:
        rep.status = rep.conclusion == TruthValue::yes  ? TheoremStatus::verified
                     : rep.conclusion == TruthValue::no ? TheoremStatus::refuted
                                                        : TheoremStatus::inconclusive;
        break;
    }
    return rep;
  }

  TheoremReport run_theorem(TheoremSpec const& spec,
                            Instance const&    inst,
                            DegreeBound        bound,
                            EnumerationBudget  budget) {
    Evaluator ev(inst, bound, budget);
    return run_theorem(spec, ev);
  }

  std::vector<TheoremReport> run_suite(Instance const&   inst,
                                       DegreeBound       bound,
                                       EnumerationBudget budget) {
    Evaluator                  ev(inst, bound, budget);
    std::vector<TheoremReport> out;
    for (auto const& spec : builtin_theorems()) {
      out.push_back(run_theorem(spec, ev));
    }
    return out;
  }

  TheoremStatus worst_status(std::vector<TheoremReport> const& reports) noexcept {
    TheoremStatus worst = TheoremStatus::verified;
    for (auto const& r : reports) {
      if (rank(r.status) > rank(worst)) {
        worst = r.status;
      }
    }
    return worst;
  }

  HuntResult hunt(std::vector<Instance> const& instances,
                  TheoremSpec const&           spec,
                  DegreeBound                  bound,
                  EnumerationBudget            budget) {
    HuntResult out;
    for (auto const& inst : instances) {
      auto rep = run_theorem(spec, inst, bound, budget);
      if (rep.status == TheoremStatus::verified) {
        ++out.verified;
      } else {
        out.anomalies.push_back(std::move(rep));
      }
    }
    return out;
  }

}  // namespace skewlab
