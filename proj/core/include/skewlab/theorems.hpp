#pragma once

// Results about the module conditions encoded as hypotheses => conclusion
// checks on a single instance, evaluated with three-valued logic so that
// bounded or budget-limited checks never masquerade as proofs.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "skewlab/properties.hpp"

namespace skewlab {

  // yes / no / unknown; positive property verdicts (holds, holds up to the
  // degree bound) count as yes, inconclusive as unknown.
  enum class TruthValue { yes, no, unknown };

  // "true", "false", "inconclusive"
  char const*               to_string(TruthValue t) noexcept;
  std::optional<TruthValue> truth_from_string(std::string_view s) noexcept;

  struct Formula {
    enum class Op { atom, negation, conjunction, disjunction, implication, equivalence };

    Op                   op = Op::conjunction;
    std::string          property;  // atom only
    std::vector<Formula> args;

    static Formula atom(std::string property);
    static Formula negation(Formula f);
    static Formula all(std::vector<Formula> fs);
    static Formula any(std::vector<Formula> fs);
    static Formula implies(Formula lhs, Formula rhs);
    // Pairwise equality of all members.
    static Formula equivalent(std::vector<Formula> fs);

    std::string              to_string() const;
    std::vector<std::string> atoms() const;
  };

  struct TheoremSpec {
    std::string id;
    Formula     hypotheses;  // the empty conjunction is "no hypotheses"
    Formula     conclusion;
    std::string statement;
    std::string note;
  };

  // The builtin results, ordered by id.
  std::vector<TheoremSpec> const& builtin_theorems();

  // Throws UsageError listing the valid ids.
  TheoremSpec const& find_theorem(std::string_view id);

  enum class TheoremStatus { verified, vacuous, refuted, inconclusive };

  // "verified", "vacuous", "REFUTED", "inconclusive"
  char const*                  to_string(TheoremStatus s) noexcept;
  std::optional<TheoremStatus> status_from_string(std::string_view s) noexcept;

  struct TheoremReport {
    std::string                 theorem;
    std::string                 instance;
    int                         degree_bound = 0;
    TruthValue                  hypotheses   = TruthValue::unknown;
    TruthValue                  conclusion   = TruthValue::unknown;
    TheoremStatus               status       = TheoremStatus::inconclusive;
    std::string                 statement;
    // Every property consulted, in evaluation order.
    std::vector<PropertyReport> evidence;
    std::string                 note;

    bool operator==(TheoremReport const&) const = default;
  };

  // Memoizes property reports for one instance so that a suite checks each
  // property once.
  class Evaluator {
   public:
    Evaluator(Instance inst, DegreeBound bound, EnumerationBudget budget = {});

    Instance const& instance() const noexcept {
      return _inst;
    }
    DegreeBound bound() const noexcept {
      return _bound;
    }

    PropertyReport const& property(std::string const& id);

    // Kleene logic. Conjunction, disjunction and implication stop as soon as
    // the value is decided, so an implication with a false antecedent never
    // evaluates its consequent. Every consulted id is appended to touched.
    TruthValue evaluate(Formula const& f, std::vector<std::string>& touched);

   private:
    Instance                              _inst;
    DegreeBound                           _bound;
    EnumerationBudget                     _budget;
    std::map<std::string, PropertyReport> _cache;
  };

  // Hypotheses false: vacuous. Unknown: inconclusive. True: the conclusion
  // decides between verified, REFUTED and inconclusive. The conclusion is
  // evaluated in every case so vacuous reports still carry its value.
  TheoremReport run_theorem(TheoremSpec const& spec, Evaluator& ev);
  TheoremReport run_theorem(TheoremSpec const&  spec,
                            Instance const&     inst,
                            DegreeBound         bound,
                            EnumerationBudget   budget = {});

  // Every builtin spec, in id order.
  std::vector<TheoremReport> run_suite(Instance const&   inst,
                                       DegreeBound       bound,
                                       EnumerationBudget budget = {});

  // REFUTED > inconclusive > vacuous > verified. verified for an empty list.
  TheoremStatus worst_status(std::vector<TheoremReport> const& reports) noexcept;

  struct HuntResult {
    std::vector<TheoremReport> anomalies;  // status other than verified
    std::size_t                verified = 0;
  };

  HuntResult hunt(std::vector<Instance> const& instances,
                  TheoremSpec const&           spec,
                  DegreeBound                  bound,
                  EnumerationBudget            budget = {});

  // One JSON object per line with a fixed key order; parsing and
  // re-serializing is byte-identical. Parsers throw ParseError.
  std::string    to_json(PropertyReport const& report);
  std::string    to_json(TheoremReport const& report);
  PropertyReport property_report_from_json(std::string_view line);
  TheoremReport  theorem_report_from_json(std::string_view line);

}  // namespace skewlab
