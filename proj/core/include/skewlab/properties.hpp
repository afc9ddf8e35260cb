#pragma once

// Decision procedures for module conditions over a finite instance
// (R, sigma, M_R) and over its bounded-degree skew extensions.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "skewlab/module.hpp"
#include "skewlab/ring.hpp"
#include "skewlab/skewpoly.hpp"

namespace skewlab {

  // A verified triple (R, sigma, M_R).
  struct Instance {
    RingPtr   ring;
    EndoPtr   sigma;
    ModulePtr module;

    // "<ring>/<sigma>/<module>"
    std::string id() const;
  };

  // Checks that sigma and module live over ring and that all three pass
  // their verifiers. Throws MalformedInput otherwise.
  Instance make_instance(RingPtr ring, EndoPtr sigma, ModulePtr module);

  enum class Verdict { holds, fails, holds_up_to_degree, inconclusive };

  char const*            to_string(Verdict v) noexcept;
  std::optional<Verdict> verdict_from_string(std::string_view s) noexcept;

  // Ordered key/value pairs. Values are element indices, sets "{0,2}" or
  // polynomial literals, so every witness can be replayed.
  using Witness = std::vector<std::pair<std::string, std::string>>;

  struct PropertyReport {
    std::string        property;
    Verdict            verdict = Verdict::inconclusive;
    Witness            witness;
    std::optional<int> degree_bound;
    std::string        note;

    // holds or holds-up-to-degree-D.
    bool positive() const noexcept {
      return verdict == Verdict::holds || verdict == Verdict::holds_up_to_degree;
    }
    std::optional<std::string> field(std::string_view key) const;

    bool operator==(PropertyReport const&) const = default;
  };

  enum class Condition {
    c1,
    c2,
    compatible,
    semicommutative,
    sigma_semicommutative,
    reduced,
    sigma_reduced,
    star
  };

  char const* to_string(Condition c) noexcept;

  // Exhaustive scan over (m, a) in M x R (and r in R where the condition
  // quantifies over R). A failing report carries the least witness.
  PropertyReport check_elementwise_condition(Instance const& inst, Condition cond);

  // m e == m sigma(e) for every m and every idempotent e.
  PropertyReport check_idempotent_sigma_invariance(Instance const& inst);

  enum class AnnihilatorKind { pp, pq_baer, quasi_baer, baer };

  char const* to_string(AnnihilatorKind k) noexcept;

  // pp: every r(m); pq-baer: every r(mR); quasi-baer: r(N) for every
  // submodule N; baer: every member of the annihilator lattice. Holds iff
  // each has an idempotent generator. Capacity problems give inconclusive.
  PropertyReport check_annihilator_property(Instance const& inst, AnnihilatorKind kind);

  struct EnumerationBudget {
    std::uint64_t pairs = 100'000'000;
  };

  // Enumerates every pair (m(x), f(x)) of degree <= D with m(x)f(x) = 0 and
  // checks m_i sigma^i(a_j) = 0 for all i, j.
  PropertyReport check_skew_armendariz(Instance const&  inst,
                                       DegreeBound       bound,
                                       EnumerationBudget budget = {});

  // Constant idempotent built from the coefficients of m(x): e = e_0 ... e_n
  // where e_i is the least idempotent generator of r(m_i R) (pq-baer) or
  // r(m_i) (pp).
  struct IdempotentWitness {
    std::optional<Elem>        e;
    std::vector<Elem>          factors;
    // Index of the first coefficient whose annihilator has no idempotent
    // generator.
    std::optional<std::size_t> failing_index;
    // Set when the product does not generate the intersection of the
    // coefficient annihilators.
    std::string                reason;
  };

  IdempotentWitness pq_baer_witness(Instance const& inst, SkewModulePoly const& m);
  IdempotentWitness pp_witness(Instance const& inst, std::span<Elem const> coeffs);

  enum class Extension { poly, laurent, series };
  enum class ExtensionKind { pp, pq_baer, semicommutative };

  char const* to_string(Extension e) noexcept;
  char const* to_string(ExtensionKind k) noexcept;

  // The annihilator of one module (Laurent) polynomial m(x) = sum m_i
  // x^(offset+i) inside the extension, restricted to phi(x) of degree <= D,
  // together with the idempotent generator search. kind is pp (r(m(x))) or
  // pq-baer (r(m(x) R[x;sigma])). For power series the elements are exactly
  // the degree <= D prefixes of annihilating series.
  struct ExtensionAnnihilator {
    enum class Outcome { generated, not_generated, undetermined };

    // Every annihilating phi(x) of degree <= D (or prefix, for series),
    // padded to D+1 coefficients, in lexicographic order (constant term most
    // significant).
    std::vector<std::vector<Elem>> elements;
    Outcome                        outcome = Outcome::undetermined;
    // Coefficients of the idempotent generator; one entry when constant.
    std::vector<Elem>              generator;
    // True when the generator is the product of coefficient generators.
    bool                           constructive = false;
    // Constant terms of the annihilator, when they are pinned down exactly.
    std::optional<ElemSet>         constant_terms;
    // Why not_generated is definite.
    std::string                    certificate;
  };

  ExtensionAnnihilator extension_annihilator(Instance const&       inst,
                                             Extension             ext,
                                             ExtensionKind         kind,
                                             std::span<Elem const> m,
                                             long                  offset,
                                             DegreeBound           bound);

  // pp / pq-baer: for every m(x) of degree <= D, computes the annihilator
  // elements phi(x) of degree <= D (quantification over R[x;sigma] reduced to
  // the monomial test schedule) and looks for a constant idempotent e with
  // e in the annihilator and every phi in eR[x]. The constructive witness is
  // tried first, then every idempotent of R. When none works a definite
  // failure needs a certificate: the constant-term ideal of the annihilator
  // is pinned down and has no idempotent generator (poly, series), or R is
  // commutative with sigma the identity so all idempotents are constant
  // (Laurent). Otherwise inconclusive. Series compare degree <= D prefixes.
  // Laurent requires an automorphism (UnsupportedOperation otherwise).
  //
  // semicommutative: m(x)f(x) = 0 implies m(x) (b x^k) f(x) = 0 for all b in
  // R and k in the schedule.
  PropertyReport check_extension_property(Instance const&   inst,
                                          Extension         ext,
                                          ExtensionKind     kind,
                                          DegreeBound       bound,
                                          EnumerationBudget budget = {});

  // Stable identifiers accepted by check_property.
  std::vector<std::string> const& property_ids();

  // Dispatch on a stable id: c1, c2, compatible, semicommutative,
  // sigma-semicommutative, reduced, sigma-reduced, star, pp, pq-baer,
  // quasi-baer, baer, sigma-skew-armendariz, idempotent-sigma-invariant,
  // sigma-identity, sigma-automorphism, module-regular, and the extension
  // forms poly:<k>, laurent:<k>, series:<k> for k in {pp, pq-baer,
  // semicommutative}. Throws UsageError for anything else.
  PropertyReport check_property(Instance const&   inst,
                                std::string_view  id,
                                DegreeBound       bound,
                                EnumerationBudget budget = {});

  // Re-evaluates the witness of a failing report against the instance.
  // Returns true iff the witness still demonstrates the failure. Reports that
  // do not fail are replayed by re-running the check and comparing.
  bool replay(Instance const&   inst,
              PropertyReport const& report,
              DegreeBound       bound,
              EnumerationBudget budget = {});

}  // namespace skewlab
