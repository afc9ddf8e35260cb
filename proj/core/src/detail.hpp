#pragma once

// Internals shared between the property translation units.

#include <span>
#include <string>

#include "skewlab/properties.hpp"

namespace skewlab::detail {

  enum class WitnessKind { pq_baer, pp };

  IdempotentWitness coefficient_witness(Instance const&       inst,
                                        std::span<Elem const> coeffs,
                                        WitnessKind           kind);

  PropertyReport make_report(std::string property, Verdict verdict);

  // Saturating |base|^exp as a long double, good enough for budget checks.
  long double power(std::size_t base, int exp);

  std::string budget_note(long double needed, EnumerationBudget budget);

}  // namespace skewlab::detail
