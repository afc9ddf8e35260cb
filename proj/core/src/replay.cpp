// Witness replay. Failures of the elementwise conditions and of the skew
// Armendariz check are re-evaluated directly from the recorded witness; every
// other report is reproduced by running the check again.

#include <charconv>

#include "skewlab/error.hpp"
#include "skewlab/properties.hpp"

namespace skewlab {

  namespace {

    std::optional<Elem> element(PropertyReport const& rep, std::string_view key, std::size_t bound) {
      auto const v = rep.field(key);
      if (!v) {
        return std::nullopt;
      }
      Elem x{};
      auto [p, ec] = std::from_chars(v->data(), v->data() + v->size(), x);
      if (ec != std::errc{} || p != v->data() + v->size() || x >= bound) {
        return std::nullopt;
      }
      return x;
    }

    std::optional<std::vector<Elem>> poly(PropertyReport const& rep,
                                          std::string_view      key,
                                          std::size_t           size) {
      auto const v = rep.field(key);
      if (!v) {
        return std::nullopt;
      }
      try {
        auto lit = parse_poly_literal(*v, size, false);
        std::vector<Elem> out(static_cast<std::size_t>(lit.offset), 0);
        out.insert(out.end(), lit.coeffs.begin(), lit.coeffs.end());
        return out;
      } catch (ParseError const&) {
        return std::nullopt;
      }
    }

    // Direct evaluation of a failing witness; nullopt when the property has
    // no direct replay.
    std::optional<bool> replay_failure(Instance const& inst, PropertyReport const& rep) {
      RingTable const&    R = *inst.ring;
      ModuleTable const&  M = *inst.module;
      Endomorphism const& s = *inst.sigma;
      Elem const          z = M.zero();
      auto const          m = element(rep, "m", M.size());
      auto const          a = element(rep, "a", R.size());
      std::string const&  id = rep.property;

      if (id == "c1" || id == "c2") {
        if (!m || !a) {
          return false;
        }
        bool const plain = M.act(*m, *a) == z;
        bool const twist = M.act(*m, s(*a)) == z;
        return id == "c1" ? plain && !twist : twist && !plain;
      }
      if (id == "compatible") {
        return m && a && (M.act(*m, *a) == z) != (M.act(*m, s(*a)) == z);
      }
      if (id == "semicommutative" || id == "sigma-semicommutative") {
        auto const r = element(rep, "r", R.size());
        if (!m || !a || !r || M.act(*m, *a) != z) {
          return false;
        }
        Elem const b = id == "semicommutative" ? *a : s(*a);
        return M.act(M.act(*m, *r), b) != z;
      }
      if (id == "star") {
        // m sigma(a) a = 0 but m sigma(a) != 0
        return m && a && M.act(M.act(*m, s(*a)), *a) == z && M.act(*m, s(*a)) != z;
      }
      if (id == "idempotent-sigma-invariant") {
        auto const e = element(rep, "e", R.size());
        return m && e && R.mul(*e, *e) == *e && M.act(*m, *e) != M.act(*m, s(*e));
      }
      if (id == "sigma-skew-armendariz") {
        auto const mx = poly(rep, "m(x)", M.size());
        auto const fx = poly(rep, "f(x)", R.size());
        auto const i  = element(rep, "i", mx ? mx->size() : 0);
        auto const j  = element(rep, "j", fx ? fx->size() : 0);
        if (!mx || !fx || !i || !j) {
          return false;
        }
        auto const prod = module_action(SkewModulePoly(inst.module, inst.sigma, *mx),
                                        SkewPoly(inst.sigma, *fx));
        return prod.coeffs().empty()
               && M.act((*mx)[*i], s.power(static_cast<long long>(*i), (*fx)[*j])) != z;
      }
      return std::nullopt;
    }

  }  // namespace

  bool replay(Instance const&       inst,
              PropertyReport const& report,
              DegreeBound           bound,
              EnumerationBudget     budget) {
    if (report.verdict == Verdict::fails) {
      if (auto direct = replay_failure(inst, report)) {
        return *direct;
      }
    }
    DegreeBound const d(report.degree_bound.value_or(bound.value()));
    return check_property(inst, report.property, d, budget) == report;
  }

}  // namespace skewlab
