#include "skewlab/properties.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "detail.hpp"
#include "skewlab/error.hpp"

namespace skewlab {

  namespace detail {

    PropertyReport make_report(std::string property, Verdict verdict) {
      PropertyReport r;
      r.property = std::move(property);
      r.verdict  = verdict;
      return r;
    }

    long double power(std::size_t base, int exp) {
      long double out = 1;
      for (int i = 0; i < exp; ++i) {
        out *= static_cast<long double>(base);
      }
      return out;
    }

    std::string budget_note(long double needed, EnumerationBudget budget) {
      std::ostringstream out;
      out.precision(0);
      out << std::fixed << "enumeration needs " << needed << " pairs, budget is "
          << budget.pairs;
      return out.str();
    }

    IdempotentWitness coefficient_witness(Instance const&       inst,
                                          std::span<Elem const> coeffs,
                                          WitnessKind           kind) {
      RingTable const&   r = *inst.ring;
      ModuleTable const& m = *inst.module;
      IdempotentWitness  w;
      std::vector<bool>  meet(r.size(), true);
      Elem               e = r.one();
      for (std::size_t i = 0; i < coeffs.size(); ++i) {
        Elem const x[] = {coeffs[i]};
        auto       ann = annihilator(m,
                               x,
                               kind == WitnessKind::pq_baer
                                   ? AnnihilatorMode::cyclic_submodule
                                   : AnnihilatorMode::set);
        auto gen = find_idempotent_generator(RightIdeal{inst.ring, ann.elements});
        if (!gen) {
          w.failing_index = i;
          w.reason        = "annihilator of coefficient " + std::to_string(i) + " ("
                     + ann.source + " = " + format_set(ann.elements)
                     + ") has no idempotent generator";
          return w;
        }
        w.factors.push_back(*gen);
        e = r.mul(e, *gen);
        std::vector<bool> in(r.size(), false);
        for (Elem a : ann.elements) {
          in[a] = true;
        }
        for (Elem a = 0; a < r.size(); ++a) {
          meet[a] = meet[a] && in[a];
        }
      }
      ElemSet intersection;
      for (Elem a = 0; a < r.size(); ++a) {
        if (meet[a]) {
          intersection.push_back(a);
        }
      }
      if (r.mul(e, e) != e
          || principal_right_ideal(inst.ring, e).elements != intersection) {
        w.reason = "product " + std::to_string(e)
                   + " of the coefficient generators does not generate "
                   + format_set(intersection);
        return w;
      }
      w.e = e;
      return w;
    }

  }  // namespace detail

  using detail::make_report;

  std::string Instance::id() const {
    return ring->name() + "/" + sigma->name() + "/" + module->name();
  }

  Instance make_instance(RingPtr ring, EndoPtr sigma, ModulePtr module) {
    if (auto v = verify_ring_axioms(*ring); !v) {
      throw MalformedInput("ring " + ring->name() + ": " + v.violation->to_string());
    }
    if (!(sigma->ring() == *ring)) {
      throw MalformedInput("endomorphism " + sigma->name() + " is not over ring "
                           + ring->name());
    }
    if (!(module->ring() == *ring)) {
      throw MalformedInput("module " + module->name() + " is not over ring "
                           + ring->name());
    }
    if (auto v = verify_module_axioms(*module); !v) {
      throw MalformedInput("module " + module->name() + ": "
                           + v.violation->to_string());
    }
    return Instance{std::move(ring), std::move(sigma), std::move(module)};
  }

  char const* to_string(Verdict v) noexcept {
    switch (v) {
      case Verdict::holds:
        return "holds";
      case Verdict::fails:
        return "fails";
      case Verdict::holds_up_to_degree:
        return "holds-up-to-degree-D";
      case Verdict::inconclusive:
        return "inconclusive";
    }
    return "?";
  }

  std::optional<Verdict> verdict_from_string(std::string_view s) noexcept {
    for (auto v : {Verdict::holds,
                   Verdict::fails,
                   Verdict::holds_up_to_degree,
                   Verdict::inconclusive}) {
      if (s == to_string(v)) {
        return v;
      }
    }
    return std::nullopt;
  }

  std::optional<std::string> PropertyReport::field(std::string_view key) const {
    for (auto const& [k, v] : witness) {
      if (k == key) {
        return v;
      }
    }
    return std::nullopt;
  }

  char const* to_string(Condition c) noexcept {
    switch (c) {
      case Condition::c1:
        return "c1";
      case Condition::c2:
        return "c2";
      case Condition::compatible:
        return "compatible";
      case Condition::semicommutative:
        return "semicommutative";
      case Condition::sigma_semicommutative:
        return "sigma-semicommutative";
      case Condition::reduced:
        return "reduced";
      case Condition::sigma_reduced:
        return "sigma-reduced";
      case Condition::star:
        return "star";
    }
    return "?";
  }

  char const* to_string(AnnihilatorKind k) noexcept {
    switch (k) {
      case AnnihilatorKind::pp:
        return "pp";
      case AnnihilatorKind::pq_baer:
        return "pq-baer";
      case AnnihilatorKind::quasi_baer:
        return "quasi-baer";
      case AnnihilatorKind::baer:
        return "baer";
    }
    return "?";
  }

  char const* to_string(Extension e) noexcept {
    switch (e) {
      case Extension::poly:
        return "poly";
      case Extension::laurent:
        return "laurent";
      case Extension::series:
        return "series";
    }
    return "?";
  }

  char const* to_string(ExtensionKind k) noexcept {
    switch (k) {
      case ExtensionKind::pp:
        return "pp";
      case ExtensionKind::pq_baer:
        return "pq-baer";
      case ExtensionKind::semicommutative:
        return "semicommutative";
    }
    return "?";
  }

  namespace {

    std::string str(Elem x) {
      return std::to_string(x);
    }

    // mR as a membership mask, and Ma likewise.
    struct Images {
      std::vector<std::vector<bool>> orbit;  // orbit[m][x]: x in mR
      std::vector<std::vector<bool>> image;  // image[a][x]: x in Ma
    };

    Images images(ModuleTable const& mod) {
      RingTable const& r = mod.ring();
      Images           out;
      out.orbit.assign(mod.size(), std::vector<bool>(mod.size(), false));
      out.image.assign(r.size(), std::vector<bool>(mod.size(), false));
      for (Elem m = 0; m < mod.size(); ++m) {
        for (Elem a = 0; a < r.size(); ++a) {
          out.orbit[m][mod.act(m, a)] = true;
          out.image[a][mod.act(m, a)] = true;
        }
      }
      return out;
    }

    // Least nonzero x in mR cap Ma, with least r and n such that
    // m r = x = n a.
    std::optional<Witness> meet_witness(ModuleTable const& mod,
                                        Images const&      img,
                                        Elem               m,
                                        Elem               a) {
      for (Elem x = 0; x < mod.size(); ++x) {
        if (x == mod.zero() || !img.orbit[m][x] || !img.image[a][x]) {
          continue;
        }
        Elem r = 0, n = 0;
        while (mod.act(m, r) != x) {
          ++r;
        }
        while (mod.act(n, a) != x) {
          ++n;
        }
        return Witness{{"m", str(m)}, {"a", str(a)}, {"x", str(x)}, {"r", str(r)}, {"n", str(n)}};
      }
      return std::nullopt;
    }

    std::optional<Witness> compatibility_witness(Instance const& inst) {
      RingTable const&    r = *inst.ring;
      ModuleTable const&  M = *inst.module;
      Endomorphism const& s = *inst.sigma;
      Elem const          z = M.zero();
      for (Elem m = 0; m < M.size(); ++m) {
        for (Elem a = 0; a < r.size(); ++a) {
          bool const lhs = M.act(m, a) == z;
          bool const rhs = M.act(m, s(a)) == z;
          if (lhs != rhs) {
            return Witness{{"condition", lhs ? "c1" : "c2"}, {"m", str(m)}, {"a", str(a)}};
          }
        }
      }
      return std::nullopt;
    }

  }  // namespace

  PropertyReport check_elementwise_condition(Instance const& inst, Condition cond) {
    RingTable const&    R = *inst.ring;
    ModuleTable const&  M = *inst.module;
    Endomorphism const& s = *inst.sigma;
    Elem const          z = M.zero();
    auto                fail = [&](Witness w) {
      auto rep    = make_report(to_string(cond), Verdict::fails);
      rep.witness = std::move(w);
      return rep;
    };

    switch (cond) {
      case Condition::c1:
      case Condition::c2:
        for (Elem m = 0; m < M.size(); ++m) {
          for (Elem a = 0; a < R.size(); ++a) {
            bool const plain = M.act(m, a) == z;
            bool const twist = M.act(m, s(a)) == z;
            if (cond == Condition::c1 ? (plain && !twist) : (twist && !plain)) {
              return fail({{"m", str(m)}, {"a", str(a)}});
            }
          }
        }
        break;
      case Condition::compatible:
        if (auto w = compatibility_witness(inst)) {
          return fail(std::move(*w));
        }
        break;
      case Condition::semicommutative:
      case Condition::sigma_semicommutative:
        for (Elem m = 0; m < M.size(); ++m) {
          for (Elem a = 0; a < R.size(); ++a) {
            if (M.act(m, a) != z) {
              continue;
            }
            Elem const t = cond == Condition::semicommutative ? a : s(a);
            for (Elem r = 0; r < R.size(); ++r) {
              if (M.act(M.act(m, r), t) != z) {
                return fail({{"m", str(m)}, {"a", str(a)}, {"r", str(r)}});
              }
            }
          }
        }
        break;
      case Condition::reduced:
      case Condition::sigma_reduced: {
        auto const img = images(M);
        for (Elem m = 0; m < M.size(); ++m) {
          for (Elem a = 0; a < R.size(); ++a) {
            Elem const premise = cond == Condition::reduced ? M.act(m, R.mul(a, a))
                                                            : M.act(m, a);
            if (premise != z) {
              continue;
            }
            if (auto w = meet_witness(M, img, m, a)) {
              if (cond == Condition::sigma_reduced) {
                w->insert(w->begin(), {"clause", "1"});
              }
              return fail(std::move(*w));
            }
          }
        }
        if (cond == Condition::sigma_reduced) {
          if (auto w = compatibility_witness(inst)) {
            w->insert(w->begin(), {"clause", "2"});
            return fail(std::move(*w));
          }
        }
        break;
      }
      case Condition::star:
        for (Elem m = 0; m < M.size(); ++m) {
          for (Elem a = 0; a < R.size(); ++a) {
            Elem const sa = s(a);
            if (M.act(m, R.mul(sa, a)) == z && M.act(m, sa) != z) {
              return fail({{"m", str(m)}, {"a", str(a)}});
            }
          }
        }
        break;
    }
    return make_report(to_string(cond), Verdict::holds);
  }

  PropertyReport check_idempotent_sigma_invariance(Instance const& inst) {
    ModuleTable const&  M = *inst.module;
    Endomorphism const& s = *inst.sigma;
    auto const          idem = idempotents(*inst.ring);
    for (Elem m = 0; m < M.size(); ++m) {
      for (Elem e : idem) {
        if (M.act(m, e) != M.act(m, s(e))) {
          auto rep    = make_report("idempotent-sigma-invariant", Verdict::fails);
          rep.witness = {{"m", str(m)}, {"e", str(e)}};
          return rep;
        }
      }
    }
    return make_report("idempotent-sigma-invariant", Verdict::holds);
  }

  PropertyReport check_annihilator_property(Instance const& inst, AnnihilatorKind kind) {
    ModuleTable const& M    = *inst.module;
    std::string const  name = to_string(kind);
    auto               lacks_generator = [&](ElemSet const& ann) {
      return !find_idempotent_generator(RightIdeal{inst.ring, ann}).has_value();
    };

    switch (kind) {
      case AnnihilatorKind::pp:
      case AnnihilatorKind::pq_baer:
        for (Elem m = 0; m < M.size(); ++m) {
          Elem const x[] = {m};
          auto const ann = annihilator(M,
                                       x,
                                       kind == AnnihilatorKind::pp
                                           ? AnnihilatorMode::set
                                           : AnnihilatorMode::cyclic_submodule);
          if (lacks_generator(ann.elements)) {
            auto rep    = make_report(name, Verdict::fails);
            rep.witness = {{"m", str(m)}, {"annihilator", format_set(ann.elements)}};
            return rep;
          }
        }
        break;
      case AnnihilatorKind::quasi_baer: {
        std::vector<ElemSet> subs;
        try {
          subs = submodules(M);
        } catch (CapacityError const& e) {
          auto rep = make_report(name, Verdict::inconclusive);
          rep.note = e.what();
          return rep;
        }
        for (auto const& sub : subs) {
          auto const ann = annihilator_of(M, sub);
          if (lacks_generator(ann.elements)) {
            auto rep    = make_report(name, Verdict::fails);
            rep.witness = {{"submodule", format_set(sub)},
                           {"annihilator", format_set(ann.elements)}};
            return rep;
          }
        }
        break;
      }
      case AnnihilatorKind::baer:
        for (auto const& ann : annihilator_lattice(M)) {
          if (lacks_generator(ann.elements)) {
            auto rep    = make_report(name, Verdict::fails);
            rep.witness = {{"annihilator", format_set(ann.elements)}};
            return rep;
          }
        }
        break;
    }
    return make_report(name, Verdict::holds);
  }

  IdempotentWitness pq_baer_witness(Instance const& inst, SkewModulePoly const& m) {
    if (!(m.module() == *inst.module)) {
      throw ContractViolation("polynomial is not over the instance module");
    }
    return detail::coefficient_witness(inst, m.coeffs(), detail::WitnessKind::pq_baer);
  }

  IdempotentWitness pp_witness(Instance const& inst, std::span<Elem const> coeffs) {
    return detail::coefficient_witness(inst, coeffs, detail::WitnessKind::pp);
  }

  std::vector<std::string> const& property_ids() {
    static std::vector<std::string> const ids = [] {
      std::vector<std::string> v = {"c1",
                                    "c2",
                                    "compatible",
                                    "semicommutative",
                                    "sigma-semicommutative",
                                    "reduced",
                                    "sigma-reduced",
                                    "star",
                                    "pp",
                                    "pq-baer",
                                    "quasi-baer",
                                    "baer",
                                    "sigma-skew-armendariz",
                                    "idempotent-sigma-invariant",
                                    "sigma-identity",
                                    "sigma-automorphism",
                                    "module-regular"};
      for (char const* ext : {"poly", "laurent", "series"}) {
        for (char const* kind : {"pp", "pq-baer", "semicommutative"}) {
          v.push_back(std::string(ext) + ":" + kind);
        }
      }
      return v;
    }();
    return ids;
  }

  namespace {

    PropertyReport structural(Instance const& inst, std::string_view id) {
      Endomorphism const& s = *inst.sigma;
      if (id == "sigma-identity") {
        for (Elem a = 0; a < inst.ring->size(); ++a) {
          if (s(a) != a) {
            auto rep    = make_report("sigma-identity", Verdict::fails);
            rep.witness = {{"a", str(a)}, {"sigma(a)", str(s(a))}};
            return rep;
          }
        }
        return make_report("sigma-identity", Verdict::holds);
      }
      if (id == "sigma-automorphism") {
        if (s.is_automorphism()) {
          return make_report("sigma-automorphism", Verdict::holds);
        }
        auto rep    = make_report("sigma-automorphism", Verdict::fails);
        rep.witness = {{"preperiod", std::to_string(s.preperiod())}};
        return rep;
      }
      auto rep = make_report("module-regular",
                             inst.module->is_regular() ? Verdict::holds : Verdict::fails);
      if (!rep.positive()) {
        rep.witness = {{"module", inst.module->name()}};
      }
      return rep;
    }

  }  // namespace

  PropertyReport check_property(Instance const&   inst,
                                std::string_view  id,
                                DegreeBound       bound,
                                EnumerationBudget budget) {
    for (auto c : {Condition::c1,
                   Condition::c2,
                   Condition::compatible,
                   Condition::semicommutative,
                   Condition::sigma_semicommutative,
                   Condition::reduced,
                   Condition::sigma_reduced,
                   Condition::star}) {
      if (id == to_string(c)) {
        return check_elementwise_condition(inst, c);
      }
    }
    for (auto k : {AnnihilatorKind::pp,
                   AnnihilatorKind::pq_baer,
                   AnnihilatorKind::quasi_baer,
                   AnnihilatorKind::baer}) {
      if (id == to_string(k)) {
        return check_annihilator_property(inst, k);
      }
    }
    if (id == "sigma-skew-armendariz") {
      return check_skew_armendariz(inst, bound, budget);
    }
    if (id == "idempotent-sigma-invariant") {
      return check_idempotent_sigma_invariance(inst);
    }
    if (id == "sigma-identity" || id == "sigma-automorphism" || id == "module-regular") {
      return structural(inst, id);
    }
    auto const colon = id.find(':');
    if (colon != std::string_view::npos) {
      auto const ext_name  = id.substr(0, colon);
      auto const kind_name = id.substr(colon + 1);
      for (auto ext : {Extension::poly, Extension::laurent, Extension::series}) {
        if (ext_name != to_string(ext)) {
          continue;
        }
        for (auto kind :
             {ExtensionKind::pp, ExtensionKind::pq_baer, ExtensionKind::semicommutative}) {
          if (kind_name == to_string(kind)) {
            return check_extension_property(inst, ext, kind, bound, budget);
          }
        }
      }
    }
    std::string valid;
    for (auto const& p : property_ids()) {
      valid += (valid.empty() ? "" : ", ") + p;
    }
    throw UsageError("unknown property '" + std::string(id) + "'; valid ids: " + valid);
  }

}  // namespace skewlab
