// Bounded-degree checks over M[x;sigma], M[x,x^-1;sigma] and M[[x;sigma]].
//
// Every quantifier "for all g in R[x;sigma]" appearing here is linear in g,
// so it is checked on the monomials b x^k with b in R and k in the monomial
// test schedule. In the Laurent case the module polynomial may carry a
// negative offset while annihilator candidates phi(x) keep offset 0: x is a
// unit there, so phi is in a right ideal iff phi x^t is.
//
// For power series the coefficient of index l of m(x) (b x^k) phi(x) is the
// same linear condition on the window phi_{l-n+1..l} for every l >= n-1
// (n the length of m). A prefix phi_0..phi_D extends to an annihilating
// series iff it satisfies the first D+1 conditions and its last n-1
// coefficients form a live state of the window automaton, one from which an
// infinite path exists. Filtering by liveness gives exactly the prefixes of
// true annihilator elements.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>

#include "detail.hpp"
#include "skewlab/error.hpp"
#include "skewlab/properties.hpp"

namespace skewlab {

  namespace {

    struct Constraint {
      Elem b;
      int  k;
    };

    // The multiplier m(x) (b x^k) for each constraint, precomputed as
    // mb[c][i] = m_i sigma^(off+i)(b) so that the coefficient of index l of
    // m(x) (b x^k) phi(x) is sum_{i+j=l} mb[c][i] sigma^(off+i+k)(phi_j).
    struct Prepared {
      std::vector<Elem>       m;
      long                    off = 0;
      std::vector<Constraint> cons;
      std::vector<Elem>       mb;
    };

    class Engine {
     public:
      Engine(Instance const& inst, Extension ext, int degree)
          : R(*inst.ring),
            M(*inst.module),
            s(*inst.sigma),
            ext(ext),
            D(degree),
            prefix(ext == Extension::series) {
        if (ext == Extension::laurent && !s.is_automorphism()) {
          throw UnsupportedOperation("Laurent extension needs an automorphism; "
                                     + s.name() + " has preperiod "
                                     + std::to_string(s.preperiod()));
        }
        K = monomial_test_schedule(s);
        _lo = -D;
        long const hi = 2L * D + K.back() + 1;
        for (long e = _lo; e <= hi; ++e) {
          _pw.push_back(e < 0 && !s.is_automorphism() ? nullptr : s.power_map(e).data());
        }
      }

      Elem const* sp(long e) const {
        return _pw[static_cast<std::size_t>(e - _lo)];
      }

      std::vector<Constraint> constraints(ExtensionKind kind) const {
        if (kind == ExtensionKind::pp) {
          return {{R.one(), 0}};
        }
        std::vector<Constraint> out;
        for (Elem b = 0; b < R.size(); ++b) {
          for (int k : K) {
            out.push_back({b, k});
          }
        }
        return out;
      }

      Prepared prepare(std::span<Elem const> m, long off, std::vector<Constraint> cons) const {
        Prepared p{{m.begin(), m.end()}, off, std::move(cons), {}};
        std::size_t const n = p.m.size();
        p.mb.resize(p.cons.size() * n);
        for (std::size_t c = 0; c < p.cons.size(); ++c) {
          for (std::size_t i = 0; i < n; ++i) {
            p.mb[c * n + i] = M.act(p.m[i], sp(off + static_cast<long>(i))[p.cons[c].b]);
          }
        }
        return p;
      }

      Elem coeff(Prepared const& p, std::size_t c, int l, Elem const* phi, int len) const {
        int const  n   = static_cast<int>(p.m.size());
        Elem       acc = M.zero();
        int const  lo  = std::max(0, l - len + 1);
        int const  hi  = std::min(l, n - 1);
        long const k   = p.cons[c].k;
        for (int i = lo; i <= hi; ++i) {
          Elem const mb = p.mb[static_cast<std::size_t>(c * n + i)];
          if (mb == M.zero()) {
            continue;
          }
          acc = M.add(acc, M.act(mb, sp(p.off + i + k)[phi[l - i]]));
        }
        return acc;
      }

      bool level_ok(Prepared const& p, int l, Elem const* phi, int len) const {
        for (std::size_t c = 0; c < p.cons.size(); ++c) {
          if (coeff(p, c, l, phi, len) != M.zero()) {
            return false;
          }
        }
        return true;
      }

      // m(x) (b x^k) phi(x) = 0 for every constraint.
      bool annihilates(Prepared const& p, Elem const* phi, int len) const {
        int const top = static_cast<int>(p.m.size()) + len - 2;
        for (int l = 0; l <= top; ++l) {
          if (!level_ok(p, l, phi, len)) {
            return false;
          }
        }
        return true;
      }

      // Depth-first over phi_0, phi_1, ...: the coefficient of index l only
      // involves phi_0..phi_l, so every level prunes. With whole set the
      // product must vanish entirely (phi is an element of the annihilator),
      // otherwise only its first D+1 coefficients (phi is a prefix). leaf
      // returns false to stop the enumeration.
      template <typename F>
      bool enumerate(Prepared const& p, bool whole, F&& leaf) const {
        std::vector<Elem> phi(static_cast<std::size_t>(D) + 1, R.zero());
        return dfs(p, 0, whole, phi, leaf);
      }

      // Keeps the prefixes whose trailing window is live. nullopt when the
      // reachable part of the automaton exceeds max_states.
      std::optional<std::vector<std::vector<Elem>>> extendable(
          Prepared const& p, std::vector<std::vector<Elem>> prefixes) const {
        std::size_t const n = p.m.size();
        if (n <= 1) {
          return prefixes;  // the zero coefficient always extends
        }
        std::size_t const w = n - 1;
        std::size_t const q = R.size();
        auto encode = [&](Elem const* win) {
          std::uint64_t code = 0;
          for (std::size_t i = w; i-- > 0;) {
            code = code * q + win[i];
          }
          return code;
        };
        std::map<std::uint64_t, std::vector<std::uint64_t>> succ;
        std::vector<std::uint64_t>                          todo;
        for (auto const& phi : prefixes) {
          auto const code = encode(phi.data() + phi.size() - w);
          if (succ.emplace(code, std::vector<std::uint64_t>{}).second) {
            todo.push_back(code);
          }
        }
        std::vector<Elem> buf(n);
        while (!todo.empty()) {
          auto const code = todo.back();
          todo.pop_back();
          auto c = code;
          for (std::size_t i = 0; i < w; ++i) {
            buf[i] = static_cast<Elem>(c % q);
            c /= q;
          }
          std::vector<std::uint64_t> next;
          for (Elem a = 0; a < q; ++a) {
            buf[w] = a;
            if (level_ok(p, static_cast<int>(w), buf.data(), static_cast<int>(n))) {
              auto const to = encode(buf.data() + 1);
              next.push_back(to);
              if (succ.emplace(to, std::vector<std::uint64_t>{}).second) {
                if (succ.size() > max_states) {
                  return std::nullopt;
                }
                todo.push_back(to);
              }
            }
          }
          succ[code] = std::move(next);
        }
        // Greatest fixed point: repeatedly drop states without a successor.
        std::map<std::uint64_t, std::size_t>                out_degree;
        std::map<std::uint64_t, std::vector<std::uint64_t>> pred;
        std::vector<std::uint64_t>                          dead;
        for (auto const& [from, tos] : succ) {
          out_degree[from] = tos.size();
          for (auto to : tos) {
            pred[to].push_back(from);
          }
          if (tos.empty()) {
            dead.push_back(from);
          }
        }
        while (!dead.empty()) {
          auto const d = dead.back();
          dead.pop_back();
          for (auto from : pred[d]) {
            if (out_degree[from]-- == 1) {
              dead.push_back(from);
            }
          }
        }
        std::erase_if(prefixes, [&](auto const& phi) {
          return out_degree[encode(phi.data() + phi.size() - w)] == 0;
        });
        return prefixes;
      }

      static constexpr std::size_t max_states = 1U << 20;

      RingTable const&    R;
      ModuleTable const&  M;
      Endomorphism const& s;
      Extension           ext;
      int                 D;
      bool                prefix;
      std::vector<int>    K;

     private:
      template <typename F>
      bool dfs(Prepared const& p, int l, bool whole, std::vector<Elem>& phi, F& leaf) const {
        int const n = static_cast<int>(p.m.size());
        for (Elem a = 0; a < R.size(); ++a) {
          phi[static_cast<std::size_t>(l)] = a;
          if (!level_ok(p, l, phi.data(), l + 1)) {
            continue;
          }
          if (l < D) {
            if (!dfs(p, l + 1, whole, phi, leaf)) {
              return false;
            }
            continue;
          }
          bool ok = true;
          for (int t = D + 1; whole && ok && t <= n - 1 + D; ++t) {
            ok = level_ok(p, t, phi.data(), D + 1);
          }
          if (ok && !leaf(static_cast<std::vector<Elem> const&>(phi))) {
            return false;
          }
        }
        return true;
      }

      long                     _lo = 0;
      std::vector<Elem const*> _pw;
    };

    std::vector<Elem> stripped(std::span<Elem const> c, Elem zero) {
      std::vector<Elem> out(c.begin(), c.end());
      while (!out.empty() && out.back() == zero) {
        out.pop_back();
      }
      return out;
    }

    // Advances t as a counter with t[0] fastest, so module polynomials come
    // in order of (m_D, ..., m_0): constants first, then degree 1, and so on.
    bool next_tuple(std::vector<Elem>& t, std::size_t base) {
      for (auto& x : t) {
        if (++x < base) {
          return true;
        }
        x = 0;
      }
      return false;
    }

    ExtensionAnnihilator analyse(Instance const& inst,
                                 Engine const&   eng,
                                 ExtensionKind   kind,
                                 Prepared const& p) {
      RingTable const&     R = eng.R;
      ExtensionAnnihilator out;
      eng.enumerate(p, !eng.prefix, [&](std::vector<Elem> const& phi) {
        out.elements.push_back(phi);
        return true;
      });
      if (eng.prefix) {
        auto live = eng.extendable(p, std::move(out.elements));
        if (!live) {
          out.certificate = "window automaton too large";
          return out;
        }
        out.elements = std::move(*live);
      }

      auto try_constant = [&](Elem e) {
        Elem const f[] = {e};
        if (!eng.annihilates(p, f, 1)) {
          return false;
        }
        std::vector<bool> in(R.size(), false);
        for (Elem x : principal_right_ideal(inst.ring, e).elements) {
          in[x] = true;
        }
        return std::all_of(out.elements.begin(), out.elements.end(), [&](auto const& phi) {
          return std::all_of(phi.begin(), phi.end(), [&](Elem a) { return in[a]; });
        });
      };

      auto const w = detail::coefficient_witness(
          inst,
          p.m,
          kind == ExtensionKind::pq_baer ? detail::WitnessKind::pq_baer
                                         : detail::WitnessKind::pp);
      if (w.e && try_constant(*w.e)) {
        out.outcome      = ExtensionAnnihilator::Outcome::generated;
        out.generator    = {*w.e};
        out.constructive = true;
        return out;
      }
      for (Elem e : idempotents(R)) {
        if (w.e && e == *w.e) {
          continue;
        }
        if (try_constant(e)) {
          out.outcome   = ExtensionAnnihilator::Outcome::generated;
          out.generator = {e};
          return out;
        }
      }

      if (eng.ext == Extension::laurent) {
        // Over a commutative ring every idempotent of R[x,x^-1] is constant,
        // so the search above was exhaustive.
        if (R.is_commutative() && eng.s.is_identity()) {
          out.outcome     = ExtensionAnnihilator::Outcome::not_generated;
          out.certificate = "R is commutative and sigma the identity, so every idempotent of "
                            "R[x,x^-1] is constant and none generates the annihilator";
        }
        return out;
      }

      {
        // If the annihilator is fR[x;sigma] (or fR[[x;sigma]]) with f
        // idempotent, its constant terms form the right ideal f_0 R with f_0
        // idempotent, the constant term being a ring homomorphism. Constant
        // terms lie in the annihilator of the lowest nonzero coefficient m_s
        // (upper bound) and include those of the elements found (lower
        // bound, exact for series); when the bounds meet, the constant-term
        // ideal is known.
        ElemSet lower;
        for (auto const& phi : out.elements) {
          lower.push_back(phi[0]);
        }
        std::sort(lower.begin(), lower.end());
        lower.erase(std::unique(lower.begin(), lower.end()), lower.end());

        auto const first = std::find_if(p.m.begin(), p.m.end(), [&](Elem x) {
          return x != eng.M.zero();
        });
        if (first == p.m.end()) {
          return out;
        }
        auto const lowest = static_cast<std::size_t>(first - p.m.begin());
        ElemSet    upper;
        for (Elem a = 0; a < R.size(); ++a) {
          bool kills = true;
          for (std::size_t c = 0; kills && c < p.cons.size(); ++c) {
            Elem const mb = p.mb[c * p.m.size() + lowest];
            kills = eng.M.act(mb, eng.sp(p.off + static_cast<long>(lowest) + p.cons[c].k)[a])
                    == eng.M.zero();
          }
          if (kills) {
            upper.push_back(a);
          }
        }
        if (upper == lower) {
          out.constant_terms = lower;
          if (!find_idempotent_generator(RightIdeal{inst.ring, lower})) {
            out.outcome     = ExtensionAnnihilator::Outcome::not_generated;
            out.certificate = "constant terms of the annihilator form a right ideal without "
                              "idempotent generator";
          }
        }
      }
      return out;
    }

    PropertyReport budget_exceeded(std::string name,
                                   long double needed,
                                   EnumerationBudget budget) {
      auto rep = detail::make_report(std::move(name), Verdict::inconclusive);
      rep.note = detail::budget_note(needed, budget);
      return rep;
    }

    std::string series_note(Extension ext, ExtensionKind kind) {
      if (ext != Extension::series) {
        return "";
      }
      if (kind == ExtensionKind::semicommutative) {
        return "series elements of degree <= D are polynomials, so this matches the "
               "polynomial check";
      }
      return "annihilating series compared with eR[[x;sigma]] on their degree <= D prefixes";
    }

  }  // namespace

  ExtensionAnnihilator extension_annihilator(Instance const&       inst,
                                             Extension             ext,
                                             ExtensionKind         kind,
                                             std::span<Elem const> m,
                                             long                  offset,
                                             DegreeBound           bound) {
    if (kind == ExtensionKind::semicommutative) {
      throw ContractViolation("extension_annihilator needs kind pp or pq-baer");
    }
    if (offset != 0 && ext != Extension::laurent) {
      throw ContractViolation("only Laurent polynomials may carry an offset");
    }
    for (Elem x : m) {
      if (x >= inst.module->size()) {
        throw ContractViolation("module coefficient " + std::to_string(x)
                                + " out of range");
      }
    }
    Engine const eng(inst, ext, bound.value());
    auto const   coeffs = stripped(m, inst.module->zero());
    auto const p = eng.prepare(coeffs, offset, eng.constraints(kind));
    return analyse(inst, eng, kind, p);
  }

  PropertyReport check_extension_property(Instance const&   inst,
                                          Extension         ext,
                                          ExtensionKind     kind,
                                          DegreeBound       bound,
                                          EnumerationBudget budget) {
    std::string const name = std::string(to_string(ext)) + ":" + to_string(kind);
    int const         D    = bound.value();
    Engine const      eng(inst, ext, D);
    RingTable const&  R = *inst.ring;
    ModuleTable const& M = *inst.module;

    if (M.size() == 1) {
      auto rep = detail::make_report(name, Verdict::holds);
      rep.note = "zero module";
      return rep;
    }
    long double const needed = detail::power(M.size(), D + 1) * detail::power(R.size(), D + 1)
                               * (ext == Extension::laurent ? D + 1 : 1);
    if (needed > static_cast<long double>(budget.pairs)) {
      return budget_exceeded(name, needed, budget);
    }

    std::vector<long> offsets{0};
    if (ext == Extension::laurent) {
      for (long s = 1; s <= D; ++s) {
        offsets.push_back(-s);
      }
    }

    std::optional<Witness> undetermined;
    std::size_t            checked = 0, constructive = 0;
    for (long const off : offsets) {
      std::vector<Elem> tuple(static_cast<std::size_t>(D) + 1, M.zero());
      do {
        if (off != 0 && tuple[0] == M.zero()) {
          continue;
        }
        auto const m  = stripped(tuple, M.zero());
        auto const mx = format_poly(m, off, M.zero());
        if (kind == ExtensionKind::semicommutative) {
          auto const unit = eng.prepare(m, off, eng.constraints(ExtensionKind::pp));
          auto const all  = eng.prepare(m, off, eng.constraints(ExtensionKind::pq_baer));
          std::optional<Witness> bad;
          eng.enumerate(unit, true, [&](std::vector<Elem> const& f) {
            int const top = static_cast<int>(m.size()) + D - 1;
            for (std::size_t c = 0; c < all.cons.size(); ++c) {
              for (int l = 0; l <= top; ++l) {
                if (eng.coeff(all, c, l, f.data(), D + 1) != M.zero()) {
                  bad = Witness{{"m(x)", mx},
                                {"f(x)", format_poly(f, 0, R.zero())},
                                {"b", std::to_string(all.cons[c].b)},
                                {"k", std::to_string(all.cons[c].k)}};
                  return false;
                }
              }
            }
            return true;
          });
          if (bad) {
            auto rep         = detail::make_report(name, Verdict::fails);
            rep.witness      = std::move(*bad);
            rep.degree_bound = D;
            rep.note         = series_note(ext, kind);
            return rep;
          }
          ++checked;
          continue;
        }

        auto const p = eng.prepare(m, off, eng.constraints(kind));
        auto const a = analyse(inst, eng, kind, p);
        ++checked;
        using Outcome = ExtensionAnnihilator::Outcome;
        if (a.outcome == Outcome::generated) {
          constructive += a.constructive ? 1 : 0;
          continue;
        }
        Witness w{{"m(x)", mx}, {"annihilator_size", std::to_string(a.elements.size())}};
        if (a.constant_terms) {
          w.emplace_back("constant_terms", format_set(*a.constant_terms));
        }
        if (a.outcome == Outcome::not_generated) {
          auto rep         = detail::make_report(name, Verdict::fails);
          rep.witness      = std::move(w);
          rep.degree_bound = D;
          rep.note         = a.certificate;
          return rep;
        }
        if (!undetermined) {
          undetermined = std::move(w);
        }
      } while (next_tuple(tuple, M.size()));
    }

    if (undetermined) {
      auto rep         = detail::make_report(name, Verdict::inconclusive);
      rep.witness      = std::move(*undetermined);
      rep.degree_bound = D;
      rep.note = "no constant idempotent generates the annihilator and no failure "
                 "certificate was found";
      return rep;
    }
    auto rep         = detail::make_report(name, Verdict::holds_up_to_degree);
    rep.degree_bound = D;
    rep.note         = std::to_string(checked) + " elements checked";
    if (kind != ExtensionKind::semicommutative) {
      rep.note += ", " + std::to_string(constructive) + " by the constructive witness";
    }
    if (auto t = series_note(ext, kind); !t.empty()) {
      rep.note += "; " + t;
    }
    return rep;
  }

  PropertyReport check_skew_armendariz(Instance const&   inst,
                                       DegreeBound       bound,
                                       EnumerationBudget budget) {
    std::string const  name = "sigma-skew-armendariz";
    int const          D    = bound.value();
    RingTable const&   R    = *inst.ring;
    ModuleTable const& M    = *inst.module;
    if (M.size() == 1) {
      auto rep = detail::make_report(name, Verdict::holds);
      rep.note = "zero module";
      return rep;
    }
    long double const needed = detail::power(M.size(), D + 1) * detail::power(R.size(), D + 1);
    if (needed > static_cast<long double>(budget.pairs)) {
      return budget_exceeded(name, needed, budget);
    }
    Engine const      eng(inst, Extension::poly, D);
    std::vector<Elem> tuple(static_cast<std::size_t>(D) + 1, M.zero());
    std::size_t       zero_products = 0;
    do {
      auto const             m = stripped(tuple, M.zero());
      auto const             p = eng.prepare(m, 0, eng.constraints(ExtensionKind::pp));
      std::optional<Witness> bad;
      eng.enumerate(p, true, [&](std::vector<Elem> const& f) {
        ++zero_products;
        for (std::size_t i = 0; i < m.size(); ++i) {
          for (std::size_t j = 0; j < f.size(); ++j) {
            if (M.act(m[i], eng.sp(static_cast<long>(i))[f[j]]) != M.zero()) {
              bad = Witness{{"m(x)", format_poly(m, 0, M.zero())},
                            {"f(x)", format_poly(f, 0, R.zero())},
                            {"i", std::to_string(i)},
                            {"j", std::to_string(j)}};
              return false;
            }
          }
        }
        return true;
      });
      if (bad) {
        auto rep         = detail::make_report(name, Verdict::fails);
        rep.witness      = std::move(*bad);
        rep.degree_bound = D;
        return rep;
      }
    } while (next_tuple(tuple, M.size()));
    auto rep         = detail::make_report(name, Verdict::holds_up_to_degree);
    rep.degree_bound = D;
    rep.note         = std::to_string(zero_products) + " zero products checked";
    return rep;
  }

}  // namespace skewlab
