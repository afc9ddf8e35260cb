#include "doctest.h"

#include <algorithm>

#include <set>

#include "skewlab/catalog.hpp"
#include "skewlab/error.hpp"
#include "skewlab/properties.hpp"
#include "support/oracle.hpp"

using namespace skewlab;

namespace {

  Catalog const& catalog() {
    static Catalog const c;
    return c;
  }

  Instance inst(std::string_view r, std::string_view s = "id", std::string_view m = "regular") {
    return catalog().resolve(r, s, m);
  }

  // sigma^e(a) for any integer e; negative powers invert the map by search.
  Elem power(Endomorphism const& s, long e, Elem a) {
    if (e >= 0) {
      return oracle::iterate(s, e, a);
    }
    for (long i = 0; i < -e; ++i) {
      Elem b = 0;
      while (s(b) != a) {
        ++b;
      }
      a = b;
    }
    return a;
  }

  // Coefficients of m(x) x^off * (b x^k) * phi(x), indexed from x^(off+k).
  std::vector<Elem> product(Instance const&          I,
                            std::vector<Elem> const& m,
                            long                     off,
                            Elem                     b,
                            long                     k,
                            std::vector<Elem> const& phi) {
    auto const& M = *I.module;
    auto const& s = *I.sigma;
    std::vector<Elem> out(m.size() + phi.size() - 1, M.zero());
    for (std::size_t i = 0; i < m.size(); ++i) {
      auto const mb = M.act(m[i], power(s, off + static_cast<long>(i), b));
      for (std::size_t j = 0; j < phi.size(); ++j) {
        auto const c = M.act(mb, power(s, off + static_cast<long>(i) + k, phi[j]));
        out[i + j]   = M.add(out[i + j], c);
      }
    }
    return out;
  }

  // Test monomials: b = 1, k = 0 for pp; every b and k = 0..3 for pq-baer,
  // which goes past the schedule on purpose.
  std::vector<std::pair<Elem, long>> monomials(Instance const& I, ExtensionKind kind) {
    if (kind == ExtensionKind::pp) {
      return {{I.ring->one(), 0}};
    }
    std::vector<std::pair<Elem, long>> out;
    for (Elem b = 0; b < I.ring->size(); ++b) {
      for (long k = 0; k < 4; ++k) {
        out.emplace_back(b, k);
      }
    }
    return out;
  }

  bool kills(Instance const& I, ExtensionKind kind, std::vector<Elem> const& m, long off,
             std::vector<Elem> const& phi, std::size_t levels) {
    for (auto [b, k] : monomials(I, kind)) {
      auto const p = product(I, m, off, b, k, phi);
      for (std::size_t l = 0; l < std::min(levels, p.size()); ++l) {
        if (p[l] != I.module->zero()) {
          return false;
        }
      }
    }
    return true;
  }

  // Polynomial / Laurent: every phi of degree <= D with exact annihilation.
  // Series: prefixes of length D+1 that extend by `look` more coefficients
  // with the first D+1+look product coefficients vanishing.
  std::set<std::vector<Elem>> brute(Instance const& I, Extension ext, ExtensionKind kind,
                                    std::vector<Elem> const& m, long off, int D, int look) {
    auto const                  n = I.ring->size();
    std::set<std::vector<Elem>> out;
    if (ext != Extension::series) {
      for (auto const& phi : oracle::tuples(n, D + 1)) {
        if (kills(I, kind, m, off, phi, std::size_t(-1))) {
          out.insert(phi);
        }
      }
      return out;
    }
    std::size_t const L = static_cast<std::size_t>(D + 1 + look);
    for (auto const& psi : oracle::tuples(n, L)) {
      if (kills(I, kind, m, 0, psi, L)) {
        out.insert(std::vector<Elem>(psi.begin(), psi.begin() + D + 1));
      }
    }
    return out;
  }

  ElemSet right_multiples(RingTable const& R, Elem e) {
    return oracle::right_multiples(R, e);
  }

  void check_outcome(Instance const& I, ExtensionAnnihilator const& a,
                     std::set<std::vector<Elem>> const& truth) {
    auto const& R = *I.ring;
    using O       = ExtensionAnnihilator::Outcome;
    if (a.outcome == O::generated) {
      REQUIRE(a.generator.size() == 1);
      Elem const e = a.generator[0];
      CHECK(R.mul(e, e) == e);
      std::vector<Elem> ce(truth.begin()->size(), R.zero());
      ce[0] = e;
      CHECK(truth.contains(ce));
      auto const eR = right_multiples(R, e);
      for (auto const& phi : truth) {
        for (Elem c : phi) {
          CHECK(std::ranges::binary_search(eR, c));
        }
      }
    }
    if (a.outcome == O::not_generated && a.constant_terms) {
      std::set<Elem> c0;
      for (auto const& phi : truth) {
        c0.insert(phi[0]);
      }
      CHECK(ElemSet(c0.begin(), c0.end()) == *a.constant_terms);
      CHECK_FALSE(oracle::idempotent_generator(R, *a.constant_terms).has_value());
    }
  }

}  // namespace

TEST_SUITE("extension") {
  TEST_CASE("examples") {
    CHECK(check_property(inst("z6"), "poly:pq-baer", DegreeBound(2)).verdict == Verdict::holds_up_to_degree);
    auto const z4 = check_property(inst("z4"), "poly:pp", DegreeBound(1));
    CHECK(z4.verdict == Verdict::fails);
    CHECK(z4.field("m(x)") == "2");
    for (auto ext : {"poly", "laurent", "series"}) {
      for (auto kind : {"pp", "pq-baer", "semicommutative"}) {
        auto const id = std::string(ext) + ":" + kind;
        CAPTURE(id);
        CHECK(check_property(inst("z6", "id", "zero"), id, DegreeBound(2)).positive());
      }
    }
    CHECK_THROWS_AS(check_property(inst("z2xz2", "proj1"), "laurent:pp", DegreeBound(1)),
                    UnsupportedOperation);
  }

  TEST_CASE("series verdicts on Z6 and Z4") {
    CHECK(check_property(inst("z6"), "series:pq-baer", DegreeBound(2)).positive());
    CHECK(check_property(inst("z6"), "series:pp", DegreeBound(2)).positive());
    auto const z4 = check_property(inst("z4"), "series:pp", DegreeBound(2));
    CHECK(z4.verdict == Verdict::fails);
    CHECK(z4.field("constant_terms") == "{0,2}");
  }

  TEST_CASE("annihilator elements agree with brute force") {
    for (auto const& I : catalog().instances()) {
      auto const n = I.ring->size();
      if (n > 6 || I.module->size() > 6) {
        continue;
      }
      int const D = 1;
      for (auto ext : {Extension::poly, Extension::laurent, Extension::series}) {
        if (ext == Extension::laurent && !I.sigma->is_automorphism()) {
          continue;
        }
        if (ext == Extension::series && n > 4) {
          continue;
        }
        for (auto kind : {ExtensionKind::pp, ExtensionKind::pq_baer}) {
          for (long off : {0L, -1L}) {
            if (off != 0 && ext != Extension::laurent) {
              continue;
            }
            for (auto const& m : oracle::tuples(I.module->size(), D + 1)) {
              auto const a = extension_annihilator(I, ext, kind, m, off, DegreeBound(D));
              std::set<std::vector<Elem>> const got(a.elements.begin(), a.elements.end());
              auto const truth = brute(I, ext, kind, m, off, D, 4);
              CAPTURE(I.id());
              CAPTURE(to_string(ext));
              CAPTURE(to_string(kind));
              CAPTURE(format_poly(m, off));
              CHECK(got == truth);
              CHECK(a.elements.size() == got.size());
              CHECK(std::ranges::is_sorted(a.elements));
              check_outcome(I, a, truth);
            }
          }
        }
      }
    }
  }

  TEST_CASE("failing extension reports replay") {
    for (auto const& I : catalog().instances()) {
      if (I.ring->size() > 8) {
        continue;
      }
      for (auto ext : {"poly", "laurent", "series"}) {
        for (auto kind : {"pp", "pq-baer", "semicommutative"}) {
          auto const id = std::string(ext) + ":" + kind;
          try {
            auto const rep = check_property(I, id, DegreeBound(1));
            CAPTURE(I.id());
            CAPTURE(id);
            if (rep.verdict == Verdict::fails) {
              CHECK(replay(I, rep, DegreeBound(1)));
            }
          } catch (UnsupportedOperation const&) {
            CHECK_FALSE(I.sigma->is_automorphism());
          }
        }
      }
    }
  }

  TEST_CASE("semicommutative extension agrees with brute force at degree 1") {
    for (auto const& I : catalog().instances()) {
      auto const& M = *I.module;
      auto const  n = I.ring->size();
      if (M.size() * n > 16) {
        continue;
      }
      bool ok = true;
      for (auto const& m : oracle::tuples(M.size(), 2)) {
        for (auto const& f : oracle::tuples(n, 2)) {
          if (!kills(I, ExtensionKind::pp, m, 0, f, std::size_t(-1))) {
            continue;
          }
          ok = ok && kills(I, ExtensionKind::pq_baer, m, 0, f, std::size_t(-1));
        }
      }
      CAPTURE(I.id());
      CHECK(check_property(I, "poly:semicommutative", DegreeBound(1)).positive() == ok);
    }
  }

  TEST_CASE("budget exhaustion is inconclusive, never a verdict") {
    auto const rep = check_extension_property(inst("z12"), Extension::poly, ExtensionKind::pp,
                                              DegreeBound(2), EnumerationBudget{10});
    CHECK(rep.verdict == Verdict::inconclusive);
    CHECK(rep.note.find("budget") != std::string::npos);
  }
}
