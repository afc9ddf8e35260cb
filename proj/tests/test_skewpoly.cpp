#include "doctest.h"

#include <algorithm>
#include <map>

#include "skewlab/catalog.hpp"
#include "skewlab/error.hpp"
#include "skewlab/skewpoly.hpp"
#include "support/oracle.hpp"

using namespace skewlab;

namespace {

  Catalog const& catalog() {
    static Catalog const c;
    return c;
  }

  EndoPtr endo(std::string_view ring, std::string_view name) {
    return catalog().find(ring)->endomorphism(name);
  }

  // exponent -> nonzero coefficient
  std::map<long, Elem> terms(std::vector<Elem> const& c, long offset) {
    std::map<long, Elem> out;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] != 0) {
        out[offset + static_cast<long>(i)] = c[i];
      }
    }
    return out;
  }

  SkewPoly poly(EndoPtr s, std::vector<Elem> c) {
    return SkewPoly(std::move(s), std::move(c));
  }

}  // namespace

TEST_SUITE("skewpoly") {
  TEST_CASE("normalization and formatting") {
    auto const s = endo("z6", "id");
    CHECK(poly(s, {2, 3, 0, 0}).coeffs() == std::vector<Elem>{2, 3});
    CHECK(poly(s, {0, 0}).is_zero());
    CHECK(poly(s, {0, 0}).degree() == -1);
    CHECK(poly(s, {2, 3}).to_string() == "2+3x");
    CHECK(format_poly(std::vector<Elem>{}) == "0");
    CHECK(format_poly(std::vector<Elem>{0, 0, 5}) == "5x^2");
    CHECK(format_poly(std::vector<Elem>{1, 0, 4}, -1) == "1x^-1+4x");
  }

  TEST_CASE("F4 with Frobenius: (alpha x)(alpha) = x") {
    auto const frob = endo("f4", "frobenius");
    auto const p    = ring_mul(poly(frob, {0, 2}), poly(frob, {2}));
    CHECK(p.coeffs() == std::vector<Elem>{0, 1});
    auto const M  = catalog().find("f4")->module("regular");
    auto const mp = module_action(SkewModulePoly(M, frob, {0, 2}), poly(frob, {2}));
    CHECK(mp.coeffs() == std::vector<Elem>{0, 1});
  }

  TEST_CASE("Z6: (2+3x) * 3 = 3x") {
    auto const s  = endo("z6", "id");
    auto const M  = catalog().find("z6")->module("regular");
    auto const mp = module_action(SkewModulePoly(M, s, {2, 3}), poly(s, {3}));
    CHECK(mp.coeffs() == std::vector<Elem>{0, 3});
    CHECK(module_action(SkewModulePoly(M, s, {2, 3}), poly(s, {1})).coeffs()
          == std::vector<Elem>{2, 3});
    CHECK(ring_mul(poly(s, {}), poly(s, {2, 3})).is_zero());
  }

  TEST_CASE("mismatched sigma is a contract violation") {
    auto const a = endo("z2xz2", "swap");
    auto const b = endo("z2xz2", "id");
    CHECK_THROWS_AS(ring_mul(poly(a, {1}), poly(b, {1})), ContractViolation);
    CHECK_THROWS_AS(poly(a, {1}) + poly(b, {1}), ContractViolation);
  }

  TEST_CASE("Laurent arithmetic") {
    auto const swap = endo("z2xz2", "swap");
    LaurentPoly const xinv(swap, {3}, -1);
    LaurentPoly const x(swap, {3}, 1);
    LaurentPoly const a(swap, {2}, 0);
    // x^-1 a x = sigma^-1(a); (1,0) -> (0,1)
    CHECK(laurent_mul(laurent_mul(xinv, a), x) == LaurentPoly(swap, {1}, 0));
    CHECK(laurent_mul(xinv, x) == LaurentPoly(swap, {3}, 0));
    LaurentPoly const u(swap, {1, 2, 3}, -2);
    CHECK(laurent_mul(u, LaurentPoly(swap, {3}, 0)) == u);
    CHECK(LaurentPoly(swap, {0, 1, 0}, -1) == LaurentPoly(swap, {1}, 0));

    auto const proj = endo("z2xz2", "proj1");
    CHECK_THROWS_AS(laurent_mul(LaurentPoly(proj, {3}), LaurentPoly(proj, {3})), UnsupportedOperation);
  }

  TEST_CASE("Laurent with offset 0 agrees with the polynomial product") {
    std::mt19937 rng(3);
    auto const   swap = endo("z2xz2", "swap");
    auto const   M    = catalog().find("z2xz2")->module("regular");
    for (int t = 0; t < 100; ++t) {
      auto const m = oracle::random_coeffs(rng, 4, 3);
      auto const f = oracle::random_coeffs(rng, 4, 3);
      auto const l = laurent_action(LaurentModulePoly(M, swap, m), LaurentPoly(swap, f));
      auto const p = module_action(SkewModulePoly(M, swap, m), poly(swap, f));
      CHECK(l == LaurentModulePoly(M, swap, p.coeffs(), 0));
    }
  }

  TEST_CASE("truncated series") {
    auto const s = endo("z2", "id");
    auto const M = catalog().find("z2")->module("regular");
    std::vector<Elem> const geo{1, 1, 1, 1}, one_plus_x{1, 1};
    CHECK(truncated_series_action(*M, *s, geo, one_plus_x, DegreeBound(3))
          == std::vector<Elem>{1, 0, 0, 0});
    CHECK(truncated_series_mul(*s, geo, one_plus_x, DegreeBound(3)) == std::vector<Elem>{1, 0, 0, 0});
    CHECK(truncated_series_mul(*s, {}, geo, DegreeBound(2)) == std::vector<Elem>{0, 0, 0});
  }

  TEST_CASE("monomial test schedules") {
    CHECK(monomial_test_schedule(*endo("z6", "id")) == std::vector<int>{0});
    CHECK(monomial_test_schedule(*endo("f4", "frobenius")) == std::vector<int>{0, 1});
    CHECK(monomial_test_schedule(*endo("z2xz2", "proj1")) == std::vector<int>{0, 1});
  }

  TEST_CASE("poly literals") {
    auto const p = parse_poly_literal("2+3x+0x^2", 6, false);
    CHECK(p.offset == 0);
    CHECK(p.coeffs == std::vector<Elem>{2, 3, 0});
    auto const q = parse_poly_literal("1x^-1+4", 6, true);
    CHECK(q.offset == -1);
    CHECK(q.coeffs == std::vector<Elem>{1, 4});
    auto const r = parse_poly_literal("x^2+1", 6, false, Elem{1});
    CHECK(r.coeffs == std::vector<Elem>{1, 0, 1});
    CHECK_THROWS_AS(parse_poly_literal("1x^-1", 6, false), ParseError);
    CHECK_THROWS_AS(parse_poly_literal("7", 6, false), ParseError);
    CHECK_THROWS_AS(parse_poly_literal("1x+2x", 6, false), ParseError);
    CHECK_THROWS_AS(parse_poly_literal("x", 6, false), ParseError);
    CHECK_THROWS_AS(parse_poly_literal("", 6, false), ParseError);
    try {
      parse_poly_literal("2+?", 6, false);
      FAIL("no throw");
    } catch (ParseError const& e) {
      CHECK(e.file() == "<literal>");
      CHECK(e.line() == 1);
      CHECK(e.column() == 3);
    }
  }

  TEST_CASE("format and parse round trip" * doctest::description("property")) {
    std::mt19937 rng(11);
    for (int t = 0; t < 500; ++t) {
      auto const c      = oracle::trimmed(oracle::random_coeffs(rng, 12, 1 + rng() % 5));
      long const offset = static_cast<long>(rng() % 5) - 2;
      auto const text   = format_poly(c, offset);
      CAPTURE(text);
      if (c.empty()) {
        CHECK(text == "0");
        continue;
      }
      auto const lit = parse_poly_literal(text, 12, true);
      CHECK(terms(lit.coeffs, lit.offset) == terms(c, offset));
      CHECK(format_poly(lit.coeffs, lit.offset) == text);
    }
  }

  TEST_CASE("products agree with the convolution oracle" * doctest::description("property")) {
    std::mt19937 rng(5);
    for (auto const& inst : catalog().instances()) {
      auto const& R = *inst.ring;
      auto const& M = *inst.module;
      for (int t = 0; t < 30; ++t) {
        auto const f = oracle::random_coeffs(rng, R.size(), 1 + rng() % 4);
        auto const g = oracle::random_coeffs(rng, R.size(), 1 + rng() % 4);
        auto const m = oracle::random_coeffs(rng, M.size(), 1 + rng() % 4);
        CAPTURE(inst.id());
        CHECK(ring_mul(poly(inst.sigma, f), poly(inst.sigma, g)).coeffs()
              == oracle::trimmed(oracle::mul(*inst.sigma, f, g)));
        CHECK(module_action(SkewModulePoly(inst.module, inst.sigma, m), poly(inst.sigma, g)).coeffs()
              == oracle::trimmed(oracle::action(M, *inst.sigma, m, g), M.zero()));
      }
    }
  }

  TEST_CASE("M[x;sigma] is a module over R[x;sigma]" * doctest::description("property")) {
    std::mt19937 rng(20261016);
    for (auto const& inst : catalog().instances()) {
      auto const& R  = *inst.ring;
      auto const& M  = *inst.module;
      auto const  s  = inst.sigma;
      auto const  mp = [&](std::vector<Elem> c) { return SkewModulePoly(inst.module, s, std::move(c)); };
      for (int t = 0; t < 40; ++t) {
        auto const m = mp(oracle::random_coeffs(rng, M.size(), 3));
        auto const n = mp(oracle::random_coeffs(rng, M.size(), 3));
        auto const f = poly(s, oracle::random_coeffs(rng, R.size(), 3));
        auto const g = poly(s, oracle::random_coeffs(rng, R.size(), 3));
        CAPTURE(inst.id());
        CHECK(module_action(m + n, f) == module_action(m, f) + module_action(n, f));
        CHECK(module_action(m, f + g) == module_action(m, f) + module_action(m, g));
        CHECK(module_action(m, ring_mul(f, g)) == module_action(module_action(m, f), g));
        CHECK(module_action(m, poly(s, {R.one()})) == m);
        CHECK(ring_mul(ring_mul(f, g), f) == ring_mul(f, ring_mul(g, f)));
      }
    }
  }

  TEST_CASE("truncation agrees with the polynomial product at low degree" * doctest::description("property")) {
    std::mt19937 rng(9);
    for (auto const& inst : catalog().instances()) {
      auto const& M = *inst.module;
      for (int t = 0; t < 20; ++t) {
        int const  D = 2 + static_cast<int>(rng() % 3);
        auto const m = oracle::random_coeffs(rng, M.size(), D / 2 + 1);
        auto const f = oracle::random_coeffs(rng, inst.ring->size(), D / 2 + 1);
        auto       full = oracle::action(M, *inst.sigma, m, f);
        full.resize(D + 1, M.zero());
        CHECK(truncated_series_action(M, *inst.sigma, m, f, DegreeBound(D)) == full);
      }
    }
  }

  TEST_CASE("Laurent products are associative" * doctest::description("property")) {
    std::mt19937 rng(13);
    for (auto const& inst : catalog().instances()) {
      if (!inst.sigma->is_automorphism()) {
        continue;
      }
      auto const n = inst.ring->size();
      for (int t = 0; t < 20; ++t) {
        auto lp = [&] {
          return LaurentPoly(inst.sigma, oracle::random_coeffs(rng, n, 3),
                             static_cast<long>(rng() % 5) - 2);
        };
        auto const u = lp(), v = lp(), w = lp();
        CHECK(laurent_mul(laurent_mul(u, v), w) == laurent_mul(u, laurent_mul(v, w)));
      }
    }
  }
}
