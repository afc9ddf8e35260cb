#include "doctest.h"

#include <algorithm>

#include "skewlab/catalog.hpp"
#include "skewlab/error.hpp"
#include "skewlab/theorems.hpp"

using namespace skewlab;

namespace {

  Catalog const& catalog() {
    static Catalog const c;
    return c;
  }

  Instance inst(std::string_view r, std::string_view s = "id", std::string_view m = "regular") {
    return catalog().resolve(r, s, m);
  }

}  // namespace

TEST_SUITE("reports") {
  TEST_CASE("property report JSON has a fixed key order") {
    auto const rep = check_property(inst("z4"), "pp", DegreeBound(2));
    CHECK(to_json(rep)
          == R"({"property":"pp","verdict":"fails","degree_bound":null,"witness":{"m":"2","annihilator":"{0,2}"},"note":""})");
    auto const poly = check_property(inst("z6"), "poly:pq-baer", DegreeBound(2));
    auto const line = to_json(poly);
    CHECK(line.starts_with(R"({"property":"poly:pq-baer","verdict":"holds-up-to-degree-D","degree_bound":2,)"));
  }

  TEST_CASE("theorem reports round-trip byte for byte") {
    for (auto const& i : {inst("z6"), inst("z4"), inst("z2xz2", "swap"), inst("m2z2"), inst("t2z2", "id", "s1")}) {
      for (auto const& r : run_suite(i, DegreeBound(1))) {
        auto const line = to_json(r);
        auto const back = theorem_report_from_json(line);
        CAPTURE(line);
        CHECK(back == r);
        CHECK(to_json(back) == line);
        for (auto const& p : r.evidence) {
          CHECK(to_json(property_report_from_json(to_json(p))) == to_json(p));
        }
      }
    }
  }

  TEST_CASE("malformed report lines") {
    CHECK_THROWS_AS(property_report_from_json("{"), ParseError);
    CHECK_THROWS_AS(property_report_from_json("[]"), ParseError);
    CHECK_THROWS_AS(property_report_from_json(R"({"property":"pp"})"), ParseError);
    CHECK_THROWS_AS(property_report_from_json(
                        R"({"property":"pp","verdict":"maybe","degree_bound":null,"witness":{},"note":""})"),
                    ParseError);
    CHECK_THROWS_AS(property_report_from_json(
                        R"({"property":"pp","verdict":"holds","degree_bound":"2","witness":{},"note":""})"),
                    ParseError);
    CHECK_THROWS_AS(property_report_from_json(
                        R"({"property":"pp","verdict":"holds","degree_bound":null,"witness":{"m":2},"note":""})"),
                    ParseError);
    CHECK_THROWS_AS(theorem_report_from_json(R"({"theorem":"x"})"), ParseError);
  }

  TEST_CASE("verdict, truth and status names") {
    for (auto v : {Verdict::holds, Verdict::fails, Verdict::holds_up_to_degree, Verdict::inconclusive}) {
      CHECK(verdict_from_string(to_string(v)) == v);
    }
    for (auto t : {TruthValue::yes, TruthValue::no, TruthValue::unknown}) {
      CHECK(truth_from_string(to_string(t)) == t);
    }
    for (auto s : {TheoremStatus::verified, TheoremStatus::vacuous, TheoremStatus::refuted, TheoremStatus::inconclusive}) {
      CHECK(status_from_string(to_string(s)) == s);
    }
    CHECK(std::string(to_string(TheoremStatus::refuted)) == "REFUTED");
    CHECK_FALSE(verdict_from_string("HOLDS").has_value());
  }

  TEST_CASE("every failing report replays, and a tampered witness does not") {
    for (auto const& i : catalog().instances()) {
      if (i.ring->size() > 8) {
        continue;
      }
      for (auto const& id : property_ids()) {
        PropertyReport rep;
        try {
          rep = check_property(i, id, DegreeBound(1));
        } catch (UnsupportedOperation const&) {
          continue;
        }
        CAPTURE(i.id());
        CAPTURE(id);
        CHECK(replay(i, rep, DegreeBound(1)));
        if (rep.verdict != Verdict::fails) {
          continue;
        }
        // flip the verdict: a failure replayed as a success must be rejected
        auto flipped    = rep;
        flipped.verdict = Verdict::holds;
        CHECK_FALSE(replay(i, flipped, DegreeBound(1)));
        // a zero module element never witnesses a failure
        auto zeroed = rep;
        bool edited = false;
        for (auto& [k, v] : zeroed.witness) {
          if (k == "m") {
            v      = "0";
            edited = true;
          } else if (k == "m(x)") {
            v      = "0";
            edited = true;
          }
        }
        if (edited) {
          CHECK_FALSE(replay(i, zeroed, DegreeBound(1)));
        }
      }
    }
  }
}
