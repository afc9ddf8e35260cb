#include "doctest.h"

#include <algorithm>

#include <set>

#include "skewlab/catalog.hpp"
#include "skewlab/error.hpp"
#include "skewlab/module.hpp"
#include "support/oracle.hpp"

using namespace skewlab;

namespace {

  // Z2 over Z4 through a -> a mod 2, built by hand.
  ModuleTable z2_over_z4() {
    std::vector<Elem> action(2 * 4);
    for (Elem m = 0; m < 2; ++m) {
      for (Elem a = 0; a < 4; ++a) {
        action[m * 4 + a] = (m * (a % 2)) % 2;
      }
    }
    return ModuleTable("z2", oracle::zn(4), 2, {0, 1, 1, 0}, action);
  }

  std::set<ElemSet> as_set(std::vector<AnnihilatorSet> const& v) {
    std::set<ElemSet> out;
    for (auto const& a : v) {
      out.insert(a.elements);
    }
    return out;
  }

}  // namespace

TEST_SUITE("finmod") {
  TEST_CASE("regular and hand-built modules pass") {
    CHECK(verify_module_axioms(ModuleTable::regular(oracle::zn(6))).ok());
    CHECK(verify_module_axioms(z2_over_z4()).ok());
    CHECK(verify_module_axioms(ModuleTable::zero_module(oracle::zn(4))).ok());
  }

  TEST_CASE("a corrupted action entry breaks an action law") {
    auto const        good = z2_over_z4();
    std::vector<Elem> action(good.action_table().begin(), good.action_table().end());
    action[1 * 4 + 2] = 1;  // 1*2 = 1 instead of 0
    ModuleTable const bad("z2", good.ring_ptr(), 2, {0, 1, 1, 0}, action);
    auto const        v = verify_module_axioms(bad);
    REQUIRE_FALSE(v.ok());
    CHECK(v.violation->witness.size() >= 1);
    CHECK(v.violation->axiom.find("action") != std::string::npos);
  }

  TEST_CASE("corruptions are reported with a witness that really breaks the law") {
    std::mt19937 rng(7);
    for (auto const& entry : builtin_catalog()) {
      auto const& R = *entry.ring;
      if (R.size() < 2) {
        continue;
      }
      auto const                          M = ModuleTable::regular(entry.ring);
      std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(R.size() - 1));
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<Elem> action(M.action_table().begin(), M.action_table().end());
        auto const        pos = pick(rng) * R.size() + pick(rng);
        Elem              v;
        do {
          v = pick(rng);
        } while (v == action[pos]);
        action[pos] = v;
        ModuleTable const bad("bad", entry.ring, R.size(),
                              {M.add_table().begin(), M.add_table().end()}, action);
        auto const        verdict = verify_module_axioms(bad);
        CAPTURE(entry.id);
        CAPTURE(pos);
        REQUIRE_FALSE(verdict.ok());
        auto const& w   = verdict.violation->witness;
        auto const& law = verdict.violation->axiom;
        CAPTURE(law);
        if (law == "action distributes over ring addition") {
          CHECK(bad.act(w[0], R.add(w[1], w[2])) != bad.add(bad.act(w[0], w[1]), bad.act(w[0], w[2])));
        } else if (law == "action distributes over module addition") {
          CHECK(bad.act(bad.add(w[0], w[1]), w[2]) != bad.add(bad.act(w[0], w[2]), bad.act(w[1], w[2])));
        } else if (law == "action associativity") {
          CHECK(bad.act(bad.act(w[0], w[1]), w[2]) != bad.act(w[0], R.mul(w[1], w[2])));
        } else {
          CHECK(law == "unitary action");
          CHECK(bad.act(w[0], R.one()) != w[0]);
        }
      }
    }
  }

  TEST_CASE("action table dimension mismatch") {
    CHECK_THROWS_AS(ModuleTable("m", oracle::zn(4), 2, {0, 1, 1, 0}, {0, 0, 0}), MalformedInput);
  }

  TEST_CASE("annihilators") {
    auto const z6 = ModuleTable::regular(oracle::zn(6));
    Elem const two[]{2};
    CHECK(annihilator(z6, two, AnnihilatorMode::cyclic_submodule).elements == ElemSet{0, 3});
    CHECK(annihilator(z6, two, AnnihilatorMode::set).elements == ElemSet{0, 3});
    auto const z4 = ModuleTable::regular(oracle::zn(4));
    CHECK(annihilator(z4, two, AnnihilatorMode::cyclic_submodule).elements == ElemSet{0, 2});
    Elem const zero[]{0};
    CHECK(annihilator(z4, zero, AnnihilatorMode::set).elements.size() == 4);
    Elem const pair[]{1, 2};
    CHECK_THROWS_AS(annihilator(z6, pair, AnnihilatorMode::cyclic_submodule), ContractViolation);
    CHECK(annihilator(z6, pair, AnnihilatorMode::set).elements == ElemSet{0});
  }

  TEST_CASE("annihilators agree with the oracle across the catalog") {
    for (auto const& entry : builtin_catalog()) {
      for (auto const& M : entry.modules) {
        CAPTURE(entry.id);
        CAPTURE(M->name());
        for (Elem m = 0; m < M->size(); ++m) {
          Elem const xs[]{m};
          CHECK(annihilator(*M, xs, AnnihilatorMode::set).elements
                == oracle::annihilator(*M, {m}));
          std::set<Elem> orbit;
          for (Elem r = 0; r < M->ring().size(); ++r) {
            orbit.insert(M->act(m, r));
          }
          ElemSet const mr(orbit.begin(), orbit.end());
          CHECK(cyclic_submodule(*M, m) == mr);
          CHECK(annihilator(*M, xs, AnnihilatorMode::cyclic_submodule).elements
                == oracle::annihilator(*M, mr));
        }
      }
    }
  }

  TEST_CASE("submodule lattices") {
    auto const z6   = ModuleTable::regular(oracle::zn(6));
    auto const subs = submodules(z6);
    CHECK(subs == std::vector<ElemSet>{{0}, {0, 3}, {0, 2, 4}, {0, 1, 2, 3, 4, 5}});
    auto const zero = ModuleTable::zero_module(oracle::zn(6));
    CHECK(submodules(zero) == std::vector<ElemSet>{{0}});
    // Z3 over itself is simple
    CHECK(submodules(ModuleTable::regular(oracle::zn(3))).size() == 2);
    CHECK(submodule_closure(z6, {2}) == ElemSet{0, 2, 4});
    CHECK(submodule_closure(z6, {2, 3}).size() == 6);
  }

  TEST_CASE("annihilator lattices") {
    auto const z6 = ModuleTable::regular(oracle::zn(6));
    CHECK(as_set(annihilator_lattice(z6))
          == std::set<ElemSet>{{0}, {0, 2, 4}, {0, 3}, {0, 1, 2, 3, 4, 5}});
    auto const z4 = ModuleTable::regular(oracle::zn(4));
    CHECK(as_set(annihilator_lattice(z4)) == std::set<ElemSet>{{0}, {0, 2}, {0, 1, 2, 3}});
    Catalog const cat;
    auto const    f4 = ModuleTable::regular(cat.find("f4")->ring);
    CHECK(as_set(annihilator_lattice(f4)) == std::set<ElemSet>{{0}, {0, 1, 2, 3}});
  }

  TEST_CASE("annihilator lattice is every r(X) for X a nonempty subset") {
    for (auto const& entry : builtin_catalog()) {
      for (auto const& M : entry.modules) {
        if (M->size() > 8) {
          continue;
        }
        std::set<ElemSet> brute;
        for (unsigned bits = 1; bits < (1U << M->size()); ++bits) {
          ElemSet xs;
          for (Elem m = 0; m < M->size(); ++m) {
            if (bits & (1U << m)) {
              xs.push_back(m);
            }
          }
          brute.insert(oracle::annihilator(*M, xs));
        }
        CAPTURE(entry.id);
        CAPTURE(M->name());
        CHECK(as_set(annihilator_lattice(*M)) == brute);
      }
    }
  }

  TEST_CASE("quotients by right ideals") {
    auto const z6 = oracle::zn(6);
    auto const q  = ModuleTable::quotient(z6, {0, 3}, "z6/3");
    CHECK(q.size() == 3);
    CHECK(verify_module_axioms(q).ok());
    CHECK_THROWS_AS(ModuleTable::quotient(z6, {0, 1}, "bad"), ContractViolation);
  }

  TEST_CASE("is_regular") {
    CHECK(ModuleTable::regular(oracle::zn(4)).is_regular());
    CHECK_FALSE(z2_over_z4().is_regular());
  }
}
