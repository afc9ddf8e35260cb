#include "skewlab/module.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "skewlab/error.hpp"

namespace skewlab {

  namespace {

    std::vector<Elem> derive_neg(std::size_t n, std::vector<Elem> const& add) {
      std::vector<Elem> neg(n, 0);
      if (add.size() != n * n) {
        return neg;
      }
      for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
          if (add[a * n + b] == 0) {
            neg[a] = b;
            break;
          }
        }
      }
      return neg;
    }

    void check_table(std::vector<Elem> const& table,
                     std::size_t              expected_len,
                     std::size_t              range,
                     std::string const&       what) {
      if (table.size() != expected_len) {
        throw MalformedInput(what + " table has " + std::to_string(table.size())
                             + " entries, expected "
                             + std::to_string(expected_len));
      }
      for (Elem x : table) {
        if (x >= range) {
          throw MalformedInput(what + " table entry " + std::to_string(x)
                               + " out of range");
        }
      }
    }

    AxiomVerdict violated(char const* axiom, std::vector<Elem> witness) {
      return AxiomVerdict{AxiomViolation{axiom, std::move(witness)}};
    }

    bool by_size_then_lex(ElemSet const& x, ElemSet const& y) {
      return x.size() != y.size() ? x.size() < y.size() : x < y;
    }

  }  // namespace

  ModuleTable::ModuleTable(std::string       name,
                           RingPtr           ring,
                           std::size_t       size,
                           std::vector<Elem> add,
                           std::vector<Elem> action)
      : ModuleTable(std::move(name),
                    std::move(ring),
                    size,
                    add,
                    std::move(action),
                    0,
                    derive_neg(size, add)) {}

  ModuleTable::ModuleTable(std::string       name,
                           RingPtr           ring,
                           std::size_t       size,
                           std::vector<Elem> add,
                           std::vector<Elem> action,
                           Elem              zero,
                           std::vector<Elem> neg)
      : _name(std::move(name)),
        _ring(std::move(ring)),
        _size(size),
        _add(std::move(add)),
        _action(std::move(action)),
        _zero(zero),
        _neg(std::move(neg)) {
    if (!_ring) {
      throw MalformedInput("module " + _name + " has no ring");
    }
    if (_size == 0) {
      throw MalformedInput("module " + _name + " has no elements");
    }
    check_table(_add, _size * _size, _size, "module add");
    check_table(_action, _size * _ring->size(), _size, "module action");
    check_table(_neg, _size, _size, "module neg");
    if (_zero >= _size) {
      throw MalformedInput("module " + _name + ": zero index out of range");
    }
  }

  ModuleTable ModuleTable::regular(RingPtr ring) {
    auto const& r = *ring;
    return ModuleTable("regular",
                       ring,
                       r.size(),
                       {r.add_table().begin(), r.add_table().end()},
                       {r.mul_table().begin(), r.mul_table().end()},
                       r.zero(),
                       {r.neg_table().begin(), r.neg_table().end()});
  }

  ModuleTable ModuleTable::zero_module(RingPtr ring) {
    std::size_t const n = ring->size();
    return ModuleTable("zero", std::move(ring), 1, {0}, std::vector<Elem>(n, 0));
  }

  ModuleTable ModuleTable::quotient(RingPtr ring, ElemSet const& ideal, std::string name) {
    RingTable const& r = *ring;
    if (!is_right_ideal(r, ideal)) {
      throw ContractViolation(format_set(ideal) + " is not a right ideal of "
                              + r.name());
    }
    std::size_t const n = r.size();
    // coset[a] = index of a + I; representatives are least members.
    std::vector<Elem> coset(n, static_cast<Elem>(n));
    std::vector<Elem> reps;
    for (Elem a = 0; a < n; ++a) {
      if (coset[a] != n) {
        continue;
      }
      auto const idx = static_cast<Elem>(reps.size());
      reps.push_back(a);
      for (Elem i : ideal) {
        coset[r.add(a, i)] = idx;
      }
    }
    std::size_t const q = reps.size();
    std::vector<Elem> add(q * q), action(q * n);
    for (Elem x = 0; x < q; ++x) {
      for (Elem y = 0; y < q; ++y) {
        add[x * q + y] = coset[r.add(reps[x], reps[y])];
      }
      for (Elem s = 0; s < n; ++s) {
        action[x * n + s] = coset[r.mul(reps[x], s)];
      }
    }
    return ModuleTable(std::move(name), std::move(ring), q, std::move(add), std::move(action));
  }

  bool ModuleTable::is_regular() const {
    RingTable const& r = *_ring;
    return _size == r.size() && _zero == r.zero()
           && std::equal(_add.begin(), _add.end(), r.add_table().begin())
           && std::equal(_action.begin(), _action.end(), r.mul_table().begin());
  }

  AxiomVerdict verify_module_axioms(ModuleTable const& m) {
    RingTable const& r = m.ring();
    Elem const       n = static_cast<Elem>(m.size());
    Elem const       k = static_cast<Elem>(r.size());
    Elem const       z = m.zero();
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        for (Elem c = 0; c < n; ++c) {
          if (m.add(m.add(a, b), c) != m.add(a, m.add(b, c))) {
            return violated("additive associativity", {a, b, c});
          }
        }
      }
    }
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (m.add(a, b) != m.add(b, a)) {
          return violated("additive commutativity", {a, b});
        }
      }
    }
    for (Elem a = 0; a < n; ++a) {
      if (m.add(a, z) != a) {
        return violated("additive identity", {a});
      }
    }
    for (Elem a = 0; a < n; ++a) {
      if (m.add(a, m.neg(a)) != z) {
        return violated("additive inverse", {a});
      }
    }
    for (Elem x = 0; x < n; ++x) {
      for (Elem a = 0; a < k; ++a) {
        for (Elem b = 0; b < k; ++b) {
          if (m.act(x, r.add(a, b)) != m.add(m.act(x, a), m.act(x, b))) {
            return violated("action distributes over ring addition", {x, a, b});
          }
        }
      }
    }
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        for (Elem a = 0; a < k; ++a) {
          if (m.act(m.add(x, y), a) != m.add(m.act(x, a), m.act(y, a))) {
            return violated("action distributes over module addition", {x, y, a});
          }
        }
      }
    }
    for (Elem x = 0; x < n; ++x) {
      for (Elem a = 0; a < k; ++a) {
        for (Elem b = 0; b < k; ++b) {
          if (m.act(x, r.mul(a, b)) != m.act(m.act(x, a), b)) {
            return violated("action associativity", {x, a, b});
          }
        }
      }
    }
    for (Elem x = 0; x < n; ++x) {
      if (m.act(x, r.one()) != x) {
        return violated("unitary action", {x});
      }
    }
    return {};
  }

  ElemSet cyclic_submodule(ModuleTable const& module, Elem m) {
    ElemSet out;
    for (Elem s = 0; s < module.ring().size(); ++s) {
      out.push_back(module.act(m, s));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    for (Elem x : out) {
      for (Elem y : out) {
        if (!std::binary_search(out.begin(), out.end(), module.add(x, y))) {
          throw SoundnessAlarm("orbit " + std::to_string(m) + "R in module "
                               + module.name() + " is not additively closed");
        }
      }
    }
    return out;
  }

  AnnihilatorSet annihilator_of(ModuleTable const& module, ElemSet const& xs) {
    RingTable const& r = module.ring();
    AnnihilatorSet   result{module.ring_ptr(), {}, "r(" + format_set(xs) + ")"};
    for (Elem a = 0; a < r.size(); ++a) {
      bool kills = true;
      for (Elem x : xs) {
        if (module.act(x, a) != module.zero()) {
          kills = false;
          break;
        }
      }
      if (kills) {
        result.elements.push_back(a);
      }
    }
    return result;
  }

  AnnihilatorSet annihilator(ModuleTable const&    module,
                             std::span<Elem const> xs,
                             AnnihilatorMode       mode) {
    for (Elem x : xs) {
      if (x >= module.size()) {
        throw ContractViolation("module element " + std::to_string(x)
                                + " out of range");
      }
    }
    if (mode == AnnihilatorMode::cyclic_submodule) {
      if (xs.size() != 1) {
        throw ContractViolation(
            "cyclic-submodule annihilator needs exactly one element, got "
            + std::to_string(xs.size()));
      }
      auto result   = annihilator_of(module, cyclic_submodule(module, xs[0]));
      result.source = "r(" + std::to_string(xs[0]) + "R)";
      if (!is_right_ideal(module.ring(), result.elements)) {
        throw SoundnessAlarm(result.source + " is not a right ideal");
      }
      return result;
    }
    ElemSet set(xs.begin(), xs.end());
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    return annihilator_of(module, set);
  }

  ElemSet submodule_closure(ModuleTable const& module, ElemSet const& generators) {
    std::vector<bool> in(module.size(), false);
    std::vector<Elem> members{module.zero()};
    in[module.zero()] = true;
    auto insert       = [&](Elem x) {
      if (!in[x]) {
        in[x] = true;
        members.push_back(x);
      }
    };
    for (Elem g : generators) {
      for (Elem s = 0; s < module.ring().size(); ++s) {
        insert(module.act(g, s));
      }
    }
    // Sums of elements of the orbits gR; each gR is already closed under
    // the action, so the additive closure is a submodule.
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        insert(module.add(members[i], members[j]));
      }
    }
    ElemSet out(members.begin(), members.end());
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<ElemSet> submodules(ModuleTable const& module) {
    if (module.size() > max_submodule_enumeration) {
      throw CapacityError("submodule enumeration refused for module "
                          + module.name() + " of size "
                          + std::to_string(module.size()) + " (limit "
                          + std::to_string(max_submodule_enumeration) + ")");
    }
    std::set<ElemSet>    seen;
    std::vector<ElemSet> frontier{submodule_closure(module, {})};
    seen.insert(frontier.front());
    // Every submodule is reached by adjoining generators one at a time.
    while (!frontier.empty()) {
      std::vector<ElemSet> next;
      for (auto const& sub : frontier) {
        for (Elem m = 0; m < module.size(); ++m) {
          if (std::binary_search(sub.begin(), sub.end(), m)) {
            continue;
          }
          ElemSet gens = sub;
          gens.push_back(m);
          auto closed = submodule_closure(module, gens);
          if (seen.insert(closed).second) {
            next.push_back(std::move(closed));
          }
        }
      }
      frontier = std::move(next);
    }
    std::vector<ElemSet> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), by_size_then_lex);
    return out;
  }

  std::vector<AnnihilatorSet> annihilator_lattice(ModuleTable const& module) {
    std::set<ElemSet> found;
    for (Elem m = 0; m < module.size(); ++m) {
      Elem const x[] = {m};
      found.insert(annihilator(module, x, AnnihilatorMode::set).elements);
    }
    std::vector<ElemSet> todo(found.begin(), found.end());
    while (!todo.empty()) {
      std::vector<ElemSet> next;
      std::vector<ElemSet> snapshot(found.begin(), found.end());
      for (auto const& a : todo) {
        for (auto const& b : snapshot) {
          ElemSet both;
          std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(both));
          if (found.insert(both).second) {
            next.push_back(std::move(both));
          }
        }
      }
      todo = std::move(next);
    }
    std::vector<ElemSet> sorted(found.begin(), found.end());
    std::sort(sorted.begin(), sorted.end(), by_size_then_lex);
    std::vector<AnnihilatorSet> out;
    for (auto& s : sorted) {
      out.push_back({module.ring_ptr(), std::move(s), "annihilator lattice"});
    }
    return out;
  }

}  // namespace skewlab
