#pragma once

// Finite right modules over a RingTable, their annihilators and submodule
// lattices.

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "skewlab/ring.hpp"

namespace skewlab {

  class ModuleTable {
   public:
    // Zero is index 0, negation is derived from the addition table.
    // action has size x ring.size() entries, row-major: (m, a) -> m*a.
    ModuleTable(std::string       name,
                RingPtr           ring,
                std::size_t       size,
                std::vector<Elem> add,
                std::vector<Elem> action);

    ModuleTable(std::string       name,
                RingPtr           ring,
                std::size_t       size,
                std::vector<Elem> add,
                std::vector<Elem> action,
                Elem              zero,
                std::vector<Elem> neg);

    // R as a right module over itself.
    static ModuleTable regular(RingPtr ring);

    static ModuleTable zero_module(RingPtr ring);

    // R/I for a right ideal I; cosets are indexed by ascending least
    // representative.
    static ModuleTable quotient(RingPtr ring, ElemSet const& ideal, std::string name);

    std::string const& name() const noexcept {
      return _name;
    }
    RingTable const& ring() const noexcept {
      return *_ring;
    }
    RingPtr const& ring_ptr() const noexcept {
      return _ring;
    }
    std::size_t size() const noexcept {
      return _size;
    }
    Elem zero() const noexcept {
      return _zero;
    }

    Elem add(Elem m, Elem n) const noexcept {
      return _add[m * _size + n];
    }
    Elem neg(Elem m) const noexcept {
      return _neg[m];
    }
    Elem act(Elem m, Elem a) const noexcept {
      return _action[m * _ring->size() + a];
    }

    std::span<Elem const> add_table() const noexcept {
      return _add;
    }
    std::span<Elem const> action_table() const noexcept {
      return _action;
    }
    std::span<Elem const> neg_table() const noexcept {
      return _neg;
    }

    // True when this is literally the regular module of its ring (same
    // tables as regular(ring)).
    bool is_regular() const;

    bool operator==(ModuleTable const& that) const {
      return _name == that._name && *_ring == *that._ring && _size == that._size
             && _add == that._add && _action == that._action
             && _zero == that._zero && _neg == that._neg;
    }

   private:
    std::string       _name;
    RingPtr           _ring;
    std::size_t       _size;
    std::vector<Elem> _add;
    std::vector<Elem> _action;
    Elem              _zero;
    std::vector<Elem> _neg;
  };

  using ModulePtr = std::shared_ptr<ModuleTable const>;

  // Scans the abelian group axioms (same order as for rings), then
  // m(a+b) = ma+mb, (m+n)a = ma+na, m(ab) = (ma)b, m1 = m. The ring itself is
  // assumed verified.
  AxiomVerdict verify_module_axioms(ModuleTable const& candidate);

  enum class AnnihilatorMode { set, cyclic_submodule };

  struct AnnihilatorSet {
    RingPtr     ring;
    ElemSet     elements;
    std::string source;

    bool operator==(AnnihilatorSet const& that) const {
      return elements == that.elements;
    }
  };

  // mR = { m*r : r in R }. Additive closure follows from right
  // distributivity and is asserted.
  ElemSet cyclic_submodule(ModuleTable const& module, Elem m);

  // mode set: r_R(X). mode cyclic_submodule: r_R(mR) for X = {m}; throws
  // ContractViolation if X is not a singleton.
  AnnihilatorSet annihilator(ModuleTable const& module,
                             std::span<Elem const> xs,
                             AnnihilatorMode       mode);

  // r_R(N) for an arbitrary subset N (typically a submodule).
  AnnihilatorSet annihilator_of(ModuleTable const& module, ElemSet const& xs);

  inline constexpr std::size_t max_submodule_enumeration = 32;

  // All submodules, sorted by size then lexicographically. Throws
  // CapacityError when module.size() > max_submodule_enumeration.
  std::vector<ElemSet> submodules(ModuleTable const& module);

  // Smallest submodule containing the given elements.
  ElemSet submodule_closure(ModuleTable const& module, ElemSet const& generators);

  // Every r_R(X) over non-empty X, as the intersection closure of the
  // element annihilators r_R(m). Sorted by size then lexicographically.
  std::vector<AnnihilatorSet> annihilator_lattice(ModuleTable const& module);

}  // namespace skewlab
