#pragma once

// Finite unital associative rings given by Cayley tables, their unital
// endomorphisms, and the right-ideal machinery used by the annihilator
// checks.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace skewlab {

  // Elements of rings and modules are dense indices 0..size-1.
  using Elem = std::uint32_t;

  // Sorted, duplicate-free list of element indices.
  using ElemSet = std::vector<Elem>;

  std::string format_set(ElemSet const& set);

  class RingTable {
   public:
    // Zero is index 0 and negation is derived from the addition table. A
    // row without an additive inverse gets neg = zero, which the axiom
    // scan reports as an inverse violation.
    RingTable(std::string       name,
              std::size_t       size,
              std::vector<Elem> add,
              std::vector<Elem> mul,
              Elem              one);

    RingTable(std::string       name,
              std::size_t       size,
              std::vector<Elem> add,
              std::vector<Elem> mul,
              Elem              zero,
              Elem              one,
              std::vector<Elem> neg);

    std::string const& name() const noexcept {
      return _name;
    }
    std::size_t size() const noexcept {
      return _size;
    }
    Elem zero() const noexcept {
      return _zero;
    }
    Elem one() const noexcept {
      return _one;
    }

    Elem add(Elem a, Elem b) const noexcept {
      return _add[a * _size + b];
    }
    Elem mul(Elem a, Elem b) const noexcept {
      return _mul[a * _size + b];
    }
    Elem neg(Elem a) const noexcept {
      return _neg[a];
    }
    Elem sub(Elem a, Elem b) const noexcept {
      return add(a, neg(b));
    }

    std::span<Elem const> add_table() const noexcept {
      return _add;
    }
    std::span<Elem const> mul_table() const noexcept {
      return _mul;
    }
    std::span<Elem const> neg_table() const noexcept {
      return _neg;
    }

    bool is_commutative() const noexcept;

    bool operator==(RingTable const&) const = default;

   private:
    std::string       _name;
    std::size_t       _size;
    std::vector<Elem> _add;
    std::vector<Elem> _mul;
    Elem              _zero;
    Elem              _one;
    std::vector<Elem> _neg;
  };

  using RingPtr = std::shared_ptr<RingTable const>;

  // First violated axiom found by a verifier, with the witnessing tuple of
  // element indices.
  struct AxiomViolation {
    std::string       axiom;
    std::vector<Elem> witness;

    std::string to_string() const;
  };

  struct AxiomVerdict {
    std::optional<AxiomViolation> violation;

    bool ok() const noexcept {
      return !violation.has_value();
    }
    explicit operator bool() const noexcept {
      return ok();
    }
  };

  // Scans, in this order: additive associativity, commutativity, identity,
  // inverses; zero != one; multiplicative identity; left distributivity;
  // right distributivity; multiplicative associativity. Tuples are scanned
  // lexicographically, so the witness is the least one for the first
  // violated axiom.
  AxiomVerdict verify_ring_axioms(RingTable const& candidate);

  class Endomorphism;
  using EndoPtr = std::shared_ptr<Endomorphism const>;

  enum class EndomorphismLaw { unital, additive, multiplicative };

  char const* to_string(EndomorphismLaw law) noexcept;

  struct EndomorphismViolation {
    EndomorphismLaw   law;
    std::vector<Elem> witness;

    std::string to_string() const;
  };

  struct EndomorphismCheck {
    EndoPtr                              endomorphism;
    std::optional<EndomorphismViolation> violation;
  };

  // A verified unital ring endomorphism with its iterate schedule: the least
  // (preperiod, period) with sigma^(preperiod+period) == sigma^preperiod.
  class Endomorphism {
   public:
    std::string const& name() const noexcept {
      return _name;
    }
    RingTable const& ring() const noexcept {
      return *_ring;
    }
    RingPtr const& ring_ptr() const noexcept {
      return _ring;
    }
    std::span<Elem const> map() const noexcept {
      return _powers[_powers.size() > 1 ? 1 : 0];
    }
    Elem operator()(Elem a) const noexcept {
      return map()[a];
    }

    std::size_t preperiod() const noexcept {
      return _preperiod;
    }
    std::size_t period() const noexcept {
      return _period;
    }

    bool is_identity() const noexcept {
      return _preperiod == 0 && _period == 1;
    }
    bool is_automorphism() const noexcept {
      return _preperiod == 0;
    }

    // sigma^k as an index map. Negative k requires an automorphism.
    std::span<Elem const> power_map(long long k) const;

    Elem power(long long k, Elem a) const {
      return power_map(k)[a];
    }

    bool operator==(Endomorphism const& that) const noexcept {
      return *_ring == *that._ring && _powers == that._powers;
    }

   private:
    friend EndomorphismCheck verify_endomorphism(RingPtr, std::vector<Elem>, std::string);

    Endomorphism() = default;

    std::string                    _name;
    RingPtr                        _ring;
    // sigma^0 .. sigma^(preperiod + period - 1)
    std::vector<std::vector<Elem>> _powers;
    std::size_t                    _preperiod = 0;
    std::size_t                    _period    = 1;
  };

  // Checks, in order: unital, additive, multiplicative. Throws
  // MalformedInput if map has the wrong length or out-of-range entries.
  EndomorphismCheck verify_endomorphism(RingPtr           ring,
                                        std::vector<Elem> map,
                                        std::string       name = "sigma");

  // Convenience wrapper that throws MalformedInput on any violation.
  EndoPtr make_endomorphism(RingPtr ring, std::vector<Elem> map, std::string name);

  EndoPtr identity_endomorphism(RingPtr ring);

  struct RightIdeal {
    RingPtr ring;
    ElemSet elements;

    bool contains(Elem a) const;
    bool operator==(RightIdeal const& that) const {
      return elements == that.elements;
    }
  };

  // Closed under addition, under right multiplication and contains zero.
  bool is_right_ideal(RingTable const& ring, ElemSet const& elements);

  // { e : e*e == e }, ascending.
  ElemSet idempotents(RingTable const& ring);

  // aR = { a*r : r in R }.
  RightIdeal principal_right_ideal(RingPtr const& ring, Elem a);

  // Least idempotent e with eR == ideal, if any. Throws ContractViolation if
  // the input is not a right ideal.
  std::optional<Elem> find_idempotent_generator(RightIdeal const& ideal);

}  // namespace skewlab
