#include "skewlab/ring.hpp"

#include <algorithm>
#include <sstream>

#include "skewlab/error.hpp"

namespace skewlab {

  namespace {

    void check_table(std::vector<Elem> const& table,
                     std::size_t              expected_len,
                     std::size_t              range,
                     char const*              what) {
      if (table.size() != expected_len) {
        throw MalformedInput(std::string(what) + " table has "
                             + std::to_string(table.size())
                             + " entries, expected "
                             + std::to_string(expected_len));
      }
      for (Elem x : table) {
        if (x >= range) {
          throw MalformedInput(std::string(what) + " table entry "
                               + std::to_string(x) + " out of range");
        }
      }
    }

    std::vector<Elem> derive_neg(std::size_t              n,
                                 std::vector<Elem> const& add,
                                 Elem                     zero) {
      std::vector<Elem> neg(n, zero);
      if (add.size() != n * n) {
        return neg;
      }
      for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
          if (add[a * n + b] == zero) {
            neg[a] = b;
            break;
          }
        }
      }
      return neg;
    }

    AxiomVerdict violated(char const* axiom, std::vector<Elem> witness) {
      return AxiomVerdict{AxiomViolation{axiom, std::move(witness)}};
    }

  }  // namespace

  std::string format_set(ElemSet const& set) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < set.size(); ++i) {
      out << (i ? "," : "") << set[i];
    }
    out << '}';
    return out.str();
  }

  RingTable::RingTable(std::string       name,
                       std::size_t       size,
                       std::vector<Elem> add,
                       std::vector<Elem> mul,
                       Elem              one)
      : RingTable(std::move(name),
                  size,
                  add,
                  std::move(mul),
                  0,
                  one,
                  size == 0 ? std::vector<Elem>{}
                            : derive_neg(size, add, 0)) {}

  RingTable::RingTable(std::string       name,
                       std::size_t       size,
                       std::vector<Elem> add,
                       std::vector<Elem> mul,
                       Elem              zero,
                       Elem              one,
                       std::vector<Elem> neg)
      : _name(std::move(name)),
        _size(size),
        _add(std::move(add)),
        _mul(std::move(mul)),
        _zero(zero),
        _one(one),
        _neg(std::move(neg)) {
    if (_size == 0) {
      throw MalformedInput("ring " + _name + " has no elements");
    }
    check_table(_add, _size * _size, _size, "add");
    check_table(_mul, _size * _size, _size, "mul");
    check_table(_neg, _size, _size, "neg");
    if (_zero >= _size || _one >= _size) {
      throw MalformedInput("ring " + _name + ": zero/one index out of range");
    }
  }

  bool RingTable::is_commutative() const noexcept {
    for (Elem a = 0; a < _size; ++a) {
      for (Elem b = a + 1; b < _size; ++b) {
        if (mul(a, b) != mul(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  std::string AxiomViolation::to_string() const {
    std::ostringstream out;
    out << axiom << " violated at (";
    for (std::size_t i = 0; i < witness.size(); ++i) {
      out << (i ? "," : "") << witness[i];
    }
    out << ')';
    return out.str();
  }

  AxiomVerdict verify_ring_axioms(RingTable const& r) {
    Elem const n = static_cast<Elem>(r.size());
    Elem const z = r.zero();
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        for (Elem c = 0; c < n; ++c) {
          if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) {
            return violated("additive associativity", {a, b, c});
          }
        }
      }
    }
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (r.add(a, b) != r.add(b, a)) {
          return violated("additive commutativity", {a, b});
        }
      }
    }
    for (Elem a = 0; a < n; ++a) {
      if (r.add(a, z) != a) {
        return violated("additive identity", {a});
      }
    }
    for (Elem a = 0; a < n; ++a) {
      if (r.add(a, r.neg(a)) != z) {
        return violated("additive inverse", {a});
      }
    }
    if (n > 1 && z == r.one()) {
      return violated("zero distinct from one", {z});
    }
    for (Elem a = 0; a < n; ++a) {
      if (r.mul(r.one(), a) != a || r.mul(a, r.one()) != a) {
        return violated("multiplicative identity", {a});
      }
    }
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        for (Elem c = 0; c < n; ++c) {
          if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) {
            return violated("distributivity", {a, b, c});
          }
        }
      }
    }
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        for (Elem c = 0; c < n; ++c) {
          if (r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c))) {
            return violated("distributivity", {a, b, c});
          }
        }
      }
    }
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        for (Elem c = 0; c < n; ++c) {
          if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) {
            return violated("multiplicative associativity", {a, b, c});
          }
        }
      }
    }
    return {};
  }

  char const* to_string(EndomorphismLaw law) noexcept {
    switch (law) {
      case EndomorphismLaw::unital:
        return "unital";
      case EndomorphismLaw::additive:
        return "additive";
      case EndomorphismLaw::multiplicative:
        return "multiplicative";
    }
    return "?";
  }

  std::string EndomorphismViolation::to_string() const {
    std::ostringstream out;
    out << "map is not " << skewlab::to_string(law) << " at (";
    for (std::size_t i = 0; i < witness.size(); ++i) {
      out << (i ? "," : "") << witness[i];
    }
    out << ')';
    return out.str();
  }

  std::span<Elem const> Endomorphism::power_map(long long k) const {
    auto const mu = static_cast<long long>(_preperiod);
    auto const p  = static_cast<long long>(_period);
    if (k < 0) {
      if (!is_automorphism()) {
        throw UnsupportedOperation("negative power of " + _name
                                   + ", which is not an automorphism");
      }
      return _powers[static_cast<std::size_t>(((k % p) + p) % p)];
    }
    if (k < mu + p) {
      return _powers[static_cast<std::size_t>(k)];
    }
    return _powers[static_cast<std::size_t>(mu + (k - mu) % p)];
  }

  EndomorphismCheck verify_endomorphism(RingPtr           ring,
                                        std::vector<Elem> map,
                                        std::string       name) {
    RingTable const& r = *ring;
    Elem const       n = static_cast<Elem>(r.size());
    if (map.size() != n) {
      throw MalformedInput("endomorphism " + name + " has "
                           + std::to_string(map.size())
                           + " entries, ring " + r.name() + " has "
                           + std::to_string(n) + " elements");
    }
    for (Elem x : map) {
      if (x >= n) {
        throw MalformedInput("endomorphism " + name + " entry "
                             + std::to_string(x) + " out of range");
      }
    }
    EndomorphismCheck result;
    if (map[r.one()] != r.one()) {
      result.violation = {EndomorphismLaw::unital, {r.one()}};
      return result;
    }
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (map[r.add(a, b)] != r.add(map[a], map[b])) {
          result.violation = {EndomorphismLaw::additive, {a, b}};
          return result;
        }
      }
    }
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (map[r.mul(a, b)] != r.mul(map[a], map[b])) {
          result.violation = {EndomorphismLaw::multiplicative, {a, b}};
          return result;
        }
      }
    }

    std::shared_ptr<Endomorphism> owned(new Endomorphism);
    Endomorphism&                 e = *owned;
    e._name = std::move(name);
    e._ring = std::move(ring);
    std::vector<Elem> id(n);
    for (Elem a = 0; a < n; ++a) {
      id[a] = a;
    }
    e._powers.push_back(std::move(id));
    // Successive powers are compared directly against all earlier ones; the
    // first repeat fixes the least preperiod and period.
    while (true) {
      std::vector<Elem> next(n);
      auto const&       last = e._powers.back();
      for (Elem a = 0; a < n; ++a) {
        next[a] = map[last[a]];
      }
      auto it = std::find(e._powers.begin(), e._powers.end(), next);
      if (it != e._powers.end()) {
        e._preperiod = static_cast<std::size_t>(it - e._powers.begin());
        e._period    = e._powers.size() - e._preperiod;
        break;
      }
      e._powers.push_back(std::move(next));
    }
    result.endomorphism = std::move(owned);
    return result;
  }

  EndoPtr make_endomorphism(RingPtr ring, std::vector<Elem> map, std::string name) {
    auto check = verify_endomorphism(std::move(ring), std::move(map), name);
    if (check.violation) {
      throw MalformedInput("endomorphism " + name + ": "
                           + check.violation->to_string());
    }
    return check.endomorphism;
  }

  EndoPtr identity_endomorphism(RingPtr ring) {
    std::vector<Elem> map(ring->size());
    for (Elem a = 0; a < map.size(); ++a) {
      map[a] = a;
    }
    return make_endomorphism(std::move(ring), std::move(map), "id");
  }

  bool RightIdeal::contains(Elem a) const {
    return std::binary_search(elements.begin(), elements.end(), a);
  }

  bool is_right_ideal(RingTable const& r, ElemSet const& elements) {
    std::vector<bool> in(r.size(), false);
    for (Elem a : elements) {
      if (a >= r.size()) {
        return false;
      }
      in[a] = true;
    }
    if (!in[r.zero()]) {
      return false;
    }
    for (Elem a : elements) {
      for (Elem b : elements) {
        if (!in[r.add(a, b)]) {
          return false;
        }
      }
      for (Elem s = 0; s < r.size(); ++s) {
        if (!in[r.mul(a, s)]) {
          return false;
        }
      }
    }
    return true;
  }

  ElemSet idempotents(RingTable const& r) {
    ElemSet result;
    for (Elem e = 0; e < r.size(); ++e) {
      if (r.mul(e, e) == e) {
        result.push_back(e);
      }
    }
    return result;
  }

  RightIdeal principal_right_ideal(RingPtr const& ring, Elem a) {
    RingTable const& r = *ring;
    ElemSet          out;
    out.reserve(r.size());
    for (Elem s = 0; s < r.size(); ++s) {
      out.push_back(r.mul(a, s));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (!is_right_ideal(r, out)) {
      throw SoundnessAlarm("principal right ideal " + std::to_string(a) + "R of "
                           + r.name() + " is not closed");
    }
    return RightIdeal{ring, std::move(out)};
  }

  std::optional<Elem> find_idempotent_generator(RightIdeal const& ideal) {
    RingTable const& r = *ideal.ring;
    if (!std::is_sorted(ideal.elements.begin(), ideal.elements.end())
        || !is_right_ideal(r, ideal.elements)) {
      throw ContractViolation(format_set(ideal.elements)
                              + " is not a right ideal of " + r.name());
    }
    for (Elem e : idempotents(r)) {
      if (!ideal.contains(e)) {
        continue;
      }
      // e in I already gives eR within I, so equal sizes suffice.
      if (principal_right_ideal(ideal.ring, e).elements.size()
          == ideal.elements.size()) {
        return e;
      }
    }
    return std::nullopt;
  }

}  // namespace skewlab
