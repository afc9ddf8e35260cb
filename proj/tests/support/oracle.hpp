#pragma once

// Brute-force reference computations for the tests. Everything here works
// straight from the Cayley tables with nested loops; none of it calls the
// library algorithms it is used to check.

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <random>
#include <set>
#include <vector>

#include "skewlab/catalog.hpp"
#include "skewlab/module.hpp"
#include "skewlab/ring.hpp"
#include "skewlab/skewpoly.hpp"

namespace oracle {

  using skewlab::Elem;
  using skewlab::ElemSet;
  using skewlab::Endomorphism;
  using skewlab::ModuleTable;
  using skewlab::RingTable;

  // Z/n from modular arithmetic.
  inline skewlab::RingPtr zn(std::size_t n) {
    std::vector<Elem> add(n * n), mul(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        add[a * n + b] = static_cast<Elem>((a + b) % n);
        mul[a * n + b] = static_cast<Elem>((a * b) % n);
      }
    }
    return std::make_shared<RingTable const>("z" + std::to_string(n), n, add, mul,
                                             static_cast<Elem>(n > 1 ? 1 : 0));
  }

  inline ElemSet idempotents(RingTable const& R) {
    ElemSet out;
    for (Elem e = 0; e < R.size(); ++e) {
      if (R.mul(e, e) == e) {
        out.push_back(e);
      }
    }
    return out;
  }

  inline ElemSet right_multiples(RingTable const& R, Elem a) {
    std::set<Elem> s;
    for (Elem r = 0; r < R.size(); ++r) {
      s.insert(R.mul(a, r));
    }
    return {s.begin(), s.end()};
  }

  // Every ring element e, not just the idempotent list.
  inline std::optional<Elem> idempotent_generator(RingTable const& R, ElemSet const& ideal) {
    for (Elem e = 0; e < R.size(); ++e) {
      if (R.mul(e, e) == e && right_multiples(R, e) == ideal) {
        return e;
      }
    }
    return std::nullopt;
  }

  inline ElemSet annihilator(ModuleTable const& M, ElemSet const& xs) {
    ElemSet out;
    for (Elem a = 0; a < M.ring().size(); ++a) {
      if (std::all_of(xs.begin(), xs.end(), [&](Elem x) { return M.act(x, a) == M.zero(); })) {
        out.push_back(a);
      }
    }
    return out;
  }

  // All right ideals: start from {0} and keep adjoining single elements,
  // closing under addition and right multiplication each time.
  inline std::vector<ElemSet> right_ideals(RingTable const& R) {
    auto close = [&](std::set<Elem> s) {
      s.insert(R.zero());
      for (bool grew = true; grew;) {
        grew = false;
        std::vector<Elem> const cur(s.begin(), s.end());
        for (Elem a : cur) {
          for (Elem b = 0; b < R.size(); ++b) {
            grew |= s.insert(R.mul(a, b)).second;
          }
          for (Elem b : cur) {
            grew |= s.insert(R.add(a, b)).second;
          }
        }
      }
      return ElemSet(s.begin(), s.end());
    };
    std::set<ElemSet>    found{close({})};
    std::vector<ElemSet> todo{*found.begin()};
    while (!todo.empty()) {
      auto const I = todo.back();
      todo.pop_back();
      for (Elem a = 0; a < R.size(); ++a) {
        std::set<Elem> s(I.begin(), I.end());
        s.insert(a);
        auto J = close(std::move(s));
        if (found.insert(J).second) {
          todo.push_back(std::move(J));
        }
      }
    }
    return {found.begin(), found.end()};
  }

  // sigma^k(a) by applying the map k times.
  inline Elem iterate(Endomorphism const& s, long k, Elem a) {
    for (long i = 0; i < k; ++i) {
      a = s.map()[a];
    }
    return a;
  }

  // (m f)_k = sum_{i+j=k} m_i sigma^i(f_j), untrimmed, length |m|+|f|-1.
  inline std::vector<Elem> action(ModuleTable const&       M,
                                  Endomorphism const&      s,
                                  std::vector<Elem> const& m,
                                  std::vector<Elem> const& f) {
    if (m.empty() || f.empty()) {
      return {};
    }
    std::vector<Elem> out(m.size() + f.size() - 1, M.zero());
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < f.size(); ++j) {
        out[i + j] = M.add(out[i + j], M.act(m[i], iterate(s, static_cast<long>(i), f[j])));
      }
    }
    return out;
  }

  inline std::vector<Elem> mul(Endomorphism const&      s,
                               std::vector<Elem> const& f,
                               std::vector<Elem> const& g) {
    auto const& R = s.ring();
    if (f.empty() || g.empty()) {
      return {};
    }
    std::vector<Elem> out(f.size() + g.size() - 1, R.zero());
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = 0; j < g.size(); ++j) {
        out[i + j] = R.add(out[i + j], R.mul(f[i], iterate(s, static_cast<long>(i), g[j])));
      }
    }
    return out;
  }

  inline bool all_zero(std::vector<Elem> const& v, Elem zero = 0) {
    return std::all_of(v.begin(), v.end(), [&](Elem x) { return x == zero; });
  }

  inline std::vector<Elem> trimmed(std::vector<Elem> v, Elem zero = 0) {
    while (!v.empty() && v.back() == zero) {
      v.pop_back();
    }
    return v;
  }

  // Every coefficient vector of length n over size symbols, in odometer
  // order with the first entry fastest.
  inline std::vector<std::vector<Elem>> tuples(std::size_t size, std::size_t n) {
    std::vector<std::vector<Elem>> out;
    std::vector<Elem>              t(n, 0);
    while (true) {
      out.push_back(t);
      std::size_t i = 0;
      while (i < n && ++t[i] == size) {
        t[i++] = 0;
      }
      if (i == n) {
        return out;
      }
    }
  }

  inline std::vector<Elem> random_coeffs(std::mt19937& rng, std::size_t size, std::size_t len) {
    std::uniform_int_distribution<Elem> d(0, static_cast<Elem>(size - 1));
    std::vector<Elem>                   v(len);
    for (auto& x : v) {
      x = d(rng);
    }
    return v;
  }

  inline std::vector<skewlab::Instance> catalog_instances() {
    return skewlab::Catalog().instances();
  }

}  // namespace oracle
