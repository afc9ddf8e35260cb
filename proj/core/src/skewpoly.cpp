#include "skewlab/skewpoly.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "skewlab/error.hpp"

namespace skewlab {

  namespace {

    void strip_trailing(std::vector<Elem>& c, Elem zero) {
      while (!c.empty() && c.back() == zero) {
        c.pop_back();
      }
    }

    // Removes leading zeros, shifting the offset, then trailing zeros.
    long strip_both(std::vector<Elem>& c, long offset, Elem zero) {
      strip_trailing(c, zero);
      auto first = std::find_if(c.begin(), c.end(), [zero](Elem x) { return x != zero; });
      offset += static_cast<long>(first - c.begin());
      c.erase(c.begin(), first);
      return c.empty() ? 0 : offset;
    }

    void require_same(Endomorphism const& a, Endomorphism const& b) {
      if (&a != &b && !(a == b)) {
        throw ContractViolation("operands use different rings or endomorphisms ("
                                + a.name() + " vs " + b.name() + ")");
      }
    }

    void require_module(ModuleTable const& m, Endomorphism const& s) {
      if (&m.ring() != &s.ring() && !(m.ring() == s.ring())) {
        throw ContractViolation("module " + m.name() + " is not over the ring of "
                                + s.name());
      }
    }

    void require_automorphism(Endomorphism const& s) {
      if (!s.is_automorphism()) {
        throw UnsupportedOperation("Laurent arithmetic needs an automorphism; "
                                   + s.name() + " has preperiod "
                                   + std::to_string(s.preperiod()));
      }
    }

    void check_range(std::vector<Elem> const& c, std::size_t n, char const* what) {
      for (Elem x : c) {
        if (x >= n) {
          throw ContractViolation(std::string(what) + " coefficient "
                                  + std::to_string(x) + " out of range");
        }
      }
    }

  }  // namespace

  DegreeBound::DegreeBound(int value) : _value(value) {
    if (value < 0) {
      throw ContractViolation("degree bound must be non-negative, got "
                              + std::to_string(value));
    }
  }

  SkewPoly::SkewPoly(EndoPtr sigma, std::vector<Elem> coeffs)
      : _sigma(std::move(sigma)), _coeffs(std::move(coeffs)) {
    check_range(_coeffs, ring().size(), "ring");
    strip_trailing(_coeffs, ring().zero());
  }

  Elem SkewPoly::coeff(std::size_t i) const noexcept {
    return i < _coeffs.size() ? _coeffs[i] : ring().zero();
  }

  std::string SkewPoly::to_string() const {
    return format_poly(_coeffs, 0, ring().zero());
  }

  SkewModulePoly::SkewModulePoly(ModulePtr module, EndoPtr sigma, std::vector<Elem> coeffs)
      : _module(std::move(module)), _sigma(std::move(sigma)), _coeffs(std::move(coeffs)) {
    require_module(*_module, *_sigma);
    check_range(_coeffs, _module->size(), "module");
    strip_trailing(_coeffs, _module->zero());
  }

  Elem SkewModulePoly::coeff(std::size_t i) const noexcept {
    return i < _coeffs.size() ? _coeffs[i] : _module->zero();
  }

  std::string SkewModulePoly::to_string() const {
    return format_poly(_coeffs, 0, _module->zero());
  }

  LaurentPoly::LaurentPoly(EndoPtr sigma, std::vector<Elem> coeffs, long offset)
      : _base(sigma, {}), _offset(0) {
    require_automorphism(*sigma);
    check_range(coeffs, sigma->ring().size(), "ring");
    _offset = strip_both(coeffs, offset, sigma->ring().zero());
    _base   = SkewPoly(std::move(sigma), std::move(coeffs));
  }

  std::string LaurentPoly::to_string() const {
    return format_poly(coeffs(), _offset, _base.ring().zero());
  }

  LaurentModulePoly::LaurentModulePoly(ModulePtr         module,
                                       EndoPtr           sigma,
                                       std::vector<Elem> coeffs,
                                       long              offset)
      : _base(module, sigma, {}), _offset(0) {
    require_automorphism(*sigma);
    check_range(coeffs, module->size(), "module");
    _offset = strip_both(coeffs, offset, module->zero());
    _base   = SkewModulePoly(std::move(module), std::move(sigma), std::move(coeffs));
  }

  std::string LaurentModulePoly::to_string() const {
    return format_poly(coeffs(), _offset, _base.module().zero());
  }

  SkewPoly operator+(SkewPoly const& f, SkewPoly const& g) {
    require_same(f.sigma(), g.sigma());
    RingTable const&  r = f.ring();
    std::vector<Elem> out(std::max(f.coeffs().size(), g.coeffs().size()), r.zero());
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = r.add(f.coeff(i), g.coeff(i));
    }
    return SkewPoly(f.sigma_ptr(), std::move(out));
  }

  SkewModulePoly operator+(SkewModulePoly const& m, SkewModulePoly const& n) {
    require_same(m.sigma(), n.sigma());
    if (!(m.module() == n.module())) {
      throw ContractViolation("adding polynomials over different modules");
    }
    ModuleTable const& mod = m.module();
    std::vector<Elem>  out(std::max(m.coeffs().size(), n.coeffs().size()), mod.zero());
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = mod.add(m.coeff(i), n.coeff(i));
    }
    return SkewModulePoly(m.module_ptr(), m.sigma_ptr(), std::move(out));
  }

  SkewPoly ring_mul(SkewPoly const& f, SkewPoly const& g) {
    require_same(f.sigma(), g.sigma());
    if (f.is_zero() || g.is_zero()) {
      return SkewPoly(f.sigma_ptr(), {});
    }
    RingTable const&    r = f.ring();
    Endomorphism const& s = f.sigma();
    auto const&         a = f.coeffs();
    auto const&         b = g.coeffs();
    std::vector<Elem>   out(a.size() + b.size() - 1, r.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
      auto const si = s.power_map(static_cast<long long>(i));
      for (std::size_t j = 0; j < b.size(); ++j) {
        out[i + j] = r.add(out[i + j], r.mul(a[i], si[b[j]]));
      }
    }
    return SkewPoly(f.sigma_ptr(), std::move(out));
  }

  SkewModulePoly module_action(SkewModulePoly const& m, SkewPoly const& f) {
    require_same(m.sigma(), f.sigma());
    ModuleTable const&  mod = m.module();
    Endomorphism const& s   = m.sigma();
    if (m.is_zero() || f.is_zero()) {
      return SkewModulePoly(m.module_ptr(), m.sigma_ptr(), {});
    }
    auto const&       mc = m.coeffs();
    auto const&       fc = f.coeffs();
    std::vector<Elem> out(mc.size() + fc.size() - 1, mod.zero());
    for (std::size_t i = 0; i < mc.size(); ++i) {
      auto const si = s.power_map(static_cast<long long>(i));
      for (std::size_t j = 0; j < fc.size(); ++j) {
        out[i + j] = mod.add(out[i + j], mod.act(mc[i], si[fc[j]]));
      }
    }
    return SkewModulePoly(m.module_ptr(), m.sigma_ptr(), std::move(out));
  }

  LaurentPoly laurent_mul(LaurentPoly const& u, LaurentPoly const& v) {
    Endomorphism const& s = u.base().sigma();
    require_same(s, v.base().sigma());
    require_automorphism(s);
    RingTable const& r  = s.ring();
    auto const&      uc = u.coeffs();
    auto const&      vc = v.coeffs();
    if (uc.empty() || vc.empty()) {
      return LaurentPoly(u.base().sigma_ptr(), {});
    }
    std::vector<Elem> out(uc.size() + vc.size() - 1, r.zero());
    for (std::size_t i = 0; i < uc.size(); ++i) {
      auto const si = s.power_map(u.offset() + static_cast<long long>(i));
      for (std::size_t j = 0; j < vc.size(); ++j) {
        out[i + j] = r.add(out[i + j], r.mul(uc[i], si[vc[j]]));
      }
    }
    return LaurentPoly(u.base().sigma_ptr(), std::move(out), u.offset() + v.offset());
  }

  LaurentModulePoly laurent_action(LaurentModulePoly const& u, LaurentPoly const& v) {
    Endomorphism const& s = u.base().sigma();
    require_same(s, v.base().sigma());
    require_automorphism(s);
    ModuleTable const& mod = u.base().module();
    auto const&        uc  = u.coeffs();
    auto const&        vc  = v.coeffs();
    if (uc.empty() || vc.empty()) {
      return LaurentModulePoly(u.base().module_ptr(), u.base().sigma_ptr(), {});
    }
    std::vector<Elem> out(uc.size() + vc.size() - 1, mod.zero());
    for (std::size_t i = 0; i < uc.size(); ++i) {
      auto const si = s.power_map(u.offset() + static_cast<long long>(i));
      for (std::size_t j = 0; j < vc.size(); ++j) {
        out[i + j] = mod.add(out[i + j], mod.act(uc[i], si[vc[j]]));
      }
    }
    return LaurentModulePoly(u.base().module_ptr(),
                             u.base().sigma_ptr(),
                             std::move(out),
                             u.offset() + v.offset());
  }

  std::vector<Elem> truncated_series_action(ModuleTable const&    module,
                                            Endomorphism const&   sigma,
                                            std::span<Elem const> m,
                                            std::span<Elem const> f,
                                            DegreeBound           bound) {
    std::size_t const len = static_cast<std::size_t>(bound.value()) + 1;
    std::vector<Elem> out(len, module.zero());
    for (std::size_t i = 0; i < std::min(len, m.size()); ++i) {
      auto const si = sigma.power_map(static_cast<long long>(i));
      for (std::size_t j = 0; i + j < len && j < f.size(); ++j) {
        out[i + j] = module.add(out[i + j], module.act(m[i], si[f[j]]));
      }
    }
    return out;
  }

  std::vector<Elem> truncated_series_mul(Endomorphism const&   sigma,
                                         std::span<Elem const> f,
                                         std::span<Elem const> g,
                                         DegreeBound           bound) {
    RingTable const&  r   = sigma.ring();
    std::size_t const len = static_cast<std::size_t>(bound.value()) + 1;
    std::vector<Elem> out(len, r.zero());
    for (std::size_t i = 0; i < std::min(len, f.size()); ++i) {
      auto const si = sigma.power_map(static_cast<long long>(i));
      for (std::size_t j = 0; i + j < len && j < g.size(); ++j) {
        out[i + j] = r.add(out[i + j], r.mul(f[i], si[g[j]]));
      }
    }
    return out;
  }

  std::vector<int> monomial_test_schedule(Endomorphism const& sigma) {
    std::vector<int> k(sigma.preperiod() + sigma.period());
    for (std::size_t i = 0; i < k.size(); ++i) {
      k[i] = static_cast<int>(i);
    }
    return k;
  }

  PolyLiteral parse_poly_literal(std::string_view    text,
                                 std::size_t         size,
                                 bool                allow_negative,
                                 std::optional<Elem> bare_x_coeff) {
    std::string const file = "<literal>";
    std::size_t       pos  = 0;
    auto              fail = [&](std::string const& expected) -> ParseError {
      return ParseError(file, 1, pos + 1, expected);
    };
    auto skip_ws = [&] {
      while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) {
        ++pos;
      }
    };
    auto read_int = [&](bool signed_ok, long& out) -> bool {
      std::size_t start = pos;
      if (signed_ok && pos < text.size() && text[pos] == '-') {
        ++pos;
      }
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        ++pos;
      }
      auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, out);
      if (ec != std::errc() || ptr != text.data() + pos) {
        pos = start;
        return false;
      }
      return true;
    };

    std::vector<std::pair<long, Elem>> terms;
    skip_ws();
    if (pos == text.size()) {
      throw fail("polynomial term");
    }
    while (true) {
      skip_ws();
      long coeff    = 0;
      bool has_coef = read_int(false, coeff);
      long exponent = 0;
      skip_ws();
      if (pos < text.size() && text[pos] == 'x') {
        ++pos;
        exponent = 1;
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          std::size_t const at = pos;
          if (!read_int(allow_negative, exponent)) {
            pos = at;
            throw fail(allow_negative ? "integer exponent" : "non-negative exponent");
          }
        }
        if (!has_coef) {
          if (!bare_x_coeff) {
            throw fail("coefficient before x");
          }
          coeff = static_cast<long>(*bare_x_coeff);
        }
      } else if (!has_coef) {
        throw fail("coefficient or x");
      }
      if (coeff < 0 || static_cast<std::size_t>(coeff) >= size) {
        throw fail("coefficient index below " + std::to_string(size));
      }
      for (auto const& t : terms) {
        if (t.first == exponent) {
          throw fail("distinct exponents");
        }
      }
      terms.emplace_back(exponent, static_cast<Elem>(coeff));
      skip_ws();
      if (pos == text.size()) {
        break;
      }
      if (text[pos] != '+') {
        throw fail("'+' or end of literal");
      }
      ++pos;
    }

    PolyLiteral lit;
    auto [lo, hi] = std::minmax_element(
        terms.begin(), terms.end(), [](auto const& a, auto const& b) { return a.first < b.first; });
    lit.offset = std::min(0L, lo->first);
    lit.coeffs.assign(static_cast<std::size_t>(hi->first - lit.offset + 1), 0);
    for (auto const& [e, c] : terms) {
      lit.coeffs[static_cast<std::size_t>(e - lit.offset)] = c;
    }
    return lit;
  }

  std::string format_poly(std::span<Elem const> coeffs, long offset, Elem zero) {
    std::ostringstream out;
    bool               first = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] == zero) {
        continue;
      }
      long const e = offset + static_cast<long>(i);
      out << (first ? "" : "+") << coeffs[i];
      if (e == 1) {
        out << 'x';
      } else if (e != 0) {
        out << "x^" << e;
      }
      first = false;
    }
    return first ? std::to_string(zero) : out.str();
  }

}  // namespace skewlab
