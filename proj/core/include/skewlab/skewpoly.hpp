#pragma once

// Arithmetic in R[x;sigma], M[x;sigma], their Laurent versions for
// automorphisms, and skew power series modulo x^(D+1). Multiplication obeys
// x*a = sigma(a)*x, so a module polynomial acts by
//   (m f)_k = sum_{i+j=k} m_i sigma^i(a_j).

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "skewlab/module.hpp"
#include "skewlab/ring.hpp"

namespace skewlab {

  // Maximum degree for enumeration and verification.
  class DegreeBound {
   public:
    explicit DegreeBound(int value);

    int value() const noexcept {
      return _value;
    }
    bool operator==(DegreeBound const&) const = default;

   private:
    int _value;
  };

  // Element of R[x;sigma]. Trailing zero coefficients are stripped; the zero
  // polynomial has no coefficients.
  class SkewPoly {
   public:
    SkewPoly(EndoPtr sigma, std::vector<Elem> coeffs);

    RingTable const& ring() const noexcept {
      return _sigma->ring();
    }
    Endomorphism const& sigma() const noexcept {
      return *_sigma;
    }
    EndoPtr const& sigma_ptr() const noexcept {
      return _sigma;
    }
    std::vector<Elem> const& coeffs() const noexcept {
      return _coeffs;
    }
    // -1 for the zero polynomial.
    int degree() const noexcept {
      return static_cast<int>(_coeffs.size()) - 1;
    }
    bool is_zero() const noexcept {
      return _coeffs.empty();
    }
    Elem coeff(std::size_t i) const noexcept;

    std::string to_string() const;

    bool operator==(SkewPoly const& that) const {
      return *_sigma == *that._sigma && _coeffs == that._coeffs;
    }

   private:
    EndoPtr           _sigma;
    std::vector<Elem> _coeffs;
  };

  // Element of M[x;sigma].
  class SkewModulePoly {
   public:
    SkewModulePoly(ModulePtr module, EndoPtr sigma, std::vector<Elem> coeffs);

    ModuleTable const& module() const noexcept {
      return *_module;
    }
    ModulePtr const& module_ptr() const noexcept {
      return _module;
    }
    Endomorphism const& sigma() const noexcept {
      return *_sigma;
    }
    EndoPtr const& sigma_ptr() const noexcept {
      return _sigma;
    }
    std::vector<Elem> const& coeffs() const noexcept {
      return _coeffs;
    }
    int degree() const noexcept {
      return static_cast<int>(_coeffs.size()) - 1;
    }
    bool is_zero() const noexcept {
      return _coeffs.empty();
    }
    Elem coeff(std::size_t i) const noexcept;

    std::string to_string() const;

    bool operator==(SkewModulePoly const& that) const {
      return *_module == *that._module && *_sigma == *that._sigma
             && _coeffs == that._coeffs;
    }

   private:
    ModulePtr         _module;
    EndoPtr           _sigma;
    std::vector<Elem> _coeffs;
  };

  // Element of R[x,x^-1;sigma]: sum_i coeffs[i] x^(offset+i). Leading and
  // trailing zeros are stripped; zero has offset 0. Requires an automorphism.
  class LaurentPoly {
   public:
    LaurentPoly(EndoPtr sigma, std::vector<Elem> coeffs, long offset = 0);

    SkewPoly const& base() const noexcept {
      return _base;
    }
    long offset() const noexcept {
      return _offset;
    }
    std::vector<Elem> const& coeffs() const noexcept {
      return _base.coeffs();
    }
    std::string to_string() const;

    bool operator==(LaurentPoly const& that) const {
      return _offset == that._offset && _base == that._base;
    }

   private:
    SkewPoly _base;
    long     _offset;
  };

  // Element of M[x,x^-1;sigma].
  class LaurentModulePoly {
   public:
    LaurentModulePoly(ModulePtr module, EndoPtr sigma, std::vector<Elem> coeffs, long offset = 0);

    SkewModulePoly const& base() const noexcept {
      return _base;
    }
    long offset() const noexcept {
      return _offset;
    }
    std::vector<Elem> const& coeffs() const noexcept {
      return _base.coeffs();
    }
    std::string to_string() const;

    bool operator==(LaurentModulePoly const& that) const {
      return _offset == that._offset && _base == that._base;
    }

   private:
    SkewModulePoly _base;
    long           _offset;
  };

  SkewPoly       operator+(SkewPoly const& f, SkewPoly const& g);
  SkewModulePoly operator+(SkewModulePoly const& m, SkewModulePoly const& n);

  // (f g)_k = sum_{i+j=k} f_i sigma^i(g_j).
  SkewPoly ring_mul(SkewPoly const& f, SkewPoly const& g);

  // (m f)_k = sum_{i+j=k} m_i sigma^i(a_j).
  SkewModulePoly module_action(SkewModulePoly const& m, SkewPoly const& f);

  // x^i a = sigma^i(a) x^i for all integers i. Throws UnsupportedOperation
  // unless sigma is an automorphism.
  LaurentPoly       laurent_mul(LaurentPoly const& u, LaurentPoly const& v);
  LaurentModulePoly laurent_action(LaurentModulePoly const& u, LaurentPoly const& v);

  // The module action on coefficient sequences, computed modulo x^(D+1).
  // Inputs longer than D+1 are truncated first; the result has exactly D+1
  // coefficients. This is arithmetic in the quotient M[[x;sigma]]/(x^(D+1)),
  // not full power series semantics.
  std::vector<Elem> truncated_series_action(ModuleTable const&    module,
                                            Endomorphism const&   sigma,
                                            std::span<Elem const> m,
                                            std::span<Elem const> f,
                                            DegreeBound           bound);

  // Ring multiplication in R[[x;sigma]]/(x^(D+1)).
  std::vector<Elem> truncated_series_mul(Endomorphism const&   sigma,
                                         std::span<Elem const> f,
                                         std::span<Elem const> g,
                                         DegreeBound           bound);

  // {0, 1, ..., preperiod + period - 1}: every power sigma^k, k >= 0, equals
  // sigma^j for some j in this list, so conditions linear in g over all of
  // R[x;sigma] reduce to the monomials b x^j.
  std::vector<int> monomial_test_schedule(Endomorphism const& sigma);

  // Parsed polynomial literal such as "2+3x+0x^2" or "1x^-1+4": coefficients
  // start at x^0, or at the lowest exponent when that is negative, with zero
  // filling gaps.
  struct PolyLiteral {
    long              offset = 0;
    std::vector<Elem> coeffs;
  };

  // Terms are "<c>", "<c>x", "<c>x^<e>", and, when bare_x_coeff is given,
  // "x" / "x^<e>" with that coefficient. Exponents must be distinct and
  // non-negative unless allow_negative. Coefficients must be < size.
  // Throws ParseError (file "<literal>", line 1).
  PolyLiteral parse_poly_literal(std::string_view    text,
                                 std::size_t         size,
                                 bool                allow_negative,
                                 std::optional<Elem> bare_x_coeff = std::nullopt);

  // Inverse of parse_poly_literal for normalized sequences: nonzero terms in
  // increasing exponent order, "0" for the zero polynomial.
  std::string format_poly(std::span<Elem const> coeffs, long offset = 0, Elem zero = 0);

}  // namespace skewlab
