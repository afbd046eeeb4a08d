#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "orecode/errors.hpp"

namespace orecode {

class FieldElement;

/// Immutable description of F_{p^m}: characteristic, extension degree, monic
/// modulus polynomial over F_p and the display symbol for the residue class
/// of x (conventionally "w"). Construction verifies that the modulus is
/// irreducible and that x generates the multiplicative group, and precomputes
/// exp/log tables so that w^k parsing, printing and multiplication are O(1).
///
/// Specs are shared by const pointer; all arithmetic is pure and thread-safe.
class FieldSpec : public std::enable_shared_from_this<FieldSpec> {
  public:
    /// Builds a field. `modulus` holds ascending F_p coefficients of a monic
    /// degree-m polynomial; leave empty to use the shipped default for (p, m).
    /// Throws InvalidParameters if p is not prime or no default exists,
    /// NotPrimitive if x is not a generator of F_q^*.
    static std::shared_ptr<const FieldSpec> create(int p, int m, std::vector<int> modulus = {},
                                                   std::string symbol = "w");

    /// Convenience: factor q = p^m and call create().
    static std::shared_ptr<const FieldSpec> from_order(uint64_t q);

    /// Shipped modulus for (p, m), or empty if none is known.
    static std::vector<int> default_modulus(int p, int m);

    int p() const { return p_; }
    int m() const { return m_; }
    uint32_t order() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }
    const std::string& generator_symbol() const { return symbol_; }

    bool same_as(const FieldSpec& other) const;

    // Element factories.
    FieldElement zero() const;
    FieldElement one() const;
    FieldElement generator() const;  ///< the residue class of x, i.e. w
    FieldElement from_int(int64_t n) const;
    FieldElement from_coeffs(const std::vector<int>& coeffs) const;
    FieldElement from_power_of_w(uint64_t k) const;
    FieldElement element_from_rep(uint32_t rep) const;

    // Arithmetic on packed polynomial-basis representations. rep encodes the
    // coefficient vector (c_0, ..., c_{m-1}) as sum c_i * p^i.
    uint32_t add_rep(uint32_t a, uint32_t b) const;
    uint32_t sub_rep(uint32_t a, uint32_t b) const;
    uint32_t neg_rep(uint32_t a) const;
    uint32_t mul_rep(uint32_t a, uint32_t b) const;
    uint32_t inv_rep(uint32_t a) const;
    uint32_t div_rep(uint32_t a, uint32_t b) const;
    uint32_t pow_rep(uint32_t a, uint64_t e) const;
    uint32_t frobenius_rep(uint32_t a, int t) const;  ///< a^{p^t}, 0 <= t < m
    uint32_t exp_of(uint64_t k) const { return exp_[k % (q_ - 1)]; }
    int log_of(uint32_t rep) const;  ///< k with w^k = rep; throws on zero

    std::vector<int> coeffs_of(uint32_t rep) const;

    /// Field literal syntax: `0`, decimal integers (n times 1), `w`, `w^K`.
    FieldElement parse_literal(const std::string& text) const;
    /// Canonical printing: zero as "0", prime-subfield values as decimal,
    /// anything else as "w" or "w^K". parse(print(x)) == x.
    std::string to_string(const FieldElement& x) const;

  private:
    FieldSpec() = default;

    uint32_t mul_raw(uint32_t a, uint32_t b) const;  // table-free schoolbook product

    int p_ = 0;
    int m_ = 0;
    uint32_t q_ = 0;
    std::vector<int> modulus_;
    std::string symbol_;
    std::vector<uint32_t> pow_p_;   // pow_p_[i] = p^i, i <= m
    std::vector<uint32_t> exp_;     // exp_[k] = rep of w^k, size q-1
    std::vector<int32_t> log_;      // log_[rep] = k, log_[0] = -1
};

using FieldSpecPtr = std::shared_ptr<const FieldSpec>;

/// One element of F_{p^m}, stored in polynomial basis. Value semantics;
/// mixing elements of different specs throws SpecMismatch.
class FieldElement {
  public:
    FieldElement() = default;
    FieldElement(FieldSpecPtr spec, uint32_t rep) : spec_(std::move(spec)), rep_(rep) {}

    const FieldSpecPtr& spec() const { return spec_; }
    uint32_t rep() const { return rep_; }
    bool is_zero() const { return rep_ == 0; }
    bool is_one() const { return rep_ == 1; }
    std::vector<int> coeffs() const { return spec_->coeffs_of(rep_); }
    /// True when the element lies in the prime subfield F_p.
    bool in_prime_subfield() const { return rep_ < static_cast<uint32_t>(spec_->p()); }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(uint64_t e) const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    /// k with w^k = *this; throws DivisionByZero on the zero element.
    int as_power_of_w() const;

    std::string str() const { return spec_->to_string(*this); }

  private:
    FieldSpecPtr spec_;
    uint32_t rep_ = 0;
};

/// theta(a) = a^{p^t} applied through the element's spec; t is reduced mod m
/// so composite powers (theta^k) can be requested directly.
FieldElement frobenius(const FieldElement& a, int t);

/// The pair (t, beta) defining theta(a) = a^{p^t} and the inner derivation
/// im(a) = beta * (theta(a) - a). beta = 0 yields the zero derivation.
class DerivationSpec {
  public:
    DerivationSpec() = default;
    DerivationSpec(int t, FieldElement beta);

    int t() const { return t_; }
    const FieldElement& beta() const { return beta_; }
    bool is_zero_derivation() const { return beta_.is_zero(); }

    FieldElement theta(const FieldElement& a) const { return frobenius(a, t_); }
    /// theta composed k times.
    FieldElement theta_iter(const FieldElement& a, int k) const;
    /// Inverse of theta composed k times.
    FieldElement theta_inv_iter(const FieldElement& a, int k) const;
    FieldElement apply(const FieldElement& a) const;  ///< im(a) = beta*(theta(a)-a)

    bool operator==(const DerivationSpec& o) const;
    bool operator!=(const DerivationSpec& o) const { return !(*this == o); }

  private:
    int t_ = 0;
    FieldElement beta_;
};

/// Tr_{p^m/p}(kappa) = sum of kappa^{p^i}, i = 0..m-1. The result lies in the
/// prime subfield.
FieldElement field_trace(const FieldElement& kappa);
/// Same, as an integer in [0, p).
int field_trace_int(const FieldElement& kappa);

namespace detail {
void require_same_spec(const FieldElement& a, const FieldElement& b);
}

}  // namespace orecode
