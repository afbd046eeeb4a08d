#pragma once

#include <string>
#include <vector>

#include "orecode/gf.hpp"

namespace orecode {

class RqsElement;

/// The ring R_{q,s} = F_q[v_1..v_s]/<v_i - v_i^2, v_i v_j = 0>, handled in
/// CRT coordinates with respect to the orthogonal idempotents
/// zeta_0 = prod(1 - v_i), zeta_j = v_j. Addition and multiplication are
/// coordinatewise; an element is a unit iff every coordinate is nonzero.
class RqsSpec : public std::enable_shared_from_this<RqsSpec> {
  public:
    static constexpr int kMaxS = 16;

    static std::shared_ptr<const RqsSpec> create(FieldSpecPtr field, int s,
                                                 DerivationSpec derivation);

    const FieldSpecPtr& field() const { return field_; }
    int s() const { return s_; }
    int components() const { return s_ + 1; }
    const DerivationSpec& derivation() const { return derivation_; }

    bool same_as(const RqsSpec& other) const;

    RqsElement zero() const;
    RqsElement one() const;
    RqsElement idempotent(int i) const;  ///< zeta_i
    RqsElement from_crt(std::vector<FieldElement> crt) const;
    /// From v-basis coefficients (a_0 + a_1 v_1 + ... + a_s v_s):
    /// t_0 = a_0 and t_j = a_0 + a_j.
    RqsElement from_v_basis(const std::vector<FieldElement>& a) const;

    /// CRT tuple literal `(t_0, t_1, ..., t_s)` of field literals.
    RqsElement parse_crt_literal(const std::string& text) const;

  private:
    RqsSpec() = default;

    FieldSpecPtr field_;
    int s_ = 0;
    DerivationSpec derivation_;
};

using RqsSpecPtr = std::shared_ptr<const RqsSpec>;

/// Element of R_{q,s} in CRT coordinates (t_0, ..., t_s).
class RqsElement {
  public:
    RqsElement() = default;
    RqsElement(RqsSpecPtr spec, std::vector<FieldElement> crt);

    const RqsSpecPtr& spec() const { return spec_; }
    const std::vector<FieldElement>& crt() const { return crt_; }
    const FieldElement& crt(int i) const { return crt_[i]; }

    /// v-basis coefficients: a_0 = t_0, a_j = t_j - t_0.
    std::vector<FieldElement> v_basis() const;

    bool is_zero() const;
    bool is_unit() const;  ///< all CRT coordinates nonzero

    RqsElement operator+(const RqsElement& o) const;
    RqsElement operator-(const RqsElement& o) const;
    RqsElement operator*(const RqsElement& o) const;
    RqsElement operator-() const;
    bool operator==(const RqsElement& o) const;
    bool operator!=(const RqsElement& o) const { return !(*this == o); }

    std::string str() const;  ///< CRT tuple literal

  private:
    RqsSpecPtr spec_;
    std::vector<FieldElement> crt_;
};

/// gamma(r): coordinatewise Frobenius theta on the CRT coordinates. Ring
/// automorphism of R_{q,s}.
RqsElement gamma(const RqsElement& r);

/// The gamma-derivation used by every code-construction path: the multiplier
/// u has all CRT coordinates equal to beta, so delta(zeta_i a) = zeta_i im(a)
/// with a single component derivation.
RqsElement delta(const RqsElement& r);

/// Literal textbook form with multiplier 1 + v_1 + ... + v_s, whose CRT
/// coordinates are (1, 2, ..., 2). Still a gamma-derivation, but its
/// component derivations differ between coordinate 0 and the rest.
RqsElement delta_literal(const RqsElement& r);

/// Generalized inner form delta_u(r) = u * (gamma(r) - r) for any u.
RqsElement delta_with_multiplier(const RqsElement& r, const RqsElement& u);

/// T_{gamma,delta}(v): out[j] = gamma(v[(j-1) mod n]) + delta(v[j]), the
/// vector shadow of left multiplication by x. Uses the uniform-beta delta.
std::vector<RqsElement> pseudo_linear_apply(const std::vector<RqsElement>& v);

}  // namespace orecode
