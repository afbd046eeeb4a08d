#pragma once

#include <string>
#include <vector>

#include "orecode/gf.hpp"

namespace orecode {

/// Ring tag for F_q[x; theta, im]: the coefficient field together with the
/// automorphism power and derivation scalar. Multiplication is twisted by
/// x*b = theta(b)*x + im(b).
struct SkewRing {
    FieldSpecPtr field;
    DerivationSpec derivation;

    bool operator==(const SkewRing& o) const {
        return field && o.field && field->same_as(*o.field) && derivation == o.derivation;
    }
    bool operator!=(const SkewRing& o) const { return !(*this == o); }

    FieldElement theta(const FieldElement& a) const { return derivation.theta(a); }
    FieldElement im(const FieldElement& a) const { return derivation.apply(a); }
};

SkewRing make_skew_ring(const FieldSpecPtr& field, int theta_power, const FieldElement& beta);

/// Polynomial in F_q[x; theta, im], coefficients ascending by degree.
/// Immutable value type; the zero polynomial has an empty coefficient vector
/// and degree kNegInfDegree.
class SkewPoly {
  public:
    static constexpr int kNegInfDegree = -1;

    SkewPoly() = default;
    SkewPoly(SkewRing ring, std::vector<FieldElement> coeffs);

    static SkewPoly zero(const SkewRing& ring);
    static SkewPoly one(const SkewRing& ring);
    static SkewPoly constant(const SkewRing& ring, const FieldElement& c);
    static SkewPoly monomial(const SkewRing& ring, const FieldElement& c, int degree);
    static SkewPoly x_pow_n_minus_1(const SkewRing& ring, int n);

    /// Parses the polynomial grammar
    ///   poly := term ('+' term)* ; term := coeff | coeff '*' 'x' ('^' INT)? | 'x' ('^' INT)?
    /// with field literals for coefficients. '-' is accepted as a term
    /// separator meaning the additive inverse. Whitespace is insignificant.
    static SkewPoly parse(const SkewRing& ring, const std::string& text);

    const SkewRing& ring() const { return ring_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !is_zero() && coeffs_.back().is_one(); }
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }
    FieldElement coeff(int i) const;
    FieldElement leading_coeff() const;

    SkewPoly operator+(const SkewPoly& o) const;
    SkewPoly operator-(const SkewPoly& o) const;
    SkewPoly operator-() const;
    bool operator==(const SkewPoly& o) const;
    bool operator!=(const SkewPoly& o) const { return !(*this == o); }

    /// Left multiplication by a field scalar (coefficientwise; scalars incur
    /// no twist from the left).
    SkewPoly scaled_left(const FieldElement& c) const;
    /// Scales so the leading coefficient is 1.
    SkewPoly monicized() const;

    /// Coefficient vector padded to length n; requires degree < n.
    std::vector<FieldElement> to_vector(int n) const;
    static SkewPoly from_vector(const SkewRing& ring, const std::vector<FieldElement>& v);

    /// Canonical printing: descending degree, '+'-separated, unit
    /// coefficients of nonconstant terms omitted, e.g. "w^2*x + 1".
    std::string str() const;

  private:
    void normalize();

    SkewRing ring_;
    std::vector<FieldElement> coeffs_;
};

/// x * f, one application of the commutation rule per coefficient.
SkewPoly x_times(const SkewPoly& f);

/// Skew product; associative, degree-additive (field coefficients).
SkewPoly skew_mul(const SkewPoly& f, const SkewPoly& g);

/// Full expansion of x^n * r as a polynomial: leading coefficient theta^n(r),
/// constant coefficient im^n(r).
SkewPoly monomial_times_scalar(const SkewRing& ring, int n, const FieldElement& r);

struct DivModResult {
    SkewPoly quotient;
    SkewPoly remainder;
};

/// f = quotient * g + remainder with remainder = 0 or deg remainder < deg g.
/// The pair is unique. Throws ZeroDivisor if g = 0.
DivModResult right_divmod(const SkewPoly& f, const SkewPoly& g);

/// Mirror procedure: f = g * quotient + remainder.
DivModResult left_divmod(const SkewPoly& f, const SkewPoly& g);

bool right_divides(const SkewPoly& g, const SkewPoly& f);

/// Canonical representative of f in the left-module quotient by <x^n - 1>.
SkewPoly reduce_mod_xn_minus_1(const SkewPoly& f, int n);

struct TwoSidedFactors {
    SkewPoly h;        ///< left cofactor:  h * g = x^n - 1
    SkewPoly h_prime;  ///< right cofactor: g * h' = x^n - 1
};

/// Requires both factorizations x^n-1 = h*g = g*h' to exist for g as given;
/// throws NotAFactor otherwise. Both reconstructions are re-verified by
/// skew_mul before returning. Note scaling g by a unit preserves the left
/// factorization but not the right one, so g is used exactly as supplied.
TwoSidedFactors two_sided_factor_check(const SkewPoly& g, int n);

/// True iff f commutes with both ring generators x and w (they generate the
/// whole ring, so this settles centrality).
bool is_central(const SkewPoly& f);

/// T_{theta,im} on coefficient vectors: out[j] = theta(v[(j-1) mod n]) + im(v[j]).
/// This is the vector shadow of left multiplication by x mod x^n - 1.
std::vector<FieldElement> apply_pseudo_linear(const std::vector<FieldElement>& v,
                                              const DerivationSpec& d);

}  // namespace orecode
