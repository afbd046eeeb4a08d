#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orecode/matrix.hpp"
#include "orecode/rqs.hpp"
#include "orecode/skewpoly.hpp"

namespace orecode {

/// A skew-cyclic code of length n over F_q: the left submodule generated by a
/// right divisor g of x^n - 1 in F_q[x; theta, im].
///
/// The generator is kept exactly as supplied: scaling g by a unit preserves
/// the code and the left cofactor h (h*g = x^n-1) but generally destroys the
/// right cofactor h' (g*h' = x^n-1), and the worked factorizations this
/// artifact reproduces are stated for non-monic generators. A monic canonical
/// generator is derived separately for dimension and matrix purposes.
class ThetaCyclicCode {
  public:
    /// Verifies both factorizations x^n-1 = h*g = g*h' and populates the code.
    /// Throws NotAFactor if g does not right-divide x^n-1 (or no right
    /// cofactor exists), NotACode for the degenerate g ~ x^n - 1.
    static ThetaCyclicCode build(const SkewPoly& g, int n);

    int n() const { return n_; }
    int k() const { return n_ - g_.degree(); }
    int r() const { return g_.degree(); }
    const SkewRing& ring() const { return g_.ring(); }

    const SkewPoly& g() const { return g_; }                ///< as supplied
    const SkewPoly& g_monic() const { return g_monic_; }    ///< canonical generator
    const SkewPoly& h() const { return h_; }                ///< h * g = x^n - 1
    const SkewPoly& h_prime() const { return h_prime_; }    ///< g * h' = x^n - 1

    /// k x n matrix with row j = T^j applied to the padded coefficient vector
    /// of the monic generator; rank k, every row right-divisible by g.
    MatrixOverFq generator_matrix() const;

    /// (n-k) x n basis of the dual code, computed as the kernel of the
    /// generator matrix (the authoritative construction).
    MatrixOverFq parity_basis() const;

    /// Alternative dual basis: stack T^j(h') for j = 0..n-1 and select the
    /// lexicographically first maximal independent column set. Used as an
    /// independent cross-check of parity_basis().
    MatrixOverFq parity_via_cofactor_columns() const;

    /// True iff word (length n) lies in the code, decided by c(x)*h'(x) = 0
    /// in the quotient by <x^n - 1>.
    bool membership(const std::vector<FieldElement>& word) const;
    /// Rank-based membership oracle against the generator matrix.
    bool membership_by_rank(const std::vector<FieldElement>& word) const;

    /// Dual containment C_perp <= C via the cofactor condition: h'h' is
    /// right-divisible by x^n - 1.
    bool dual_containing() const;
    /// Independent rank-based check: every parity row is a codeword.
    bool dual_containing_by_rank() const;

  private:
    ThetaCyclicCode() = default;

    int n_ = 0;
    SkewPoly g_, g_monic_, h_, h_prime_;
};

/// A (gamma, delta)-cyclic code over R_{q,s}: the direct sum of s+1 component
/// codes glued by the idempotents, C = zeta_0 C_0 + ... + zeta_s C_s.
class GammaCyclicCode {
  public:
    /// Builds every component; throws NotAFactor mentioning the failing
    /// component index.
    static GammaCyclicCode build(RqsSpecPtr rqs, int n, const std::vector<SkewPoly>& generators);

    const RqsSpecPtr& rqs() const { return rqs_; }
    int n() const { return n_; }
    int s() const { return rqs_->s(); }
    const std::vector<ThetaCyclicCode>& components() const { return components_; }

    int total_dimension() const;  ///< sum of component dimensions
    /// |C| = q^{(s+1)n - sum deg g_i}, as "q^K" and as an exact decimal.
    std::string cardinality_power() const;
    std::string cardinality_decimal() const;

    bool dual_containing(int* failing_component = nullptr) const;

    /// Assembles the ring codeword sum zeta_i * c_i from per-component words.
    std::vector<RqsElement> assemble(const std::vector<std::vector<FieldElement>>& parts) const;
    /// Componentwise membership of a ring word.
    bool contains(const std::vector<RqsElement>& word) const;

  private:
    GammaCyclicCode() = default;

    RqsSpecPtr rqs_;
    int n_ = 0;
    std::vector<ThetaCyclicCode> components_;
};

/// Monic minimal-degree generator of the T-closure of the span of `words`.
/// Closes the span under the pseudo-linear transform (capped at n rounds),
/// row-reduces with high-degree pivots, and verifies <g> equals the closure.
/// Throws ZeroCode on a trivial span.
SkewPoly extract_generator(const SkewRing& ring, int n,
                           const std::vector<std::vector<FieldElement>>& words);

struct DivisorEnumeration {
    std::vector<SkewPoly> divisors;  ///< canonical (degree, coefficient-counter) order
    uint64_t candidates_tested = 0;
};

/// All monic g with 1 <= deg g <= max_deg right-dividing x^n - 1, optionally
/// filtered to dual-containing codes (rank-based check, which is defined even
/// when the monic scaling has no right cofactor). max_deg is clamped to n;
/// q^max_deg must stay within `budget` candidates.
DivisorEnumeration enumerate_right_divisors(const SkewRing& ring, int n, int max_deg,
                                            bool require_dual_containing,
                                            uint64_t budget = 10000000);

}  // namespace orecode
