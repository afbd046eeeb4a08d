#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orecode/codes.hpp"
#include "orecode/matrix.hpp"

namespace orecode {

/// Parameters [[n_q, k_q, d_q]]_q of a quantum code.
struct QuantumParams {
    int n_q = 0;
    int k_q = 0;
    int d_q = 0;
    uint32_t q = 0;

    /// n + 2 - k - 2d; non-negative for every code (quantum Singleton bound).
    int singleton_slack() const { return n_q + 2 - k_q - 2 * d_q; }
    std::string str() const;
};

/// [[n, 2k-n, d]]_q from a dual-containing classical [n, k, d] code.
QuantumParams quantum_params_from_classical(int n, int k, int d, uint32_t q);

/// [[(s+1)n, 2k-(s+1)n, d_H]]_q from a dual-containing (gamma,delta)-cyclic
/// code; throws NotDualContaining otherwise.
QuantumParams quantum_params_from_gamma(const GammaCyclicCode& c, int d_h);

/// Number of cosets p^{m(k1+k2-n)} as an exact decimal string; requires
/// k1 + k2 >= n.
std::string coset_count(int n, int k1, int k2, int p, int m);

/// A qudit Pauli basis error X(a)Z(b) acting positionwise: `a` is the X part
/// (kappa), `b` the Z part (chi). Weight counts positions where either part
/// is nonzero.
class PauliVector {
  public:
    PauliVector() = default;
    PauliVector(std::vector<FieldElement> a, std::vector<FieldElement> b);

    static PauliVector zero(const FieldSpecPtr& spec, int n);
    /// Literal `[a_1,...,a_n | b_1,...,b_n]` of field literals.
    static PauliVector parse(const FieldSpecPtr& spec, const std::string& text);

    int n() const { return static_cast<int>(a_.size()); }
    const std::vector<FieldElement>& a() const { return a_; }
    const std::vector<FieldElement>& b() const { return b_; }
    int weight() const;
    bool is_zero() const { return weight() == 0; }

    PauliVector operator+(const PauliVector& o) const;
    bool operator==(const PauliVector& o) const;
    bool operator!=(const PauliVector& o) const { return !(*this == o); }

    std::string str() const;

  private:
    std::vector<FieldElement> a_, b_;
};

/// CSS code assembled from the parity matrices H1, H2 of two classical codes
/// with C1_perp <= C2 (witnessed by H2 H1^T = 0). The check matrix is the
/// block matrix [H1 0; 0 H2] over F_q; the alpha-expanded form stacks
/// alpha^i-scaled copies of each block so that syndromes carry full trace
/// information over F_p.
class CssCode {
  public:
    /// Validates H2 H1^T = 0 (NotDualContaining otherwise) and that both
    /// parity matrices have full row rank (InvalidParameters otherwise).
    static CssCode build(MatrixOverFq h1, MatrixOverFq h2);

    const MatrixOverFq& h1() const { return h1_; }
    const MatrixOverFq& h2() const { return h2_; }
    const MatrixOverFq& check_matrix() const { return check_; }
    /// Expanded form with the field generator as alpha; equals check_matrix()
    /// for prime fields.
    const MatrixOverFq& expanded_check() const { return expanded_; }

    int n() const { return h1_.cols(); }
    int rho1() const { return h1_.rows(); }
    int rho2() const { return h2_.rows(); }
    int k1() const { return n() - rho1(); }
    int k2() const { return n() - rho2(); }
    int stabilizer_generators() const { return rho1() + rho2(); }
    /// q^{k1+k2-n}, the dimension of the quantum code.
    std::string size_power() const;
    std::string size_decimal() const;

    /// The alpha-expanded check matrix for any primitive alpha; each block H
    /// becomes m stacked scalar multiples alpha^i H. Throws NotPrimitive.
    MatrixOverFq expand_check_matrix(const FieldElement& alpha) const;

    /// Syndrome of a basis error against the expanded check matrix: one F_p
    /// entry Tr(a.chi - b.kappa) per stabilizer row [a|b]. X-part errors are
    /// seen only by H2 rows and Z-part errors only by H1 rows.
    std::vector<int> syndrome(const PauliVector& e) const;
    /// Same against the unexpanded block matrix (one entry per q-ary row).
    std::vector<int> syndrome_unexpanded(const PauliVector& e) const;
    /// q-ary symplectic syndrome a.chi - b.kappa per unexpanded row; zero iff
    /// the expanded F_p syndrome is zero.
    std::vector<FieldElement> symplectic_syndrome(const PauliVector& e) const;

    /// Builds the lookup table for all basis errors of weight <= t, keyed by
    /// expanded syndrome. Skipped (returns false) when the entry count
    /// exceeds `budget`; decode then degrades to per-block classical
    /// decoding. First-written entries win, so miscorrections of
    /// beyond-capability errors are deterministic.
    bool build_syndrome_table(int t, uint64_t budget = 1000000);
    size_t syndrome_table_size() const { return table_.size(); }
    int syndrome_table_collisions() const { return collisions_; }

    /// Minimal-weight stored error with this syndrome, or nullopt (Unknown).
    std::optional<PauliVector> decode_basis_error(const std::vector<int>& syndrome) const;

  private:
    CssCode() = default;

    MatrixOverFq h1_, h2_, check_, expanded_;
    int expanded_h1_rows_ = 0;  // rows of the expanded H1 block
    std::map<std::vector<int>, PauliVector> table_;
    int table_weight_ = -1;
    int collisions_ = 0;
    // Degraded per-block tables: expanded-syndrome slice -> classical error.
    std::map<std::vector<int>, std::vector<FieldElement>> x_table_;  // keyed by H2 rows
    std::map<std::vector<int>, std::vector<FieldElement>> z_table_;  // keyed by H1 rows
};

/// Materializes the shift and phase operators X(kappa), Z(chi) as dense
/// complex q x q matrices and verifies unitarity, the addition laws
/// X(k)X(k') = X(k+k'), Z(c)Z(c') = Z(c+c') and the commutation phase
/// Z(chi)X(kappa) = omega^{Tr(chi kappa)} X(kappa)Z(chi).
struct OperatorAlgebraReport {
    int p = 0;
    int m = 0;
    double max_residual = 0.0;
    bool ok = false;  ///< max_residual < 1e-10
};

/// p^m <= 16 (dense complex matrices). Throws BudgetExceeded beyond that.
OperatorAlgebraReport verify_operator_algebra(int p, int m);

}  // namespace orecode
