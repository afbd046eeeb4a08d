#pragma once

#include "orecode/codes.hpp"
#include "orecode/matrix.hpp"
#include "orecode/rqs.hpp"

namespace orecode {

/// An (s+1) x (s+1) invertible matrix G over F_q with G*G^T a nonzero scalar
/// multiple of the identity. The scalar is recorded as c_G at construction;
/// anything else is rejected.
class GrayMatrix {
  public:
    /// Validates the shape, invertibility and the G*G^T = c*I invariant;
    /// throws InvalidParameters otherwise.
    static GrayMatrix create(MatrixOverFq g);

    const MatrixOverFq& matrix() const { return g_; }
    const FieldElement& scalar() const { return c_g_; }  ///< c_G with G G^T = c_G I
    int dim() const { return g_.rows(); }

  private:
    GrayMatrix() = default;

    MatrixOverFq g_;
    FieldElement c_g_;
};

/// phi(r): block-interleaved Gray image. Output positions
/// [j(s+1), (j+1)(s+1)) hold (crt of r_j) * G. Linear bijection from
/// R_{q,s}^n onto F_q^{(s+1)n}.
std::vector<FieldElement> gray_apply(const std::vector<RqsElement>& r, const GrayMatrix& gm);

/// Generator matrix of phi(C): every component generator row embedded via its
/// idempotent and pushed through phi. sum(k_i) rows, (s+1)n columns, full rank.
MatrixOverFq gray_image_code(const GammaCyclicCode& c, const GrayMatrix& gm);

/// Gray image of the dual: component parity bases embedded and mapped.
MatrixOverFq gray_image_dual(const GammaCyclicCode& c, const GrayMatrix& gm);

/// Checks phi(C)^perp = phi(C^perp) as a row-space equality between the
/// kernel of the image generator and the mapped component duals.
bool duality_commutes_check(const GammaCyclicCode& c, const GrayMatrix& gm);

}  // namespace orecode
