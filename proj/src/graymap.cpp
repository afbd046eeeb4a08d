#include "orecode/graymap.hpp"

namespace orecode {

GrayMatrix GrayMatrix::create(MatrixOverFq g) {
    if (g.rows() != g.cols() || g.rows() < 1)
        throw DimensionMismatch("Gray matrix must be square and non-empty");
    MatrixOverFq prod = g * g.transpose();
    FieldElement c = prod.at(0, 0);
    if (c.is_zero()) throw InvalidParameters("G*G^T has zero diagonal, not a valid Gray matrix");
    for (int r = 0; r < prod.rows(); ++r) {
        for (int col = 0; col < prod.cols(); ++col) {
            FieldElement expected = (r == col) ? c : g.spec()->zero();
            if (prod.at(r, col) != expected)
                throw InvalidParameters("G*G^T is not a scalar multiple of the identity");
        }
    }
    if (g.rank() != g.rows()) throw InvalidParameters("Gray matrix must be invertible");
    GrayMatrix gm;
    gm.g_ = std::move(g);
    gm.c_g_ = c;
    return gm;
}

std::vector<FieldElement> gray_apply(const std::vector<RqsElement>& r, const GrayMatrix& gm) {
    if (r.empty()) throw InvalidParameters("gray_apply needs n >= 1");
    const int block = gm.dim();
    if (r[0].spec()->components() != block)
        throw DimensionMismatch("Gray matrix dimension must equal s+1");
    const FieldSpec& F = *gm.matrix().spec();
    std::vector<FieldElement> out;
    out.reserve(r.size() * block);
    for (const auto& coord : r) {
        for (int c = 0; c < block; ++c) {
            uint32_t acc = 0;
            for (int i = 0; i < block; ++i)
                acc = F.add_rep(acc, F.mul_rep(coord.crt(i).rep(), gm.matrix().rep_at(i, c)));
            out.push_back(gm.matrix().spec()->element_from_rep(acc));
        }
    }
    return out;
}

namespace {

/// Rows of `component_rows` embedded as zeta_i-coordinates and mapped.
void append_mapped_rows(const GammaCyclicCode& c, const GrayMatrix& gm, int component,
                        const MatrixOverFq& component_rows, MatrixOverFq& out) {
    for (int r = 0; r < component_rows.rows(); ++r) {
        std::vector<std::vector<FieldElement>> parts(
            c.rqs()->components(),
            std::vector<FieldElement>(c.n(), c.rqs()->field()->zero()));
        parts[component] = component_rows.row(r);
        out.append_row(gray_apply(c.assemble(parts), gm));
    }
}

}  // namespace

MatrixOverFq gray_image_code(const GammaCyclicCode& c, const GrayMatrix& gm) {
    if (gm.dim() != c.rqs()->components())
        throw DimensionMismatch("Gray matrix dimension must equal s+1");
    MatrixOverFq out(c.rqs()->field(), 0, 0);
    for (int i = 0; i < c.rqs()->components(); ++i)
        append_mapped_rows(c, gm, i, c.components()[i].generator_matrix(), out);
    if (out.rows() > 0 && out.rank() != c.total_dimension())
        throw InvalidParameters("Gray image lost rank");  // G invertible makes this unreachable
    return out;
}

MatrixOverFq gray_image_dual(const GammaCyclicCode& c, const GrayMatrix& gm) {
    if (gm.dim() != c.rqs()->components())
        throw DimensionMismatch("Gray matrix dimension must equal s+1");
    MatrixOverFq out(c.rqs()->field(), 0, 0);
    for (int i = 0; i < c.rqs()->components(); ++i)
        append_mapped_rows(c, gm, i, c.components()[i].parity_basis(), out);
    return out;
}

bool duality_commutes_check(const GammaCyclicCode& c, const GrayMatrix& gm) {
    MatrixOverFq image = gray_image_code(c, gm);
    MatrixOverFq image_dual = image.kernel_basis();
    MatrixOverFq mapped_dual = gray_image_dual(c, gm);
    if (mapped_dual.rows() == 0 && image_dual.rows() == 0) return true;
    if (mapped_dual.rows() == 0 || image_dual.rows() == 0)
        return mapped_dual.rows() == image_dual.rows();
    return MatrixOverFq::row_spaces_equal(image_dual, mapped_dual);
}

}  // namespace orecode
