#pragma once

#include <vector>

#include "orecode/gf.hpp"

namespace orecode {

/// Dense matrix over F_q with exact row-reduction based linear algebra.
/// Entries are stored as packed field representations; the public surface
/// speaks FieldElement.
class MatrixOverFq {
  public:
    MatrixOverFq() = default;
    MatrixOverFq(FieldSpecPtr spec, int rows, int cols);

    static MatrixOverFq identity(const FieldSpecPtr& spec, int n);
    static MatrixOverFq from_rows(const FieldSpecPtr& spec,
                                  const std::vector<std::vector<FieldElement>>& rows);

    const FieldSpecPtr& spec() const { return spec_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    FieldElement at(int r, int c) const;
    void set(int r, int c, const FieldElement& v);
    uint32_t rep_at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }
    void set_rep(int r, int c, uint32_t v) { data_[static_cast<size_t>(r) * cols_ + c] = v; }

    std::vector<FieldElement> row(int r) const;
    void append_row(const std::vector<FieldElement>& row);

    MatrixOverFq transpose() const;
    MatrixOverFq operator*(const MatrixOverFq& o) const;
    bool operator==(const MatrixOverFq& o) const;
    bool operator!=(const MatrixOverFq& o) const { return !(*this == o); }
    bool is_zero() const;

    /// Vertical stack; column counts must agree.
    static MatrixOverFq stack(const MatrixOverFq& top, const MatrixOverFq& bottom);

    /// Reduced row echelon form plus pivot column indices.
    MatrixOverFq rref(std::vector<int>* pivot_cols = nullptr) const;
    int rank() const;

    /// Basis of {v : M v^T = 0} as rows of a (cols - rank) x cols matrix.
    MatrixOverFq kernel_basis() const;

    bool row_space_contains(const std::vector<FieldElement>& v) const;
    static bool row_spaces_equal(const MatrixOverFq& a, const MatrixOverFq& b);

    std::string str() const;

  private:
    FieldSpecPtr spec_;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<uint32_t> data_;
};

FieldElement dot(const std::vector<FieldElement>& a, const std::vector<FieldElement>& b);

}  // namespace orecode
