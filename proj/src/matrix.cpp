#include "orecode/matrix.hpp"

#include <sstream>

namespace orecode {

MatrixOverFq::MatrixOverFq(FieldSpecPtr spec, int rows, int cols)
    : spec_(std::move(spec)), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw InvalidParameters("matrix dimensions must be non-negative");
    data_.assign(static_cast<size_t>(rows) * cols, 0);
}

MatrixOverFq MatrixOverFq::identity(const FieldSpecPtr& spec, int n) {
    MatrixOverFq m(spec, n, n);
    for (int i = 0; i < n; ++i) m.set_rep(i, i, 1);
    return m;
}

MatrixOverFq MatrixOverFq::from_rows(const FieldSpecPtr& spec,
                                     const std::vector<std::vector<FieldElement>>& rows) {
    if (rows.empty()) return MatrixOverFq(spec, 0, 0);
    MatrixOverFq m(spec, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows[0].size())
            throw DimensionMismatch("ragged row list");
        for (size_t c = 0; c < rows[r].size(); ++c) {
            if (!rows[r][c].spec()->same_as(*spec)) throw SpecMismatch("entry from wrong field");
            m.set_rep(static_cast<int>(r), static_cast<int>(c), rows[r][c].rep());
        }
    }
    return m;
}

FieldElement MatrixOverFq::at(int r, int c) const {
    return spec_->element_from_rep(rep_at(r, c));
}

void MatrixOverFq::set(int r, int c, const FieldElement& v) {
    if (!v.spec()->same_as(*spec_)) throw SpecMismatch("entry from wrong field");
    set_rep(r, c, v.rep());
}

std::vector<FieldElement> MatrixOverFq::row(int r) const {
    std::vector<FieldElement> out;
    out.reserve(cols_);
    for (int c = 0; c < cols_; ++c) out.push_back(at(r, c));
    return out;
}

void MatrixOverFq::append_row(const std::vector<FieldElement>& row) {
    if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(row.size());
    if (static_cast<int>(row.size()) != cols_) throw DimensionMismatch("row length mismatch");
    for (const auto& v : row) data_.push_back(v.rep());
    ++rows_;
}

MatrixOverFq MatrixOverFq::transpose() const {
    MatrixOverFq m(spec_, cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m.set_rep(c, r, rep_at(r, c));
    return m;
}

MatrixOverFq MatrixOverFq::operator*(const MatrixOverFq& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
    MatrixOverFq m(spec_, rows_, o.cols_);
    for (int r = 0; r < rows_; ++r) {
        for (int k = 0; k < cols_; ++k) {
            uint32_t a = rep_at(r, k);
            if (!a) continue;
            for (int c = 0; c < o.cols_; ++c) {
                uint32_t b = o.rep_at(k, c);
                if (!b) continue;
                m.set_rep(r, c, spec_->add_rep(m.rep_at(r, c), spec_->mul_rep(a, b)));
            }
        }
    }
    return m;
}

bool MatrixOverFq::operator==(const MatrixOverFq& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool MatrixOverFq::is_zero() const {
    for (uint32_t v : data_)
        if (v) return false;
    return true;
}

MatrixOverFq MatrixOverFq::stack(const MatrixOverFq& top, const MatrixOverFq& bottom) {
    if (top.empty()) return bottom;
    if (bottom.empty()) return top;
    if (top.cols_ != bottom.cols_) throw DimensionMismatch("stack column mismatch");
    MatrixOverFq m(top.spec_, top.rows_ + bottom.rows_, top.cols_);
    m.data_ = top.data_;
    m.data_.insert(m.data_.end(), bottom.data_.begin(), bottom.data_.end());
    return m;
}

MatrixOverFq MatrixOverFq::rref(std::vector<int>* pivot_cols) const {
    MatrixOverFq m = *this;
    const FieldSpec& F = *spec_;
    if (pivot_cols) pivot_cols->clear();
    int lead = 0;
    for (int c = 0; c < cols_ && lead < rows_; ++c) {
        int pivot = -1;
        for (int r = lead; r < rows_; ++r) {
            if (m.rep_at(r, c)) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != lead)
            for (int j = 0; j < cols_; ++j) std::swap(m.data_[static_cast<size_t>(pivot) * cols_ + j],
                                                      m.data_[static_cast<size_t>(lead) * cols_ + j]);
        uint32_t inv = F.inv_rep(m.rep_at(lead, c));
        for (int j = c; j < cols_; ++j)
            m.set_rep(lead, j, F.mul_rep(inv, m.rep_at(lead, j)));
        for (int r = 0; r < rows_; ++r) {
            if (r == lead) continue;
            uint32_t f = m.rep_at(r, c);
            if (!f) continue;
            for (int j = c; j < cols_; ++j)
                m.set_rep(r, j, F.sub_rep(m.rep_at(r, j), F.mul_rep(f, m.rep_at(lead, j))));
        }
        if (pivot_cols) pivot_cols->push_back(c);
        ++lead;
    }
    return m;
}

int MatrixOverFq::rank() const {
    std::vector<int> pivots;
    rref(&pivots);
    return static_cast<int>(pivots.size());
}

MatrixOverFq MatrixOverFq::kernel_basis() const {
    std::vector<int> pivots;
    MatrixOverFq r = rref(&pivots);
    const FieldSpec& F = *spec_;
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;
    MatrixOverFq out(spec_, cols_ - static_cast<int>(pivots.size()), cols_);
    int row_idx = 0;
    for (int free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[free_col]) continue;
        out.set_rep(row_idx, free_col, 1);
        for (size_t i = 0; i < pivots.size(); ++i)
            out.set_rep(row_idx, pivots[i], F.neg_rep(r.rep_at(static_cast<int>(i), free_col)));
        ++row_idx;
    }
    return out;
}

bool MatrixOverFq::row_space_contains(const std::vector<FieldElement>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw DimensionMismatch("vector length mismatch");
    MatrixOverFq ext = *this;
    ext.append_row(v);
    return ext.rank() == rank();
}

bool MatrixOverFq::row_spaces_equal(const MatrixOverFq& a, const MatrixOverFq& b) {
    if (a.cols_ != b.cols_) return false;
    int ra = a.rank(), rb = b.rank();
    if (ra != rb) return false;
    return stack(a, b).rank() == ra;
}

std::string MatrixOverFq::str() const {
    std::ostringstream out;
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) {
            if (c) out << " ";
            out << at(r, c).str();
        }
        out << "\n";
    }
    return out.str();
}

FieldElement dot(const std::vector<FieldElement>& a, const std::vector<FieldElement>& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot product length mismatch");
    if (a.empty()) throw InvalidParameters("dot product of empty vectors");
    FieldElement acc = a[0].spec()->zero();
    for (size_t i = 0; i < a.size(); ++i) acc = acc + a[i] * b[i];
    return acc;
}

}  // namespace orecode
