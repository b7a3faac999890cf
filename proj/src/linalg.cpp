#include "mirrorcheck/linalg.hpp"

#include <algorithm>
#include <utility>

#include "mirrorcheck/errors.hpp"

namespace mirrorcheck {

matrix::matrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size())
{
    data_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw precondition_error("ragged matrix literal");
        }
        for (long x : row) {
            data_.emplace_back(x);
        }
    }
}

matrix matrix::identity(std::size_t n)
{
    matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

bool matrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const scalar &x) { return x == 0; });
}

matrix matrix::transposed() const
{
    matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

matrix &matrix::operator+=(const matrix &rhs)
{
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] += rhs.data_[i];
    }
    return *this;
}

matrix &matrix::operator-=(const matrix &rhs)
{
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] -= rhs.data_[i];
    }
    return *this;
}

matrix &matrix::operator*=(const scalar &c)
{
    for (auto &x : data_) {
        x *= c;
    }
    return *this;
}

matrix operator*(const matrix &a, const matrix &b)
{
    if (a.cols_ != b.rows_) {
        throw precondition_error("matrix product: shape mismatch");
    }
    matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const scalar &aik = a(i, k);
            if (aik == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols_; ++j) {
                r(i, j) += aik * b(k, j);
            }
        }
    }
    return r;
}

vector_q operator*(const matrix &a, const vector_q &x)
{
    if (a.cols_ != x.size()) {
        throw precondition_error("matrix-vector product: shape mismatch");
    }
    vector_q r(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a(i, k) != 0) {
                r[i] += a(i, k) * x[k];
            }
        }
    }
    return r;
}

echelon_form rref(matrix m)
{
    echelon_form out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m(pivot, col) == 0) {
            ++pivot;
        }
        if (pivot == m.rows()) {
            continue;
        }
        if (pivot != row) {
            for (std::size_t c = 0; c < m.cols(); ++c) {
                std::swap(m(pivot, c), m(row, c));
            }
        }
        const scalar inv = 1 / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) {
            m(row, c) *= inv;
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == 0) {
                continue;
            }
            const scalar f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) {
                if (m(row, c) != 0) {
                    m(r, c) -= f * m(row, c);
                }
            }
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

std::vector<vector_q> nullspace(const matrix &a)
{
    const echelon_form e = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : e.pivots) {
        is_pivot[p] = true;
    }
    std::vector<vector_q> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) {
            continue;
        }
        vector_q v(a.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < e.rank(); ++i) {
            v[e.pivots[i]] = -e.reduced(i, free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

linear_solution solve_linear(const matrix &a, const vector_q &b)
{
    if (a.rows() != b.size()) {
        throw precondition_error("solve_linear: shape mismatch");
    }
    matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            aug(r, c) = a(r, c);
        }
        aug(r, a.cols()) = b[r];
    }
    const echelon_form e = rref(std::move(aug));
    linear_solution out;
    out.values.assign(a.cols(), std::nullopt);
    out.consistent = e.pivots.empty() || e.pivots.back() < a.cols();
    out.rank = out.consistent ? e.rank() : e.rank() - 1;
    if (!out.consistent) {
        return out;
    }
    for (std::size_t i = 0; i < e.rank(); ++i) {
        const std::size_t p = e.pivots[i];
        bool determined = true;
        for (std::size_t c = p + 1; c < a.cols(); ++c) {
            if (e.reduced(i, c) != 0) {
                determined = false;
                break;
            }
        }
        if (determined) {
            out.values[p] = e.reduced(i, a.cols());
        }
    }
    return out;
}

vector_q solve_unique(const matrix &a, const vector_q &b)
{
    if (a.rows() != a.cols()) {
        throw precondition_error("solve_unique: matrix is not square");
    }
    const linear_solution s = solve_linear(a, b);
    if (!s.consistent || s.rank != a.cols()) {
        throw precondition_error("solve_unique: singular matrix");
    }
    vector_q x;
    for (const auto &v : s.values) {
        x.push_back(*v);
    }
    return x;
}

matrix inverse(const matrix &a)
{
    const std::size_t n = a.rows();
    if (a.cols() != n) {
        throw precondition_error("inverse: matrix is not square");
    }
    matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            aug(r, c) = a(r, c);
        }
        aug(r, n + r) = 1;
    }
    const echelon_form e = rref(std::move(aug));
    if (e.rank() < n || e.pivots[n - 1] != n - 1) {
        throw precondition_error("inverse: singular matrix");
    }
    matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            inv(r, c) = e.reduced(r, n + c);
        }
    }
    return inv;
}

} // namespace mirrorcheck
