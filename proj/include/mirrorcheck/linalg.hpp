#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mirrorcheck/scalar.hpp"

namespace mirrorcheck {

using vector_q = std::vector<scalar>;

/// Dense row-major matrix over Q.
class matrix {
public:
    matrix() = default;
    matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    matrix(std::initializer_list<std::initializer_list<long>> rows);

    static matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    scalar &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const scalar &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    matrix transposed() const;

    matrix &operator+=(const matrix &rhs);
    matrix &operator-=(const matrix &rhs);
    matrix &operator*=(const scalar &c);
    friend matrix operator+(matrix a, const matrix &b) { return a += b; }
    friend matrix operator-(matrix a, const matrix &b) { return a -= b; }
    friend matrix operator*(matrix a, const scalar &c) { return a *= c; }
    friend matrix operator*(const scalar &c, matrix a) { return a *= c; }
    friend matrix operator*(const matrix &a, const matrix &b);
    friend vector_q operator*(const matrix &a, const vector_q &x);
    friend bool operator==(const matrix &a, const matrix &b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<scalar> data_;
};

struct echelon_form {
    matrix reduced;
    /// pivots[i] is the pivot column of row i, for i < rank.
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form by Gauss-Jordan elimination, exact.
echelon_form rref(matrix m);

/// Basis of {x : A x = 0}; one vector per free column, with a 1 in that column.
std::vector<vector_q> nullspace(const matrix &a);

/// Solution of A x = b for invertible square A; throws precondition_error if singular.
vector_q solve_unique(const matrix &a, const vector_q &b);
matrix inverse(const matrix &a);

struct linear_solution {
    bool consistent = false;
    /// The value of each unknown that the system pins down uniquely; nullopt if free.
    std::vector<std::optional<scalar>> values;
    std::size_t rank = 0;
};

/// Solves A x = b, reporting per unknown whether it is determined.
/// x_j is determined iff e_j lies in the row space of A.
linear_solution solve_linear(const matrix &a, const vector_q &b);

} // namespace mirrorcheck
