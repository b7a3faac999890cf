#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mirrorcheck/log_series.hpp"
#include "mirrorcheck/poly.hpp"

namespace mirrorcheck {

/// Element of the Ore algebra Q[q]<D> with D q - q D = q, held in the normal form
/// sum_d q^d P_d(D) (every q to the left of every D). slice(d) is P_d.
///
/// Normal form makes composition a one-liner: D^k q^b = q^b (D + b)^k, so
/// (q^a A(D)) (q^b B(D)) = q^(a+b) A(D + b) B(D).
class diff_op {
public:
    diff_op() = default;
    explicit diff_op(std::vector<dpoly> slices);

    static diff_op scalar_op(const scalar &c);
    static diff_op identity() { return scalar_op(1); }
    /// The Euler operator D.
    static diff_op euler();
    /// Multiplication by q.
    static diff_op q();
    /// q^d P(D).
    static diff_op slice_op(int d, dpoly p);
    /// sum_k c_k(q) D^k; already normal since the coefficients sit on the left.
    static diff_op from_coefficients(const std::vector<qpoly> &coeffs);

    bool is_zero() const { return slices_.empty(); }
    /// Highest q power present; -1 for the zero operator.
    int q_degree() const { return static_cast<int>(slices_.size()) - 1; }
    /// Highest D power present; -1 for the zero operator.
    int order() const;
    dpoly slice(int d) const;
    const std::vector<dpoly> &slices() const { return slices_; }
    scalar coeff(int d, int k) const { return slice(d)[k]; }
    /// c_k(q), the coefficient of D^k in the collected form, for k = 0..order().
    std::vector<qpoly> coefficients() const;

    diff_op &operator+=(const diff_op &rhs);
    diff_op &operator-=(const diff_op &rhs);
    diff_op &operator*=(const scalar &c);

    friend diff_op operator+(diff_op a, const diff_op &b) { return a += b; }
    friend diff_op operator-(diff_op a, const diff_op &b) { return a -= b; }
    friend diff_op operator*(diff_op a, const scalar &c) { return a *= c; }
    friend diff_op operator*(const scalar &c, diff_op a) { return a *= c; }
    /// Composition a o b.
    friend diff_op operator*(const diff_op &a, const diff_op &b);
    /// Left multiplication by a polynomial in q.
    friend diff_op operator*(const qpoly &c, const diff_op &a);
    friend bool operator==(const diff_op &a, const diff_op &b) = default;

    /// "c * q^d * D^k" terms ordered by d then descending k, e.g. "3 * q^0 * D^4 - 17 * q^1 * D^0".
    std::string render_monomial() const;
    /// "(c_k(q))*D^k" terms in descending k.
    std::string render_collected() const;

private:
    void trim();

    std::vector<dpoly> slices_;
};

/// Applies the operator to a log series; the result keeps the input's order.
/// Requires f.order() >= a.q_degree().
log_series apply(const diff_op &a, const log_series &f);

/// sum_d q^d P_d(D) prod_{m=1..d} (D + m)^exponent.
diff_op hyperplane_twist(const diff_op &a, int exponent = 3);

/// R with L o R = a for a q-free left factor L. Slice d uses L o q^d = q^d L(D + d),
/// so R_d = A_d / L(D + d). Throws inexact_error naming the first slice with a remainder.
diff_op left_divide_exact(const diff_op &a, const dpoly &left_factor);

/// Integer coefficients with content 1; the top D coefficient of the lowest
/// nonzero q-slice is positive. Throws precondition_error on the zero operator.
diff_op normalize_primitive(const diff_op &a);

/// The scalar s with a = s * b, if one exists (b must be nonzero).
std::optional<scalar> proportionality_factor(const diff_op &a, const diff_op &b);

struct pseudo_division {
    /// m in lc(b)^m a = quotient o b + remainder.
    int multiplier_power = 0;
    /// lc(b), the leading coefficient of b in its collected form.
    qpoly multiplier;
    diff_op quotient;
    diff_op remainder;
};

/// Right pseudo-division by b over Q[q]<D>: lc(b)^m a = Q o b + R with order(R) < order(b).
/// Needs no rational-function coefficients; R = 0 exactly when b is a right factor of a
/// over Q(q)<D>.
pseudo_division right_pseudo_divide(const diff_op &a, const diff_op &b);

} // namespace mirrorcheck
