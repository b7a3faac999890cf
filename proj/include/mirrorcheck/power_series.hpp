#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "mirrorcheck/scalar.hpp"

namespace mirrorcheck {

inline constexpr int default_order = 12;

/// Truncated power series in one variable q over the rationals.
///
/// A series of order N knows the coefficients of q^0 .. q^N exactly; everything
/// above q^N is unknown. Binary operations produce the smaller of the two orders.
/// Reading a coefficient above the order throws truncation_error.
class power_series {
public:
    power_series() = default;
    /// The zero series known through q^order.
    explicit power_series(int order);
    /// Coefficients c[0..] padded with zeros up to q^order; extra coefficients are dropped.
    power_series(std::vector<scalar> coeffs, int order);
    power_series(std::initializer_list<long> coeffs, int order);

    static power_series constant(const scalar &c, int order);
    /// The series q.
    static power_series variable(int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const scalar &operator[](int k) const;
    const std::vector<scalar> &coefficients() const { return coeffs_; }
    void set(int k, scalar value);

    /// Index of the first nonzero coefficient, or order() + 1 if all known coefficients vanish.
    int valuation() const;
    bool is_zero() const { return valuation() > order(); }

    power_series truncated(int order) const;

    power_series &operator+=(const power_series &rhs);
    power_series &operator-=(const power_series &rhs);
    power_series &operator*=(const scalar &c);

    friend power_series operator+(power_series a, const power_series &b) { return a += b; }
    friend power_series operator-(power_series a, const power_series &b) { return a -= b; }
    friend power_series operator-(power_series a);
    friend power_series operator*(const power_series &a, const power_series &b);
    friend power_series operator*(power_series a, const scalar &c) { return a *= c; }
    friend power_series operator*(const scalar &c, power_series a) { return a *= c; }

    /// Equality of known coefficients; orders must agree too.
    friend bool operator==(const power_series &a, const power_series &b) = default;

    std::string to_string(char var = 'q') const;

private:
    std::vector<scalar> coeffs_;
};

/// Multiplicative inverse; requires a nonzero constant term.
power_series invert_unit(const power_series &f);
/// exp(f) for f with zero constant term.
power_series exp(const power_series &f);
/// log(f) for f with constant term 1.
power_series log(const power_series &f);
/// f(g(q)); requires g(0) = 0.
power_series compose(const power_series &f, const power_series &g);
/// Compositional inverse of g; requires g(0) = 0 and g'(0) != 0.
power_series revert(const power_series &g);
/// D = q d/dq.
power_series theta(const power_series &f);

} // namespace mirrorcheck
