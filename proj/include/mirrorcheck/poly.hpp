#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mirrorcheck/errors.hpp"
#include "mirrorcheck/scalar.hpp"

namespace mirrorcheck {

/// Dense univariate polynomial over Q. Coefficients are stored low degree first and
/// kept trimmed, so the zero polynomial has no coefficients and degree -1.
///
/// The tag keeps polynomials in D (the Euler operator) and in q (the coordinate)
/// from being mixed up; both use ordinary commutative arithmetic.
template <typename Tag>
class basic_poly {
public:
    basic_poly() = default;
    basic_poly(std::vector<scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
    basic_poly(std::initializer_list<long> coeffs)
    {
        for (long x : coeffs) {
            c_.emplace_back(x);
        }
        trim();
    }

    static basic_poly constant(const scalar &c) { return basic_poly(std::vector<scalar>{c}); }
    /// The monomial c * X^k.
    static basic_poly monomial(int k, const scalar &c = 1)
    {
        std::vector<scalar> v(static_cast<std::size_t>(k) + 1);
        v.back() = c;
        return basic_poly(std::move(v));
    }
    /// X + a
    static basic_poly linear(const scalar &a) { return basic_poly(std::vector<scalar>{a, 1}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    /// Coefficient of X^k (zero outside the stored range).
    scalar operator[](int k) const
    {
        return k >= 0 && k <= degree() ? c_[static_cast<std::size_t>(k)] : scalar(0);
    }
    const std::vector<scalar> &coefficients() const { return c_; }
    scalar leading() const { return is_zero() ? scalar(0) : c_.back(); }

    basic_poly &operator+=(const basic_poly &rhs)
    {
        if (rhs.c_.size() > c_.size()) {
            c_.resize(rhs.c_.size());
        }
        for (std::size_t k = 0; k < rhs.c_.size(); ++k) {
            c_[k] += rhs.c_[k];
        }
        trim();
        return *this;
    }
    basic_poly &operator-=(const basic_poly &rhs)
    {
        if (rhs.c_.size() > c_.size()) {
            c_.resize(rhs.c_.size());
        }
        for (std::size_t k = 0; k < rhs.c_.size(); ++k) {
            c_[k] -= rhs.c_[k];
        }
        trim();
        return *this;
    }
    basic_poly &operator*=(const scalar &s)
    {
        for (auto &x : c_) {
            x *= s;
        }
        trim();
        return *this;
    }

    friend basic_poly operator+(basic_poly a, const basic_poly &b) { return a += b; }
    friend basic_poly operator-(basic_poly a, const basic_poly &b) { return a -= b; }
    friend basic_poly operator-(basic_poly a) { return a *= scalar(-1); }
    friend basic_poly operator*(basic_poly a, const scalar &s) { return a *= s; }
    friend basic_poly operator*(const scalar &s, basic_poly a) { return a *= s; }
    friend basic_poly operator*(const basic_poly &a, const basic_poly &b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<scalar> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                r[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return basic_poly(std::move(r));
    }
    friend basic_poly &operator*=(basic_poly &a, const basic_poly &b) { return a = a * b; }
    friend bool operator==(const basic_poly &a, const basic_poly &b) = default;

    basic_poly pow(int n) const
    {
        basic_poly r = constant(1);
        for (int i = 0; i < n; ++i) {
            r *= *this;
        }
        return r;
    }

    /// P(X + a), by Horner's scheme.
    basic_poly shifted(const scalar &a) const
    {
        basic_poly r;
        const basic_poly x_plus_a = linear(a);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            r = r * x_plus_a + constant(*it);
        }
        return r;
    }

    scalar eval(const scalar &x) const
    {
        scalar r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            r = r * x + *it;
        }
        return r;
    }

    /// Euclidean division: *this = quotient * d + remainder with deg(remainder) < deg(d).
    std::pair<basic_poly, basic_poly> divmod(const basic_poly &d) const
    {
        if (d.is_zero()) {
            throw precondition_error("polynomial division by zero");
        }
        if (degree() < d.degree()) {
            return {basic_poly(), *this};
        }
        std::vector<scalar> rem = c_;
        std::vector<scalar> quo(static_cast<std::size_t>(degree() - d.degree()) + 1);
        const scalar lead = d.leading();
        for (int k = degree() - d.degree(); k >= 0; --k) {
            const scalar f = rem[static_cast<std::size_t>(k + d.degree())] / lead;
            quo[static_cast<std::size_t>(k)] = f;
            if (f == 0) {
                continue;
            }
            for (int j = 0; j <= d.degree(); ++j) {
                rem[static_cast<std::size_t>(k + j)] -= f * d.c_[static_cast<std::size_t>(j)];
            }
        }
        rem.resize(static_cast<std::size_t>(d.degree()));
        return {basic_poly(std::move(quo)), basic_poly(std::move(rem))};
    }

    /// Renders e.g. "3*D^7 - 9*D^6 + 1"; terms in descending degree.
    std::string to_string(const std::string &var) const
    {
        if (is_zero()) {
            return "0";
        }
        std::ostringstream os;
        bool first = true;
        for (int k = degree(); k >= 0; --k) {
            const scalar &c = c_[static_cast<std::size_t>(k)];
            if (c == 0) {
                continue;
            }
            os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
            const scalar mag = abs(c);
            if (k == 0 || mag != 1) {
                os << mag.get_str();
                if (k > 0) {
                    os << '*';
                }
            }
            if (k == 1) {
                os << var;
            } else if (k > 1) {
                os << var << '^' << k;
            }
            first = false;
        }
        return os.str();
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0) {
            c_.pop_back();
        }
    }

    std::vector<scalar> c_;
};

struct d_tag {};
struct q_tag {};

/// Commutative polynomial in the Euler operator D = q d/dq.
using dpoly = basic_poly<d_tag>;
/// Polynomial in the coordinate q.
using qpoly = basic_poly<q_tag>;

} // namespace mirrorcheck
