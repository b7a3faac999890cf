#include "mirrorcheck/diff_op.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "mirrorcheck/errors.hpp"

namespace mirrorcheck {

diff_op::diff_op(std::vector<dpoly> slices) : slices_(std::move(slices))
{
    trim();
}

diff_op diff_op::scalar_op(const scalar &c)
{
    return diff_op({dpoly::constant(c)});
}

diff_op diff_op::euler()
{
    return diff_op({dpoly::monomial(1)});
}

diff_op diff_op::q()
{
    return diff_op({dpoly(), dpoly::constant(1)});
}

diff_op diff_op::slice_op(int d, dpoly p)
{
    std::vector<dpoly> s(static_cast<std::size_t>(d) + 1);
    s.back() = std::move(p);
    return diff_op(std::move(s));
}

diff_op diff_op::from_coefficients(const std::vector<qpoly> &coeffs)
{
    int qdeg = -1;
    for (const auto &c : coeffs) {
        qdeg = std::max(qdeg, c.degree());
    }
    std::vector<std::vector<scalar>> dense(static_cast<std::size_t>(qdeg + 1),
                                           std::vector<scalar>(coeffs.size()));
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        for (int d = 0; d <= coeffs[k].degree(); ++d) {
            dense[static_cast<std::size_t>(d)][k] = coeffs[k][d];
        }
    }
    std::vector<dpoly> slices;
    for (auto &row : dense) {
        slices.emplace_back(std::move(row));
    }
    return diff_op(std::move(slices));
}

int diff_op::order() const
{
    int k = -1;
    for (const auto &s : slices_) {
        k = std::max(k, s.degree());
    }
    return k;
}

dpoly diff_op::slice(int d) const
{
    return d >= 0 && d <= q_degree() ? slices_[static_cast<std::size_t>(d)] : dpoly();
}

std::vector<qpoly> diff_op::coefficients() const
{
    std::vector<qpoly> out;
    for (int k = 0; k <= order(); ++k) {
        std::vector<scalar> c;
        for (const auto &s : slices_) {
            c.push_back(s[k]);
        }
        out.emplace_back(std::move(c));
    }
    return out;
}

void diff_op::trim()
{
    while (!slices_.empty() && slices_.back().is_zero()) {
        slices_.pop_back();
    }
}

diff_op &diff_op::operator+=(const diff_op &rhs)
{
    if (rhs.slices_.size() > slices_.size()) {
        slices_.resize(rhs.slices_.size());
    }
    for (std::size_t d = 0; d < rhs.slices_.size(); ++d) {
        slices_[d] += rhs.slices_[d];
    }
    trim();
    return *this;
}

diff_op &diff_op::operator-=(const diff_op &rhs)
{
    if (rhs.slices_.size() > slices_.size()) {
        slices_.resize(rhs.slices_.size());
    }
    for (std::size_t d = 0; d < rhs.slices_.size(); ++d) {
        slices_[d] -= rhs.slices_[d];
    }
    trim();
    return *this;
}

diff_op &diff_op::operator*=(const scalar &c)
{
    for (auto &s : slices_) {
        s *= c;
    }
    trim();
    return *this;
}

diff_op operator*(const diff_op &a, const diff_op &b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<dpoly> out(a.slices_.size() + b.slices_.size() - 1);
    for (std::size_t j = 0; j < b.slices_.size(); ++j) {
        if (b.slices_[j].is_zero()) {
            continue;
        }
        for (std::size_t i = 0; i < a.slices_.size(); ++i) {
            if (a.slices_[i].is_zero()) {
                continue;
            }
            out[i + j] += a.slices_[i].shifted(static_cast<long>(j)) * b.slices_[j];
        }
    }
    return diff_op(std::move(out));
}

diff_op operator*(const qpoly &c, const diff_op &a)
{
    diff_op r;
    for (int e = 0; e <= c.degree(); ++e) {
        if (c[e] == 0) {
            continue;
        }
        std::vector<dpoly> shifted(static_cast<std::size_t>(e));
        for (const auto &s : a.slices_) {
            shifted.push_back(s * c[e]);
        }
        r += diff_op(std::move(shifted));
    }
    return r;
}

std::string diff_op::render_monomial() const
{
    std::ostringstream os;
    bool first = true;
    for (int d = 0; d <= q_degree(); ++d) {
        const dpoly &s = slices_[static_cast<std::size_t>(d)];
        for (int k = s.degree(); k >= 0; --k) {
            if (s[k] == 0) {
                continue;
            }
            const scalar &c = s[k];
            os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ")) << to_pretty(abs(c)) << " * q^" << d
               << " * D^" << k;
            first = false;
        }
    }
    return first ? "0" : os.str();
}

std::string diff_op::render_collected() const
{
    std::ostringstream os;
    bool first = true;
    const auto coeffs = coefficients();
    for (int k = order(); k >= 0; --k) {
        const qpoly &c = coeffs[static_cast<std::size_t>(k)];
        if (c.is_zero()) {
            continue;
        }
        os << (first ? "" : " + ") << '(' << c.to_string("q") << ')';
        if (k > 0) {
            os << "*D^" << k;
        }
        first = false;
    }
    return first ? "0" : os.str();
}

log_series apply(const diff_op &a, const log_series &f)
{
    if (f.order() < a.q_degree()) {
        throw precondition_error("apply: series order " + std::to_string(f.order())
                                 + " is below the operator's q-degree " + std::to_string(a.q_degree()));
    }
    const int n = f.order();
    std::vector<log_series> powers{f};
    for (int k = 1; k <= a.order(); ++k) {
        powers.push_back(theta_derive(powers.back()));
    }
    log_series result = log_series::zero(n, f.log_degree());
    for (int d = 0; d <= a.q_degree(); ++d) {
        const dpoly &s = a.slices()[static_cast<std::size_t>(d)];
        if (s.is_zero()) {
            continue;
        }
        log_series slice_value = log_series::zero(n, f.log_degree());
        for (int k = 0; k <= s.degree(); ++k) {
            if (s[k] != 0) {
                slice_value += powers[static_cast<std::size_t>(k)] * s[k];
            }
        }
        power_series qd(n);
        qd.set(d, 1);
        result += slice_value * qd;
    }
    return result;
}

diff_op hyperplane_twist(const diff_op &a, int exponent)
{
    std::vector<dpoly> out;
    for (int d = 0; d <= a.q_degree(); ++d) {
        dpoly factor = dpoly::constant(1);
        for (int m = 1; m <= d; ++m) {
            factor *= dpoly::linear(m).pow(exponent);
        }
        out.push_back(a.slice(d) * factor);
    }
    return diff_op(std::move(out));
}

diff_op left_divide_exact(const diff_op &a, const dpoly &left_factor)
{
    std::vector<dpoly> out;
    for (int d = 0; d <= a.q_degree(); ++d) {
        auto [quo, rem] = a.slice(d).divmod(left_factor.shifted(d));
        if (!rem.is_zero()) {
            throw inexact_error("left_divide_exact: nonzero remainder in q^" + std::to_string(d) + " slice");
        }
        out.push_back(std::move(quo));
    }
    return diff_op(std::move(out));
}

diff_op normalize_primitive(const diff_op &a)
{
    if (a.is_zero()) {
        throw precondition_error("normalize_primitive: zero operator");
    }
    integer den_lcm = 1;
    for (const auto &s : a.slices()) {
        for (const auto &c : s.coefficients()) {
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
        }
    }
    integer num_gcd = 0;
    for (const auto &s : a.slices()) {
        for (const auto &c : s.coefficients()) {
            const integer n = c.get_num() * (den_lcm / c.get_den());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        }
    }
    scalar factor = make_scalar(den_lcm, num_gcd);
    for (const auto &s : a.slices()) {
        if (!s.is_zero()) {
            if (s.leading() < 0) {
                factor = -factor;
            }
            break;
        }
    }
    return a * factor;
}

std::optional<scalar> proportionality_factor(const diff_op &a, const diff_op &b)
{
    if (b.is_zero()) {
        throw precondition_error("proportionality_factor: reference operator is zero");
    }
    if (a.q_degree() != b.q_degree()) {
        return std::nullopt;
    }
    for (int d = 0; d <= b.q_degree(); ++d) {
        const dpoly &s = b.slices()[static_cast<std::size_t>(d)];
        if (!s.is_zero()) {
            const scalar factor = a.slice(d).leading() / s.leading();
            if (a == b * factor) {
                return factor;
            }
            return std::nullopt;
        }
    }
    return std::nullopt;
}

pseudo_division right_pseudo_divide(const diff_op &a, const diff_op &b)
{
    if (b.is_zero()) {
        throw precondition_error("right_pseudo_divide: divisor is zero");
    }
    pseudo_division out;
    const int b_order = b.order();
    out.multiplier = b.coefficients()[static_cast<std::size_t>(b_order)];
    out.remainder = a;
    while (!out.remainder.is_zero() && out.remainder.order() >= b_order) {
        const int shift = out.remainder.order() - b_order;
        const qpoly lead = out.remainder.coefficients()[static_cast<std::size_t>(out.remainder.order())];
        // lead * D^shift, with the q-polynomial on the left
        const diff_op step = lead * diff_op::slice_op(0, dpoly::monomial(shift));
        out.remainder = out.multiplier * out.remainder - step * b;
        out.quotient = out.multiplier * out.quotient + step;
        ++out.multiplier_power;
    }
    return out;
}

} // namespace mirrorcheck
