#include "mirrorcheck/power_series.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "mirrorcheck/errors.hpp"

namespace mirrorcheck {

power_series::power_series(int order)
{
    if (order < 0) {
        throw precondition_error("negative truncation order");
    }
    coeffs_.assign(static_cast<std::size_t>(order) + 1, scalar(0));
}

power_series::power_series(std::vector<scalar> coeffs, int order) : power_series(order)
{
    const auto n = std::min(coeffs.size(), coeffs_.size());
    std::move(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(n), coeffs_.begin());
}

power_series::power_series(std::initializer_list<long> coeffs, int order) : power_series(order)
{
    std::size_t k = 0;
    for (long c : coeffs) {
        if (k >= coeffs_.size()) {
            break;
        }
        coeffs_[k++] = c;
    }
}

power_series power_series::constant(const scalar &c, int order)
{
    power_series r(order);
    r.coeffs_[0] = c;
    return r;
}

power_series power_series::variable(int order)
{
    power_series r(order);
    if (order >= 1) {
        r.coeffs_[1] = 1;
    }
    return r;
}

const scalar &power_series::operator[](int k) const
{
    if (k < 0 || k > order()) {
        throw truncation_error("coefficient q^" + std::to_string(k) + " requested from a series known through q^"
                               + std::to_string(order()));
    }
    return coeffs_[static_cast<std::size_t>(k)];
}

void power_series::set(int k, scalar value)
{
    if (k < 0 || k > order()) {
        throw truncation_error("cannot set q^" + std::to_string(k) + " beyond order " + std::to_string(order()));
    }
    coeffs_[static_cast<std::size_t>(k)] = std::move(value);
}

int power_series::valuation() const
{
    for (int k = 0; k <= order(); ++k) {
        if (coeffs_[static_cast<std::size_t>(k)] != 0) {
            return k;
        }
    }
    return order() + 1;
}

power_series power_series::truncated(int order) const
{
    if (order > this->order()) {
        throw truncation_error("cannot extend a series from order " + std::to_string(this->order()) + " to "
                               + std::to_string(order));
    }
    return power_series(std::vector<scalar>(coeffs_.begin(), coeffs_.begin() + order + 1), order);
}

power_series &power_series::operator+=(const power_series &rhs)
{
    coeffs_.resize(static_cast<std::size_t>(std::min(order(), rhs.order()) + 1));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] += rhs.coeffs_[k];
    }
    return *this;
}

power_series &power_series::operator-=(const power_series &rhs)
{
    coeffs_.resize(static_cast<std::size_t>(std::min(order(), rhs.order()) + 1));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] -= rhs.coeffs_[k];
    }
    return *this;
}

power_series &power_series::operator*=(const scalar &c)
{
    for (auto &x : coeffs_) {
        x *= c;
    }
    return *this;
}

power_series operator-(power_series a)
{
    for (auto &x : a.coeffs_) {
        x = -x;
    }
    return a;
}

power_series operator*(const power_series &a, const power_series &b)
{
    const int n = std::min(a.order(), b.order());
    power_series r(n);
    for (int i = 0; i <= n; ++i) {
        const scalar &ai = a.coeffs_[static_cast<std::size_t>(i)];
        if (ai == 0) {
            continue;
        }
        for (int j = 0; i + j <= n; ++j) {
            r.coeffs_[static_cast<std::size_t>(i + j)] += ai * b.coeffs_[static_cast<std::size_t>(j)];
        }
    }
    return r;
}

std::string power_series::to_string(char var) const
{
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= order(); ++k) {
        const scalar &c = coeffs_[static_cast<std::size_t>(k)];
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
    if (first) {
        os << '0';
    }
    os << " + O(" << var << '^' << order() + 1 << ')';
    return os.str();
}

power_series invert_unit(const power_series &f)
{
    if (f.order() < 0 || f[0] == 0) {
        throw precondition_error("invert_unit: zero constant term");
    }
    const int n = f.order();
    std::vector<scalar> g(static_cast<std::size_t>(n) + 1);
    const scalar inv0 = 1 / f[0];
    g[0] = inv0;
    for (int k = 1; k <= n; ++k) {
        scalar acc = 0;
        for (int j = 1; j <= k; ++j) {
            acc += f[j] * g[static_cast<std::size_t>(k - j)];
        }
        g[static_cast<std::size_t>(k)] = -acc * inv0;
    }
    return power_series(std::move(g), n);
}

power_series exp(const power_series &f)
{
    if (f.order() < 0 || f[0] != 0) {
        throw precondition_error("exp: series must have zero constant term");
    }
    // E' = f' E  =>  k e_k = sum_{j=1..k} j f_j e_{k-j}
    const int n = f.order();
    std::vector<scalar> e(static_cast<std::size_t>(n) + 1);
    e[0] = 1;
    for (int k = 1; k <= n; ++k) {
        scalar acc = 0;
        for (int j = 1; j <= k; ++j) {
            acc += j * f[j] * e[static_cast<std::size_t>(k - j)];
        }
        e[static_cast<std::size_t>(k)] = acc / k;
    }
    return power_series(std::move(e), n);
}

power_series log(const power_series &f)
{
    if (f.order() < 0 || f[0] != 1) {
        throw precondition_error("log: series must have constant term 1");
    }
    // g' f = f'  =>  k g_k = k f_k - sum_{j=1..k-1} j g_j f_{k-j}
    const int n = f.order();
    std::vector<scalar> g(static_cast<std::size_t>(n) + 1);
    for (int k = 1; k <= n; ++k) {
        scalar acc = k * f[k];
        for (int j = 1; j < k; ++j) {
            acc -= j * g[static_cast<std::size_t>(j)] * f[k - j];
        }
        g[static_cast<std::size_t>(k)] = acc / k;
    }
    return power_series(std::move(g), n);
}

power_series compose(const power_series &f, const power_series &g)
{
    if (g.order() < 0 || g[0] != 0) {
        throw precondition_error("compose: inner series must have zero constant term");
    }
    // Horner: f_0 + g (f_1 + g (f_2 + ...)). Since g = O(q), f_k for k > n cannot contribute.
    const int n = std::min(f.order(), g.order());
    const power_series inner = g.truncated(n);
    power_series acc = power_series::constant(f[n], n);
    for (int k = n - 1; k >= 0; --k) {
        acc = acc * inner;
        acc.set(0, acc[0] + f[k]);
    }
    return acc;
}

power_series revert(const power_series &g)
{
    if (g.order() < 1 || g[0] != 0 || g[1] == 0) {
        throw precondition_error("revert: need g(0) = 0 and g'(0) != 0");
    }
    // Lagrange inversion: [Q^k] h = (1/k) [q^{k-1}] (q/g)^k.
    const int n = g.order();
    std::vector<scalar> shifted(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        shifted[static_cast<std::size_t>(k - 1)] = g[k];
    }
    const power_series phi = invert_unit(power_series(std::move(shifted), n - 1));
    power_series h(n);
    power_series phi_pow = power_series::constant(1, n - 1);
    for (int k = 1; k <= n; ++k) {
        phi_pow = phi_pow * phi;
        h.set(k, phi_pow[k - 1] / k);
    }
    return h;
}

power_series theta(const power_series &f)
{
    power_series r = f;
    for (int k = 0; k <= f.order(); ++k) {
        r.set(k, k * f[k]);
    }
    return r;
}

} // namespace mirrorcheck
