#pragma once

#include <string>
#include <vector>

#include "mirrorcheck/power_series.hpp"

namespace mirrorcheck {

// Bounded by the nilpotency of the cohomology ring (p^7 = 0).
inline constexpr int max_log_degree = 6;

/// Sum_j parts[j] * (ln q)^j / j!, each part a power_series of a common order.
///
/// The divided-power normalization makes D = q d/dq act without denominators:
/// D(f L_j) = (Df) L_j + f L_{j-1}, and L_a L_b = binom(a+b, a) L_{a+b}.
class log_series {
public:
    log_series() = default;
    /// A pure power series (log degree 0).
    explicit log_series(power_series f);
    log_series(std::vector<power_series> parts);

    /// The series ln q known through q^order.
    static log_series log_q(int order);
    static log_series zero(int order, int log_degree = 0);

    int order() const { return parts_.empty() ? -1 : parts_.front().order(); }
    int log_degree() const { return static_cast<int>(parts_.size()) - 1; }
    /// Coefficient of (ln q)^j / j!; zero for j above the stored degree.
    power_series part(int j) const;
    const std::vector<power_series> &parts() const { return parts_; }

    /// True when every part with j >= 1 vanishes through the order.
    bool is_log_free() const;
    bool is_zero() const;
    /// Drops vanishing top log parts (keeps at least part 0).
    log_series trimmed() const;
    log_series truncated(int order) const;

    log_series &operator+=(const log_series &rhs);
    log_series &operator-=(const log_series &rhs);
    log_series &operator*=(const scalar &c);

    friend log_series operator+(log_series a, const log_series &b) { return a += b; }
    friend log_series operator-(log_series a, const log_series &b) { return a -= b; }
    friend log_series operator*(log_series a, const scalar &c) { return a *= c; }
    friend log_series operator*(const scalar &c, log_series a) { return a *= c; }
    friend log_series operator*(const log_series &a, const power_series &f);
    friend log_series operator*(const power_series &f, const log_series &a) { return a * f; }
    /// Throws precondition_error if the product's log degree exceeds max_log_degree.
    friend log_series operator*(const log_series &a, const log_series &b);

    /// Equality after trimming vanishing log parts.
    friend bool operator==(const log_series &a, const log_series &b);

    std::string to_string() const;

private:
    std::vector<power_series> parts_;
};

/// D = q d/dq on log series.
log_series theta_derive(const log_series &f);

} // namespace mirrorcheck
