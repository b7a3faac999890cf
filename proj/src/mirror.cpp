#include "mirrorcheck/mirror.hpp"

#include <algorithm>

#include "mirrorcheck/errors.hpp"
#include "mirrorcheck/linalg.hpp"

namespace mirrorcheck {

namespace {

// P(s + N) applied to c, where (N c)_j = c_{j+1}: sum_m t_m c_{j+m} with t = P(s + X).
vector_q apply_at(const dpoly &p, long s, const vector_q &c)
{
    const dpoly taylor = p.shifted(s);
    vector_q out(c.size());
    for (std::size_t j = 0; j < c.size(); ++j) {
        for (std::size_t m = 0; j + m < c.size(); ++m) {
            const scalar t = taylor[static_cast<int>(m)];
            if (t != 0 && c[j + m] != 0) {
                out[j] += t * c[j + m];
            }
        }
    }
    return out;
}

power_series shift_up(const power_series &f)
{
    power_series r(f.order());
    for (int k = 1; k <= f.order(); ++k) {
        r.set(k, f[k - 1]);
    }
    return r;
}

std::optional<int> first_nonzero(const log_series &f)
{
    std::optional<int> best;
    for (const auto &part : f.parts()) {
        const int v = part.valuation();
        if (v <= part.order() && (!best || v < *best)) {
            best = v;
        }
    }
    return best;
}

} // namespace

frobenius_basis frobenius_solve(const diff_op &op, int order, int count)
{
    const dpoly p0 = op.slice(0);
    for (int k = 0; k < count; ++k) {
        if (p0[k] != 0) {
            throw precondition_error("frobenius_solve: indicial root 0 has multiplicity below "
                                     + std::to_string(count));
        }
    }
    if (p0.is_zero()) {
        throw precondition_error("frobenius_solve: the q^0 slice vanishes");
    }
    for (int d = 1; d <= order; ++d) {
        if (p0.eval(d) == 0) {
            throw precondition_error("frobenius_solve: singular recursion step at q^" + std::to_string(d));
        }
    }
    const auto width = static_cast<std::size_t>(count);
    frobenius_basis basis;
    for (std::size_t k = 0; k < width; ++k) {
        std::vector<vector_q> c(static_cast<std::size_t>(order) + 1, vector_q(width));
        c[0][k] = 1;
        for (int d = 1; d <= order; ++d) {
            vector_q rhs(width);
            for (int e = 1; e <= std::min(d, op.q_degree()); ++e) {
                const vector_q contrib = apply_at(op.slice(e), d - e, c[static_cast<std::size_t>(d - e)]);
                for (std::size_t j = 0; j < width; ++j) {
                    rhs[j] -= contrib[j];
                }
            }
            const dpoly taylor = p0.shifted(d);
            const scalar diag = taylor[0];
            vector_q &x = c[static_cast<std::size_t>(d)];
            for (std::size_t j = width; j-- > 0;) {
                scalar acc = rhs[j];
                for (std::size_t m = 1; j + m < width; ++m) {
                    acc -= taylor[static_cast<int>(m)] * x[j + m];
                }
                x[j] = acc / diag;
            }
        }
        std::vector<power_series> parts;
        for (std::size_t j = 0; j <= k; ++j) {
            power_series f(order);
            for (int d = 0; d <= order; ++d) {
                f.set(d, c[static_cast<std::size_t>(d)][j]);
            }
            parts.push_back(std::move(f));
        }
        basis.solutions.emplace_back(std::move(parts));
    }
    return basis;
}

mirror_map_data mirror_map(const frobenius_basis &basis)
{
    if (basis.size() < 2) {
        throw precondition_error("mirror_map: need I_0 and I_1");
    }
    const power_series i0 = basis[0].part(0);
    if (basis[1].part(1) != i0) {
        throw verification_error("mirror_map: the ln q part of I_1 differs from I_0");
    }
    mirror_map_data m;
    m.t_series = basis[1].part(0) * invert_unit(i0);
    m.Q_of_q = shift_up(exp(m.t_series));
    m.q_of_Q = revert(m.Q_of_q);
    return m;
}

log_series to_mirror_coordinate(const log_series &f, const mirror_map_data &map)
{
    const int order = std::min(f.order(), map.q_of_Q.order());
    const power_series tau = compose(map.t_series, map.q_of_Q).truncated(order);
    // (-tau)^b / b!
    std::vector<power_series> shifts{power_series::constant(1, order)};
    for (int b = 1; b <= f.log_degree(); ++b) {
        shifts.push_back(shifts.back() * tau * make_scalar(-1, b));
    }
    std::vector<power_series> composed;
    for (int j = 0; j <= f.log_degree(); ++j) {
        composed.push_back(compose(f.part(j), map.q_of_Q).truncated(order));
    }
    std::vector<power_series> parts;
    for (int a = 0; a <= f.log_degree(); ++a) {
        power_series acc(order);
        for (int j = a; j <= f.log_degree(); ++j) {
            acc += composed[static_cast<std::size_t>(j)] * shifts[static_cast<std::size_t>(j - a)];
        }
        parts.push_back(std::move(acc));
    }
    return log_series(std::move(parts));
}

yukawa_data yukawa(const frobenius_basis &basis, const mirror_map_data &map, const scalar &classical_value)
{
    if (basis.size() < 3) {
        throw precondition_error("yukawa: need I_0, I_1, I_2");
    }
    const log_series y2 = basis[2] * invert_unit(basis[0].part(0));
    yukawa_data out;
    out.second_derivative = theta_derive(theta_derive(to_mirror_coordinate(y2, map)));
    if (!out.second_derivative.is_log_free()) {
        throw verification_error("yukawa: (Q d/dQ)^2 (I_2/I_0) keeps logarithmic terms");
    }
    const power_series r = out.second_derivative.part(0);
    if (r[0] == 0) {
        throw verification_error("yukawa: (Q d/dQ)^2 (I_2/I_0) vanishes at Q = 0");
    }
    out.K = r * (classical_value / r[0]);
    return out;
}

std::vector<integer> instanton_extract(const power_series &K, int max_degree)
{
    if (max_degree > K.order()) {
        throw truncation_error("instanton_extract: K is known through Q^" + std::to_string(K.order())
                               + ", cannot extract n_" + std::to_string(max_degree));
    }
    std::vector<integer> n(static_cast<std::size_t>(max_degree) + 1);
    for (int big = 1; big <= max_degree; ++big) {
        scalar rest = K[big];
        for (int d = 1; d < big; ++d) {
            if (big % d == 0) {
                rest -= scalar(n[static_cast<std::size_t>(d)] * d * d * d);
            }
        }
        const scalar value = rest / (big * big * big);
        if (!is_integer(value)) {
            throw inexact_error("instanton_extract: n_" + std::to_string(big) + " = " + to_pretty(value)
                                + " is not an integer");
        }
        n[static_cast<std::size_t>(big)] = value.get_num();
    }
    n.erase(n.begin());
    return n;
}

log_series yukawa_operator_apply(const power_series &K, const log_series &y)
{
    const log_series inner = theta_derive(theta_derive(y)) * invert_unit(K.truncated(std::min(K.order(), y.order())));
    return theta_derive(theta_derive(inner));
}

std::vector<theorem1_residual> verify_theorem1(const frobenius_basis &basis, const mirror_map_data &map,
                                               const power_series &K)
{
    const int order = std::min({basis.order(), map.q_of_Q.order(), K.order()});
    const power_series inv_i0 = invert_unit(basis[0].part(0));
    std::vector<std::pair<std::string, log_series>> candidates;
    candidates.emplace_back("1", log_series(power_series::constant(1, order)));
    candidates.emplace_back("ln Q", log_series::log_q(order));
    for (std::size_t k = 2; k < basis.size(); ++k) {
        candidates.emplace_back("I_" + std::to_string(k) + "/I_0",
                                to_mirror_coordinate(basis[k] * inv_i0, map).truncated(order));
    }
    std::vector<theorem1_residual> out;
    for (const auto &[name, y] : candidates) {
        const log_series r = yukawa_operator_apply(K, y);
        out.push_back({name, r.order(), first_nonzero(r)});
    }
    return out;
}

} // namespace mirrorcheck
