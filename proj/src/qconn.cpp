#include "mirrorcheck/qconn.hpp"

#include <algorithm>

#include "mirrorcheck/errors.hpp"

namespace mirrorcheck {

namespace {

std::size_t divisor_index(const frobenius_algebra &ring)
{
    const auto i = ring.index_of({1, 0});
    if (!i) {
        throw precondition_error("basis has no divisor class p");
    }
    return *i;
}

qpoly theta(const qpoly &p)
{
    std::vector<scalar> c = p.coefficients();
    for (std::size_t e = 0; e < c.size(); ++e) {
        c[e] *= static_cast<long>(e);
    }
    return qpoly(std::move(c));
}

} // namespace

quantum_matrix build_quantum_p(const frobenius_algebra &ring, const gw_table &table)
{
    const std::size_t n = ring.dim();
    const std::size_t p = divisor_index(ring);
    // Two-point keys pass the filter only while codim sums (<= 2 top) reach top - 1 + deg(q) d.
    const int max_degree = (ring.top_codim() + 1) / q_grading;
    quantum_matrix m;
    matrix m0(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const class_vector &col = ring.product(p, j);
        for (std::size_t r = 0; r < n; ++r) {
            m0(r, j) = col[r];
        }
    }
    m.terms.push_back(std::move(m0));
    const auto &dual = ring.dual_basis();
    for (int d = 1; d <= max_degree; ++d) {
        matrix md(n, n);
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                const correlator_key key(d, {j, k});
                if (!dimension_filter(ring, key)) {
                    continue;
                }
                const gw_entry *e = table.find(key);
                if (!e) {
                    throw precondition_error("build_quantum_p: missing " + key.to_string(ring));
                }
                const scalar c = d * e->value;
                for (std::size_t r = 0; r < n; ++r) {
                    md(r, j) += c * dual[k][r];
                }
            }
        }
        m.terms.push_back(std::move(md));
    }
    while (m.terms.size() > 1 && m.terms.back().is_zero()) {
        m.terms.pop_back();
    }
    return m;
}

bool grading_check(const frobenius_algebra &ring, const quantum_matrix &m)
{
    for (int d = 0; d <= m.q_degree(); ++d) {
        const matrix &md = m.at(d);
        for (std::size_t r = 0; r < md.rows(); ++r) {
            for (std::size_t c = 0; c < md.cols(); ++c) {
                if (md(r, c) != 0 && ring.codim(r) != ring.codim(c) + 1 - q_grading * d) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_self_adjoint(const frobenius_algebra &ring, const quantum_matrix &m)
{
    const matrix &g = ring.gram();
    return std::all_of(m.terms.begin(), m.terms.end(),
                       [&](const matrix &md) { return md.transposed() * g == g * md; });
}

std::vector<qpoly_vector> cyclic_vectors(const frobenius_algebra &ring, const quantum_matrix &m, int count)
{
    const std::size_t n = ring.dim();
    std::vector<qpoly_vector> v;
    qpoly_vector v0(n);
    for (std::size_t i = 0; i < n; ++i) {
        v0[i] = qpoly::constant(ring.unit()[i]);
    }
    v.push_back(std::move(v0));
    for (int k = 1; k < count; ++k) {
        const qpoly_vector &prev = v.back();
        qpoly_vector next(n);
        for (std::size_t r = 0; r < n; ++r) {
            next[r] = theta(prev[r]);
        }
        for (int d = 0; d <= m.q_degree(); ++d) {
            const qpoly qd = qpoly::monomial(d);
            const matrix &md = m.at(d);
            for (std::size_t r = 0; r < n; ++r) {
                for (std::size_t c = 0; c < n; ++c) {
                    if (md(r, c) != 0 && !prev[c].is_zero()) {
                        next[r] += qd * prev[c] * md(r, c);
                    }
                }
            }
        }
        v.push_back(std::move(next));
    }
    return v;
}

annihilator_result find_annihilator(const frobenius_algebra &ring, const quantum_matrix &m, int order_bound,
                                    int qdeg_bound)
{
    const std::size_t n = ring.dim();
    const auto v = cyclic_vectors(ring, m, order_bound + 1);
    int vdeg = 0;
    for (const auto &vk : v) {
        for (const auto &c : vk) {
            vdeg = std::max(vdeg, c.degree());
        }
    }
    const auto width = static_cast<std::size_t>(qdeg_bound + 1);
    const std::size_t unknowns = static_cast<std::size_t>(order_bound + 1) * width;
    const auto powers = static_cast<std::size_t>(qdeg_bound + vdeg + 1);
    // Row (t, s): coordinate t, coefficient of q^s in sum_{k,e} c_{k,e} q^e v_k[t].
    matrix a(n * powers, unknowns);
    for (std::size_t k = 0; k < v.size(); ++k) {
        for (std::size_t t = 0; t < n; ++t) {
            const qpoly &vkt = v[k][t];
            for (int s = 0; s <= vkt.degree(); ++s) {
                if (vkt[s] == 0) {
                    continue;
                }
                for (std::size_t e = 0; e < width; ++e) {
                    a(t * powers + static_cast<std::size_t>(s) + e, k * width + e) += vkt[s];
                }
            }
        }
    }
    const auto kernel = nullspace(a);
    if (kernel.empty()) {
        throw verification_error("find_annihilator: no operator of order <= " + std::to_string(order_bound)
                                 + " and q-degree <= " + std::to_string(qdeg_bound));
    }
    std::vector<qpoly> coeffs;
    for (std::size_t k = 0; k < v.size(); ++k) {
        coeffs.emplace_back(std::vector<scalar>(kernel.front().begin() + static_cast<std::ptrdiff_t>(k * width),
                                                kernel.front().begin() + static_cast<std::ptrdiff_t>((k + 1) * width)));
    }
    return {normalize_primitive(diff_op::from_coefficients(coeffs)), kernel.size()};
}

std::vector<log_series> fundamental_solution::column(std::size_t c) const
{
    std::vector<log_series> out;
    for (const auto &row : entries) {
        out.push_back(row[c]);
    }
    return out;
}

fundamental_solution integrate_fundamental(const quantum_matrix &m, int order)
{
    const std::size_t n = m.dim();
    const matrix &m0 = m.at(0);
    fundamental_solution s;
    s.phi.push_back(matrix::identity(n));
    for (int d = 1; d <= order; ++d) {
        matrix rhs(n, n);
        for (int e = 1; e <= std::min(d, m.q_degree()); ++e) {
            rhs += m.at(e) * s.phi[static_cast<std::size_t>(d - e)];
        }
        // (d + ad)^{-1} = sum_k (-1)^k ad^k / d^{k+1}, ad(Y) = Y M_0 - M_0 Y
        const scalar inv_d = make_scalar(1, d);
        matrix x(n, n);
        matrix term = rhs * inv_d;
        for (int k = 0; !term.is_zero(); ++k) {
            x += term;
            term = (term * m0 - m0 * term) * (-inv_d);
            if (k > 4 * static_cast<int>(n)) {
                throw verification_error("integrate_fundamental: M_0 is not nilpotent");
            }
        }
        s.phi.push_back(std::move(x));
    }
    // q^{M_0} = sum_j M_0^j (ln q)^j / j!
    std::vector<matrix> m0_powers{matrix::identity(n)};
    while (!m0_powers.back().is_zero()) {
        m0_powers.push_back(m0_powers.back() * m0);
        if (static_cast<int>(m0_powers.size()) > max_log_degree + 2) {
            throw precondition_error("integrate_fundamental: M_0 nilpotency exceeds the log degree bound");
        }
    }
    m0_powers.pop_back();
    std::vector<std::vector<matrix>> phi_m0(s.phi.size());
    for (std::size_t d = 0; d < s.phi.size(); ++d) {
        for (const auto &pw : m0_powers) {
            phi_m0[d].push_back(s.phi[d] * pw);
        }
    }
    s.entries.assign(n, std::vector<log_series>(n));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            std::vector<power_series> parts;
            for (std::size_t j = 0; j < m0_powers.size(); ++j) {
                power_series f(order);
                for (int d = 0; d <= order; ++d) {
                    f.set(d, phi_m0[static_cast<std::size_t>(d)][j](r, c));
                }
                parts.push_back(std::move(f));
            }
            s.entries[r][c] = log_series(std::move(parts));
        }
    }
    return s;
}

power_series to_series(const qpoly &p, int order)
{
    power_series f(order);
    for (int e = 0; e <= std::min(order, p.degree()); ++e) {
        f.set(e, p[e]);
    }
    return f;
}

log_series pair_with(const frobenius_algebra &ring, const std::vector<log_series> &t, const qpoly_vector &v)
{
    const int order = t.front().order();
    const matrix &g = ring.gram();
    log_series out = log_series::zero(order);
    for (std::size_t s = 0; s < v.size(); ++s) {
        if (v[s].is_zero()) {
            continue;
        }
        const power_series vs = to_series(v[s], order);
        for (std::size_t r = 0; r < t.size(); ++r) {
            if (g(r, s) != 0) {
                out += t[r] * vs * g(r, s);
            }
        }
    }
    return out;
}

std::vector<log_series> j_components(const frobenius_algebra &ring, const fundamental_solution &s)
{
    const std::size_t n = ring.dim();
    const int order = s.entries.front().front().order();
    qpoly_vector unit(n);
    for (std::size_t i = 0; i < n; ++i) {
        unit[i] = qpoly::constant(ring.unit()[i]);
    }
    std::vector<log_series> pairings;
    for (std::size_t c = 0; c < n; ++c) {
        pairings.push_back(pair_with(ring, s.column(c), unit));
    }
    std::vector<log_series> out;
    for (const auto &dual : ring.dual_basis()) {
        log_series acc = log_series::zero(order);
        for (std::size_t c = 0; c < n; ++c) {
            if (dual[c] != 0) {
                acc += pairings[c] * dual[c];
            }
        }
        out.push_back(std::move(acc));
    }
    return out;
}

std::vector<log_series> connection_residual(const quantum_matrix &m, const std::vector<log_series> &t)
{
    const std::size_t n = t.size();
    const int order = t.front().order();
    std::vector<log_series> out;
    for (std::size_t r = 0; r < n; ++r) {
        log_series acc = theta_derive(t[r]);
        for (int d = 0; d <= m.q_degree(); ++d) {
            power_series qd(order);
            if (d <= order) {
                qd.set(d, 1);
            }
            for (std::size_t c = 0; c < n; ++c) {
                if (m.at(d)(r, c) != 0) {
                    acc -= t[c] * qd * m.at(d)(r, c);
                }
            }
        }
        out.push_back(std::move(acc));
    }
    return out;
}

} // namespace mirrorcheck
