#pragma once

#include <cstddef>
#include <vector>

#include "mirrorcheck/diff_op.hpp"
#include "mirrorcheck/gw.hpp"

namespace mirrorcheck {

/// Quantum multiplication by p on the basis: M(q) = sum_d M_d q^d, where column j
/// of M_d holds the coordinates of the q^d part of p * Delta_j.
struct quantum_matrix {
    std::vector<matrix> terms;

    int q_degree() const { return static_cast<int>(terms.size()) - 1; }
    std::size_t dim() const { return terms.empty() ? 0 : terms.front().rows(); }
    const matrix &at(int d) const { return terms[static_cast<std::size_t>(d)]; }
};

/// M_0 is classical multiplication by p; for d >= 1, <p, Delta_j, Delta_k>_d = d <Delta_j, Delta_k>_d
/// contracted with Delta^k. Throws precondition_error if the table lacks a two-point
/// value that passes the dimension filter.
quantum_matrix build_quantum_p(const frobenius_algebra &ring, const gw_table &table);

/// Every nonzero entry of M_d maps codim c to codim c + 1 - deg(q) d.
bool grading_check(const frobenius_algebra &ring, const quantum_matrix &m);
/// <M_d x, y> = <x, M_d y> for every d, i.e. M_d^T G = G M_d.
bool is_self_adjoint(const frobenius_algebra &ring, const quantum_matrix &m);

/// A class-vector-valued polynomial in q: one qpoly per basis coordinate.
using qpoly_vector = std::vector<qpoly>;

/// v_0 = 1, v_{k+1} = (D + M(q)) v_k. Any solution T of D T = M T has D^k <T, 1> = <T, v_k>.
std::vector<qpoly_vector> cyclic_vectors(const frobenius_algebra &ring, const quantum_matrix &m, int count);

struct annihilator_result {
    /// Primitive-normalized sum_k c_k(q) D^k.
    diff_op op;
    /// Dimension of the solution space of sum_k c_k(q) v_k = 0 at the given bounds.
    std::size_t nullity = 0;
};

/// Finds polynomial c_k(q) of degree <= qdeg_bound with sum_{k <= order_bound} c_k v_k = 0.
/// Throws verification_error if only the zero solution exists.
annihilator_result find_annihilator(const frobenius_algebra &ring, const quantum_matrix &m, int order_bound = 10,
                                    int qdeg_bound = 5);

/// S(q) = Phi(q) q^{M_0}, Phi = 1 + sum_{d >= 1} Phi_d q^d; entry (r, c) is a log series.
/// Column c is the solution of D T = M T with leading term q^{M_0} Delta_c.
struct fundamental_solution {
    std::vector<matrix> phi;
    std::vector<std::vector<log_series>> entries;

    std::size_t dim() const { return entries.size(); }
    std::vector<log_series> column(std::size_t c) const;
};

/// Integrates D S = M S through q^order. Phi_d solves d Phi_d + [Phi_d, M_0] = sum_{e >= 1} M_e Phi_{d-e},
/// uniquely because ad(M_0) is nilpotent.
fundamental_solution integrate_fundamental(const quantum_matrix &m, int order);

/// <T, v> for a log-series vector T and a q-polynomial vector v.
log_series pair_with(const frobenius_algebra &ring, const std::vector<log_series> &t, const qpoly_vector &v);

/// The scalar functions <S Delta^i, 1>, i over the basis; the i = unit component starts with 1.
std::vector<log_series> j_components(const frobenius_algebra &ring, const fundamental_solution &s);

/// Coordinates of D T - M T; all zero for a solution.
std::vector<log_series> connection_residual(const quantum_matrix &m, const std::vector<log_series> &t);

power_series to_series(const qpoly &p, int order);

} // namespace mirrorcheck
