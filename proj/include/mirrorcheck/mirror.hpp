#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mirrorcheck/diff_op.hpp"

namespace mirrorcheck {

/// I_0..I_{count-1} with I_k = sum_{j<=k} (ln q)^j / j! * S_{k,j}(q) and S_{k,j}(0) = delta_jk.
struct frobenius_basis {
    std::vector<log_series> solutions;

    const log_series &operator[](std::size_t k) const { return solutions[k]; }
    std::size_t size() const { return solutions.size(); }
    int order() const { return solutions.front().order(); }
};

/// Log-power solutions at a point of maximal unipotent monodromy.
///
/// Writing the q^d coefficient of a solution as a vector c_d over (ln q)^j / j!, the
/// operator sum_e q^e P_e(D) acts on it through P_e(d - e + N) with N the nilpotent shift
/// (N c)_j = c_{j+1}. So P_0(d + N) c_d = -sum_{e>=1} P_e(d - e + N) c_{d-e}, triangular with
/// diagonal P_0(d).
///
/// Requires D^count to divide P_0 (precondition_error otherwise) and P_0(d) != 0 for
/// d = 1..order (precondition_error naming the singular step).
frobenius_basis frobenius_solve(const diff_op &op, int order, int count = 4);

struct mirror_map_data {
    /// I_1 / I_0 - ln q, a pure series vanishing at 0.
    power_series t_series;
    /// Q(q) = q exp(t).
    power_series Q_of_q;
    /// q(Q), the compositional inverse.
    power_series q_of_Q;
};

mirror_map_data mirror_map(const frobenius_basis &basis);

/// Re-expresses a log series in q as a log series in Q, using ln q = ln Q - t(q(Q)).
log_series to_mirror_coordinate(const log_series &f, const mirror_map_data &map);

struct yukawa_data {
    /// K(Q), normalized so K(0) = classical_value.
    power_series K;
    /// (Q d/dQ)^2 (I_2 / I_0) in Q before normalization.
    log_series second_derivative;
};

/// R = (Q d/dQ)^2 (I_2 / I_0) in Q must be log-free (verification_error otherwise);
/// K = classical_value * R / R(0).
yukawa_data yukawa(const frobenius_basis &basis, const mirror_map_data &map, const scalar &classical_value = 14);

/// n_N = (c_N - sum_{d | N, d < N} d^3 n_d) / N^3 with c_N the Q^N coefficient of K.
/// Throws inexact_error on a non-integer n_d.
std::vector<integer> instanton_extract(const power_series &K, int max_degree);

struct theorem1_residual {
    std::string solution;
    /// Q-order through which D^2 (1/K) D^2 y was computed.
    int checked_through = 0;
    /// First power of Q with a nonzero residual coefficient; nullopt if none.
    std::optional<int> first_nonzero;

    bool vanishes_through(int order) const { return !first_nonzero || *first_nonzero > order; }
};

/// D^2 (1/K) D^2 applied to 1, ln Q, I_2/I_0 and I_3/I_0 in the Q coordinate.
std::vector<theorem1_residual> verify_theorem1(const frobenius_basis &basis, const mirror_map_data &map,
                                               const power_series &K);

/// Applies D^2 (1/K) D^2 with D = Q d/dQ.
log_series yukawa_operator_apply(const power_series &K, const log_series &y);

} // namespace mirrorcheck
