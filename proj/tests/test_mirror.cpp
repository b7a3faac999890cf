#include "doctest.h"

#include <algorithm>
#include <random>

#include "mirrorcheck/dataset.hpp"
#include "mirrorcheck/errors.hpp"
#include "mirrorcheck/mirror.hpp"

using namespace mirrorcheck;

namespace {

struct chain {
    frobenius_basis basis;
    mirror_map_data map;
    yukawa_data y;

    explicit chain(const diff_op &op, int order = 12)
        : basis(frobenius_solve(op, order)), map(mirror_map(basis)), y(yukawa(basis, map))
    {
    }
};

const chain &pf_chain()
{
    static const chain c(embedded_dataset().pf_operator());
    return c;
}

} // namespace

TEST_CASE("Frobenius basis of D^4 is the divided log powers")
{
    const frobenius_basis b = frobenius_solve(diff_op::slice_op(0, dpoly::monomial(4)), 6);
    for (int k = 0; k < 4; ++k) {
        CHECK(b[static_cast<std::size_t>(k)].log_degree() == k);
        CHECK(b[static_cast<std::size_t>(k)].part(k) == power_series::constant(1, 6));
        for (int j = 0; j < k; ++j) {
            CHECK(b[static_cast<std::size_t>(k)].part(j).is_zero());
        }
    }
}

TEST_CASE("Frobenius preconditions")
{
    CHECK_THROWS_AS(frobenius_solve(diff_op::slice_op(0, dpoly::monomial(3)), 6), precondition_error);
    // P_0 = D^4 (D - 3) stalls at q^3
    const diff_op stall = diff_op::slice_op(0, dpoly::monomial(4) * dpoly::linear(-3)) + diff_op::q();
    CHECK_THROWS_AS(frobenius_solve(stall, 6), precondition_error);
    CHECK_NOTHROW(frobenius_solve(stall, 2));
}

TEST_CASE("I_0 of the Picard-Fuchs operator")
{
    // a_1 = -P_1(0) / P_0(1) with P_1(0) = -17 and P_0(1) = 1
    const power_series i0 = pf_chain().basis[0].part(0);
    CHECK(i0[1] == 17);
    // Independent recursion on the collected coefficients (1) in plain integers.
    const auto coeffs = embedded_dataset().pf_coefficients;
    std::vector<scalar> a{1};
    for (int n = 1; n <= 6; ++n) {
        scalar rhs = 0;
        scalar diag = 0;
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            for (int e = 0; e <= std::min(n, coeffs[k].degree()); ++e) {
                scalar pw = 1;
                for (std::size_t i = 0; i < k; ++i) {
                    pw *= n - e;
                }
                if (e == 0) {
                    diag += coeffs[k][0] * pw;
                } else {
                    rhs -= coeffs[k][e] * pw * a[static_cast<std::size_t>(n - e)];
                }
            }
        }
        a.push_back(rhs / diag);
    }
    for (int n = 0; n <= 6; ++n) {
        CHECK(i0[n] == a[static_cast<std::size_t>(n)]);
    }
    CHECK(i0[2] == 1549);
    CHECK(i0[3] == 215585);
}

TEST_CASE("periods are annihilated")
{
    const diff_op op = embedded_dataset().pf_operator();
    for (const auto &f : pf_chain().basis.solutions) {
        CHECK(apply(op, f).is_zero());
    }
}

TEST_CASE("mirror map round trip")
{
    const auto &m = pf_chain().map;
    CHECK(m.Q_of_q[0] == 0);
    CHECK(m.Q_of_q[1] == 1);
    CHECK(compose(m.Q_of_q, m.q_of_Q) == power_series::variable(12));
    // ln q in the Q coordinate is ln Q - t(q(Q))
    const log_series lq = to_mirror_coordinate(log_series::log_q(12), m);
    CHECK(lq.part(1) == power_series::constant(1, 12));
    CHECK(lq.part(0) == -compose(m.t_series, m.q_of_Q));
    // I_1 / I_0 = ln Q exactly
    const log_series ratio = pf_chain().basis[1] * invert_unit(pf_chain().basis[0].part(0));
    CHECK(to_mirror_coordinate(ratio, m) == log_series::log_q(12));
}

TEST_CASE("Yukawa coupling and instanton numbers")
{
    const auto &y = pf_chain().y;
    CHECK(y.second_derivative.is_log_free());
    CHECK(y.K[0] == 14);
    CHECK(y.K[1] == 588);
    const std::vector<integer> n = instanton_extract(y.K, 5);
    const std::vector<integer> expected{integer(588), integer(12103), integer(583884), integer(41359136),
                                        integer("3609394096")};
    CHECK(n == expected);
}

TEST_CASE("instanton extraction inverts the multiple-cover sum")
{
    // K = 14 + sum_d n_d d^3 Q^d / (1 - Q^d), built directly from chosen n_d.
    const std::vector<long> n{3, -5, 7, 11, 2, 9};
    power_series k = power_series::constant(14, 6);
    for (int d = 1; d <= 6; ++d) {
        for (int m = d; m <= 6; m += d) {
            k.set(m, k[m] + scalar(n[static_cast<std::size_t>(d - 1)] * d * d * d));
        }
    }
    const auto got = instanton_extract(k, 6);
    for (std::size_t i = 0; i < n.size(); ++i) {
        CHECK(got[i] == n[i]);
    }
    k.set(2, k[2] + make_scalar(1, 2));
    CHECK_THROWS_AS(instanton_extract(k, 6), inexact_error);
    CHECK_THROWS_AS(instanton_extract(k, 7), truncation_error);
}

TEST_CASE("property: every extracted n_d is an integer through the available order")
{
    const std::vector<integer> n = instanton_extract(pf_chain().y.K, 12);
    CHECK(n.size() == 12);
    for (const auto &x : n) {
        CHECK(x > 0);
    }
}

TEST_CASE("normalization of the operator does not matter")
{
    const chain scaled(embedded_dataset().pf_operator() * make_scalar(-7, 3), 8);
    CHECK(scaled.y.K == pf_chain().y.K.truncated(8));
}

TEST_CASE("normal-form residuals vanish")
{
    const auto residuals = verify_theorem1(pf_chain().basis, pf_chain().map, pf_chain().y.K);
    REQUIRE(residuals.size() == 4);
    CHECK(residuals[0].solution == "1");
    CHECK(residuals[3].solution == "I_3/I_0");
    for (const auto &r : residuals) {
        INFO(r.solution);
        CHECK(r.checked_through == 12);
        CHECK(r.vanishes_through(10));
        CHECK_FALSE(r.first_nonzero.has_value());
    }
}

TEST_CASE("a wrong K leaves a residual")
{
    power_series k = pf_chain().y.K;
    k.set(3, k[3] + 1);
    const log_series y3 =
        to_mirror_coordinate(pf_chain().basis[3] * invert_unit(pf_chain().basis[0].part(0)), pf_chain().map);
    const log_series r = yukawa_operator_apply(k, y3);
    CHECK_FALSE(r.is_zero());
}

TEST_CASE("mirror examples")
{
    const frobenius_basis b = frobenius_solve(diff_op::slice_op(0, dpoly::monomial(4)), 6);
    const mirror_map_data m = mirror_map(b);
    CHECK(m.Q_of_q == power_series::variable(6));
    CHECK(m.t_series.is_zero());

    CHECK(instanton_extract(power_series::constant(14, 8), 8) == std::vector<integer>(8, integer(0)));
    // K = 14 + 8 Q / (1 - Q)
    std::vector<scalar> k(9, scalar(8));
    k[0] = 14;
    const auto n = instanton_extract(power_series(k, 8), 8);
    CHECK(n.front() == 8);
    CHECK(std::all_of(n.begin() + 1, n.end(), [](const integer &x) { return x == 0; }));
}

TEST_CASE("property: the Yukawa coupling ignores the normalization of the periods")
{
    const frobenius_basis &b = pf_chain().basis;
    std::mt19937 rng(1967);
    std::uniform_int_distribution<int> dist(-9, 9);
    for (int trial = 0; trial < 5; ++trial) {
        const scalar c0(dist(rng));
        const scalar c1(dist(rng));
        const scalar c2(dist(rng));
        frobenius_basis shifted = b;
        shifted.solutions[2] = b[2] + b[0] * c0 + b[1] * c1;
        shifted.solutions[3] = b[3] + b[2] * c2 + b[0] * c0;
        const yukawa_data y = yukawa(shifted, pf_chain().map);
        CHECK(y.K == pf_chain().y.K);
        for (const auto &r : verify_theorem1(shifted, pf_chain().map, y.K)) {
            CHECK_FALSE(r.first_nonzero.has_value());
        }
    }
}
