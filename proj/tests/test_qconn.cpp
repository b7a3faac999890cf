#include "doctest.h"

#include "mirrorcheck/dataset.hpp"
#include "mirrorcheck/errors.hpp"
#include "mirrorcheck/qconn.hpp"

using namespace mirrorcheck;

namespace {

struct fixture {
    frobenius_algebra ring = embedded_dataset().ring();
    gw_table table;
    quantum_matrix m;

    fixture()
    {
        table = embedded_dataset().input_table(ring);
        reconstruct(ring, table, 2);
        complete_table(ring, table, 2);
        m = build_quantum_p(ring, table);
    }
};

const fixture &fx()
{
    static const fixture f;
    return f;
}

} // namespace

TEST_CASE("quantum matrix shape, grading and self-adjointness")
{
    CHECK(fx().m.q_degree() == 2);
    CHECK(fx().m.dim() == 10);
    CHECK(grading_check(fx().ring, fx().m));
    CHECK(is_self_adjoint(fx().ring, fx().m));
}

TEST_CASE("q-linear part of p * p^5 from the two-point data by hand")
{
    // p * p^5 |_q = <p^5, p^3>_1 (p^3)^ + <p^5, p*g2>_1 (p*g2)^
    //   = 980 (59/42 p^3 - 2/3 p*g2) + 2044 (-2/3 p^3 + 1/3 p*g2) = 14 p^3 + 28 p*g2
    const auto &r = fx().ring;
    const std::size_t col = r.index_of_label("p^5");
    CHECK(fx().m.at(1)(r.index_of_label("p^3"), col) == 14);
    CHECK(fx().m.at(1)(r.index_of_label("p*g2"), col) == 28);
    // q^2 part of p * p^6 = 2 <p^6, p^5>_2 (p^5)^ = 19600 / 14 p
    CHECK(fx().m.at(2)(r.index_of_label("p"), r.index_of_label("p^6")) == 1400);
}

TEST_CASE("missing two-point data is reported")
{
    gw_table partial = embedded_dataset().input_table(fx().ring);
    CHECK_THROWS_AS(build_quantum_p(fx().ring, partial), precondition_error);
}

TEST_CASE("annihilator reproduces the listed reduced operator exactly")
{
    const annihilator_result an = find_annihilator(fx().ring, fx().m, 10, 5);
    CHECK(an.nullity == 1);
    CHECK(an.op.order() == 10);
    CHECK(an.op.q_degree() == 5);
    const diff_op listed = embedded_dataset().qde_operator();
    for (int d = 0; d <= 5; ++d) {
        INFO("slice " << d);
        CHECK(an.op.slice(d) == listed.slice(d));
    }
    CHECK(an.op.coeff(0, 10) == 3);
    CHECK(an.op.coeff(5, 1) == 343);
}

TEST_CASE("no annihilator below order 10")
{
    CHECK_THROWS_AS(find_annihilator(fx().ring, fx().m, 9, 5), verification_error);
}

TEST_CASE("fundamental solution solves the connection")
{
    const fundamental_solution s = integrate_fundamental(fx().m, 10);
    for (std::size_t c = 0; c < s.dim(); ++c) {
        for (const auto &res : connection_residual(fx().m, s.column(c))) {
            CHECK(res.is_zero());
        }
    }
    // leading term q^{M_0}: the unit column carries p ln q
    CHECK(s.entries[1][0].part(1)[0] == 1);
}

TEST_CASE("cyclic vectors: D^k <T, 1> = <T, v_k> along solutions")
{
    const auto &r = fx().ring;
    const fundamental_solution s = integrate_fundamental(fx().m, 8);
    const auto v = cyclic_vectors(r, fx().m, 6);
    qpoly_vector unit(r.dim());
    for (std::size_t i = 0; i < r.dim(); ++i) {
        unit[i] = qpoly::constant(r.unit()[i]);
    }
    for (std::size_t c : {0UL, 3UL, 9UL}) {
        const auto t = s.column(c);
        log_series lhs = pair_with(r, t, unit);
        for (std::size_t k = 0; k < v.size(); ++k) {
            CHECK(lhs == pair_with(r, t, v[k]));
            lhs = theta_derive(lhs);
        }
    }
}

TEST_CASE("P(D) annihilates every component of the J-function")
{
    const fundamental_solution s = integrate_fundamental(fx().m, 12);
    const auto js = j_components(fx().ring, s);
    CHECK(js[0].part(0)[0] == 1);
    const diff_op p = embedded_dataset().qde_operator();
    for (const auto &j : js) {
        CHECK(apply(p, j).is_zero());
    }
}

TEST_CASE("quantum product examples")
{
    const auto &r = fx().ring;
    const std::size_t one = r.index_of_label("1");
    for (std::size_t i = 0; i < r.dim(); ++i) {
        CHECK(fx().m.at(0)(i, one) == (i == r.index_of_label("p") ? 1 : 0));
        CHECK(fx().m.at(1)(i, one) == 0);
        CHECK(fx().m.at(2)(i, one) == 0);
    }
    // p * p^4 |_q = 1568 (p^4)^ + 3220 (p^2*g2)^ = 56 p^2 + 28 g2
    const std::size_t col = r.index_of_label("p^4");
    CHECK(fx().m.at(1)(r.index_of_label("p^2"), col) == 56);
    CHECK(fx().m.at(1)(r.index_of_label("g2"), col) == 28);
    // the q^2 part comes from the single correlator <p^5,p^6>_2 and has two entries
    int nonzero = 0;
    for (std::size_t i = 0; i < r.dim(); ++i) {
        for (std::size_t j = 0; j < r.dim(); ++j) {
            if (fx().m.at(2)(i, j) != 0) {
                ++nonzero;
                CHECK(fx().m.at(2)(i, j) == 1400);
                CHECK(r.codim(i) == r.codim(j) - 5);
            }
        }
    }
    CHECK(nonzero == 2);
}
