#include "doctest.h"

#include <algorithm>

#include "mirrorcheck/dataset.hpp"
#include "mirrorcheck/errors.hpp"

using namespace mirrorcheck;

namespace {

const frobenius_algebra &ring() { static const frobenius_algebra r = embedded_dataset().ring(); return r; }

correlator_key key(const char *text) { return parse_correlator(ring(), text); }

const gw_table &solved()
{
    static const gw_table t = [] {
        gw_table table = embedded_dataset().input_table(ring());
        reconstruct(ring(), table, 2);
        return table;
    }();
    return t;
}

} // namespace

TEST_CASE("correlator keys are symmetric")
{
    CHECK(key("<p^6,p^2>_1") == key("<p^2,p^6>_1"));
    CHECK(key("<p^2, p^6>_1").to_string(ring()) == "<p^2,p^6>_1");
    CHECK_THROWS_AS(key("<p^2,p^6>"), precondition_error);
    CHECK_THROWS_AS(key("<p^9>_1"), precondition_error);
}

TEST_CASE("dimension filter")
{
    CHECK(dimension_filter(ring(), key("<p^2,p^6>_1")));
    CHECK(dimension_filter(ring(), key("<p^5,p^6>_2")));
    CHECK(dimension_filter(ring(), key("<p^2,p^2,p^2>_0")));
    CHECK_FALSE(dimension_filter(ring(), key("<p^3,p^6>_1")));
    CHECK_FALSE(dimension_filter(ring(), key("<p^5,p^6>_1")));
    // the unit kills every d > 0 correlator
    CHECK_FALSE(dimension_filter(ring(), key("<1,p^2,p^6>_1")));
    CHECK(dimension_filter(ring(), key("<1,p^6>_0")) == false);
}

TEST_CASE("divisor equation")
{
    const auto [c, shorter] = divisor_reduce(ring(), key("<p,p^2,p^6>_1"));
    CHECK(c == 1);
    CHECK(shorter == key("<p^2,p^6>_1"));
    const auto [c2, shorter2] = divisor_reduce(ring(), key("<p,p^5,p^6>_2"));
    CHECK(c2 == 2);
    CHECK(shorter2 == key("<p^5,p^6>_2"));
    CHECK_THROWS_AS(divisor_reduce(ring(), key("<p^2,p^6>_1")), precondition_error);
}

TEST_CASE("classical three-point values")
{
    const auto e = [](const char *l) { return ring().basis_vector(ring().index_of_label(l)); };
    CHECK(classical_correlator(ring(), e("p^2"), e("p^2"), e("p^2")) == 14);
    CHECK(classical_correlator(ring(), e("g2"), e("g2"), e("g2")) == 117);
    CHECK(classical_correlator(ring(), e("p^2"), e("g2"), e("g2")) == 59);
    CHECK(classical_correlator(ring(), e("p"), e("p^2"), e("p^2")) == 0);
}

TEST_CASE("table rejects filtered keys and conflicting values")
{
    gw_table t;
    t.insert(ring(), key("<p^2,p^6>_1"), 238, provenance::paper);
    t.insert(ring(), key("<p^2,p^6>_1"), 238, provenance::paper);
    CHECK(t.size() == 1);
    CHECK_THROWS_AS(t.insert(ring(), key("<p^2,p^6>_1"), 239, provenance::paper), precondition_error);
    CHECK_THROWS_AS(t.insert(ring(), key("<p^3,p^6>_1"), 1, provenance::paper), precondition_error);
}

TEST_CASE("linear forms")
{
    linear_form a{2, {{0, 3}}};
    const linear_form k{5, {}};
    const linear_form prod = a * k;
    CHECK(prod.constant == 10);
    CHECK(prod.terms.at(0) == 15);
    CHECK_THROWS_AS(a * a, precondition_error);
}

TEST_CASE("degree 2 target is reconstructed from the degree 1 inputs")
{
    const gw_entry *e = solved().find(key("<p^5,p^6>_2"));
    REQUIRE(e != nullptr);
    CHECK(e->value == 9800);
    CHECK(e->source == provenance::wdvv_solved);
    CHECK(solved().find(key("<p^2,p^6>_1"))->source == provenance::paper);
}

TEST_CASE("solved degree 1 three-point values agree with an independent elimination")
{
    // Values from a separate dense elimination of the same relation system.
    const std::vector<std::pair<const char *, long>> expected{
        {"<p^2,p^2,p^5>_1", 1218},     {"<p^2,g2,p^5>_1", 2548},       {"<g2,g2,p^5>_1", 5096},
        {"<p^2,p^3,p^4>_1", 2548},     {"<g2,p^3,p^4>_1", 5292},       {"<p^2,p*g2,p^4>_1", 5264},
        {"<p^2,p^3,p^2*g2>_1", 5180},  {"<g2,p^3,p^2*g2>_1", 10710},   {"<p^2,p*g2,p^2*g2>_1", 10705},
        {"<g2,p*g2,p^4>_1", 10668},    {"<g2,p*g2,p^2*g2>_1", 21579},  {"<p^3,p^3,p^3>_1", 3290},
        {"<p^3,p^3,p*g2>_1", 6748},    {"<p^3,p*g2,p*g2>_1", 13790},   {"<p*g2,p*g2,p*g2>_1", 28069},
        {"<p^2,p^4,p^6>_2", 47040},    {"<p^2,p^5,p^5>_2", 110152},    {"<p^4,p^4,p^4>_2", 430808},
        {"<p^2*g2,p^2*g2,p^2*g2>_2", 3564823},
    };
    for (const auto &[k, v] : expected) {
        INFO(k);
        const gw_entry *e = solved().find(key(k));
        REQUIRE(e != nullptr);
        CHECK(e->value == v);
    }
}

TEST_CASE("every unknown is determined and every relation holds")
{
    gw_table table = embedded_dataset().input_table(ring());
    const reconstruction_report rep = reconstruct(ring(), table, 2);
    REQUIRE(rep.stages.size() == 2);
    for (const auto &s : rep.stages) {
        CHECK(s.consistent);
        CHECK(s.undetermined().empty());
        CHECK(s.rank == s.unknowns.size());
    }
    CHECK(rep.stages[0].unknowns.size() == 15);
    CHECK(rep.stages[1].unknowns.size() == 18);
    CHECK(rep.residual_failures == 0);
    CHECK(rep.relations_checked > 0);
}

TEST_CASE("degree 1 relations leave exactly the seven inputs free")
{
    gw_table empty;
    wdvv_system sys(ring(), empty, 1);
    sys.generate_all();
    const wdvv_solution sol = solve_unknowns(sys);
    CHECK(sol.unknowns.size() == 22);
    CHECK(sol.rank == 15);
    CHECK(sol.consistent);
}

TEST_CASE("the target depends on the inputs")
{
    const gw_table inputs = embedded_dataset().input_table(ring());
    gw_table bad;
    for (const auto &[k, e] : inputs.entries()) {
        bad.insert(ring(), k, k == key("<p^4,p^4>_1") ? e.value + 1 : e.value, e.source);
    }
    const reconstruction_report rep = reconstruct(ring(), bad, 2);
    CHECK(rep.residual_failures == 0);
    const gw_entry *e = bad.find(key("<p^5,p^6>_2"));
    REQUIRE(e != nullptr);
    CHECK(e->value == make_scalar(1055791, 108));
}

TEST_CASE("contradictory relations are reported")
{
    gw_table empty;
    wdvv_system sys(ring(), empty, 1);
    sys.add_equation(linear_form{-1, {{0, 1}}});
    sys.add_equation(linear_form{-2, {{0, 1}}});
    CHECK_THROWS_AS(solve_unknowns(sys), inconsistent_error);
}

TEST_CASE("two-point keys passing the filter")
{
    std::vector<std::string> d1;
    std::vector<std::string> d2;
    for (std::size_t i = 0; i < ring().dim(); ++i) {
        for (std::size_t j = i; j < ring().dim(); ++j) {
            for (int d = 1; d <= 3; ++d) {
                const std::string k = "<" + ring().label(i) + "," + ring().label(j) + ">_" + std::to_string(d);
                if (!dimension_filter(ring(), key(k.c_str()))) {
                    continue;
                }
                CHECK(d < 3);
                (d == 1 ? d1 : d2).push_back(k);
            }
        }
    }
    CHECK(d1.size() == 7);
    for (const auto &c : embedded_dataset().degree1_inputs) {
        CHECK(std::find(d1.begin(), d1.end(), key(c.key.c_str()).to_string(ring())) != d1.end());
    }
    CHECK(d2 == std::vector<std::string>{"<p^5,p^6>_2"});
}

TEST_CASE("filter and classical examples")
{
    CHECK_FALSE(dimension_filter(ring(), key("<p,p,p^4>_1")));
    CHECK_FALSE(dimension_filter(ring(), key("<p,p^4>_1")));
    const auto e = [](const char *l) { return ring().basis_vector(ring().index_of_label(l)); };
    CHECK(classical_correlator(ring(), e("p"), e("p^2"), e("p^3")) == 14);
    for (std::size_t i = 0; i < ring().dim(); ++i) {
        for (std::size_t j = 0; j < ring().dim(); ++j) {
            const class_vector x = ring().basis_vector(i);
            const class_vector y = ring().basis_vector(j);
            CHECK(classical_correlator(ring(), e("1"), x, y) == ring().pairing(x, y));
        }
    }
}
