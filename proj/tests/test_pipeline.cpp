#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "mirrorcheck/errors.hpp"
#include "mirrorcheck/pipeline.hpp"

using namespace mirrorcheck;

TEST_CASE("embedded dataset survives a JSON round trip")
{
    const paper_dataset &d = embedded_dataset();
    const paper_dataset back = dataset_from_json(to_json(d));
    CHECK(to_json(back) == to_json(d));
    CHECK(back.pf_operator() == d.pf_operator());
    CHECK(back.qde_operator() == d.qde_operator());
    CHECK(back.instanton_numbers == d.instanton_numbers);
}

TEST_CASE("dataset provenance")
{
    const auto j = to_json(embedded_dataset());
    CHECK(j.at("degree1_inputs").at("provenance") == "paper");
    for (const auto &row : j.at("degree1_inputs").at("value")) {
        CHECK(row.at("note") == "embedded input, not recomputed");
    }
    CHECK(j.at("degree1_inputs").at("value").size() == 7);
}

TEST_CASE("malformed datasets are rejected")
{
    auto j = to_json(embedded_dataset());
    j.erase("qde_slices");
    CHECK_THROWS_AS(dataset_from_json(j), precondition_error);

    auto k = to_json(embedded_dataset());
    k["betti"]["value"] = std::vector<int>{1, 1, 2, 2, 2, 2, 1};
    CHECK_THROWS_AS(dataset_from_json(k), precondition_error);

    auto l = to_json(embedded_dataset());
    l["twist_scalar"]["value"] = "3/0";
    CHECK_THROWS_AS(dataset_from_json(l), precondition_error);

    CHECK_THROWS_AS(load_dataset("/nonexistent/dataset.json"), precondition_error);
}

TEST_CASE("dataset file override")
{
    const std::string path = "mirrorcheck_test_dataset.json";
    {
        std::ofstream out(path);
        out << to_json(embedded_dataset()).dump(2);
    }
    const paper_dataset d = load_dataset(path);
    std::remove(path.c_str());
    CHECK(d.version == embedded_dataset().version);
    CHECK(d.pf_operator() == embedded_dataset().pf_operator());
}

TEST_CASE("stage sources agree on the instanton numbers")
{
    pipeline computed(embedded_dataset(), {12, stage_source::computed});
    pipeline listed(embedded_dataset(), {12, stage_source::paper});
    const stage_report a = cmd_instanton(computed);
    const stage_report b = cmd_instanton(listed);
    CHECK(a.ok);
    CHECK(b.ok);
    CHECK(a.body.at("n_d") == b.body.at("n_d"));
    CHECK(a.body.at("operator_source").at("provenance") == "computed");
    CHECK(b.body.at("operator_source").at("provenance") == "paper");
}

TEST_CASE("instanton runs need N >= 8")
{
    pipeline p(embedded_dataset(), {7, stage_source::computed});
    CHECK_THROWS_AS(cmd_mirror(p), precondition_error);
    CHECK_THROWS_AS(cmd_instanton(p), precondition_error);
    CHECK_THROWS_AS(pipeline(embedded_dataset(), {0, stage_source::computed}), precondition_error);
    CHECK_THROWS_AS(parse_stage_source("listed"), precondition_error);
}

TEST_CASE("stage reports")
{
    pipeline p(embedded_dataset(), {12, stage_source::computed});
    CHECK(cmd_ring(p).ok);
    const stage_report w = cmd_wdvv(p);
    CHECK(w.ok);
    CHECK(w.body.at("target").at("computed").at("value") == "9800/1");
    CHECK(w.body.at("target").at("expected").at("provenance") == "paper");
    CHECK(cmd_qde(p).ok);
    const stage_report t = cmd_twist(p);
    CHECK(t.ok);
    CHECK(t.body.at("slice_remainders_zero").at("value") == true);
    CHECK(t.body.at("right_factor").at("value").at("remainder_zero") == true);
    const stage_report m = cmd_mirror(p);
    CHECK(m.ok);
    for (const char *field : {"operator_source", "N", "mirror_map_coefficients", "K_coefficients", "n_d",
                              "theorem1_residual_orders"}) {
        CHECK(m.body.contains(field));
    }
}

TEST_CASE("property: verify-all output is deterministic")
{
    pipeline a(embedded_dataset(), {10, stage_source::computed});
    pipeline b(embedded_dataset(), {10, stage_source::computed});
    const stage_report ra = cmd_verify_all(a);
    const stage_report rb = cmd_verify_all(b);
    CHECK(ra.ok);
    CHECK(ra.body.dump(2) == rb.body.dump(2));
    CHECK(ra.text == rb.text);
}
