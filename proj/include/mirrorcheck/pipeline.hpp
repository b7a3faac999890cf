#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "mirrorcheck/dataset.hpp"
#include "mirrorcheck/mirror.hpp"
#include "mirrorcheck/qconn.hpp"

namespace mirrorcheck {

enum class stage_source { paper, computed };
std::string to_string(stage_source s);
stage_source parse_stage_source(const std::string &text);

struct run_config {
    int order = 12;
    stage_source source = stage_source::computed;
};

/// Smallest order accepted for runs that extract n_1..n_5.
inline constexpr int min_instanton_order = 8;

/// Outcome of one CLI stage. `ok` is false on a verification mismatch; precondition
/// problems are thrown instead.
struct stage_report {
    std::string stage;
    bool ok = true;
    nlohmann::json body;
    std::string text;
};

/// Lazily computed artifacts shared by the stages, in dependency order:
/// ring -> GW table -> quantum matrix -> reduced operator -> twist quotient -> periods.
class pipeline {
public:
    pipeline(paper_dataset data, run_config config);

    const paper_dataset &data() const { return data_; }
    const run_config &config() const { return config_; }

    const frobenius_algebra &ring();
    /// Inputs plus everything WDVV, classical products and the divisor equation give.
    const gw_table &table();
    const reconstruction_report &reconstruction();
    const quantum_matrix &quantum_p();
    const annihilator_result &annihilator();
    /// P(D): computed, or the listed slices with stage_source::paper.
    const diff_op &reduced_operator();
    const diff_op &twisted();
    /// Exact left quotient of the twist by the dataset's left factor.
    const diff_op &twist_quotient();
    /// Operator whose Frobenius basis feeds the mirror stage.
    const diff_op &period_operator();
    std::string period_operator_name();
    const frobenius_basis &periods();
    const mirror_map_data &map();
    const yukawa_data &yukawa_coupling();

private:
    paper_dataset data_;
    run_config config_;
    std::optional<frobenius_algebra> ring_;
    std::optional<gw_table> table_;
    std::optional<reconstruction_report> reconstruction_;
    std::optional<quantum_matrix> quantum_;
    std::optional<annihilator_result> annihilator_;
    std::optional<diff_op> reduced_;
    std::optional<diff_op> twisted_;
    std::optional<diff_op> quotient_;
    std::optional<diff_op> listed_pf_;
    std::optional<frobenius_basis> periods_;
    std::optional<mirror_map_data> map_;
    std::optional<yukawa_data> yukawa_;
};

stage_report cmd_ring(pipeline &p);
stage_report cmd_wdvv(pipeline &p);
stage_report cmd_qde(pipeline &p);
stage_report cmd_twist(pipeline &p);
/// Requires order >= min_instanton_order (precondition_error).
stage_report cmd_mirror(pipeline &p);
stage_report cmd_instanton(pipeline &p);
/// All of the above with stage_source::computed; ok only if every stage is.
stage_report cmd_verify_all(pipeline &p);
stage_report cmd_dataset(pipeline &p);

} // namespace mirrorcheck
