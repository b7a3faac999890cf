#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "mirrorcheck/diff_op.hpp"
#include "mirrorcheck/frobenius_algebra.hpp"
#include "mirrorcheck/gw.hpp"

namespace mirrorcheck {

/// Published inputs and reference outputs. Every field is a literal transcription;
/// nothing here is computed.
struct paper_dataset {
    struct correlator_datum {
        std::string key;
        scalar value;
        /// "embedded": taken as given, not recomputed here.
        std::string note;
    };

    std::string version;
    /// Picard-Fuchs operator as collected coefficients c_0(q)..c_4(q) of D^k.
    std::vector<qpoly> pf_coefficients;
    /// Reduced quantum operator slices P_0(D)..P_5(D).
    std::vector<dpoly> qde_slices;
    std::vector<std::pair<monomial, scalar>> top_values;
    std::vector<int> betti;
    /// Degree-1 two-point correlators used as WDVV input.
    std::vector<correlator_datum> degree1_inputs;
    /// Correlator the reconstruction must reproduce.
    correlator_datum wdvv_target;
    std::vector<integer> instanton_numbers;
    /// H_d = prod_{m=1}^d (p + m)^twist_exponent.
    int twist_exponent = 3;
    /// Left factor removed after twisting: D^3 (D - 1)^3.
    dpoly twist_left_factor;
    /// Scalar relating the twisted quotient to the Picard-Fuchs operator.
    scalar twist_scalar;
    scalar classical_yukawa;

    diff_op pf_operator() const;
    diff_op qde_operator() const;
    frobenius_algebra ring() const;
    /// Table holding the degree-1 inputs with provenance::paper.
    gw_table input_table(const frobenius_algebra &ring) const;
};

/// The built-in dataset, checked for internal consistency on first use.
const paper_dataset &embedded_dataset();

nlohmann::json to_json(const paper_dataset &data);
/// Throws precondition_error on missing fields or malformed values.
paper_dataset dataset_from_json(const nlohmann::json &j);
paper_dataset load_dataset(const std::string &path);

/// Cheap structural checks: slice counts, Betti numbers of the ring, target key
/// shape. Throws precondition_error describing the first problem.
void validate(const paper_dataset &data);

nlohmann::json qpoly_to_json(const qpoly &p);
nlohmann::json dpoly_to_json(const dpoly &p);

} // namespace mirrorcheck
