#include "mirrorcheck/pipeline.hpp"

#include <sstream>

#include "mirrorcheck/errors.hpp"

namespace mirrorcheck {

using nlohmann::json;

namespace {

json tagged(const char *source, json value)
{
    return json{{"provenance", source}, {"value", std::move(value)}};
}

json computed(json value) { return tagged("computed", std::move(value)); }
json from_paper(json value) { return tagged("paper", std::move(value)); }

json series_json(const power_series &f)
{
    json arr = json::array();
    for (int k = 0; k <= f.order(); ++k) {
        arr.push_back(to_string(f[k]));
    }
    return arr;
}

json matrix_json(const matrix &m)
{
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            row.push_back(to_string(m(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

json operator_json(const diff_op &op)
{
    json slices = json::array();
    for (const auto &s : op.slices()) {
        slices.push_back(dpoly_to_json(s));
    }
    return json{{"order", op.order()},
                {"q_degree", op.q_degree()},
                {"slices", std::move(slices)},
                {"monomial_form", op.render_monomial()},
                {"collected_form", op.render_collected()}};
}

json integers_json(const std::vector<integer> &v)
{
    json arr = json::array();
    for (const auto &n : v) {
        arr.push_back(n.get_str());
    }
    return arr;
}

std::string yes_no(bool b) { return b ? "yes" : "NO"; }

void require_instanton_order(const pipeline &p)
{
    if (p.config().order < min_instanton_order) {
        throw precondition_error("--order must be at least " + std::to_string(min_instanton_order)
                                 + " for instanton extraction, got " + std::to_string(p.config().order));
    }
}

std::size_t expected_count(const pipeline &p)
{
    return std::min(p.data().instanton_numbers.size(), static_cast<std::size_t>(p.config().order));
}

} // namespace

std::string to_string(stage_source s) { return s == stage_source::paper ? "paper" : "computed"; }

stage_source parse_stage_source(const std::string &text)
{
    if (text == "paper") {
        return stage_source::paper;
    }
    if (text == "computed") {
        return stage_source::computed;
    }
    throw precondition_error("stage source must be 'paper' or 'computed', got '" + text + "'");
}

pipeline::pipeline(paper_dataset data, run_config config) : data_(std::move(data)), config_(config)
{
    if (config_.order < 1) {
        throw precondition_error("--order must be positive");
    }
}

const frobenius_algebra &pipeline::ring()
{
    if (!ring_) {
        ring_ = data_.ring();
    }
    return *ring_;
}

const reconstruction_report &pipeline::reconstruction()
{
    if (!reconstruction_) {
        gw_table t = data_.input_table(ring());
        reconstruction_ = reconstruct(ring(), t, 2);
        complete_table(ring(), t, 2);
        table_ = std::move(t);
    }
    return *reconstruction_;
}

const gw_table &pipeline::table()
{
    reconstruction();
    return *table_;
}

const quantum_matrix &pipeline::quantum_p()
{
    if (!quantum_) {
        quantum_ = build_quantum_p(ring(), table());
    }
    return *quantum_;
}

const annihilator_result &pipeline::annihilator()
{
    if (!annihilator_) {
        annihilator_ = find_annihilator(ring(), quantum_p());
    }
    return *annihilator_;
}

const diff_op &pipeline::reduced_operator()
{
    if (!reduced_) {
        reduced_ = config_.source == stage_source::paper ? data_.qde_operator() : annihilator().op;
    }
    return *reduced_;
}

const diff_op &pipeline::twisted()
{
    if (!twisted_) {
        twisted_ = hyperplane_twist(reduced_operator(), data_.twist_exponent);
    }
    return *twisted_;
}

const diff_op &pipeline::twist_quotient()
{
    if (!quotient_) {
        quotient_ = left_divide_exact(twisted(), data_.twist_left_factor);
    }
    return *quotient_;
}

const diff_op &pipeline::period_operator()
{
    if (config_.source == stage_source::paper) {
        if (!listed_pf_) {
            listed_pf_ = data_.pf_operator();
        }
        return *listed_pf_;
    }
    return twist_quotient();
}

std::string pipeline::period_operator_name()
{
    return config_.source == stage_source::paper ? "listed Picard-Fuchs operator"
                                                 : "twist quotient of the computed reduced operator";
}

const frobenius_basis &pipeline::periods()
{
    if (!periods_) {
        periods_ = frobenius_solve(period_operator(), config_.order, 4);
    }
    return *periods_;
}

const mirror_map_data &pipeline::map()
{
    if (!map_) {
        map_ = mirror_map(periods());
    }
    return *map_;
}

const yukawa_data &pipeline::yukawa_coupling()
{
    if (!yukawa_) {
        yukawa_ = yukawa(periods(), map(), data_.classical_yukawa);
    }
    return *yukawa_;
}

stage_report cmd_ring(pipeline &p)
{
    const frobenius_algebra &ring = p.ring();
    stage_report r;
    r.stage = "ring";
    std::ostringstream text;

    json basis = json::array();
    for (std::size_t i = 0; i < ring.dim(); ++i) {
        basis.push_back(json{{"index", i}, {"label", ring.label(i)}, {"codim", ring.codim(i)}});
    }
    json products = json::array();
    for (std::size_t i = 0; i < ring.dim(); ++i) {
        for (std::size_t j = i; j < ring.dim(); ++j) {
            const class_vector &x = ring.product(i, j);
            if (x.is_zero()) {
                continue;
            }
            json coords = json::array();
            for (const auto &c : x.coords()) {
                coords.push_back(to_string(c));
            }
            products.push_back(json{{"left", ring.label(i)},
                                    {"right", ring.label(j)},
                                    {"product", ring.format(x)},
                                    {"coordinates", std::move(coords)}});
        }
    }
    json dual = json::array();
    for (std::size_t i = 0; i < ring.dim(); ++i) {
        dual.push_back(json{{"class", ring.label(i)}, {"dual", ring.format(ring.dual_basis()[i])}});
    }
    const axiom_report axioms = check_axioms(ring);
    const bool betti_ok = ring.betti() == p.data().betti;
    const std::size_t g2 = ring.index_of_label("g2");

    json top = json::array();
    for (const auto &[m, v] : p.data().top_values) {
        top.push_back(json{{"monomial", to_string(m)}, {"value", to_string(v)}});
    }
    r.body = {
        {"top_values", from_paper(std::move(top))},
        {"basis", computed(std::move(basis))},
        {"structure_constants", computed(std::move(products))},
        {"pairing_matrix", computed(matrix_json(ring.gram()))},
        {"dual_basis", computed(std::move(dual))},
        {"g2_squared", computed(ring.format(ring.product(g2, g2)))},
        {"betti", computed(ring.betti())},
        {"betti_expected", from_paper(p.data().betti)},
        {"axioms", computed(json{{"triples_checked", axioms.triples_checked},
                                 {"associative", axioms.associative},
                                 {"commutative", axioms.commutative},
                                 {"unital", axioms.unital},
                                 {"frobenius", axioms.frobenius},
                                 {"graded", axioms.graded}})},
    };
    r.ok = betti_ok && axioms.ok();

    text << "basis:";
    for (std::size_t i = 0; i < ring.dim(); ++i) {
        text << ' ' << ring.label(i);
    }
    text << "\nbetti: [";
    for (std::size_t k = 0; k < ring.betti().size(); ++k) {
        text << (k ? "," : "") << ring.betti()[k];
    }
    text << "] expected match: " << yes_no(betti_ok) << '\n';
    text << "products:\n";
    for (const auto &row : r.body["structure_constants"]["value"]) {
        text << "  " << row["left"].get<std::string>() << " * " << row["right"].get<std::string>() << " = "
             << row["product"].get<std::string>() << '\n';
    }
    text << "pairing matrix:\n";
    for (std::size_t i = 0; i < ring.dim(); ++i) {
        text << " ";
        for (std::size_t j = 0; j < ring.dim(); ++j) {
            text << ' ' << to_pretty(ring.gram()(i, j));
        }
        text << '\n';
    }
    text << "dual basis:\n";
    for (std::size_t i = 0; i < ring.dim(); ++i) {
        text << "  (" << ring.label(i) << ")^ = " << ring.format(ring.dual_basis()[i]) << '\n';
    }
    text << "axioms over " << axioms.triples_checked << " basis triples: " << yes_no(axioms.ok()) << '\n';
    r.text = text.str();
    return r;
}

stage_report cmd_wdvv(pipeline &p)
{
    const frobenius_algebra &ring = p.ring();
    const reconstruction_report &rec = p.reconstruction();
    const gw_table &table = p.table();
    stage_report r;
    r.stage = "wdvv";
    std::ostringstream text;

    json stages = json::array();
    bool consistent = true;
    for (const auto &s : rec.stages) {
        json undetermined = json::array();
        for (const auto &k : s.undetermined()) {
            undetermined.push_back(k.to_string(ring));
        }
        consistent = consistent && s.consistent;
        stages.push_back(json{{"degree", s.degree},
                              {"equations", s.equations},
                              {"unknowns", s.unknowns.size()},
                              {"rank", s.rank},
                              {"consistent", s.consistent},
                              {"undetermined", std::move(undetermined)}});
        text << "degree " << s.degree << ": " << s.equations << " relations, " << s.unknowns.size()
             << " unknowns, rank " << s.rank << ", undetermined " << s.undetermined().size() << '\n';
    }
    std::map<std::string, std::string> notes;
    for (const auto &c : p.data().degree1_inputs) {
        notes[parse_correlator(ring, c.key).to_string(ring)] = c.note;
    }
    json entries = json::array();
    for (const auto &[key, e] : table.entries()) {
        json row{{"key", key.to_string(ring)}, {"value", to_string(e.value)}, {"provenance", to_string(e.source)}};
        if (const auto it = notes.find(key.to_string(ring)); it != notes.end()) {
            row["note"] = it->second;
        }
        entries.push_back(std::move(row));
    }
    const auto &target = p.data().wdvv_target;
    const correlator_key target_key = parse_correlator(ring, target.key);
    const gw_entry *found = table.find(target_key);
    const bool target_ok = found && found->value == target.value;

    r.body = {
        {"stages", computed(std::move(stages))},
        {"relations_checked", computed(rec.relations_checked)},
        {"residual_failures", computed(rec.residual_failures)},
        {"table", computed(std::move(entries))},
        {"target", json{{"key", target_key.to_string(ring)},
                        {"computed", computed(found ? json(to_string(found->value)) : json(nullptr))},
                        {"expected", from_paper(to_string(target.value))}}},
    };
    r.ok = consistent && rec.residual_failures == 0 && target_ok;

    text << "relations re-checked: " << rec.relations_checked << ", failing: " << rec.residual_failures << '\n';
    text << "table: " << table.size() << " correlators\n";
    for (const auto &[key, e] : table.entries()) {
        if (key.degree() > 0) {
            text << "  " << key.to_string(ring) << " = " << to_pretty(e.value) << "  [" << to_string(e.source) << "]\n";
        }
    }
    text << "target " << target_key.to_string(ring) << ": "
         << (found ? to_pretty(found->value) : std::string("undetermined")) << ", expected "
         << to_pretty(target.value) << ", match: " << yes_no(target_ok) << '\n';
    r.text = text.str();
    return r;
}

stage_report cmd_qde(pipeline &p)
{
    const frobenius_algebra &ring = p.ring();
    const quantum_matrix &m = p.quantum_p();
    const annihilator_result &an = p.annihilator();
    const diff_op listed = p.data().qde_operator();
    stage_report r;
    r.stage = "qde";
    std::ostringstream text;

    json terms = json::array();
    for (const auto &md : m.terms) {
        terms.push_back(matrix_json(md));
    }
    const bool graded = grading_check(ring, m);
    const bool adjoint = is_self_adjoint(ring, m);

    json comparison = json::array();
    bool slices_match = true;
    const int slices = std::max(an.op.q_degree(), listed.q_degree());
    for (int d = 0; d <= slices; ++d) {
        const bool same = an.op.slice(d) == listed.slice(d);
        slices_match = slices_match && same;
        comparison.push_back(json{{"d", d},
                                  {"computed", computed(dpoly_to_json(an.op.slice(d)))},
                                  {"expected", from_paper(dpoly_to_json(listed.slice(d)))},
                                  {"match", same}});
    }

    const int order = p.config().order;
    const fundamental_solution fs = integrate_fundamental(m, order);
    bool flat = true;
    for (std::size_t c = 0; c < fs.dim(); ++c) {
        for (const auto &res : connection_residual(m, fs.column(c))) {
            flat = flat && res.is_zero();
        }
    }
    json j_check = nullptr;
    bool j_ok = true;
    if (order >= an.op.q_degree()) {
        for (const auto &j : j_components(ring, fs)) {
            j_ok = j_ok && apply(an.op, j).is_zero();
        }
        j_check = j_ok;
    }

    r.body = {
        {"quantum_matrix", computed(std::move(terms))},
        {"grading", computed(graded)},
        {"self_adjoint", computed(adjoint)},
        {"nullity", computed(an.nullity)},
        {"operator", computed(operator_json(an.op))},
        {"comparison", std::move(comparison)},
        {"N", order},
        {"fundamental_solution_flat", computed(flat)},
        {"annihilates_j_components", computed(j_check)},
    };
    r.ok = graded && adjoint && an.nullity == 1 && slices_match && flat && j_ok;

    text << "quantum matrix: q-degree " << m.q_degree() << ", grading " << yes_no(graded) << ", self-adjoint "
         << yes_no(adjoint) << '\n';
    text << "annihilator: order " << an.op.order() << ", q-degree " << an.op.q_degree() << ", nullity " << an.nullity
         << '\n';
    text << "P(D) = " << an.op.render_monomial() << '\n';
    text << "collected: " << an.op.render_collected() << '\n';
    text << "diff against listed P_d:\n";
    for (int d = 0; d <= slices; ++d) {
        if (an.op.slice(d) == listed.slice(d)) {
            text << "  P_" << d << ": match\n";
        } else {
            text << "  P_" << d << ": computed " << an.op.slice(d).to_string("D") << "\n        listed   "
                 << listed.slice(d).to_string("D") << '\n';
        }
    }
    text << "fundamental solution flat through q^" << order << ": " << yes_no(flat) << '\n';
    if (!j_check.is_null()) {
        text << "P(D) annihilates <S Delta^i, 1>: " << yes_no(j_ok) << '\n';
    }
    r.text = text.str();
    return r;
}

stage_report cmd_twist(pipeline &p)
{
    stage_report r;
    r.stage = "twist";
    std::ostringstream text;
    const diff_op &input = p.reduced_operator();
    const diff_op &twisted = p.twisted();
    const diff_op pf = p.data().pf_operator();
    r.body = {
        {"input_operator", tagged(to_string(p.config().source).c_str(), operator_json(input))},
        {"twist_exponent", from_paper(p.data().twist_exponent)},
        {"left_factor", from_paper(dpoly_to_json(p.data().twist_left_factor))},
        {"twisted", computed(operator_json(twisted))},
    };
    text << "input P(D) [" << to_string(p.config().source) << "]: order " << input.order() << ", q-degree "
         << input.q_degree() << '\n';
    text << "twisted: order " << twisted.order() << ", q-degree " << twisted.q_degree() << '\n';

    const diff_op *quotient = nullptr;
    try {
        quotient = &p.twist_quotient();
    } catch (const inexact_error &e) {
        r.body["slice_remainders_zero"] = computed(false);
        r.body["division_error"] = e.what();
        r.ok = false;
        text << "left division by " << p.data().twist_left_factor.to_string("D") << ": " << e.what() << '\n';
        r.text = text.str();
        return r;
    }
    r.body["slice_remainders_zero"] = computed(true);
    r.body["quotient"] = computed(operator_json(*quotient));
    text << "left division by " << p.data().twist_left_factor.to_string("D") << ": every slice exact\n";
    text << "quotient R = " << quotient->render_collected() << '\n';

    const std::optional<scalar> factor = proportionality_factor(*quotient, pf);
    const bool literal = factor && *factor == p.data().twist_scalar;
    json slice_orders = json::array();
    for (const auto &s : quotient->slices()) {
        slice_orders.push_back(s.degree());
    }
    r.body["literal_comparison"] = json{
        {"proportional", computed(factor.has_value())},
        {"scalar", computed(factor ? json(to_string(*factor)) : json(nullptr))},
        {"expected_scalar", from_paper(to_string(p.data().twist_scalar))},
        {"quotient_slice_orders", computed(std::move(slice_orders))},
        {"pf_order", computed(pf.order())},
        {"match", literal},
    };
    text << "R = c * (Picard-Fuchs operator): "
         << (factor ? "yes, c = " + to_pretty(*factor) : std::string("NO (order ") + std::to_string(quotient->order())
                                                             + " vs " + std::to_string(pf.order()) + ")")
         << '\n';

    const pseudo_division pd = right_pseudo_divide(*quotient, pf);
    const bool right_factor = pd.remainder.is_zero();
    r.body["right_factor"] = computed(json{{"remainder_zero", right_factor},
                                           {"multiplier_power", pd.multiplier_power},
                                           {"cofactor_order", pd.quotient.order()},
                                           {"cofactor_q_degree", pd.quotient.q_degree()}});
    text << "Picard-Fuchs operator is an exact right factor of R: " << yes_no(right_factor) << " (cofactor order "
         << pd.quotient.order() << ", multiplier power " << pd.multiplier_power << ")\n";

    const frobenius_basis pf_periods = frobenius_solve(pf, p.config().order, 4);
    bool annihilated = true;
    for (const auto &f : pf_periods.solutions) {
        annihilated = annihilated && apply(*quotient, f).is_zero();
    }
    r.body["annihilates_pf_periods"] = computed(annihilated);
    r.body["N"] = p.config().order;
    text << "R annihilates the Frobenius periods of the Picard-Fuchs operator through q^" << p.config().order << ": "
         << yes_no(annihilated) << '\n';
    r.ok = right_factor && annihilated;
    r.text = text.str();
    return r;
}

stage_report cmd_mirror(pipeline &p)
{
    require_instanton_order(p);
    const int order = p.config().order;
    const frobenius_basis &basis = p.periods();
    const mirror_map_data &map = p.map();
    const yukawa_data &y = p.yukawa_coupling();
    const std::size_t count = expected_count(p);
    const std::vector<integer> n = instanton_extract(y.K, static_cast<int>(count));
    const std::vector<integer> expected(p.data().instanton_numbers.begin(),
                                        p.data().instanton_numbers.begin() + static_cast<std::ptrdiff_t>(count));
    const auto residuals = verify_theorem1(basis, map, y.K);
    stage_report r;
    r.stage = "mirror";
    std::ostringstream text;

    json orders = json::array();
    bool residuals_ok = true;
    for (const auto &res : residuals) {
        orders.push_back(json{{"solution", res.solution},
                              {"checked_through", res.checked_through},
                              {"first_nonzero", res.first_nonzero ? json(*res.first_nonzero) : json(nullptr)}});
        residuals_ok = residuals_ok && res.vanishes_through(order - 2);
    }
    const bool n_ok = n == expected;
    r.body = {
        {"operator_source", tagged(to_string(p.config().source).c_str(), p.period_operator_name())},
        {"N", order},
        {"I0_coefficients", computed(series_json(basis[0].part(0)))},
        {"mirror_map_coefficients", computed(json{{"t", series_json(map.t_series)},
                                                  {"Q_of_q", series_json(map.Q_of_q)},
                                                  {"q_of_Q", series_json(map.q_of_Q)}})},
        {"K_coefficients", computed(series_json(y.K))},
        {"n_d", computed(integers_json(n))},
        {"n_d_expected", from_paper(integers_json(expected))},
        {"theorem1_residual_orders", computed(std::move(orders))},
        {"checks", json{{"R_log_free", y.second_derivative.is_log_free()},
                        {"n_d_match", n_ok},
                        {"residuals_vanish_through", order - 2},
                        {"residuals_ok", residuals_ok}}},
    };
    r.ok = n_ok && residuals_ok;

    text << "operator: " << p.period_operator_name() << " [" << to_string(p.config().source) << "]\n";
    text << "I_0 = " << basis[0].part(0).to_string('q') << '\n';
    text << "q(Q) = " << map.q_of_Q.to_string('Q') << '\n';
    text << "K = " << y.K.to_string('Q') << '\n';
    for (std::size_t d = 0; d < n.size(); ++d) {
        text << "n_" << d + 1 << " = " << n[d].get_str() << (n[d] == expected[d] ? "" : "  expected " + expected[d].get_str())
             << '\n';
    }
    for (const auto &res : residuals) {
        text << "D^2 (1/K) D^2 (" << res.solution << "): "
             << (res.first_nonzero ? "nonzero at Q^" + std::to_string(*res.first_nonzero)
                                   : "zero through Q^" + std::to_string(res.checked_through))
             << '\n';
    }
    r.text = text.str();
    return r;
}

stage_report cmd_instanton(pipeline &p)
{
    require_instanton_order(p);
    const std::size_t count = expected_count(p);
    const std::vector<integer> n = instanton_extract(p.yukawa_coupling().K, static_cast<int>(count));
    stage_report r;
    r.stage = "instanton";
    std::ostringstream text;
    json rows = json::array();
    for (std::size_t d = 0; d < count; ++d) {
        const integer &want = p.data().instanton_numbers[d];
        const bool same = n[d] == want;
        r.ok = r.ok && same;
        rows.push_back(json{{"d", d + 1},
                            {"computed", computed(n[d].get_str())},
                            {"expected", from_paper(want.get_str())},
                            {"match", same}});
        text << "n_" << d + 1 << " = " << n[d].get_str() << "  expected " << want.get_str() << "  " << (same ? "ok" : "MISMATCH")
             << '\n';
    }
    r.body = {
        {"operator_source", tagged(to_string(p.config().source).c_str(), p.period_operator_name())},
        {"N", p.config().order},
        {"n_d", std::move(rows)},
    };
    r.text = text.str();
    return r;
}

stage_report cmd_verify_all(pipeline &p)
{
    pipeline chain(p.data(), run_config{p.config().order, stage_source::computed});
    stage_report r;
    r.stage = "verify-all";
    std::ostringstream text;
    json stages = json::array();
    json failed = json::array();
    pipeline listed(p.data(), run_config{p.config().order, stage_source::paper});
    const auto record = [&](const stage_report &s, const std::string &name) {
        stages.push_back(json{{"stage", name}, {"ok", s.ok}, {"report", s.body}});
        if (!s.ok) {
            failed.push_back(name);
        }
        r.ok = r.ok && s.ok;
        text << "== " << name << " [" << (s.ok ? "ok" : "MISMATCH") << "]\n" << s.text;
    };
    for (auto *cmd : {cmd_ring, cmd_wdvv, cmd_qde, cmd_twist, cmd_mirror}) {
        const stage_report s = cmd(chain);
        record(s, s.stage);
    }
    // the mirror check again, on the listed Picard-Fuchs operator
    record(cmd_mirror(listed), "mirror-listed");
    r.body = {{"N", p.config().order}, {"stages", std::move(stages)}, {"ok", r.ok}, {"failed", std::move(failed)}};
    text << "== verdict: " << (r.ok ? "ok" : "MISMATCH") << '\n';
    r.text = text.str();
    return r;
}

stage_report cmd_dataset(pipeline &p)
{
    stage_report r;
    r.stage = "dataset";
    r.body = to_json(p.data());
    r.text = r.body.dump(2) + "\n";
    return r;
}

} // namespace mirrorcheck
