#include "mirrorcheck/dataset.hpp"

#include <fstream>
#include <map>

#include "mirrorcheck/errors.hpp"

namespace mirrorcheck {

using nlohmann::json;

namespace {

qpoly qp(std::initializer_list<long> c) { return qpoly(c); }
dpoly dp(std::initializer_list<long> c) { return dpoly(c); }

paper_dataset make_embedded()
{
    paper_dataset d;
    d.version = "1";
    d.pf_coefficients = {
        qpoly::monomial(1) * qp({-17, -202, -8, -54, 9}),
        qpoly::monomial(1, 2) * qp({-69, -481, 159, -171, 18}),
        qpoly::monomial(1, 2) * qp({-212, -473, 725, -435, 27}),
        qpoly::monomial(1, 4) * qp({-1, 3}) * qp({143, 57, -87, 3}),
        qp({1, -289, -57, 1}) * qp({1, -3}).pow(2),
    };
    d.qde_slices = {
        dpoly::monomial(7, 3) * dpoly::linear(-1).pow(3),
        dpoly::monomial(3) * dp({-51, -414, -1272, -1716, -1405, 1072, -776, 194}),
        dp({-96, -480, -896, 1850, 10697, -460, -55484, -58593, 3185, -1715, 343}),
        dp({-2175, -13495, -31654, -34797, -11772, 22736, 0, -99127}),
        dp({-1430, -11524, -31360, -39102, -19551}),
        dpoly::linear(1) * scalar(343),
    };
    d.top_values = {
        {{6, 0}, 14},
        {{4, 1}, 28},
        {{2, 2}, 59},
        {{0, 3}, 117},
    };
    d.betti = {1, 1, 2, 2, 2, 1, 1};
    const std::string embedded = "embedded input, not recomputed";
    d.degree1_inputs = {
        {"<p^2,p^6>_1", 238, embedded},  {"<g2,p^6>_1", 504, embedded},       {"<p^3,p^5>_1", 980, embedded},
        {"<p*g2,p^5>_1", 2044, embedded}, {"<p^4,p^4>_1", 1568, embedded},     {"<p^4,p^2*g2>_1", 3220, embedded},
        {"<p^2*g2,p^2*g2>_1", 6617, embedded},
    };
    d.wdvv_target = {"<p^5,p^6>_2", 9800, "reference value"};
    d.instanton_numbers = {integer(588), integer(12103), integer(583884), integer(41359136),
                           integer("3609394096")};
    d.twist_exponent = 3;
    d.twist_left_factor = dpoly::monomial(3) * dpoly::linear(-1).pow(3);
    d.twist_scalar = 3;
    d.classical_yukawa = 14;
    return d;
}

template <class Poly>
json poly_json(const Poly &p)
{
    json arr = json::array();
    for (const auto &c : p.coefficients()) {
        arr.push_back(to_string(c));
    }
    return arr;
}

template <class Poly>
Poly poly_from(const json &j)
{
    std::vector<scalar> c;
    for (const auto &x : j) {
        c.push_back(parse_scalar(x.get<std::string>()));
    }
    return Poly(std::move(c));
}

json section(json value)
{
    return json{{"provenance", "paper"}, {"value", std::move(value)}};
}

const json &value_of(const json &j, const char *name)
{
    if (!j.contains(name)) {
        throw precondition_error(std::string("dataset: missing field '") + name + "'");
    }
    const json &s = j.at(name);
    return s.is_object() && s.contains("value") ? s.at("value") : s;
}

json datum_json(const paper_dataset::correlator_datum &c)
{
    return json{{"key", c.key}, {"value", to_string(c.value)}, {"note", c.note}};
}

paper_dataset::correlator_datum datum_from(const json &j)
{
    return {j.at("key").get<std::string>(), parse_scalar(j.at("value").get<std::string>()),
            j.value("note", std::string())};
}

} // namespace

diff_op paper_dataset::pf_operator() const { return diff_op::from_coefficients(pf_coefficients); }

diff_op paper_dataset::qde_operator() const
{
    diff_op op;
    for (std::size_t d = 0; d < qde_slices.size(); ++d) {
        op = op + diff_op::slice_op(static_cast<int>(d), qde_slices[d]);
    }
    return op;
}

frobenius_algebra paper_dataset::ring() const
{
    std::map<monomial, scalar> top(top_values.begin(), top_values.end());
    return frobenius_algebra::build(top);
}

gw_table paper_dataset::input_table(const frobenius_algebra &r) const
{
    gw_table t;
    for (const auto &c : degree1_inputs) {
        t.insert(r, parse_correlator(r, c.key), c.value, provenance::paper);
    }
    return t;
}

void validate(const paper_dataset &data)
{
    if (data.pf_coefficients.empty()) {
        throw precondition_error("dataset: Picard-Fuchs operator has no coefficients");
    }
    if (data.qde_slices.empty() || data.qde_slices.front().is_zero()) {
        throw precondition_error("dataset: reduced operator needs a nonzero q^0 slice");
    }
    if (data.twist_exponent <= 0) {
        throw precondition_error("dataset: twist exponent must be positive");
    }
    if (data.twist_left_factor.is_zero() || data.twist_scalar == 0 || data.classical_yukawa == 0) {
        throw precondition_error("dataset: twist factor, twist scalar and classical Yukawa value must be nonzero");
    }
    const frobenius_algebra r = data.ring();
    if (r.betti() != data.betti) {
        throw precondition_error("dataset: top values do not produce the listed Betti numbers");
    }
    const gw_table t = data.input_table(r);
    if (t.size() != data.degree1_inputs.size()) {
        throw precondition_error("dataset: duplicate correlator inputs");
    }
    const correlator_key target = parse_correlator(r, data.wdvv_target.key);
    if (!dimension_filter(r, target)) {
        throw precondition_error("dataset: target " + data.wdvv_target.key + " fails the dimension filter");
    }
    for (const auto &n : data.instanton_numbers) {
        if (n <= 0) {
            throw precondition_error("dataset: instanton numbers must be positive");
        }
    }
}

const paper_dataset &embedded_dataset()
{
    static const paper_dataset data = [] {
        paper_dataset d = make_embedded();
        validate(d);
        return d;
    }();
    return data;
}

json qpoly_to_json(const qpoly &p) { return poly_json(p); }
json dpoly_to_json(const dpoly &p) { return poly_json(p); }

json to_json(const paper_dataset &data)
{
    json pf = json::array();
    for (const auto &c : data.pf_coefficients) {
        pf.push_back(poly_json(c));
    }
    json slices = json::array();
    for (const auto &s : data.qde_slices) {
        slices.push_back(poly_json(s));
    }
    json top = json::array();
    for (const auto &[m, v] : data.top_values) {
        top.push_back(json{{"monomial", to_string(m)}, {"value", to_string(v)}});
    }
    json inputs = json::array();
    for (const auto &c : data.degree1_inputs) {
        inputs.push_back(datum_json(c));
    }
    json ns = json::array();
    for (const auto &n : data.instanton_numbers) {
        ns.push_back(n.get_str());
    }
    return json{
        {"version", data.version},
        {"pf_coefficients", section(std::move(pf))},
        {"qde_slices", section(std::move(slices))},
        {"top_values", section(std::move(top))},
        {"betti", section(data.betti)},
        {"degree1_inputs", section(std::move(inputs))},
        {"wdvv_target", section(datum_json(data.wdvv_target))},
        {"instanton_numbers", section(std::move(ns))},
        {"twist_exponent", section(data.twist_exponent)},
        {"twist_left_factor", section(poly_json(data.twist_left_factor))},
        {"twist_scalar", section(to_string(data.twist_scalar))},
        {"classical_yukawa", section(to_string(data.classical_yukawa))},
    };
}

paper_dataset dataset_from_json(const json &j)
{
    try {
        paper_dataset d;
        d.version = j.value("version", std::string("unversioned"));
        for (const auto &c : value_of(j, "pf_coefficients")) {
            d.pf_coefficients.push_back(poly_from<qpoly>(c));
        }
        for (const auto &s : value_of(j, "qde_slices")) {
            d.qde_slices.push_back(poly_from<dpoly>(s));
        }
        for (const auto &t : value_of(j, "top_values")) {
            d.top_values.emplace_back(parse_monomial(t.at("monomial").get<std::string>()),
                                      parse_scalar(t.at("value").get<std::string>()));
        }
        d.betti = value_of(j, "betti").get<std::vector<int>>();
        for (const auto &c : value_of(j, "degree1_inputs")) {
            d.degree1_inputs.push_back(datum_from(c));
        }
        d.wdvv_target = datum_from(value_of(j, "wdvv_target"));
        for (const auto &n : value_of(j, "instanton_numbers")) {
            d.instanton_numbers.emplace_back(n.get<std::string>());
        }
        d.twist_exponent = value_of(j, "twist_exponent").get<int>();
        d.twist_left_factor = poly_from<dpoly>(value_of(j, "twist_left_factor"));
        d.twist_scalar = parse_scalar(value_of(j, "twist_scalar").get<std::string>());
        d.classical_yukawa = parse_scalar(value_of(j, "classical_yukawa").get<std::string>());
        validate(d);
        return d;
    } catch (const json::exception &e) {
        throw precondition_error(std::string("dataset: ") + e.what());
    }
}

paper_dataset load_dataset(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw precondition_error("dataset: cannot open " + path);
    }
    json j;
    try {
        in >> j;
    } catch (const json::exception &e) {
        throw precondition_error("dataset: " + path + ": " + e.what());
    }
    return dataset_from_json(j);
}

} // namespace mirrorcheck
