#include "mirrorcheck/gw.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <set>

#include "mirrorcheck/errors.hpp"

namespace mirrorcheck {

namespace {

std::size_t divisor_index(const frobenius_algebra &ring)
{
    const auto i = ring.index_of({1, 0});
    if (!i) {
        throw precondition_error("basis has no divisor class p");
    }
    return *i;
}

std::size_t unit_index(const frobenius_algebra &ring)
{
    const auto i = ring.index_of({0, 0});
    if (!i) {
        throw precondition_error("basis has no unit class");
    }
    return *i;
}

// Multisets of size k drawn from 0..n-1, in nondecreasing order.
void for_each_multiset(std::size_t n, std::size_t k, std::vector<std::size_t> &current, std::size_t start,
                       const auto &fn)
{
    if (current.size() == k) {
        fn(current);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        current.push_back(i);
        for_each_multiset(n, k, current, i, fn);
        current.pop_back();
    }
}

using normalized_form = std::pair<std::vector<std::pair<std::size_t, scalar>>, scalar>;

// Scales so that the first coefficient is 1; two forms defining the same relation
// normalize identically.
normalized_form normalize(const linear_form &f)
{
    const scalar lead = f.terms.empty() ? f.constant : f.terms.begin()->second;
    normalized_form out;
    for (const auto &[u, c] : f.terms) {
        out.first.emplace_back(u, c / lead);
    }
    out.second = f.constant / lead;
    return out;
}

} // namespace

correlator_key::correlator_key(int degree, std::vector<std::size_t> insertions)
    : degree_(degree), insertions_(std::move(insertions))
{
    std::sort(insertions_.begin(), insertions_.end());
}

bool correlator_key::contains(std::size_t index) const
{
    return std::binary_search(insertions_.begin(), insertions_.end(), index);
}

correlator_key correlator_key::without(std::size_t index) const
{
    auto ins = insertions_;
    const auto it = std::find(ins.begin(), ins.end(), index);
    if (it != ins.end()) {
        ins.erase(it);
    }
    return correlator_key(degree_, std::move(ins));
}

std::string correlator_key::to_string(const frobenius_algebra &ring) const
{
    std::string s = "<";
    for (std::size_t i = 0; i < insertions_.size(); ++i) {
        s += (i ? "," : "") + ring.label(insertions_[i]);
    }
    return s + ">_" + std::to_string(degree_);
}

correlator_key parse_correlator(const frobenius_algebra &ring, const std::string &text)
{
    static const std::regex shape(R"(\s*<([^>]*)>_(\d+)\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, shape)) {
        throw precondition_error("bad correlator '" + text + "', expected <a,b,...>_d");
    }
    std::vector<std::size_t> ins;
    const std::string body = m[1].str();
    std::size_t pos = 0;
    while (pos <= body.size() && !body.empty()) {
        const auto comma = body.find(',', pos);
        std::string label = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        label.erase(std::remove(label.begin(), label.end(), ' '), label.end());
        ins.push_back(ring.index_of_label(label));
        if (comma == std::string::npos) {
            break;
        }
        pos = comma + 1;
    }
    return correlator_key(std::stoi(m[2].str()), std::move(ins));
}

std::string to_string(provenance p)
{
    switch (p) {
    case provenance::paper:
        return "paper";
    case provenance::classical:
        return "classical";
    case provenance::divisor_reduced:
        return "divisor-reduced";
    case provenance::wdvv_solved:
        return "wdvv-solved";
    }
    return "unknown";
}

void gw_table::insert(const frobenius_algebra &ring, const correlator_key &key, const scalar &value,
                      provenance source)
{
    if (!dimension_filter(ring, key)) {
        throw precondition_error(key.to_string(ring) + " fails the dimension filter and is zero");
    }
    const auto it = entries_.find(key);
    if (it != entries_.end()) {
        if (it->second.value != value) {
            throw precondition_error(key.to_string(ring) + " already stored with a different value");
        }
        return;
    }
    entries_.emplace(key, gw_entry{value, source});
}

const gw_entry *gw_table::find(const correlator_key &key) const
{
    const auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second;
}

bool dimension_filter(const frobenius_algebra &ring, const correlator_key &key)
{
    if (key.degree() < 0) {
        return false;
    }
    if (key.degree() > 0 && key.contains(unit_index(ring))) {
        return false;
    }
    int codim_sum = 0;
    for (auto i : key.insertions()) {
        codim_sum += ring.codim(i);
    }
    return codim_sum == ring.top_codim() + q_grading * key.degree() + static_cast<int>(key.points()) - 3;
}

std::pair<scalar, correlator_key> divisor_reduce(const frobenius_algebra &ring, const correlator_key &key)
{
    const std::size_t p = divisor_index(ring);
    if (!key.contains(p)) {
        throw precondition_error("divisor_reduce: " + key.to_string(ring) + " has no p insertion");
    }
    if (key.degree() == 0 && key.points() - 1 < 3) {
        throw precondition_error("divisor_reduce: degree 0 needs at least three other insertions");
    }
    return {scalar(key.degree()), key.without(p)};
}

scalar classical_correlator(const frobenius_algebra &ring, const class_vector &x, const class_vector &y,
                            const class_vector &z)
{
    return ring.pairing(ring.multiply(x, y), z);
}

linear_form &linear_form::operator+=(const linear_form &rhs)
{
    constant += rhs.constant;
    for (const auto &[u, c] : rhs.terms) {
        auto &slot = terms[u];
        slot += c;
        if (slot == 0) {
            terms.erase(u);
        }
    }
    return *this;
}

linear_form &linear_form::operator*=(const scalar &c)
{
    if (c == 0) {
        *this = {};
        return *this;
    }
    constant *= c;
    for (auto &[u, x] : terms) {
        x *= c;
    }
    return *this;
}

linear_form operator*(const linear_form &a, const linear_form &b)
{
    if (!a.is_constant() && !b.is_constant()) {
        throw precondition_error("product of two unknown correlators; lower degrees must be solved first");
    }
    linear_form r = a.is_constant() ? b : a;
    r *= a.is_constant() ? a.constant : b.constant;
    return r;
}

wdvv_system::wdvv_system(const frobenius_algebra &ring, const gw_table &table, int degree)
    : ring_(&ring), table_(&table), degree_(degree)
{
    if (degree < 1) {
        throw precondition_error("wdvv_system: degree must be positive");
    }
    const std::size_t p = divisor_index(ring);
    std::vector<std::size_t> current;
    for (std::size_t points = 1; points <= 3; ++points) {
        for_each_multiset(ring.dim(), points, current, 0, [&](const std::vector<std::size_t> &ins) {
            const correlator_key key(degree, ins);
            if (key.contains(p) || !dimension_filter(ring, key) || table.contains(key)) {
                return;
            }
            unknown_index_.emplace(key, unknowns_.size());
            unknowns_.push_back(key);
        });
    }
}

linear_form wdvv_system::evaluate(const correlator_key &key) const
{
    const frobenius_algebra &ring = *ring_;
    if (!dimension_filter(ring, key)) {
        return {};
    }
    if (key.degree() == 0) {
        if (key.points() != 3) {
            return {};
        }
        const auto &ins = key.insertions();
        return {ring.pairing(ring.product(ins[0], ins[1]), ring.basis_vector(ins[2])), {}};
    }
    if (key.contains(divisor_index(ring))) {
        auto [coefficient, shorter] = divisor_reduce(ring, key);
        linear_form f = evaluate(shorter);
        f *= coefficient;
        return f;
    }
    if (const gw_entry *e = table_->find(key)) {
        return {e->value, {}};
    }
    const auto it = unknown_index_.find(key);
    if (it == unknown_index_.end()) {
        throw precondition_error(key.to_string(ring) + " is neither known nor an unknown of the degree "
                                 + std::to_string(degree_) + " system");
    }
    return {0, {{it->second, scalar(1)}}};
}

linear_form wdvv_system::feynman_sum(std::size_t t1, std::size_t t2, std::size_t t3, std::size_t t4) const
{
    const frobenius_algebra &ring = *ring_;
    const auto &dual = ring.dual_basis();
    linear_form total;
    for (int d1 = 0; d1 <= degree_; ++d1) {
        const int d2 = degree_ - d1;
        for (std::size_t i = 0; i < ring.dim(); ++i) {
            const correlator_key left_key(d1, {t1, t2, i});
            if (!dimension_filter(ring, left_key)) {
                continue;
            }
            const linear_form left = evaluate(left_key);
            if (left.is_zero()) {
                continue;
            }
            linear_form right;
            for (std::size_t k = 0; k < ring.dim(); ++k) {
                if (dual[i][k] == 0) {
                    continue;
                }
                linear_form term = evaluate(correlator_key(d2, {k, t3, t4}));
                term *= dual[i][k];
                right += term;
            }
            total += left * right;
        }
    }
    return total;
}

linear_form wdvv_system::generate(std::size_t t1, std::size_t t2, std::size_t t3, std::size_t t4) const
{
    linear_form eq = feynman_sum(t1, t2, t3, t4);
    linear_form other = feynman_sum(t1, t3, t2, t4);
    other *= scalar(-1);
    eq += other;
    return eq;
}

void wdvv_system::add_equation(linear_form eq)
{
    equations_.push_back(std::move(eq));
}

std::size_t wdvv_system::generate_all()
{
    std::set<normalized_form> seen;
    for (const auto &eq : equations_) {
        if (!eq.is_zero()) {
            seen.insert(normalize(eq));
        }
    }
    std::size_t added = 0;
    const std::size_t n = ring_->dim();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t c = 0; c < n; ++c) {
                for (std::size_t d = 0; d < n; ++d) {
                    linear_form eq = generate(a, b, c, d);
                    if (eq.is_zero() || !seen.insert(normalize(eq)).second) {
                        continue;
                    }
                    equations_.push_back(std::move(eq));
                    ++added;
                }
            }
        }
    }
    return added;
}

std::vector<correlator_key> wdvv_solution::undetermined() const
{
    std::vector<correlator_key> out;
    for (std::size_t i = 0; i < unknowns.size(); ++i) {
        if (!values[i]) {
            out.push_back(unknowns[i]);
        }
    }
    return out;
}

wdvv_solution solve_unknowns(const wdvv_system &system)
{
    wdvv_solution out;
    out.degree = system.degree();
    out.unknowns = system.unknowns();
    out.equations = system.equations().size();
    const std::size_t m = system.equations().size();
    const std::size_t n = system.unknowns().size();
    matrix a(m, n);
    vector_q b(m);
    for (std::size_t r = 0; r < m; ++r) {
        const linear_form &eq = system.equations()[r];
        for (const auto &[u, c] : eq.terms) {
            a(r, u) = c;
        }
        b[r] = -eq.constant;
    }
    const linear_solution s = solve_linear(a, b);
    if (!s.consistent) {
        throw inconsistent_error("degree " + std::to_string(system.degree())
                                 + " WDVV relations are inconsistent; the input correlators are wrong");
    }
    out.consistent = true;
    out.rank = s.rank;
    out.values = s.values;
    return out;
}

reconstruction_report reconstruct(const frobenius_algebra &ring, gw_table &table, int max_degree)
{
    reconstruction_report report;
    for (int d = 1; d <= max_degree; ++d) {
        wdvv_system system(ring, table, d);
        system.generate_all();
        wdvv_solution sol = solve_unknowns(system);
        for (std::size_t i = 0; i < sol.unknowns.size(); ++i) {
            if (sol.values[i]) {
                table.insert(ring, sol.unknowns[i], *sol.values[i], provenance::wdvv_solved);
            }
        }
        report.stages.push_back(std::move(sol));
    }
    for (int d = 0; d <= max_degree; ++d) {
        if (d == 0) {
            // classical relations: associativity of the ring
            const std::size_t n = ring.dim();
            for (std::size_t a = 0; a < n; ++a) {
                for (std::size_t b = 0; b < n; ++b) {
                    for (std::size_t c = 0; c < n; ++c) {
                        for (std::size_t e = 0; e < n; ++e) {
                            const scalar lhs = ring.pairing(ring.multiply(ring.product(a, b), ring.basis_vector(c)), ring.basis_vector(e));
                            const scalar rhs = ring.pairing(ring.multiply(ring.product(a, c), ring.basis_vector(b)), ring.basis_vector(e));
                            ++report.relations_checked;
                            if (lhs != rhs) {
                                ++report.residual_failures;
                            }
                        }
                    }
                }
            }
            continue;
        }
        const wdvv_system check(ring, table, d);
        const std::size_t n = ring.dim();
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                for (std::size_t c = 0; c < n; ++c) {
                    for (std::size_t e = 0; e < n; ++e) {
                        const linear_form eq = check.generate(a, b, c, e);
                        ++report.relations_checked;
                        // Relations that still mention undetermined unknowns are not failures.
                        if (eq.is_constant() && eq.constant != 0) {
                            ++report.residual_failures;
                        }
                    }
                }
            }
        }
    }
    return report;
}

void complete_table(const frobenius_algebra &ring, gw_table &table, int max_degree)
{
    const std::size_t p = divisor_index(ring);
    std::vector<std::size_t> current;
    for (int d = 0; d <= max_degree; ++d) {
        for (std::size_t points = 2; points <= 3; ++points) {
            for_each_multiset(ring.dim(), points, current, 0, [&](const std::vector<std::size_t> &ins) {
                const correlator_key key(d, ins);
                if (!dimension_filter(ring, key) || table.contains(key)) {
                    return;
                }
                if (d == 0) {
                    if (points == 3) {
                        table.insert(ring, key, ring.pairing(ring.product(ins[0], ins[1]), ring.basis_vector(ins[2])),
                                     provenance::classical);
                    }
                    return;
                }
                if (key.contains(p)) {
                    auto [coefficient, shorter] = divisor_reduce(ring, key);
                    scalar value = 0;
                    if (dimension_filter(ring, shorter)) {
                        const gw_entry *e = table.find(shorter);
                        if (!e) {
                            return;
                        }
                        value = e->value;
                    }
                    table.insert(ring, key, coefficient * value, provenance::divisor_reduced);
                }
            });
        }
    }
}

} // namespace mirrorcheck
