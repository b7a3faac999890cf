#include "mirrorcheck/frobenius_algebra.hpp"

#include <algorithm>
#include <regex>

#include "mirrorcheck/errors.hpp"

namespace mirrorcheck {

std::string to_string(const monomial &m)
{
    std::string s;
    if (m.p_exp > 0) {
        s += m.p_exp == 1 ? "p" : "p^" + std::to_string(m.p_exp);
    }
    if (m.gamma_exp > 0) {
        if (!s.empty()) {
            s += "*";
        }
        s += m.gamma_exp == 1 ? "g2" : "g2^" + std::to_string(m.gamma_exp);
    }
    return s.empty() ? "1" : s;
}

monomial parse_monomial(const std::string &label)
{
    if (label == "1") {
        return {};
    }
    static const std::regex factor(R"((p|g2)(?:\^(\d+))?)");
    monomial m;
    std::size_t pos = 0;
    while (pos < label.size()) {
        std::smatch match;
        const std::string rest = label.substr(pos);
        if (!std::regex_search(rest, match, factor, std::regex_constants::match_continuous)) {
            throw precondition_error("bad monomial label '" + label + "'");
        }
        const int e = match[2].matched ? std::stoi(match[2].str()) : 1;
        (match[1] == "p" ? m.p_exp : m.gamma_exp) += e;
        pos += static_cast<std::size_t>(match.length(0));
        if (pos < label.size()) {
            if (label[pos] != '*') {
                throw precondition_error("bad monomial label '" + label + "'");
            }
            ++pos;
        }
    }
    return m;
}

class_vector class_vector::basis(std::size_t dim, std::size_t i)
{
    class_vector v(dim);
    v.c_[i] = 1;
    return v;
}

bool class_vector::is_zero() const
{
    return std::all_of(c_.begin(), c_.end(), [](const scalar &x) { return x == 0; });
}

class_vector &class_vector::operator+=(const class_vector &rhs)
{
    for (std::size_t i = 0; i < c_.size(); ++i) {
        c_[i] += rhs.c_[i];
    }
    return *this;
}

class_vector &class_vector::operator-=(const class_vector &rhs)
{
    for (std::size_t i = 0; i < c_.size(); ++i) {
        c_[i] -= rhs.c_[i];
    }
    return *this;
}

class_vector &class_vector::operator*=(const scalar &s)
{
    for (auto &x : c_) {
        x *= s;
    }
    return *this;
}

std::vector<monomial> frobenius_algebra::standard_basis()
{
    return {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {3, 0}, {1, 1}, {4, 0}, {2, 1}, {5, 0}, {6, 0}};
}

frobenius_algebra frobenius_algebra::build(const std::map<monomial, scalar> &top_values,
                                           std::vector<monomial> basis, int top_codim)
{
    frobenius_algebra a;
    a.basis_ = std::move(basis);
    a.top_ = top_codim;
    a.top_values_ = top_values;
    for (const auto &[m, v] : top_values) {
        if (m.codim() != top_codim) {
            throw precondition_error("top value given for " + to_string(m) + ", which is not of top codimension");
        }
    }
    const std::size_t n = a.dim();
    a.gram_ = matrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a.gram_(i, j) = a.integral({a.basis_[i].p_exp + a.basis_[j].p_exp, a.basis_[i].gamma_exp + a.basis_[j].gamma_exp});
        }
    }
    a.table_.assign(n, std::vector<class_vector>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            a.table_[i][j] = a.expand({a.basis_[i].p_exp + a.basis_[j].p_exp, a.basis_[i].gamma_exp + a.basis_[j].gamma_exp});
            a.table_[j][i] = a.table_[i][j];
        }
    }
    matrix inv;
    try {
        inv = inverse(a.gram_);
    } catch (const precondition_error &) {
        throw precondition_error("pairing matrix is singular; the top values are inconsistent");
    }
    // <Delta_i, Delta^j> = delta_ij  =>  Delta^j = sum_k (G^{-1})_{kj} Delta_k
    for (std::size_t j = 0; j < n; ++j) {
        class_vector v(n);
        for (std::size_t k = 0; k < n; ++k) {
            v[k] = inv(k, j);
        }
        a.dual_.push_back(std::move(v));
    }
    return a;
}

std::optional<std::size_t> frobenius_algebra::index_of(const monomial &m) const
{
    const auto it = std::find(basis_.begin(), basis_.end(), m);
    if (it == basis_.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - basis_.begin());
}

std::size_t frobenius_algebra::index_of_label(const std::string &label) const
{
    const auto i = index_of(parse_monomial(label));
    if (!i) {
        throw precondition_error("'" + label + "' is not a basis element");
    }
    return *i;
}

std::vector<int> frobenius_algebra::betti() const
{
    std::vector<int> b(static_cast<std::size_t>(top_) + 1, 0);
    for (const auto &m : basis_) {
        if (m.codim() >= 0 && m.codim() <= top_) {
            ++b[static_cast<std::size_t>(m.codim())];
        }
    }
    return b;
}

scalar frobenius_algebra::integral(const monomial &m) const
{
    if (m.codim() != top_) {
        return 0;
    }
    const auto it = top_values_.find(m);
    if (it == top_values_.end()) {
        throw precondition_error("no top value for " + to_string(m));
    }
    return it->second;
}

class_vector frobenius_algebra::expand(const monomial &m) const
{
    class_vector out(dim());
    const int c = m.codim();
    if (c > top_) {
        return out;
    }
    std::vector<std::size_t> block;
    std::vector<std::size_t> complement;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (codim(i) == c) {
            block.push_back(i);
        }
        if (codim(i) == top_ - c) {
            complement.push_back(i);
        }
    }
    if (block.size() != complement.size()) {
        throw precondition_error("codimension " + std::to_string(c) + " block is not dual to codimension "
                                 + std::to_string(top_ - c));
    }
    const std::size_t k = block.size();
    if (k == 0) {
        return out;
    }
    matrix lhs(k, k);
    vector_q rhs(k);
    for (std::size_t r = 0; r < k; ++r) {
        const monomial &w = basis_[complement[r]];
        for (std::size_t s = 0; s < k; ++s) {
            const monomial &b = basis_[block[s]];
            lhs(r, s) = integral({w.p_exp + b.p_exp, w.gamma_exp + b.gamma_exp});
        }
        rhs[r] = integral({w.p_exp + m.p_exp, w.gamma_exp + m.gamma_exp});
    }
    vector_q x;
    try {
        x = solve_unique(lhs, rhs);
    } catch (const precondition_error &) {
        throw precondition_error("singular pairing block in codimension " + std::to_string(c));
    }
    for (std::size_t s = 0; s < k; ++s) {
        out[block[s]] = x[s];
    }
    return out;
}

class_vector frobenius_algebra::multiply(const class_vector &x, const class_vector &y) const
{
    class_vector out(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < dim(); ++j) {
            if (y[j] == 0) {
                continue;
            }
            out += table_[i][j] * (x[i] * y[j]);
        }
    }
    return out;
}

scalar frobenius_algebra::pairing(const class_vector &x, const class_vector &y) const
{
    scalar s = 0;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < dim(); ++j) {
            if (y[j] != 0 && gram_(i, j) != 0) {
                s += x[i] * gram_(i, j) * y[j];
            }
        }
    }
    return s;
}

std::optional<int> frobenius_algebra::homogeneous_codim(const class_vector &x) const
{
    std::optional<int> c;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x[i] == 0) {
            continue;
        }
        if (c && *c != codim(i)) {
            return std::nullopt;
        }
        c = codim(i);
    }
    return c;
}

std::string frobenius_algebra::format(const class_vector &x) const
{
    std::string out;
    for (std::size_t i = 0; i < dim(); ++i) {
        const scalar &c = x[i];
        if (c == 0) {
            continue;
        }
        const scalar mag = abs(c);
        if (out.empty()) {
            out += c < 0 ? "-" : "";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (i == 0) {
            out += to_pretty(mag);
        } else {
            out += mag == 1 ? label(i) : to_pretty(mag) + "*" + label(i);
        }
    }
    return out.empty() ? "0" : out;
}

axiom_report check_axioms(const frobenius_algebra &ring)
{
    axiom_report r;
    const std::size_t n = ring.dim();
    for (std::size_t i = 0; i < n; ++i) {
        const class_vector ei = ring.basis_vector(i);
        r.unital = r.unital && ring.multiply(ring.unit(), ei) == ei;
        for (std::size_t j = 0; j < n; ++j) {
            const class_vector &ij = ring.product(i, j);
            r.commutative = r.commutative && ij == ring.product(j, i);
            if (!ij.is_zero()) {
                r.graded = r.graded && ring.homogeneous_codim(ij) == ring.codim(i) + ring.codim(j);
            }
            for (std::size_t k = 0; k < n; ++k) {
                const class_vector ek = ring.basis_vector(k);
                const class_vector jk = ring.product(j, k);
                r.associative = r.associative && ring.multiply(ij, ek) == ring.multiply(ei, jk);
                r.frobenius = r.frobenius && ring.pairing(ij, ek) == ring.pairing(ei, jk);
                ++r.triples_checked;
            }
        }
    }
    return r;
}

} // namespace mirrorcheck
