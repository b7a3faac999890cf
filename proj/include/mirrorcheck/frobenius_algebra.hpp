#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mirrorcheck/linalg.hpp"

namespace mirrorcheck {

/// p^p_exp * gamma2^gamma_exp; codimension p_exp + 2 * gamma_exp.
struct monomial {
    int p_exp = 0;
    int gamma_exp = 0;

    int codim() const { return p_exp + 2 * gamma_exp; }
    friend auto operator<=>(const monomial &, const monomial &) = default;
};

std::string to_string(const monomial &m);
/// Parses labels like "1", "p", "p^3", "g2", "p^2*g2", "g2^3".
monomial parse_monomial(const std::string &label);

/// Coordinates of a class in the algebra's basis.
class class_vector {
public:
    class_vector() = default;
    explicit class_vector(std::size_t dim) : c_(dim) {}
    explicit class_vector(vector_q coords) : c_(std::move(coords)) {}
    static class_vector basis(std::size_t dim, std::size_t i);

    std::size_t size() const { return c_.size(); }
    scalar &operator[](std::size_t i) { return c_[i]; }
    const scalar &operator[](std::size_t i) const { return c_[i]; }
    const vector_q &coords() const { return c_; }
    bool is_zero() const;

    class_vector &operator+=(const class_vector &rhs);
    class_vector &operator-=(const class_vector &rhs);
    class_vector &operator*=(const scalar &s);
    friend class_vector operator+(class_vector a, const class_vector &b) { return a += b; }
    friend class_vector operator-(class_vector a, const class_vector &b) { return a -= b; }
    friend class_vector operator*(class_vector a, const scalar &s) { return a *= s; }
    friend class_vector operator*(const scalar &s, class_vector a) { return a *= s; }
    friend bool operator==(const class_vector &, const class_vector &) = default;

private:
    vector_q c_;
};

/// The graded ring generated by p (codim 1) and gamma2 (codim 2) modulo the
/// annihilator of the top class, with the pairing <x, y> = integral of x y.
///
/// Construction only needs the integrals of the top-codimension monomials: a product
/// of basis monomials is expanded in the basis by pairing it against the
/// complementary-codimension block and solving that (graded) linear system.
class frobenius_algebra {
public:
    /// {1, p, p^2, g2, p^3, p*g2, p^4, p^2*g2, p^5, p^6}
    static std::vector<monomial> standard_basis();

    /// Throws precondition_error if a needed top value is missing or a pairing
    /// block between codim k and top - k is singular.
    static frobenius_algebra build(const std::map<monomial, scalar> &top_values,
                                   std::vector<monomial> basis = standard_basis(), int top_codim = 6);

    std::size_t dim() const { return basis_.size(); }
    int top_codim() const { return top_; }
    const monomial &basis_monomial(std::size_t i) const { return basis_[i]; }
    int codim(std::size_t i) const { return basis_[i].codim(); }
    std::string label(std::size_t i) const { return to_string(basis_[i]); }
    /// Basis index of a monomial; nullopt if it is not a basis element.
    std::optional<std::size_t> index_of(const monomial &m) const;
    std::size_t index_of_label(const std::string &label) const;

    /// Number of basis elements per codimension 0..top.
    std::vector<int> betti() const;

    /// Integral of a monomial: its top value in codimension top, zero otherwise.
    scalar integral(const monomial &m) const;
    /// Expansion of an arbitrary monomial in the basis.
    class_vector expand(const monomial &m) const;

    const matrix &gram() const { return gram_; }
    /// Delta_i * Delta_j.
    const class_vector &product(std::size_t i, std::size_t j) const { return table_[i][j]; }
    class_vector multiply(const class_vector &x, const class_vector &y) const;
    scalar pairing(const class_vector &x, const class_vector &y) const;
    /// Delta^j with <Delta_i, Delta^j> = delta_ij.
    const std::vector<class_vector> &dual_basis() const { return dual_; }

    class_vector unit() const { return class_vector::basis(dim(), 0); }
    class_vector basis_vector(std::size_t i) const { return class_vector::basis(dim(), i); }
    /// Codimension of a nonzero homogeneous vector; nullopt for zero or mixed vectors.
    std::optional<int> homogeneous_codim(const class_vector &x) const;
    /// "205/42*p^4 - 1/3*p^2*g2"; "0" for the zero vector.
    std::string format(const class_vector &x) const;

private:
    std::vector<monomial> basis_;
    int top_ = 0;
    std::map<monomial, scalar> top_values_;
    matrix gram_;
    std::vector<std::vector<class_vector>> table_;
    std::vector<class_vector> dual_;
};

struct axiom_report {
    std::size_t triples_checked = 0;
    bool associative = true;
    bool commutative = true;
    bool unital = true;
    /// <x y, z> = <x, y z>
    bool frobenius = true;
    bool graded = true;

    bool ok() const { return associative && commutative && unital && frobenius && graded; }
};

/// Exhaustive scan over all basis pairs and triples.
axiom_report check_axioms(const frobenius_algebra &ring);

} // namespace mirrorcheck
