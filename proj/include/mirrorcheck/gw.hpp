#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mirrorcheck/frobenius_algebra.hpp"

namespace mirrorcheck {

/// Degree of q in the grading: deg(q) p = c1(X) - c1(E).
inline constexpr int q_grading = 3;

/// <Delta_{i1}, ..., Delta_{in}>_d with descendant-free insertions, stored sorted
/// so that permuted insertions give the same key.
class correlator_key {
public:
    correlator_key(int degree, std::vector<std::size_t> insertions);

    int degree() const { return degree_; }
    const std::vector<std::size_t> &insertions() const { return insertions_; }
    std::size_t points() const { return insertions_.size(); }
    bool contains(std::size_t index) const;
    /// The key with one occurrence of `index` removed.
    correlator_key without(std::size_t index) const;

    std::string to_string(const frobenius_algebra &ring) const;
    friend auto operator<=>(const correlator_key &, const correlator_key &) = default;

private:
    int degree_;
    std::vector<std::size_t> insertions_;
};

/// Parses "<p^2,p^6>_1" into a key over the ring's basis.
correlator_key parse_correlator(const frobenius_algebra &ring, const std::string &text);

enum class provenance { paper, classical, divisor_reduced, wdvv_solved };
std::string to_string(provenance p);

struct gw_entry {
    scalar value;
    provenance source;
};

/// Known correlator values. Every stored key passes the dimension filter; keys that
/// fail it are zero and are never stored.
class gw_table {
public:
    /// Throws precondition_error if the key fails the dimension filter or is
    /// already present with a different value.
    void insert(const frobenius_algebra &ring, const correlator_key &key, const scalar &value, provenance source);
    const gw_entry *find(const correlator_key &key) const;
    bool contains(const correlator_key &key) const { return find(key) != nullptr; }
    const std::map<correlator_key, gw_entry> &entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

private:
    std::map<correlator_key, gw_entry> entries_;
};

/// A priori nonvanishing test: sum of codimensions equals dim + deg(q) d + n - 3,
/// and no d > 0 correlator carries the unit class.
bool dimension_filter(const frobenius_algebra &ring, const correlator_key &key);

/// Divisor equation for the divisor p without descendants:
/// <p, T_1..T_n>_d = d <T_1..T_n>_d. Returns (d, shorter key).
/// Throws precondition_error if the key has no p insertion or d = 0 with n < 3;
/// for d = 0 the coefficient is 0.
std::pair<scalar, correlator_key> divisor_reduce(const frobenius_algebra &ring, const correlator_key &key);

/// <x, y, z>_0 = <x y, z>.
scalar classical_correlator(const frobenius_algebra &ring, const class_vector &x, const class_vector &y,
                            const class_vector &z);

/// c + sum_u coeff_u * X_u over unknown correlators X_u.
struct linear_form {
    scalar constant;
    std::map<std::size_t, scalar> terms;

    bool is_constant() const { return terms.empty(); }
    bool is_zero() const { return constant == 0 && terms.empty(); }
    linear_form &operator+=(const linear_form &rhs);
    linear_form &operator*=(const scalar &c);
    /// Product of two forms; one of them must be constant.
    friend linear_form operator*(const linear_form &a, const linear_form &b);
};

/// Linear relations among unknown correlators of one degree.
class wdvv_system {
public:
    /// Collects as unknowns every filter-passing 2- and 3-point key of the given
    /// degree without a p insertion that the table does not already know.
    wdvv_system(const frobenius_algebra &ring, const gw_table &table, int degree);

    int degree() const { return degree_; }
    const std::vector<correlator_key> &unknowns() const { return unknowns_; }
    const std::vector<linear_form> &equations() const { return equations_; }

    /// Value of a correlator in terms of the unknowns: filter, classical values,
    /// divisor reduction, the table, then the unknowns themselves.
    linear_form evaluate(const correlator_key &key) const;

    /// sum_{d1+d2=d} <T1, T2, Delta_i>_{d1} <Delta^i, T3, T4>_{d2}
    linear_form feynman_sum(std::size_t t1, std::size_t t2, std::size_t t3, std::size_t t4) const;

    /// feyn(T1,T2;T3,T4) - feyn(T1,T3;T2,T4) as a linear form that must vanish.
    linear_form generate(std::size_t t1, std::size_t t2, std::size_t t3, std::size_t t4) const;

    /// Adds the relation for every ordered quadruple of basis classes; returns how
    /// many nontrivial relations were added.
    std::size_t generate_all();
    void add_equation(linear_form eq);

private:
    const frobenius_algebra *ring_;
    const gw_table *table_;
    int degree_;
    std::vector<correlator_key> unknowns_;
    std::map<correlator_key, std::size_t> unknown_index_;
    std::vector<linear_form> equations_;
};

struct wdvv_solution {
    int degree = 0;
    std::size_t equations = 0;
    std::size_t rank = 0;
    bool consistent = false;
    std::vector<correlator_key> unknowns;
    std::vector<std::optional<scalar>> values;

    std::vector<correlator_key> undetermined() const;
};

/// Exact elimination of the system. Throws inconsistent_error if it has no solution.
wdvv_solution solve_unknowns(const wdvv_system &system);

struct reconstruction_report {
    std::vector<wdvv_solution> stages;
    /// Nontrivial relations that still fail after substituting all solved values.
    std::size_t residual_failures = 0;
    std::size_t relations_checked = 0;
};

/// Degree by degree (1..max_degree): builds the exhaustive relation system, solves it and
/// stores determined values in the table as wdvv_solved. Afterwards re-evaluates every
/// relation of every degree against the completed table.
reconstruction_report reconstruct(const frobenius_algebra &ring, gw_table &table, int max_degree = 2);

/// Stores every filter-passing 2- and 3-point value that follows from classical
/// products (d = 0) or the divisor equation applied to a known key.
void complete_table(const frobenius_algebra &ring, gw_table &table, int max_degree = 2);

} // namespace mirrorcheck
