#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "growth/combinatorics.hpp"
#include "growth/rational.hpp"
#include "growth/symgroup.hpp"

namespace growth {

// Monomial of the free associative algebra: the sequence of variable indices
// (>= 1).  The empty word is the unit.
using Word = std::vector<int>;

struct WordLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/// Sparse polynomial in countably many noncommuting variables with exact
/// rational coefficients.  Terms are kept in degree-lexicographic order.
class NCPolynomial {
  public:
    NCPolynomial() = default;
    static NCPolynomial unit() { return monomial(Word{}); }
    static NCPolynomial monomial(Word w, Rational coeff = 1);
    static NCPolynomial variable(int index);

    const std::map<Word, Rational, WordLess>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Word& w) const;

    void add_term(const Word& w, const Rational& coeff);

    NCPolynomial& operator+=(const NCPolynomial& rhs);
    NCPolynomial& operator-=(const NCPolynomial& rhs);
    NCPolynomial& operator*=(const Rational& c);
    friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) { return a += b; }
    friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial& b) { return a -= b; }

    bool operator==(const NCPolynomial&) const = default;

    // Largest variable index occurring (0 for constants).
    int max_variable() const;

    // Canonical text form, e.g. "3 x1 x3 x2 - 1/2 x2 x1 x3"; "0" when zero.
    std::string to_string() const;
    static NCPolynomial parse(const std::string& text);

  private:
    std::map<Word, Rational, WordLess> terms_;
};

NCPolynomial nc_multiply(const NCPolynomial& p, const NCPolynomial& q);
NCPolynomial commutator(const NCPolynomial& p, const NCPolynomial& q);

// Homomorphic substitution; the map must cover every variable occurring in
// p (throws UnmappedVariable otherwise).
NCPolynomial substitute(const NCPolynomial& p, const std::map<int, NCPolynomial>& assignment);

/// Multilinear polynomial of degree n in x_1..x_n, identified with FS_n via
/// sigma <-> x_{sigma(1)} ... x_{sigma(n)}.  Under that identification the
/// substitution action x_i -> x_{pi(i)} is left multiplication by pi.
class MultilinearPolynomial {
  public:
    MultilinearPolynomial() = default;
    explicit MultilinearPolynomial(GroupAlgebraElement elem)
        : n_(elem.degree()), elem_(std::move(elem)) {}

    // Checks every word uses x_1..x_n exactly once.
    static MultilinearPolynomial from_polynomial(const NCPolynomial& p, int n);
    NCPolynomial to_polynomial() const;

    int degree() const { return n_; }
    const GroupAlgebraElement& algebra() const { return elem_; }
    GroupAlgebraElement& algebra() { return elem_; }
    bool is_zero() const { return elem_.is_zero(); }

    bool operator==(const MultilinearPolynomial&) const = default;

  private:
    int n_ = 0;
    GroupAlgebraElement elem_;
};

Word word_of(const Permutation& p);
Permutation permutation_of(const Word& w);

// x_n * h for h of degree n-1: the degree goes up by one.
MultilinearPolynomial prepend_variable(const MultilinearPolynomial& h);

// The canonical h_{n-1} with h = x_n h_{n-1} + (sum of commutators): each
// monomial a x_n b maps to b a.  The residual h - x_n h_{n-1} is central on
// the Grassmann algebra.
MultilinearPolynomial peel_leading(const MultilinearPolynomial& h);

// Full polarization of a polynomial that is multihomogeneous of degree d in
// each of the variables x_1..x_v: x_i is split into the d fresh variables
// x_{(i-1)d+1} .. x_{id} and the multilinear component is extracted.
// Throws NotMultihomogeneous.
MultilinearPolynomial multilinearize(const NCPolynomial& p, int d);

// Spanning set of V_n intersected with the T-ideal generated by the given
// multilinear polynomials: all u0 * g(m_1..m_t) * u1 with the m_i monomials
// on disjoint variable sets and u0, u1 monomials on the remaining variables,
// the whole product multilinear in x_1..x_n.  Duplicates are allowed; ranks
// are computed downstream.
std::vector<MultilinearPolynomial> t_ideal_multilinear(const std::vector<NCPolynomial>& generators,
                                                       int n);

// Spanning set of V_n intersected with the algebra generated, over the
// T-ideal of ideal_gens, by all substitution instances of alg_gens: products
// f_1 ... f_t (t >= 1) over disjoint supports partitioning {x_1..x_n}, each
// factor an ideal-spanning element or a generator instance on its support.
std::vector<MultilinearPolynomial> t_subalgebra_multilinear(
    const std::vector<NCPolynomial>& ideal_gens, const std::vector<NCPolynomial>& alg_gens, int n);

// e_T with every tableau entry replaced by the variable of its row:
// x_entry -> y_row.  This is the polynomial the gluing theorem multiplies.
NCPolynomial tableau_polynomial(const YoungTableau& t);

// Deterministic sparse random element of V_n for property tests.
MultilinearPolynomial random_multilinear(int n, std::mt19937_64& rng, int max_terms = 4);

}  // namespace growth
