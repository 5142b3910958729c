#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "growth/combinatorics.hpp"
#include "growth/freealg.hpp"
#include "growth/rational.hpp"

namespace growth {

/// k x k matrix over the rationals, exact arithmetic only.
class RationalMatrix {
  public:
    RationalMatrix() = default;
    explicit RationalMatrix(int k) : k_(k), e_(static_cast<std::size_t>(k) * k, Rational(0)) {}
    static RationalMatrix identity(int k);
    static RationalMatrix unit(int k, int i, int j);  // 0-based e_{i,j}
    static RationalMatrix diagonal(std::vector<Rational> d);

    int size() const { return k_; }
    const Rational& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * k_ + j]; }
    Rational& at(int i, int j) { return e_[static_cast<std::size_t>(i) * k_ + j]; }

    RationalMatrix& operator+=(const RationalMatrix& rhs);
    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

    bool operator==(const RationalMatrix&) const = default;

    std::string to_string() const;

  private:
    int k_ = 0;
    std::vector<Rational> e_;
};

// Homomorphic evaluation; the unit word maps to the identity matrix.
// Throws UnmappedVariable / SizeMismatch.
RationalMatrix m_evaluate(const NCPolynomial& p, const std::map<int, RationalMatrix>& assignment);

bool is_scalar(const RationalMatrix& m);

// Identity / centrality of a multilinear polynomial on M_k, decided by
// exhaustive evaluation over all (k^2)^n matrix-unit tuples.
bool is_identity_Mk(const MultilinearPolynomial& h, int k);
bool is_central_Mk(const MultilinearPolynomial& h, int k);

// st_r = sum over S_r of sgn(sigma) x_{sigma(1)}..x_{sigma(r)}.
NCPolynomial standard_polynomial(int r);

// The alternating-block monomial in s sets of k^2 variables: blocks of odd
// lengths 1,3,..,2k-1 per alphabet, alphabets interleaved blockwise;
// alphabet a uses variables (a-1)k^2+1 .. a k^2 in index order.
// Throws UnsupportedSetCount for s outside {2,3}.
Word regev_monomial(int k, int s);

// Alternate each alphabet of the monomial independently with signs:
// (k^2!)^s terms, multilinear in every variable.
NCPolynomial regev_polynomial(int k, int s);

// Equate all alphabets to the first: multihomogeneous of degree s in each of
// x_1..x_{k^2}.
NCPolynomial g_poly(int k, int s);

// Full symmetrization sum over S_r in x_1..x_r.
NCPolynomial h_sym(int r);

// The tableau of shape ((s)^(k^2)) whose column a lists the positions of
// alphabet a inside the alternating-block monomial.
YoungTableau regev_tableau(int k, int s);

// A bijection between the variables x_1..x_{k^2} and the matrix units,
// encoded as a permutation of the row-major unit indices: variable i+1
// receives unit apply(i).
using MatrixUnitBijection = Permutation;

// e_{u/k, u%k} for the row-major unit index u.
RationalMatrix unit_by_index(int k, int u);

// The substitution sending alphabet variables offset+1 .. offset+k^2 to
// units through the bijection.
std::map<int, RationalMatrix> bijection_assignment(int k, const MatrixUnitBijection& beta,
                                                   int offset = 0);

struct PropertyLReport {
    int k = 0;
    int s = 0;
    bool all_scalar = false;       // every bijection tuple evaluates to a scalar
    bool all_same_abs = false;     // ... of one common absolute value
    bool nonzero = false;
    Rational abs_value = 0;        // the common |scalar|
    std::size_t bijection_tuples = 0;
    bool central_checked = false;  // exhaustive unit-tuple sweep ran (k <= 2)
    bool central = false;          // L central on M_k (all unit tuples scalar)
    bool identity = false;         // L an identity (all unit tuples zero)
    bool proper_central() const { return central_checked && central && !identity; }
};

// Evaluates the alternating polynomial L on every s-tuple of matrix-unit
// bijections and on every plain unit tuple.  k = 2 is the supported budget;
// pass allow_big for k = 3 (k^2! = 362880 alternation terms).
// Throws BudgetExceeded.
PropertyLReport check_property_L(int k, int s, bool allow_big = false);

struct LowerBound {
    Partition lambda;          // mu * pi, a partition of n
    YoungTableau tableau;      // glued rectangle tableaux, then the pi row
    NCPolynomial p;            // g_2^q [* g_3] [* h_pi], disjoint variables
    int case_id = 0;           // 1: m odd (m = 2q+3), 2: m even (m = 2q)
    int q = 0;
    int r = 0;                 // n mod k^2
    bool already_done = false; // r == 0: p itself is proper central
    // Unit index (row-major, 0-based) substituted for each of x_1..x_n; for
    // r >= 1 this substitution witnesses that p is not central.
    std::vector<int> witness_units;
    BigInt f_lambda;
};

// The rectangle-plus-remainder construction for n >= 2k^2, k >= 2.
// Throws PreconditionViolated.
LowerBound lower_bound_construction(int n, int k);

// Constraint-row families over the n!-dimensional permutation basis used by
// the codimension engine; rows are sparse (column = Permutation::rank()).
using SparseRowSink = std::function<void(const std::vector<std::pair<int, std::int64_t>>&)>;
void for_each_identity_constraint_Mk(int k, int n, const SparseRowSink& sink);
void for_each_centrality_constraint_Mk(int k, int n, const SparseRowSink& sink);

}  // namespace growth
