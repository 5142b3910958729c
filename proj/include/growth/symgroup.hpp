#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "growth/combinatorics.hpp"
#include "growth/linalg.hpp"
#include "growth/permutation.hpp"
#include "growth/rational.hpp"

namespace growth {

/// Sparse exact-rational element of the group algebra FS_n.  Zero
/// coefficients are never stored; terms are kept in permutation order, so
/// iteration is deterministic.
class GroupAlgebraElement {
  public:
    GroupAlgebraElement() = default;
    explicit GroupAlgebraElement(int degree) : degree_(degree) {}
    static GroupAlgebraElement basis(const Permutation& p, const Rational& coeff = 1);

    int degree() const { return degree_; }
    const std::map<Permutation, Rational>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const Permutation& p) const;
    void add_term(const Permutation& p, const Rational& coeff);

    GroupAlgebraElement& operator+=(const GroupAlgebraElement& rhs);
    GroupAlgebraElement& operator-=(const GroupAlgebraElement& rhs);
    GroupAlgebraElement& operator*=(const Rational& c);

    friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) {
        return a += b;
    }
    friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) {
        return a -= b;
    }

    bool operator==(const GroupAlgebraElement&) const = default;

    std::string to_string() const;

  private:
    int degree_ = 0;
    std::map<Permutation, Rational> terms_;
};

// Convolution product; throws DegreeMismatch.
GroupAlgebraElement ga_multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

// delta_sigma * a  and  a * delta_sigma.
GroupAlgebraElement left_translate(const Permutation& sigma, const GroupAlgebraElement& a);
GroupAlgebraElement right_translate(const GroupAlgebraElement& a, const Permutation& sigma);

// Sum over all permutations preserving each row of T setwise, coefficient +1.
GroupAlgebraElement row_symmetrizer(const YoungTableau& t);

// Signed sum over all permutations preserving each column of T setwise.
GroupAlgebraElement column_antisymmetrizer(const YoungTableau& t);

// e_T = row_symmetrizer(T) * column_antisymmetrizer(T).  The symmetrizer
// order is fixed project-wide; every reported constant downstream depends
// on this choice.
GroupAlgebraElement semi_idempotent(const YoungTableau& t);

// Scales the element to integer coordinates (clearing denominators) over the
// n!-dimensional permutation basis, indexed by Permutation::rank().
std::vector<std::pair<int, std::int64_t>> integer_row(const GroupAlgebraElement& a);

// dim span{ sigma * a : sigma in S_n }, by exact elimination.
int left_ideal_rank(const GroupAlgebraElement& a);

// Basis of the left ideal FS_n * a as integer rows (echelon engine, not
// finalized); used for intersection computations.
RowEchelon left_ideal_row_space(const GroupAlgebraElement& a);

}  // namespace growth
