#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "growth/freealg.hpp"
#include "growth/permutation.hpp"
#include "growth/rational.hpp"

namespace growth {

/// Element of the infinite-dimensional Grassmann algebra: sparse rational
/// combination of basis monomials e_{i_1}...e_{i_r}, i_1 < ... < i_r.  The
/// empty index set is the unit.  Generator indices are unbounded -- there is
/// no truncation parameter, so the center is exactly the even part (a finite
/// exterior algebra on an odd number of generators would have a larger
/// center).
class GrassmannElement {
  public:
    GrassmannElement() = default;
    static GrassmannElement unit() { return basis({}); }
    static GrassmannElement generator(int i) { return basis({i}); }
    // Indices must be strictly increasing.
    static GrassmannElement basis(std::vector<int> indices, Rational coeff = 1);

    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(std::vector<int> indices, const Rational& coeff);

    GrassmannElement& operator+=(const GrassmannElement& rhs);
    GrassmannElement& operator-=(const GrassmannElement& rhs);
    friend GrassmannElement operator+(GrassmannElement a, const GrassmannElement& b) {
        return a += b;
    }
    friend GrassmannElement operator-(GrassmannElement a, const GrassmannElement& b) {
        return a -= b;
    }

    bool operator==(const GrassmannElement&) const = default;

    // Canonical text form, e.g. "e[1,2] - 2 e[4]"; the unit prints as "e[]".
    std::string to_string() const;

  private:
    std::map<std::vector<int>, Rational> terms_;
};

GrassmannElement g_multiply(const GrassmannElement& a, const GrassmannElement& b);

// True iff the odd-length part vanishes; the center of G is the even part.
bool is_central(const GrassmannElement& a);

// Homomorphic evaluation of a free-algebra polynomial.  The unit word maps
// to 1.  Throws UnmappedVariable.
GrassmannElement evaluate(const NCPolynomial& p,
                          const std::map<int, GrassmannElement>& assignment);

/// Parity pattern of a disjoint substitution: bit i-1 set means x_i receives
/// an odd-length basis monomial.
class ParityVector {
  public:
    ParityVector(int n, std::uint32_t bits) : n_(n), bits_(bits) {}
    int degree() const { return n_; }
    bool odd(int var) const { return (bits_ >> (var - 1)) & 1u; }  // 1-based
    std::uint32_t bits() const { return bits_; }
    int weight() const;

  private:
    int n_;
    std::uint32_t bits_;
};

// Sign picked up when the monomial x_{sigma(1)}..x_{sigma(n)} is evaluated
// at a disjoint substitution with parities eps, relative to the identity
// arrangement: the sign of the subsequence of odd variables read off in
// sigma order.  Throws DegreeMismatch.
int parity_sign(const Permutation& sigma, const ParityVector& eps);

// parity_sign(sigma, eps) for every eps at once, indexed by the bitmask of
// eps; one Gray-code walk instead of 2^n subsequence scans.
std::vector<std::int8_t> parity_sign_row(const Permutation& sigma);

// Fast identity / centrality tests for multilinear polynomials: the 2^n
// parity classes replace the infinitely many disjoint substitutions.
bool is_identity_G(const MultilinearPolynomial& h);
bool is_central_G(const MultilinearPolynomial& h);

// Slow path used as the independent test oracle: direct evaluation on
// canonical disjoint generator blocks, one substitution per parity vector.
bool is_identity_G_direct(const MultilinearPolynomial& h);
bool is_central_G_direct(const MultilinearPolynomial& h);

// The canonical disjoint substitution realizing eps: x_i receives a block of
// one or two fresh generators, consecutive across i.
std::map<int, GrassmannElement> disjoint_substitution(const ParityVector& eps);

// Property of the cancellation lemma: x_n h is central iff h is an identity.
// Returns whether the two sides agree (they always must).
bool check_lemma_cancellation2(const MultilinearPolynomial& h);

}  // namespace growth
