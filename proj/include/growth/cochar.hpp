#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "growth/combinatorics.hpp"
#include "growth/freealg.hpp"
#include "growth/linalg.hpp"
#include "growth/matalg.hpp"
#include "growth/rational.hpp"

namespace growth {

/// Linear-constraint view of an algebra A: families of exact row functionals
/// on V_n = FS_n whose common kernels are V_n cap Id(A) and V_n cap Id^z(A).
class AlgebraOracle {
  public:
    virtual ~AlgebraOracle() = default;
    virtual std::string name() const = 0;
    virtual int default_budget() const = 0;
    // Streams the constraint rows (columns indexed by Permutation::rank()).
    virtual void constraint_rows(int n, bool centrality, const SparseRowSink& sink) const = 0;
    // Rank of the constraint family; the default assembles rows into an
    // echelon basis, subclasses may do something faster.
    virtual int constraint_rank(int n, bool centrality) const;
};

// The infinite-dimensional Grassmann algebra: 2^n parity rows.
std::shared_ptr<AlgebraOracle> grassmann_oracle();
// M_k over the rationals: matrix-unit tuple rows.
std::shared_ptr<AlgebraOracle> matrix_oracle(int k);

enum class Variant { plain, central };

struct CocharacterDecomposition {
    int n = 0;
    std::map<Partition, long long> multiplicity;  // nonzero entries only

    long long at(const Partition& p) const;
    // sum of m_lambda * f^lambda; equals the codimension it decomposes.
    BigInt degree() const;
    bool operator==(const CocharacterDecomposition&) const = default;
    std::string to_string() const;
};

/// Exact codimension/cocharacter computations for one algebra oracle, with
/// kernel spaces cached per (n, variant).  Budgets are the oracle defaults
/// unless overridden.
class CocharEngine {
  public:
    explicit CocharEngine(std::shared_ptr<const AlgebraOracle> oracle);

    const AlgebraOracle& oracle() const { return *oracle_; }
    int budget() const { return budget_; }
    void set_budget(int n) { budget_ = n; }

    // dim(V_n cap Id(A)) resp. dim(V_n cap Id^z(A)).
    int identity_dim(int n);
    int central_dim(int n);
    // c_n, c_n^z, delta_n = c_n - c_n^z.
    int codimension(int n, Variant variant);
    int delta(int n);

    CocharacterDecomposition cocharacter(int n, Variant variant);
    // chi(D_n(A)) = plain - central, pointwise; throws NegativeMultiplicity
    // if the difference ever dips below zero.
    CocharacterDecomposition d_module_character(int n);

    // Kernel basis of the constraint space as integer sparse rows (one per
    // free column); used for intersection computations in tests.
    std::vector<std::vector<std::pair<int, std::int64_t>>> kernel_basis_rows(int n,
                                                                             Variant variant);

    // Membership of a multilinear polynomial in V_n cap Id / Id^z.
    bool in_kernel(const MultilinearPolynomial& h, Variant variant);

  private:
    friend struct CocharTestAccess;
    void check_budget(int n) const;
    const RowEchelon& kernel_space(int n, bool centrality);
    Rational quotient_trace(int n, bool centrality, const Permutation& g);

    std::shared_ptr<const AlgebraOracle> oracle_;
    int budget_;
    std::map<std::pair<int, bool>, RowEchelon> spaces_;
    std::map<std::pair<int, bool>, int> rank_cache_;
};

// Restriction isomorphism for G: c_n^z(G) = c_{n-1}(G) and the branched
// central cocharacter equals the plain cocharacter one degree down; also
// re-derives the hook multiplicities from the branching system and compares.
bool verify_restriction_isomorphism(CocharEngine& g_engine, int n);

// T-generation of the central polynomials of G by the commutator over the
// T-ideal of the triple commutator: containment plus dimension equality.
bool verify_t_generation(CocharEngine& g_engine, int n);

struct SandwichRecord {
    int n = 0;
    int k = 0;
    BigInt f_lambda = 0;      // best irreducible witness found (0: none)
    Partition lambda;          // its shape, when found
    int delta = 0;
    int c_n = 0;
    bool holds = false;        // f_lambda <= delta <= c_n
};

// f^lambda <= delta_n(M_k) <= c_n(M_k), with lambda drawn from the standard
// tableaux whose semi-idempotent is proper central on M_k (largest f^lambda
// first).  The engine must wrap matrix_oracle(k).
SandwichRecord verify_sandwich(CocharEngine& m_engine, int n, int k);

}  // namespace growth
