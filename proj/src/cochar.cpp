#include "growth/cochar.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "growth/errors.hpp"
#include "growth/grassmann.hpp"
#include "growth/permutation.hpp"
#include "growth/symgroup.hpp"

namespace growth {

namespace {

std::size_t factorial_sz(int n) {
    std::size_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
    return f;
}

class GrassmannOracle final : public AlgebraOracle {
  public:
    std::string name() const override { return "G"; }
    int default_budget() const override { return 8; }

    void constraint_rows(int n, bool centrality, const SparseRowSink& sink) const override {
        // Row per parity vector eps (odd weight only for centrality):
        // row[sigma] = parity_sign(sigma, eps).  The sign matrix is built
        // once as int8 and the rows streamed out of it.
        std::size_t cols = factorial_sz(n);
        std::size_t eps_count = std::size_t(1) << n;
        std::vector<std::int8_t> matrix(eps_count * cols);
        std::vector<Permutation> perms = all_permutations(n);
        for (std::size_t s = 0; s < cols; ++s) {
            std::vector<std::int8_t> signs = parity_sign_row(perms[s]);
            for (std::size_t eps = 0; eps < eps_count; ++eps) matrix[eps * cols + s] = signs[eps];
        }
        std::vector<std::pair<int, std::int64_t>> row(cols);
        for (std::size_t eps = 0; eps < eps_count; ++eps) {
            if (centrality && std::popcount(eps) % 2 == 0) continue;
            for (std::size_t s = 0; s < cols; ++s)
                row[s] = {static_cast<int>(s), matrix[eps * cols + s]};
            sink(row);
        }
    }

    int constraint_rank(int n, bool centrality) const override {
        // Transposed elimination: one short row per permutation over the
        // eps columns; the basis stays small (rank <= 2^{n-1}) and hot.
        std::size_t eps_count = std::size_t(1) << n;
        std::vector<int> cols;
        for (std::size_t eps = 0; eps < eps_count; ++eps)
            if (!centrality || std::popcount(eps) % 2 == 1) cols.push_back(static_cast<int>(eps));
        RowEchelon ech(static_cast<int>(cols.size()));
        std::vector<std::int64_t> row(cols.size());
        for (const Permutation& sigma : all_permutations(n)) {
            std::vector<std::int8_t> signs = parity_sign_row(sigma);
            for (std::size_t j = 0; j < cols.size(); ++j)
                row[j] = signs[static_cast<std::size_t>(cols[j])];
            ech.insert(row);
        }
        return ech.rank();
    }
};

class MatrixOracle final : public AlgebraOracle {
  public:
    explicit MatrixOracle(int k) : k_(k) {
        if (k < 1) throw std::invalid_argument("matrix_oracle: k must be >= 1");
    }
    std::string name() const override { return "M" + std::to_string(k_); }
    int default_budget() const override { return k_ == 1 ? 8 : (k_ == 2 ? 6 : 4); }

    void constraint_rows(int n, bool centrality, const SparseRowSink& sink) const override {
        if (centrality)
            for_each_centrality_constraint_Mk(k_, n, sink);
        else
            for_each_identity_constraint_Mk(k_, n, sink);
    }

  private:
    int k_;
};

}  // namespace

int AlgebraOracle::constraint_rank(int n, bool centrality) const {
    RowEchelon ech(static_cast<int>(factorial_sz(n)));
    constraint_rows(n, centrality,
                    [&](const std::vector<std::pair<int, std::int64_t>>& row) { ech.insert_sparse(row); });
    return ech.rank();
}

std::shared_ptr<AlgebraOracle> grassmann_oracle() { return std::make_shared<GrassmannOracle>(); }

std::shared_ptr<AlgebraOracle> matrix_oracle(int k) { return std::make_shared<MatrixOracle>(k); }

long long CocharacterDecomposition::at(const Partition& p) const {
    auto it = multiplicity.find(p);
    return it == multiplicity.end() ? 0 : it->second;
}

BigInt CocharacterDecomposition::degree() const {
    BigInt d = 0;
    for (const auto& [p, m] : multiplicity) d += static_cast<long>(m) * dimension(p);
    return d;
}

std::string CocharacterDecomposition::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, m] : multiplicity) {
        if (!first) os << ", ";
        os << '(' << p.to_string() << ")";
        if (m != 1) os << '*' << m;
        first = false;
    }
    return first ? "0" : os.str();
}

CocharEngine::CocharEngine(std::shared_ptr<const AlgebraOracle> oracle)
    : oracle_(std::move(oracle)), budget_(oracle_->default_budget()) {}

void CocharEngine::check_budget(int n) const {
    if (n < 1) throw std::invalid_argument("degree must be >= 1");
    if (n > budget_)
        throw BudgetExceeded(oracle_->name() + ": n = " + std::to_string(n) +
                             " exceeds budget " + std::to_string(budget_) +
                             " (raise --budget-gib to override)");
}

const RowEchelon& CocharEngine::kernel_space(int n, bool centrality) {
    check_budget(n);
    auto key = std::make_pair(n, centrality);
    auto it = spaces_.find(key);
    if (it == spaces_.end()) {
        RowEchelon ech(static_cast<int>(factorial_sz(n)));
        oracle_->constraint_rows(n, centrality, [&](const std::vector<std::pair<int, std::int64_t>>& row) {
            ech.insert_sparse(row);
        });
        ech.finalize();
        it = spaces_.emplace(key, std::move(ech)).first;
    }
    return it->second;
}

int CocharEngine::codimension(int n, Variant variant) {
    check_budget(n);
    bool central = (variant == Variant::central);
    auto key = std::make_pair(n, central);
    auto sp = spaces_.find(key);
    if (sp != spaces_.end()) return sp->second.rank();
    auto rk = rank_cache_.find(key);
    if (rk == rank_cache_.end())
        rk = rank_cache_.emplace(key, oracle_->constraint_rank(n, central)).first;
    return rk->second;
}

int CocharEngine::identity_dim(int n) {
    return static_cast<int>(factorial_sz(n)) - codimension(n, Variant::plain);
}

int CocharEngine::central_dim(int n) {
    return static_cast<int>(factorial_sz(n)) - codimension(n, Variant::central);
}

int CocharEngine::delta(int n) {
    int d = codimension(n, Variant::plain) - codimension(n, Variant::central);
    // Same number through the intersection dimensions; a disagreement would
    // be an engine bug.
    if (d != central_dim(n) - identity_dim(n))
        throw std::logic_error("delta: codimension bookkeeping mismatch");
    return d;
}

Rational CocharEngine::quotient_trace(int n, bool centrality, const Permutation& g) {
    const RowEchelon& ech = kernel_space(n, centrality);
    // trace on V_n/(kernel) = trace on V_n - trace on the kernel.  Left
    // multiplication by g permutes the permutation basis, so the full trace
    // is n! for the identity and 0 otherwise.  On the kernel, the basis
    // vector of free column f has coordinate-f value of g.b_f equal to
    // b_f[g^{-1} sigma_f].
    Rational trace_kernel = 0;
    Permutation g_inv = g.inverse();
    std::vector<Permutation> perms = all_permutations(n);
    const std::vector<int>& frees = ech.free_columns();
    std::vector<bool> is_free(factorial_sz(n), false);
    for (int f : frees) is_free[static_cast<std::size_t>(f)] = true;
    for (int f : frees) {
        Permutation target = compose(g_inv, perms[static_cast<std::size_t>(f)]);
        int t = static_cast<int>(target.rank());
        if (t == f)
            trace_kernel += 1;
        else if (!is_free[static_cast<std::size_t>(t)])
            trace_kernel -= ech.normalized_entry(t, f);
    }
    Rational full = g.is_identity() ? Rational(static_cast<long>(factorial_sz(n))) : Rational(0);
    return full - trace_kernel;
}

CocharacterDecomposition CocharEngine::cocharacter(int n, Variant variant) {
    check_budget(n);
    bool central = (variant == Variant::central);
    std::vector<Partition> classes = partitions_of(n);
    std::vector<Rational> traces;
    traces.reserve(classes.size());
    for (const Partition& c : classes)
        traces.push_back(quotient_trace(n, central, class_representative(c.parts())));
    // One representative per cycle type suffices: the quotient trace is a
    // class function.

    CocharacterDecomposition out;
    out.n = n;
    BigInt nfact = factorial(static_cast<unsigned>(n));
    for (const Partition& lambda : partitions_of(n)) {
        Rational sum = 0;
        for (std::size_t ci = 0; ci < classes.size(); ++ci) {
            Rational term(conjugacy_class_size(classes[ci]) *
                          BigInt(static_cast<long>(character_value(lambda, classes[ci]))));
            sum += term * traces[ci];
        }
        Rational m = sum / Rational(nfact);
        if (m.get_den() != 1)
            throw std::logic_error("cocharacter: non-integral multiplicity for " + lambda.to_string());
        if (m < 0)
            throw NegativeMultiplicity("cocharacter: negative multiplicity for " + lambda.to_string());
        if (m != 0) out.multiplicity[lambda] = static_cast<long long>(m.get_num().get_si());
    }
    if (out.degree() != codimension(n, variant))
        throw std::logic_error("cocharacter: degree does not match codimension");
    return out;
}

CocharacterDecomposition CocharEngine::d_module_character(int n) {
    CocharacterDecomposition plain = cocharacter(n, Variant::plain);
    CocharacterDecomposition central = cocharacter(n, Variant::central);
    CocharacterDecomposition out;
    out.n = n;
    for (const auto& [p, b] : plain.multiplicity) {
        long long diff = b - central.at(p);
        if (diff < 0) throw NegativeMultiplicity("d_module_character at " + p.to_string());
        if (diff != 0) out.multiplicity[p] = diff;
    }
    for (const auto& [p, a] : central.multiplicity)
        if (plain.at(p) < a) throw NegativeMultiplicity("d_module_character at " + p.to_string());
    return out;
}

std::vector<std::vector<std::pair<int, std::int64_t>>> CocharEngine::kernel_basis_rows(
    int n, Variant variant) {
    const RowEchelon& ech = kernel_space(n, variant == Variant::central);
    std::vector<std::vector<std::pair<int, std::int64_t>>> rows;
    for (int f : ech.free_columns()) {
        // b_f = unit at f, minus the normalized pivot-column entries; scale
        // to integers.
        std::vector<std::pair<int, Rational>> entries{{f, Rational(1)}};
        for (int c : ech.pivot_columns()) {
            Rational v = ech.normalized_entry(c, f);
            if (v != 0) entries.emplace_back(c, -v);
        }
        BigInt lcm = 1;
        for (const auto& [col, v] : entries) {
            BigInt l;
            mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
            lcm = l;
        }
        std::vector<std::pair<int, std::int64_t>> row;
        row.reserve(entries.size());
        for (const auto& [col, v] : entries) {
            BigInt z = v.get_num() * (lcm / v.get_den());
            if (!z.fits_slong_p()) throw std::overflow_error("kernel_basis_rows: entry too large");
            row.emplace_back(col, static_cast<std::int64_t>(z.get_si()));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

bool CocharEngine::in_kernel(const MultilinearPolynomial& h, Variant variant) {
    if (h.is_zero()) return true;
    check_budget(h.degree());
    std::vector<std::pair<int, std::int64_t>> row = integer_row(h.algebra());
    bool member = true;
    // Constraint rows arrive with ascending column indices, so each dot
    // product is a binary search per term of h.
    oracle_->constraint_rows(
        h.degree(), variant == Variant::central,
        [&](const std::vector<std::pair<int, std::int64_t>>& constraint) {
            if (!member) return;
            std::int64_t dot = 0;
            for (auto [col, v] : row) {
                auto it = std::lower_bound(
                    constraint.begin(), constraint.end(), col,
                    [](const std::pair<int, std::int64_t>& e, int c) { return e.first < c; });
                if (it != constraint.end() && it->first == col) dot += v * it->second;
            }
            if (dot != 0) member = false;
        });
    return member;
}

bool verify_restriction_isomorphism(CocharEngine& g_engine, int n) {
    if (n < 2) throw std::invalid_argument("verify_restriction_isomorphism: n must be >= 2");
    if (g_engine.codimension(n, Variant::central) != g_engine.codimension(n - 1, Variant::plain))
        return false;

    CocharacterDecomposition central_n = g_engine.cocharacter(n, Variant::central);
    CocharacterDecomposition plain_down = g_engine.cocharacter(n - 1, Variant::plain);

    // Branch the central cocharacter down one degree.
    std::map<Partition, long long> branched;
    for (const auto& [p, m] : central_n.multiplicity)
        for (const Partition& mu : branch_down(p)) branched[mu] += m;
    std::erase_if(branched, [](const auto& kv) { return kv.second == 0; });
    if (branched != plain_down.multiplicity) return false;

    // Re-derive the hook multiplicities from the branching system
    // a_0 = 1, a_j + a_{j+1} = r_j, where r_j is the multiplicity of the
    // hook (n-1-j, 1^j) downstairs, and compare with the direct computation.
    auto hook = [](int size, int leg) {
        std::vector<int> parts{size - leg};
        for (int i = 0; i < leg; ++i) parts.push_back(1);
        return Partition(parts);
    };
    std::vector<long long> solved(static_cast<std::size_t>(n), 0);
    solved[0] = 1;
    for (int j = 0; j + 1 < n; ++j) {
        long long r_j = plain_down.at(hook(n - 1, j));
        solved[static_cast<std::size_t>(j) + 1] = r_j - solved[static_cast<std::size_t>(j)];
    }
    for (int j = 0; j < n; ++j) {
        long long direct = central_n.at(hook(n, j));
        if (direct != solved[static_cast<std::size_t>(j)]) return false;
    }
    return true;
}

bool verify_t_generation(CocharEngine& g_engine, int n) {
    if (n < 1) throw std::invalid_argument("verify_t_generation: n must be >= 1");
    NCPolynomial x = NCPolynomial::variable(1);
    NCPolynomial y = NCPolynomial::variable(2);
    NCPolynomial u = NCPolynomial::variable(3);
    NCPolynomial comm = commutator(x, y);
    NCPolynomial triple = commutator(commutator(x, y), u);

    std::vector<MultilinearPolynomial> span = t_subalgebra_multilinear({triple}, {comm}, n);

    std::size_t cols = factorial_sz(n);
    RowEchelon ech(static_cast<int>(cols));
    for (const MultilinearPolynomial& h : span) {
        // containment first: every element must be central on G
        if (!is_central_G(h)) return false;
        if (!h.is_zero()) ech.insert_sparse(integer_row(h.algebra()));
    }
    int expected = static_cast<int>(cols) - g_engine.codimension(n, Variant::central);
    return ech.rank() == expected;
}

SandwichRecord verify_sandwich(CocharEngine& m_engine, int n, int k) {
    SandwichRecord rec;
    rec.n = n;
    rec.k = k;
    rec.delta = m_engine.delta(n);
    rec.c_n = m_engine.codimension(n, Variant::plain);

    // Largest f^lambda whose semi-idempotent is proper central on M_k; the
    // left ideal it generates then sits inside D_n, so f^lambda <= delta_n.
    std::vector<Partition> shapes = partitions_of(n);
    std::sort(shapes.begin(), shapes.end(), [](const Partition& a, const Partition& b) {
        return dimension(a) > dimension(b);
    });
    for (const Partition& lambda : shapes) {
        bool found = false;
        for (const YoungTableau& t : standard_tableaux(lambda)) {
            MultilinearPolynomial e(semi_idempotent(t));
            if (is_central_Mk(e, k) && !is_identity_Mk(e, k)) {
                found = true;
                break;
            }
        }
        if (found) {
            rec.f_lambda = dimension(lambda);
            rec.lambda = lambda;
            break;
        }
    }
    rec.holds = (rec.f_lambda <= rec.delta) && (rec.delta <= rec.c_n);
    return rec;
}

}  // namespace growth
