#include "growth/matalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "growth/errors.hpp"
#include "growth/permutation.hpp"

namespace growth {

RationalMatrix RationalMatrix::identity(int k) {
    RationalMatrix m(k);
    for (int i = 0; i < k; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::unit(int k, int i, int j) {
    RationalMatrix m(k);
    m.at(i, j) = 1;
    return m;
}

RationalMatrix RationalMatrix::diagonal(std::vector<Rational> d) {
    RationalMatrix m(static_cast<int>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& rhs) {
    if (rhs.k_ != k_) throw SizeMismatch("matrix add: size mismatch");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += rhs.e_[i];
    return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.k_ != b.k_) throw SizeMismatch("matrix mul: size mismatch");
    RationalMatrix out(a.k_);
    for (int i = 0; i < a.k_; ++i)
        for (int l = 0; l < a.k_; ++l) {
            Rational s = 0;
            for (int j = 0; j < a.k_; ++j) s += a.at(i, j) * b.at(j, l);
            out.at(i, l) = s;
        }
    return out;
}

std::string RationalMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < k_; ++i) {
        if (i) os << "; ";
        for (int j = 0; j < k_; ++j) {
            if (j) os << ' ';
            os << growth::to_string(at(i, j));
        }
    }
    os << ']';
    return os.str();
}

RationalMatrix m_evaluate(const NCPolynomial& p, const std::map<int, RationalMatrix>& assignment) {
    int k = assignment.empty() ? 1 : assignment.begin()->second.size();
    for (const auto& [v, m] : assignment)
        if (m.size() != k) throw SizeMismatch("m_evaluate: mixed matrix sizes");
    RationalMatrix acc(k);
    for (const auto& [w, c] : p.terms()) {
        RationalMatrix prod = RationalMatrix::identity(k);
        for (int v : w) {
            auto it = assignment.find(v);
            if (it == assignment.end())
                throw UnmappedVariable("m_evaluate: x" + std::to_string(v) + " unmapped");
            prod = prod * it->second;
        }
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) acc.at(i, j) += c * prod.at(i, j);
    }
    return acc;
}

bool is_scalar(const RationalMatrix& m) {
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) {
            if (i != j && m.at(i, j) != 0) return false;
            if (i == j && m.at(i, j) != m.at(0, 0)) return false;
        }
    return true;
}

namespace {

struct ChainTerm {
    std::vector<std::uint8_t> vars;  // 0-based variable at each position
    Rational coeff;
};

std::vector<ChainTerm> chain_terms(const MultilinearPolynomial& h) {
    std::vector<ChainTerm> terms;
    terms.reserve(h.algebra().term_count());
    for (const auto& [perm, c] : h.algebra().terms()) {
        ChainTerm t;
        t.vars.resize(static_cast<std::size_t>(h.degree()));
        for (int i = 0; i < h.degree(); ++i) t.vars[i] = static_cast<std::uint8_t>(perm.apply(i));
        t.coeff = c;
        terms.push_back(std::move(t));
    }
    return terms;
}

// Walks h over every matrix-unit tuple; stops early when `stop` returns
// true for some evaluation.  Unit u (0-based) is e_{u/k, u%k}.
template <typename F>
void for_each_unit_evaluation(const MultilinearPolynomial& h, int k, F&& visit) {
    int n = h.degree();
    int units = k * k;
    std::vector<ChainTerm> terms = chain_terms(h);
    std::vector<int> tuple(static_cast<std::size_t>(n), 0);  // unit per variable
    std::vector<Rational> acc(static_cast<std::size_t>(k) * k);
    while (true) {
        for (auto& a : acc) a = 0;
        for (const ChainTerm& t : terms) {
            int u0 = tuple[t.vars[0]];
            int row0 = u0 / k;
            int cur = u0 % k;
            bool alive = true;
            for (int i = 1; i < n; ++i) {
                int u = tuple[t.vars[i]];
                if (u / k != cur) { alive = false; break; }
                cur = u % k;
            }
            if (alive) acc[static_cast<std::size_t>(row0) * k + cur] += t.coeff;
        }
        if (!visit(acc)) return;
        int i = n - 1;
        while (i >= 0 && tuple[i] == units - 1) tuple[i--] = 0;
        if (i < 0) break;
        ++tuple[i];
    }
}

bool scalar_entries(const std::vector<Rational>& acc, int k) {
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const Rational& v = acc[static_cast<std::size_t>(i) * k + j];
            if (i != j && v != 0) return false;
            if (i == j && v != acc[0]) return false;
        }
    return true;
}

}  // namespace

bool is_identity_Mk(const MultilinearPolynomial& h, int k) {
    if (h.is_zero()) return true;
    bool ok = true;
    for_each_unit_evaluation(h, k, [&](const std::vector<Rational>& acc) {
        for (const Rational& v : acc)
            if (v != 0) { ok = false; return false; }
        return true;
    });
    return ok;
}

bool is_central_Mk(const MultilinearPolynomial& h, int k) {
    if (h.is_zero()) return true;
    bool ok = true;
    for_each_unit_evaluation(h, k, [&](const std::vector<Rational>& acc) {
        if (!scalar_entries(acc, k)) { ok = false; return false; }
        return true;
    });
    return ok;
}

NCPolynomial standard_polynomial(int r) {
    NCPolynomial out;
    for (const Permutation& sigma : all_permutations(r))
        out.add_term(word_of(sigma), sigma.sign());
    return out;
}

Word regev_monomial(int k, int s) {
    if (k < 1) throw std::invalid_argument("regev_monomial: k must be >= 1");
    if (s != 2 && s != 3) throw UnsupportedSetCount("regev_monomial: s must be 2 or 3");
    Word w;
    std::vector<int> next(static_cast<std::size_t>(s));
    for (int a = 0; a < s; ++a) next[a] = a * k * k + 1;
    for (int b = 1; b <= k; ++b) {
        int len = 2 * b - 1;
        for (int a = 0; a < s; ++a)
            for (int i = 0; i < len; ++i) w.push_back(next[a]++);
    }
    return w;
}

NCPolynomial regev_polynomial(int k, int s) {
    Word base = regev_monomial(k, s);
    int kk = k * k;
    std::vector<Permutation> perms = all_permutations(kk);
    // Alternate each alphabet independently.
    NCPolynomial out;
    std::vector<std::size_t> idx(static_cast<std::size_t>(s), 0);
    while (true) {
        int sign = 1;
        for (int a = 0; a < s; ++a) sign *= perms[idx[a]].sign();
        Word w(base.size());
        for (std::size_t p = 0; p < base.size(); ++p) {
            int v = base[p] - 1;
            int a = v / kk;
            int i = v % kk;
            w[p] = a * kk + perms[idx[a]].apply(i) + 1;
        }
        out.add_term(w, sign);
        int a = s - 1;
        while (a >= 0 && idx[a] + 1 == perms.size()) idx[a--] = 0;
        if (a < 0) break;
        ++idx[a];
    }
    return out;
}

NCPolynomial g_poly(int k, int s) {
    NCPolynomial L = regev_polynomial(k, s);
    int kk = k * k;
    NCPolynomial out;
    for (const auto& [w, c] : L.terms()) {
        Word folded(w.size());
        for (std::size_t p = 0; p < w.size(); ++p) folded[p] = (w[p] - 1) % kk + 1;
        out.add_term(folded, c);
    }
    return out;
}

NCPolynomial h_sym(int r) {
    if (r < 1) throw std::invalid_argument("h_sym: r must be >= 1");
    NCPolynomial out;
    for (const Permutation& sigma : all_permutations(r)) out.add_term(word_of(sigma), 1);
    return out;
}

RationalMatrix unit_by_index(int k, int u) { return RationalMatrix::unit(k, u / k, u % k); }

std::map<int, RationalMatrix> bijection_assignment(int k, const MatrixUnitBijection& beta,
                                                   int offset) {
    std::map<int, RationalMatrix> asg;
    for (int i = 0; i < k * k; ++i) asg.emplace(offset + i + 1, unit_by_index(k, beta.apply(i)));
    return asg;
}

YoungTableau regev_tableau(int k, int s) {
    Word m = regev_monomial(k, s);
    int kk = k * k;
    // column a = positions (1-based) of alphabet a, top to bottom; the
    // within-alphabet variable order is the index order, so row i of column
    // a is the position of variable (a kk + i).
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(kk));
    for (std::size_t pos = 0; pos < m.size(); ++pos) {
        int v = m[pos] - 1;
        rows[static_cast<std::size_t>(v % kk)].push_back(static_cast<int>(pos) + 1);
    }
    return YoungTableau(std::move(rows));
}

namespace {

// ---- block-tensor evaluator for the alternating polynomials ----
//
// The monomial factors into k blocks per alphabet; grouping the product by
// block index turns L's value at any variable-to-matrix assignment into
// mu(T_1 * T_2 * ... * T_s), where T_a sums sgn(sigma) times the tensor of
// block products over the a-th alphabet and mu multiplies the k tensor slots
// back together.  Tensors live in M_k^(tensor k) = M_{k^k}; entries stay
// small integers.

struct BlockTensor {
    int k = 0;
    int dim = 0;                  // k^k
    std::vector<std::int64_t> e;  // dim x dim, row-major

    explicit BlockTensor(int kk) : k(kk) {
        dim = 1;
        for (int b = 0; b < k; ++b) dim *= k;
        e.assign(static_cast<std::size_t>(dim) * dim, 0);
    }
};

BlockTensor tensor_multiply(const BlockTensor& a, const BlockTensor& b) {
    BlockTensor out(a.k);
    int d = a.dim;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            std::int64_t v = a.e[static_cast<std::size_t>(i) * d + j];
            if (v == 0) continue;
            for (int l = 0; l < d; ++l) {
                std::int64_t prod = 0, sum = 0;
                std::int64_t* slot = &out.e[static_cast<std::size_t>(i) * d + l];
                if (__builtin_mul_overflow(v, b.e[static_cast<std::size_t>(j) * d + l], &prod) ||
                    __builtin_add_overflow(*slot, prod, &sum))
                    throw std::overflow_error("block tensor arithmetic overflow");
                *slot = sum;
            }
        }
    return out;
}

// mu(a_1 (x) ... (x) a_k) = a_1 a_2 ... a_k: contract adjacent slot indices.
std::vector<std::int64_t> tensor_collapse(const BlockTensor& t) {
    int k = t.k;
    std::vector<std::int64_t> m(static_cast<std::size_t>(k) * k, 0);
    // composite row index (i_1..i_k), column (j_1..j_k); chain contributes to
    // entry (i_1, j_k) when j_b == i_{b+1} for all b.
    std::vector<int> iv(static_cast<std::size_t>(k)), jv(static_cast<std::size_t>(k));
    for (int I = 0; I < t.dim; ++I) {
        int x = I;
        for (int b = k - 1; b >= 0; --b) { iv[b] = x % k; x /= k; }
        for (int J = 0; J < t.dim; ++J) {
            std::int64_t v = t.e[static_cast<std::size_t>(I) * t.dim + J];
            if (v == 0) continue;
            x = J;
            for (int b = k - 1; b >= 0; --b) { jv[b] = x % k; x /= k; }
            bool chained = true;
            for (int b = 0; b + 1 < k; ++b)
                if (jv[b] != iv[b + 1]) { chained = false; break; }
            if (chained) m[static_cast<std::size_t>(iv[0]) * k + jv[k - 1]] += v;
        }
    }
    return m;
}

// Alphabet tensor for one assignment of units to the alphabet's variables:
// sum over sigma in S_{k^2} of sgn(sigma) (x) over blocks of the unit-chain
// products.  units[i] is the 0-based unit for variable i+1 of the alphabet.
BlockTensor alphabet_tensor(int k, const std::vector<int>& units,
                            const std::vector<Permutation>& perms) {
    BlockTensor t(k);
    std::vector<int> block_start(static_cast<std::size_t>(k));
    for (int b = 0, acc = 0; b < k; ++b) {
        block_start[b] = acc;
        acc += 2 * b + 1;
    }
    for (const Permutation& sigma : perms) {
        // product of units within each block; zero kills the term
        int row_idx = 0, col_idx = 0;
        bool alive = true;
        for (int b = 0; b < k && alive; ++b) {
            int len = 2 * b + 1;
            int u = units[static_cast<std::size_t>(sigma.apply(block_start[b]))];
            int r = u / k, c = u % k;
            for (int i = 1; i < len; ++i) {
                int u2 = units[static_cast<std::size_t>(sigma.apply(block_start[b] + i))];
                if (u2 / k != c) { alive = false; break; }
                c = u2 % k;
            }
            row_idx = row_idx * k + r;
            col_idx = col_idx * k + c;
        }
        if (!alive) continue;
        t.e[static_cast<std::size_t>(row_idx) * t.dim + col_idx] += sigma.sign();
    }
    return t;
}

bool scalar_int_matrix(const std::vector<std::int64_t>& m, int k) {
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i != j && m[static_cast<std::size_t>(i) * k + j] != 0) return false;
            if (i == j && m[static_cast<std::size_t>(i) * k + j] != m[0]) return false;
        }
    return true;
}

}  // namespace

PropertyLReport check_property_L(int k, int s, bool allow_big) {
    if (s != 2 && s != 3) throw UnsupportedSetCount("check_property_L: s must be 2 or 3");
    if (k > 3 || (k == 3 && !allow_big))
        throw BudgetExceeded("check_property_L: k = " + std::to_string(k) +
                             " needs the explicit big-computation flag (k^2! alternation terms)");
    PropertyLReport rep;
    rep.k = k;
    rep.s = s;
    int kk = k * k;
    std::vector<Permutation> perms = all_permutations(kk);

    if (k == 3) {
        // The alternation collapses the sweep: substituting sigma -> beta
        // sigma in the alternating sum gives T_beta = sgn(beta) T_id, so
        // every bijection tuple evaluates to +- mu(T_id^s).  The reindexing
        // identity is re-verified on the adjacent transpositions and a fixed
        // sample of bijections; only building T_id is expensive (9! terms).
        std::vector<int> id_units(static_cast<std::size_t>(kk));
        std::iota(id_units.begin(), id_units.end(), 0);
        BlockTensor t_id = alphabet_tensor(k, id_units, perms);
        bool symmetric = true;
        std::vector<Permutation> sample;
        for (int i = 0; i + 1 < kk; ++i) {
            std::vector<std::uint8_t> img(static_cast<std::size_t>(kk));
            std::iota(img.begin(), img.end(), 0);
            std::swap(img[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(i) + 1]);
            sample.push_back(Permutation(std::move(img)));
        }
        sample.push_back(Permutation::unrank(kk, 123456));
        sample.push_back(Permutation::unrank(kk, 222222));
        for (const Permutation& beta : sample) {
            std::vector<int> units(static_cast<std::size_t>(kk));
            for (int i = 0; i < kk; ++i) units[i] = beta.apply(i);
            BlockTensor t = alphabet_tensor(k, units, perms);
            for (std::size_t e = 0; e < t.e.size(); ++e)
                if (t.e[e] != beta.sign() * t_id.e[e]) symmetric = false;
        }
        BlockTensor prod = t_id;
        for (int a = 1; a < s; ++a) prod = tensor_multiply(prod, t_id);
        std::vector<std::int64_t> value = tensor_collapse(prod);
        rep.bijection_tuples = 1;
        for (int a = 0; a < s; ++a) rep.bijection_tuples *= perms.size();
        rep.all_scalar = symmetric && scalar_int_matrix(value, k);
        rep.all_same_abs = symmetric;
        rep.nonzero = value[0] != 0;
        rep.abs_value = value[0] < 0 ? Rational(-value[0]) : Rational(value[0]);
        return rep;
    }

    // Property L over bijection tuples, each one evaluated.
    std::vector<BlockTensor> bij_tensors;
    bij_tensors.reserve(perms.size());
    for (const Permutation& beta : perms) {
        std::vector<int> units(static_cast<std::size_t>(kk));
        for (int i = 0; i < kk; ++i) units[i] = beta.apply(i);
        bij_tensors.push_back(alphabet_tensor(k, units, perms));
    }
    rep.all_scalar = true;
    rep.all_same_abs = true;
    rep.nonzero = true;
    bool first = true;
    std::vector<std::size_t> idx(static_cast<std::size_t>(s), 0);
    while (true) {
        BlockTensor t = bij_tensors[idx[0]];
        for (int a = 1; a < s; ++a) t = tensor_multiply(t, bij_tensors[idx[a]]);
        std::vector<std::int64_t> value = tensor_collapse(t);
        ++rep.bijection_tuples;
        if (!scalar_int_matrix(value, k)) {
            rep.all_scalar = false;
        } else {
            Rational abs_val = value[0] < 0 ? Rational(-value[0]) : Rational(value[0]);
            if (abs_val == 0) rep.nonzero = false;
            if (first) {
                rep.abs_value = abs_val;
                first = false;
            } else if (abs_val != rep.abs_value) {
                rep.all_same_abs = false;
            }
        }
        int a = s - 1;
        while (a >= 0 && idx[a] + 1 == perms.size()) idx[a--] = 0;
        if (a < 0) break;
        ++idx[a];
    }

    // Centrality and identity over all unit tuples (k = 2 scale).
    rep.central_checked = (k <= 2);
    if (k <= 2) {
        int assignments = 1;
        for (int i = 0; i < kk; ++i) assignments *= kk;  // (k^2)^(k^2)
        std::vector<BlockTensor> all_tensors;
        all_tensors.reserve(static_cast<std::size_t>(assignments));
        for (int code = 0; code < assignments; ++code) {
            std::vector<int> units(static_cast<std::size_t>(kk));
            int x = code;
            for (int i = 0; i < kk; ++i) { units[i] = x % kk; x /= kk; }
            all_tensors.push_back(alphabet_tensor(k, units, perms));
        }
        rep.central = true;
        rep.identity = true;
        if (s == 2) {
            for (int a = 0; a < assignments; ++a)
                for (int b = 0; b < assignments; ++b) {
                    auto value = tensor_collapse(tensor_multiply(all_tensors[a], all_tensors[b]));
                    if (!scalar_int_matrix(value, k)) rep.central = false;
                    for (auto v : value)
                        if (v != 0) rep.identity = false;
                    if (!rep.central && !rep.identity) return rep;
                }
        } else {
            std::vector<BlockTensor> pair;
            pair.reserve(static_cast<std::size_t>(assignments) * assignments);
            for (int a = 0; a < assignments; ++a)
                for (int b = 0; b < assignments; ++b)
                    pair.push_back(tensor_multiply(all_tensors[a], all_tensors[b]));
            for (int ab = 0; ab < assignments * assignments; ++ab)
                for (int c = 0; c < assignments; ++c) {
                    auto value = tensor_collapse(tensor_multiply(pair[ab], all_tensors[c]));
                    if (!scalar_int_matrix(value, k)) rep.central = false;
                    for (auto v : value)
                        if (v != 0) rep.identity = false;
                    if (!rep.central && !rep.identity) return rep;
                }
        }
    }
    return rep;
}

LowerBound lower_bound_construction(int n, int k) {
    if (k < 2) throw PreconditionViolated("lower_bound_construction: k must be >= 2");
    int kk = k * k;
    if (n < 2 * kk)
        throw PreconditionViolated("lower_bound_construction: n must be >= 2k^2");
    LowerBound out;
    int m = n / kk;
    out.r = n % kk;
    if (m % 2) {
        out.case_id = 1;
        out.q = (m - 3) / 2;
    } else {
        out.case_id = 2;
        out.q = m / 2;
    }
    out.already_done = (out.r == 0);

    // Witness bijection: the lexicographically least injection of the h
    // variables into units that makes h_pi(units) non-central, completed to
    // a bijection by the remaining units in order.
    std::vector<int> bijection(static_cast<std::size_t>(kk));
    std::iota(bijection.begin(), bijection.end(), 0);
    if (out.r >= 1) {
        NCPolynomial h = h_sym(out.r);
        std::vector<int> inj(static_cast<std::size_t>(out.r));
        bool found = false;
        std::vector<int> pool(static_cast<std::size_t>(kk));
        std::iota(pool.begin(), pool.end(), 0);
        // r-permutations of the units in lexicographic order
        std::vector<int> stack;
        std::function<bool()> search = [&]() -> bool {
            if (static_cast<int>(stack.size()) == out.r) {
                std::map<int, RationalMatrix> asg;
                for (int d = 0; d < out.r; ++d)
                    asg.emplace(d + 1, RationalMatrix::unit(k, stack[d] / k, stack[d] % k));
                if (!is_scalar(m_evaluate(h, asg))) {
                    inj = stack;
                    return true;
                }
                return false;
            }
            for (int u : pool) {
                if (std::find(stack.begin(), stack.end(), u) != stack.end()) continue;
                stack.push_back(u);
                if (search()) return true;
                stack.pop_back();
            }
            return false;
        };
        found = search();
        if (!found) throw std::logic_error("lower_bound_construction: no non-central witness");
        // complete to a bijection: injected units first, the rest in order
        std::vector<bool> used(static_cast<std::size_t>(kk), false);
        for (int d = 0; d < out.r; ++d) { bijection[d] = inj[d]; used[inj[d]] = true; }
        int fill = out.r;
        for (int u = 0; u < kk; ++u)
            if (!used[u]) bijection[fill++] = u;
    }

    // Assemble the polynomial and tableau factor by factor.
    NCPolynomial g2 = g_poly(k, 2);
    YoungTableau t2 = regev_tableau(k, 2);
    NCPolynomial p = NCPolynomial::unit();
    YoungTableau tab;  // empty
    int shift = 0;
    auto append = [&](const NCPolynomial& factor, const YoungTableau& ft, int vars) {
        std::map<int, NCPolynomial> rename;
        for (int v = 1; v <= vars; ++v) rename.emplace(v, NCPolynomial::variable(v + shift));
        p = nc_multiply(p, substitute(factor, rename));
        tab = (tab.n() == 0) ? ft : glue_tableaux(tab, ft);
        for (int v = 1; v <= vars; ++v)
            out.witness_units.push_back(bijection[static_cast<std::size_t>(v - 1)]);
        shift += vars;
    };
    for (int i = 0; i < out.q; ++i) append(g2, t2, kk);
    if (out.case_id == 1) append(g_poly(k, 3), regev_tableau(k, 3), kk);
    if (out.r >= 1) {
        NCPolynomial h = h_sym(out.r);
        YoungTableau row = YoungTableau::row_filled(Partition(std::vector<int>{out.r}));
        append(h, row, out.r);
    }
    out.p = p;
    out.tableau = tab;
    out.lambda = tab.shape();
    out.f_lambda = dimension(out.lambda);

    if (out.r >= 1) {
        // One unit per *variable* of p (the factors reuse the bijection), not
        // per degree: g_2 and g_3 are of higher degree in each variable.
        std::map<int, RationalMatrix> asg;
        for (std::size_t v = 0; v < out.witness_units.size(); ++v) {
            int u = out.witness_units[v];
            asg.emplace(static_cast<int>(v) + 1, RationalMatrix::unit(k, u / k, u % k));
        }
        if (is_scalar(m_evaluate(out.p, asg)))
            throw std::logic_error("lower_bound_construction: witness evaluation came out central");
    }
    return out;
}

namespace {

void for_each_constraint_rows(int k, int n, bool centrality, const SparseRowSink& sink) {
    int units = k * k;
    std::vector<Permutation> perms = all_permutations(n);
    std::vector<std::vector<std::uint8_t>> words(perms.size());
    std::vector<int> ranks(perms.size());
    for (std::size_t s = 0; s < perms.size(); ++s) {
        words[s].resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) words[s][i] = static_cast<std::uint8_t>(perms[s].apply(i));
        ranks[s] = static_cast<int>(perms[s].rank());
    }
    std::vector<int> tuple(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<std::pair<int, std::int64_t>>> rows(static_cast<std::size_t>(units));
    while (true) {
        for (auto& r : rows) r.clear();
        for (std::size_t s = 0; s < perms.size(); ++s) {
            const auto& w = words[s];
            int u0 = tuple[w[0]];
            int row0 = u0 / k;
            int cur = u0 % k;
            bool alive = true;
            for (int i = 1; i < n; ++i) {
                int u = tuple[w[i]];
                if (u / k != cur) { alive = false; break; }
                cur = u % k;
            }
            if (alive) rows[static_cast<std::size_t>(row0) * k + cur].emplace_back(ranks[s], 1);
        }
        if (!centrality) {
            for (const auto& r : rows)
                if (!r.empty()) sink(r);
        } else {
            // off-diagonal entries must vanish; consecutive diagonal entries
            // must agree
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    if (i != j && !rows[static_cast<std::size_t>(i) * k + j].empty())
                        sink(rows[static_cast<std::size_t>(i) * k + j]);
            for (int i = 0; i + 1 < k; ++i) {
                std::vector<std::pair<int, std::int64_t>> diff =
                    rows[static_cast<std::size_t>(i) * k + i];
                for (auto [col, v] : rows[(static_cast<std::size_t>(i) + 1) * k + (i + 1)])
                    diff.emplace_back(col, -v);
                if (!diff.empty()) sink(diff);
            }
        }
        int i = n - 1;
        while (i >= 0 && tuple[i] == units - 1) tuple[i--] = 0;
        if (i < 0) break;
        ++tuple[i];
    }
}

}  // namespace

void for_each_identity_constraint_Mk(int k, int n, const SparseRowSink& sink) {
    for_each_constraint_rows(k, n, false, sink);
}

void for_each_centrality_constraint_Mk(int k, int n, const SparseRowSink& sink) {
    for_each_constraint_rows(k, n, true, sink);
}

}  // namespace growth
