#include "growth/freealg.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "growth/errors.hpp"

namespace growth {

NCPolynomial NCPolynomial::monomial(Word w, Rational coeff) {
    NCPolynomial p;
    p.add_term(std::move(w), coeff);
    return p;
}

NCPolynomial NCPolynomial::variable(int index) {
    if (index < 1) throw std::invalid_argument("variable indices start at 1");
    return monomial(Word{index});
}

Rational NCPolynomial::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void NCPolynomial::add_term(const Word& w, const Rational& coeff) {
    if (coeff == 0) return;
    for (int v : w)
        if (v < 1) throw std::invalid_argument("variable indices start at 1");
    auto [it, fresh] = terms_.emplace(w, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

NCPolynomial& NCPolynomial::operator+=(const NCPolynomial& rhs) {
    for (const auto& [w, c] : rhs.terms_) add_term(w, c);
    return *this;
}

NCPolynomial& NCPolynomial::operator-=(const NCPolynomial& rhs) {
    for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
    return *this;
}

NCPolynomial& NCPolynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
}

int NCPolynomial::max_variable() const {
    int m = 0;
    for (const auto& [w, c] : terms_)
        for (int v : w) m = std::max(m, v);
    return m;
}

std::string NCPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        bool need_coeff = (a != 1) || w.empty();
        if (need_coeff) os << growth::to_string(a);
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (need_coeff || i) os << ' ';
            os << 'x' << w[i];
        }
        first = false;
    }
    return os.str();
}

NCPolynomial NCPolynomial::parse(const std::string& text) {
    NCPolynomial out;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i == text.size()) throw std::invalid_argument("empty polynomial text");
    if (text.compare(i, 1, "0") == 0 && i + 1 == text.size()) return out;
    bool negative = false;
    if (text[i] == '-') { negative = true; ++i; }
    while (true) {
        skip_ws();
        // coefficient (optional)
        std::size_t start = i;
        while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) ++i;
        Rational coeff = 1;
        if (i > start) coeff = parse_rational(text.substr(start, i - start));
        // variables
        Word w;
        while (true) {
            skip_ws();
            if (i >= text.size() || text[i] != 'x') break;
            ++i;
            start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start) throw std::invalid_argument("bad variable in polynomial text");
            w.push_back(std::stoi(text.substr(start, i - start)));
        }
        out.add_term(w, negative ? -coeff : coeff);
        skip_ws();
        if (i == text.size()) break;
        if (text[i] == '+') negative = false;
        else if (text[i] == '-') negative = true;
        else throw std::invalid_argument("bad separator in polynomial text");
        ++i;
    }
    return out;
}

NCPolynomial nc_multiply(const NCPolynomial& p, const NCPolynomial& q) {
    NCPolynomial out;
    for (const auto& [wp, cp] : p.terms())
        for (const auto& [wq, cq] : q.terms()) {
            Word w = wp;
            w.insert(w.end(), wq.begin(), wq.end());
            out.add_term(w, cp * cq);
        }
    return out;
}

NCPolynomial commutator(const NCPolynomial& p, const NCPolynomial& q) {
    return nc_multiply(p, q) - nc_multiply(q, p);
}

NCPolynomial substitute(const NCPolynomial& p, const std::map<int, NCPolynomial>& assignment) {
    NCPolynomial out;
    for (const auto& [w, c] : p.terms()) {
        NCPolynomial prod = NCPolynomial::monomial(Word{}, c);
        for (int v : w) {
            auto it = assignment.find(v);
            if (it == assignment.end())
                throw UnmappedVariable("substitute: x" + std::to_string(v) + " unmapped");
            prod = nc_multiply(prod, it->second);
        }
        out += prod;
    }
    return out;
}

Word word_of(const Permutation& p) {
    Word w(p.degree());
    for (int i = 0; i < p.degree(); ++i) w[i] = p.apply(i) + 1;
    return w;
}

Permutation permutation_of(const Word& w) {
    std::vector<std::uint8_t> img;
    img.reserve(w.size());
    for (int v : w) {
        if (v < 1 || v > static_cast<int>(w.size()))
            throw std::invalid_argument("word is not multilinear on 1..n");
        img.push_back(static_cast<std::uint8_t>(v - 1));
    }
    return Permutation(std::move(img));  // throws if not a bijection
}

MultilinearPolynomial MultilinearPolynomial::from_polynomial(const NCPolynomial& p, int n) {
    GroupAlgebraElement elem(n);
    for (const auto& [w, c] : p.terms()) {
        if (static_cast<int>(w.size()) != n)
            throw std::invalid_argument("from_polynomial: word degree != n");
        elem.add_term(permutation_of(w), c);
    }
    return MultilinearPolynomial(std::move(elem));
}

NCPolynomial MultilinearPolynomial::to_polynomial() const {
    NCPolynomial p;
    for (const auto& [perm, c] : elem_.terms()) p.add_term(word_of(perm), c);
    return p;
}

MultilinearPolynomial prepend_variable(const MultilinearPolynomial& h) {
    int n = h.degree() + 1;
    GroupAlgebraElement out(n);
    for (const auto& [perm, c] : h.algebra().terms()) {
        std::vector<std::uint8_t> img(static_cast<std::size_t>(n));
        img[0] = static_cast<std::uint8_t>(n - 1);
        for (int i = 0; i < n - 1; ++i) img[i + 1] = static_cast<std::uint8_t>(perm.apply(i));
        out.add_term(Permutation(std::move(img)), c);
    }
    return MultilinearPolynomial(std::move(out));
}

MultilinearPolynomial peel_leading(const MultilinearPolynomial& h) {
    int n = h.degree();
    if (n < 1) throw std::invalid_argument("peel_leading: degree must be >= 1");
    GroupAlgebraElement out(n - 1);
    for (const auto& [perm, c] : h.algebra().terms()) {
        // word = a x_n b  ->  b a
        std::vector<std::uint8_t> img;
        img.reserve(static_cast<std::size_t>(n) - 1);
        int cut = 0;
        while (perm.apply(cut) != n - 1) ++cut;
        for (int i = cut + 1; i < n; ++i) img.push_back(static_cast<std::uint8_t>(perm.apply(i)));
        for (int i = 0; i < cut; ++i) img.push_back(static_cast<std::uint8_t>(perm.apply(i)));
        out.add_term(Permutation(std::move(img)), c);
    }
    return MultilinearPolynomial(std::move(out));
}

MultilinearPolynomial multilinearize(const NCPolynomial& p, int d) {
    if (d < 1) throw std::invalid_argument("multilinearize: d must be >= 1");
    if (p.is_zero()) throw NotMultihomogeneous("multilinearize: zero polynomial");
    int v = p.max_variable();
    for (const auto& [w, c] : p.terms()) {
        std::vector<int> deg(static_cast<std::size_t>(v) + 1, 0);
        for (int x : w) ++deg[x];
        for (int i = 1; i <= v; ++i)
            if (deg[i] != d)
                throw NotMultihomogeneous("multilinearize: not of degree " + std::to_string(d) +
                                          " in x" + std::to_string(i));
    }
    int n = v * d;
    GroupAlgebraElement out(n);
    // Fresh names for x_i: (i-1)d+1 .. id.  Each word contributes one term
    // per choice of a bijection occurrences-of-x_i -> fresh names, for all i
    // independently.
    for (const auto& [w, c] : p.terms()) {
        std::vector<std::vector<int>> arrangement(static_cast<std::size_t>(v));
        for (int i = 0; i < v; ++i) {
            arrangement[i].resize(static_cast<std::size_t>(d));
            std::iota(arrangement[i].begin(), arrangement[i].end(), 0);
        }
        std::function<void(int)> rec = [&](int var) {
            if (var == v) {
                std::vector<int> next(static_cast<std::size_t>(v), 0);
                std::vector<std::uint8_t> img;
                img.reserve(static_cast<std::size_t>(n));
                for (int x : w) {
                    int copy = arrangement[x - 1][next[x - 1]++];
                    img.push_back(static_cast<std::uint8_t>((x - 1) * d + copy));
                }
                out.add_term(Permutation(std::move(img)), c);
                return;
            }
            std::sort(arrangement[var].begin(), arrangement[var].end());
            do {
                rec(var + 1);
            } while (std::next_permutation(arrangement[var].begin(), arrangement[var].end()));
        };
        rec(0);
    }
    return MultilinearPolynomial(std::move(out));
}

namespace {

// Runs f for every way of arranging each block of `blocks` (values are
// 1-based variable names), passing the per-block words.
template <typename F>
void for_each_block_words(std::vector<std::vector<int>> blocks, F&& f) {
    std::function<void(std::size_t)> rec = [&](std::size_t b) {
        if (b == blocks.size()) {
            f(blocks);
            return;
        }
        std::sort(blocks[b].begin(), blocks[b].end());
        do {
            rec(b + 1);
        } while (std::next_permutation(blocks[b].begin(), blocks[b].end()));
    };
    rec(0);
}

// Multilinear instance g(m_1..m_t) for monomial arguments: each word of g is
// expanded by splicing the argument words.
NCPolynomial instance_of(const NCPolynomial& g, const std::vector<std::vector<int>>& args) {
    NCPolynomial out;
    for (const auto& [w, c] : g.terms()) {
        Word expanded;
        for (int v : w) {
            const auto& arg = args[static_cast<std::size_t>(v) - 1];
            expanded.insert(expanded.end(), arg.begin(), arg.end());
        }
        out.add_term(expanded, c);
    }
    return out;
}

// Emits every ideal spanning element on the given (sorted) support: for each
// generator g of degree t, u0 * g(m_1..m_t) * u1 over all labelings of the
// support into t+2 blocks (the middle t nonempty) and all block orderings.
void enumerate_ideal_elements(const std::vector<NCPolynomial>& generators,
                              const std::vector<int>& support,
                              const std::function<void(const NCPolynomial&)>& sink) {
    int s = static_cast<int>(support.size());
    for (const NCPolynomial& g : generators) {
        int t = g.max_variable();
        if (t == 0) continue;
        if (t > s) continue;
        int slots = t + 2;
        std::vector<int> label(static_cast<std::size_t>(s), 0);
        while (true) {
            // validity: blocks 1..t (argument slots) nonempty
            std::vector<std::vector<int>> blocks(static_cast<std::size_t>(slots));
            for (int i = 0; i < s; ++i) blocks[static_cast<std::size_t>(label[i])].push_back(support[i]);
            bool ok = true;
            for (int b = 1; b <= t; ++b)
                if (blocks[static_cast<std::size_t>(b)].empty()) ok = false;
            if (ok) {
                for_each_block_words(blocks, [&](const std::vector<std::vector<int>>& words) {
                    std::vector<std::vector<int>> args(words.begin() + 1, words.begin() + 1 + t);
                    NCPolynomial mid = instance_of(g, args);
                    NCPolynomial u0 = NCPolynomial::monomial(Word(words[0].begin(), words[0].end()));
                    NCPolynomial u1 = NCPolynomial::monomial(
                        Word(words[static_cast<std::size_t>(t) + 1].begin(),
                             words[static_cast<std::size_t>(t) + 1].end()));
                    sink(nc_multiply(nc_multiply(u0, mid), u1));
                });
            }
            // odometer over labelings
            int i = s - 1;
            while (i >= 0 && label[i] == slots - 1) label[i--] = 0;
            if (i < 0) break;
            ++label[i];
        }
    }
}

// Emits every substitution instance of the algebra generators on the support.
void enumerate_instance_elements(const std::vector<NCPolynomial>& generators,
                                 const std::vector<int>& support,
                                 const std::function<void(const NCPolynomial&)>& sink) {
    int s = static_cast<int>(support.size());
    for (const NCPolynomial& g : generators) {
        int t = g.max_variable();
        if (t == 0 || t > s) continue;
        std::vector<int> label(static_cast<std::size_t>(s), 0);
        while (true) {
            std::vector<std::vector<int>> blocks(static_cast<std::size_t>(t));
            for (int i = 0; i < s; ++i) blocks[static_cast<std::size_t>(label[i])].push_back(support[i]);
            bool ok = true;
            for (const auto& b : blocks)
                if (b.empty()) ok = false;
            if (ok) {
                for_each_block_words(blocks, [&](const std::vector<std::vector<int>>& words) {
                    sink(instance_of(g, words));
                });
            }
            int i = s - 1;
            while (i >= 0 && label[i] == t - 1) label[i--] = 0;
            if (i < 0) break;
            ++label[i];
        }
    }
}

void check_multilinear_generators(const std::vector<NCPolynomial>& gens) {
    for (const NCPolynomial& g : gens) {
        int t = g.max_variable();
        for (const auto& [w, c] : g.terms()) {
            std::vector<int> deg(static_cast<std::size_t>(t) + 1, 0);
            for (int v : w) ++deg[v];
            for (int i = 1; i <= t; ++i)
                if (deg[i] != 1)
                    throw std::invalid_argument("generators must be multilinear in x1..xt");
        }
    }
}

}  // namespace

std::vector<MultilinearPolynomial> t_ideal_multilinear(const std::vector<NCPolynomial>& generators,
                                                       int n) {
    check_multilinear_generators(generators);
    std::vector<int> support(static_cast<std::size_t>(n));
    std::iota(support.begin(), support.end(), 1);
    std::vector<MultilinearPolynomial> out;
    enumerate_ideal_elements(generators, support, [&](const NCPolynomial& p) {
        out.push_back(MultilinearPolynomial::from_polynomial(p, n));
    });
    return out;
}

std::vector<MultilinearPolynomial> t_subalgebra_multilinear(
    const std::vector<NCPolynomial>& ideal_gens, const std::vector<NCPolynomial>& alg_gens, int n) {
    check_multilinear_generators(ideal_gens);
    check_multilinear_generators(alg_gens);
    std::vector<MultilinearPolynomial> out;
    if (n == 0) return out;

    std::vector<int> elements(static_cast<std::size_t>(n));
    std::iota(elements.begin(), elements.end(), 1);

    // Ordered products over disjoint supports: pick the support of the next
    // factor as a submask of what remains.
    std::function<void(unsigned, const NCPolynomial&)> rec = [&](unsigned remaining,
                                                                 const NCPolynomial& acc) {
        if (remaining == 0) {
            out.push_back(MultilinearPolynomial::from_polynomial(acc, n));
            return;
        }
        for (unsigned sub = remaining; sub; sub = (sub - 1) & remaining) {
            std::vector<int> support;
            for (int i = 0; i < n; ++i)
                if (sub & (1u << i)) support.push_back(i + 1);
            auto use = [&](const NCPolynomial& factor) {
                if (factor.is_zero()) return;
                rec(remaining & ~sub, acc.is_zero() ? factor : nc_multiply(acc, factor));
            };
            enumerate_ideal_elements(ideal_gens, support, use);
            enumerate_instance_elements(alg_gens, support, use);
        }
    };
    rec((1u << n) - 1, NCPolynomial{});
    return out;
}

NCPolynomial tableau_polynomial(const YoungTableau& t) {
    GroupAlgebraElement e = semi_idempotent(t);
    NCPolynomial out;
    for (const auto& [perm, c] : e.terms()) {
        Word w;
        w.reserve(static_cast<std::size_t>(t.n()));
        for (int i = 0; i < t.n(); ++i) w.push_back(t.row_of(perm.apply(i) + 1) + 1);
        out.add_term(w, c);
    }
    return out;
}

MultilinearPolynomial random_multilinear(int n, std::mt19937_64& rng, int max_terms) {
    std::size_t fact = 1;
    for (int i = 2; i <= n; ++i) fact *= static_cast<std::size_t>(i);
    std::uniform_int_distribution<std::size_t> pick_perm(0, fact - 1);
    std::uniform_int_distribution<int> pick_terms(1, max_terms);
    std::uniform_int_distribution<int> pick_coeff(-3, 3);
    GroupAlgebraElement elem(n);
    int terms = pick_terms(rng);
    for (int i = 0; i < terms; ++i) {
        int c = pick_coeff(rng);
        if (c == 0) c = 1;
        elem.add_term(Permutation::unrank(n, pick_perm(rng)), c);
    }
    return MultilinearPolynomial(std::move(elem));
}

}  // namespace growth
