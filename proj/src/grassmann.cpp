#include "growth/grassmann.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

#include "growth/errors.hpp"

namespace growth {

GrassmannElement GrassmannElement::basis(std::vector<int> indices, Rational coeff) {
    GrassmannElement e;
    e.add_term(std::move(indices), coeff);
    return e;
}

void GrassmannElement::add_term(std::vector<int> indices, const Rational& coeff) {
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] < 1) throw std::invalid_argument("generator indices start at 1");
        if (i > 0 && indices[i] <= indices[i - 1])
            throw std::invalid_argument("generator indices must be strictly increasing");
    }
    if (coeff == 0) return;
    auto [it, fresh] = terms_.emplace(std::move(indices), coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

GrassmannElement& GrassmannElement::operator+=(const GrassmannElement& rhs) {
    for (const auto& [idx, c] : rhs.terms_) add_term(idx, c);
    return *this;
}

GrassmannElement& GrassmannElement::operator-=(const GrassmannElement& rhs) {
    for (const auto& [idx, c] : rhs.terms_) add_term(idx, -c);
    return *this;
}

std::string GrassmannElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (a != 1) os << growth::to_string(a) << ' ';
        os << "e[";
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (i) os << ',';
            os << idx[i];
        }
        os << ']';
        first = false;
    }
    return os.str();
}

GrassmannElement g_multiply(const GrassmannElement& a, const GrassmannElement& b) {
    GrassmannElement out;
    for (const auto& [ia, ca] : a.terms())
        for (const auto& [ib, cb] : b.terms()) {
            // e_I e_J = 0 on overlap, else +-e_{I union J}; the sign counts
            // the transpositions moving J's indices into place.
            std::vector<int> merged;
            merged.reserve(ia.size() + ib.size());
            std::size_t i = 0, j = 0;
            long crossings = 0;
            bool zero = false;
            while (i < ia.size() || j < ib.size()) {
                if (j == ib.size() || (i < ia.size() && ia[i] < ib[j])) {
                    merged.push_back(ia[i++]);
                } else if (i < ia.size() && ia[i] == ib[j]) {
                    zero = true;
                    break;
                } else {
                    crossings += static_cast<long>(ia.size() - i);
                    merged.push_back(ib[j++]);
                }
            }
            if (zero) continue;
            Rational c = ca * cb;
            if (crossings % 2) c = -c;
            out.add_term(std::move(merged), c);
        }
    return out;
}

bool is_central(const GrassmannElement& a) {
    for (const auto& [idx, c] : a.terms())
        if (idx.size() % 2) return false;
    return true;
}

GrassmannElement evaluate(const NCPolynomial& p,
                          const std::map<int, GrassmannElement>& assignment) {
    GrassmannElement out;
    for (const auto& [w, c] : p.terms()) {
        GrassmannElement prod = GrassmannElement::basis({}, c);
        for (int v : w) {
            auto it = assignment.find(v);
            if (it == assignment.end())
                throw UnmappedVariable("evaluate: x" + std::to_string(v) + " unmapped");
            prod = g_multiply(prod, it->second);
            if (prod.is_zero()) break;
        }
        out += prod;
    }
    return out;
}

int ParityVector::weight() const { return std::popcount(bits_ & ((1u << n_) - 1u)); }

int parity_sign(const Permutation& sigma, const ParityVector& eps) {
    if (sigma.degree() != eps.degree())
        throw DegreeMismatch("parity_sign: degree mismatch");
    // Sign of the odd-variable subsequence of sigma's one-line word.
    int inv = 0;
    std::vector<int> seen;
    for (int i = 0; i < sigma.degree(); ++i) {
        int letter = sigma.apply(i) + 1;
        if (!eps.odd(letter)) continue;
        for (int prev : seen)
            if (prev > letter) ++inv;
        seen.push_back(letter);
    }
    return inv % 2 ? -1 : 1;
}

std::vector<std::int8_t> parity_sign_row(const Permutation& sigma) {
    // Gray-code walk over subsets: flipping variable v in or out changes the
    // inversion count of the odd subsequence by the overlap of v's inversion
    // mask with the current subset.
    int n = sigma.degree();
    std::uint32_t full = (1u << n) - 1u;
    std::vector<std::int8_t> row(static_cast<std::size_t>(full) + 1);
    std::vector<std::uint32_t> inv_mask(static_cast<std::size_t>(n) + 1);
    std::vector<int> pos(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i < n; ++i) pos[sigma.apply(i) + 1] = i;
    for (int v = 1; v <= n; ++v) {
        std::uint32_t m = 0;
        for (int w = 1; w <= n; ++w) {
            if (w == v) continue;
            bool inverted = (v < w) ? (pos[v] > pos[w]) : (pos[w] > pos[v]);
            if (inverted) m |= 1u << (w - 1);
        }
        inv_mask[v] = m;
    }
    std::uint32_t subset = 0;
    int sign = 1;
    row[0] = 1;
    for (std::uint32_t g = 1; g <= full; ++g) {
        std::uint32_t code = g ^ (g >> 1);
        int v = std::countr_zero(code ^ subset) + 1;
        if (std::popcount(inv_mask[v] & subset) % 2) sign = -sign;
        subset = code;
        row[subset] = static_cast<std::int8_t>(sign);
    }
    return row;
}

namespace {

// For each eps, is sum_sigma coeff(sigma) * parity_sign(sigma, eps) zero?
bool parity_sums_vanish(const MultilinearPolynomial& h, bool odd_weight_only) {
    int n = h.degree();
    if (h.is_zero()) return true;
    std::uint32_t full = (1u << n) - 1u;
    std::vector<Rational> sums(static_cast<std::size_t>(full) + 1, Rational(0));
    for (const auto& [perm, c] : h.algebra().terms()) {
        std::vector<std::int8_t> row = parity_sign_row(perm);
        for (std::uint32_t eps = 0; eps <= full; ++eps) sums[eps] += row[eps] > 0 ? c : -c;
    }
    for (std::uint32_t eps = 0; eps <= full; ++eps) {
        if (odd_weight_only && std::popcount(eps) % 2 == 0) continue;
        if (sums[eps] != 0) return false;
    }
    return true;
}

}  // namespace

bool is_identity_G(const MultilinearPolynomial& h) { return parity_sums_vanish(h, false); }

bool is_central_G(const MultilinearPolynomial& h) { return parity_sums_vanish(h, true); }

std::map<int, GrassmannElement> disjoint_substitution(const ParityVector& eps) {
    std::map<int, GrassmannElement> asg;
    int next = 1;
    for (int v = 1; v <= eps.degree(); ++v) {
        if (eps.odd(v)) {
            asg.emplace(v, GrassmannElement::basis({next}));
            next += 1;
        } else {
            asg.emplace(v, GrassmannElement::basis({next, next + 1}));
            next += 2;
        }
    }
    return asg;
}

bool is_identity_G_direct(const MultilinearPolynomial& h) {
    int n = h.degree();
    NCPolynomial p = h.to_polynomial();
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
        ParityVector eps(n, bits);
        if (!evaluate(p, disjoint_substitution(eps)).is_zero()) return false;
    }
    return true;
}

bool is_central_G_direct(const MultilinearPolynomial& h) {
    int n = h.degree();
    NCPolynomial p = h.to_polynomial();
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
        ParityVector eps(n, bits);
        if (!is_central(evaluate(p, disjoint_substitution(eps)))) return false;
    }
    return true;
}

bool check_lemma_cancellation2(const MultilinearPolynomial& h) {
    return is_central_G(prepend_variable(h)) == is_identity_G(h);
}

}  // namespace growth
