#include "growth/symgroup.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "growth/errors.hpp"

namespace growth {

GroupAlgebraElement GroupAlgebraElement::basis(const Permutation& p, const Rational& coeff) {
    GroupAlgebraElement e(p.degree());
    e.add_term(p, coeff);
    return e;
}

Rational GroupAlgebraElement::coefficient(const Permutation& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Rational(0) : it->second;
}

void GroupAlgebraElement::add_term(const Permutation& p, const Rational& coeff) {
    if (p.degree() != degree_) throw DegreeMismatch("add_term: wrong degree");
    if (coeff == 0) return;
    auto [it, fresh] = terms_.emplace(p, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& rhs) {
    if (rhs.degree_ != degree_) throw DegreeMismatch("ga add: degree mismatch");
    for (const auto& [p, c] : rhs.terms_) add_term(p, c);
    return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& rhs) {
    if (rhs.degree_ != degree_) throw DegreeMismatch("ga sub: degree mismatch");
    for (const auto& [p, c] : rhs.terms_) add_term(p, -c);
    return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [p, v] : terms_) v *= c;
    return *this;
}

std::string GroupAlgebraElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        if (!first) os << " + ";
        os << growth::to_string(c) << "*" << p.to_string();
        first = false;
    }
    return os.str();
}

GroupAlgebraElement ga_multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    if (a.degree() != b.degree()) throw DegreeMismatch("ga_multiply: degree mismatch");
    GroupAlgebraElement out(a.degree());
    for (const auto& [p, cp] : a.terms())
        for (const auto& [q, cq] : b.terms()) out.add_term(compose(p, q), cp * cq);
    return out;
}

GroupAlgebraElement left_translate(const Permutation& sigma, const GroupAlgebraElement& a) {
    if (sigma.degree() != a.degree()) throw DegreeMismatch("left_translate: degree mismatch");
    GroupAlgebraElement out(a.degree());
    for (const auto& [p, c] : a.terms()) out.add_term(compose(sigma, p), c);
    return out;
}

GroupAlgebraElement right_translate(const GroupAlgebraElement& a, const Permutation& sigma) {
    if (sigma.degree() != a.degree()) throw DegreeMismatch("right_translate: degree mismatch");
    GroupAlgebraElement out(a.degree());
    for (const auto& [p, c] : a.terms()) out.add_term(compose(p, sigma), c);
    return out;
}

namespace {

// Enumerates the subgroup of S_n preserving each block setwise, invoking f
// with the permutation and the product of per-block arrangement signs.
template <typename F>
void for_each_block_permutation(int n, const std::vector<std::vector<int>>& blocks, F&& f) {
    // blocks hold 1-based entries
    std::vector<std::vector<int>> arrangements = blocks;
    for (auto& a : arrangements) std::sort(a.begin(), a.end());
    std::vector<std::uint8_t> img(n);

    auto emit = [&]() {
        for (int i = 0; i < n; ++i) img[i] = static_cast<std::uint8_t>(i);
        int sign = 1;
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            std::vector<int> sorted = blocks[b];
            std::sort(sorted.begin(), sorted.end());
            const auto& arr = arrangements[b];
            for (std::size_t j = 0; j < arr.size(); ++j)
                img[sorted[j] - 1] = static_cast<std::uint8_t>(arr[j] - 1);
            int inv = 0;
            for (std::size_t i = 0; i < arr.size(); ++i)
                for (std::size_t j = i + 1; j < arr.size(); ++j)
                    if (arr[i] > arr[j]) ++inv;
            if (inv % 2) sign = -sign;
        }
        f(Permutation(img), sign);
    };

    // Odometer over per-block arrangements in lexicographic order.
    std::function<void(std::size_t)> rec = [&](std::size_t b) {
        if (b == arrangements.size()) {
            emit();
            return;
        }
        std::sort(arrangements[b].begin(), arrangements[b].end());
        do {
            rec(b + 1);
        } while (std::next_permutation(arrangements[b].begin(), arrangements[b].end()));
    };
    rec(0);
}

}  // namespace

GroupAlgebraElement row_symmetrizer(const YoungTableau& t) {
    GroupAlgebraElement out(t.n());
    for_each_block_permutation(t.n(), t.rows(),
                               [&](const Permutation& p, int) { out.add_term(p, 1); });
    return out;
}

GroupAlgebraElement column_antisymmetrizer(const YoungTableau& t) {
    std::vector<std::vector<int>> cols;
    for (int j = 0; j < t.shape().part(0); ++j) cols.push_back(t.column(j));
    GroupAlgebraElement out(t.n());
    for_each_block_permutation(t.n(), cols,
                               [&](const Permutation& p, int sign) { out.add_term(p, sign); });
    return out;
}

GroupAlgebraElement semi_idempotent(const YoungTableau& t) {
    return ga_multiply(row_symmetrizer(t), column_antisymmetrizer(t));
}

std::vector<std::pair<int, std::int64_t>> integer_row(const GroupAlgebraElement& a) {
    BigInt lcm = 1;
    for (const auto& [p, c] : a.terms()) {
        BigInt l;
        mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
        lcm = l;
    }
    std::vector<std::pair<int, std::int64_t>> row;
    row.reserve(a.term_count());
    for (const auto& [p, c] : a.terms()) {
        BigInt v = c.get_num() * (lcm / c.get_den());
        if (!v.fits_slong_p()) throw std::overflow_error("integer_row: coefficient too large");
        row.emplace_back(static_cast<int>(p.rank()), static_cast<std::int64_t>(v.get_si()));
    }
    return row;
}

int left_ideal_rank(const GroupAlgebraElement& a) {
    return left_ideal_row_space(a).rank();
}

RowEchelon left_ideal_row_space(const GroupAlgebraElement& a) {
    std::size_t cols = 1;
    for (int i = 2; i <= a.degree(); ++i) cols *= static_cast<std::size_t>(i);
    RowEchelon basis(static_cast<int>(cols));
    for (const Permutation& sigma : all_permutations(a.degree()))
        basis.insert_sparse(integer_row(left_translate(sigma, a)));
    return basis;
}

}  // namespace growth
