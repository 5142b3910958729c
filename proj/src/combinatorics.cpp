#include "growth/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

#include "growth/errors.hpp"

namespace growth {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        n_ += parts_[i];
    }
}

int Partition::column_height(int j) const {
    int h = 0;
    for (int p : parts_)
        if (p >= j) ++h;
    return h;
}

std::string Partition::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

std::string to_string(const Partition& p) { return p.to_string(); }

YoungTableau::YoungTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    std::vector<int> lens;
    lens.reserve(rows_.size());
    for (const auto& r : rows_) lens.push_back(static_cast<int>(r.size()));
    shape_ = Partition(lens);
    std::vector<bool> seen(static_cast<std::size_t>(shape_.n()) + 1, false);
    for (const auto& r : rows_)
        for (int v : r) {
            if (v < 1 || v > shape_.n() || seen[v])
                throw std::invalid_argument("tableau entries must be a bijection onto 1..n");
            seen[v] = true;
        }
}

YoungTableau YoungTableau::row_filled(const Partition& shape) {
    std::vector<std::vector<int>> rows;
    int next = 1;
    for (int len : shape.parts()) {
        std::vector<int> row(len);
        for (int& v : row) v = next++;
        rows.push_back(std::move(row));
    }
    return YoungTableau(std::move(rows));
}

std::vector<int> YoungTableau::column(int j) const {
    std::vector<int> col;
    for (const auto& r : rows_)
        if (j < static_cast<int>(r.size())) col.push_back(r[j]);
    return col;
}

int YoungTableau::row_of(int v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (int x : rows_[i])
            if (x == v) return static_cast<int>(i);
    throw std::invalid_argument("entry not in tableau");
}

bool YoungTableau::is_standard() const {
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (std::size_t j = 0; j < rows_[i].size(); ++j) {
            if (j + 1 < rows_[i].size() && rows_[i][j] >= rows_[i][j + 1]) return false;
            if (i + 1 < rows_.size() && j < rows_[i + 1].size() && rows_[i][j] >= rows_[i + 1][j])
                return false;
        }
    return true;
}

std::string YoungTableau::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) os << '|';
        for (std::size_t j = 0; j < rows_[i].size(); ++j) {
            if (j) os << ',';
            os << rows_[i][j];
        }
    }
    return os.str();
}

namespace {

void partitions_rec(int n, int max_part, std::vector<int>& acc, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        acc.push_back(p);
        partitions_rec(n - p, p, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> acc;
    partitions_rec(n, n, acc, out);
    if (n == 0) out = {Partition{}};
    return out;
}

Partition conjugate(const Partition& p) {
    std::vector<int> parts;
    for (int j = 1; j <= p.part(0); ++j) parts.push_back(p.column_height(j));
    return Partition(std::move(parts));
}

BigInt dimension(const Partition& p) {
    BigInt hooks = 1;
    Partition conj = conjugate(p);
    for (int i = 0; i < p.length(); ++i)
        for (int j = 0; j < p.parts()[i]; ++j)
            hooks *= (p.parts()[i] - j) + (conj.parts()[j] - i) - 1;
    return factorial(static_cast<unsigned>(p.n())) / hooks;
}

std::vector<Partition> branch_down(const Partition& p) {
    if (p.n() < 1) throw std::invalid_argument("branch_down: empty partition");
    std::vector<Partition> out;
    for (int i = 0; i < p.length(); ++i) {
        // Corner cell: last cell of row i is removable iff the next row is
        // strictly shorter.
        if (i + 1 < p.length() && p.parts()[i + 1] == p.parts()[i]) continue;
        std::vector<int> parts = p.parts();
        if (--parts[i] == 0) parts.erase(parts.begin() + i);
        out.emplace_back(std::move(parts));
    }
    return out;
}

Partition glue_shapes(const Partition& lambda, const Partition& mu) {
    if (mu.n() == 0) return lambda;
    if (lambda.n() == 0) return mu;
    if (lambda.column_height(lambda.part(0)) < mu.length())
        throw GluePreconditionViolated("glue_shapes: last column of " + lambda.to_string() +
                                       " shorter than " + mu.to_string());
    std::vector<int> parts;
    for (int i = 0; i < lambda.length(); ++i) parts.push_back(lambda.part(i) + mu.part(i));
    return Partition(std::move(parts));
}

YoungTableau glue_tableaux(const YoungTableau& t_lambda, const YoungTableau& t_mu) {
    if (t_mu.n() == 0) return t_lambda;
    glue_shapes(t_lambda.shape(), t_mu.shape());  // precondition check
    std::vector<std::vector<int>> rows = t_lambda.rows();
    int shift = t_lambda.n();
    for (std::size_t i = 0; i < t_mu.rows().size(); ++i)
        for (int v : t_mu.rows()[i]) rows[i].push_back(v + shift);
    return YoungTableau(std::move(rows));
}

namespace {

// Murnaghan-Nakayama: strip a border strip of length `len` for the largest
// remaining cycle, recurse on the rest.  Keys are (lambda, remaining cycles).
using CharKey = std::pair<std::vector<int>, std::vector<int>>;
std::map<CharKey, long long> char_cache;             // NOLINT
std::shared_mutex char_cache_mutex;                  // NOLINT

long long mn_recurse(const std::vector<int>& lambda, const std::vector<int>& cycles);

long long mn_compute(const std::vector<int>& lambda, const std::vector<int>& cycles) {
    if (lambda.empty()) return 1;
    int len = cycles.front();
    std::vector<int> rest(cycles.begin() + 1, cycles.end());
    long long total = 0;
    // Remove a border strip of size len ending in each possible row.  Using
    // beta-numbers: strips of length len correspond to first-column hook
    // lengths b_i with b_i - len >= 0 and not already a hook length.
    int r = static_cast<int>(lambda.size());
    std::vector<int> beta(r);
    for (int i = 0; i < r; ++i) beta[i] = lambda[i] + (r - 1 - i);
    for (int i = 0; i < r; ++i) {
        int target = beta[i] - len;
        if (target < 0) continue;
        bool clash = false;
        int pos = r;  // row index the shrunken beta value would move to
        for (int j = 0; j < r; ++j) {
            if (j == i) continue;
            if (beta[j] == target) { clash = true; break; }
        }
        if (clash) continue;
        std::vector<int> nb = beta;
        nb[i] = target;
        std::sort(nb.rbegin(), nb.rend());
        for (int j = 0; j < r; ++j)
            if (nb[j] == target) { pos = j; break; }
        int height = pos - i;  // rows spanned by the strip, minus one
        std::vector<int> nl;
        for (int j = 0; j < r; ++j) {
            int part = nb[j] - (r - 1 - j);
            if (part > 0) nl.push_back(part);
        }
        long long sub = mn_recurse(nl, rest);
        total += (height % 2 ? -sub : sub);
    }
    return total;
}

long long mn_recurse(const std::vector<int>& lambda, const std::vector<int>& cycles) {
    CharKey key{lambda, cycles};
    {
        std::shared_lock lock(char_cache_mutex);
        auto it = char_cache.find(key);
        if (it != char_cache.end()) return it->second;
    }
    long long value = mn_compute(lambda, cycles);
    std::unique_lock lock(char_cache_mutex);
    char_cache.emplace(std::move(key), value);
    return value;
}

}  // namespace

long long character_value(const Partition& lambda, const CycleType& c) {
    if (lambda.n() != c.n())
        throw SizeMismatch("character_value: |lambda| = " + std::to_string(lambda.n()) +
                           " but |cycle type| = " + std::to_string(c.n()));
    return mn_recurse(lambda.parts(), c.parts());
}

BigInt conjugacy_class_size(const CycleType& c) {
    // n! / z_c with z_c = prod over lengths l: l^{m_l} m_l!.
    BigInt z = 1;
    int run = 0;
    for (int i = 0; i < c.length(); ++i) {
        z *= c.parts()[i];
        run = (i > 0 && c.parts()[i] == c.parts()[i - 1]) ? run + 1 : 1;
        z *= run;
    }
    return factorial(static_cast<unsigned>(c.n())) / z;
}

int class_sign(const CycleType& c) {
    return (c.n() - c.length()) % 2 ? -1 : 1;
}

double rectangle_growth(int k, int m) {
    if (k < 1 || m < 1) throw std::invalid_argument("rectangle_growth: k, m must be >= 1");
    Partition mu(std::vector<int>(static_cast<std::size_t>(k) * k, m));
    BigInt f = dimension(mu);
    signed long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, f.get_mpz_t());
    double log_f = std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
    return std::exp(log_f / (static_cast<double>(k) * k * m));
}

namespace {

void syt_rec(const Partition& shape, std::vector<std::vector<int>>& rows, int next,
             std::vector<YoungTableau>& out) {
    if (next > shape.n()) {
        out.emplace_back(rows);
        return;
    }
    for (int i = 0; i < shape.length(); ++i) {
        int filled = static_cast<int>(rows[i].size());
        if (filled >= shape.parts()[i]) continue;
        if (i > 0 && static_cast<int>(rows[i - 1].size()) <= filled) continue;
        rows[i].push_back(next);
        syt_rec(shape, rows, next + 1, out);
        rows[i].pop_back();
    }
}

}  // namespace

std::vector<YoungTableau> standard_tableaux(const Partition& shape) {
    std::vector<YoungTableau> out;
    std::vector<std::vector<int>> rows(shape.length());
    syt_rec(shape, rows, 1, out);
    return out;
}

}  // namespace growth
