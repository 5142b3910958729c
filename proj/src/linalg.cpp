#include "growth/linalg.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace growth {

namespace {

struct OverflowSignal {};

constexpr std::int64_t kRenormThreshold = std::int64_t(1) << 44;

inline std::int64_t checked(__int128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < -std::numeric_limits<std::int64_t>::max())
        throw OverflowSignal{};
    return static_cast<std::int64_t>(v);
}

template <typename T>
struct Ops;

template <>
struct Ops<std::int64_t> {
    static std::int64_t abs_gcd(std::int64_t a, std::int64_t b) {
        return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
    }
    static void combine(std::int64_t& r, std::int64_t a, std::int64_t b, std::int64_t c) {
        r = checked(static_cast<__int128>(r) * a - static_cast<__int128>(b) * c);
    }
    static bool large(std::int64_t v) { return v > kRenormThreshold || v < -kRenormThreshold; }
    static Rational to_rational(std::int64_t num, std::int64_t den) {
        Rational q(static_cast<long>(num), static_cast<long>(den));
        q.canonicalize();
        return q;
    }
};

template <>
struct Ops<BigInt> {
    static BigInt abs_gcd(const BigInt& a, const BigInt& b) {
        BigInt g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return g;
    }
    static void combine(BigInt& r, const BigInt& a, const BigInt& b, const BigInt& c) {
        r = r * a - b * c;
    }
    static bool large(const BigInt&) { return false; }
    static Rational to_rational(const BigInt& num, const BigInt& den) {
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
};

template <typename T>
class Basis {
  public:
    explicit Basis(int width) : width_(width), row_of_col_(width, -1) {}

    int width() const { return width_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    // Divide by the content and make the leading (pivot) entry positive.
    void normalize(std::vector<T>& row) const {
        T g = 0;
        for (const T& v : row)
            if (v != 0) g = (g == 0) ? Ops<T>::abs_gcd(v, v) : Ops<T>::abs_gcd(g, v);
        if (g == 0) return;
        const T* lead = nullptr;
        for (const T& v : row)
            if (v != 0) { lead = &v; break; }
        bool flip = (*lead < 0);
        for (T& v : row) {
            if (v != 0) v /= g;
            if (flip) v = -v;
        }
    }

    // One left-to-right pass; in echelon form basis rows vanish before their
    // pivot, so eliminating column c never disturbs columns < c.  Returns the
    // leading column of the reduced row, or -1 when it reduced to zero.
    int reduce(std::vector<T>& row) const {
        int lead = -1;
        for (int c = 0; c < width_; ++c) {
            if (row[c] == 0) continue;
            int ri = row_of_col_[c];
            if (ri < 0) { lead = c; break; }
            eliminate(row, rows_[ri], c);
        }
        return lead;
    }

    bool insert(std::vector<T> row) {
        int lead = reduce(row);
        if (lead < 0) return false;
        normalize(row);
        row_of_col_[lead] = static_cast<int>(rows_.size());
        pivot_col_.push_back(lead);
        rows_.push_back(std::move(row));
        return true;
    }

    bool in_row_space(std::vector<T> row) const { return reduce(row) < 0; }

    void finalize() {
        // Back-substitute from the rightmost pivot; rows already processed
        // are final when used to clear earlier rows.
        std::vector<int> order(rows_.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return pivot_col_[a] > pivot_col_[b]; });
        for (int ri : order) {
            auto& row = rows_[ri];
            for (int c = pivot_col_[ri] + 1; c < width_; ++c) {
                if (row[c] == 0) continue;
                int other = row_of_col_[c];
                if (other >= 0 && other != ri) eliminate(row, rows_[other], c);
            }
            normalize(row);
        }
    }

    const std::vector<int>& pivot_cols_raw() const { return pivot_col_; }

    Rational normalized_entry(int pivot_col, int col) const {
        int ri = row_of_col_[pivot_col];
        if (ri < 0) throw std::invalid_argument("normalized_entry: not a pivot column");
        return Ops<T>::to_rational(rows_[ri][col], rows_[ri][pivot_col]);
    }

    const std::vector<std::vector<T>>& rows() const { return rows_; }

  private:
    // row = (p/g) row - (v/g) basis_row, killing column c.  The whole row is
    // scaled, not just the tail: during back-substitution the row can carry
    // entries left of c (at and after its own pivot).
    void eliminate(std::vector<T>& row, const std::vector<T>& basis_row, int c) const {
        T p = basis_row[c];
        T v = row[c];
        T g = Ops<T>::abs_gcd(p, v);
        T a = p / g;
        T b = v / g;
        bool big = false;
        for (int j = 0; j < width_; ++j) {
            if (row[j] == 0 && basis_row[j] == 0) continue;
            Ops<T>::combine(row[j], a, basis_row[j], b);
            if (Ops<T>::large(row[j])) big = true;
        }
        if (big) normalize(row);
    }

    int width_;
    std::vector<std::vector<T>> rows_;
    std::vector<int> pivot_col_;
    std::vector<int> row_of_col_;
};

std::vector<BigInt> widen(const std::vector<std::int64_t>& row) {
    std::vector<BigInt> out;
    out.reserve(row.size());
    for (auto v : row) out.emplace_back(static_cast<long>(v));
    return out;
}

}  // namespace

struct RowEchelon::Impl {
    explicit Impl(int width) : fast(Basis<std::int64_t>(width)) {}

    std::optional<Basis<std::int64_t>> fast;
    std::optional<Basis<BigInt>> big;
    bool is_finalized = false;
    std::vector<int> pivots;
    std::vector<int> frees;

    void migrate() {
        Basis<BigInt> b(fast->width());
        for (const auto& row : fast->rows()) b.insert(widen(row));
        big.emplace(std::move(b));
        fast.reset();
    }

    template <typename F, typename G>
    auto run(F&& on_fast, G&& on_big) {
        if (fast) {
            try {
                return on_fast(*fast);
            } catch (const OverflowSignal&) {
                migrate();
            }
        }
        return on_big(*big);
    }
};

RowEchelon::RowEchelon(int width) : impl_(new Impl(width)) {}
RowEchelon::~RowEchelon() { delete impl_; }
RowEchelon::RowEchelon(RowEchelon&& o) noexcept : impl_(o.impl_) { o.impl_ = nullptr; }
RowEchelon& RowEchelon::operator=(RowEchelon&& o) noexcept {
    std::swap(impl_, o.impl_);
    return *this;
}

int RowEchelon::width() const {
    return impl_->fast ? impl_->fast->width() : impl_->big->width();
}

int RowEchelon::rank() const {
    return impl_->fast ? impl_->fast->rank() : impl_->big->rank();
}

bool RowEchelon::insert(const std::vector<std::int64_t>& row) {
    if (impl_->is_finalized) throw std::logic_error("RowEchelon: insert after finalize");
    if (static_cast<int>(row.size()) != width())
        throw std::invalid_argument("RowEchelon: row width mismatch");
    return impl_->run([&](auto& b) { return b.insert(row); },
                      [&](auto& b) { return b.insert(widen(row)); });
}

bool RowEchelon::insert_sparse(const std::vector<std::pair<int, std::int64_t>>& entries) {
    std::vector<std::int64_t> row(width(), 0);
    for (auto [c, v] : entries) row[c] += v;
    return insert(row);
}

bool RowEchelon::in_row_space(const std::vector<std::int64_t>& row) const {
    return impl_->run([&](auto& b) { return b.in_row_space(row); },
                      [&](auto& b) { return b.in_row_space(widen(row)); });
}

bool RowEchelon::in_row_space_sparse(const std::vector<std::pair<int, std::int64_t>>& entries) const {
    std::vector<std::int64_t> row(width(), 0);
    for (auto [c, v] : entries) row[c] += v;
    return in_row_space(row);
}

void RowEchelon::finalize() {
    if (impl_->is_finalized) return;
    impl_->run([&](auto& b) { b.finalize(); return 0; },
               [&](auto& b) { b.finalize(); return 0; });
    impl_->pivots = impl_->fast ? impl_->fast->pivot_cols_raw() : impl_->big->pivot_cols_raw();
    std::sort(impl_->pivots.begin(), impl_->pivots.end());
    std::vector<bool> is_pivot(width(), false);
    for (int c : impl_->pivots) is_pivot[c] = true;
    for (int c = 0; c < width(); ++c)
        if (!is_pivot[c]) impl_->frees.push_back(c);
    impl_->is_finalized = true;
}

bool RowEchelon::finalized() const { return impl_->is_finalized; }

const std::vector<int>& RowEchelon::pivot_columns() const {
    if (!impl_->is_finalized) throw std::logic_error("RowEchelon: finalize first");
    return impl_->pivots;
}

const std::vector<int>& RowEchelon::free_columns() const {
    if (!impl_->is_finalized) throw std::logic_error("RowEchelon: finalize first");
    return impl_->frees;
}

Rational RowEchelon::normalized_entry(int pivot_col, int col) const {
    if (!impl_->is_finalized) throw std::logic_error("RowEchelon: finalize first");
    return impl_->fast ? impl_->fast->normalized_entry(pivot_col, col)
                       : impl_->big->normalized_entry(pivot_col, col);
}

}  // namespace growth
