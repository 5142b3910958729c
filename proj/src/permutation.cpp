#include "growth/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "growth/errors.hpp"

namespace growth {

Permutation Permutation::identity(int n) {
    std::vector<std::uint8_t> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

Permutation::Permutation(std::vector<std::uint8_t> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (auto v : img_) {
        if (v >= img_.size() || seen[v])
            throw std::invalid_argument("permutation images must be a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::one_line(const std::vector<int>& images) {
    std::vector<std::uint8_t> img;
    img.reserve(images.size());
    for (int v : images) {
        if (v < 1 || v > static_cast<int>(images.size()))
            throw std::invalid_argument("one-line values must lie in 1..n");
        img.push_back(static_cast<std::uint8_t>(v - 1));
    }
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<std::uint8_t> inv(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) inv[img_[i]] = static_cast<std::uint8_t>(i);
    return Permutation(std::move(inv));
}

int Permutation::sign() const {
    int inversions = 0;
    for (std::size_t i = 0; i < img_.size(); ++i)
        for (std::size_t j = i + 1; j < img_.size(); ++j)
            if (img_[i] > img_[j]) ++inversions;
    return inversions % 2 ? -1 : 1;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

std::size_t Permutation::rank() const {
    std::size_t r = 0;
    int n = degree();
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (img_[j] < img_[i]) ++smaller;
        r = r * static_cast<std::size_t>(n - i) + static_cast<std::size_t>(smaller);
    }
    return r;
}

Permutation Permutation::unrank(int n, std::size_t r) {
    std::vector<std::size_t> code(n);
    for (int i = n - 1; i >= 0; --i) {
        code[i] = r % static_cast<std::size_t>(n - i);
        r /= static_cast<std::size_t>(n - i);
    }
    std::vector<std::uint8_t> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<std::uint8_t> img;
    img.reserve(n);
    for (int i = 0; i < n; ++i) {
        img.push_back(pool[code[i]]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(code[i]));
    }
    return Permutation(std::move(img));
}

std::string Permutation::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(img_[i] + 1);
    }
    return s + "]";
}

Permutation compose(const Permutation& sigma, const Permutation& tau) {
    if (sigma.degree() != tau.degree())
        throw DegreeMismatch("compose: degrees " + std::to_string(sigma.degree()) + " vs " +
                             std::to_string(tau.degree()));
    std::vector<std::uint8_t> img(sigma.degree());
    for (int i = 0; i < sigma.degree(); ++i)
        img[i] = static_cast<std::uint8_t>(sigma.apply(tau.apply(i)));
    return Permutation(std::move(img));
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<std::uint8_t> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

Permutation class_representative(const std::vector<int>& cycle_lengths) {
    int n = 0;
    for (int l : cycle_lengths) n += l;
    std::vector<std::uint8_t> img(n);
    int start = 0;
    for (int l : cycle_lengths) {
        for (int i = 0; i < l; ++i) img[start + i] = static_cast<std::uint8_t>(start + (i + 1) % l);
        start += l;
    }
    return Permutation(std::move(img));
}

}  // namespace growth
