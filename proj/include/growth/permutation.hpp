#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace growth {

/// Permutation of {1..n} in one-line notation.  Internally images are stored
/// 0-based: img()[i] = sigma(i+1) - 1.  Text I/O is 1-based.
///
/// Composition convention, fixed project-wide: (sigma * tau)(i) = sigma(tau(i)).
class Permutation {
  public:
    Permutation() = default;
    static Permutation identity(int n);
    // 0-based images; must be a bijection on {0..n-1}.
    explicit Permutation(std::vector<std::uint8_t> images);
    // Convenience: 1-based one-line notation, e.g. {2,1,3}.
    static Permutation one_line(const std::vector<int>& images);

    int degree() const { return static_cast<int>(img_.size()); }
    int apply(int i) const { return img_[i]; }  // 0-based
    const std::vector<std::uint8_t>& img() const { return img_; }

    Permutation inverse() const;
    int sign() const;  // parity of the inversion count

    bool is_identity() const;

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

    // Lexicographic rank of the one-line word among all degree-n
    // permutations (Lehmer code); the identity has rank 0.
    std::size_t rank() const;
    static Permutation unrank(int n, std::size_t r);

    std::string to_string() const;  // "[2,1,3]", 1-based

  private:
    std::vector<std::uint8_t> img_;
};

// Throws DegreeMismatch when degrees differ.
Permutation compose(const Permutation& sigma, const Permutation& tau);

// All permutations of degree n in rank (lexicographic) order.
std::vector<Permutation> all_permutations(int n);

// Permutation with the cycle structure of the given cycle lengths, filled
// with 1..n left to right: e.g. {3,2} -> (1 2 3)(4 5).
Permutation class_representative(const std::vector<int>& cycle_lengths);

}  // namespace growth
