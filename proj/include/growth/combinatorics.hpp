#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "growth/rational.hpp"

namespace growth {

/// Partition of n with weakly decreasing positive parts; no trailing zeros
/// are stored, so equal partitions compare equal as vectors.  The empty
/// partition is the unique partition of 0.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return i < length() ? parts_[i] : 0; }

    // Height of column j (1-based), i.e. the j-th part of the conjugate.
    int column_height(int j) const;

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

    // Comma-joined parts, e.g. "3,1,1"; empty string for the partition of 0.
    std::string to_string() const;

  private:
    std::vector<int> parts_;
    int n_ = 0;
};

// A cycle type is a partition of n recording the cycle lengths of a
// conjugacy class of S_n.
using CycleType = Partition;

/// Young tableau: a shape plus a filling of its cells by 1..n (any bijection;
/// standardness is a predicate, not an invariant).  Entries are addressed by
/// 0-based (row, col).
class YoungTableau {
  public:
    YoungTableau() = default;
    // rows[i] lists the entries of row i left to right; lengths must match a
    // valid shape and the entries must be a bijection onto {1..n}.
    explicit YoungTableau(std::vector<std::vector<int>> rows);

    static YoungTableau row_filled(const Partition& shape);  // 1..n along rows

    const Partition& shape() const { return shape_; }
    int n() const { return shape_.n(); }
    int entry(int row, int col) const { return rows_[row][col]; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    // Entries of column j (0-based), top to bottom.
    std::vector<int> column(int j) const;

    // Row index (0-based) containing entry v.
    int row_of(int v) const;

    bool is_standard() const;

    bool operator==(const YoungTableau&) const = default;

    std::string to_string() const;

  private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
};

// All partitions of n, in the enumeration order used for reports: first part
// descending, then recursively the rest (so (n) is first and (1^n) is last).
std::vector<Partition> partitions_of(int n);

Partition conjugate(const Partition& p);

// f^lambda by the hook-length formula, exact.
BigInt dimension(const Partition& p);

// Partitions of n-1 obtained by removing one removable corner cell.
std::vector<Partition> branch_down(const Partition& p);

// Partwise sum lambda*mu.  Requires the last column of lambda to be at least
// as tall as mu; throws GluePreconditionViolated otherwise.
Partition glue_shapes(const Partition& lambda, const Partition& mu);

// Entries of t_mu are shifted by |lambda| and appended to the right of the
// corresponding rows of t_lambda.
YoungTableau glue_tableaux(const YoungTableau& t_lambda, const YoungTableau& t_mu);

// chi^lambda evaluated on the class of cycle type c (Murnaghan-Nakayama).
// Values are cached process-wide; safe to call concurrently.
// Throws SizeMismatch when |lambda| != |c|.
long long character_value(const Partition& lambda, const CycleType& c);

// Number of permutations of cycle type c.
BigInt conjugacy_class_size(const CycleType& c);

// Sign of the class: (-1)^(n - number of cycles).
int class_sign(const CycleType& c);

// (f^mu)^(1/(k^2 m)) for the rectangle mu = (m^(k^2)), computed from the
// exact integer f^mu through logarithms.  Relative accuracy is ~1e-14, far
// inside the documented 1e-9; this is the module's only floating-point
// surface.
double rectangle_growth(int k, int m);

// Test-facing enumerator: all standard tableaux of the given shape, in
// lexicographic order of their row-reading words.
std::vector<YoungTableau> standard_tableaux(const Partition& shape);

std::string to_string(const Partition& p);

}  // namespace growth
