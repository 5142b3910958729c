#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "growth/rational.hpp"

namespace growth {

/// Exact row-echelon engine over the integers, used for every rank and
/// kernel computation in the project.  Rows are integer vectors; each basis
/// row is kept primitive (content 1) with a positive pivot, so no fractions
/// ever appear.  Arithmetic runs on int64 with overflow checks and migrates
/// the whole basis to GMP integers the first time a combination would
/// overflow; results are identical either way.
class RowEchelon {
  public:
    explicit RowEchelon(int width);
    ~RowEchelon();
    RowEchelon(RowEchelon&&) noexcept;
    RowEchelon& operator=(RowEchelon&&) noexcept;
    RowEchelon(const RowEchelon&) = delete;
    RowEchelon& operator=(const RowEchelon&) = delete;

    int width() const;
    int rank() const;

    // Reduces the row against the basis and inserts the remainder if it is
    // nonzero.  Returns true when the rank grew.
    bool insert(const std::vector<std::int64_t>& row);
    bool insert_sparse(const std::vector<std::pair<int, std::int64_t>>& entries);

    // Membership test: does the row lie in the current row space?
    bool in_row_space(const std::vector<std::int64_t>& row) const;
    bool in_row_space_sparse(const std::vector<std::pair<int, std::int64_t>>& entries) const;

    // Back-substitutes to reduced row-echelon form.  Required before any of
    // the pivot/entry queries below; inserts are rejected afterwards.
    void finalize();

    bool finalized() const;
    // Sorted pivot and free column indices (valid after finalize()).
    const std::vector<int>& pivot_columns() const;
    const std::vector<int>& free_columns() const;
    // Entry of the unique basis row whose pivot sits in column `pivot_col`,
    // divided by the pivot value.  RREF guarantees this is the full story:
    // the kernel vector attached to free column f has coordinate -normalized
    // entry at each pivot column.
    Rational normalized_entry(int pivot_col, int col) const;

  private:
    struct Impl;
    Impl* impl_;
};

}  // namespace growth
