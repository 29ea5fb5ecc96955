#pragma once

// The chart U^lambda of G_d(k^m), m = d + c: a c x d matrix A is sent to
// the column span of M_A, the m x d matrix obtained by walking lambda^rot
// from top left to bottom right, copying a row of A on each step down and
// inserting a row of the identity I_d on each step right.

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "schubert/exactla.hpp"
#include "schubert/partitions.hpp"

namespace schubert {

/// Positions (1-based, in 1..m) of the identity rows of M_A.
struct InsertionWalk {
    Box box;
    std::vector<int> identity_rows;

    /// 'D' (copy a row of A) and 'R' (insert an identity row), in walk order.
    [[nodiscard]] std::string steps() const;
};

/// identity_rows[i] = c - lambda_i + i.
[[nodiscard]] InsertionWalk insertion_walk(const Partition& lambda);

/// M_A for a c x d matrix A; entries of A keep their order.
template <class T>
Matrix<T> build_MA(const Matrix<T>& a, const Partition& lambda) {
    const Box box = lambda.box();
    if (a.rows() != static_cast<std::size_t>(box.c) || a.cols() != static_cast<std::size_t>(box.d)) {
        throw InvalidArgument("chart matrix must be " + std::to_string(box.c) + "x" +
                              std::to_string(box.d) + ", got " + std::to_string(a.rows()) + "x" +
                              std::to_string(a.cols()));
    }
    const auto walk = insertion_walk(lambda);
    Matrix<T> out(static_cast<std::size_t>(box.ambient()), a.cols(), T(0));
    std::size_t next_a = 0;
    std::size_t next_id = 0;
    for (std::size_t row = 0; row < out.rows(); ++row) {
        if (next_id < walk.identity_rows.size() &&
            static_cast<int>(row) + 1 == walk.identity_rows[next_id]) {
            out(row, next_id++) = T(1);
        } else {
            for (std::size_t col = 0; col < a.cols(); ++col) out(row, col) = a(next_a, col);
            ++next_a;
        }
    }
    return out;
}

/// A set of forced-zero positions (row, col), 1-based, in a rows x cols chart matrix.
class ZeroPattern {
public:
    ZeroPattern(int rows, int cols) : rows_(rows), cols_(cols) {}

    [[nodiscard]] int rows() const { return rows_; }
    [[nodiscard]] int cols() const { return cols_; }
    [[nodiscard]] const std::set<std::pair<int, int>>& entries() const { return entries_; }
    [[nodiscard]] std::size_t size() const { return entries_.size(); }
    [[nodiscard]] bool contains(int row, int col) const { return entries_.count({row, col}) > 0; }
    /// Cells not forced to zero.
    [[nodiscard]] std::size_t free_count() const {
        return static_cast<std::size_t>(rows_) * cols_ - entries_.size();
    }

    void insert(int row, int col);

    [[nodiscard]] ZeroPattern united(const ZeroPattern& other) const;
    [[nodiscard]] ZeroPattern intersected(const ZeroPattern& other) const;

    /// rows lines of cols characters: '.' free, '0' forced zero.
    [[nodiscard]] std::string to_grid() const;
    static ZeroPattern parse_grid(std::string_view text);

    friend bool operator==(const ZeroPattern&, const ZeroPattern&) = default;

private:
    int rows_;
    int cols_;
    std::set<std::pair<int, int>> entries_;
};

/// Local equations of Omega_lambda in U^lambda: column j vanishes on its
/// last lambda_j rows. Size |lambda|.
[[nodiscard]] ZeroPattern zero_pattern(const Partition& lambda);

/// The block the i-th Schubert condition annuls: first i columns, last lambda_i rows.
[[nodiscard]] ZeroPattern condition_block(const Partition& lambda, int i);

/// True when `a` is zero on every position of the pattern.
[[nodiscard]] bool vanishes_on(const FpMatrix& a, const ZeroPattern& pattern);

/// Span of the columns of M_A, read in the ordered basis of `basis`.
[[nodiscard]] Subspace chart_point(const FpMatrix& a, const Partition& lambda,
                                   const FlagSpec& basis);

/// Symbolic M_A: "a<r><j>" for entries of A, "1"/"0" for identity rows.
[[nodiscard]] std::vector<std::vector<std::string>> symbolic_MA(const Partition& lambda);

/// The i-th chart matrix A in index order: entries read as base-q digits,
/// row-major, first entry least significant.
[[nodiscard]] FpMatrix chart_matrix_at(const PrimeField& f, std::size_t rows, std::size_t cols,
                                       std::uint64_t index);

}  // namespace schubert
