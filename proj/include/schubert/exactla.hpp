#pragma once

// Exact linear algebra over prime fields GF(p) and over the rationals.
// Vectors are rows of a generator matrix; a subspace is stored through the
// reduced row echelon form of its generators, which is unique per subspace.

#include <boost/rational.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "schubert/partitions.hpp"

namespace schubert {

/// Thrown when an enumeration would visit more objects than allowed.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

/// Dense row-major matrix; the scalar domain is supplied by a field policy.
template <class T>
class Matrix {
public:
    using value_type = T;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, T fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw InvalidArgument("ragged matrix literal");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] const std::vector<T>& data() const { return data_; }

    /// Rows [first, first+count).
    [[nodiscard]] Matrix row_block(std::size_t first, std::size_t count) const {
        Matrix out(count, cols_);
        std::copy(data_.begin() + first * cols_, data_.begin() + (first + count) * cols_,
                  out.data_.begin());
        return out;
    }

    [[nodiscard]] Matrix transposed() const {
        Matrix out(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
        return out;
    }

    /// This matrix on top of `below`; column counts must agree.
    [[nodiscard]] Matrix stacked(const Matrix& below) const {
        if (below.cols_ != cols_ && below.rows_ != 0 && rows_ != 0) {
            throw InvalidArgument("cannot stack matrices with different column counts");
        }
        Matrix out = rows_ ? *this : Matrix(0, below.cols_);
        out.rows_ += below.rows_;
        out.data_.insert(out.data_.end(), below.data_.begin(), below.data_.end());
        return out;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// GF(p) for a prime p < 256; elements are their least residues.
class PrimeField {
public:
    using value_type = std::uint8_t;

    explicit PrimeField(unsigned p);

    [[nodiscard]] unsigned order() const { return p_; }

    [[nodiscard]] value_type zero() const { return 0; }
    [[nodiscard]] value_type one() const { return 1; }
    [[nodiscard]] bool is_zero(value_type a) const { return a == 0; }
    [[nodiscard]] value_type from_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        return static_cast<value_type>(r < 0 ? r + p_ : r);
    }
    [[nodiscard]] value_type add(value_type a, value_type b) const {
        unsigned s = unsigned{a} + b;
        return static_cast<value_type>(s >= p_ ? s - p_ : s);
    }
    [[nodiscard]] value_type sub(value_type a, value_type b) const {
        return static_cast<value_type>(a >= b ? a - b : a + p_ - b);
    }
    [[nodiscard]] value_type mul(value_type a, value_type b) const {
        return static_cast<value_type>((unsigned{a} * b) % p_);
    }
    [[nodiscard]] value_type inv(value_type a) const;

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    unsigned p_;
};

/// The rationals, with 64-bit numerators and denominators.
struct RationalField {
    using value_type = boost::rational<std::int64_t>;

    [[nodiscard]] value_type zero() const { return 0; }
    [[nodiscard]] value_type one() const { return 1; }
    [[nodiscard]] bool is_zero(const value_type& a) const { return a.numerator() == 0; }
    [[nodiscard]] value_type from_int(long long v) const { return value_type(v); }
    [[nodiscard]] value_type add(const value_type& a, const value_type& b) const { return a + b; }
    [[nodiscard]] value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    [[nodiscard]] value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    [[nodiscard]] value_type inv(const value_type& a) const {
        if (a.numerator() == 0) throw std::domain_error("inverse of zero");
        return value_type(a.denominator(), a.numerator());
    }
};

using FpMatrix = Matrix<PrimeField::value_type>;
using QMatrix = Matrix<RationalField::value_type>;

/// In-place reduction to reduced row echelon form; returns the pivot columns.
/// Zero rows are moved to the bottom but kept.
template <class Field>
std::vector<std::size_t> reduce_to_rref(const Field& f, Matrix<typename Field::value_type>& m) {
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
        std::size_t pivot = lead;
        while (pivot < m.rows() && f.is_zero(m(pivot, col))) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != lead) {
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(lead, c));
        }
        const auto scale = f.inv(m(lead, col));
        for (std::size_t c = col; c < m.cols(); ++c) m(lead, c) = f.mul(m(lead, c), scale);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead || f.is_zero(m(r, col))) continue;
            const auto factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) {
                m(r, c) = f.sub(m(r, c), f.mul(factor, m(lead, c)));
            }
        }
        pivots.push_back(col);
        ++lead;
    }
    return pivots;
}

/// Exact rank by Gaussian elimination.
template <class Field>
std::size_t rank(const Field& f, Matrix<typename Field::value_type> m) {
    return reduce_to_rref(f, m).size();
}

/// Columns [first, cols) of `m`.
template <class T>
Matrix<T> column_tail(const Matrix<T>& m, std::size_t first) {
    Matrix<T> out(m.rows(), m.cols() - first);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = first; c < m.cols(); ++c) out(r, c - first) = m(r, c);
    return out;
}

/// Product a * b.
template <class Field>
Matrix<typename Field::value_type> multiply(const Field& f,
                                            const Matrix<typename Field::value_type>& a,
                                            const Matrix<typename Field::value_type>& b) {
    if (a.cols() != b.rows()) throw InvalidArgument("matrix product shape mismatch");
    Matrix<typename Field::value_type> out(a.rows(), b.cols(), f.zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (f.is_zero(a(i, k))) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) = f.add(out(i, j), f.mul(a(i, k), b(k, j)));
        }
    return out;
}

/// Inverse of a square matrix; throws InvalidArgument when singular.
template <class Field>
Matrix<typename Field::value_type> inverse(const Field& f,
                                           const Matrix<typename Field::value_type>& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw InvalidArgument("inverse of a non-square matrix");
    if (n == 0) return m;
    Matrix<typename Field::value_type> aug(n, 2 * n, f.zero());
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = f.one();
    }
    auto pivots = reduce_to_rref(f, aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw InvalidArgument("singular matrix");
    return column_tail(aug, n);
}

/// Fixed bracketed text form, one row per line: "[1 0 2]".
std::string format_matrix(const FpMatrix& m);
std::string format_matrix(const QMatrix& m);

/// A subspace of GF(q)^m, held as the RREF of its generators (no zero rows).
class Subspace {
public:
    /// Span of the rows of `generators` (which may be dependent).
    static Subspace span(const PrimeField& f, FpMatrix generators);
    /// The zero subspace of GF(q)^m.
    static Subspace zero(const PrimeField& f, std::size_t ambient);
    /// Wraps a matrix already in RREF without zero rows; not re-checked.
    static Subspace from_canonical(const PrimeField& f, FpMatrix rref);

    [[nodiscard]] const PrimeField& field() const { return field_; }
    [[nodiscard]] std::size_t ambient() const { return basis_.cols(); }
    [[nodiscard]] std::size_t dim() const { return basis_.rows(); }
    [[nodiscard]] const FpMatrix& basis() const { return basis_; }

    /// Byte string identifying the subspace among those of the same ambient space.
    [[nodiscard]] std::string key() const;

    [[nodiscard]] bool contains_vector(const std::vector<PrimeField::value_type>& v) const;
    [[nodiscard]] bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.field_.order() == b.field_.order() && a.basis_ == b.basis_;
    }

private:
    Subspace(PrimeField f, FpMatrix basis) : field_(std::move(f)), basis_(std::move(basis)) {}

    PrimeField field_;
    FpMatrix basis_;
};

std::ostream& operator<<(std::ostream& os, const Subspace& p);

/// dim(a + b).
[[nodiscard]] std::size_t sum_dimension(const Subspace& a, const Subspace& b);
/// dim(a ∩ b) by the dimension formula.
[[nodiscard]] std::size_t intersection_dimension(const Subspace& a, const Subspace& b);

/// A complete flag given by an ordered basis v_1..v_m (rows); its k-th member
/// is span(v_1..v_k).
class FlagSpec {
public:
    /// Throws InvalidArgument when the rows are not a basis.
    FlagSpec(PrimeField f, FpMatrix basis);

    [[nodiscard]] const PrimeField& field() const { return field_; }
    [[nodiscard]] std::size_t ambient() const { return basis_.rows(); }
    [[nodiscard]] const FpMatrix& basis() const { return basis_; }
    /// First k basis vectors as rows.
    [[nodiscard]] FpMatrix prefix(std::size_t k) const { return basis_.row_block(0, k); }
    [[nodiscard]] Subspace member(std::size_t k) const;
    /// Rows expressed in flag coordinates: x -> x * basis^{-1}.
    [[nodiscard]] FpMatrix to_flag_coordinates(const FpMatrix& rows) const;

private:
    PrimeField field_;
    FpMatrix basis_;
    FpMatrix inverse_;
};

/// The standard flag L.: span(e_1..e_k).
[[nodiscard]] FlagSpec flag_L(const PrimeField& f, std::size_t m);
/// A pseudo-random complete flag, reproducible from the seed.
[[nodiscard]] FlagSpec random_flag(const PrimeField& f, std::size_t m, std::uint64_t seed);
/// Flag D. on E+S: D_i = F_i + 0 for i <= N, then E + T_{i-N}.
[[nodiscard]] FlagSpec flag_D(const FlagSpec& F, const FlagSpec& T);
/// Flag B. on E+S: B_i = 0 + T_i for i <= s, then F_{i-s} + S.
[[nodiscard]] FlagSpec flag_B(const FlagSpec& F, const FlagSpec& T);

/// h: P -> P + 0 inside E + S, dim S = s.
[[nodiscard]] Subspace embed_h(const Subspace& p, std::size_t s);
/// v: P -> P + S inside E + S, dim S = s.
[[nodiscard]] Subspace embed_v(const Subspace& p, std::size_t s);

/// P in Omega_lambda(flag): dim(P + F_{c+i-lambda_i}) <= N - lambda_i for
/// i = 1..d, each checked as the rank of stacked generators.
[[nodiscard]] bool schubert_membership(const Subspace& p, const Partition& lambda,
                                       const FlagSpec& flag);

/// Same predicate through dim(P ∩ F_{c+i-lambda_i}) >= i, with the
/// intersection dimension read off P in flag coordinates.
[[nodiscard]] bool schubert_membership_by_intersection(const Subspace& p,
                                                       const Partition& lambda,
                                                       const FlagSpec& flag);

/// Gaussian binomial [m choose d]_q by the q-Pascal recurrence, saturating
/// at UINT64_MAX.
[[nodiscard]] std::uint64_t gaussian_binomial(std::size_t m, std::size_t d, std::uint64_t q);

/// All d-dimensional subspaces of GF(q)^m in canonical form, indexed
/// 0..size()-1. Block k holds the subspaces whose RREF has the k-th pivot
/// set, so blocks can be visited independently.
class GrassmannianEnumerator {
public:
    /// Throws BudgetExceeded if the count exceeds `budget`.
    GrassmannianEnumerator(PrimeField f, std::size_t d, std::size_t m,
                           std::uint64_t budget = kDefaultBudget);

    [[nodiscard]] const PrimeField& field() const { return field_; }
    [[nodiscard]] std::size_t dim() const { return d_; }
    [[nodiscard]] std::size_t ambient() const { return m_; }
    [[nodiscard]] std::uint64_t size() const { return total_; }
    [[nodiscard]] std::size_t block_count() const { return blocks_.size(); }
    /// Index range [first, last) of block k.
    [[nodiscard]] std::pair<std::uint64_t, std::uint64_t> block_range(std::size_t k) const;
    [[nodiscard]] const std::vector<std::size_t>& pivots(std::size_t k) const {
        return blocks_[k].pivots;
    }

    /// The index-th subspace.
    [[nodiscard]] Subspace at(std::uint64_t index) const;

    /// Visits every subspace in index order.
    void for_each(const std::function<void(const Subspace&)>& visit) const;

private:
    struct Block {
        std::vector<std::size_t> pivots;
        std::vector<std::pair<std::size_t, std::size_t>> free_cells;
        std::uint64_t offset = 0;
        std::uint64_t count = 0;
    };

    PrimeField field_;
    std::size_t d_;
    std::size_t m_;
    std::vector<Block> blocks_;
    std::uint64_t total_ = 0;
};

}  // namespace schubert
