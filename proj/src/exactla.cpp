#include "schubert/exactla.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace schubert {

namespace {

bool is_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned k = 2; k * k <= p; ++k)
        if (p % k == 0) return false;
    return true;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    return a > std::numeric_limits<std::uint64_t>::max() - b
               ? std::numeric_limits<std::uint64_t>::max()
               : a + b;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    return a > std::numeric_limits<std::uint64_t>::max() / b
               ? std::numeric_limits<std::uint64_t>::max()
               : a * b;
}

template <class M, class Show>
std::string format_rows(const M& m, Show show) {
    std::ostringstream os;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << '[';
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) os << ' ';
            show(os, m(r, c));
        }
        os << "]\n";
    }
    return os.str();
}

void require_same_field(const PrimeField& a, const PrimeField& b) {
    if (a.order() != b.order()) throw InvalidArgument("subspaces over different fields");
}

}  // namespace

PrimeField::PrimeField(unsigned p) : p_(p) {
    if (p >= 256 || !is_prime(p)) {
        throw InvalidArgument("field order must be a prime below 256, got " + std::to_string(p));
    }
}

PrimeField::value_type PrimeField::inv(value_type a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    // Extended Euclid on (a, p).
    int r0 = static_cast<int>(p_), r1 = a;
    int t0 = 0, t1 = 1;
    while (r1 != 0) {
        const int k = r0 / r1;
        r0 = std::exchange(r1, r0 - k * r1);
        t0 = std::exchange(t1, t0 - k * t1);
    }
    return from_int(t0);
}

std::string format_matrix(const FpMatrix& m) {
    return format_rows(m, [](std::ostream& os, std::uint8_t v) { os << unsigned{v}; });
}

std::string format_matrix(const QMatrix& m) {
    return format_rows(m, [](std::ostream& os, const RationalField::value_type& v) {
        os << v.numerator();
        if (v.denominator() != 1) os << '/' << v.denominator();
    });
}

Subspace Subspace::span(const PrimeField& f, FpMatrix generators) {
    auto pivots = reduce_to_rref(f, generators);
    return Subspace(f, generators.row_block(0, pivots.size()));
}

Subspace Subspace::zero(const PrimeField& f, std::size_t ambient) {
    return Subspace(f, FpMatrix(0, ambient));
}

Subspace Subspace::from_canonical(const PrimeField& f, FpMatrix rref) {
    return Subspace(f, std::move(rref));
}

std::string Subspace::key() const {
    std::string out;
    out.reserve(basis_.data().size() + 1);
    out.push_back(static_cast<char>(basis_.rows()));
    for (auto v : basis_.data()) out.push_back(static_cast<char>(v));
    return out;
}

bool Subspace::contains_vector(const std::vector<PrimeField::value_type>& v) const {
    if (v.size() != ambient()) throw InvalidArgument("vector length does not match ambient space");
    FpMatrix row(1, v.size());
    for (std::size_t c = 0; c < v.size(); ++c) row(0, c) = v[c];
    return rank(field_, basis_.stacked(row)) == dim();
}

bool Subspace::contains(const Subspace& other) const {
    require_same_field(field_, other.field_);
    return sum_dimension(*this, other) == dim();
}

std::ostream& operator<<(std::ostream& os, const Subspace& p) {
    os << "span over GF(" << p.field().order() << ")^" << p.ambient() << " of\n";
    return os << format_matrix(p.basis());
}

std::size_t sum_dimension(const Subspace& a, const Subspace& b) {
    require_same_field(a.field(), b.field());
    if (a.ambient() != b.ambient()) throw InvalidArgument("subspaces of different ambient spaces");
    return rank(a.field(), a.basis().stacked(b.basis()));
}

std::size_t intersection_dimension(const Subspace& a, const Subspace& b) {
    return a.dim() + b.dim() - sum_dimension(a, b);
}

FlagSpec::FlagSpec(PrimeField f, FpMatrix basis) : field_(std::move(f)), basis_(std::move(basis)) {
    if (basis_.rows() != basis_.cols()) throw InvalidArgument("flag basis must be square");
    if (rank(field_, basis_) != basis_.rows()) {
        throw InvalidArgument("flag basis is rank deficient");
    }
    inverse_ = inverse(field_, basis_);
}

Subspace FlagSpec::member(std::size_t k) const { return Subspace::span(field_, prefix(k)); }

FpMatrix FlagSpec::to_flag_coordinates(const FpMatrix& rows) const {
    return multiply(field_, rows, inverse_);
}

FlagSpec flag_L(const PrimeField& f, std::size_t m) {
    FpMatrix id(m, m, 0);
    for (std::size_t i = 0; i < m; ++i) id(i, i) = 1;
    return FlagSpec(f, std::move(id));
}

FlagSpec random_flag(const PrimeField& f, std::size_t m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<unsigned> entry(0, f.order() - 1);
    while (true) {
        FpMatrix b(m, m);
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < m; ++c) b(r, c) = static_cast<std::uint8_t>(entry(rng));
        if (rank(f, b) == m) return FlagSpec(f, std::move(b));
    }
}

namespace {

// Basis of E+S listing `first` then `second`; each block sits in its own
// coordinates (E first, S last).
FpMatrix direct_sum_basis(const FlagSpec& F, const FlagSpec& T, bool e_first) {
    const std::size_t n = F.ambient();
    const std::size_t s = T.ambient();
    FpMatrix out(n + s, n + s, 0);
    const std::size_t e_row = e_first ? 0 : s;
    const std::size_t s_row = e_first ? n : 0;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out(e_row + r, c) = F.basis()(r, c);
    for (std::size_t r = 0; r < s; ++r)
        for (std::size_t c = 0; c < s; ++c) out(s_row + r, n + c) = T.basis()(r, c);
    return out;
}

}  // namespace

FlagSpec flag_D(const FlagSpec& F, const FlagSpec& T) {
    require_same_field(F.field(), T.field());
    return FlagSpec(F.field(), direct_sum_basis(F, T, true));
}

FlagSpec flag_B(const FlagSpec& F, const FlagSpec& T) {
    require_same_field(F.field(), T.field());
    return FlagSpec(F.field(), direct_sum_basis(F, T, false));
}

Subspace embed_h(const Subspace& p, std::size_t s) {
    FpMatrix padded(p.dim(), p.ambient() + s, 0);
    for (std::size_t r = 0; r < p.dim(); ++r)
        for (std::size_t c = 0; c < p.ambient(); ++c) padded(r, c) = p.basis()(r, c);
    // Padding an RREF with zero columns keeps it in RREF.
    return Subspace::from_canonical(p.field(), std::move(padded));
}

Subspace embed_v(const Subspace& p, std::size_t s) {
    const std::size_t n = p.ambient();
    FpMatrix gens(p.dim() + s, n + s, 0);
    for (std::size_t r = 0; r < p.dim(); ++r)
        for (std::size_t c = 0; c < n; ++c) gens(r, c) = p.basis()(r, c);
    for (std::size_t k = 0; k < s; ++k) gens(p.dim() + k, n + k) = 1;
    return Subspace::from_canonical(p.field(), std::move(gens));
}

namespace {

void check_membership_shapes(const Subspace& p, const Partition& lambda, const FlagSpec& flag) {
    const Box box = lambda.box();
    if (p.dim() != static_cast<std::size_t>(box.d)) {
        throw InvalidArgument("subspace has dimension " + std::to_string(p.dim()) +
                              " but partition box has d=" + std::to_string(box.d));
    }
    if (p.ambient() != static_cast<std::size_t>(box.ambient()) || flag.ambient() != p.ambient()) {
        throw InvalidArgument("ambient dimension mismatch: subspace " +
                              std::to_string(p.ambient()) + ", flag " +
                              std::to_string(flag.ambient()) + ", box " + box.to_string());
    }
    require_same_field(p.field(), flag.field());
}

}  // namespace

bool schubert_membership(const Subspace& p, const Partition& lambda, const FlagSpec& flag) {
    check_membership_shapes(p, lambda, flag);
    const Box box = lambda.box();
    for (int i = 1; i <= box.d; ++i) {
        const int li = lambda.part(i);
        if (li == 0) continue;  // empty condition
        const auto k = static_cast<std::size_t>(box.c + i - li);
        const std::size_t r = rank(p.field(), p.basis().stacked(flag.prefix(k)));
        if (r > static_cast<std::size_t>(box.ambient() - li)) return false;
    }
    return true;
}

bool schubert_membership_by_intersection(const Subspace& p, const Partition& lambda,
                                         const FlagSpec& flag) {
    check_membership_shapes(p, lambda, flag);
    const Box box = lambda.box();
    // In flag coordinates F_k is the span of the first k unit vectors, so
    // P ∩ F_k is the kernel of P restricted to the trailing coordinates.
    const FpMatrix coords = flag.to_flag_coordinates(p.basis());
    for (int i = 1; i <= box.d; ++i) {
        const auto k = static_cast<std::size_t>(box.c + i - lambda.part(i));
        const std::size_t meet = p.dim() - rank(p.field(), column_tail(coords, k));
        if (meet < static_cast<std::size_t>(i)) return false;
    }
    return true;
}

std::uint64_t gaussian_binomial(std::size_t m, std::size_t d, std::uint64_t q) {
    if (d > m) return 0;
    // row[k] = [n choose k]_q, updated in place for n = 1..m:
    // [n, k] = [n-1, k-1] + q^k [n-1, k].
    std::vector<std::uint64_t> row(d + 1, 0);
    row[0] = 1;
    for (std::size_t n = 1; n <= m; ++n) {
        for (std::size_t k = std::min(n, d); k >= 1; --k) {
            std::uint64_t qk = 1;
            for (std::size_t t = 0; t < k; ++t) qk = sat_mul(qk, q);
            row[k] = sat_add(row[k - 1], sat_mul(qk, row[k]));
        }
    }
    return row[d];
}

GrassmannianEnumerator::GrassmannianEnumerator(PrimeField f, std::size_t d, std::size_t m,
                                               std::uint64_t budget)
    : field_(std::move(f)), d_(d), m_(m) {
    if (d > m) throw InvalidArgument("subspace dimension exceeds ambient dimension");
    const std::uint64_t expected = gaussian_binomial(m, d, field_.order());
    if (expected > budget) {
        throw BudgetExceeded("G_" + std::to_string(d) + "(GF(" + std::to_string(field_.order()) +
                             ")^" + std::to_string(m) + ") has " + std::to_string(expected) +
                             " points, budget is " + std::to_string(budget));
    }
    // Pivot sets in lexicographic order; for each, the free cells are the
    // non-pivot columns to the right of a row's pivot.
    std::vector<std::size_t> pivots(d);
    for (std::size_t i = 0; i < d; ++i) pivots[i] = i;
    while (true) {
        Block block;
        block.pivots = pivots;
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = pivots[r] + 1; c < m; ++c)
                if (!std::binary_search(pivots.begin(), pivots.end(), c))
                    block.free_cells.emplace_back(r, c);
        block.offset = total_;
        block.count = 1;
        for (std::size_t t = 0; t < block.free_cells.size(); ++t) block.count *= field_.order();
        total_ += block.count;
        blocks_.push_back(std::move(block));

        std::size_t i = d;
        while (i > 0 && pivots[i - 1] == m - d + i - 1) --i;
        if (i == 0) break;
        ++pivots[i - 1];
        for (std::size_t j = i; j < d; ++j) pivots[j] = pivots[j - 1] + 1;
    }
}

std::pair<std::uint64_t, std::uint64_t> GrassmannianEnumerator::block_range(std::size_t k) const {
    return {blocks_[k].offset, blocks_[k].offset + blocks_[k].count};
}

Subspace GrassmannianEnumerator::at(std::uint64_t index) const {
    if (index >= total_) throw InvalidArgument("Grassmannian index out of range");
    auto it = std::upper_bound(blocks_.begin(), blocks_.end(), index,
                               [](std::uint64_t i, const Block& b) { return i < b.offset; });
    const Block& block = *std::prev(it);
    std::uint64_t local = index - block.offset;
    FpMatrix rref(d_, m_, 0);
    for (std::size_t r = 0; r < d_; ++r) rref(r, block.pivots[r]) = 1;
    for (const auto& [r, c] : block.free_cells) {
        rref(r, c) = static_cast<std::uint8_t>(local % field_.order());
        local /= field_.order();
    }
    return Subspace::from_canonical(field_, std::move(rref));
}

void GrassmannianEnumerator::for_each(const std::function<void(const Subspace&)>& visit) const {
    for (std::uint64_t i = 0; i < total_; ++i) visit(at(i));
}

}  // namespace schubert
