#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "schubert/partitions.hpp"

namespace schubert {

/// A Z-linear combination of Schubert classes sigma_lambda over one box.
/// The zero class is the empty combination; zero coefficients are never kept.
class CycleClass {
public:
    using Terms = std::map<Partition, std::int64_t, GradedOrder>;

    explicit CycleClass(Box box) : box_(box) {}
    /// The basis class sigma_lambda.
    explicit CycleClass(const Partition& lambda, std::int64_t coeff = 1);

    [[nodiscard]] const Box& box() const { return box_; }
    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::int64_t coefficient(const Partition& lambda) const;

    /// True when every term has the same weight (the zero class counts).
    [[nodiscard]] bool homogeneous() const;

    void add_term(const Partition& lambda, std::int64_t coeff);

    CycleClass& operator+=(const CycleClass& other);
    CycleClass& operator-=(const CycleClass& other);
    CycleClass& operator*=(std::int64_t k);

    friend CycleClass operator+(CycleClass a, const CycleClass& b) { return a += b; }
    friend CycleClass operator-(CycleClass a, const CycleClass& b) { return a -= b; }
    friend CycleClass operator*(std::int64_t k, CycleClass a) { return a *= k; }
    friend bool operator==(const CycleClass&, const CycleClass&) = default;

    /// `2*sigma[1,0] + 3*sigma[1,1] @ 2x2`; unit coefficients are omitted and
    /// the zero class prints as `0 @ dxc`.
    [[nodiscard]] std::string to_string() const;

    /// Accepts what to_string produces. Without an `@ box` suffix the
    /// fallback box is used; with both, they must agree.
    static CycleClass parse(std::string_view text, std::optional<Box> fallback = std::nullopt);

private:
    void require_same_box(const CycleClass& other) const;

    Box box_;
    Terms terms_;
};

enum class Embedding { H, V };

/// The embedding h: G_d(E) -> G_d(E+S) or v: G^c(E) -> G^c(E+S), dim S = s.
struct EmbeddingSpec {
    Embedding kind = Embedding::H;
    int s = 1;
    Box source_box;

    EmbeddingSpec(Embedding k, int dim_s, Box source);

    /// (d, c+s) for h, (d+s, c) for v.
    [[nodiscard]] Box target_box() const;
};

/// h_*: adds s full columns on the left.
[[nodiscard]] Partition h_push(const Partition& lambda, int s);
/// h^*: zero when the last s columns are occupied (mu_1 > c), otherwise drops them.
[[nodiscard]] CycleClass h_pull(const Partition& mu, int s);
/// v_*: adds s full rows on top (c^s lambda).
[[nodiscard]] Partition v_push(const Partition& lambda, int s);
/// v^*: zero when the last s rows are occupied (mu_{d+1} >= 1), otherwise drops them.
[[nodiscard]] CycleClass v_pull(const Partition& mu, int s);

enum class Surgery { HPush, HPull, VPush, VPull };

/// Accepts `hstar-push`, `hstar-pull`, `vstar-push`, `vstar-pull` and the
/// short forms `h*`, `h^*`, `v*`, `v^*`.
[[nodiscard]] Surgery parse_surgery(std::string_view name);
[[nodiscard]] std::string to_string(Surgery kind);

/// Box of the classes a surgery accepts, given the box of its inputs is
/// `input`; throws when `input` cannot be a target box of the embedding.
[[nodiscard]] Box output_box(Surgery kind, Box input, int s);

/// Z-linear extension of a surgery, termwise; throws on a box the map cannot take.
[[nodiscard]] CycleClass apply_linear(Surgery kind, int s, const CycleClass& x);

}  // namespace schubert
