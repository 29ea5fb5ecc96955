#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace schubert {

/// Raised for malformed or out-of-box partitions, boxes and class literals.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The d x c rectangle holding the diagrams of G_d(E), dim E = d + c.
struct Box {
    int d = 1;
    int c = 0;

    Box() = default;
    Box(int rows, int cols);

    [[nodiscard]] int ambient() const { return d + c; }
    [[nodiscard]] int area() const { return d * c; }

    /// Parses "dxc", e.g. "4x7".
    static Box parse(std::string_view text);
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Box&, const Box&) = default;
};

/// A weakly decreasing sequence c >= p_1 >= ... >= p_d >= 0, always stored
/// with exactly d parts.
class Partition {
public:
    /// Pads with zeros up to d parts; throws InvalidArgument naming the
    /// violated inequality (1-based) otherwise.
    Partition(Box box, std::vector<int> parts);

    /// The empty diagram of `box`.
    static Partition empty(Box box);
    /// The full rectangle of `box`.
    static Partition full(Box box);
    /// Parses comma separated parts, e.g. "5,2,1".
    static Partition parse(Box box, std::string_view text);

    [[nodiscard]] const Box& box() const { return box_; }
    [[nodiscard]] const std::vector<int>& parts() const { return parts_; }
    /// 1-based access, matching the usual lambda_i notation.
    [[nodiscard]] int part(int i) const;
    [[nodiscard]] int rows() const { return box_.d; }

    /// Comma separated parts with explicit trailing zeros.
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    Box box_;
    std::vector<int> parts_;
};

/// Sum of the parts: the codimension of the Schubert variety.
[[nodiscard]] int weight(const Partition& p);

/// Number of empty squares c*d - |p|: the dimension of the Schubert variety.
[[nodiscard]] int empty_squares(const Partition& p);

/// Diagram containment (mu_i >= lambda_i for all i). Throws on box mismatch.
[[nodiscard]] bool contains(const Partition& mu, const Partition& lambda);

/// Graded lexicographic order: by weight, then lexicographically descending.
struct GradedOrder {
    bool operator()(const Partition& a, const Partition& b) const;
};

/// Every partition in `box` (optionally only those of the given weight), in
/// graded lexicographic order.
[[nodiscard]] std::vector<Partition> enumerate_partitions(Box box,
                                                          std::optional<int> weight = std::nullopt);

/// binomial(d + c, d): the number of partitions in the box.
[[nodiscard]] std::uint64_t count_partitions(Box box);

// Diagram text grammar: d lines of exactly c characters, '#' for a full
// square and '.' for an empty one, row 1 first, each line ending in '\n'.
// A box with c = 0 renders as d empty lines.
inline constexpr char kFullSquare = '#';
inline constexpr char kEmptySquare = '.';

[[nodiscard]] std::string render(const Partition& p);

/// Inverse of render; the box is read off the grid. Throws InvalidArgument
/// on ragged rows, unknown characters, or shapes that are not diagrams.
[[nodiscard]] Partition parse_diagram(std::string_view text);

/// The diagram turned a quarter counterclockwise: c lines of d characters,
/// column j carrying the bottom lambda_j squares.
[[nodiscard]] std::string render_rotated(const Partition& p);

}  // namespace schubert
