#include <doctest.h>

#include <algorithm>
#include <set>

#include "schubert/charts.hpp"

using namespace schubert;

namespace {

// a_ij -> 10*i + j, distinct small integers standing in for symbols.
QMatrix labelled(std::size_t rows, std::size_t cols) {
    QMatrix a(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) a(r, c) = static_cast<std::int64_t>(10 * (r + 1) + c + 1);
    return a;
}

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

TEST_CASE("insertion walk positions") {
    CHECK(insertion_walk(Partition(Box(3, 6), {5, 3, 2})).identity_rows == std::vector<int>{2, 5, 7});
    CHECK(insertion_walk(Partition::empty(Box(2, 3))).identity_rows == std::vector<int>{4, 5});
    CHECK(insertion_walk(Partition::full(Box(3, 4))).identity_rows == std::vector<int>{1, 2, 3});
    CHECK(insertion_walk(Partition(Box(3, 8), {5, 3, 2})).identity_rows == std::vector<int>{4, 7, 9});
    // Down, right, down, down, right, down, right, down, down.
    CHECK(insertion_walk(Partition(Box(3, 6), {5, 3, 2})).steps() == "DRDDRDRDD");
}

TEST_CASE("walk positions are strictly increasing and steps have the right counts") {
    for (int d = 1; d <= 4; ++d)
        for (int c = 0; c <= 4; ++c)
            for (const auto& p : enumerate_partitions(Box(d, c))) {
                const auto walk = insertion_walk(p);
                CHECK(std::is_sorted(walk.identity_rows.begin(), walk.identity_rows.end()));
                CHECK(std::adjacent_find(walk.identity_rows.begin(), walk.identity_rows.end()) ==
                      walk.identity_rows.end());
                const auto steps = walk.steps();
                CHECK(std::count(steps.begin(), steps.end(), 'R') == d);
                CHECK(std::count(steps.begin(), steps.end(), 'D') == c);
            }
}

TEST_CASE("M_A for the worked example") {
    const Partition lambda(Box(3, 6), {5, 3, 2});
    const QMatrix ma = build_MA(labelled(6, 3), lambda);
    const QMatrix expected{{11, 12, 13}, {1, 0, 0},    {21, 22, 23}, {31, 32, 33}, {0, 1, 0},
                           {41, 42, 43}, {0, 0, 1},    {51, 52, 53}, {61, 62, 63}};
    CHECK(ma == expected);
    CHECK(rank(RationalField{}, ma) == 3);

    const auto sym = symbolic_MA(lambda);
    CHECK(sym[0] == std::vector<std::string>{"a11", "a12", "a13"});
    CHECK(sym[1] == std::vector<std::string>{"1", "0", "0"});
    CHECK(sym[8] == std::vector<std::string>{"a61", "a62", "a63"});
}

TEST_CASE("M_A for the h example has identity rows after rows 3, 5, 6 of A") {
    const QMatrix ma = build_MA(labelled(8, 3), Partition(Box(3, 8), {5, 3, 2}));
    REQUIRE(ma.rows() == 11);
    CHECK(ma.row_block(3, 1) == QMatrix{{1, 0, 0}});
    CHECK(ma.row_block(6, 1) == QMatrix{{0, 1, 0}});
    CHECK(ma.row_block(8, 1) == QMatrix{{0, 0, 1}});
    CHECK(ma.row_block(2, 1) == QMatrix{{31, 32, 33}});
    CHECK(ma.row_block(7, 1) == QMatrix{{61, 62, 63}});
    CHECK(ma.row_block(10, 1) == QMatrix{{81, 82, 83}});
    CHECK_THROWS_AS((void)build_MA(labelled(7, 3), Partition(Box(3, 8), {5, 3, 2})), InvalidArgument);
}

TEST_CASE("zero pattern for the worked example") {
    const ZeroPattern p = zero_pattern(Partition(Box(3, 6), {5, 3, 2}));
    CHECK(p.size() == 10);
    CHECK(p.to_grid() ==
          "...\n"
          "0..\n"
          "0..\n"
          "00.\n"
          "000\n"
          "000\n");
    CHECK(p.free_count() == 8);
    CHECK(zero_pattern(Partition::empty(Box(3, 4))).size() == 0);
    CHECK(zero_pattern(Partition::full(Box(3, 4))).size() == 12);
}

TEST_CASE("zero pattern is the union of the condition blocks") {
    for (int d = 1; d <= 4; ++d)
        for (int c = 0; c <= 4; ++c)
            for (const auto& p : enumerate_partitions(Box(d, c))) {
                ZeroPattern u(c, d);
                for (int i = 1; i <= d; ++i) u = u.united(condition_block(p, i));
                CHECK(u == zero_pattern(p));
                CHECK(zero_pattern(p).size() == static_cast<std::size_t>(weight(p)));
                std::string rotated = render_rotated(p);
                std::replace(rotated.begin(), rotated.end(), '#', '0');
                CHECK(zero_pattern(p).to_grid() == rotated);
                // An empty grid has no width, so c = 0 does not round-trip.
                if (c > 0) CHECK(ZeroPattern::parse_grid(zero_pattern(p).to_grid()) == zero_pattern(p));
            }
    CHECK_THROWS_AS((void)ZeroPattern::parse_grid("0.\n0\n"), InvalidArgument);
    CHECK_THROWS_AS((void)ZeroPattern::parse_grid("0x\n"), InvalidArgument);
}

TEST_CASE("chart example over GF(3): lambda=(1,0), d=c=2") {
    const PrimeField f(3);
    const Partition lambda(Box(2, 2), {1, 0});
    const FlagSpec L = flag_L(f, 4);
    int members = 0;
    for (std::uint64_t i = 0; i < 81; ++i) {
        const FpMatrix a = chart_matrix_at(f, 2, 2, i);
        const bool in = schubert_membership(chart_point(a, lambda, L), lambda, L);
        CHECK(in == (a(1, 0) == 0));
        if (in) ++members;
    }
    CHECK(members == 27);
}

TEST_CASE("zero chart point is spanned by the identity positions") {
    const PrimeField f(2);
    const Partition lambda(Box(2, 3), {0, 0});
    const Subspace p = chart_point(FpMatrix(3, 2, 0), lambda, flag_L(f, 5));
    CHECK(p.basis() == FpMatrix{{0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}});
    const Subspace q = chart_point(FpMatrix(6, 3, 0), Partition(Box(3, 6), {5, 3, 2}), flag_L(f, 9));
    CHECK(q.basis() == FpMatrix{{0, 1, 0, 0, 0, 0, 0, 0, 0},
                                {0, 0, 0, 0, 1, 0, 0, 0, 0},
                                {0, 0, 0, 0, 0, 0, 1, 0, 0}});
    CHECK_THROWS_AS((void)chart_point(FpMatrix(3, 2, 0), lambda, flag_L(f, 4)), InvalidArgument);
}

TEST_CASE("pattern-zeroed point of the worked example lies in the Schubert variety") {
    const PrimeField f(2);
    const Partition lambda(Box(3, 6), {5, 3, 2});
    const ZeroPattern pattern = zero_pattern(lambda);
    FpMatrix a(6, 3, 1);
    for (const auto& [r, c] : pattern.entries()) a(r - 1, c - 1) = 0;
    const FlagSpec L = flag_L(f, 9);
    CHECK(schubert_membership(chart_point(a, lambda, L), lambda, L));
    a(4, 2) = 1;  // a_53 is in the pattern
    CHECK_FALSE(schubert_membership(chart_point(a, lambda, L), lambda, L));
}

TEST_CASE("each condition separately matches its block, the union matches the pattern") {
    for (unsigned q : {2u, 3u}) {
        const PrimeField f(q);
        for (int d = 1; d <= 3; ++d)
            for (int c = 0; c <= 3; ++c) {
                const Box box(d, c);
                const std::uint64_t total = ipow(q, static_cast<std::size_t>(c * d));
                if (total > 20000) continue;
                const FlagSpec L = flag_L(f, box.ambient());
                for (const auto& lambda : enumerate_partitions(box)) {
                    const auto walk = insertion_walk(lambda);
                    std::vector<ZeroPattern> blocks;
                    for (int i = 1; i <= d; ++i) blocks.push_back(condition_block(lambda, i));
                    const ZeroPattern pattern = zero_pattern(lambda);
                    std::set<std::string> points;
                    for (std::uint64_t idx = 0; idx < total; ++idx) {
                        const FpMatrix a = chart_matrix_at(f, c, d, idx);
                        const FpMatrix ma = build_MA(a, lambda);
                        for (int i = 1; i <= d; ++i) {
                            // Rows of M_A below the i-th identity row.
                            const auto first = static_cast<std::size_t>(walk.identity_rows[i - 1]);
                            const FpMatrix lower = ma.row_block(first, ma.rows() - first);
                            const bool rank_ok = rank(f, lower) == static_cast<std::size_t>(d - i);
                            CHECK(rank_ok == vanishes_on(a, blocks[i - 1]));
                        }
                        const Subspace p = chart_point(a, lambda, L);
                        CHECK(schubert_membership(p, lambda, L) == vanishes_on(a, pattern));
                        points.insert(p.key());
                    }
                    // The chart is injective.
                    CHECK(points.size() == total);
                }
            }
    }
}

TEST_CASE("symbolic M_A template for the empty partition puts identity at the bottom") {
    const auto sym = symbolic_MA(Partition::empty(Box(2, 3)));
    REQUIRE(sym.size() == 5);
    CHECK(sym[2] == std::vector<std::string>{"a31", "a32"});
    CHECK(sym[3] == std::vector<std::string>{"1", "0"});
    CHECK(sym[4] == std::vector<std::string>{"0", "1"});
}
