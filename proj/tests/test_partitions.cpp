#include <doctest.h>

#include <set>

#include "schubert/partitions.hpp"

using namespace schubert;

namespace {

// Coefficients of the Gaussian binomial polynomial [m choose d]_q, by the
// q-Pascal rule on polynomials. Coefficient k counts partitions of weight k
// in a d x (m-d) box.
std::vector<int> gaussian_poly(int m, int d) {
    if (d == 0 || d == m) return {1};
    auto a = gaussian_poly(m - 1, d - 1);
    auto b = gaussian_poly(m - 1, d);
    std::vector<int> out(std::max(a.size(), b.size() + d), 0);
    for (std::size_t k = 0; k < a.size(); ++k) out[k] += a[k];
    for (std::size_t k = 0; k < b.size(); ++k) out[k + d] += b[k];
    return out;
}

// Every sequence in [0,c]^d that is weakly decreasing.
std::set<std::vector<int>> brute_partitions(int d, int c) {
    std::set<std::vector<int>> out;
    std::vector<int> seq(d, 0);
    while (true) {
        if (std::is_sorted(seq.rbegin(), seq.rend())) out.insert(seq);
        int i = 0;
        while (i < d && seq[i] == c) seq[i++] = 0;
        if (i == d) break;
        ++seq[i];
    }
    return out;
}

}  // namespace

TEST_CASE("box parsing and validation") {
    CHECK(Box::parse("4x7") == Box(4, 7));
    CHECK(Box::parse("4x7").ambient() == 11);
    CHECK(Box(2, 0).area() == 0);
    CHECK_THROWS_AS(Box(0, 3), InvalidArgument);
    CHECK_THROWS_AS(Box(2, -1), InvalidArgument);
    CHECK_THROWS_AS(Box::parse("4by7"), InvalidArgument);
    CHECK_THROWS_AS(Box::parse("x7"), InvalidArgument);
}

TEST_CASE("partition construction pads and validates") {
    const Partition p(Box(4, 7), {5, 2, 1});
    CHECK(p.parts() == std::vector<int>{5, 2, 1, 0});
    CHECK(p.part(1) == 5);
    CHECK(p.part(4) == 0);
    CHECK(p.to_string() == "5,2,1,0");

    CHECK_THROWS_WITH_AS(Partition(Box(2, 2), {3, 0}), "part 1 exceeds c=2", InvalidArgument);
    CHECK_THROWS_WITH_AS(Partition(Box(3, 4), {1, 2}), "part 2 exceeds part 1", InvalidArgument);
    CHECK_THROWS_AS(Partition(Box(2, 4), {1, 1, 1}), InvalidArgument);
    CHECK_THROWS_AS(Partition(Box(2, 4), {1, -1}), InvalidArgument);
    CHECK(Partition::parse(Box(6, 3), "3,2,1,1,0,0").parts() == std::vector<int>{3, 2, 1, 1, 0, 0});
    CHECK(Partition::parse(Box(2, 3), "2,1,0,0") == Partition(Box(2, 3), {2, 1}));
    CHECK(Partition::parse(Box(2, 3), "") == Partition::empty(Box(2, 3)));
    CHECK_THROWS_AS(Partition::parse(Box(2, 3), "2,,1"), InvalidArgument);
}

TEST_CASE("weight") {
    CHECK(weight(Partition(Box(4, 7), {5, 2, 1})) == 8);
    CHECK(weight(Partition::empty(Box(3, 5))) == 0);
    CHECK(weight(Partition::full(Box(3, 4))) == 12);
    CHECK(empty_squares(Partition(Box(4, 7), {5, 2, 1})) == 20);
}

TEST_CASE("containment") {
    const Box box(3, 6);
    const Partition lambda(box, {5, 2, 1});
    CHECK(contains(Partition(box, {5, 3, 2}), lambda));
    CHECK(contains(lambda, lambda));
    CHECK_FALSE(contains(Partition(Box(2, 3), {2, 2}), Partition(Box(2, 3), {3, 0})));
    CHECK_THROWS_AS((void)contains(lambda, Partition(Box(3, 5), {1})), InvalidArgument);
}

TEST_CASE("enumeration examples") {
    const auto weight2 = enumerate_partitions(Box(2, 2), 2);
    REQUIRE(weight2.size() == 2);
    CHECK(weight2[0] == Partition(Box(2, 2), {2, 0}));
    CHECK(weight2[1] == Partition(Box(2, 2), {1, 1}));
    // Against the coefficient of q^2 in [4 choose 2]_q = 1 + q + 2q^2 + q^3 + q^4.
    CHECK(gaussian_poly(4, 2) == std::vector<int>{1, 1, 2, 1, 1});

    const auto row = enumerate_partitions(Box(1, 3));
    REQUIRE(row.size() == 4);
    for (int k = 0; k <= 3; ++k) CHECK(row[k] == Partition(Box(1, 3), {k}));

    CHECK(enumerate_partitions(Box(2, 2)).size() == 6);
}

TEST_CASE("enumeration matches brute force in every small box") {
    for (int d = 1; d <= 4; ++d) {
        for (int c = 0; c <= 4; ++c) {
            const Box box(d, c);
            const auto all = enumerate_partitions(box);
            std::set<std::vector<int>> seen;
            for (const auto& p : all) seen.insert(p.parts());
            CHECK(seen.size() == all.size());
            CHECK(seen == brute_partitions(d, c));
            CHECK(all.size() == count_partitions(box));

            const auto poly = gaussian_poly(d + c, d);
            for (int k = 0; k <= d * c; ++k) {
                CHECK(enumerate_partitions(box, k).size() == static_cast<std::size_t>(poly[k]));
            }
            CHECK(std::is_sorted(all.begin(), all.end(), GradedOrder{}));
        }
    }
}

TEST_CASE("rendering matches the worked diagrams") {
    CHECK(render(Partition(Box(4, 7), {5, 2, 1})) ==
          "#####..\n"
          "##.....\n"
          "#......\n"
          ".......\n");
    // Contained in a fixed subspace of codimension 2: all rows stop at column 2.
    CHECK(render(Partition(Box(4, 7), {2, 2, 2, 2})) ==
          "##.....\n##.....\n##.....\n##.....\n");
    // Containing a fixed subspace of dimension 2: two full top rows.
    CHECK(render(Partition(Box(4, 7), {7, 7})) ==
          "#######\n#######\n.......\n.......\n");
    CHECK(render(Partition::empty(Box(2, 2))) == "..\n..\n");
}

TEST_CASE("rotated rendering") {
    CHECK(render_rotated(Partition(Box(3, 6), {5, 3, 2})) ==
          "...\n"
          "#..\n"
          "#..\n"
          "##.\n"
          "###\n"
          "###\n");
}

TEST_CASE("parse_diagram inverts render") {
    for (int d = 1; d <= 4; ++d)
        for (int c = 0; c <= 4; ++c)
            for (const auto& p : enumerate_partitions(Box(d, c))) CHECK(parse_diagram(render(p)) == p);

    CHECK_THROWS_AS(parse_diagram("#.#\n...\n"), InvalidArgument);
    CHECK_THROWS_AS(parse_diagram("..\n#..\n"), InvalidArgument);
    CHECK_THROWS_AS(parse_diagram("#x\n"), InvalidArgument);
    CHECK_THROWS_AS(parse_diagram(".#\n##\n"), InvalidArgument);
}
