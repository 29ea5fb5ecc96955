#include <doctest.h>

#include "schubert/verify.hpp"

using namespace schubert;

namespace {

OracleOptions serial() {
    OracleOptions o;
    o.exec = Exec::Serial;
    return o;
}

}  // namespace

TEST_CASE("prop1 examples") {
    const auto full = check_prop1(Partition(Box(1, 1), {1}), 1, 2);
    CHECK(full.verified());
    CHECK_FALSE(full.witness.has_value());
    CHECK(full.lhs == 1);
    CHECK(full.rhs == 1);

    const auto empty = check_prop1(Partition(Box(1, 1), {0}), 1, 2);
    CHECK(empty.verified());
    CHECK(empty.lhs == 3);
    CHECK(empty.rhs == 3);

    for (const auto& lambda : enumerate_partitions(Box(2, 1))) CHECK(check_prop1(lambda, 1, 3).verified());
}

TEST_CASE("prop2 examples") {
    const auto killed = check_prop2(Partition(Box(1, 2), {2}), 1, 2);
    CHECK(killed.verified());
    CHECK(killed.lhs == 0);
    CHECK(killed.rhs == 0);

    const auto kept = check_prop2(Partition(Box(1, 2), {1}), 1, 2);
    CHECK(kept.verified());
    CHECK(kept.lhs == 1);
    CHECK(kept.rhs == 1);

    const auto trivial = check_prop2(Partition::empty(Box(2, 3)), 1, 2);
    CHECK(trivial.verified());
    CHECK(trivial.lhs == gaussian_binomial(4, 2, 2));
}

TEST_CASE("prop3 examples") {
    CHECK(check_prop3(Partition(Box(1, 1), {1}), 1, 2).verified());
    const auto r = check_prop3(Partition(Box(1, 2), {0}), 1, 2);
    CHECK(r.verified());
    // Planes of GF(2)^4 containing 0+S: lines of GF(2)^3.
    CHECK(r.lhs == 7);
}

TEST_CASE("prop4 examples") {
    const auto killed = check_prop4(Partition(Box(2, 1), {1, 1}), 1, 2);
    CHECK(killed.verified());
    CHECK(killed.lhs == 0);
    const auto kept = check_prop4(Partition(Box(2, 1), {1, 0}), 1, 2);
    CHECK(kept.verified());
    CHECK(kept.lhs == 1);
    CHECK(check_prop4(Partition::empty(Box(3, 2)), 1, 3).verified());
}

TEST_CASE("serial and parallel oracles agree") {
    const Partition mu(Box(2, 3), {2, 1});
    const auto a = check_prop2(mu, 1, 3, serial());
    const auto b = check_prop2(mu, 1, 3);
    CHECK(a.lhs == b.lhs);
    CHECK(a.rhs == b.rhs);
    CHECK(a.to_record() == b.to_record());
}

TEST_CASE("transversality h golden") {
    const Partition mu(Box(3, 8), {5, 3, 2});
    CHECK(transversality_pattern_h(mu, 2).to_grid() ==
          "000\n"
          "000\n"
          "...\n"
          "0..\n"
          "0..\n"
          "00.\n"
          "000\n"
          "000\n");
    const auto r = check_transversality_h(mu, 2);
    CHECK(r.verified());
    CHECK(r.lhs == 8);
    CHECK(r.rhs == 8);
    CHECK(transversality_pattern_h(Partition::empty(Box(2, 3)), 1).to_grid() == "00\n..\n..\n");
    CHECK_THROWS_AS((void)check_transversality_h(Partition(Box(3, 8), {7}), 2), InvalidArgument);
}

TEST_CASE("transversality v golden") {
    const Partition mu(Box(6, 3), {3, 2, 1, 1, 0, 0});
    CHECK(transversality_pattern_v(mu, 2).to_grid() ==
          "0...00\n"
          "00..00\n"
          "000000\n");
    const auto r = check_transversality_v(mu, 2);
    CHECK(r.verified());
    CHECK(r.lhs == 5);
    CHECK(r.rhs == 5);
    CHECK(transversality_pattern_v(Partition::empty(Box(3, 2)), 1).to_grid() == "..0\n..0\n");
    CHECK_THROWS_AS((void)check_transversality_v(Partition(Box(6, 3), {1, 1, 1, 1, 1}), 2),
                    InvalidArgument);
}

TEST_CASE("transversality sweep") {
    for (int d = 1; d <= 3; ++d)
        for (int c = 0; c <= 3; ++c)
            for (int s = 1; s <= 3; ++s) {
                for (const auto& r : run_claim(Claim::TransvH, d, c, s, 2, std::nullopt))
                    CHECK(r.verified());
                for (const auto& r : run_claim(Claim::TransvV, d, c, s, 2, std::nullopt))
                    CHECK(r.verified());
            }
}

TEST_CASE("point counts") {
    const PrimeField f(2);
    CHECK(count_schubert_points(Partition(Box(1, 2), {1}), flag_L(f, 3)) == 3);
    CHECK(cell_sum(Partition(Box(1, 2), {1}), 2) == 3);
    CHECK(count_schubert_points(Partition(Box(2, 2), {1, 0}), flag_L(f, 4)) == 19);
    CHECK(cell_sum(Partition(Box(2, 2), {1, 0}), 2) == 19);
    CHECK(count_schubert_points(Partition::empty(Box(2, 2)), flag_L(f, 4)) == gaussian_binomial(4, 2, 2));
    const auto r = check_counts(Partition(Box(2, 2), {1, 0}), 3);
    CHECK(r.verified());
    CHECK(r.lhs == r.rhs);
}

TEST_CASE("chart forms of the lemmas") {
    const auto h = check_chart_h(Partition(Box(2, 3), {1, 0}), 1, 2);
    CHECK(h.verified());
    CHECK(h.lhs == h.rhs);
    CHECK(h.rhs == 8);  // 2^{cd-|mu|} with c=2, d=2
    const auto v = check_chart_v(Partition(Box(3, 2), {1, 0, 0}), 1, 3);
    CHECK(v.verified());
    CHECK(v.rhs == 27);
    CHECK_THROWS_AS((void)check_chart_h(Partition(Box(2, 3), {3, 0}), 1, 2), InvalidArgument);
    for (const auto& r : run_claim(Claim::ChartH, 2, 2, 2, 3, std::nullopt)) CHECK(r.verified());
    for (const auto& r : run_claim(Claim::ChartV, 2, 2, 2, 3, std::nullopt)) CHECK(r.verified());
}

TEST_CASE("random flags") {
    OracleOptions o;
    o.flags = FlagChoice::Random;
    o.seed = 42;
    for (Claim claim : {Claim::Prop1, Claim::Prop2, Claim::Prop3, Claim::Prop4, Claim::Visual})
        for (const auto& r : run_claim(claim, 2, 1, 1, 3, std::nullopt, o)) CHECK(r.verified());
}

TEST_CASE("sampled visual check") {
    OracleOptions o;
    o.budget = 100;
    o.samples = 500;
    const auto r = check_visual_result(Partition(Box(3, 3), {2, 1, 0}), 3, o);
    CHECK(r.verified());
    CHECK(r.examined == 500);
}

TEST_CASE("budget exceeded") {
    OracleOptions o;
    o.budget = 10;
    CHECK_THROWS_AS((void)check_prop1(Partition::empty(Box(2, 2)), 1, 2, o), BudgetExceeded);
}

TEST_CASE("claims and records") {
    for (Claim claim : all_claims()) CHECK(parse_claim(to_string(claim)) == claim);
    CHECK_THROWS_AS((void)parse_claim("prop5"), InvalidArgument);
    CHECK(all_claims().size() == 10);

    const auto r = check_prop2(Partition(Box(1, 2), {2}), 1, 2);
    CHECK(r.to_record() == "prop2\t1\t1\t1\t2\t2\tverified\t3\t0\t0\t-");
    CHECK(VerificationReport::record_header().rfind("# claim", 0) == 0);

    const auto cases = run_claim(Claim::Prop2, 1, 1, 1, 2, std::nullopt);
    REQUIRE(cases.size() == 3);
    for (const auto& c : cases) CHECK(c.verified());
    CHECK_THROWS_AS((void)run_claim(Claim::Prop1, 1, 1, 0, 2, std::nullopt), InvalidArgument);
}
