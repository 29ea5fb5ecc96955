#pragma once

// Brute-force oracle for the diagram rules of h_*, h^*, v_*, v^*. Each
// proposition is checked as an equality (or emptiness) of point sets over
// GF(q), each transversality lemma as disjointness of coordinate conditions
// in a chart.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schubert/charts.hpp"
#include "schubert/chow.hpp"
#include "schubert/exactla.hpp"
#include "schubert/kernels.hpp"
#include "schubert/partitions.hpp"

namespace schubert {

enum class Claim { Prop1, Prop2, Prop3, Prop4, TransvH, TransvV, ChartH, ChartV, Counts, Visual };

[[nodiscard]] std::string to_string(Claim claim);
/// Accepts the CLI names (prop1 .. prop4, transv-h, transv-v, chart-h,
/// chart-v, counts, visual).
[[nodiscard]] Claim parse_claim(std::string_view name);
[[nodiscard]] const std::vector<Claim>& all_claims();

enum class Status { Verified, Counterexample };

struct VerificationReport {
    Claim claim = Claim::Prop1;
    int d = 0;   // source dimension
    int c = 0;   // source codimension
    int s = 0;   // 0 when the claim has no embedding
    int q = 0;   // 0 for the field-free pattern checks
    std::string partition;
    Status status = Status::Verified;
    std::optional<std::string> witness;
    std::uint64_t examined = 0;  // points (or chart cells) looked at
    std::uint64_t lhs = 0;
    std::uint64_t rhs = 0;

    [[nodiscard]] bool verified() const { return status == Status::Verified; }
    /// One tab-separated line: claim d c s q partition status examined lhs rhs witness.
    [[nodiscard]] std::string to_record() const;
    [[nodiscard]] static std::string record_header();
};

enum class FlagChoice { Standard, Random };

struct OracleOptions {
    std::uint64_t budget = kDefaultBudget;
    Exec exec = Exec::Parallel;
    FlagChoice flags = FlagChoice::Standard;
    std::uint64_t seed = 1;
    /// Chart sweeps larger than the budget fall back to this many samples.
    std::uint64_t samples = 10'000;
};

/// The flags F. of E (dim n) and T. of S (dim s) the checks use.
struct FlagPair {
    FlagSpec F;
    FlagSpec T;
};
[[nodiscard]] FlagPair make_flags(const PrimeField& f, std::size_t n, std::size_t s,
                                  const OracleOptions& opts);

/// h(Omega_lambda(F.)) == Omega_{lambda+s}(D.). lambda lives in the box of G_d(E).
[[nodiscard]] VerificationReport check_prop1(const Partition& lambda, int s, unsigned q,
                                             const OracleOptions& opts = {});
/// h^{-1}(Omega_mu(B.)) is empty when mu_1 > c, else equals Omega_mu(F.).
/// mu lives in the box (d, c+s) of G_d(E+S).
[[nodiscard]] VerificationReport check_prop2(const Partition& mu, int s, unsigned q,
                                             const OracleOptions& opts = {});
/// v(Omega_lambda(F.)) == Omega_{c^s lambda}(B.).
[[nodiscard]] VerificationReport check_prop3(const Partition& lambda, int s, unsigned q,
                                             const OracleOptions& opts = {});
/// v(G^c(E)) misses Omega_mu(D.) when mu_{d+1} >= 1, else v^{-1}(Omega_mu(D.)) == Omega_mu(F.).
/// mu lives in the box (d+s, c).
[[nodiscard]] VerificationReport check_prop4(const Partition& mu, int s, unsigned q,
                                             const OracleOptions& opts = {});

/// First s rows together with zero_pattern(mu) in the (c+s) x d chart.
[[nodiscard]] ZeroPattern transversality_pattern_h(const Partition& mu, int s);
/// Last s columns together with zero_pattern(mu) in the c x (d+s) chart.
[[nodiscard]] ZeroPattern transversality_pattern_v(const Partition& mu, int s);

/// Requires mu_1 <= c; checks the two coordinate sets are disjoint and leave
/// c*d - |mu| free cells.
[[nodiscard]] VerificationReport check_transversality_h(const Partition& mu, int s);
/// Requires mu_{d+1} == 0.
[[nodiscard]] VerificationReport check_transversality_v(const Partition& mu, int s);

/// Field-level form of the h lemma: for chart points Q of U^mu read in the
/// basis of B., Q lies in h(G_d(E)) iff the first s rows of A vanish, and
/// Q lies in Omega_mu(B.) iff A vanishes on zero_pattern(mu).
[[nodiscard]] VerificationReport check_chart_h(const Partition& mu, int s, unsigned q,
                                               const OracleOptions& opts = {});
/// Same for v with basis D.: Q contains 0+S iff the last s columns vanish.
[[nodiscard]] VerificationReport check_chart_v(const Partition& mu, int s, unsigned q,
                                               const OracleOptions& opts = {});

/// |Omega_lambda(flag)| over the flag's field, by enumeration.
[[nodiscard]] std::uint64_t count_schubert_points(const Partition& lambda, const FlagSpec& flag,
                                                  const OracleOptions& opts = {});
/// Sum over mu containing lambda of q^{cd-|mu|}.
[[nodiscard]] std::uint64_t cell_sum(const Partition& lambda, std::uint64_t q);
/// Enumerated count against the cell sum (and the Gaussian binomial for lambda = 0).
[[nodiscard]] VerificationReport check_counts(const Partition& lambda, unsigned q,
                                              const OracleOptions& opts = {});

/// chart_point(A, lambda, F.) in Omega_lambda(F.) iff A vanishes on
/// zero_pattern(lambda), for every A (or a seeded sample beyond the budget).
/// When exhaustive, also checks the open cell has q^{cd-|lambda|} points.
[[nodiscard]] VerificationReport check_visual_result(const Partition& lambda, unsigned q,
                                                     const OracleOptions& opts = {});

/// Runs `claim` for every admissible partition of its box, or only for
/// `only` (comma separated parts) when given.
[[nodiscard]] std::vector<VerificationReport> run_claim(Claim claim, int d, int c, int s,
                                                        unsigned q,
                                                        const std::optional<std::string>& only,
                                                        const OracleOptions& opts = {});

}  // namespace schubert
