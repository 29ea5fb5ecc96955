#include "schubert/verify.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <sstream>

namespace schubert {

namespace {

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (out > std::numeric_limits<std::uint64_t>::max() / base) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        out *= base;
    }
    return out;
}

std::string one_line(std::string text) {
    while (!text.empty() && text.back() == '\n') text.pop_back();
    std::replace(text.begin(), text.end(), '\n', ';');
    std::replace(text.begin(), text.end(), '\t', ' ');
    return text;
}

std::string describe(const Subspace& p) { return one_line(format_matrix(p.basis())); }

VerificationReport make_report(Claim claim, const Partition& p, int d, int c, int s, unsigned q) {
    VerificationReport r;
    r.claim = claim;
    r.d = d;
    r.c = c;
    r.s = s;
    r.q = static_cast<int>(q);
    r.partition = p.to_string();
    return r;
}

void fail(VerificationReport& r, std::string witness) {
    r.status = Status::Counterexample;
    r.witness = std::move(witness);
}

// Box of G_d(E) when `p` lives in the box of the target of h.
Box h_source_box(const Partition& p, int s) { return output_box(Surgery::HPull, p.box(), s); }
Box v_source_box(const Partition& p, int s) { return output_box(Surgery::VPull, p.box(), s); }

// First subspace of `g` whose key is in exactly one of the two sets,
// after mapping through `transform`.
template <class Keep, class Transform>
std::optional<std::string> first_difference(const GrassmannianEnumerator& g, Keep keep,
                                            Transform transform, const kernels::KeySet& own,
                                            const kernels::KeySet& other, const char* label) {
    for (std::uint64_t i = 0; i < g.size(); ++i) {
        const Subspace p = g.at(i);
        if (!keep(p)) continue;
        const Subspace image = transform(p);
        if (own.count(image.key()) && !other.count(image.key())) {
            return std::string(label) + " " + describe(image);
        }
    }
    return std::nullopt;
}

// Chart matrix number i: the i-th in index order when exhaustive, otherwise a
// reproducible pseudo-random one.
FpMatrix chart_sample(const PrimeField& f, std::size_t rows, std::size_t cols, std::uint64_t i,
                      bool exhaustive, std::uint64_t seed) {
    if (exhaustive) return chart_matrix_at(f, rows, cols, i);
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + i);
    std::uniform_int_distribution<unsigned> entry(0, f.order() - 1);
    FpMatrix a(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) a(r, c) = static_cast<std::uint8_t>(entry(rng));
    return a;
}

struct ChartSweep {
    std::uint64_t count;
    bool exhaustive;
};

ChartSweep plan_chart_sweep(unsigned q, std::size_t rows, std::size_t cols,
                            const OracleOptions& opts) {
    const std::uint64_t total = saturating_pow(q, rows * cols);
    if (total <= opts.budget) return {total, true};
    return {opts.samples, false};
}

bool rows_vanish(const FpMatrix& a, std::size_t first, std::size_t count) {
    for (std::size_t r = first; r < first + count; ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (a(r, c) != 0) return false;
    return true;
}

bool cols_vanish(const FpMatrix& a, std::size_t first, std::size_t count) {
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = first; c < first + count; ++c)
            if (a(r, c) != 0) return false;
    return true;
}

std::string pattern_cells(const std::set<std::pair<int, int>>& cells) {
    std::string out;
    for (const auto& [r, c] : cells) {
        if (!out.empty()) out += ' ';
        out += "(" + std::to_string(r) + "," + std::to_string(c) + ")";
    }
    return out;
}

}  // namespace

std::string to_string(Claim claim) {
    switch (claim) {
        case Claim::Prop1: return "prop1";
        case Claim::Prop2: return "prop2";
        case Claim::Prop3: return "prop3";
        case Claim::Prop4: return "prop4";
        case Claim::TransvH: return "transv-h";
        case Claim::TransvV: return "transv-v";
        case Claim::ChartH: return "chart-h";
        case Claim::ChartV: return "chart-v";
        case Claim::Counts: return "counts";
        case Claim::Visual: return "visual";
    }
    return "?";
}

Claim parse_claim(std::string_view name) {
    for (Claim c : all_claims())
        if (to_string(c) == name) return c;
    throw InvalidArgument("unknown claim '" + std::string(name) + "'");
}

const std::vector<Claim>& all_claims() {
    static const std::vector<Claim> claims = {
        Claim::Prop1,  Claim::Prop2,  Claim::Prop3,  Claim::Prop4,  Claim::TransvH,
        Claim::TransvV, Claim::ChartH, Claim::ChartV, Claim::Counts, Claim::Visual};
    return claims;
}

std::string VerificationReport::record_header() {
    return "# claim\td\tc\ts\tq\tpartition\tstatus\texamined\tlhs\trhs\twitness";
}

std::string VerificationReport::to_record() const {
    std::ostringstream os;
    os << to_string(claim) << '\t' << d << '\t' << c << '\t' << s << '\t' << q << '\t'
       << partition << '\t' << (verified() ? "verified" : "counterexample") << '\t' << examined
       << '\t' << lhs << '\t' << rhs << '\t' << (witness ? one_line(*witness) : "-");
    return os.str();
}

FlagPair make_flags(const PrimeField& f, std::size_t n, std::size_t s, const OracleOptions& opts) {
    if (opts.flags == FlagChoice::Standard) return {flag_L(f, n), flag_L(f, s)};
    return {random_flag(f, n, opts.seed), random_flag(f, s, opts.seed + 1)};
}

VerificationReport check_prop1(const Partition& lambda, int s, unsigned q,
                               const OracleOptions& opts) {
    const Box box = lambda.box();
    const PrimeField f(q);
    const auto n = static_cast<std::size_t>(box.ambient());
    const auto flags = make_flags(f, n, s, opts);
    const FlagSpec D = flag_D(flags.F, flags.T);
    const Partition shifted = h_push(lambda, s);

    const GrassmannianEnumerator source(f, box.d, n, opts.budget);
    const GrassmannianEnumerator target(f, box.d, n + s, opts.budget);

    auto in_lambda = [&](const Subspace& p) { return schubert_membership(p, lambda, flags.F); };
    auto image = [&](const Subspace& p) { return embed_h(p, s); };
    auto in_shifted = [&](const Subspace& p) { return schubert_membership(p, shifted, D); };
    auto same = [](const Subspace& p) { return p; };

    const auto lhs = kernels::collect(opts.exec, source, in_lambda, image);
    const auto rhs = kernels::collect(opts.exec, target, in_shifted, same);

    auto r = make_report(Claim::Prop1, lambda, box.d, box.c, s, q);
    r.examined = source.size() + target.size();
    r.lhs = lhs.size();
    r.rhs = rhs.size();
    if (lhs != rhs) {
        auto w = first_difference(source, in_lambda, image, lhs, rhs, "h(P) not in Omega_{lambda+s}(D.):");
        if (!w) w = first_difference(target, in_shifted, same, rhs, lhs, "Q not in h(Omega_lambda(F.)):");
        fail(r, w.value_or("sets differ"));
    }
    return r;
}

VerificationReport check_prop2(const Partition& mu, int s, unsigned q, const OracleOptions& opts) {
    const Box source_box = h_source_box(mu, s);
    const PrimeField f(q);
    const auto n = static_cast<std::size_t>(source_box.ambient());
    const auto flags = make_flags(f, n, s, opts);
    const FlagSpec B = flag_B(flags.F, flags.T);
    const bool killed = mu.part(1) > source_box.c;
    const std::optional<Partition> restricted =
        killed ? std::nullopt : std::optional<Partition>(Partition(source_box, mu.parts()));

    const GrassmannianEnumerator g(f, source_box.d, n, opts.budget);
    auto in_preimage = [&](std::uint64_t i) {
        return schubert_membership(embed_h(g.at(i), s), mu, B);
    };
    auto in_expected = [&](std::uint64_t i) {
        return restricted && schubert_membership(g.at(i), *restricted, flags.F);
    };

    auto r = make_report(Claim::Prop2, mu, source_box.d, source_box.c, s, q);
    r.examined = g.size();
    r.lhs = kernels::count(opts.exec, g.size(), in_preimage);
    r.rhs = kernels::count(opts.exec, g.size(), in_expected);
    const auto bad = kernels::find_first(opts.exec, g.size(), [&](std::uint64_t i) {
        return in_preimage(i) != in_expected(i);
    });
    if (bad) {
        fail(r, std::string(in_preimage(*bad) ? "P in preimage but not expected: "
                                              : "P expected but not in preimage: ") +
                    describe(g.at(*bad)));
    }
    return r;
}

VerificationReport check_prop3(const Partition& lambda, int s, unsigned q,
                               const OracleOptions& opts) {
    const Box box = lambda.box();
    const PrimeField f(q);
    const auto n = static_cast<std::size_t>(box.ambient());
    const auto flags = make_flags(f, n, s, opts);
    const FlagSpec B = flag_B(flags.F, flags.T);
    const Partition raised = v_push(lambda, s);

    const GrassmannianEnumerator source(f, box.d, n, opts.budget);
    const GrassmannianEnumerator target(f, box.d + s, n + s, opts.budget);

    auto in_lambda = [&](const Subspace& p) { return schubert_membership(p, lambda, flags.F); };
    auto image = [&](const Subspace& p) { return embed_v(p, s); };
    auto in_raised = [&](const Subspace& p) { return schubert_membership(p, raised, B); };
    auto same = [](const Subspace& p) { return p; };

    const auto lhs = kernels::collect(opts.exec, source, in_lambda, image);
    const auto rhs = kernels::collect(opts.exec, target, in_raised, same);

    auto r = make_report(Claim::Prop3, lambda, box.d, box.c, s, q);
    r.examined = source.size() + target.size();
    r.lhs = lhs.size();
    r.rhs = rhs.size();
    if (lhs != rhs) {
        auto w = first_difference(source, in_lambda, image, lhs, rhs, "v(P) not in Omega_{c^s lambda}(B.):");
        if (!w) w = first_difference(target, in_raised, same, rhs, lhs, "Q not in v(Omega_lambda(F.)):");
        fail(r, w.value_or("sets differ"));
    }
    return r;
}

VerificationReport check_prop4(const Partition& mu, int s, unsigned q, const OracleOptions& opts) {
    const Box source_box = v_source_box(mu, s);
    const PrimeField f(q);
    const auto n = static_cast<std::size_t>(source_box.ambient());
    const auto flags = make_flags(f, n, s, opts);
    const FlagSpec D = flag_D(flags.F, flags.T);
    const bool killed = mu.part(source_box.d + 1) >= 1;
    std::optional<Partition> truncated;
    if (!killed) {
        truncated = Partition(source_box, std::vector<int>(mu.parts().begin(),
                                                           mu.parts().begin() + source_box.d));
    }

    const GrassmannianEnumerator g(f, source_box.d, n, opts.budget);
    auto in_preimage = [&](std::uint64_t i) {
        return schubert_membership(embed_v(g.at(i), s), mu, D);
    };
    auto in_expected = [&](std::uint64_t i) {
        return truncated && schubert_membership(g.at(i), *truncated, flags.F);
    };

    auto r = make_report(Claim::Prop4, mu, source_box.d, source_box.c, s, q);
    r.examined = g.size();
    r.lhs = kernels::count(opts.exec, g.size(), in_preimage);
    r.rhs = kernels::count(opts.exec, g.size(), in_expected);
    const auto bad = kernels::find_first(opts.exec, g.size(), [&](std::uint64_t i) {
        return in_preimage(i) != in_expected(i);
    });
    if (bad) {
        fail(r, std::string(in_preimage(*bad) ? "P in preimage but not expected: "
                                              : "P expected but not in preimage: ") +
                    describe(g.at(*bad)));
    }
    return r;
}

ZeroPattern transversality_pattern_h(const Partition& mu, int s) {
    h_source_box(mu, s);
    ZeroPattern embedded(mu.box().c, mu.box().d);
    for (int r = 1; r <= s; ++r)
        for (int j = 1; j <= mu.box().d; ++j) embedded.insert(r, j);
    return embedded.united(zero_pattern(mu));
}

ZeroPattern transversality_pattern_v(const Partition& mu, int s) {
    v_source_box(mu, s);
    const Box box = mu.box();
    ZeroPattern embedded(box.c, box.d);
    for (int r = 1; r <= box.c; ++r)
        for (int j = box.d - s + 1; j <= box.d; ++j) embedded.insert(r, j);
    return embedded.united(zero_pattern(mu));
}

VerificationReport check_transversality_h(const Partition& mu, int s) {
    const Box source_box = h_source_box(mu, s);
    if (mu.part(1) > source_box.c) {
        throw InvalidArgument("transversality for h needs mu_1 <= c=" +
                              std::to_string(source_box.c) + ", got mu_1=" +
                              std::to_string(mu.part(1)));
    }
    ZeroPattern embedded(mu.box().c, mu.box().d);
    for (int r = 1; r <= s; ++r)
        for (int j = 1; j <= mu.box().d; ++j) embedded.insert(r, j);
    const ZeroPattern schubert = zero_pattern(mu);
    const ZeroPattern overlap = embedded.intersected(schubert);
    const ZeroPattern both = embedded.united(schubert);

    auto r = make_report(Claim::TransvH, mu, source_box.d, source_box.c, s, 0);
    r.examined = static_cast<std::uint64_t>(mu.box().area());
    r.lhs = both.free_count();
    r.rhs = static_cast<std::uint64_t>(source_box.area() - weight(mu));
    if (overlap.size() != 0) {
        fail(r, "conditions share cells " + pattern_cells(overlap.entries()));
    } else if (r.lhs != r.rhs) {
        fail(r, "free cells " + std::to_string(r.lhs) + " != cd-|mu| " + std::to_string(r.rhs));
    }
    return r;
}

VerificationReport check_transversality_v(const Partition& mu, int s) {
    const Box source_box = v_source_box(mu, s);
    if (mu.part(source_box.d + 1) != 0) {
        throw InvalidArgument("transversality for v needs mu_{d+1} = 0, got " +
                              std::to_string(mu.part(source_box.d + 1)));
    }
    const Box box = mu.box();
    ZeroPattern embedded(box.c, box.d);
    for (int r = 1; r <= box.c; ++r)
        for (int j = box.d - s + 1; j <= box.d; ++j) embedded.insert(r, j);
    const ZeroPattern schubert = zero_pattern(mu);
    const ZeroPattern overlap = embedded.intersected(schubert);
    const ZeroPattern both = embedded.united(schubert);

    auto r = make_report(Claim::TransvV, mu, source_box.d, source_box.c, s, 0);
    r.examined = static_cast<std::uint64_t>(box.area());
    r.lhs = both.free_count();
    r.rhs = static_cast<std::uint64_t>(source_box.area() - weight(mu));
    if (overlap.size() != 0) {
        fail(r, "conditions share cells " + pattern_cells(overlap.entries()));
    } else if (r.lhs != r.rhs) {
        fail(r, "free cells " + std::to_string(r.lhs) + " != cd-|mu| " + std::to_string(r.rhs));
    }
    return r;
}

VerificationReport check_chart_h(const Partition& mu, int s, unsigned q,
                                 const OracleOptions& opts) {
    const Box source_box = h_source_box(mu, s);
    if (mu.part(1) > source_box.c) {
        throw InvalidArgument("chart lemma for h needs mu_1 <= c");
    }
    const PrimeField f(q);
    const auto n = static_cast<std::size_t>(source_box.ambient());
    const auto flags = make_flags(f, n, s, opts);
    const FlagSpec B = flag_B(flags.F, flags.T);
    const ZeroPattern pattern = zero_pattern(mu);
    const auto rows = static_cast<std::size_t>(mu.box().c);
    const auto cols = static_cast<std::size_t>(mu.box().d);
    const auto sweep = plan_chart_sweep(q, rows, cols, opts);

    // Q = chart point; Q lies in E+0 iff its S coordinates vanish.
    auto in_image = [&](const Subspace& Q) {
        return cols_vanish(Q.basis(), n, static_cast<std::size_t>(s));
    };
    auto sample = [&](std::uint64_t i) {
        return chart_sample(f, rows, cols, i, sweep.exhaustive, opts.seed);
    };
    auto mismatch = [&](std::uint64_t i) {
        const FpMatrix a = sample(i);
        const Subspace Q = chart_point(a, mu, B);
        return in_image(Q) != rows_vanish(a, 0, s) ||
               schubert_membership(Q, mu, B) != vanishes_on(a, pattern);
    };
    auto in_both = [&](std::uint64_t i) {
        const Subspace Q = chart_point(sample(i), mu, B);
        return in_image(Q) && schubert_membership(Q, mu, B);
    };

    auto r = make_report(Claim::ChartH, mu, source_box.d, source_box.c, s, q);
    r.examined = sweep.count;
    r.lhs = kernels::count(opts.exec, sweep.count, in_both);
    if (const auto bad = kernels::find_first(opts.exec, sweep.count, mismatch)) {
        fail(r, "chart matrix A: " + one_line(format_matrix(sample(*bad))));
    } else if (sweep.exhaustive) {
        r.rhs = saturating_pow(q, source_box.area() - weight(mu));
        if (r.lhs != r.rhs) fail(r, "intersection has " + std::to_string(r.lhs) + " chart points");
    }
    return r;
}

VerificationReport check_chart_v(const Partition& mu, int s, unsigned q,
                                 const OracleOptions& opts) {
    const Box source_box = v_source_box(mu, s);
    if (mu.part(source_box.d + 1) != 0) {
        throw InvalidArgument("chart lemma for v needs mu_{d+1} = 0");
    }
    const PrimeField f(q);
    const auto n = static_cast<std::size_t>(source_box.ambient());
    const auto flags = make_flags(f, n, s, opts);
    const FlagSpec D = flag_D(flags.F, flags.T);
    const Subspace S = Subspace::span(f, embed_v(Subspace::zero(f, n), s).basis());
    const ZeroPattern pattern = zero_pattern(mu);
    const auto rows = static_cast<std::size_t>(mu.box().c);
    const auto cols = static_cast<std::size_t>(mu.box().d);
    const auto sweep = plan_chart_sweep(q, rows, cols, opts);

    auto sample = [&](std::uint64_t i) {
        return chart_sample(f, rows, cols, i, sweep.exhaustive, opts.seed);
    };
    auto mismatch = [&](std::uint64_t i) {
        const FpMatrix a = sample(i);
        const Subspace Q = chart_point(a, mu, D);
        return Q.contains(S) != cols_vanish(a, source_box.d, s) ||
               schubert_membership(Q, mu, D) != vanishes_on(a, pattern);
    };
    auto in_both = [&](std::uint64_t i) {
        const Subspace Q = chart_point(sample(i), mu, D);
        return Q.contains(S) && schubert_membership(Q, mu, D);
    };

    auto r = make_report(Claim::ChartV, mu, source_box.d, source_box.c, s, q);
    r.examined = sweep.count;
    r.lhs = kernels::count(opts.exec, sweep.count, in_both);
    if (const auto bad = kernels::find_first(opts.exec, sweep.count, mismatch)) {
        fail(r, "chart matrix A: " + one_line(format_matrix(sample(*bad))));
    } else if (sweep.exhaustive) {
        r.rhs = saturating_pow(q, source_box.area() - weight(mu));
        if (r.lhs != r.rhs) fail(r, "intersection has " + std::to_string(r.lhs) + " chart points");
    }
    return r;
}

std::uint64_t count_schubert_points(const Partition& lambda, const FlagSpec& flag,
                                    const OracleOptions& opts) {
    const Box box = lambda.box();
    const GrassmannianEnumerator g(flag.field(), box.d, box.ambient(), opts.budget);
    if (flag.ambient() != g.ambient()) throw InvalidArgument("flag does not match the box");
    return kernels::count(opts.exec, g.size(), [&](std::uint64_t i) {
        return schubert_membership(g.at(i), lambda, flag);
    });
}

std::uint64_t cell_sum(const Partition& lambda, std::uint64_t q) {
    std::uint64_t total = 0;
    for (const auto& mu : enumerate_partitions(lambda.box())) {
        if (contains(mu, lambda)) total += saturating_pow(q, empty_squares(mu));
    }
    return total;
}

VerificationReport check_counts(const Partition& lambda, unsigned q, const OracleOptions& opts) {
    const Box box = lambda.box();
    const PrimeField f(q);
    const auto n = static_cast<std::size_t>(box.ambient());
    const std::uint64_t standard = count_schubert_points(lambda, flag_L(f, n), opts);
    const std::uint64_t scrambled =
        count_schubert_points(lambda, random_flag(f, n, opts.seed), opts);

    auto r = make_report(Claim::Counts, lambda, box.d, box.c, 0, q);
    r.examined = 2 * gaussian_binomial(n, box.d, q);
    r.lhs = standard;
    r.rhs = cell_sum(lambda, q);
    if (standard != r.rhs) {
        fail(r, "enumerated " + std::to_string(standard) + " != cell sum " + std::to_string(r.rhs));
    } else if (scrambled != standard) {
        fail(r, "flag L. gives " + std::to_string(standard) + ", scrambled flag gives " +
                    std::to_string(scrambled));
    } else if (weight(lambda) == 0 && standard != gaussian_binomial(n, box.d, q)) {
        fail(r, "whole Grassmannian count differs from the Gaussian binomial");
    }
    return r;
}

VerificationReport check_visual_result(const Partition& lambda, unsigned q,
                                       const OracleOptions& opts) {
    const Box box = lambda.box();
    const PrimeField f(q);
    const auto n = static_cast<std::size_t>(box.ambient());
    const FlagSpec F = make_flags(f, n, 0, opts).F;
    const ZeroPattern pattern = zero_pattern(lambda);
    const auto rows = static_cast<std::size_t>(box.c);
    const auto cols = static_cast<std::size_t>(box.d);
    const auto sweep = plan_chart_sweep(q, rows, cols, opts);

    auto sample = [&](std::uint64_t i) {
        return chart_sample(f, rows, cols, i, sweep.exhaustive, opts.seed);
    };
    auto member = [&](std::uint64_t i) {
        return schubert_membership(chart_point(sample(i), lambda, F), lambda, F);
    };

    auto r = make_report(Claim::Visual, lambda, box.d, box.c, 0, q);
    r.examined = sweep.count;
    r.lhs = kernels::count(opts.exec, sweep.count, member);
    const auto bad = kernels::find_first(opts.exec, sweep.count, [&](std::uint64_t i) {
        return member(i) != vanishes_on(sample(i), pattern);
    });
    if (bad) {
        fail(r, "chart matrix A: " + one_line(format_matrix(sample(*bad))));
    } else if (sweep.exhaustive) {
        r.rhs = saturating_pow(q, empty_squares(lambda));
        if (r.lhs != r.rhs) fail(r, "open cell has " + std::to_string(r.lhs) + " chart points");
    }
    return r;
}

std::vector<VerificationReport> run_claim(Claim claim, int d, int c, int s, unsigned q,
                                          const std::optional<std::string>& only,
                                          const OracleOptions& opts) {
    const Box source(d, c);
    const bool needs_s = claim != Claim::Counts && claim != Claim::Visual;
    if (needs_s && s < 1) throw InvalidArgument("claim " + to_string(claim) + " needs s >= 1");

    Box box = source;
    if (claim == Claim::Prop2 || claim == Claim::TransvH || claim == Claim::ChartH) {
        box = Box(d, c + s);
    } else if (claim == Claim::Prop4 || claim == Claim::TransvV || claim == Claim::ChartV) {
        box = Box(d + s, c);
    }

    std::vector<Partition> partitions;
    if (only) {
        partitions.push_back(Partition::parse(box, *only));
    } else {
        for (const auto& p : enumerate_partitions(box)) {
            const bool h_admissible = p.part(1) <= c;
            const bool v_admissible = p.part(d + 1) == 0;
            if ((claim == Claim::TransvH || claim == Claim::ChartH) && !h_admissible) continue;
            if ((claim == Claim::TransvV || claim == Claim::ChartV) && !v_admissible) continue;
            partitions.push_back(p);
        }
    }

    std::vector<VerificationReport> out;
    for (const auto& p : partitions) {
        switch (claim) {
            case Claim::Prop1: out.push_back(check_prop1(p, s, q, opts)); break;
            case Claim::Prop2: out.push_back(check_prop2(p, s, q, opts)); break;
            case Claim::Prop3: out.push_back(check_prop3(p, s, q, opts)); break;
            case Claim::Prop4: out.push_back(check_prop4(p, s, q, opts)); break;
            case Claim::TransvH: out.push_back(check_transversality_h(p, s)); break;
            case Claim::TransvV: out.push_back(check_transversality_v(p, s)); break;
            case Claim::ChartH: out.push_back(check_chart_h(p, s, q, opts)); break;
            case Claim::ChartV: out.push_back(check_chart_v(p, s, q, opts)); break;
            case Claim::Counts: out.push_back(check_counts(p, q, opts)); break;
            case Claim::Visual: out.push_back(check_visual_result(p, q, opts)); break;
        }
    }
    return out;
}

}  // namespace schubert
