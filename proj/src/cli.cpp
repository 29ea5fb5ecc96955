#include "schubert/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>

#include "schubert/charts.hpp"
#include "schubert/chow.hpp"
#include "schubert/verify.hpp"

namespace schubert::cli {

namespace {

enum class Format { Text, Machine };

Format parse_format(const std::string& name) {
    if (name == "text") return Format::Text;
    if (name == "machine") return Format::Machine;
    throw InvalidArgument("unknown format '" + name + "' (expected text or machine)");
}

void print_diagram(std::ostream& out, const Partition& p) {
    out << render(p);
    out << "weight " << weight(p) << ", empty squares " << empty_squares(p) << '\n';
}

void print_terms(std::ostream& out, const CycleClass& x) {
    for (const auto& [p, k] : x.terms()) {
        out << CycleClass(p, k).to_string() << '\n' << render(p);
    }
}

int cmd_diagram(std::ostream& out, const std::string& box_text, const std::string& parts,
                Format format) {
    const Partition p = Partition::parse(Box::parse(box_text), parts);
    if (format == Format::Machine) {
        out << render(p);
    } else {
        print_diagram(out, p);
    }
    return kExitOk;
}

int cmd_map(std::ostream& out, const std::string& kind_text, const std::string& box_text, int s,
            const std::string& expression, Format format) {
    const Surgery kind = parse_surgery(kind_text);
    const CycleClass before = CycleClass::parse(expression, Box::parse(box_text));
    const CycleClass after = apply_linear(kind, s, before);
    out << after.to_string() << '\n';
    if (format == Format::Text) {
        out << "\n" << to_string(kind) << " with s=" << s << "\nbefore:\n";
        print_terms(out, before);
        out << "after:\n";
        if (after.is_zero()) out << "0\n";
        print_terms(out, after);
    }
    return kExitOk;
}

int cmd_chart(std::ostream& out, const std::string& box_text, const std::string& parts) {
    const Partition p = Partition::parse(Box::parse(box_text), parts);
    const auto walk = insertion_walk(p);
    out << "partition " << p.to_string() << " in box " << p.box().to_string() << '\n';
    out << "identity rows:";
    for (int row : walk.identity_rows) out << ' ' << row;
    out << "\nwalk: " << walk.steps() << '\n';
    out << "rotated diagram (" << p.box().c << " rows, " << p.box().d << " columns):\n"
        << render_rotated(p);

    const auto ma = symbolic_MA(p);
    std::size_t width = 1;
    for (const auto& row : ma)
        for (const auto& cell : row) width = std::max(width, cell.size());
    out << "M_A:\n";
    for (const auto& row : ma) {
        out << '[';
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out << ' ';
            out << std::setw(static_cast<int>(width)) << row[j];
        }
        out << "]\n";
    }
    const ZeroPattern pattern = zero_pattern(p);
    out << "zero pattern ('0' forced zero, '.' free):\n" << pattern.to_grid();
    out << "forced zeros " << pattern.size() << ", free entries " << pattern.free_count() << '\n';
    return kExitOk;
}

struct VerifyArgs {
    int d = 1;
    int c = 1;
    int s = 1;
    unsigned q = 2;
    std::string claim = "all";
    std::uint64_t budget = kDefaultBudget;
    std::string partition;
    std::string flags = "standard";
    std::uint64_t seed = 1;
    bool serial = false;
    std::string out_path;
    std::string format = "text";
};

int cmd_verify(std::ostream& out, const VerifyArgs& args) {
    OracleOptions opts;
    opts.budget = args.budget;
    opts.exec = args.serial ? Exec::Serial : Exec::Parallel;
    opts.seed = args.seed;
    if (args.flags == "standard") {
        opts.flags = FlagChoice::Standard;
    } else if (args.flags == "random") {
        opts.flags = FlagChoice::Random;
    } else {
        throw InvalidArgument("unknown flag choice '" + args.flags + "'");
    }
    const Format format = parse_format(args.format);

    std::vector<Claim> claims;
    if (args.claim == "all") {
        claims = all_claims();
    } else {
        claims.push_back(parse_claim(args.claim));
    }
    std::optional<std::string> only;
    if (!args.partition.empty()) only = args.partition;

    std::vector<VerificationReport> reports;
    for (Claim claim : claims) {
        auto batch = run_claim(claim, args.d, args.c, args.s, args.q, only, opts);
        reports.insert(reports.end(), batch.begin(), batch.end());
    }

    std::size_t failures = 0;
    if (format == Format::Machine) {
        out << VerificationReport::record_header() << '\n';
        for (const auto& r : reports) out << r.to_record() << '\n';
    } else {
        out << std::left << std::setw(10) << "claim" << std::setw(22) << "params"
            << std::setw(16) << "status" << std::setw(10) << "examined" << std::setw(8) << "lhs"
            << "rhs\n";
    }
    for (const auto& r : reports) {
        if (!r.verified()) ++failures;
        if (format == Format::Machine) continue;
        std::string params = "d=" + std::to_string(r.d) + " c=" + std::to_string(r.c);
        if (r.s) params += " s=" + std::to_string(r.s);
        if (r.q) params += " q=" + std::to_string(r.q);
        out << std::left << std::setw(10) << to_string(r.claim) << std::setw(22)
            << (params + " [" + r.partition + "]") << std::setw(16)
            << (r.verified() ? "verified" : "COUNTEREXAMPLE") << std::setw(10) << r.examined
            << std::setw(8) << r.lhs << r.rhs << '\n';
        if (r.witness) out << "  witness: " << *r.witness << '\n';
    }
    if (format == Format::Text) {
        out << reports.size() - failures << " of " << reports.size() << " checks verified\n";
    }

    if (!args.out_path.empty()) {
        std::ofstream file(args.out_path);
        if (!file) throw InvalidArgument("cannot write report file " + args.out_path);
        file << VerificationReport::record_header() << '\n';
        for (const auto& r : reports) file << r.to_record() << '\n';
    }
    return failures ? kExitCounterexample : kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Schubert classes of Grassmannian embeddings as Young diagram surgery"};
    app.require_subcommand(1);

    std::string box_text;
    std::string parts;
    std::string format = "text";

    auto* diagram = app.add_subcommand("diagram", "Render the Young diagram of a partition");
    diagram->add_option("--box", box_text, "Box as dxc, e.g. 4x7")->required();
    diagram->add_option("--p", parts, "Parts, e.g. 5,2,1")->required();
    diagram->add_option("--format", format, "text or machine");

    std::string kind;
    int s = 1;
    std::string expression;
    auto* map = app.add_subcommand("map", "Apply h_*, h^*, v_* or v^* to a class");
    map->add_option("--kind", kind, "hstar-push, hstar-pull, vstar-push or vstar-pull")->required();
    map->add_option("--box", box_text, "Box of the input class")->required();
    map->add_option("--s", s, "Dimension of S")->required();
    map->add_option("expression", expression, "Class, e.g. \"2*sigma[1,0] + sigma[1,1]\"")
        ->required();
    map->add_option("--format", format, "text or machine");

    auto* chart = app.add_subcommand("chart", "Print the insertion walk, M_A and zero pattern");
    chart->add_option("--box", box_text, "Box as dxc")->required();
    chart->add_option("--p", parts, "Parts, e.g. 5,3,2")->required();

    VerifyArgs vargs;
    auto* verify = app.add_subcommand("verify", "Run the finite-field oracle");
    verify->add_option("--d", vargs.d, "Subspace dimension of the source Grassmannian")->required();
    verify->add_option("--c", vargs.c, "Codimension of the source Grassmannian")->required();
    verify->add_option("--s", vargs.s, "Dimension of S");
    verify->add_option("--q", vargs.q, "Field order (prime)");
    verify->add_option("--claim", vargs.claim,
                       "prop1|prop2|prop3|prop4|transv-h|transv-v|chart-h|chart-v|counts|visual|all");
    verify->add_option("--budget", vargs.budget, "Largest enumeration allowed");
    verify->add_option("--p", vargs.partition, "Only this partition (in the claim's box)");
    verify->add_option("--flags", vargs.flags, "standard or random");
    verify->add_option("--seed", vargs.seed, "Seed for random flags and samples");
    verify->add_flag("--serial", vargs.serial, "Use the serial reference kernels");
    verify->add_option("--out", vargs.out_path, "Write tab-separated records here");
    verify->add_option("--format", vargs.format, "text or machine");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (diagram->parsed()) return cmd_diagram(out, box_text, parts, parse_format(format));
        if (map->parsed()) return cmd_map(out, kind, box_text, s, expression, parse_format(format));
        if (chart->parsed()) return cmd_chart(out, box_text, parts);
        if (verify->parsed()) return cmd_verify(out, vargs);
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace schubert::cli
