// stickel: residue-degree generation of cyclotomic class groups and norm
// equation solvability over Q(zeta_l).
//
// Exit codes: 0 success, 2 usage or precondition error, 1 a certificate
// failed re-verification.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "stick/class_data.hpp"
#include "stick/error.hpp"
#include "stick/group_ring.hpp"
#include "stick/norm_solver.hpp"
#include "stick/report.hpp"
#include "stick/serialize.hpp"
#include "stick/stickelberger.hpp"

namespace {

using namespace stick;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;

enum class Format { Human, Json, Tsv };

struct FormatFlags {
    bool json = false;
    bool tsv = false;
    std::string format;

    Format resolve() const
    {
        if (format == "json" || json)
            return Format::Json;
        if (format == "tsv" || tsv)
            return Format::Tsv;
        return Format::Human;
    }
};

void add_format_flags(CLI::App* cmd, FormatFlags& flags, bool allow_tsv)
{
    auto* json = cmd->add_flag("--json", flags.json, "JSON output");
    if (allow_tsv) {
        auto* tsv = cmd->add_flag("--tsv", flags.tsv, "tab-separated output");
        json->excludes(tsv);
        cmd->add_option("--format", flags.format, "output format")
            ->check(CLI::IsMember({"human", "json", "tsv"}));
    } else {
        cmd->add_option("--format", flags.format, "output format")->check(CLI::IsMember({"human", "json"}));
    }
}

struct InternalFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ClassNumberTable load_table(const std::string& flag_path)
{
    if (!flag_path.empty())
        return ClassNumberTable::load(flag_path);
    if (const char* env = std::getenv("STICKELBERGER_TABLE"); env && *env)
        return ClassNumberTable::load(env);
    return ClassNumberTable::builtin();
}

void check(const ResidueGenerationVerdict& v)
{
    if (!verify_verdict(v))
        throw InternalFailure("certificate for l=" + std::to_string(v.ell) + ", f=" + std::to_string(v.f)
                              + " failed re-verification");
}

struct ResgenArgs {
    std::int64_t ell = 0;
    std::optional<std::int64_t> f;
    bool assume = false;
    std::size_t stress = 0;
    std::uint64_t seed = 1;
    FormatFlags format;
};

Json table_json(const std::vector<ResidueGenerationVerdict>& table, const ClassNumberRecord& cd)
{
    Json verdicts = Json::array();
    for (const auto& v : table)
        verdicts.push_back(to_json(v));
    RSummary s = summarize(table);
    return Json{{"ell", cd.ell},
                {"h_plus", cd.h_plus.get_str()},
                {"h_minus", cd.h_minus.get_str()},
                {"verdicts", verdicts},
                {"R", s.in_r},
                {"undecided", s.inconclusive}};
}

int run_resgen(const ResgenArgs& args, const ClassNumberTable& table)
{
    CyclotomicModulus m(args.ell);
    VerdictOptions opts{args.assume};
    const ClassNumberRecord& cd = table.at(m.ell());
    const Format fmt = args.format.resolve();

    if (args.f) {
        ResidueGenerationVerdict v = residue_generation_verdict(m, *args.f, cd, opts);
        check(v);
        if (args.stress > 0) {
            StressSummary s = representative_stress(KummerBasis(m), *args.f, args.stress, args.seed);
            std::cerr << "stress: " << s.samples << " random representative sets, " << s.in_s << " in S, "
                      << s.not_in_s << " not in S\n";
        }
        if (fmt == Format::Json)
            std::cout << dump(to_json(v));
        else if (fmt == Format::Tsv)
            std::cout << tsv_header() << tsv_row(v);
        else
            std::cout << "l=" << m.ell() << "  " << render_verdict(v) << "\n";
        return kExitOk;
    }

    auto verdicts = compute_R_table(m, cd, opts);
    for (const auto& v : verdicts)
        check(v);
    if (fmt == Format::Json) {
        std::cout << dump(table_json(verdicts, cd));
    } else if (fmt == Format::Tsv) {
        std::cout << tsv_header();
        for (const auto& v : verdicts)
            std::cout << tsv_row(v);
    } else {
        std::cout << render_table(verdicts, cd);
    }
    return kExitOk;
}

struct ScanArgs {
    std::int64_t ell_min = 3;
    std::int64_t ell_max = 3;
    bool parallel = false;
    unsigned jobs = 0;
    bool assume = false;
    FormatFlags format;
};

int run_scan(const ScanArgs& args, const ClassNumberTable& table)
{
    unsigned jobs = args.jobs;
    if (jobs == 0)
        jobs = args.parallel ? std::max(2u, std::thread::hardware_concurrency()) : 1u;
    auto rows = scan_range(args.ell_min, args.ell_max, table, VerdictOptions{args.assume}, jobs);
    for (const auto& t : rows)
        for (const auto& v : t)
            check(v);

    const Format fmt = args.format.resolve();
    if (fmt == Format::Json) {
        Json all = Json::array();
        for (const auto& t : rows)
            for (const auto& v : t)
                all.push_back(to_json(v));
        std::cout << dump(all);
    } else if (fmt == Format::Tsv) {
        std::cout << tsv_header();
        for (const auto& t : rows)
            for (const auto& v : t)
                std::cout << tsv_row(v);
    } else {
        for (const auto& t : rows)
            std::cout << render_table(t, table.at(t.front().ell)) << "\n";
    }
    return kExitOk;
}

struct StickArgs {
    std::int64_t ell = 0;
    std::string element;
    FormatFlags format;
};

int run_basis(const StickArgs& args)
{
    CyclotomicModulus m(args.ell);
    KummerBasis basis(m);
    if (args.format.resolve() == Format::Json) {
        Json cols = Json::array();
        for (std::size_t j = 0; j < basis.matrix().cols(); ++j) {
            std::string name = j + 1 < basis.matrix().cols() ? "f_" + std::to_string(j + 1) : "N";
            Json support = Json::array();
            for (GroupElement g : basis.column(j).support())
                support.push_back(g.residue);
            cols.push_back(Json{{"name", name}, {"support", support}});
        }
        std::cout << dump(Json{{"ell", m.ell()}, {"rank", basis.rank()}, {"columns", cols}});
    } else {
        std::cout << render_basis(basis);
    }
    return kExitOk;
}

int run_member(const StickArgs& args)
{
    CyclotomicModulus m(args.ell);
    GroupRingElement theta = parse_element(m, args.element);
    KummerBasis basis(m);
    MembershipResult r = basis.member(theta);
    if (!verify_membership(m, theta, r))
        throw InternalFailure("membership certificate failed re-verification");
    if (args.format.resolve() == Format::Json)
        std::cout << dump(Json{{"ell", m.ell()}, {"element", format_element(theta)}, {"result", to_json(r)}});
    else
        std::cout << format_element(theta) << "\n" << describe_membership(m, r) << "\n";
    return kExitOk;
}

struct NormArgs {
    std::int64_t ell = 0;
    std::string a;
    FormatFlags format;
};

int run_norm(const NormArgs& args, const ClassNumberTable& table)
{
    CyclotomicModulus m(args.ell);
    mpq_class a = parse_rational(args.a);
    const ClassNumberRecord& cd = table.at(m.ell());
    std::optional<RSummary> summary;
    if (a > 0 && cd.h > 1 && mpz_probab_prime_p(cd.h.get_mpz_t(), 30)) {
        try {
            require_h_plus_one(m, cd, {});
            auto t = compute_R_table(m, cd);
            for (const auto& v : t)
                check(v);
            summary = summarize(t);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::HPlusUnknown)
                throw;
            std::cerr << "note: " << e.what() << "; residue-generation rule disabled\n";
        }
    }
    NormVerdict v = norm_solvable(m, a, cd, summary);
    if (args.format.resolve() == Format::Json)
        std::cout << dump(to_json(v));
    else
        std::cout << render_norm(v);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Residue-degree generation of cyclotomic class groups and norm equations over Q(zeta_l)"};
    app.require_subcommand(1);
    std::string table_path;
    app.add_option("--table", table_path, "class number table (overrides STICKELBERGER_TABLE)");

    ResgenArgs resgen;
    auto* cmd_resgen = app.add_subcommand("resgen", "decide which residue degrees generate the class group");
    cmd_resgen->add_option("--ell", resgen.ell, "odd prime conductor")->required();
    cmd_resgen->add_option("--f", resgen.f, "single residue degree (default: every divisor of l-1)");
    cmd_resgen->add_flag("--assume-h-plus-one", resgen.assume, "assume h_l^+ = 1 when it is not known");
    cmd_resgen->add_option("--stress", resgen.stress, "also test N random representative sets (needs --f)");
    cmd_resgen->add_option("--seed", resgen.seed, "seed for --stress");
    add_format_flags(cmd_resgen, resgen.format, true);

    ScanArgs scan;
    auto* cmd_scan = app.add_subcommand("scan", "residue-generation tables for a range of conductors");
    cmd_scan->add_option("--ell-min", scan.ell_min, "smallest conductor")->required();
    cmd_scan->add_option("--ell-max", scan.ell_max, "largest conductor")->required();
    cmd_scan->add_flag("--parallel", scan.parallel, "process conductors on a worker pool");
    cmd_scan->add_option("--jobs", scan.jobs, "number of workers (implies --parallel when > 1)");
    cmd_scan->add_flag("--assume-h-plus-one", scan.assume, "assume h_l^+ = 1 when it is not known");
    add_format_flags(cmd_scan, scan.format, true);

    StickArgs stick_args;
    auto* cmd_stick = app.add_subcommand("stickelberger", "Kummer basis and membership in the Stickelberger ideal");
    cmd_stick->add_option("--ell", stick_args.ell, "odd prime conductor")->required();
    cmd_stick->require_subcommand(1);
    auto* cmd_basis = cmd_stick->add_subcommand("basis", "print f_1, ..., f_{(l-1)/2} and N");
    add_format_flags(cmd_basis, stick_args.format, false);
    auto* cmd_member = cmd_stick->add_subcommand("member", "decide membership of an element in S");
    cmd_member->add_option("--element", stick_args.element, "\"{1,5}\", \"1*s1+1*s5\" or \"N\"")->required();
    add_format_flags(cmd_member, stick_args.format, false);

    NormArgs norm;
    auto* cmd_norm = app.add_subcommand("norm-check", "decide solvability of |N(x)| = a");
    cmd_norm->add_option("--ell", norm.ell, "odd prime conductor")->required();
    cmd_norm->add_option("--a", norm.a, "rational right-hand side, e.g. 2048, -1, 1/2048")->required();
    add_format_flags(cmd_norm, norm.format, false);

    bool paper = false;
    auto* cmd_report = app.add_subcommand("report", "worked l=23 and l=29 computations");
    cmd_report->add_flag("--paper", paper, "reproduce the l=23 / l=29 worked example")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cmd_stick->parsed()) {
            if (cmd_basis->parsed())
                return run_basis(stick_args);
            return run_member(stick_args);
        }
        ClassNumberTable table = load_table(table_path);
        if (cmd_resgen->parsed()) {
            if (resgen.stress > 0 && !resgen.f)
                throw Error(ErrorCode::InvalidArgument, "--stress needs --f");
            return run_resgen(resgen, table);
        }
        if (cmd_scan->parsed())
            return run_scan(scan, table);
        if (cmd_norm->parsed())
            return run_norm(norm, table);
        std::cout << worked_example_report(table);
        return kExitOk;
    } catch (const InternalFailure& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const Error& e) {
        if (e.code() == ErrorCode::InternalInvariant) {
            std::cerr << "internal error: " << e.what() << "\n";
            return kExitInternal;
        }
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
