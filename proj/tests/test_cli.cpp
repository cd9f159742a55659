#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli_runner.hpp"
#include "stick/serialize.hpp"

using namespace stick;

namespace {

std::string golden(const std::string& name, bool strip_comments)
{
    std::ifstream in(std::string(GOLDEN_DIR) + "/" + name);
    REQUIRE(in);
    std::string out, line;
    while (std::getline(in, line))
        if (!strip_comments || line.rfind('#', 0) != 0)
            out += line + "\n";
    return out;
}

}  // namespace

TEST_CASE("basis output matches the golden file")
{
    auto r = cli::run("stickelberger --ell 23 basis");
    CHECK(r.status == 0);
    CHECK(r.out == golden("kummer_basis_23.txt", true));
    CHECK(golden("kummer_basis_23.txt", false).find("# f_4") != std::string::npos);
}

TEST_CASE("worked report matches the golden file")
{
    auto r = cli::run("report --paper");
    CHECK(r.status == 0);
    CHECK(r.out == golden("worked_report.txt", false));
}

TEST_CASE("resgen JSON for l=23")
{
    auto r = cli::run("resgen --ell 23 --json");
    REQUIRE(r.status == 0);
    auto j = Json::parse(r.out);
    CHECK(j["ell"] == 23);
    CHECK(j["h_minus"] == "3");
    CHECK(j["R"] == Json::array({1}));
    REQUIRE(j["verdicts"].size() == 4);
    CHECK(j["verdicts"][2]["reason"]["representatives"] == Json::array({1, 5}));
    CHECK(j["verdicts"][2]["certificate"]["certificate"]["kind"] == "rational_infeasible");
    for (const auto& v : j["verdicts"])
        CHECK(verify_verdict(verdict_from_json(v)));

    auto single = cli::run("resgen --ell 23 --f 11 --json");
    CHECK(single.status == 0);
    CHECK(Json::parse(single.out)["status"] == "NOT_IN_R");
}

TEST_CASE("resgen tsv and human output")
{
    auto tsv = cli::run("resgen --ell 29 --tsv");
    CHECK(tsv.status == 0);
    CHECK(tsv.out.rfind("ell\tf\tstatus\treason\n", 0) == 0);
    CHECK(tsv.out.find("29\t4\tNOT_IN_R\ttheta_not_in_S") != std::string::npos);
    auto human = cli::run("resgen --ell 23");
    CHECK(human.out.find("R = {1}") != std::string::npos);
}

TEST_CASE("exit codes")
{
    CHECK(cli::run("resgen --ell 4").status == 2);
    CHECK(cli::run("resgen --ell 23 --f 3").status == 2);
    CHECK(cli::run("resgen --ell 101").status == 2);
    CHECK(cli::run("resgen --ell 101 --assume-h-plus-one").status == 2);  // not in the table
    CHECK(cli::run("stickelberger --ell 23 member --element '{1,x}'").status == 2);
    CHECK(cli::run("norm-check --ell 23 --a 1/0").status == 2);
    CHECK(cli::run("bogus").status == 2);
    CHECK(cli::run("scan --ell-min 3 --ell-max 101").status == 2);
}

TEST_CASE("membership from the command line")
{
    auto r = cli::run("stickelberger --ell 23 member --element '{1,5}' --json");
    REQUIRE(r.status == 0);
    auto j = Json::parse(r.out);
    CHECK(j["element"] == "{1,5}");
    CHECK(j["result"]["member"] == false);
    CyclotomicModulus m(23);
    CHECK(verify_membership(m, parse_element(m, "{1,5}"), membership_from_json(j["result"])));
    auto n = cli::run("stickelberger --ell 23 member --element N --json");
    CHECK(Json::parse(n.out)["result"]["member"] == true);
}

TEST_CASE("norm-check")
{
    auto neg = cli::run("norm-check --ell 23 --a -1 --json");
    REQUIRE(neg.status == 0);
    CHECK(Json::parse(neg.out)["status"] == "NOT_SOLVABLE");
    auto eq = cli::run("norm-check --ell 23 --a=-4 --json");
    CHECK(Json::parse(eq.out)["status"] == "NOT_SOLVABLE");
    auto ok = cli::run("norm-check --ell 23 --a 1/2048 --json");
    auto j = Json::parse(ok.out);
    CHECK(j["status"] == "SOLVABLE");
    CHECK(j["a"]["den"] == "2048");
    auto u = cli::run("norm-check --ell 29 --a 59 --json");
    CHECK(Json::parse(u.out)["status"] == "UNKNOWN");
}

TEST_CASE("scan is deterministic across worker counts")
{
    auto a = cli::run("scan --ell-min 3 --ell-max 47 --tsv");
    auto b = cli::run("scan --ell-min 3 --ell-max 47 --tsv --parallel --jobs 3");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("23\t11\tNOT_IN_R") != std::string::npos);
    CHECK(cli::run("scan --ell-min 24 --ell-max 28 --tsv").out == "ell\tf\tstatus\treason\n");
}

TEST_CASE("table override through the environment and the option")
{
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "stickel_cli_test";
    fs::create_directories(dir);
    fs::path table = dir / "table.txt";
    {
        // copy the builtin table and pretend h_minus(23) is 1
        std::ofstream out(table);
        for (const auto& [ell, r] : ClassNumberTable::builtin().records())
            out << ell << " 1 " << (ell == 23 ? mpz_class(1) : r.h_minus) << "\n";
    }
    auto env = cli::run("resgen --ell 23 --json", "STICKELBERGER_TABLE='" + table.string() + "'");
    REQUIRE(env.status == 0);
    auto j = Json::parse(env.out);
    CHECK(j["verdicts"][1]["reason"]["kind"] == "trivial_class_group");
    auto opt = cli::run("--table '" + table.string() + "' resgen --ell 23 --json");
    CHECK(Json::parse(opt.out) == j);
    CHECK(cli::run("resgen --ell 23", "STICKELBERGER_TABLE=/nonexistent").status == 2);
    fs::remove_all(dir);
}
