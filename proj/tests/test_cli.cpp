// Integration tests running the installed CLI binary; the path arrives via
// the PRETZELPOLY_CLI environment variable set by ctest.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "pretzelpoly/bracket.hpp"

namespace {

struct CmdResult {
    int exit_code;
    std::string out;
};

CmdResult run_cli(const std::string& args) {
    const char* bin = std::getenv("PRETZELPOLY_CLI");
    REQUIRE_MESSAGE(bin != nullptr, "PRETZELPOLY_CLI must point at the CLI binary");
    const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
        out.append(buf, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("compute golden values") {
    const auto bracket = run_cli("compute bracket --pretzel 1,1,1 --method statesum");
    CHECK(bracket.exit_code == 0);
    CHECK(bracket.out == "A^7 - A^3 - A^-5\n");

    const auto conway = run_cli("compute conway --pretzel 1,1,2");
    CHECK(conway.exit_code == 0);
    CHECK(conway.out == "1 - z^2\n");
}

TEST_CASE("compute latex format") {
    const auto r = run_cli("compute bracket --pretzel 1,1,1 --method tangle --format latex");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "A^{7} - A^{3} - A^{-5}\n");
}

TEST_CASE("usage and spec errors exit 2") {
    CHECK(run_cli("compute bracket --pretzel 1,1,0").exit_code == 2);
    CHECK(run_cli("compute bracket --pretzel nonsense").exit_code == 2);
    CHECK(run_cli("compute bracket --pretzel 1,1,1 --method bogus").exit_code == 2);
    CHECK(run_cli("compute conway --pretzel 1,1,3 --method statesum").exit_code == 2);
    CHECK(run_cli("compute bracket --pretzel 1,1,3 --method skein").exit_code == 2);
    CHECK(run_cli("compute").exit_code == 2);
}

TEST_CASE("method precondition violations exit 3") {
    CHECK(run_cli("compute bracket --pretzel 2,3 --method closed").exit_code == 3);
    CHECK(run_cli("compute bracket --pretzel 1,1,-4 --method closed").exit_code == 3);
    CHECK(run_cli("compute conway --pretzel 2,3,2").exit_code == 3);
}

TEST_CASE("budget errors exit 4") {
    const auto r = run_cli("compute bracket --pretzel 4,4,4,4 --method statesum --max-crossings 10");
    CHECK(r.exit_code == 4);
}

TEST_CASE("closed method on P(1,1,1) falls back to the state sum") {
    const auto r = run_cli("compute bracket --pretzel 1,1,1 --method closed");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "A^7 - A^3 - A^-5\n");
}

TEST_CASE("every permitted method yields the identical polynomial") {
    const auto statesum = run_cli("compute bracket --pretzel 1,1,4 --method statesum");
    for (const char* method : {"tangle", "closed", "auto"}) {
        const auto r = run_cli(std::string("compute bracket --pretzel 1,1,4 --method ") + method);
        CHECK(r.exit_code == 0);
        CHECK(r.out == statesum.out);
    }
    const auto closed = run_cli("compute conway --pretzel 1,1,-5 --method closed");
    const auto skein = run_cli("compute conway --pretzel 1,1,-5 --method skein");
    CHECK(closed.out == skein.out);
    CHECK(closed.out == "1 - 2z^2\n");
}

TEST_CASE("json output round-trips byte-identically") {
    const auto r = run_cli("compute bracket --pretzel 1,1,1 --method statesum --format json");
    CHECK(r.exit_code == 0);
    REQUIRE(!r.out.empty());
    const std::string line = r.out.substr(0, r.out.size() - 1);  // drop trailing newline

    const auto rec = nlohmann::ordered_json::parse(line);
    CHECK(rec.dump() == line);
    CHECK(rec["spec"] == "1,1,1");
    CHECK(rec["invariant"] == "bracket");
    CHECK(rec["method"] == "statesum");
    CHECK(rec["text"] == "A^7 - A^3 - A^-5");
    CHECK(rec["state_count"] == 8);
    CHECK(rec["polynomial"]["variable"] == "A");
    CHECK(rec["polynomial"]["terms"][0]["exp"] == 7);
    CHECK(rec["polynomial"]["terms"][0]["coeff"] == "1");
    CHECK(rec["elapsed_ms"].is_number());

    // the polynomial sub-object matches the library renderer byte for byte
    CHECK(rec["polynomial"].dump() ==
          pretzel::to_json(pretzel::bracket_statesum(pretzel::PretzelSpec{{1, 1, 1}}).polynomial));
}

TEST_CASE("conway table over p11n") {
    const auto r = run_cli("table conway --family p11n --range 1..4 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "n,auto\n1,1 + z^2\n2,1 - z^2\n3,1 + 2z^2\n4,1 - 2z^2\n");

    CHECK(run_cli("table conway --family p11n --range 0..0").exit_code == 2);
    CHECK(run_cli("table conway --family p11n --range 4..1").exit_code == 2);
    CHECK(run_cli("table conway --family p1m_n --m 3 --range 1..4").exit_code == 2);
}

TEST_CASE("bracket table matches the state sum") {
    const auto r = run_cli("table bracket --family p11n --range 2..3 --format csv");
    CHECK(r.exit_code == 0);
    std::string expected = "n,auto\n";
    for (int n = 2; n <= 3; ++n)
        expected += std::to_string(n) + "," +
                    pretzel::to_text(pretzel::bracket_statesum(pretzel::PretzelSpec{{1, 1, n}})
                                         .polynomial) +
                    "\n";
    CHECK(r.out == expected);
}

TEST_CASE("general-family table") {
    const auto r = run_cli("table bracket --family p1m_n --m 3 --range 2..2 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "n,auto\n2," +
                       pretzel::to_text(pretzel::bracket_closed_general(3, 2).polynomial) + "\n");
    CHECK(run_cli("table bracket --family p1m_n --range 2..2").exit_code == 2);
}

TEST_CASE("table with several method columns") {
    const auto r = run_cli(
        "table bracket --family p11n --range 2..4 --methods closed,tangle,statesum --format csv");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "n,closed,tangle,statesum"));
    for (int n = 2; n <= 4; ++n) {
        const auto text =
            pretzel::to_text(pretzel::bracket_closed_p11n(n).polynomial);
        CHECK(contains(r.out, std::to_string(n) + "," + text + "," + text + "," + text));
    }
}

TEST_CASE("verify runs clean within a budget") {
    const auto r = run_cli("verify --max-crossings 12");
    CHECK(r.exit_code == 0);
    for (const char* name : {"lemma44", "lemma47", "closed-p11n", "closed-general", "tangle",
                             "mirror", "rotation", "conway"})
        CHECK(contains(r.out, std::string(name) + ":"));
    CHECK(!contains(r.out, "FAIL"));
    CHECK(contains(r.out, "verify: 8/8 checks passed"));
}

TEST_CASE("verify reports skips under a tight budget without failing") {
    const auto r = run_cli("verify --max-crossings 4 --only closed-p11n");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "skipped=12"));  // n = 3..14 all over a 4-crossing budget
    CHECK(contains(r.out, "PASS"));
}

TEST_CASE("verify check filter") {
    const auto r = run_cli("verify --only lemma44 --max-crossings 12");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "lemma44:"));
    CHECK(!contains(r.out, "tangle:"));
    CHECK(contains(r.out, "verify: 1/1 checks passed"));

    CHECK(run_cli("verify --only bogus").exit_code == 2);
}
