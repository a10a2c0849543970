#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "splitdyn/trace.hpp"

using namespace splitdyn;

TEST_CASE("parse / write round trip") {
    std::string text =
        "INIT 6 2 3 99\n"
        "TOGGLE 1 2\n"
        "TOGGLE 3 4\n"
        "SPLITTANCE\n"
        "QUERY\n";
    std::istringstream in(text);
    Trace tr = parse_trace(in);
    REQUIRE(tr.n == 6);
    REQUIRE(tr.k == 2);
    REQUIRE(tr.d == 3);
    REQUIRE(tr.seed == 99);
    REQUIRE(tr.commands.size() == 4);
    std::ostringstream out;
    write_trace(out, tr);
    REQUIRE(out.str() == text);
}

TEST_CASE("parse errors carry line numbers") {
    auto expect_fail = [](const std::string& text, const std::string& prefix) {
        std::istringstream in(text);
        try {
            parse_trace(in);
            FAIL("expected parse error");
        } catch (const std::runtime_error& e) {
            REQUIRE(std::string(e.what()).rfind(prefix, 0) == 0);
        }
    };
    expect_fail("", "line 1");
    expect_fail("TOGGLE 1 2\n", "line 1");
    expect_fail("INIT 4 1 2 7\nTOGGLE 1\n", "line 2");
    expect_fail("INIT 4 1 2 7\nTOGGLE 1 9\n", "line 2");
    expect_fail("INIT 4 1 2 7\nTOGGLE 2 2\n", "line 2");
    expect_fail("INIT 4 1 2 7\nQUERY now\n", "line 2");
    expect_fail("INIT 4 1 2 7\nFROB 1 2\n", "line 2");
}

TEST_CASE("run_trace answers on a known script") {
    std::istringstream in(
        "INIT 4 1 3 5\n"
        "TOGGLE 1 2\n"
        "TOGGLE 3 4\n"
        "SPLITTANCE\n"
        "QUERY\n"
        "TOGGLE 1 3\n"
        "SPLITTANCE\n"
        "QUERY\n");
    Trace tr = parse_trace(in);
    std::string out = run_trace(tr, true);
    // 2K2 has splittance 1 and a one-edge completion; after adding 1-3
    // the graph (P4 plus nothing) is already split
    std::istringstream lines(out);
    std::string l1, l2, l3, l4;
    std::getline(lines, l1);
    std::getline(lines, l2);
    std::getline(lines, l3);
    std::getline(lines, l4);
    REQUIRE(l1 == "1");
    REQUIRE(l2.rfind("YES ", 0) == 0);
    REQUIRE(l3 == "0");
    REQUIRE(l4 == "YES");
}

TEST_CASE("gen is deterministic and byte identical") {
    for (auto mode : {GenMode::Random, GenMode::Adversarial}) {
        Trace a = gen_trace(16, 2, 3, 200, 77, mode);
        Trace b = gen_trace(16, 2, 3, 200, 77, mode);
        std::ostringstream sa, sb;
        write_trace(sa, a);
        write_trace(sb, b);
        REQUIRE(sa.str() == sb.str());
        Trace c = gen_trace(16, 2, 3, 200, 78, mode);
        std::ostringstream sc;
        write_trace(sc, c);
        REQUIRE(sa.str() != sc.str());
    }
    Trace empty = gen_trace(16, 2, 3, 0, 77, GenMode::Random);
    std::ostringstream se;
    write_trace(se, empty);
    REQUIRE(se.str() == "INIT 16 2 3 77\n");
}

TEST_CASE("replay is deterministic") {
    Trace tr = gen_trace(14, 3, 3, 300, 123, GenMode::Adversarial);
    std::string a = run_trace(tr, false);
    std::string b = run_trace(tr, false);
    REQUIRE(a == b);
    REQUIRE(!a.empty());
}

TEST_CASE("adversarial traces cross the threshold repeatedly") {
    Trace tr = gen_trace(24, 3, 3, 500, 9, GenMode::Adversarial);
    DegreeLadder lad(24);
    int toggles = 0, last_above = 0, worst_gap = 0, crossings = 0;
    bool above = false;
    for (const auto& c : tr.commands) {
        if (c.kind != TraceCommand::Toggle) continue;
        ++toggles;
        lad.update(c.u, c.v);
        bool now_above = lad.splittance() > tr.k;
        if (now_above && !above) ++crossings;
        above = now_above;
        if (now_above) {
            worst_gap = std::max(worst_gap, toggles - last_above);
            last_above = toggles;
        }
    }
    worst_gap = std::max(worst_gap, toggles - last_above);
    REQUIRE(worst_gap <= 50);
    REQUIRE(crossings >= 10);
}

TEST_CASE("verify mode counts no failures on honest runs") {
    Trace tr = gen_trace(10, 2, 3, 200, 55, GenMode::Adversarial);
    RunStats st;
    run_trace(tr, true, &st);
    REQUIRE(st.failures == 0);
}

TEST_CASE("bench csv shape") {
    std::string csv = bench_csv({16, 32}, 2, 2, 60, 4);
    std::istringstream lines(csv);
    std::string header;
    std::getline(lines, header);
    REQUIRE(header == "n,mean_update_us,p99_update_us,query_us,failures");
    std::string row;
    int rows = 0;
    while (std::getline(lines, row)) {
        ++rows;
        REQUIRE(std::count(row.begin(), row.end(), ',') == 4);
    }
    REQUIRE(rows == 2);
}
