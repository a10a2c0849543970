#ifndef SPLITDYN_TRACE_HPP
#define SPLITDYN_TRACE_HPP

#include <chrono>
#include <cstdint>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "splitdyn/completion.hpp"
#include "splitdyn/degree_ladder.hpp"
#include "splitdyn/oracle.hpp"

namespace splitdyn {

struct TraceCommand {
    enum Kind { Toggle, Query, Splittance } kind = Toggle;
    Vertex u = 0, v = 0;
};

struct Trace {
    Vertex n = 0;
    int k = 0;
    int d = 0;
    std::uint64_t seed = 0;
    std::vector<TraceCommand> commands;
};

// Line-oriented ASCII: "INIT <n> <k> <d> <seed>" then one command per
// line: "TOGGLE <u> <v>", "QUERY", "SPLITTANCE".
inline Trace parse_trace(std::istream& in) {
    Trace tr;
    std::string line;
    int lineno = 0;
    bool have_init = false;
    auto fail = [&](const std::string& msg) {
        throw std::runtime_error("line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        if (!have_init) {
            if (word != "INIT") fail("expected INIT header");
            if (!(ls >> tr.n >> tr.k >> tr.d >> tr.seed)) fail("malformed INIT");
            have_init = true;
            continue;
        }
        TraceCommand cmd;
        if (word == "TOGGLE") {
            cmd.kind = TraceCommand::Toggle;
            if (!(ls >> cmd.u >> cmd.v)) fail("malformed TOGGLE");
            if (cmd.u < 1 || cmd.u > tr.n || cmd.v < 1 || cmd.v > tr.n ||
                cmd.u == cmd.v)
                fail("vertex out of range");
        } else if (word == "QUERY") {
            cmd.kind = TraceCommand::Query;
        } else if (word == "SPLITTANCE") {
            cmd.kind = TraceCommand::Splittance;
        } else {
            fail("unknown command '" + word + "'");
        }
        std::string rest;
        if (ls >> rest) fail("trailing tokens");
        tr.commands.push_back(cmd);
    }
    if (!have_init) {
        lineno = 1;
        fail("empty trace");
    }
    return tr;
}

inline void write_trace(std::ostream& out, const Trace& tr) {
    out << "INIT " << tr.n << ' ' << tr.k << ' ' << tr.d << ' ' << tr.seed << '\n';
    for (const auto& c : tr.commands) {
        switch (c.kind) {
        case TraceCommand::Toggle:
            out << "TOGGLE " << c.u << ' ' << c.v << '\n';
            break;
        case TraceCommand::Query:
            out << "QUERY\n";
            break;
        case TraceCommand::Splittance:
            out << "SPLITTANCE\n";
            break;
        }
    }
}

enum class GenMode { Random, Adversarial };

// Random mode toggles uniform pairs. Adversarial mode tracks splittance
// and alternates between piling edges into a small vertex pool (driving
// splittance over k) and deleting present edges (driving it back), so the
// wrapper's queue-and-flush path is crossed constantly.
inline Trace gen_trace(Vertex n, int k, int d, int steps, std::uint64_t seed,
                       GenMode mode) {
    Trace tr;
    tr.n = n;
    tr.k = k;
    tr.d = d;
    tr.seed = seed;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(1, n);
    if (mode == GenMode::Random) {
        for (int t = 0; t < steps; ++t) {
            Vertex u = pick(rng), v = pick(rng);
            while (v == u) v = pick(rng);
            tr.commands.push_back({TraceCommand::Toggle, u, v});
            if (t % 10 == 9) tr.commands.push_back({TraceCommand::Splittance, 0, 0});
            if (t % 25 == 24) tr.commands.push_back({TraceCommand::Query, 0, 0});
        }
        return tr;
    }
    DegreeLadder lad(n);
    std::vector<std::pair<Vertex, Vertex>> present;
    int pool = std::min<int>(n, 2 * k + 6);
    std::uniform_int_distribution<int> pool_pick(1, pool);
    for (int t = 0; t < steps; ++t) {
        Vertex u, v;
        if (lad.splittance() > k && !present.empty()) {
            auto e = present[rng() % present.size()];
            u = e.first;
            v = e.second;
        } else {
            u = pool_pick(rng);
            v = pool_pick(rng);
            while (v == u) v = pool_pick(rng);
        }
        auto ce = canonical_edge(u, v);
        bool now = lad.graph().has_edge(ce.first, ce.second);
        lad.update(ce.first, ce.second);
        if (now)
            present.erase(std::find(present.begin(), present.end(), ce));
        else
            present.push_back(ce);
        tr.commands.push_back({TraceCommand::Toggle, ce.first, ce.second});
        if (t % 7 == 6) tr.commands.push_back({TraceCommand::Splittance, 0, 0});
        if (t % 20 == 19) tr.commands.push_back({TraceCommand::Query, 0, 0});
    }
    return tr;
}

struct RunStats {
    std::int64_t failures = 0; // sampling failures + verify mismatches
};

// Replays a trace; one output line per QUERY/SPLITTANCE. With verify set
// every YES witness is applied and checked, and (at oracle scale) every
// decision is compared against the brute-force search.
inline std::string run_trace(const Trace& tr, bool verify, RunStats* stats = nullptr) {
    DynamicSplitGraph w(tr.n, tr.k, tr.d, tr.seed);
    std::ostringstream out;
    RunStats local;
    RunStats& st = stats ? *stats : local;
    for (const auto& c : tr.commands) {
        switch (c.kind) {
        case TraceCommand::Toggle:
            w.update(c.u, c.v);
            break;
        case TraceCommand::Splittance:
            out << w.splittance() << '\n';
            break;
        case TraceCommand::Query: {
            CompletionResult r;
            try {
                r = query_completion(w);
            } catch (const SamplingFailed&) {
                ++st.failures;
                out << "NO\n";
                break;
            }
            if (r.yes) {
                out << "YES";
                for (auto [a, b] : r.witness) out << ' ' << a << '-' << b;
                out << '\n';
            } else {
                out << "NO\n";
            }
            if (verify) {
                if (r.yes) {
                    Graph h = w.graph();
                    for (auto [a, b] : r.witness) h.toggle_edge(a, b);
                    if (h.size() <= 20 && oracle::brute_splittance(h) != 0)
                        ++st.failures;
                } else if (tr.n <= 20 && tr.k <= 5) {
                    if (oracle::brute_completion(w.graph(), tr.k).yes) ++st.failures;
                }
            }
            break;
        }
        }
    }
    return out.str();
}

struct BenchRow {
    Vertex n = 0;
    double mean_update_us = 0.0;
    double p99_update_us = 0.0;
    double query_us = 0.0;
    std::int64_t failures = 0;
};

inline BenchRow bench_one(Vertex n, int k, int d, int steps, std::uint64_t seed) {
    Trace tr = gen_trace(n, k, d, steps, seed, GenMode::Random);
    DynamicSplitGraph w(n, k, d, seed);
    BenchRow row;
    row.n = n;
    std::vector<double> upd;
    upd.reserve(steps);
    using clock = std::chrono::steady_clock;
    double query_total = 0.0;
    int queries = 0;
    for (const auto& c : tr.commands) {
        try {
            if (c.kind == TraceCommand::Toggle) {
                auto t0 = clock::now();
                w.update(c.u, c.v);
                auto t1 = clock::now();
                upd.push_back(std::chrono::duration<double, std::micro>(t1 - t0).count());
            } else if (c.kind == TraceCommand::Query) {
                auto t0 = clock::now();
                (void)query_completion(w);
                auto t1 = clock::now();
                query_total +=
                    std::chrono::duration<double, std::micro>(t1 - t0).count();
                ++queries;
            }
        } catch (const SamplingFailed&) {
            ++row.failures;
        }
    }
    double sum = 0.0;
    for (double x : upd) sum += x;
    row.mean_update_us = upd.empty() ? 0.0 : sum / upd.size();
    std::sort(upd.begin(), upd.end());
    if (!upd.empty())
        row.p99_update_us = upd[std::min(upd.size() - 1,
                                         static_cast<std::size_t>(upd.size() * 99 / 100))];
    row.query_us = queries ? query_total / queries : 0.0;
    return row;
}

inline std::string bench_csv(const std::vector<Vertex>& ns, int k, int d, int steps,
                             std::uint64_t seed) {
    std::ostringstream out;
    out << "n,mean_update_us,p99_update_us,query_us,failures\n";
    for (Vertex n : ns) {
        BenchRow r = bench_one(n, k, d, steps, seed);
        out << r.n << ',' << r.mean_update_us << ',' << r.p99_update_us << ','
            << r.query_us << ',' << r.failures << '\n';
    }
    return out.str();
}

} // namespace splitdyn

#endif
