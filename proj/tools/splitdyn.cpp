#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "splitdyn/trace.hpp"

using namespace splitdyn;

namespace {

int cmd_run(const std::string& trace_path, bool verify) {
    Trace tr;
    try {
        if (trace_path.empty() || trace_path == "-") {
            tr = parse_trace(std::cin);
        } else {
            std::ifstream in(trace_path);
            if (!in) {
                std::cerr << "error: cannot open " << trace_path << "\n";
                return 2;
            }
            tr = parse_trace(in);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    RunStats st;
    std::cout << run_trace(tr, verify, &st);
    if (verify && st.failures > 0) {
        std::cerr << "verify: " << st.failures << " failures\n";
        return 1;
    }
    return 0;
}

int cmd_gen(int n, int k, int d, int steps, std::uint64_t seed,
            const std::string& mode, const std::string& out_path) {
    GenMode m;
    if (mode == "random")
        m = GenMode::Random;
    else if (mode == "adversarial")
        m = GenMode::Adversarial;
    else {
        std::cerr << "error: unknown mode '" << mode << "'\n";
        return 2;
    }
    Trace tr = gen_trace(n, k, d, steps, seed, m);
    if (out_path.empty() || out_path == "-") {
        write_trace(std::cout, tr);
    } else {
        std::ofstream out(out_path);
        write_trace(out, tr);
    }
    return 0;
}

int cmd_bench(std::vector<int> ns, int k, int d, int steps, std::uint64_t seed,
              const std::string& csv_out) {
    if (ns.empty()) ns = {64, 256, 1024};
    std::string csv = bench_csv({ns.begin(), ns.end()}, k, d, steps, seed);
    if (csv_out.empty() || csv_out == "-") {
        std::cout << csv;
    } else {
        std::ofstream out(csv_out);
        out << csv;
    }
    return 0;
}

// Small randomized invariant suites, one per module; each returns the
// number of violated checks.

int selftest_dsplit(int trials, std::uint64_t seed) {
    int bad = 0;
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        int n = 4 + static_cast<int>(rng() % 9);
        DegreeLadder lad(n);
        for (int s = 0; s < 40; ++s) {
            Vertex u = 1 + static_cast<Vertex>(rng() % n);
            Vertex v = 1 + static_cast<Vertex>(rng() % n);
            if (u == v) continue;
            lad.update(u, v);
            if (lad.splittance() != oracle::brute_splittance(lad.graph())) ++bad;
        }
    }
    return bad;
}

int selftest_lists(int trials, std::uint64_t seed) {
    int bad = 0;
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        int n = 30, k = 3;
        DynamicSplitGraph w(n, k, 3, rng());
        for (int s = 0; s < 120; ++s) {
            Vertex u = 1 + static_cast<Vertex>(rng() % n);
            Vertex v = 1 + static_cast<Vertex>(rng() % n);
            if (u == v) continue;
            w.update(u, v);
            if (w.splittance() > k) continue;
            EdgeList nea, eb;
            const Graph& g = w.graph();
            for (Vertex x = 1; x <= n; ++x)
                for (Vertex y = x + 1; y <= n; ++y) {
                    bool e = g.has_edge(x, y);
                    if (w.in_a(x) && w.in_a(y) && !e) nea.push_back({x, y});
                    if (!w.in_a(x) && !w.in_a(y) && e) eb.push_back({x, y});
                }
            if (w.list_non_edges_a() != nea) ++bad;
            if (w.list_edges_b() != eb) ++bad;
        }
    }
    return bad;
}

int selftest_sampler(int trials, std::uint64_t seed) {
    int bad = 0;
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        int n = 40, k = 2;
        DynamicSplitGraph w(n, k, 3, rng());
        for (Vertex v = 2; v <= 8; ++v)
            for (Vertex u = 1; u < v; ++u) w.update(u, v);
        if (w.splittance() > k) continue;
        for (Vertex q = 1; q <= n; ++q) {
            if (!w.in_a(q)) continue;
            std::vector<Vertex> got;
            try {
                got = w.sample_edges(q);
            } catch (const SamplingFailed&) {
                ++bad;
                continue;
            }
            std::vector<Vertex> truth;
            for (Vertex y = 1; y <= n; ++y)
                if (!w.in_a(y) && w.graph().has_edge(q, y)) truth.push_back(y);
            std::size_t want = std::min<std::size_t>(truth.size(), 10 * k);
            if (got.size() < want && got.size() < truth.size()) ++bad;
            for (Vertex y : got)
                if (w.in_a(y) || !w.graph().has_edge(q, y)) ++bad;
        }
    }
    return bad;
}

int selftest_wrapper(int trials, std::uint64_t seed) {
    int bad = 0;
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        Trace tr = gen_trace(20, 3, 3, 150, rng(), GenMode::Adversarial);
        DynamicSplitGraph w(tr.n, tr.k, tr.d, tr.seed);
        for (const auto& c : tr.commands) {
            if (c.kind != TraceCommand::Toggle) continue;
            w.update(c.u, c.v);
            if (w.splittance() != oracle::brute_splittance(w.graph())) ++bad;
        }
    }
    return bad;
}

int selftest_obstruction(int trials, std::uint64_t seed) {
    int bad = 0;
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        Trace tr = gen_trace(12, 3, 3, 150, rng(), GenMode::Adversarial);
        DynamicSplitGraph w(tr.n, tr.k, tr.d, tr.seed);
        for (const auto& c : tr.commands) {
            if (c.kind != TraceCommand::Toggle) continue;
            w.update(c.u, c.v);
            if (w.splittance() > tr.k) continue;
            auto got = find_obstruction(w);
            bool any = !oracle::brute_obstructions(w.graph()).empty();
            if (got.has_value() != any) ++bad;
            if (got && !induces(w.graph(), got->vertices, got->kind)) ++bad;
        }
    }
    return bad;
}

int selftest_branching(int trials, std::uint64_t seed) {
    int bad = 0;
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        Trace tr = gen_trace(10, 2, 3, 80, rng(), GenMode::Adversarial);
        DynamicSplitGraph w(tr.n, tr.k, tr.d, tr.seed);
        for (const auto& c : tr.commands) {
            if (c.kind != TraceCommand::Toggle) continue;
            w.update(c.u, c.v);
            auto rc = query_completion(w);
            if (rc.yes != oracle::brute_completion(w.graph(), tr.k).yes) ++bad;
            if (rc.yes) {
                Graph h = w.graph();
                for (auto [a, b] : rc.witness) h.toggle_edge(a, b);
                if (oracle::brute_splittance(h) != 0) ++bad;
            }
        }
    }
    return bad;
}

int cmd_selftest(const std::string& module, int trials, std::uint64_t seed) {
    struct Suite {
        const char* name;
        int (*fn)(int, std::uint64_t);
    };
    const Suite suites[] = {
        {"dsplit", selftest_dsplit},       {"lists", selftest_lists},
        {"sampler", selftest_sampler},     {"wrapper", selftest_wrapper},
        {"obstruction", selftest_obstruction}, {"branching", selftest_branching},
    };
    int total_bad = 0;
    bool matched = false;
    for (const auto& s : suites) {
        if (!module.empty() && module != s.name) continue;
        matched = true;
        int bad = s.fn(trials, seed);
        total_bad += bad;
        std::cout << s.name << ": " << (bad == 0 ? "ok" : "FAIL") << " ("
                  << bad << " violations)\n";
    }
    if (!matched) {
        std::cerr << "error: unknown module '" << module << "'\n";
        return 2;
    }
    return total_bad == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"dynamic split-completion toolkit"};
    app.require_subcommand(1);

    std::string trace_path, mode = "random", csv_out, module;
    bool verify = false;
    int n = 32, k = 3, d = 3, steps = 100, trials = 10;
    std::uint64_t seed = 1;
    std::vector<int> ns;

    auto* run = app.add_subcommand("run", "replay a trace file");
    run->add_option("--trace", trace_path, "trace file (default stdin)");
    run->add_flag("--verify", verify, "check answers against brute force");

    auto* gen = app.add_subcommand("gen", "generate a trace");
    gen->add_option("--n", n, "vertex count");
    gen->add_option("--k", k, "edit budget");
    gen->add_option("--d", d, "degeneracy parameter");
    gen->add_option("--steps", steps, "number of toggles");
    gen->add_option("--seed", seed, "rng seed");
    gen->add_option("--mode", mode, "random | adversarial");
    gen->add_option("--trace", trace_path, "output file (default stdout)");

    auto* bench = app.add_subcommand("bench", "timing sweep, CSV output");
    bench->add_option("--n", ns, "vertex counts to sweep");
    bench->add_option("--k", k, "edit budget");
    bench->add_option("--d", d, "degeneracy parameter");
    bench->add_option("--steps", steps, "toggles per size");
    bench->add_option("--seed", seed, "rng seed");
    bench->add_option("--csv-out", csv_out, "output file (default stdout)");

    auto* self = app.add_subcommand("selftest", "randomized invariant suites");
    self->add_option("--module", module, "run a single suite");
    self->add_option("--trials", trials, "trials per suite");
    self->add_option("--seed", seed, "rng seed");

    CLI11_PARSE(app, argc, argv);

    if (run->parsed()) return cmd_run(trace_path, verify);
    if (gen->parsed()) return cmd_gen(n, k, d, steps, seed, mode, trace_path);
    if (bench->parsed()) return cmd_bench(ns, k, d, steps, seed, csv_out);
    return cmd_selftest(module, trials, seed);
}
