// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include "oracle.hpp"

#include <crcforge/cli.hpp>
#include <crcforge/code_file.hpp>
#include <crcforge/constructions.hpp>
#include <crcforge/parameters.hpp>
#include <crcforge/search.hpp>
#include <crcforge/stochastic.hpp>
#include <crcforge/structure.hpp>
#include <crcforge/verifier.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace crcforge;

namespace {
    using Clock = std::chrono::steady_clock;

    struct Failure {
        std::string what;
    };

    void ensure(bool ok, const std::string & what)
    {
        if (! ok)
            throw Failure{what};
    }

    auto seconds_since(Clock::time_point start) -> double
    {
        return std::chrono::duration<double>(Clock::now() - start).count();
    }

    void within(Clock::time_point start, double limit, const std::string & what)
    {
        double took = seconds_since(start);
        std::ostringstream msg;
        msg << what << " took " << took << " s, limit " << limit << " s";
        ensure(took < limit, msg.str());
    }

    auto construct(const std::vector<std::string> & args) -> Code
    {
        std::ostringstream out, err;
        std::vector<std::string> full{"construct"};
        full.insert(full.end(), args.begin(), args.end());
        int status = run_cli(full, out, err);
        ensure(status == exit_ok, "construct exited with " + std::to_string(status) + ": " + err.str());
        return parse_code_file(out.str()).code;
    }

    auto certificate(const Code & code) -> CrcCertificate
    {
        auto result = check_crc(code);
        ensure(std::holds_alternative<CrcCertificate>(result), "code is not completely regular");
        auto cert = std::get<CrcCertificate>(result);
        ensure(cert.rho == 1, "covering radius is " + std::to_string(cert.rho));
        return cert;
    }

    auto index2_codes(int q) -> std::vector<Code>
    {
        std::vector<Code> codes;
        for (int g = 2; g <= 2 * q - 2; g += 2)
            codes.push_back(build_a(q, g));
        codes.push_back(build_b(q, 1));
        codes.push_back(build_b(q, 2));
        for (int t = q / 2 + 1; t < q; ++t)
            codes.push_back(build_c(q, t));
        for (const auto & w : solve_condition1(q))
            codes.push_back(build_d(q, w));
        return codes;
    }

    auto code_pool() -> std::vector<Code>
    {
        std::vector<Code> pool;
        for (int q = 2; q <= 8; ++q) {
            for (int b = 1; b < q; ++b) {
                pool.push_back(build_index1(q, b));
                pool.push_back(build_index3(q, b));
            }
            if (q % 2 == 0) {
                auto codes = index2_codes(q);
                pool.insert(pool.end(), codes.begin(), codes.end());
            }
            else
                for (int g = 2; g <= 2 * q - 2; g += 2)
                    pool.push_back(build_a(q, g));
        }
        return pool;
    }

    auto normalized_prediction(int q) -> std::set<ParameterSet>
    {
        std::set<ParameterSet> out;
        for (int index = 1; index <= 3; ++index)
            for (int gamma = 1; gamma <= max_normalized_gamma(q, index); ++gamma)
                if (feasible_h3q(q, gamma, index).feasible)
                    out.insert(ParameterSet{gamma, q * index - gamma, index});
        return out;
    }

    auto normalized(const std::set<ParameterSet> & sets) -> std::set<ParameterSet>
    {
        std::set<ParameterSet> out;
        for (const auto & p : sets)
            out.insert(p.normalized());
        return out;
    }

    void construction_c_code()
    {
        auto start = Clock::now();
        auto code = construct({"c", "--q", "6", "--t", "5"});
        auto cert = certificate(code);
        auto hp = hyperface_profile(code);
        within(start, 1.0, "construction and verification");
        ensure(code.size() == 90, "|C| = " + std::to_string(code.size()));
        ensure(cert.gamma1() == 5 && cert.beta0() == 7, "intersection array differs from {7; 5}");
        ensure(cert.code_eigenvalues->second == 3 && eigenvalue(3, 6, 2) == 3, "eigenvalue is not 3");
        ensure(cert.eigenvalue_index == 2, "eigenvalue index differs from 2");
        ensure(hp.counts.size() == 18, "expected 18 hyperfaces");
        for (auto count : hp.counts)
            ensure(count == 15, "hyperface count " + std::to_string(count));
        auto brute = oracle::rho1(3, 6, oracle::words_of(code));
        ensure(brute && brute->gamma == 5 && brute->beta == 7, "brute-force count disagrees");
    }

    void construction_d_instances()
    {
        struct Instance {
            int q;
            ConditionOneWitness w;
            int gamma;
        };
        const Instance instances[] = {
            {8, {4, 4, 4, 2, 2, 2}, 6},
            {8, {2, 4, 6, 2, 3, 2}, 7},
            {32, {28, 28, 16, 7, 4, 4}, 15},
            {45, {9, 15, 30, 3, 6, 5}, 14},
        };
        for (const auto & [q, w, gamma] : instances) {
            auto start = Clock::now();
            auto code = construct({"d", "--q", std::to_string(q), "--r", std::to_string(w.r), "--s", std::to_string(w.s),
                "--t", std::to_string(w.t), "--a", std::to_string(w.a), "--b", std::to_string(w.b), "--c",
                std::to_string(w.c)});
            auto cert = certificate(code);
            if (q == 45)
                within(start, 10.0, "q=45 instance");
            std::string label = "q=" + std::to_string(q) + " " + to_string(w);
            ensure(cert.gamma1() == gamma, label + ": gamma " + std::to_string(cert.gamma1()));
            ensure(cert.beta0() == 2 * q - gamma, label + ": beta " + std::to_string(cert.beta0()));
            ensure(cert.eigenvalue_index == 2, label + ": eigenvalue index");
            auto brute = oracle::rho1(3, q, oracle::words_of(code));
            ensure(brute && brute->gamma == gamma, label + ": brute-force count disagrees");
        }
    }

    void construction_b()
    {
        auto timed = [](const std::vector<std::string> & args) {
            auto start = Clock::now();
            auto code = construct(args);
            auto cert = certificate(code);
            within(start, 1.0, "construct b " + args[2]);
            return std::pair{code, cert};
        };
        auto [seed1, c1] = timed({"b", "--q", "2", "--variant", "1"});
        ensure(c1.gamma1() == 1 && c1.beta0() == 3, "seed {000,111} is not (1,3)");
        auto [seed2, c2] = timed({"b", "--q", "2", "--variant", "2"});
        ensure(c2.gamma1() == 2 && c2.beta0() == 2, "seed {000,100,111,011} is not (2,2)");
        for (int q : {4, 6, 8}) {
            auto qs = std::to_string(q);
            auto [v1, p1] = timed({"b", "--q", qs, "--variant", "1"});
            ensure(p1.gamma1() == q / 2, "variant 1 at q=" + qs + " has gamma " + std::to_string(p1.gamma1()));
            auto [v2, p2] = timed({"b", "--q", qs, "--variant", "2"});
            long long gamma = p2.gamma1();
            ensure(gamma + p2.beta0() == 2 * q, "variant 2 at q=" + qs + ": gamma + beta != 2q");
            ensure(static_cast<long long>(v2.size()) * 2 == static_cast<long long>(q) * q * gamma,
                "variant 2 at q=" + qs + ": |C| != q^2 gamma / 2");
            std::cout << "    variant 2, q=" << q << ": measured gamma=" << gamma << ", beta=" << p2.beta0()
                      << ", |C|=" << v2.size() << "\n";
        }
    }

    void soundness_sweep()
    {
        int checked = 0;
        for (int q = 2; q <= 12; ++q)
            for (int index = 1; index <= 3; ++index)
                for (int gamma = 1; gamma <= max_normalized_gamma(q, index); ++gamma) {
                    auto verdict = feasible_h3q(q, gamma, index);
                    if (! verdict.feasible)
                        continue;
                    auto spec = designated_construction(q, gamma, verdict);
                    auto cert = certificate(build(spec));
                    std::string label = "q=" + std::to_string(q) + " gamma=" + std::to_string(gamma) +
                        " index=" + std::to_string(index) + " via " + to_string(spec.kind);
                    ensure(cert.gamma1() == gamma, label + ": certificate gamma " + std::to_string(cert.gamma1()));
                    ensure(cert.eigenvalue_index == index, label + ": certificate index differs");
                    ++checked;
                }
        std::cout << "    " << checked << " feasible parameter sets built and verified\n";
    }

    void oracle_equivalence()
    {
        auto start = Clock::now();
        auto words = oracle::all_words(3, 2);
        std::set<ParameterSet> brute;
        for (std::uint64_t mask = 1; mask < 255; ++mask) {
            auto p = oracle::rho1(3, 2, oracle::subset(words, mask));
            if (! p)
                continue;
            std::optional<int> index;
            for (int i = 0; i <= 3; ++i)
                if (oracle::eigenvalue(3, 2, i) == 3 - (p->gamma + p->beta))
                    index = i;
            brute.insert(ParameterSet{p->gamma, p->beta, index}.normalized());
        }
        auto searched = normalized(enumerate_crcs({Space{3, 2}, std::nullopt, std::nullopt, true}, {}).parameter_sets);
        within(start, 1.0, "H(3,2) enumeration");
        auto predicted2 = normalized_prediction(2);
        ensure(brute == predicted2, "H(3,2) brute force disagrees with feasibility rules");
        ensure(searched == predicted2, "H(3,2) search disagrees with feasibility rules");

        start = Clock::now();
        auto all3 = normalized(enumerate_crcs({Space{3, 3}, std::nullopt, std::nullopt, true}, {}).parameter_sets);
        auto idx2 = normalized(enumerate_crcs({Space{3, 3}, std::nullopt, 2, true}, {}).parameter_sets);
        within(start, 600.0, "H(3,3) search");
        ensure(all3 == normalized_prediction(3), "H(3,3) search disagrees with feasibility rules");
        ensure(idx2 == std::set<ParameterSet>{{2, 4, 2}}, "H(3,3) index 2 yields something other than gamma=2");
    }

    void condition_one()
    {
        auto has = [](int q, int gamma, const ConditionOneWitness & w) {
            auto list = solve_condition1(q, gamma);
            return std::find(list.begin(), list.end(), w) != list.end();
        };
        ensure(has(8, 7, {2, 4, 6, 2, 3, 2}), "solve_condition1(8,7) misses (2,4,6,2,3,2)");
        ensure(has(45, 14, {9, 15, 30, 3, 6, 5}), "solve_condition1(45,14) misses (9,15,30,3,6,5)");
        auto start = Clock::now();
        long long total = 0;
        for (int q = 2; q <= 64; ++q)
            for (int gamma = 1; gamma <= 3 * q; ++gamma)
                for (const auto & w : solve_condition1(q, gamma)) {
                    auto [r, s, t, a, b, c] = w;
                    std::string label = "q=" + std::to_string(q) + " " + to_string(w);
                    ensure(w.gamma() == gamma, label + ": wrong gamma");
                    ensure(check_condition1(q, w), label + ": fails Condition 1");
                    ensure(c * r == a * (q - t) && b * (q - s) == c * (q - r) && a * t == b * s, label + ": equations");
                    ensure(static_cast<long long>(q - s) * t * r == static_cast<long long>(s) * (q - t) * (q - r),
                        label + ": product identity");
                    ++total;
                }
        within(start, 30.0, "sweep over q <= 64");
        std::cout << "    " << total << " witnesses checked for q <= 64\n";
    }

    void derivative_classification()
    {
        long long functions = 0;
        for (int q : {4, 6, 8})
            for (const auto & code : index2_codes(q)) {
                ensure(certificate(code).eigenvalue_index == 2, "pool code is not index 2");
                for (int i = 0; i < 3; ++i)
                    for (Symbol u = 0; u < static_cast<Symbol>(q); ++u)
                        for (Symbol v = 0; v < static_cast<Symbol>(q); ++v) {
                            if (u == v)
                                continue;
                            auto cls = classify(derivative(code, i, u, v));
                            ensure(cls.tag != DerivativeClass::Tag::unclassified,
                                "unclassified derivative at q=" + std::to_string(q));
                            ++functions;
                        }
            }
        std::cout << "    " << functions << " derivative functions classified\n";
    }

    auto complement_of(const std::set<Symbol> & set, int q) -> std::set<Symbol>
    {
        std::set<Symbol> out;
        for (Symbol a = 0; a < static_cast<Symbol>(q); ++a)
            if (! set.count(a))
                out.insert(a);
        return out;
    }

    void strong_clique_round_trip()
    {
        int codes = 0;
        for (int q = 2; q <= 12; ++q)
            for (const auto & w : solve_condition1(q)) {
                if (w.gamma() % 2 == 0 || 2 * w.gamma() >= q)
                    continue;
                std::string label = "q=" + std::to_string(q) + " " + to_string(w);
                auto code = build_d(q, w);
                auto cover = clique_cover(code);
                ensure(std::holds_alternative<CliqueDecomposition>(cover), label + ": no clique partition");
                const auto & d = std::get<CliqueDecomposition>(cover);
                ensure(d.strong, label + ": clique partition is not strong");

                // envelopes read off the cliques of each codirection
                std::set<Symbol> S, T, R, Tp, Rp, Sp;
                for (const auto & c : d.cliques[0]) {
                    S.insert(c.fixed[0]);
                    T.insert(c.fixed[1]);
                }
                for (const auto & c : d.cliques[1]) {
                    R.insert(c.fixed[0]);
                    Tp.insert(c.fixed[1]);
                }
                for (const auto & c : d.cliques[2]) {
                    Rp.insert(c.fixed[0]);
                    Sp.insert(c.fixed[1]);
                }
                ensure(Rp == complement_of(R, q) && Sp == complement_of(S, q) && Tp == complement_of(T, q),
                    label + ": envelope complement relations fail");

                auto extracted = extract_construction_d(code);
                ensure(check_condition1(q, extracted.witness), label + ": extracted data violates Condition 1");
                auto before = certificate(code);
                auto after = certificate(build_d(q, extracted.witness));
                ensure(before.alpha == after.alpha && before.beta == after.beta && before.gamma == after.gamma &&
                        before.code_size == after.code_size && before.eigenvalue_index == after.eigenvalue_index,
                    label + ": rebuilt certificate differs");
                ensure(assemble_construction_d(extracted.blocks) == code, label + ": reassembly differs");
                ++codes;
            }
        ensure(codes > 0, "no codes with odd gamma < q/2 for q <= 12");
        std::cout << "    " << codes << " codes decomposed and rebuilt\n";
    }

    void property_suites()
    {
        constexpr int cases = 1000;
        std::mt19937_64 rng{20261017};
        auto pool = code_pool();
        auto image = [&](const Code & code) {
            int n = code.space().n(), q = code.space().q();
            return oracle::make_code(n, q, oracle::random_automorphism(oracle::words_of(code), n, q, rng));
        };

        for (int i = 0; i < cases; ++i) {
            auto code = image(pool[rng() % pool.size()]);
            auto c = certificate(code), d = certificate(code.complement());
            ensure(c.gamma1() == d.beta0() && c.beta0() == d.gamma1() && c.eigenvalue_index == d.eigenvalue_index,
                "complement duality fails");
        }

        for (int i = 0; i < cases; ++i) {
            auto code = image(pool[rng() % pool.size()]);
            auto base = certificate(code);
            int at = static_cast<int>(rng() % static_cast<unsigned>(code.space().n() + 1));
            auto ext = extend(code, at);
            auto grown = certificate(ext);
            auto back = certificate(reduce(ext));
            ensure(reduce(ext) == reduce(code), "reduce after extend changes the code");
            for (const auto & other : {grown, back})
                ensure(other.rho == base.rho && other.gamma == base.gamma && other.beta == base.beta &&
                        other.eigenvalue_index == base.eigenvalue_index,
                    "extend/reduce changes the parameters");
        }

        for (int i = 0; i < cases; ++i) {
            int n = 1 + static_cast<int>(rng() % 5);
            int q = 2 + static_cast<int>(rng() % 6);
            Space space{n, q};
            auto v = static_cast<VertexIndex>(rng() % space.vertex_count());
            space.for_each_neighbor(v, [&](VertexIndex w) {
                bool back = false;
                space.for_each_neighbor(w, [&](VertexIndex u) { back = back || u == v; });
                ensure(back, "adjacency is not symmetric");
                ensure(oracle::distance(oracle::from_vertex(space.vertex(v)), oracle::from_vertex(space.vertex(w))) == 1,
                    "neighbour at Hamming distance other than 1");
            });
        }

        long long grids = 0;
        for (int q = 1; q <= 64; ++q)
            for (int qp = 1; qp <= 64; ++qp)
                for (int gamma = 1; gamma <= q + qp; ++gamma) {
                    if ((q * gamma) % (q + qp) != 0)
                        continue;
                    int a = q * gamma / (q + qp), b = gamma - a;
                    auto grid = stochastic::build(q, qp, gamma);
                    for (int i = 0; i < qp; ++i) {
                        int count = 0;
                        for (int j = 0; j < q; ++j)
                            count += grid.contains(j, i);
                        ensure(count == a, "stochastic column count");
                    }
                    for (int j = 0; j < q; ++j) {
                        int count = 0;
                        for (int i = 0; i < qp; ++i)
                            count += grid.contains(j, i);
                        ensure(count == b, "stochastic row count");
                    }
                    ensure(stochastic::profile(grid) == stochastic::StochasticProfile{a, b}, "stochastic profile");
                    ++grids;
                }
        ensure(grids >= cases, "fewer than 1000 admissible stochastic parameter triples");
        std::cout << "    " << cases << " cases per randomized suite, " << grids << " stochastic triples\n";
    }
}

int main()
{
    struct Criterion {
        int number;
        const char * name;
        std::function<void()> run;
    };
    const Criterion criteria[] = {
        {1, "construction C code in H(3,6): |C|=90, {7;5}, eigenvalue 3, hyperfaces 15", construction_c_code},
        {2, "construction D instances with gamma 6, 7, 15, 14", construction_d_instances},
        {3, "construction B seeds and lifts", construction_b},
        {4, "designated builders realise every feasible parameter set, q <= 12", soundness_sweep},
        {5, "search and brute force agree with feasibility on H(3,2), H(3,3)", oracle_equivalence},
        {6, "Condition 1 solver instances and sweep q <= 64", condition_one},
        {7, "second-eigenvalue derivatives are zero, string or cross", derivative_classification},
        {8, "strong clique round trip for odd gamma < q/2, q <= 12", strong_clique_round_trip},
        {9, "randomized property suites", property_suites},
    };

    int failed = 0;
    for (const auto & c : criteria) {
        auto start = Clock::now();
        std::string detail;
        try {
            c.run();
        }
        catch (const Failure & f) {
            detail = f.what;
        }
        catch (const std::exception & e) {
            detail = std::string("exception: ") + e.what();
        }
        double took = seconds_since(start);
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.3f s", took);
        if (detail.empty())
            std::cout << "PASS criterion " << c.number << ": " << c.name << " (" << timing << ")\n";
        else {
            ++failed;
            std::cout << "FAIL criterion " << c.number << ": " << c.name << " (" << timing << "): " << detail << "\n";
        }
        std::cout.flush();
    }
    std::cout << (std::size(criteria) - static_cast<std::size_t>(failed)) << "/" << std::size(criteria)
              << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
