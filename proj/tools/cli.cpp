#include <crcforge/cli.hpp>
#include <crcforge/code_file.hpp>
#include <crcforge/constructions.hpp>
#include <crcforge/parameters.hpp>
#include <crcforge/search.hpp>
#include <crcforge/structure.hpp>
#include <crcforge/verifier.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <map>
#include <fstream>
#include <set>
#include <optional>
#include <sstream>

namespace crcforge {

namespace {
    using nlohmann::ordered_json;

    auto join(const std::vector<long long> & xs, const char * sep = ", ") -> std::string
    {
        std::string out;
        for (std::size_t i = 0; i < xs.size(); ++i)
            out += (i ? sep : "") + std::to_string(xs[i]);
        return out;
    }

    void print_certificate(std::ostream & out, const CrcCertificate & cert)
    {
        out << "completely regular: yes\n";
        out << "covering radius: " << cert.rho << "\n";
        out << "code size: " << cert.code_size << "\n";
        out << "intersection array: {" << join(cert.beta) << "; " << join(cert.gamma) << "}\n";
        out << "alpha: " << join(cert.alpha) << "\n";
        if (cert.rho == 1) {
            out << "gamma: " << cert.gamma1() << "\n";
            out << "beta: " << cert.beta0() << "\n";
            out << "eigenvalues: " << cert.code_eigenvalues->first << ", " << cert.code_eigenvalues->second << "\n";
            out << "eigenvalue index: ";
            if (cert.eigenvalue_index)
                out << *cert.eigenvalue_index << "\n";
            else
                out << "none\n";
        }
    }

    auto count_name(CrcFailure::Count c) -> const char *
    {
        switch (c) {
        case CrcFailure::Count::alpha: return "alpha";
        case CrcFailure::Count::beta: return "beta";
        case CrcFailure::Count::gamma: return "gamma";
        }
        return "?";
    }

    void print_failure(std::ostream & out, const CrcFailure & f)
    {
        out << "completely regular: no\n";
        out << "witness: " << to_string(f.witness_vertex) << " in class " << f.class_index << " has "
            << count_name(f.count) << " count " << f.observed_count << ", expected " << f.expected_count << "\n";
    }

    void emit(const CodeFile & file, const std::string & path, std::ostream & out)
    {
        if (path.empty() || path == "-")
            out << serialize_code_file(file);
        else
            write_code_file(path, file);
    }

    struct ConstructOptions {
        int q = 0;
        int gamma = 0;
        int variant = 1;
        int t = 0;
        int r = 0;
        int s = 0;
        int a = 0;
        int b = 0;
        int c = 0;
        int size = 0;
        int m = 0;
        std::string output;
    };

    auto construct_spec(ConstructionKind kind, const ConstructOptions & o) -> ConstructionSpec
    {
        switch (kind) {
        case ConstructionKind::a: return {kind, {o.q, o.gamma}};
        case ConstructionKind::b: return {kind, {o.q, o.variant}};
        case ConstructionKind::c: return {kind, {o.q, o.t}};
        case ConstructionKind::d: return {kind, {o.q, o.r, o.s, o.t, o.a, o.b, o.c}};
        case ConstructionKind::index1: return {kind, {o.q, o.size}};
        case ConstructionKind::index3: return {kind, {o.q, o.m}};
        }
        return {kind, {}};
    }

    auto spec_json(const ConstructionSpec & spec) -> ordered_json
    {
        static const std::map<ConstructionKind, std::vector<const char *>> names{
            {ConstructionKind::a, {"q", "gamma"}},
            {ConstructionKind::b, {"q", "variant"}},
            {ConstructionKind::c, {"q", "t"}},
            {ConstructionKind::d, {"q", "r", "s", "t", "a", "b", "c"}},
            {ConstructionKind::index1, {"q", "size"}},
            {ConstructionKind::index3, {"q", "m"}},
        };
        ordered_json params;
        const auto & keys = names.at(spec.kind);
        for (std::size_t i = 0; i < keys.size() && i < spec.parameters.size(); ++i)
            params[keys[i]] = spec.parameters[i];
        return {{"kind", to_string(spec.kind)}, {"parameters", params}};
    }

    auto run_construct(ConstructionKind kind, const ConstructOptions & options, std::ostream & out,
        std::ostream & err) -> int
    {
        auto spec = construct_spec(kind, options);
        auto code = build(spec);
        auto expected = expected_parameters(spec);
        auto result = check_crc(code);
        auto cert = std::get_if<CrcCertificate>(&result);
        if (! cert || cert->rho != 1 || cert->gamma1() != expected.gamma || cert->beta0() != expected.beta ||
            cert->eigenvalue_index != expected.eigenvalue_index) {
            err << "internal error: construction " << to_string(kind) << " failed its self-check\n";
            if (cert)
                print_certificate(err, *cert);
            else
                print_failure(err, std::get<CrcFailure>(result));
            return exit_failed;
        }
        if (cert->gamma1() > cert->beta0())
            err << "warning: gamma=" << cert->gamma1() << " exceeds beta=" << cert->beta0()
                << "; run `complement` for the normalized partner\n";
        CodeFile file{code, {{"construction", spec_json(spec)}, {"certificate", certificate_to_json(*cert)}}};
        emit(file, options.output, out);
        return exit_ok;
    }

    struct VerifyOptions {
        std::string file;
        std::optional<long long> gamma;
        std::optional<long long> beta;
        std::optional<int> index;
    };

    auto run_verify(const VerifyOptions & options, std::ostream & out) -> int
    {
        auto file = read_code_file(options.file);
        const auto & code = file.code;
        out << "space: H(" << code.space().n() << "," << code.space().q() << ")\n";
        if (code.empty() || code.is_full()) {
            out << "completely regular: no (trivial code)\n";
            return exit_failed;
        }
        auto result = check_crc(code);
        if (auto failure = std::get_if<CrcFailure>(&result)) {
            print_failure(out, *failure);
            return exit_failed;
        }
        const auto & cert = std::get<CrcCertificate>(result);
        print_certificate(out, cert);
        bool ok = true;
        auto expect = [&](const char * what, bool holds, const std::string & wanted) {
            if (! holds) {
                out << "expectation failed: " << what << " = " << wanted << "\n";
                ok = false;
            }
        };
        if (options.gamma)
            expect("gamma", cert.rho == 1 && cert.gamma1() == *options.gamma, std::to_string(*options.gamma));
        if (options.beta)
            expect("beta", cert.rho == 1 && cert.beta0() == *options.beta, std::to_string(*options.beta));
        if (options.index)
            expect("eigenvalue index", cert.eigenvalue_index == options.index, std::to_string(*options.index));
        return ok ? exit_ok : exit_failed;
    }

    struct TransformOptions {
        std::string file;
        std::string output;
        int at = 0;
    };

    auto transformed(const CodeFile & source, Code code, const std::string & operation) -> CodeFile
    {
        ordered_json meta{{"operation", operation}};
        if (! source.meta.empty())
            meta["source_meta"] = source.meta;
        return CodeFile{std::move(code), meta};
    }

    void print_verdict(std::ostream & out, const FeasibilityVerdict & v)
    {
        out << (v.feasible ? "feasible" : "infeasible") << " [" << to_string(v.rule) << "]: " << v.explanation << "\n";
        if (v.witness)
            out << "witness: " << to_string(*v.witness) << "\n";
    }

    struct ParamsOptions {
        int n = 3;
        int q = 0;
        int gamma = 0;
        std::optional<int> gamma_filter;
        std::optional<int> index;
        int i = 0;
    };

    auto run_feasible(const ParamsOptions & o, std::ostream & out) -> int
    {
        FeasibilityVerdict verdict;
        if (o.n == 3)
            verdict = feasible_h3q(o.q, o.gamma, o.index.value_or(2));
        else {
            if (o.index && *o.index != 2)
                throw Error(Errc::invalid_parameters, "for n != 3 only eigenvalue index 2 is classified");
            verdict = feasible_hnq(o.n, o.q, o.gamma);
        }
        print_verdict(out, verdict);
        return verdict.feasible ? exit_ok : exit_failed;
    }

    auto run_solve(const ParamsOptions & o, std::ostream & out) -> int
    {
        auto witnesses = solve_condition1(o.q, o.gamma_filter);
        out << "r s t a b c gamma\n";
        for (const auto & w : witnesses)
            out << w.r << ' ' << w.s << ' ' << w.t << ' ' << w.a << ' ' << w.b << ' ' << w.c << ' ' << w.gamma()
                << "\n";
        out << witnesses.size() << " witness(es)\n";
        return witnesses.empty() ? exit_failed : exit_ok;
    }

    auto run_lambda(const ParamsOptions & o, std::ostream & out) -> int
    {
        out << "lambda_" << o.i << "(" << o.n << "," << o.q << ") = " << eigenvalue(o.n, o.q, o.i)
            << ", multiplicity " << eigenvalue_multiplicity(o.n, o.q, o.i) << "\n";
        return exit_ok;
    }

    struct AnalyzeOptions {
        std::string file;
        bool derivatives = false;
        bool cliques = false;
    };

    void report_cliques(std::ostream & out, const Code & code)
    {
        auto cover = clique_cover(code);
        if (auto failure = std::get_if<CliqueCoverFailure>(&cover)) {
            out << "clique property: no ("
                << (failure->kind == CliqueCoverFailure::Kind::lemma_violated ? "lemma violated" : "not a partition")
                << ")\n";
            if (failure->witness)
                out << "  witness: " << to_string(*failure->witness) << " lies in " << failure->cover_count
                    << " full clique(s)\n";
            out << "  detail: " << failure->detail << "\n";
            return;
        }
        const auto & d = std::get<CliqueDecomposition>(cover);
        out << "clique property: yes\n";
        out << "cliques by codirection: " << d.cliques[0].size() << " " << d.cliques[1].size() << " "
            << d.cliques[2].size() << "\n";
        out << "strong clique property: " << (d.strong ? "yes" : "no") << "\n";
        if (d.strong) {
            auto extracted = extract_construction_d(code);
            auto symbols = [](const std::vector<Symbol> & xs) {
                std::vector<long long> v(xs.begin(), xs.end());
                return "{" + join(v, ",") + "}";
            };
            out << "R = " << symbols(extracted.blocks.R) << "\n";
            out << "S = " << symbols(extracted.blocks.S) << "\n";
            out << "T = " << symbols(extracted.blocks.T) << "\n";
            out << "condition 1 witness: " << to_string(extracted.witness) << ", gamma = " << extracted.witness.gamma()
                << "\n";
        }
    }

    void report_derivatives(std::ostream & out, const Code & code)
    {
        auto q = static_cast<Symbol>(code.space().q());
        std::map<std::string, int> tally;
        out << "derivatives (position, u, v): class\n";
        for (int i = 0; i < 3; ++i)
            for (Symbol u = 0; u < q; ++u)
                for (Symbol v = 0; v < q; ++v) {
                    if (u == v)
                        continue;
                    auto cls = classify(derivative(code, i, u, v));
                    auto name = to_string(cls);
                    out << "  (" << i + 1 << "," << u << "," << v << "): " << name << "\n";
                    ++tally[name.substr(0, name.find('('))];
                }
        out << "derivative summary:";
        for (auto & [name, count] : tally)
            out << " " << name << "=" << count;
        out << "\n";
    }

    auto run_analyze(const AnalyzeOptions & o, std::ostream & out) -> int
    {
        auto file = read_code_file(o.file);
        const auto & code = file.code;
        const auto & space = code.space();
        out << "space: H(" << space.n() << "," << space.q() << ")\n";
        out << "code size: " << code.size() << "\n";
        std::vector<long long> essential;
        for (int p : essential_positions(code))
            essential.push_back(p + 1);
        out << "essential positions: {" << join(essential, ",") << "}\n";

        int status = exit_ok;
        if (code.empty() || code.is_full()) {
            out << "completely regular: no (trivial code)\n";
            status = exit_failed;
        }
        else {
            auto result = check_crc(code);
            if (auto cert = std::get_if<CrcCertificate>(&result))
                print_certificate(out, *cert);
            else {
                print_failure(out, std::get<CrcFailure>(result));
                status = exit_failed;
            }
        }

        auto hp = hyperface_profile(code);
        out << "hyperface profile:";
        if (hp.is_balanced())
            out << " balanced, " << hp.counts.front() << " per hyperface\n";
        else {
            out << "\n";
            for (int i = 0; i < space.n(); ++i) {
                std::vector<long long> row;
                for (Symbol a = 0; a < static_cast<Symbol>(space.q()); ++a)
                    row.push_back(static_cast<long long>(hp.at(i, a)));
                out << "  direction " << i + 1 << ": " << join(row, " ") << "\n";
            }
        }
        auto cp = clique_profile(code);
        if (cp.constant)
            out << "clique profile: constant, " << *cp.common_count << " per maximal clique\n";
        else {
            auto [lo, hi] = std::minmax_element(cp.counts.begin(), cp.counts.end());
            out << "clique profile: not constant, " << *lo << ".." << *hi << " per maximal clique\n";
        }

        if ((o.cliques || o.derivatives) && space.n() != 3)
            out << "clique and derivative analysis needs n = 3\n";
        else {
            if (o.cliques)
                report_cliques(out, code);
            if (o.derivatives)
                report_derivatives(out, code);
        }
        return status;
    }

    struct SearchOptions {
        int n = 0;
        int q = 0;
        std::optional<int> gamma;
        std::optional<int> index;
        std::string emit_dir;
        bool count_only = false;
        bool fix_origin = false;
    };

    auto run_search(const SearchOptions & o, std::ostream & out) -> int
    {
        SearchConstraints constraints{Space{o.n, o.q}, o.gamma, o.index, o.count_only, o.fix_origin, 0};
        namespace fs = std::filesystem;
        ordered_json index = ordered_json::array();
        std::uint64_t emitted = 0;
        CodeSink sink;
        if (! o.emit_dir.empty() && ! o.count_only) {
            fs::create_directories(o.emit_dir);
            sink = [&](const Code & code, const CrcCertificate & cert) {
                std::ostringstream name;
                name << "code-" << std::setw(6) << std::setfill('0') << ++emitted << ".code.json";
                write_code_file((fs::path(o.emit_dir) / name.str()).string(),
                    CodeFile{code, {{"certificate", certificate_to_json(cert)}}});
                index.push_back({{"file", name.str()}, {"gamma", cert.gamma1()}, {"beta", cert.beta0()},
                    {"eigenvalue_index",
                        cert.eigenvalue_index ? ordered_json(*cert.eigenvalue_index) : ordered_json(nullptr)}});
            };
        }
        auto summary = enumerate_crcs(constraints, sink);
        if (sink) {
            std::ofstream index_file{fs::path(o.emit_dir) / "index.json", std::ios::binary};
            index_file << index.dump(2) << "\n";
        }

        out << "parameter sets (gamma, beta, eigenvalue index):\n";
        for (const auto & p : summary.parameter_sets)
            out << "  " << p.gamma << " " << p.beta << " "
                << (p.eigenvalue_index ? std::to_string(*p.eigenvalue_index) : "none") << "\n";
        std::set<ParameterSet> normalized;
        for (const auto & p : summary.parameter_sets)
            normalized.insert(p.normalized());
        out << "normalized (gamma <= beta):\n";
        for (const auto & p : normalized)
            out << "  " << p.gamma << " " << p.beta << " "
                << (p.eigenvalue_index ? std::to_string(*p.eigenvalue_index) : "none") << "\n";
        out << "codes found: " << summary.codes_found << "\n";
        out << "nodes visited: " << summary.nodes_visited << "\n";
        return exit_ok;
    }

    auto run_table(int q_max, std::ostream & out) -> int
    {
        auto list = [](const std::vector<int> & xs) {
            std::string s;
            for (std::size_t i = 0; i < xs.size(); ++i)
                s += (i ? "," : "") + std::to_string(xs[i]);
            return s.empty() ? std::string("-") : s;
        };
        out << "second-eigenvalue CRCs in H(3,q), normalized gamma <= q, by deciding clause\n";
        out << std::left << std::setw(5) << "q" << std::setw(22) << "even 2..q" << std::setw(22) << "q/2..q (q even)"
            << std::setw(22) << "condition 1" << "infeasible\n";
        for (int q = 2; q <= q_max; ++q) {
            std::vector<int> even, half, cond, none;
            for (int gamma = 1; gamma <= q; ++gamma) {
                auto v = feasible_h3q(q, gamma, 2);
                switch (v.rule) {
                case FeasibilityRule::index2_even: even.push_back(gamma); break;
                case FeasibilityRule::index2_half_to_full: half.push_back(gamma); break;
                case FeasibilityRule::index2_condition1: cond.push_back(gamma); break;
                default: none.push_back(gamma); break;
                }
            }
            out << std::left << std::setw(5) << q << std::setw(22) << list(even) << std::setw(22) << list(half)
                << std::setw(22) << list(cond) << list(none) << "\n";
        }
        return exit_ok;
    }
}

auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
{
    CLI::App app{"Construct, verify, analyse and enumerate completely regular codes in Hamming graphs", "crc-forge"};
    app.require_subcommand(1);

    ConstructOptions construct;
    auto construct_cmd = app.add_subcommand("construct", "build a code from one of the constructions");
    construct_cmd->require_subcommand(1);
    std::map<CLI::App *, ConstructionKind> construct_kinds;
    auto add_kind = [&](ConstructionKind kind, const std::string & help) {
        auto sub = construct_cmd->add_subcommand(to_string(kind), help);
        sub->add_option("--q", construct.q, "alphabet size")->required();
        sub->add_option("-o,--output", construct.output, "output file (default: stdout)");
        construct_kinds[sub] = kind;
        return sub;
    };
    add_kind(ConstructionKind::a, "grid CRC with a nonessential position")
        ->add_option("--gamma", construct.gamma, "even gamma")
        ->required();
    add_kind(ConstructionKind::b, "mod-2 lifting of a CRC in H(3,2)")
        ->add_option("--variant", construct.variant, "1 lifts {000,111}, 2 lifts {000,100,111,011}")
        ->check(CLI::IsMember({1, 2}));
    add_kind(ConstructionKind::c, "book construction, gamma = t")->add_option("--t", construct.t, "q/2 < t < q")->required();
    {
        auto d = add_kind(ConstructionKind::d, "three-block construction from a Condition 1 witness");
        d->add_option("--r", construct.r)->required();
        d->add_option("--s", construct.s)->required();
        d->add_option("--t", construct.t)->required();
        d->add_option("--a", construct.a)->required();
        d->add_option("--b", construct.b)->required();
        d->add_option("--c", construct.c)->required();
    }
    add_kind(ConstructionKind::index1, "B x A x A, eigenvalue index 1")
        ->add_option("--size", construct.size, "|B|")
        ->required();
    add_kind(ConstructionKind::index3, "union of m diagonal classes, eigenvalue index 3")
        ->add_option("--m", construct.m)
        ->required();

    VerifyOptions verify;
    auto verify_cmd = app.add_subcommand("verify", "decide complete regularity and print the certificate");
    verify_cmd->add_option("file", verify.file)->required();
    verify_cmd->add_option("--expect-gamma", verify.gamma);
    verify_cmd->add_option("--expect-beta", verify.beta);
    verify_cmd->add_option("--expect-index", verify.index);

    TransformOptions transform;
    auto reduce_cmd = app.add_subcommand("reduce", "delete nonessential positions");
    auto extend_cmd = app.add_subcommand("extend", "insert a nonessential position");
    auto complement_cmd = app.add_subcommand("complement", "complement the code");
    for (auto sub : {reduce_cmd, extend_cmd, complement_cmd}) {
        sub->add_option("file", transform.file)->required();
        sub->add_option("-o,--output", transform.output, "output file (default: stdout)");
    }
    extend_cmd->add_option("--at", transform.at, "1-based index the new position takes, 1..n+1")->required();

    ParamsOptions params;
    auto params_cmd = app.add_subcommand("params", "eigenvalues, Condition 1 and feasibility");
    params_cmd->require_subcommand(1);
    auto feasible_cmd = params_cmd->add_subcommand("feasible", "does a CRC with these parameters exist?");
    feasible_cmd->add_option("--n", params.n, "word length (default 3)");
    feasible_cmd->add_option("--q", params.q)->required();
    feasible_cmd->add_option("--gamma", params.gamma)->required();
    feasible_cmd->add_option("--index", params.index, "eigenvalue index (default 2)");
    auto solve_cmd = params_cmd->add_subcommand("solve-c1", "list Condition 1 witnesses");
    solve_cmd->add_option("--q", params.q)->required();
    solve_cmd->add_option("--gamma", params.gamma_filter);
    auto lambda_cmd = params_cmd->add_subcommand("lambda", "eigenvalue lambda_i(n,q)");
    lambda_cmd->add_option("--n", params.n)->required();
    lambda_cmd->add_option("--q", params.q)->required();
    lambda_cmd->add_option("--i", params.i)->required();

    AnalyzeOptions analyze;
    auto analyze_cmd = app.add_subcommand("analyze", "structural report for a code");
    analyze_cmd->add_option("file", analyze.file)->required();
    analyze_cmd->add_flag("--derivatives", analyze.derivatives, "classify every derivative function");
    analyze_cmd->add_flag("--cliques", analyze.cliques, "clique partition and three-block recovery");

    SearchOptions search;
    auto search_cmd = app.add_subcommand("search", "exhaustive enumeration of covering-radius-1 CRCs");
    search_cmd->add_option("--n", search.n)->required();
    search_cmd->add_option("--q", search.q)->required();
    search_cmd->add_option("--gamma", search.gamma);
    search_cmd->add_option("--index", search.index);
    search_cmd->add_option("--emit", search.emit_dir, "write one file per code plus index.json");
    search_cmd->add_flag("--count-only", search.count_only);
    search_cmd->add_flag("--fix-origin", search.fix_origin, "only codes containing the all-zero word");

    int q_max = 0;
    auto table_cmd = app.add_subcommand("table", "feasibility of gamma per q for the second eigenvalue");
    table_cmd->add_option("--q-max", q_max)->required()->check(CLI::Range(2, 256));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        for (auto & [sub, kind] : construct_kinds)
            if (sub->parsed())
                return run_construct(kind, construct, out, err);
        if (verify_cmd->parsed())
            return run_verify(verify, out);
        if (reduce_cmd->parsed() || extend_cmd->parsed() || complement_cmd->parsed()) {
            auto source = read_code_file(transform.file);
            if (reduce_cmd->parsed())
                emit(transformed(source, reduce(source.code), "reduce"), transform.output, out);
            else if (extend_cmd->parsed())
                emit(transformed(source, extend(source.code, transform.at - 1), "extend"), transform.output, out);
            else
                emit(transformed(source, source.code.complement(), "complement"), transform.output, out);
            return exit_ok;
        }
        if (feasible_cmd->parsed())
            return run_feasible(params, out);
        if (solve_cmd->parsed())
            return run_solve(params, out);
        if (lambda_cmd->parsed())
            return run_lambda(params, out);
        if (analyze_cmd->parsed())
            return run_analyze(analyze, out);
        if (search_cmd->parsed())
            return run_search(search, out);
        if (table_cmd->parsed())
            return run_table(q_max, out);
    }
    catch (const Error & e) {
        err << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
        return exit_usage;
    }
    err << "no command given\n";
    return exit_usage;
}

}
