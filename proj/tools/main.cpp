#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "biamalg/corpus.hpp"
#include "biamalg/dsl.hpp"
#include "biamalg/error.hpp"
#include "biamalg/json_io.hpp"
#include "biamalg/spectrum.hpp"

namespace {

using namespace biamalg;
using nlohmann::json;

constexpr int exit_usage = 2;

bool read_source(const std::string& path, std::string& out) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        out = ss.str();
        return true;
    }
    std::ifstream in(path);
    if (!in) {
        std::cerr << "biamalg: cannot open " << path << "\n";
        return false;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

void print_diagnostics(const std::string& path, const dsl::Session& s) {
    for (const auto& d : s.diagnostics) std::cerr << path << ":" << dsl::to_string(d) << "\n";
}

int cmd_run(const std::string& path) {
    std::string text;
    if (!read_source(path, text)) return exit_usage;
    dsl::Session s = dsl::run(text);
    print_diagnostics(path, s);
    std::cout << dump(dsl::export_session(s));
    return dsl::exit_code(s);
}

void print_report_lines(const std::string& label, const Report& r) {
    for (const auto& c : r.checks) {
        if (c.passed()) continue;
        std::cout << "  " << (c.status == CheckStatus::fail ? "FAIL" : "UNKNOWN") << " " << label << ": " << c.name;
        if (!c.witness.empty()) std::cout << "  [" << c.witness << "]";
        std::cout << "\n";
    }
}

int cmd_verify(const std::string& path) {
    std::string text;
    if (!read_source(path, text)) return exit_usage;
    dsl::Session s = dsl::run(text);
    print_diagnostics(path, s);
    std::size_t total = 0, passed = 0;
    for (const auto& b : s.bindings) {
        const Report* r = nullptr;
        if (auto p = std::get_if<Report>(&b.value)) r = p;
        else if (auto p = std::get_if<SpecBowtie>(&b.value)) r = &p->report;
        else if (auto p = std::get_if<dsl::Recognized>(&b.value)) r = &p->result.report;
        else if (auto p = std::get_if<dsl::Cpi>(&b.value)) r = &p->result.report;
        else if (auto p = std::get_if<BiAmalgamation>(&b.value)) r = &p->construction;
        if (!r) continue;
        std::size_t ok = 0;
        for (const auto& c : r->checks) ok += c.passed() ? 1 : 0;
        total += r->checks.size();
        passed += ok;
        std::cout << (r->all_passed() ? "PASS " : r->any_failed() ? "FAIL " : "UNKNOWN ") << b.name << " (" << ok << "/"
                  << r->checks.size() << ")\n";
        print_report_lines(b.name, *r);
    }
    int code = dsl::exit_code(s);
    std::cout << passed << "/" << total << " checks passed; exit " << code << "\n";
    return code;
}

int cmd_export(const std::string& path, const std::string& name) {
    std::string text;
    if (!read_source(path, text)) return exit_usage;
    dsl::Session s = dsl::run(text);
    print_diagnostics(path, s);
    if (s.status == dsl::Status::error || s.status == dsl::Status::budget) return dsl::exit_code(s);
    try {
        std::cout << dump(dsl::export_binding(s, name));
    } catch (const Error& e) {
        std::cerr << "biamalg: " << e.what() << "\n";
        return exit_usage;
    }
    return dsl::exit_code(s);
}

int cmd_fmt(const std::string& path) {
    std::string text;
    if (!read_source(path, text)) return exit_usage;
    dsl::ParseResult p = dsl::parse(text);
    for (const auto& d : p.diagnostics) std::cerr << path << ":" << dsl::to_string(d) << "\n";
    if (!p.ok()) return exit_usage;
    std::cout << dsl::print(p.ast);
    return 0;
}

Report suite(const BiAmalgamation& w) {
    Report r = w.construction;
    r.append(as_pullback(w), "pullback: ");
    r.append(conductor_square(w), "conductor: ");
    r.append(quotient_isos_check(w, zero_ideal(w.a)), "quotients: ");
    r.append(verify_transfer(w), "transfer: ");
    r.append(spec_bowtie(w).report, "spec: ");
    r.append(verify_spec_localization(w), "localize: ");
    return r;
}

json summary(const std::string& label, const std::string& family, const BiAmalgamation& w, const Report& r) {
    return json{{"label", label},     {"family", family},     {"A", w.a.size()},   {"B", w.b.size()},
                {"C", w.c.size()},    {"J", w.j.size()},      {"Jp", w.jp.size()}, {"W", w.w.size()},
                {"checks", r.checks.size()}, {"pass", r.all_passed()}};
}

int cmd_corpus(const CorpusOptions& opts) {
    json items = json::array();
    bool failed = false, unknown = false;
    auto record = [&](const std::string& label, const std::string& family, const BiAmalgamation& w, const Report& r) {
        failed = failed || r.any_failed();
        unknown = unknown || r.any_unknown();
        print_report_lines(label, r);
        items.push_back(summary(label, family, w, r));
    };

    struct Golden {
        std::int64_t n, gen;
        std::size_t primes;
    };
    for (const Golden& gd : {Golden{4, 2, 1}, Golden{6, 3, 3}}) {
        const FiniteRing a = make_zmod(gd.n);
        const BiAmalgamation w = duplication(a, ideal_generated(a, {a.scale(a.one(), gd.gen)}));
        Report r = suite(w);
        const std::size_t primes = spec_bowtie(w).entries.size();
        r.add("|Spec W| = " + std::to_string(gd.primes), primes == gd.primes, std::to_string(primes) + " primes");
        record("Z/" + std::to_string(gd.n) + " dup (" + std::to_string(gd.gen) + ")", "golden", w, r);
    }

    std::vector<CorpusInstance> corpus = generate_corpus(opts);
    for (const auto& inst : corpus) {
        const BiAmalgamation w = bi_amalgamate(inst.f, inst.g, inst.j, inst.jp);
        record(inst.label, inst.family, w, suite(w));
    }
    json doc{{"schema", json_schema}, {"seed", opts.seed}, {"max_order", opts.max_order}, {"instances", items},
             {"pass", !failed && !unknown}};
    std::cout << dump(doc);
    return failed ? 1 : unknown ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bi-amalgamations of finite commutative rings"};
    app.require_subcommand(1);

    std::string path, name;
    auto* run = app.add_subcommand("run", "Evaluate a script and print the session as JSON");
    run->add_option("file", path, "Script path, or - for stdin")->required();
    auto* verify = app.add_subcommand("verify", "Evaluate a script and report every check");
    verify->add_option("file", path, "Script path, or - for stdin")->required();
    auto* exp = app.add_subcommand("export", "Print one binding as JSON");
    exp->add_option("file", path, "Script path, or - for stdin")->required();
    exp->add_option("name", name, "Binding name")->required();
    auto* fmt = app.add_subcommand("fmt", "Print a script in canonical form");
    fmt->add_option("file", path, "Script path, or - for stdin")->required();

    CorpusOptions opts;
    auto* corpus = app.add_subcommand("corpus", "Run the golden and seeded randomized suites");
    corpus->add_option("--seed", opts.seed, "RNG seed")->capture_default_str();
    corpus->add_option("--count", opts.count, "Number of instances")->capture_default_str();
    corpus->add_option("--max-order", opts.max_order, "Bound on |A|, |B|, |C| and |W|")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        if (*run) return cmd_run(path);
        if (*verify) return cmd_verify(path);
        if (*exp) return cmd_export(path, name);
        if (*fmt) return cmd_fmt(path);
        return cmd_corpus(opts);
    } catch (const Error& e) {
        std::cerr << "biamalg: " << to_string(e.code()) << ": " << e.what() << "\n";
        return e.code() == Errc::budget_exceeded || e.code() == Errc::size_cap ? 3 : exit_usage;
    }
}
