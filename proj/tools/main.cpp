#include <CLI11.hpp>

#include <euler2/errors.hpp>
#include <euler2/sequences.hpp>
#include <euler2/table.hpp>
#include <euler2/verify.hpp>

#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using euler2::Rat;

struct Range {
    int lo = 0;
    int hi = 0;
};

int parse_int(const std::string& text) {
    std::size_t consumed = 0;
    int value = std::stoi(text, &consumed);
    if (consumed != text.size()) {
        throw euler2::Error("not an integer: '" + text + "'");
    }
    return value;
}

// "a..b" inclusive on both ends, or a single integer.
Range parse_range(const std::string& text) {
    auto pos = text.find("..");
    if (pos == std::string::npos) {
        int v = parse_int(text);
        return {v, v};
    }
    Range r{parse_int(text.substr(0, pos)), parse_int(text.substr(pos + 2))};
    if (r.lo > r.hi) {
        throw euler2::Error("empty range: '" + text + "'");
    }
    return r;
}

struct FamilyInfo {
    const char* name;
    bool needs_k;
    bool needs_N;
    std::function<Rat(int n, int param)> value;  // param is k or N when needed
};

const std::vector<FamilyInfo>& families() {
    static const std::vector<FamilyInfo> table = {
        {"euler", false, false, [](int n, int) { return Rat(euler2::euler_number(n)); }},
        {"comp-euler", false, false, [](int n, int) { return euler2::comp_euler(n); }},
        {"bernoulli", false, false, [](int n, int) { return euler2::bernoulli(n); }},
        {"poly-bernoulli", true, false,
         [](int n, int k) { return euler2::poly_bernoulli(n, k); }},
        {"poly-euler2", true, false,
         [](int n, int k) { return euler2::poly_euler2(n, k); }},
        {"hyper-euler", false, true,
         [](int n, int N) { return euler2::hyper_euler(N, n); }},
        {"hyper-euler2", false, true,
         [](int n, int N) { return euler2::hyper_euler2(N, n); }},
    };
    return table;
}

const FamilyInfo& lookup_family(const std::string& name) {
    for (const auto& info : families()) {
        if (name == info.name) {
            return info;
        }
    }
    std::string known;
    for (const auto& info : families()) {
        known += std::string(known.empty() ? "" : ", ") + info.name;
    }
    throw euler2::Error("unknown family '" + name + "' (known: " + known + ")");
}

// The family's parameter flag must be present exactly when the family
// needs it.
Range resolve_param(const FamilyInfo& family, const std::optional<std::string>& k,
                    const std::optional<std::string>& N) {
    if (family.needs_k) {
        if (!k) throw euler2::Error(std::string(family.name) + " requires --k");
        if (N) throw euler2::Error(std::string(family.name) + " does not take --N");
        return parse_range(*k);
    }
    if (family.needs_N) {
        if (!N) throw euler2::Error(std::string(family.name) + " requires --N");
        if (k) throw euler2::Error(std::string(family.name) + " does not take --k");
        return parse_range(*N);
    }
    if (k) throw euler2::Error(std::string(family.name) + " does not take --k");
    if (N) throw euler2::Error(std::string(family.name) + " does not take --N");
    return {0, 0};
}

int run_seq(const std::string& family, const std::optional<std::string>& k,
            const std::optional<std::string>& N, const std::string& nrange,
            const std::string& format) {
    const auto& info = lookup_family(family);
    Range params = resolve_param(info, k, N);
    Range nr = parse_range(nrange);

    euler2::Table table;
    table.corner = "n";
    table.caption = family;
    if (info.needs_k || info.needs_N) {
        const char* label = info.needs_k ? "k" : "N";
        table.caption += std::string(" ") + label + "=" + std::to_string(params.lo) + ".." +
                         std::to_string(params.hi);
        for (int p = params.lo; p <= params.hi; ++p) {
            table.col_labels.push_back(std::string(label) + "=" + std::to_string(p));
        }
    } else {
        table.col_labels.push_back("value");
    }
    table.caption += " n=" + std::to_string(nr.lo) + ".." + std::to_string(nr.hi);

    for (int n = nr.lo; n <= nr.hi; ++n) {
        table.row_labels.push_back(std::to_string(n));
        std::vector<Rat> row;
        for (int p = params.lo; p <= params.hi; ++p) {
            row.push_back(info.value(n, p));
        }
        table.cells.push_back(std::move(row));
    }

    if (format == "md") {
        std::cout << table.to_markdown();
    } else if (format == "csv") {
        std::cout << table.to_csv();
    } else {
        std::cout << table.to_json() << "\n";
    }
    return 0;
}

int run_value(const std::string& family, int n, const std::optional<std::string>& k,
              const std::optional<std::string>& N) {
    const auto& info = lookup_family(family);
    Range params = resolve_param(info, k, N);
    if (params.lo != params.hi) {
        throw euler2::Error("value takes a single parameter, not a range");
    }
    std::cout << euler2::to_string(info.value(n, params.lo)) << "\n";
    return 0;
}

int run_verify(const std::string& theorem, int nmax, int kmax, int pmax, int Nmax) {
    using euler2::VerifyReport;
    struct Entry {
        const char* name;
        std::function<VerifyReport()> run;
    };
    const std::vector<Entry> checkers = {
        {"recurrence-e2", [&] { return euler2::verify_recurrence_e2(nmax); }},
        {"denominator", [&] { return euler2::verify_denominator(nmax); }},
        {"sum1", [&] { return euler2::verify_sum1(nmax, kmax); }},
        {"duality", [&] { return euler2::verify_duality(nmax, kmax); }},
        {"pb-expansion", [&] { return euler2::verify_pb_expansion(nmax, kmax); }},
        {"positivity", [&] { return euler2::verify_positivity(nmax, kmax); }},
        {"congruences", [&] { return euler2::verify_congruences(nmax, kmax, pmax); }},
        {"products", [&] { return euler2::verify_products(Nmax, nmax); }},
        {"oracle", [&] { return euler2::verify_oracle_agreement(nmax, kmax, Nmax); }},
    };

    std::vector<VerifyReport> reports;
    bool matched = false;
    for (const auto& entry : checkers) {
        if (theorem == "all" || theorem == entry.name) {
            matched = true;
            reports.push_back(entry.run());
        }
    }
    if (!matched) {
        std::string known = "all";
        for (const auto& entry : checkers) {
            known += std::string(", ") + entry.name;
        }
        throw euler2::Error("unknown theorem '" + theorem + "' (known: " + known + ")");
    }
    for (const auto& report : reports) {
        std::cout << euler2::report_to_json(report) << "\n";
    }
    return euler2::exit_status(reports);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computation and verification of Euler numbers of the second kind,\n"
                 "poly-Euler and poly-Bernoulli numbers, and hypergeometric Euler numbers."};
    app.require_subcommand(1);

    std::string family, nrange, format = "md", theorem;
    std::optional<std::string> kflag, Nflag;
    int nvalue = 0;
    int nmax = euler2::kDefaultNmax;
    int kmax = euler2::kDefaultKmax;
    int pmax = euler2::kDefaultPmax;
    int Nmax = euler2::kDefaultLevelMax;

    auto* seq = app.add_subcommand("seq", "Print a sequence or a 2-D table of exact values");
    seq->add_option("family", family,
                    "one of: euler, comp-euler, bernoulli, poly-bernoulli, poly-euler2, "
                    "hyper-euler, hyper-euler2")
        ->required();
    seq->add_option("--n", nrange, "index range a..b or a single index")->required();
    seq->add_option("--k", kflag, "polylog order (range allowed)");
    seq->add_option("--N", Nflag, "hypergeometric level (range allowed)");
    seq->add_option("--format", format, "json, csv or md (default md)")
        ->check(CLI::IsMember({"json", "csv", "md"}));

    auto* value = app.add_subcommand("value", "Print a single exact value");
    value->add_option("family", family, "family name as for seq")->required();
    value->add_option("--n", nvalue, "sequence index")->required();
    value->add_option("--k", kflag, "polylog order");
    value->add_option("--N", Nflag, "hypergeometric level");

    auto* verify =
        app.add_subcommand("verify", "Run theorem checkers, one JSON report per line");
    verify->add_option("theorem", theorem,
                       "checker id or 'all': recurrence-e2, denominator, sum1, duality, "
                       "pb-expansion, positivity, congruences, products, oracle")
        ->required();
    verify->add_option("--nmax", nmax, "index sweep bound");
    verify->add_option("--kmax", kmax, "polylog order sweep bound");
    verify->add_option("--pmax", pmax, "prime sweep bound");
    verify->add_option("--Nmax", Nmax, "hypergeometric level sweep bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help
        }
        app.exit(e);
        return 2;
    }

    try {
        if (seq->parsed()) {
            return run_seq(family, kflag, Nflag, nrange, format);
        }
        if (value->parsed()) {
            return run_value(family, nvalue, kflag, Nflag);
        }
        return run_verify(theorem, nmax, kmax, pmax, Nmax);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
