// dedekind — exact Dedekind-sum evaluation, identity verification, table
// generation and benchmarking.
//
// Exit codes: 0 success / agreement, 1 mathematical disagreement or identity
// failure, 2 usage or input error.  JSON goes to stdout as a single
// document; diagnostics go to stderr.

#include <dedekind/dedekind.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using dedekind::CoprimePair;
using dedekind::Integer;
using dedekind::Rational;

Integer parse_integer(const std::string& text) {
    std::size_t start = (!text.empty() && text[0] == '-') ? 1 : 0;
    if (start == text.size())
        throw std::invalid_argument("malformed integer: '" + text + "'");
    for (std::size_t i = start; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw std::invalid_argument("malformed integer: '" + text + "'");
    return Integer(text);
}

struct EvalOptions {
    std::string p;
    std::string q;
    std::string method = "fast";
    std::string sum = "S";
    std::string format = "plain";
};

int run_eval(const EvalOptions& opt) {
    Integer p = parse_integer(opt.p);
    Integer q = parse_integer(opt.q);
    if (p < 1 || q < 1) {
        std::cerr << "p and q must be positive\n";
        return 2;
    }
    if (gcd(p, q) != 1) {
        std::cerr << "p and q must be coprime\n";
        return 2;
    }
    CoprimePair pair{p, q};
    // s differs from S by a fixed shift, so every method shares it
    const Rational shift = opt.sum == "s" ? Rational(q - 1, 4) : Rational(0);

    std::optional<Rational> naive;
    std::optional<Rational> fast;
    std::optional<Rational> closed;
    if (opt.method == "naive" || opt.method == "all") naive = dedekind::naive_S(pair) - shift;
    if (opt.method == "fast" || opt.method == "all") fast = dedekind::fast_S(pair) - shift;
    if (opt.method == "closed" || opt.method == "all") {
        if (auto form = dedekind::closed_form_S(pair)) {
            closed = form->value - shift;
        } else if (opt.method == "closed") {
            std::cerr << "no closed form applies\n";
            return 2;
        }
    }

    std::vector<std::pair<std::string, std::optional<Rational>>> values{
        {"naive", naive}, {"fast", fast}, {"closed", closed}};
    bool agreement = true;
    const Rational* reference = nullptr;
    for (const auto& [name, value] : values) {
        if (!value) continue;
        if (reference && *value != *reference) agreement = false;
        if (!reference) reference = &*value;
    }

    if (opt.format == "json") {
        nlohmann::json doc{{"p", p.str()}, {"q", q.str()}, {"sum", opt.sum}, {"method", opt.method}};
        if (opt.method == "all") {
            nlohmann::json vals;
            for (const auto& [name, value] : values)
                vals[name] = value ? dedekind::rational_to_json(*value) : nlohmann::json(nullptr);
            doc["values"] = std::move(vals);
            doc["agreement"] = agreement;
        } else {
            for (const auto& [name, value] : values)
                if (value) doc["value"] = dedekind::rational_to_json(*value);
        }
        std::cout << doc.dump(2) << "\n";
    } else {
        if (opt.method == "all") {
            for (const auto& [name, value] : values)
                std::cout << name << " " << (value ? value->str() : "n/a") << "\n";
            std::cout << "agreement " << (agreement ? "true" : "false") << "\n";
        } else {
            for (const auto& [name, value] : values)
                if (value) std::cout << value->str() << "\n";
        }
    }
    return agreement ? 0 : 1;
}

struct VerifyOptions {
    std::string identities;
    long long q_max = 0;
    std::string format = "json";
    bool fail_fast = false;
};

int run_verify(const VerifyOptions& opt) {
    std::vector<dedekind::IdentityId> ids;
    if (opt.identities == "all") {
        ids = dedekind::default_identity_set();
    } else {
        std::string token;
        std::stringstream stream(opt.identities);
        while (std::getline(stream, token, ',')) {
            auto id = dedekind::identity_from_name(token);
            if (!id) {
                std::cerr << "unknown identity: '" << token << "'\nvalid identities:";
                for (const auto& [tag, name] : dedekind::kIdentityNames) std::cerr << " " << name;
                std::cerr << "\n";
                return 2;
            }
            ids.push_back(*id);
        }
        if (ids.empty()) {
            std::cerr << "no identities requested\n";
            return 2;
        }
    }
    if (opt.q_max < 2) {
        std::cerr << "--q-max must be at least 2\n";
        return 2;
    }

    dedekind::SweepOptions sweep_opts;
    sweep_opts.q_max = opt.q_max;
    sweep_opts.fail_fast = opt.fail_fast;
    dedekind::SweepReport report = dedekind::sweep(ids, sweep_opts);

    if (opt.format == "csv") {
        std::cout << dedekind::report_to_csv(report);
    } else {
        std::cout << dedekind::report_to_json(report).dump(2) << "\n";
    }
    return report.total_failed() == 0 ? 0 : 1;
}

struct TableOptions {
    long long q_max = 0;
    std::string modulus_filter;
    std::string out_path;
};

int run_table(const TableOptions& opt) {
    if (opt.q_max < 2) {
        std::cerr << "--q-max must be at least 2\n";
        return 2;
    }
    std::optional<long long> wanted_b;
    if (!opt.modulus_filter.empty()) {
        if (opt.modulus_filter.size() < 3 || opt.modulus_filter.rfind("b=", 0) != 0) {
            std::cerr << "--modulus-filter must look like b=<k>\n";
            return 2;
        }
        try {
            wanted_b = std::stoll(opt.modulus_filter.substr(2));
        } catch (const std::exception&) {
            std::cerr << "--modulus-filter must look like b=<k>\n";
            return 2;
        }
    }

    std::ofstream file;
    if (!opt.out_path.empty()) {
        file.open(opt.out_path, std::ios::binary);
        if (!file) {
            std::cerr << "cannot open output file: " << opt.out_path << "\n";
            return 2;
        }
    }
    std::ostream& os = opt.out_path.empty() ? std::cout : file;

    os << "p,q,b,S_num,S_den,s_num,s_den\n";
    for (long long q = 2; q <= opt.q_max; ++q) {
        for (long long p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            long long b = q % p;
            if (wanted_b && b != *wanted_b) continue;
            CoprimePair pair{Integer(p), Integer(q)};
            Rational S = dedekind::fast_S(pair);
            Rational s = S - Rational(q - 1, 4);
            os << p << ',' << q << ',' << b << ',' << S.num() << ',' << S.den() << ','
               << s.num() << ',' << s.den() << '\n';
        }
    }
    return 0;
}

struct BenchOptions {
    int q_bits = 0;
    long long trials = 0;
    std::uint64_t seed = 0;
    bool seeded = false;
};

Integer random_bits(std::mt19937_64& rng, int bits) {
    Integer v = 0;
    for (; bits >= 64; bits -= 64) v = (v << 64) | Integer(rng());
    if (bits > 0) v = (v << bits) | Integer(rng() & (~std::uint64_t(0) >> (64 - bits)));
    return v;
}

CoprimePair random_pair(std::mt19937_64& rng, int q_bits) {
    Integer q = (Integer(1) << (q_bits - 1)) | random_bits(rng, q_bits - 1);
    for (;;) {
        Integer p = random_bits(rng, q_bits) % (q - 1) + 1;
        if (gcd(p, q) == 1) return {std::move(p), std::move(q)};
    }
}

long long median_ns(std::vector<long long> samples) {
    std::sort(samples.begin(), samples.end());
    std::size_t n = samples.size();
    return n % 2 ? samples[n / 2] : (samples[n / 2 - 1] + samples[n / 2]) / 2;
}

long long p95_ns(std::vector<long long> samples) {
    std::sort(samples.begin(), samples.end());
    std::size_t idx = (samples.size() * 95 + 99) / 100;
    return samples[std::min(samples.size() - 1, idx == 0 ? 0 : idx - 1)];
}

int run_bench(const BenchOptions& opt) {
    if (opt.q_bits < 8 || opt.q_bits > 256) {
        std::cerr << "--q-bits must be between 8 and 256\n";
        return 2;
    }
    if (opt.trials < 1) {
        std::cerr << "--trials must be at least 1\n";
        return 2;
    }
    std::uint64_t seed = opt.seeded ? opt.seed : std::random_device{}();
    std::mt19937_64 rng(seed);

    const bool run_naive = opt.q_bits <= 24;
    std::vector<long long> fast_ns;
    std::vector<long long> naive_ns;
    int max_depth = 0;
    bool depth_ok = true;
    bool values_agree = true;

    using clock = std::chrono::steady_clock;
    for (long long trial = 0; trial < opt.trials; ++trial) {
        CoprimePair pair = random_pair(rng, opt.q_bits);

        auto t0 = clock::now();
        dedekind::FastEval fast = dedekind::fast_S_traced(pair);
        auto t1 = clock::now();
        fast_ns.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
        max_depth = std::max(max_depth, fast.depth);
        depth_ok = depth_ok && dedekind::depth_within_bound(fast.depth, pair);

        if (run_naive) {
            auto n0 = clock::now();
            Rational naive = dedekind::naive_S(pair);
            auto n1 = clock::now();
            naive_ns.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(n1 - n0).count());
            if (naive != fast.value) values_agree = false;
        }
    }

    nlohmann::json doc{
        {"q_bits", opt.q_bits},
        {"trials", opt.trials},
        {"seed", std::to_string(seed)},
        {"fast_median_ns", median_ns(fast_ns)},
        {"fast_p95_ns", p95_ns(fast_ns)},
        {"max_depth", max_depth},
        {"depth_within_bound", depth_ok},
    };
    if (run_naive) {
        long long fast_med = median_ns(fast_ns);
        long long naive_med = median_ns(naive_ns);
        doc["naive_median_ns"] = naive_med;
        doc["naive_p95_ns"] = p95_ns(naive_ns);
        doc["speedup"] = fast_med > 0 ? static_cast<double>(naive_med) / static_cast<double>(fast_med)
                                      : 0.0;
        doc["values_agree"] = values_agree;
    } else {
        doc["naive_median_ns"] = nullptr;
        doc["naive_p95_ns"] = nullptr;
        doc["speedup"] = nullptr;
    }
    std::cout << doc.dump(2) << "\n";
    return (values_agree && depth_ok) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Dedekind sums: evaluation, identity verification, tables, benchmarks"};
    app.require_subcommand(1);

    EvalOptions eval_opt;
    CLI::App* eval = app.add_subcommand("eval", "Evaluate S(p,q) or s(p,q) exactly");
    eval->add_option("--p", eval_opt.p, "first argument (decimal)")->required();
    eval->add_option("--q", eval_opt.q, "modulus (decimal)")->required();
    eval->add_option("--method", eval_opt.method, "evaluation route")
        ->check(CLI::IsMember({"naive", "fast", "closed", "all"}));
    eval->add_option("--sum", eval_opt.sum, "which sum to evaluate")
        ->check(CLI::IsMember({"S", "s"}));
    eval->add_option("--format", eval_opt.format, "output format")
        ->check(CLI::IsMember({"plain", "json"}));

    VerifyOptions verify_opt;
    CLI::App* verify = app.add_subcommand("verify", "Sweep identities over all coprime pairs");
    verify->add_option("--identities", verify_opt.identities, "comma-separated names or 'all'")
        ->required();
    verify->add_option("--q-max", verify_opt.q_max, "largest modulus to sweep")->required();
    verify->add_option("--format", verify_opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    verify->add_flag("--fail-fast", verify_opt.fail_fast, "stop at the first failure");

    TableOptions table_opt;
    CLI::App* table = app.add_subcommand("table", "Stream a CSV table of S and s values");
    table->add_option("--q-max", table_opt.q_max, "largest modulus")->required();
    table->add_option("--modulus-filter", table_opt.modulus_filter, "keep rows with q mod p = k (b=<k>)");
    table->add_option("--out", table_opt.out_path, "write to file instead of stdout");

    BenchOptions bench_opt;
    CLI::App* bench = app.add_subcommand("bench", "Time the fast evaluator on random pairs");
    bench->add_option("--q-bits", bench_opt.q_bits, "bit length of the random modulus")->required();
    bench->add_option("--trials", bench_opt.trials, "number of random pairs")->required();
    bench->add_option("--seed", bench_opt.seed, "RNG seed")->each([&](const std::string&) {
        bench_opt.seeded = true;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(eval)) return run_eval(eval_opt);
        if (app.got_subcommand(verify)) return run_verify(verify_opt);
        if (app.got_subcommand(table)) return run_table(table_opt);
        if (app.got_subcommand(bench)) return run_bench(bench_opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
