// padic-hyper: run congruence sweeps and evaluate single expressions.
// Exit codes: 0 all hold, 1 congruence failure or evaluation error, 2 usage.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "padic/gamma.hpp"
#include "padic/hyper.hpp"
#include "padic/numtheory.hpp"
#include "padic/registry.hpp"
#include "padic/report.hpp"

namespace {

using namespace padic;

std::vector<Rational> parse_pool_spec(const std::string& spec) {
    if (spec.empty() || spec == "default") return default_pool();
    std::vector<Rational> pool;
    if (spec.rfind("dens:", 0) == 0) {
        std::vector<int64_t> dens;
        std::stringstream ss(spec.substr(5));
        std::string tok;
        while (std::getline(ss, tok, ',')) dens.push_back(std::stoll(tok));
        return pool_with_denominators(dens);
    }
    if (spec.rfind("vals:", 0) == 0) {
        std::stringstream ss(spec.substr(5));
        std::string tok;
        while (std::getline(ss, tok, ',')) pool.push_back(Rational::parse(tok));
        return pool;
    }
    throw CLI::ValidationError("--params expects 'default', 'dens:...' or 'vals:...'");
}

std::pair<uint64_t, uint64_t> parse_prime_range(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw CLI::ValidationError("--primes expects lo:hi");
    return {std::stoull(s.substr(0, colon)), std::stoull(s.substr(colon + 1))};
}

int cmd_verify(const std::string& theorem, const std::string& primes, const std::string& params,
               int z_samples, uint64_t seed, const std::string& format, int jobs, int strength,
               size_t tuple_cap, bool timings) {
    auto [lo, hi] = parse_prime_range(primes);
    SweepOptions opt;
    opt.prime_lo = lo;
    opt.prime_hi = hi;
    opt.pool = parse_pool_spec(params);
    opt.z_samples = z_samples;
    opt.seed = seed;
    opt.jobs = jobs;
    opt.tuple_cap = tuple_cap;
    opt.timings = timings;

    std::vector<std::string> ids;
    if (theorem == "all") {
        for (const auto& info : list_theorems()) ids.push_back(info.id);
    } else {
        find_theorem(theorem); // raises UnknownTheorem
        ids.push_back(theorem);
    }
    (void)strength; // strength is fixed per registry entry (Kilbourn pins 3)

    std::vector<SweepReport> reports;
    uint64_t fails = 0, errors = 0;
    for (const auto& id : ids) {
        reports.push_back(sweep(id, opt));
        fails += reports.back().fails.size();
        errors += reports.back().errors.size();
    }

    if (format == "json") {
        if (reports.size() == 1)
            std::cout << report_to_json(reports[0]);
        else
            std::cout << reports_to_json(reports);
    } else if (format == "csv") {
        write_report_csv_header(std::cout);
        for (const auto& r : reports) write_report_csv(std::cout, r);
    } else {
        for (const auto& r : reports) write_report_text(std::cout, r);
    }
    return (fails == 0 && errors == 0) ? 0 : 1;
}

int cmd_eval_series(const std::string& series, const std::string& upper, const std::string& lower,
                    const std::string& z, const std::string& trunc, uint64_t p, int prec) {
    PrimeContext ctx(p);
    SeriesSpec spec;
    std::stringstream su(upper), sl(lower);
    std::string tok;
    while (std::getline(su, tok, ',')) spec.upper.push_back(Rational::parse(tok));
    while (std::getline(sl, tok, ',')) spec.lower.push_back(Rational::parse(tok));
    spec.z = Rational::parse(z);
    spec.truncation = (trunc == "p-1") ? static_cast<int64_t>(p) - 1 : std::stoll(trunc);
    if (!series.empty()) {
        // sanity: "mFn" shape must match the parameter counts
        size_t m = spec.upper.size(), n = spec.lower.size();
        std::string expect = std::to_string(m) + "F" + std::to_string(n);
        if (series != expect) {
            std::cerr << "series shape " << series << " does not match parameters (" << expect
                      << ")\n";
            return 2;
        }
    }
    Padic v = truncated_hyper(spec, ctx, prec);
    if (!v.is_exact_zero() && v.valuation() < 0) {
        int64_t val = v.valuation();
        std::cout << "valuation " << val << ", unit "
                  << v.scaled_by_p_pow(-val).to_residue(prec).value << " mod p^" << prec << "\n";
        return 0;
    }
    std::cout << v.to_residue(prec).value << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"p-adic gamma, truncated hypergeometric series and congruence sweeps"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "sweep one or all congruence theorems");
    std::string theorem = "all", primes = "3:97", params = "default", format = "text";
    int z_samples = 20, jobs = 1, strength = 2;
    uint64_t seed = 0;
    size_t tuple_cap = 400;
    bool timings = false;
    verify->add_option("--theorem", theorem, "theorem id or 'all'");
    verify->add_option("--primes", primes, "prime range lo:hi");
    verify->add_option("--params", params, "pool spec: default | dens:2,3,4 | vals:1/2,1/3");
    verify->add_option("--z-samples", z_samples, "z samples per prime");
    verify->add_option("--seed", seed, "seed for z sampling");
    verify->add_option("--format", format, "text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    verify->add_option("--jobs", jobs, "worker threads (1 = serial reference)");
    verify->add_option("--strength", strength, "modulus exponent override (informational)");
    verify->add_option("--tuple-cap", tuple_cap, "per-prime tuple cap for arity >= 3");
    verify->add_flag("--timings", timings, "fill duration_ms (breaks byte-determinism)");

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate one series or gamma value");
    std::string series, upper, lower, zarg = "1", trunc = "p-1", alpha;
    uint64_t p = 5;
    int prec = 2;
    bool gamma_mode = false;
    eval->add_option("--series", series, "shape tag like 2F1 (checked against parameters)");
    eval->add_option("--upper", upper, "comma-separated upper parameters");
    eval->add_option("--lower", lower, "comma-separated lower parameters");
    eval->add_option("--z", zarg, "argument (fraction)");
    eval->add_option("--trunc", trunc, "truncation index or 'p-1'");
    eval->add_option("--p", p, "odd prime")->required();
    eval->add_option("--prec", prec, "precision exponent 2 or 3");
    eval->add_flag("--gamma", gamma_mode, "evaluate Gamma_p(alpha) instead of a series");
    eval->add_option("--alpha", alpha, "gamma argument (fraction)");

    // list
    auto* list = app.add_subcommand("list", "list registered theorems");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(list)) {
            for (const auto& info : padic::list_theorems()) {
                const char* mode = info.mode == padic::CheckMode::Numeric
                                       ? "numeric"
                                       : (info.mode == padic::CheckMode::PolynomialInZ
                                              ? "polynomial"
                                              : "numeric+polynomial");
                std::printf("%-32s arity=%d  mode=%-20s %s\n", info.id.c_str(), info.arity, mode,
                            info.anchor.c_str());
            }
            return 0;
        }
        if (app.got_subcommand(verify))
            return cmd_verify(theorem, primes, params, z_samples, seed, format, jobs, strength,
                              tuple_cap, timings);
        if (app.got_subcommand(eval)) {
            if (prec == 3 && p > 100) {
                // the p^3 table is a one-time O(p^3) build; keep it desk-scale
                std::cerr << "--prec 3 supports p <= 100\n";
                return 2;
            }
            if (gamma_mode) {
                padic::PrimeContext ctx(p);
                auto v = padic::gamma_p(padic::Rational::parse(alpha), ctx, prec);
                std::cout << v.value << "\n";
                return 0;
            }
            return cmd_eval_series(series, upper, lower, zarg, trunc, p, prec);
        }
    } catch (const padic::Error& e) {
        if (e.kind() == padic::Err::UnknownTheorem || e.kind() == padic::Err::BadArgument) {
            std::cerr << e.what() << "\n";
            return 2;
        }
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 2;
}
