// gk: evaluate g_k(n) = n(n+1)...(n+k)/lcm(n,...,n+k), compute its exact
// period P_k, and run the statement-verification suite. All big integers are
// emitted as decimal strings so output survives JSON parsers losslessly.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "gkp/arith.hpp"
#include "gkp/gfun.hpp"
#include "gkp/period.hpp"
#include "gkp/verify.hpp"

namespace {

using nlohmann::json;

json factors_json(const gkp::FactoredNat& f) {
    json arr = json::array();
    for (const auto& [p, e] : f.factors)
        arr.push_back({{"p", std::to_string(p)}, {"e", e}});
    return arr;
}

void emit(const std::string& command, json payload) {
    const json doc{{"schema_version", "1"},
                   {"command", command},
                   {"payload", std::move(payload)}};
    std::cout << doc.dump(2) << '\n';
}

int run_g(std::int64_t n, std::int64_t k, const std::string& method, bool verbose) {
    gkp::Nat value;
    if (method == "direct")
        value = gkp::g_direct(n, k);
    else if (method == "rec")
        value = gkp::g_rec(n, k);
    else
        value = gkp::g_via_primes(n, k);
    json payload{{"n", std::to_string(n)},
                 {"k", k},
                 {"method", method},
                 {"value", value.str()}};
    if (verbose) {
        const gkp::PrimeTable primes = gkp::sieve(std::max<std::int64_t>(k, 2));
        payload["factors"] = factors_json(gkp::factor_smooth(value, primes));
        json vals = json::array();
        for (std::int64_t p : primes.primes) {
            if (p > k)
                break;
            vals.push_back({{"p", std::to_string(p)}, {"v", gkp::vp(p, value)}});
        }
        payload["valuations"] = vals;
    }
    emit("g", std::move(payload));
    return 0;
}

int run_period(std::int64_t k, bool oracle, int window_multiplier, bool force) {
    const gkp::PeriodResult res =
        oracle ? gkp::oracle_period(k, window_multiplier, force) : gkp::exact_period(k);
    json payload{{"k", k},
                 {"period", res.period.str()},
                 {"period_factors", factors_json(res.period_factored)},
                 {"bad_prime",
                  res.bad_prime ? json(std::to_string(*res.bad_prime)) : json(nullptr)},
                 {"lcm_upto_k", res.lcm_upto_k_factored.expand().str()},
                 {"lcm_upto_k_factors", factors_json(res.lcm_upto_k_factored)},
                 {"method", gkp::to_string(res.method)}};
    emit("period", std::move(payload));
    return 0;
}

int run_table(std::int64_t k_min, std::int64_t k_max, const std::string& format) {
    if (k_min < 0 || k_min > k_max)
        throw std::invalid_argument("table: requires 0 <= k_min <= k_max");
    const gkp::PrimeTable primes = gkp::sieve(std::max<std::int64_t>(k_max, 2));
    const bool csv = format == "csv";
    json rows = json::array();
    if (csv)
        std::cout << "k,period,lcm_upto_k,bad_prime,ratio\n";
    for (std::int64_t k = k_min; k <= k_max; ++k) {
        const gkp::PeriodResult res = gkp::exact_period(k, primes);
        const gkp::Nat lcm_value = res.lcm_upto_k_factored.expand();
        gkp::Nat ratio, rem;
        boost::multiprecision::divide_qr(lcm_value, res.period, ratio, rem);
        if (rem != 0)
            throw gkp::invariant_violation("table: period does not divide lcm(1,...,k)");
        const std::string bad = res.bad_prime ? std::to_string(*res.bad_prime) : "";
        if (csv) {
            std::cout << k << ',' << res.period.str() << ',' << lcm_value.str() << ','
                      << bad << ',' << ratio.str() << '\n';
        } else {
            rows.push_back({{"k", k},
                            {"period", res.period.str()},
                            {"lcm_upto_k", lcm_value.str()},
                            {"bad_prime", res.bad_prime ? json(bad) : json(nullptr)},
                            {"ratio", ratio.str()}});
        }
    }
    if (!csv)
        emit("table", json{{"rows", std::move(rows)}});
    return 0;
}

int run_verify(const std::string& profile_name, const std::string& statement_name) {
    const gkp::Profile profile = *gkp::parse_profile(profile_name);
    std::vector<gkp::CheckReport> reports;
    if (statement_name.empty()) {
        reports = gkp::run_all(profile);
    } else {
        reports.push_back(gkp::run_statement(*gkp::parse_statement(statement_name), profile));
    }
    bool all_passed = true;
    json rep_arr = json::array();
    for (const auto& r : reports) {
        all_passed = all_passed && r.passed;
        rep_arr.push_back({{"statement", gkp::to_string(r.id)},
                           {"params", r.params},
                           {"passed", r.passed},
                           {"counterexamples", r.counterexamples},
                           {"elapsed_seconds", r.elapsed.count()},
                           {"notes", r.notes}});
    }
    json payload{{"profile", profile_name},
                 {"reports", std::move(rep_arr)},
                 {"all_passed", all_passed}};
    if (!statement_name.empty())
        payload["statement"] = statement_name;
    emit("verify", std::move(payload));
    return all_passed ? 0 : 1;
}

std::vector<std::string> statement_names() {
    std::vector<std::string> names;
    for (gkp::StatementId id : gkp::kAllStatements)
        names.emplace_back(gkp::to_string(id));
    return names;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact periods of g_k(n) = n(n+1)...(n+k)/lcm(n,...,n+k)"};
    app.require_subcommand(1);
    bool verbose = false;
    app.add_flag("--verbose", verbose, "include factorizations in output");

    auto* g_cmd = app.add_subcommand("g", "evaluate g_k(n)");
    std::int64_t g_n = 0, g_k = 0;
    std::string g_method = "direct";
    g_cmd->add_option("--n", g_n, "window start")->required();
    g_cmd->add_option("--k", g_k, "window length minus one")->required();
    g_cmd->add_option("--method", g_method, "evaluation route")
        ->check(CLI::IsMember({"direct", "rec", "primes"}));

    auto* period_cmd = app.add_subcommand("period", "exact period P_k of g_k");
    std::int64_t period_k = 0;
    bool use_oracle = false, force = false;
    int window_multiplier = 1;
    period_cmd->add_option("--k", period_k)->required();
    period_cmd->add_flag("--oracle", use_oracle,
                         "measure by brute-force tabulation instead of the closed form");
    period_cmd->add_option("--window-multiplier", window_multiplier,
                           "tabulate this many copies of lcm(1,...,k)")
        ->check(CLI::PositiveNumber);
    period_cmd->add_flag("--force", force, "override the oracle tabulation guard (k <= 20)");

    auto* table_cmd = app.add_subcommand("table", "P_k for a range of k");
    std::int64_t k_min = 0, k_max = 0;
    std::string format = "json";
    table_cmd->add_option("--k-min", k_min);
    table_cmd->add_option("--k-max", k_max)->required();
    table_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    auto* verify_cmd = app.add_subcommand("verify", "run the statement checks");
    std::string profile = "quick", statement;
    verify_cmd->add_option("--profile", profile)->check(CLI::IsMember({"quick", "full"}));
    verify_cmd->add_option("--statement", statement, "run a single statement")
        ->check(CLI::IsMember(statement_names()));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*g_cmd)
            return run_g(g_n, g_k, g_method, verbose);
        if (*period_cmd)
            return run_period(period_k, use_oracle, window_multiplier, force);
        if (*table_cmd)
            return run_table(k_min, k_max, format);
        return run_verify(profile, statement);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const gkp::resource_limit_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
