#include "windmill/bench.hpp"

#include <chrono>
#include <utility>
#include <vector>

#include <json.hpp>

#include "windmill/errors.hpp"
#include "windmill/involution.hpp"
#include "windmill/solver.hpp"
#include "windmill/triple.hpp"

namespace windmill {

namespace {

std::vector<Nat> qualifying_primes(const Nat& lo, const Nat& hi) {
    std::vector<Nat> primes;
    if (hi < 5) return primes;
    Nat n = lo < 5 ? Nat(5) : lo;
    Nat rem = n % 4;
    if (rem != 1) n += (rem == 0) ? Nat(1) : Nat(5 - rem);
    for (; n <= hi; n += 4) {
        if (is_prime(n)) primes.push_back(n);
    }
    return primes;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

double BenchReport::mean_steps() const {
    if (samples == 0) return 0.0;
    mpq_class ratio(total_steps, samples);
    ratio.canonicalize();
    return ratio.get_d();
}

BenchReport run_range(const Nat& lo, const Nat& hi, const std::set<Algo>& algorithms) {
    if (lo > hi) throw DomainError("run_range: lo must not exceed hi");
    BenchReport report;
    report.lo = lo;
    report.hi = hi;
    report.samples = 0;
    report.total_steps = 0;
    report.max_steps = 0;
    report.max_steps_at = 0;
    report.algorithms = algorithms;

    std::vector<Nat> primes = qualifying_primes(lo, hi);
    report.samples = primes.size();
    if (primes.empty()) return report;

    bool with_windmill = algorithms.count(Algo::Windmill) > 0;
    bool with_brute = algorithms.count(Algo::Brute) > 0;

    // Warm-up pass, excluded from the timings.
    if (with_windmill) solve(primes.front());
    if (with_brute) brute_force_decompose(primes.front());

    for (const Nat& p : primes) {
        Decomposition windmill_result;
        if (with_windmill) {
            auto start = std::chrono::steady_clock::now();
            SolveOutcome outcome = solve(p);
            report.windmill_seconds += seconds_since(start);
            const auto* decomposed = std::get_if<Decomposed>(&outcome);
            if (decomposed == nullptr) {
                throw Disagreement("run_range: prime " + to_string(p) +
                                   " did not produce a decomposition");
            }
            windmill_result = decomposed->value;
            if (decomposed->steps > report.max_steps) {
                report.max_steps = decomposed->steps;
                report.max_steps_at = p;
            }
            report.total_steps += decomposed->steps;
            Nat orbit_period = period(zagier_flip, Triple{1, 1, p / 4}, p * p * p);
            report.period_histogram[orbit_period] += 1;
        }
        if (with_brute) {
            auto start = std::chrono::steady_clock::now();
            auto brute = brute_force_decompose(p);
            report.brute_seconds += seconds_since(start);
            if (!brute.has_value()) {
                throw Disagreement("run_range: brute force found no representation of prime " +
                                   to_string(p));
            }
            if (with_windmill) {
                bool same = (brute->first == windmill_result.u && brute->second == windmill_result.v) ||
                            (brute->first == windmill_result.v && brute->second == windmill_result.u);
                if (!same) {
                    throw Disagreement("run_range: algorithms disagree at " + to_string(p) + ": (" +
                                       to_string(windmill_result.u) + "," + to_string(windmill_result.v) +
                                       ") vs (" + to_string(brute->first) + "," + to_string(brute->second) +
                                       ")");
                }
            }
        }
    }
    return report;
}

std::map<Nat, Nat> period_histogram(const Nat& lo, const Nat& hi) {
    std::map<Nat, Nat> histogram;
    for (const Nat& p : qualifying_primes(lo, hi)) {
        histogram[period(zagier_flip, Triple{1, 1, p / 4}, p * p * p)] += 1;
    }
    return histogram;
}

std::string to_json(const BenchReport& report) {
    nlohmann::ordered_json j;
    j["lo"] = to_string(report.lo);
    j["hi"] = to_string(report.hi);
    j["samples"] = to_string(report.samples);
    nlohmann::ordered_json histogram = nlohmann::ordered_json::object();
    for (const auto& [period_value, count] : report.period_histogram) {
        histogram[to_string(period_value)] = to_string(count);
    }
    j["period_histogram"] = histogram;
    j["total_steps"] = to_string(report.total_steps);
    j["mean_steps"] = report.mean_steps();
    j["max_steps"] = to_string(report.max_steps);
    j["max_steps_at"] = to_string(report.max_steps_at);
    std::vector<std::string> names;
    if (report.algorithms.count(Algo::Windmill) > 0) names.push_back("windmill");
    if (report.algorithms.count(Algo::Brute) > 0) names.push_back("brute");
    j["algorithms"] = names;
    if (report.algorithms.count(Algo::Windmill) > 0) j["windmill_seconds"] = report.windmill_seconds;
    if (report.algorithms.count(Algo::Brute) > 0) j["brute_seconds"] = report.brute_seconds;
    return j.dump();
}

}  // namespace windmill
