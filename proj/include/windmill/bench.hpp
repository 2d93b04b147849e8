#pragma once

#include <map>
#include <set>
#include <string>

#include "windmill/nat.hpp"

namespace windmill {

enum class Algo { Windmill, Brute };

/// Aggregate statistics over every prime p = 1 (mod 4) in a range.
/// Orbit statistics (histogram, steps) are gathered when the windmill
/// algorithm is selected; timings cover exactly the selected algorithms,
/// wall-clock, with one untimed warm-up pass excluded.
struct BenchReport {
    Nat lo;
    Nat hi;
    Nat samples;                       // primes = 1 (mod 4) in [lo, hi]
    std::map<Nat, Nat> period_histogram;  // orbit period -> count
    Nat total_steps;
    Nat max_steps;
    Nat max_steps_at;
    double windmill_seconds = 0.0;
    double brute_seconds = 0.0;
    std::set<Algo> algorithms;

    double mean_steps() const;
};

/// Run the selected algorithms over every prime p = 1 (mod 4) in
/// [lo, hi]; when both are selected their decompositions are compared as
/// unordered pairs and any mismatch raises Disagreement.
BenchReport run_range(const Nat& lo, const Nat& hi, const std::set<Algo>& algorithms);

/// Orbit period of (1, 1, p div 4) under zagier∘flip, counted per prime
/// p = 1 (mod 4) in [lo, hi]. Every period is odd.
std::map<Nat, Nat> period_histogram(const Nat& lo, const Nat& hi);

/// The report as a single-line JSON document; Nats are decimal strings.
std::string to_json(const BenchReport& report);

}  // namespace windmill
