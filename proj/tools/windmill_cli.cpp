#include <cstdint>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "windmill/bench.hpp"
#include "windmill/errors.hpp"
#include "windmill/involution.hpp"
#include "windmill/mills.hpp"
#include "windmill/render.hpp"
#include "windmill/solver.hpp"

namespace {

using json = nlohmann::ordered_json;
using windmill::Nat;

/// Malformed command-line input; maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Nat parse_nat_arg(const std::string& text, const char* what) {
    auto parsed = windmill::parse_nat(text);
    if (!parsed) {
        throw UsageError(std::string(what) + " must be a plain decimal number (no sign, no separators): '" +
                         text + "'");
    }
    return *parsed;
}

windmill::Triple parse_triple_arg(const std::string& text) {
    std::vector<std::string> parts;
    std::string part;
    std::istringstream stream(text);
    while (std::getline(stream, part, ',')) parts.push_back(part);
    if (parts.size() != 3 || text.ends_with(',')) {
        throw UsageError("--triple expects x,y,z: '" + text + "'");
    }
    return {parse_nat_arg(parts[0], "triple x"), parse_nat_arg(parts[1], "triple y"),
            parse_nat_arg(parts[2], "triple z")};
}

int cmd_decompose(const std::string& n_text, bool prime_only, bool as_json) {
    Nat n = parse_nat_arg(n_text, "N");
    if (prime_only && !windmill::is_prime(n)) {
        std::cerr << "error: " << n << " is composite (rejected by --prime-only)\n";
        return 1;
    }
    windmill::SolveOutcome outcome = windmill::solve(n);
    if (const auto* d = std::get_if<windmill::Decomposed>(&outcome)) {
        if (as_json) {
            json j;
            j["n"] = windmill::to_string(n);
            j["u"] = windmill::to_string(d->value.u);
            j["v"] = windmill::to_string(d->value.v);
            j["steps"] = windmill::to_string(d->steps);
            j["period"] = windmill::to_string(2 * d->steps + 1);
            std::cout << j.dump() << '\n';
        } else {
            std::cout << n << " = " << d->value.u << "^2 + " << d->value.v << "^2\n";
        }
        return 0;
    }
    if (const auto* c = std::get_if<windmill::CompositeFactor>(&outcome)) {
        std::cerr << "composite: factor " << c->factor << " (after " << c->steps << " steps)\n";
        return 1;
    }
    auto reason = std::get<windmill::Inapplicable>(outcome).reason;
    if (reason == windmill::InapplicableReason::NotOneMod4) {
        std::cerr << "error: " << n << " is not 1 (mod 4)\n";
    } else {
        std::cerr << "error: " << n << " is a perfect square\n";
    }
    return 1;
}

int cmd_mills(const std::string& n_text, bool as_json) {
    Nat n = parse_nat_arg(n_text, "N");
    windmill::MillsEnumeration enumeration = windmill::mills_enumerate(n);
    if (as_json) {
        for (const windmill::Triple& t : enumeration.triples) {
            json j;
            j["n"] = windmill::to_string(n);
            j["x"] = windmill::to_string(t.x);
            j["y"] = windmill::to_string(t.y);
            j["z"] = windmill::to_string(t.z);
            std::cout << j.dump() << '\n';
        }
        return 0;
    }
    std::cout << "n = " << n << " (" << enumeration.triples.size() << " triples)\n";
    size_t i = 0;
    while (i < enumeration.triples.size()) {
        const Nat& x = enumeration.triples[i].x;
        std::cout << "x = " << x << "  n - x^2 = " << n - x * x << " :";
        for (; i < enumeration.triples.size() && enumeration.triples[i].x == x; ++i) {
            std::cout << ' ' << windmill::to_string(enumeration.triples[i]);
        }
        std::cout << '\n';
    }
    return 0;
}

int cmd_orbit(const std::string& n_text, bool trace, bool as_json) {
    Nat n = parse_nat_arg(n_text, "N");
    windmill::OrbitExit exit = windmill::orbit_exit(n);
    bool flip_fixed = exit.kind == windmill::ExitKind::FlipFixed;
    Nat period = flip_fixed ? Nat(2 * exit.steps + 1) : Nat(2 * exit.steps);
    const char* exit_name = flip_fixed ? "flip-fixed" : "zagier-fixed";

    if (as_json) {
        if (trace) {
            windmill::OrbitTrace<windmill::Triple> full =
                windmill::orbit_trace(windmill::zagier_flip, windmill::Triple{1, 1, n / 4}, n * n * n);
            for (size_t i = 0; i < full.iterates.size(); ++i) {
                json j;
                j["index"] = std::to_string(i);
                j["x"] = windmill::to_string(full.iterates[i].x);
                j["y"] = windmill::to_string(full.iterates[i].y);
                j["z"] = windmill::to_string(full.iterates[i].z);
                std::cout << j.dump() << '\n';
            }
        }
        json j;
        j["n"] = windmill::to_string(n);
        j["period"] = windmill::to_string(period);
        j["steps"] = windmill::to_string(exit.steps);
        j["exit"] = exit_name;
        j["x"] = windmill::to_string(exit.triple.x);
        j["y"] = windmill::to_string(exit.triple.y);
        j["z"] = windmill::to_string(exit.triple.z);
        std::cout << j.dump() << '\n';
        return 0;
    }

    std::cout << windmill::render_orbit(n);
    if (trace) {
        windmill::OrbitTrace<windmill::Triple> full =
            windmill::orbit_trace(windmill::zagier_flip, windmill::Triple{1, 1, n / 4}, n * n * n);
        std::cout << "orbit:\n";
        for (size_t i = 0; i < full.iterates.size(); ++i) {
            std::cout << "  " << i << ": " << windmill::to_string(full.iterates[i]) << '\n';
        }
    }
    std::cout << "steps = " << exit.steps << '\n';
    std::cout << "period = " << period << '\n';
    return 0;
}

int cmd_render(const std::string& n_text, const std::string& triple_text,
               const std::string& format_text, bool show_mind, std::uint64_t cell_size,
               const std::string& out_file) {
    Nat n = parse_nat_arg(n_text, "N");
    windmill::RenderSpec spec;
    spec.triple = parse_triple_arg(triple_text);
    spec.show_mind = show_mind;
    spec.cell_size = Nat(cell_size);
    if (format_text == "svg") {
        spec.format = windmill::RenderFormat::SVG;
    } else if (format_text == "ascii") {
        spec.format = windmill::RenderFormat::ASCII;
    } else {
        throw UsageError("--format must be svg or ascii: '" + format_text + "'");
    }
    Nat actual = windmill::windmill_value(spec.triple);
    if (actual != n) {
        throw windmill::DomainError("triple " + windmill::to_string(spec.triple) + " represents " +
                                    windmill::to_string(actual) + ", not " + windmill::to_string(n));
    }
    if (show_mind && spec.format == windmill::RenderFormat::ASCII) {
        std::cerr << "note: --mind has no effect in ascii format\n";
    }
    std::string text = windmill::render_windmill(spec);
    if (out_file.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(out_file, std::ios::binary);
    if (!out) {
        throw windmill::DomainError("cannot open output file '" + out_file + "'");
    }
    out << text;
    return 0;
}

int cmd_verify(const std::string& max_text) {
    Nat max = parse_nat_arg(max_text, "--max");
    bool ok = true;
    int reported = 0;
    auto fail = [&](const std::string& message) {
        ok = false;
        if (reported < 20) std::cerr << "violation: " << message << '\n';
        ++reported;
    };

    Nat set_count = 0;
    for (Nat n = 1; n <= max; n += 4) {
        if (windmill::is_square(n)) continue;
        windmill::MillsEnumeration enumeration = windmill::mills_enumerate(n);
        const auto& triples = enumeration.triples;
        ++set_count;
        if (!windmill::is_involution(windmill::zagier, triples)) {
            fail("zagier is not an involution on the triples of " + windmill::to_string(n));
        }
        if (!windmill::is_involution(windmill::flip, triples)) {
            fail("flip is not an involution on the triples of " + windmill::to_string(n));
        }
        for (const windmill::Triple& t : triples) {
            if (windmill::windmill_value(t) != n) {
                fail("enumerated triple " + windmill::to_string(t) + " does not represent " +
                     windmill::to_string(n));
            }
            if (windmill::mind(windmill::zagier(t)) != windmill::mind(t)) {
                fail("mind not zagier-invariant at " + windmill::to_string(t));
            }
            windmill::Triple f = windmill::flip(t);
            if (abs(Nat(t.y - t.z)) != abs(Nat(f.y - f.z))) {
                fail("|y-z| not flip-invariant at " + windmill::to_string(t));
            }
        }
        size_t zagier_fixed = windmill::fixes(windmill::zagier, triples).size();
        size_t flip_fixed = windmill::fixes(windmill::flip, triples).size();
        if (zagier_fixed % 2 != flip_fixed % 2) {
            fail("fixed-point parity mismatch at " + windmill::to_string(n));
        }
    }
    std::cout << "involutions and invariants on triple sets: checked " << set_count << " sets\n";

    Nat obstruction_count = 0;
    for (Nat n = 3; n <= max; n += 4) {
        if (!windmill::all_representations(n).empty()) {
            fail(windmill::to_string(n) + " = 3 (mod 4) has a two-squares representation");
        }
        ++obstruction_count;
    }
    std::cout << "residue obstruction (n = 3 mod 4): checked " << obstruction_count << " values\n";

    Nat prime_count = 0;
    for (Nat p = 5; p <= max; p += 4) {
        if (!windmill::is_prime(p)) continue;
        ++prime_count;
        windmill::SolveOutcome outcome = windmill::solve(p);
        const auto* d = std::get_if<windmill::Decomposed>(&outcome);
        if (d == nullptr) {
            fail("prime " + windmill::to_string(p) + " did not decompose");
            continue;
        }
        const Nat& u = d->value.u;
        const Nat& v = d->value.v;
        if (!windmill::verify_decomposition(p, u, v)) {
            fail("decomposition of " + windmill::to_string(p) + " failed verification");
        }
        auto brute = windmill::brute_force_decompose(p);
        if (!brute || !((brute->first == u && brute->second == v) ||
                        (brute->first == v && brute->second == u))) {
            fail("brute force disagrees at " + windmill::to_string(p));
        }
        size_t positive = 0;
        for (const auto& [a, b] : windmill::all_representations(p)) {
            if (a > 0 && b > 0) ++positive;
        }
        if (positive != 1) {
            fail("prime " + windmill::to_string(p) + " has " + std::to_string(positive) +
                 " positive representations");
        }
        Nat period = windmill::period(windmill::zagier_flip, windmill::Triple{1, 1, p / 4}, p * p * p);
        if (windmill::is_even(period)) {
            fail("even orbit period at prime " + windmill::to_string(p));
        }
        if (d->steps != period / 2) {
            fail("step count != period div 2 at prime " + windmill::to_string(p));
        }
    }
    std::cout << "prime decompositions, uniqueness, odd periods: checked " << prime_count
              << " primes\n";

    if (!ok) {
        if (reported > 20) {
            std::cerr << "(" << (reported - 20) << " further violations suppressed)\n";
        }
        return 3;
    }
    std::cout << "all checks passed (max = " << max << ")\n";
    return 0;
}

int cmd_bench(const std::string& from_text, const std::string& to_text,
              const std::string& algo_csv) {
    Nat lo = parse_nat_arg(from_text, "--from");
    Nat hi = parse_nat_arg(to_text, "--to");
    if (lo > hi) throw UsageError("--from must not exceed --to");
    std::set<windmill::Algo> algorithms;
    std::string name;
    std::istringstream stream(algo_csv);
    while (std::getline(stream, name, ',')) {
        if (name == "windmill") {
            algorithms.insert(windmill::Algo::Windmill);
        } else if (name == "brute") {
            algorithms.insert(windmill::Algo::Brute);
        } else {
            throw UsageError("--algo accepts a comma-separated subset of windmill,brute: '" + name +
                             "'");
        }
    }
    if (algorithms.empty()) throw UsageError("--algo must select at least one algorithm");
    windmill::BenchReport report = windmill::run_range(lo, hi, algorithms);
    std::cout << windmill::to_json(report) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fermat two-squares decomposition via windmill involutions"};
    app.require_subcommand(1);

    std::string n_text;
    bool prime_only = false;
    bool as_json = false;
    CLI::App* decompose = app.add_subcommand("decompose", "Decompose N into u^2 + v^2 (u odd, v even)");
    decompose->add_option("N", n_text, "Decimal input, must be 1 (mod 4) and not a square")->required();
    decompose->add_flag("--prime-only", prime_only, "Reject composite N before iterating");
    decompose->add_flag("--json", as_json, "Emit a JSON object");

    CLI::App* mills = app.add_subcommand("mills", "Enumerate all triples (x,y,z) with N = x^2 + 4yz");
    mills->add_option("N", n_text, "Decimal input, not a perfect square")->required();
    mills->add_flag("--json", as_json, "One JSON object per triple");

    bool trace = false;
    CLI::App* orbit = app.add_subcommand("orbit", "Show the iteration chain from (1,1,N div 4)");
    orbit->add_option("N", n_text, "Decimal input, must be 1 (mod 4) and not a square")->required();
    orbit->add_flag("--trace", trace, "Also list the complete orbit");
    orbit->add_flag("--json", as_json, "Emit JSON objects");

    std::string triple_text;
    std::string format_text = "svg";
    bool show_mind = false;
    std::uint64_t cell_size = 12;
    std::string out_file;
    CLI::App* render = app.add_subcommand("render", "Draw the windmill figure of a triple");
    render->add_option("N", n_text, "Value represented by the triple")->required();
    render->add_option("--triple", triple_text, "Triple as x,y,z")->required();
    render->add_option("--format", format_text, "svg or ascii (default svg)");
    render->add_flag("--mind", show_mind, "Overlay the dashed maximal central square (svg)");
    render->add_option("--cell-size", cell_size, "SVG pixels per unit cell (default 12)")
        ->check(CLI::Range(static_cast<std::uint64_t>(1), static_cast<std::uint64_t>(1 << 20)));
    render->add_option("-o,--output", out_file, "Write to a file instead of stdout");

    std::string max_text;
    CLI::App* verify = app.add_subcommand("verify", "Run the property suite up to a bound");
    verify->add_option("--max", max_text, "Upper bound (decimal)")->required();

    std::string from_text;
    std::string to_text;
    std::string algo_csv = "windmill,brute";
    CLI::App* bench = app.add_subcommand("bench", "Benchmark over primes = 1 (mod 4) in a range");
    bench->add_option("--from", from_text, "Range start (decimal)")->required();
    bench->add_option("--to", to_text, "Range end (decimal)")->required();
    bench->add_option("--algo", algo_csv, "Comma-separated subset of windmill,brute");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (decompose->parsed()) return cmd_decompose(n_text, prime_only, as_json);
        if (mills->parsed()) return cmd_mills(n_text, as_json);
        if (orbit->parsed()) return cmd_orbit(n_text, trace, as_json);
        if (render->parsed()) {
            return cmd_render(n_text, triple_text, format_text, show_mind, cell_size, out_file);
        }
        if (verify->parsed()) return cmd_verify(max_text);
        if (bench->parsed()) return cmd_bench(from_text, to_text, algo_csv);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const windmill::Disagreement& e) {
        std::cerr << "property violation: " << e.what() << '\n';
        return 3;
    } catch (const windmill::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
