#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cremona/errors.hpp"
#include "cremona/reports.hpp"

namespace {

using namespace cremona;

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in.good()) throw Error("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// map arguments are inline when they start with '['; anything else is a path
std::string map_text_of(const std::string& arg) {
    for (char c : arg) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '[') return arg;
        break;
    }
    return read_file(arg);
}

// CLI11 treats a lone "[a,b]" argument as its own array syntax and strips
// the brackets. A leading space defeats that without changing what the map
// grammar sees.
std::vector<std::string> shield_brackets(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (!a.empty() && a.front() == '[' && a.back() == ']')
            a.insert(a.begin(), ' ');
        args.push_back(std::move(a));
    }
    return args;
}

BigRational parse_tolerance(const std::string& text) {
    BigRational tol = parse_rational(text);
    if (tol <= 0) throw Error("tolerance must be positive");
    return tol;
}

template <typename Report>
int emit(const Report& report, const std::string& format) {
    if (format == "json")
        std::cout << to_json_string(report);
    else if (format == "csv")
        std::cout << to_csv(report);
    else
        std::cout << to_text(report);
    return report.needs_attention() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact degree sequences, dynamical degrees and signature ledgers "
        "for reflection compositions and desk-scale Cremona experiments"};
    app.require_subcommand(1);

    std::string format = "text";
    std::uint64_t seed = 0;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--seed", seed, "seed echoed into reports")
        ->capture_default_str();

    auto* reflect = app.add_subcommand(
        "reflect", "run the reflection degree recursion for a successor spec");
    reflect->fallthrough();
    std::string tau;
    std::uint64_t steps = 30;
    std::string tol_text = "1e-9";
    reflect->add_option("--tau", tau, "successor spec, e.g. \"N=1; tau: 1->inf\"")
        ->required();
    reflect->add_option("--steps", steps, "trace length")
        ->capture_default_str();
    reflect->add_option("--tol", tol_text, "enclosure width for radii")
        ->capture_default_str();

    auto* compose = app.add_subcommand(
        "compose", "iterate the first map and compare listed pairs");
    compose->fallthrough();
    std::vector<std::string> map_args;
    std::uint64_t iterations = 6;
    std::int64_t cap = 4096;
    compose->add_option("maps", map_args, "inline maps like [y*z:x*z:x*y] or files")
        ->required();
    compose->add_option("--steps", iterations, "number of iterates")
        ->capture_default_str();
    compose->add_option("--cap", cap, "degree cap")->capture_default_str();

    auto* scan = app.add_subcommand(
        "scan", "specialize a parametric family over a grid");
    scan->fallthrough();
    std::string family_arg, grid = "0:1:11";
    std::uint64_t iterate = 2;
    std::int64_t scan_cap = 4096;
    scan->add_option("family", family_arg, "inline family or file")->required();
    scan->add_option("--grid", grid, "lo:hi:count")->capture_default_str();
    scan->add_option("--iterate", iterate, "which iterate's degree to record")
        ->capture_default_str();
    scan->add_option("--cap", scan_cap, "degree cap")->capture_default_str();

    auto* ledger = app.add_subcommand(
        "ledger", "replay a blow-up event script against the signature formula");
    ledger->fallthrough();
    std::string script_arg;
    ledger->add_option("script", script_arg, "event script file, '-' for stdin")
        ->required();

    try {
        std::vector<std::string> args = shield_brackets(argc, argv);
        std::reverse(args.begin(), args.end());  // CLI11 wants them reversed
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (reflect->parsed()) {
            return emit(build_reflect_report(tau, steps,
                                             parse_tolerance(tol_text), seed),
                        format);
        }
        if (compose->parsed()) {
            std::vector<std::string> texts;
            for (const std::string& arg : map_args)
                texts.push_back(map_text_of(arg));
            return emit(build_compose_report(texts, iterations, cap, seed),
                        format);
        }
        if (scan->parsed()) {
            return emit(build_scan_report(map_text_of(family_arg), grid,
                                          iterate, scan_cap, seed),
                        format);
        }
        return emit(build_ledger_report(read_file(script_arg), seed), format);
    } catch (const ToleranceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
