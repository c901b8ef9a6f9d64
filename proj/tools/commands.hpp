#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hopfkit::cli {

inline constexpr const char *report_schema = "hopfkit-report/1";

enum Exit { ok = 0, failure = 1, resonance = 2, slope_out_of_tolerance = 3 };

struct Options {
    std::string command;
    /// System description, or structure constants for hopf.
    std::string input;
    /// Falls back to the order in the system file.
    std::optional<int> order;
    std::string mode = "zeromean";
    std::string backend = "words";
    int cap = 0;
    std::optional<unsigned> seed;
    /// hopf: abelian, witt, free-lie or grossman-larson instead of a file.
    std::string builtin;
    std::string alphabet = "ab";
    /// split: value of w tau / (2 pi) as a rational, e.g. "1/2".
    std::optional<std::string> omega_tau_over_2pi;
    std::vector<double> omegas = {50, 100, 200, 400};
    double horizon = 10;
    int samples = 1000;
    double slope_tolerance = 0.35;
};

struct RunReport {
    std::string command;
    std::string digest;
    double seconds = 0;
    nlohmann::json inputs;
    nlohmann::json payload;
    std::string text;
    int exit_code = ok;

    nlohmann::json to_json() const;
};

/// Runs one command. Bad input and internal failures throw; resonance and
/// slope checks are reported through exit_code.
RunReport run(const Options &opt);

/// 64-bit FNV-1a, printed as 16 hex digits.
std::string fnv1a(const std::string &bytes);

} // namespace hopfkit::cli
