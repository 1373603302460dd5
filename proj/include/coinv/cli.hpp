#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace coinv::cli {

struct VerifyOptions {
    std::vector<int> orders;                    // group orders to sweep
    std::vector<std::pair<int, int>> configs;   // (k, j) cells
    bool traces = false;
    // Also report, per cell, whether the explicit generator families
    // span the same graded components as the Reynolds images. This is
    // informational: the families are only known to lie in the ideal.
    bool span_report = false;
    int samples = 200;
};

struct RunConfig {
    std::string command;             // char|hilb|dim|basis|catalan|verify
    std::string group = "dihedral";  // dihedral|cyclic
    int n = 0;
    int k = 0;
    int j = 0;
    std::string format = "text";     // text|json
    std::optional<int> degree_cap;   // verify: oracle cap, default n + 2
    bool expand = false;             // char: also print the expansion
    int threads = 1;
};

/// Executes one command; writes the result to `out` and diagnostics to
/// `err`. Returns 0 on success, 1 on a usage/config error, 2 on a
/// verification mismatch.
int run(const RunConfig& config, const VerifyOptions& verify, std::ostream& out,
        std::ostream& err);

/// Command-line front end; parses argv (CLI11), honors COINV_THREADS,
/// and forwards to run().
int main_entry(int argc, const char* const* argv);

}  // namespace coinv::cli
