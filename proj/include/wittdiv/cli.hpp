#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace wittdiv {

enum class OutputFormat { Text, Csv, Json };

struct RunConfig {
    std::string command;
    std::string variety = "A1";
    std::string patterns;
    std::string labels;
    std::string lambda;
    std::string d;
    int cutoff = 20;
    int degree = 4;
    int terms = 250;
    int d1 = 40;
    int d2 = 40;
    std::optional<int> twist;
    std::optional<int> sym;
    std::optional<int> special;
    bool finite_label = false;
    std::string q;  // integer >= 2, "symbolic", or empty
    OutputFormat format = OutputFormat::Text;
    std::string out_path;
};

// args excludes the program name. Returns 0 on success, 2 on parse errors, 3 on computation errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Runs an already parsed configuration and returns the rendered output.
std::string run_command(const RunConfig& cfg);

}  // namespace wittdiv
