#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace flopcalc::cli {

enum class OutputFormat { Text, Json, Markdown };

struct RunConfig {
    int max_n = 4;
    OutputFormat format = OutputFormat::Text;
    std::optional<std::string> out_path;
    bool trace = false;
};

// Reads "key=value" lines (keys: max_n, format). Blank lines and '#' comments
// are ignored. Throws flopcalc::InvalidArgument naming the bad token.
RunConfig load_config(const std::string& path, RunConfig base = {});

// Runs one command line (without the program name). Returns the exit code:
// 0 success, 1 a verification failed, 2 usage error, 3 a verification was
// underdetermined.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flopcalc::cli
