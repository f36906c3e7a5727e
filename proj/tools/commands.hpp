#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace hhbv::cli {

struct RunConfig {
    int max_degree = 6;
    std::string d = "symbolic";
    std::string format = "json";
    std::string out;
    int samples = 64;
    std::uint64_t seed = 0;
    bool force = false;
    std::vector<std::string> select;
};

// Exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Report {
    std::string text;
    int status = 0;
};

Report cmd_verify(const RunConfig& cfg);
Report cmd_delta_table(const RunConfig& cfg);
Report cmd_fixtures(const RunConfig& cfg);
Report cmd_eval(const RunConfig& cfg, const std::string& op, const std::vector<std::string>& args);

}  // namespace hhbv::cli
