#pragma once

#include "shrinker/numeric.hpp"
#include "shrinker/radical.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace shrinker::cli {

using json = nlohmann::json;

// Bad flags or inconsistent parameters; maps to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;
    int k1 = 1, k2 = 1;
    int N = 0;  // 0: k1 + k2 + 2
    std::vector<BigRat> a{BigRat(1)};
    std::uint64_t seed = 20240611;
    double h = 1e-3;
    std::optional<double> s_min, s_max;
    int points = 0;  // 0: per-command default
    std::optional<double> tol;
    double s0 = 0.1, tau_min = 10, tau_max = 1e3;
    bool reverse = false;
    std::string format = "json";
    std::string out;
    ThreadPool* pool = nullptr;

    int ambient() const { return N ? N : k1 + k2 + 2; }
    void validate() const;
};

struct Outcome {
    json report;
    bool pass = true;
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;
};

std::vector<BigRat> parse_coefficients(const std::string& text);

json rational_json(const BigRat& q);
json radical_json(const RadicalScalar& x);
json fit_json(const numeric::FitReport& fit, double s_min, double s_max);
std::string num(double x);

const std::vector<std::string>& command_names();
Outcome run_command(const RunConfig& cfg);

}  // namespace shrinker::cli
