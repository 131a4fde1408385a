// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sumrank/decoder.hpp"
#include "sumrank/lifting.hpp"
#include "sumrank/lrs.hpp"

namespace sumrank::cli {

using nlohmann::json;

enum Exit : int { ok = 0, decode_failure = 1, usage_error = 2, internal_error = 3 };

/// Thrown for malformed files and configs; maps to exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Config {
    unsigned p = 0, e = 1, m = 0;
    long s = 1;
    std::vector<std::size_t> n;
    std::size_t k = 0;
    std::optional<std::vector<std::uint64_t>> xi;
    std::optional<std::vector<std::vector<std::uint64_t>>> beta;
    std::optional<ErrorProfile> profile;
    std::optional<std::vector<ShotRequest>> channel;
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    std::string variant = "both";
    std::string mode = "sumrank";
};

/// Strict: unknown keys, wrong types and inconsistent lengths are errors.
Config parse_config(const json& j);
Config load_config(const std::string& path);
json read_json(const std::string& path);

Code build_code(const Config& cfg);
std::vector<Variant> variants(const std::string& name);

json word_to_json(std::span<const Elem> w);
Word word_from_json(const Field& f, const json& j, std::optional<std::size_t> length, const char* what);
/// F_q matrices are written as {rows, cols, data} with F_q labels row-major.
json fq_matrix_to_json(const Field& f, const Mat& m);
Mat fq_matrix_from_json(const Field& f, const json& j);
json side_to_json(const Field& f, const SideInfo& side);
SideInfo side_from_json(const Field& f, const LengthPartition& part, const json& j);

/// Every per-block profile with 2 t_F + t_R + t_C <= n - k that fits in the
/// blocks, in lexicographic order.
std::vector<ErrorProfile> radius_profiles(const Code& code);
/// Every per-shot (insertions, deletions) request with total <= n - k that
/// the operator channel can realize.
std::vector<std::vector<ShotRequest>> radius_requests(const Code& code);

struct TableOptions {
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    std::vector<Variant> variants;
    bool timing = false;
};

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    [[nodiscard]] std::string aligned() const;
    [[nodiscard]] std::string csv() const;
};

Table simulate(const Code& code, const std::vector<ErrorProfile>& profiles, const TableOptions& opt);
Table lift_demo(const Code& code, const std::vector<std::vector<ShotRequest>>& requests, const TableOptions& opt);

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sumrank::cli
