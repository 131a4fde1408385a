// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <fstream>
#include <set>

#include "sumrank/cli.hpp"

namespace sumrank::cli {
namespace {

template <class T>
T get(const json& j, const char* key) {
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& ex) {
        throw ConfigError(std::string("config field '") + key + "': " + ex.what());
    }
}

std::vector<std::size_t> per_block(const json& j, const char* key, std::size_t blocks) {
    if (!j.contains(key)) return std::vector<std::size_t>(blocks, 0);
    auto v = get<std::vector<std::size_t>>(j, key);
    if (v.size() != blocks) {
        throw ConfigError(std::string("profile '") + key + "' needs one entry per block");
    }
    return v;
}

void check_keys(const json& j, const std::set<std::string>& allowed, const char* where) {
    if (!j.is_object()) throw ConfigError(std::string(where) + " must be a JSON object");
    for (const auto& [key, _] : j.items()) {
        if (!allowed.count(key)) throw ConfigError(std::string("unknown key '") + key + "' in " + where);
    }
}

}  // namespace

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& ex) {
        throw ConfigError(path + ": " + ex.what());
    }
}

Config parse_config(const json& j) {
    check_keys(j, {"p", "e", "m", "s", "n", "k", "xi", "beta", "profile", "channel", "trials", "seed", "variant", "mode"},
               "config");
    Config c;
    c.p = get<unsigned>(j, "p");
    if (j.contains("e")) c.e = get<unsigned>(j, "e");
    c.m = get<unsigned>(j, "m");
    if (j.contains("s")) c.s = get<long>(j, "s");
    c.n = get<std::vector<std::size_t>>(j, "n");
    c.k = get<std::size_t>(j, "k");
    if (j.contains("xi")) c.xi = get<std::vector<std::uint64_t>>(j, "xi");
    if (j.contains("beta")) c.beta = get<std::vector<std::vector<std::uint64_t>>>(j, "beta");
    if (j.contains("trials")) c.trials = get<std::size_t>(j, "trials");
    if (j.contains("seed")) c.seed = get<std::uint64_t>(j, "seed");
    if (j.contains("variant")) c.variant = get<std::string>(j, "variant");
    if (j.contains("mode")) c.mode = get<std::string>(j, "mode");
    if (c.mode != "sumrank" && c.mode != "subspace") throw ConfigError("mode must be 'sumrank' or 'subspace'");
    variants(c.variant);

    const std::size_t blocks = c.n.size();
    if (j.contains("profile")) {
        const json& pj = j.at("profile");
        check_keys(pj, {"full", "row", "col"}, "profile");
        const auto full = per_block(pj, "full", blocks), row = per_block(pj, "row", blocks),
                   col = per_block(pj, "col", blocks);
        ErrorProfile prof;
        for (std::size_t i = 0; i < blocks; ++i) prof.push_back({full[i], row[i], col[i]});
        c.profile = std::move(prof);
    }
    if (j.contains("channel")) {
        const json& cj = j.at("channel");
        check_keys(cj, {"insertions", "deletions"}, "channel");
        const auto ins = per_block(cj, "insertions", blocks), del = per_block(cj, "deletions", blocks);
        std::vector<ShotRequest> req;
        for (std::size_t i = 0; i < blocks; ++i) req.push_back({ins[i], del[i]});
        c.channel = std::move(req);
    }
    return c;
}

Config load_config(const std::string& path) { return parse_config(read_json(path)); }

std::vector<Variant> variants(const std::string& name) {
    if (name == "esp") return {Variant::esp};
    if (name == "elp") return {Variant::elp};
    if (name == "both") return {Variant::esp, Variant::elp};
    throw ConfigError("variant must be esp, elp or both, got '" + name + "'");
}

Code build_code(const Config& cfg) {
    auto field = Field::make(cfg.p, cfg.e, cfg.m, cfg.s);
    std::optional<std::vector<Elem>> xi;
    if (cfg.xi) {
        xi.emplace();
        for (auto v : *cfg.xi) xi->push_back(field->from_index(v));
    }
    std::optional<std::vector<std::vector<Elem>>> beta;
    if (cfg.beta) {
        beta.emplace();
        for (const auto& blk : *cfg.beta) {
            std::vector<Elem> b;
            for (auto v : blk) b.push_back(field->from_index(v));
            beta->push_back(std::move(b));
        }
    }
    return Code::make(field, LengthPartition(cfg.n), cfg.k, std::move(xi), std::move(beta));
}

json word_to_json(std::span<const Elem> w) {
    json a = json::array();
    for (const Elem x : w) a.push_back(x.value);
    return a;
}

Word word_from_json(const Field& f, const json& j, std::optional<std::size_t> length, const char* what) {
    if (!j.is_array()) throw ConfigError(std::string(what) + " must be a JSON array of element indices");
    Word w;
    for (const auto& v : j) {
        if (!v.is_number_unsigned()) throw ConfigError(std::string(what) + " entries must be non-negative integers");
        w.push_back(f.from_index(v.get<std::uint64_t>()));
    }
    if (length && w.size() != *length) {
        throw ConfigError(std::string(what) + " has length " + std::to_string(w.size()) + ", expected " +
                          std::to_string(*length));
    }
    return w;
}

json fq_matrix_to_json(const Field& f, const Mat& m) {
    json data = json::array();
    for (const Elem x : m.data()) data.push_back(f.fq_label(x));
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

Mat fq_matrix_from_json(const Field& f, const json& j) {
    check_keys(j, {"rows", "cols", "data"}, "matrix");
    const auto rows = get<std::size_t>(j, "rows"), cols = get<std::size_t>(j, "cols");
    const auto data = get<std::vector<std::uint64_t>>(j, "data");
    if (data.size() != rows * cols) throw ConfigError("matrix data does not match its shape");
    std::vector<Elem> elems;
    for (auto v : data) elems.push_back(f.fq_from_label(v));
    return Mat(rows, cols, std::move(elems), Over::base);
}

json side_to_json(const Field& f, const SideInfo& side) {
    json rows = json::array(), cols = json::array();
    for (const auto& v : side.row_values) rows.push_back(word_to_json(v));
    for (const auto& m : side.col_locations) cols.push_back(fq_matrix_to_json(f, m));
    return {{"row_values", rows}, {"col_locations", cols}};
}

SideInfo side_from_json(const Field& f, const LengthPartition& part, const json& j) {
    check_keys(j, {"row_values", "col_locations"}, "side information");
    const json& rows = j.at("row_values");
    const json& cols = j.at("col_locations");
    if (!rows.is_array() || !cols.is_array() || rows.size() != part.blocks() || cols.size() != part.blocks()) {
        throw ConfigError("side information needs one row_values and one col_locations entry per block");
    }
    SideInfo side;
    for (const auto& r : rows) side.row_values.push_back(word_from_json(f, r, std::nullopt, "row_values"));
    for (std::size_t i = 0; i < part.blocks(); ++i) {
        Mat m = fq_matrix_from_json(f, cols[i]);
        if (m.rows() == 0) m = Mat(0, part.size(i), Over::base);
        side.col_locations.push_back(std::move(m));
    }
    return side;
}

std::vector<ErrorProfile> radius_profiles(const Code& code) {
    const auto& part = code.partition();
    const std::size_t radius = code.redundancy(), blocks = part.blocks();
    std::vector<ErrorProfile> out;
    ErrorProfile cur(blocks);
    auto rec = [&](auto&& self, std::size_t i, std::size_t used) -> void {
        if (i == blocks) {
            out.push_back(cur);
            return;
        }
        const std::size_t cap = std::min<std::size_t>(part.size(i), code.field().m());
        for (std::size_t full = 0; 2 * full + used <= radius && full <= cap; ++full) {
            for (std::size_t row = 0; 2 * full + row + used <= radius && full + row <= cap; ++row) {
                for (std::size_t col = 0; 2 * full + row + col + used <= radius && full + row + col <= cap; ++col) {
                    cur[i] = {full, row, col};
                    self(self, i + 1, used + 2 * full + row + col);
                }
            }
        }
    };
    rec(rec, 0, 0);
    return out;
}

std::vector<std::vector<ShotRequest>> radius_requests(const Code& code) {
    const auto& part = code.partition();
    const std::size_t radius = code.redundancy(), blocks = part.blocks(), m = code.field().m();
    std::vector<std::vector<ShotRequest>> out;
    std::vector<ShotRequest> cur(blocks);
    auto rec = [&](auto&& self, std::size_t i, std::size_t used) -> void {
        if (i == blocks) {
            out.push_back(cur);
            return;
        }
        for (std::size_t ins = 0; ins + used <= radius; ++ins) {
            for (std::size_t del = 0; ins + del + used <= radius && del <= part.size(i); ++del) {
                if (ins > m + del) continue;  // not enough room outside the kept space
                cur[i] = {ins, del};
                self(self, i + 1, used + ins + del);
            }
        }
    };
    rec(rec, 0, 0);
    return out;
}

}  // namespace sumrank::cli
