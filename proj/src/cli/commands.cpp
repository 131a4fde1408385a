// SPDX-License-Identifier: Apache-2.0
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "sumrank/cli.hpp"
#include "sumrank/rng.hpp"

namespace sumrank::cli {
namespace {

enum class Level { error = 0, warn = 1, info = 2, debug = 3 };

Level log_level() {
    const char* env = std::getenv("SUMRANK_LOG");
    if (!env) return Level::warn;
    const std::string v = env;
    if (v == "error") return Level::error;
    if (v == "info") return Level::info;
    if (v == "debug") return Level::debug;
    return Level::warn;
}

void log(std::ostream& err, Level level, const std::string& msg) {
    static const char* names[] = {"error", "warn", "info", "debug"};
    if (level <= log_level()) err << "[sumrank " << names[static_cast<int>(level)] << "] " << msg << '\n';
}

std::string join(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + std::to_string(v[i]);
    return s;
}

std::string fraction(std::size_t num, std::size_t den) { return std::to_string(num) + "/" + std::to_string(den); }

std::string decimal(std::size_t num, std::size_t den) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", den ? static_cast<double>(num) / static_cast<double>(den) : 0.0);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

/// Runs body(t) for t in [0, count) on a small thread pool. Each trial writes
/// only its own slot, so results do not depend on scheduling.
template <class Result, class Body>
std::vector<Result> run_trials(std::size_t count, Body body) {
    std::vector<Result> results(count);
    std::atomic<std::size_t> next{0};
    const std::size_t workers =
        std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), count));
    auto work = [&] {
        for (std::size_t t; (t = next.fetch_add(1)) < count;) results[t] = body(t);
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    return results;
}

struct Outcome {
    std::vector<bool> success;
    std::vector<double> micros;
    bool identities = true;
};

Word random_message(const Field& f, std::size_t k, Rng& rng) {
    Word msg(k);
    for (auto& x : msg) x = f.random(rng);
    return msg;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + path);
    out << content;
}

void emit_json(const json& j, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << j.dump() << '\n';
    } else {
        write_file(path, j.dump(2) + "\n");
    }
}

json decoded_to_json(const Code& code, const Decoded& d, const std::string& variant) {
    Word msg = d.message.coeffs;
    msg.resize(code.k(), Field::zero());
    json fr = json::array();
    for (auto r : d.full_rank) fr.push_back(r);
    return {{"status", "ok"},
            {"variant", variant},
            {"codeword", word_to_json(d.codeword)},
            {"message", word_to_json(msg)},
            {"error", word_to_json(d.error)},
            {"full_rank", fr}};
}

}  // namespace

std::string Table::aligned() const {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& r : rows) {
        for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
    }
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t c = 0; c < r.size(); ++c) {
            os << (c ? "  " : "") << r[c];
            if (c + 1 < r.size()) os << std::string(width[c] - r[c].size(), ' ');
        }
        os << '\n';
    };
    line(header);
    std::size_t total = 0;
    for (auto w : width) total += w;
    os << std::string(total + 2 * (width.size() - 1), '-') << '\n';
    for (const auto& r : rows) line(r);
    return os.str();
}

std::string Table::csv() const {
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t c = 0; c < r.size(); ++c) os << (c ? "," : "") << csv_field(r[c]);
        os << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
    return os.str();
}

Table simulate(const Code& code, const std::vector<ErrorProfile>& profiles, const TableOptions& opt) {
    const Field& f = code.field();
    const Decoder decoder(code);
    Table table;
    table.header = {"full", "row", "col", "variant", "trials", "successes", "rate", "rate_decimal"};
    if (opt.timing) table.header.push_back("mean_decode_us");

    for (std::size_t pi = 0; pi < profiles.size(); ++pi) {
        const ErrorProfile& prof = profiles[pi];
        const std::uint64_t row_seed = Rng::splitmix64(opt.seed + pi);
        const auto outcomes = run_trials<Outcome>(opt.trials, [&](std::size_t t) {
            Rng rng = Rng::stream(row_seed, t);
            const Word c = code.encode(random_message(f, code.k(), rng));
            const auto [pattern, side] = sample_error(f, code.partition(), prof, rng);
            const Word e = pattern.realize(f);
            Word y(c.size());
            for (std::size_t j = 0; j < c.size(); ++j) y[j] = f.add(c[j], e[j]);
            Outcome o;
            for (const Variant v : opt.variants) {
                const auto start = std::chrono::steady_clock::now();
                const DecodeResult r = decoder.decode(y, side, v);
                o.micros.push_back(
                    std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - start).count());
                o.success.push_back(r.ok() && r.decoded().codeword == c);
            }
            return o;
        });

        std::vector<std::size_t> full, row, col;
        for (const auto& b : prof) {
            full.push_back(b.full);
            row.push_back(b.row);
            col.push_back(b.col);
        }
        for (std::size_t vi = 0; vi < opt.variants.size(); ++vi) {
            std::size_t wins = 0;
            double micros = 0;
            for (const auto& o : outcomes) {
                wins += o.success[vi] ? 1 : 0;
                micros += o.micros[vi];
            }
            std::vector<std::string> r = {join(full), join(row), join(col), to_string(opt.variants[vi]),
                                          std::to_string(opt.trials), std::to_string(wins),
                                          fraction(wins, opt.trials), decimal(wins, opt.trials)};
            if (opt.timing) {
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.1f", opt.trials ? micros / static_cast<double>(opt.trials) : 0.0);
                r.emplace_back(buf);
            }
            table.rows.push_back(std::move(r));
        }
    }
    return table;
}

Table lift_demo(const Code& code, const std::vector<std::vector<ShotRequest>>& requests, const TableOptions& opt) {
    const Field& f = code.field();
    const Decoder decoder(code);
    Table table;
    table.header = {"insertions", "deletions", "variant", "trials", "successes", "rate", "rate_decimal", "identities"};
    if (opt.timing) table.header.push_back("mean_decode_us");

    for (std::size_t ri = 0; ri < requests.size(); ++ri) {
        const auto& req = requests[ri];
        const std::uint64_t row_seed = Rng::splitmix64(opt.seed + ri);
        const auto outcomes = run_trials<Outcome>(opt.trials, [&](std::size_t t) {
            Rng rng = Rng::stream(row_seed, t);
            const Word c = code.encode(random_message(f, code.k(), rng));
            const LiftedWord sent = lift(code, c);
            const LiftedWord received = operator_channel(f, sent, req, rng);
            const Reduction red = reduce(code, received);
            Outcome o;
            for (std::size_t i = 0; i < req.size(); ++i) {
                const std::size_t rows = red.row_erasures[i], cols = red.col_erasures[i];
                if (rows > req[i].insertions || req[i].insertions - rows + cols != req[i].deletions) {
                    o.identities = false;
                }
            }
            for (const Variant v : opt.variants) {
                const auto start = std::chrono::steady_clock::now();
                const DecodeResult r = decoder.decode(red.received, red.side, v);
                o.micros.push_back(
                    std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - start).count());
                o.success.push_back(r.ok() && r.decoded().codeword == c);
            }
            return o;
        });

        std::vector<std::size_t> ins, del;
        for (const auto& r : req) {
            ins.push_back(r.insertions);
            del.push_back(r.deletions);
        }
        std::size_t holds = 0;
        for (const auto& o : outcomes) holds += o.identities ? 1 : 0;
        for (std::size_t vi = 0; vi < opt.variants.size(); ++vi) {
            std::size_t wins = 0;
            double micros = 0;
            for (const auto& o : outcomes) {
                wins += o.success[vi] ? 1 : 0;
                micros += o.micros[vi];
            }
            std::vector<std::string> r = {join(ins), join(del), to_string(opt.variants[vi]),
                                          std::to_string(opt.trials), std::to_string(wins),
                                          fraction(wins, opt.trials), decimal(wins, opt.trials),
                                          fraction(holds, opt.trials)};
            if (opt.timing) {
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.1f", opt.trials ? micros / static_cast<double>(opt.trials) : 0.0);
                r.emplace_back(buf);
            }
            table.rows.push_back(std::move(r));
        }
    }
    return table;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Linearized Reed-Solomon codes in the sum-rank metric"};
    app.require_subcommand(1);

    std::string config_path, input_path, side_path, out_path, variant_flag;
    std::optional<std::uint64_t> seed_flag;
    std::optional<std::size_t> trials_flag;
    bool timing = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON code/experiment configuration")->required();
        sub->add_option("--out", out_path, "output path (prefix for corrupt)");
    };
    auto* params = app.add_subcommand("params", "print code parameters");
    add_common(params);
    auto* encode = app.add_subcommand("encode", "encode a message");
    add_common(encode);
    encode->add_option("--input", input_path, "message: JSON array of k element indices")->required();
    auto* corrupt = app.add_subcommand("corrupt", "add a random error of the configured profile");
    add_common(corrupt);
    corrupt->add_option("--input", input_path, "codeword: JSON array of n element indices")->required();
    corrupt->add_option("--seed", seed_flag, "RNG seed");
    auto* decode_cmd = app.add_subcommand("decode", "decode a received word");
    add_common(decode_cmd);
    decode_cmd->add_option("--input", input_path, "received word: JSON array of element indices")->required();
    decode_cmd->add_option("--side", side_path, "side information JSON");
    decode_cmd->add_option("--variant", variant_flag, "esp, elp or both");
    auto* sim = app.add_subcommand("simulate", "Monte-Carlo decoding experiment");
    auto* demo = app.add_subcommand("lift-demo", "operator channel experiment on the lifted code");
    for (auto* sub : {sim, demo}) {
        add_common(sub);
        sub->add_option("--seed", seed_flag, "master seed");
        sub->add_option("--trials", trials_flag, "trials per row");
        sub->add_option("--variant", variant_flag, "esp, elp or both");
        sub->add_flag("--timing", timing, "add a mean decode time column (not reproducible)");
    }

    auto fail = [&](const char* kind, const std::string& msg, int code) {
        err << json{{"error", kind}, {"message", msg}}.dump() << '\n';
        return code;
    };

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return Exit::ok;
    } catch (const CLI::ParseError& e) {
        return fail("usage", e.what(), Exit::usage_error);
    }

    try {
        Config cfg = load_config(config_path);
        if (seed_flag) cfg.seed = *seed_flag;
        if (trials_flag) cfg.trials = *trials_flag;
        if (!variant_flag.empty()) cfg.variant = variant_flag;
        const std::vector<Variant> chosen = variants(cfg.variant);
        const Code code = build_code(cfg);
        const Field& f = code.field();
        log(err, Level::info, "code over " + f.describe());

        if (params->parsed()) {
            json beta = json::array();
            for (const auto& b : code.beta()) beta.push_back(word_to_json(b));
            const json summary = {{"n", code.n()},
                                  {"k", code.k()},
                                  {"d", code.min_distance()},
                                  {"blocks", code.blocks()},
                                  {"partition", code.partition().sizes()},
                                  {"field", f.describe()},
                                  {"class_bound", f.class_count()},
                                  {"xi", word_to_json(code.xi())},
                                  {"beta", beta},
                                  {"alpha", word_to_json(code.alpha())},
                                  {"generator", {code.generator().rows(), code.generator().cols()}},
                                  {"parity_check", {code.parity_check().rows(), code.parity_check().cols()}}};
            out << "n=" << code.n() << " k=" << code.k() << " d=" << code.min_distance() << " ℓ=" << code.blocks()
                << '\n'
                << "field: " << f.describe() << '\n'
                << "partition: " << summary["partition"].dump() << '\n'
                << "class bound: " << f.class_count() << '\n'
                << "xi: " << summary["xi"].dump() << '\n'
                << "beta: " << beta.dump() << '\n'
                << "generator: " << code.generator().rows() << "x" << code.generator().cols() << '\n'
                << "parity-check: " << code.parity_check().rows() << "x" << code.parity_check().cols() << '\n';
            if (!out_path.empty()) write_file(out_path, summary.dump(2) + "\n");
            return Exit::ok;
        }

        if (encode->parsed()) {
            const Word msg = word_from_json(f, read_json(input_path), code.k(), "message");
            emit_json(word_to_json(code.encode(msg)), out_path, out);
            return Exit::ok;
        }

        if (corrupt->parsed()) {
            if (!cfg.profile) throw ConfigError("corrupt needs an error profile in the config");
            if (out_path.empty()) throw ConfigError("corrupt needs --out PREFIX");
            const Word c = word_from_json(f, read_json(input_path), code.n(), "codeword");
            Rng rng(cfg.seed);
            const auto [pattern, side] = sample_error(f, code.partition(), *cfg.profile, rng);
            const Word e = pattern.realize(f);
            Word y(c.size());
            for (std::size_t j = 0; j < c.size(); ++j) y[j] = f.add(c[j], e[j]);
            json prof = json::array();
            for (const auto& b : *cfg.profile) prof.push_back({{"full", b.full}, {"row", b.row}, {"col", b.col}});
            write_file(out_path + ".received.json", word_to_json(y).dump() + "\n");
            write_file(out_path + ".side.json", side_to_json(f, side).dump(2) + "\n");
            write_file(out_path + ".truth.json",
                       json{{"codeword", word_to_json(c)}, {"error", word_to_json(e)}, {"profile", prof}}.dump(2) +
                           "\n");
            out << json{{"received", out_path + ".received.json"},
                        {"side", out_path + ".side.json"},
                        {"truth", out_path + ".truth.json"}}
                       .dump()
                << '\n';
            return Exit::ok;
        }

        if (decode_cmd->parsed()) {
            const Word y = word_from_json(f, read_json(input_path), code.n(), "received word");
            const SideInfo side = side_path.empty() ? SideInfo::none(f, code.partition())
                                                    : side_from_json(f, code.partition(), read_json(side_path));
            const Decoder decoder(code);
            std::optional<DecodeResult> first;
            for (const Variant v : chosen) {
                DecodeResult r = decoder.decode(y, side, v);
                log(err, Level::debug, std::string(to_string(v)) + ": " + (r.ok() ? "ok" : r.failure().reason));
                if (!first) {
                    first = std::move(r);
                } else if (first->ok() != r.ok() || (r.ok() && first->decoded().codeword != r.decoded().codeword)) {
                    throw InternalError("ESP and ELP decoders disagree");
                }
            }
            if (!first->ok()) {
                emit_json({{"status", "failure"}, {"variant", cfg.variant}, {"reason", first->failure().reason}},
                          out_path, out);
                return Exit::decode_failure;
            }
            emit_json(decoded_to_json(code, first->decoded(), cfg.variant), out_path, out);
            return Exit::ok;
        }

        TableOptions opt{cfg.trials, cfg.seed, chosen, timing};
        Table table;
        if (demo->parsed() || cfg.mode == "subspace") {
            const auto requests = cfg.channel ? std::vector<std::vector<ShotRequest>>{*cfg.channel} : radius_requests(code);
            log(err, Level::info, "lift-demo over " + std::to_string(requests.size()) + " channel requests");
            table = lift_demo(code, requests, opt);
        } else {
            const auto profiles = cfg.profile ? std::vector<ErrorProfile>{*cfg.profile} : radius_profiles(code);
            log(err, Level::info, "simulate over " + std::to_string(profiles.size()) + " profiles");
            table = simulate(code, profiles, opt);
        }
        out << table.aligned();
        if (out_path.empty()) {
            out << '\n' << table.csv();
        } else {
            write_file(out_path, table.csv());
        }
        return Exit::ok;
    } catch (const ConfigError& e) {
        return fail("config", e.what(), Exit::usage_error);
    } catch (const ParameterError& e) {
        return fail("parameter", e.what(), Exit::usage_error);
    } catch (const InternalError& e) {
        return fail("internal", e.what(), Exit::internal_error);
    } catch (const std::exception& e) {
        return fail("internal", e.what(), Exit::internal_error);
    }
}

}  // namespace sumrank::cli
