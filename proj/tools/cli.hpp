// Copyright 2026 The Pentagram Atlas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// pentagram_atlas command-line front end. run_cli is the whole program; main
// only forwards argv, which lets the tests drive every command in process.

#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pentagram/classifier.hpp"
#include "pentagram/io.hpp"
#include "pentagram/render.hpp"
#include "pentagram/verify.hpp"

namespace pentagram::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char *kCacheEnv = "PENTAGRAM_ATLAS_CACHE";

enum class Format { Text, Json, Csv };

struct RunConfig {
    std::string command;
    std::filesystem::path cache_dir = "cache";
    Format format = Format::Text;
    unsigned threads = 0;
    std::string out_file;
    std::string golden_file;
    // Pentagram selector for classify / neighbors / render.
    std::optional<std::size_t> index;
    std::optional<int> type;
    std::vector<std::string> labels;
    bool svg = false;
    bool force = false;
};

/// Thrown for bad selectors and unparsable input; maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

/// Parses "IIX,IXI,XII,XXX" style groups; contexts are separated by '|' or
/// given as separate arguments, labels by ',' or whitespace.
inline std::array<Context, 5> parse_contexts(const std::vector<std::string> &args) {
    std::string joined;
    for (const auto &a : args) {
        joined += (joined.empty() ? "" : "|") + a;
    }
    std::vector<std::vector<std::string>> groups(1);
    std::string token;
    auto flush = [&] {
        if (!token.empty()) {
            groups.back().push_back(token);
            token.clear();
        }
    };
    for (char ch : joined) {
        if (ch == '|') {
            flush();
            groups.emplace_back();
        } else if (ch == ',' || ch == ' ' || ch == '\t' || ch == '{' || ch == '}') {
            flush();
        } else {
            token += ch;
        }
    }
    flush();
    std::erase_if(groups, [](const auto &g) { return g.empty(); });
    if (groups.size() != 5) {
        throw UsageError("a pentagram needs 5 contexts, got " + std::to_string(groups.size()));
    }
    std::array<Context, 5> out;
    for (std::size_t k = 0; k < 5; ++k) {
        if (groups[k].size() != 4) {
            throw UsageError("context " + std::to_string(k + 1) + " needs 4 observables, got " + std::to_string(groups[k].size()));
        }
        out[k] = make_context({Observable::parse(groups[k][0]), Observable::parse(groups[k][1]), Observable::parse(groups[k][2]),
                               Observable::parse(groups[k][3])});
    }
    return out;
}

inline json labeled_json(const Pentagram &p) {
    json contexts = json::array();
    for (const Context &c : p.contexts) {
        contexts.push_back(to_json(c));
    }
    return json{{"contexts", contexts}, {"neg", p.negative_context_count}, {"points", labels_json(p.points)}};
}

inline std::string pentagram_line(const Pentagram &p) {
    std::string out;
    for (const Context &c : p.contexts) {
        out += (out.empty() ? "" : " | ") + c.str();
    }
    return out;
}

inline std::string context_labels(const Context &c) {
    std::string out;
    for (Observable o : c.points) {
        out += (out.empty() ? "" : ",") + o.label();
    }
    return out;
}

}  // namespace detail

/// Executes one command; returns the process exit code.
class Runner {
   public:
    Runner(RunConfig config, std::ostream &out, std::ostream &err) : config_(std::move(config)), out_(out), err_(err) {
    }

    int run() {
        if (config_.command == "enumerate") return enumerate();
        if (config_.command == "table") return table();
        if (config_.command == "classify") return classify();
        if (config_.command == "klein") return klein();
        if (config_.command == "neighbors") return neighbors();
        if (config_.command == "render") return render();
        if (config_.command == "verify") return verify();
        throw UsageError("unknown command " + config_.command);
    }

   private:
    EnumerationOptions options() const {
        return EnumerationOptions{config_.threads};
    }

    const std::vector<Pentagram> &pentagrams() {
        if (!all_) {
            if (config_.force) {
                std::filesystem::remove(config_.cache_dir / kCacheFile);
                std::filesystem::remove(config_.cache_dir / kCacheMetaFile);
            }
            CacheLoad load = load_or_enumerate(config_.cache_dir, options());
            err_ << "cache: " << cache_status_name(load.status) << " (" << config_.cache_dir.string() << ")";
            if (!load.reason.empty()) {
                err_ << ": " << load.reason;
            }
            err_ << "\n";
            all_ = std::move(load.pentagrams);
        }
        return *all_;
    }

    GoldenTable golden() const {
        if (config_.golden_file.empty()) {
            return table1();
        }
        std::ifstream in(config_.golden_file);
        if (!in) {
            throw UsageError("cannot read golden table " + config_.golden_file);
        }
        return read_golden_table(in);
    }

    Pentagram select() {
        if (!config_.labels.empty()) {
            return validate_pentagram(detail::parse_contexts(config_.labels));
        }
        const auto &all = pentagrams();
        if (config_.type) {
            const Atlas atlas = build_atlas(all, golden());
            for (std::size_t i = 0; i < all.size(); ++i) {
                if (atlas.type_of[i] == *config_.type) {
                    return all[i];
                }
            }
            throw Error(ErrorCode::SelectorOutOfRange, "no pentagram of type " + std::to_string(*config_.type));
        }
        const std::size_t i = config_.index.value_or(0);
        if (i >= all.size()) {
            throw Error(ErrorCode::SelectorOutOfRange,
                        "index " + std::to_string(i) + " out of range [0, " + std::to_string(all.size()) + ")");
        }
        return all[i];
    }

    void emit(const std::string &text) {
        if (config_.out_file.empty()) {
            out_ << text;
            return;
        }
        pentagram::detail::write_file(config_.out_file, text);
    }

    void emit(const json &j) {
        emit(j.dump(2) + "\n");
    }

    int enumerate() {
        const auto &all = pentagrams();
        const auto families = family_sizes(all);
        switch (config_.format) {
            case Format::Json: emit(cache_meta(all, sha256_hex(serialize_pentagrams(all)))); break;
            case Format::Csv: {
                // Context fields hold comma-separated labels, so they are quoted.
                std::string s = "index,neg,c1,c2,c3,c4,c5\n";
                for (std::size_t i = 0; i < all.size(); ++i) {
                    s += std::to_string(i) + "," + std::to_string(all[i].negative_context_count);
                    for (const Context &c : all[i].contexts) {
                        s += ",\"" + detail::context_labels(c) + "\"";
                    }
                    s += "\n";
                }
                emit(s);
                break;
            }
            case Format::Text: {
                std::string s = "pentagrams: " + std::to_string(all.size()) + "\n";
                for (const auto &[neg, n] : families) {
                    s += "  " + std::to_string(neg) + " negative contexts: " + std::to_string(n) + "\n";
                }
                emit(s);
                break;
            }
        }
        return kExitOk;
    }

    int report_atlas_mismatch(const AtlasMismatch &e) {
        err_ << "golden mismatch (" << error_code_name(e.code()) << "):\n";
        for (const auto &line : e.diff()) {
            err_ << "  " << line << "\n";
        }
        return kExitFailure;
    }

    int table() {
        const auto &all = pentagrams();
        const GoldenTable ref = golden();
        Atlas atlas;
        try {
            atlas = build_atlas(all, ref);
        } catch (const AtlasMismatch &e) {
            return report_atlas_mismatch(e);
        }
        switch (config_.format) {
            case Format::Csv: {
                std::ostringstream s;
                write_atlas_csv(s, atlas.rows);
                emit(s.str());
                break;
            }
            case Format::Json: {
                json rows = json::array();
                for (const AtlasRow &row : atlas.rows) {
                    rows.push_back(to_json(row));
                }
                emit(json{{"columns", json::array({"T", "C-", "O_A", "O_B", "O_C", "F-", "F+a", "F+b", "F+c", "K", "N"})},
                          {"column_labels",
                           {{"C-", "negative contexts"},
                            {"O_A", "observables with two identity factors"},
                            {"O_B", "observables with one identity factor"},
                            {"O_C", "observables without identity factors"},
                            {"F-", "negative Fano planes"},
                            {"F+a", "positive Fano planes of class a"},
                            {"F+b", "positive Fano planes of class b"},
                            {"F+c", "positive Fano planes of class c"},
                            {"K", "pentagrams on the symmetric Klein quadric"},
                            {"N", "pentagrams of the type"}}},
                          {"rows", rows}});
                break;
            }
            case Format::Text: {
                std::ostringstream s;
                s << std::setw(3) << "T" << std::setw(4) << "C-" << std::setw(5) << "O_A" << std::setw(5) << "O_B"
                  << std::setw(5) << "O_C" << std::setw(4) << "F-" << std::setw(5) << "F+a" << std::setw(5) << "F+b"
                  << std::setw(5) << "F+c" << std::setw(4) << "K" << std::setw(5) << "N" << "\n";
                for (const AtlasRow &row : atlas.rows) {
                    const auto v = row.signature.values();
                    s << std::setw(3) << row.t << std::setw(4) << v[0] << std::setw(5) << v[1] << std::setw(5) << v[2]
                      << std::setw(5) << v[3] << std::setw(4) << v[4] << std::setw(5) << v[5] << std::setw(5) << v[6]
                      << std::setw(5) << v[7] << std::setw(4) << row.k << std::setw(5) << row.multiplicity << "\n";
                }
                emit(s.str());
                break;
            }
        }
        // The K column is part of the reference table, so it is part of the match.
        std::vector<std::string> k_diff;
        for (std::size_t r = 0; r < atlas.rows.size(); ++r) {
            if (atlas.rows[r].k != ref[r].k) {
                k_diff.push_back("type " + std::to_string(atlas.rows[r].t) + " K: reference " + std::to_string(ref[r].k) +
                                 ", computed " + std::to_string(atlas.rows[r].k));
            }
        }
        if (!k_diff.empty()) {
            err_ << "K column differs from the reference:\n";
            for (const auto &line : k_diff) {
                err_ << "  " << line << "\n";
            }
            return kExitFailure;
        }
        return kExitOk;
    }

    int classify() {
        if (config_.labels.empty()) {
            throw UsageError("classify needs 5 contexts of 4 labels each");
        }
        const Pentagram p = validate_pentagram(detail::parse_contexts(config_.labels));
        const TypeSignature sig = signature(p);
        std::optional<int> type;
        for (const GoldenRow &row : golden()) {
            if (row.signature == sig) {
                type = row.t;
            }
        }
        const auto profiles = context_profiles(p);
        if (config_.format == Format::Json) {
            json contexts = json::array();
            for (const ContextProfile &prof : profiles) {
                json c = to_json(prof.context);
                c["plane"] = to_json(prof.plane);
                c["line_at_infinity"] = labels_json(prof.context.line_at_infinity());
                contexts.push_back(c);
            }
            emit(json{{"signature", sig.values()}, {"type", type ? json(*type) : json(nullptr)}, {"contexts", contexts},
                      {"on_klein_quadric", on_quadric(p.mask())}});
        } else {
            std::string s = "signature " + sig.str() + "\n";
            s += type ? "type " + std::to_string(*type) + "\n" : "type unmatched\n";
            for (const ContextProfile &prof : profiles) {
                const auto inf = prof.context.line_at_infinity();
                s += std::string(prof.context.sign == Sign::Negative ? "- " : "+ ") + "{" + prof.context.str() + "}  plane " +
                     std::string(plane_class_name(prof.plane.plane_class)) + "  infinity {" + pentagram::detail::join_labels(inf) + "}\n";
            }
            emit(s);
        }
        return type ? kExitOk : kExitFailure;
    }

    int klein() {
        const auto &all = pentagrams();
        const GoldenTable ref = golden();
        Atlas atlas;
        try {
            atlas = build_atlas(all, ref);
        } catch (const AtlasMismatch &e) {
            return report_atlas_mismatch(e);
        }
        const auto quadric = pentagrams_on_quadric(all);
        const KleinCensus census = klein_census(atlas, quadric, ref);
        if (config_.format == Format::Json) {
            json rows = json::array();
            for (std::size_t r = 0; r < atlas.rows.size(); ++r) {
                rows.push_back({{"T", atlas.rows[r].t}, {"K", census.k_by_type[r]}, {"reference_K", ref[r].k}});
            }
            emit(json{{"quadric_points", labels_json(KleinQuadric().points())},
                      {"pentagrams", census.total},
                      {"realized", census.realized},
                      {"missing", census.missing},
                      {"rows", rows}});
        } else if (config_.format == Format::Csv) {
            std::string s = "T,K,reference_K\n";
            for (std::size_t r = 0; r < atlas.rows.size(); ++r) {
                s += std::to_string(atlas.rows[r].t) + "," + std::to_string(census.k_by_type[r]) + "," +
                     std::to_string(ref[r].k) + "\n";
            }
            emit(s);
        } else {
            emit("pentagrams on the quadric: " + std::to_string(census.total) + "\ntypes realized: " +
                 std::to_string(census.realized.size()) + "\ntypes missing: " + pentagram::detail::join_ints(census.missing) +
                 "\n");
        }
        if (!census.matches_reference()) {
            err_ << "K column differs from the reference:\n";
            for (const auto &line : census.mismatches) {
                err_ << "  " << line << "\n";
            }
            return kExitFailure;
        }
        return kExitOk;
    }

    int neighbors() {
        const Pentagram p = select();
        const auto &all = pentagrams();
        const PentagramIndex index(all);
        if (!index.find(p)) {
            throw Error(ErrorCode::SelectorOutOfRange, "pentagram is not in the enumerated set");
        }
        const Atlas atlas = build_atlas(all, golden());
        const auto found = index.two_edge_neighbor_indices(p);
        if (config_.format == Format::Json) {
            json list = json::array();
            for (std::size_t i : found) {
                json j = detail::labeled_json(all[i]);
                j["index"] = i;
                j["type"] = atlas.type_of[i];
                list.push_back(j);
            }
            emit(json{{"pentagram", detail::labeled_json(p)}, {"neighbors", list}});
        } else if (config_.format == Format::Csv) {
            std::string s = "index,type,neg\n";
            for (std::size_t i : found) {
                s += std::to_string(i) + "," + std::to_string(atlas.type_of[i]) + "," +
                     std::to_string(all[i].negative_context_count) + "\n";
            }
            emit(s);
        } else {
            std::string s = std::to_string(found.size()) + " two-edge neighbors\n";
            for (std::size_t i : found) {
                s += "#" + std::to_string(i) + " type " + std::to_string(atlas.type_of[i]) + "  " + detail::pentagram_line(all[i]) +
                     "\n";
            }
            emit(s);
        }
        return found.size() == 10 ? kExitOk : kExitFailure;
    }

    int render() {
        const Pentagram p = select();
        emit(config_.svg ? to_svg(p) : to_dot(p));
        return kExitOk;
    }

    int verify() {
        const auto &all = pentagrams();
        const VerificationReport report = run_verification(all, golden(), options());
        if (config_.format == Format::Json) {
            emit(report.to_json());
        } else {
            emit(report.text());
        }
        return report.passed() ? kExitOk : kExitFailure;
    }

    RunConfig config_;
    std::ostream &out_;
    std::ostream &err_;
    std::optional<std::vector<Pentagram>> all_;
};

/// Parses args (without the program name) and runs the selected command.
inline int run_cli(std::vector<std::string> args, std::ostream &out, std::ostream &err) {
    RunConfig config;
    CLI::App app{"Three-qubit Mermin pentagram atlas"};
    app.require_subcommand(1);
    // Global flags may follow the subcommand.
    app.fallthrough();
    std::string cache_dir = "cache";
    std::string format = "text";
    std::optional<std::size_t> index;
    std::optional<int> type;
    app.add_option("--cache-dir", cache_dir, "Pentagram cache directory (default ./cache)");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--threads", config.threads, "Enumeration workers (0 = all cores)");
    app.add_option("--out", config.out_file, "Write the output to FILE instead of stdout");
    app.add_option("--golden", config.golden_file, "Reference table CSV (default: built-in table)");

    app.add_subcommand("enumerate", "Enumerate all pentagrams and write the cache")
        ->add_flag("--force", config.force, "Ignore an existing cache");
    app.add_subcommand("table", "Type atlas with signature, K and multiplicity per type");
    app.add_subcommand("classify", "Type report for one pentagram")
        ->add_option("contexts", config.labels, "5 contexts, e.g. IIX,IXI,XII,XXX")
        ->expected(1, 20);
    app.add_subcommand("klein", "Pentagrams on the symmetric Klein quadric, per type");
    for (const char *name : {"neighbors", "render"}) {
        CLI::App *sub = app.add_subcommand(name, std::string(name) == "render" ? "DOT (or SVG) diagram of one pentagram"
                                                                               : "Pentagrams sharing two contexts with one pentagram");
        sub->add_option("--index", index, "Position in the enumerated list");
        sub->add_option("--type", type, "First pentagram of this type");
        sub->add_option("contexts", config.labels, "5 contexts of 4 labels")->expected(0, 20);
        if (std::string(name) == "render") {
            sub->add_flag("--svg", config.svg, "Emit SVG instead of DOT");
        }
    }
    app.add_subcommand("verify", "Run every invariant check");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    config.command = app.get_subcommands().front()->get_name();
    config.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;
    config.cache_dir = cache_dir;
    if (const char *env = std::getenv(kCacheEnv); env != nullptr && *env != '\0') {
        config.cache_dir = env;
    }
    config.index = index;
    config.type = type;
    if (config.type && (*config.type < 1 || *config.type > static_cast<int>(kTypeCount))) {
        err << "usage error: --type must be in [1, 45]\n";
        return kExitUsage;
    }

    try {
        return Runner(config, out, err).run();
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error &e) {
        // Bad labels, invalid configurations and selectors are input errors;
        // corrupt reference tables are usage errors too.
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

}  // namespace pentagram::cli
