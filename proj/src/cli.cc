// Copyright 2026 The tern2jw Authors
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

#include "tern2jw/cli.h"

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "tern2jw/circuit_text.h"
#include "tern2jw/clifford.h"
#include "tern2jw/errors.h"
#include "tern2jw/oracle.h"
#include "tern2jw/straighten.h"
#include "tern2jw/tree.h"

namespace tern2jw {
namespace {

struct Source {
    std::string name;
    std::string text;
};

/// Usage problem detected after CLI11 parsing succeeded.
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Input error tagged with the source it came from.
class SourceError : public std::runtime_error {
  public:
    SourceError(const std::string &source, const std::string &message) : std::runtime_error(source + ": " + message) {
    }
};

struct Options {
    std::vector<std::string> files;
    std::vector<std::string> exprs;
    bool fix_signs = false;
    bool swaps = false;
    std::size_t oracle_cap = kDefaultOracleCap;
};

Source read_source(const std::string &path, std::istream &in) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << in.rdbuf();
        return {"<stdin>", buffer.str()};
    }
    std::ifstream file(path);
    if (!file) {
        throw SourceError(path, "cannot open file");
    }
    buffer << file.rdbuf();
    return {path, buffer.str()};
}

std::vector<Source> gather(const Options &opts, std::istream &in) {
    std::vector<Source> sources;
    for (const auto &e : opts.exprs) {
        sources.push_back({"<-e>", e});
    }
    for (const auto &f : opts.files) {
        sources.push_back(read_source(f, in));
    }
    return sources;
}

TernaryTree load_tree(const Source &source) {
    try {
        return parse_tree(source.text);
    } catch (const std::invalid_argument &e) {
        throw SourceError(source.name, e.what());
    } catch (const std::out_of_range &e) {
        throw SourceError(source.name, e.what());
    }
}

TernaryTree single_tree(const Options &opts, std::istream &in) {
    auto sources = gather(opts, in);
    if (sources.size() != 1) {
        throw UsageError("expected exactly one tree (file or -e), got " + std::to_string(sources.size()));
    }
    return load_tree(sources.front());
}

int cmd_generators(const Options &opts, std::istream &in, std::ostream &out) {
    TernaryTree tree = single_tree(opts, in);
    GeneratorSet set = generators(tree);
    for (std::size_t j = 0; j < set.entries.size(); ++j) {
        out << 'e' << (j + 1) << ' ' << set.entries[j].product << '\n';
    }
    ValidationReport report = check_generator_set(set);
    out << "product " << *report.total_product << '\n';
    return kExitOk;
}

int cmd_straighten(const Options &opts, std::istream &in, std::ostream &out) {
    TernaryTree tree = single_tree(opts, in);
    StraightenOptions options;
    options.materialize_swaps = opts.swaps;
    StraightenResult result = straighten(tree, options);
    if (opts.fix_signs) {
        result = fix_signs(std::move(result));
    }
    out << format_certificate(result);
    return kExitOk;
}

int cmd_map(const Options &opts, std::istream &in, std::ostream &out) {
    auto sources = gather(opts, in);
    if (sources.size() != 2) {
        throw UsageError("map expects two trees, got " + std::to_string(sources.size()));
    }
    TernaryTree a = load_tree(sources[0]);
    TernaryTree b = load_tree(sources[1]);
    if (a.num_qubits() != b.num_qubits()) {
        throw UsageError("trees have different qubit counts (" + std::to_string(a.num_qubits()) + " and " +
                         std::to_string(b.num_qubits()) + ")");
    }
    MappingResult mapping = map_between(a, b);
    out << format_circuit(peephole_cancel(mapping.circuit));
    return kExitOk;
}

int cmd_verify(const Options &opts, std::istream &in, std::ostream &out) {
    auto sources = gather(opts, in);
    if (sources.size() != 2 || opts.exprs.size() > 1) {
        throw UsageError("verify expects a tree (file or -e) followed by a circuit file");
    }
    TernaryTree tree = load_tree(sources[0]);
    const Source &circuit_source = sources[1];
    const std::size_t m = tree.num_qubits();

    CircuitDocument doc;
    Circuit circuit(m);
    std::vector<QubitId> perm(m);
    try {
        doc = parse_circuit_text(circuit_source.text);
        if (doc.declared_qubits && *doc.declared_qubits != m) {
            throw SizeError("circuit declares " + std::to_string(*doc.declared_qubits) + " qubits, tree has " +
                            std::to_string(m));
        }
        circuit = doc.circuit(m);
        if (doc.permutation) {
            if (doc.permutation->size() != m) {
                throw SizeError("PERM lists " + std::to_string(doc.permutation->size()) + " qubits, tree has " +
                                std::to_string(m));
            }
            perm = *doc.permutation;
        } else {
            for (std::size_t i = 0; i < m; ++i) {
                perm[i] = static_cast<QubitId>(i + 1);
            }
        }
        if (doc.signs && doc.signs->size() != 2 * m + 1) {
            throw SizeError("SIGNS lists " + std::to_string(doc.signs->size()) + " entries, expected " +
                            std::to_string(2 * m + 1));
        }
    } catch (const std::invalid_argument &e) {
        throw SourceError(circuit_source.name, e.what());
    } catch (const std::out_of_range &e) {
        throw SourceError(circuit_source.name, e.what());
    }
    const std::vector<int> signs = doc.signs.value_or(std::vector<int>{});
    const std::size_t n = 2 * m + 1;

    bool ok = true;
    CertificateReport engine = check_certificate(tree, circuit, perm, signs);
    out << "engine: " << (n - engine.failures()) << '/' << n << " generators match"
        << (engine.bijective ? "" : " (ranks not a bijection)") << '\n';
    for (const auto &r : engine.ranks) {
        if (!r.ok) {
            out << "  e" << (r.leaf_rank + 1) << ": "
                << (r.jw_rank ? "sign mismatch at JW rank " + std::to_string(*r.jw_rank + 1)
                              : std::string("image is not a JW generator"))
                << '\n';
        }
    }
    ok = ok && engine.ok();

    if (m <= opts.oracle_cap) {
        StraightenResult claimed{circuit, perm, signs, {}, {}, 0};
        OracleReport oracle = oracle_check(tree, claimed, opts.oracle_cap);
        out << "oracle: " << (n - oracle.failures()) << '/' << n << " generators match\n";
        for (const auto &r : oracle.ranks) {
            if (!r.ok) {
                out << "  e" << (r.leaf_rank + 1) << ": mismatch\n";
            }
        }
        ok = ok && oracle.ok();
    } else {
        out << "oracle: skipped (" << m << " qubits > cap " << opts.oracle_cap << ")\n";
    }
    out << (ok ? "OK" : "FAILED") << '\n';
    return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_stats(const Options &opts, std::istream &in, std::ostream &out) {
    TernaryTree tree = single_tree(opts, in);
    auto products = leaf_products(tree);
    std::map<std::size_t, std::size_t> histogram;
    std::size_t total = 0;
    std::size_t max_weight = 0;
    for (const auto &p : products) {
        std::size_t w = p.weight();
        ++histogram[w];
        total += w;
        max_weight = std::max(max_weight, w);
    }
    out << "qubits " << tree.num_qubits() << '\n';
    out << "generators " << products.size() << '\n';
    for (auto [w, count] : histogram) {
        out << "weight " << w << ' ' << count << '\n';
    }
    out << "max_weight " << max_weight << '\n';
    std::ostringstream mean;
    mean << std::fixed << std::setprecision(4) << static_cast<double>(total) / static_cast<double>(products.size());
    out << "mean_weight " << mean.str() << '\n';
    return kExitOk;
}

int cmd_augment(const Options &opts, std::istream &in, std::ostream &out) {
    out << augment(single_tree(opts, in)).str() << '\n';
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
    CLI::App app{"Ternary qubit tree encodings and Clifford circuits to the Jordan-Wigner chain", "tern2jw"};
    app.require_subcommand(1);
    Options opts;

    auto add_inputs = [&](CLI::App *sub) {
        sub->add_option("files", opts.files, "Input files ('-' for stdin)");
        sub->add_option("-e", opts.exprs, "Inline tree text")->allow_extra_args(false);
    };

    auto *generators_cmd = app.add_subcommand("generators", "Print the 2m+1 leaf generators of a tree");
    auto *straighten_cmd = app.add_subcommand("straighten", "Emit a circuit mapping a tree to the JW chain");
    auto *map_cmd = app.add_subcommand("map", "Emit a circuit mapping tree A onto tree B");
    auto *verify_cmd = app.add_subcommand("verify", "Check a circuit certificate against a tree");
    auto *stats_cmd = app.add_subcommand("stats", "Generator weight statistics");
    auto *augment_cmd = app.add_subcommand("augment", "Print the completed tree");
    for (auto *sub : {generators_cmd, straighten_cmd, map_cmd, verify_cmd, stats_cmd, augment_cmd}) {
        add_inputs(sub);
    }
    straighten_cmd->add_flag("--fix-signs", opts.fix_signs, "Append Pauli gates so that JW ranks 1..2m get + signs");
    straighten_cmd->add_flag("--swaps", opts.swaps, "Materialise the qubit permutation as SWAP gates");
    verify_cmd->add_option("--oracle-cap", opts.oracle_cap, "Largest qubit count checked with dense matrices")
        ->check(CLI::Range(0, 15));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "tern2jw: " << e.what() << '\n';
        return kExitUsageError;
    }

    try {
        if (generators_cmd->parsed()) {
            return cmd_generators(opts, in, out);
        }
        if (straighten_cmd->parsed()) {
            return cmd_straighten(opts, in, out);
        }
        if (map_cmd->parsed()) {
            return cmd_map(opts, in, out);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(opts, in, out);
        }
        if (stats_cmd->parsed()) {
            return cmd_stats(opts, in, out);
        }
        if (augment_cmd->parsed()) {
            return cmd_augment(opts, in, out);
        }
    } catch (const UsageError &e) {
        err << "tern2jw: " << e.what() << '\n';
        return kExitUsageError;
    } catch (const SourceError &e) {
        err << e.what() << '\n';
        return kExitUsageError;
    } catch (const std::invalid_argument &e) {
        err << "tern2jw: " << e.what() << '\n';
        return kExitUsageError;
    }
    return kExitUsageError;
}

}  // namespace tern2jw
