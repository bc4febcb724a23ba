// icmkit command line tool.
//
// Subcommands:
//   report    invariants and classification flags as JSON
//   dual      Alexander dual as a facet file
//   skeleton  i-skeleton as a facet file
//   truncate  degree-k truncation as a facet file
//   betti     graded Betti numbers as JSON
//   atlas     classification of all small graphs, CSV or JSON lines
//   gen       generated graph's complex as a facet file
//
// Exit codes: 0 success, 2 bad input, 3 a size guard refused the run,
// 4 internal error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "icmkit.h"

namespace {

struct CommonArgs {
    std::string input;        // facet file path or "-" for stdin
    std::string gen;          // generator spec, alternative to input
    std::string edges;        // edge list path, alternative to input
    std::string graph_kind = "independence";
    std::string field = "Q";
    int unsafe_n = 0;
    bool timing = false;
};

void add_input_options(CLI::App* cmd, CommonArgs& args, bool wants_input) {
    if (wants_input) {
        cmd->add_option("input", args.input,
                        "facet file path, or - for standard input");
        cmd->add_option("--edges", args.edges, "read an edge list instead");
        cmd->add_option("--gen", args.gen,
                        "generate a graph: path:<n>, cycle:<n>, complete:<n>, "
                        "dtree:<recipe> (steps a/b,c,.../..., sizes then 1-based "
                        "attachment vertices)");
    }
    cmd->add_option("--graph", args.graph_kind,
                    "complex taken from a graph input: independence (default) or clique")
        ->check(CLI::IsMember({"independence", "clique"}));
    cmd->add_option("--field", args.field, "coefficient field: Q (default) or Fp:<p>");
    cmd->add_option("--unsafe-n", args.unsafe_n,
                    "raise the size guards to this vertex count");
    cmd->add_flag("--timing", args.timing, "include wall_time_ms in JSON output");
}

int report_error(icmkit_status status) {
    std::fprintf(stderr, "icmkit: %s\n", icmkit_last_error());
    switch (status) {
        case ICMKIT_ERR_PARSE:
        case ICMKIT_ERR_INVALID:
            return 2;
        case ICMKIT_ERR_GUARD:
            return 3;
        default:
            return 4;
    }
}

bool read_text(const std::string& path, std::string& out, std::string& error) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        out = buffer.str();
        return true;
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        error = "cannot open '" + path + "'";
        return false;
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    out = buffer.str();
    return true;
}

icmkit_options options_for(const CommonArgs& args) {
    icmkit_options opts;
    icmkit_options_init(&opts);
    opts.field = args.field.c_str();
    if (args.unsafe_n > 0) {
        opts.homology_guard = args.unsafe_n;
        opts.betti_guard = args.unsafe_n;
        opts.atlas_guard = args.unsafe_n;
    }
    opts.with_timing = args.timing ? 1 : 0;
    return opts;
}

// Builds the complex a subcommand's input options describe. Returns 0 and
// fills handle/name, or the process exit code.
int load_complex(const CommonArgs& args, icmkit_complex** handle, std::string& name) {
    int sources = (!args.input.empty() ? 1 : 0) + (!args.gen.empty() ? 1 : 0) +
                  (!args.edges.empty() ? 1 : 0);
    if (sources != 1) {
        std::fprintf(stderr, "icmkit: give exactly one input (facet file, --edges or --gen)\n");
        return 2;
    }
    icmkit_status status = ICMKIT_OK;
    if (!args.gen.empty()) {
        name = args.gen + " (" + args.graph_kind + ")";
        status = icmkit_generate(args.gen.c_str(), args.graph_kind.c_str(), handle);
    } else if (!args.edges.empty()) {
        std::string text, error;
        if (!read_text(args.edges, text, error)) {
            std::fprintf(stderr, "icmkit: %s\n", error.c_str());
            return 2;
        }
        name = args.edges + " (" + args.graph_kind + ")";
        status = icmkit_parse_edges(text.c_str(), args.graph_kind.c_str(), handle);
    } else {
        std::string text, error;
        if (!read_text(args.input, text, error)) {
            std::fprintf(stderr, "icmkit: %s\n", error.c_str());
            return 2;
        }
        name = args.input == "-" ? "stdin" : args.input;
        status = icmkit_parse_facets(text.c_str(), handle);
    }
    if (status != ICMKIT_OK) return report_error(status);
    return 0;
}

int emit_facets(icmkit_complex* handle) {
    char* text = nullptr;
    icmkit_status status = icmkit_facet_text(handle, &text);
    if (status != ICMKIT_OK) return report_error(status);
    std::fputs(text, stdout);
    icmkit_free_text(text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Cohen-Macaulay classification for simplicial complexes "
                 "and graph edge ideals"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(icmkit_version()));

    CommonArgs args;

    CLI::App* report = app.add_subcommand("report", "invariants and flags as JSON");
    add_input_options(report, args, true);

    CLI::App* dual = app.add_subcommand("dual", "Alexander dual as a facet file");
    add_input_options(dual, args, true);

    int skeleton_i = 0;
    CLI::App* skeleton = app.add_subcommand("skeleton", "i-skeleton as a facet file");
    skeleton->add_option("-i,--index", skeleton_i, "skeleton dimension, >= -1")->required();
    add_input_options(skeleton, args, true);

    int truncate_k = 0;
    CLI::App* truncate = app.add_subcommand("truncate", "degree-k truncation as a facet file");
    truncate->add_option("-k,--degree", truncate_k, "truncation degree")->required();
    add_input_options(truncate, args, true);

    std::string betti_subject = "quotient_ring";
    CLI::App* betti = app.add_subcommand("betti", "graded Betti numbers as JSON");
    betti->add_option("--subject", betti_subject, "quotient_ring (default) or ideal")
        ->check(CLI::IsMember({"quotient_ring", "ideal"}));
    add_input_options(betti, args, true);

    int atlas_nmax = 7;
    bool atlas_jsonl = false;
    CLI::App* atlas = app.add_subcommand("atlas",
                                         "classify all graphs on 1..nmax vertices");
    atlas->add_option("--nmax", atlas_nmax, "largest vertex count (default 7)");
    atlas->add_flag("--jsonl", atlas_jsonl, "JSON lines instead of CSV");
    add_input_options(atlas, args, false);

    CLI::App* gen = app.add_subcommand("gen", "generated graph's complex as a facet file");
    gen->add_option("spec", args.gen,
                    "path:<n>, cycle:<n>, complete:<n>, dtree:<recipe> (steps "
                    "a/b,c,.../..., sizes then 1-based attachment vertices)")
        ->required();
    gen->add_option("--graph", args.graph_kind,
                    "complex taken from the graph: independence (default) or clique")
        ->check(CLI::IsMember({"independence", "clique"}));

    CLI11_PARSE(app, argc, argv);

    icmkit_complex* handle = nullptr;
    int exit_code = 0;
    std::string input_name;
    if (atlas->parsed()) {
        icmkit_options opts = options_for(args);
        char* text = nullptr;
        icmkit_status status = icmkit_atlas_text(atlas_nmax, atlas_jsonl ? 1 : 0, &opts, &text);
        if (status != ICMKIT_OK) return report_error(status);
        std::fputs(text, stdout);
        icmkit_free_text(text);
        return 0;
    }

    if ((exit_code = load_complex(args, &handle, input_name)) != 0) return exit_code;

    if (report->parsed()) {
        icmkit_options opts = options_for(args);
        char* text = nullptr;
        icmkit_status status = icmkit_report_json(handle, input_name.c_str(), &opts, &text);
        if (status != ICMKIT_OK) {
            icmkit_complex_free(handle);
            return report_error(status);
        }
        std::fputs(text, stdout);
        icmkit_free_text(text);
    } else if (dual->parsed()) {
        icmkit_complex* result = nullptr;
        icmkit_status status = icmkit_alexander_dual(handle, &result);
        if (status != ICMKIT_OK) {
            icmkit_complex_free(handle);
            return report_error(status);
        }
        exit_code = emit_facets(result);
        icmkit_complex_free(result);
    } else if (skeleton->parsed()) {
        icmkit_complex* result = nullptr;
        icmkit_status status = icmkit_skeleton(handle, skeleton_i, &result);
        if (status != ICMKIT_OK) {
            icmkit_complex_free(handle);
            return report_error(status);
        }
        exit_code = emit_facets(result);
        icmkit_complex_free(result);
    } else if (truncate->parsed()) {
        icmkit_complex* result = nullptr;
        icmkit_status status = icmkit_truncate(handle, truncate_k, &result);
        if (status != ICMKIT_OK) {
            icmkit_complex_free(handle);
            return report_error(status);
        }
        exit_code = emit_facets(result);
        icmkit_complex_free(result);
    } else if (betti->parsed()) {
        icmkit_options opts = options_for(args);
        char* text = nullptr;
        icmkit_status status =
            icmkit_betti_json(handle, input_name.c_str(), betti_subject.c_str(), &opts, &text);
        if (status != ICMKIT_OK) {
            icmkit_complex_free(handle);
            return report_error(status);
        }
        std::fputs(text, stdout);
        icmkit_free_text(text);
    } else if (gen->parsed()) {
        exit_code = emit_facets(handle);
    }

    icmkit_complex_free(handle);
    return exit_code;
}
