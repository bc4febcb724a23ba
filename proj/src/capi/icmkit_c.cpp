#include "icmkit.h"

#include <chrono>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "icmkit/atlas.hpp"
#include "icmkit/betti.hpp"
#include "icmkit/complex.hpp"
#include "icmkit/invariants.hpp"
#include "icmkit/io.hpp"
#include "icmkit/report_json.hpp"
#include "icmkit/types.hpp"

struct icmkit_complex {
    icmkit::SimplicialComplex value;
};

namespace {

thread_local std::string g_last_error = "no error";

constexpr int kHomologyGuardDefault = 25;

icmkit_status fail(icmkit_status code, const std::string& message) {
    g_last_error = message;
    return code;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
icmkit_status guarded(Fn&& fn) {
    try {
        fn();
        return ICMKIT_OK;
    } catch (const icmkit::parse_error& e) {
        return fail(ICMKIT_ERR_PARSE, e.what());
    } catch (const icmkit::guard_error& e) {
        return fail(ICMKIT_ERR_GUARD, e.what());
    } catch (const icmkit::consistency_error& e) {
        return fail(ICMKIT_ERR_INTERNAL, e.what());
    } catch (const icmkit::domain_error& e) {
        return fail(ICMKIT_ERR_INVALID, e.what());
    } catch (const std::bad_alloc&) {
        return fail(ICMKIT_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(ICMKIT_ERR_INTERNAL, e.what());
    }
}

char* copy_text(const std::string& text) {
    char* out = new char[text.size() + 1];
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

icmkit_options defaults(const icmkit_options* opts) {
    icmkit_options o;
    icmkit_options_init(&o);
    if (opts) o = *opts;
    if (o.homology_guard <= 0) o.homology_guard = kHomologyGuardDefault;
    if (o.betti_guard <= 0) o.betti_guard = icmkit::kBettiGuard;
    if (o.atlas_guard <= 0) o.atlas_guard = icmkit::kAtlasGuard;
    return o;
}

icmkit::FieldSpec field_of(const icmkit_options& opts) {
    if (!opts.field) return icmkit::FieldSpec::rationals();
    return icmkit::FieldSpec::parse(opts.field);
}

icmkit_status require(bool ok, const char* message) {
    return ok ? ICMKIT_OK : fail(ICMKIT_ERR_INVALID, message);
}

icmkit::SimplicialComplex complex_of_graph(const icmkit::Graph& g, const char* kind) {
    std::string k = kind ? kind : "independence";
    if (k == "independence") return icmkit::independence_complex(g);
    if (k == "clique") return icmkit::clique_complex(g);
    throw icmkit::domain_error("complex kind must be 'independence' or 'clique'");
}

void check_homology_guard(const icmkit::SimplicialComplex& c, int guard) {
    if (c.vertex_count() > guard)
        throw icmkit::guard_error("homological computations limited to " +
                                  std::to_string(guard) + " vertices (input has " +
                                  std::to_string(c.vertex_count()) +
                                  "); raise the guard explicitly to proceed");
}

}  // namespace

void icmkit_options_init(icmkit_options* opts) {
    if (!opts) return;
    opts->field = nullptr;
    opts->homology_guard = kHomologyGuardDefault;
    opts->betti_guard = icmkit::kBettiGuard;
    opts->atlas_guard = icmkit::kAtlasGuard;
    opts->with_timing = 0;
}

const char* icmkit_last_error(void) { return g_last_error.c_str(); }

void icmkit_free_text(char* text) { delete[] text; }

void icmkit_complex_free(icmkit_complex* c) { delete c; }

icmkit_status icmkit_parse_facets(const char* text, icmkit_complex** out) {
    if (icmkit_status s = require(text && out, "text and out must be non-null")) return s;
    return guarded([&ens = *out, text]() {
        ens = new icmkit_complex{icmkit::parse_facets(text)};
    });
}

icmkit_status icmkit_parse_edges(const char* text, const char* complex_kind,
                                 icmkit_complex** out) {
    if (icmkit_status s = require(text && out, "text and out must be non-null")) return s;
    return guarded([&ens = *out, text, complex_kind]() {
        ens = new icmkit_complex{complex_of_graph(icmkit::parse_edges(text), complex_kind)};
    });
}

icmkit_status icmkit_generate(const char* spec, const char* complex_kind,
                              icmkit_complex** out) {
    if (icmkit_status s = require(spec && out, "spec and out must be non-null")) return s;
    return guarded([&ens = *out, spec, complex_kind]() {
        ens = new icmkit_complex{complex_of_graph(icmkit::parse_generator(spec), complex_kind)};
    });
}

icmkit_status icmkit_alexander_dual(const icmkit_complex* c, icmkit_complex** out) {
    if (icmkit_status s = require(c && out, "complex and out must be non-null")) return s;
    return guarded([&ens = *out, c]() {
        ens = new icmkit_complex{c->value.alexander_dual()};
    });
}

icmkit_status icmkit_skeleton(const icmkit_complex* c, int i, icmkit_complex** out) {
    if (icmkit_status s = require(c && out, "complex and out must be non-null")) return s;
    return guarded([&ens = *out, c, i]() {
        ens = new icmkit_complex{c->value.skeleton(i)};
    });
}

icmkit_status icmkit_truncate(const icmkit_complex* c, int k, icmkit_complex** out) {
    if (icmkit_status s = require(c && out, "complex and out must be non-null")) return s;
    return guarded([&ens = *out, c, k]() {
        ens = new icmkit_complex{c->value.truncated(k)};
    });
}

icmkit_status icmkit_facet_text(const icmkit_complex* c, char** out) {
    if (icmkit_status s = require(c && out, "complex and out must be non-null")) return s;
    return guarded([&ens = *out, c]() {
        ens = copy_text(icmkit::serialize_facets(c->value));
    });
}

icmkit_status icmkit_report_json(const icmkit_complex* c, const char* input_name,
                                 const icmkit_options* opts, char** out) {
    if (icmkit_status s = require(c && out, "complex and out must be non-null")) return s;
    return guarded([&ens = *out, c, input_name, opts]() {
        icmkit_options o = defaults(opts);
        icmkit::FieldSpec field = field_of(o);
        check_homology_guard(c->value, o.homology_guard);
        auto started = std::chrono::steady_clock::now();
        icmkit::InvariantReport r = icmkit::report(c->value, field);
        std::optional<double> wall;
        if (o.with_timing) {
            wall = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - started).count();
        }
        ens = copy_text(icmkit::dump_json(
            icmkit::report_json(r, input_name ? input_name : "", wall)));
    });
}

icmkit_status icmkit_betti_json(const icmkit_complex* c, const char* input_name,
                                const char* subject, const icmkit_options* opts,
                                char** out) {
    if (icmkit_status s = require(c && out, "complex and out must be non-null")) return s;
    return guarded([&ens = *out, c, input_name, subject, opts]() {
        icmkit_options o = defaults(opts);
        icmkit::FieldSpec field = field_of(o);
        std::string side = subject ? subject : "quotient_ring";
        auto started = std::chrono::steady_clock::now();
        icmkit::BettiTable table = icmkit::hochster_betti(c->value, field, o.betti_guard);
        if (side == "ideal") table = icmkit::ideal_table(table);
        else if (side != "quotient_ring")
            throw icmkit::domain_error("subject must be 'quotient_ring' or 'ideal'");
        std::optional<double> wall;
        if (o.with_timing) {
            wall = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - started).count();
        }
        ens = copy_text(icmkit::dump_json(
            icmkit::betti_json(table, input_name ? input_name : "", wall)));
    });
}

icmkit_status icmkit_atlas_text(int nmax, int jsonl, const icmkit_options* opts, char** out) {
    if (icmkit_status s = require(out != nullptr, "out must be non-null")) return s;
    return guarded([&ens = *out, nmax, jsonl, opts]() {
        icmkit_options o = defaults(opts);
        icmkit::FieldSpec field = field_of(o);
        ens = copy_text(icmkit::atlas_text(nmax, field, jsonl != 0, o.atlas_guard));
    });
}

const char* icmkit_version(void) { return ICMKIT_VERSION; }
