// C binding for the diatomic library.  Every entry point traps exceptions,
// maps them onto dt_status codes, and records the message on the context.

#include "diatomic.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <stdexcept>
#include <string>

#include "diatomic/cache.hpp"
#include "diatomic/emit.hpp"
#include "diatomic/fibrep.hpp"
#include "diatomic/oplus.hpp"
#include "diatomic/sigma_binet.hpp"
#include "diatomic/stern.hpp"
#include "diatomic/verify.hpp"
#include "diatomic/workspace.hpp"

struct dt_ctx {
    diatomic::Workspace ws;
    std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr) {
        std::memcpy(out, s.c_str(), s.size() + 1);
    }
    return out;
}

dt_status fail(dt_ctx* ctx, dt_status code, const std::string& message) {
    if (ctx != nullptr) {
        ctx->last_error = message;
    }
    return code;
}

// Run `fn`, translating exceptions to status codes.  The catch order matters:
// range_error precedes runtime_error (its base), and the logic_error family
// is taken apart before falling through to std::exception.
template <typename Fn>
dt_status guarded(dt_ctx* ctx, Fn&& fn) {
    if (ctx == nullptr) {
        return DT_ERR_INVALID_ARG;
    }
    try {
        return fn();
    } catch (const std::domain_error& e) {
        return fail(ctx, DT_ERR_DOMAIN, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(ctx, DT_ERR_INVALID_ARG, e.what());
    } catch (const std::out_of_range& e) {
        return fail(ctx, DT_ERR_RANGE, e.what());
    } catch (const std::range_error& e) {
        return fail(ctx, DT_ERR_RANGE, e.what());
    } catch (const std::runtime_error& e) {
        return fail(ctx, DT_ERR_IO, e.what());
    } catch (const std::exception& e) {
        return fail(ctx, DT_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(ctx, DT_ERR_INTERNAL, "unknown error");
    }
}

dt_status put_string(dt_ctx* ctx, char** out, const std::string& s) {
    char* copy = dup_string(s);
    if (copy == nullptr) {
        return fail(ctx, DT_ERR_INTERNAL, "out of memory");
    }
    *out = copy;
    return DT_OK;
}

// Decimal string -> BigInt, accepting an optional leading '-'.  Rejecting
// malformed text here keeps number parsing errors in DT_ERR_INVALID_ARG
// instead of whatever the bignum backend throws.
diatomic::BigInt parse_big(const char* text, const char* what) {
    if (text == nullptr || *text == '\0') {
        throw std::invalid_argument(std::string(what) + ": empty number");
    }
    const char* p = text;
    if (*p == '-') {
        ++p;
    }
    if (*p == '\0') {
        throw std::invalid_argument(std::string(what) + ": malformed number '" +
                                    text + "'");
    }
    for (const char* q = p; *q != '\0'; ++q) {
        if (*q < '0' || *q > '9') {
            throw std::invalid_argument(std::string(what) +
                                        ": malformed number '" + text + "'");
        }
    }
    return diatomic::BigInt(std::string(text));
}

std::string require_name(const char* s, const char* what) {
    if (s == nullptr) {
        throw std::invalid_argument(std::string(what) + ": null name");
    }
    return std::string(s);
}

// Listing caps.  The "c" table costs an exact Eisenstein-integer expansion
// per term, so its listings stay small; the linear-time tables get a cap
// that keeps memory use sane.
uint64_t seq_cap(const std::string& seq) {
    return seq == "c" ? 10000u : 10000000u;
}

void format_verify_text(std::ostream& os, const diatomic::SuiteResult& r) {
    os << r.name << ": " << (r.passed() ? "pass" : "FAIL") << ", ";
    if (!r.passed()) {
        os << r.failures << " of ";
    }
    os << r.cases << " cases (" << r.seconds << " s)\n";
    if (!r.summary.empty()) {
        os << "  " << r.summary << "\n";
    }
    if (!r.passed() && !r.examples.empty()) {
        os << "  first failing instances:\n";
        for (const std::string& e : r.examples) {
            os << "    " << e << "\n";
        }
    }
}

void format_verify_json(std::ostream& os, const diatomic::SuiteResult& r) {
    // Assembled with the same JSON emitter the rest of the library uses.
    diatomic::emit_suite_json(os, r);
}

}  // namespace

extern "C" {

const char* dt_version(void) { return "1.0.0"; }

dt_ctx* dt_ctx_new(void) {
    try {
        return new dt_ctx();
    } catch (...) {
        return nullptr;
    }
}

void dt_ctx_free(dt_ctx* ctx) { delete ctx; }

const char* dt_last_error(const dt_ctx* ctx) {
    return ctx == nullptr ? "" : ctx->last_error.c_str();
}

void dt_string_free(char* s) { std::free(s); }

dt_status dt_seq_term(dt_ctx* ctx, const char* seq, uint64_t n, char** out) {
    return guarded(ctx, [&]() -> dt_status {
        if (out == nullptr) {
            throw std::invalid_argument("dt_seq_term: null output pointer");
        }
        const std::string name = require_name(seq, "seq");
        return put_string(ctx, out, diatomic::seq_term(ctx->ws, name, n));
    });
}

dt_status dt_seq_write(dt_ctx* ctx, const char* seq, uint64_t from, uint64_t to,
                       const char* format, char** out) {
    return guarded(ctx, [&]() -> dt_status {
        if (out == nullptr) {
            throw std::invalid_argument("dt_seq_write: null output pointer");
        }
        const std::string name = require_name(seq, "seq");
        const std::string fmt = format == nullptr ? "csv" : format;
        if (to > seq_cap(name)) {
            throw std::range_error("seq: upper bound " + std::to_string(to) +
                                   " exceeds the cap " +
                                   std::to_string(seq_cap(name)) + " for '" +
                                   name + "'");
        }
        std::ostringstream os;
        if (fmt == "csv") {
            diatomic::emit_seq_csv(os, ctx->ws, name, from, to);
        } else if (fmt == "json") {
            diatomic::emit_seq_json(os, ctx->ws, name, from, to);
        } else {
            throw std::invalid_argument("seq: unknown format '" + fmt + "'");
        }
        return put_string(ctx, out, os.str());
    });
}

dt_status dt_bijection_to_index(dt_ctx* ctx, const char* kind, const char* left,
                                const char* right, char** out) {
    return guarded(ctx, [&]() -> dt_status {
        if (out == nullptr) {
            throw std::invalid_argument(
                "dt_bijection_to_index: null output pointer");
        }
        const std::string k = require_name(kind, "bijection");
        const diatomic::BigInt x = parse_big(left, "bijection");
        const diatomic::BigInt y = parse_big(right, "bijection");
        diatomic::BigInt n;
        if (k == "stern") {
            n = diatomic::stern_index(x, y);
        } else if (k == "oplus") {
            n = diatomic::b_pair_index(x, y);
        } else {
            throw std::invalid_argument("bijection: unknown kind '" + k + "'");
        }
        return put_string(ctx, out, n.str());
    });
}

dt_status dt_bijection_to_pair(dt_ctx* ctx, const char* kind, const char* index,
                               char** out) {
    return guarded(ctx, [&]() -> dt_status {
        if (out == nullptr) {
            throw std::invalid_argument(
                "dt_bijection_to_pair: null output pointer");
        }
        const std::string k = require_name(kind, "bijection");
        const diatomic::BigInt n = parse_big(index, "bijection");
        std::string text;
        if (k == "stern") {
            const diatomic::SternPair p = diatomic::stern_pair(n);
            text = p.left.str() + " " + p.right.str();
        } else if (k == "oplus") {
            const diatomic::BPair p = diatomic::b_pair(n);
            text = p.left.str() + " " + p.right.str();
        } else {
            throw std::invalid_argument("bijection: unknown kind '" + k + "'");
        }
        return put_string(ctx, out, text);
    });
}

dt_status dt_plot_write(dt_ctx* ctx, const char* target, unsigned depth,
                        const char* format, int labels, char** out) {
    return guarded(ctx, [&]() -> dt_status {
        if (out == nullptr) {
            throw std::invalid_argument("dt_plot_write: null output pointer");
        }
        const std::string t = require_name(target, "plot");
        std::ostringstream os;
        if (t == "graph") {
            const std::string fmt = format == nullptr ? "svg" : format;
            if (depth == 0 || depth > 24) {
                throw std::range_error(
                    "plot: graph depth must lie in [1, 24]");
            }
            const diatomic::GraphG g = diatomic::graph_g(depth);
            if (fmt == "svg") {
                diatomic::emit_graph_svg(os, g, labels != 0);
            } else if (fmt == "json") {
                diatomic::emit_graph_json(os, g);
            } else {
                throw std::invalid_argument("plot: unknown format '" + fmt +
                                            "' for graph");
            }
        } else {
            const std::string fmt = format == nullptr ? "csv" : format;
            if (fmt == "csv") {
                diatomic::emit_plot_csv(os, ctx->ws, t, depth);
            } else if (fmt == "json") {
                diatomic::emit_plot_json(os, ctx->ws, t, depth);
            } else {
                throw std::invalid_argument("plot: unknown format '" + fmt +
                                            "'");
            }
        }
        return put_string(ctx, out, os.str());
    });
}

dt_status dt_verify_names(dt_ctx* ctx, char** out) {
    return guarded(ctx, [&]() -> dt_status {
        if (out == nullptr) {
            throw std::invalid_argument("dt_verify_names: null output pointer");
        }
        std::string joined;
        for (const std::string& name : diatomic::verify_suite_names()) {
            joined += name;
            joined += '\n';
        }
        return put_string(ctx, out, joined);
    });
}

dt_status dt_verify_run(dt_ctx* ctx, const char* suite, uint64_t bound,
                        unsigned jobs, uint64_t seed, const char* format,
                        char** report, uint64_t* failures) {
    return guarded(ctx, [&]() -> dt_status {
        if (report == nullptr || failures == nullptr) {
            throw std::invalid_argument("dt_verify_run: null output pointer");
        }
        const std::string name = require_name(suite, "verify");
        const std::string fmt = format == nullptr ? "text" : format;
        if (fmt != "text" && fmt != "json") {
            throw std::invalid_argument("verify: unknown format '" + fmt +
                                        "'");
        }
        diatomic::VerifyOptions opt;
        opt.bound = bound;
        opt.jobs = jobs == 0 ? 1u : jobs;
        opt.seed = seed == 0 ? 1u : seed;
        const diatomic::SuiteResult r = diatomic::verify_run(name, ctx->ws, opt);
        std::ostringstream os;
        if (fmt == "text") {
            format_verify_text(os, r);
        } else {
            format_verify_json(os, r);
        }
        *failures = r.failures;
        return put_string(ctx, report, os.str());
    });
}

dt_status dt_conjectures(dt_ctx* ctx, uint64_t bound, unsigned jobs,
                         const char* format, char** out, uint64_t* violations) {
    return guarded(ctx, [&]() -> dt_status {
        if (out == nullptr || violations == nullptr) {
            throw std::invalid_argument("dt_conjectures: null output pointer");
        }
        const std::string fmt = format == nullptr ? "text" : format;
        if (fmt != "text" && fmt != "json") {
            throw std::invalid_argument("conjectures: unknown format '" + fmt +
                                        "'");
        }
        const diatomic::ConjectureReport rep = diatomic::run_conjectures(
            bound, ctx->ws.sf, ctx->ws.c, jobs == 0 ? 1u : jobs);
        std::ostringstream os;
        if (fmt == "text") {
            diatomic::emit_conjectures_text(os, rep);
        } else {
            diatomic::emit_conjectures_json(os, rep);
        }
        *violations = rep.total_violations();
        return put_string(ctx, out, os.str());
    });
}

dt_status dt_cache_save(dt_ctx* ctx, const char* path) {
    return guarded(ctx, [&]() -> dt_status {
        const std::string p = require_name(path, "cache");
        diatomic::cache_save(ctx->ws, p);
        return DT_OK;
    });
}

dt_status dt_cache_load(dt_ctx* ctx, const char* path) {
    return guarded(ctx, [&]() -> dt_status {
        const std::string p = require_name(path, "cache");
        diatomic::cache_load(ctx->ws, p);
        return DT_OK;
    });
}

}  // extern "C"
