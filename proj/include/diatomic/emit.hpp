#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "diatomic/fibrep.hpp"
#include "diatomic/sigma_binet.hpp"
#include "diatomic/verify.hpp"
#include "diatomic/workspace.hpp"

namespace diatomic {

inline constexpr int kSchemaVersion = 1;

// One term of a named sequence as a decimal string.  Sequences: "stern"
// (n >= 0), "b" (n >= 1), "r" (n >= 0), "sf" (n >= 0), "c" (n >= 0).
// Throws std::invalid_argument for an unknown name and std::domain_error for
// an index outside the sequence's domain.
std::string seq_term(Workspace& ws, const std::string& seq, uint64_t n);

// CSV with header "n,value", one row per term, LF line endings.
void emit_seq_csv(std::ostream& os, Workspace& ws, const std::string& seq,
                  uint64_t from, uint64_t to);
// JSON object {schema_version, sequence, from, to, values: [strings]}.
void emit_seq_json(std::ostream& os, Workspace& ws, const std::string& seq,
                   uint64_t from, uint64_t to);

// Graph samples of a singular function.  Targets: "f" and "qm" on the dyadic
// grid of the given depth, "g" on the same grid restricted to (0, 1], "Q" with
// x = k/F_depth over 0 <= k < F_{depth-1}.  CSV columns x,y,x_approx,y_approx
// with the first two exact; JSON mirrors the rows as string/number pairs.
void emit_plot_csv(std::ostream& os, Workspace& ws, const std::string& target,
                   unsigned depth);
void emit_plot_json(std::ostream& os, Workspace& ws, const std::string& target,
                    unsigned depth);

// Standalone SVG of the merged-word graph; vertices at (re P, -im P) so the
// tree grows downward.  labels = annotate each vertex with value:paths.
void emit_graph_svg(std::ostream& os, const GraphG& g, bool labels);
// The same graph as JSON: vertex records plus an edge index list.
void emit_graph_json(std::ostream& os, const GraphG& g);

void emit_conjectures_text(std::ostream& os, const ConjectureReport& rep);
void emit_conjectures_json(std::ostream& os, const ConjectureReport& rep);

// One verification suite result as JSON: {schema_version, suite, summary,
// cases, failures, passed, seconds, examples: [strings]}.
void emit_suite_json(std::ostream& os, const SuiteResult& r);

}  // namespace diatomic
