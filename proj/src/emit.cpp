#include "diatomic/emit.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "json.hpp"

#include "diatomic/boxfn.hpp"
#include "diatomic/fibonacci.hpp"
#include "diatomic/oplus.hpp"

namespace diatomic {

namespace {

using nlohmann::json;

std::string approx(const Rational& x) {
    std::ostringstream os;
    os << std::setprecision(12) << x.convert_to<double>();
    return os.str();
}

struct PlotRow {
    Rational x, y;
};

std::vector<PlotRow> plot_rows(Workspace& ws, const std::string& target, unsigned depth) {
    std::vector<PlotRow> rows;
    if (target == "f" || target == "qm") {
        auto pts = sample_singular(target == "f" ? SingularFn::box : SingularFn::question, depth);
        rows.reserve(pts.size());
        for (const auto& p : pts) rows.push_back({p.x, p.y});
    } else if (target == "g") {
        if (depth > 20) throw std::range_error("plot: depth too large");
        uint64_t top = uint64_t{1} << depth;
        rows.reserve(top);
        for (uint64_t k = 1; k <= top; ++k) {
            Dyadic d(BigInt(k), depth);
            rows.push_back({d.value(), g_value(d)});
        }
    } else if (target == "Q") {
        if (depth < 2 || depth > 32) throw std::range_error("plot: Q depth must be in [2, 32]");
        BigInt fn = fib(depth);
        for (uint64_t k = 0; k < fib(depth - 1); ++k)
            rows.push_back({Rational(BigInt(k), fn), q_value(k, depth, ws.r)});
    } else {
        throw std::invalid_argument("plot: unknown target '" + target + "'");
    }
    return rows;
}

}  // namespace

std::string seq_term(Workspace& ws, const std::string& seq, uint64_t n) {
    if (seq == "stern") {
        ws.stern.ensure(n);
        return ws.stern.at(n).str();
    }
    if (seq == "b") {
        if (n < 1) throw std::domain_error("seq: b is defined for n >= 1");
        ws.b.ensure(n);
        return ws.b.at(n).str();
    }
    if (seq == "r") {
        ws.r.ensure(n);
        return ws.r.at(n).str();
    }
    if (seq == "sf") {
        ws.sf.ensure(n);
        return std::to_string(ws.sf.at(n));
    }
    if (seq == "c") {
        ws.c.ensure(n, ws.sf);
        return ws.c.at(n).str();
    }
    throw std::invalid_argument("seq: unknown sequence '" + seq + "'");
}

void emit_seq_csv(std::ostream& os, Workspace& ws, const std::string& seq,
                  uint64_t from, uint64_t to) {
    if (from > to) throw std::invalid_argument("seq: empty range");
    os << "n,value\n";
    for (uint64_t n = from; n <= to; ++n) os << n << ',' << seq_term(ws, seq, n) << '\n';
}

void emit_seq_json(std::ostream& os, Workspace& ws, const std::string& seq,
                   uint64_t from, uint64_t to) {
    if (from > to) throw std::invalid_argument("seq: empty range");
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["sequence"] = seq;
    doc["from"] = from;
    doc["to"] = to;
    auto& values = doc["values"] = json::array();
    for (uint64_t n = from; n <= to; ++n) values.push_back(seq_term(ws, seq, n));
    os << doc.dump(2) << '\n';
}

void emit_plot_csv(std::ostream& os, Workspace& ws, const std::string& target,
                   unsigned depth) {
    os << "x,y,x_approx,y_approx\n";
    for (const auto& row : plot_rows(ws, target, depth))
        os << row.x << ',' << row.y << ',' << approx(row.x) << ',' << approx(row.y) << '\n';
}

void emit_plot_json(std::ostream& os, Workspace& ws, const std::string& target,
                    unsigned depth) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["target"] = target;
    doc["depth"] = depth;
    auto& points = doc["points"] = json::array();
    for (const auto& row : plot_rows(ws, target, depth)) {
        json p;
        p["x"] = row.x.str();
        p["y"] = row.y.str();
        p["x_approx"] = row.x.convert_to<double>();
        p["y_approx"] = row.y.convert_to<double>();
        points.push_back(std::move(p));
    }
    os << doc.dump(2) << '\n';
}

void emit_graph_svg(std::ostream& os, const GraphG& g, bool labels) {
    double min_x = 0, max_x = 0, max_depth = 0;
    for (const auto& v : g.vertices) {
        min_x = std::min(min_x, v.x);
        max_x = std::max(max_x, v.x);
        max_depth = std::max(max_depth, -v.y);
    }
    const double scale = 120;                       // svg units per unit of P
    const double margin = labels ? 40.0 : 16.0;
    auto sx = [&](double x) { return (x - min_x) * scale + margin; };
    auto sy = [&](double y) { return -y * scale + margin; };
    double w = (max_x - min_x) * scale + 2 * margin;
    double h = max_depth * scale + 2 * margin;
    os << std::setprecision(6) << std::fixed;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << w << ' ' << h
       << "\" width=\"" << w << "\" height=\"" << h << "\">\n";
    os << "  <g stroke=\"#888\" stroke-width=\"1\">\n";
    for (const auto& [from, to] : g.edges) {
        const auto& a = g.vertices[from];
        const auto& b = g.vertices[to];
        os << "    <line x1=\"" << sx(a.x) << "\" y1=\"" << sy(a.y) << "\" x2=\"" << sx(b.x)
           << "\" y2=\"" << sy(b.y) << "\"/>\n";
    }
    os << "  </g>\n";
    os << "  <g fill=\"#205080\">\n";
    for (const auto& v : g.vertices)
        os << "    <circle cx=\"" << sx(v.x) << "\" cy=\"" << sy(v.y) << "\" r=\"2.5\"/>\n";
    os << "  </g>\n";
    if (labels) {
        os << "  <g font-family=\"monospace\" font-size=\"9\" fill=\"#333\">\n";
        for (const auto& v : g.vertices)
            os << "    <text x=\"" << sx(v.x) + 4 << "\" y=\"" << sy(v.y) - 4 << "\">" << v.value
               << ':' << v.paths.str() << "</text>\n";
        os << "  </g>\n";
    }
    os << "</svg>\n";
}

void emit_graph_json(std::ostream& os, const GraphG& g) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["depth"] = g.depth;
    auto& verts = doc["vertices"] = json::array();
    for (const auto& v : g.vertices) {
        json jv;
        jv["row"] = v.row;
        jv["value"] = v.value;
        jv["x"] = v.x;
        jv["y"] = v.y;
        jv["paths"] = v.paths.str();
        verts.push_back(std::move(jv));
    }
    auto& edges = doc["edges"] = json::array();
    for (const auto& [from, to] : g.edges) edges.push_back(json::array({from, to}));
    os << doc.dump(2) << '\n';
}

void emit_conjectures_text(std::ostream& os, const ConjectureReport& rep) {
    os << "conjecture sweep, bound " << rep.bound << '\n';
    if (!rep.note.empty()) os << rep.note << '\n';
    for (const auto& e : rep.entries) {
        os << "(" << e.id << ") " << e.description << '\n';
        os << "    cases " << e.cases << ", violations " << e.violations.size() << " ["
           << std::setprecision(2) << std::fixed << e.seconds << "s]\n";
        size_t shown = 0;
        for (const auto& v : e.violations) {
            if (shown++ == 8) {
                os << "    ... " << e.violations.size() - 8 << " more\n";
                break;
            }
            os << "    " << v << '\n';
        }
        os.unsetf(std::ios::fixed);
    }
    os << (rep.total_violations() == 0 ? "all conjectures held" : "violations found") << '\n';
}

void emit_conjectures_json(std::ostream& os, const ConjectureReport& rep) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["bound"] = rep.bound;
    doc["note"] = rep.note;
    doc["total_violations"] = rep.total_violations();
    auto& entries = doc["entries"] = json::array();
    for (const auto& e : rep.entries) {
        json je;
        je["id"] = e.id;
        je["description"] = e.description;
        je["bound"] = e.bound;
        je["cases"] = e.cases;
        je["violations"] = e.violations;
        je["seconds"] = e.seconds;
        entries.push_back(std::move(je));
    }
    os << doc.dump(2) << '\n';
}

void emit_suite_json(std::ostream& os, const SuiteResult& r) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["suite"] = r.name;
    doc["summary"] = r.summary;
    doc["cases"] = r.cases;
    doc["failures"] = r.failures;
    doc["passed"] = r.passed();
    doc["seconds"] = r.seconds;
    doc["examples"] = r.examples;
    os << doc.dump(2) << '\n';
}

}  // namespace diatomic
