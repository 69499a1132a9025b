#include "gentle/io.hpp"

#include <fstream>
#include <iomanip>
#include <regex>
#include <sstream>

#include "json.hpp"

namespace gentle {

using Json = nlohmann::ordered_json;

namespace {

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json shifted_json(const Quiver& q, const Shifted& s) {
    return Json{{"degree", s.degree}, {"string", render(q, s.string)}};
}

Json shifted_list_json(const Quiver& q, const std::vector<Shifted>& xs) {
    Json out = Json::array();
    for (const Shifted& x : xs) out.push_back(shifted_json(q, x));
    return out;
}

Json label_map(const Json& doc, const char* key) {
    if (!doc.contains(key)) return Json::object();
    const Json& m = doc.at(key);
    if (!m.is_object()) fail(ErrorKind::InvalidSpec, std::string(key) + " must be an object");
    for (const auto& [k, v] : m.items())
        if (!v.is_string()) fail(ErrorKind::InvalidSpec, std::string(key) + "." + k + " must be a string");
    return m;
}

std::string sign_text(int s) { return s > 0 ? "+1" : "-1"; }

}  // namespace

QuiverSpec parse_quiver_spec(const std::string& json_text) {
    Json doc;
    try {
        doc = Json::parse(json_text);
    } catch (const Json::parse_error& e) {
        fail(ErrorKind::SyntaxError, std::string("quiver spec is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) fail(ErrorKind::InvalidSpec, "quiver spec must be an object");
    for (const auto& [k, v] : doc.items())
        if (k != "parameters" && k != "vertex_labels" && k != "arrow_labels")
            fail(ErrorKind::InvalidSpec, "unknown quiver spec field '" + k + "'");
    if (!doc.contains("parameters")) fail(ErrorKind::InvalidSpec, "quiver spec lacks parameters");
    const Json& ps = doc.at("parameters");
    if (!ps.is_array() || ps.size() != 4) fail(ErrorKind::InvalidSpec, "parameters must be [r1, r2, s1, s2]");
    for (const Json& x : ps)
        if (!x.is_number_integer()) fail(ErrorKind::InvalidSpec, "parameters must be integers");
    QuiverSpec spec;
    spec.parameters = {ps[0].get<int>(), ps[1].get<int>(), ps[2].get<int>(), ps[3].get<int>()};
    const Json vertex_labels = label_map(doc, "vertex_labels");
    const Json arrow_labels = label_map(doc, "arrow_labels");
    for (const auto& [k, v] : vertex_labels.items()) spec.labels.vertex_labels[k] = v.get<std::string>();
    for (const auto& [k, v] : arrow_labels.items()) spec.labels.arrow_labels[k] = v.get<std::string>();
    return spec;
}

QuiverSpec read_quiver_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::InvalidSpec, "cannot read quiver spec '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_quiver_spec(buf.str());
}

Parameters parse_parameters(const std::string& text) {
    static const std::regex shape(R"(^\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*$)");
    std::smatch m;
    if (!std::regex_match(text, m, shape)) fail(ErrorKind::SyntaxError, "parameters must look like r1,r2,s1,s2");
    return {std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3]), std::stoi(m[4])};
}

Quiver build_quiver(const QuiverSpec& spec) {
    Quiver q = build_normal_form(normalize_parameters(spec.parameters));
    const GentleReport rep = validate_gentle(q);
    if (!rep.ok) fail(ErrorKind::InvariantBreach, "normal form violates the gentle conditions: " + rep.violations.front());
    return apply_labels(q, spec.labels);
}

Format parse_format(const std::string& text) {
    if (text == "text") return Format::Text;
    if (text == "structured") return Format::Structured;
    if (text == "dot") return Format::Dot;
    fail(ErrorKind::SyntaxError, "unknown format '" + text + "'");
}

std::string quiver_table(const Quiver& q) {
    std::ostringstream out;
    out << "parameters " << to_string(q.params()) << "\n\nvertices\n";
    for (const Vertex& v : q.vertices())
        out << "  " << std::left << std::setw(6) << q.vertex_label(v.id) << canonical_name(v.cls) << "\n";
    out << "\narrows\n";
    for (const Arrow& a : q.arrows())
        out << "  " << std::left << std::setw(6) << q.arrow_label(a.id) << std::setw(8) << canonical_name(a.name)
            << std::setw(6) << q.vertex_label(a.source) << std::setw(6) << q.vertex_label(a.target) << "S="
            << std::setw(4) << sign_text(a.S) << "T=" << sign_text(a.T) << "\n";
    out << "\nrelations\n";
    for (const Relation& r : q.relations())
        out << "  " << q.arrow_label(r.beta) << " " << q.arrow_label(r.alpha) << "\n";
    return out.str();
}

std::string render_trace(const Quiver& q, const ReductionTrace& t) {
    std::ostringstream out;
    for (const ReductionStep& s : t.steps)
        out << render(q, s.before) << (s.inverted ? "  (inverted)" : "") << "  --" << to_string(s.kind) << "-->  "
            << render(q, s.after) << "\n";
    out << "base " << render(q, t.base) << " (" << to_string(t.type) << ")\n";
    return out.str();
}

std::string render_triangle(const Quiver& q, const ARTriangle& t) {
    std::string mid;
    for (const Shifted& x : t.middle) mid += (mid.empty() ? "" : " + ") + render(q, x);
    return render(q, t.start) + " -> " + mid + " -> " + render(q, t.end) + " -> " + render(q, t.connecting) + "\n";
}

std::string render_edge(const Quiver& q, const EdgeCycle& e) {
    std::string out = render(q, e.id) + ":";
    for (const Shifted& x : e.members) out += " " + render(q, x);
    out += " | " + render(q, e.closing) + "\n";
    return out;
}

std::string render_census(const Quiver& q, const std::vector<ComponentFamily>& families) {
    std::ostringstream out;
    out << "census of " << to_string(q.params()) << "\n";
    for (const ComponentFamily& f : families) {
        out << "- " << f.name << ": " << f.count << " x " << to_string(f.shape);
        if (f.shape == Shape::ZAinf) out << " with tau^" << f.tau_power << " = [" << f.tau_shift << "]";
        if (f.shape == Shape::Tube || f.shape == Shape::HomogeneousTube) out << " of rank " << f.tube_rank;
        out << ", parametrized by " << f.parametrization << (f.verified ? "" : "  [NOT VERIFIED]") << "\n";
        for (const EdgeCycle& e : f.edges) out << "    " << render_edge(q, e);
    }
    return out.str();
}

std::string render_crosscheck(const CrosscheckReport& r, int max_lines) {
    std::ostringstream out;
    out << (r.effective ? "effective" : "literal") << " tables vs direct algorithm on " << to_string(r.params)
        << ", length <= " << r.max_len << ": " << r.checked << " strings, " << r.string_mismatches
        << " string mismatches, " << r.m_prime_mismatches << " m' mismatches, " << r.unexplained
        << " without a registered erratum\n";
    int shown = 0;
    for (const CrosscheckLine& l : r.lines) {
        if (shown++ == max_lines) {
            out << "  ... " << (r.lines.size() - static_cast<std::size_t>(max_lines)) << " more\n";
            break;
        }
        out << "  " << l.omega << ": table " << l.table << " [" << l.row << "], direct " << l.oracle
            << (l.erratum.empty() ? "" : "  erratum " + l.erratum) << "\n";
    }
    return out.str();
}

std::string structured_quiver(const Quiver& q) {
    const Parameters& p = q.params();
    Json j;
    j["parameters"] = {p.r1, p.r2, p.s1, p.s2};
    Json vs = Json::array();
    for (const Vertex& v : q.vertices())
        vs.push_back({{"id", v.id}, {"label", q.vertex_label(v.id)}, {"class", canonical_name(v.cls)}});
    j["vertices"] = vs;
    Json as = Json::array();
    for (const Arrow& a : q.arrows())
        as.push_back({{"id", a.id},
                      {"name", canonical_name(a.name)},
                      {"label", q.arrow_label(a.id)},
                      {"source", q.vertex_label(a.source)},
                      {"target", q.vertex_label(a.target)},
                      {"S", a.S},
                      {"T", a.T}});
    j["arrows"] = as;
    Json rs = Json::array();
    for (const Relation& r : q.relations()) rs.push_back({q.arrow_label(r.beta), q.arrow_label(r.alpha)});
    j["relations"] = rs;
    j["gentle"] = validate_gentle(q).ok;
    return dump(j);
}

std::string structured_string(const Quiver& q, const HString& w) {
    Json j;
    j["string"] = render(q, w);
    j["canonical"] = render_canonical(q, w);
    j["kind"] = w.is_empty() ? "empty" : w.is_trivial() ? "trivial" : "word";
    j["length"] = w.length();
    if (!w.is_empty()) {
        j["source"] = q.vertex_label(source(q, w));
        j["target"] = q.vertex_label(target(q, w));
        j["degree"] = degree(q, w);
        Json parts = Json::array();
        if (w.is_word())
            for (const HString& h : homotopy_partition(q, w)) parts.push_back(render(q, h));
        j["homotopy_letters"] = parts;
        j["band"] = is_band(q, w);
    }
    return dump(j);
}

std::string structured_complex(const Quiver& q, const StringComplex& x) {
    Json j;
    j["base_degree"] = x.base_degree;
    j["string"] = render(q, x.omega);
    Json terms = Json::array();
    for (const DegreeTerm& t : x.terms) {
        Json ss = Json::array();
        for (const Summand& s : t.summands) ss.push_back({{"index", s.index}, {"projective", q.vertex_label(s.vertex)}});
        terms.push_back({{"degree", t.degree}, {"summands", ss}});
    }
    j["terms"] = terms;
    Json ds = Json::array();
    for (const Differential& d : x.differentials) {
        Json rows = Json::array();
        for (const auto& row : d.entries) {
            Json r = Json::array();
            for (const auto& e : row) r.push_back(e ? Json("p_{" + render(q, *e) + "}") : Json(0));
            rows.push_back(r);
        }
        ds.push_back({{"from_degree", d.from_degree}, {"matrix", rows}});
    }
    j["differentials"] = ds;
    j["d_squared_zero"] = verify_d_squared(q, x);
    return dump(j);
}

std::string structured_triangle(const Quiver& q, const ARTriangle& t) {
    Json j;
    j["start"] = shifted_json(q, t.start);
    j["middle"] = shifted_list_json(q, t.middle);
    j["end"] = shifted_json(q, t.end);
    j["connecting"] = shifted_json(q, t.connecting);
    return dump(j);
}

std::string structured_shifted(const Quiver& q, const std::vector<Shifted>& xs) {
    return dump(shifted_list_json(q, xs));
}

std::string structured_trace(const Quiver& q, const ReductionTrace& t) {
    Json steps = Json::array();
    for (const ReductionStep& s : t.steps)
        steps.push_back({{"before", render(q, s.before)},
                         {"inverted", s.inverted},
                         {"kind", std::string(to_string(s.kind))},
                         {"after", render(q, s.after)}});
    Json j;
    j["steps"] = steps;
    j["base"] = render(q, t.base);
    j["base_type"] = std::string(to_string(t.type));
    return dump(j);
}

std::string structured_component(const Quiver& q, const ComponentId& id) {
    Json j;
    j["id"] = render(q, id);
    j["kind"] = std::string(to_string(id.kind));
    j["value"] = id.value;
    if (id.kind == ComponentKind::Central || id.kind == ComponentKind::Tube) j["string"] = render(q, id.string);
    if (id.kind == ComponentKind::Tube) j["lambda"] = id.lambda;
    return dump(j);
}

namespace {

Json edge_json(const Quiver& q, const EdgeCycle& e) {
    return Json{{"id", render(q, e.id)},
                {"members", shifted_list_json(q, e.members)},
                {"closing", shifted_json(q, e.closing)},
                {"period", e.period},
                {"degree_drop", e.degree_drop}};
}

}  // namespace

std::string structured_census(const Quiver& q, const std::vector<ComponentFamily>& families) {
    const Parameters& p = q.params();
    Json fs = Json::array();
    for (const ComponentFamily& f : families) {
        Json j;
        j["name"] = f.name;
        j["shape"] = std::string(to_string(f.shape));
        j["count"] = f.count;
        j["parametrization"] = f.parametrization;
        if (f.shape == Shape::ZAinf) j["tau_relation"] = {f.tau_power, f.tau_shift};
        if (f.shape == Shape::Tube || f.shape == Shape::HomogeneousTube) j["tube_rank"] = f.tube_rank;
        Json es = Json::array();
        for (const EdgeCycle& e : f.edges) es.push_back(edge_json(q, e));
        j["edges"] = es;
        j["verified"] = f.verified;
        fs.push_back(j);
    }
    return dump(Json{{"parameters", {p.r1, p.r2, p.s1, p.s2}}, {"families", fs}});
}

std::string structured_edge(const Quiver& q, const EdgeCycle& e) { return dump(edge_json(q, e)); }

std::string structured_fragment(const Quiver& q, const Fragment& f) {
    Json cells = Json::array();
    for (int r = 0; r < f.rows; ++r)
        for (int c = 0; c < f.cols; ++c)
            if (const auto& x = f.cells[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)])
                cells.push_back({{"row", r}, {"col", c}, {"degree", x->degree}, {"string", render(q, x->string)}});
    Json j;
    j["rows"] = f.rows;
    j["cols"] = f.cols;
    j["cells"] = cells;
    j["valid"] = f.valid();
    j["violations"] = f.violations;
    return dump(j);
}

std::string structured_bands(const Quiver& q, const std::vector<HString>& bands) {
    Json bs = Json::array();
    for (const HString& b : bands) bs.push_back({{"band", render(q, b)}, {"length", b.length()}, {"valid", is_band(q, b)}});
    return dump(bs);
}

std::string structured_crosscheck(const CrosscheckReport& r) {
    Json lines = Json::array();
    for (const CrosscheckLine& l : r.lines)
        lines.push_back({{"omega", l.omega},
                         {"table", l.table},
                         {"row", l.row},
                         {"direct", l.oracle},
                         {"string_mismatch", l.string_mismatch},
                         {"m_prime_mismatch", l.m_prime_mismatch},
                         {"erratum", l.erratum}});
    Json j;
    j["parameters"] = {r.params.r1, r.params.r2, r.params.s1, r.params.s2};
    j["max_len"] = r.max_len;
    j["tables"] = r.effective ? "effective" : "literal";
    j["checked"] = r.checked;
    j["string_mismatches"] = r.string_mismatches;
    j["m_prime_mismatches"] = r.m_prime_mismatches;
    j["unexplained"] = r.unexplained;
    j["lines"] = lines;
    return dump(j);
}

std::string structured_error(const Error& e) {
    return dump(Json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}, {"exit_code", e.exit_code()}});
}

}  // namespace gentle
