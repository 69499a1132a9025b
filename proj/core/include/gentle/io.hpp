#pragma once

#include <string>
#include <vector>

#include "gentle/ar.hpp"
#include "gentle/classifier.hpp"
#include "gentle/complex.hpp"
#include "gentle/error.hpp"
#include "gentle/quiver.hpp"
#include "gentle/walks.hpp"

namespace gentle {

// {"parameters": [r1, r2, s1, s2], "vertex_labels": {...}, "arrow_labels": {...}}.
// Label maps are keyed by canonical names of the normalized quiver.
struct QuiverSpec {
    Parameters parameters;
    Labels labels;
};

// Throws SyntaxError on malformed JSON and InvalidSpec on a wrong shape.
QuiverSpec parse_quiver_spec(const std::string& json_text);
QuiverSpec read_quiver_spec(const std::string& path);
// "r1,r2,s1,s2"; throws SyntaxError.
Parameters parse_parameters(const std::string& text);

// Normalizes, builds, checks the gentle conditions and attaches labels.
Quiver build_quiver(const QuiverSpec& spec);

enum class Format { Text, Structured, Dot };
Format parse_format(const std::string& text);

// Text renderers.
std::string quiver_table(const Quiver& q);
std::string render_trace(const Quiver& q, const ReductionTrace& t);
std::string render_triangle(const Quiver& q, const ARTriangle& t);
std::string render_census(const Quiver& q, const std::vector<ComponentFamily>& families);
std::string render_edge(const Quiver& q, const EdgeCycle& e);
std::string render_crosscheck(const CrosscheckReport& r, int max_lines);

// Structured documents: JSON with fixed key order and ordered lists.
std::string structured_quiver(const Quiver& q);
std::string structured_string(const Quiver& q, const HString& w);
std::string structured_complex(const Quiver& q, const StringComplex& x);
std::string structured_triangle(const Quiver& q, const ARTriangle& t);
std::string structured_shifted(const Quiver& q, const std::vector<Shifted>& xs);
std::string structured_trace(const Quiver& q, const ReductionTrace& t);
std::string structured_component(const Quiver& q, const ComponentId& id);
std::string structured_census(const Quiver& q, const std::vector<ComponentFamily>& families);
std::string structured_edge(const Quiver& q, const EdgeCycle& e);
std::string structured_fragment(const Quiver& q, const Fragment& f);
std::string structured_bands(const Quiver& q, const std::vector<HString>& bands);
std::string structured_crosscheck(const CrosscheckReport& r);
std::string structured_error(const Error& e);

}  // namespace gentle
