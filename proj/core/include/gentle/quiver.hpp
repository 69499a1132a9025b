#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gentle {

// Parameters (r1, r2, s1, s2) of a normal-form quiver: r2 r-cycles, r1 r-arrows,
// s2 s-cycles, s1 s-arrows.
struct Parameters {
    int r1 = 0;
    int r2 = 0;
    int s1 = 0;
    int s2 = 0;

    int r() const { return r1 + r2; }
    int s() const { return s1 + s2; }
    bool operator==(const Parameters&) const = default;
};

std::string to_string(const Parameters& p);

// Swaps the r-pair and the s-pair.
Parameters mirror(const Parameters& p);

// Returns parameters with r2 > 0. Throws InvalidSpec when r or s is zero and
// HereditaryCase when r2 = s2 = 0.
Parameters normalize_parameters(const Parameters& p);

enum class VertexType { A, APrime, B, BPrime, C, Ctilde, D, DPrime, F, FPrime };

struct VertexClass {
    VertexType type = VertexType::C;
    int index = 0;  // used by A, A', B, B', D, D'

    bool operator==(const VertexClass&) const = default;
};

// "A1", "A'1", "B2", "C", "D0", "D'3", "F", "F'".
std::string canonical_name(const VertexClass& c);
std::string_view type_name(VertexType t);

enum class ArrowFamily { Alpha, Beta, Gamma, Delta };

struct ArrowName {
    ArrowFamily family = ArrowFamily::Alpha;
    int index = 1;

    bool operator==(const ArrowName&) const = default;
};

// "alpha1", "beta6", "gamma2", "delta4".
std::string canonical_name(const ArrowName& n);

struct Vertex {
    int id = 0;
    VertexClass cls;
    std::string label;  // empty when no user label is attached
};

struct Arrow {
    int id = 0;
    ArrowName name;
    std::string label;
    int source = 0;
    int target = 0;
    int S = 1;
    int T = 1;
};

// A relation (beta, alpha) means the composite "alpha then beta" lies in I.
struct Relation {
    int beta = 0;
    int alpha = 0;

    bool operator==(const Relation&) const = default;
    auto operator<=>(const Relation&) const = default;
};

class Quiver {
public:
    Quiver() = default;
    Quiver(Parameters params, std::vector<Vertex> vertices, std::vector<Arrow> arrows,
           std::vector<Relation> relations);

    const Parameters& params() const { return params_; }
    bool normalized() const { return params_.r2 > 0; }

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int arrow_count() const { return static_cast<int>(arrows_.size()); }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const std::vector<Relation>& relations() const { return relations_; }
    const Vertex& vertex(int id) const { return vertices_.at(id); }
    const Arrow& arrow(int id) const { return arrows_.at(id); }
    const std::vector<int>& out_arrows(int v) const { return out_.at(v); }
    const std::vector<int>& in_arrows(int v) const { return in_.at(v); }

    // beta after alpha composes into I.
    bool is_relation(int beta, int alpha) const;

    // Arrow id by family and index; -1 when absent.
    int arrow_id(ArrowFamily f, int index) const;
    int alpha(int i) const { return arrow_id(ArrowFamily::Alpha, i); }
    int beta(int j) const { return arrow_id(ArrowFamily::Beta, j); }
    int gamma(int k) const { return arrow_id(ArrowFamily::Gamma, k); }
    int delta(int k) const { return arrow_id(ArrowFamily::Delta, k); }

    // Vertex id of a class; -1 when absent.
    int vertex_id(const VertexClass& c) const;

    bool is_r_arrow(int a) const;
    bool is_s_arrow(int a) const;
    bool is_cycle_arrow(int a) const;

    std::string vertex_canonical(int v) const { return canonical_name(vertex(v).cls); }
    std::string arrow_canonical(int a) const { return canonical_name(arrow(a).name); }
    std::string vertex_label(int v) const;
    std::string arrow_label(int a) const;

    // Resolves a user label first, then a canonical name.
    std::optional<int> find_vertex(const std::string& token) const;
    std::optional<int> find_arrow(const std::string& token) const;

private:
    Parameters params_;
    std::vector<Vertex> vertices_;
    std::vector<Arrow> arrows_;
    std::vector<Relation> relations_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
    std::vector<std::vector<char>> rel_matrix_;
    std::map<std::pair<int, int>, int> by_name_;
    std::map<std::string, int> vertex_lookup_;
    std::map<std::string, int> arrow_lookup_;
};

// Builds the normal-form quiver. Requires r2 > 0 (see normalize_parameters).
Quiver build_normal_form(const Parameters& p);

// Same construction for any parameters with r, s > 0 and r2 + s2 > 0; used for
// the mirror quiver where r2 may be zero.
Quiver build_quiver_any(const Parameters& p);

struct GentleReport {
    bool ok = true;
    std::vector<std::string> violations;
};

GentleReport validate_gentle(const Quiver& q);

// Maps canonical name to user label.
struct Labels {
    std::map<std::string, std::string> vertex_labels;
    std::map<std::string, std::string> arrow_labels;
};

// Throws UnknownEntity for keys that name no vertex/arrow and DuplicateLabel when
// a label would make token resolution ambiguous.
Quiver apply_labels(const Quiver& q, const Labels& labels);

}  // namespace gentle
