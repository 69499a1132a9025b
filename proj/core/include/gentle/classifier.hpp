#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gentle/ar.hpp"
#include "gentle/homotopy_string.hpp"
#include "gentle/walks.hpp"

namespace gentle {

enum class ComponentKind { R, S, STube, Special, Central, Tube };

std::string_view to_string(ComponentKind k);

// value is the residue for R and S (mod r2, mod s2) and the shift otherwise.
// Central carries the iso-normalized central string, Tube the canonical band and
// the eigenvalue label; an inverted band appends "^-1" to the label.
struct ComponentId {
    ComponentKind kind = ComponentKind::R;
    int value = 0;
    HString string;
    std::string lambda;

    bool operator==(const ComponentId&) const = default;
};

// R(0), S(1), STube(-2), Special(0), Central(0, <string>), Tube(0, <band>, <lambda>).
std::string render(const Quiver& q, const ComponentId& id);
ComponentId parse_component_id(const Quiver& q, const std::string& text);

ComponentId classify(const Walks& w, int m, const HString& omega);
// Throws NotAString when band is not a homotopy band.
ComponentId classify_band(const Quiver& q, int m, const HString& band, const std::string& lambda);

// One period of an edge: members[0] is the seed, closing = tau^-period(seed).
struct EdgeCycle {
    ComponentId id;
    std::vector<Shifted> members;
    Shifted closing;
    int period = 0;
    int degree_drop = 0;  // seed degree minus closing degree
};

// Throws NotAnEdgeComponent for Special, Central and Tube ids, and
// NoSuchComponent for residues out of range.
EdgeCycle edge(const Walks& w, const ComponentId& id);

enum class Shape { HomogeneousTube, Tube, ZAinf, ZAinfinf };
std::string_view to_string(Shape s);

struct ComponentFamily {
    std::string name;
    Shape shape = Shape::ZAinf;
    int count = 0;                 // components per value of the parametrization
    std::string parametrization;   // "none" for a finite list
    int tube_rank = 0;             // Tube and HomogeneousTube only
    int tau_power = 0;             // tau^tau_power = [tau_shift]; ZAinf only
    int tau_shift = 0;
    std::vector<EdgeCycle> edges;  // one per component (ZAinf) or one sample (Tube)
    bool verified = true;          // edges reproduce the stated tau-relation or rank
};

std::vector<ComponentFamily> census(const Walks& w);

// Rows of translation-quiver cells; cell (r, c) is set iff r + c is even and it
// was reachable. Row 0 holds the seed at column 0 and its tau^-1 iterates.
struct Fragment {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::optional<Shifted>>> cells;
    std::vector<std::string> violations;  // meshes that are not AR-triangles

    bool valid() const { return violations.empty(); }
};

Fragment fragment(const Walks& w, int m, const HString& omega, int rows, int cols);
std::string render(const Quiver& q, const Fragment& f);
// Nodes are labelled render(omega)[m]; edges are the irreducible maps.
std::string render_dot(const Quiver& q, const Fragment& f);

struct SpecialChains {
    std::vector<Shifted> lower;  // 1_C^-1[i] -> 1_{D_{r1-1}}^-1[i] -> ... ; empty when r1 = 0
    std::vector<Shifted> upper;  // 1_C^-1[i] -> 1_{D'_{s1-1}}[i] -> ... ; empty when s1 = 0
};

// Throws NoSuchComponent when r1 = s1 = 0.
SpecialChains special_component_maps(const Walks& w, int i);

// beta_1^-1 ... beta_s^-1 alpha_r ... alpha_1.
HString central_band(const Quiver& q);
// The template omega of the infinite families; the r = r2 = 1 form or the r > 1 form.
HString band_family_base(const Quiver& q);
// base . (central band)^n; callers validate with is_band.
HString band_family(const Quiver& q, const HString& base, int n);
// Canonical bands of length <= max_len, ordered by length then canonical rendering.
std::vector<HString> enumerate_bands(const Quiver& q, int max_len);

}  // namespace gentle
