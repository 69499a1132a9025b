#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gentle/homotopy_string.hpp"
#include "gentle/quiver.hpp"

namespace gentle {

enum class WalkKind { CwR, CcwR, CwS, CcwS };

std::string_view to_string(WalkKind k);
// Accepts "cw_r", "ccw_r", "cw_s", "ccw_s"; throws SyntaxError otherwise.
WalkKind parse_walk_kind(const std::string& text);
bool is_r_kind(WalkKind k);

// Vertex and arrow correspondence between Q(r1,r2,s1,s2) and Q(s1,s2,r1,r2):
// A <-> A', B <-> B', D <-> D', alpha <-> beta, gamma <-> delta.
VertexClass mirror(const VertexClass& c);
ArrowName mirror(const ArrowName& n);

// Walk steps of a quiver, precomputed at construction. The s-kinds are obtained
// from the r-kinds of the mirror quiver.
class Walks {
public:
    explicit Walks(Quiver q);

    const Quiver& quiver() const { return *q_; }

    // Whether x belongs to the vertex set on which the kind's case list is defined.
    bool on_walk(int x, WalkKind k) const;
    // Case-list value on on-walk vertices, the prefix otherwise. Throws NoWalkStep
    // when no step of the kind passes through x.
    const HString& step(int x, WalkKind k) const;
    std::optional<HString> try_step(int x, WalkKind k) const;
    std::vector<HString> walk(int x, WalkKind k, int n) const;
    int period(WalkKind k) const;
    // The r-th (resp. s-th) step of the walk starting in x.
    const HString& period_step(int x, WalkKind k) const;

private:
    std::shared_ptr<const Quiver> q_;
    std::array<std::vector<std::optional<HString>>, 4> steps_;
    std::array<std::vector<char>, 4> on_walk_;
    std::array<std::vector<std::optional<HString>>, 4> period_steps_;
};

// Case lists of the clockwise and counter-clockwise r-walks on any quiver built by
// build_quiver_any; nullopt outside the kind's vertex set.
std::optional<HString> cw_r_case(const Quiver& q, int x);
std::optional<HString> ccw_r_case(const Quiver& q, int x);

// Reductions are named after the walk whose step is stripped:
// CwR = property (i), CcwS = (ii), CcwR = (iii), CwS = (iv).
bool has_reduction_property(const Walks& w, const HString& omega, WalkKind k);
std::optional<HString> reduce(const Walks& w, const HString& omega, WalkKind k);

struct AdmissibleReduction {
    WalkKind kind;
    HString result;
};

std::optional<AdmissibleReduction> left_admissible_reduction(const Walks& w, const HString& omega);
std::optional<AdmissibleReduction> right_admissible_reduction(const Walks& w, const HString& omega);

bool in_central_first_set(const Quiver& q, const Letter& l);
bool in_central_last_set(const Quiver& q, const Letter& l);
bool is_central(const Quiver& q, const HString& omega);

enum class BaseType { EdgeSeed, Central, StalkCDD };
std::string_view to_string(BaseType t);

// Base type of a string that admits no admissible reduction, if it is one.
std::optional<BaseType> base_type(const Quiver& q, const HString& omega);

struct ReductionStep {
    HString before;     // string before the step, in its current orientation
    bool inverted;      // the left reduction was applied to before^-1
    WalkKind kind;
    HString after;      // left admissible reduction of before or of before^-1
};

struct ReductionTrace {
    HString base;
    BaseType type;
    std::vector<ReductionStep> steps;
};

ReductionTrace reduce_to_base(const Walks& w, const HString& omega);

}  // namespace gentle
