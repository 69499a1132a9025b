#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gentle/homotopy_string.hpp"
#include "gentle/quiver.hpp"

namespace gentle {

// A direct relation-free path, arrows in traversal order. Used as the label of a
// map p: P_{t} -> P_{s} between indecomposable projectives.
struct PathLabel {
    std::vector<int> arrows;

    bool operator==(const PathLabel&) const = default;
};

std::string render(const Quiver& q, const PathLabel& p);

struct Summand {
    int index = 0;   // position i in [0, L]
    int vertex = 0;  // P_vertex
};

struct DegreeTerm {
    int degree = 0;
    std::vector<Summand> summands;  // ascending index
};

// Matrix of the differential from `from_degree` to `from_degree + 1`.
// rows = summands in degree from+1, cols = summands in degree from.
struct Differential {
    int from_degree = 0;
    std::vector<std::vector<std::optional<PathLabel>>> entries;
};

struct StringComplex {
    int base_degree = 0;
    HString omega;
    std::vector<DegreeTerm> terms;  // ascending, consecutive degrees
    std::vector<Differential> differentials;

    bool is_zero() const { return terms.empty(); }
    int summand_count() const;
    const DegreeTerm* term(int degree) const;
};

StringComplex build_string_complex(const Quiver& q, int m, const HString& omega);

// Every composite of consecutive differentials vanishes modulo I.
bool verify_d_squared(const Quiver& q, const StringComplex& x);

// X[k]: degrees move by -k.
StringComplex shift(const StringComplex& x, int k);

// Representative of the pair {(m, w), (m + deg w, w^-1)} with the bytewise
// smaller canonical rendering.
std::pair<int, HString> iso_normalize(const Quiver& q, int m, const HString& omega);

// Arrow-joined degree list with matrix annotations.
std::string render(const Quiver& q, const StringComplex& x);

// Y_{m,omega,V_n(lambda)}, kept symbolic. lambda is carried as a label only.
struct BandComplexDescriptor {
    int base_degree = 0;
    HString band;  // canonical
    std::string lambda;
    int jordan_size = 1;

    bool operator==(const BandComplexDescriptor&) const = default;
};

struct BandARTriangle {
    BandComplexDescriptor start;
    std::vector<BandComplexDescriptor> middle;  // V_{n-1} (dropped when n = 1), V_{n+1}
    BandComplexDescriptor end;
};

// Throws IndexOutOfRange when jordan_size < 1 and NotAString when band is no band.
BandComplexDescriptor make_band_descriptor(const Quiver& q, int m, const HString& band,
                                           std::string lambda, int n);
BandARTriangle band_ar_triangle(const BandComplexDescriptor& d);
std::string render(const Quiver& q, const BandComplexDescriptor& d);

}  // namespace gentle
