#include "gentle/complex.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "gentle/error.hpp"

namespace gentle {

std::string render(const Quiver& q, const PathLabel& p) {
    std::string out;
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
        if (!out.empty()) out += ' ';
        out += q.arrow_label(*it);
    }
    return out;
}

int StringComplex::summand_count() const {
    int n = 0;
    for (const auto& t : terms) n += static_cast<int>(t.summands.size());
    return n;
}

const DegreeTerm* StringComplex::term(int degree) const {
    for (const auto& t : terms)
        if (t.degree == degree) return &t;
    return nullptr;
}

namespace {

PathLabel label_of(const HString& direct) {
    PathLabel p;
    for (const auto& l : direct.letters()) p.arrows.push_back(l.arrow);
    return p;
}

}  // namespace

StringComplex build_string_complex(const Quiver& q, int m, const HString& omega) {
    StringComplex x;
    x.base_degree = m;
    x.omega = omega;
    if (omega.is_empty()) return x;
    if (omega.is_trivial()) {
        x.terms.push_back(DegreeTerm{m, {Summand{0, omega.vertex()}}});
        return x;
    }

    const auto parts = homotopy_partition(q, omega);  // parts[k] = sigma_{L-k}
    const int L = static_cast<int>(parts.size());
    std::vector<int> deg(static_cast<std::size_t>(L + 1), 0);
    std::vector<int> vertex(static_cast<std::size_t>(L + 1), 0);
    vertex[0] = target(q, omega);
    for (int i = 1; i <= L; ++i) {
        const HString& sigma = parts[static_cast<std::size_t>(i - 1)];
        deg[static_cast<std::size_t>(i)] = deg[static_cast<std::size_t>(i - 1)] + (sigma.first().inverse ? -1 : 1);
        vertex[static_cast<std::size_t>(i)] = source(q, sigma);
    }

    std::map<int, std::vector<Summand>> by_degree;
    for (int i = 0; i <= L; ++i)
        by_degree[m + deg[static_cast<std::size_t>(i)]].push_back(Summand{i, vertex[static_cast<std::size_t>(i)]});
    const int lo = by_degree.begin()->first;
    const int hi = by_degree.rbegin()->first;
    for (int d = lo; d <= hi; ++d) {
        auto it = by_degree.find(d);
        ensure(it != by_degree.end(), "string complex has a gap in degrees");
        x.terms.push_back(DegreeTerm{d, it->second});
    }

    for (int d = lo; d < hi; ++d) {
        const auto& cols = by_degree[d];
        const auto& rows = by_degree[d + 1];
        Differential diff;
        diff.from_degree = d;
        diff.entries.assign(rows.size(), std::vector<std::optional<PathLabel>>(cols.size()));
        for (std::size_t ri = 0; ri < rows.size(); ++ri) {
            for (std::size_t ci = 0; ci < cols.size(); ++ci) {
                const int i = rows[ri].index;
                const int j = cols[ci].index;
                // sigma_{L-i} sits at parts[i]
                if (i == j - 1) {
                    const HString& sigma = parts[static_cast<std::size_t>(i)];
                    if (sigma.first().inverse) diff.entries[ri][ci] = label_of(inverse(sigma));
                } else if (i == j + 1) {
                    const HString& sigma = parts[static_cast<std::size_t>(j)];
                    if (!sigma.first().inverse) diff.entries[ri][ci] = label_of(sigma);
                }
            }
        }
        x.differentials.push_back(std::move(diff));
    }
    return x;
}

bool verify_d_squared(const Quiver& q, const StringComplex& x) {
    for (std::size_t k = 0; k + 1 < x.differentials.size(); ++k) {
        const auto& first = x.differentials[k];
        const auto& second = x.differentials[k + 1];
        if (second.from_degree != first.from_degree + 1) continue;
        const std::size_t mid = first.entries.size();
        if (mid == 0) continue;
        const std::size_t cols = first.entries.front().size();
        for (std::size_t r = 0; r < second.entries.size(); ++r) {
            ensure(second.entries[r].size() == mid, "differential shapes do not chain");
            for (std::size_t c = 0; c < cols; ++c) {
                // Coefficients are all +1 and labels are paths, so a surviving
                // product can never cancel.
                for (std::size_t i = 0; i < mid; ++i) {
                    const auto& a = first.entries[i][c];   // applied first
                    const auto& b = second.entries[r][i];  // applied second
                    if (!a || !b || a->arrows.empty() || b->arrows.empty()) continue;
                    // p_b o p_a sends e to a.b: b is traversed before a.
                    if (!q.is_relation(a->arrows.front(), b->arrows.back())) return false;
                }
            }
        }
    }
    return true;
}

StringComplex shift(const StringComplex& x, int k) {
    StringComplex out = x;
    out.base_degree -= k;
    for (auto& t : out.terms) t.degree -= k;
    for (auto& d : out.differentials) d.from_degree -= k;
    return out;
}

std::pair<int, HString> iso_normalize(const Quiver& q, int m, const HString& omega) {
    if (omega.is_empty() || omega.is_trivial()) {
        if (omega.is_trivial() && prefers_inverse(q, omega)) return {m, inverse(omega)};
        return {m, omega};
    }
    if (prefers_inverse(q, omega)) return {m + degree(q, omega), inverse(omega)};
    return {m, omega};
}

std::string render(const Quiver& q, const StringComplex& x) {
    if (x.is_zero()) return "0";
    std::ostringstream out;
    for (std::size_t k = 0; k < x.terms.size(); ++k) {
        const auto& t = x.terms[k];
        if (k > 0) {
            const auto& d = x.differentials[k - 1];
            out << " --[";
            for (std::size_t r = 0; r < d.entries.size(); ++r) {
                if (r > 0) out << "; ";
                for (std::size_t c = 0; c < d.entries[r].size(); ++c) {
                    if (c > 0) out << ", ";
                    const auto& e = d.entries[r][c];
                    out << (e ? "p_{" + render(q, *e) + "}" : std::string("0"));
                }
            }
            out << "]--> ";
        }
        out << "(" << t.degree << ": ";
        for (std::size_t s = 0; s < t.summands.size(); ++s) {
            if (s > 0) out << " + ";
            out << "P_" << q.vertex_label(t.summands[s].vertex);
        }
        out << ")";
    }
    return out.str();
}

BandComplexDescriptor make_band_descriptor(const Quiver& q, int m, const HString& band,
                                           std::string lambda, int n) {
    if (n < 1) fail(ErrorKind::IndexOutOfRange, "Jordan block size must be at least 1");
    auto canon = canonical_band(q, band);
    if (!canon) fail(ErrorKind::NotAString, render(q, band) + " is not a homotopy band");
    return BandComplexDescriptor{m, *canon, std::move(lambda), n};
}

BandARTriangle band_ar_triangle(const BandComplexDescriptor& d) {
    ensure(d.jordan_size >= 1, "Jordan block size below 1");
    BandARTriangle tri{d, {}, d};
    if (d.jordan_size > 1) {
        tri.middle.push_back(d);
        tri.middle.back().jordan_size = d.jordan_size - 1;
    }
    tri.middle.push_back(d);
    tri.middle.back().jordan_size = d.jordan_size + 1;
    return tri;
}

std::string render(const Quiver& q, const BandComplexDescriptor& d) {
    return "Y(" + render(q, d.band) + "; V_" + std::to_string(d.jordan_size) + "(" + d.lambda + "))[" +
           std::to_string(d.base_degree) + "]";
}

}  // namespace gentle
