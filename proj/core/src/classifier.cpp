#include "gentle/classifier.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "gentle/complex.hpp"
#include "gentle/error.hpp"

namespace gentle {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

bool same_object(const Quiver& q, const Shifted& a, const Shifted& b) {
    return iso_normalize(q, a.degree, a.string) == iso_normalize(q, b.degree, b.string);
}

// A single direct letter is shown as its inverse one degree up.
Shifted edge_form(const Quiver& q, Shifted s) {
    if (s.string.is_word() && s.string.length() == 1 && !s.string.first().inverse)
        return {s.degree + degree(q, s.string), inverse(s.string)};
    return s;
}

bool same_string_up_to_sign(const HString& a, const HString& b) {
    if (a.is_trivial() && b.is_trivial()) return a.vertex() == b.vertex();
    return a == b;
}

int m_prime(const Walks& w, const HString& omega) {
    const PlusValue v = omega_plus(w, omega);
    ensure(v.m_prime.has_value(), "m' undefined for " + render(w.quiver(), omega));
    return *v.m_prime;
}

ComponentId from_base(const Walks& w, int d, const HString& base, BaseType type) {
    const Quiver& q = w.quiver();
    const Parameters& p = q.params();
    switch (type) {
        case BaseType::StalkCDD: return {ComponentKind::Special, d, {}, {}};
        case BaseType::Central: {
            auto [shift, s] = iso_normalize(q, d, base);
            return {ComponentKind::Central, shift, s, {}};
        }
        case BaseType::EdgeSeed: break;
    }
    if (base.is_trivial()) {
        const VertexClass c = q.vertex(base.vertex()).cls;
        if (c.type == VertexType::A) return {ComponentKind::R, mod(c.index - d, p.r2), {}, {}};
        ensure(c.type == VertexType::APrime && p.s2 > 0, "unexpected stalk edge seed");
        return {ComponentKind::S, mod(c.index - d, p.s2), {}, {}};
    }
    const Shifted inv = edge_form(q, {d, base});
    const int a = inv.string.first().arrow;
    if (q.is_r_arrow(a)) return {ComponentKind::R, mod(1 - inv.degree, p.r2), {}, {}};
    ensure(q.is_s_arrow(a), "unexpected arrow edge seed " + render(q, base));
    if (p.s2 == 0) return {ComponentKind::STube, inv.degree, {}, {}};
    return {ComponentKind::S, mod(1 - inv.degree, p.s2), {}, {}};
}

}  // namespace

std::string_view to_string(ComponentKind k) {
    switch (k) {
        case ComponentKind::R: return "R";
        case ComponentKind::S: return "S";
        case ComponentKind::STube: return "STube";
        case ComponentKind::Special: return "Special";
        case ComponentKind::Central: return "Central";
        case ComponentKind::Tube: return "Tube";
    }
    return "?";
}

std::string render(const Quiver& q, const ComponentId& id) {
    std::string out = std::string(to_string(id.kind)) + "(" + std::to_string(id.value);
    if (id.kind == ComponentKind::Central || id.kind == ComponentKind::Tube) out += ", " + render(q, id.string);
    if (id.kind == ComponentKind::Tube) out += ", " + id.lambda;
    return out + ")";
}

ComponentId parse_component_id(const Quiver& q, const std::string& text) {
    static const std::regex shape(R"(^\s*([A-Za-z]+)\s*\(\s*(-?\d+)\s*(?:,([^,]*))?(?:,([^,]*))?\)\s*$)");
    std::smatch mt;
    if (!std::regex_match(text, mt, shape)) fail(ErrorKind::SyntaxError, "malformed component id '" + text + "'");
    const std::string name = mt[1];
    ComponentId id;
    id.value = std::stoi(mt[2]);
    const bool has_string = mt[3].matched;
    const bool has_lambda = mt[4].matched;
    auto arity = [&](bool s, bool l) {
        if (has_string != s || has_lambda != l)
            fail(ErrorKind::SyntaxError, "wrong number of arguments in '" + text + "'");
    };
    const Parameters& p = q.params();
    if (name == "R" || name == "S") {
        arity(false, false);
        id.kind = name == "R" ? ComponentKind::R : ComponentKind::S;
        const int n = name == "R" ? p.r2 : p.s2;
        if (id.value < 0 || id.value >= n)
            fail(ErrorKind::NoSuchComponent, "no " + name + "-component with residue " + std::to_string(id.value));
    } else if (name == "STube") {
        arity(false, false);
        if (p.s2 != 0) fail(ErrorKind::NoSuchComponent, "s-tubes exist only when s2 = 0");
        id.kind = ComponentKind::STube;
    } else if (name == "Special") {
        arity(false, false);
        if (p.r1 + p.s1 == 0) fail(ErrorKind::NoSuchComponent, "no special component when r1 = s1 = 0");
        id.kind = ComponentKind::Special;
    } else if (name == "Central") {
        arity(true, false);
        const HString s = parse(q, mt[3]);
        if (!is_central(q, s)) fail(ErrorKind::NoSuchComponent, render(q, s) + " is not a central string");
        auto [shift, norm] = iso_normalize(q, id.value, s);
        return {ComponentKind::Central, shift, norm, {}};
    } else if (name == "Tube") {
        arity(true, true);
        std::string lambda = mt[4];
        lambda.erase(0, lambda.find_first_not_of(' '));
        lambda.erase(lambda.find_last_not_of(' ') + 1);
        if (lambda.empty()) fail(ErrorKind::SyntaxError, "empty eigenvalue label");
        return classify_band(q, id.value, parse(q, mt[3]), lambda);
    } else {
        fail(ErrorKind::SyntaxError, "unknown component kind '" + name + "'");
    }
    return id;
}

ComponentId classify(const Walks& w, int m, const HString& omega) {
    if (omega.is_empty()) fail(ErrorKind::EmptyString, "the zero complex lies in no component");
    const Quiver& q = w.quiver();
    const ReductionTrace trace = reduce_to_base(w, omega);
    int d = m;
    for (const ReductionStep& st : trace.steps) {
        HString x = st.before;
        if (st.inverted) {
            d += degree(q, x);
            x = inverse(x);
        }
        // Left reductions along cw_r / ccw_s land on omega_-, the others on omega^+.
        if (st.kind == WalkKind::CwR || st.kind == WalkKind::CcwS) {
            ensure(omega_minus_lower(w, x) == st.after, "reduction of " + render(q, x) + " is not omega_-");
            d -= m_prime(w, st.after);
        } else {
            const PlusValue up = omega_plus(w, x);
            ensure(up.string == st.after, "reduction of " + render(q, x) + " is not omega^+");
            d += *up.m_prime;
        }
    }
    return from_base(w, d, trace.base, trace.type);
}

ComponentId classify_band(const Quiver& q, int m, const HString& band, const std::string& lambda) {
    if (!is_band(q, band)) fail(ErrorKind::NotAString, render(q, band) + " is not a homotopy band");
    std::optional<ComponentId> best;
    std::string best_text;
    for (const bool inverted : {false, true}) {
        const HString base = inverted ? inverse(band) : band;
        const auto parts = homotopy_partition(q, base);
        const std::size_t n = parts.size();
        int shift = m;
        for (std::size_t t = 0; t < n; ++t) {
            if (t > 0) shift += degree(q, parts[t - 1]);
            // Moves the t leftmost homotopy letters to the right end.
            std::vector<Letter> traversal;
            for (std::size_t k = t; k-- > 0;) traversal.insert(traversal.end(), parts[k].letters().begin(), parts[k].letters().end());
            for (std::size_t k = n; k-- > t;) traversal.insert(traversal.end(), parts[k].letters().begin(), parts[k].letters().end());
            HString rot = HString::word(std::move(traversal));
            if (!is_band(q, rot)) continue;
            std::string text = render_canonical(q, rot);
            if (!best || text < best_text) {
                best = ComponentId{ComponentKind::Tube, shift, rot, inverted ? lambda + "^-1" : lambda};
                best_text = std::move(text);
            }
        }
    }
    ensure(best.has_value(), "band without band rotations");
    return *best;
}

EdgeCycle edge(const Walks& w, const ComponentId& id) {
    const Quiver& q = w.quiver();
    const Parameters& p = q.params();
    Shifted seed;
    switch (id.kind) {
        case ComponentKind::R:
            if (id.value < 0 || id.value >= p.r2) fail(ErrorKind::NoSuchComponent, "residue out of range");
            seed = {-id.value, HString::trivial(q.vertex_id({VertexType::A, p.r2}), 1)};
            break;
        case ComponentKind::S:
            if (p.s2 == 0 || id.value < 0 || id.value >= p.s2)
                fail(ErrorKind::NoSuchComponent, "residue out of range");
            seed = {-id.value, HString::trivial(q.vertex_id({VertexType::APrime, p.s2}), 1)};
            break;
        case ComponentKind::STube:
            if (p.s2 != 0) fail(ErrorKind::NoSuchComponent, "s-tubes exist only when s2 = 0");
            seed = {id.value, HString::word({Letter{q.beta(p.s()), true}})};
            break;
        default:
            fail(ErrorKind::NotAnEdgeComponent, render(q, id) + " has no edge");
    }
    EdgeCycle out;
    out.id = id;
    out.members.push_back(seed);
    const int bound = p.r() + p.s() + 2;
    Shifted cur = seed;
    while (true) {
        cur = edge_form(q, tau_inverse(w, cur.degree, cur.string));
        if (same_string_up_to_sign(cur.string, seed.string)) break;
        out.members.push_back(cur);
        ensure(static_cast<int>(out.members.size()) <= bound, "edge of " + render(q, id) + " does not close");
    }
    out.closing = cur;
    out.period = static_cast<int>(out.members.size());
    out.degree_drop = seed.degree - cur.degree;
    return out;
}

std::string_view to_string(Shape s) {
    switch (s) {
        case Shape::HomogeneousTube: return "homogeneous tube";
        case Shape::Tube: return "tube";
        case Shape::ZAinf: return "ZA_inf";
        case Shape::ZAinfinf: return "ZA_inf^inf";
    }
    return "?";
}

std::vector<ComponentFamily> census(const Walks& w) {
    const Quiver& q = w.quiver();
    if (!q.normalized()) fail(ErrorKind::NotNormalized, "census needs a normalized quiver");
    const Parameters& p = q.params();
    std::vector<ComponentFamily> out;

    ComponentFamily tubes;
    tubes.name = "homogeneous tubes";
    tubes.shape = Shape::HomogeneousTube;
    tubes.count = 1;
    tubes.parametrization = "bands x k* x Z";
    tubes.tube_rank = 1;
    {
        const BandARTriangle tri = band_ar_triangle(make_band_descriptor(q, 0, central_band(q), "1", 1));
        tubes.verified = tri.middle.size() == 1 && tri.end == tri.start;
    }
    out.push_back(std::move(tubes));

    ComponentFamily r;
    r.name = "r-components";
    r.shape = Shape::ZAinf;
    r.count = p.r2;
    r.parametrization = "none";
    r.tau_power = p.r();
    r.tau_shift = p.r2;
    for (int k = 0; k < p.r2; ++k) {
        r.edges.push_back(edge(w, {ComponentKind::R, k, {}, {}}));
        r.verified = r.verified && r.edges.back().period == p.r() && r.edges.back().degree_drop == p.r2;
    }
    out.push_back(std::move(r));

    ComponentFamily s;
    if (p.s2 > 0) {
        s.name = "s-components";
        s.shape = Shape::ZAinf;
        s.count = p.s2;
        s.parametrization = "none";
        s.tau_power = p.s();
        s.tau_shift = p.s2;
        for (int k = 0; k < p.s2; ++k) {
            s.edges.push_back(edge(w, {ComponentKind::S, k, {}, {}}));
            s.verified = s.verified && s.edges.back().period == p.s() && s.edges.back().degree_drop == p.s2;
        }
    } else {
        s.name = "s-tubes";
        s.shape = Shape::Tube;
        s.count = 1;
        s.parametrization = "Z";
        s.tube_rank = p.s1;
        s.edges.push_back(edge(w, {ComponentKind::STube, 0, {}, {}}));
        s.verified = s.edges.back().period == p.s1 && s.edges.back().degree_drop == 0;
    }
    out.push_back(std::move(s));

    if (p.r1 + p.s1 > 0) {
        ComponentFamily sp;
        sp.name = "special component";
        sp.shape = Shape::ZAinfinf;
        sp.count = 1;
        sp.parametrization = "Z";
        const SpecialChains ch = special_component_maps(w, 0);
        for (const auto* chain : {&ch.lower, &ch.upper})
            for (const Shifted& x : *chain)
                sp.verified = sp.verified && classify(w, x.degree, x.string) == ComponentId{ComponentKind::Special, 0, {}, {}};
        out.push_back(std::move(sp));
    }

    ComponentFamily c;
    c.name = "central components";
    c.shape = Shape::ZAinfinf;
    c.count = 1;
    c.parametrization = "central strings x Z";
    out.push_back(std::move(c));
    return out;
}

Fragment fragment(const Walks& w, int m, const HString& omega, int rows, int cols) {
    if (omega.is_empty()) fail(ErrorKind::EmptyString, "fragment of the zero complex");
    if (rows < 1 || cols < 1) fail(ErrorKind::IndexOutOfRange, "fragment needs at least one row and column");
    const Quiver& q = w.quiver();
    Fragment f;
    f.rows = rows;
    f.cols = cols;
    f.cells.assign(static_cast<std::size_t>(rows), std::vector<std::optional<Shifted>>(static_cast<std::size_t>(cols)));
    auto cell = [&](int r, int c) -> std::optional<Shifted>& {
        return f.cells[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    };

    cell(0, 0) = Shifted{m, omega};
    for (int c = 2; c < cols; c += 2) {
        const Shifted& prev = *cell(0, c - 2);
        cell(0, c) = edge_form(q, tau_inverse(w, prev.degree, prev.string));
    }
    for (int r = 1; r < rows; ++r) {
        for (int c = 1; c < cols; ++c) {
            if ((r + c) % 2 != 0 || !cell(r - 1, c - 1)) continue;
            const Shifted& below = *cell(r - 1, c - 1);
            const PlusValue up = omega_plus(w, below.string);
            if (!up.string.is_empty()) cell(r, c) = edge_form(q, {below.degree + *up.m_prime, up.string});
        }
        if (r % 2 == 0 && cols > 2 && cell(r, 2))
            cell(r, 0) = edge_form(q, tau(w, cell(r, 2)->degree, cell(r, 2)->string));
    }

    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c + 2 < cols; ++c) {
            if (!cell(r, c) || !cell(r, c + 2)) continue;
            const Shifted& x = *cell(r, c);
            const std::string where = "mesh at (" + std::to_string(r) + "," + std::to_string(c) + ") " + render(q, x);
            ARTriangle tri;
            try {
                tri = ar_triangle_starting(w, x.degree, x.string);
            } catch (const Error& e) {
                f.violations.push_back(where + ": " + e.what());
                continue;
            }
            if (!same_object(q, tri.end, *cell(r, c + 2)))
                f.violations.push_back(where + ": tau^-1 is " + render(q, tri.end));
            for (int dr : {1, -1}) {
                const int rr = r + dr;
                if (rr < 0 || rr >= rows || !cell(rr, c + 1)) continue;
                const bool present = std::any_of(tri.middle.begin(), tri.middle.end(),
                                                 [&](const Shifted& y) { return same_object(q, y, *cell(rr, c + 1)); });
                if (!present) f.violations.push_back(where + ": middle lacks " + render(q, *cell(rr, c + 1)));
            }
        }
    }
    return f;
}

std::string render(const Quiver& q, const Fragment& f) {
    std::ostringstream out;
    for (int r = f.rows - 1; r >= 0; --r) {
        out << "row " << r << ":";
        for (int c = 0; c < f.cols; ++c) {
            const auto& x = f.cells[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (x) out << "  (" << c << ") " << render(q, *x);
        }
        out << "\n";
    }
    return out.str();
}

std::string render_dot(const Quiver& q, const Fragment& f) {
    std::ostringstream out;
    out << "digraph fragment {\n  rankdir=LR;\n";
    auto node = [](int r, int c) { return "n" + std::to_string(r) + "_" + std::to_string(c); };
    auto at = [&](int r, int c) -> const std::optional<Shifted>& {
        return f.cells[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    };
    for (int c = 0; c < f.cols; ++c) {
        out << "  { rank=same;";
        for (int r = 0; r < f.rows; ++r)
            if (at(r, c)) out << " " << node(r, c) << ";";
        out << " }\n";
    }
    for (int r = 0; r < f.rows; ++r)
        for (int c = 0; c < f.cols; ++c)
            if (at(r, c)) {
                std::string label = render(q, *at(r, c));
                std::string escaped;
                for (char ch : label) {
                    if (ch == '"' || ch == '\\') escaped += '\\';
                    escaped += ch;
                }
                out << "  " << node(r, c) << " [label=\"" << escaped << "\"];\n";
            }
    for (int r = 0; r < f.rows; ++r)
        for (int c = 0; c + 1 < f.cols; ++c) {
            if (!at(r, c)) continue;
            for (int dr : {1, -1}) {
                const int rr = r + dr;
                if (rr >= 0 && rr < f.rows && at(rr, c + 1)) out << "  " << node(r, c) << " -> " << node(rr, c + 1) << ";\n";
            }
        }
    out << "}\n";
    return out.str();
}

SpecialChains special_component_maps(const Walks& w, int i) {
    const Quiver& q = w.quiver();
    const Parameters& p = q.params();
    if (p.r1 + p.s1 == 0) fail(ErrorKind::NoSuchComponent, "no special component when r1 = s1 = 0");
    const HString seed = HString::trivial(q.vertex_id({VertexType::C, 0}), -1);
    SpecialChains out;
    if (p.r1 > 0) {
        out.lower = diagonal(w, i, seed, Diagonal::LowerRight, p.r1 + 1);
        ensure(static_cast<int>(out.lower.size()) == p.r1 + 1, "lower chain of the special component is short");
    }
    if (p.s1 > 0) {
        out.upper = diagonal(w, i, seed, Diagonal::UpperRight, p.s1 + 1);
        ensure(static_cast<int>(out.upper.size()) == p.s1 + 1, "upper chain of the special component is short");
    }
    return out;
}

HString central_band(const Quiver& q) {
    const Parameters& p = q.params();
    std::vector<Letter> traversal;
    for (int i = 1; i <= p.r(); ++i) traversal.push_back(Letter{q.alpha(i), false});
    for (int j = p.s(); j >= 1; --j) traversal.push_back(Letter{q.beta(j), true});
    return make_word(q, traversal);
}

HString band_family_base(const Quiver& q) {
    if (!q.normalized()) fail(ErrorKind::NotNormalized, "band families need a normalized quiver");
    const Parameters& p = q.params();
    std::vector<Letter> written;
    auto push = [&](int arrow, bool inv) { written.push_back(Letter{arrow, inv}); };
    for (int j = 1; j <= p.s(); ++j) push(q.beta(j), true);
    // Both templates share this shape; the alpha_r ... alpha_2 run is empty when r = 1.
    for (int i = p.r(); i >= 2; --i) push(q.alpha(i), false);
    push(q.gamma(2), true);
    push(q.gamma(1), true);
    for (int i = 1; i <= p.r(); ++i) push(q.alpha(i), true);
    for (int j = p.s(); j >= 1; --j) push(q.beta(j), false);
    push(q.gamma(1), false);
    push(q.gamma(2), false);
    push(q.alpha(1), false);
    return make_word_written(q, written);
}

HString band_family(const Quiver& q, const HString& base, int n) {
    if (n < 0) fail(ErrorKind::IndexOutOfRange, "band family index must be non-negative");
    const HString c = central_band(q);
    HString out = base;
    for (int k = 0; k < n; ++k) out = concat(out, c);
    return out;
}

std::vector<HString> enumerate_bands(const Quiver& q, int max_len) {
    std::map<std::pair<int, std::string>, HString> found;
    enumerate_strings(q, max_len, [&](const HString& s) {
        if (!s.is_word() || source(q, s) != target(q, s)) return true;
        if (auto c = canonical_band(q, s)) found.emplace(std::pair{c->length(), render_canonical(q, *c)}, *c);
        return true;
    });
    std::vector<HString> out;
    out.reserve(found.size());
    for (auto& [key, band] : found) out.push_back(band);
    return out;
}

}  // namespace gentle
