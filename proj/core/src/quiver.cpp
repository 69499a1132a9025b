#include "gentle/quiver.hpp"

#include <algorithm>
#include <set>

#include "gentle/error.hpp"

namespace gentle {

std::string to_string(const Parameters& p) {
    return "(" + std::to_string(p.r1) + "," + std::to_string(p.r2) + "," + std::to_string(p.s1) +
           "," + std::to_string(p.s2) + ")";
}

Parameters mirror(const Parameters& p) {
    return Parameters{p.s1, p.s2, p.r1, p.r2};
}

Parameters normalize_parameters(const Parameters& p) {
    if (p.r1 < 0 || p.r2 < 0 || p.s1 < 0 || p.s2 < 0)
        fail(ErrorKind::InvalidSpec, "parameters must be non-negative: " + to_string(p));
    if (p.r() <= 0 || p.s() <= 0)
        fail(ErrorKind::InvalidSpec, "parameters need r > 0 and s > 0: " + to_string(p));
    if (p.r2 == 0 && p.s2 == 0)
        fail(ErrorKind::HereditaryCase, "r2 = s2 = 0 gives a hereditary algebra: " + to_string(p));
    return p.r2 > 0 ? p : mirror(p);
}

std::string_view type_name(VertexType t) {
    switch (t) {
        case VertexType::A: return "A";
        case VertexType::APrime: return "A'";
        case VertexType::B: return "B";
        case VertexType::BPrime: return "B'";
        case VertexType::C: return "C";
        case VertexType::Ctilde: return "C~";
        case VertexType::D: return "D";
        case VertexType::DPrime: return "D'";
        case VertexType::F: return "F";
        case VertexType::FPrime: return "F'";
    }
    return "?";
}

std::string canonical_name(const VertexClass& c) {
    std::string base(type_name(c.type));
    switch (c.type) {
        case VertexType::A:
        case VertexType::APrime:
        case VertexType::B:
        case VertexType::BPrime:
        case VertexType::D:
        case VertexType::DPrime:
            return base + std::to_string(c.index);
        default:
            return base;
    }
}

std::string canonical_name(const ArrowName& n) {
    switch (n.family) {
        case ArrowFamily::Alpha: return "alpha" + std::to_string(n.index);
        case ArrowFamily::Beta: return "beta" + std::to_string(n.index);
        case ArrowFamily::Gamma: return "gamma" + std::to_string(n.index);
        case ArrowFamily::Delta: return "delta" + std::to_string(n.index);
    }
    return "?";
}

Quiver::Quiver(Parameters params, std::vector<Vertex> vertices, std::vector<Arrow> arrows,
               std::vector<Relation> relations)
    : params_(params),
      vertices_(std::move(vertices)),
      arrows_(std::move(arrows)),
      relations_(std::move(relations)) {
    const auto n = vertices_.size();
    out_.assign(n, {});
    in_.assign(n, {});
    for (std::size_t v = 0; v < n; ++v) {
        ensure(vertices_[v].id == static_cast<int>(v), "vertex ids must be positional");
        vertex_lookup_.emplace(canonical_name(vertices_[v].cls), static_cast<int>(v));
    }
    for (std::size_t a = 0; a < arrows_.size(); ++a) {
        const Arrow& arr = arrows_[a];
        ensure(arr.id == static_cast<int>(a), "arrow ids must be positional");
        ensure(arr.source >= 0 && arr.source < static_cast<int>(n) && arr.target >= 0 &&
                   arr.target < static_cast<int>(n),
               "arrow endpoint out of range");
        out_[arr.source].push_back(arr.id);
        in_[arr.target].push_back(arr.id);
        by_name_[{static_cast<int>(arr.name.family), arr.name.index}] = arr.id;
        arrow_lookup_.emplace(canonical_name(arr.name), arr.id);
    }
    // user labels shadow canonical names; apply_labels rejects ambiguity
    for (const auto& v : vertices_)
        if (!v.label.empty()) vertex_lookup_[v.label] = v.id;
    for (const auto& a : arrows_)
        if (!a.label.empty()) arrow_lookup_[a.label] = a.id;
    rel_matrix_.assign(arrows_.size(), std::vector<char>(arrows_.size(), 0));
    for (const auto& r : relations_) rel_matrix_.at(r.beta).at(r.alpha) = 1;
}

bool Quiver::is_relation(int beta, int alpha) const {
    return rel_matrix_[beta][alpha] != 0;
}

int Quiver::arrow_id(ArrowFamily f, int index) const {
    auto it = by_name_.find({static_cast<int>(f), index});
    return it == by_name_.end() ? -1 : it->second;
}

int Quiver::vertex_id(const VertexClass& c) const {
    for (const auto& v : vertices_)
        if (v.cls == c) return v.id;
    return -1;
}

bool Quiver::is_r_arrow(int a) const {
    const auto& n = arrow(a).name;
    return n.family == ArrowFamily::Alpha && n.index > params_.r2;
}

bool Quiver::is_s_arrow(int a) const {
    const auto& n = arrow(a).name;
    return n.family == ArrowFamily::Beta && n.index > params_.s2;
}

bool Quiver::is_cycle_arrow(int a) const {
    return !is_r_arrow(a) && !is_s_arrow(a);
}

std::string Quiver::vertex_label(int v) const {
    const auto& vx = vertex(v);
    return vx.label.empty() ? canonical_name(vx.cls) : vx.label;
}

std::string Quiver::arrow_label(int a) const {
    const auto& ar = arrow(a);
    return ar.label.empty() ? canonical_name(ar.name) : ar.label;
}

std::optional<int> Quiver::find_vertex(const std::string& token) const {
    auto it = vertex_lookup_.find(token);
    if (it == vertex_lookup_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> Quiver::find_arrow(const std::string& token) const {
    auto it = arrow_lookup_.find(token);
    if (it == arrow_lookup_.end()) return std::nullopt;
    return it->second;
}

namespace {

VertexClass vc(VertexType t, int i = 0) {
    return VertexClass{t, i};
}

}  // namespace

Quiver build_quiver_any(const Parameters& p) {
    if (p.r1 < 0 || p.r2 < 0 || p.s1 < 0 || p.s2 < 0 || p.r() <= 0 || p.s() <= 0)
        fail(ErrorKind::InvalidSpec, "parameters need r > 0 and s > 0: " + to_string(p));
    if (p.r2 == 0 && p.s2 == 0)
        fail(ErrorKind::HereditaryCase, "r2 = s2 = 0 gives a hereditary algebra: " + to_string(p));

    const int r = p.r();
    const int s = p.s();
    std::vector<Vertex> vs;
    auto add = [&vs](VertexClass c) {
        const int id = static_cast<int>(vs.size());
        vs.push_back(Vertex{id, c, {}});
        return id;
    };

    VertexClass x0 = vc(VertexType::F);
    if (p.s2 == 0)
        x0 = vc(VertexType::DPrime, 0);
    else if (p.r2 == 0)
        x0 = vc(VertexType::D, 0);
    const VertexClass xend = (p.r1 == 0 && p.s1 == 0) ? vc(VertexType::FPrime) : vc(VertexType::C);
    auto p_class = [&](int i) {
        if (i == r) return xend;
        return i < p.r2 ? vc(VertexType::B, i) : vc(VertexType::D, i - p.r2);
    };
    auto q_class = [&](int j) {
        return j < p.s2 ? vc(VertexType::BPrime, j) : vc(VertexType::DPrime, j - p.s2);
    };

    // Layout: X0, then P1 A1 ... P_{r2} A_{r2}, the remaining alpha-path vertices,
    // the beta-path interior from the far end back, and finally A'_{s2} .. A'_1.
    std::vector<int> P(r + 1), Q(s + 1), A(p.r2 + 1), Ap(p.s2 + 1);
    P[0] = add(x0);
    for (int i = 1; i <= p.r2; ++i) {
        P[i] = add(p_class(i));
        A[i] = add(vc(VertexType::A, i));
    }
    for (int i = p.r2 + 1; i <= r; ++i) P[i] = add(p_class(i));
    Q[0] = P[0];
    Q[s] = P[r];
    for (int j = s - 1; j >= 1; --j) Q[j] = add(q_class(j));
    for (int j = p.s2; j >= 1; --j) Ap[j] = add(vc(VertexType::APrime, j));

    std::vector<Arrow> as;
    auto arrow = [&as](ArrowFamily f, int idx, int src, int tgt, int S, int T) {
        const int id = static_cast<int>(as.size());
        as.push_back(Arrow{id, ArrowName{f, idx}, {}, src, tgt, S, T});
        return id;
    };
    std::vector<int> alpha(r + 1), beta(s + 1);
    for (int i = 1; i <= r; ++i)
        alpha[i] = i == 1 ? arrow(ArrowFamily::Alpha, i, P[0], P[1], 1, 1)
                          : arrow(ArrowFamily::Alpha, i, P[i - 1], P[i], -1, 1);
    for (int j = 1; j <= s; ++j)
        beta[j] = j == s ? arrow(ArrowFamily::Beta, j, Q[j - 1], Q[j], -1, -1)
                         : arrow(ArrowFamily::Beta, j, Q[j - 1], Q[j], -1, 1);

    std::vector<Relation> rels;
    for (int i = 1; i <= p.r2; ++i) {
        const bool first = i == 1;
        const int g2 = arrow(ArrowFamily::Gamma, 2 * i, P[i], A[i], 1, 1);
        const int g1 = arrow(ArrowFamily::Gamma, 2 * i - 1, A[i], P[i - 1], 1, first ? 1 : -1);
        rels.push_back({g2, alpha[i]});
        rels.push_back({g1, g2});
        rels.push_back({alpha[i], g1});
    }
    // delta arrows get ids after all gammas so that families stay contiguous
    for (int j = 1; j <= p.s2; ++j) {
        const bool last = j == s;
        const int d2 = arrow(ArrowFamily::Delta, 2 * j, Q[j], Ap[j], last ? -1 : 1, 1);
        const int d1 = arrow(ArrowFamily::Delta, 2 * j - 1, Ap[j], Q[j - 1], 1, -1);
        rels.push_back({d2, beta[j]});
        rels.push_back({d1, d2});
        rels.push_back({beta[j], d1});
    }
    std::sort(rels.begin(), rels.end());
    return Quiver(p, std::move(vs), std::move(as), std::move(rels));
}

Quiver build_normal_form(const Parameters& p) {
    const Parameters n = normalize_parameters(p);
    if (!(n == p))
        fail(ErrorKind::NotNormalized,
             "parameters " + to_string(p) + " are not normalized; use " + to_string(n));
    return build_quiver_any(p);
}

GentleReport validate_gentle(const Quiver& q) {
    GentleReport rep;
    auto violate = [&rep](std::string msg) {
        rep.ok = false;
        rep.violations.push_back(std::move(msg));
    };
    const auto name = [&q](int a) { return q.arrow_canonical(a); };

    for (const auto& v : q.vertices()) {
        const auto& outs = q.out_arrows(v.id);
        const auto& ins = q.in_arrows(v.id);
        if (outs.size() > 2) violate("more than two arrows start at " + q.vertex_canonical(v.id));
        if (ins.size() > 2) violate("more than two arrows end at " + q.vertex_canonical(v.id));
        for (std::size_t i = 0; i < outs.size(); ++i)
            for (std::size_t j = i + 1; j < outs.size(); ++j)
                if (q.arrow(outs[i]).S != -q.arrow(outs[j]).S)
                    violate("(a) " + name(outs[i]) + " and " + name(outs[j]) + " share a source");
        for (std::size_t i = 0; i < ins.size(); ++i)
            for (std::size_t j = i + 1; j < ins.size(); ++j)
                if (q.arrow(ins[i]).T != -q.arrow(ins[j]).T)
                    violate("(b) " + name(ins[i]) + " and " + name(ins[j]) + " share a target");
    }

    for (const auto& rel : q.relations()) {
        if (q.arrow(rel.alpha).target != q.arrow(rel.beta).source)
            violate("relation " + name(rel.beta) + "*" + name(rel.alpha) + " is not a path");
    }

    for (const auto& b : q.arrows()) {
        int in_rel = 0;
        int not_rel = 0;
        int pre_rel = 0;
        int pre_not = 0;
        for (int a : q.out_arrows(b.target)) {
            if (q.is_relation(a, b.id))
                ++in_rel;
            else
                ++not_rel;
        }
        for (int a : q.in_arrows(b.source)) {
            if (q.is_relation(b.id, a))
                ++pre_rel;
            else
                ++pre_not;
        }
        if (in_rel > 1 || pre_rel > 1)
            violate("at most one arrow beta with a relation partner " + name(b.id));
        if (not_rel > 1 || pre_not > 1)
            violate("at most one arrow beta without a relation partner " + name(b.id));
        for (int a : q.out_arrows(b.target)) {
            const int Sa = q.arrow(a).S;
            if (q.is_relation(a, b.id)) {
                if (Sa != b.T) violate("(d) " + name(a) + "*" + name(b.id) + " is in I");
            } else if (Sa != -b.T) {
                violate("(c) " + name(a) + "*" + name(b.id) + " is not in I");
            }
        }
    }
    return rep;
}

namespace {

bool valid_label(const std::string& s) {
    if (s.empty() || s == "@" || s.back() == '-' || s.rfind("1_", 0) == 0) return false;
    return std::none_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isspace(c) || c == '[' || c == ']' || c == '"';
    });
}

}  // namespace

Quiver apply_labels(const Quiver& q, const Labels& labels) {
    std::vector<Vertex> vs = q.vertices();
    std::vector<Arrow> as = q.arrows();

    for (const auto& [canon, label] : labels.vertex_labels) {
        auto id = q.find_vertex(canon);
        if (!id || q.vertex_canonical(*id) != canon)
            fail(ErrorKind::UnknownEntity, "no vertex named " + canon);
        if (!valid_label(label)) fail(ErrorKind::InvalidSpec, "invalid vertex label '" + label + "'");
        vs[*id].label = label;
    }
    for (const auto& [canon, label] : labels.arrow_labels) {
        auto id = q.find_arrow(canon);
        if (!id || q.arrow_canonical(*id) != canon)
            fail(ErrorKind::UnknownEntity, "no arrow named " + canon);
        if (!valid_label(label)) fail(ErrorKind::InvalidSpec, "invalid arrow label '" + label + "'");
        as[*id].label = label;
    }

    // A token must resolve to exactly one entity of its kind.
    auto check = [](auto const& items, auto canon_of, const char* kind) {
        std::map<std::string, int> owner;
        for (const auto& it : items) owner.emplace(canon_of(it), it.id);
        std::set<std::string> seen;
        for (const auto& it : items) {
            if (it.label.empty()) continue;
            if (!seen.insert(it.label).second)
                fail(ErrorKind::DuplicateLabel, std::string(kind) + " label '" + it.label + "' used twice");
            auto o = owner.find(it.label);
            if (o != owner.end() && o->second != it.id)
                fail(ErrorKind::DuplicateLabel, std::string(kind) + " label '" + it.label +
                                                    "' collides with a canonical name");
        }
    };
    check(vs, [](const Vertex& v) { return canonical_name(v.cls); }, "vertex");
    check(as, [](const Arrow& a) { return canonical_name(a.name); }, "arrow");

    return Quiver(q.params(), std::move(vs), std::move(as), q.relations());
}

}  // namespace gentle
