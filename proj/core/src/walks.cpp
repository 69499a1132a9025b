#include "gentle/walks.hpp"

#include "gentle/error.hpp"

namespace gentle {

std::string_view to_string(WalkKind k) {
    switch (k) {
        case WalkKind::CwR: return "cw_r";
        case WalkKind::CcwR: return "ccw_r";
        case WalkKind::CwS: return "cw_s";
        case WalkKind::CcwS: return "ccw_s";
    }
    return "?";
}

WalkKind parse_walk_kind(const std::string& text) {
    for (WalkKind k : {WalkKind::CwR, WalkKind::CcwR, WalkKind::CwS, WalkKind::CcwS})
        if (text == to_string(k)) return k;
    fail(ErrorKind::SyntaxError, "unknown walk kind '" + text + "' (expected cw_r, ccw_r, cw_s, ccw_s)");
}

bool is_r_kind(WalkKind k) {
    return k == WalkKind::CwR || k == WalkKind::CcwR;
}

VertexClass mirror(const VertexClass& c) {
    switch (c.type) {
        case VertexType::A: return {VertexType::APrime, c.index};
        case VertexType::APrime: return {VertexType::A, c.index};
        case VertexType::B: return {VertexType::BPrime, c.index};
        case VertexType::BPrime: return {VertexType::B, c.index};
        case VertexType::D: return {VertexType::DPrime, c.index};
        case VertexType::DPrime: return {VertexType::D, c.index};
        default: return c;
    }
}

ArrowName mirror(const ArrowName& n) {
    switch (n.family) {
        case ArrowFamily::Alpha: return {ArrowFamily::Beta, n.index};
        case ArrowFamily::Beta: return {ArrowFamily::Alpha, n.index};
        case ArrowFamily::Gamma: return {ArrowFamily::Delta, n.index};
        case ArrowFamily::Delta: return {ArrowFamily::Gamma, n.index};
    }
    return n;
}

namespace {

struct Sym {
    ArrowFamily family;
    int index;
    bool inverse;
};

HString written(const Quiver& q, std::initializer_list<std::vector<Sym>> groups) {
    std::vector<Letter> ls;
    for (const auto& g : groups)
        for (const auto& s : g) {
            const int id = q.arrow_id(s.family, s.index);
            ensure(id >= 0, "walk case list refers to a missing arrow");
            ls.push_back(Letter{id, s.inverse});
        }
    return make_word_written(q, ls);
}

Sym al(int i, bool inv = false) { return {ArrowFamily::Alpha, i, inv}; }
Sym be(int j, bool inv = false) { return {ArrowFamily::Beta, j, inv}; }
Sym ga(int k, bool inv = false) { return {ArrowFamily::Gamma, k, inv}; }

// beta_s ... beta_1 (direct) or beta_1^-1 ... beta_s^-1 (inverse), written order.
std::vector<Sym> beta_path(int s, bool inv) {
    std::vector<Sym> out;
    if (!inv)
        for (int j = s; j >= 1; --j) out.push_back(be(j));
    else
        for (int j = 1; j <= s; ++j) out.push_back(be(j, true));
    return out;
}

}  // namespace

std::optional<HString> cw_r_case(const Quiver& q, int x) {
    const auto& p = q.params();
    const int r = p.r();
    const int s = p.s();
    const VertexClass c = q.vertex(x).cls;
    if (c.type == VertexType::A) {
        const int i = c.index;
        if (i > 1) return written(q, {{ga(2 * i - 2), ga(2 * i - 1)}});
        if (p.r1 == 0) return written(q, {{ga(2 * p.r2)}, beta_path(s, false), {ga(1)}});
        return written(q, {{al(r, true)}, beta_path(s, false), {ga(1)}});
    }
    if (c.type == VertexType::D) {
        const int i = c.index;
        if (i > 0) return written(q, {{al(p.r2 + i, true)}});
        if (p.r2 == 0) return written(q, {{al(r, true)}, beta_path(s, false)});
        return written(q, {{ga(2 * p.r2)}});
    }
    return std::nullopt;
}

std::optional<HString> ccw_r_case(const Quiver& q, int x) {
    const auto& p = q.params();
    const int s = p.s();
    const VertexClass c = q.vertex(x).cls;
    if (c.type == VertexType::A) {
        const int i = c.index;
        if (i < p.r2) return written(q, {{ga(2 * i + 1, true), ga(2 * i, true)}});
        if (p.r1 == 0) return written(q, {{ga(1, true)}, beta_path(s, true), {ga(2 * p.r2, true)}});
        return written(q, {{al(p.r2 + 1), ga(2 * p.r2, true)}});
    }
    if (c.type == VertexType::C) {
        if (p.r2 == 0) return written(q, {{al(1)}, beta_path(s, true)});
        return written(q, {{ga(1, true)}, beta_path(s, true)});
    }
    if (c.type == VertexType::D && c.index >= 1 && c.index <= p.r1 - 1)
        return written(q, {{al(p.r2 + c.index + 1)}});
    return std::nullopt;
}

namespace {

std::size_t slot(WalkKind k) {
    return static_cast<std::size_t>(k);
}

HString map_letters(const Quiver& from, const Quiver& to, const HString& w) {
    std::vector<Letter> ls;
    for (const auto& l : w.letters()) {
        const int id = to.arrow_id(mirror(from.arrow(l.arrow).name).family,
                                   mirror(from.arrow(l.arrow).name).index);
        ensure(id >= 0, "mirror arrow missing");
        ls.push_back(Letter{id, l.inverse});
    }
    return HString::word(std::move(ls));
}

}  // namespace

Walks::Walks(Quiver q) : q_(std::make_shared<const Quiver>(std::move(q))) {
    const Quiver& Q = *q_;
    const Quiver M = build_quiver_any(mirror(Q.params()));
    const auto n = static_cast<std::size_t>(Q.vertex_count());
    for (auto& v : steps_) v.assign(n, std::nullopt);
    for (auto& v : on_walk_) v.assign(n, 0);
    for (auto& v : period_steps_) v.assign(n, std::nullopt);

    for (int x = 0; x < Q.vertex_count(); ++x) {
        const auto ux = static_cast<std::size_t>(x);
        steps_[slot(WalkKind::CwR)][ux] = cw_r_case(Q, x);
        steps_[slot(WalkKind::CcwR)][ux] = ccw_r_case(Q, x);
        const int mx = M.vertex_id(mirror(Q.vertex(x).cls));
        ensure(mx >= 0, "mirror vertex missing");
        if (auto w = cw_r_case(M, mx)) steps_[slot(WalkKind::CcwS)][ux] = map_letters(M, Q, *w);
        if (auto w = ccw_r_case(M, mx)) steps_[slot(WalkKind::CwS)][ux] = map_letters(M, Q, *w);
    }
    for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t x = 0; x < n; ++x) {
            on_walk_[k][x] = steps_[k][x].has_value() ? 1 : 0;
            if (steps_[k][x]) ensure(is_valid(Q, *steps_[k][x]), "walk step is not a homotopy string");
        }

    // Prefixes: the shortest left part, starting at x, of an on-walk step.
    for (std::size_t k = 0; k < 4; ++k) {
        for (std::size_t x = 0; x < n; ++x) {
            if (on_walk_[k][x]) continue;
            std::vector<HString> best;
            for (std::size_t y = 0; y < n; ++y) {
                if (!on_walk_[k][y]) continue;
                const auto& ls = steps_[k][y]->letters();
                for (std::size_t cut = 1; cut < ls.size(); ++cut) {
                    if (letter_target(Q, ls[cut - 1]) != static_cast<int>(x)) continue;
                    HString cand = HString::word(std::vector<Letter>(ls.begin() + static_cast<long>(cut), ls.end()));
                    if (best.empty() || cand.length() < best.front().length()) {
                        best.assign(1, cand);
                    } else if (cand.length() == best.front().length()) {
                        best.push_back(cand);
                    }
                }
            }
            for (const auto& b : best) ensure(b == best.front(), "walk prefix is not unique");
            if (!best.empty()) steps_[k][x] = best.front();
        }
    }

    for (WalkKind k : {WalkKind::CwR, WalkKind::CcwR, WalkKind::CwS, WalkKind::CcwS}) {
        for (int x = 0; x < Q.vertex_count(); ++x) {
            int cur = x;
            std::optional<HString> last;
            for (int i = 0; i < period(k); ++i) {
                const auto& st = steps_[slot(k)][static_cast<std::size_t>(cur)];
                if (!st) {
                    last.reset();
                    break;
                }
                last = st;
                cur = target(Q, *st);
            }
            period_steps_[slot(k)][static_cast<std::size_t>(x)] = last;
        }
    }
}

bool Walks::on_walk(int x, WalkKind k) const {
    return on_walk_[slot(k)].at(static_cast<std::size_t>(x)) != 0;
}

std::optional<HString> Walks::try_step(int x, WalkKind k) const {
    return steps_[slot(k)].at(static_cast<std::size_t>(x));
}

const HString& Walks::step(int x, WalkKind k) const {
    const auto& st = steps_[slot(k)].at(static_cast<std::size_t>(x));
    if (!st)
        fail(ErrorKind::NoWalkStep, "no " + std::string(to_string(k)) + " step passes through " +
                                        q_->vertex_label(x));
    return *st;
}

std::vector<HString> Walks::walk(int x, WalkKind k, int n) const {
    if (n < 1) fail(ErrorKind::IndexOutOfRange, "a walk needs at least one step");
    std::vector<HString> out;
    int cur = x;
    for (int i = 0; i < n; ++i) {
        out.push_back(step(cur, k));
        cur = target(*q_, out.back());
    }
    return out;
}

int Walks::period(WalkKind k) const {
    return is_r_kind(k) ? q_->params().r() : q_->params().s();
}

const HString& Walks::period_step(int x, WalkKind k) const {
    const auto& st = period_steps_[slot(k)].at(static_cast<std::size_t>(x));
    if (!st)
        fail(ErrorKind::NoWalkStep, "no " + std::string(to_string(k)) + " walk starts in " +
                                        q_->vertex_label(x));
    return *st;
}

bool has_reduction_property(const Walks& w, const HString& omega, WalkKind k) {
    if (!omega.is_word()) return false;
    const int t = target(w.quiver(), omega);
    if (!w.on_walk(t, k)) return false;
    return omega.last() == w.period_step(t, k).last();
}

std::optional<HString> reduce(const Walks& w, const HString& omega, WalkKind k) {
    if (!has_reduction_property(w, omega, k)) return std::nullopt;
    const auto& a = omega.letters();
    const auto& b = w.period_step(target(w.quiver(), omega), k).letters();
    std::size_t common = 0;
    while (common < a.size() && common < b.size() && a[a.size() - 1 - common] == b[b.size() - 1 - common])
        ++common;
    ensure(common >= 1, "reduction strips nothing");
    if (common == a.size()) return right_unit(w.quiver(), omega);
    return HString::word(std::vector<Letter>(a.begin(), a.end() - static_cast<long>(common)));
}

std::optional<AdmissibleReduction> left_admissible_reduction(const Walks& w, const HString& omega) {
    if (!omega.is_word()) return std::nullopt;
    const Quiver& q = w.quiver();
    if (omega.length() == 1 && (q.is_r_arrow(omega.first().arrow) || q.is_s_arrow(omega.first().arrow)))
        return std::nullopt;
    std::optional<AdmissibleReduction> found;
    for (WalkKind k : {WalkKind::CwR, WalkKind::CcwS, WalkKind::CcwR, WalkKind::CwS}) {
        if (!has_reduction_property(w, omega, k)) continue;
        ensure(!found, "string satisfies two reduction properties: " + render(q, omega));
        found = AdmissibleReduction{k, *reduce(w, omega, k)};
    }
    return found;
}

std::optional<AdmissibleReduction> right_admissible_reduction(const Walks& w, const HString& omega) {
    auto left = left_admissible_reduction(w, inverse(omega));
    if (!left) return std::nullopt;
    left->result = inverse(left->result);
    return left;
}

bool in_central_first_set(const Quiver& q, const Letter& l) {
    const auto& n = q.arrow(l.arrow).name;
    const auto& p = q.params();
    switch (n.family) {
        case ArrowFamily::Alpha: return n.index <= p.r2;
        case ArrowFamily::Beta: return n.index <= p.s2;
        case ArrowFamily::Gamma:
        case ArrowFamily::Delta: return (n.index % 2 == 0) != l.inverse;
    }
    return false;
}

bool in_central_last_set(const Quiver& q, const Letter& l) {
    const auto& n = q.arrow(l.arrow).name;
    const auto& p = q.params();
    switch (n.family) {
        case ArrowFamily::Alpha: return n.index <= p.r2;
        case ArrowFamily::Beta: return n.index <= p.s2;
        case ArrowFamily::Gamma:
        case ArrowFamily::Delta: return (n.index % 2 == 1) != l.inverse;
    }
    return false;
}

bool is_central(const Quiver& q, const HString& omega) {
    if (omega.is_empty()) return false;
    if (omega.is_trivial()) {
        switch (q.vertex(omega.vertex()).cls.type) {
            case VertexType::B:
            case VertexType::BPrime:
            case VertexType::F:
            case VertexType::FPrime: return true;
            default: return false;
        }
    }
    return in_central_first_set(q, omega.first()) && in_central_last_set(q, omega.last());
}

std::string_view to_string(BaseType t) {
    switch (t) {
        case BaseType::EdgeSeed: return "edge-seed";
        case BaseType::Central: return "central";
        case BaseType::StalkCDD: return "stalk-CDD'";
    }
    return "?";
}

std::optional<BaseType> base_type(const Quiver& q, const HString& omega) {
    if (omega.is_empty()) return std::nullopt;
    if (omega.is_trivial()) {
        switch (q.vertex(omega.vertex()).cls.type) {
            case VertexType::A:
            case VertexType::APrime: return BaseType::EdgeSeed;
            case VertexType::C:
            case VertexType::D:
            case VertexType::DPrime: return BaseType::StalkCDD;
            default: return BaseType::Central;
        }
    }
    if (omega.length() == 1 && (q.is_r_arrow(omega.first().arrow) || q.is_s_arrow(omega.first().arrow)))
        return BaseType::EdgeSeed;
    if (is_central(q, omega)) return BaseType::Central;
    return std::nullopt;
}

ReductionTrace reduce_to_base(const Walks& w, const HString& omega) {
    if (omega.is_empty()) fail(ErrorKind::EmptyString, "cannot reduce the empty string");
    const Quiver& q = w.quiver();
    ReductionTrace trace;
    HString cur = omega;
    while (true) {
        if (auto t = base_type(q, cur)) {
            trace.base = cur;
            trace.type = *t;
            return trace;
        }
        // Orient so that the leftmost letter lies outside the central last set.
        const bool inverted = in_central_last_set(q, cur.last());
        const HString hat = inverted ? inverse(cur) : cur;
        auto red = left_admissible_reduction(w, hat);
        ensure(red.has_value(), "no admissible reduction for non-base string " + render(q, cur));
        ensure(red->result.length() < cur.length(), "admissible reduction did not shorten " + render(q, cur));
        trace.steps.push_back(ReductionStep{cur, inverted, red->kind, red->result});
        cur = red->result;
    }
}

}  // namespace gentle
