#include <algorithm>
#include <thread>

#include "gentle/ar.hpp"
#include "gentle/complex.hpp"
#include "gentle/error.hpp"

namespace gentle {

std::string render(const Quiver& q, const Shifted& s) {
    return render(q, s.string) + "[" + std::to_string(s.degree) + "]";
}

namespace {

int m_prime_of(const Walks& w, const HString& omega) {
    PlusValue v = omega_plus(w, omega);
    ensure(v.m_prime.has_value(), "m' undefined for " + render(w.quiver(), omega));
    return *v.m_prime;
}

bool same_object(const Quiver& q, const Shifted& a, const Shifted& b) {
    return iso_normalize(q, a.degree, a.string) == iso_normalize(q, b.degree, b.string);
}

}  // namespace

ARTriangle ar_triangle_starting(const Walks& w, int m, const HString& omega) {
    if (omega.is_empty()) fail(ErrorKind::EmptyString, "no triangle starts in the zero complex");
    const Quiver& q = w.quiver();
    ARTriangle tri;
    tri.start = {m, omega};
    tri.connecting = {m - 1, omega};

    const PlusValue up = omega_plus(w, omega);
    const HString low = omega_plus_lower(w, omega);
    if (!up.string.is_empty()) tri.middle.push_back({m + *up.m_prime, up.string});
    if (!low.is_empty()) tri.middle.push_back({m, low});
    if (tri.middle.empty())
        fail(ErrorKind::BothEmpty, "omega^+ and omega_+ are both empty for " + render(q, omega));

    std::optional<Shifted> via_up;
    std::optional<Shifted> via_low;
    if (!up.string.is_empty()) {
        const HString e = omega_plus_lower(w, up.string);
        if (!e.is_empty()) via_up = Shifted{m + *up.m_prime, e};
    }
    if (!low.is_empty()) {
        const PlusValue e = omega_plus(w, low);
        if (!e.string.is_empty()) via_low = Shifted{m + *e.m_prime, e.string};
    }
    if (via_up && via_low)
        ensure(same_object(q, *via_up, *via_low),
               "mesh does not close at " + render(q, tri.start) + ": " + render(q, *via_up) + " vs " +
                   render(q, *via_low));
    ensure(via_up || via_low, "triangle starting in " + render(q, tri.start) + " has no end term");
    tri.end = via_up ? *via_up : *via_low;
    return tri;
}

ARTriangle ar_triangle_ending(const Walks& w, int m, const HString& omega) {
    if (omega.is_empty()) fail(ErrorKind::EmptyString, "no triangle ends in the zero complex");
    const Quiver& q = w.quiver();
    ARTriangle tri;
    tri.end = {m, omega};

    const HString low = omega_minus_lower(w, omega);
    const HString up = omega_minus_upper(w, omega);
    if (!low.is_empty()) tri.middle.push_back({m - m_prime_of(w, low), low});
    if (!up.is_empty()) tri.middle.push_back({m, up});
    if (tri.middle.empty())
        fail(ErrorKind::BothEmpty, "omega_- and omega^- are both empty for " + render(q, omega));

    std::optional<Shifted> via_up;
    std::optional<Shifted> via_low;
    if (!up.is_empty()) {
        const HString s = omega_minus_lower(w, up);
        if (!s.is_empty()) via_up = Shifted{m - m_prime_of(w, s), s};
    }
    if (!low.is_empty()) {
        const HString s = omega_minus_upper(w, low);
        if (!s.is_empty()) via_low = Shifted{m - m_prime_of(w, low), s};
    }
    if (via_up && via_low)
        ensure(same_object(q, *via_up, *via_low),
               "mesh does not close at " + render(q, tri.end) + ": " + render(q, *via_up) + " vs " +
                   render(q, *via_low));
    ensure(via_up || via_low, "triangle ending in " + render(q, tri.end) + " has no start term");
    tri.start = via_up ? *via_up : *via_low;
    tri.connecting = {tri.start.degree - 1, tri.start.string};
    return tri;
}

Shifted tau(const Walks& w, int m, const HString& omega) {
    return ar_triangle_ending(w, m, omega).start;
}

Shifted tau_inverse(const Walks& w, int m, const HString& omega) {
    return ar_triangle_starting(w, m, omega).end;
}

std::string_view to_string(Diagonal d) {
    switch (d) {
        case Diagonal::UpperRight: return "upper-right";
        case Diagonal::LowerRight: return "lower-right";
        case Diagonal::UpperLeft: return "upper-left";
        case Diagonal::LowerLeft: return "lower-left";
    }
    return "?";
}

Diagonal parse_diagonal(const std::string& text) {
    for (Diagonal d : {Diagonal::UpperRight, Diagonal::LowerRight, Diagonal::UpperLeft, Diagonal::LowerLeft})
        if (text == to_string(d)) return d;
    fail(ErrorKind::SyntaxError, "unknown diagonal '" + text + "'");
}

std::vector<Shifted> diagonal(const Walks& w, int m, const HString& omega, Diagonal d, int n) {
    if (omega.is_empty()) fail(ErrorKind::EmptyString, "diagonal of the empty string");
    std::vector<Shifted> out;
    Shifted cur{m, omega};
    while (static_cast<int>(out.size()) < n) {
        out.push_back(cur);
        if (static_cast<int>(out.size()) == n) break;
        switch (d) {
            case Diagonal::UpperRight: {
                PlusValue v = omega_plus(w, cur.string);
                if (v.string.is_empty()) return out;
                cur = {cur.degree + *v.m_prime, v.string};
                break;
            }
            case Diagonal::LowerRight: {
                HString v = omega_plus_lower(w, cur.string);
                if (v.is_empty()) return out;
                cur = {cur.degree, v};
                break;
            }
            case Diagonal::UpperLeft: {
                HString v = omega_minus_upper(w, cur.string);
                if (v.is_empty()) return out;
                cur = {cur.degree, v};
                break;
            }
            case Diagonal::LowerLeft: {
                HString v = omega_minus_lower(w, cur.string);
                if (v.is_empty()) return out;
                cur = {cur.degree - m_prime_of(w, v), v};
                break;
            }
        }
    }
    return out;
}

namespace {

std::string describe(const Quiver& q, const HString& s, const std::optional<int>& m) {
    return render(q, s) + " (m'=" + (m ? std::to_string(*m) : std::string("-")) + ")";
}

}  // namespace

CrosscheckReport crosscheck(const Walks& w, int max_len, bool effective, int threads) {
    const Quiver& q = w.quiver();
    CrosscheckReport rep;
    rep.params = q.params();
    rep.max_len = max_len;
    rep.effective = effective;

    const std::vector<HString> inputs = all_strings(q, max_len);
    rep.checked = static_cast<long long>(inputs.size());
    unsigned n = threads > 0 ? static_cast<unsigned>(threads) : std::max(1u, std::thread::hardware_concurrency());
    n = std::min<unsigned>(n, 16);
    const std::size_t chunk = (inputs.size() + n - 1) / n;
    std::vector<std::vector<CrosscheckLine>> parts(n);

    auto work = [&](unsigned t) {
        const std::size_t lo = t * chunk;
        const std::size_t hi = std::min(inputs.size(), lo + chunk);
        for (std::size_t i = lo; i < hi; ++i) {
            const HString& omega = inputs[i];
            const OracleResult o = bobinski_direct(q, omega);
            CrosscheckLine line;
            try {
                const PlusValue t_val = effective ? omega_plus(w, omega) : table_omega_plus(w, omega);
                line.row = t_val.row;
                line.table = describe(q, t_val.string, t_val.m_prime);
                line.string_mismatch = !(t_val.string == o.string);
                line.m_prime_mismatch = !line.string_mismatch && t_val.m_prime != o.m_prime;
            } catch (const Error& e) {
                line.table = std::string("error: ") + e.what();
                line.string_mismatch = true;
            }
            if (!line.string_mismatch && !line.m_prime_mismatch) continue;
            line.omega = render(q, omega);
            line.oracle = describe(q, o.string, o.m_prime) + " case " + std::to_string(o.case_no);
            if (!effective)
                if (auto e = plus_erratum(w, omega)) line.erratum = *e;
            parts[t].push_back(std::move(line));
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(work, t);
    work(0);
    for (auto& th : pool) th.join();

    for (auto& part : parts)
        for (auto& line : part) {
            if (line.string_mismatch) ++rep.string_mismatches;
            if (line.m_prime_mismatch) ++rep.m_prime_mismatches;
            if (line.erratum.empty()) ++rep.unexplained;
            rep.lines.push_back(std::move(line));
        }
    return rep;
}

}  // namespace gentle
