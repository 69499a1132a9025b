#include <string>

#include "gentle/ar.hpp"
#include "gentle/error.hpp"

namespace gentle {

namespace {

// step . omega as a path in the double quiver. For a trivial omega the table
// value is the step itself.
HString prepend(const Walks& w, WalkKind k, const HString& omega) {
    const Quiver& q = w.quiver();
    const HString& st = w.step(target(q, omega), k);
    if (omega.is_trivial()) return st;
    const HString out = concat(st, omega);
    ensure(is_valid(q, out), std::string(to_string(k)) + " step does not extend " + render(q, omega));
    return out;
}

HString reduction(const Walks& w, WalkKind k, const HString& omega) {
    auto out = reduce(w, omega, k);
    ensure(out.has_value(), std::string(to_string(k)) + " reduction undefined for " + render(w.quiver(), omega));
    return *out;
}

PlusValue plus(HString s, int m, std::string row) {
    return PlusValue{std::move(s), m, std::move(row)};
}

PlusValue none(std::string row) {
    return PlusValue{HString::empty(), std::nullopt, std::move(row)};
}

PlusValue table1(const Walks& w, const HString& omega) {
    const Quiver& q = w.quiver();
    const auto& p = q.params();
    const Letter a = omega.last();
    const ArrowName n = q.arrow(a.arrow).name;
    const int i = n.index;
    const int l = omega.length();

    switch (n.family) {
        case ArrowFamily::Alpha:
            if (!a.inverse) {
                if (i <= p.r2) return plus(prepend(w, WalkKind::CwR, omega), -1, "plus-word alpha_i, i<=r2");
                if (l == 1) return none("plus-word alpha_i, i>r2, l=1");
                return plus(reduction(w, WalkKind::CcwR, omega), 0, "plus-word alpha_i, i>r2, l>1");
            } else {
                int m = 0;
                if (i == 1)
                    m = phi(p.r1);
                else if (i <= p.r2 + 1)
                    m = -1;
                return plus(prepend(w, WalkKind::CwR, omega), m, "plus-word alpha_i^-1");
            }
        case ArrowFamily::Beta:
            if (!a.inverse) {
                if (i <= p.s2) return plus(prepend(w, WalkKind::CcwS, omega), -1, "plus-word beta_i, i<=s2");
                if (l == 1) return none("plus-word beta_i, i>s2, l=1");
                return plus(reduction(w, WalkKind::CwS, omega), 0, "plus-word beta_i, i>s2, l>1");
            } else {
                int m = 0;
                if (i == 1)
                    m = phi(p.s1);
                else if (i <= p.s2 + 1)
                    m = -1;
                return plus(prepend(w, WalkKind::CcwS, omega), m, "plus-word beta_i^-1");
            }
        case ArrowFamily::Gamma: {
            const bool even = i % 2 == 0;
            const int c = (i + 1) / 2;  // cycle index
            if (even && !a.inverse)
                return plus(prepend(w, WalkKind::CwR, omega), (c == 1 && p.r1 > 0) ? 0 : -1, "plus-word gamma_2i");
            if (!even && !a.inverse) {
                int m = 0;
                if (c > 1)
                    m = phi(p.s1);
                else if (p.s2 > 0)
                    m = phi(p.r1);
                return plus(prepend(w, WalkKind::CcwS, omega), m, "plus-word gamma_2i-1");
            }
            if (even) return plus(prepend(w, WalkKind::CcwS, omega), phi(p.s1), "plus-word gamma_2i^-1");
            return plus(reduction(w, WalkKind::CcwR, omega), -1, "plus-word gamma_2i-1^-1");
        }
        case ArrowFamily::Delta: {
            const bool even = i % 2 == 0;
            const int c = (i + 1) / 2;
            if (even && !a.inverse)
                return plus(prepend(w, WalkKind::CcwS, omega), (c == 1 && p.s1 > 0) ? 0 : -1, "plus-word delta_2i");
            if (!even && !a.inverse) {
                int m = 0;
                if (c > 1)
                    m = phi(p.r1);
                else if (p.r2 > 0)
                    m = phi(p.s1);
                return plus(prepend(w, WalkKind::CwR, omega), m, "plus-word delta_2i-1");
            }
            if (even) return plus(prepend(w, WalkKind::CwR, omega), phi(p.r1), "plus-word delta_2i^-1");
            return plus(reduction(w, WalkKind::CwS, omega), -1, "plus-word delta_2i-1^-1");
        }
    }
    fail(ErrorKind::InvariantBreach, "unhandled table row");
}

PlusValue table3(const Walks& w, const HString& omega) {
    const Quiver& q = w.quiver();
    const auto& p = q.params();
    const int x = omega.vertex();
    const bool pos = omega.sign() > 0;
    const VertexClass c = q.vertex(x).cls;
    auto step = [&](WalkKind k) { return prepend(w, k, omega); };
    auto unit = [&](VertexClass vc, int sign) {
        const int v = q.vertex_id(vc);
        ensure(v >= 0, "table refers to a missing vertex " + canonical_name(vc));
        return HString::trivial(v, sign);
    };

    switch (c.type) {
        case VertexType::A:
            if (pos) return plus(step(WalkKind::CwR), c.index == 1 ? phi(p.r1) : 0, "plus-trivial A");
            return none("plus-trivial A inverse");
        case VertexType::APrime:
            if (pos) return plus(step(WalkKind::CcwS), c.index == 1 ? phi(p.s1) : 0, "plus-trivial A'");
            return none("plus-trivial A' inverse");
        case VertexType::B:
            if (pos) return plus(step(WalkKind::CwR), -1, "plus-trivial B");
            return plus(step(WalkKind::CcwS), phi(p.s1), "plus-trivial B inverse");
        case VertexType::BPrime:
            if (pos) return plus(step(WalkKind::CcwS), -1, "plus-trivial B'");
            return plus(step(WalkKind::CwR), phi(p.r1), "plus-trivial B' inverse");
        case VertexType::C:
            if (pos) {
                if (p.r1 > 0) return plus(unit({VertexType::D, p.r1 - 1}, 1), 0, "plus-trivial C");
                return plus(step(WalkKind::CwR), -1, "plus-trivial C");
            }
            if (p.s1 > 0) return plus(unit({VertexType::DPrime, p.s1 - 1}, 1), 0, "plus-trivial C inverse");
            return plus(step(WalkKind::CcwS), -1, "plus-trivial C inverse");
        case VertexType::D:
            if (pos) {
                if (c.index > 0) return plus(unit({VertexType::D, c.index - 1}, 1), 0, "plus-trivial D");
                return plus(step(WalkKind::CwR), -1, "plus-trivial D");
            }
            return plus(step(WalkKind::CcwS), phi(p.s1), "plus-trivial D inverse");
        case VertexType::DPrime:
            if (pos) {
                if (c.index > 0) return plus(unit({VertexType::DPrime, c.index - 1}, 1), 0, "plus-trivial D'");
                return plus(step(WalkKind::CcwS), p.s2 == 0 ? 0 : -1, "plus-trivial D'");
            }
            return plus(step(WalkKind::CwR), phi(p.r1), "plus-trivial D' inverse");
        case VertexType::F:
            if (pos) return plus(step(WalkKind::CcwS), phi(p.s1), "plus-trivial F");
            return plus(step(WalkKind::CwR), phi(p.r1), "plus-trivial F inverse");
        case VertexType::FPrime:
            if (pos) return plus(step(WalkKind::CwS), -1, "plus-trivial F'");
            return plus(step(WalkKind::CcwR), -1, "plus-trivial F' inverse");
        case VertexType::Ctilde:
            break;
    }
    fail(ErrorKind::InvariantBreach, "vertex class outside the normal form");
}

MinusValue minus(HString s, std::string row) {
    return MinusValue{std::move(s), std::move(row), false};
}

MinusValue table2(const Walks& w, const HString& omega) {
    const Quiver& q = w.quiver();
    const auto& p = q.params();
    const Letter a = omega.last();
    const ArrowName n = q.arrow(a.arrow).name;
    const int i = n.index;
    const int l = omega.length();
    auto pre = [&](WalkKind k) { return prepend(w, k, omega); };
    auto red = [&](WalkKind k) { return reduction(w, k, omega); };

    switch (n.family) {
        case ArrowFamily::Alpha:
            if (!a.inverse) return minus(pre(WalkKind::CcwR), "minus-word alpha_i");
            if (i <= p.r2) return minus(pre(WalkKind::CcwR), "minus-word alpha_i^-1, i<=r2");
            if (l == 1) return minus(HString::empty(), "minus-word alpha_i^-1, i>r2, l=1");
            return minus(red(WalkKind::CwR), "minus-word alpha_i^-1, i>r2, l>1");
        case ArrowFamily::Beta:
            if (!a.inverse) return minus(pre(WalkKind::CwS), "minus-word beta_i");
            if (i <= p.s2) return minus(pre(WalkKind::CwS), "minus-word beta_i^-1, i<=s2");
            if (l == 1) return minus(HString::empty(), "minus-word beta_i^-1, i>s2, l=1");
            return minus(red(WalkKind::CcwS), "minus-word beta_i^-1, i>s2, l>1");
        case ArrowFamily::Gamma:
            if (i % 2 == 0) {
                if (!a.inverse) return minus(red(WalkKind::CwR), "minus-word gamma_2i");
                return minus(pre(WalkKind::CwS), "minus-word gamma_2i^-1");
            }
            if (!a.inverse) return minus(pre(WalkKind::CwS), "minus-word gamma_2i-1");
            return minus(pre(WalkKind::CcwR), "minus-word gamma_2i-1^-1");
        case ArrowFamily::Delta:
            if (i % 2 == 0) {
                if (!a.inverse) return minus(red(WalkKind::CcwS), "minus-word delta_2i");
                return minus(pre(WalkKind::CcwR), "minus-word delta_2i^-1");
            }
            if (!a.inverse) return minus(pre(WalkKind::CcwR), "minus-word delta_2i-1");
            return minus(pre(WalkKind::CwS), "minus-word delta_2i-1^-1");
    }
    fail(ErrorKind::InvariantBreach, "unhandled table row");
}

MinusValue table4(const Walks& w, const HString& omega) {
    const Quiver& q = w.quiver();
    const auto& p = q.params();
    const int x = omega.vertex();
    const bool pos = omega.sign() > 0;
    const VertexClass c = q.vertex(x).cls;
    auto step = [&](WalkKind k) { return prepend(w, k, omega); };
    auto unit = [&](VertexClass vc, int sign) {
        const int v = q.vertex_id(vc);
        ensure(v >= 0, "table refers to a missing vertex " + canonical_name(vc));
        return HString::trivial(v, sign);
    };

    switch (c.type) {
        case VertexType::A:
            if (pos) return minus(HString::empty(), "minus-trivial A");
            return minus(step(WalkKind::CcwR), "minus-trivial A inverse");
        case VertexType::APrime:
            if (pos) return minus(HString::empty(), "minus-trivial A'");
            return minus(step(WalkKind::CwS), "minus-trivial A' inverse");
        case VertexType::B:
            return pos ? minus(step(WalkKind::CcwR), "minus-trivial B") : minus(step(WalkKind::CwS), "minus-trivial B inverse");
        case VertexType::BPrime:
            return pos ? minus(step(WalkKind::CwS), "minus-trivial B'") : minus(step(WalkKind::CcwR), "minus-trivial B' inverse");
        case VertexType::C:
            return pos ? minus(step(WalkKind::CcwR), "minus-trivial C")
                       : minus(step(WalkKind::CwS), "minus-trivial C inverse");
        case VertexType::D:
            if (!pos) return minus(step(WalkKind::CwS), "minus-trivial D inverse");
            if (c.index < p.r1 - 1) return minus(unit({VertexType::D, c.index + 1}, 1), "minus-trivial D");
            if (p.s1 > 0) return minus(unit({VertexType::C, 0}, 1), "minus-trivial D");
            return MinusValue{HString::empty(), "minus-trivial D", true};
        case VertexType::DPrime:
            if (!pos) return minus(step(WalkKind::CcwR), "minus-trivial D' inverse");
            if (c.index < p.s1 - 1) return minus(unit({VertexType::DPrime, c.index + 1}, 1), "minus-trivial D'");
            if (p.r1 > 0) return minus(unit({VertexType::C, 0}, -1), "minus-trivial D'");
            return MinusValue{HString::empty(), "minus-trivial D'", true};
        case VertexType::F:
            return pos ? minus(step(WalkKind::CwR), "minus-trivial F") : minus(step(WalkKind::CcwS), "minus-trivial F inverse");
        case VertexType::FPrime:
            return pos ? minus(step(WalkKind::CcwR), "minus-trivial F'") : minus(step(WalkKind::CwS), "minus-trivial F' inverse");
        case VertexType::Ctilde:
            break;
    }
    fail(ErrorKind::InvariantBreach, "vertex class outside the normal form");
}

}  // namespace

PlusValue table_omega_plus(const Walks& w, const HString& omega) {
    if (omega.is_empty()) fail(ErrorKind::EmptyString, "omega^+ of the empty string");
    return omega.is_trivial() ? table3(w, omega) : table1(w, omega);
}

MinusValue table_omega_minus(const Walks& w, const HString& omega) {
    if (omega.is_empty()) fail(ErrorKind::EmptyString, "omega_- of the empty string");
    return omega.is_trivial() ? table4(w, omega) : table2(w, omega);
}

const std::vector<Erratum>& errata() {
    static const std::vector<Erratum> list = {
        {"A-row", "plus-trivial A", "1_{A_i} with i > 1: m' is -1, not 0"},
        {"A'-row", "plus-trivial A'", "1_{A'_i} with i > 1: m' is -1, not 0"},
        {"gamma1-row", "plus-word gamma_2i-1", "i = 1 and s2 > 0: m' is phi(s1), not phi(r1)"},
        {"delta1-row", "plus-word delta_2i-1", "i = 1 and r2 > 0: m' is phi(r1), not phi(s1)"},
        {"F'-row", "plus-trivial F'", "1_{F'} gives cw_r(x) and 1_{F'}^-1 gives ccw_s(x); m' stays -1"},
        {"F-row", "minus-trivial F", "1_F gives cw_s_p(x) and 1_F^-1 gives ccw_r_p(x)"},
        {"D-cell", "minus-trivial D", "1_{D_i} with i = r1 - 1 and s1 = 0 gives 1_C"},
        {"D'-cell", "minus-trivial D'", "1_{D'_i} with i = s1 - 1 and r1 = 0 gives 1_C^-1"},
    };
    return list;
}

std::optional<std::string> plus_erratum(const Walks& w, const HString& omega) {
    const Quiver& q = w.quiver();
    const auto& p = q.params();
    if (omega.is_trivial()) {
        const VertexClass c = q.vertex(omega.vertex()).cls;
        if (c.type == VertexType::FPrime) return "F'-row";
        if (omega.sign() < 0 || c.index <= 1) return std::nullopt;
        if (c.type == VertexType::A) return "A-row";
        if (c.type == VertexType::APrime) return "A'-row";
        return std::nullopt;
    }
    if (!omega.is_word() || omega.last().inverse || phi(p.r1) == phi(p.s1)) return std::nullopt;
    const ArrowName n = q.arrow(omega.last().arrow).name;
    if (n.index != 1) return std::nullopt;
    if (n.family == ArrowFamily::Gamma && p.s2 > 0) return "gamma1-row";
    if (n.family == ArrowFamily::Delta && p.r2 > 0) return "delta1-row";
    return std::nullopt;
}

std::optional<std::string> minus_erratum(const Walks& w, const HString& omega) {
    if (!omega.is_trivial()) return std::nullopt;
    const Quiver& q = w.quiver();
    const auto& p = q.params();
    const VertexClass c = q.vertex(omega.vertex()).cls;
    if (c.type == VertexType::F) return "F-row";
    if (omega.sign() < 0) return std::nullopt;
    if (c.type == VertexType::D && c.index == p.r1 - 1 && p.s1 == 0) return "D-cell";
    if (c.type == VertexType::DPrime && c.index == p.s1 - 1 && p.r1 == 0) return "D'-cell";
    return std::nullopt;
}

PlusValue omega_plus(const Walks& w, const HString& omega) {
    PlusValue v = table_omega_plus(w, omega);
    auto e = plus_erratum(w, omega);
    if (!e) return v;
    const auto& p = w.quiver().params();
    if (*e == "A-row" || *e == "A'-row") {
        v.m_prime = -1;
    } else if (*e == "gamma1-row") {
        v.m_prime = phi(p.s1);
    } else if (*e == "delta1-row") {
        v.m_prime = phi(p.r1);
    } else if (*e == "F'-row") {
        v.string = w.step(omega.vertex(), omega.sign() > 0 ? WalkKind::CwR : WalkKind::CcwS);
        v.m_prime = -1;
    }
    v.row += " [" + *e + "]";
    return v;
}

HString omega_minus_lower(const Walks& w, const HString& omega) {
    MinusValue v = table_omega_minus(w, omega);
    if (auto e = minus_erratum(w, omega)) {
        const Quiver& q = w.quiver();
        const int c = q.vertex_id({VertexType::C, 0});
        if (*e == "F-row")
            return w.step(omega.vertex(), omega.sign() > 0 ? WalkKind::CwS : WalkKind::CcwR);
        ensure(c >= 0, "erratum " + *e + " needs a vertex C");
        return HString::trivial(c, *e == "D-cell" ? 1 : -1);
    }
    ensure(!v.unspecified, "omega_- table cell left unspecified for " + render(w.quiver(), omega));
    return v.string;
}

HString omega_plus_lower(const Walks& w, const HString& omega) {
    if (omega.is_empty()) fail(ErrorKind::EmptyString, "omega_+ of the empty string");
    return inverse(omega_plus(w, inverse(omega)).string);
}

HString omega_minus_upper(const Walks& w, const HString& omega) {
    if (omega.is_empty()) fail(ErrorKind::EmptyString, "omega^- of the empty string");
    return inverse(omega_minus_lower(w, inverse(omega)));
}

int m_doubleprime(const Walks& w, const HString& omega) {
    if (omega.is_empty()) fail(ErrorKind::EmptyString, "m'' of the empty string");
    PlusValue up = omega_plus(w, omega);
    if (!up.string.is_empty()) return *up.m_prime;
    const HString low = omega_plus_lower(w, omega);
    if (low.is_empty()) fail(ErrorKind::BothEmpty, "omega^+ and omega_+ are both empty for " + render(w.quiver(), omega));
    PlusValue v = omega_plus(w, low);
    ensure(v.m_prime.has_value(), "m' undefined for " + render(w.quiver(), low));
    return *v.m_prime;
}

}  // namespace gentle
