#include "gentle/ar.hpp"
#include "gentle/error.hpp"

namespace gentle {

namespace {

// Longest relation-free direct path sigma with sigma . omega defined.
HString maximal_free_path(const Quiver& q, const HString& omega) {
    const int t = target(q, omega);
    std::vector<Letter> path;
    for (int a : q.out_arrows(t)) {
        if (compose(q, HString::word({Letter{a, false}}), omega)) {
            ensure(path.empty(), "two arrows extend " + render(q, omega));
            path.push_back(Letter{a, false});
        }
    }
    const int bound = q.arrow_count() + 1;
    while (!path.empty()) {
        const int prev = path.back().arrow;
        int next = -1;
        for (int b : q.out_arrows(q.arrow(prev).target)) {
            if (q.is_relation(b, prev)) continue;
            ensure(next < 0, "two relation-free continuations");
            next = b;
        }
        if (next < 0) break;
        path.push_back(Letter{next, false});
        ensure(static_cast<int>(path.size()) <= bound, "relation-free path does not terminate");
    }
    return HString::word(std::move(path));
}

// Juxtaposition as paths in the double quiver; homotopy letters may merge.
HString joined(const Quiver& q, const HString& left, const HString& right) {
    const HString out = concat(left, right);
    ensure(is_valid(q, out), "oracle juxtaposed a non-string " + render(q, left) + " | " + render(q, right));
    return out;
}

}  // namespace

OracleResult bobinski_direct(const Quiver& q, const HString& omega) {
    if (omega.is_empty()) fail(ErrorKind::EmptyString, "omega^+ of the empty string");
    OracleResult res;
    const int l = omega.length();
    const auto& ls = omega.letters();

    if (omega.is_word() && !omega.last().inverse) {
        res.rho = 1;
        while (res.rho < l) {
            const auto& later = ls[static_cast<std::size_t>(l - res.rho)];
            const auto& earlier = ls[static_cast<std::size_t>(l - res.rho - 1)];
            if (earlier.inverse || !q.is_relation(later.arrow, earlier.arrow)) break;
            ++res.rho;
        }
    }
    if (res.rho == 0)
        res.truncated = omega;
    else if (res.rho == l)
        res.truncated = HString::trivial(source(q, omega), string_signs(q, omega).first);
    else
        res.truncated = HString::word(std::vector<Letter>(ls.begin(), ls.end() - res.rho));

    res.sigma = maximal_free_path(q, omega);
    if (res.sigma.is_word()) {
        const int T = string_signs(q, res.sigma).second;
        res.theta = theta_search(q, target(q, res.sigma), -T);
        const auto grown = compose(q, res.sigma, omega);
        ensure(grown.has_value(), "sigma does not compose with " + render(q, omega));
        res.string = res.theta.is_word() ? joined(q, inverse(res.theta), *grown) : *grown;
        res.m_prime = res.theta.length() - 1;
        res.case_no = 1;
        return res;
    }

    const HString& w1 = res.truncated;
    res.theta = theta_search(q, target(q, w1), -string_signs(q, w1).second);
    const int lt = res.theta.length();
    const int lw = w1.length();
    if (lt > 0 && lw > 0) {
        res.case_no = 2;
        res.string = joined(q, inverse(res.theta), w1);
    } else if (lt > 0) {
        res.case_no = 3;
        res.string = inverse(drop_leftmost_letter(q, res.theta));
    } else if (lw > 0) {
        if (w1.last().inverse) {
            res.case_no = 4;
            res.string = drop_leftmost_letter(q, w1);
        } else {
            res.case_no = 5;
            res.string = w1;
        }
    } else {
        res.case_no = 6;
        res.string = HString::empty();
        return res;
    }
    res.m_prime = lt + res.rho - 1;
    return res;
}

}  // namespace gentle
