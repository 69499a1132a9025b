#include <set>

#include "doctest.h"
#include "gentle/ar.hpp"
#include "gentle/complex.hpp"
#include "support.hpp"

using namespace gentle;
using namespace gentle::testing;

namespace {

bool iso(const Quiver& q, const Shifted& a, const Shifted& b) {
    return iso_normalize(q, a.degree, a.string) == iso_normalize(q, b.degree, b.string);
}

}  // namespace

TEST_CASE("omega^+ and omega_- on the worked quiver") {
    const Walks& w = worked();
    const PlusValue p7 = omega_plus(w, S("1_7"));
    CHECK(R(p7.string) == "e i");
    CHECK(p7.m_prime == -1);
    // Literal table: 1_{A_2}^-1 has no upper neighbour.
    CHECK(table_omega_plus(w, S("1_5-")).string.is_empty());
    CHECK_FALSE(table_omega_plus(w, S("1_5-")).m_prime.has_value());
    CHECK(omega_minus_lower(w, S("1_7")).is_empty());
    // alpha_l = gamma_2: the clockwise r-reduction.
    CHECK(R(omega_minus_lower(w, S("b f e d"))) == "e d");
    CHECK(R(omega_minus_lower(w, S("1_6"))) == "1_8");
    CHECK(omega_plus_lower(w, S("1_7")).is_empty());
    CHECK(m_doubleprime(w, S("1_5-")) == *omega_plus(w, omega_plus_lower(w, S("1_5-"))).m_prime);
    CHECK(m_doubleprime(w, S("1_7")) == -1);
    CHECK_THROWS_AS(omega_plus(w, HString::empty()), Error);
}

TEST_CASE("literal table m' on 1_{A_i}, i > 1, deviates from the direct algorithm") {
    const Walks& w = worked();
    const PlusValue lit = table_omega_plus(w, S("1_7"));
    CHECK(lit.m_prime == 0);
    CHECK(plus_erratum(w, S("1_7")) == std::optional<std::string>("A-row"));
    CHECK(bobinski_direct(worked().quiver(), S("1_7")).m_prime == -1);
    CHECK(omega_plus(w, S("1_7")).m_prime == -1);
}

TEST_CASE("direct algorithm on 1_7") {
    const OracleResult o = bobinski_direct(worked().quiver(), S("1_7"));
    CHECK(o.case_no == 1);
    CHECK(R(o.sigma) == "e i");
    CHECK(o.theta == S("1_5"));
    CHECK(R(o.string) == "e i");
    CHECK(o.m_prime == -1);
}

TEST_CASE("triangles of the worked example") {
    const Walks& w = worked();
    const Quiver& q = w.quiver();
    const ARTriangle t = ar_triangle_starting(w, 0, S("1_7"));
    REQUIRE(t.middle.size() == 1);
    CHECK(R(t.middle[0]) == "e i[-1]");
    CHECK(iso(q, t.end, {-1, S("1_5")}));
    CHECK(R(t.connecting) == "1_7[-1]");

    const ARTriangle u = ar_triangle_starting(w, -1, S("e i"));
    REQUIRE(u.middle.size() == 2);
    CHECK(R(u.middle[0]) == "b f e i[-2]");
    CHECK(iso(q, u.middle[1], {-1, S("1_5")}));
    CHECK(R(u.end) == "b f[-2]");

    const ARTriangle v = ar_triangle_ending(w, -3, S("1_7"));
    CHECK(iso(q, v.start, {-2, S("j-")}));
    CHECK(iso(q, tau(w, -3, S("1_7")), {-2, S("j-")}));
}

TEST_CASE("tau periodicity on the worked example") {
    const Walks& w = worked();
    Shifted x{0, S("1_7")};
    for (int i = 0; i < 5; ++i) x = tau_inverse(w, x.degree, x.string);
    CHECK(R(x) == "1_7[-3]");
    Shifted y{0, S("1_15")};
    for (int i = 0; i < 6; ++i) y = tau_inverse(w, y.degree, y.string);
    CHECK(R(y) == "1_15[-2]");
}

TEST_CASE("diagonals") {
    const Walks& w = worked();
    const auto up = diagonal(w, 0, S("1_7"), Diagonal::UpperRight, 3);
    REQUIRE(up.size() == 3);
    CHECK(R(up[1]) == "e i[-1]");
    CHECK(R(up[2]) == "b f e i[-2]");
    const auto c = diagonal(w, 0, S("1_9-"), Diagonal::UpperRight, 5);
    REQUIRE(c.size() == 5);
    CHECK(R(c[1]) == "1_10[0]");
    CHECK(R(c[4]) == "1_13[0]");
    CHECK(parse_diagonal("lower-left") == Diagonal::LowerLeft);
    CHECK_THROWS_AS(parse_diagonal("sideways"), Error);
}

TEST_CASE("growth along the upper-right diagonal follows the walk") {
    const Walks& w = worked();
    const auto steps = w.walk(*worked().quiver().find_vertex("7"), WalkKind::CwR, 8);
    const auto diag = diagonal(w, 0, S("1_7"), Diagonal::UpperRight, 9);
    REQUIRE(diag.size() == 9);
    HString acc = steps[0];
    CHECK(diag[1].string == acc);
    for (std::size_t i = 1; i < 8; ++i) {
        acc = concat(steps[i], acc);
        CHECK(diag[i + 1].string == acc);
    }
}

TEST_CASE("errata registry") {
    std::set<std::string> ids;
    for (const Erratum& e : errata()) ids.insert(e.id);
    CHECK(ids == std::set<std::string>{"A-row", "A'-row", "gamma1-row", "delta1-row", "F'-row", "F-row", "D-cell", "D'-cell"});
}

TEST_CASE("effective tables agree with the direct algorithm") {
    for (const Parameters& p : small_sets()) {
        const CrosscheckReport r = crosscheck(walks_for(p), p == Parameters{2, 3, 4, 2} ? 7 : 8, true, 4);
        CAPTURE(to_string(p));
        CHECK(r.string_mismatches == 0);
        CHECK(r.m_prime_mismatches == 0);
    }
    for (const Parameters& p : {Parameters{0, 2, 1, 1}, Parameters{2, 1, 0, 2}, Parameters{1, 2, 3, 0}, Parameters{3, 1, 2, 2}}) {
        const CrosscheckReport r = crosscheck(walks_for(p), 7, true, 4);
        CAPTURE(to_string(p));
        CHECK(r.string_mismatches == 0);
        CHECK(r.m_prime_mismatches == 0);
    }
}

TEST_CASE("literal deviations are all explained by registered errata") {
    for (const Parameters& p : small_sets()) {
        const CrosscheckReport r = crosscheck(walks_for(p), p == Parameters{2, 3, 4, 2} ? 7 : 8, false, 4);
        CAPTURE(to_string(p));
        CHECK(r.unexplained == 0);
    }
}

TEST_CASE("crosscheck output is deterministic across thread counts") {
    const Walks& w = walks_for({1, 1, 0, 1});
    const CrosscheckReport a = crosscheck(w, 7, false, 1);
    const CrosscheckReport b = crosscheck(w, 7, false, 7);
    REQUIRE(a.lines.size() == b.lines.size());
    for (std::size_t i = 0; i < a.lines.size(); ++i) CHECK(a.lines[i].omega == b.lines[i].omega);
}

TEST_CASE("triangle invariants over the enumeration") {
    for (const Parameters& p : small_sets()) {
        const Walks& w = walks_for(p);
        const Quiver& q = w.quiver();
        long failures = 0;
        for (const HString& s : all_strings(q, p == Parameters{2, 3, 4, 2} ? 7 : 8)) {
            const HString lo = omega_minus_lower(w, s);
            if (!lo.is_empty() && !(omega_plus(w, lo).string == s)) ++failures;
            const HString up = omega_minus_upper(w, s);
            if (!up.is_empty() && !(omega_plus_lower(w, up) == s)) ++failures;
            const ARTriangle t = ar_triangle_starting(w, 0, s);
            if (t.middle.empty() || t.middle.size() > 2) ++failures;
            const Shifted back = tau(w, t.end.degree, t.end.string);
            if (!iso(q, back, {0, s})) ++failures;
            const Shifted fwd = tau_inverse(w, tau(w, 0, s).degree, tau(w, 0, s).string);
            if (!iso(q, fwd, {0, s})) ++failures;
            // omega_+ = ((omega^-1)^+)^-1.
            const PlusValue inv = omega_plus(w, inverse(s));
            if (!(omega_plus_lower(w, s) == inverse(inv.string))) ++failures;
        }
        CAPTURE(to_string(p));
        CHECK(failures == 0);
    }
}
