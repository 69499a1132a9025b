#include <algorithm>
#include <deque>
#include <set>

#include "doctest.h"
#include "gentle/classifier.hpp"
#include "gentle/complex.hpp"
#include "support.hpp"

using namespace gentle;
using namespace gentle::testing;

namespace {

ComponentId C(int m, const std::string& s) { return classify(worked(), m, S(s)); }

std::string RC(const ComponentId& id) { return render(worked().quiver(), id); }

HString first_central() {
    for (const HString& s : all_strings(worked().quiver(), 6))
        if (s.is_word() && is_central(worked().quiver(), s)) return s;
    return HString::empty();
}

std::vector<std::string> rendered(const std::vector<Shifted>& xs) {
    std::vector<std::string> out;
    for (const Shifted& x : xs) out.push_back(R(x));
    return out;
}

}  // namespace

TEST_CASE("classification examples on the worked quiver") {
    CHECK(C(0, "1_7") == C(-1, "1_5"));
    CHECK(C(0, "1_7") == C(-2, "j-"));
    CHECK(RC(C(0, "1_7")) == "R(0)");
    CHECK_FALSE(C(0, "1_7") == C(0, "1_5"));
    CHECK(C(0, "1_9-") == C(0, "1_13"));
    CHECK(RC(C(0, "1_9-")) == "Special(0)");
    CHECK(RC(C(0, "1_15")) == "S(0)");
    CHECK(RC(C(-1, "1_16")) == "S(0)");
    CHECK(C(0, "1_7") == C(-3, "1_7"));
    CHECK(RC(C(1, "1_7")) == "R(2)");
    CHECK_THROWS_AS(classify(worked(), 0, HString::empty()), Error);
}

TEST_CASE("central strings are their own component") {
    const Quiver& q = worked().quiver();
    const HString c = first_central();
    REQUIRE(is_central(q, c));
    const ComponentId id = classify(worked(), 0, c);
    CHECK(id.kind == ComponentKind::Central);
    CHECK(classify(worked(), 1, c).value == id.value + 1);
}

TEST_CASE("classify is constant along triangles and under inversion") {
    for (const Parameters& p : small_sets()) {
        const Walks& w = walks_for(p);
        const Quiver& q = w.quiver();
        long failures = 0;
        for (const HString& s : all_strings(q, p == Parameters{2, 3, 4, 2} ? 6 : 7)) {
            const ComponentId id = classify(w, 0, s);
            if (!(classify(w, degree(q, s), inverse(s)) == id)) ++failures;
            const ARTriangle t = ar_triangle_starting(w, 0, s);
            for (const Shifted& x : t.middle)
                if (!x.string.is_empty() && !(classify(w, x.degree, x.string) == id)) ++failures;
            if (!(classify(w, t.end.degree, t.end.string) == id)) ++failures;
        }
        CAPTURE(to_string(p));
        CHECK(failures == 0);
    }
}

TEST_CASE("a central component contains one central string within radius 6") {
    const Walks& w = worked();
    const Quiver& q = w.quiver();
    const HString c = first_central();
    REQUIRE_FALSE(c.is_empty());
    std::set<std::pair<int, HString>> seen{iso_normalize(q, 0, c)};
    std::deque<std::pair<Shifted, int>> frontier{{{0, c}, 0}};
    int centrals = 0;
    while (!frontier.empty()) {
        auto [x, r] = frontier.front();
        frontier.pop_front();
        if (is_central(q, x.string) || is_central(q, inverse(x.string))) ++centrals;
        if (r == 6) continue;
        std::vector<Shifted> next;
        const ARTriangle up = ar_triangle_starting(w, x.degree, x.string);
        const ARTriangle down = ar_triangle_ending(w, x.degree, x.string);
        for (const Shifted& y : up.middle) next.push_back(y);
        for (const Shifted& y : down.middle) next.push_back(y);
        for (const Shifted& y : next) {
            if (y.string.is_empty()) continue;
            if (seen.insert(iso_normalize(q, y.degree, y.string)).second) frontier.push_back({y, r + 1});
        }
    }
    CHECK(seen.size() > 20);
    CHECK(centrals == 1);
}

TEST_CASE("edges of the worked quiver") {
    const Quiver& q = worked().quiver();
    const EdgeCycle r = edge(worked(), parse_component_id(q, "R(0)"));
    std::vector<std::string> members = rendered(r.members);
    members.push_back(R(r.closing));
    CHECK(members == std::vector<std::string>{"1_7[0]", "1_5[-1]", "1_3[-2]", "k-[-2]", "j-[-2]", "1_7[-3]"});
    CHECK(r.period == 5);
    CHECK(r.degree_drop == 3);

    const EdgeCycle s = edge(worked(), parse_component_id(q, "S(0)"));
    members = rendered(s.members);
    members.push_back(R(s.closing));
    CHECK(members ==
          std::vector<std::string>{"1_15[0]", "1_16[-1]", "l-[-1]", "m-[-1]", "n-[-1]", "o-[-1]", "1_15[-2]"});
    CHECK(s.period == 6);
    CHECK(s.degree_drop == 2);

    CHECK_THROWS_AS(edge(worked(), parse_component_id(q, "Special(0)")), Error);
    CHECK_THROWS_AS(edge(worked(), parse_component_id(q, "R(5)")), Error);
}

TEST_CASE("edge members have one middle term, their diagonal neighbours two") {
    const Walks& w = worked();
    for (const char* id : {"R(0)", "R(1)", "R(2)", "S(0)", "S(1)"}) {
        const EdgeCycle e = edge(w, parse_component_id(w.quiver(), id));
        for (const Shifted& x : e.members) {
            CAPTURE(R(x));
            const ARTriangle t = ar_triangle_starting(w, x.degree, x.string);
            CHECK(t.middle.size() == 1);
            CHECK(ar_triangle_ending(w, x.degree, x.string).middle.size() == 1);
            CHECK(ar_triangle_starting(w, t.middle[0].degree, t.middle[0].string).middle.size() == 2);
        }
    }
}

TEST_CASE("s-tubes when s2 = 0") {
    const Walks& w = walks_for({1, 2, 3, 0});
    const Quiver& q = w.quiver();
    const EdgeCycle e = edge(w, parse_component_id(q, "STube(0)"));
    CHECK(e.period == 3);
    CHECK(e.degree_drop == 0);
    CHECK(iso_normalize(q, e.closing.degree, e.closing.string) ==
          iso_normalize(q, e.members[0].degree, e.members[0].string));
    for (const Shifted& x : e.members) CHECK(classify(w, x.degree, x.string) == e.id);
}

TEST_CASE("census on the worked quiver") {
    const auto fams = census(worked());
    REQUIRE(fams.size() == 5);
    CHECK(fams[0].shape == Shape::HomogeneousTube);
    CHECK(fams[1].shape == Shape::ZAinf);
    CHECK(fams[1].count == 3);
    CHECK(fams[1].tau_power == 5);
    CHECK(fams[1].tau_shift == 3);
    CHECK(fams[2].count == 2);
    CHECK(fams[2].tau_power == 6);
    CHECK(fams[2].tau_shift == 2);
    CHECK(fams[3].shape == Shape::ZAinfinf);
    CHECK(fams[4].shape == Shape::ZAinfinf);
    for (const auto& f : fams) CHECK(f.verified);
}

TEST_CASE("census follows the parameters") {
    for (const Parameters& p : {Parameters{1, 1, 1, 1}, Parameters{0, 1, 0, 1}, Parameters{0, 1, 1, 0},
                                Parameters{1, 1, 0, 1}, Parameters{1, 1, 1, 0}, Parameters{1, 2, 3, 0},
                                Parameters{3, 1, 2, 2}}) {
        CAPTURE(to_string(p));
        const Walks& w = walks_for(p);
        const Parameters n = w.quiver().params();
        const auto fams = census(w);
        const bool special = n.r1 + n.s1 > 0;
        REQUIRE(fams.size() == (special ? 5u : 4u));
        CHECK(fams[1].count == n.r2);
        CHECK(fams[1].tau_power == n.r1 + n.r2);
        CHECK(fams[1].tau_shift == n.r2);
        if (n.s2 == 0) {
            CHECK(fams[2].shape == Shape::Tube);
            CHECK(fams[2].tube_rank == n.s1);
        } else {
            CHECK(fams[2].count == n.s2);
            CHECK(fams[2].tau_power == n.s1 + n.s2);
        }
        for (const auto& f : fams) CHECK(f.verified);
    }
}

TEST_CASE("fragments are valid translation-quiver patches") {
    const Walks& w = worked();
    const Fragment f = fragment(w, 0, S("1_7"), 3, 11);
    CHECK(f.valid());
    REQUIRE(f.cells[0][0].has_value());
    CHECK(R(*f.cells[0][0]) == "1_7[0]");
    CHECK(R(*f.cells[1][1]) == "e i[-1]");
    const Fragment g = fragment(w, 0, S("1_9-"), 3, 7);
    CHECK(g.valid());
    CHECK(R(*g.cells[1][1]) == "1_10[0]");
    CHECK_THROWS_AS(fragment(w, 0, HString::empty(), 2, 2), Error);
    const std::string dot = render_dot(w.quiver(), f);
    CHECK(dot.find("label=\"e i[-1]\"") != std::string::npos);
}

TEST_CASE("special component maps") {
    const SpecialChains c = special_component_maps(worked(), 0);
    CHECK(rendered(c.lower) == std::vector<std::string>{"1_9-[0]", "1_8-[0]", "1_6-[0]"});
    CHECK(rendered(c.upper) == std::vector<std::string>{"1_9-[0]", "1_10[0]", "1_11[0]", "1_12[0]", "1_13[0]"});
    for (const Shifted& x : c.upper) CHECK(RC(classify(worked(), x.degree, x.string)) == "Special(0)");
    CHECK_THROWS_AS(special_component_maps(walks_for({0, 1, 0, 1}), 0), Error);
    const SpecialChains r0 = special_component_maps(walks_for({0, 1, 1, 1}), 2);
    CHECK(r0.lower.empty());
    CHECK(r0.upper.size() == 2);
}

TEST_CASE("component ids round trip through text") {
    const Quiver& q = worked().quiver();
    for (const char* t : {"R(1)", "S(0)", "Special(-4)"}) CHECK(RC(parse_component_id(q, t)) == t);
    const ComponentId central = classify(worked(), 2, first_central());
    CHECK(parse_component_id(q, RC(central)) == central);
    const ComponentId tube = classify_band(q, 0, central_band(q), "2");
    CHECK(tube.kind == ComponentKind::Tube);
    CHECK(parse_component_id(q, RC(tube)) == tube);
    CHECK_THROWS_AS(parse_component_id(q, "Cylinder(0)"), Error);
}

TEST_CASE("band classification is rotation invariant up to shift") {
    const Quiver& q = worked().quiver();
    const HString b = central_band(q);
    const ComponentId id = classify_band(q, 0, b, "1");
    for (const HString& rot : rotations(q, b)) CHECK(classify_band(q, 0, rot, "1").kind == ComponentKind::Tube);
    const ComponentId inv = classify_band(q, 0, inverse(b), "1");
    CHECK(inv.string == id.string);
    CHECK(inv.lambda != id.lambda);
    CHECK((inv.lambda == "1^-1" || id.lambda == "1^-1"));
    CHECK(id.string == *canonical_band(q, b));
    CHECK_THROWS_AS(classify_band(q, 0, S("a"), "1"), Error);
}

TEST_CASE("bands") {
    const Quiver& q = worked().quiver();
    CHECK(R(central_band(q)) == "s- p- o- n- m- l- k j g d a");
    const HString base = band_family_base(q);
    for (int n = 0; n <= 4; ++n) CHECK(is_band(q, band_family(q, base, n)));
    const auto bands = enumerate_bands(q, 11);
    CHECK(std::find(bands.begin(), bands.end(), *canonical_band(q, S("s- t- u- c b a"))) != bands.end());
    for (const HString& b : bands) CHECK(*canonical_band(q, b) == b);
    for (const Parameters& p : small_sets()) {
        const Quiver& qp = walks_for(p).quiver();
        CHECK(is_band(qp, central_band(qp)));
        for (int n = 0; n <= 4; ++n) CHECK(is_band(qp, band_family(qp, band_family_base(qp), n)));
    }
}
