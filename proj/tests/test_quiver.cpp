#include <map>

#include "doctest.h"
#include "gentle/quiver.hpp"
#include "support.hpp"

using namespace gentle;
using namespace gentle::testing;

namespace {

std::map<VertexType, int> class_counts(const Quiver& q) {
    std::map<VertexType, int> out;
    for (const Vertex& v : q.vertices()) ++out[v.cls.type];
    return out;
}

Error caught(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e;
    }
    FAIL("expected an Error");
    return Error(ErrorKind::InvariantBreach, "unreachable");
}

}  // namespace

TEST_CASE("normalization swaps or rejects") {
    CHECK(normalize_parameters({2, 3, 4, 2}) == Parameters{2, 3, 4, 2});
    CHECK(normalize_parameters({4, 0, 1, 2}) == Parameters{1, 2, 4, 0});
    CHECK(caught([] { normalize_parameters({3, 0, 2, 0}); }).kind() == ErrorKind::HereditaryCase);
    CHECK(caught([] { normalize_parameters({0, 0, 2, 1}); }).kind() == ErrorKind::InvalidSpec);
    CHECK(caught([] { normalize_parameters({-1, 2, 2, 1}); }).kind() == ErrorKind::InvalidSpec);
}

TEST_CASE("worked quiver vertex classes") {
    const Quiver& q = worked().quiver();
    CHECK(q.vertex_count() == 16);
    CHECK(q.arrow_count() == 21);
    auto c = class_counts(q);
    CHECK(c[VertexType::A] == 3);
    CHECK(c[VertexType::APrime] == 2);
    CHECK(c[VertexType::B] == 2);
    CHECK(c[VertexType::BPrime] == 1);
    CHECK(c[VertexType::C] == 1);
    CHECK(c[VertexType::D] == 2);
    CHECK(c[VertexType::DPrime] == 4);
    CHECK(c[VertexType::F] == 1);
    CHECK(c[VertexType::FPrime] == 0);
    // A = {3,5,7}, A' = {15,16}.
    CHECK(q.vertex_label(q.vertex_id({VertexType::A, 1})) == "3");
    CHECK(q.vertex_label(q.vertex_id({VertexType::A, 3})) == "7");
    CHECK(q.vertex_label(q.vertex_id({VertexType::APrime, 2})) == "15");
    CHECK(q.vertex_label(q.vertex_id({VertexType::APrime, 1})) == "16");
}

TEST_CASE("F and F' appear only without r- and s-arrows") {
    auto c = class_counts(walks_for({0, 1, 0, 1}).quiver());
    CHECK(c[VertexType::F] == 1);
    CHECK(c[VertexType::FPrime] == 1);
    CHECK(c[VertexType::C] == 0);
    auto c2 = class_counts(walks_for({1, 1, 1, 1}).quiver());
    CHECK(c2[VertexType::FPrime] == 0);
    CHECK(c2[VertexType::C] == 1);
}

TEST_CASE("normal forms are gentle with the expected arrow partition") {
    for (int r1 = 0; r1 <= 3; ++r1)
        for (int r2 = 1; r2 <= 3; ++r2)
            for (int s1 = 0; s1 <= 3; ++s1)
                for (int s2 = 0; s2 <= 3; ++s2) {
                    if (s1 + s2 == 0) continue;
                    const Parameters p{r1, r2, s1, s2};
                    CAPTURE(to_string(p));
                    const Quiver q = build_normal_form(p);
                    const GentleReport rep = validate_gentle(q);
                    CHECK(rep.ok);
                    CHECK(static_cast<int>(q.relations().size()) == 3 * (r2 + s2));
                    CHECK(q.arrow_count() == r1 + s1 + 3 * (r2 + s2));
                    int cycle = 0, r_arrows = 0, s_arrows = 0;
                    for (const Arrow& a : q.arrows()) {
                        const int memberships = q.is_cycle_arrow(a.id) + q.is_r_arrow(a.id) + q.is_s_arrow(a.id);
                        CHECK(memberships == 1);
                        cycle += q.is_cycle_arrow(a.id);
                        r_arrows += q.is_r_arrow(a.id);
                        s_arrows += q.is_s_arrow(a.id);
                    }
                    CHECK(cycle == 3 * (r2 + s2));
                    CHECK(r_arrows == r1);
                    CHECK(s_arrows == s1);
                    for (int v = 0; v < q.vertex_count(); ++v) {
                        CHECK(q.out_arrows(v).size() <= 2);
                        CHECK(q.in_arrows(v).size() <= 2);
                    }
                }
}

TEST_CASE("validate_gentle reports constructed violations") {
    const Quiver& q = worked().quiver();
    SUBCASE("flipped S on a cycle arrow") {
        std::vector<Arrow> arrows = q.arrows();
        const int g = q.gamma(1);
        arrows[static_cast<std::size_t>(g)].S = -arrows[static_cast<std::size_t>(g)].S;
        const Quiver bad(q.params(), q.vertices(), arrows, q.relations());
        CHECK_FALSE(validate_gentle(bad).ok);
    }
    SUBCASE("second relation partner") {
        std::vector<Relation> rels = q.relations();
        const Relation first = rels.front();
        bool added = false;
        for (int a : q.in_arrows(q.arrow(first.beta).source)) {
            if (a == first.alpha) continue;
            rels.push_back(Relation{first.beta, a});
            added = true;
            break;
        }
        if (!added)
            for (int b : q.out_arrows(q.arrow(first.alpha).target)) {
                if (b == first.beta) continue;
                rels.push_back(Relation{b, first.alpha});
                added = true;
                break;
            }
        REQUIRE(added);
        const Quiver bad(q.params(), q.vertices(), q.arrows(), rels);
        CHECK_FALSE(validate_gentle(bad).ok);
    }
}

TEST_CASE("labels") {
    const Quiver base = build_normal_form({2, 3, 4, 2});
    SUBCASE("empty map is the identity") {
        const Quiver q = apply_labels(base, {});
        CHECK(q.vertex_label(0) == base.vertex_canonical(0));
        CHECK(q.arrow_label(0) == base.arrow_canonical(0));
    }
    SUBCASE("worked labels resolve both ways") {
        const Quiver& q = worked().quiver();
        CHECK(q.find_arrow("a") == q.alpha(1));
        CHECK(q.find_arrow("alpha1") == q.alpha(1));
        CHECK(q.find_arrow("u") == q.delta(1));
        CHECK(q.find_vertex("9") == q.vertex_id({VertexType::C, 0}));
    }
    SUBCASE("duplicate label") {
        Labels l;
        l.arrow_labels = {{"alpha1", "a"}, {"alpha2", "a"}};
        CHECK(caught([&] { apply_labels(base, l); }).kind() == ErrorKind::DuplicateLabel);
    }
    SUBCASE("unknown entity") {
        Labels l;
        l.vertex_labels = {{"A9", "x"}};
        CHECK(caught([&] { apply_labels(base, l); }).kind() == ErrorKind::UnknownEntity);
    }
}

TEST_CASE("mirror quiver swaps the two sides") {
    const Quiver q = build_quiver_any(mirror(Parameters{2, 3, 4, 2}));
    CHECK(q.params() == Parameters{4, 2, 2, 3});
    CHECK(validate_gentle(q).ok);
}
