#include "doctest.h"
#include "gentle/ar.hpp"
#include "gentle/walks.hpp"
#include "support.hpp"

using namespace gentle;
using namespace gentle::testing;

namespace {

int V(const std::string& label) { return *worked().quiver().find_vertex(label); }

std::vector<std::string> rendered(const std::vector<HString>& xs) {
    std::vector<std::string> out;
    for (const HString& x : xs) out.push_back(R(x));
    return out;
}

}  // namespace

TEST_CASE("walk steps on the worked quiver") {
    const Walks& w = worked();
    CHECK(R(w.step(V("7"), WalkKind::CwR)) == "e i");
    CHECK(R(w.step(V("3"), WalkKind::CwR)) == "k- l m n o p s c");
    // Vertex 4 is off the walk; the step is the clockwise r-prefix.
    CHECK_FALSE(w.on_walk(V("4"), WalkKind::CwR));
    CHECK(R(w.step(V("4"), WalkKind::CwR)) == "e");
    const std::vector<std::string> expected{"e i", "b f", "k- l m n o p s c", "j-", "h", "e i"};
    CHECK(rendered(w.walk(V("7"), WalkKind::CwR, 6)) == expected);
    const auto from5 = rendered(w.walk(V("5"), WalkKind::CwR, 5));
    CHECK(from5 == std::vector<std::string>(expected.begin() + 1, expected.end()));
}

TEST_CASE("walks are periodic and chain") {
    for (const Parameters& p : small_sets()) {
        const Walks& w = walks_for(p);
        const Quiver& q = w.quiver();
        for (WalkKind k : {WalkKind::CwR, WalkKind::CcwR, WalkKind::CwS, WalkKind::CcwS}) {
            const int per = w.period(k);
            for (int x = 0; x < q.vertex_count(); ++x) {
                if (!w.on_walk(x, k)) continue;
                CAPTURE(to_string(p));
                CAPTURE(to_string(k));
                CAPTURE(q.vertex_canonical(x));
                const auto steps = w.walk(x, k, 2 * per);
                HString acc = steps.front();
                CHECK(source(q, steps.front()) == x);
                for (int i = 1; i < 2 * per; ++i) {
                    if (i < per)
                        CHECK(steps[static_cast<std::size_t>(i)] == steps[static_cast<std::size_t>(i + per)]);
                    CHECK(source(q, steps[static_cast<std::size_t>(i)]) == target(q, steps[static_cast<std::size_t>(i - 1)]));
                    acc = concat(steps[static_cast<std::size_t>(i)], acc);
                    CHECK(is_valid(q, acc));
                }
            }
        }
    }
}

TEST_CASE("prefix steps are proper prefixes of on-walk steps") {
    for (const Parameters& p : small_sets()) {
        const Walks& w = walks_for(p);
        const Quiver& q = w.quiver();
        for (WalkKind k : {WalkKind::CwR, WalkKind::CcwR, WalkKind::CwS, WalkKind::CcwS})
            for (int x = 0; x < q.vertex_count(); ++x) {
                if (w.on_walk(x, k)) continue;
                auto s = w.try_step(x, k);
                if (!s) continue;
                bool found = false;
                for (int y = 0; y < q.vertex_count() && !found; ++y) {
                    if (!w.on_walk(y, k)) continue;
                    const auto& full = w.step(y, k).letters();
                    const auto& part = s->letters();
                    if (part.size() >= full.size()) continue;
                    found = std::equal(part.begin(), part.end(), full.end() - static_cast<long>(part.size()));
                }
                CAPTURE(to_string(p));
                CAPTURE(q.vertex_canonical(x));
                CHECK(found);
            }
    }
}

TEST_CASE("reductions on the worked quiver") {
    const Walks& w = worked();
    CHECK(R(*reduce(w, S("b f e d"), WalkKind::CwR)) == "e d");
    CHECK(R(*reduce(w, S("e d"), WalkKind::CwR)) == "d");
    for (WalkKind k : {WalkKind::CwR, WalkKind::CcwR, WalkKind::CwS, WalkKind::CcwS})
        CHECK_FALSE(reduce(w, S("g d"), k).has_value());
    // The whole string is stripped: the remainder is the trivial string composable on its right.
    const HString e = *reduce(w, S("e"), WalkKind::CwR);
    CHECK(e.is_trivial());
    CHECK(e.vertex() == V("4"));
    CHECK(compose(worked().quiver(), S("e"), e).has_value());
    // jgd reduces along the counter-clockwise r-walk.
    const auto jgd = left_admissible_reduction(w, S("j g d"));
    REQUIRE(jgd.has_value());
    CHECK(jgd->kind == WalkKind::CcwR);
    CHECK(R(jgd->result) == "g d");
}

TEST_CASE("admissible reductions and central strings") {
    const Walks& w = worked();
    const Quiver& q = w.quiver();
    CHECK(is_central(q, S("1_2")));
    CHECK(is_central(q, S("d")));
    CHECK_FALSE(is_central(q, S("1_9")));
    CHECK_FALSE(left_admissible_reduction(w, S("d")).has_value());
    CHECK_FALSE(left_admissible_reduction(w, S("k-")).has_value());
    const auto r = left_admissible_reduction(w, S("b f e d"));
    REQUIRE(r.has_value());
    CHECK(R(r->result) == "e d");
    CHECK(r->result.length() < 4);
}

TEST_CASE("reduce_to_base examples") {
    const Walks& w = worked();
    const ReductionTrace t = reduce_to_base(w, S("b f e d"));
    CHECK(R(t.base) == "d");
    CHECK(t.type == BaseType::Central);
    CHECK(t.steps.size() == 2);
    CHECK(reduce_to_base(w, S("1_5")).type == BaseType::EdgeSeed);
    CHECK(reduce_to_base(w, S("1_5")).steps.empty());
    CHECK(reduce_to_base(w, S("1_6-")).type == BaseType::StalkCDD);
    CHECK_THROWS_AS(reduce_to_base(w, HString::empty()), Error);
}

TEST_CASE("left reductions land on omega^+ or omega_- as the kind predicts") {
    for (const Parameters& p : small_sets()) {
        const Walks& w = walks_for(p);
        const Quiver& q = w.quiver();
        long failures = 0;
        for (const HString& s : all_strings(q, p == Parameters{2, 3, 4, 2} ? 7 : 8)) {
            int matched = 0;
            for (WalkKind k : {WalkKind::CwR, WalkKind::CcwR, WalkKind::CwS, WalkKind::CcwS})
                matched += has_reduction_property(w, s, k);
            if (matched > 1) ++failures;
            const auto red = left_admissible_reduction(w, s);
            if (!red) continue;
            if (red->result.is_empty() || red->result.length() >= s.length()) ++failures;
            const bool minus = red->kind == WalkKind::CwR || red->kind == WalkKind::CcwS;
            const HString expected = minus ? omega_minus_lower(w, s) : omega_plus(w, s).string;
            if (!(expected == red->result)) ++failures;
        }
        CAPTURE(to_string(p));
        CHECK(failures == 0);
    }
}
