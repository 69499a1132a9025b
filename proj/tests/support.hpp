#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gentle/ar.hpp"
#include "gentle/io.hpp"
#include "gentle/walks.hpp"

namespace gentle::testing {

// The (2,3,4,2) quiver with vertex labels 1..16 and arrow labels a..u.
inline const Walks& worked() {
    static const Walks w(build_quiver(read_quiver_spec(GENTLE_TEST_DATA "/worked_2342.json")));
    return w;
}

inline const Walks& walks_for(Parameters p) {
    static std::vector<std::pair<Parameters, std::unique_ptr<Walks>>> cache;
    for (auto& [key, w] : cache)
        if (key == p) return *w;
    cache.emplace_back(p, std::make_unique<Walks>(build_normal_form(normalize_parameters(p))));
    return *cache.back().second;
}

inline HString S(const std::string& text) { return parse(worked().quiver(), text); }

inline std::string R(const HString& w) { return render(worked().quiver(), w); }

inline std::string R(const Shifted& s) { return render(worked().quiver(), s); }

// Minimal parameter sets of the normal-form variations with r2 > 0, plus the worked example.
inline const std::vector<Parameters>& small_sets() {
    static const std::vector<Parameters> sets{{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 1, 1, 0}, {1, 1, 0, 1},
                                              {1, 1, 1, 0}, {2, 3, 4, 2}};
    return sets;
}

}  // namespace gentle::testing
