#include "beyondplanar/oracle.hpp"

#include <set>

#include "beyondplanar/errors.hpp"

namespace bp::oracle {

Verdict brute_gap(const CrossingStructure& cs, int k) {
    const std::size_t c = cs.crossings.size();
    if (c > 20) throw ResourceBoundError("brute_gap handles at most 20 crossings");
    Verdict v = verdict_for("gap", k);
    for (std::uint32_t mask = 0; mask < (1u << c); ++mask) {
        std::vector<int> load(cs.graph.m(), 0);
        std::vector<EdgeId> owner(c);
        bool ok = true;
        for (std::size_t i = 0; i < c && ok; ++i) {
            owner[i] = (mask >> i) & 1u ? cs.crossings[i].b : cs.crossings[i].a;
            ok = ++load[owner[i]] <= k;
        }
        if (!ok) continue;
        v.assignment = GapAssignment{k, owner};
        return v;
    }
    v.holds = false;
    v.reason = "no assignment among all " + std::to_string(1u << c);
    return v;
}

Verdict brute_quasi(const CrossingStructure& cs, int k) {
    const std::size_t m = cs.graph.m();
    if (m > 25) throw ResourceBoundError("brute_quasi handles at most 25 edges");
    if (k < 3) throw InputError("quasi-planarity needs k >= 3");
    Verdict v = verdict_for("quasi", k);
    std::set<std::pair<EdgeId, EdgeId>> crossing;
    for (const auto& x : cs.crossings) crossing.emplace(std::min(x.a, x.b), std::max(x.a, x.b));
    if (static_cast<std::size_t>(k) > m) return v;
    std::vector<EdgeId> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[i] = static_cast<EdgeId>(i);
    while (true) {
        bool all = true;
        for (int i = 0; i < k && all; ++i)
            for (int j = i + 1; j < k && all; ++j) all = crossing.count({pick[i], pick[j]}) > 0;
        if (all) {
            v.holds = false;
            v.reason = std::to_string(k) + " edges cross pairwise";
            v.edges = pick;
            return v;
        }
        int i = k - 1;
        while (i >= 0 && pick[i] == m - static_cast<std::size_t>(k - i)) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return v;
}

Integer convex_crossing_count(int n) {
    if (n < 4) return 0;
    Integer count = 0;
    // Every 4-subset of convex points contributes exactly one crossing pair.
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) ++count;
    return count;
}

}  // namespace bp::oracle
