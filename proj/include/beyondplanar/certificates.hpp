#pragma once

#include <string>
#include <vector>

#include "beyondplanar/graph.hpp"
#include "beyondplanar/rational.hpp"

namespace bp::cert {

Rational crossing_lemma_lb(const Integer& n, const Integer& m);

struct HararyHill {
    Integer value;
    bool proven = false;
};
HararyHill harary_hill(int n);

// Proven lower bound on cr(K_n); 0 for n < 5.
Integer kn_lb(int n);

// Lower bound on cr(CCC^d), clamped at 0.
Rational ccc_lb(int d);

struct Subject {
    std::string description;
    Integer n;
    Integer m;
    int max_degree = 0;
    std::string family;

    friend bool operator==(const Subject&, const Subject&) = default;
};

struct Bound {
    std::string name;
    Rational value;
    std::string provenance;

    friend bool operator==(const Bound&, const Bound&) = default;
};

struct Conclusion {
    std::string excluded;  // e.g. "3-gap-planar"
    std::string rule;      // "a", "b", "c" or "d"
    std::string implication;
    std::string inequality;  // the arithmetic fact, e.g. "536576/5 > 101376"

    friend bool operator==(const Conclusion&, const Conclusion&) = default;
};

struct Certificate {
    Subject subject;
    Bound bound;
    int k = 1;
    Rational threshold;  // k * m
    Rational ratio;      // bound / m
    std::vector<Conclusion> conclusions;
    std::vector<std::string> warnings;
    std::string status;  // "conclusive" or "inconclusive"

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

// Applies the exclusion rules to a subject with crossing number at least lb.
Certificate exclude(const Subject& subject, const Bound& lb, int k);

// Re-evaluates every conclusion; false if any inequality fails.
bool audit(const Certificate& c);

// Subjects and bounds for the named instances.
Subject subdivided_complete(int n, int s);
Bound kn_bound(int n);
Subject ccc_subject(int d);
Bound ccc_bound(int d);
Subject graph_subject(const Graph& g);
Bound graph_bound(const Graph& g);

// Maximum edge count of a class at n vertices; classes: planar, 1-planar,
// 1-gap-planar, fan-crossing, fan-crossing-free, quasi-planar, RAC.
Rational density(const std::string& cls, const Integer& n);
const std::vector<std::string>& density_classes();

}  // namespace bp::cert
