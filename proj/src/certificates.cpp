#include "beyondplanar/certificates.hpp"

#include "beyondplanar/errors.hpp"

namespace bp::cert {

namespace {

Integer binom4(const Integer& n) {
    if (n < 4) return 0;
    return n * (n - 1) * (n - 2) * (n - 3) / 24;
}

Integer floor_div(const Integer& a, long b) {
    Integer q;
    mpz_fdiv_q_ui(q.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(b));
    return q;
}

Integer ceil_of(const Rational& r) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Integer pow_int(long base, unsigned long e) {
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), e);
    return out;
}

std::string str(const Rational& r) { return to_string(r); }
std::string str(const Integer& z) { return z.get_str(); }

}  // namespace

Rational crossing_lemma_lb(const Integer& n, const Integer& m) {
    if (n < 1) throw InputError("crossing lemma needs n >= 1");
    if (100 * m >= 695 * n) return ratio(m * m * m, 29 * n * n);
    Integer euler = m - 3 * n + 6;
    return euler > 0 ? Rational(euler) : Rational(0);
}

HararyHill harary_hill(int n) {
    if (n < 1) throw InputError("Harary-Hill needs n >= 1");
    Integer z(n);
    Integer v = floor_div(z, 2) * floor_div(z - 1, 2) * floor_div(z - 2, 2) * floor_div(z - 3, 2) / 4;
    if (v < 0) v = 0;
    return {v, n <= 12};
}

Integer kn_lb(int n) {
    if (n < 5) return 0;
    Integer best = ceil_of(crossing_lemma_lb(n, Integer(n) * (n - 1) / 2));
    if (n <= 12) best = std::max(best, harary_hill(n).value);
    else best = std::max(best, ceil_of(ratio(150 * binom4(n), 495)));
    return best;
}

Rational ccc_lb(int d) {
    if (d < 1) throw InputError("ccc bound needs d >= 1");
    Rational v = ratio(pow_int(4, static_cast<unsigned long>(d)), 20) -
                 Rational((9 * d + 1) * pow_int(2, static_cast<unsigned long>(d - 1)));
    return v > 0 ? v : Rational(0);
}

const std::vector<std::string>& density_classes() {
    static const std::vector<std::string> classes{"planar",         "1-planar",          "1-gap-planar", "fan-crossing",
                                                  "fan-crossing-free", "quasi-planar", "RAC"};
    return classes;
}

Rational density(const std::string& cls, const Integer& n) {
    if (cls == "planar") return Rational(3 * n - 6);
    if (cls == "1-planar" || cls == "fan-crossing-free" || cls == "RAC") return Rational(4 * n - 8);
    if (cls == "1-gap-planar" || cls == "fan-crossing") return Rational(5 * n - 10);
    if (cls == "quasi-planar") return ratio(13 * n - 40, 2);
    throw InputError("no density for class " + cls);
}

Certificate exclude(const Subject& subject, const Bound& lb, int k) {
    if (k < 1) throw InputError("certificates need k >= 1");
    if (subject.m < 1) throw InputError("certificate subject needs at least one edge");
    Certificate c;
    c.subject = subject;
    c.bound = lb;
    c.k = k;
    c.threshold = Rational(k * subject.m);
    c.ratio = lb.value / Rational(subject.m);
    std::string ks = std::to_string(k);
    std::string k2 = std::to_string(2 * k);

    if (lb.value > c.threshold) {
        std::string ineq = str(lb.value) + " > " + str(c.threshold);
        c.conclusions.push_back({ks + "-gap-planar", "a",
                                 "a " + ks + "-gap-planar drawing has at most k*m crossings; cr >= lb > k*m", ineq});
        c.conclusions.push_back({k2 + "-planar", "b", "every " + k2 + "-planar drawing is " + ks + "-gap-planar",
                                 ineq});
    }
    Rational m_only(subject.m);
    if (subject.max_degree <= 3 && lb.value > m_only) {
        c.conclusions.push_back({"fan-crossing", "c",
                                 "cr >= lb > m rules out 1-gap-planar and hence 2-planar; a fan-crossing graph of "
                                 "maximum degree 3 is 2-planar",
                                 str(lb.value) + " > " + str(m_only)});
    }
    if (subject.n >= 3) {
        for (const auto& cls : density_classes()) {
            Rational cap = density(cls, subject.n);
            if (Rational(subject.m) <= cap) continue;
            c.conclusions.push_back({cls, "d", "n-vertex " + cls + " graphs have at most " + str(cap) + " edges",
                                     str(subject.m) + " > " + str(cap)});
        }
        c.warnings.push_back("RAC density uses 4n-8; a bound of 4n-10 is also stated for RAC graphs");
    }
    if (lb.provenance.find("imported") != std::string::npos)
        c.warnings.push_back("bound " + lb.name + " is " + lb.provenance);
    c.status = c.conclusions.empty() ? "inconclusive" : "conclusive";
    return c;
}

bool audit(const Certificate& c) {
    Rational m(c.subject.m);
    for (const auto& x : c.conclusions) {
        if (x.rule == "a" || x.rule == "b") {
            if (!(c.bound.value > Rational(c.k) * m)) return false;
        } else if (x.rule == "c") {
            if (!(c.subject.max_degree <= 3 && c.bound.value > m)) return false;
        } else if (x.rule == "d") {
            if (!(m > density(x.excluded, c.subject.n))) return false;
        } else {
            return false;
        }
    }
    return c.status == (c.conclusions.empty() ? "inconclusive" : "conclusive");
}

Subject subdivided_complete(int n, int s) {
    if (n < 1 || s < 0) throw InputError("invalid subdivided complete graph");
    Integer kn_m = Integer(n) * (n - 1) / 2;
    Subject sub;
    sub.n = Integer(n) + kn_m * s;
    sub.m = kn_m * (s + 1);
    sub.max_degree = s > 0 ? std::max(n - 1, 2) : n - 1;
    sub.family = s == 0 ? "complete " + std::to_string(n) : "subdivide(" + std::to_string(s) + ") of complete " + std::to_string(n);
    sub.description = s == 0 ? "K" + std::to_string(n) : "sigma" + std::to_string(s) + "(K" + std::to_string(n) + ")";
    return sub;
}

Bound kn_bound(int n) {
    Bound b;
    b.name = "cr(K" + std::to_string(n) + ")";
    b.value = Rational(kn_lb(n));
    if (n <= 12) b.provenance = "Harary-Hill value, proven for n <= 12";
    else if (b.value == Rational(ceil_of(crossing_lemma_lb(n, Integer(n) * (n - 1) / 2))))
        b.provenance = "crossing lemma, c = 1/29";
    else b.provenance = "imported standard bound: C(n,4) scaling of cr(K12) = 150";
    return b;
}

Subject ccc_subject(int d) {
    if (d < 3) throw InputError("ccc needs d >= 3");
    Subject s;
    Integer cube = pow_int(2, static_cast<unsigned long>(d));
    s.n = d * cube;
    s.m = 3 * d * cube / 2;
    s.max_degree = 3;
    s.family = "ccc " + std::to_string(d);
    s.description = "CCC^" + std::to_string(d);
    return s;
}

Bound ccc_bound(int d) {
    return {"cr(CCC^" + std::to_string(d) + ")", ccc_lb(d), "cube-connected cycle bound 4^d/20 - (9d+1)2^(d-1)"};
}

Subject graph_subject(const Graph& g) {
    Subject s;
    s.n = g.n();
    s.m = static_cast<unsigned long>(g.m());
    s.max_degree = g.max_degree();
    s.family = g.family();
    s.description = g.family().empty() ? "graph" : g.family();
    return s;
}

Bound graph_bound(const Graph& g) {
    Integer n = g.n();
    Integer m = static_cast<unsigned long>(g.m());
    if (g.n() >= 5 && m == n * (n - 1) / 2) return kn_bound(g.n());
    Bound b;
    b.name = "cr(G)";
    b.value = crossing_lemma_lb(n, m);
    b.provenance = 100 * m >= 695 * n ? "crossing lemma, c = 1/29"
                                      : "imported standard bound: Euler bound m - 3n + 6";
    return b;
}

}  // namespace bp::cert
