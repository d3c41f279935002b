#include "beyondplanar/io.hpp"

#include <json.hpp>

#include "beyondplanar/errors.hpp"

namespace bp::io {

namespace {

using Json = nlohmann::ordered_json;

std::string text(const Json& j) { return j.dump(2) + "\n"; }

Json parse(const std::string& s, const std::string& kind) {
    Json j;
    try {
        j = Json::parse(s);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw InputError("JSON document lacks a \"kind\" member");
    if (j["kind"].get<std::string>() != kind)
        throw InputError("expected a " + kind + " document, got " + j["kind"].get<std::string>());
    return j;
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

long integer(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
    return j.get<long>();
}

std::string string(const Json& j, const char* what) {
    if (!j.is_string()) throw InputError(std::string(what) + " must be a string");
    return j.get<std::string>();
}

Json rational(const Rational& r) { return to_string(r); }
Rational rational(const Json& j) { return parse_rational(string(j, "rational")); }

Json point(const Point& p) { return Json::array({rational(p.x), rational(p.y)}); }
Point point(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw InputError("point must be a pair of rationals");
    return Point(rational(j[0]), rational(j[1]));
}

Json optional_point(const std::optional<Point>& p) { return p ? point(*p) : Json(nullptr); }
std::optional<Point> optional_point(const Json& j) {
    if (j.is_null()) return std::nullopt;
    return point(j);
}

Json integer_string(const Integer& z) { return z.get_str(); }
Integer integer_string(const Json& j) {
    std::string s = string(j, "integer");
    Integer z;
    if (s.empty() || z.set_str(s, 10) != 0) throw InputError("malformed integer '" + s + "'");
    return z;
}

void fill_graph(Json& j, const Graph& g) {
    j["n"] = g.n();
    j["family"] = g.family();
    Json edges = Json::array();
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
    j["edges"] = edges;
    Json labels = Json::array();
    for (const auto& [e, l] : g.labels()) labels.push_back({e.u, e.v, l});
    j["labels"] = labels;
    j["rotation"] = g.rotation() ? Json(*g.rotation()) : Json(nullptr);
}

Json graph_json(const Graph& g) {
    Json j;
    fill_graph(j, g);
    return j;
}

Graph graph_from(const Json& j) {
    long n = integer(field(j, "n"), "n");
    if (n < 0 || n > 10'000'000) throw InputError("vertex count out of range");
    std::vector<std::pair<Vertex, Vertex>> edges;
    const Json& ej = field(j, "edges");
    if (!ej.is_array()) throw InputError("edges must be an array");
    for (const auto& e : ej) {
        if (!e.is_array() || e.size() != 2) throw InputError("edge must be a pair");
        edges.emplace_back(static_cast<Vertex>(integer(e[0], "edge endpoint")),
                           static_cast<Vertex>(integer(e[1], "edge endpoint")));
    }
    Graph g(static_cast<int>(n), std::move(edges));
    std::map<Edge, std::string> labels;
    if (j.contains("labels")) {
        for (const auto& l : j["labels"]) {
            if (!l.is_array() || l.size() != 3) throw InputError("label must be [u, v, text]");
            Vertex a = static_cast<Vertex>(integer(l[0], "label endpoint"));
            Vertex b = static_cast<Vertex>(integer(l[1], "label endpoint"));
            g.edge_id(a, b);
            labels[canonical(a, b)] = string(l[2], "label");
        }
        g = g.with_labels(std::move(labels));
    }
    if (j.contains("rotation") && !j["rotation"].is_null()) {
        Rotation rot;
        for (const auto& r : j["rotation"]) {
            std::vector<Vertex> order;
            if (!r.is_array()) throw InputError("rotation entry must be an array");
            for (const auto& v : r) order.push_back(static_cast<Vertex>(integer(v, "rotation vertex")));
            rot.push_back(std::move(order));
        }
        g = g.with_rotation(std::move(rot));
    }
    if (j.contains("family")) g = g.with_family(string(j["family"], "family"));
    return g;
}

Json crossing_json(const Crossing& c) {
    Json j;
    j["a"] = c.a;
    j["b"] = c.b;
    j["ta"] = rational(c.ta);
    j["tb"] = rational(c.tb);
    j["at"] = optional_point(c.at);
    return j;
}

Json verdict_json(const Verdict& v) {
    Json j;
    j["kind"] = "verdict";
    j["predicate"] = v.predicate;
    j["k"] = v.k ? Json(*v.k) : Json(nullptr);
    j["holds"] = v.holds;
    j["reason"] = v.reason;
    j["edges"] = v.edges;
    if (v.assignment) {
        Json a;
        a["k"] = v.assignment->k;
        a["owner"] = v.assignment->owner;
        j["assignment"] = a;
    } else {
        j["assignment"] = nullptr;
    }
    j["at"] = optional_point(v.at);
    j["dir_a"] = optional_point(v.dir_a);
    j["dir_b"] = optional_point(v.dir_b);
    return j;
}

std::vector<EdgeId> edge_list(const Json& j) {
    std::vector<EdgeId> out;
    if (!j.is_array()) throw InputError("edge list must be an array");
    for (const auto& e : j) {
        long x = integer(e, "edge id");
        if (x < 0) throw InputError("negative edge id");
        out.push_back(static_cast<EdgeId>(x));
    }
    return out;
}

}  // namespace

std::string write(const Graph& g) {
    Json j;
    j["kind"] = "graph";
    fill_graph(j, g);
    return text(j);
}

Graph read_graph(const std::string& s) { return graph_from(parse(s, "graph")); }

std::string write(const Drawing& d) {
    Json j;
    j["kind"] = "drawing";
    j["graph"] = graph_json(d.graph);
    Json pos = Json::array();
    for (const auto& p : d.positions) pos.push_back(point(p));
    j["positions"] = pos;
    Json bends = Json::array();
    for (const auto& b : d.bends) {
        Json pts = Json::array();
        for (const auto& p : b) pts.push_back(point(p));
        bends.push_back(pts);
    }
    j["bends"] = bends;
    return text(j);
}

Drawing read_drawing(const std::string& s) {
    Json j = parse(s, "drawing");
    Drawing d;
    d.graph = graph_from(field(j, "graph"));
    for (const auto& p : field(j, "positions")) d.positions.push_back(point(p));
    for (const auto& b : field(j, "bends")) {
        std::vector<Point> pts;
        if (!b.is_array()) throw InputError("bends entry must be an array");
        for (const auto& p : b) pts.push_back(point(p));
        d.bends.push_back(std::move(pts));
    }
    validate_drawing(d);
    return d;
}

std::string write(const CrossingStructure& cs) {
    Json j;
    j["kind"] = "crossings";
    j["graph"] = graph_json(cs.graph);
    Json list = Json::array();
    for (const auto& c : cs.crossings) list.push_back(crossing_json(c));
    j["crossings"] = list;
    return text(j);
}

CrossingStructure read_crossings(const std::string& s) {
    Json j = parse(s, "crossings");
    Graph g = graph_from(field(j, "graph"));
    std::vector<Crossing> list;
    for (const auto& c : field(j, "crossings")) {
        Crossing x;
        long a = integer(field(c, "a"), "a");
        long b = integer(field(c, "b"), "b");
        if (a < 0 || b < 0 || a >= static_cast<long>(g.m()) || b >= static_cast<long>(g.m()))
            throw InputError("crossing edge id out of range");
        x.a = static_cast<EdgeId>(a);
        x.b = static_cast<EdgeId>(b);
        x.ta = rational(field(c, "ta"));
        x.tb = rational(field(c, "tb"));
        x.at = c.contains("at") ? optional_point(c["at"]) : std::nullopt;
        list.push_back(x);
    }
    return make_crossing_structure(std::move(g), std::move(list));
}

std::string write(const Verdict& v) { return text(verdict_json(v)); }

Verdict read_verdict(const std::string& s) {
    Json j = parse(s, "verdict");
    Verdict v;
    v.predicate = string(field(j, "predicate"), "predicate");
    if (!field(j, "k").is_null()) v.k = static_cast<int>(integer(j["k"], "k"));
    if (!field(j, "holds").is_boolean()) throw InputError("holds must be a boolean");
    v.holds = j["holds"].get<bool>();
    v.reason = string(field(j, "reason"), "reason");
    v.edges = edge_list(field(j, "edges"));
    if (!field(j, "assignment").is_null()) {
        GapAssignment a;
        a.k = static_cast<int>(integer(field(j["assignment"], "k"), "k"));
        a.owner = edge_list(field(j["assignment"], "owner"));
        v.assignment = a;
    }
    v.at = optional_point(field(j, "at"));
    v.dir_a = optional_point(field(j, "dir_a"));
    v.dir_b = optional_point(field(j, "dir_b"));
    return v;
}

std::string write(const cert::Certificate& c) {
    Json j;
    j["kind"] = "certificate";
    Json subject;
    subject["description"] = c.subject.description;
    subject["n"] = integer_string(c.subject.n);
    subject["m"] = integer_string(c.subject.m);
    subject["max_degree"] = c.subject.max_degree;
    subject["family"] = c.subject.family;
    j["subject"] = subject;
    Json bound;
    bound["name"] = c.bound.name;
    bound["value"] = rational(c.bound.value);
    bound["provenance"] = c.bound.provenance;
    j["bound"] = bound;
    j["k"] = c.k;
    j["threshold"] = rational(c.threshold);
    j["ratio"] = rational(c.ratio);
    Json conclusions = Json::array();
    for (const auto& x : c.conclusions) {
        Json cj;
        cj["excluded"] = x.excluded;
        cj["rule"] = x.rule;
        cj["implication"] = x.implication;
        cj["inequality"] = x.inequality;
        conclusions.push_back(cj);
    }
    j["conclusions"] = conclusions;
    j["warnings"] = c.warnings;
    j["status"] = c.status;
    return text(j);
}

cert::Certificate read_certificate(const std::string& s) {
    Json j = parse(s, "certificate");
    cert::Certificate c;
    const Json& sj = field(j, "subject");
    c.subject.description = string(field(sj, "description"), "description");
    c.subject.n = integer_string(field(sj, "n"));
    c.subject.m = integer_string(field(sj, "m"));
    c.subject.max_degree = static_cast<int>(integer(field(sj, "max_degree"), "max_degree"));
    c.subject.family = string(field(sj, "family"), "family");
    const Json& bj = field(j, "bound");
    c.bound.name = string(field(bj, "name"), "name");
    c.bound.value = rational(field(bj, "value"));
    c.bound.provenance = string(field(bj, "provenance"), "provenance");
    c.k = static_cast<int>(integer(field(j, "k"), "k"));
    c.threshold = rational(field(j, "threshold"));
    c.ratio = rational(field(j, "ratio"));
    for (const auto& x : field(j, "conclusions"))
        c.conclusions.push_back({string(field(x, "excluded"), "excluded"), string(field(x, "rule"), "rule"),
                                 string(field(x, "implication"), "implication"),
                                 string(field(x, "inequality"), "inequality")});
    for (const auto& w : field(j, "warnings")) c.warnings.push_back(string(w, "warning"));
    c.status = string(field(j, "status"), "status");
    return c;
}

std::string write(const red::Instance& inst) {
    Json j;
    j["kind"] = "instance";
    j["A"] = inst.A;
    j["B"] = inst.B;
    return text(j);
}

red::Instance read_instance(const std::string& s) {
    Json j;
    try {
        j = Json::parse(s);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    if (j.contains("kind") && j["kind"] != "instance") throw InputError("expected an instance document");
    std::vector<long> A;
    const Json& aj = field(j, "A");
    if (!aj.is_array()) throw InputError("A must be an array");
    for (const auto& a : aj) A.push_back(integer(a, "element of A"));
    return red::validate_instance(A, integer(field(j, "B"), "B"));
}

std::string write(const red::Witness& w) {
    Json j;
    j["kind"] = "witness";
    j["triples"] = w.triples;
    return text(j);
}

red::Witness read_witness(const std::string& s) {
    Json j;
    try {
        j = Json::parse(s);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    if (j.contains("kind") && j["kind"] != "witness") throw InputError("expected a witness document");
    red::Witness w;
    for (const auto& t : field(j, "triples")) {
        if (!t.is_array() || t.size() != 3) throw InputError("triple must have three indices");
        w.triples.push_back({static_cast<int>(integer(t[0], "index")), static_cast<int>(integer(t[1], "index")),
                             static_cast<int>(integer(t[2], "index"))});
    }
    return w;
}

std::string kind_of(const std::string& s) {
    try {
        Json j = Json::parse(s);
        if (j.is_object() && j.contains("kind") && j["kind"].is_string()) return j["kind"].get<std::string>();
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    throw InputError("JSON document lacks a \"kind\" member");
}

}  // namespace bp::io
