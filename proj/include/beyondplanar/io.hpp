#pragma once

#include <string>

#include "beyondplanar/certificates.hpp"
#include "beyondplanar/drawing.hpp"
#include "beyondplanar/graph.hpp"
#include "beyondplanar/reduction.hpp"
#include "beyondplanar/verdict.hpp"

// JSON text formats. Keys are written in a fixed order, rationals as "p/q" or
// integer strings, so writing a parsed document reproduces it byte for byte.
// Parsers throw InputError on malformed documents.
namespace bp::io {

std::string write(const Graph& g);
std::string write(const Drawing& d);
std::string write(const CrossingStructure& cs);
std::string write(const Verdict& v);
std::string write(const cert::Certificate& c);
std::string write(const red::Instance& inst);
std::string write(const red::Witness& w);

Graph read_graph(const std::string& text);
Drawing read_drawing(const std::string& text);
CrossingStructure read_crossings(const std::string& text);
Verdict read_verdict(const std::string& text);
cert::Certificate read_certificate(const std::string& text);
red::Instance read_instance(const std::string& text);
red::Witness read_witness(const std::string& text);

// The "kind" member every document carries: "graph", "drawing", ...
std::string kind_of(const std::string& text);

}  // namespace bp::io
