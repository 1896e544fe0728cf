#pragma once

#include "concyclic/circle_model.hpp"
#include "concyclic/triangulation.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>
#include <vector>

namespace concyclic::io {

/// One input document holds exactly one of `points`, `angles_deg` or
/// `angles_turns`, plus optional `mode` ("exact"|"float") and `labels`.
struct InputDocument {
    std::vector<Point> points;
    std::vector<double> angles_deg;
    std::vector<Rational> angles_turns;
    std::string mode; // "", "exact" or "float"
    std::vector<int> labels;

    bool has_points() const { return !points.empty(); }
};

InputDocument parse_input(const nlohmann::json& doc);
InputDocument parse_input_text(const std::string& text);

/// Builds the point set an input document describes. Angle inputs live
/// on the unit circle; Cartesian inputs go through circle fitting.
CirclePointSet build_point_set(const InputDocument& doc);

/// Effective per-point labels: doc.labels when given, else the original
/// input order. Indexed by sorted position.
std::vector<int> effective_labels(const InputDocument& doc, const CirclePointSet& points);

nlohmann::json input_to_json(const InputDocument& doc);

nlohmann::json triangulation_to_json(const CirclePointSet& points,
                                     const Triangulation& t,
                                     const std::vector<int>& labels);

nlohmann::json error_to_json(const std::string& kind, const std::string& message);

/// SVG 1.1 drawing: circle outline, n point marks, n chords, n-3
/// diagonals (classes "point", "chord", "diagonal").
std::string svg_document(const CirclePointSet& points, const Triangulation& t);

} // namespace concyclic::io
