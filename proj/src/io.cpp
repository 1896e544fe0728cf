#include "concyclic/io.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

namespace concyclic::io {

using nlohmann::json;

InputDocument parse_input(const json& doc) {
    if (!doc.is_object()) {
        raise(errc::parse_error, "input document must be a JSON object");
    }
    InputDocument in;
    int sources = 0;
    if (doc.contains("points")) {
        ++sources;
        for (const auto& p : doc.at("points")) {
            if (!p.is_array() || p.size() != 2) {
                raise(errc::parse_error, "each point must be an [x, y] pair");
            }
            in.points.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
        }
    }
    if (doc.contains("angles_deg")) {
        ++sources;
        in.angles_deg = doc.at("angles_deg").get<std::vector<double>>();
    }
    if (doc.contains("angles_turns")) {
        ++sources;
        for (const auto& s : doc.at("angles_turns")) {
            in.angles_turns.push_back(parse_rational(s.get<std::string>()));
        }
    }
    if (sources != 1) {
        raise(errc::parse_error,
              "need exactly one of points, angles_deg, angles_turns");
    }
    if (doc.contains("mode")) {
        in.mode = doc.at("mode").get<std::string>();
        if (in.mode != "exact" && in.mode != "float") {
            raise(errc::parse_error, "mode must be \"exact\" or \"float\"");
        }
    }
    if (doc.contains("labels")) {
        in.labels = doc.at("labels").get<std::vector<int>>();
    }
    return in;
}

InputDocument parse_input_text(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) {
        raise(errc::parse_error, "malformed JSON input");
    }
    return parse_input(doc);
}

CirclePointSet build_point_set(const InputDocument& doc) {
    if (doc.has_points()) {
        if (doc.mode == "exact") {
            raise(errc::parse_error, "exact mode requires angles_turns input");
        }
        return CirclePointSet::fit_circle(doc.points);
    }
    if (!doc.angles_deg.empty()) {
        if (doc.mode == "exact") {
            raise(errc::parse_error, "exact mode requires angles_turns input");
        }
        std::vector<double> radians;
        radians.reserve(doc.angles_deg.size());
        for (double d : doc.angles_deg) {
            radians.push_back(d * std::numbers::pi / 180.0);
        }
        return CirclePointSet::from_radians(std::move(radians));
    }
    if (doc.mode == "float") {
        std::vector<double> radians;
        radians.reserve(doc.angles_turns.size());
        for (const auto& t : doc.angles_turns) {
            radians.push_back(static_cast<double>(t) * 2.0 * std::numbers::pi);
        }
        return CirclePointSet::from_radians(std::move(radians));
    }
    return CirclePointSet::from_turns(doc.angles_turns);
}

std::vector<int> effective_labels(const InputDocument& doc, const CirclePointSet& points) {
    std::vector<int> labels(points.size());
    for (int i = 0; i < points.size(); ++i) {
        int orig = points.label(i);
        if (!doc.labels.empty()) {
            if (doc.labels.size() != static_cast<std::size_t>(points.size())) {
                raise(errc::parse_error, "labels length must match point count");
            }
            labels[i] = doc.labels[orig];
        } else {
            labels[i] = orig;
        }
    }
    return labels;
}

json input_to_json(const InputDocument& doc) {
    json out = json::object();
    if (doc.has_points()) {
        json pts = json::array();
        for (const auto& p : doc.points) {
            pts.push_back({p.x, p.y});
        }
        out["points"] = std::move(pts);
    }
    if (!doc.angles_deg.empty()) {
        out["angles_deg"] = doc.angles_deg;
    }
    if (!doc.angles_turns.empty()) {
        json turns = json::array();
        for (const auto& t : doc.angles_turns) {
            turns.push_back(format_rational(t));
        }
        out["angles_turns"] = std::move(turns);
    }
    if (!doc.mode.empty()) {
        out["mode"] = doc.mode;
    }
    if (!doc.labels.empty()) {
        out["labels"] = doc.labels;
    }
    return out;
}

json triangulation_to_json(const CirclePointSet& points, const Triangulation& t,
                           const std::vector<int>& labels) {
    json out = json::object();
    json diags = json::array();
    std::vector<double> lengths;
    for (auto [i, j] : t.diagonals) {
        diags.push_back({labels[i], labels[j]});
        lengths.push_back(chord_length(points.arc_between(i, j), points.radius()));
    }
    out["diagonals"] = std::move(diags);
    std::sort(lengths.begin(), lengths.end());
    out["sorted_diagonal_lengths"] = lengths;
    json ears = json::array();
    for (auto [i, j] : ears_of(t)) {
        ears.push_back({labels[i], labels[j]});
    }
    out["ears"] = std::move(ears);
    auto dual = dual_path(t);
    json path = json::array();
    for (const auto& tri : dual.triangles) {
        path.push_back({labels[tri[0]], labels[tri[1]], labels[tri[2]]});
    }
    out["dual_path"] = std::move(path);
    return out;
}

json error_to_json(const std::string& kind, const std::string& message) {
    return json{{"error", kind}, {"message", message}};
}

std::string svg_document(const CirclePointSet& points, const Triangulation& t) {
    const double r = points.radius();
    const Point c = points.center();
    const double margin = 0.08 * r;
    const double side = 2.0 * (r + margin);
    std::ostringstream svg;
    svg.precision(8);
    auto x = [&](const Point& p) { return p.x - (c.x - r - margin); };
    auto y = [&](const Point& p) { return (c.y + r + margin) - p.y; }; // flip y
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
        << "viewBox=\"0 0 " << side << " " << side << "\">\n";
    svg << "  <circle class=\"outline\" cx=\"" << x({c.x, c.y}) << "\" cy=\"" << y({c.x, c.y})
        << "\" r=\"" << r << "\" fill=\"none\" stroke=\"#999\" stroke-width=\"" << 0.004 * side
        << "\"/>\n";
    const int n = points.size();
    auto line = [&](int i, int j, const char* cls, const char* color, double w) {
        Point a = points.point(i), b = points.point(j);
        svg << "  <line class=\"" << cls << "\" x1=\"" << x(a) << "\" y1=\"" << y(a)
            << "\" x2=\"" << x(b) << "\" y2=\"" << y(b) << "\" stroke=\"" << color
            << "\" stroke-width=\"" << w * side << "\"/>\n";
    };
    for (int i = 0; i < n; ++i) {
        line(i, (i + 1) % n, "chord", "#444", 0.005);
    }
    for (auto [i, j] : t.diagonals) {
        line(i, j, "diagonal", "#c33", 0.006);
    }
    for (int i = 0; i < n; ++i) {
        Point p = points.point(i);
        svg << "  <circle class=\"point\" cx=\"" << x(p) << "\" cy=\"" << y(p) << "\" r=\""
            << 0.01 * side << "\" fill=\"#06c\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace concyclic::io
