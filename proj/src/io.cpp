#include "hilbertgeo/io.hpp"

#include "hilbertgeo/errors.hpp"
#include "hilbertgeo/hex_plane.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hilbertgeo::io {

namespace {

double number(const Json& j, const char* what) {
    if (!j.is_number()) {
        fail(ErrorCode::InvalidArgument, std::string(what) + " must be a number");
    }
    return j.get<double>();
}

Vec2 vec2(const Json& j, const char* what) {
    if (!j.is_array() || j.size() != 2) {
        fail(ErrorCode::InvalidArgument, std::string(what) + " must be [x, y]");
    }
    return Vec2(number(j[0], what), number(j[1], what));
}

std::vector<Vec2> vec2_list(const Json& j, const char* what) {
    if (!j.is_array()) {
        fail(ErrorCode::InvalidArgument, std::string(what) + " must be an array");
    }
    std::vector<Vec2> out;
    for (const Json& e : j) {
        out.push_back(vec2(e, what));
    }
    return out;
}

Json vec_json(const auto& v) {
    Json a = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        a.push_back(v[i]);
    }
    return a;
}

std::string format_number(double x) {
    if (!std::isfinite(x)) {
        return "null";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    std::string s(buf);
    if (s.find_first_of(".eEn") == std::string::npos) {
        s += ".0";
    }
    return s;
}

void write(std::ostringstream& os, const Json& j) {
    switch (j.type()) {
    case Json::value_t::object: {
        os << '{';
        bool first = true;
        for (const auto& [k, v] : j.items()) {
            if (!first) {
                os << ", ";
            }
            first = false;
            os << Json(k).dump() << ": ";
            write(os, v);
        }
        os << '}';
        break;
    }
    case Json::value_t::array: {
        os << '[';
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i > 0) {
                os << ", ";
            }
            write(os, j[i]);
        }
        os << ']';
        break;
    }
    case Json::value_t::number_float:
        os << format_number(j.get<double>());
        break;
    default:
        os << j.dump();
    }
}

std::string csv_cell(const Json& v) {
    if (v.is_number_float()) {
        return format_number(v.get<double>());
    }
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (s.find_first_of(",\"\n") == std::string::npos) {
            return s;
        }
        std::string q = "\"";
        for (char c : s) {
            q += c;
            if (c == '"') {
                q += '"';
            }
        }
        return q + "\"";
    }
    if (v.is_structured()) {
        std::ostringstream os;
        write(os, v);
        return csv_cell(Json(os.str()));
    }
    return v.dump();
}

}  // namespace

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        fail(ErrorCode::InvalidArgument, std::string("invalid JSON: ") + e.what());
    }
}

std::shared_ptr<const ConvexDomain> parse_domain(const Json& j) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
        fail(ErrorCode::InvalidArgument, "domain must be an object with a \"type\"");
    }
    const std::string type = j["type"].get<std::string>();
    if (type == "quadrant") {
        return std::make_shared<TriangleDomain>(TriangleDomain::quadrant());
    }
    if (type == "triangle") {
        const std::vector<ProjPoint> v = parse_points(j.value("vertices", Json()));
        if (v.size() != 3) {
            fail(ErrorCode::InvalidArgument, "triangle needs three vertices");
        }
        return std::make_shared<TriangleDomain>(v[0].coords(), v[1].coords(), v[2].coords());
    }
    if (type == "ellipse") {
        const Vec2 c = j.contains("center") ? vec2(j["center"], "center") : Vec2::Zero();
        Mat2 s = Mat2::Identity();
        if (j.contains("shape")) {
            const std::vector<Vec2> rows = vec2_list(j["shape"], "shape");
            if (rows.size() != 2) {
                fail(ErrorCode::InvalidArgument, "shape must be a 2x2 matrix");
            }
            s.row(0) = rows[0].transpose();
            s.row(1) = rows[1].transpose();
        }
        return std::make_shared<EllipseDomain>(c, s);
    }
    if (type == "polygon") {
        return std::make_shared<PolygonDomain>(vec2_list(j.value("vertices", Json()), "vertices"));
    }
    fail(ErrorCode::InvalidArgument, "unknown domain type '" + type + "'");
}

std::shared_ptr<const ConvexDomain> parse_domain_text(const std::string& text) {
    return parse_domain(parse_json(text));
}

Json domain_to_json(const ConvexDomain& dom) {
    Json j;
    j["type"] = std::string(dom.kind());
    if (const auto* t = dynamic_cast<const TriangleDomain*>(&dom)) {
        if (t->is_standard_quadrant()) {
            j["type"] = "quadrant";
            return j;
        }
        Json v = Json::array();
        for (int i = 0; i < 3; ++i) {
            v.push_back(vec_json(t->vertex(i)));
        }
        j["vertices"] = v;
    } else if (const auto* e = dynamic_cast<const EllipseDomain*>(&dom)) {
        j["center"] = vec_json(e->center());
        j["shape"] = Json::array({vec_json(Vec2(e->shape().row(0).transpose())),
                                  vec_json(Vec2(e->shape().row(1).transpose()))});
    } else if (const auto* p = dynamic_cast<const PolygonDomain*>(&dom)) {
        Json v = Json::array();
        for (const Vec2& x : p->vertices()) {
            v.push_back(vec_json(x));
        }
        j["vertices"] = v;
    }
    return j;
}

ProjPoint parse_point(const Json& j) {
    if (!j.is_array() || (j.size() != 2 && j.size() != 3)) {
        fail(ErrorCode::InvalidArgument, "point must be [x, y] or [x, y, z]");
    }
    if (j.size() == 2) {
        return ProjPoint::from_affine(vec2(j, "point"));
    }
    return ProjPoint(number(j[0], "point"), number(j[1], "point"), number(j[2], "point"));
}

std::vector<ProjPoint> parse_points(const Json& j) {
    if (!j.is_array()) {
        fail(ErrorCode::InvalidArgument, "points must be an array");
    }
    std::vector<ProjPoint> out;
    for (const Json& e : j) {
        out.push_back(parse_point(e));
    }
    return out;
}

Vec2 parse_vec2(const std::string& text) {
    if (!text.empty() && text.front() == '[') {
        return vec2(parse_json(text), "point");
    }
    const std::vector<double> v = parse_real_list(text);
    if (v.size() != 2) {
        fail(ErrorCode::InvalidArgument, "expected x,y");
    }
    return Vec2(v[0], v[1]);
}

Region parse_region(const Json& j, const ConvexDomain& dom) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
        fail(ErrorCode::InvalidArgument, "region must be an object with a \"type\"");
    }
    const std::string type = j["type"].get<std::string>();
    if (type == "polygon") {
        return PolygonRegion{parse_points(j.value("vertices", Json()))};
    }
    if (type == "hex-circle") {
        const auto* tri = dynamic_cast<const TriangleDomain*>(&dom);
        if (tri == nullptr) {
            fail(ErrorCode::InvalidArgument, "hex-circle regions need a triangle domain");
        }
        const Vec2 c = j.contains("center") ? vec2(j["center"], "center") : Vec2::Zero();
        return hex_circle_region(*tri, number(j.value("radius", Json()), "radius"),
                                 HexVector{c.x(), c.y()});
    }
    fail(ErrorCode::InvalidArgument, "unknown region type '" + type + "'");
}

std::vector<double> parse_real_list(const std::string& text) {
    if (!text.empty() && text.front() == '@') {
        std::ifstream in(text.substr(1));
        if (!in) {
            fail(ErrorCode::IoError, "cannot read " + text.substr(1));
        }
        std::stringstream ss;
        ss << in.rdbuf();
        Json j = parse_json(ss.str());
        if (j.is_object() && j.contains("tau")) {
            j = j["tau"];
        }
        if (!j.is_array()) {
            fail(ErrorCode::InvalidArgument, "expected a JSON array of numbers");
        }
        std::vector<double> out;
        for (const Json& e : j) {
            out.push_back(number(e, "list entry"));
        }
        return out;
    }
    if (!text.empty() && text.front() == '[') {
        std::vector<double> out;
        for (const Json& e : parse_json(text)) {
            out.push_back(number(e, "list entry"));
        }
        return out;
    }
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) {
            ++used;
        }
        if (used == 0 || used != item.size()) {
            fail(ErrorCode::InvalidArgument, "not a number: '" + item + "'");
        }
        out.push_back(v);
    }
    if (!text.empty() && text.back() == ',') {
        fail(ErrorCode::InvalidArgument, "trailing comma in list");
    }
    return out;
}

std::string dump(const Json& j) {
    std::ostringstream os;
    write(os, j);
    return os.str();
}

std::string to_csv(const std::vector<Json>& rows) {
    if (rows.empty()) {
        return {};
    }
    std::string out;
    bool first = true;
    for (const auto& [k, v] : rows.front().items()) {
        out += (first ? "" : ",") + csv_cell(Json(k));
        first = false;
    }
    out += '\n';
    for (const Json& row : rows) {
        first = true;
        for (const auto& [k, v] : rows.front().items()) {
            out += (first ? "" : ",") + (row.contains(k) ? csv_cell(row[k]) : std::string());
            first = false;
        }
        out += '\n';
    }
    return out;
}

}  // namespace hilbertgeo::io
