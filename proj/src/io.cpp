#include "dotpairs/io.hpp"

#include <fstream>
#include <sstream>

namespace dotpairs {

nlohmann::ordered_json point_set_to_json(const PointSet& points) {
    nlohmann::ordered_json j;
    if (points.field().is_rational()) {
        j["field"] = {{"kind", "rational"}};
    } else {
        j["field"] = {{"kind", "prime"}, {"p", points.field().modulus()}};
    }
    j["dim"] = points.dim();
    j["label"] = points.label();
    nlohmann::ordered_json pts = nlohmann::ordered_json::array();
    for (const Point& p : points) {
        nlohmann::ordered_json coords = nlohmann::ordered_json::array();
        for (int i = 0; i < p.dim(); ++i) coords.push_back(p[i].str());
        pts.push_back(std::move(coords));
    }
    j["points"] = std::move(pts);
    return j;
}

PointSet point_set_from_json(const nlohmann::json& j) {
    try {
        const nlohmann::json& f = j.at("field");
        const std::string kind = f.at("kind").get<std::string>();
        FieldSpec field = FieldSpec::rationals();
        if (kind == "prime") {
            field = FieldSpec::prime_field(f.at("p").get<std::int64_t>());
        } else if (kind != "rational") {
            throw ParseError("unknown field kind '" + kind + "'");
        }
        const int dim = j.at("dim").get<int>();
        PointSet points(field, dim, j.value("label", std::string{}));
        for (const nlohmann::json& coords : j.at("points")) {
            std::vector<Scalar> values;
            values.reserve(coords.size());
            for (const nlohmann::json& c : coords) {
                values.push_back(parse_scalar(c.get<std::string>(), field));
            }
            points.add(Point(std::move(values)));
        }
        return points;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad point-set file: ") + e.what());
    }
}

void save_point_set(const PointSet& points, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    out << point_set_to_json(points).dump(2) << '\n';
}

PointSet load_point_set(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    return point_set_from_json(j);
}

namespace {

// Fixed-format doubles so CSV output is byte-stable across runs.
std::string fmt_double(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

} // namespace

nlohmann::ordered_json report_to_json(const BoundReport& r) {
    nlohmann::ordered_json j;
    j["bound_id"] = r.bound_id;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["rhs_exact"] = r.rhs_exact;
    j["ratio"] = r.ratio;
    j["verdict"] = to_string(r.verdict);
    j["n"] = r.n;
    j["d"] = r.d;
    j["field"] = r.field_label;
    j["s"] = r.s;
    j["t"] = r.t;
    j["seed"] = r.seed;
    j["trial"] = r.trial;
    j["note"] = r.note;
    return j;
}

std::string report_csv_header() {
    return "bound_id,n,d,field,s,t,lhs,rhs,ratio,verdict,seed,trial";
}

std::string report_csv_row(const BoundReport& r) {
    std::ostringstream os;
    os << r.bound_id << ',' << r.n << ',' << r.d << ',' << r.field_label << ',' << r.s << ','
       << r.t << ',' << r.lhs << ',' << fmt_double(r.rhs) << ',' << fmt_double(r.ratio) << ','
       << to_string(r.verdict) << ',' << r.seed << ',' << r.trial;
    return os.str();
}

} // namespace dotpairs
