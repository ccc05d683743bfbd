#include "conehull/serialize.hpp"

#include <fstream>

#include "conehull/errors.hpp"

namespace conehull {

using nlohmann::json;

namespace {

void require_schema(const json& j, const char* expected) {
    if (!j.contains("schema") || j.at("schema").get<std::string>() != expected)
        throw IoError(std::string("expected schema ") + expected);
}

} // namespace

json to_json(const Hull& h) {
    json facets = json::array();
    for (const auto& f : h.facets)
        facets.push_back({{"normal", f.normal}, {"offset", f.offset}, {"vertices", f.vertices}});
    return {{"schema", hull_schema},
            {"dim", h.dim},
            {"vertices", h.vertices},
            {"facets", facets},
            {"contains_origin", h.contains_origin}};
}

Hull hull_from_json(const json& j) {
    require_schema(j, hull_schema);
    Hull h;
    h.dim = j.at("dim").get<std::size_t>();
    h.vertices = j.at("vertices").get<std::vector<Point>>();
    for (const auto& jf : j.at("facets")) {
        Facet f;
        f.normal = jf.at("normal").get<Point>();
        f.offset = jf.at("offset").get<double>();
        f.vertices = jf.at("vertices").get<std::vector<int>>();
        h.facets.push_back(std::move(f));
    }
    h.contains_origin = j.at("contains_origin").get<bool>();
    return h;
}

json to_json(const PoissonSample& s) {
    return {{"schema", poisson_sample_schema},
            {"params", {{"d", s.params.d}, {"gamma", s.params.gamma}, {"c", s.params.c}}},
            {"points", s.points},
            {"r_trunc", s.r_trunc},
            {"certified", s.certified}};
}

PoissonSample poisson_sample_from_json(const json& j) {
    require_schema(j, poisson_sample_schema);
    PoissonSample s;
    s.params.d = j.at("params").at("d").get<int>();
    s.params.gamma = j.at("params").at("gamma").get<double>();
    s.params.c = j.at("params").at("c").get<double>();
    s.points = j.at("points").get<std::vector<Point>>();
    s.r_trunc = j.at("r_trunc").get<double>();
    s.certified = j.at("certified").get<bool>();
    return s;
}

json to_json(const ConeSample& c) {
    return {{"schema", cone_sample_schema},
            {"d", c.d},
            {"n", c.n},
            {"halfsphere_points", c.halfsphere_points},
            {"gnomonic_points", c.gnomonic_points}};
}

ConeSample cone_sample_from_json(const json& j) {
    require_schema(j, cone_sample_schema);
    ConeSample c;
    c.d = j.at("d").get<int>();
    c.n = j.at("n").get<int>();
    c.halfsphere_points = j.at("halfsphere_points").get<std::vector<Point>>();
    c.gnomonic_points = j.at("gnomonic_points").get<std::vector<Point>>();
    return c;
}

json to_json(const ConicProfile& p) {
    return {{"schema", "conehull.conic_profile.v1"},
            {"samples", p.samples},
            {"v", p.v},
            {"v_se", p.v_se},
            {"h_direct", p.h_direct},
            {"h_direct_se", p.h_direct_se},
            {"h_from_v", p.h_from_v},
            {"h_from_v_se", p.h_from_v_se},
            {"w_direct", p.w_direct},
            {"w_direct_se", p.w_direct_se},
            {"w_from_v", p.w_from_v},
            {"w_from_v_se", p.w_from_v_se}};
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << j.dump(2) << "\n";
    if (!out) throw IoError("write failed: " + path);
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open for reading: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw IoError("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

} // namespace conehull
