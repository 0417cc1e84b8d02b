#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dotpairs/constructions.hpp"
#include "dotpairs/io.hpp"

using namespace dotpairs;

namespace {

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("point-set files round-trip every construction") {
    const auto path = temp_file("dotpairs_roundtrip.json");
    std::vector<PointSet> sets;
    sets.push_back(gen_pencil(6));
    sets.push_back(gen_line_fan(12, 3));
    sets.push_back(gen_separated_grid(12, 4));
    sets.push_back(gen_highdim_cubic(3, Scalar::rational(5)));
    for (const PointSet& set : sets) {
        save_point_set(set, path);
        PointSet loaded = load_point_set(path);
        CHECK(loaded == set);
        // canonical serialization: saving the loaded set is byte-identical
        const std::string first = slurp(path);
        save_point_set(loaded, path);
        CHECK(slurp(path) == first);
    }
    std::filesystem::remove(path);
}

TEST_CASE("prime-backend files carry the modulus") {
    const FieldSpec f7 = FieldSpec::prime_field(7);
    PointSet set(f7, 2, "residues");
    set.add(Point({Scalar::residue(3, f7), Scalar::residue(5, f7)}));
    nlohmann::ordered_json j = point_set_to_json(set);
    CHECK(j["field"]["kind"] == "prime");
    CHECK(j["field"]["p"] == 7);
    PointSet loaded = point_set_from_json(j);
    CHECK(loaded == set);
}

TEST_CASE("malformed point-set files are rejected") {
    CHECK_THROWS_AS(point_set_from_json(nlohmann::json::parse(R"({"dim": 2})")), ParseError);
    CHECK_THROWS_AS(point_set_from_json(nlohmann::json::parse(
                        R"({"field":{"kind":"octonion"},"dim":2,"label":"","points":[]})")),
                    ParseError);
    // duplicate points violate the set invariant
    CHECK_THROWS_AS(
        point_set_from_json(nlohmann::json::parse(
            R"({"field":{"kind":"rational"},"dim":2,"label":"","points":[["1","2"],["1","2"]]})")),
        DomainError);
    // 2/4 duplicates 1/2 after canonicalization
    CHECK_THROWS_AS(
        point_set_from_json(nlohmann::json::parse(
            R"({"field":{"kind":"rational"},"dim":2,"label":"","points":[["1/2","0"],["2/4","0"]]})")),
        DomainError);
    CHECK_THROWS_AS(
        point_set_from_json(nlohmann::json::parse(
            R"({"field":{"kind":"rational"},"dim":2,"label":"","points":[["1","2","3"]]})")),
        DomainError);
    CHECK_THROWS_AS(
        point_set_from_json(nlohmann::json::parse(
            R"({"field":{"kind":"prime","p":9},"dim":2,"label":"","points":[]})")),
        DomainError);
}

TEST_CASE("report serialization") {
    BoundReport r;
    r.bound_id = "s2n";
    r.lhs = 12;
    r.rhs = 54.0;
    r.rhs_exact = true;
    r.ratio = 12.0 / 54.0;
    r.verdict = Verdict::pass;
    r.n = 3;
    r.d = 2;
    r.field_label = "rational";
    r.s = 3;
    r.t = 2;
    CHECK(report_csv_header() == "bound_id,n,d,field,s,t,lhs,rhs,ratio,verdict,seed,trial");
    const std::string row = report_csv_row(r);
    CHECK(row.substr(0, 4) == "s2n,");
    CHECK(row.find(",pass,") != std::string::npos);
    nlohmann::ordered_json j = report_to_json(r);
    CHECK(j["verdict"] == "pass");
    CHECK(j["lhs"] == 12);
    CHECK(j["bound_id"] == "s2n");
}
