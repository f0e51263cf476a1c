#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "kfano/pipelines.hpp"

using namespace kfano;

namespace {

std::filesystem::path scratch_dir(const std::string& leaf) {
    auto d = std::filesystem::temp_directory_path() / ("kfano_test_" + leaf);
    std::filesystem::remove_all(d);
    std::filesystem::create_directories(d);
    return d;
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST(Datasets, ChecksumsPresent) {
    for (const auto& e : embedded::entries()) {
        std::string sum = dataset_checksum(e.name);
        EXPECT_EQ(sum.size(), 64u) << e.name;
        EXPECT_EQ(sum.find_first_not_of("0123456789abcdef"), std::string::npos) << e.name;
    }
    EXPECT_THROW(dataset_checksum("no-such-dataset"), InputError);
}

TEST(Datasets, LoadersAgreeWithTheirFiles) {
    EXPECT_EQ(builtin_polytopes().size(), 5u);
    EXPECT_NO_THROW(validate_catalog(singularity_catalog()));
    EXPECT_FALSE(fano_catalog().empty());
    EXPECT_THROW(builtin_polytope("no-such-polytope"), InputError);
    EXPECT_THROW(scaffolding_record("no-such-scaffolding"), InputError);
}

TEST(Datasets, MalformedFilesAreInputErrors) {
    auto d = scratch_dir("malformed");
    write(d / "broken.json", "{\"vertices\": [[1, 0], [0");
    write(d / "ragged.json", "{\"vertices\": [[1, 0], [0, 1, 2]]}");
    write(d / "empty.json", "{\"vertices\": []}");
    write(d / "wrongtype.json", "{\"vertices\": \"square\"}");
    for (const char* f : {"broken.json", "ragged.json", "empty.json", "wrongtype.json"})
        EXPECT_THROW(load_polytope_file((d / f).string()), InputError) << f;
    EXPECT_THROW(load_polytope_file((d / "absent.json").string()), InputError);
    std::filesystem::remove_all(d);
}

TEST(Cases, AliasesResolve) {
    EXPECT_EQ(find_case("thm-3.1").id, "deg12-smoothings");
    EXPECT_EQ(find_case("thm-3.5").id, "deg12-kmoduli");
    EXPECT_EQ(find_case("thm-1.2").id, "fat-point");
    EXPECT_EQ(find_case("mm4-3").id, "mm4-3");
    EXPECT_THROW(find_case("thm-9.9"), InputError);
    auto out = run_case("thm-9.9");
    EXPECT_EQ(out.exit_code, kExitInput);
    EXPECT_FALSE(out.report.annotations.empty());
}

TEST(Report, JsonIsCanonical) {
    Report r;
    r.case_id = "demo";
    r.invariants["zeta"] = 1;
    r.invariants["alpha"] = 2;
    r.check("one", 1, 1);
    r.check_true("flag", false);
    Json j = r.to_json();
    EXPECT_EQ(j["status"], "fail");
    EXPECT_FALSE(r.passed());
    EXPECT_FALSE(j.contains("timestamp"));
    std::string text = render(r, "json");
    EXPECT_LT(text.find("\"alpha\""), text.find("\"zeta\""));
    EXPECT_EQ(text, render(r, "json"));
    EXPECT_NE(render(r, "text").find("FAILED"), std::string::npos);
    EXPECT_THROW(render(r, "yaml"), InputError);
}

TEST(Report, EmptyReportPasses) {
    Report r;
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.to_json()["tool_version"], "kfano 1.0.0");
}

TEST(Scan, BadFileBecomesErrorRow) {
    auto d = scratch_dir("scan");
    write(d / "a_square.json", "{\"name\": \"square\", \"vertices\": [[1,1],[1,-1],[-1,1],[-1,-1]]}");
    write(d / "b_bad.json", "not json");
    write(d / "c_ignored.txt", "{}");
    auto s = scan_directory(d.string());
    ASSERT_EQ(s.rows.size(), 2u);
    EXPECT_EQ(s.errors, 1u);
    EXPECT_EQ(s.rows[0]["file"], "a_square.json");
    EXPECT_EQ(s.rows[0]["info"]["degree"], "4");  // polar is the unit diamond
    EXPECT_TRUE(s.rows[1].contains("error"));
    EXPECT_THROW(scan_directory((d / "missing").string()), InputError);
    std::filesystem::remove_all(d);
}

TEST(PolytopeInfo, ResolveBuiltinOrFile) {
    auto rec = resolve_polytope("mm4-3");
    auto j = polytope_info_json(rec);
    EXPECT_EQ(j["degree"], "28");
    EXPECT_EQ(j["centrally_symmetric"], true);
    EXPECT_THROW(resolve_polytope("/nonexistent/file.json"), InputError);
}
