#include <masure/json_io.hpp>

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

using namespace masure;

namespace {

struct CliRun {
    int status;
    std::string out;
};

// Runs the CLI through the shell; stderr is discarded.
CliRun run(const std::string& args) {
    std::string cmd = std::string(MASURE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t k = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), k);
    int st = pclose(pipe);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

json run_json(const std::string& args) {
    CliRun r = run(args);
    EXPECT_EQ(r.status, 0) << args;
    return json::parse(r.out);
}

}  // namespace

TEST(Cli, Classify) {
    EXPECT_EQ(run_json("classify --matrix '[[2,-2],[-2,2]]'"), json::parse(R"({"class":"affine"})"));
    EXPECT_EQ(run_json("classify --matrix '[[2,-1],[-5,2]]'")["class"], "indefinite");
    CliRun t = run("classify --matrix '[[2,-1],[-1,2]]' --format text");
    EXPECT_EQ(t.status, 0);
    EXPECT_EQ(t.out, "finite\n");
}

TEST(Cli, TreeDistance) {
    EXPECT_EQ(run_json("tree dist --field 'F2(t)' --p '(0;0)' --q '(1;t^-3)'"), json(5));
    CliRun t = run("tree dist --field 'F2(t)' --p '(0;0)' --q '(1;t^-3)' --format text");
    EXPECT_EQ(t.out, "5\n");
}

TEST(Cli, TreeCommands) {
    json p = run_json("tree act --field 'F2(t)' --matrix '[[1,t^-3],[0,1]]' --p '(1;0)'");
    EXPECT_EQ(point_from_json(p), parse_point(FieldConfig::laurent(2), "(1; t^-3)"));
    json r = run_json("tree retract --p '(1;t^-3)' --center -");
    EXPECT_EQ(r["retraction"], "5");
    json seg = run_json("tree retract --p '(5;t^-6)' --q '(5;t^-6+t^-7)' --center -");
    PiecewisePath path = path_from_json(seg);
    EXPECT_EQ(path.points, (std::vector<RatVec>{{Rat(7)}, {Rat(6)}, {Rat(9)}}));
    EXPECT_EQ(run_json("tree neighbors --p '(0;0)'").size(), 3u);
    EXPECT_EQ(run_json("tree geodesic --p '(1;t^-3)' --q '(0;0)' --steps 5").size(), 6u);
    EXPECT_EQ(run_json("tree ball --radius 3")["vertices"].size(), 22u);
    EXPECT_EQ(run_json("tree orbit --p '(1;0)'")["class"], 1);
    json ex = run_json("tree exchange --a t");
    EXPECT_EQ(ex["triple"], json::parse(R"({"empty": false, "lo": "1", "hi": "1"})"));
    EXPECT_TRUE(ex["sundial"].get<bool>());
    CliRun dot = run("tree ball --radius 1 --format dot");
    EXPECT_EQ(dot.status, 0);
    EXPECT_EQ(dot.out.rfind("graph ball {", 0), 0u);
    EXPECT_NE(dot.out.find("v0 -- v1"), std::string::npos);
}

TEST(Cli, RootsWeylCone) {
    json roots = run_json("roots --data affine-sl2 --max-height 5");
    EXPECT_EQ(roots["counts"], json::parse("[2,0,2,0,2]"));
    json w = run_json("weyl --data affine-sl2 --word 1,0,1,0,1,1");
    EXPECT_EQ(w["length"], 4);
    EXPECT_EQ(w["inversion_set"].size(), 4u);
    json c = run_json("cone --data affine-sl2 --vector 0,0,1");
    EXPECT_EQ(c["verdict"], "in-cone");
    EXPECT_EQ(run_json("cone --data affine-sl2 --vector 0,0,-1")["verdict"], "not-in-cone");
    json pn = run_json("prenilpotent --data '[[2,-1],[-1,2]]' --alpha 1,0 --beta 0,1");
    EXPECT_EQ(pn["verdict"], "prenilpotent");
    EXPECT_EQ(pn["closed_interval"].size(), 3u);
}

TEST(Cli, HeckeGmUma) {
    json h = run_json(R"(hecke verify --data tree --path '{"breakpoints":["0","1/4","1"],"positions":[[7],[6],[9]]}' --shape 4 --chamber - --bounds 9,6,3)");
    EXPECT_TRUE(h["hecke_path"].get<bool>());
    EXPECT_EQ(h["folds"].size(), 1u);
    EXPECT_EQ(run_json("gm --n 2")["polynomial"], "1/2*Z1^2 + 1/2*Z2");
    json u = run_json(R"(uma factorize --ring F2 --mod 4 --matrix '[[[1,1,1,1],[]],[[],[1,1]]]')");
    EXPECT_EQ(u["D_product_params"], json::parse(R"(["1","1","0"])"));
    EXPECT_EQ(series_matrix_from_json(u["L"]), SeriesMatrix::identity(BaseRing::fp(2), 4));
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run("classify --matrix '[[2,1],[1,2]]'").status, 1);
    EXPECT_EQ(run("tree neighbors --p '(1/2;0)'").status, 1);
    EXPECT_EQ(run("tree retract --p '(0;0)' --q '(0;0)'").status, 1);
    EXPECT_EQ(run("classify").status, 2);
    EXPECT_EQ(run("frobnicate").status, 2);
    EXPECT_EQ(run("classify --matrix '[[2,-2]'").status, 2);
    EXPECT_EQ(run("tree dist --p '(0;0)' --q '(0;0)' --format dot").status, 2);
    EXPECT_EQ(run("--help").status, 0);
}

TEST(Cli, Deterministic) {
    CliRun a = run("roots --data '[[2,-1],[-5,2]]' --max-height 12");
    CliRun b = run("roots --data '[[2,-1],[-5,2]]' --max-height 12");
    EXPECT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out);
}
