#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "rdad/io.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const std::string kCli = RDAD_CLI_PATH;

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("rdad_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

int run(const std::string& args) {
    const std::string cmd = kCli + " " + args + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string read_all(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::size_t line_count(const std::string& text) {
    std::size_t n = 0;
    for (char c : text)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("generate: preset row counts and determinism") {
    TempDir dir;
    const std::string base = " generate --preset david-goliath --seed 7 --out ";
    REQUIRE(run(base + dir.file("a.csv")) == 0);
    REQUIRE(run(base + dir.file("b.csv")) == 0);

    const std::string a = read_all(dir.file("a.csv"));
    CHECK(a == read_all(dir.file("b.csv")));
    CHECK(line_count(a) == 501);  // header + 500 rows

    const json prov = json::parse(read_all(dir.file("a.csv.provenance.json")));
    CHECK(prov["preset"] == "david-goliath");
    CHECK(prov["seed"] == 7);
    CHECK(prov["params"]["n_points"] == 500);
}

TEST_CASE("generate: voronoi provenance echoes the model parameters") {
    TempDir dir;
    REQUIRE(run("generate --preset voronoi-noisy --seed 7 --out " + dir.file("v.csv") +
                " --provenance " + dir.file("v.json")) == 0);
    const json prov = json::parse(read_all(dir.file("v.json")));
    CHECK(prov["params"]["lambda"] == 1.0);
    CHECK(prov["params"]["sigma0"] == 0.01);
}

TEST_CASE("field: defaults resolve from N and the spec is echoed in the file") {
    TempDir dir;
    REQUIRE(run("generate --preset david-goliath --seed 3 --out " + dir.file("pts.csv")) == 0);
    REQUIRE(run("field --points " + dir.file("pts.csv") +
                " --kind dad --delta-x 0.1 --out " + dir.file("field.json")) == 0);
    const auto field = rdad::read_field_json(dir.file("field.json"));
    CHECK(field.spec.k_den == 8);  // ceil((log10 500)^2)
    CHECK(field.spec.kind == rdad::FiltrationKind::Dad);
}

TEST_CASE("field: single point on a unit cell gives the zero field") {
    TempDir dir;
    std::ofstream pts(dir.file("one.csv"));
    pts << "x,y\n0.5,0.5\n";
    pts.close();
    REQUIRE(run("field --points " + dir.file("one.csv") +
                " --kind distance --rect 0 1 0 1 --delta-x 1 --out " + dir.file("f.json")) == 0);
    const auto field = rdad::read_field_json(dir.file("f.json"));
    REQUIRE(field.values.size() == 1);
    CHECK(field.values[0] == 0.0);
}

TEST_CASE("persist: ring field and characteristic independence") {
    TempDir dir;
    rdad::ScalarField field;
    field.grid.lower = {0.0, 0.0};
    field.grid.delta_x = 1.0;
    field.grid.counts = {3, 3};
    field.values = {1, 1, 1, 1, 5, 1, 1, 1, 1};
    rdad::write_field_json(dir.file("ring.json"), field);

    REQUIRE(run("persist --field " + dir.file("ring.json") + " --out " + dir.file("d11.csv")) == 0);
    const std::string d11 = read_all(dir.file("d11.csv"));
    CHECK(d11.find("1,1,5,1.5,1.5") != std::string::npos);
    CHECK(d11.find("0,1,inf") != std::string::npos);

    REQUIRE(run("persist --field " + dir.file("ring.json") + " --p 2 --out " + dir.file("d2.csv")) == 0);
    CHECK(read_all(dir.file("d2.csv")) == d11);

    SUBCASE("constant field has a single essential row") {
        rdad::ScalarField constant;
        constant.grid = field.grid;
        constant.values.assign(9, 2.0);
        rdad::write_field_json(dir.file("const.json"), constant);
        REQUIRE(run("persist --field " + dir.file("const.json") + " --out " + dir.file("dc.csv")) == 0);
        const std::string dc = read_all(dir.file("dc.csv"));
        CHECK(line_count(dc) == 2);
        CHECK(dc.find("0,2,inf,,") != std::string::npos);
    }
}

TEST_CASE("bootstrap: self-replicate radius is zero and every loop is significant") {
    TempDir dir;
    std::ofstream pts(dir.file("one.csv"));
    pts << "x,y\n0.25,0.25\n";
    pts.close();
    REQUIRE(run("bootstrap --points " + dir.file("one.csv") +
                " --kind distance --rect 0 1 0 1 --delta-x 0.5 --B 1 --dim 0 --seed 5"
                " --out-json " + dir.file("boot.json") +
                " --out-significant " + dir.file("sig.csv")) == 0);
    const json boot = json::parse(read_all(dir.file("boot.json")));
    CHECK(boot["radius"] == 0.0);
    CHECK(boot["B"] == 1);
    CHECK(boot["mode"] == "subsample");
    CHECK(boot["distances"] == json::array({0.0}));
    // the lone dim-0 class is essential, hence significant at r = 0
    CHECK(line_count(read_all(dir.file("sig.csv"))) == 2);
}

TEST_CASE("bootstrap: oracle mode echoes its configuration") {
    TempDir dir;
    REQUIRE(run("bootstrap --preset david-goliath --mode oracle --kind distance"
                " --delta-x 0.25 --B 2 --seed 11 --out-json " + dir.file("boot.json") +
                " --out-significant " + dir.file("sig.csv")) == 0);
    const json boot = json::parse(read_all(dir.file("boot.json")));
    CHECK(boot["mode"] == "oracle");
    CHECK(boot["B"] == 2);
    CHECK(boot["distances"].size() == 2);
    CHECK(boot["reseeded_replicates"] == 0);
}

TEST_CASE("ingest: bounding-box crop") {
    TempDir dir;
    std::ofstream in(dir.file("towers.csv"));
    in << "id,longitude,latitude\n";
    in << "1,-100.0,40.0\n";
    in << "2,-50.0,40.0\n";   // east of the box
    in << "3,-100.0,10.0\n";  // south of the box
    in << "4,-70.0,30.0\n";
    in.close();

    SUBCASE("explicit box keeps interior rows") {
        REQUIRE(run("ingest --in " + dir.file("towers.csv") +
                    " --x-col longitude --y-col latitude --box -126 -65.8 23.9 50"
                    " --out " + dir.file("pts.csv")) == 0);
        const std::string out = read_all(dir.file("pts.csv"));
        CHECK(line_count(out) == 3);
        CHECK(out.find("-100,40") != std::string::npos);
        CHECK(out.find("-70,30") != std::string::npos);
    }
    SUBCASE("towers preset carries the same box") {
        REQUIRE(run("ingest --in " + dir.file("towers.csv") +
                    " --x-col longitude --y-col latitude --preset towers --out " +
                    dir.file("pts.csv")) == 0);
        CHECK(line_count(read_all(dir.file("pts.csv"))) == 3);
    }
    SUBCASE("box containing every row is the identity") {
        REQUIRE(run("ingest --in " + dir.file("towers.csv") +
                    " --x-col longitude --y-col latitude --box -1000 1000 -1000 1000 --out " +
                    dir.file("all.csv")) == 0);
        CHECK(line_count(read_all(dir.file("all.csv"))) == 5);
    }
    SUBCASE("empty crop warns but exits zero") {
        REQUIRE(run("ingest --in " + dir.file("towers.csv") +
                    " --x-col longitude --y-col latitude --box 0 1 0 1 --out " +
                    dir.file("none.csv")) == 0);
        CHECK(read_all(dir.file("none.csv")) == "x,y\n");
    }
    SUBCASE("missing column is a data error") {
        CHECK(run("ingest --in " + dir.file("towers.csv") + " --box 0 1 0 1 --out " +
                  dir.file("x.csv")) == 3);
    }
}

TEST_CASE("staged commands reproduce a single run bitwise") {
    TempDir dir;
    const std::string run_dir = dir.file("run_out");
    REQUIRE(run("run --preset david-goliath --kind dad --delta-x 0.1 --B 3 --seed 7 --out " +
                run_dir) == 0);

    REQUIRE(run("generate --preset david-goliath --seed 7 --out " + dir.file("points.csv") +
                " --provenance " + dir.file("provenance.json")) == 0);
    REQUIRE(run("field --points " + dir.file("points.csv") +
                " --kind dad --delta-x 0.1 --out " + dir.file("field.json")) == 0);
    REQUIRE(run("persist --field " + dir.file("field.json") + " --out " + dir.file("diagram.csv")) == 0);
    REQUIRE(run("bootstrap --points " + dir.file("points.csv") +
                " --kind dad --delta-x 0.1 --B 3 --seed 7 --out-json " + dir.file("bootstrap.json") +
                " --out-significant " + dir.file("significant.csv")) == 0);

    for (const std::string name :
         {"points.csv", "field.json", "diagram.csv", "bootstrap.json", "significant.csv"}) {
        CAPTURE(name);
        CHECK(read_all((fs::path(run_dir) / name).string()) == read_all(dir.file(name)));
    }

    const json manifest = json::parse(read_all((fs::path(run_dir) / "manifest.json").string()));
    CHECK(manifest["artifacts"].size() == 6);
    CHECK(manifest["config_hash"].get<std::string>().size() == 16);
}

TEST_CASE("thread cap does not change results") {
    TempDir dir;
    REQUIRE(run("generate --preset david-goliath --seed 19 --out " + dir.file("pts.csv")) == 0);
    REQUIRE(run("field --points " + dir.file("pts.csv") +
                " --kind rdad --delta-x 0.1 --threads 1 --out " + dir.file("t1.json")) == 0);
    REQUIRE(run("field --points " + dir.file("pts.csv") +
                " --kind rdad --delta-x 0.1 --threads 3 --out " + dir.file("t3.json")) == 0);
    CHECK(read_all(dir.file("t1.json")) == read_all(dir.file("t3.json")));
}

TEST_CASE("config file supplies defaults, flags override") {
    TempDir dir;
    std::ofstream cfg(dir.file("run.cfg"));
    cfg << "kind=dad\n";
    cfg << "delta_x=0.2\n";
    cfg.close();
    REQUIRE(run("generate --preset david-goliath --seed 23 --out " + dir.file("pts.csv")) == 0);

    REQUIRE(run("field --config " + dir.file("run.cfg") + " --points " + dir.file("pts.csv") +
                " --out " + dir.file("cfg.json")) == 0);
    CHECK(rdad::read_field_json(dir.file("cfg.json")).spec.kind == rdad::FiltrationKind::Dad);

    REQUIRE(run("field --config " + dir.file("run.cfg") + " --points " + dir.file("pts.csv") +
                " --kind dtm --out " + dir.file("cfg2.json")) == 0);
    CHECK(rdad::read_field_json(dir.file("cfg2.json")).spec.kind == rdad::FiltrationKind::Dtm);
}

TEST_CASE("exit codes distinguish configuration, data and numerical failures") {
    TempDir dir;
    CHECK(run("generate --preset nonsense --out " + dir.file("x.csv")) == 2);
    CHECK(run("field --points " + dir.file("missing.csv") + " --out " + dir.file("f.json")) == 3);

    std::ofstream pts(dir.file("dup.csv"));
    pts << "x,y\n1,1\n1,1\n1,1\n";  // every point triply coincident
    pts.close();
    CHECK(run("field --points " + dir.file("dup.csv") +
              " --kind rdad --k-den 2 --rect 0 2 0 2 --delta-x 1 --out " + dir.file("f.json")) == 3);

    rdad::ScalarField field;
    field.grid.lower = {0.0, 0.0};
    field.grid.delta_x = 1.0;
    field.grid.counts = {2, 1};
    field.values = {1.0, 2.0};
    rdad::write_field_json(dir.file("ok.json"), field);
    CHECK(run("persist --field " + dir.file("ok.json") + " --p 6 --out " + dir.file("d.csv")) == 2);
}
