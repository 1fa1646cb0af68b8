#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qalg/document.hpp>
#include <qalg/errors.hpp>
#include <qalg/run.hpp>

#include <json.hpp>

#include <fstream>
#include <sstream>

using namespace qalg;
using json = nlohmann::json;

namespace {

std::string read_file(const std::string& name)
{
    std::ifstream in(std::string(QALG_DOCUMENTS_DIR) + "/" + name, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json run_ok(const std::string& text, int expected_exit = 0)
{
    RunResult res = run_document(text, RunFlags{});
    CHECK(res.exit_code == expected_exit);
    return json::parse(res.report);
}

} // namespace

TEST_CASE("document parsing rejects malformed input")
{
    CHECK_THROWS_AS(parse_document("{not json"), ParseError);
    CHECK_THROWS_AS(parse_document("{\"schema\":\"other/9\",\"task\":\"ext\"}"),
                    ValidationError);
    CHECK_THROWS_AS(parse_document("{\"schema\":\"qalg/1\"}"), ValidationError);
    CHECK_THROWS_AS(
        parse_document("{\"schema\":\"qalg/1\",\"task\":\"ext\",\"window\":[3,1]}"),
        ValidationError);
}

TEST_CASE("input errors exit with code 1")
{
    // malformed polynomial string
    RunResult res = run_document(
        "{\"schema\":\"qalg/1\",\"task\":\"hilbert\","
        "\"algebra\":{\"vars\":2,\"max_degree\":3,\"ideal\":[\"x0^^\"]}}",
        RunFlags{});
    CHECK(res.exit_code == 1);
    json rep = json::parse(res.report);
    CHECK(rep["status"] == "error");

    // unknown task
    res = run_document("{\"schema\":\"qalg/1\",\"task\":\"frobnicate\"}", RunFlags{});
    CHECK(res.exit_code == 1);

    // not JSON at all
    res = run_document("hello", RunFlags{});
    CHECK(res.exit_code == 1);
    CHECK(json::parse(res.report)["error"]["type"] == "parse");
}

TEST_CASE("mathematical check failures exit with code 2")
{
    // no preimage for the target class: f0 and f1 are not homotopic
    std::string doc = R"({
      "schema": "qalg/1",
      "task": "mhomotopy",
      "source": {"generators": [{"name": "e", "cohomological": 0}]},
      "target": {"generators": [{"name": "a", "cohomological": 0}]},
      "f0": ["a"],
      "f1": ["a + a^2"]
    })";
    RunResult res = run_document(doc, RunFlags{});
    CHECK(res.exit_code == 2);
    CHECK(json::parse(res.report)["error"]["type"] == "not-homotopic");
}

TEST_CASE("ext report on the dual numbers document")
{
    json rep = run_ok(read_file("dual_numbers_ext.json"));
    CHECK(rep["status"] == "ok");
    CHECK(rep["result"]["ext"].size() == 7);
    for (const auto& row : rep["result"]["ext"]) {
        CHECK(row["bar"] == 1);
        CHECK(row["oracle"] == 1);
        CHECK(row["match"] == true);
    }
    CHECK(rep["input"]["digest"].get<std::string>().substr(0, 8) == "fnv1a64:");
}

TEST_CASE("tangent report on the plane point document")
{
    json rep = run_ok(read_file("plane_point_tangent.json"));
    CHECK(rep["result"]["cohomology"] == json::parse("[[0,2],[1,1],[2,0]]"));
    CHECK(rep["result"]["match"] == true);
}

TEST_CASE("chart equations document matches the pinned counts")
{
    json rep = run_ok(read_file("quot_line_charts.json"));
    CHECK(rep["result"]["variable_count"] == 3);
    CHECK(rep["result"]["equation_count"] == 2);
}

TEST_CASE("tor documents")
{
    json rep = run_ok(read_file("self_intersection_tor.json"));
    CHECK(rep["result"]["tor"][0]["by_degree"] == json::parse("[[0,1]]"));
    CHECK(rep["result"]["tor"][1]["by_degree"] == json::parse("[[1,1]]"));
    CHECK(rep["result"]["tor"][2]["total"] == 0);

    rep = run_ok(read_file("transverse_lines_tor.json"));
    CHECK(rep["result"]["tor"][0]["total"] == 1);
    CHECK(rep["result"]["tor"][1]["total"] == 0);
}

TEST_CASE("stabilize document finds the bound with vanishing tail")
{
    json rep = run_ok(read_file("plane_point_stabilize.json"));
    CHECK(rep["result"]["stabilized"] == true);
    CHECK(rep["result"]["stable_q"] == 3);
    CHECK(rep["result"]["tail_ext"] == json::parse("[[0,0],[1,0],[2,0]]"));
}

TEST_CASE("ract document reports the pi0 ideal")
{
    json rep = run_ok(read_file("ract_dual_numbers.json"));
    CHECK(rep["result"]["generators_per_arity"] == json::parse("[[1,1],[2,1],[3,1]]"));
    CHECK(rep["result"]["pi0_ideal"].size() == 1);
}

TEST_CASE("task override flag")
{
    RunFlags flags;
    flags.task = "hilbert";
    RunResult res = run_document(read_file("line_in_plane_ext.json"), flags);
    CHECK(res.exit_code == 0);
    json rep = json::parse(res.report);
    CHECK(rep["task"] == "hilbert");
    CHECK(rep["result"].contains("module"));
}

TEST_CASE("reports are byte-identical across runs and thread counts")
{
    std::vector<std::string> docs = {"line_in_plane_ext.json", "plane_point_tangent.json",
                                     "quot_line_charts.json", "self_intersection_tor.json"};
    for (const std::string& name : docs) {
        std::string text = read_file(name);
        RunFlags one, four;
        one.threads = 1;
        four.threads = 4;
        std::string reference = run_document(text, one).report;
        for (int rep = 0; rep < 2; ++rep) {
            CHECK(run_document(text, one).report == reference);
            CHECK(run_document(text, four).report == reference);
        }
    }
}

TEST_CASE("dga polynomial parsing")
{
    FreeDgaPresentation p;
    int a = p.add_generator("a", {0, 0});
    int c = p.add_generator("c", {0, -1});

    DgaPoly expected = FreeDgaPresentation::add(
        FreeDgaPresentation::scale(p.mul(FreeDgaPresentation::gen_poly(a),
                                         FreeDgaPresentation::gen_poly(a)),
                                   Rational(3, 2)),
        FreeDgaPresentation::scale(FreeDgaPresentation::gen_poly(c), Rational(-1)));
    CHECK(parse_dga_poly(p, "3/2*a^2 - c") == expected);
    CHECK(parse_dga_poly(p, "").empty());
    CHECK(parse_dga_poly(p, "a - a").empty());
    CHECK(parse_dga_poly(p, "c^2").empty()); // odd generators square to zero
    CHECK_THROWS_AS(parse_dga_poly(p, "b + 1"), ParseError);
    CHECK_THROWS_AS(parse_dga_poly(p, "a +"), ParseError);
}

TEST_CASE("content digest is stable and content-sensitive")
{
    CHECK(content_digest("") == "fnv1a64:cbf29ce484222325");
    CHECK(content_digest("abc") == content_digest("abc"));
    CHECK(content_digest("abc") != content_digest("abd"));
}
