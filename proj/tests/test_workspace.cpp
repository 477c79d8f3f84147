#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"

using namespace tensalg;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("workspace") {
  TEST_CASE("shipped example matches the embedded copy") {
    auto file = nlohmann::json::parse(slurp(TENSALG_DATA_DIR "/paper_example.json"));
    CHECK(file == nlohmann::json::parse(paper_example_json()));
    auto printed = nlohmann::json::parse(slurp(TENSALG_DATA_DIR "/m3_printed.json"));
    CHECK(printed == nlohmann::json::parse(m3_printed_json()));
  }

  TEST_CASE("round trip through JSON") {
    for (const char* f : {"/paper_example.json", "/two_instants.json"}) {
      auto ws = load_workspace(std::string(TENSALG_DATA_DIR) + f);
      auto once = to_json(ws);
      auto twice = to_json(parse_workspace(once.dump()));
      CHECK(once == twice);
      CHECK(nlohmann::json::parse(once.dump()) == nlohmann::json::parse(slurp(std::string(TENSALG_DATA_DIR) + f)));
    }
  }

  TEST_CASE("empty workspace") {
    auto ws = parse_workspace("{}");
    CHECK(ws.quantales().empty());
    CHECK(ws.modules().empty());
  }

  TEST_CASE("reference and parse errors") {
    CHECK(fx::kind_of([] {
            parse_workspace(R"({"modules":[{"name":"A","quantale":"W","elements":["0"],"leq":[[1]],"action":[["0"]]}]})");
          }) == ErrorKind::UnknownReference);
    CHECK(fx::kind_of([] { parse_workspace("{not json"); }) == ErrorKind::ParseError);
    CHECK(fx::kind_of([] { load_workspace("/nonexistent/file.json"); }) == ErrorKind::ParseError);
  }

  TEST_CASE("derived objects export as tables") {
    const auto& ws = fx::example();
    auto J = fx::frame_of(ws.quantale("V"), {{1, 2}, {0, 1}});
    auto T = tensor(J, ws.fsl("H").fsl);
    auto M = export_module(*T->module(), "JxH");
    CHECK(module_law_violation(*M) == fx::ok());
    auto AJ = construct_FJ(ws.module("A"), J);
    auto e = export_fsl(*AJ, "AJ", "P");
    auto P = export_module(*AJ->module(), "P");
    auto H = validate_fsemilattice(P, e.F, "AJ");
    CHECK(fsemilattice_violation(*H) == fx::ok());

    Workspace out;
    out.add_quantale(ws.quantale("V"));
    out.add_module(M, "V");
    auto back = parse_workspace(to_json(out).dump());
    CHECK(back.module("JxH")->size() == M->size());
  }
}
