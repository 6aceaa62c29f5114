#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "qinv/cli.hpp"
#include "qinv/errors.hpp"
#include "qinv/linkfile.hpp"
#include "qinv/skein.hpp"

using namespace qinv;
using json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const std::string path = std::string(QINV_TEST_TMP) + "/" + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("parser: braids, Morse events, annotations") {
  const auto blocks = parse_link_file(
      "# two links\n"
      "link hopf\n"
      "braid 2 : s1 s1\n"
      "framing 0=1\n"
      "framing 1 = -2\n"
      "link kink / cup 0 / x- 0 / cap 0 / special 0\n");
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0].name == "hopf");
  CHECK(blocks[0].diagram == hopf_link(1, -2));
  CHECK(blocks[1].line == 6);
  CHECK(blocks[1].special == std::vector<bool>{true});
  CHECK(parse_braid("braid 3: s1 S2").letters == std::vector<int>{1, -2});
  CHECK(parse_morse("cup 0\ncap 0\n") == unknot(0));
  CHECK(parse_morse("").component_count() == 0);
}

TEST_CASE("parser errors carry positions") {
  auto error_at = [](const std::string& text) -> std::pair<int, std::string> {
    try {
      parse_link_file(text);
    } catch (const ParseError& e) {
      return {e.line, e.what()};
    }
    return {-1, ""};
  };
  CHECK(error_at("cup 0\n\ncap 0\ncap 0\n").first == 4);
  CHECK(error_at("cup 0\n\ncap 0\ncap 0\n").second.find("unbalanced") != std::string::npos);
  CHECK(error_at("cup 0\ncup 5\n").second.find("out of range") != std::string::npos);
  CHECK(error_at("cup 0\ncup 0\ncap 0\n").second.find("does not close") != std::string::npos);
  CHECK(error_at("braid 2 : s3\n").second.find("column 11") != std::string::npos);
  CHECK(error_at("cup 0\ncap 0\nspecial 1\n").first == 3);
  CHECK(error_at("braid 2 : s1\ncup 0\n").first == 2);
  CHECK(error_at("cupp 0\n").first == 1);
  CHECK(error_at("link a\ncup 0/cap 0\nlink a\n").first == 3);
}

TEST_CASE("writer round trip") {
  LinkBlock b{"t", 0, hopf_link(3, 0), {false, true}};
  const auto back = parse_link_file(write_link(b));
  REQUIRE(back.size() == 1);
  CHECK(back[0].diagram == b.diagram);
  CHECK(back[0].special == b.special);
}

TEST_CASE("presets") {
  for (const char* name : {"s3", "s3-u+1", "s1xs2", "poincare", "s4", "s4-hopf", "cp2", "cp2bar", "s2xs2", "s1xs3",
                           "lens-5", "lens--3"})
    CHECK(preset(name).has_value());
  CHECK_FALSE(preset("lens-x").has_value());
  CHECK(preset("lens--3")->diagram.framings() == std::vector<int>{-3});
  CHECK(preset("poincare")->diagram.writhe(0) == -3);
}

TEST_CASE("bracket command") {
  const std::string unknot_file = temp_file("unknot.link", "cup 0\ncap 0\n");
  const Run r = run({"bracket", unknot_file});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["bracket"]["terms"] == json::parse("[[-2,-1],[2,-1]]"));

  const std::string hopf_file = temp_file("hopf.link", "braid 2 : s1 s1\n");
  const Run both = run({"bracket", "--engine", "both", "--k", "3", hopf_file});
  REQUIRE(both.code == 0);
  const json h = json::parse(both.out);
  CHECK(h["engines_agree"] == true);
  CHECK(h["specialized"]["level"] == 3);

  const Run colored = run({"bracket", "--label", "0=2", "--label", "1=omega", "--k", "4", hopf_file});
  CHECK(colored.code == 0);
  CHECK(json::parse(colored.out).contains("colored"));
}

TEST_CASE("JSON output is byte-identical across runs") {
  const Run a = run({"broda4", "--preset", "s2xs2", "--k", "3"});
  const Run b = run({"broda4", "--preset", "s2xs2", "--k", "3"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("invariant commands on presets") {
  for (int k : {3, 4, 5}) {
    const json s3 = json::parse(run({"rtw", "--preset", "s3", "--k", std::to_string(k)}).out);
    CHECK(s3["approx"][0].get<double>() == doctest::Approx(1.0));
  }
  const json s1s2 = json::parse(run({"rtw", "--preset", "s1xs2", "--k", "3"}).out);
  CHECK(s1s2["approx"][0].get<double>() == doctest::Approx(2.0));
  CHECK(s1s2["inertia"]["nullity"] == 1);
  const json hopf = json::parse(run({"broda4", "--preset", "s4-hopf", "--k", "4"}).out);
  CHECK(hopf["approx"][0].get<double>() == doctest::Approx(1.0));
  CHECK(hopf["N"] == 1);
  CHECK(hopf["Ndot"] == 1);
  const json cp2 = json::parse(run({"broda4", "--preset", "cp2", "--k", "3"}).out);
  CHECK(cp2["half_integral"] == true);
}

TEST_CASE("exit codes") {
  CHECK(run({"rtw", "--k", "3", temp_file("bad.link", "cup 0\ncap 1\n")}).code == kExitParse);
  CHECK(run({"rtw", "--k", "3", temp_file("bad.link", "cup 0\ncap 1\n")}).err.find("line 2") != std::string::npos);
  CHECK(run({"broda4", "--k", "3", temp_file("v.link", "cup 0\ncap 0\nframing 0=1\nspecial 0\n")}).code ==
        kExitValidation);
  const std::string big = temp_file("big.link", "braid 2 : s1 s1 s1 s1 s1 s1 s1 s1 s1 s1 s1 s1 s1 s1 s1 s1 s1 s1 s1 s1 "
                                                "s1 s1 s1 s1\n");
  const Run cap = run({"bracket", "--engine", "statesum", big});
  CHECK(cap.code == kExitCapacity);
  CHECK(cap.err.find("sweep") != std::string::npos);
  CHECK(run({"nonsense"}).code == kExitParse);
  CHECK(run({"rtw", "--preset", "s3"}).code == kExitParse);  // --k missing
}

TEST_CASE("check suites") {
  const Run skein = run({"check", "--suite", "skein"});
  CHECK(skein.code == 0);
  const Run kirby = run({"check", "--suite", "kirby"});
  CHECK(kirby.code == 0);
  const Run gamma = run({"check", "--suite", "gamma"});
  CHECK(gamma.code == 0);
  CHECK(gamma.out.find("differs as expected") != std::string::npos);
  CHECK(run({"check", "--suite", "bogus"}).code != 0);
}
