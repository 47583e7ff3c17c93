#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "relhilb/corpus.hpp"
#include "relhilb/errors.hpp"

using namespace relhilb;
using Json = nlohmann::ordered_json;

namespace {

const char* kPlane = "ring { vars = [x, y]; dim = 2 }\nideal m = maximal\nideal I = [\"x^2\", \"y^2\"]\n";

Json manifest(Json expected) {
  return {{"label", "t"},
          {"category", "trivial"},
          {"checks", Json::array({{{"task", "length I"}, {"field", "/length"}, {"expected", expected}, {"source", "count"}}})}};
}

}  // namespace

TEST_CASE("entry checks compare exactly") {
  Options opt;
  CorpusEntryReport ok = run_entry(kPlane, manifest("4"), opt);
  CHECK(ok.failures() == 0);
  CorpusEntryReport bad = run_entry(kPlane, manifest("5"), opt);
  CHECK(bad.failures() == 1);
  CHECK(bad.checks[0].got == "4");
  CorpusEntryReport typed = run_entry(kPlane, manifest(4), opt);
  CHECK(typed.failures() == 1);

  CorpusReport rep;
  rep.entries.push_back(bad);
  CHECK(rep.exit_code() == 1);
  try {
    rep.require_clean();
    FAIL("expected ManifestMismatch");
  } catch (const ManifestMismatch& e) {
    std::string msg = e.what();
    CHECK(msg.find("t: length I /length") != std::string::npos);
    CHECK(msg.find("expected \"5\", got \"4\"") != std::string::npos);
  }
}

TEST_CASE("task errors are recorded, not thrown") {
  Json m = manifest("4");
  m["checks"][0]["task"] = "length Q";
  CorpusEntryReport r = run_entry(kPlane, m, Options{});
  CHECK(r.failures() == 1);
  CHECK(r.checks[0].got["error"] == "UsageError");
}

TEST_CASE("violations are counted") {
  const char* text = "ring { vars = [x, y]; dim = 2 }\nideal m = maximal\ntask verify northcott m m\n";
  Json m = {{"label", "v"}, {"category", "trivial"}, {"checks", Json::array()}};
  CorpusEntryReport r = run_entry(text, m, Options{});
  CHECK(r.violations == 0);
  REQUIRE(r.tasks.size() == 1);
  CHECK(r.tasks[0].second["verdict"] == "EQUALITY_CASE_VERIFIED");
}

TEST_CASE("directory run, filter and round trip") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "relhilb_corpus_test";
  fs::remove_all(dir);
  for (const char* label : {"b_entry", "a_entry"}) {
    fs::create_directories(dir / label);
    std::ofstream(dir / label / "problem.rh") << kPlane;
    Json m = manifest("4");
    m["label"] = label;
    m["category"] = std::string(label) == "a_entry" ? "derived" : "trivial";
    std::ofstream(dir / label / "expected.json") << m.dump(2);
  }
  CorpusReport all = run_corpus(dir.string(), "", Options{});
  REQUIRE(all.entries.size() == 2);
  CHECK(all.entries[0].label == "a_entry");
  CHECK(all.exit_code() == 0);
  CHECK_NOTHROW(all.require_clean());
  Json j = all.to_json();
  CHECK(Json::parse(j.dump()) == j);
  CHECK(j["failures"] == "0");
  CHECK(all.to_text().find("a_entry [derived] 1/1 checks") != std::string::npos);

  CorpusReport some = run_corpus(dir.string(), "trivial", Options{});
  REQUIRE(some.entries.size() == 1);
  CHECK(some.entries[0].label == "b_entry");

  Json corrupt = manifest("7");
  corrupt["label"] = "b_entry";
  std::ofstream(dir / "b_entry" / "expected.json") << corrupt.dump(2);
  CorpusReport broken = run_corpus(dir.string(), "", Options{});
  CHECK(broken.exit_code() == 1);
  CHECK_THROWS_AS(broken.require_clean(), ManifestMismatch);
  CHECK_THROWS_AS(run_corpus((dir / "missing").string(), "", Options{}), UsageError);
  fs::remove_all(dir);
}
