#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "relhilb/commands.hpp"
#include "relhilb/corpus.hpp"
#include "relhilb/errors.hpp"
#include "relhilb/problem.hpp"

namespace relhilb {

using Json = nlohmann::ordered_json;

std::size_t CorpusEntryReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CorpusCheck& c) { return !c.ok; }));
}

std::size_t CorpusReport::failures() const {
  std::size_t n = 0;
  for (const auto& e : entries) n += e.failures();
  return n;
}

std::size_t CorpusReport::violations() const {
  std::size_t n = 0;
  for (const auto& e : entries) n += e.violations;
  return n;
}

Json CorpusReport::to_json() const {
  Json j;
  j["entries"] = Json::array();
  for (const auto& e : entries) {
    Json je;
    je["label"] = e.label;
    je["category"] = e.category;
    je["checks"] = Json::array();
    for (const auto& c : e.checks)
      je["checks"].push_back({{"task", c.task},
                              {"field", c.field},
                              {"expected", c.expected},
                              {"got", c.got},
                              {"ok", c.ok},
                              {"source", c.source}});
    je["reports"] = Json::array();
    for (const auto& [task, report] : e.tasks) je["reports"].push_back({{"task", task}, {"report", report}});
    je["violations"] = std::to_string(e.violations);
    j["entries"].push_back(je);
  }
  j["failures"] = std::to_string(failures());
  j["violations"] = std::to_string(violations());
  return j;
}

std::string CorpusReport::to_text() const {
  std::ostringstream os;
  for (const auto& e : entries) {
    os << e.label << " [" << e.category << "] " << (e.checks.size() - e.failures()) << "/" << e.checks.size()
       << " checks";
    if (e.violations) os << ", " << e.violations << " VIOLATION";
    os << "\n";
    for (const auto& c : e.checks)
      if (!c.ok) os << "  FAIL " << c.task << " " << c.field << ": expected " << c.expected.dump() << ", got " << c.got.dump() << "\n";
  }
  os << "failures " << failures() << ", violations " << violations() << "\n";
  return os.str();
}

void CorpusReport::require_clean() const {
  std::string msg;
  for (const auto& e : entries)
    for (const auto& c : e.checks)
      if (!c.ok)
        msg += e.label + ": " + c.task + " " + c.field + ": expected " + c.expected.dump() + ", got " + c.got.dump() + "\n";
  if (!msg.empty()) throw ManifestMismatch(msg);
}

namespace {

void count_violations(const Json& j, std::size_t& n) {
  if (j.is_object()) {
    auto it = j.find("verdict");
    if (it != j.end() && *it == "VIOLATION") ++n;
    for (const auto& [k, v] : j.items()) count_violations(v, n);
  } else if (j.is_array()) {
    for (const auto& v : j) count_violations(v, n);
  }
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw UsageError("cannot open " + p.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

CorpusEntryReport run_entry(const std::string& problem_text, const Json& manifest, const Options& opt,
                            const std::string& origin) {
  CorpusEntryReport rep;
  rep.label = manifest.at("label").get<std::string>();
  rep.category = manifest.value("category", "");
  Problem pb = parse_problem(problem_text, origin);

  std::vector<std::string> order = pb.tasks;
  for (const Json& c : manifest.at("checks")) {
    std::string t = c.at("task").get<std::string>();
    if (std::find(order.begin(), order.end(), t) == order.end()) order.push_back(t);
  }
  std::map<std::string, Json> results;
  for (const std::string& t : order) {
    Json r;
    try {
      r = run_command(pb, split_args(t), opt).json;
    } catch (const Error& e) {
      r = {{"error", e.kind()}, {"message", e.what()}};
    }
    count_violations(r, rep.violations);
    results[t] = r;
    rep.tasks.emplace_back(t, r);
  }
  for (const Json& c : manifest.at("checks")) {
    CorpusCheck check;
    check.task = c.at("task").get<std::string>();
    check.field = c.value("field", "");
    check.source = c.at("source").get<std::string>();
    check.expected = c.at("expected");
    const Json& r = results.at(check.task);
    nlohmann::json_pointer<std::string> ptr(check.field);
    check.got = r.contains(ptr) ? r.at(ptr) : Json(r.contains("error") ? r : Json(nullptr));
    check.ok = check.got == check.expected;
    rep.checks.push_back(std::move(check));
  }
  return rep;
}

CorpusReport run_corpus(const std::string& directory, const std::string& filter, const Options& opt) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(directory)) throw UsageError("corpus directory not found: " + directory);
  std::vector<fs::path> dirs;
  for (const auto& d : fs::directory_iterator(directory))
    if (d.is_directory() && fs::exists(d.path() / "expected.json")) dirs.push_back(d.path());
  CorpusReport out;
  for (const fs::path& d : dirs) {
    Json manifest = Json::parse(read_file(d / "expected.json"));
    const std::string label = manifest.at("label").get<std::string>();
    const std::string category = manifest.value("category", "");
    if (!filter.empty() && label.find(filter) == std::string::npos && category.find(filter) == std::string::npos) continue;
    out.entries.push_back(run_entry(read_file(d / "problem.rh"), manifest, opt, (d / "problem.rh").string()));
  }
  std::sort(out.entries.begin(), out.entries.end(),
            [](const CorpusEntryReport& a, const CorpusEntryReport& b) { return a.label < b.label; });
  return out;
}

}  // namespace relhilb
