#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "relhilb/options.hpp"

namespace relhilb {

/// A corpus entry is a directory holding problem.rh and expected.json:
///
///   {"label": "...", "category": "published|derived|trivial",
///    "checks": [{"task": "coeffs I", "field": "/e/1", "expected": "6", "source": "..."}]}
///
/// `field` is a JSON pointer into the task's report; values compare exactly.
struct CorpusCheck {
  std::string task;
  std::string field;
  std::string source;
  nlohmann::ordered_json expected;
  nlohmann::ordered_json got;
  bool ok = false;
};

struct CorpusEntryReport {
  std::string label;
  std::string category;
  std::vector<CorpusCheck> checks;
  std::vector<std::pair<std::string, nlohmann::ordered_json>> tasks;  // task line -> report (or error)
  std::size_t violations = 0;
  std::size_t failures() const;
};

struct CorpusReport {
  std::vector<CorpusEntryReport> entries;  // sorted by label
  std::size_t failures() const;
  std::size_t violations() const;
  int exit_code() const { return failures() == 0 && violations() == 0 ? 0 : 1; }
  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
  /// Throws ManifestMismatch naming entry, field, expected and got of every failed check.
  void require_clean() const;
};

/// Runs every entry whose label or category contains `filter` (all when empty).
CorpusReport run_corpus(const std::string& directory, const std::string& filter, const Options& opt);

/// One entry, given its problem text and manifest.
CorpusEntryReport run_entry(const std::string& problem_text, const nlohmann::ordered_json& manifest,
                            const Options& opt, const std::string& origin = "<entry>");

}  // namespace relhilb
