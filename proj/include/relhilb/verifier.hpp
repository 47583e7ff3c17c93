#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "relhilb/local_ideal.hpp"
#include "relhilb/options.hpp"

namespace relhilb {

enum class Verdict { holds, equality_case_verified, hypothesis_not_met, violation, not_applicable, assertion_suspect };
enum class HypothesisStatus { checked, user_asserted, failed };

std::string to_string(Verdict v);
std::string to_string(HypothesisStatus s);

struct Hypothesis {
  std::string name;
  HypothesisStatus status;
  std::string detail;
};

struct VerificationReport {
  std::string theorem;  // northcott_ext, narita_ext, ic_bound, itoh_ext
  std::vector<Hypothesis> hypotheses;
  std::vector<std::pair<std::string, std::string>> quantities;
  std::vector<std::string> notes;
  Verdict verdict = Verdict::holds;

  bool any_user_asserted() const;
  void set(const std::string& key, const std::string& value);
  const std::string* get(const std::string& key) const;
  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

/// c_1 >= λ(J/I) when Gr_I is CM; equality forces Gr_J CM.
VerificationReport verify_northcott(const Ideal& I, const Ideal& J, const Options& opt = {});
/// c_2 >= 0 when Gr_I is CM; for d = 2 equality forces Gr_(J^n) CM for large n.
VerificationReport verify_narita(const Ideal& I, const Ideal& J, const Options& opt = {});
/// d = 2, J integrally closed, c_1 = λ(J/I) + 1: 2λ(J/I) <= λ(J̃^2/I^2) <= 2λ(J/I) + 1.
VerificationReport verify_ic_bound(const Ideal& I, const Ideal& J, const Options& opt = {});
/// d >= 3, J asymptotically normal: c_3 >= 0; for d = 3 equality forces Gr_(J^n) CM for large n.
VerificationReport verify_itoh(const Ideal& I, const Ideal& J, const Options& opt = {});

/// Dispatch on "northcott", "narita", "ic_bound" or "itoh".
VerificationReport verify(const std::string& theorem, const Ideal& I, const Ideal& J, const Options& opt = {});

}  // namespace relhilb
