#include <sstream>

#include "relhilb/commands.hpp"
#include "relhilb/errors.hpp"
#include "relhilb/hilbert.hpp"
#include "relhilb/reduction.hpp"
#include "relhilb/rr_closure.hpp"
#include "relhilb/verifier.hpp"

namespace relhilb {

using Json = nlohmann::ordered_json;

std::vector<std::string> split_args(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

namespace {

Json ints(const std::vector<BigInt>& v) {
  Json a = Json::array();
  for (const BigInt& x : v) a.push_back(x.get_str());
  return a;
}

std::string num(std::size_t v) { return std::to_string(v); }

std::string list_text(const std::vector<BigInt>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
  return s + ")";
}

Json polys(const Ring& ring, const std::vector<Polynomial>& ps) {
  Json a = Json::array();
  for (const Polynomial& p : ps) a.push_back(ring->format(p));
  return a;
}

unsigned parse_unsigned(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    unsigned long v = std::stoul(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return static_cast<unsigned>(v);
  } catch (const std::logic_error&) {
    throw UsageError("expected a non-negative integer for " + what + ", got '" + s + "'");
  }
}

void arity(const std::vector<std::string>& args, std::size_t lo, std::size_t hi, const std::string& usage) {
  if (args.size() < lo + 1 || args.size() > hi + 1) throw UsageError("usage: " + usage);
}

std::string probe_line(const DepthProbeResult& p) {
  std::string s = to_string(p.verdict);
  if (p.witness_n) s += " at n = " + std::to_string(*p.witness_n);
  if (p.witness_element) s += " (element " + std::to_string(*p.witness_element) + ")";
  return s;
}

Json probe_json(const DepthProbeResult& p) {
  Json j;
  j["k"] = num(p.k);
  j["verdict"] = to_string(p.verdict);
  j["checked_to"] = num(p.checked_to);
  j["witness_n"] = p.witness_n ? Json(num(*p.witness_n)) : Json(nullptr);
  j["witness_element"] = p.witness_element ? Json(num(*p.witness_element)) : Json(nullptr);
  j["reduction_number"] = p.reduction_number ? Json(num(*p.reduction_number)) : Json(nullptr);
  return j;
}

CommandResult cmd_length(const Problem& pb, const std::vector<std::string>& a) {
  arity(a, 1, 1, "length <ideal>");
  LocalLength l = local_length(pb.ideal(a[1]));
  CommandResult r;
  r.json = {{"command", "length"}, {"ideal", a[1]}, {"infinite", l.infinite}};
  r.json["length"] = l.infinite ? Json(nullptr) : Json(num(l.value));
  r.text = "length(A/" + a[1] + ") = " + (l.infinite ? std::string("infinite") : num(l.value)) + "\n";
  return r;
}

CommandResult cmd_hilbert(const Problem& pb, const std::vector<std::string>& a, const Options& opt) {
  arity(a, 1, 1, "hilbert <ideal>");
  const Ideal& K = pb.ideal(a[1]);
  HilbertSeries hs = hilbert_series(K, opt);
  FiltrationTable t = hs_table(K, hs.n_max);
  CommandResult r;
  Json table = Json::array();
  for (std::size_t v : t.values) table.push_back(num(v));
  r.json = {{"command", "hilbert"}, {"ideal", a[1]},     {"numerator", ints(hs.numerator)},
            {"dim", num(hs.dim)},   {"series", hs.display()}, {"postulation", num(hs.postulation)},
            {"table", table}};
  r.text = "H_" + a[1] + "(t) = " + hs.display() + "\npostulation " + num(hs.postulation) + "\n";
  return r;
}

CommandResult cmd_coeffs(const Problem& pb, const std::vector<std::string>& a, const Options& opt) {
  arity(a, 1, 1, "coeffs <ideal>");
  CoefficientVector e = coefficients(hilbert_series(pb.ideal(a[1]), opt));
  CommandResult r;
  r.json = {{"command", "coeffs"}, {"ideal", a[1]}, {"e", ints(e.e)}};
  r.text = "e(" + a[1] + ") = " + list_text(e.e) + "\n";
  return r;
}

CommandResult cmd_relcoeffs(const Problem& pb, const std::vector<std::string>& a, const Options& opt) {
  arity(a, 2, 2, "relcoeffs <I> <J>");
  RelativeCoefficients rc = relative_coefficients(pb.ideal(a[1]), pb.ideal(a[2]), opt);
  CommandResult r;
  r.json = {{"command", "relcoeffs"},
            {"I", a[1]},
            {"J", a[2]},
            {"c", ints(rc.c)},
            {"r", ints(rc.r)},
            {"e_I", ints(coefficients(rc.hs_i).e)},
            {"e_J", ints(coefficients(rc.hs_j).e)}};
  r.text = "c = " + list_text(rc.c) + "\nr(z) = " + format_poly(rc.r) + "\n";
  return r;
}

CommandResult cmd_wseries(const Problem& pb, const std::vector<std::string>& a, const Options& opt) {
  arity(a, 2, 3, "wseries <I> <J> [n_max]");
  unsigned n = a.size() > 3 ? parse_unsigned(a[3], "n_max") : opt.n_max;
  WSeriesCheck w = w_series_check(pb.ideal(a[1]), pb.ideal(a[2]), n, opt);
  CommandResult r;
  r.json = {{"command", "wseries"},   {"I", a[1]},  {"J", a[2]}, {"computed", ints(w.computed)},
            {"predicted", ints(w.predicted)}, {"matches", w.matches()}};
  r.text = "W = " + list_text(w.computed) + (w.matches() ? " (matches r(z)/(1-z)^d)\n" : " (MISMATCH)\n");
  return r;
}

CommandResult cmd_reduction(const Problem& pb, const std::vector<std::string>& a, const Options& opt) {
  arity(a, 2, 2, "reduction <I> <J>");
  ReductionCertificate c = is_reduction(pb.ideal(a[1]), pb.ideal(a[2]), opt);
  CommandResult r;
  r.json = {{"command", "reduction"}, {"I", a[1]}, {"J", a[2]}, {"is_reduction", c.is_reduction}};
  r.json["reduction_number"] = c.reduction_number ? Json(num(*c.reduction_number)) : Json(nullptr);
  r.json["note"] = c.note;
  r.text = c.is_reduction ? a[1] + " is a reduction of " + a[2] + ", r = " + num(*c.reduction_number) + "\n"
                          : a[1] + " is not a reduction of " + a[2] + (c.note.empty() ? "" : " (" + c.note + ")") + "\n";
  return r;
}

CommandResult cmd_rr(const Problem& pb, const std::vector<std::string>& a, const Options& opt) {
  arity(a, 2, 2, "rr <ideal> <n>");
  const Ideal& K = pb.ideal(a[1]);
  unsigned n = parse_unsigned(a[2], "n");
  RRClosure c = rr_closure(K, n, opt);
  std::size_t lp = length(ideal_power(K, n));
  CommandResult r;
  r.json = {{"command", "rr"},
            {"ideal", a[1]},
            {"n", num(n)},
            {"colength", num(c.colength)},
            {"power_colength", num(lp)},
            {"stabilized_k", num(c.stabilized_k)},
            {"equals_power", c.equals_power()},
            {"new_generators", polys(pb.ring, c.new_generators)}};
  r.text = "RR closure of " + a[1] + "^" + num(n) + ": colength " + num(c.colength) + " (power " + num(lp) +
           "), stabilized at k = " + num(c.stabilized_k) + "\n";
  for (const Polynomial& g : c.new_generators) r.text += "  + " + pb.ring->format(g) + "\n";
  return r;
}

CommandResult cmd_rrseries(const Problem& pb, const std::vector<std::string>& a, const Options& opt) {
  arity(a, 2, 3, "rrseries <I> <J> [n_max]");
  unsigned n = a.size() > 3 ? parse_unsigned(a[3], "n_max") : opt.n_max;
  RRSeries s = rr_series(pb.ideal(a[1]), pb.ideal(a[2]), n, opt);
  CommandResult r;
  r.json = {{"command", "rrseries"}, {"I", a[1]},       {"J", a[2]},       {"numerator", ints(s.series.numerator)},
            {"r", ints(s.r)},        {"c", ints(s.c)}, {"w", ints(s.w)}};
  r.text = "h~ = " + s.series.display() + "\nr~(z) = " + format_poly(s.r) + "\nW~ = " + list_text(s.w) + "\n";
  return r;
}

std::vector<Polynomial> sequence_for(const Problem& pb, const Ideal& K, const std::vector<std::string>& a,
                                     std::size_t at, const Options& opt) {
  if (a.size() > at) return pb.ideal(a[at]).generators();
  SuperficialSequence s;
  minimal_reduction(K, opt, &s);
  return s.elements;
}

CommandResult cmd_cmtest(const Problem& pb, const std::vector<std::string>& a, const Options& opt) {
  arity(a, 1, 3, "cmtest <ideal> [k] [sequence-ideal]");
  const Ideal& K = pb.ideal(a[1]);
  unsigned k = a.size() > 2 ? parse_unsigned(a[2], "k") : pb.ring->dim();
  std::vector<Polynomial> seq = sequence_for(pb, K, a, 3, opt);
  DepthProbeResult p = vv_depth_probe(K, k, seq, opt.n_max, opt);
  CommandResult r;
  r.json = {{"command", "cmtest"}, {"ideal", a[1]}, {"seed", std::to_string(opt.seed)}, {"sequence", polys(pb.ring, seq)}};
  r.json["probe"] = probe_json(p);
  r.text = "depth probe k = " + num(k) + ": " + probe_line(p) + "\n";
  return r;
}

CommandResult cmd_hmsums(const Problem& pb, const std::vector<std::string>& a, const Options& opt) {
  arity(a, 2, 2, "hmsums <I> <q>");
  HMSums h = hm_sums(pb.ideal(a[1]), pb.ideal(a[2]), opt);
  CommandResult r;
  r.json = {{"command", "hmsums"},
            {"I", a[1]},
            {"q", a[2]},
            {"lower_terms", ints(h.lower_terms)},
            {"upper_terms", ints(h.upper_terms)},
            {"s_lower", h.s_lower.get_str()},
            {"s_upper", h.s_upper.get_str()},
            {"e1", h.e1.get_str()},
            {"cm_consistent", h.cm_consistent()},
            {"depth_consistent", h.depth_consistent()}};
  r.text = "lower terms " + list_text(h.lower_terms) + ", S_lower = " + h.s_lower.get_str() + "\nupper terms " +
           list_text(h.upper_terms) + ", S_upper = " + h.s_upper.get_str() + "\ne_1 = " + h.e1.get_str() + "\n";
  if (h.cm_consistent()) r.text += "consistent with Gr Cohen-Macaulay\n";
  if (h.depth_consistent()) r.text += "consistent with depth Gr >= d-1\n";
  return r;
}

CommandResult cmd_link(const Problem& pb, const std::vector<std::string>& a) {
  arity(a, 1, 2, "link <q> [m]");
  Ideal m = a.size() > 2 ? pb.ideal(a[2]) : Ideal::maximal(pb.ring);
  LinkIdeal l = link_ideal(pb.ideal(a[1]), m);
  CommandResult r;
  r.json = {{"command", "link"},
            {"q", a[1]},
            {"generators", polys(pb.ring, l.ideal.generators())},
            {"colength", num(length(l.ideal))},
            {"degenerate", l.degenerate},
            {"minimal_multiplicity", l.minimal_multiplicity}};
  r.text = "(" + a[1] + " : m) = " + l.ideal.to_string() + (l.degenerate ? " (degenerate)" : "") +
           (l.minimal_multiplicity ? "\nI^2 = qI verified\n" : "\n");
  return r;
}

CommandResult cmd_explore(const Problem& pb, const std::vector<std::string>& a, const Options& opt) {
  unsigned from = opt.explore_from, to = opt.explore_to;
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == "--range" && i + 1 < a.size()) {
      const std::string& s = a[++i];
      auto dots = s.find("..");
      if (dots == std::string::npos) throw UsageError("range must look like a..b");
      from = parse_unsigned(s.substr(0, dots), "range start");
      to = parse_unsigned(s.substr(dots + 2), "range end");
    } else {
      rest.push_back(a[i]);
    }
  }
  arity(rest, 1, 1, "explore <J> --range a..b");
  ExploreReport ex = explore_asymptotic(pb.ideal(rest[1]), from, to, opt);
  CommandResult r;
  Json rows = Json::array();
  for (const ExploreRow& row : ex.rows) {
    rows.push_back({{"n", num(row.n)},
                    {"reduction_ok", row.reduction_ok},
                    {"e0_ok", row.e0_ok},
                    {"probe", probe_json(row.probe)},
                    {"rr_closed", row.rr_closed}});
    r.text += "n = " + num(row.n) + ": " + probe_line(row.probe) + (row.rr_closed ? "" : ", not Ratliff-Rush closed") + "\n";
  }
  r.json = {{"command", "explore"}, {"J", rest[1]}, {"seed", std::to_string(opt.seed)},
            {"sequence", polys(pb.ring, ex.sequence)}, {"rows", rows}};
  r.json["first_cm"] = ex.first_cm ? Json(num(*ex.first_cm)) : Json(nullptr);
  r.json["persists"] = ex.persists;
  r.text += ex.first_cm ? "CERTIFIED_CM from n = " + num(*ex.first_cm) + (ex.persists ? " through the window\n" : " (too short to persist)\n")
                        : "no CERTIFIED_CM tail in the window\n";
  return r;
}

CommandResult cmd_verify(const Problem& pb, const std::vector<std::string>& a, const Options& opt) {
  arity(a, 3, 3, "verify <northcott|narita|ic_bound|itoh> <I> <J>");
  VerificationReport rep = verify(a[1], pb.ideal(a[2]), pb.ideal(a[3]), opt);
  CommandResult r;
  r.json = rep.to_json();
  r.json["command"] = "verify";
  r.text = rep.to_text();
  return r;
}

}  // namespace

CommandResult run_command(const Problem& problem, const std::vector<std::string>& args, const Options& opt) {
  if (args.empty()) throw UsageError("missing subcommand");
  const std::string& c = args[0];
  if (c == "length") return cmd_length(problem, args);
  if (c == "hilbert") return cmd_hilbert(problem, args, opt);
  if (c == "coeffs") return cmd_coeffs(problem, args, opt);
  if (c == "relcoeffs") return cmd_relcoeffs(problem, args, opt);
  if (c == "wseries") return cmd_wseries(problem, args, opt);
  if (c == "reduction") return cmd_reduction(problem, args, opt);
  if (c == "rr") return cmd_rr(problem, args, opt);
  if (c == "rrseries") return cmd_rrseries(problem, args, opt);
  if (c == "cmtest") return cmd_cmtest(problem, args, opt);
  if (c == "hmsums") return cmd_hmsums(problem, args, opt);
  if (c == "link") return cmd_link(problem, args);
  if (c == "explore") return cmd_explore(problem, args, opt);
  if (c == "verify") return cmd_verify(problem, args, opt);
  throw UsageError("unknown subcommand '" + c + "'");
}

}  // namespace relhilb
