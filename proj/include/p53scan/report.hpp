#ifndef P53SCAN_REPORT_HPP
#define P53SCAN_REPORT_HPP

// JSON and plain-text renderings of every result type. The JSON layout is the
// versioned report schema (report_version 1), documented in README.md.

#include <cstdio>
#include <sstream>
#include <string>

#include "json.hpp"
#include "p53scan/pipeline.hpp"

namespace p53scan {

using nlohmann::json;

namespace detail {

template <class Enum, std::size_t N>
Enum enum_from_name(const json& j, const std::array<Enum, N>& all,
                    std::string_view (*name)(Enum)) {
  const auto s = j.get<std::string>();
  for (Enum e : all)
    if (name(e) == s) return e;
  throw Error(Errc::BadReport, "unknown enumerator '" + s + "'");
}

inline char single_char(const json& j) {
  const auto s = j.get<std::string>();
  if (s.size() != 1) throw Error(Errc::BadReport, "expected a single character, got '" + s + "'");
  return s[0];
}

inline std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace detail

inline void to_json(json& j, const CompositionReport& r) {
  json counts = json::object();
  for (const auto& [base, n] : r.counts) counts[std::string(1, base)] = n;
  j = {{"length", r.length}, {"counts", counts}, {"gc_percent", r.gc_percent},
       {"at_percent", r.at_percent}};
}

inline void from_json(const json& j, CompositionReport& r) {
  r.length = j.at("length").get<std::uint64_t>();
  r.counts.clear();
  for (const auto& [k, v] : j.at("counts").items()) {
    if (k.size() != 1) throw Error(Errc::BadReport, "bad count key '" + k + "'");
    r.counts[k[0]] = v.get<std::uint64_t>();
  }
  r.gc_percent = j.at("gc_percent").get<double>();
  r.at_percent = j.at("at_percent").get<double>();
}

inline void to_json(json& j, const ScoringScheme& s) {
  j = {{"match", s.match}, {"mismatch", s.mismatch}, {"gap_open", s.gap_open},
       {"gap_extend", s.gap_extend}};
}

inline void from_json(const json& j, ScoringScheme& s) {
  s = {j.at("match").get<int>(), j.at("mismatch").get<int>(), j.at("gap_open").get<int>(),
       j.at("gap_extend").get<int>()};
}

inline void to_json(json& j, const AlignmentResult& r) {
  json ops = json::array();
  for (const auto& run : r.ops) ops.push_back({{"op", edit_op_name(run.op)}, {"length", run.length}});
  j = {{"aligned_a", r.aligned_a}, {"aligned_b", r.aligned_b}, {"score", r.score},
       {"ops", ops}, {"identity_percent", identity_percent(r)}};
}

inline void from_json(const json& j, AlignmentResult& r) {
  static constexpr std::array<EditOp, 4> kOps = {EditOp::Match, EditOp::Mismatch, EditOp::Insert,
                                                 EditOp::Delete};
  r.aligned_a = j.at("aligned_a").get<std::string>();
  r.aligned_b = j.at("aligned_b").get<std::string>();
  r.score = j.at("score").get<std::int64_t>();
  r.ops.clear();
  for (const auto& o : j.at("ops"))
    r.ops.push_back({detail::enum_from_name(o.at("op"), kOps, edit_op_name),
                     o.at("length").get<std::size_t>()});
}

inline void to_json(json& j, const CodonMutation& m) {
  j = {{"codon_number", m.codon_number},
       {"ref_codon", m.ref_codon},
       {"alt_codon", m.alt_codon},
       {"ref_aa", std::string(1, m.ref_aa)},
       {"alt_aa", std::string(1, m.alt_aa)},
       {"kind", mutation_kind_name(m.kind)}};
}

inline void from_json(const json& j, CodonMutation& m) {
  static constexpr std::array<MutationKind, 3> kKinds = {
      MutationKind::Silent, MutationKind::Missense, MutationKind::Nonsense};
  m.codon_number = j.at("codon_number").get<std::size_t>();
  m.ref_codon = j.at("ref_codon").get<std::string>();
  m.alt_codon = j.at("alt_codon").get<std::string>();
  m.ref_aa = detail::single_char(j.at("ref_aa"));
  m.alt_aa = detail::single_char(j.at("alt_aa"));
  m.kind = detail::enum_from_name(j.at("kind"), kKinds, mutation_kind_name);
}

inline void to_json(json& j, const MutationCallSet& c) {
  j = {{"mutations", c.mutations}, {"has_indel", c.has_indel}, {"dna_identical", c.dna_identical}};
}

inline void from_json(const json& j, MutationCallSet& c) {
  c.mutations = j.at("mutations").get<std::vector<CodonMutation>>();
  c.has_indel = j.at("has_indel").get<bool>();
  c.dna_identical = j.at("dna_identical").get<bool>();
}

inline void to_json(json& j, const MutationRecord& r) {
  json extra = json::array();
  for (const auto& [k, v] : r.extra) extra.push_back({{"name", k}, {"value", v}});
  j = {{"record_id", r.record_id},   {"codon", r.codon_number},
       {"wt_codon", r.wt_codon},     {"mut_codon", r.mut_codon},
       {"wt_aa", r.wt_aa},           {"mut_aa", r.mut_aa},
       {"mutation_event", r.mutation_event}, {"tumor_type", r.tumor_type},
       {"extra", extra}};
}

inline void from_json(const json& j, MutationRecord& r) {
  r.record_id = j.at("record_id").get<std::string>();
  r.codon_number = j.at("codon").get<std::size_t>();
  r.wt_codon = j.at("wt_codon").get<std::string>();
  r.mut_codon = j.at("mut_codon").get<std::string>();
  r.wt_aa = j.at("wt_aa").get<std::string>();
  r.mut_aa = j.at("mut_aa").get<std::string>();
  r.mutation_event = j.at("mutation_event").get<std::string>();
  r.tumor_type = j.at("tumor_type").get<std::string>();
  r.extra.clear();
  for (const auto& e : j.at("extra"))
    r.extra.emplace_back(e.at("name").get<std::string>(), e.at("value").get<std::string>());
}

inline void to_json(json& j, const AnnotationResult& a) {
  j = {{"matches", a.matches}, {"distinct_tumor_types", a.distinct_tumor_types}};
}

inline void from_json(const json& j, AnnotationResult& a) {
  a.matches = j.at("matches").get<std::vector<MutationRecord>>();
  a.distinct_tumor_types = j.at("distinct_tumor_types").get<std::vector<std::string>>();
}

inline void to_json(json& j, const GateStep& g) {
  j = {{"source", g.source},         {"sequence_id", g.sequence_id}, {"priority", g.priority},
       {"rank_score", g.rank_score}, {"gc_percent", g.gc_percent},
       {"decision", gate_name(g.decision)}};
}

inline void from_json(const json& j, GateStep& g) {
  static constexpr std::array<GateDecision, 2> kDecisions = {GateDecision::Accept,
                                                             GateDecision::Reject};
  g.source = j.at("source").get<std::string>();
  g.sequence_id = j.at("sequence_id").get<std::string>();
  g.priority = j.at("priority").get<int>();
  g.rank_score = j.at("rank_score").get<std::int64_t>();
  g.gc_percent = j.at("gc_percent").get<double>();
  g.decision = detail::enum_from_name(j.at("decision"), kDecisions, gate_name);
}

inline void to_json(json& j, const ReferenceDescriptor& r) {
  j = {{"gene", r.gene}, {"source", r.source}, {"sequence_id", r.sequence_id},
       {"priority", r.priority}, {"length", r.length}};
}

inline void from_json(const json& j, ReferenceDescriptor& r) {
  r.gene = j.at("gene").get<std::string>();
  r.source = j.at("source").get<std::string>();
  r.sequence_id = j.at("sequence_id").get<std::string>();
  r.priority = j.at("priority").get<int>();
  r.length = j.at("length").get<std::size_t>();
}

inline void to_json(json& j, const MutationAnnotation& a) {
  j = {{"codon_number", a.codon_number}, {"matched", a.matched}, {"record_ids", a.record_ids},
       {"tumor_types", a.tumor_types}, {"warnings", a.warnings}};
}

inline void from_json(const json& j, MutationAnnotation& a) {
  a.codon_number = j.at("codon_number").get<std::size_t>();
  a.matched = j.at("matched").get<bool>();
  a.record_ids = j.at("record_ids").get<std::vector<std::string>>();
  a.tumor_types = j.at("tumor_types").get<std::vector<std::string>>();
  a.warnings = j.at("warnings").get<std::vector<std::string>>();
}

inline void to_json(json& j, const ProteinComparison& p) {
  j = {{"score", p.score}, {"identity_percent", p.identity_percent}, {"length", p.length}};
}

inline void from_json(const json& j, ProteinComparison& p) {
  p.score = j.at("score").get<std::int64_t>();
  p.identity_percent = j.at("identity_percent").get<double>();
  p.length = j.at("length").get<std::size_t>();
}

inline void to_json(json& j, const Verdict& v) {
  j = {{"kind", verdict_name(v.kind)},
       {"mutations", v.mutations},
       {"annotations", v.annotations ? json(*v.annotations) : json(nullptr)},
       {"classifications", v.classifications},
       {"protein_comparison", v.protein ? json(*v.protein) : json(nullptr)},
       {"reference_used", v.reference_used},
       {"gc_report", v.gc_report},
       {"gate_trace", v.gate_trace}};
}

inline void from_json(const json& j, Verdict& v) {
  static constexpr std::array<VerdictKind, 4> kKinds = {
      VerdictKind::NoRisk, VerdictKind::SilentOnly, VerdictKind::UnknownCancer,
      VerdictKind::PreCancerMatch};
  v.kind = detail::enum_from_name(j.at("kind"), kKinds, verdict_name);
  v.mutations = j.at("mutations").get<MutationCallSet>();
  const auto& ann = j.at("annotations");
  v.annotations = ann.is_null() ? std::nullopt : std::optional(ann.get<AnnotationResult>());
  v.classifications = j.at("classifications").get<std::vector<MutationAnnotation>>();
  const auto& prot = j.at("protein_comparison");
  v.protein = prot.is_null() ? std::nullopt : std::optional(prot.get<ProteinComparison>());
  v.reference_used = j.at("reference_used").get<ReferenceDescriptor>();
  v.gc_report = j.at("gc_report").get<CompositionReport>();
  v.gate_trace = j.at("gate_trace").get<std::vector<GateStep>>();
}

inline void to_json(json& j, const PredictionReport& r) {
  j = {{"report_version", kReportVersion},
       {"tool", {{"name", kToolName}, {"version", r.tool_version}}},
       {"generated_at", r.generated_at},
       {"subject_id", r.subject_id},
       {"warnings", r.warnings},
       {"verdict", r.verdict}};
}

inline void from_json(const json& j, PredictionReport& r) {
  const int version = j.at("report_version").get<int>();
  if (version != kReportVersion)
    throw Error(Errc::BadReport, "unsupported report_version " + std::to_string(version));
  r.tool_version = j.at("tool").at("version").get<std::string>();
  r.generated_at = j.at("generated_at").get<std::string>();
  r.subject_id = j.at("subject_id").get<std::string>();
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
  r.verdict = j.at("verdict").get<Verdict>();
}

/// Structured (JSON) text of any serializable result.
template <class T>
std::string to_structured(const T& value) {
  return json(value).dump(2) + "\n";
}

/// Parses structured text back, mapping schema violations to BadReport.
template <class T>
T from_structured(std::string_view text) {
  try {
    return json::parse(text).get<T>();
  } catch (const json::exception& e) {
    throw Error(Errc::BadReport, e.what());
  }
}

// Plain-text renderings.

inline std::string render_text(const CompositionReport& r, std::string_view id = {}) {
  std::ostringstream os;
  if (!id.empty()) os << id << '\n';
  os << "  length     " << r.length << '\n';
  for (const auto& [base, n] : r.counts) os << "  " << base << "          " << n << '\n';
  os << "  GC%        " << detail::fixed2(r.gc_percent) << "%\n";
  os << "  AT%        " << detail::fixed2(r.at_percent) << "%\n";
  return os.str();
}

inline std::string render_text(const AlignmentResult& r, std::size_t width = 60) {
  std::ostringstream os;
  os << "score " << r.score << "  identity " << detail::fixed2(identity_percent(r)) << "%  length "
     << r.length() << '\n';
  os << "ops";
  for (const auto& run : r.ops) os << ' ' << edit_op_name(run.op) << 'x' << run.length;
  os << "\n\n";
  for (std::size_t i = 0; i < r.length(); i += width) {
    const std::string a = r.aligned_a.substr(i, width), b = r.aligned_b.substr(i, width);
    std::string mid(a.size(), ' ');
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a[k] == b[k] && a[k] != kGap) mid[k] = '|';
    os << a << '\n' << mid << '\n' << b << "\n\n";
  }
  return os.str();
}

inline std::string render_text(const MutationCallSet& c) {
  std::ostringstream os;
  os << "dna_identical " << (c.dna_identical ? "yes" : "no") << '\n';
  os << "has_indel     " << (c.has_indel ? "yes" : "no") << '\n';
  os << "mutations     " << c.mutations.size() << '\n';
  for (const auto& m : c.mutations) os << "  " << describe(m) << '\n';
  return os.str();
}

inline std::string render_text(const AnnotationResult& a) {
  std::ostringstream os;
  os << a.matches.size() << " matching record(s)\n";
  for (const auto& r : a.matches)
    os << "  " << r.record_id << "  codon " << r.codon_number << "  " << r.wt_codon << '>'
       << r.mut_codon << "  " << r.wt_aa << '>' << r.mut_aa << "  " << r.tumor_type << '\n';
  os << "tumor types:";
  for (const auto& t : a.distinct_tumor_types) os << "\n  " << t;
  os << '\n';
  return os.str();
}

inline std::string render_text(const PredictionReport& r) {
  const Verdict& v = r.verdict;
  std::ostringstream os;
  os << "subject     " << r.subject_id << '\n';
  os << "verdict     " << verdict_name(v.kind) << '\n';
  os << "reference   " << v.reference_used.sequence_id << " (" << v.reference_used.gene << ", "
     << v.reference_used.source << ", priority " << v.reference_used.priority << ")\n";
  os << "GC%         " << detail::fixed2(v.gc_report.gc_percent) << "%\n";
  os << "gate trace\n";
  for (const auto& g : v.gate_trace)
    os << "  " << g.source << ' ' << g.sequence_id << "  GC " << detail::fixed2(g.gc_percent)
       << "%  " << gate_name(g.decision) << '\n';
  os << "mutations   " << v.mutations.mutations.size()
     << (v.mutations.has_indel ? " (indel present)" : "") << '\n';
  for (const auto& m : v.mutations.mutations) os << "  " << describe(m) << '\n';
  if (v.protein)
    os << "protein     identity " << detail::fixed2(v.protein->identity_percent) << "% over "
       << v.protein->length << " columns\n";
  for (const auto& a : v.classifications) {
    os << "codon " << a.codon_number << ": "
       << (a.matched ? std::to_string(a.record_ids.size()) + " database record(s)"
                     : std::string("no database match"))
       << '\n';
    for (const auto& t : a.tumor_types) os << "  " << t << '\n';
  }
  for (const auto& w : r.warnings) os << "warning: " << w << '\n';
  return os.str();
}

}  // namespace p53scan

#endif  // P53SCAN_REPORT_HPP
