#ifndef P53SCAN_PIPELINE_HPP
#define P53SCAN_PIPELINE_HPP

#include <chrono>
#include <ctime>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "p53scan/alignment.hpp"
#include "p53scan/composition.hpp"
#include "p53scan/mutcall.hpp"
#include "p53scan/mutdb.hpp"
#include "p53scan/refstore.hpp"
#include "p53scan/translation.hpp"

namespace p53scan {

inline constexpr std::string_view kToolName = "p53scan";
inline constexpr std::string_view kToolVersion = "0.1.0";
inline constexpr int kReportVersion = 1;
inline constexpr std::string_view kDefaultGene = "TP53";

enum class VerdictKind { NoRisk, SilentOnly, UnknownCancer, PreCancerMatch };

inline std::string_view verdict_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::NoRisk: return "NoRisk";
    case VerdictKind::SilentOnly: return "SilentOnly";
    case VerdictKind::UnknownCancer: return "UnknownCancer";
    case VerdictKind::PreCancerMatch: return "PreCancerMatch";
  }
  return "?";
}

struct PredictConfig {
  double gc_threshold = kDefaultGcThreshold;
  ScoringScheme dna_scheme = ScoringScheme::dna_default();
  ScoringScheme protein_scheme = ScoringScheme::protein_default();
  std::size_t rank_prefix_cap = kDefaultRankPrefixCap;
  bool allow_partial = false;  // truncate to whole codons instead of failing

  void validate() const {
    if (!(gc_threshold >= 0.0 && gc_threshold <= 100.0))
      throw Error(Errc::InvalidArgument, "GC threshold must lie in [0, 100]");
    dna_scheme.validate();
    protein_scheme.validate();
    if (rank_prefix_cap == 0) throw Error(Errc::InvalidArgument, "prefix cap must be positive");
  }
};

/// One reference considered by the GC gate, in the order tried.
struct GateStep {
  std::string source;
  std::string sequence_id;
  int priority = 0;
  std::int64_t rank_score = 0;
  double gc_percent = 0.0;
  GateDecision decision = GateDecision::Reject;

  friend bool operator==(const GateStep&, const GateStep&) = default;
};

struct ReferenceDescriptor {
  std::string gene;
  std::string source;
  std::string sequence_id;
  int priority = 0;
  std::size_t length = 0;

  friend bool operator==(const ReferenceDescriptor&, const ReferenceDescriptor&) = default;
};

/// Database lookup outcome for one protein-changing mutation.
struct MutationAnnotation {
  std::size_t codon_number = 0;
  bool matched = false;
  std::vector<std::string> record_ids;
  std::vector<std::string> tumor_types;
  std::vector<std::string> warnings;

  friend bool operator==(const MutationAnnotation&, const MutationAnnotation&) = default;
};

struct ProteinComparison {
  std::int64_t score = 0;
  double identity_percent = 0.0;
  std::size_t length = 0;

  friend bool operator==(const ProteinComparison&, const ProteinComparison&) = default;
};

struct Verdict {
  VerdictKind kind = VerdictKind::NoRisk;
  MutationCallSet mutations;
  std::optional<AnnotationResult> annotations;
  std::vector<MutationAnnotation> classifications;
  std::optional<ProteinComparison> protein;
  ReferenceDescriptor reference_used;
  CompositionReport gc_report;
  std::vector<GateStep> gate_trace;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct PredictionReport {
  Verdict verdict;
  std::string subject_id;
  std::string generated_at;  // ISO-8601 UTC
  std::string tool_version = std::string(kToolVersion);
  std::vector<std::string> warnings;

  friend bool operator==(const PredictionReport&, const PredictionReport&) = default;
};

/// NoReferenceAccepted, carrying the rejected attempts.
class NoReferenceError : public Error {
 public:
  explicit NoReferenceError(std::vector<GateStep> trace)
      : Error(Errc::NoReferenceAccepted,
              "all " + std::to_string(trace.size()) + " candidate reference(s) failed the GC gate"),
        trace_(std::move(trace)) {}

  const std::vector<GateStep>& gate_trace() const noexcept { return trace_; }

 private:
  std::vector<GateStep> trace_;
};

inline std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

namespace detail {

inline Sequence whole_codons(const Sequence& s, bool allow_partial, std::string_view role,
                             std::vector<std::string>& warnings) {
  if (s.size() % 3 == 0) return s;
  if (!allow_partial)
    throw Error(Errc::NotInFrame, std::string(role) + " '" + s.id() + "' length " +
                                      std::to_string(s.size()) + " is not a multiple of 3");
  const std::size_t keep = s.size() - s.size() % 3;
  warnings.push_back(std::string(role) + " '" + s.id() + "' truncated from " +
                     std::to_string(s.size()) + " to " + std::to_string(keep) + " bases");
  return s.prefix(keep);
}

}  // namespace detail

/// Runs the whole prediction: pick a GC-gated homolog, call codon changes
/// against it, and look protein-changing ones up in the mutation database.
///
/// `store` and `db` are only read; concurrent calls over shared instances are
/// fine.
inline PredictionReport predict(const ReferenceStore& store, const Database& db,
                                const Sequence& subject, const std::string& gene,
                                const PredictConfig& config = {}) {
  config.validate();
  if (subject.alphabet() != Alphabet::Dna)
    throw Error(Errc::AlphabetMismatch, "subject must be a DNA sequence");
  if (subject.size() < 3) throw Error(Errc::TooShort, "subject must hold at least one codon");

  PredictionReport report;
  report.subject_id = subject.id();
  report.generated_at = utc_timestamp();
  const Sequence subj = detail::whole_codons(subject, config.allow_partial, "subject", report.warnings);

  Verdict& v = report.verdict;
  const auto ranked =
      best_homolog(store, subj, gene, config.dna_scheme, config.rank_prefix_cap);
  const ReferenceEntry* chosen = nullptr;
  for (const auto& cand : ranked) {
    CompositionReport comp = composition(cand.entry->sequence);
    const GateDecision d = reference_gate(comp, config.gc_threshold);
    v.gate_trace.push_back({cand.entry->source, cand.entry->sequence.id(), cand.entry->priority,
                            cand.score, comp.gc_percent, d});
    if (d == GateDecision::Accept) {
      chosen = cand.entry;
      v.gc_report = std::move(comp);
      break;
    }
  }
  if (!chosen) throw NoReferenceError(v.gate_trace);

  v.reference_used = {chosen->gene, chosen->source, chosen->sequence.id(), chosen->priority,
                      chosen->sequence.size()};
  const Sequence ref =
      detail::whole_codons(chosen->sequence, config.allow_partial, "reference", report.warnings);

  v.mutations = call_mutations(ref, subj, config.dna_scheme);
  if (v.mutations.dna_identical) {
    v.kind = VerdictKind::NoRisk;
    return report;
  }

  const AlignmentResult prot =
      align_global(translate(ref).protein, translate(subj).protein, config.protein_scheme);
  v.protein = ProteinComparison{prot.score, identity_percent(prot), prot.length()};

  if (!protein_differs(v.mutations)) {
    v.kind = VerdictKind::SilentOnly;
    return report;
  }

  AnnotationResult merged;
  std::unordered_set<std::string> seen;
  for (const auto& m : v.mutations.mutations) {
    if (m.kind == MutationKind::Silent) continue;
    Classification c = db.classify(m);
    MutationAnnotation a;
    a.codon_number = m.codon_number;
    a.matched = c.matched();
    a.warnings = c.warnings;
    if (c.match) {
      for (const auto& rec : c.match->matches) {
        a.record_ids.push_back(rec.record_id);
        if (seen.insert(rec.record_id).second) merged.matches.push_back(rec);
      }
      a.tumor_types = c.match->distinct_tumor_types;
    }
    report.warnings.insert(report.warnings.end(), c.warnings.begin(), c.warnings.end());
    v.classifications.push_back(std::move(a));
  }

  if (merged.matches.empty()) {
    v.kind = VerdictKind::UnknownCancer;
  } else {
    merged.distinct_tumor_types = distinct_tumor_types(merged.matches);
    v.annotations = std::move(merged);
    v.kind = VerdictKind::PreCancerMatch;
  }
  return report;
}

}  // namespace p53scan

#endif  // P53SCAN_PIPELINE_HPP
