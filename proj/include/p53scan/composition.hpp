#ifndef P53SCAN_COMPOSITION_HPP
#define P53SCAN_COMPOSITION_HPP

#include <cstdint>
#include <map>

#include "p53scan/seqio.hpp"

namespace p53scan {

inline constexpr double kDefaultGcThreshold = 38.0;

struct CompositionReport {
  std::map<char, std::uint64_t> counts;  // A, C, G, T, N; zero entries kept
  double gc_percent = 0.0;
  double at_percent = 0.0;
  std::uint64_t length = 0;

  friend bool operator==(const CompositionReport&, const CompositionReport&) = default;
};

enum class GateDecision { Accept, Reject };

inline std::string_view gate_name(GateDecision d) {
  return d == GateDecision::Accept ? "Accept" : "Reject";
}

/// Nucleotide tally with GC/AT fractions over the determined bases (N excluded
/// from the denominator).
inline CompositionReport composition(const Sequence& seq) {
  if (seq.alphabet() != Alphabet::Dna)
    throw Error(Errc::AlphabetMismatch, "composition requires a DNA sequence");
  CompositionReport r;
  for (char b : {'A', 'C', 'G', 'T', 'N'}) r.counts[b] = 0;
  for (char c : seq.residues()) ++r.counts[c];
  r.length = seq.size();

  const auto gc = r.counts['G'] + r.counts['C'];
  const auto at = r.counts['A'] + r.counts['T'];
  const auto determined = gc + at;
  if (determined == 0)
    throw Error(Errc::AllAmbiguous, "sequence '" + seq.id() + "' is entirely N");
  r.gc_percent = 100.0 * static_cast<double>(gc) / static_cast<double>(determined);
  r.at_percent = 100.0 * static_cast<double>(at) / static_cast<double>(determined);
  return r;
}

/// Accept iff gc_percent >= threshold.
inline GateDecision reference_gate(double gc_percent,
                                   double threshold_percent = kDefaultGcThreshold) {
  return gc_percent >= threshold_percent ? GateDecision::Accept : GateDecision::Reject;
}

inline GateDecision reference_gate(const CompositionReport& report,
                                   double threshold_percent = kDefaultGcThreshold) {
  return reference_gate(report.gc_percent, threshold_percent);
}

}  // namespace p53scan

#endif  // P53SCAN_COMPOSITION_HPP
