#ifndef P53SCAN_MUTCALL_HPP
#define P53SCAN_MUTCALL_HPP

#include <string>
#include <vector>

#include "p53scan/alignment.hpp"
#include "p53scan/translation.hpp"

namespace p53scan {

enum class MutationKind { Silent, Missense, Nonsense };

inline std::string_view mutation_kind_name(MutationKind k) {
  switch (k) {
    case MutationKind::Silent: return "Silent";
    case MutationKind::Missense: return "Missense";
    case MutationKind::Nonsense: return "Nonsense";
  }
  return "?";
}

inline MutationKind classify_change(char ref_aa, char alt_aa) {
  if (ref_aa == alt_aa) return MutationKind::Silent;
  if (alt_aa == '*') return MutationKind::Nonsense;
  return MutationKind::Missense;
}

struct CodonMutation {
  std::size_t codon_number = 0;  // 1-based in reference coordinates
  std::string ref_codon;
  std::string alt_codon;
  char ref_aa = 'X';
  char alt_aa = 'X';
  MutationKind kind = MutationKind::Silent;

  friend bool operator==(const CodonMutation&, const CodonMutation&) = default;
};

/// "248 CGG>TGG R>W Missense"
inline std::string describe(const CodonMutation& m) {
  return std::to_string(m.codon_number) + ' ' + m.ref_codon + '>' + m.alt_codon + ' ' +
         m.ref_aa + '>' + m.alt_aa + ' ' + std::string(mutation_kind_name(m.kind));
}

struct MutationCallSet {
  std::vector<CodonMutation> mutations;  // ascending, unique codon numbers
  bool has_indel = false;
  bool dna_identical = false;

  friend bool operator==(const MutationCallSet&, const MutationCallSet&) = default;
};

/// Codon-level differences of `subj_cds` against `ref_cds`.
///
/// Codons are numbered in reference coordinates. A codon touched by an
/// aligned gap (a deleted base, or an insertion between two of its bases) is
/// not resolved; its presence only sets has_indel.
inline MutationCallSet call_mutations(const Sequence& ref_cds, const Sequence& subj_cds,
                                      const ScoringScheme& scheme = ScoringScheme::dna_default(),
                                      const CodonTable& table = CodonTable::standard()) {
  if (ref_cds.alphabet() != Alphabet::Dna || subj_cds.alphabet() != Alphabet::Dna)
    throw Error(Errc::AlphabetMismatch, "mutation calling requires DNA sequences");
  if (ref_cds.size() < 3 || subj_cds.size() < 3)
    throw Error(Errc::TooShort, "mutation calling requires at least one codon per sequence");

  const AlignmentResult aln = align_global(ref_cds, subj_cds, scheme);
  const std::size_t codons = ref_cds.size() / 3;
  std::vector<char> tainted(codons, 0), changed(codons, 0);
  std::vector<std::string> alt(codons, std::string(3, kGap));

  MutationCallSet out;
  bool any_difference = false;
  std::size_t ref_pos = 0;  // reference residues consumed so far
  std::size_t col = 0;
  for (const auto& run : aln.ops) {
    for (std::size_t k = 0; k < run.length; ++k, ++col) {
      switch (run.op) {
        case EditOp::Match:
        case EditOp::Mismatch: {
          const std::size_t c = ref_pos / 3;
          if (c < codons) {
            alt[c][ref_pos % 3] = aln.aligned_b[col];
            if (run.op == EditOp::Mismatch) changed[c] = 1;
          }
          if (run.op == EditOp::Mismatch) any_difference = true;
          ++ref_pos;
          break;
        }
        case EditOp::Delete:
          if (ref_pos / 3 < codons) tainted[ref_pos / 3] = 1;
          out.has_indel = true;
          any_difference = true;
          ++ref_pos;
          break;
        case EditOp::Insert:
          if (ref_pos % 3 != 0 && (ref_pos - 1) / 3 < codons) tainted[(ref_pos - 1) / 3] = 1;
          out.has_indel = true;
          any_difference = true;
          break;
      }
    }
  }

  const auto& ref = ref_cds.residues();
  for (std::size_t c = 0; c < codons; ++c) {
    if (!changed[c] || tainted[c]) continue;
    CodonMutation m;
    m.codon_number = c + 1;
    m.ref_codon = ref.substr(3 * c, 3);
    m.alt_codon = alt[c];
    m.ref_aa = table.translate(m.ref_codon);
    m.alt_aa = table.translate(m.alt_codon);
    m.kind = classify_change(m.ref_aa, m.alt_aa);
    out.mutations.push_back(std::move(m));
  }
  out.dna_identical = !any_difference;
  return out;
}

/// True iff the subject protein differs: any non-silent change or any indel.
inline bool protein_differs(const MutationCallSet& calls) {
  if (calls.has_indel) return true;
  for (const auto& m : calls.mutations)
    if (m.kind != MutationKind::Silent) return true;
  return false;
}

}  // namespace p53scan

#endif  // P53SCAN_MUTCALL_HPP
