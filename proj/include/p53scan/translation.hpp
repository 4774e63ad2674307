#ifndef P53SCAN_TRANSLATION_HPP
#define P53SCAN_TRANSLATION_HPP

#include <array>
#include <string>
#include <string_view>

#include "p53scan/seqio.hpp"

namespace p53scan {

/// Standard nuclear genetic code (NCBI translation table 1).
class CodonTable {
 public:
  static const CodonTable& standard() {
    static const CodonTable table;
    return table;
  }

  /// Amino acid for a codon over {A,C,G,T}; 'X' when any base is N.
  char translate(std::string_view codon) const {
    if (codon.size() != 3)
      throw Error(Errc::InvalidArgument, "codon must have 3 bases: '" + std::string(codon) + "'");
    int index = 0;
    for (char c : codon) {
      const int v = base_index(c);
      if (v == kAmbiguous) return 'X';
      if (v < 0) throw Error(Errc::InvalidArgument, "not a DNA codon: '" + std::string(codon) + "'");
      index = index * 4 + v;
    }
    return kCode[index];
  }

  /// The codon at `index` in TCAG order, 0..63.
  static std::string codon(int index) {
    static constexpr char kBases[] = {'T', 'C', 'A', 'G'};
    return {kBases[(index >> 4) & 3], kBases[(index >> 2) & 3], kBases[index & 3]};
  }

  static constexpr int size() { return 64; }

 private:
  CodonTable() = default;

  static constexpr int kAmbiguous = -2;

  static int base_index(char c) {
    switch (c) {
      case 'T': return 0;
      case 'C': return 1;
      case 'A': return 2;
      case 'G': return 3;
      case 'N': return kAmbiguous;
      default: return -1;
    }
  }

  // first base T,C,A,G (blocks of 16), second base within block, third fastest
  static constexpr std::string_view kCode =
      "FFLLSSSSYY**CC*W"
      "LLLLPPPPHHQQRRRR"
      "IIIMTTTTNNKKSSRR"
      "VVVVAAAADDEEGGGG";
};

struct Translation {
  Sequence protein;
  std::size_t trailing_bases = 0;  // bases past the last whole codon, ignored
};

/// Reads codons from `frame` to the end; stops are emitted as '*'.
inline Translation translate(const Sequence& cds, int frame = 0,
                             const CodonTable& table = CodonTable::standard()) {
  if (cds.alphabet() != Alphabet::Dna)
    throw Error(Errc::AlphabetMismatch, "translate requires a DNA sequence");
  if (frame < 0 || frame > 2) throw Error(Errc::InvalidArgument, "frame must be 0, 1 or 2");
  const auto& r = cds.residues();
  const std::size_t f = static_cast<std::size_t>(frame);
  if (r.size() < f + 3)
    throw Error(Errc::TooShort, "sequence '" + cds.id() + "' has fewer than 3 bases in frame " +
                                    std::to_string(frame));
  std::string aa;
  aa.reserve((r.size() - f) / 3);
  std::size_t i = f;
  for (; i + 3 <= r.size(); i += 3) aa.push_back(table.translate(std::string_view(r).substr(i, 3)));
  return {Sequence::make(cds.id(), std::move(aa), Alphabet::Protein, cds.description()),
          r.size() - i};
}

/// 1-based codon number relative to the CDS start.
inline std::string codon_at(const Sequence& cds, std::size_t codon_number) {
  if (codon_number == 0 || 3 * codon_number > cds.size())
    throw Error(Errc::OutOfRange, "codon " + std::to_string(codon_number) + " is outside '" +
                                      cds.id() + "' (" + std::to_string(cds.size() / 3) +
                                      " whole codons)");
  return cds.residues().substr(3 * (codon_number - 1), 3);
}

}  // namespace p53scan

#endif  // P53SCAN_TRANSLATION_HPP
