#ifndef P53SCAN_REFSTORE_HPP
#define P53SCAN_REFSTORE_HPP

#include <algorithm>
#include <filesystem>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "p53scan/alignment.hpp"
#include "p53scan/seqio.hpp"
#include "p53scan/text.hpp"

namespace p53scan {

inline constexpr std::size_t kDefaultRankPrefixCap = 5000;
inline constexpr std::string_view kManifestName = "manifest.tsv";

struct ReferenceEntry {
  std::string source;  // e.g. "ncbi-export"
  std::string gene;
  Sequence sequence;
  int priority = 0;  // lower is preferred on score ties

  friend bool operator==(const ReferenceEntry&, const ReferenceEntry&) = default;
};

struct RankedCandidate {
  const ReferenceEntry* entry;
  std::int64_t score;
};

/// Locally exported normal homologs, immutable after load.
class ReferenceStore {
 public:
  ReferenceStore() = default;

  explicit ReferenceStore(std::vector<ReferenceEntry> entries) {
    std::set<std::pair<std::string, std::string>> keys;
    for (const auto& e : entries) {
      if (e.gene.empty()) throw Error(Errc::ManifestError, "entry with empty gene");
      if (e.sequence.alphabet() != Alphabet::Dna)
        throw Error(Errc::ManifestError, "reference '" + e.sequence.id() + "' is not DNA");
      if (!keys.emplace(e.gene, e.source).second)
        throw Error(Errc::ManifestError, "duplicate entry (" + e.gene + ", " + e.source + ")");
    }
    entries_ = std::move(entries);
  }

  const std::vector<ReferenceEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

 private:
  std::vector<ReferenceEntry> entries_;
};

/// Reads `<dir>/manifest.tsv` (columns file, gene, source, priority). Each
/// listed FASTA file must hold exactly one DNA record.
inline ReferenceStore load_store(const std::filesystem::path& dir) {
  const auto manifest = dir / kManifestName;
  if (!std::filesystem::exists(manifest)) throw Error(Errc::ManifestError, "no entries");

  const std::string text = read_text_file(manifest.string());
  const auto lines = detail::split_lines(text);
  std::size_t li = 0;
  while (li < lines.size() && detail::blank_or_comment(lines[li])) ++li;
  if (li == lines.size()) throw Error(Errc::ManifestError, "no entries");

  std::vector<std::string> header;
  for (auto c : detail::split_tabs(lines[li])) header.emplace_back(detail::trim(c));
  auto col = [&](std::string_view name) {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end())
      throw Error(Errc::ManifestError, "manifest lacks column '" + std::string(name) + "'");
    return static_cast<std::size_t>(it - header.begin());
  };
  const std::size_t c_file = col("file"), c_gene = col("gene"), c_source = col("source"),
                    c_priority = col("priority");

  std::vector<ReferenceEntry> entries;
  for (++li; li < lines.size(); ++li) {
    const std::string where = "manifest line " + std::to_string(li + 1);
    if (detail::blank_or_comment(lines[li])) continue;
    auto cells = detail::split_tabs(lines[li]);
    if (cells.size() != header.size())
      throw Error(Errc::ManifestError, where + ": expected " + std::to_string(header.size()) +
                                           " fields");
    auto cell = [&](std::size_t i) { return std::string(detail::trim(cells[i])); };
    auto priority = detail::parse_int(cells[c_priority]);
    if (!priority) throw Error(Errc::ManifestError, where + ": priority is not an integer");
    if (cell(c_gene).empty() || cell(c_source).empty() || cell(c_file).empty())
      throw Error(Errc::ManifestError, where + ": empty file, gene or source");

    FastaDocument doc = read_fasta((dir / cell(c_file)).string(), Alphabet::Dna);
    if (doc.size() != 1)
      throw Error(Errc::ManifestError, where + ": '" + cell(c_file) + "' must hold exactly one record");
    entries.push_back({cell(c_source), cell(c_gene), doc[0], static_cast<int>(*priority)});
  }
  if (entries.empty()) throw Error(Errc::ManifestError, "no entries");
  return ReferenceStore(std::move(entries));
}

/// Candidates for `gene`, best first: higher alignment score against the
/// query, then lower priority, then manifest order. Scores use prefixes of at
/// most `prefix_cap` bases.
inline std::vector<RankedCandidate> best_homolog(
    const ReferenceStore& store, const Sequence& query, const std::string& gene,
    const ScoringScheme& scheme = ScoringScheme::dna_default(),
    std::size_t prefix_cap = kDefaultRankPrefixCap) {
  if (store.empty()) throw Error(Errc::GeneNotFound, "reference store is empty");
  if (prefix_cap == 0) throw Error(Errc::InvalidArgument, "prefix cap must be positive");
  const Sequence q = query.prefix(prefix_cap);
  std::vector<RankedCandidate> out;
  for (const auto& e : store.entries()) {
    if (e.gene != gene) continue;
    out.push_back({&e, align_global(q, e.sequence.prefix(prefix_cap), scheme).score});
  }
  if (out.empty()) throw Error(Errc::GeneNotFound, "no reference for gene '" + gene + "'");
  std::stable_sort(out.begin(), out.end(), [](const RankedCandidate& a, const RankedCandidate& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.entry->priority < b.entry->priority;
  });
  return out;
}

}  // namespace p53scan

#endif  // P53SCAN_REFSTORE_HPP
