#ifndef P53SCAN_TESTS_SUPPORT_HPP
#define P53SCAN_TESTS_SUPPORT_HPP

#include <unistd.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"

namespace support {

/// Scratch directory removed on destruction.
class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("p53scan-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::string str() const { return path_.string(); }

  std::string write(const std::string& name, const std::string& content) const {
    const auto p = path_ / name;
    std::ofstream(p) << content;
    return p.string();
  }

 private:
  std::filesystem::path path_;
};

struct StoreEntry {
  std::string file, id, gene, source;
  int priority;
  std::string residues;
};

/// Writes a manifest and one FASTA per entry into `dir`.
inline void write_store(const TempDir& dir, const std::vector<StoreEntry>& entries) {
  std::string manifest = "file\tgene\tsource\tpriority\n";
  for (const auto& e : entries) {
    manifest += e.file + "\t" + e.gene + "\t" + e.source + "\t" + std::to_string(e.priority) + "\n";
    dir.write(e.file, ">" + e.id + "\n" + e.residues + "\n");
  }
  dir.write("manifest.tsv", manifest);
}

inline std::string reference_cds() {
  return oracle::first_record_residues(oracle::data_path("tp53_reference.fasta"));
}

/// `n` substitutions at distinct positions in [lo, hi) drawn from `rng`;
/// `at_rich` sends G/C to A/T (lowering GC), otherwise G<->C and A<->T.
inline std::string substitute(std::string s, std::size_t n, bool at_rich, std::mt19937_64& rng,
                              std::vector<bool>& used) {
  std::size_t done = 0;
  while (done < n) {
    const std::size_t p = rng() % s.size();
    if (used[p] || s[p] == 'N') continue;
    const char c = s[p];
    if (at_rich) {
      if (c != 'G' && c != 'C') continue;
      s[p] = c == 'G' ? 'A' : 'T';
    } else {
      s[p] = c == 'G' ? 'C' : c == 'C' ? 'G' : c == 'A' ? 'T' : 'A';
    }
    used[p] = true;
    ++done;
  }
  return s;
}

/// Two homologs of the reference fixture: the first has GC below 38% and
/// is closer to the reference; the second keeps GC unchanged.
inline std::pair<std::string, std::string> fallback_pair() {
  const std::string ref = reference_cds();
  std::mt19937_64 rng(38);
  std::vector<bool> used(ref.size(), false);
  std::string low = substitute(ref, 220, true, rng, used);
  std::string ok = substitute(ref, 250, false, rng, used);
  return {low, ok};
}

/// Reference CDS with up to five codons replaced. Each replaced codon is a
/// database hit, or a random synonymous, missense or stop codon.
inline std::string mutated_subject(const std::string& ref, std::mt19937_64& rng,
                                   const oracle::TsvTable& db) {
  const auto& code = oracle::standard_code_listing();
  std::vector<std::string> codons;
  for (const auto& [c, aa] : code) codons.push_back(c);
  const std::size_t determined = ref.size() / 3 - 1;  // final codon is NNN

  std::string s = ref;
  std::vector<bool> taken(determined + 1, false);
  const std::size_t k = rng() % 6;
  for (std::size_t done = 0; done < k;) {
    std::size_t c;
    std::string alt;
    if (rng() % 4 == 0) {
      const auto& row = db.rows[rng() % db.rows.size()];
      c = std::stoul(row.at("codon"));
      alt = row.at("mut_codon");
    } else {
      c = 1 + rng() % determined;
      const std::string wt = ref.substr(3 * (c - 1), 3);
      const char aa = code.at(wt);
      const int want = static_cast<int>(rng() % 3);  // 0 silent, 1 missense, 2 stop
      std::vector<std::string> pool;
      for (const auto& cand : codons) {
        if (cand == wt) continue;
        const char b = code.at(cand);
        if ((want == 0 && b == aa) || (want == 1 && b != aa && b != '*') || (want == 2 && b == '*' && aa != '*'))
          pool.push_back(cand);
      }
      if (pool.empty()) continue;
      alt = pool[rng() % pool.size()];
    }
    if (taken[c] || s.substr(3 * (c - 1), 3) == alt) continue;
    taken[c] = true;
    s.replace(3 * (c - 1), 3, alt);
    ++done;
  }
  return s;
}

}  // namespace support

#endif  // P53SCAN_TESTS_SUPPORT_HPP
