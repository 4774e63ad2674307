#ifndef P53SCAN_TESTS_ORACLES_HPP
#define P53SCAN_TESTS_ORACLES_HPP

// Test-only reference computations. None of these call into the library
// paths they are used to check.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

inline std::string data_path(const std::string& name) {
  return std::string(P53SCAN_DATA_DIR) + "/" + name;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Concatenated residues of the first FASTA record, uppercased.
inline std::string first_record_residues(const std::string& path) {
  std::ifstream in(path);
  std::string line, out;
  bool in_first = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '>') {
      if (in_first) break;
      in_first = true;
      continue;
    }
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c)))
        out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  }
  return out;
}

struct GcCount {
  long gc = 0, at = 0, n = 0;
  double gc_percent() const { return 100.0 * gc / static_cast<double>(gc + at); }
};

inline GcCount count_gc(const std::string& residues) {
  GcCount c;
  for (char ch : residues) {
    if (ch == 'G' || ch == 'C') ++c.gc;
    else if (ch == 'A' || ch == 'T') ++c.at;
    else ++c.n;
  }
  return c;
}

// Standard genetic code written out codon by codon, as it appears in
// textbook tables; independent of the library's packed string.
inline const std::map<std::string, char>& standard_code_listing() {
  static const std::map<std::string, char> table = {
      {"TTT", 'F'}, {"TTC", 'F'}, {"TTA", 'L'}, {"TTG", 'L'},
      {"CTT", 'L'}, {"CTC", 'L'}, {"CTA", 'L'}, {"CTG", 'L'},
      {"ATT", 'I'}, {"ATC", 'I'}, {"ATA", 'I'}, {"ATG", 'M'},
      {"GTT", 'V'}, {"GTC", 'V'}, {"GTA", 'V'}, {"GTG", 'V'},
      {"TCT", 'S'}, {"TCC", 'S'}, {"TCA", 'S'}, {"TCG", 'S'},
      {"CCT", 'P'}, {"CCC", 'P'}, {"CCA", 'P'}, {"CCG", 'P'},
      {"ACT", 'T'}, {"ACC", 'T'}, {"ACA", 'T'}, {"ACG", 'T'},
      {"GCT", 'A'}, {"GCC", 'A'}, {"GCA", 'A'}, {"GCG", 'A'},
      {"TAT", 'Y'}, {"TAC", 'Y'}, {"TAA", '*'}, {"TAG", '*'},
      {"CAT", 'H'}, {"CAC", 'H'}, {"CAA", 'Q'}, {"CAG", 'Q'},
      {"AAT", 'N'}, {"AAC", 'N'}, {"AAA", 'K'}, {"AAG", 'K'},
      {"GAT", 'D'}, {"GAC", 'D'}, {"GAA", 'E'}, {"GAG", 'E'},
      {"TGT", 'C'}, {"TGC", 'C'}, {"TGA", '*'}, {"TGG", 'W'},
      {"CGT", 'R'}, {"CGC", 'R'}, {"CGA", 'R'}, {"CGG", 'R'},
      {"AGT", 'S'}, {"AGC", 'S'}, {"AGA", 'R'}, {"AGG", 'R'},
      {"GGT", 'G'}, {"GGC", 'G'}, {"GGA", 'G'}, {"GGG", 'G'},
  };
  return table;
}

inline char oracle_translate(const std::string& codon) {
  if (codon.find('N') != std::string::npos) return 'X';
  return standard_code_listing().at(codon);
}

/// Codon numbers whose amino acids differ between two equal-frame CDSs.
inline std::vector<std::size_t> aa_disagreements(const std::string& ref, const std::string& subj) {
  std::vector<std::size_t> out;
  const std::size_t codons = std::min(ref.size(), subj.size()) / 3;
  for (std::size_t c = 0; c < codons; ++c)
    if (oracle_translate(ref.substr(3 * c, 3)) != oracle_translate(subj.substr(3 * c, 3)))
      out.push_back(c + 1);
  return out;
}

struct Scheme {
  int match, mismatch, gap_open, gap_extend;
};

// Walks every monotone alignment path of a against b (no memoization) and
// returns the best affine score. prev: 0 = aligned pair / start, 1 = gap in b,
// 2 = gap in a.
class BruteForceAligner {
 public:
  BruteForceAligner(const std::string& a, const std::string& b, Scheme s) : a_(a), b_(b), s_(s) {}

  std::int64_t best() {
    best_ = std::numeric_limits<std::int64_t>::min();
    walk(0, 0, 0, 0);
    return best_;
  }

  std::uint64_t paths() const { return paths_; }

 private:
  void walk(std::size_t i, std::size_t j, int prev, std::int64_t acc) {
    if (i == a_.size() && j == b_.size()) {
      ++paths_;
      best_ = std::max(best_, acc);
      return;
    }
    if (i < a_.size() && j < b_.size())
      walk(i + 1, j + 1, 0, acc + (a_[i] == b_[j] ? s_.match : s_.mismatch));
    if (i < a_.size()) walk(i + 1, j, 1, acc + (prev == 1 ? s_.gap_extend : s_.gap_open));
    if (j < b_.size()) walk(i, j + 1, 2, acc + (prev == 2 ? s_.gap_extend : s_.gap_open));
  }

  const std::string& a_;
  const std::string& b_;
  Scheme s_;
  std::int64_t best_ = 0;
  std::uint64_t paths_ = 0;
};

inline std::int64_t brute_force_score(const std::string& a, const std::string& b, Scheme s) {
  return BruteForceAligner(a, b, s).best();
}

/// Every string of length `len` over `alphabet`, lexicographic.
inline std::vector<std::string> all_strings(const std::string& alphabet, std::size_t len) {
  std::vector<std::string> out{""};
  for (std::size_t k = 0; k < len; ++k) {
    std::vector<std::string> next;
    next.reserve(out.size() * alphabet.size());
    for (const auto& s : out)
      for (char c : alphabet) next.push_back(s + c);
    out = std::move(next);
  }
  return out;
}

/// Mutation-table rows as raw field maps, read with plain line splitting.
struct TsvTable {
  std::vector<std::string> header;
  std::vector<std::map<std::string, std::string>> rows;
};

inline TsvTable read_tsv(const std::string& path) {
  TsvTable t;
  std::ifstream in(path);
  std::string line;
  auto split = [](const std::string& l) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ss(l);
    while (std::getline(ss, cell, '\t')) cells.push_back(cell);
    if (!l.empty() && l.back() == '\t') cells.emplace_back();
    return cells;
  };
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto cells = split(line);
    if (first) {
      t.header = cells;
      first = false;
      continue;
    }
    std::map<std::string, std::string> row;
    for (std::size_t i = 0; i < t.header.size(); ++i) row[t.header[i]] = cells.at(i);
    t.rows.push_back(std::move(row));
  }
  return t;
}

inline std::string fold(std::string s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t k = 0;
  while (k < s.size() && std::isspace(static_cast<unsigned char>(s[k]))) ++k;
  s.erase(0, k);
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

/// record_ids of rows where every (field, value) pair matches, file order.
inline std::vector<std::string> linear_scan(const TsvTable& t,
                                            const std::vector<std::pair<std::string, std::string>>& clauses) {
  std::vector<std::string> ids;
  for (const auto& row : t.rows) {
    bool ok = true;
    for (const auto& [f, v] : clauses) {
      if (f == "codon") {
        ok = ok && std::stol(row.at(f)) == std::stol(v);
      } else {
        ok = ok && fold(row.at(f)) == fold(v);
      }
    }
    if (ok) ids.push_back(row.at("record_id"));
  }
  return ids;
}

}  // namespace oracle

#endif  // P53SCAN_TESTS_ORACLES_HPP
