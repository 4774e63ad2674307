#ifndef P53SCAN_ALIGNMENT_HPP
#define P53SCAN_ALIGNMENT_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "p53scan/seqio.hpp"

namespace p53scan {

/// Match/mismatch scoring with affine gaps. A gap run of length L costs
/// gap_open + (L - 1) * gap_extend.
struct ScoringScheme {
  int match = 2;
  int mismatch = -1;
  int gap_open = -5;
  int gap_extend = -1;

  static constexpr ScoringScheme dna_default() { return {2, -1, -5, -1}; }
  static constexpr ScoringScheme protein_default() { return {4, -2, -10, -1}; }

  void validate() const {
    if (!(match > mismatch))
      throw Error(Errc::InvalidScheme, "match must exceed mismatch");
    if (!(gap_open <= gap_extend && gap_extend <= 0))
      throw Error(Errc::InvalidScheme, "gap penalties must satisfy gap_open <= gap_extend <= 0");
  }

  friend bool operator==(const ScoringScheme&, const ScoringScheme&) = default;
};

/// Insert: gap in the first row. Delete: gap in the second row.
enum class EditOp : std::uint8_t { Match, Mismatch, Insert, Delete };

inline std::string_view edit_op_name(EditOp op) {
  switch (op) {
    case EditOp::Match: return "Match";
    case EditOp::Mismatch: return "Mismatch";
    case EditOp::Insert: return "Insert";
    case EditOp::Delete: return "Delete";
  }
  return "?";
}

struct EditRun {
  EditOp op;
  std::size_t length;
  friend bool operator==(const EditRun&, const EditRun&) = default;
};

struct AlignmentResult {
  std::string aligned_a;
  std::string aligned_b;
  std::int64_t score = 0;
  std::vector<EditRun> ops;

  std::size_t length() const noexcept { return aligned_a.size(); }

  /// One EditOp per column.
  std::vector<EditOp> columns() const {
    std::vector<EditOp> cols;
    cols.reserve(aligned_a.size());
    for (const auto& run : ops) cols.insert(cols.end(), run.length, run.op);
    return cols;
  }

  friend bool operator==(const AlignmentResult&, const AlignmentResult&) = default;
};

inline constexpr char kGap = '-';

/// Re-scores an alignment column by column under `scheme`, charging each
/// maximal gap run in either row once for opening.
inline std::int64_t score_alignment(const std::string& row_a, const std::string& row_b,
                                    const ScoringScheme& scheme) {
  std::int64_t total = 0;
  bool gap_a = false, gap_b = false;
  for (std::size_t k = 0; k < row_a.size(); ++k) {
    const char x = row_a[k], y = row_b[k];
    if (x == kGap) {
      total += gap_a ? scheme.gap_extend : scheme.gap_open;
      gap_a = true;
      gap_b = false;
    } else if (y == kGap) {
      total += gap_b ? scheme.gap_extend : scheme.gap_open;
      gap_b = true;
      gap_a = false;
    } else {
      total += x == y ? scheme.match : scheme.mismatch;
      gap_a = gap_b = false;
    }
  }
  return total;
}

namespace detail {

enum State : std::uint8_t { kM = 0, kD = 1, kI = 2 };

// Picks the best of three candidates; ties resolve M, then D, then I.
inline std::pair<std::int64_t, std::uint8_t> best3(std::int64_t m, std::int64_t d,
                                                   std::int64_t i) {
  if (m >= d && m >= i) return {m, kM};
  if (d >= i) return {d, kD};
  return {i, kI};
}

}  // namespace detail

/// Optimal global alignment (Gotoh). Memory is one traceback byte per DP cell.
inline AlignmentResult align_global(const Sequence& a, const Sequence& b,
                                    const ScoringScheme& scheme) {
  using detail::best3;
  using detail::kD;
  using detail::kI;
  using detail::kM;

  if (a.alphabet() != b.alphabet())
    throw Error(Errc::AlphabetMismatch, "cannot align " + std::string(alphabet_name(a.alphabet())) +
                                            " against " + std::string(alphabet_name(b.alphabet())));
  if (a.size() == 0 || b.size() == 0) throw Error(Errc::EmptyInput, "alignment input is empty");
  scheme.validate();

  const std::string& sa = a.residues();
  const std::string& sb = b.residues();
  const std::size_t m = sa.size(), n = sb.size();
  const std::size_t cols = n + 1;
  constexpr std::int64_t kNeg = std::numeric_limits<std::int64_t>::min() / 4;
  const std::int64_t open = scheme.gap_open, ext = scheme.gap_extend;

  // trace byte: bits 0-1 predecessor of M, bits 2-3 of D, bits 4-5 of I
  std::vector<std::uint8_t> trace((m + 1) * cols, 0);
  std::vector<std::int64_t> pm(cols), pd(cols), pi(cols), cm(cols), cd(cols), ci(cols);

  pm[0] = 0;
  pd[0] = kNeg;
  pi[0] = kNeg;
  for (std::size_t j = 1; j <= n; ++j) {
    pm[j] = kNeg;
    pd[j] = kNeg;
    pi[j] = open + static_cast<std::int64_t>(j - 1) * ext;
    trace[j] = static_cast<std::uint8_t>((j == 1 ? kM : kI) << 4);
  }

  for (std::size_t i = 1; i <= m; ++i) {
    cm[0] = kNeg;
    cd[0] = open + static_cast<std::int64_t>(i - 1) * ext;
    ci[0] = kNeg;
    trace[i * cols] = static_cast<std::uint8_t>((i == 1 ? kM : kD) << 2);
    const char x = sa[i - 1];
    for (std::size_t j = 1; j <= n; ++j) {
      const auto [bm, fm] = best3(pm[j - 1], pd[j - 1], pi[j - 1]);
      cm[j] = bm + (x == sb[j - 1] ? scheme.match : scheme.mismatch);
      const auto [bd, fd] = best3(pm[j] + open, pd[j] + ext, pi[j] + open);
      cd[j] = bd;
      const auto [bi, fi] = best3(cm[j - 1] + open, cd[j - 1] + open, ci[j - 1] + ext);
      ci[j] = bi;
      trace[i * cols + j] = static_cast<std::uint8_t>(fm | (fd << 2) | (fi << 4));
    }
    std::swap(pm, cm);
    std::swap(pd, cd);
    std::swap(pi, ci);
  }

  AlignmentResult result;
  auto [score, state] = best3(pm[n], pd[n], pi[n]);
  result.score = score;

  std::string ra, rb;
  std::vector<EditOp> cols_rev;
  ra.reserve(m + n);
  rb.reserve(m + n);
  std::size_t i = m, j = n;
  while (i > 0 || j > 0) {
    const std::uint8_t t = trace[i * cols + j];
    if (state == kM) {
      const char x = sa[i - 1], y = sb[j - 1];
      ra.push_back(x);
      rb.push_back(y);
      cols_rev.push_back(x == y ? EditOp::Match : EditOp::Mismatch);
      state = t & 3;
      --i;
      --j;
    } else if (state == kD) {
      ra.push_back(sa[i - 1]);
      rb.push_back(kGap);
      cols_rev.push_back(EditOp::Delete);
      state = (t >> 2) & 3;
      --i;
    } else {
      ra.push_back(kGap);
      rb.push_back(sb[j - 1]);
      cols_rev.push_back(EditOp::Insert);
      state = (t >> 4) & 3;
      --j;
    }
  }
  std::reverse(ra.begin(), ra.end());
  std::reverse(rb.begin(), rb.end());
  std::reverse(cols_rev.begin(), cols_rev.end());

  for (EditOp op : cols_rev) {
    if (!result.ops.empty() && result.ops.back().op == op)
      ++result.ops.back().length;
    else
      result.ops.push_back({op, 1});
  }
  result.aligned_a = std::move(ra);
  result.aligned_b = std::move(rb);
  return result;
}

/// Percentage of columns that are exact matches.
inline double identity_percent(const AlignmentResult& r) {
  if (r.length() == 0) return 0.0;
  std::size_t matches = 0;
  for (const auto& run : r.ops)
    if (run.op == EditOp::Match) matches += run.length;
  return 100.0 * static_cast<double>(matches) / static_cast<double>(r.length());
}

}  // namespace p53scan

#endif  // P53SCAN_ALIGNMENT_HPP
