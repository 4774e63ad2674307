#ifndef P53SCAN_MUTDB_HPP
#define P53SCAN_MUTDB_HPP

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "p53scan/mutcall.hpp"
#include "p53scan/seqio.hpp"
#include "p53scan/text.hpp"

namespace p53scan {

/// One row of a TP53 mutation table.
struct MutationRecord {
  std::string record_id;
  std::size_t codon_number = 0;
  std::string wt_codon;
  std::string mut_codon;
  std::string wt_aa;
  std::string mut_aa;
  std::string mutation_event;
  std::string tumor_type;
  std::vector<std::pair<std::string, std::string>> extra;  // column order of the file

  friend bool operator==(const MutationRecord&, const MutationRecord&) = default;
};

namespace fields {
inline constexpr std::string_view kRecordId = "record_id";
inline constexpr std::string_view kCodon = "codon";
inline constexpr std::string_view kWtCodon = "wt_codon";
inline constexpr std::string_view kMutCodon = "mut_codon";
inline constexpr std::string_view kWtAa = "wt_aa";
inline constexpr std::string_view kMutAa = "mut_aa";
inline constexpr std::string_view kMutationEvent = "mutation_event";
inline constexpr std::string_view kTumorType = "tumor_type";

inline constexpr std::array<std::string_view, 8> kCanonical = {
    kRecordId, kCodon, kWtCodon, kMutCodon, kWtAa, kMutAa, kMutationEvent, kTumorType};
inline constexpr std::array<std::string_view, 6> kRequired = {kCodon, kWtCodon, kMutCodon,
                                                              kWtAa,  kMutAa,  kTumorType};
}  // namespace fields

namespace detail {

inline bool is_codon(std::string_view s) {
  return s.size() == 3 && std::all_of(s.begin(), s.end(), [](char c) {
           return c == 'A' || c == 'C' || c == 'G' || c == 'T';
         });
}

}  // namespace detail

/// Maps canonical field names to the column names a particular export uses.
/// Unmapped fields are looked up under their canonical name.
class ColumnMapping {
 public:
  ColumnMapping() = default;

  void set(std::string canonical, std::string column) {
    if (std::find(fields::kCanonical.begin(), fields::kCanonical.end(), canonical) ==
        fields::kCanonical.end())
      throw Error(Errc::InvalidArgument, "unknown canonical field '" + canonical + "'");
    map_[std::move(canonical)] = std::move(column);
  }

  std::string column_for(std::string_view canonical) const {
    auto it = map_.find(std::string(canonical));
    return it == map_.end() ? std::string(canonical) : it->second;
  }

  /// Two-column TSV: canonical name, export column name. '#' lines skipped.
  static ColumnMapping parse(std::string_view text) {
    ColumnMapping m;
    const auto lines = detail::split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
      const std::size_t line_no = i + 1;
      if (detail::blank_or_comment(lines[i])) continue;
      auto cells = detail::split_tabs(lines[i]);
      if (cells.size() != 2)
        throw Error(Errc::InvalidArgument,
                    "column map line " + std::to_string(line_no) + " needs 2 tab-separated fields");
      m.set(std::string(detail::trim(cells[0])), std::string(detail::trim(cells[1])));
    }
    return m;
  }

 private:
  std::map<std::string, std::string> map_;
};

struct EqualsText {
  std::string value;
  friend bool operator==(const EqualsText&, const EqualsText&) = default;
};
struct EqualsInt {
  long long value;
  friend bool operator==(const EqualsInt&, const EqualsInt&) = default;
};
using Predicate = std::variant<EqualsText, EqualsInt>;

struct Clause {
  std::string field;
  Predicate predicate;
  friend bool operator==(const Clause&, const Clause&) = default;
};

/// Conjunction of per-field equality clauses; empty matches every record.
class FilterQuery {
 public:
  FilterQuery() = default;

  FilterQuery& add(std::string field, Predicate p) {
    field = std::string(detail::trim(field));
    for (const auto& c : clauses_)
      if (c.field == field) throw Error(Errc::InvalidQuery, "duplicate clause for '" + field + "'");
    clauses_.push_back({std::move(field), std::move(p)});
    return *this;
  }

  /// Text clause, or an integer clause when the field is `codon`.
  FilterQuery& where(std::string field, std::string_view value) {
    if (detail::trim(field) == fields::kCodon) {
      auto v = detail::parse_int(value);
      if (!v) throw Error(Errc::InvalidQuery, "codon must be an integer, got '" + std::string(value) + "'");
      return add(std::move(field), EqualsInt{*v});
    }
    return add(std::move(field), EqualsText{std::string(value)});
  }

  /// Parses "field=value".
  FilterQuery& where(std::string_view clause) {
    const auto eq = clause.find('=');
    if (eq == std::string_view::npos || detail::trim(clause.substr(0, eq)).empty())
      throw Error(Errc::InvalidQuery, "expected field=value, got '" + std::string(clause) + "'");
    return where(std::string(detail::trim(clause.substr(0, eq))), clause.substr(eq + 1));
  }

  const std::vector<Clause>& clauses() const noexcept { return clauses_; }
  bool empty() const noexcept { return clauses_.empty(); }

 private:
  std::vector<Clause> clauses_;
};

struct AnnotationResult {
  std::vector<MutationRecord> matches;
  std::vector<std::string> distinct_tumor_types;  // sorted, unique

  friend bool operator==(const AnnotationResult&, const AnnotationResult&) = default;
};

inline std::vector<std::string> distinct_tumor_types(const std::vector<MutationRecord>& rows) {
  std::set<std::string> s;
  for (const auto& r : rows) s.insert(r.tumor_type);
  return {s.begin(), s.end()};
}

struct Classification {
  std::optional<AnnotationResult> match;  // empty means no database entry
  std::vector<std::string> warnings;

  bool matched() const noexcept { return match.has_value(); }
};

/// Immutable, loaded mutation table with a codon index.
class Database {
 public:
  Database() = default;

  /// `extra_columns` names the non-canonical fields records may carry.
  Database(std::vector<std::string> extra_columns, std::vector<MutationRecord> records)
      : extra_columns_(std::move(extra_columns)), records_(std::move(records)) {
    std::unordered_set<std::string> ids;
    for (std::size_t i = 0; i < records_.size(); ++i) {
      const auto& r = records_[i];
      if (!ids.insert(r.record_id).second)
        throw Error(Errc::InvalidArgument, "duplicate record_id '" + r.record_id + "'");
      if (r.codon_number < 1) throw Error(Errc::InvalidArgument, "codon_number must be >= 1");
      if (r.wt_codon == r.mut_codon)
        throw Error(Errc::InvalidArgument, "record '" + r.record_id + "' has wt_codon == mut_codon");
      by_codon_[r.codon_number].push_back(i);
    }
  }

  const std::vector<MutationRecord>& records() const noexcept { return records_; }
  const std::vector<std::string>& extra_columns() const noexcept { return extra_columns_; }
  std::size_t size() const noexcept { return records_.size(); }

  bool has_field(std::string_view name) const {
    return std::find(fields::kCanonical.begin(), fields::kCanonical.end(), name) !=
               fields::kCanonical.end() ||
           std::find(extra_columns_.begin(), extra_columns_.end(), name) != extra_columns_.end();
  }

  /// Raw text value of `field` on `r`; empty if the record lacks the column.
  static std::string field_value(const MutationRecord& r, std::string_view field) {
    using namespace fields;
    if (field == kRecordId) return r.record_id;
    if (field == kCodon) return std::to_string(r.codon_number);
    if (field == kWtCodon) return r.wt_codon;
    if (field == kMutCodon) return r.mut_codon;
    if (field == kWtAa) return r.wt_aa;
    if (field == kMutAa) return r.mut_aa;
    if (field == kMutationEvent) return r.mutation_event;
    if (field == kTumorType) return r.tumor_type;
    for (const auto& [k, v] : r.extra)
      if (k == field) return v;
    return {};
  }

  static bool satisfies(const MutationRecord& r, const Clause& c) {
    const std::string value = field_value(r, c.field);
    if (const auto* t = std::get_if<EqualsText>(&c.predicate))
      return detail::lower_trim(value) == detail::lower_trim(t->value);
    const auto v = detail::parse_int(value);
    return v && *v == std::get<EqualsInt>(c.predicate).value;
  }

  /// Records satisfying every clause, in file order.
  AnnotationResult query(const FilterQuery& q) const {
    for (const auto& c : q.clauses())
      if (!has_field(c.field)) throw Error(Errc::UnknownField, "no field named '" + c.field + "'");

    auto keep = [&](const MutationRecord& r) {
      return std::all_of(q.clauses().begin(), q.clauses().end(),
                         [&](const Clause& c) { return satisfies(r, c); });
    };

    AnnotationResult out;
    const Clause* codon_clause = nullptr;
    for (const auto& c : q.clauses())
      if (c.field == fields::kCodon && std::holds_alternative<EqualsInt>(c.predicate))
        codon_clause = &c;

    if (codon_clause) {
      const long long want = std::get<EqualsInt>(codon_clause->predicate).value;
      if (want >= 1) {
        auto it = by_codon_.find(static_cast<std::size_t>(want));
        if (it != by_codon_.end())
          for (std::size_t i : it->second)
            if (keep(records_[i])) out.matches.push_back(records_[i]);
      }
    } else {
      for (const auto& r : records_)
        if (keep(r)) out.matches.push_back(r);
    }
    out.distinct_tumor_types = distinct_tumor_types(out.matches);
    return out;
  }

  /// Looks up a protein-changing mutation by (codon, mutant codon). A wild
  /// type codon that disagrees with the reference is reported as a warning.
  Classification classify(const CodonMutation& m) const {
    if (m.kind == MutationKind::Silent)
      throw Error(Errc::InvalidArgument, "classify expects a missense or nonsense mutation");
    FilterQuery q;
    q.add(std::string(fields::kCodon), EqualsInt{static_cast<long long>(m.codon_number)});
    q.add(std::string(fields::kMutCodon), EqualsText{m.alt_codon});
    Classification out;
    AnnotationResult r = query(q);
    for (const auto& rec : r.matches)
      if (detail::lower_trim(rec.wt_codon) != detail::lower_trim(m.ref_codon))
        out.warnings.push_back("record " + rec.record_id + " lists wild-type codon " + rec.wt_codon +
                               " at codon " + std::to_string(m.codon_number) + ", reference has " +
                               m.ref_codon);
    if (!r.matches.empty()) out.match = std::move(r);
    return out;
  }

 private:
  std::vector<std::string> extra_columns_;
  std::vector<MutationRecord> records_;
  std::unordered_map<std::size_t, std::vector<std::size_t>> by_codon_;
};

/// Parses a tab-separated mutation table. The load is all-or-nothing.
inline Database parse_db(std::string_view text, const ColumnMapping& mapping = {}) {
  const auto lines = detail::split_lines(text);
  std::size_t header_idx = 0;
  while (header_idx < lines.size() && detail::trim(lines[header_idx]).empty()) ++header_idx;
  if (header_idx == lines.size()) throw Error(Errc::EmptyDatabase, "database has no header line");

  std::vector<std::string> header;
  for (auto cell : detail::split_tabs(lines[header_idx]))
    header.emplace_back(detail::trim(cell));

  auto index_of = [&](std::string_view canonical) -> std::optional<std::size_t> {
    const std::string col = mapping.column_for(canonical);
    for (std::size_t i = 0; i < header.size(); ++i)
      if (header[i] == col) return i;
    return std::nullopt;
  };

  for (auto req : fields::kRequired)
    if (!index_of(req)) throw Error(Errc::MissingColumn, mapping.column_for(req));

  std::map<std::string_view, std::size_t> canonical_at;
  std::vector<bool> is_canonical(header.size(), false);
  for (auto f : fields::kCanonical)
    if (auto i = index_of(f)) {
      canonical_at[f] = *i;
      is_canonical[*i] = true;
    }
  std::vector<std::string> extra_columns;
  for (std::size_t i = 0; i < header.size(); ++i)
    if (!is_canonical[i]) extra_columns.push_back(header[i]);

  std::vector<MutationRecord> records;
  std::unordered_set<std::string> seen_ids;
  for (std::size_t li = header_idx + 1; li < lines.size(); ++li) {
    const std::size_t line_no = li + 1;
    if (detail::trim(lines[li]).empty()) continue;
    auto cells = detail::split_tabs(lines[li]);
    if (cells.size() != header.size())
      throw RowError(line_no, "expected " + std::to_string(header.size()) + " fields, found " +
                                  std::to_string(cells.size()));
    auto get = [&](std::string_view f) -> std::string {
      auto it = canonical_at.find(f);
      return it == canonical_at.end() ? std::string() : std::string(detail::trim(cells[it->second]));
    };
    auto upper = [](std::string s) {
      for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      return s;
    };

    MutationRecord r;
    r.record_id = get(fields::kRecordId);
    if (!canonical_at.count(fields::kRecordId)) r.record_id = "row" + std::to_string(line_no);
    if (r.record_id.empty()) throw RowError(line_no, "empty record_id");
    if (!seen_ids.insert(r.record_id).second)
      throw RowError(line_no, "duplicate record_id '" + r.record_id + "'");

    auto codon = detail::parse_int(get(fields::kCodon));
    if (!codon) throw RowError(line_no, "codon is not an integer");
    if (*codon < 1) throw RowError(line_no, "codon_number >= 1");
    r.codon_number = static_cast<std::size_t>(*codon);

    r.wt_codon = upper(get(fields::kWtCodon));
    r.mut_codon = upper(get(fields::kMutCodon));
    if (!detail::is_codon(r.wt_codon)) throw RowError(line_no, "wt_codon is not a codon");
    if (!detail::is_codon(r.mut_codon)) throw RowError(line_no, "mut_codon is not a codon");
    if (r.wt_codon == r.mut_codon) throw RowError(line_no, "wt_codon equals mut_codon");

    r.wt_aa = get(fields::kWtAa);
    r.mut_aa = get(fields::kMutAa);
    r.mutation_event = get(fields::kMutationEvent);
    r.tumor_type = get(fields::kTumorType);
    for (std::size_t i = 0; i < header.size(); ++i)
      if (!is_canonical[i]) r.extra.emplace_back(header[i], std::string(detail::trim(cells[i])));
    records.push_back(std::move(r));
  }
  if (records.empty()) throw Error(Errc::EmptyDatabase, "database has no data rows");
  return Database(std::move(extra_columns), std::move(records));
}

inline Database load_db(const std::string& path, const ColumnMapping& mapping = {}) {
  return parse_db(read_text_file(path), mapping);
}

}  // namespace p53scan

#endif  // P53SCAN_MUTDB_HPP
