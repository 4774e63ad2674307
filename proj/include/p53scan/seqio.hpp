#ifndef P53SCAN_SEQIO_HPP
#define P53SCAN_SEQIO_HPP

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "p53scan/error.hpp"
#include "p53scan/text.hpp"

namespace p53scan {

enum class Alphabet { Dna, Protein };

inline std::string_view alphabet_name(Alphabet a) {
  return a == Alphabet::Dna ? "DNA" : "PROTEIN";
}

inline bool is_residue(Alphabet a, char c) {
  if (a == Alphabet::Dna) {
    switch (c) {
      case 'A': case 'C': case 'G': case 'T': case 'N': return true;
      default: return false;
    }
  }
  static constexpr std::string_view kProtein = "ACDEFGHIKLMNPQRSTVWYX*";
  return kProtein.find(c) != std::string_view::npos;
}

/// A validated residue string with its FASTA identity.
///
/// Residues are uppercase and restricted to the alphabet; lowercase input is
/// the parser's job to normalize, not this type's.
class Sequence {
 public:
  static Sequence make(std::string id, std::string residues, Alphabet alphabet,
                       std::string description = {}) {
    if (id.empty())
      throw Error(Errc::InvalidSequence, "sequence id is empty");
    if (std::any_of(id.begin(), id.end(),
                    [](unsigned char c) { return std::isspace(c); }))
      throw Error(Errc::InvalidSequence, "sequence id '" + id + "' contains whitespace");
    if (residues.empty())
      throw Error(Errc::EmptyRecord, "record '" + id + "' has no residues");
    for (std::size_t i = 0; i < residues.size(); ++i)
      if (!is_residue(alphabet, residues[i]))
        throw ResidueError(id, i + 1, residues[i]);
    Sequence s;
    s.id_ = std::move(id);
    s.description_ = std::move(description);
    s.residues_ = std::move(residues);
    s.alphabet_ = alphabet;
    return s;
  }

  const std::string& id() const noexcept { return id_; }
  const std::string& description() const noexcept { return description_; }
  const std::string& residues() const noexcept { return residues_; }
  Alphabet alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return residues_.size(); }

  /// Leading `n` residues (whole sequence if shorter), same identity.
  Sequence prefix(std::size_t n) const {
    Sequence s = *this;
    if (n < s.residues_.size()) s.residues_.resize(std::max<std::size_t>(n, 1));
    return s;
  }

  friend bool operator==(const Sequence&, const Sequence&) = default;

 private:
  Sequence() = default;

  std::string id_;
  std::string description_;
  std::string residues_;
  Alphabet alphabet_ = Alphabet::Dna;
};

/// Ordered records with unique ids.
class FastaDocument {
 public:
  FastaDocument() = default;

  explicit FastaDocument(std::vector<Sequence> records) {
    for (auto& r : records) add(std::move(r));
  }

  void add(Sequence s) {
    if (!ids_.insert(s.id()).second)
      throw Error(Errc::DuplicateId, "duplicate record id '" + s.id() + "'");
    records_.push_back(std::move(s));
  }

  const std::vector<Sequence>& records() const noexcept { return records_; }
  std::size_t size() const noexcept { return records_.size(); }
  bool empty() const noexcept { return records_.empty(); }
  const Sequence& operator[](std::size_t i) const { return records_.at(i); }

  friend bool operator==(const FastaDocument& a, const FastaDocument& b) {
    return a.records_ == b.records_;
  }

 private:
  std::vector<Sequence> records_;
  std::unordered_set<std::string> ids_;
};

inline FastaDocument parse_fasta(std::string_view text, Alphabet alphabet) {
  if (text.empty()) throw Error(Errc::EmptyInput, "FASTA input is empty");

  FastaDocument doc;
  std::string id, description, residues;
  bool open = false;

  auto flush = [&] {
    if (!open) return;
    if (residues.empty())
      throw Error(Errc::EmptyRecord, "record '" + id + "' has no residue lines");
    doc.add(Sequence::make(std::move(id), std::move(residues), alphabet,
                           std::move(description)));
    id.clear();
    description.clear();
    residues.clear();
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (!line.empty() && line.front() == '>') {
      flush();
      std::string_view header = detail::trim(line.substr(1));
      std::size_t split = 0;
      while (split < header.size() && !std::isspace(static_cast<unsigned char>(header[split])))
        ++split;
      id.assign(header.substr(0, split));
      description.assign(detail::trim(header.substr(split)));
      if (id.empty())
        throw Error(Errc::InvalidSequence,
                    "header on line " + std::to_string(line_no) + " has no id");
      open = true;
      continue;
    }
    if (detail::trim(line).empty()) continue;
    if (!open)
      throw Error(Errc::MissingHeader,
                  "sequence data on line " + std::to_string(line_no) + " before any '>' header");
    for (char c : line) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      residues.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    }
  }
  flush();
  if (doc.empty()) throw Error(Errc::MissingHeader, "no '>' header found");
  return doc;
}

inline std::string write_fasta(const FastaDocument& doc, std::size_t width = 60) {
  if (width == 0) throw Error(Errc::InvalidArgument, "FASTA line width must be positive");
  std::string out;
  for (const auto& rec : doc.records()) {
    out += '>';
    out += rec.id();
    if (!rec.description().empty()) {
      out += ' ';
      out += rec.description();
    }
    out += '\n';
    const auto& r = rec.residues();
    for (std::size_t i = 0; i < r.size(); i += width) {
      out.append(r, i, width);
      out += '\n';
    }
  }
  return out;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline FastaDocument read_fasta(const std::string& path, Alphabet alphabet) {
  return parse_fasta(read_text_file(path), alphabet);
}

}  // namespace p53scan

#endif  // P53SCAN_SEQIO_HPP
