#ifndef P53SCAN_ERROR_HPP
#define P53SCAN_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace p53scan {

enum class Errc {
  MissingHeader,
  EmptyRecord,
  IllegalResidue,
  DuplicateId,
  InvalidSequence,
  AllAmbiguous,
  AlphabetMismatch,
  EmptyInput,
  InvalidScheme,
  TooShort,
  OutOfRange,
  MissingColumn,
  BadRow,
  EmptyDatabase,
  UnknownField,
  InvalidQuery,
  ManifestError,
  GeneNotFound,
  NoReferenceAccepted,
  NotInFrame,
  InvalidArgument,
  IoError,
  BadReport,
};

inline std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::MissingHeader: return "MissingHeader";
    case Errc::EmptyRecord: return "EmptyRecord";
    case Errc::IllegalResidue: return "IllegalResidue";
    case Errc::DuplicateId: return "DuplicateId";
    case Errc::InvalidSequence: return "InvalidSequence";
    case Errc::AllAmbiguous: return "AllAmbiguous";
    case Errc::AlphabetMismatch: return "AlphabetMismatch";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::InvalidScheme: return "InvalidScheme";
    case Errc::TooShort: return "TooShort";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::MissingColumn: return "MissingColumn";
    case Errc::BadRow: return "BadRow";
    case Errc::EmptyDatabase: return "EmptyDatabase";
    case Errc::UnknownField: return "UnknownField";
    case Errc::InvalidQuery: return "InvalidQuery";
    case Errc::ManifestError: return "ManifestError";
    case Errc::GeneNotFound: return "GeneNotFound";
    case Errc::NoReferenceAccepted: return "NoReferenceAccepted";
    case Errc::NotInFrame: return "NotInFrame";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::IoError: return "IoError";
    case Errc::BadReport: return "BadReport";
  }
  return "Unknown";
}

/// Every failure raised by the library. what() is "<Name>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  Errc code() const noexcept { return code_; }
  std::string_view name() const noexcept { return errc_name(code_); }
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

/// IllegalResidue with its location; position is 1-based in the concatenated
/// residue string of the record.
class ResidueError : public Error {
 public:
  ResidueError(std::string record_id, std::size_t position, char residue)
      : Error(Errc::IllegalResidue,
              "record '" + record_id + "' position " + std::to_string(position) +
                  " ('" + std::string(1, residue) + "')"),
        record_id_(std::move(record_id)),
        position_(position) {}

  const std::string& record_id() const noexcept { return record_id_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string record_id_;
  std::size_t position_;
};

/// BadRow with the 1-based line number of the offending input line.
class RowError : public Error {
 public:
  RowError(std::size_t line, const std::string& reason)
      : Error(Errc::BadRow, "line " + std::to_string(line) + ": " + reason),
        line_(line),
        reason_(reason) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

}  // namespace p53scan

#endif  // P53SCAN_ERROR_HPP
