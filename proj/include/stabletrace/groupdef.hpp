#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stabletrace/arithvol.hpp"
#include "stabletrace/catalog.hpp"
#include "stabletrace/rootdata.hpp"

namespace stabletrace {

/// Syntax or validation failure in a group-definition file.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, size_t line, size_t column, const std::string& message);

  const std::string& source() const { return source_; }
  size_t line() const { return line_; }
  size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::string source_;
  size_t line_;
  size_t column_;
  std::string message_;
};

struct RootsDef {
  std::vector<IVec> roots;
  std::vector<IVec> coroots;
  std::vector<size_t> simple;
};

struct GroupDefFile {
  /// Comment lines before the first section, kept verbatim.
  std::vector<std::string> header;
  std::optional<Lattice> lattice;
  std::optional<RootsDef> roots;
  GroupProfile profile;
  /// Levi name -> group whose chi_K the Levi's chi must equal.
  std::map<std::string, std::string> chi_from;
  /// Line of the [roots] header, for datum diagnostics.
  size_t roots_line = 0;

  /// Builds and validates the root datum, if the file defines one.
  std::optional<BasedRootDatum> datum() const;
};

/// Parses the text and checks every datum axiom. `source` only labels
/// diagnostics.
GroupDefFile parse_groupdef(const std::string& text, const std::string& source = "<input>");
GroupDefFile load_groupdef(const std::filesystem::path& path);

/// Canonical text: header, then sections and keys in a fixed order.
std::string emit_groupdef(const GroupDefFile& def);

/// Canonical definition of a catalog entry, with no header.
GroupDefFile groupdef_from_catalog(const GroupCatalog& catalog, const std::string& name);

/// $STABLE_TRACE_DATA if set, otherwise the data directory of the source tree.
std::filesystem::path default_data_dir();

struct LoadedCatalog {
  GroupCatalog catalog;
  std::vector<std::filesystem::path> files;
  std::map<std::string, GroupDefFile> definitions;
  /// Audit messages, chi_from mismatches and differences from the reference
  /// catalog.
  std::vector<std::string> problems;
};

/// Loads every *.grp file in the directory (sorted by name). Parse errors
/// throw; consistency problems are collected.
LoadedCatalog load_catalog(const std::filesystem::path& dir);

/// Field-by-field differences between two profiles, one message each.
std::vector<std::string> profile_differences(const GroupProfile& a, const GroupProfile& b);

}  // namespace stabletrace
