#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stabletrace/arithvol.hpp"
#include "stabletrace/rootdata.hpp"

namespace stabletrace {

/// Named groups: audited constant profile plus optional root datum.
class GroupCatalog {
 public:
  void add(GroupProfile profile, std::optional<BasedRootDatum> datum);

  bool has(const std::string& name) const { return entries_.count(name) != 0; }
  const GroupProfile& profile(const std::string& name) const;
  const BasedRootDatum& datum(const std::string& name) const;
  bool has_datum(const std::string& name) const;
  std::vector<std::string> names() const;

  /// Cross-checks between entries: d * |Omega_R| = |Omega|, Levi root
  /// indices, the whole-group chi, and iota(G,H) = tau(G) / tau(H) / |Out|.
  /// Returns one message per failed check.
  std::vector<std::string> audit() const;

  /// The hand-entered reference catalog (sl2, gsp4 and h with root data;
  /// the remaining groups as profiles only).
  static const GroupCatalog& builtin();

 private:
  struct Entry {
    GroupProfile profile;
    std::optional<BasedRootDatum> datum;
  };
  std::map<std::string, Entry> entries_;
};

}  // namespace stabletrace
