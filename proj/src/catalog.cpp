#include "stabletrace/catalog.hpp"

namespace stabletrace {

void GroupCatalog::add(GroupProfile profile, std::optional<BasedRootDatum> datum) {
  const std::string name = profile.name;
  entries_.insert_or_assign(name, Entry{std::move(profile), std::move(datum)});
}

const GroupProfile& GroupCatalog::profile(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw ProfileError("unknown group '" + name + "'");
  return it->second.profile;
}

const BasedRootDatum& GroupCatalog::datum(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw ProfileError("unknown group '" + name + "'");
  if (!it->second.datum) throw ProfileError("group '" + name + "' has no root datum");
  return *it->second.datum;
}

bool GroupCatalog::has_datum(const std::string& name) const {
  auto it = entries_.find(name);
  return it != entries_.end() && it->second.datum.has_value();
}

std::vector<std::string> GroupCatalog::names() const {
  std::vector<std::string> out;
  for (const auto& [n, e] : entries_) out.push_back(n);
  return out;
}

std::vector<std::string> GroupCatalog::audit() const {
  std::vector<std::string> problems;
  for (const auto& [name, e] : entries_) {
    const GroupProfile& g = e.profile;
    if (g.levis.empty() || g.levis.front().n_gm != 1 || g.levis.front().levi.dim_a != 0)
      problems.push_back(name + ": first Levi must be the group itself (n = 1, dim_a = 0)");
    try {
      const Rat chi = chi_k(g);
      if (!g.levis.empty() && g.levis.front().chi_k != chi)
        problems.push_back(name + ": whole-group Levi chi " + g.levis.front().chi_k.str() +
                           " differs from chi_K " + chi.str());
    } catch (const ProfileError&) {
      // general case: nothing to compare
    }
    if (e.datum) {
      const auto order = static_cast<long>(weyl_group(*e.datum).size());
      if (g.d_const * g.omega_r_order != order)
        problems.push_back(name + ": d * |Omega_R| = " + std::to_string(g.d_const * g.omega_r_order) +
                           " but |Omega| = " + std::to_string(order));
      for (const auto& l : g.levis) {
        try {
          (void)kostant_set(*e.datum, l.levi);
        } catch (const DatumError& err) {
          problems.push_back(name + ": Levi " + l.levi.name + ": " + err.what());
        }
      }
    }
    for (const auto& en : g.endoscopic) {
      auto it = entries_.find(en.group);
      if (it == entries_.end()) {
        problems.push_back(name + ": endoscopic group '" + en.group + "' is not defined");
        continue;
      }
      const Rat expect = g.tamagawa / it->second.profile.tamagawa / Rat(en.out_order);
      if (expect != en.iota)
        problems.push_back(name + ": iota(" + name + ", " + en.group + ") = " + en.iota.str() +
                           " but tau(G)/tau(H)/|Out| = " + expect.str());
    }
  }
  return problems;
}

const GroupCatalog& GroupCatalog::builtin() {
  static const GroupCatalog cat = [] {
    GroupCatalog c;
    for (auto& p : builtin_profiles::all_profiles()) {
      std::optional<BasedRootDatum> d;
      if (p.name == "sl2") d = builtin::sl2();
      if (p.name == "gsp4") d = builtin::gsp4();
      if (p.name == "h") d = builtin::h();
      c.add(std::move(p), std::move(d));
    }
    return c;
  }();
  return cat;
}

}  // namespace stabletrace
