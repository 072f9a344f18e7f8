#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stabletrace/exactnum.hpp"
#include "stabletrace/rootdata.hpp"

namespace stabletrace {

class ProfileError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Which specialization of the Euler-characteristic formula applies.
enum class ChiCase {
  torus,             // class count / rational torsion in K
  simply_connected,  // chi_alg / [G(R) : G(R)_+]
  derived_sc,        // class count / ([G(R):G(R)_+] * torsion) * chi_alg(G_der)
  isogeny,           // |ker rho(Q)| / [G(R):G(R)_+] * chi_alg(G_sc)
  general,           // needs adelic class-set data; unsupported
};

const char* to_string(ChiCase c);
ChiCase chi_case_from_string(const std::string& s);

/// One simply connected Chevalley factor: Weyl exponents and the order of
/// the real Weyl group used in the Bernoulli formula.
struct ChevalleyFactor {
  std::vector<int> exponents;
  long omega_r = 1;
};

struct ChiInputs {
  ChiCase kind = ChiCase::general;
  std::vector<ChevalleyFactor> factors;
  long class_count = 1;
  long unit_torsion = 1;
  long kernel_order = 1;
  long component_index = 1;
};

struct LeviProfile {
  LeviDescriptor levi;
  long n_gm = 1;
  long k = 1;
  long d = 1;
  Rat chi_k;
  std::string note;
};

struct EndoscopicProfile {
  std::string group;
  Rat iota;
  long out_order = 1;
  std::string note;
};

struct GroupProfile {
  std::string name;
  Rat tamagawa{1};
  long k_const = 1;
  long d_const = 1;
  long omega_r_order = 1;
  long real_component_index = 1;
  ChiInputs chi;
  /// Levi subgroups, the group itself first.
  std::vector<LeviProfile> levis;
  std::vector<EndoscopicProfile> endoscopic;
  std::string note;

  const LeviProfile& levi(const std::string& name) const;
  size_t levi_index(const std::string& name) const;
  std::vector<int> weyl_exponents() const;
};

/// (-1/2)^r |Omega_R|^{-1} prod B_{m_i + 1}.
Rat chi_alg_chevalley(const std::vector<int>& exponents, long omega_r_order);
/// |T(Q)\T(A_f)/K| / |K cap T(Q)|.
Rat chi_torus(long double_coset_count, long rational_torsion_in_k);
Rat chi_k(const GroupProfile& profile);
Rat chi_k(const ChiInputs& inputs);

namespace builtin_profiles {

GroupProfile gm();
GroupProfile sl2();
GroupProfile sp4();
GroupProfile gl2();
GroupProfile gsp4();
GroupProfile pgl2();
GroupProfile h();
GroupProfile t_gaussian();
GroupProfile t_eisenstein();
std::vector<GroupProfile> all_profiles();

}  // namespace builtin_profiles

}  // namespace stabletrace
