#pragma once

#include <string>
#include <variant>
#include <vector>

#include "stabletrace/catalog.hpp"
#include "stabletrace/reps.hpp"

namespace stabletrace {

/// A central element of G acting on V_lambda by sign^{central_exponent}.
struct CentralSign {
  int sign = 1;
};

struct PhiRequest {
  const BasedRootDatum* group = nullptr;
  LeviDescriptor levi;
  Weight lambda;
  std::variant<TorsionElement, CentralSign> gamma;
  long central_exponent = 0;
};

/// Sub-data of one Levi, prepared once and reused across evaluations.
struct PreparedLevi {
  LeviDescriptor levi;
  BasedRootDatum m;
  long q_l = 0;
  long omega_l = 1;
  std::vector<WeylElement> kostant;
  Vec rho;
};

PreparedLevi prepare_levi(const BasedRootDatum& group, const LeviDescriptor& levi);

/// (-1)^{q(L)} |Omega_L| sum_{w in Omega^{LM}} eps(w) tr(gamma; V^M_{w(lambda+rho)-rho}).
Rat phi(const PreparedLevi& pl, const Weight& lambda,
        const std::variant<TorsionElement, CentralSign>& gamma, long central_exponent);
Rat phi(const PhiRequest& req);

struct PhiRow {
  std::string levi;
  Rat value;
};

/// Phi_M(z^{-1}) for every Levi of a group, in catalog order. For H each row
/// is the sum over the two weights lambda_H and lambda_H'.
class PhiTable {
 public:
  PhiTable(const GroupCatalog& catalog, GroupKind kind);
  std::vector<PhiRow> evaluate(const ParameterData& p, int z) const;
  /// One packet member only (lambda or its a<->b swap).
  std::vector<PhiRow> evaluate_member(const ParameterData& p, int z, WeightVariant v) const;
  GroupKind kind() const { return kind_; }

 private:
  GroupKind kind_;
  const BasedRootDatum* datum_;
  std::vector<PreparedLevi> levis_;
};

std::vector<PhiRow> phi_levi_table(const GroupCatalog& catalog, GroupKind kind, const ParameterData& p,
                                   int z);

}  // namespace stabletrace
