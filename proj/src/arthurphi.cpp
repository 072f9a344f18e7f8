#include "stabletrace/arthurphi.hpp"

#include <sstream>

namespace stabletrace {

PreparedLevi prepare_levi(const BasedRootDatum& group, const LeviDescriptor& levi) {
  const BasedRootDatum l = group.subsystem(group.name() + "/" + levi.name + "/L", levi.real);
  PreparedLevi p{levi, group.subsystem(group.name() + "/" + levi.name + "/M", levi.imaginary),
                 q_value(l), static_cast<long>(weyl_group(l).size()), kostant_set(group, levi),
                 half_sum_positive(group).coords};
  return p;
}

Rat phi(const PreparedLevi& pl, const Weight& lambda,
        const std::variant<TorsionElement, CentralSign>& gamma, long central_exponent) {
  const Vec shifted = add(lambda.coords, pl.rho);
  Rat sum;
  for (const auto& w : pl.kostant) {
    const Weight mu(sub(act(w, shifted), pl.rho), lambda.lattice);
    for (size_t s : pl.m.simple_roots())
      if (pl.m.pair_coroot(mu, s).sign() < 0) {
        std::ostringstream msg;
        msg << "Kostant-shifted weight is not dominant for Levi " << pl.levi.name
            << " (pairing " << pl.m.pair_coroot(mu, s).str() << ")";
        throw DatumError(msg.str());
      }
    Int tr;
    if (const auto* c = std::get_if<CentralSign>(&gamma))
      tr = trace_central(pl.m, mu, c->sign, central_exponent);
    else
      tr = trace_at_torsion(pl.m, mu, std::get<TorsionElement>(gamma));
    sum += Rat(tr) * Rat(w.sign);
  }
  const Rat sign = (pl.q_l % 2) ? Rat(-1) : Rat(1);
  return sign * Rat(pl.omega_l) * sum;
}

Rat phi(const PhiRequest& req) {
  if (!req.group) throw DatumError("phi request without a group datum");
  return phi(prepare_levi(*req.group, req.levi), req.lambda, req.gamma, req.central_exponent);
}

PhiTable::PhiTable(const GroupCatalog& catalog, GroupKind kind)
    : kind_(kind), datum_(&catalog.datum(to_string(kind))) {
  for (const auto& l : catalog.profile(to_string(kind)).levis) levis_.push_back(prepare_levi(*datum_, l.levi));
}

std::vector<PhiRow> PhiTable::evaluate_member(const ParameterData& p, int z, WeightVariant v) const {
  const HighestWeight hw = highest_weight_from_parameter(kind_, *datum_, p, v);
  std::vector<PhiRow> rows;
  // z^{-1} = z for z = +-1.
  for (const auto& pl : levis_)
    rows.push_back({pl.levi.name, phi(pl, hw.lambda, CentralSign{z}, hw.central_exponent)});
  return rows;
}

std::vector<PhiRow> PhiTable::evaluate(const ParameterData& p, int z) const {
  auto rows = evaluate_member(p, z, WeightVariant::standard);
  if (kind_ == GroupKind::h) {
    const auto other = evaluate_member(p, z, WeightVariant::swapped);
    for (size_t i = 0; i < rows.size(); ++i) rows[i].value += other[i].value;
  }
  return rows;
}

std::vector<PhiRow> phi_levi_table(const GroupCatalog& catalog, GroupKind kind, const ParameterData& p,
                                   int z) {
  return PhiTable(catalog, kind).evaluate(p, z);
}

}  // namespace stabletrace
