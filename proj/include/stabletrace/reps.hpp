#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "stabletrace/exactnum.hpp"
#include "stabletrace/rootdata.hpp"

namespace stabletrace {

class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Torus element of finite order m, given by cocharacter exponents k:
/// chi(gamma) = zeta_m^{<chi, k>}.
struct TorsionElement {
  unsigned order = 1;
  IVec exponents;
};

enum class GroupKind { sl2, gsp4, h };

/// Discrete-series parameter. GSp4 and H use (a, b, t); SL2 uses n.
struct ParameterData {
  long a = 0;
  long b = 0;
  long t = 0;
  long n = 0;
};

/// Which member of a swapped pair of weights to build: lambda_B' and
/// lambda_H' exchange a and b.
enum class WeightVariant { standard, swapped };

struct HighestWeight {
  Weight lambda;
  long central_exponent = 0;
};

void validate(const BasedRootDatum& d, const TorsionElement& g);
TorsionElement inverse(const TorsionElement& g);
/// The conjugate w gamma w^{-1}.
TorsionElement conjugate(const WeylElement& w, const TorsionElement& g);

/// prod_{alpha>0} <lambda+rho, alpha^vee> / <rho, alpha^vee>.
Rat weyl_dim(const BasedRootDatum& d, const Weight& lambda);

/// Exact trace of gamma on V_lambda from the Weyl character formula,
/// switching to the weight-multiset sum when the Weyl denominator vanishes.
Int trace_at_torsion(const BasedRootDatum& d, const Weight& lambda, const TorsionElement& g);

/// Trace as a plain sum over the weights of V_lambda.
Int trace_by_weights(const BasedRootDatum& d, const Weight& lambda, const TorsionElement& g);

/// Weights of V_lambda with multiplicities, obtained by dividing the Weyl
/// numerator by prod_{alpha>0} (1 - e^{-alpha}).
std::vector<std::pair<Weight, Int>> weight_multiset(const BasedRootDatum& d, const Weight& lambda);

/// Trace of a central element acting by sign^{central_exponent}.
Int trace_central(const BasedRootDatum& d, const Weight& lambda, int sign, long central_exponent);

void validate(GroupKind kind, const ParameterData& p);
bool is_regular(GroupKind kind, const ParameterData& p);
HighestWeight highest_weight_from_parameter(GroupKind kind, const BasedRootDatum& d,
                                            const ParameterData& p,
                                            WeightVariant variant = WeightVariant::standard);

const char* to_string(GroupKind kind);
GroupKind group_kind_from_string(const std::string& s);

namespace builtin {

/// Elliptic elements of SL2 by the exponent of their first eigenvalue.
TorsionElement sl2_gamma3();
TorsionElement sl2_gamma4();
TorsionElement sl2_gamma6();

}  // namespace builtin

}  // namespace stabletrace
