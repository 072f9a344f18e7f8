#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stabletrace/linalg.hpp"

namespace stabletrace {

/// A root-datum axiom failed; the message names the axiom.
class DatumError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Ambient description of X* and X_* inside Z^rank.
///
/// X* is {x : x.c = 0 for c in char_kernel} modulo char_relations, and X_*
/// is {y : y.k = 0 for k in cochar_kernel} modulo cochar_relations. The
/// pairing is the ambient dot product.
struct Lattice {
  std::string id;
  size_t rank = 0;
  std::vector<IVec> char_relations;
  std::vector<IVec> char_kernel;
  std::vector<IVec> cochar_kernel;
  std::vector<IVec> cochar_relations;
  /// Symmetric form applied after projection; empty means the dot product.
  Mat inner;

  /// Checks that the pairing is well defined and the two lattices have the
  /// same rank.
  void validate() const;
};

/// Character-lattice element. Coordinates are ambient and may be
/// half-integral (rho, for instance); equality is modulo char_relations.
struct Weight {
  Vec coords;
  std::string lattice;

  Weight() = default;
  Weight(Vec c, std::string lat) : coords(std::move(c)), lattice(std::move(lat)) {}
};

struct WeylElement {
  /// Row-major rank x rank integer matrix acting on ambient column vectors.
  std::vector<long long> matrix;
  int sign = 1;
  /// Simple-reflection word (indices into simple_roots) of minimal length.
  std::vector<size_t> word;
};

struct LeviDescriptor {
  std::string name;
  /// Indices into the datum's root list of the positive imaginary roots (M).
  std::vector<size_t> imaginary;
  /// Indices of the positive real roots (L).
  std::vector<size_t> real;
  long dim_a = 0;
};

class BasedRootDatum {
 public:
  /// Validates every axiom and throws DatumError naming the first failure.
  BasedRootDatum(std::string name, std::shared_ptr<const Lattice> lattice, std::vector<IVec> roots,
                 std::vector<IVec> coroots, std::vector<size_t> simple);

  const std::string& name() const { return name_; }
  const Lattice& lattice() const { return *lattice_; }
  std::shared_ptr<const Lattice> lattice_ptr() const { return lattice_; }
  size_t ambient_rank() const { return lattice_->rank; }
  const std::vector<IVec>& roots() const { return roots_; }
  const std::vector<IVec>& coroots() const { return coroots_; }
  const std::vector<size_t>& simple_roots() const { return simple_; }
  const std::vector<size_t>& positive_roots() const { return positive_; }
  bool is_positive(size_t root_index) const;
  /// Index of the root equal to v modulo relations.
  std::optional<size_t> find_root(const Vec& v) const;

  Weight weight(const Vec& coords) const { return Weight(coords, lattice_->id); }
  Weight weight(const IVec& coords) const { return weight(to_rat(coords)); }
  Weight root(size_t i) const { return weight(roots_.at(i)); }

  /// Canonical representative: orthogonal projection away from char_relations.
  Vec canonical(const Vec& v) const;
  bool same_weight(const Weight& a, const Weight& b) const;
  /// <lambda, alpha_i^vee> for the coroot with index i.
  Rat pair_coroot(const Weight& w, size_t i) const;
  void check_weight(const Weight& w) const;

  /// The sub-datum whose positive roots are the given root indices. Simple
  /// roots are the indecomposable ones; the subset must be closed.
  BasedRootDatum subsystem(std::string name, const std::vector<size_t>& positive_indices) const;

  /// Rank of the span of the roots.
  size_t semisimple_rank() const;

 private:
  friend const std::vector<WeylElement>& weyl_group(const BasedRootDatum& d);
  struct Cache;

  std::string name_;
  std::shared_ptr<const Lattice> lattice_;
  std::vector<IVec> roots_;
  std::vector<IVec> coroots_;
  std::vector<size_t> simple_;
  std::vector<size_t> positive_;
  std::vector<Vec> relation_ortho_;
  std::shared_ptr<Cache> cache_;
};

/// Elements generated by the simple reflections, identity first. Throws
/// DatumError if the closure exceeds 10^6 elements.
const std::vector<WeylElement>& weyl_group(const BasedRootDatum& d);

Vec act(const WeylElement& w, const Vec& v);
Weight act(const WeylElement& w, const Weight& v);
/// Action of w on cocharacters: the transpose of w^{-1}.
IVec act_dual_inverse(const WeylElement& w, const IVec& k);
WeylElement compose(const WeylElement& a, const WeylElement& b);
WeylElement inverse(const WeylElement& w);

Weight half_sum_positive(const BasedRootDatum& d);
long q_value(const BasedRootDatum& d);
std::vector<WeylElement> kostant_set(const BasedRootDatum& d, const LeviDescriptor& levi);
/// Invariant form on canonical representatives.
Rat inner(const BasedRootDatum& d, const Weight& a, const Weight& b);

namespace builtin {

BasedRootDatum sl2();
BasedRootDatum gsp4();
BasedRootDatum h();

/// Root indices as laid out by the constructors above.
LeviDescriptor sl2_levi_g();
LeviDescriptor sl2_levi_a();
LeviDescriptor gsp4_levi_g();
LeviDescriptor gsp4_levi_m1();
LeviDescriptor gsp4_levi_m2();
LeviDescriptor gsp4_levi_a();
LeviDescriptor h_levi_h();
LeviDescriptor h_levi_m1();
LeviDescriptor h_levi_m2();
LeviDescriptor h_levi_a();

}  // namespace builtin

}  // namespace stabletrace
