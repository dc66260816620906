#pragma once

#include <map>
#include <vector>

#include "adhm/hnconfig.hpp"
#include "adhm/uealg.hpp"

namespace adhm {

enum class Chamber { Plus, Minus, Asymptotic, Critical };

// Charge -> value for one chamber: H(alpha) under v = 0, A(alpha, v) under
// v = 1, 2. Absent entries read as 0. A table is either unbarred (the
// invariants A) or barred (their multicover transforms).
class InvariantTable {
 public:
  using Entries = std::map<Charge, Rational>;

  InvariantTable() = default;
  InvariantTable(Geometry geom, Chamber chamber, bool barred = false)
      : geom_(geom), chamber_(chamber), barred_(barred) {}

  const Geometry& geometry() const { return geom_; }
  Chamber chamber() const { return chamber_; }
  bool barred() const { return barred_; }
  void set_chamber(Chamber c) { chamber_ = c; }

  Rational at(const Charge& c) const;
  // Stores the value, zeros included, so tables can list every charge in a
  // range explicitly.
  void set(const Charge& c, const Rational& value);
  const Entries& entries() const { return entries_; }

 private:
  Geometry geom_;
  Chamber chamber_ = Chamber::Plus;
  bool barred_ = false;
  Entries entries_;
};

// Equality of the value functions: absent and explicit-zero entries agree.
bool same_values(const InvariantTable& a, const InvariantTable& b);

struct JumpOptions {
  // Genus-0 mode: only HN sequences with nonnegative part degrees count.
  bool nonneg_degrees = false;
};

// A_-(alpha, 1) from the plus-side table across the wall delta_c.
Rational jump_v1(RankDegree alpha, const StabilityParam& delta_c, const InvariantTable& plus,
                 JumpOptions opts = {});

// A_-(alpha, 2) from the Joyce-Song sums over HN sequences.
Rational jump_v2_js(RankDegree alpha, const StabilityParam& delta_c, const InvariantTable& plus,
                    JumpOptions opts = {});

// A_-(alpha, 2) from the Kontsevich-Soibelman factorization on the ray of
// alpha, evaluated in the truncated Lie algebra. Independent of the HN sets.
Rational jump_v2_ks(RankDegree alpha, const StabilityParam& delta_c, const InvariantTable& plus,
                    JumpOptions opts = {});

// The charges whose delta_c-slope equals a fixed value mu, for v in {0,1,2}.
struct Ray {
  Rational slope;
  StabilityParam delta_c;

  static Ray through(const Charge& c, const StabilityParam& delta_c);

  bool contains(const Charge& c) const;
  // Ray charges with 1 <= r <= r_max, integral e, and e inside [0, e_max]
  // when a bound is given or e >= 0 when nonneg is set. Sorted.
  std::vector<Charge> charges(int r_max, std::optional<int> e_max, bool nonneg) const;
};

// The minus-side table: a copy of plus with every v = 1, 2 charge of the
// list replaced by its jump (v = 2 jumps via the Joyce-Song sums).
InvariantTable minus_table(const InvariantTable& plus, const StabilityParam& delta_c,
                           const std::vector<Charge>& charges, JumpOptions opts = {});

struct KSGroupSides {
  UEAElement lhs;  // ordered product at delta_c + 0 with the plus table
  UEAElement rhs;  // ordered product at delta_c - 0 with the minus table
};

// Both sides of the KS identity restricted to the ray, as truncated group
// elements. Factors are exp(H e) for the Higgs sector, exp(A(a,1)(f_a +
// g_{2a}/4)) and exp(Abar(b,2) g_b), merged per framing ratio, and ordered by
// increasing perturbed slope. bounds.e_max must be set. Throws
// std::invalid_argument if a ray charge with e < 0 carries a nonzero value.
KSGroupSides ks_group_sides(const Ray& ray, const TruncationBounds& bounds,
                            const InvariantTable& plus, const InvariantTable& minus);

bool verify_ks_group_identity(const Ray& ray, const TruncationBounds& bounds,
                              const InvariantTable& plus, const InvariantTable& minus);

// A(gamma) = sum_{m | gamma} Abar(gamma/m) / m^2 on v >= 1 charges; v = 0
// entries are copied. Outputs are kept for m * r <= r_max and m * v <= 2.
InvariantTable multicover(const InvariantTable& barred, int r_max);

// The Moebius inverse of multicover.
InvariantTable multicover_invert(const InvariantTable& unbarred, int r_max);

}  // namespace adhm
