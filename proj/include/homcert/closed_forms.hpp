#pragma once

#include "homcert/bigint.hpp"
#include "homcert/errors.hpp"
#include "homcert/graph.hpp"
#include "homcert/images.hpp"

namespace homcert {

/// Surjections from a d-set onto an r-set; 0 when d < r.
BigCount surjections(unsigned d, unsigned r);

/// x (x-1) ... (x-m+1); 1 when m = 0.
BigCount falling_factorial(unsigned long x, unsigned m);

/// hom(K_{d,d}, H) as the sum of S(d,|A|) S(d,|B|) over complete bipartite
/// images. d = 0 gives 1 (the empty graph).
BigCount hom_kdd_closed(const ConstraintGraph& h, unsigned d);
BigCount hom_kdd_closed(const ImageSet& images, unsigned d);

/// The complete-image sum for hom(K_{d+1}, H).
///
/// The sum misses exactly the colourings whose image is an unlooped clique on
/// d+1 vertices, so it is exact iff d+1 exceeds the largest unlooped clique
/// of H. `valid` reports that condition and `exact` adds the missing
/// (d+1)! * #cliques term so it always equals hom(K_{d+1}, H).
struct CliqueClosedForm {
  BigCount value;
  bool valid = false;
  int largest_unlooped_clique = 0;
  BigCount exact;
};
CliqueClosedForm hom_kdp1_closed(const ConstraintGraph& h, unsigned d);
CliqueClosedForm hom_kdp1_closed(const ConstraintGraph& h, const ImageSet& images, unsigned d);

/// hom(K_{d,d}, H) and hom(K_{d+1}, H), through the closed forms when
/// |V(H)| <= 16 and through hom_dp otherwise.
BigCount hom_kdd(const ConstraintGraph& h, unsigned d, const Limits& limits = Limits::defaults());
BigCount hom_kdp1(const ConstraintGraph& h, unsigned d, const Limits& limits = Limits::defaults());

enum class Dominance { Bipartite, Equal, Clique };
const char* to_string(Dominance s);

/// Compares hom(K_{d,d},H)^{1/2d} with hom(K_{d+1},H)^{1/(d+1)} through
/// left = hom(K_{d,d},H)^{d+1} and right = hom(K_{d+1},H)^{2d}.
struct CrossPowerVerdict {
  unsigned d = 0;
  BigCount kdd;
  BigCount kdp1;
  BigCount left;
  BigCount right;
  Dominance sign = Dominance::Equal;
};
CrossPowerVerdict compare_cross_powers(const ConstraintGraph& h, unsigned d,
                                       const Limits& limits = Limits::defaults());
CrossPowerVerdict compare_cross_powers(unsigned d, const BigCount& kdd, const BigCount& kdp1);

/// hom(G,H) against max{hom(K_{d,d},H)^{n/2d}, hom(K_{d+1},H)^{n/(d+1)}},
/// all three raised to the common exponent 2d(d+1).
struct ConjectureVerdict {
  int n = 0;
  int d = 0;
  BigCount hom;
  BigCount kdd;
  BigCount kdp1;
  Dominance larger_bound = Dominance::Equal;  // which bound is the maximum
  bool satisfied = false;
  bool equality = false;     // hom equals the maximum
  bool meets_kdd = false;    // hom equals the K_{d,d} bound
  bool meets_kdp1 = false;   // hom equals the K_{d+1} bound
};
ConjectureVerdict conjecture_rhs_compare(const Graph& g, const ConstraintGraph& h,
                                         const Limits& limits = Limits::defaults());
ConjectureVerdict conjecture_rhs_compare(int n, int d, const BigCount& hom, const BigCount& kdd,
                                         const BigCount& kdp1);

}  // namespace homcert
