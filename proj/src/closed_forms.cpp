#include "homcert/closed_forms.hpp"

#include "homcert/hom.hpp"

#include <stdexcept>

namespace homcert {

BigCount surjections(unsigned d, unsigned r) {
  if (r == 0) return d == 0 ? 1 : 0;
  if (d < r) return 0;
  BigInt total = 0;
  for (unsigned i = 0; i <= r; ++i) {
    const BigInt term = binomial(r, i) * pow(static_cast<unsigned long>(r - i), d);
    if (i % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

BigCount falling_factorial(unsigned long x, unsigned m) {
  BigCount out = 1;
  for (unsigned i = 0; i < m; ++i) {
    if (x < i) return 0;
    out *= x - i;
  }
  return out;
}

BigCount hom_kdd_closed(const ImageSet& images, unsigned d) {
  if (d == 0) return 1;
  // Summing S(d,|B|) over the nonempty B inside a family's common
  // neighbourhood X only depends on |B|: sum_j C(|X|, j) S(d, j).
  std::vector<BigCount> surj(17);
  for (unsigned r = 0; r <= 16; ++r) surj[r] = surjections(d, r);
  std::vector<BigCount> inner(17);
  for (unsigned x = 1; x <= 16; ++x) {
    for (unsigned j = 1; j <= x; ++j) inner[x] += binomial(x, j) * surj[j];
  }
  BigCount total = 0;
  for (const auto& fam : images.families) {
    total += surj[popcount(fam.left)] * inner[popcount(fam.common)];
  }
  return total;
}

BigCount hom_kdd_closed(const ConstraintGraph& h, unsigned d) {
  return hom_kdd_closed(enumerate_images(h), d);
}

CliqueClosedForm hom_kdp1_closed(const ConstraintGraph& h, const ImageSet& images, unsigned d) {
  CliqueClosedForm out;
  const unsigned slots = d + 1;
  for (const auto& img : images.complete) {
    const auto b = static_cast<unsigned>(popcount(img.unlooped));
    if (b > slots) continue;
    out.value += falling_factorial(slots, b) * surjections(slots - b, popcount(img.looped));
  }
  out.largest_unlooped_clique = largest_unlooped_clique(h);
  out.valid = static_cast<int>(slots) > out.largest_unlooped_clique;
  // Colourings onto an unlooped (d+1)-clique use every vertex once.
  out.exact = out.value;
  if (!out.valid) out.exact += factorial(slots) * count_unlooped_cliques(h, static_cast<int>(slots));
  return out;
}

CliqueClosedForm hom_kdp1_closed(const ConstraintGraph& h, unsigned d) {
  return hom_kdp1_closed(h, enumerate_images(h), d);
}

BigCount hom_kdd(const ConstraintGraph& h, unsigned d, const Limits& limits) {
  if (h.order() <= limits.image_vertices) return hom_kdd_closed(enumerate_images(h, limits), d);
  return hom_dp(complete_bipartite(static_cast<int>(d), static_cast<int>(d)), h, limits);
}

BigCount hom_kdp1(const ConstraintGraph& h, unsigned d, const Limits& limits) {
  if (h.order() <= limits.image_vertices) {
    return hom_kdp1_closed(h, enumerate_images(h, limits), d).exact;
  }
  return hom_dp(complete_graph(static_cast<int>(d) + 1), h, limits);
}

const char* to_string(Dominance s) {
  switch (s) {
    case Dominance::Bipartite: return "left>";
    case Dominance::Equal: return "equal";
    case Dominance::Clique: return "right>";
  }
  return "?";
}

CrossPowerVerdict compare_cross_powers(unsigned d, const BigCount& kdd, const BigCount& kdp1) {
  CrossPowerVerdict v;
  v.d = d;
  v.kdd = kdd;
  v.kdp1 = kdp1;
  v.left = pow(kdd, d + 1);
  v.right = pow(kdp1, 2UL * d);
  const int c = compare(v.left, v.right);
  v.sign = c > 0 ? Dominance::Bipartite : c < 0 ? Dominance::Clique : Dominance::Equal;
  return v;
}

CrossPowerVerdict compare_cross_powers(const ConstraintGraph& h, unsigned d, const Limits& limits) {
  if (d == 0) throw std::invalid_argument("compare_cross_powers: d must be at least 1");
  return compare_cross_powers(d, hom_kdd(h, d, limits), hom_kdp1(h, d, limits));
}

ConjectureVerdict conjecture_rhs_compare(int n, int d, const BigCount& hom, const BigCount& kdd,
                                         const BigCount& kdp1) {
  if (d <= 0) throw std::invalid_argument("conjecture_rhs_compare: d must be at least 1");
  ConjectureVerdict v;
  v.n = n;
  v.d = d;
  v.hom = hom;
  v.kdd = kdd;
  v.kdp1 = kdp1;
  const auto ud = static_cast<unsigned long>(d);
  const auto un = static_cast<unsigned long>(n);
  const BigInt lhs = pow(hom, 2 * ud * (ud + 1));
  const BigInt bip = pow(kdd, un * (ud + 1));
  const BigInt cli = pow(kdp1, 2 * ud * un);
  const int c = compare(bip, cli);
  v.larger_bound = c > 0 ? Dominance::Bipartite : c < 0 ? Dominance::Clique : Dominance::Equal;
  const BigInt& top = c >= 0 ? bip : cli;
  v.satisfied = lhs <= top;
  v.equality = lhs == top;
  v.meets_kdd = lhs == bip;
  v.meets_kdp1 = lhs == cli;
  return v;
}

ConjectureVerdict conjecture_rhs_compare(const Graph& g, const ConstraintGraph& h, const Limits& limits) {
  const auto d = g.regular_degree();
  if (!d) throw std::invalid_argument("conjecture_rhs_compare: G is not regular");
  if (*d == 0) throw std::invalid_argument("conjecture_rhs_compare: d must be at least 1");
  const auto ud = static_cast<unsigned>(*d);
  return conjecture_rhs_compare(g.order(), *d, hom_dp(g, h, limits), hom_kdd(h, ud, limits),
                                hom_kdp1(h, ud, limits));
}

}  // namespace homcert
