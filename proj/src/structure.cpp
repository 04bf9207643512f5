#include "homcert/structure.hpp"

#include <stdexcept>

namespace homcert {

namespace {

bool subset(VertexSet a, VertexSet b) { return (a & ~b) == 0; }

struct CompleteMax {
  int a = 0;
  int b = 0;
  long long n = 0;
};

// a, b and n over the complete images accepted by `keep`.
template <class Keep>
CompleteMax complete_maximum(const ImageSet& images, Keep keep) {
  CompleteMax out;
  for (const auto& img : images.complete) {
    if (!keep(img)) continue;
    const int a = popcount(img.looped);
    const int b = popcount(img.unlooped);
    if (a > out.a || (a == out.a && b > out.b)) {
      out = {a, b, 1};
    } else if (a == out.a && b == out.b) {
      ++out.n;
    }
  }
  return out;
}

}  // namespace

StructuralProfile structural_profile(const ConstraintGraph& h, const ImageSet& images) {
  StructuralProfile p;
  p.loopless = h.is_loopless();
  p.complete_looped = h.is_complete_looped();

  // The largest image with left side A is (A, CN(A)), so it suffices to
  // scan one pair per family.
  for (const auto& fam : images.families) {
    const int size = popcount(fam.left) * popcount(fam.common);
    if (size > p.eta) {
      p.eta = size;
      p.m = 1;
    } else if (size == p.eta) {
      ++p.m;
    }
  }

  const auto top = complete_maximum(images, [](const CompleteImage&) { return true; });
  p.a = top.a;
  p.b = top.b;
  p.n = top.n;

  if (p.a * p.a != p.eta || p.m != 1 || p.n != 1) return p;

  PrimedParameters q;
  for (const auto& img : images.complete) {
    if (popcount(img.looped) == p.a && img.unlooped == 0) q.a0 = img.looped;
  }
  const VertexSet a0 = q.a0;
  const auto second = complete_maximum(
      images, [a0](const CompleteImage& img) { return !subset(img.looped | img.unlooped, a0); });
  q.a = second.a;
  q.b = second.b;
  q.n = second.n;

  // For a family with left side A, some B inside CN(A) escapes A0 iff A or
  // CN(A) does; the largest such B is CN(A) itself.
  for (const auto& fam : images.families) {
    if (subset(fam.left, a0) && subset(fam.common, a0)) continue;
    const int size = popcount(fam.left) * popcount(fam.common);
    if (size > q.eta) {
      q.eta = size;
      q.m = 1;
    } else if (size == q.eta) {
      ++q.m;
    }
  }
  p.primed = q;
  return p;
}

StructuralProfile structural_profile(const ConstraintGraph& h, const Limits& limits) {
  return structural_profile(h, enumerate_images(h, limits));
}

const char* to_string(HType t) {
  switch (t) {
    case HType::Neutral: return "Neutral";
    case HType::CompleteBipartite: return "CompleteBipartiteType";
    case HType::Complete: return "CompleteType";
  }
  return "?";
}

Dominance expected_sign(HType t) {
  switch (t) {
    case HType::CompleteBipartite: return Dominance::Bipartite;
    case HType::Complete: return Dominance::Clique;
    case HType::Neutral: break;
  }
  return Dominance::Equal;
}

std::vector<TypeCondition> fired_conditions(const StructuralProfile& p) {
  std::vector<TypeCondition> out;
  const auto bip = [&](int i) { out.push_back({HType::CompleteBipartite, i}); };
  const auto cpl = [&](int i) { out.push_back({HType::Complete, i}); };

  if (p.loopless) bip(1);
  if (p.loopless) return out;  // the remaining conditions assume a loop

  const bool square = p.a * p.a == p.eta;
  if (p.a * p.a < p.eta) bip(2);
  if (square && p.m > 1 && p.m >= p.n * p.n) bip(3);
  if (square && p.m < p.n * p.n) cpl(1);

  if (!square || p.m != 1 || p.n != 1 || !p.primed) return out;
  const auto& q = *p.primed;
  const long long aa = static_cast<long long>(p.a) * q.a;
  if (aa < q.eta) bip(4);
  if (aa > q.eta) cpl(2);
  if (aa == q.eta && q.b > 0) cpl(3);
  if (aa == q.eta && q.b == 0) {
    const long long lhs = 2LL * q.n * q.a;
    const long long rhs = static_cast<long long>(p.a) * q.m;
    if (lhs <= rhs && q.m > 0) bip(5);
    if (lhs > rhs) cpl(4);
  }
  return out;
}

TypeVerdict classify_profile(const StructuralProfile& p) {
  TypeVerdict v;
  if (p.complete_looped) {
    v.kind = HType::Neutral;
    v.condition = {HType::Neutral, 0};
    v.reason = "complete looped graph";
    return v;
  }
  const auto fired = fired_conditions(p);
  if (fired.size() != 1) {
    throw std::logic_error("classifier: " + std::to_string(fired.size()) +
                           " conditions fired for a graph that is not complete looped");
  }
  v.kind = fired[0].kind;
  v.condition = fired[0];
  static const char* const bipartite_reasons[] = {
      "", "loopless", "a^2 < eta", "a^2 = eta, m > 1, m >= n^2", "a^2 = eta, m = n = 1, a a' < eta'",
      "a^2 = eta, m = n = 1, a a' = eta', b' = 0, 2 n' a' <= a m'"};
  static const char* const complete_reasons[] = {
      "", "a^2 = eta, m < n^2", "a^2 = eta, m = n = 1, a a' > eta'",
      "a^2 = eta, m = n = 1, a a' = eta', b' > 0", "a^2 = eta, m = n = 1, a a' = eta', b' = 0, 2 n' a' > a m'"};
  v.reason = v.kind == HType::CompleteBipartite ? bipartite_reasons[v.condition.index]
                                                : complete_reasons[v.condition.index];
  return v;
}

EmpiricalReport empirical_type(const ConstraintGraph& h, unsigned d_max, const Limits& limits) {
  if (d_max == 0) throw std::invalid_argument("empirical_type: d_max must be at least 1");
  const ImageSet images = enumerate_images(h, limits);
  EmpiricalReport r;
  r.verdict = classify_profile(structural_profile(h, images));
  for (unsigned d = 1; d <= d_max; ++d) {
    r.table.push_back(compare_cross_powers(d, hom_kdd_closed(images, d),
                                           hom_kdp1_closed(h, images, d).exact));
  }
  r.stable_sign = r.table.back().sign;
  r.stable_from = d_max;
  while (r.stable_from > 1 && r.table[r.stable_from - 2].sign == r.stable_sign) --r.stable_from;
  r.agrees = r.stable_sign == expected_sign(r.verdict.kind);
  if (r.agrees && r.verdict.kind != HType::Neutral) r.verdict.crossover_d = r.stable_from;
  return r;
}

TypeVerdict classify(const ConstraintGraph& h, unsigned d_max, const Limits& limits) {
  return empirical_type(h, d_max, limits).verdict;
}

}  // namespace homcert
