#include "homcert/images.hpp"

#include <algorithm>
#include <functional>

namespace homcert {

namespace {

void check_size(const ConstraintGraph& h, const Limits& limits) {
  if (h.order() > limits.image_vertices) {
    throw ResourceError("image_vertices", "image enumeration needs |V(H)| <= " +
                                              std::to_string(limits.image_vertices) + ", got " +
                                              std::to_string(h.order()));
  }
}

// Calls f(clique) for every clique (including the empty one) inside `pool`,
// which must contain only unlooped vertices.
void for_each_unlooped_clique(const ConstraintGraph& h, VertexSet pool,
                              const std::function<void(VertexSet)>& f) {
  std::function<void(VertexSet, VertexSet)> grow = [&](VertexSet clique, VertexSet cand) {
    f(clique);
    for (VertexSet c = cand; c != 0; c &= c - 1) {
      const int v = lowest(c);
      // only higher candidates, so each clique is produced once
      grow(clique | bit(v), cand & h.neighbors(v) & ~prefix_mask(v + 1));
    }
  };
  grow(0, pool);
}

}  // namespace

BigCount ImageSet::bipartite_image_count() const {
  BigCount total = 0;
  for (const auto& fam : families) total += pow(BigInt(2), popcount(fam.common)) - 1;
  return total;
}

ImageSet enumerate_images(const ConstraintGraph& h, const Limits& limits) {
  check_size(h, limits);
  const int k = h.order();
  const std::size_t subsets = std::size_t{1} << k;

  // common[A] = intersection of N(a) over a in A, built from A minus its lowest vertex.
  std::vector<VertexSet> common(subsets);
  common[0] = h.vertices();
  ImageSet out;
  for (std::size_t a = 1; a < subsets; ++a) {
    const auto set = static_cast<VertexSet>(a);
    const int v = lowest(set);
    common[a] = common[a & (a - 1)] & h.neighbors(v);
    if (common[a] != 0) out.families.push_back({set, common[a]});
  }

  // A is a looped clique iff A is inside its own common neighbourhood.
  const VertexSet unlooped = h.vertices() & ~h.looped();
  for (std::size_t a = 1; a < subsets; ++a) {
    const auto set = static_cast<VertexSet>(a);
    if ((set & ~common[a]) != 0) continue;
    for_each_unlooped_clique(h, common[a] & unlooped, [&](VertexSet b) {
      out.complete.push_back({set, b});
    });
  }
  std::sort(out.complete.begin(), out.complete.end(), [](const CompleteImage& x, const CompleteImage& y) {
    return x.looped != y.looped ? x.looped < y.looped : x.unlooped < y.unlooped;
  });
  return out;
}

int largest_unlooped_clique(const ConstraintGraph& h) {
  int best = 0;
  for_each_unlooped_clique(h, h.vertices() & ~h.looped(),
                           [&](VertexSet c) { best = std::max(best, popcount(c)); });
  return best;
}

BigCount count_unlooped_cliques(const ConstraintGraph& h, int size) {
  unsigned long count = 0;
  for_each_unlooped_clique(h, h.vertices() & ~h.looped(), [&](VertexSet c) {
    if (popcount(c) == size) ++count;
  });
  return BigCount(count);
}

}  // namespace homcert
