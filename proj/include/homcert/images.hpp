#pragma once

#include "homcert/bigint.hpp"
#include "homcert/errors.hpp"
#include "homcert/graph.hpp"

#include <vector>

namespace homcert {

/// All complete bipartite images (A, B) sharing the left side A: B ranges
/// over the nonempty subsets of `common`, the common neighbourhood of A.
struct BipartiteFamily {
  VertexSet left = 0;
  VertexSet common = 0;
};

/// A nonempty fully looped clique A joined completely to an unlooped clique B.
struct CompleteImage {
  VertexSet looped = 0;
  VertexSet unlooped = 0;
  friend bool operator==(const CompleteImage&, const CompleteImage&) = default;
};

/// Images are ordered pairs: (A, B) and (B, A) are distinct when A != B and
/// (A, A) appears once.
struct ImageSet {
  std::vector<BipartiteFamily> families;   // sorted by left side
  std::vector<CompleteImage> complete;     // sorted by (looped, unlooped)

  BigCount bipartite_image_count() const;

  template <class F>
  void for_each_bipartite_image(F&& f) const {
    for (const auto& fam : families) {
      // every nonempty submask of fam.common
      for (VertexSet b = fam.common; b != 0; b = (b - 1) & fam.common) f(fam.left, b);
    }
  }
};

/// Requires |V(H)| <= limits.image_vertices (16).
ImageSet enumerate_images(const ConstraintGraph& h, const Limits& limits = Limits::defaults());

/// Size of the largest clique among unlooped vertices.
int largest_unlooped_clique(const ConstraintGraph& h);

/// Number of cliques of exactly `size` vertices among unlooped vertices.
BigCount count_unlooped_cliques(const ConstraintGraph& h, int size);

}  // namespace homcert
