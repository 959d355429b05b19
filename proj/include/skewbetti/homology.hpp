#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "skewbetti/errors.hpp"
#include "skewbetti/graph.hpp"

namespace skewbetti {

enum class HomField { gf2, rational };

/* Simplicial complex on at most 20 labeled vertices.  Faces are either the
 * independent sets of a stored graph (implicit mode, never materialized up
 * front) or an explicit downward-closed list of vertex masks.  A vertex may
 * lie in no face at all; the void complex has no faces, while {empty set}
 * is the nonvoid complex with no vertices in any face. */
struct SimplicialComplex {
  std::vector<std::string> vertex_labels;
  bool implicit;                     // faces = independent sets of adj
  std::vector<uint32_t> adj;         // implicit mode
  std::vector<uint32_t> face_masks;  // explicit mode, downward closed

  std::size_t n_vertices() const { return vertex_labels.size(); }
  bool is_face(uint32_t mask) const;
  // Faces grouped by cardinality, each bucket in lexicographic order.
  std::vector<std::vector<uint32_t>> faces_by_card() const;
};

struct DimVector {
  std::map<int, int> dims;  // p >= -1, nonzero entries only
  int dim(int p) const;
};

SimplicialComplex independence_complex(const SimpleGraph& g);

// Explicit complex from a face list (validated downward closed).
SimplicialComplex make_complex(const std::vector<std::string>& vertex_labels,
                               const std::vector<std::vector<std::string>>& faces);

// Same faces on an enlarged vertex set; the extra vertices lie in no face.
SimplicialComplex extend_vertices(const SimplicialComplex& c,
                                  const std::vector<std::string>& extra);

SimplicialComplex restrict_complex(const SimplicialComplex& c,
                                   const std::vector<std::string>& w);

// Matrix of d_p from p-faces to (p-1)-faces under the lexicographic face
// order; entries +-1 over the rationals, 1 over GF(2); d_0 maps vertices to
// the empty face.
std::vector<std::vector<int>> boundary_matrix(const SimplicialComplex& c, int p,
                                              HomField field);

// Exact reduced homology dimensions; void complex -> all zero, {empty set} ->
// dim H~_{-1} = 1.
DimVector reduced_homology_dims(const SimplicialComplex& c, HomField field);

// Rank helpers shared with the Betti engines; exact over both fields.
int rank_gf2(const std::vector<std::vector<int>>& m);
int rank_rational(const std::vector<std::vector<int>>& m);

/* Mask-level entry points for callers that evaluate many restrictions (the
 * Hochster sum).  Reentrant: no shared state, safe to run in parallel. */

// Independent sets of adj within wm, grouped by cardinality, lex order.
std::vector<std::vector<uint32_t>> independent_set_buckets(const std::vector<uint32_t>& adj,
                                                           uint32_t wm);

DimVector homology_from_buckets(const std::vector<std::vector<uint32_t>>& buckets,
                                HomField field);

}  // namespace skewbetti
