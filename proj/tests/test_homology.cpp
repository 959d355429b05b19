#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "oracle.hpp"
#include "skewbetti/graph.hpp"
#include "skewbetti/homology.hpp"

using namespace skewbetti;

namespace {

SimpleGraph path(int n) {
  std::vector<std::string> v;
  std::vector<std::pair<std::string, std::string>> e;
  for (int i = 1; i <= n; ++i) v.push_back(std::to_string(i));
  for (int i = 1; i < n; ++i) e.emplace_back(std::to_string(i), std::to_string(i + 1));
  return make_graph(v, e);
}

// closure of a list of top faces, as label lists, for make_complex
std::vector<std::vector<std::string>> closure(const std::vector<std::string>& labels,
                                              const std::vector<std::vector<int>>& tops) {
  std::set<std::vector<std::string>> faces;
  for (const auto& top : tops) {
    const int k = static_cast<int>(top.size());
    for (int sub = 0; sub < (1 << k); ++sub) {
      std::vector<std::string> f;
      for (int b = 0; b < k; ++b)
        if (sub >> b & 1) f.push_back(labels[top[b]]);
      faces.insert(f);
    }
  }
  return {faces.begin(), faces.end()};
}

DimVector dims_of(const SimplicialComplex& c, HomField f) { return reduced_homology_dims(c, f); }

}  // namespace

TEST_CASE("independence complex of a path") {
  const SimplicialComplex c = independence_complex(path(6));
  CHECK(c.implicit);
  const DimVector gf2 = dims_of(c, HomField::gf2);
  const DimVector q = dims_of(c, HomField::rational);
  CHECK(gf2.dims == std::map<int, int>{{1, 1}});
  CHECK(q.dims == std::map<int, int>{{1, 1}});
  CHECK(gf2.dim(0) == 0);
  CHECK(gf2.dim(1) == 1);
}

TEST_CASE("independence complex of a 4-cycle is two disjoint segments") {
  const SimpleGraph c4 = make_graph({"1", "2", "3", "4"},
                                    {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "1"}});
  const DimVector d = dims_of(independence_complex(c4), HomField::rational);
  CHECK(d.dims == std::map<int, int>{{0, 1}});
}

TEST_CASE("hollow triangle is a circle") {
  const std::vector<std::string> v{"a", "b", "c"};
  const SimplicialComplex c =
      make_complex(v, closure(v, {{0, 1}, {0, 2}, {1, 2}}));
  CHECK_FALSE(c.implicit);
  CHECK(dims_of(c, HomField::gf2).dims == std::map<int, int>{{1, 1}});
  CHECK(dims_of(c, HomField::rational).dims == std::map<int, int>{{1, 1}});
}

TEST_CASE("hollow tetrahedron is a 2-sphere") {
  const std::vector<std::string> v{"a", "b", "c", "d"};
  const SimplicialComplex c =
      make_complex(v, closure(v, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}));
  CHECK(dims_of(c, HomField::rational).dims == std::map<int, int>{{2, 1}});
  CHECK(dims_of(c, HomField::gf2).dims == std::map<int, int>{{2, 1}});
}

TEST_CASE("projective plane separates the fields") {
  // 6-vertex triangulation; every edge lies in two triangles, every vertex
  // link is a 5-cycle
  const std::vector<std::string> v{"1", "2", "3", "4", "5", "6"};
  const std::vector<std::vector<int>> tris{{0, 1, 4}, {0, 1, 5}, {0, 2, 3}, {0, 2, 5},
                                           {0, 3, 4}, {1, 2, 3}, {1, 2, 4}, {1, 3, 5},
                                           {2, 4, 5}, {3, 4, 5}};
  const SimplicialComplex c = make_complex(v, closure(v, tris));
  CHECK(dims_of(c, HomField::gf2).dims == std::map<int, int>{{1, 1}, {2, 1}});
  CHECK(dims_of(c, HomField::rational).dims.empty());
}

TEST_CASE("degenerate complexes") {
  // only the empty face: one unit of homology in degree -1
  const SimplicialComplex irr = make_complex({"a"}, {{}});
  CHECK(dims_of(irr, HomField::rational).dims == std::map<int, int>{{-1, 1}});
  CHECK(irr.is_face(0));
  CHECK_FALSE(irr.is_face(1));

  // no faces at all: no homology anywhere
  const SimplicialComplex none = make_complex({"a"}, {});
  CHECK(dims_of(none, HomField::rational).dims.empty());
  CHECK_FALSE(none.is_face(0));

  // a single point is contractible
  const SimplicialComplex pt = make_complex({"a"}, {{}, {"a"}});
  CHECK(dims_of(pt, HomField::gf2).dims.empty());
}

TEST_CASE("make_complex validation") {
  CHECK_THROWS_AS(make_complex({"a", "b"}, {{"a", "b"}}), ValidationError);  // not closed downward
  CHECK_THROWS_AS(make_complex({"a"}, {{"z"}}), ValidationError);
  CHECK_THROWS_AS(make_complex({"a", "a"}, {}), ValidationError);
  std::vector<std::string> many(21);
  for (int i = 0; i < 21; ++i) many[i] = "v" + std::to_string(i);
  CHECK_THROWS_AS(make_complex(many, {}), ValidationError);
}

TEST_CASE("extending by unused vertices keeps the faces") {
  const SimplicialComplex base = independence_complex(path(6));
  const SimplicialComplex ext = extend_vertices(base, {"g", "h"});
  CHECK(ext.n_vertices() == 8);
  CHECK_FALSE(ext.implicit);
  CHECK(dims_of(ext, HomField::rational).dims == std::map<int, int>{{1, 1}});
  CHECK_FALSE(ext.is_face(1u << 6));  // the new vertex is not a face
  CHECK_THROWS_AS(extend_vertices(base, {"1"}), ValidationError);
}

TEST_CASE("restriction of complexes") {
  const SimplicialComplex c = independence_complex(path(6));
  const SimplicialComplex r = restrict_complex(c, {"1", "3", "5"});
  // 1,3,5 are pairwise nonadjacent in the path, so the restriction is a full
  // triangle, which is contractible
  CHECK(r.n_vertices() == 3);
  CHECK(dims_of(r, HomField::gf2).dims.empty());

  const std::vector<std::string> v{"a", "b", "c"};
  const SimplicialComplex hollow = make_complex(v, closure(v, {{0, 1}, {0, 2}, {1, 2}}));
  const SimplicialComplex rr = restrict_complex(hollow, {"c", "a"});
  CHECK(rr.vertex_labels == std::vector<std::string>{"a", "c"});
  CHECK(dims_of(rr, HomField::gf2).dims.empty());  // one segment

  CHECK_THROWS_AS(restrict_complex(c, {"nope"}), ValidationError);
  CHECK_THROWS_AS(restrict_complex(c, {"1", "1"}), ValidationError);
}

TEST_CASE("faces arrive bucketed by cardinality in lexicographic order") {
  const SimpleGraph g = make_graph({"a", "b", "c"}, {});
  const auto buckets = independence_complex(g).faces_by_card();
  REQUIRE(buckets.size() == 4);
  CHECK(buckets[0] == std::vector<uint32_t>{0});
  CHECK(buckets[1] == std::vector<uint32_t>{1, 2, 4});
  CHECK(buckets[2] == std::vector<uint32_t>{3, 5, 6});
  CHECK(buckets[3] == std::vector<uint32_t>{7});
}

TEST_CASE("boundary matrices against the naive rank oracle") {
  const std::vector<std::string> v{"1", "2", "3", "4", "5", "6"};
  const std::vector<std::vector<int>> tris{{0, 1, 4}, {0, 1, 5}, {0, 2, 3}, {0, 2, 5},
                                           {0, 3, 4}, {1, 2, 3}, {1, 2, 4}, {1, 3, 5},
                                           {2, 4, 5}, {3, 4, 5}};
  const SimplicialComplex c = make_complex(v, closure(v, tris));
  for (int p = 0; p <= 2; ++p) {
    const auto mq = boundary_matrix(c, p, HomField::rational);
    const auto m2 = boundary_matrix(c, p, HomField::gf2);
    CHECK(rank_rational(mq) == testoracle::rank_q(mq));
    CHECK(rank_gf2(m2) == testoracle::rank_gf2_naive(m2));
  }
  // d o d = 0 over the rationals
  const auto d1 = boundary_matrix(c, 1, HomField::rational);
  const auto d2 = boundary_matrix(c, 2, HomField::rational);
  for (std::size_t i = 0; i < d1.size(); ++i)
    for (std::size_t j = 0; j < d2[0].size(); ++j) {
      int acc = 0;
      for (std::size_t k = 0; k < d2.size(); ++k) acc += d1[i][k] * d2[k][j];
      CHECK(acc == 0);
    }
  CHECK_THROWS_AS(boundary_matrix(c, -1, HomField::gf2), ValidationError);
}

TEST_CASE("rank helpers agree with the oracle on random matrices") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 25; ++trial) {
    const int R = 1 + static_cast<int>(rng() % 6), C = 1 + static_cast<int>(rng() % 6);
    std::vector<std::vector<int>> m(R, std::vector<int>(C));
    for (auto& row : m)
      for (auto& x : row) x = static_cast<int>(rng() % 7) - 3;
    CHECK(rank_rational(m) == testoracle::rank_q(m));
    CHECK(rank_gf2(m) == testoracle::rank_gf2_naive(m));
  }
}

TEST_CASE("homology over vertex limit is refused") {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < 21; ++i) labels.push_back("v" + std::to_string(i));
  CHECK_THROWS_AS(independence_complex(make_graph(labels, edges)), ValidationError);
}
