#include "skewbetti/homology.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <limits>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

namespace skewbetti {

namespace {

using boost::multiprecision::cpp_int;

constexpr int kMaxVertices = 20;

// Lexicographic order on equal-cardinality faces: the lowest differing vertex
// decides, the face containing it first.
bool lex_less(uint32_t a, uint32_t b) {
  const uint32_t x = a ^ b;
  return x && (a & (x & ~(x - 1)));
}

struct OverflowBail {};

// One-step fraction-free elimination; divisions are exact, so the only
// failure mode is an intermediate value outgrowing 64 bits, which bails to
// the big-integer version.
int bareiss_rank_i64(std::vector<std::vector<long long>> m) {
  if (m.empty() || m[0].empty()) return 0;
  const int R = static_cast<int>(m.size()), C = static_cast<int>(m[0].size());
  int rank = 0, r = 0;
  long long prev = 1;
  for (int c = 0; c < C && r < R; ++c) {
    int piv = -1;
    for (int i = r; i < R; ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    for (int i = r + 1; i < R; ++i) {
      if (m[i][c] == 0 && prev == 1) continue;
      for (int j = c + 1; j < C; ++j) {
        const __int128 num =
            static_cast<__int128>(m[r][c]) * m[i][j] - static_cast<__int128>(m[i][c]) * m[r][j];
        const __int128 q = num / prev;
        if (q > std::numeric_limits<long long>::max() || q < std::numeric_limits<long long>::min())
          throw OverflowBail{};
        m[i][j] = static_cast<long long>(q);
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
    ++rank;
  }
  return rank;
}

int bareiss_rank_big(std::vector<std::vector<cpp_int>> m) {
  if (m.empty() || m[0].empty()) return 0;
  const int R = static_cast<int>(m.size()), C = static_cast<int>(m[0].size());
  int rank = 0, r = 0;
  cpp_int prev = 1;
  for (int c = 0; c < C && r < R; ++c) {
    int piv = -1;
    for (int i = r; i < R; ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    for (int i = r + 1; i < R; ++i) {
      for (int j = c + 1; j < C; ++j) m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
    ++rank;
  }
  return rank;
}

int face_sign_position(uint32_t face, int v) {
  // Index of v among the ascending vertices of face.
  return std::popcount(face & ((1u << v) - 1));
}

// Rank of the boundary from the card-c bucket to the card-(c-1) bucket.
int boundary_rank(const std::vector<uint32_t>& rows, const std::vector<uint32_t>& cols,
                  HomField field) {
  if (rows.empty() || cols.empty()) return 0;
  std::unordered_map<uint32_t, int> row_index;
  row_index.reserve(rows.size() * 2);
  for (std::size_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], static_cast<int>(i));

  if (field == HomField::gf2) {
    const int words = (static_cast<int>(rows.size()) + 63) / 64;
    std::vector<std::vector<uint64_t>> pivots(rows.size());
    int rank = 0;
    std::vector<uint64_t> col(words);
    for (const uint32_t f : cols) {
      std::fill(col.begin(), col.end(), 0);
      uint32_t m = f;
      while (m) {
        const int v = std::countr_zero(m);
        m &= m - 1;
        const int ri = row_index.at(f ^ (1u << v));
        col[ri >> 6] ^= 1ull << (ri & 63);
      }
      while (true) {
        int lead = -1;
        for (int w = 0; w < words; ++w)
          if (col[w]) {
            lead = (w << 6) + std::countr_zero(col[w]);
            break;
          }
        if (lead < 0) break;
        if (pivots[lead].empty()) {
          pivots[lead] = col;
          ++rank;
          break;
        }
        for (int w = 0; w < words; ++w) col[w] ^= pivots[lead][w];
      }
    }
    return rank;
  }

  std::vector<std::vector<long long>> m(rows.size(), std::vector<long long>(cols.size(), 0));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const uint32_t f = cols[j];
    uint32_t bits = f;
    while (bits) {
      const int v = std::countr_zero(bits);
      bits &= bits - 1;
      const int ri = row_index.at(f ^ (1u << v));
      m[ri][j] = face_sign_position(f, v) % 2 == 0 ? 1 : -1;
    }
  }
  try {
    return bareiss_rank_i64(m);
  } catch (const OverflowBail&) {
    std::vector<std::vector<cpp_int>> big(m.size(), std::vector<cpp_int>(m[0].size()));
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m[i].size(); ++j) big[i][j] = m[i][j];
    return bareiss_rank_big(std::move(big));
  }
}

std::vector<std::string> checked_labels(const std::vector<std::string>& labels) {
  if (labels.size() > kMaxVertices)
    throw ValidationError("at most 20 vertices supported for homology");
  auto sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ValidationError("duplicate vertex label");
  return labels;
}

}  // namespace

int DimVector::dim(int p) const {
  const auto it = dims.find(p);
  return it == dims.end() ? 0 : it->second;
}

bool SimplicialComplex::is_face(uint32_t mask) const {
  if (implicit) {
    uint32_t m = mask;
    while (m) {
      const int v = std::countr_zero(m);
      m &= m - 1;
      if (adj[v] & mask) return false;
    }
    return true;
  }
  return std::binary_search(face_masks.begin(), face_masks.end(), mask);
}

std::vector<std::vector<uint32_t>> SimplicialComplex::faces_by_card() const {
  if (implicit) {
    const uint32_t full = n_vertices() == 32 ? ~0u : (1u << n_vertices()) - 1;
    return independent_set_buckets(adj, full);
  }
  std::vector<std::vector<uint32_t>> buckets;
  for (const uint32_t f : face_masks) {
    const int c = std::popcount(f);
    if (static_cast<int>(buckets.size()) <= c) buckets.resize(c + 1);
    buckets[c].push_back(f);
  }
  for (auto& b : buckets) std::sort(b.begin(), b.end(), lex_less);
  return buckets;
}

SimplicialComplex independence_complex(const SimpleGraph& g) {
  SimplicialComplex c;
  c.vertex_labels = checked_labels(g.vertices);
  c.implicit = true;
  c.adj.resize(g.n());
  for (std::size_t v = 0; v < g.n(); ++v) c.adj[v] = static_cast<uint32_t>(g.adj[v]);
  return c;
}

SimplicialComplex make_complex(const std::vector<std::string>& vertex_labels,
                               const std::vector<std::vector<std::string>>& faces) {
  SimplicialComplex c;
  c.vertex_labels = checked_labels(vertex_labels);
  c.implicit = false;
  for (const auto& face : faces) {
    uint32_t mask = 0;
    for (const auto& lab : face) {
      const auto it = std::find(vertex_labels.begin(), vertex_labels.end(), lab);
      if (it == vertex_labels.end()) throw ValidationError("unknown vertex " + lab);
      mask |= 1u << (it - vertex_labels.begin());
    }
    c.face_masks.push_back(mask);
  }
  std::sort(c.face_masks.begin(), c.face_masks.end());
  c.face_masks.erase(std::unique(c.face_masks.begin(), c.face_masks.end()), c.face_masks.end());
  for (const uint32_t f : c.face_masks) {
    uint32_t m = f;
    while (m) {
      const int v = std::countr_zero(m);
      m &= m - 1;
      if (!std::binary_search(c.face_masks.begin(), c.face_masks.end(), f ^ (1u << v)))
        throw ValidationError("faces are not downward closed");
    }
  }
  return c;
}

SimplicialComplex extend_vertices(const SimplicialComplex& c, const std::vector<std::string>& extra) {
  SimplicialComplex out;
  out.vertex_labels = c.vertex_labels;
  out.vertex_labels.insert(out.vertex_labels.end(), extra.begin(), extra.end());
  checked_labels(out.vertex_labels);
  out.implicit = false;
  if (c.implicit) {
    for (const auto& bucket : c.faces_by_card())
      out.face_masks.insert(out.face_masks.end(), bucket.begin(), bucket.end());
  } else {
    out.face_masks = c.face_masks;
  }
  std::sort(out.face_masks.begin(), out.face_masks.end());
  return out;
}

SimplicialComplex restrict_complex(const SimplicialComplex& c, const std::vector<std::string>& w) {
  std::vector<int> pos;
  for (const auto& lab : w) {
    const auto it = std::find(c.vertex_labels.begin(), c.vertex_labels.end(), lab);
    if (it == c.vertex_labels.end()) throw ValidationError("unknown vertex " + lab);
    pos.push_back(static_cast<int>(it - c.vertex_labels.begin()));
  }
  std::sort(pos.begin(), pos.end());
  if (std::adjacent_find(pos.begin(), pos.end()) != pos.end())
    throw ValidationError("duplicate vertex in restriction");

  SimplicialComplex out;
  for (int p : pos) out.vertex_labels.push_back(c.vertex_labels[p]);
  out.implicit = c.implicit;
  if (c.implicit) {
    out.adj.assign(pos.size(), 0);
    for (std::size_t k = 0; k < pos.size(); ++k)
      for (std::size_t l = 0; l < pos.size(); ++l)
        if (c.adj[pos[k]] >> pos[l] & 1) out.adj[k] |= 1u << l;
    return out;
  }
  uint32_t wmask = 0;
  for (int p : pos) wmask |= 1u << p;
  for (const uint32_t f : c.face_masks) {
    if ((f & wmask) != f) continue;
    uint32_t packed = 0;
    for (std::size_t k = 0; k < pos.size(); ++k)
      if (f >> pos[k] & 1) packed |= 1u << k;
    out.face_masks.push_back(packed);
  }
  std::sort(out.face_masks.begin(), out.face_masks.end());
  return out;
}

std::vector<std::vector<uint32_t>> independent_set_buckets(const std::vector<uint32_t>& adj,
                                                           uint32_t wm) {
  std::vector<std::vector<uint32_t>> buckets(std::popcount(wm) + 1);
  buckets[0].push_back(0);
  // Depth-first over the sorted ground set: each bucket comes out in lex order.
  std::function<void(uint32_t, uint32_t)> rec = [&](uint32_t cur, uint32_t cand) {
    uint32_t m = cand;
    while (m) {
      const int v = std::countr_zero(m);
      m &= m - 1;
      const uint32_t face = cur | (1u << v);
      buckets[std::popcount(face)].push_back(face);
      const uint32_t above = v + 1 < 32 ? cand >> (v + 1) << (v + 1) : 0;
      rec(face, above & ~adj[v]);
    }
  };
  rec(0, wm);
  return buckets;
}

DimVector homology_from_buckets(const std::vector<std::vector<uint32_t>>& buckets, HomField field) {
  DimVector out;
  int maxc = -1;
  for (int c = 0; c < static_cast<int>(buckets.size()); ++c)
    if (!buckets[c].empty()) maxc = c;
  if (maxc < 0) return out;  // void complex

  std::vector<int> ranks(maxc + 2, 0);
  for (int c = 1; c <= maxc; ++c) ranks[c] = boundary_rank(buckets[c - 1], buckets[c], field);
  for (int c = 0; c <= maxc; ++c) {
    const int d = static_cast<int>(buckets[c].size()) - ranks[c] - ranks[c + 1];
    if (d < 0) throw StructuralError("negative homology dimension");
    if (d > 0) out.dims[c - 1] = d;
  }
  return out;
}

std::vector<std::vector<int>> boundary_matrix(const SimplicialComplex& c, int p, HomField field) {
  if (p < 0) throw ValidationError("boundary is defined for p >= 0");
  const auto buckets = c.faces_by_card();
  const auto bucket_of = [&](int card) {
    return card < static_cast<int>(buckets.size()) ? buckets[card] : std::vector<uint32_t>{};
  };
  const auto rows = bucket_of(p), cols = bucket_of(p + 1);
  std::unordered_map<uint32_t, int> row_index;
  for (std::size_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], static_cast<int>(i));
  std::vector<std::vector<int>> m(rows.size(), std::vector<int>(cols.size(), 0));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    uint32_t bits = cols[j];
    while (bits) {
      const int v = std::countr_zero(bits);
      bits &= bits - 1;
      const int sign =
          field == HomField::gf2 ? 1 : (face_sign_position(cols[j], v) % 2 == 0 ? 1 : -1);
      m[row_index.at(cols[j] ^ (1u << v))][j] = sign;
    }
  }
  return m;
}

DimVector reduced_homology_dims(const SimplicialComplex& c, HomField field) {
  if (c.n_vertices() > kMaxVertices)
    throw ValidationError("at most 20 vertices supported for homology");
  return homology_from_buckets(c.faces_by_card(), field);
}

int rank_gf2(const std::vector<std::vector<int>>& m) {
  if (m.empty() || m[0].empty()) return 0;
  const int C = static_cast<int>(m[0].size());
  const int words = (C + 63) / 64;
  std::vector<std::vector<uint64_t>> rows;
  for (const auto& row : m) {
    std::vector<uint64_t> packed(words, 0);
    for (int j = 0; j < C; ++j)
      if (row[j] % 2) packed[j >> 6] ^= 1ull << (j & 63);
    rows.push_back(std::move(packed));
  }
  int rank = 0;
  std::vector<std::vector<uint64_t>> pivots(C);
  for (auto& row : rows) {
    while (true) {
      int lead = -1;
      for (int w = 0; w < words; ++w)
        if (row[w]) {
          lead = (w << 6) + std::countr_zero(row[w]);
          break;
        }
      if (lead < 0) break;
      if (pivots[lead].empty()) {
        pivots[lead] = row;
        ++rank;
        break;
      }
      for (int w = 0; w < words; ++w) row[w] ^= pivots[lead][w];
    }
  }
  return rank;
}

int rank_rational(const std::vector<std::vector<int>>& m) {
  if (m.empty() || m[0].empty()) return 0;
  std::vector<std::vector<cpp_int>> big(m.size(), std::vector<cpp_int>(m[0].size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) big[i][j] = m[i][j];
  return bareiss_rank_big(std::move(big));
}

}  // namespace skewbetti
