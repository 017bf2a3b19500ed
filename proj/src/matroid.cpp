#include "trop/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "trop/dressian.hpp"

namespace trop {

namespace {

bool has(const std::vector<Mask>& sorted, Mask s) { return std::binary_search(sorted.begin(), sorted.end(), s); }

bool exchange_ok(const std::vector<Mask>& sorted) {
  for (Mask b1 : sorted)
    for (Mask b2 : sorted) {
      if (b1 == b2) continue;
      for (int x : elements(b1 & ~b2)) {
        bool found = false;
        for (int y : elements(b2 & ~b1))
          if (has(sorted, (b1 & ~bit(x)) | bit(y))) {
            found = true;
            break;
          }
        if (!found) return false;
      }
    }
  return true;
}

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

bool is_matroid(int n, int k, const std::vector<Mask>& candidate_bases) {
  if (candidate_bases.empty()) throw std::invalid_argument("is_matroid: empty candidate set");
  for (Mask b : candidate_bases)
    if (popcount(b) != k || (b & ~full_mask(n))) throw std::invalid_argument("is_matroid: candidate is not a k-subset of [n]");
  std::vector<Mask> s(candidate_bases);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return exchange_ok(s);
}

Matroid::Matroid(int n, int k, std::vector<Mask> bases) : n_(n), k_(k), bases_(std::move(bases)) {
  if (n < 0 || n > kMaxGround || k < 0 || k > n) throw std::invalid_argument("Matroid: need 0 <= k <= n <= 16");
  std::sort(bases_.begin(), bases_.end());
  bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
  if (!is_matroid(n, k, bases_)) throw std::invalid_argument("Matroid: basis exchange fails");
}

bool Matroid::is_basis(Mask s) const { return has(bases_, s); }

Matroid Matroid::uniform(int k, int n) { return Matroid(n, k, enumerate_ksubsets(k, n)); }

int rank(const Matroid& M, Mask A) {
  int r = 0;
  for (Mask b : M.bases()) r = std::max(r, popcount(A & b));
  return r;
}

std::vector<Mask> connected_components(const Matroid& M) {
  const int n = M.n();
  UnionFind uf(n);
  for (Mask b : M.bases())
    for (int a : elements(b))
      for (int c = 1; c <= n; ++c)
        if (!contains(b, c) && M.is_basis((b & ~bit(a)) | bit(c))) uf.unite(a - 1, c - 1);
  std::vector<Mask> blocks;
  std::vector<int> index(n, -1);
  for (int i = 0; i < n; ++i) {
    int r = uf.find(i);
    if (index[r] < 0) {
      index[r] = static_cast<int>(blocks.size());
      blocks.push_back(0);
    }
    blocks[index[r]] |= bit(i + 1);
  }
  return blocks;
}

int polytope_dimension(const Matroid& M) { return M.n() - static_cast<int>(connected_components(M).size()); }

Minor minor(const Matroid& M, Mask deletions, Mask contractions) {
  const Mask ground = full_mask(M.n());
  if (deletions & contractions) throw std::invalid_argument("minor: deletions and contractions overlap");
  if ((deletions | contractions) & ~ground) throw std::invalid_argument("minor: elements outside the ground set");
  Minor out;
  std::vector<int> newpos(M.n() + 1, 0);
  for (int i = 1; i <= M.n(); ++i)
    if (!contains(deletions | contractions, i)) {
      out.labels.push_back(i);
      newpos[i] = static_cast<int>(out.labels.size());
    }
  std::vector<Mask> nb;
  for (Mask b : M.bases()) {
    if ((b & deletions) || (b & contractions) != contractions) continue;
    Mask r = 0;
    for (int x : elements(b & ~contractions)) r |= bit(newpos[x]);
    nb.push_back(r);
  }
  if (nb.empty()) throw std::invalid_argument("minor: empty slice");
  out.matroid = Matroid(static_cast<int>(out.labels.size()), M.k() - popcount(contractions), std::move(nb));
  return out;
}

// Position of x in the cyclic order starting at i, 0-based.
static int cyc(int x, int i, int n) { return (x - i + n) % n; }

static std::vector<int> gale_key(Mask B, int i, int n) {
  std::vector<int> v;
  for (int x : elements(B)) v.push_back(cyc(x, i, n));
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<Mask> grassmann_necklace(const Matroid& M) {
  const int n = M.n();
  std::vector<Mask> out;
  for (int i = 1; i <= n; ++i) {
    Mask I = 0;
    int r = 0;
    for (int t = 0; t < n; ++t) {
      int x = (i - 1 + t) % n + 1;
      if (rank(M, I | bit(x)) > r) {
        I |= bit(x);
        ++r;
      }
    }
    out.push_back(I);
  }
  return out;
}

bool is_positroid(const Matroid& M) {
  const int n = M.n(), k = M.k();
  auto N = grassmann_necklace(M);
  std::vector<std::vector<int>> keys;
  for (int i = 1; i <= n; ++i) keys.push_back(gale_key(N[i - 1], i, n));
  for (Mask B : enumerate_ksubsets(k, n)) {
    if (M.is_basis(B)) continue;
    bool above = true;
    for (int i = 1; i <= n && above; ++i) {
      auto v = gale_key(B, i, n);
      for (int t = 0; t < k; ++t)
        if (v[t] < keys[i - 1][t]) {
          above = false;
          break;
        }
    }
    if (above) return false;
  }
  return true;
}

PluckerVector neg_rank_vector(const Matroid& M) {
  PluckerVector P(M.k(), M.n());
  auto subsets = enumerate_ksubsets(M.k(), M.n());
  for (size_t i = 0; i < subsets.size(); ++i) P.values[i] = -rank(M, subsets[i]);
  return P;
}

bool rank_relations_hold(const Matroid& M) {
  const int n = M.n(), k = M.k();
  if (k < 2 || n - k < 2) return true;
  std::vector<int> rk(std::size_t{1} << n, -1);
  auto r = [&](Mask s) {
    int& v = rk[s];
    if (v < 0) v = rank(M, s);
    return v;
  };
  for (const auto& t : relation_tuples(k, n)) {
    Mask S = t.S;
    int ac = r(S | bit(t.a) | bit(t.c)) + r(S | bit(t.b) | bit(t.d));
    int ab = r(S | bit(t.a) | bit(t.b)) + r(S | bit(t.c) | bit(t.d));
    int ad = r(S | bit(t.a) | bit(t.d)) + r(S | bit(t.b) | bit(t.c));
    if (ac != std::max(ab, ad)) return false;
  }
  return true;
}

std::vector<OctahedralFace> octahedral_faces(const Matroid& M) {
  std::vector<OctahedralFace> out;
  const int n = M.n(), k = M.k();
  if (k < 2 || n - k < 2) return out;
  for (Mask C : enumerate_ksubsets(k - 2, n)) {
    std::vector<int> rest;
    for (int i = 1; i <= n; ++i)
      if (!contains(C, i)) rest.push_back(i);
    const int r = static_cast<int>(rest.size());
    for (int a = 0; a < r; ++a)
      for (int b = a + 1; b < r; ++b)
        for (int c = b + 1; c < r; ++c)
          for (int d = c + 1; d < r; ++d) {
            int q[4] = {rest[a], rest[b], rest[c], rest[d]};
            bool uniform = true;
            for (int x = 0; x < 4 && uniform; ++x)
              for (int y = x + 1; y < 4 && uniform; ++y) uniform = M.is_basis(C | bit(q[x]) | bit(q[y]));
            if (uniform) out.push_back({C, bit(q[0]) | bit(q[1]) | bit(q[2]) | bit(q[3])});
          }
  }
  return out;
}

bool is_series_parallel_positroid(const Matroid& M) {
  if (connected_components(M).size() != 1) throw std::invalid_argument("is_series_parallel_positroid: matroid is not connected");
  if (!is_positroid(M)) throw std::invalid_argument("is_series_parallel_positroid: matroid is not a positroid");
  return octahedral_faces(M).empty();
}

Matroid graphic_k4(const std::vector<int>& labels) {
  static const int ends[6][2] = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
  std::vector<int> lab = labels;
  if (lab.empty()) lab = {1, 2, 3, 4, 5, 6};
  if (lab.size() != 6) throw std::invalid_argument("graphic_k4: need six labels");
  std::vector<Mask> bases;
  for (Mask s : enumerate_ksubsets(3, 6)) {
    unsigned touched = 0;
    for (int e : elements(s)) touched |= (1u << ends[e - 1][0]) | (1u << ends[e - 1][1]);
    if (std::popcount(touched) != 4) continue;  // three edges on three vertices form a triangle
    Mask b = 0;
    for (int e : elements(s)) b |= bit(lab[e - 1]);
    bases.push_back(b);
  }
  return Matroid(6, 3, std::move(bases));
}

std::vector<Matroid> enumerate_matroids(int k, int n) {
  if (n > 6) throw std::invalid_argument("enumerate_matroids: n <= 6 only");
  auto subsets = enumerate_ksubsets(k, n);
  const int m = static_cast<int>(subsets.size());
  if (m > 24) throw std::invalid_argument("enumerate_matroids: too many candidates");
  std::vector<Matroid> out;
  std::vector<Mask> fam;
  for (std::uint32_t pick = 1; pick < (std::uint32_t{1} << m); ++pick) {
    std::uint64_t in = 0;
    fam.clear();
    for (int i = 0; i < m; ++i)
      if ((pick >> i) & 1u) {
        in |= std::uint64_t{1} << subsets[i];
        fam.push_back(subsets[i]);
      }
    bool ok = true;
    for (size_t i = 0; i < fam.size() && ok; ++i)
      for (size_t j = 0; j < fam.size() && ok; ++j) {
        Mask b1 = fam[i], b2 = fam[j];
        for (Mask xs = b1 & ~b2; xs && ok; xs &= xs - 1) {
          Mask x = xs & (~xs + 1);
          bool found = false;
          for (Mask ys = b2 & ~b1; ys; ys &= ys - 1) {
            Mask y = ys & (~ys + 1);
            if ((in >> ((b1 & ~x) | y)) & 1u) {
              found = true;
              break;
            }
          }
          ok = found;
        }
      }
    if (ok) out.emplace_back(n, k, fam);
  }
  return out;
}

std::string describe(const Matroid& M) {
  std::string s = "rank " + std::to_string(M.k()) + " on [" + std::to_string(M.n()) + "], " +
                  std::to_string(M.bases().size()) + " bases";
  return s;
}

}  // namespace trop
