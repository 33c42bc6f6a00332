#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

namespace walkup {

using Vertex = std::int32_t;

// An input exceeds a size guard of an exponential-cost procedure.
struct capacity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A face is its strictly increasing vertex sequence. Dimension is size - 1.
using Face = std::vector<Vertex>;

struct FaceVector {
  std::vector<std::int64_t> counts;  // f_0 .. f_d
  std::int64_t chi = 0;

  bool operator==(const FaceVector&) const = default;
};

inline int face_dim(const Face& f) { return static_cast<int>(f.size()) - 1; }

inline Face make_face(std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
    throw std::domain_error("face has a repeated vertex");
  for (Vertex v : vs)
    if (v < 0) throw std::domain_error("negative vertex id");
  return vs;
}

// Both arguments sorted.
inline bool is_subface(const Face& small, const Face& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Calls fn(subset) for every k-element subset of `face`, in lexicographic order.
template <class Fn>
void for_each_subset(const Face& face, int k, Fn&& fn) {
  const int n = static_cast<int>(face.size());
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  Face sub(k);
  while (true) {
    for (int i = 0; i < k; ++i) sub[i] = face[idx[i]];
    fn(static_cast<const Face&>(sub));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// A finite abstract simplicial complex given by its maximal faces. Pure
// complexes are the common case; induced subcomplexes may mix dimensions.
// Values are immutable after construction.
class Complex {
 public:
  Complex() = default;

  // Faces are canonicalized; duplicates and faces contained in another
  // listed face are dropped.
  explicit Complex(std::vector<Face> faces) {
    for (auto& f : faces) f = make_face(std::move(f));
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());

    bool mixed = false;
    for (const auto& f : faces)
      if (f.size() != faces.front().size()) mixed = true;
    if (mixed) {
      // larger faces first so each candidate only checks bigger ones
      std::vector<const Face*> by_size;
      for (const auto& f : faces) by_size.push_back(&f);
      std::stable_sort(by_size.begin(), by_size.end(),
                       [](const Face* a, const Face* b) { return a->size() > b->size(); });
      std::vector<Face> kept;
      for (const Face* f : by_size) {
        bool covered = false;
        for (const auto& k : kept)
          if (k.size() > f->size() && is_subface(*f, k)) {
            covered = true;
            break;
          }
        if (!covered) kept.push_back(*f);
      }
      std::sort(kept.begin(), kept.end());
      faces = std::move(kept);
    }
    facets_ = std::move(faces);

    for (const auto& f : facets_) {
      vertices_.insert(vertices_.end(), f.begin(), f.end());
      dim_ = std::max(dim_, face_dim(f));
    }
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  }

  const std::vector<Face>& facets() const { return facets_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::size_t num_facets() const { return facets_.size(); }
  std::size_t num_vertices() const { return vertices_.size(); }
  int dim() const { return dim_; }
  bool empty() const { return facets_.empty(); }

  bool is_pure() const {
    return std::all_of(facets_.begin(), facets_.end(),
                       [&](const Face& f) { return face_dim(f) == dim_; });
  }

  // Vertex ids are exactly 0 .. f0-1.
  bool is_dense() const {
    return vertices_.empty() || vertices_.back() + 1 == static_cast<Vertex>(vertices_.size());
  }

  bool has_vertex(Vertex v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
  }

  bool has_facet(const Face& f) const {
    return std::binary_search(facets_.begin(), facets_.end(), f);
  }

  bool has_face(const Face& f) const {
    return std::any_of(facets_.begin(), facets_.end(),
                       [&](const Face& g) { return is_subface(f, g); });
  }

  std::size_t facet_index(const Face& f) const {
    auto it = std::lower_bound(facets_.begin(), facets_.end(), f);
    if (it == facets_.end() || *it != f) throw std::domain_error("not a facet");
    return static_cast<std::size_t>(it - facets_.begin());
  }

  bool operator==(const Complex& o) const { return facets_ == o.facets_; }

 private:
  std::vector<Face> facets_;
  std::vector<Vertex> vertices_;
  int dim_ = -1;
};

inline void require_pure(const Complex& k, const char* what) {
  if (!k.is_pure()) throw std::domain_error(std::string(what) + ": complex is not pure");
}

// All distinct j-faces, in canonical order.
inline std::vector<Face> enumerate_faces(const Complex& k, int j) {
  if (j < 0 || j > k.dim())
    throw std::domain_error("enumerate_faces: dimension " + std::to_string(j) + " out of range");
  std::vector<Face> out;
  for (const auto& f : k.facets())
    for_each_subset(f, j + 1, [&](const Face& s) { out.push_back(s); });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline FaceVector face_vector(const Complex& k) {
  if (k.empty()) throw std::domain_error("face_vector: empty complex");
  FaceVector fv;
  for (int j = 0; j <= k.dim(); ++j) {
    auto n = static_cast<std::int64_t>(enumerate_faces(k, j).size());
    fv.counts.push_back(n);
    fv.chi += (j % 2 == 0) ? n : -n;
  }
  return fv;
}

inline std::int64_t euler_characteristic(const Complex& k) { return face_vector(k).chi; }

// Facets containing v.
inline Complex star(const Complex& k, Vertex v) {
  if (!k.has_vertex(v)) throw std::domain_error("star: unknown vertex " + std::to_string(v));
  std::vector<Face> out;
  for (const auto& f : k.facets())
    if (std::binary_search(f.begin(), f.end(), v)) out.push_back(f);
  return Complex(std::move(out));
}

inline Complex link(const Complex& k, const Face& face) {
  Face f = make_face(face);
  std::vector<Face> out;
  for (const auto& g : k.facets()) {
    if (!is_subface(f, g)) continue;
    Face rest;
    std::set_difference(g.begin(), g.end(), f.begin(), f.end(), std::back_inserter(rest));
    out.push_back(std::move(rest));
  }
  if (out.empty()) throw std::domain_error("link: not a face of the complex");
  return Complex(std::move(out));
}

inline Complex link(const Complex& k, Vertex v) { return link(k, Face{v}); }

inline Complex skeleton(const Complex& k, int j) {
  return Complex(enumerate_faces(k, j));
}

// Number of facets containing each (d-1)-face, keyed by canonical ridge.
inline std::vector<std::pair<Face, std::vector<std::size_t>>> ridge_incidence(const Complex& k) {
  std::vector<std::pair<Face, std::size_t>> all;
  const int d = k.dim();
  for (std::size_t i = 0; i < k.num_facets(); ++i)
    for_each_subset(k.facets()[i], d, [&](const Face& r) { all.emplace_back(r, i); });
  std::sort(all.begin(), all.end());
  std::vector<std::pair<Face, std::vector<std::size_t>>> out;
  for (auto& [r, i] : all) {
    if (out.empty() || out.back().first != r) out.push_back({r, {}});
    out.back().second.push_back(i);
  }
  return out;
}

inline bool is_weak_pseudomanifold(const Complex& k) {
  require_pure(k, "is_weak_pseudomanifold");
  if (k.empty()) return false;
  for (const auto& [r, inc] : ridge_incidence(k))
    if (inc.size() > 2) return false;
  return true;
}

// The (d-1)-faces lying in exactly one facet.
inline Complex boundary_complex(const Complex& k) {
  if (!is_weak_pseudomanifold(k))
    throw std::domain_error("boundary_complex: not a weak pseudomanifold");
  std::vector<Face> out;
  for (auto& [r, inc] : ridge_incidence(k))
    if (inc.size() == 1) out.push_back(r);
  return Complex(std::move(out));
}

inline bool is_l_neighborly(const Complex& k, int l) {
  if (l < 1 || l > k.dim() + 1) return false;
  auto n = static_cast<std::int64_t>(enumerate_faces(k, l - 1).size());
  return n == binomial(static_cast<std::int64_t>(k.num_vertices()), l);
}

// All faces of K spanned by vertices of W, as maximal faces.
inline Complex induced_subcomplex(const Complex& k, std::vector<Vertex> w) {
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  for (Vertex v : w)
    if (!k.has_vertex(v)) throw std::domain_error("induced_subcomplex: unknown vertex");
  std::vector<Face> out;
  for (const auto& f : k.facets()) {
    Face s;
    std::set_intersection(f.begin(), f.end(), w.begin(), w.end(), std::back_inserter(s));
    if (!s.empty()) out.push_back(std::move(s));
  }
  return Complex(std::move(out));
}

// Relabels vertices to 0 .. f0-1 preserving order.
inline Complex relabel_dense(const Complex& k) {
  const auto& vs = k.vertices();
  std::vector<Face> out;
  for (auto f : k.facets()) {
    for (auto& v : f)
      v = static_cast<Vertex>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    out.push_back(std::move(f));
  }
  return Complex(std::move(out));
}

// Image of K under a vertex map given as an array indexed by vertex id.
inline Complex relabel(const Complex& k, const std::vector<Vertex>& image) {
  std::vector<Face> out;
  for (auto f : k.facets()) {
    for (auto& v : f) {
      if (v >= static_cast<Vertex>(image.size())) throw std::domain_error("relabel: map too short");
      v = image[v];
    }
    out.push_back(make_face(std::move(f)));
  }
  return Complex(std::move(out));
}

inline Complex standard_ball(int d) {
  if (d < 0) throw std::domain_error("standard_ball: negative dimension");
  Face f(d + 1);
  for (int i = 0; i <= d; ++i) f[i] = i;
  return Complex({f});
}

// Boundary of the (d+1)-simplex on d+2 vertices.
inline Complex standard_sphere(int d) {
  if (d < 0) throw std::domain_error("standard_sphere: negative dimension");
  std::vector<Face> out;
  Face all(d + 2);
  for (int i = 0; i < d + 2; ++i) all[i] = i;
  for_each_subset(all, d + 1, [&](const Face& f) { out.push_back(f); });
  return Complex(std::move(out));
}

}  // namespace walkup
