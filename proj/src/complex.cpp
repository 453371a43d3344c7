#include "twisthom/complex.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace twisthom::localsys {

namespace {

std::string simplex_str(const Simplex& s) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) os << ',';
    os << s[i];
  }
  os << ')';
  return os.str();
}

}  // namespace

SimplicialComplex::SimplicialComplex(
    int num_vertices, std::vector<std::vector<Simplex>> by_dim,
    std::optional<std::vector<int>> top_orientation)
    : num_vertices_(num_vertices),
      by_dim_(std::move(by_dim)),
      orientation_(std::move(top_orientation)) {
  while (!by_dim_.empty() && by_dim_.back().empty()) by_dim_.pop_back();
  for (size_t p = 0; p < by_dim_.size(); ++p) {
    auto& level = by_dim_[p];
    for (const Simplex& s : level) {
      if (s.size() != p + 1)
        throw ValidationError("simplex " + simplex_str(s) +
                              " listed in dimension " + std::to_string(p));
      for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= num_vertices_)
          throw ValidationError("vertex id out of range in " + simplex_str(s));
        if (i > 0 && s[i] <= s[i - 1])
          throw ValidationError("simplex " + simplex_str(s) +
                                " is not strictly increasing");
      }
    }
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
  }
  index_.resize(by_dim_.size());
  for (size_t p = 0; p < by_dim_.size(); ++p)
    for (size_t i = 0; i < by_dim_[p].size(); ++i)
      index_[p].emplace(by_dim_[p][i], static_cast<int>(i));
  check_faces_present();
  if (orientation_ &&
      static_cast<int>(orientation_->size()) != count(dim()))
    throw ValidationError("orientation list must match the top simplices");
  if (orientation_) {
    for (int s : *orientation_)
      if (s != 1 && s != -1)
        throw ValidationError("orientation entries must be +1 or -1");
  }
  vertex_neighbors_.resize(static_cast<size_t>(num_vertices_));
  if (dim() >= 1) {
    for (const Simplex& e : by_dim_[1]) {
      vertex_neighbors_[static_cast<size_t>(e[0])].push_back(e[1]);
      vertex_neighbors_[static_cast<size_t>(e[1])].push_back(e[0]);
    }
  }
}

SimplicialComplex SimplicialComplex::from_maximal(
    int num_vertices, const std::vector<Simplex>& maximal,
    std::optional<std::vector<int>> top_orientation) {
  std::set<Simplex> all;
  std::deque<Simplex> queue(maximal.begin(), maximal.end());
  for (auto& s : queue)
    if (!std::is_sorted(s.begin(), s.end()))
      throw ValidationError("maximal simplex not sorted: " + simplex_str(s));
  while (!queue.empty()) {
    Simplex s = queue.front();
    queue.pop_front();
    if (!all.insert(s).second) continue;
    if (s.size() > 1)
      for (size_t i = 0; i < s.size(); ++i)
        queue.push_back(face(s, static_cast<int>(i)));
  }
  size_t max_dim = 0;
  for (const Simplex& s : all) max_dim = std::max(max_dim, s.size());
  std::vector<std::vector<Simplex>> by_dim(max_dim);
  for (const Simplex& s : all) by_dim[s.size() - 1].push_back(s);
  return SimplicialComplex(num_vertices, std::move(by_dim),
                           std::move(top_orientation));
}

const std::vector<Simplex>& SimplicialComplex::simplices(int p) const {
  static const std::vector<Simplex> kEmpty;
  if (p < 0 || p > dim()) return kEmpty;
  return by_dim_[static_cast<size_t>(p)];
}

const Simplex& SimplicialComplex::simplex(int p, int id) const {
  if (p < 0 || p > dim() || id < 0 || id >= count(p))
    throw ValidationError("simplex id out of range");
  return by_dim_[static_cast<size_t>(p)][static_cast<size_t>(id)];
}

int SimplicialComplex::id_of(const Simplex& s) const {
  const int p = static_cast<int>(s.size()) - 1;
  if (p < 0 || p > dim()) return -1;
  const auto& idx = index_[static_cast<size_t>(p)];
  const auto it = idx.find(s);
  return it == idx.end() ? -1 : it->second;
}

Simplex SimplicialComplex::face(const Simplex& s, int i) {
  Simplex f;
  f.reserve(s.size() - 1);
  for (size_t j = 0; j < s.size(); ++j)
    if (static_cast<int>(j) != i) f.push_back(s[j]);
  return f;
}

void SimplicialComplex::check_faces_present() const {
  for (size_t p = 1; p < by_dim_.size(); ++p)
    for (const Simplex& s : by_dim_[p])
      for (size_t i = 0; i < s.size(); ++i) {
        const Simplex f = face(s, static_cast<int>(i));
        if (index_[p - 1].find(f) == index_[p - 1].end())
          throw ValidationError("face " + simplex_str(f) + " of " +
                                simplex_str(s) + " is missing");
      }
}

namespace {

// Cofaces of each (n-1)-simplex among the top simplices, with the face
// index at which the facet appears.
std::map<int, std::vector<std::pair<int, int>>> facet_cofaces(
    const SimplicialComplex& K) {
  std::map<int, std::vector<std::pair<int, int>>> cofaces;
  const int n = K.dim();
  for (int t = 0; t < K.count(n); ++t) {
    const Simplex& top = K.simplex(n, t);
    for (int i = 0; i <= n; ++i) {
      const int fid = K.id_of(SimplicialComplex::face(top, i));
      cofaces[fid].push_back({t, i});
    }
  }
  return cofaces;
}

}  // namespace

void SimplicialComplex::require_fundamental_class() const {
  if (!orientation_)
    throw ValidationError("fundamental class requires orientation data");
  const int n = dim();
  if (n < 0) throw ValidationError("empty complex has no fundamental class");
  // Purity: every simplex is a face of a top simplex.
  std::vector<std::set<Simplex>> hull(static_cast<size_t>(n) + 1);
  for (const Simplex& top : simplices(n)) {
    std::deque<Simplex> queue{top};
    while (!queue.empty()) {
      Simplex s = queue.front();
      queue.pop_front();
      if (!hull[s.size() - 1].insert(s).second) continue;
      if (s.size() > 1)
        for (size_t i = 0; i < s.size(); ++i)
          queue.push_back(face(s, static_cast<int>(i)));
    }
  }
  for (int p = 0; p <= n; ++p)
    if (static_cast<int>(hull[static_cast<size_t>(p)].size()) != count(p))
      throw ValidationError("complex is not pure of dimension " +
                            std::to_string(n));
  for (const auto& [fid, cof] : facet_cofaces(*this)) {
    if (cof.size() != 2)
      throw ValidationError("facet " + simplex_str(simplex(n - 1, fid)) +
                            " lies in " + std::to_string(cof.size()) +
                            " top simplices, expected 2");
    // Boundary cancellation: the two induced signs must be opposite.
    const auto [t1, i1] = cof[0];
    const auto [t2, i2] = cof[1];
    const int s1 = (*orientation_)[static_cast<size_t>(t1)] *
                   (i1 % 2 == 0 ? 1 : -1);
    const int s2 = (*orientation_)[static_cast<size_t>(t2)] *
                   (i2 % 2 == 0 ? 1 : -1);
    if (s1 + s2 != 0)
      throw ValidationError("orientations do not cancel on facet " +
                            simplex_str(simplex(n - 1, fid)));
  }
}

bool SimplicialComplex::has_fundamental_class() const {
  try {
    require_fundamental_class();
    return true;
  } catch (const ValidationError&) {
    return false;
  }
}

std::optional<std::vector<int>> SimplicialComplex::compute_orientation()
    const {
  const int n = dim();
  if (n < 0) return std::nullopt;
  const auto cofaces = facet_cofaces(*this);
  for (const auto& [fid, cof] : cofaces)
    if (cof.size() != 2) return std::nullopt;

  std::vector<int> sign(static_cast<size_t>(count(n)), 0);
  for (int start = 0; start < count(n); ++start) {
    if (sign[static_cast<size_t>(start)] != 0) continue;
    sign[static_cast<size_t>(start)] = 1;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      const int t = queue.front();
      queue.pop_front();
      const Simplex& top = simplex(n, t);
      for (int i = 0; i <= n; ++i) {
        const int fid = id_of(face(top, i));
        for (const auto& [t2, i2] : cofaces.at(fid)) {
          if (t2 == t) continue;
          const int want = -sign[static_cast<size_t>(t)] *
                           (i % 2 == 0 ? 1 : -1) * (i2 % 2 == 0 ? 1 : -1);
          if (sign[static_cast<size_t>(t2)] == 0) {
            sign[static_cast<size_t>(t2)] = want;
            queue.push_back(t2);
          } else if (sign[static_cast<size_t>(t2)] != want) {
            return std::nullopt;  // not orientable
          }
        }
      }
    }
  }
  return sign;
}

std::vector<int> SimplicialComplex::edge_path(int from, int to) const {
  if (from < 0 || from >= num_vertices_ || to < 0 || to >= num_vertices_)
    throw ValidationError("edge_path: vertex out of range");
  if (from == to) return {from};
  std::vector<int> prev(static_cast<size_t>(num_vertices_), -1);
  std::deque<int> queue{from};
  prev[static_cast<size_t>(from)] = from;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : vertex_neighbors_[static_cast<size_t>(v)]) {
      if (prev[static_cast<size_t>(w)] >= 0) continue;
      prev[static_cast<size_t>(w)] = v;
      if (w == to) {
        std::vector<int> path{to};
        int cur = to;
        while (cur != from) {
          cur = prev[static_cast<size_t>(cur)];
          path.push_back(cur);
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(w);
    }
  }
  throw ValidationError("edge_path: vertices lie in different components");
}

}  // namespace twisthom::localsys
