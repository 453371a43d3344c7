#include "twisthom/intersect.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace twisthom::localsys {

namespace {

int parity_of_front_move(const Simplex& sorted, int vertex) {
  int pos = -1;
  for (size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] == vertex) pos = static_cast<int>(i);
  if (pos < 0) throw ValidationError("vertex not in simplex");
  return pos % 2 == 0 ? 1 : -1;
}

}  // namespace

DecomposableCycle make_decomposable_cycle(const SimplicialComplex& K, int dim,
                                          std::vector<int> simplex_ids,
                                          std::vector<int> orientation,
                                          int basepoint, Vector seed) {
  DecomposableCycle Y;
  Y.dim = dim;
  Y.simplex_ids = std::move(simplex_ids);
  Y.orientation = std::move(orientation);
  Y.basepoint = basepoint;
  Y.seed = std::move(seed);
  if (dim < 0 || dim > K.dim())
    throw ValidationError("cycle dimension out of range");
  if (Y.simplex_ids.empty())
    throw ValidationError("cycle needs at least one simplex");
  if (Y.orientation.size() != Y.simplex_ids.size())
    throw ValidationError("orientation list size mismatch");
  for (int s : Y.orientation)
    if (s != 1 && s != -1)
      throw ValidationError("orientation entries must be +1 or -1");
  std::set<int> seen;
  for (int id : Y.simplex_ids) {
    if (id < 0 || id >= K.count(dim))
      throw ValidationError("cycle simplex id out of range");
    if (!seen.insert(id).second)
      throw ValidationError("cycle lists a simplex twice");
  }
  if (dim >= 1) {
    // Closed and oriented: every facet in exactly two listed simplices,
    // with cancelling induced signs.
    std::map<Simplex, int> facet_sum;
    std::map<Simplex, int> facet_count;
    for (size_t i = 0; i < Y.simplex_ids.size(); ++i) {
      const Simplex& s = K.simplex(dim, Y.simplex_ids[i]);
      for (int f = 0; f <= dim; ++f) {
        const Simplex facet = SimplicialComplex::face(s, f);
        facet_sum[facet] += Y.orientation[i] * (f % 2 == 0 ? 1 : -1);
        facet_count[facet] += 1;
      }
    }
    for (const auto& [facet, cnt] : facet_count) {
      if (cnt != 2)
        throw ValidationError("cycle is not a closed manifold: facet in " +
                              std::to_string(cnt) + " simplices");
      if (facet_sum[facet] != 0)
        throw ValidationError("cycle orientations do not cancel");
    }
  }
  // Basepoint must lie in the carrier.
  bool found = false;
  for (int id : Y.simplex_ids) {
    const Simplex& s = K.simplex(dim, id);
    found = found ||
            std::find(s.begin(), s.end(), Y.basepoint) != s.end();
  }
  if (!found) throw ValidationError("basepoint not in the cycle carrier");
  return Y;
}

std::vector<std::vector<Simplex>> carrier(const SimplicialComplex& K,
                                          const DecomposableCycle& Y) {
  std::vector<std::set<Simplex>> sets(static_cast<size_t>(Y.dim) + 1);
  std::deque<Simplex> queue;
  for (int id : Y.simplex_ids) queue.push_back(K.simplex(Y.dim, id));
  while (!queue.empty()) {
    Simplex s = queue.front();
    queue.pop_front();
    if (!sets[s.size() - 1].insert(s).second) continue;
    if (s.size() > 1)
      for (size_t i = 0; i < s.size(); ++i)
        queue.push_back(SimplicialComplex::face(s, static_cast<int>(i)));
  }
  std::vector<std::vector<Simplex>> out;
  for (auto& level : sets)
    out.emplace_back(level.begin(), level.end());
  return out;
}

std::map<int, Vector> parallel_section(const SimplicialComplex& K,
                                       const LocalSystem& L,
                                       const DecomposableCycle& Y) {
  const auto car = carrier(K, Y);
  std::set<int> verts;
  for (const Simplex& v : car[0]) verts.insert(v[0]);
  std::map<int, std::vector<int>> adj;
  if (car.size() > 1)
    for (const Simplex& e : car[1]) {
      adj[e[0]].push_back(e[1]);
      adj[e[1]].push_back(e[0]);
    }
  std::map<int, Vector> section;
  section[Y.basepoint] = Y.seed;
  std::deque<int> queue{Y.basepoint};
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : adj[v]) {
      if (section.count(w)) continue;
      section[w] = L.apply(v, w, section[v]);
      queue.push_back(w);
    }
  }
  if (section.size() != verts.size())
    throw ValidationError("cycle carrier is disconnected");
  // Parallel over the whole 1-skeleton: every carrier edge must agree.
  if (car.size() > 1)
    for (const Simplex& e : car[1]) {
      const Vector moved = L.apply(e[0], e[1], section[e[0]]);
      if (!exactfield::is_zero(moved - section[e[1]]))
        throw MonodromyObstruction(
            "seed is not fixed by the monodromy of the cycle");
    }
  return section;
}

Chain to_chain(const SimplicialComplex& K, const LocalSystem& L,
               const DecomposableCycle& Y) {
  const auto section = parallel_section(K, L, Y);
  Chain c;
  c.degree = Y.dim;
  for (size_t i = 0; i < Y.simplex_ids.size(); ++i) {
    const Simplex& s = K.simplex(Y.dim, Y.simplex_ids[i]);
    c.add(Y.simplex_ids[i],
          Scalar(Y.orientation[i]) * section.at(s[0]));
  }
  return c;
}

TransverseIntersectionData check_general_position(
    const SimplicialComplex& K, const DecomposableCycle& Y1,
    const DecomposableCycle& Y2) {
  TransverseIntersectionData data;
  const auto c1 = carrier(K, Y1);
  const auto c2 = carrier(K, Y2);
  const int allowed = Y1.dim + Y2.dim - K.dim();
  for (size_t d = 0; d < std::min(c1.size(), c2.size()); ++d) {
    std::vector<Simplex> common;
    std::set_intersection(c1[d].begin(), c1[d].end(), c2[d].begin(),
                          c2[d].end(), std::back_inserter(common));
    for (Simplex& s : common) {
      data.common.emplace_back(static_cast<int>(d), s);
      if (static_cast<int>(d) > allowed)
        data.violations.emplace_back(static_cast<int>(d), s);
    }
  }
  data.in_general_position = data.violations.empty();
  if (data.in_general_position && allowed == 0) {
    for (const auto& [d, s] : data.common)
      data.points.emplace_back(s[0],
                               intersection_sign(K, s[0], Y1, Y2));
  }
  return data;
}

namespace {

// Oriented link circle of a vertex in an oriented surface: the cyclic list
// of neighbours, traversed in the direction induced by the orientation.
std::vector<int> oriented_link_circle(const SimplicialComplex& K, int w) {
  K.require_fundamental_class();
  const auto& orient = *K.top_orientation();
  std::map<int, int> succ;
  for (int t = 0; t < K.count(2); ++t) {
    const Simplex& tri = K.simplex(2, t);
    if (std::find(tri.begin(), tri.end(), w) == tri.end()) continue;
    std::vector<int> rest;
    for (int v : tri)
      if (v != w) rest.push_back(v);
    const int dir = orient[static_cast<size_t>(t)] *
                    parity_of_front_move(tri, w);
    const int from = dir > 0 ? rest[0] : rest[1];
    const int to = dir > 0 ? rest[1] : rest[0];
    if (succ.count(from))
      throw ValidationError("link of vertex is not a circle");
    succ[from] = to;
  }
  if (succ.empty()) throw ValidationError("vertex has no triangles");
  std::vector<int> cycle;
  const int start = succ.begin()->first;
  int cur = start;
  do {
    cycle.push_back(cur);
    const auto it = succ.find(cur);
    if (it == succ.end())
      throw ValidationError("link of vertex is not a closed circle");
    cur = it->second;
  } while (cur != start && cycle.size() <= succ.size());
  if (cycle.size() != succ.size())
    throw ValidationError("link of vertex is not a single circle");
  return cycle;
}

// Outgoing / incoming link vertices of a 1-cycle passing through w.
std::pair<int, int> curve_directions_at(const SimplicialComplex& K,
                                        const DecomposableCycle& Y, int w) {
  int out = -1, in = -1;
  for (size_t i = 0; i < Y.simplex_ids.size(); ++i) {
    const Simplex& e = K.simplex(1, Y.simplex_ids[i]);
    if (e[0] != w && e[1] != w) continue;
    const int other = e[0] == w ? e[1] : e[0];
    // Oriented edge is orientation * [e0, e1]; it leaves w when w is its
    // first vertex under that sign.
    const bool leaves = (e[0] == w) == (Y.orientation[i] == 1);
    (leaves ? out : in) = other;
  }
  if (out < 0 || in < 0)
    throw ValidationError("cycle does not pass through the vertex");
  return {out, in};
}

int sign_on_surface(const SimplicialComplex& K, int w,
                    const DecomposableCycle& Y1,
                    const DecomposableCycle& Y2) {
  const std::vector<int> link = oriented_link_circle(K, w);
  const auto [x_out, x_in] = curve_directions_at(K, Y1, w);
  const auto [y_out, y_in] = curve_directions_at(K, Y2, w);
  if (y_out == x_out || y_out == x_in || y_in == x_out || y_in == x_in)
    throw GeneralPositionViolation(
        "cycles share an edge at the intersection vertex");
  auto pos = [&](int v) {
    for (size_t i = 0; i < link.size(); ++i)
      if (link[i] == v) return static_cast<int>(i);
    throw ValidationError("curve leaves the link of the vertex");
  };
  const int n = static_cast<int>(link.size());
  // Walk the circle from x_out; record where the other three points fall.
  auto offset = [&](int v) { return ((pos(v) - pos(x_out)) % n + n) % n; };
  const int ox_in = offset(x_in);
  const int oy_out = offset(y_out);
  const int oy_in = offset(y_in);
  const bool y_out_first = oy_out < ox_in;
  const bool y_in_first = oy_in < ox_in;
  if (y_out_first && !y_in_first) return 1;
  if (!y_out_first && y_in_first) return -1;
  return 0;  // both Y2 directions on one side: a touch, not a crossing
}

// Frame concatenation on a single pair of simplices whose vertex union
// spans a top simplex; used away from the surface case.
int sign_by_simplex_pair(const SimplicialComplex& K, int w,
                         const DecomposableCycle& Y1,
                         const DecomposableCycle& Y2) {
  K.require_fundamental_class();
  const auto& orient = *K.top_orientation();
  const int n = K.dim();
  std::optional<int> result;
  for (size_t i = 0; i < Y1.simplex_ids.size(); ++i) {
    const Simplex& a = K.simplex(Y1.dim, Y1.simplex_ids[i]);
    if (std::find(a.begin(), a.end(), w) == a.end()) continue;
    for (size_t j = 0; j < Y2.simplex_ids.size(); ++j) {
      const Simplex& b = K.simplex(Y2.dim, Y2.simplex_ids[j]);
      if (std::find(b.begin(), b.end(), w) == b.end()) continue;
      Simplex united;
      std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                     std::back_inserter(united));
      if (static_cast<int>(united.size()) != n + 1) continue;
      const int sid = K.id_of(united);
      if (sid < 0) continue;
      // Ordered frame (w, a minus w, b minus w) against the oriented top
      // simplex.
      std::vector<int> frame{w};
      for (int v : a)
        if (v != w) frame.push_back(v);
      for (int v : b)
        if (v != w) frame.push_back(v);
      int perm_sign = 1;
      for (size_t s = 0; s < frame.size(); ++s)
        for (size_t t = s + 1; t < frame.size(); ++t)
          if (frame[s] > frame[t]) perm_sign = -perm_sign;
      const int lambda_a =
          Y1.orientation[i] * parity_of_front_move(a, w);
      const int lambda_b =
          Y2.orientation[j] * parity_of_front_move(b, w);
      const int contribution = lambda_a * lambda_b * perm_sign *
                               orient[static_cast<size_t>(sid)];
      if (result && *result != contribution)
        throw InfeasibleError(
            "inconsistent local frames at the intersection vertex");
      result = contribution;
    }
  }
  if (!result)
    throw InfeasibleError(
        "no adjacent simplex pair spans a top simplex at the intersection "
        "vertex; refine or reposition the cycles");
  return *result;
}

}  // namespace

int intersection_sign(const SimplicialComplex& K, int vertex,
                      const DecomposableCycle& Y1,
                      const DecomposableCycle& Y2) {
  const int n = K.dim();
  if (Y1.dim + Y2.dim != n)
    throw GeneralPositionViolation(
        "intersection signs need complementary dimensions");
  // The product is defined through D(PD(second) cup PD(first)); against
  // the front/back-face cup and cap used here that reads the concatenated
  // frame in the order (second, first), a (-1)^{pq} twist of the naive
  // frame order.
  const int twist = (Y1.dim * Y2.dim) % 2 == 0 ? 1 : -1;
  if (Y1.dim == 0 || Y2.dim == 0) {
    // A point against a top-dimensional cycle: compare orientations on any
    // shared top simplex.
    const DecomposableCycle& pt = Y1.dim == 0 ? Y1 : Y2;
    const DecomposableCycle& full = Y1.dim == 0 ? Y2 : Y1;
    K.require_fundamental_class();
    const auto& orient = *K.top_orientation();
    int eps_pt = 0;
    for (size_t i = 0; i < pt.simplex_ids.size(); ++i)
      if (K.simplex(0, pt.simplex_ids[i])[0] == vertex)
        eps_pt = pt.orientation[i];
    if (eps_pt == 0)
      throw ValidationError("point cycle misses the vertex");
    for (size_t j = 0; j < full.simplex_ids.size(); ++j) {
      const Simplex& top = K.simplex(n, full.simplex_ids[j]);
      if (std::find(top.begin(), top.end(), vertex) != top.end())
        return twist * eps_pt * full.orientation[j] *
               orient[static_cast<size_t>(full.simplex_ids[j])];
    }
    throw ValidationError("top cycle misses the vertex");
  }
  if (n == 2) return twist * sign_on_surface(K, vertex, Y1, Y2);
  return twist * sign_by_simplex_pair(K, vertex, Y1, Y2);
}

Chain intersect_cycles(const SimplicialComplex& K, const LocalSystem& E,
                       const LocalSystem& F, const PairingRule& nu,
                       const DecomposableCycle& Y1,
                       const DecomposableCycle& Y2) {
  if (Y1.dim + Y2.dim != K.dim())
    throw GeneralPositionViolation(
        "only transverse complementary-dimension intersections are "
        "computed geometrically");
  const TransverseIntersectionData data = check_general_position(K, Y1, Y2);
  if (!data.in_general_position) {
    std::string msg = "cycles are not in general position:";
    for (const auto& [d, s] : data.violations) {
      msg += " dim-" + std::to_string(d) + " overlap";
      break;
    }
    throw GeneralPositionViolation(msg);
  }
  const auto s1 = parallel_section(K, E, Y1);
  const auto s2 = parallel_section(K, F, Y2);
  Chain result;
  result.degree = 0;
  for (const auto& [v, sign] : data.points) {
    if (sign == 0) continue;
    const int vid = K.id_of({v});
    result.add(vid, Scalar(sign) * nu.apply(s1.at(v), s2.at(v)));
  }
  return result;
}

}  // namespace twisthom::localsys
