#include "twisthom/json_io.hpp"

#include <fstream>

namespace twisthom::json_io {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw ValidationError(msg);
}

}  // namespace

json scalar_to_json(const exactfield::Scalar& s) { return s.str(); }

exactfield::Scalar scalar_from_json(const json& j) {
  if (j.is_number_integer())
    return exactfield::Scalar(static_cast<long>(j.get<long long>()));
  require(j.is_string(), "scalars must be exact strings or integers");
  return exactfield::Scalar::parse(j.get<std::string>());
}

json vector_to_json(const exactfield::Vector& v) {
  json a = json::array();
  for (const auto& s : v) a.push_back(scalar_to_json(s));
  return a;
}

exactfield::Vector vector_from_json(const json& j) {
  require(j.is_array(), "vector must be an array");
  exactfield::Vector v;
  for (const auto& e : j) v.push_back(scalar_from_json(e));
  return v;
}

json matrix_to_json(const exactfield::Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

exactfield::Matrix matrix_from_json(const json& j) {
  require(j.is_array(), "matrix must be an array of rows");
  std::vector<exactfield::Vector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r));
  return exactfield::Matrix::from_rows(rows);
}

json complex_to_json(const localsys::SimplicialComplex& K) {
  json by_dim = json::array();
  for (int p = 0; p <= K.dim(); ++p) {
    json level = json::array();
    for (const auto& s : K.simplices(p)) level.push_back(s);
    by_dim.push_back(std::move(level));
  }
  json j{{"vertices", K.num_vertices()},
         {"simplices_by_dim", std::move(by_dim)}};
  if (K.top_orientation()) j["orientation"] = *K.top_orientation();
  return j;
}

localsys::SimplicialComplex complex_from_json(const json& j) {
  require(j.is_object() && j.contains("vertices") &&
              j.contains("simplices_by_dim"),
          "complex needs 'vertices' and 'simplices_by_dim'");
  std::vector<std::vector<localsys::Simplex>> by_dim;
  for (const auto& level : j.at("simplices_by_dim")) {
    std::vector<localsys::Simplex> simplices;
    for (const auto& s : level)
      simplices.push_back(s.get<localsys::Simplex>());
    by_dim.push_back(std::move(simplices));
  }
  std::optional<std::vector<int>> orientation;
  if (j.contains("orientation"))
    orientation = j.at("orientation").get<std::vector<int>>();
  return localsys::SimplicialComplex(j.at("vertices").get<int>(),
                                     std::move(by_dim),
                                     std::move(orientation));
}

json system_to_json(const localsys::LocalSystem& L) {
  json edges = json::array();
  for (const auto& [key, mat] : L.edges())
    edges.push_back(json{{"from", key.first},
                         {"to", key.second},
                         {"matrix", matrix_to_json(mat)}});
  return json{{"rank", L.rank()},
              {"field", L.field().name()},
              {"edges", std::move(edges)}};
}

localsys::LocalSystem system_from_json(const json& j,
                                       const localsys::SimplicialComplex& K) {
  require(j.is_object() && j.contains("rank") && j.contains("edges"),
          "system needs 'rank' and 'edges'");
  const auto field = j.contains("field")
                         ? exactfield::Field::parse(j.at("field"))
                         : exactfield::Field::rationals();
  std::map<std::pair<int, int>, exactfield::Matrix> edges;
  for (const auto& e : j.at("edges")) {
    const int from = e.at("from").get<int>();
    const int to = e.at("to").get<int>();
    require(from < to, "system edges must be listed with from < to");
    edges.emplace(std::make_pair(from, to), matrix_from_json(e.at("matrix")));
  }
  return localsys::LocalSystem(K, j.at("rank").get<int>(), field,
                               std::move(edges));
}

localsys::PairingRule pairing_from_json(const json& j,
                                        const localsys::SimplicialComplex& K,
                                        const localsys::LocalSystem& E,
                                        const localsys::LocalSystem& F,
                                        const localsys::LocalSystem& G) {
  require(j.is_object() && j.contains("matrix"), "pairing needs 'matrix'");
  return localsys::PairingRule(K, E, F, G, matrix_from_json(j.at("matrix")));
}

json cycle_to_json(const localsys::DecomposableCycle& Y) {
  return json{{"dim", Y.dim},
              {"subcomplex", Y.simplex_ids},
              {"orientation", Y.orientation},
              {"basepoint", Y.basepoint},
              {"seed", vector_to_json(Y.seed)}};
}

localsys::DecomposableCycle cycle_from_json(
    const json& j, const localsys::SimplicialComplex& K) {
  require(j.is_object() && j.contains("dim") && j.contains("subcomplex") &&
              j.contains("orientation") && j.contains("basepoint") &&
              j.contains("seed"),
          "cycle needs dim, subcomplex, orientation, basepoint, seed");
  return localsys::make_decomposable_cycle(
      K, j.at("dim").get<int>(), j.at("subcomplex").get<std::vector<int>>(),
      j.at("orientation").get<std::vector<int>>(),
      j.at("basepoint").get<int>(), vector_from_json(j.at("seed")));
}

json chain_to_json(const localsys::Chain& c) {
  json terms = json::array();
  for (const auto& [id, v] : c.terms)
    terms.push_back(json{{"simplex", id}, {"coefficient", vector_to_json(v)}});
  return json{{"degree", c.degree}, {"terms", std::move(terms)}};
}

localsys::Chain chain_from_json(const json& j) {
  localsys::Chain c;
  c.degree = j.at("degree").get<int>();
  for (const auto& t : j.at("terms"))
    c.add(t.at("simplex").get<int>(),
          vector_from_json(t.at("coefficient")));
  return c;
}

json cochain_to_json(const localsys::Cochain& a) {
  json vals = json::array();
  for (const auto& v : a.values) vals.push_back(vector_to_json(v));
  return json{{"degree", a.degree}, {"values", std::move(vals)}};
}

localsys::Cochain cochain_from_json(const json& j) {
  localsys::Cochain a;
  a.degree = j.at("degree").get<int>();
  for (const auto& v : j.at("values")) a.values.push_back(vector_from_json(v));
  return a;
}

json group_to_json(const barcomplex::FiniteGroup& G) {
  json table = json::array();
  for (int g = 0; g < G.order(); ++g) {
    json row = json::array();
    for (int h = 0; h < G.order(); ++h) row.push_back(G.mul(g, h));
    table.push_back(std::move(row));
  }
  return json{{"order", G.order()}, {"table", std::move(table)}};
}

barcomplex::FiniteGroup group_from_json(const json& j) {
  require(j.is_object() && j.contains("order") && j.contains("table"),
          "group needs 'order' and 'table'");
  const int order = j.at("order").get<int>();
  std::vector<int> table;
  for (const auto& row : j.at("table"))
    for (const auto& v : row) table.push_back(v.get<int>());
  return barcomplex::FiniteGroup(order, std::move(table));
}

barcomplex::GroupRep rep_from_json(const json& j,
                                   const barcomplex::FiniteGroup& G) {
  require(j.is_object() && j.contains("rank") && j.contains("matrices"),
          "representation needs 'rank' and 'matrices'");
  const auto field = j.contains("field")
                         ? exactfield::Field::parse(j.at("field"))
                         : exactfield::Field::rationals();
  std::vector<exactfield::Matrix> mats;
  for (const auto& m : j.at("matrices")) mats.push_back(matrix_from_json(m));
  return barcomplex::GroupRep(G, j.at("rank").get<int>(), field,
                              std::move(mats));
}

std::vector<exactfield::Vector> vectors_from_json(const json& j) {
  require(j.is_object() && j.contains("vectors"),
          "vector file needs 'vectors'");
  std::vector<exactfield::Vector> out;
  for (const auto& v : j.at("vectors")) out.push_back(vector_from_json(v));
  return out;
}

json tensor_to_json(const schur::Tensor& t) {
  json terms = json::array();
  for (const auto& [idx, c] : t.coefficients()) {
    json slots = json::array();
    for (int a : idx) slots.push_back(a + 1);  // 1-based basis labels
    terms.push_back(json{{"slots", std::move(slots)}, {"value", c.str()}});
  }
  return json{{"degree", t.degree()},
              {"dim", t.space()->dim()},
              {"terms", std::move(terms)}};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ValidationError("bad JSON in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace twisthom::json_io
