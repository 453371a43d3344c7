#pragma once

#include <json.hpp>

#include "twisthom/barcomplex.hpp"
#include "twisthom/geometry.hpp"
#include "twisthom/intersect.hpp"

namespace twisthom::json_io {

using nlohmann::json;

// Exact scalars cross the JSON boundary as strings ("3/2", "1+2*i",
// "1/2-1/3*sqrt(2)"); floats never appear.

json scalar_to_json(const exactfield::Scalar& s);
exactfield::Scalar scalar_from_json(const json& j);

json vector_to_json(const exactfield::Vector& v);
exactfield::Vector vector_from_json(const json& j);

json matrix_to_json(const exactfield::Matrix& m);
exactfield::Matrix matrix_from_json(const json& j);

/// {"vertices": n, "simplices_by_dim": [[[v...]...]...],
///  "orientation": [+-1...]?}
json complex_to_json(const localsys::SimplicialComplex& K);
localsys::SimplicialComplex complex_from_json(const json& j);

/// {"rank": r, "field": "Q", "edges": [{"from": a, "to": b,
///  "matrix": [[..]]}...]}
json system_to_json(const localsys::LocalSystem& L);
localsys::LocalSystem system_from_json(const json& j,
                                       const localsys::SimplicialComplex& K);

/// {"rank_e":..,"rank_f":..,"rank_g":..,"matrix":[[..]]}; validated
/// against the three systems.
localsys::PairingRule pairing_from_json(const json& j,
                                        const localsys::SimplicialComplex& K,
                                        const localsys::LocalSystem& E,
                                        const localsys::LocalSystem& F,
                                        const localsys::LocalSystem& G);

/// {"dim": p, "subcomplex": [ids], "orientation": [+-1], "basepoint": v,
///  "seed": ["1", ...]}
json cycle_to_json(const localsys::DecomposableCycle& Y);
localsys::DecomposableCycle cycle_from_json(
    const json& j, const localsys::SimplicialComplex& K);

json chain_to_json(const localsys::Chain& c);
localsys::Chain chain_from_json(const json& j);

json cochain_to_json(const localsys::Cochain& a);
localsys::Cochain cochain_from_json(const json& j);

/// {"order": n, "table": [[..]]}
json group_to_json(const barcomplex::FiniteGroup& G);
barcomplex::FiniteGroup group_from_json(const json& j);

/// {"rank": r, "field": "Q", "matrices": [[[..]]...]}
barcomplex::GroupRep rep_from_json(const json& j,
                                   const barcomplex::FiniteGroup& G);

/// {"field": "Q", "vectors": [["1","0"],...]}
std::vector<exactfield::Vector> vectors_from_json(const json& j);

json tensor_to_json(const schur::Tensor& t);

json load_json_file(const std::string& path);

}  // namespace twisthom::json_io
