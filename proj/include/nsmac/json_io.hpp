#pragma once

#include "nsmac/bruhat.hpp"
#include "nsmac/filling.hpp"
#include "nsmac/hull.hpp"
#include "nsmac/macdonald.hpp"

#include <json.hpp>

namespace nsmac {

// JSON shapes used by the CLI and the file interfaces. Rationals cross the
// boundary as exact "p/q" strings, weight vectors as arrays of integers,
// point sets as sorted arrays of arrays.
nlohmann::json to_json(const WeightVector& v);
nlohmann::json to_json(const PointSet& s);
nlohmann::json to_json(const Filling& f);       // {"shape": [...], "labels": [[col,row,label],...]}
nlohmann::json to_json(const LatticePolytope& P);
nlohmann::json to_json(const SparsePolynomial& p);
nlohmann::json to_json(const MConvexCertificate& c);

WeightVector weight_from_json(const nlohmann::json& j);
PointSet point_set_from_json(const nlohmann::json& j);

} // namespace nsmac
