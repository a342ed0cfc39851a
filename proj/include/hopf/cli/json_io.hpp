// JSON input documents: parsing with located errors, and the schemas for
// complexes, triangulations, forms, Wall data and quadratic problems.
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "hopf/chain_complex.hpp"
#include "hopf/quadratic.hpp"
#include "hopf/quadratic_form.hpp"
#include "hopf/simplicial.hpp"
#include "hopf/wall.hpp"

namespace hopf::cli {

using Json = nlohmann::ordered_json;

/// Throws InputError carrying "origin:line:column" on malformed text.
Json parse_json(const std::string& text, const std::string& origin);
Json read_json_file(const std::string& path);

Integer integer_from_json(const Json& j, const std::string& where);
/// Numbers when they fit in 64 bits, decimal strings otherwise.
Json integer_to_json(const Integer& v);
IntVector vector_from_json(const Json& j, const std::string& where);
Json vector_to_json(const IntVector& v);
/// Checks the shape; a zero-row matrix may be written [].
IntMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& where);
Json matrix_to_json(const IntMatrix& m);

RingSpec ring_from_json(const Json& j, const std::string& where);
Json ring_to_json(const RingSpec& ring);
FiniteGroup group_from_json(const Json& j, const std::string& where);
Json group_to_json(const FiniteGroup& g);

/// {"ring", "lo", "hi", "ranks", "d": {"r": matrix}}; d matrices are
/// Z-matrices of the regular representation over a group ring.
ChainComplex complex_from_json(const Json& j, const std::string& where = "complex");
Json complex_to_json(const ChainComplex& c);

/// {"vertices", "facets", "orientation"?}.
SimplicialComplex triangulation_from_json(const Json& j, const std::string& where = "triangulation");
Json triangulation_to_json(const SimplicialComplex& k);
bool is_triangulation(const Json& j);

/// {"ring", "epsilon", "lambda", "mu"?}.
QuadraticForm form_from_json(const Json& j, const std::string& where = "form");
Json form_to_json(const QuadraticForm& f);

struct WallInput {
  std::shared_ptr<const FiniteGroup> group;
  int m = 0;
  std::vector<DoublePoint> points;
};
/// {"group", "m", "points": [{"g", "sign"}]}.
WallInput wallmu_from_json(const Json& j, const std::string& where = "wallmu");
Json wallmu_to_json(const WallInput& w);

/// A refinement problem, in one of two forms:
///   {"source", "target"?, "map": {"r": matrix}, "n", "cycle", "structures"?}
///   {"complex", "n", "theta": {"s": vector}}
/// "structures" is "diagonal" (the default) or
///   {"order", "degree", "source": {"s,r": matrix}, "target": {"s,r": matrix}}.
struct QuadraticInput {
  std::optional<RefinementProblem> problem;
  std::optional<SymmetricClass> theta;
};
QuadraticInput quadratic_from_json(const Json& j, const std::string& where = "problem");

}  // namespace hopf::cli
