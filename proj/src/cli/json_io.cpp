#include "hopf/cli/json_io.hpp"

#include <fmt/format.h>

#include <fstream>
#include <set>
#include <sstream>

namespace hopf::cli {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError(fmt::format("{}: {}", where, what));
}

void require_object(const Json& j, const std::string& where, const std::set<std::string>& required,
                    const std::set<std::string>& optional = {}) {
  if (!j.is_object()) fail(where, "expected an object");
  for (const std::string& key : required)
    if (!j.contains(key)) fail(where, fmt::format("missing key \"{}\"", key));
  for (const auto& [key, value] : j.items())
    if (!required.count(key) && !optional.count(key)) fail(where, fmt::format("unknown key \"{}\"", key));
}

int int_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  const long long v = j.get<long long>();
  if (v < -(1LL << 30) || v > (1LL << 30)) fail(where, "integer out of range");
  return static_cast<int>(v);
}

std::size_t size_from_json(const Json& j, const std::string& where) {
  const int v = int_from_json(j, where);
  if (v < 0) fail(where, "expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

std::string label_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  fail(where, "expected a string or integer label");
}

int sign_from_json(const Json& j, const std::string& where) {
  const int v = int_from_json(j, where);
  if (v != 1 && v != -1) fail(where, "expected 1 or -1");
  return v;
}

// Column count of a matrix given as rows, when the shape is not known in advance.
IntMatrix free_matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : (j[0].is_array() ? j[0].size() : 0);
  return matrix_from_json(j, rows, cols, where);
}

Coefficients coefficients_from_json(const Json& j, const std::string& where) {
  if (j == "Z") return Coefficients::Integers;
  if (j == "F2") return Coefficients::F2;
  fail(where, "expected \"Z\" or \"F2\"");
}

std::map<std::pair<int, int>, IntMatrix> structure_components(const Json& j, const ChainComplex& c, int degree,
                                                              const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object keyed by \"s,r\"");
  const TensorSquare sq(c);
  std::map<std::pair<int, int>, IntMatrix> out;
  for (const auto& [key, value] : j.items()) {
    int s = 0, r = 0;
    char comma = 0;
    std::istringstream in(key);
    if (!(in >> s >> comma >> r) || comma != ',' || !in.eof()) fail(where, fmt::format("bad key \"{}\"", key));
    const std::string at = fmt::format("{}.\"{}\"", where, key);
    out.emplace(std::make_pair(s, r), matrix_from_json(value, sq.complex().zrank(r + degree + s), c.zrank(r), at));
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string msg = e.what();
    const auto pos = msg.find("] ");
    if (pos != std::string::npos) msg = msg.substr(pos + 2);
    throw InputError(fmt::format("{}:{}:{}: malformed JSON ({})", origin, line, column, msg));
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(fmt::format("{}: cannot open file", path));
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path);
}

Integer integer_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
    return Integer(std::to_string(j.get<long long>()));
  }
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0) fail(where, "expected a decimal integer string");
    return v;
  }
  fail(where, "expected an integer");
}

Json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(static_cast<long long>(v.get_si()));
  return Json(v.get_str());
}

IntVector vector_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  IntVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(integer_from_json(j[i], fmt::format("{}[{}]", where, i)));
  return v;
}

Json vector_to_json(const IntVector& v) {
  Json j = Json::array();
  for (const Integer& x : v) j.push_back(integer_to_json(x));
  return j;
}

IntMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of rows");
  if (rows == 0 && j.empty()) return IntMatrix(0, cols);
  if (j.size() != rows) fail(where, fmt::format("expected {} rows, got {}", rows, j.size()));
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string at = fmt::format("{}[{}]", where, r);
    if (!j[r].is_array()) fail(at, "expected a row array");
    if (j[r].size() != cols) fail(at, fmt::format("expected {} entries, got {}", cols, j[r].size()));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = integer_from_json(j[r][c], fmt::format("{}[{}]", at, c));
  }
  return m;
}

Json matrix_to_json(const IntMatrix& m) {
  Json j = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer_to_json(m(r, c)));
    j.push_back(row);
  }
  return j;
}

// ---------------------------------------------------------------------------

FiniteGroup group_from_json(const Json& j, const std::string& where) {
  require_object(j, where, {"elements", "table", "identity"}, {"w"});
  const Json& el = j["elements"];
  if (!el.is_array()) fail(where + ".elements", "expected an array");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < el.size(); ++i) names.push_back(label_from_json(el[i], fmt::format("{}.elements[{}]", where, i)));
  const Json& tab = j["table"];
  if (!tab.is_array()) fail(where + ".table", "expected an array of rows");
  std::vector<std::vector<int>> table;
  for (std::size_t r = 0; r < tab.size(); ++r) {
    const std::string at = fmt::format("{}.table[{}]", where, r);
    if (!tab[r].is_array()) fail(at, "expected a row array");
    std::vector<int> row;
    for (std::size_t c = 0; c < tab[r].size(); ++c) row.push_back(int_from_json(tab[r][c], fmt::format("{}[{}]", at, c)));
    table.push_back(row);
  }
  std::vector<int> w(names.size(), 1);
  if (j.contains("w")) {
    const Json& wj = j["w"];
    if (!wj.is_array()) fail(where + ".w", "expected an array");
    w.clear();
    for (std::size_t i = 0; i < wj.size(); ++i) w.push_back(sign_from_json(wj[i], fmt::format("{}.w[{}]", where, i)));
  }
  try {
    return FiniteGroup(std::move(names), std::move(table), int_from_json(j["identity"], where + ".identity"), std::move(w));
  } catch (const InputError& e) {
    fail(where, e.what());
  }
}

Json group_to_json(const FiniteGroup& g) {
  Json j;
  j["elements"] = g.elements();
  j["table"] = g.table();
  j["identity"] = g.identity();
  j["w"] = g.orientation();
  return j;
}

RingSpec ring_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) {
    return coefficients_from_json(j, where) == Coefficients::F2 ? RingSpec::f2() : RingSpec::integers();
  }
  require_object(j, where, {"group"});
  return RingSpec::group_ring(group_from_json(j["group"], where + ".group"));
}

Json ring_to_json(const RingSpec& ring) {
  switch (ring.kind()) {
    case RingSpec::Kind::Integers:
      return "Z";
    case RingSpec::Kind::F2:
      return "F2";
    case RingSpec::Kind::GroupRing:
      break;
  }
  Json j;
  j["group"] = group_to_json(ring.group());
  return j;
}

ChainComplex complex_from_json(const Json& j, const std::string& where) {
  require_object(j, where, {"ring", "lo", "hi", "ranks"}, {"d"});
  const RingSpec ring = ring_from_json(j["ring"], where + ".ring");
  const int lo = int_from_json(j["lo"], where + ".lo");
  const int hi = int_from_json(j["hi"], where + ".hi");
  const Json& rj = j["ranks"];
  if (!rj.is_array()) fail(where + ".ranks", "expected an array");
  if (hi < lo) {
    if (!rj.empty()) fail(where + ".ranks", "an empty range needs no ranks");
    if (j.contains("d") && !j["d"].empty()) fail(where + ".d", "an empty range has no differentials");
    return ChainComplex::zero(ring);
  }
  if (rj.size() != static_cast<std::size_t>(hi - lo + 1))
    fail(where + ".ranks", fmt::format("expected {} ranks for degrees {}..{}, got {}", hi - lo + 1, lo, hi, rj.size()));
  std::vector<std::size_t> ranks;
  for (std::size_t i = 0; i < rj.size(); ++i) ranks.push_back(size_from_json(rj[i], fmt::format("{}.ranks[{}]", where, i)));
  const std::size_t mult = ring.multiplier();
  std::vector<IntMatrix> d;
  for (int r = lo + 1; r <= hi; ++r) d.emplace_back(ranks[r - 1 - lo] * mult, ranks[r - lo] * mult);
  if (j.contains("d")) {
    const Json& dj = j["d"];
    if (!dj.is_object()) fail(where + ".d", "expected an object keyed by degree");
    for (const auto& [key, value] : dj.items()) {
      const std::string at = fmt::format("{}.d.\"{}\"", where, key);
      int r = 0;
      std::size_t used = 0;
      try {
        r = std::stoi(key, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != key.size() || key.empty()) fail(at, "degree keys must be integers");
      if (r <= lo || r > hi) fail(at, fmt::format("no differential from degree {} inside {}..{}", r, lo, hi));
      d[r - lo - 1] = matrix_from_json(value, ranks[r - 1 - lo] * mult, ranks[r - lo] * mult, at);
    }
  }
  return ChainComplex(ring, lo, std::move(ranks), std::move(d));
}

Json complex_to_json(const ChainComplex& c) {
  Json j;
  j["ring"] = ring_to_json(c.ring());
  if (c.is_empty()) {
    j["lo"] = 0;
    j["hi"] = -1;
    j["ranks"] = Json::array();
    j["d"] = Json::object();
    return j;
  }
  j["lo"] = c.lo();
  j["hi"] = c.hi();
  Json ranks = Json::array();
  for (int r = c.lo(); r <= c.hi(); ++r) ranks.push_back(c.rank(r));
  j["ranks"] = ranks;
  Json d = Json::object();
  for (int r = c.lo() + 1; r <= c.hi(); ++r) d[std::to_string(r)] = matrix_to_json(c.d(r));
  j["d"] = d;
  return j;
}

// ---------------------------------------------------------------------------

bool is_triangulation(const Json& j) { return j.is_object() && j.contains("facets"); }

SimplicialComplex triangulation_from_json(const Json& j, const std::string& where) {
  require_object(j, where, {"vertices", "facets"}, {"orientation"});
  const Json& vj = j["vertices"];
  if (!vj.is_array()) fail(where + ".vertices", "expected an array");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < vj.size(); ++i) labels.push_back(label_from_json(vj[i], fmt::format("{}.vertices[{}]", where, i)));
  const Json& fj = j["facets"];
  if (!fj.is_array()) fail(where + ".facets", "expected an array");
  std::vector<std::vector<int>> facets;
  for (std::size_t f = 0; f < fj.size(); ++f) {
    const std::string at = fmt::format("{}.facets[{}]", where, f);
    if (!fj[f].is_array()) fail(at, "expected an array of vertex indices");
    std::vector<int> facet;
    for (std::size_t i = 0; i < fj[f].size(); ++i) {
      const int v = int_from_json(fj[f][i], fmt::format("{}[{}]", at, i));
      if (v < 0 || static_cast<std::size_t>(v) >= labels.size()) fail(fmt::format("{}[{}]", at, i), "vertex index out of range");
      facet.push_back(v);
    }
    facets.push_back(facet);
  }
  std::optional<std::vector<int>> orientation;
  if (j.contains("orientation") && !j["orientation"].is_null()) {
    const Json& oj = j["orientation"];
    if (!oj.is_array() || oj.size() != facets.size())
      fail(where + ".orientation", fmt::format("expected {} signs, one per facet", facets.size()));
    orientation.emplace();
    for (std::size_t i = 0; i < oj.size(); ++i) orientation->push_back(sign_from_json(oj[i], fmt::format("{}.orientation[{}]", where, i)));
  }
  return SimplicialComplex(std::move(labels), std::move(facets), std::move(orientation));
}

Json triangulation_to_json(const SimplicialComplex& k) {
  Json j;
  j["vertices"] = k.labels();
  j["facets"] = k.facets();
  if (k.orientation()) j["orientation"] = *k.orientation();
  return j;
}

// ---------------------------------------------------------------------------

QuadraticForm form_from_json(const Json& j, const std::string& where) {
  require_object(j, where, {"ring", "epsilon", "lambda"}, {"mu"});
  const Coefficients ring = coefficients_from_json(j["ring"], where + ".ring");
  const int eps = sign_from_json(j["epsilon"], where + ".epsilon");
  const IntMatrix lambda = free_matrix_from_json(j["lambda"], where + ".lambda");
  if (lambda.rows() != lambda.cols()) fail(where + ".lambda", "expected a square matrix");
  std::optional<std::vector<Integer>> mu;
  if (j.contains("mu") && !j["mu"].is_null()) {
    mu = vector_from_json(j["mu"], where + ".mu");
    if (mu->size() != lambda.rows()) fail(where + ".mu", fmt::format("expected {} values", lambda.rows()));
  }
  return QuadraticForm(ring, eps, lambda, mu);
}

Json form_to_json(const QuadraticForm& f) {
  Json j;
  j["ring"] = f.ring() == Coefficients::F2 ? "F2" : "Z";
  j["epsilon"] = f.epsilon();
  j["lambda"] = matrix_to_json(f.lambda());
  if (f.has_mu()) j["mu"] = vector_to_json(f.mu());
  return j;
}

// ---------------------------------------------------------------------------

WallInput wallmu_from_json(const Json& j, const std::string& where) {
  require_object(j, where, {"group", "m", "points"});
  WallInput w;
  w.group = std::make_shared<const FiniteGroup>(group_from_json(j["group"], where + ".group"));
  w.m = int_from_json(j["m"], where + ".m");
  const Json& pj = j["points"];
  if (!pj.is_array()) fail(where + ".points", "expected an array");
  for (std::size_t i = 0; i < pj.size(); ++i) {
    const std::string at = fmt::format("{}.points[{}]", where, i);
    require_object(pj[i], at, {"g", "sign"});
    const int g = int_from_json(pj[i]["g"], at + ".g");
    if (g < 0 || static_cast<std::size_t>(g) >= w.group->order()) fail(at + ".g", "group element index out of range");
    w.points.push_back({g, sign_from_json(pj[i]["sign"], at + ".sign")});
  }
  return w;
}

Json wallmu_to_json(const WallInput& w) {
  Json j;
  j["group"] = group_to_json(*w.group);
  j["m"] = w.m;
  Json pts = Json::array();
  for (const DoublePoint& p : w.points) pts.push_back(Json{{"g", p.g}, {"sign", p.sign}});
  j["points"] = pts;
  return j;
}

// ---------------------------------------------------------------------------

QuadraticInput quadratic_from_json(const Json& j, const std::string& where) {
  QuadraticInput out;
  if (j.is_object() && j.contains("theta")) {
    require_object(j, where, {"complex", "n", "theta"});
    const ChainComplex c = complex_from_json(j["complex"], where + ".complex");
    const int n = int_from_json(j["n"], where + ".n");
    auto q = std::make_shared<const QComplex>(c, QKind::Symmetric, 0, kPlusInfinity);
    SymmetricClass theta{q, n, {}};
    const Json& tj = j["theta"];
    if (!tj.is_object()) fail(where + ".theta", "expected an object keyed by component s");
    const std::vector<int> comps = q->components(n);
    for (const auto& [key, value] : tj.items()) {
      const std::string at = fmt::format("{}.theta.\"{}\"", where, key);
      int s = 0;
      std::size_t used = 0;
      try {
        s = std::stoi(key, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != key.size() || key.empty()) fail(at, "component keys must be integers");
      const std::size_t dim = q->square().complex().zrank(q->module_degree(n, s));
      if (s < 0 || dim == 0) {
        if (!value.is_array() || !value.empty()) fail(at, "component outside the support of C (x) C");
        continue;
      }
      IntVector v = vector_from_json(value, at);
      if (v.size() != dim) fail(at, fmt::format("expected {} entries, got {}", dim, v.size()));
      theta.components.emplace(s, std::move(v));
    }
    theta.verify();
    out.theta = std::move(theta);
    return out;
  }

  require_object(j, where, {"source", "map", "n", "cycle"}, {"target", "structures"});
  const ChainComplex source = complex_from_json(j["source"], where + ".source");
  const ChainComplex target = j.contains("target") ? complex_from_json(j["target"], where + ".target") : source;
  const Json& mj = j["map"];
  if (!mj.is_object()) fail(where + ".map", "expected an object keyed by degree");
  std::map<int, IntMatrix> comps;
  for (const auto& [key, value] : mj.items()) {
    const std::string at = fmt::format("{}.map.\"{}\"", where, key);
    int r = 0;
    std::size_t used = 0;
    try {
      r = std::stoi(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || key.empty()) fail(at, "degree keys must be integers");
    comps.emplace(r, matrix_from_json(value, target.zrank(r), source.zrank(r), at));
  }
  RefinementProblem p;
  p.f = ChainMap(source, target, std::move(comps));
  p.n = int_from_json(j["n"], where + ".n");
  p.cycle = vector_from_json(j["cycle"], where + ".cycle");
  const Json structures = j.contains("structures") ? j["structures"] : Json("diagonal");
  if (structures == "diagonal") {
    p.phi_c = SymmetricStructure::diagonal(source);
    p.phi_d = SymmetricStructure::diagonal(target);
  } else {
    const std::string at = where + ".structures";
    require_object(structures, at, {"order", "source", "target"}, {"degree"});
    const int order = int_from_json(structures["order"], at + ".order");
    const int degree = structures.contains("degree") ? int_from_json(structures["degree"], at + ".degree") : 0;
    p.phi_c = SymmetricStructure(source, order, structure_components(structures["source"], source, degree, at + ".source"),
                                 degree);
    p.phi_d = SymmetricStructure(target, order, structure_components(structures["target"], target, degree, at + ".target"),
                                 degree);
  }
  p.verify();
  out.problem = std::move(p);
  return out;
}

}  // namespace hopf::cli
