#include "houghton/json_io.hpp"

#include "houghton/errors.hpp"

namespace houghton {

Json int_to_json(const Int& x) {
  if (fits_int64(x)) return Json(to_int64(x));
  return Json(to_string(x));
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return parse_int(j.get<std::string>());
  throw InputError("expected an integer");
}

Json point_to_json(const Point& p) { return Json::array({p.ray, int_to_json(p.depth)}); }

Point point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer())
    throw InputError("a point is a pair [ray, depth]");
  return Point(j[0].get<int>(), int_from_json(j[1]));
}

Json element_to_json(const Element& g) {
  Json out;
  out["n"] = g.n();
  out["sigma"] = g.sigma().images();
  Json t = Json::array(), z = Json::array(), head = Json::array();
  for (const Int& x : g.t()) t.push_back(int_to_json(x));
  for (const Int& x : g.z()) z.push_back(int_to_json(x));
  for (const auto& [p, q] : g.head()) head.push_back(Json::array({point_to_json(p), point_to_json(q)}));
  out["t"] = std::move(t);
  out["z"] = std::move(z);
  out["head"] = std::move(head);
  return out;
}

Element element_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw InputError("element must be a JSON object");
    const int n = j.at("n").get<int>();
    if (n < 2) throw InputError("arity must be at least 2");
    const RayPermutation sigma(j.at("sigma").get<std::vector<int>>());
    if (sigma.n() != n) throw InputError("sigma has wrong length");
    std::vector<Int> t, z;
    for (const auto& x : j.at("t")) t.push_back(int_from_json(x));
    for (const auto& x : j.at("z")) z.push_back(int_from_json(x));
    if (static_cast<int>(t.size()) != n || static_cast<int>(z.size()) != n)
      throw InputError("t and z need n entries");
    PointMap head;
    for (const auto& pair : j.at("head")) {
      if (!pair.is_array() || pair.size() != 2) throw InputError("head entries are point pairs");
      const Point p = point_from_json(pair[0]);
      check_point(n, p);
      if (!head.emplace(p, point_from_json(pair[1])).second)
        throw InputError("duplicate head entry");
    }
    const Element g = Element::from_table(n, sigma, t, z, head);
    if (g.z() != z || g.head() != head)
      throw InputError("element JSON is not in canonical form");
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed element JSON: ") + e.what());
  }
}

Json ray_permutation_to_json(const RayPermutation& s) { return Json(s.images()); }

namespace {

Json progression_to_json(const ProgressionSet& s) {
  Json o;
  o["ray"] = s.ray;
  o["residue"] = int_to_json(s.residue);
  o["modulus"] = int_to_json(s.modulus);
  o["minDepth"] = int_to_json(s.minDepth);
  return o;
}

Json points_to_json(const std::vector<Point>& pts) {
  Json a = Json::array();
  for (const Point& p : pts) a.push_back(point_to_json(p));
  return a;
}

}  // namespace

Json orbit_to_json(const OrbitDescriptor& d) {
  Json o;
  if (d.is_finite()) {
    o["kind"] = "finite";
    o["points"] = points_to_json(d.points);
    return o;
  }
  o["kind"] = "infinite";
  Json f = Json::array(), b = Json::array();
  for (const auto& s : d.forward) f.push_back(progression_to_json(s));
  for (const auto& s : d.backward) b.push_back(progression_to_json(s));
  o["forward"] = std::move(f);
  o["backward"] = std::move(b);
  o["exceptional"] = points_to_json(d.exceptional);
  return o;
}

Json decision_to_json(const Decision& d) {
  Json o;
  o["conjugate"] = d.conjugate;
  o["witness"] = d.witness ? element_to_json(d.witness->x) : Json(nullptr);
  o["rayPerm"] = d.witness && d.witness->rayPerm ? ray_permutation_to_json(*d.witness->rayPerm)
                                                 : Json(nullptr);
  Json stats;
  stats["candidatesTried"] = d.stats.candidatesTried;
  stats["elapsedMs"] = d.stats.elapsedMs;
  o["stats"] = std::move(stats);
  return o;
}

}  // namespace houghton
