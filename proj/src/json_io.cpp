#include "covering/json_io.hpp"

#include <fstream>
#include <sstream>

namespace covering::io {
namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::MalformedInput, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) malformed("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) malformed(std::string("missing field \"") + key + "\"");
  return *it;
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) malformed(std::string(what) + " must be a number");
  return j.get<double>();
}

// Library validation errors raised while building objects from parsed data
// are input problems from the caller's point of view.
template <class F>
auto parsing(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::MalformedInput) throw;
    malformed(e.what());
  } catch (const nlohmann::json::exception& e) {
    malformed(e.what());
  }
}

Plank plank_from_json(const Json& j) {
  return Plank(vec_from_json(field(j, "base")), vec_from_json(field(j, "direction")),
               number(field(j, "width"), "width"));
}

}  // namespace

Json to_json(const Vec& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

Vec vec_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) malformed("expected a nonempty array of numbers");
  Vec v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = number(j[i], "coordinate");
  return v;
}

Json to_json(const Body& b) {
  Json out;
  if (b.is_polytope()) {
    const auto& p = b.polytope();
    out["type"] = "polytope";
    out["dimension"] = p.dimension();
    Json normals = Json::array();
    Json offsets = Json::array();
    for (const auto& h : p.halfspaces()) {
      normals.push_back(to_json(h.normal()));
      offsets.push_back(h.offset());
    }
    out["normals"] = std::move(normals);
    out["offsets"] = std::move(offsets);
  } else if (b.is_ball()) {
    out["type"] = "ball";
    out["center"] = to_json(b.ball().center());
    out["radius"] = b.ball().radius();
  } else {
    out["type"] = "plank";
    out["base"] = to_json(b.plank().base());
    out["direction"] = to_json(b.plank().direction());
    out["width"] = b.plank().width();
  }
  if (b.clipped()) out["clip_to_unit_ball"] = true;
  return out;
}

Body body_from_json(const Json& j) {
  return parsing([&]() -> Body {
    const Json& type = field(j, "type");
    if (!type.is_string()) malformed("\"type\" must be a string");
    bool clip = false;
    if (auto it = j.find("clip_to_unit_ball"); it != j.end()) {
      if (!it->is_boolean()) malformed("\"clip_to_unit_ball\" must be a boolean");
      clip = it->get<bool>();
    }
    const auto name = type.get<std::string>();
    if (name == "ball") {
      return Body(BallBody(vec_from_json(field(j, "center")), number(field(j, "radius"), "radius")), clip);
    }
    if (name == "plank") return Body(plank_from_json(j), clip);
    if (name != "polytope") malformed("unknown body type \"" + name + "\"");

    const Json& normals = field(j, "normals");
    const Json& offsets = field(j, "offsets");
    if (!normals.is_array() || !offsets.is_array() || normals.size() != offsets.size()) {
      malformed("\"normals\" and \"offsets\" must be arrays of equal length");
    }
    Eigen::Index dim = 0;
    if (auto it = j.find("dimension"); it != j.end()) {
      if (!it->is_number_integer()) malformed("\"dimension\" must be an integer");
      dim = it->get<Eigen::Index>();
    } else if (!normals.empty()) {
      dim = static_cast<Eigen::Index>(normals[0].size());
    } else {
      malformed("polytope without halfspaces needs \"dimension\"");
    }
    std::vector<Halfspace> hs;
    for (std::size_t i = 0; i < normals.size(); ++i) {
      hs.emplace_back(vec_from_json(normals[i]), number(offsets[i], "offset"));
    }
    return Body(Polytope(dim, std::move(hs)), clip);
  });
}

Json to_json(const InscribedBall& ib) {
  Json out;
  out["radius"] = ib.radius;
  out["center"] = to_json(ib.center);
  out["touching"] = ib.touching;
  return out;
}

Json to_json(const OuterPolytope& w) {
  Json out;
  out["center"] = to_json(w.center);
  Json dirs = Json::array();
  for (const auto& v : w.directions) dirs.push_back(to_json(v));
  out["directions"] = std::move(dirs);
  out["inradius"] = w.inradius;
  out["slack"] = w.slack;
  return out;
}

Json to_json(const CoveringInstance& inst) {
  Json out;
  out["dimension"] = inst.dimension;
  Json bodies = Json::array();
  for (const auto& b : inst.bodies) {
    Json e;
    e["center"] = to_json(b.center);
    Json dirs = Json::array();
    for (const auto& v : b.directions) dirs.push_back(to_json(v));
    e["directions"] = std::move(dirs);
    e["inradius"] = b.inradius;
    e["epsilon"] = b.epsilon;
    e["delta"] = b.delta;
    bodies.push_back(std::move(e));
  }
  out["bodies"] = std::move(bodies);
  return out;
}

CoveringInstance instance_from_json(const Json& j) {
  return parsing([&] {
    CoveringInstance inst;
    const Json& dim = field(j, "dimension");
    if (!dim.is_number_integer() || dim.get<long>() < 1) malformed("\"dimension\" must be a positive integer");
    inst.dimension = dim.get<Eigen::Index>();
    const Json& bodies = field(j, "bodies");
    if (!bodies.is_array()) malformed("\"bodies\" must be an array");
    for (const auto& b : bodies) {
      InstanceBody ib;
      ib.center = vec_from_json(field(b, "center"));
      require_dim(ib.center, inst.dimension, "instance body center");
      const Json& dirs = field(b, "directions");
      if (!dirs.is_array() || dirs.empty()) malformed("\"directions\" must be a nonempty array");
      for (const auto& v : dirs) {
        ib.directions.push_back(vec_from_json(v));
        require_dim(ib.directions.back(), inst.dimension, "instance direction");
      }
      ib.inradius = number(field(b, "inradius"), "inradius");
      ib.epsilon = number(field(b, "epsilon"), "epsilon");
      ib.delta = number(field(b, "delta"), "delta");
      inst.bodies.push_back(std::move(ib));
    }
    return inst;
  });
}

Json to_json(const WitnessReport& r) {
  Json out;
  out["witness"] = to_json(r.witness);
  out["objective"] = r.objective;
  out["margins"] = r.margins;
  out["valid"] = r.valid;
  out["assignment"] = r.assignment.choices;
  out["norm_x"] = r.norm_x;
  out["aux_bounds"] = r.aux_bounds;
  return out;
}

std::vector<Plank> planks_from_json(const Json& j) {
  return parsing([&] {
    const Json& list = j.is_object() ? field(j, "planks") : j;
    if (!list.is_array()) malformed("expected an array of planks");
    std::vector<Plank> out;
    for (const auto& p : list) out.push_back(plank_from_json(p));
    return out;
  });
}

Json to_json(const Scenario& s) {
  Json out;
  out["generator"] = s.generator;
  out["seed"] = s.seed;
  out["target"] = to_json(s.target);
  Json pieces = Json::array();
  for (const auto& p : s.pieces) pieces.push_back(to_json(p));
  out["pieces"] = std::move(pieces);
  return out;
}

Scenario scenario_from_json(const Json& j) {
  return parsing([&] {
    Scenario s{body_from_json(field(j, "target")), {}, 0, ""};
    if (auto it = j.find("seed"); it != j.end()) s.seed = it->get<std::uint64_t>();
    if (auto it = j.find("generator"); it != j.end()) s.generator = it->get<std::string>();
    const Json& pieces = field(j, "pieces");
    if (!pieces.is_array() || pieces.empty()) malformed("\"pieces\" must be a nonempty array");
    for (const auto& p : pieces) {
      s.pieces.push_back(body_from_json(p));
      if (s.pieces.back().dimension() != s.target.dimension()) {
        malformed("piece dimension differs from target");
      }
    }
    return s;
  });
}

Json to_json(const VerificationResult& v) {
  Json out;
  out["r_target"] = v.r_target;
  out["piece_radii"] = v.piece_radii;
  out["sum_radii"] = v.sum_radii;
  out["covered"] = v.covered;
  out["inequality_holds"] = v.inequality_holds;
  out["uncovered_sample"] = v.uncovered_sample ? to_json(*v.uncovered_sample) : Json(nullptr);
  return out;
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const nlohmann::json::exception& e) {
    malformed(path + ": " + e.what());
  }
}

}  // namespace covering::io
