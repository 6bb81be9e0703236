#include "fairfan/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fairfan {

using nlohmann::json;

namespace {

json vec_to_json(const Vec& v) {
  json arr = json::array();
  for (const Rat& x : v) arr.push_back(rat_to_string(x));
  return arr;
}

Vec vec_from_json(const json& arr) {
  Vec v;
  for (const auto& x : arr) v.push_back(rat_from_string(x.get<std::string>()));
  return v;
}

json halfspaces_to_json(const ConvexRegion& region) {
  json arr = json::array();
  for (const auto& h : region.halves) {
    json obj;
    obj["normal"] = vec_to_json(h.plane.normal);
    obj["offset"] = rat_to_string(h.plane.offset);
    obj["side"] = h.side > 0 ? "geq" : "leq";
    arr.push_back(obj);
  }
  return arr;
}

ConvexRegion halfspaces_from_json(const json& arr) {
  ConvexRegion region;
  for (const auto& obj : arr) {
    HalfSpace h;
    h.plane.normal = vec_from_json(obj.at("normal"));
    h.plane.offset = rat_from_string(obj.at("offset").get<std::string>());
    h.side = obj.at("side").get<std::string>() == "geq" ? +1 : -1;
    region.halves.push_back(std::move(h));
  }
  return region;
}

json cut_node_to_json(const CutNode& node) {
  json obj;
  if (node.is_leaf) {
    obj["region"] = node.region;
    return obj;
  }
  obj["line"] = {{"normal", vec_to_json(node.cut.line.normal)},
                 {"offset", rat_to_string(node.cut.line.offset)}};
  json shares = json::array();
  for (const auto& [key, val] : node.cut.boundary_assignment) {
    shares.push_back({{"measure", key.first},
                      {"atom", key.second},
                      {"left", rat_to_string(val.first)},
                      {"right", rat_to_string(val.second)}});
  }
  obj["shares"] = shares;
  obj["left"] = cut_node_to_json(*node.left);
  obj["right"] = cut_node_to_json(*node.right);
  return obj;
}

std::unique_ptr<CutNode> cut_node_from_json(const json& obj) {
  auto node = std::make_unique<CutNode>();
  if (obj.contains("region")) {
    node->is_leaf = true;
    node->region = obj.at("region").get<int>();
    return node;
  }
  node->cut.line.normal = vec_from_json(obj.at("line").at("normal"));
  node->cut.line.offset = rat_from_string(obj.at("line").at("offset").get<std::string>());
  for (const auto& s : obj.at("shares")) {
    node->cut.boundary_assignment[{s.at("measure").get<int>(), s.at("atom").get<int>()}] = {
        rat_from_string(s.at("left").get<std::string>()),
        rat_from_string(s.at("right").get<std::string>())};
  }
  node->left = cut_node_from_json(obj.at("left"));
  node->right = cut_node_from_json(obj.at("right"));
  return node;
}

}  // namespace

std::string family_to_json(const MeasureFamily& family) {
  json root;
  root["dimension"] = family.dim;
  json measures = json::array();
  for (const auto& m : family.measures) {
    json meas;
    meas["label"] = m.label;
    meas["bump_radius"] = rat_to_string(m.bump_radius);
    json atoms = json::array();
    for (const auto& a : m.atoms)
      atoms.push_back({{"point", vec_to_json(a.pos)}, {"weight", rat_to_string(a.weight)}});
    meas["atoms"] = atoms;
    measures.push_back(meas);
  }
  root["measures"] = measures;
  return root.dump(2) + "\n";
}

MeasureFamily family_from_json(const std::string& text) {
  json root = json::parse(text);
  MeasureFamily fam;
  fam.dim = root.at("dimension").get<int>();
  for (const auto& meas : root.at("measures")) {
    DiscreteMeasure m;
    m.label = meas.at("label").get<std::string>();
    m.bump_radius = rat_from_string(meas.at("bump_radius").get<std::string>());
    for (const auto& a : meas.at("atoms"))
      m.atoms.push_back(
          {vec_from_json(a.at("point")), rat_from_string(a.at("weight").get<std::string>())});
    fam.measures.push_back(std::move(m));
  }
  fam.validate();
  return fam;
}

std::string partition_to_json(const ConvexPartition& part) {
  json root;
  if (part.fan) {
    root["type"] = "fan";
    json apex;
    apex["basepoint"] = vec_to_json(part.fan->apex.base);
    json dirs = json::array();
    for (const auto& d : part.fan->apex.directions) dirs.push_back(vec_to_json(d));
    apex["directions"] = dirs;
    root["apex"] = apex;
    root["axes"] = {{"u", vec_to_json(part.fan->plane.axis_u)},
                    {"v", vec_to_json(part.fan->plane.axis_v)}};
    json rays = json::array();
    for (const auto& r : part.fan->rays)
      rays.push_back(json::array({rat_to_string(r.x), rat_to_string(r.y)}));
    root["rays"] = rays;
  } else if (part.cut_tree) {
    root["type"] = "cut-tree";
    root["cuts"] = cut_node_to_json(*part.cut_tree);
  } else {
    root["type"] = "regions";
  }
  root["dimension"] = part.dim;
  json regions = json::array();
  for (const auto& r : part.regions) regions.push_back(halfspaces_to_json(r));
  root["halfspace_form"] = regions;
  return root.dump(2) + "\n";
}

ConvexPartition partition_from_json(const std::string& text) {
  json root = json::parse(text);
  ConvexPartition part;
  part.dim = root.at("dimension").get<int>();
  for (const auto& r : root.at("halfspace_form")) part.regions.push_back(halfspaces_from_json(r));
  std::string type = root.at("type").get<std::string>();
  if (type == "cut-tree") {
    part.cut_tree = std::shared_ptr<CutNode>(cut_node_from_json(root.at("cuts")).release());
  } else if (type == "fan") {
    auto fan = std::make_shared<FanProvenance>();
    fan->apex.base = vec_from_json(root.at("apex").at("basepoint"));
    for (const auto& d : root.at("apex").at("directions")) fan->apex.directions.push_back(vec_from_json(d));
    fan->plane.origin = fan->apex.base;
    fan->plane.axis_u = vec_from_json(root.at("axes").at("u"));
    fan->plane.axis_v = vec_from_json(root.at("axes").at("v"));
    fan->plane.u_norm2 = norm2(fan->plane.axis_u);
    fan->plane.v_norm2 = norm2(fan->plane.axis_v);
    for (const auto& r : root.at("rays"))
      fan->rays.push_back(Vec2q{rat_from_string(r.at(0).get<std::string>()),
                                rat_from_string(r.at(1).get<std::string>())});
    part.fan = fan;
  }
  return part;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParamError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParamError("cannot write file: " + path);
  out << content;
}

}  // namespace fairfan
