#include "tvlab/serialization.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

namespace tvlab {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where + " is not an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(where + " has no member \"" + key + "\"");
  return *it;
}

std::int64_t integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where + " is not an integer");
  return j.get<std::int64_t>();
}

std::size_t index(const Json& j, const std::string& where) {
  const std::int64_t v = integer(j, where);
  if (v < 0) fail(where + " is negative");
  return static_cast<std::size_t>(v);
}

}  // namespace

Json complex_to_json(const SimplicialComplex& sigma) {
  Json out;
  Json vs = Json::array();
  for (const VertexInfo& v : sigma.vertices()) {
    Json e;
    e["label"] = v.label;
    if (v.row) e["row"] = *v.row;
    if (v.block) e["block"] = *v.block;
    vs.push_back(std::move(e));
  }
  out["vertices"] = std::move(vs);
  Json fs = Json::array();
  for (const Face& f : sigma.facets()) fs.push_back(f.vertices());
  out["facets"] = std::move(fs);
  return out;
}

SimplicialComplex complex_from_json(const Json& j) {
  const Json& vs = member(j, "vertices", "document");
  if (!vs.is_array()) fail("\"vertices\" is not an array");
  if (vs.size() > kMaxVertices) throw Error(ErrorCode::TooManyVertices, std::to_string(vs.size()) + " vertices");
  std::vector<VertexInfo> vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string where = "vertices[" + std::to_string(i) + "]";
    const Json& label = member(vs[i], "label", where);
    if (!label.is_string()) fail(where + ".label is not a string");
    VertexInfo info{label.get<std::string>(), std::nullopt, std::nullopt};
    if (vs[i].contains("row")) info.row = static_cast<int>(integer(vs[i]["row"], where + ".row"));
    if (vs[i].contains("block")) info.block = static_cast<int>(integer(vs[i]["block"], where + ".block"));
    vertices.push_back(std::move(info));
  }
  const Json& fs = member(j, "facets", "document");
  if (!fs.is_array()) fail("\"facets\" is not an array");
  std::vector<Face> facets;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const std::string where = "facets[" + std::to_string(i) + "]";
    if (!fs[i].is_array()) fail(where + " is not an array");
    Face f;
    for (std::size_t t = 0; t < fs[i].size(); ++t) {
      const std::size_t v = index(fs[i][t], where + "[" + std::to_string(t) + "]");
      if (v >= vertices.size()) {
        throw Error(ErrorCode::VertexOutOfRange, where + " uses vertex " + std::to_string(v));
      }
      if (f.contains(static_cast<Vertex>(v))) fail(where + " repeats vertex " + std::to_string(v));
      f = f.with(static_cast<Vertex>(v));
    }
    facets.push_back(f);
  }
  return SimplicialComplex(std::move(vertices), std::move(facets));
}

Json shelling_to_json(const ShellingOrder& s) {
  Json out;
  out["order"] = s.order;
  Json ws = Json::array();
  for (const ShellingWitness& w : s.witnesses) ws.push_back(Json{{"B", w.b}, {"C", w.c}, {"v", w.v}});
  out["witnesses"] = std::move(ws);
  return out;
}

ShellingOrder shelling_from_json(const Json& j) {
  ShellingOrder s;
  const Json& order = member(j, "order", "document");
  if (!order.is_array()) fail("\"order\" is not an array");
  for (std::size_t i = 0; i < order.size(); ++i) s.order.push_back(index(order[i], "order[" + std::to_string(i) + "]"));
  if (j.contains("witnesses")) {
    const Json& ws = j["witnesses"];
    if (!ws.is_array()) fail("\"witnesses\" is not an array");
    for (std::size_t i = 0; i < ws.size(); ++i) {
      const std::string where = "witnesses[" + std::to_string(i) + "]";
      s.witnesses.push_back({index(member(ws[i], "B", where), where + ".B"), index(member(ws[i], "C", where), where + ".C"),
                             static_cast<Vertex>(index(member(ws[i], "v", where), where + ".v"))});
    }
  }
  return s;
}

Json betti_to_json(const BettiVector& b) {
  Json out = Json::array();
  if (b.minus_one != 0) out.push_back(Json{{"minus_one", b.minus_one}});
  for (std::int64_t v : b.values) out.push_back(v);
  return out;
}

namespace {

Json parse_with_context(std::string_view text, const std::string& context) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    fail(context + "malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

}  // namespace

Json parse_json(std::string_view text) { return parse_with_context(text, ""); }

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_with_context(buf.str(), path + ": ");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_file_atomic(const std::string& path, std::string_view contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp" + std::to_string(static_cast<unsigned long>(std::hash<std::string>{}(path) ^
                                                           static_cast<std::size_t>(::getpid())));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::BadParameter, "cannot write " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw Error(ErrorCode::BadParameter, "short write to " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace tvlab
