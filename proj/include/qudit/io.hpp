/*******************************************************************************
 * Copyright (c) 2026 The qudit-homology Authors.                              *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

/// \file io.hpp
/// External formats.
///
/// Complex document (JSON):
///   { "modulus": D, "vertices": ["v", ...],
///     "edges": [{"name": "e", "source": "v", "target": "v"}, ...],
///     "faces": [{"name": "f", "walk": ["e", "e~", ...]}, ...] }
/// A trailing `~` marks a step traversed backwards. Unknown vertex or edge
/// names are kept as dangling references so validate() can report them.
///
/// Hypermap document (JSON):
///   { "modulus": D, "n": darts, "alpha": [[1, 2], ...], "sigma": [...],
///     "special_darts": [1, ...] }   // special_darts optional
///
/// Check matrix (text): header `D n num_faces num_vertices`, then the face
/// rows r(B), then the vertex rows r(A), entries in [0, D).

#include "qudit/complex2.hpp"
#include "qudit/hypermap.hpp"
#include "qudit/pauli.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qudit {

using Json = nlohmann::ordered_json;

/// Well-formed input that does not follow the expected schema.
class SchemaError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct ComplexDocument {
  Modulus modulus;
  TwoComplex complex;
};

struct HypermapDocument {
  Modulus modulus;
  Hypermap hypermap;
  std::optional<std::vector<std::size_t>> special_darts; ///< 0-based
};

namespace detail {

inline void require_keys(const Json &obj, const std::string &what,
                         std::initializer_list<const char *> required,
                         std::initializer_list<const char *> optional = {}) {
  if (!obj.is_object())
    throw SchemaError(what + ": expected an object");
  std::set<std::string> allowed;
  for (const char *k : required) {
    if (!obj.contains(k))
      throw SchemaError(what + ": missing field '" + k + "'");
    allowed.insert(k);
  }
  for (const char *k : optional)
    allowed.insert(k);
  for (const auto &item : obj.items())
    if (!allowed.count(item.key()))
      throw SchemaError(what + ": unknown field '" + item.key() + "'");
}

inline const std::string &as_string(const Json &j, const std::string &what) {
  if (!j.is_string())
    throw SchemaError(what + ": expected a string");
  return j.get_ref<const std::string &>();
}

inline const Json &as_array(const Json &j, const std::string &what) {
  if (!j.is_array())
    throw SchemaError(what + ": expected an array");
  return j;
}

inline std::int64_t as_integer(const Json &j, const std::string &what) {
  if (!j.is_number_integer())
    throw SchemaError(what + ": expected an integer");
  return j.get<std::int64_t>();
}

inline Modulus read_modulus(const Json &j) {
  const std::int64_t d = as_integer(j, "modulus");
  if (d < 2)
    throw SchemaError("modulus: must be >= 2");
  return d;
}

inline std::map<std::string, std::size_t> index_names(const std::vector<std::string> &names,
                                                      const std::string &what) {
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < names.size(); ++i)
    if (!idx.emplace(names[i], i).second)
      throw SchemaError(what + ": duplicate name '" + names[i] + "'");
  return idx;
}

} // namespace detail

inline ComplexDocument complex_from_json(const Json &doc) {
  using namespace detail;
  require_keys(doc, "complex", {"modulus", "vertices", "edges", "faces"});
  const Modulus d = read_modulus(doc["modulus"]);

  std::vector<std::string> vertices;
  for (const auto &v : as_array(doc["vertices"], "vertices"))
    vertices.push_back(as_string(v, "vertices[]"));
  const auto vertex_index = index_names(vertices, "vertices");
  auto lookup = [](const auto &index, const std::string &name) {
    auto it = index.find(name);
    return it == index.end() ? no_index : it->second;
  };

  std::vector<Edge> edges;
  std::vector<std::string> edge_names;
  for (const auto &e : as_array(doc["edges"], "edges")) {
    require_keys(e, "edge", {"name", "source", "target"});
    const std::string &name = as_string(e["name"], "edge.name");
    edges.push_back({name, lookup(vertex_index, as_string(e["source"], "edge.source")),
                     lookup(vertex_index, as_string(e["target"], "edge.target"))});
    edge_names.push_back(name);
  }
  const auto edge_index = index_names(edge_names, "edges");

  std::vector<Face> faces;
  std::vector<std::string> face_names;
  for (const auto &f : as_array(doc["faces"], "faces")) {
    require_keys(f, "face", {"name", "walk"});
    const std::string &name = as_string(f["name"], "face.name");
    std::vector<SignedEdge> steps;
    for (const auto &s : as_array(f["walk"], "face.walk")) {
      std::string step = as_string(s, "face.walk[]");
      int sign = +1;
      if (!step.empty() && step.back() == '~') {
        sign = -1;
        step.pop_back();
      }
      steps.push_back({lookup(edge_index, step), sign});
    }
    faces.push_back({name, ClosedWalk(std::move(steps))});
    face_names.push_back(name);
  }
  index_names(face_names, "faces");
  return {d, TwoComplex(std::move(vertices), std::move(edges), std::move(faces))};
}

inline Json complex_to_json(const TwoComplex &c, Modulus d) {
  Json doc;
  doc["modulus"] = d;
  doc["vertices"] = c.vertices();
  Json edges = Json::array();
  for (const auto &e : c.edges())
    edges.push_back({{"name", e.name},
                     {"source", c.vertices().at(e.source)},
                     {"target", c.vertices().at(e.target)}});
  doc["edges"] = std::move(edges);
  Json faces = Json::array();
  for (const auto &f : c.faces()) {
    Json walk = Json::array();
    for (const auto &s : f.walk.steps())
      walk.push_back(c.edges().at(s.edge).name + (s.sign < 0 ? "~" : ""));
    faces.push_back({{"name", f.name}, {"walk", std::move(walk)}});
  }
  doc["faces"] = std::move(faces);
  return doc;
}

inline HypermapDocument hypermap_from_json(const Json &doc) {
  using namespace detail;
  require_keys(doc, "hypermap", {"modulus", "n", "alpha", "sigma"}, {"special_darts"});
  const Modulus d = read_modulus(doc["modulus"]);
  const std::int64_t n = as_integer(doc["n"], "n");
  if (n < 1)
    throw SchemaError("n: must be >= 1");
  auto cycles = [&](const Json &j, const std::string &what) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto &cyc : as_array(j, what)) {
      std::vector<std::size_t> c;
      for (const auto &dart : as_array(cyc, what + "[]")) {
        const std::int64_t v = as_integer(dart, what + "[][]");
        if (v < 1 || v > n)
          throw InvalidPermutation(what + ": dart " + std::to_string(v) +
                                   " outside {1.." + std::to_string(n) + "}");
        c.push_back(static_cast<std::size_t>(v));
      }
      out.push_back(std::move(c));
    }
    return out;
  };
  const auto size = static_cast<std::size_t>(n);
  Hypermap h(Permutation::from_cycles(size, cycles(doc["alpha"], "alpha")),
             Permutation::from_cycles(size, cycles(doc["sigma"], "sigma")));
  HypermapDocument out{d, std::move(h), std::nullopt};
  if (doc.contains("special_darts")) {
    std::vector<std::size_t> specials;
    for (const auto &s : as_array(doc["special_darts"], "special_darts")) {
      const std::int64_t v = as_integer(s, "special_darts[]");
      if (v < 1 || v > n)
        throw SchemaError("special_darts: dart " + std::to_string(v) + " out of range");
      specials.push_back(static_cast<std::size_t>(v - 1));
    }
    out.special_darts = std::move(specials);
  }
  return out;
}

inline Json hypermap_to_json(const Hypermap &h, Modulus d,
                             const SpecialDarts *specials = nullptr) {
  auto cycles = [](const Permutation &p) {
    Json out = Json::array();
    for (const auto &cyc : orbits(p)) {
      if (cyc.size() == 1)
        continue;
      Json c = Json::array();
      for (std::size_t i : cyc)
        c.push_back(i + 1);
      out.push_back(std::move(c));
    }
    return out;
  };
  Json doc;
  doc["modulus"] = d;
  doc["n"] = h.darts();
  doc["alpha"] = cycles(h.alpha);
  doc["sigma"] = cycles(h.sigma);
  if (specials) {
    Json s = Json::array();
    for (std::size_t dart : specials->per_edge())
      s.push_back(dart + 1);
    doc["special_darts"] = std::move(s);
  }
  return doc;
}

inline std::string export_check_matrix(const StabilizerSpec &spec) {
  std::ostringstream os;
  os << spec.modulus() << ' ' << spec.qudits() << ' ' << spec.face_count() << ' '
     << spec.vertex_count() << '\n';
  auto dump = [&](const ZModMatrix &m) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c)
        os << (c ? " " : "") << m(r, c);
      os << '\n';
    }
  };
  dump(spec.face_rows());
  dump(spec.vertex_rows());
  return os.str();
}

inline StabilizerSpec import_check_matrix(const std::string &text) {
  std::istringstream is(text);
  long long d = 0, n = 0, faces = 0, vertices = 0;
  if (!(is >> d >> n >> faces >> vertices))
    throw SchemaError("check matrix: header must be 'D n num_faces num_vertices'");
  if (d < 2 || n < 0 || faces < 0 || vertices < 0)
    throw SchemaError("check matrix: invalid header values");
  auto read = [&](long long rows, const char *what) {
    ZModMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(n), d);
    for (long long r = 0; r < rows; ++r)
      for (long long c = 0; c < n; ++c) {
        long long v = 0;
        if (!(is >> v))
          throw SchemaError(std::string("check matrix: truncated ") + what + " rows");
        if (v < 0 || v >= d)
          throw SchemaError("check matrix: entry " + std::to_string(v) +
                            " outside [0, D)");
        m.set(static_cast<std::size_t>(r), static_cast<std::size_t>(c), v);
      }
    return m;
  };
  ZModMatrix face_rows = read(faces, "face");
  ZModMatrix vertex_rows = read(vertices, "vertex");
  std::string extra;
  if (is >> extra)
    throw SchemaError("check matrix: trailing data '" + extra + "'");
  return StabilizerSpec(std::move(face_rows), std::move(vertex_rows));
}

} // namespace qudit
