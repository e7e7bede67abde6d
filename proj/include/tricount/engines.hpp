#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "tricount/intersect.hpp"
#include "tricount/matrix.hpp"
#include "tricount/subgraph.hpp"

namespace tricount {

enum class Engine { kIntersect, kMatrix, kSubgraph };

inline constexpr std::array<Engine, 3> kAllEngines{Engine::kIntersect, Engine::kMatrix, Engine::kSubgraph};

inline std::string_view engine_name(Engine e) {
  switch (e) {
    case Engine::kIntersect: return "intersect";
    case Engine::kMatrix: return "matrix";
    case Engine::kSubgraph: return "subgraph";
  }
  return "?";
}

inline std::optional<Engine> engine_from_name(std::string_view name) {
  for (Engine e : kAllEngines)
    if (engine_name(e) == name) return e;
  return std::nullopt;
}

struct EngineOptions {
  IntersectOptions intersect;
  MatrixOptions matrix;
  SubgraphOptions subgraph;

  EngineOptions& with_threads(unsigned t) {
    intersect.threads = matrix.threads = subgraph.threads = t;
    return *this;
  }
  EngineOptions& with_enumeration(bool on) {
    intersect.enumerate = subgraph.enumerate = on;
    return *this;
  }
};

inline TriangleReport count_triangles(const Graph& g, Engine e, const EngineOptions& opts = {}) {
  switch (e) {
    case Engine::kIntersect: return count_triangles_intersect(g, opts.intersect);
    case Engine::kMatrix: return count_triangles_matrix(g, opts.matrix);
    case Engine::kSubgraph: return count_triangles_subgraph(g, opts.subgraph);
  }
  throw InputError("unknown engine");
}

}  // namespace tricount
