#pragma once

// Block designs, their Levi (incidence) graphs, and the pipeline from a group
// acting on a design to the Schurian scheme of an induced action.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dsrg/digraph.hpp"
#include "dsrg/perm.hpp"
#include "dsrg/scheme.hpp"

namespace dsrg {

struct BlockDesign {
  std::size_t v = 0;
  std::vector<std::vector<Point>> blocks;  // 0-based, each sorted
  std::size_t b = 0;
  std::size_t k = 0;
  std::size_t r = 0;
  std::size_t lambda = 0;
};

// Checks a 2-design on points 1..v given by 1-based blocks. Throws InputError
// for malformed blocks (empty list, unequal sizes, repeated or out-of-range
// points) and AxiomError when the replication or pair count is not constant.
BlockDesign validate_design(std::size_t v, const std::vector<std::vector<Point>>& blocks);

// Bipartite incidence graph: points are vertices 0..v-1, block i is v+i.
// Stored as a symmetric digraph.
struct LeviGraph {
  Digraph graph;
  std::size_t points = 0;
  std::size_t blocks = 0;

  bool is_point(Point x) const { return x < points; }
};

LeviGraph levi_graph(const BlockDesign& design);

// Aut of the Levi graph (including dualities, if any) on its v + b vertices.
PermGroup levi_automorphism_group(const BlockDesign& design);

// Extends a group of point permutations preserving the design to the Levi
// vertices. Throws InputError if a generator does not map blocks to blocks.
PermGroup extend_to_levi(const BlockDesign& design, const PermGroup& point_group);

struct PipelineCaps {
  std::size_t max_orbit = 110;
  std::size_t max_rank = 25;
};

struct PipelineResult {
  InducedAction action;
  CoherentConfig scheme;
};

// schurian(induced_action(group, seed, kind)). Throws LimitError when the orbit
// or the rank exceeds the caps.
PipelineResult design_action_pipeline(const PermGroup& group, const Object& seed, ObjectKind kind,
                                      const PipelineCaps& caps = {});

}  // namespace dsrg
