#include "dsrg/designs.hpp"

#include <algorithm>
#include <map>

#include "dsrg/equiv.hpp"
#include "dsrg/error.hpp"

namespace dsrg {

BlockDesign validate_design(std::size_t v, const std::vector<std::vector<Point>>& blocks) {
  if (v < 2) throw InputError("a design needs at least two points");
  if (blocks.empty()) throw InputError("a design needs at least one block");
  BlockDesign d;
  d.v = v;
  d.k = blocks.front().size();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    std::vector<Point> block;
    for (Point p : blocks[i]) {
      if (p < 1 || p > v) throw InputError("block " + std::to_string(i + 1) + ": point " + std::to_string(p) + " out of range");
      block.push_back(p - 1);
    }
    std::sort(block.begin(), block.end());
    if (std::adjacent_find(block.begin(), block.end()) != block.end())
      throw InputError("block " + std::to_string(i + 1) + " repeats a point");
    if (block.size() != d.k) throw InputError("block " + std::to_string(i + 1) + " has size " + std::to_string(block.size()) + ", expected " + std::to_string(d.k));
    d.blocks.push_back(std::move(block));
  }
  if (d.k < 2) throw InputError("blocks must have at least two points");
  d.b = d.blocks.size();

  std::vector<std::size_t> rep(v, 0);
  std::vector<std::size_t> pairs(v * v, 0);
  for (const auto& block : d.blocks)
    for (std::size_t i = 0; i < block.size(); ++i) {
      ++rep[block[i]];
      for (std::size_t j = i + 1; j < block.size(); ++j) ++pairs[block[i] * v + block[j]];
    }
  d.r = rep[0];
  for (Point p = 0; p < v; ++p)
    if (rep[p] != d.r)
      throw AxiomError("replication not constant: point 1 lies in " + std::to_string(d.r) + " blocks, point " +
                       std::to_string(p + 1) + " in " + std::to_string(rep[p]));
  d.lambda = pairs[0 * v + 1];
  for (Point p = 0; p < v; ++p)
    for (Point q = p + 1; q < v; ++q)
      if (pairs[p * v + q] != d.lambda)
        throw AxiomError("pair count not constant: {1,2} lies in " + std::to_string(d.lambda) + " blocks, {" +
                         std::to_string(p + 1) + "," + std::to_string(q + 1) + "} in " +
                         std::to_string(pairs[p * v + q]));
  return d;
}

LeviGraph levi_graph(const BlockDesign& design) {
  LeviGraph out;
  out.points = design.v;
  out.blocks = design.b;
  out.graph = Digraph(design.v + design.b);
  for (std::size_t i = 0; i < design.b; ++i) {
    const auto block_vertex = static_cast<Point>(design.v + i);
    for (Point p : design.blocks[i]) {
      out.graph.add_arc(p, block_vertex);
      out.graph.add_arc(block_vertex, p);
    }
  }
  return out;
}

PermGroup levi_automorphism_group(const BlockDesign& design) {
  const LeviGraph levi = levi_graph(design);
  return PermGroup(levi.graph.order(), canonical_form(levi.graph).generators);
}

PermGroup extend_to_levi(const BlockDesign& design, const PermGroup& point_group) {
  if (point_group.degree() != design.v)
    throw InputError("group degree " + std::to_string(point_group.degree()) + " differs from the number of points " +
                     std::to_string(design.v));
  std::map<std::vector<Point>, Point> block_index;
  for (std::size_t i = 0; i < design.b; ++i) block_index.emplace(design.blocks[i], static_cast<Point>(i));
  if (block_index.size() != design.b) throw InputError("design has repeated blocks; block images are ambiguous");
  std::vector<Permutation> gens;
  for (const auto& g : point_group.generators()) {
    std::vector<Point> images(g.images());
    for (std::size_t i = 0; i < design.b; ++i) {
      auto image = act(g, design.blocks[i], ObjectKind::Set);
      auto it = block_index.find(image);
      if (it == block_index.end())
        throw InputError("generator " + g.to_cycles() + " does not preserve block " + std::to_string(i + 1));
      images.push_back(static_cast<Point>(design.v + it->second));
    }
    gens.emplace_back(std::move(images));
  }
  return PermGroup(design.v + design.b, std::move(gens));
}

PipelineResult design_action_pipeline(const PermGroup& group, const Object& seed, ObjectKind kind,
                                      const PipelineCaps& caps) {
  InducedAction action = induced_action(group, seed, kind);
  if (action.domain.size() > caps.max_orbit)
    throw LimitError("orbit of size " + std::to_string(action.domain.size()) + " exceeds the cap " +
                     std::to_string(caps.max_orbit));
  CoherentConfig scheme = schurian(action.action);
  if (scheme.rank() > caps.max_rank)
    throw LimitError("scheme of rank " + std::to_string(scheme.rank()) + " exceeds the cap " +
                     std::to_string(caps.max_rank));
  return PipelineResult{std::move(action), std::move(scheme)};
}

}  // namespace dsrg
