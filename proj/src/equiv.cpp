#include "dsrg/equiv.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <deque>
#include <map>
#include <numeric>

#include "dsrg/closure.hpp"
#include "dsrg/error.hpp"
#include "dsrg/params.hpp"

namespace dsrg {

std::optional<std::uint64_t> CanonicalForm::aut_order() const {
  std::uint64_t order = 1;
  for (std::size_t s : base_orbits) {
    if (s != 0 && order > UINT64_MAX / s) return std::nullopt;
    order *= s;
  }
  return order;
}

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Ordered partition of the vertices. Cells are contiguous ranges of `order`
// and are identified by their start position.
struct Partition {
  std::vector<Point> order;
  std::vector<std::uint32_t> cell;  // vertex -> start of its cell
  std::vector<std::uint32_t> end;   // start -> one past the last position
  std::size_t cells = 0;

  bool discrete() const { return cells == order.size(); }
};

using Trace = std::vector<std::uint64_t>;

class Canonizer {
 public:
  Canonizer(const Digraph& g, std::vector<std::uint32_t> colors) : g_(g), n_(g.order()), colors_(std::move(colors)) {}

  CanonicalForm run() {
    Partition root = initial();
    Trace trace;
    std::deque<std::uint32_t> queue;
    std::vector<char> queued(n_, 0);
    for (std::uint32_t s = 0; s < n_; s = root.end[s]) {
      queue.push_back(s);
      queued[s] = 1;
      trace.push_back(root.end[s] - s);
    }
    refine(root, queue, queued, trace);
    path_traces_.push_back(std::move(trace));
    search(root, 0);

    CanonicalForm out;
    out.labeling = best_lab_;
    out.graph = best_cert_;
    out.generators = generators_;
    out.base_orbits = base_orbits_;
    return out;
  }

 private:
  Partition initial() const {
    std::vector<std::uint64_t> in_deg(n_, 0);
    for (Point u = 0; u < n_; ++u)
      for (Point v = 0; v < n_; ++v)
        if (g_.has_arc(u, v)) ++in_deg[v];
    std::vector<std::array<std::uint64_t, 3>> key(n_);
    for (Point v = 0; v < n_; ++v) key[v] = {g_.out_degree(v), in_deg[v], colors_[v * n_ + v]};
    Partition p;
    p.order.resize(n_);
    std::iota(p.order.begin(), p.order.end(), 0);
    std::stable_sort(p.order.begin(), p.order.end(), [&](Point a, Point b) { return key[a] < key[b]; });
    p.cell.assign(n_, 0);
    p.end.assign(n_, 0);
    for (std::uint32_t s = 0; s < n_;) {
      std::uint32_t e = s;
      while (e < n_ && key[p.order[e]] == key[p.order[s]]) ++e;
      for (std::uint32_t i = s; i < e; ++i) p.cell[p.order[i]] = s;
      p.end[s] = e;
      ++p.cells;
      s = e;
    }
    return p;
  }

  // Refines to the coarsest equitable partition with respect to the 2-WL
  // coloring: two vertices of a cell stay together iff they see the same
  // multiset of colors towards every cell. The trace only depends on the
  // isomorphism type of (graph, partition).
  void refine(Partition& p, std::deque<std::uint32_t>& queue, std::vector<char>& queued, Trace& trace) const {
    std::vector<std::uint64_t> key(n_);
    std::vector<std::uint32_t> starts;
    while (!queue.empty()) {
      const std::uint32_t w0 = queue.front();
      queue.pop_front();
      queued[w0] = 0;
      const std::uint32_t w1 = p.end[w0];
      for (Point v = 0; v < n_; ++v) {
        std::uint64_t k = 0;
        const std::uint32_t* row = &colors_[v * n_];
        for (std::uint32_t i = w0; i < w1; ++i) k += mix(row[p.order[i]]);
        key[v] = k;
      }
      starts.clear();
      for (std::uint32_t s = 0; s < n_; s = p.end[s]) starts.push_back(s);
      for (std::uint32_t s : starts) {
        const std::uint32_t e = p.end[s];
        if (e - s == 1) continue;
        bool uniform = true;
        for (std::uint32_t i = s + 1; i < e && uniform; ++i) uniform = key[p.order[i]] == key[p.order[s]];
        if (uniform) continue;
        std::sort(p.order.begin() + s, p.order.begin() + e, [&](Point a, Point b) {
          return key[a] != key[b] ? key[a] < key[b] : a < b;
        });
        trace.push_back(w0);
        trace.push_back(s);
        const bool was_queued = queued[s];
        for (std::uint32_t f = s; f < e;) {
          std::uint32_t fe = f;
          while (fe < e && key[p.order[fe]] == key[p.order[f]]) ++fe;
          for (std::uint32_t i = f; i < fe; ++i) p.cell[p.order[i]] = f;
          p.end[f] = fe;
          if (f != s) ++p.cells;
          trace.push_back(key[p.order[f]]);
          trace.push_back(fe - f);
          if (!queued[f] && (f != s || !was_queued)) {
            queue.push_back(f);
            queued[f] = 1;
          }
          f = fe;
        }
      }
    }
    trace.push_back(p.cells);
  }

  Partition individualize(const Partition& parent, Point v, Trace& trace) const {
    Partition p = parent;
    const std::uint32_t s = p.cell[v];
    const std::uint32_t e = p.end[s];
    auto it = std::find(p.order.begin() + s, p.order.begin() + e, v);
    std::iter_swap(p.order.begin() + s, it);
    p.end[s] = s + 1;
    p.end[s + 1] = e;
    for (std::uint32_t i = s + 1; i < e; ++i) p.cell[p.order[i]] = s + 1;
    ++p.cells;
    trace.push_back(s);
    trace.push_back(e - s);
    std::deque<std::uint32_t> queue{s};
    std::vector<char> queued(n_, 0);
    queued[s] = 1;
    refine(p, queue, queued, trace);
    return p;
  }

  // First smallest non-singleton cell.
  std::uint32_t target_cell(const Partition& p) const {
    std::uint32_t best = UINT32_MAX, best_size = UINT32_MAX;
    for (std::uint32_t s = 0; s < n_; s = p.end[s]) {
      const std::uint32_t size = p.end[s] - s;
      if (size > 1 && size < best_size) {
        best = s;
        best_size = size;
      }
    }
    return best;
  }

  Digraph certificate(const std::vector<Point>& lab) const {
    std::vector<Point> pos(n_);
    for (std::size_t i = 0; i < n_; ++i) pos[lab[i]] = static_cast<Point>(i);
    return g_.relabeled(Permutation(pos));
  }

  // Union-find orbits of the generators that fix every vertex of `prefix`.
  std::vector<std::uint32_t> stabilizer_orbits(const std::vector<Point>& prefix) const {
    std::vector<std::uint32_t> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::uint32_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gen : generators_) {
      bool fixes = true;
      for (Point v : prefix) fixes = fixes && gen(v) == v;
      if (!fixes) continue;
      for (Point v = 0; v < n_; ++v) {
        const auto a = find(v), b = find(gen(v));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (Point v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

  static std::size_t divergence(const std::vector<Point>& a, const std::vector<Point>& b) {
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
    return i;
  }

  void add_generator(const std::vector<Point>& from, const std::vector<Point>& to) {
    std::vector<Point> images(n_);
    for (std::size_t i = 0; i < n_; ++i) images[from[i]] = to[i];
    Permutation gen(std::move(images));
    if (!gen.is_identity()) generators_.push_back(std::move(gen));
  }

  // Sign of (traces along the current path) - (the same-length prefix of `ref`).
  int compare_path(const std::vector<Trace>& ref) const {
    for (std::size_t i = 0; i < path_traces_.size(); ++i) {
      if (i >= ref.size()) return 1;
      if (path_traces_[i] != ref[i]) return path_traces_[i] < ref[i] ? -1 : 1;
    }
    return 0;
  }

  // Returns the level to resume at: a value below `level` unwinds the search
  // to that ancestor, INT_MAX means normal completion. A node is pruned when
  // its traces differ from the first path and fall below the best path.
  int search(const Partition& p, int level) {
    if (p.discrete()) return leaf(p);

    const std::uint32_t t = target_cell(p);
    std::vector<Point> children(p.order.begin() + t, p.order.begin() + p.end[t]);
    std::sort(children.begin(), children.end());
    std::vector<Point> explored;
    for (Point w : children) {
      if (!explored.empty() && !generators_.empty()) {
        const auto orbits = stabilizer_orbits(path_);
        bool seen = false;
        for (Point x : explored) seen = seen || orbits[x] == orbits[w];
        if (seen) continue;
      }
      Trace trace;
      Partition child = individualize(p, w, trace);
      path_.push_back(w);
      path_traces_.push_back(std::move(trace));
      int resume = INT_MAX;
      if (first_lab_.empty() || compare_path(first_traces_) == 0 || compare_path(best_traces_) >= 0)
        resume = search(child, level + 1);
      path_.pop_back();
      path_traces_.pop_back();
      explored.push_back(w);
      if (resume < level) return resume;
    }
    const bool on_first = path_.size() < first_path_.size() &&
                          std::equal(path_.begin(), path_.end(), first_path_.begin());
    if (on_first) {
      const auto orbits = stabilizer_orbits(path_);
      const Point first_child = first_path_[level];
      std::size_t size = 0;
      for (Point v = 0; v < n_; ++v) size += orbits[v] == orbits[first_child];
      if (base_orbits_.size() <= static_cast<std::size_t>(level)) base_orbits_.resize(level + 1, 1);
      base_orbits_[level] = size;
    }
    return INT_MAX;
  }

  int leaf(const Partition& p) {
    Digraph cert = certificate(p.order);
    if (first_lab_.empty()) {
      first_lab_ = best_lab_ = p.order;
      first_path_ = best_path_ = path_;
      first_traces_ = best_traces_ = path_traces_;
      best_cert_ = first_cert_ = std::move(cert);
      return INT_MAX;
    }
    if (compare_path(first_traces_) == 0 && path_traces_.size() == first_traces_.size() && cert == first_cert_) {
      add_generator(first_lab_, p.order);
      return static_cast<int>(divergence(path_, first_path_));
    }
    int cmp = compare_path(best_traces_);
    if (cmp == 0 && path_traces_.size() != best_traces_.size()) cmp = path_traces_.size() < best_traces_.size() ? -1 : 1;
    if (cmp == 0 && cert == best_cert_) {
      add_generator(best_lab_, p.order);
      return static_cast<int>(divergence(path_, best_path_));
    }
    if (cmp > 0 || (cmp == 0 && best_cert_ < cert)) {
      best_lab_ = p.order;
      best_path_ = path_;
      best_traces_ = path_traces_;
      best_cert_ = std::move(cert);
    }
    return INT_MAX;
  }

  const Digraph& g_;
  std::size_t n_;
  std::vector<std::uint32_t> colors_;

  std::vector<Point> path_;
  std::vector<Trace> path_traces_;
  std::vector<Point> first_lab_, best_lab_, first_path_, best_path_;
  std::vector<Trace> first_traces_, best_traces_;
  Digraph first_cert_, best_cert_;
  std::vector<Permutation> generators_;
  std::vector<std::size_t> base_orbits_;
};

}  // namespace

CanonicalForm canonical_form(const Digraph& g, std::size_t cap) {
  if (g.order() > cap)
    throw LimitError("digraph of order " + std::to_string(g.order()) + " exceeds the canonical-form cap " +
                     std::to_string(cap));
  if (g.order() == 0) return CanonicalForm{g, {}, {}, {}};
  auto colors = stable_partition(initial_partition(g)).colors;
  return Canonizer(g, std::move(colors)).run();
}

bool are_isomorphic(const Digraph& a, const Digraph& b, std::size_t cap) {
  if (a.order() != b.order() || a.arc_count() != b.arc_count()) return false;
  return canonical_form(a, cap).graph == canonical_form(b, cap).graph;
}

Digraph equivalence_key(const Digraph& g, std::size_t cap) {
  const Digraph c = complement(g);
  return std::min({canonical_form(g, cap).graph, canonical_form(g.transposed(), cap).graph,
                   canonical_form(c, cap).graph, canonical_form(c.transposed(), cap).graph});
}

std::vector<std::vector<std::size_t>> equivalence_classes(const std::vector<Digraph>& graphs, std::size_t cap) {
  std::map<Digraph, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < graphs.size(); ++i) classes[equivalence_key(graphs[i], cap)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [key, members] : classes) out.push_back(std::move(members));
  return out;
}

}  // namespace dsrg
