#include "dsrg/search.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

#include "dsrg/error.hpp"

namespace dsrg {

UnionCandidate make_candidate(const CoherentConfig& cfg, ClassSet classes) {
  if (classes.empty()) throw InputError("union candidate needs at least one class");
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  std::vector<char> in(cfg.rank(), 0);
  for (std::uint32_t c : classes) {
    if (c >= cfg.rank()) throw InputError("class " + std::to_string(c) + " out of range");
    if (cfg.is_diagonal(c)) throw InputError("class " + std::to_string(c) + " is diagonal");
    in[c] = 1;
  }
  UnionCandidate cand;
  for (std::uint32_t c : classes) {
    cand.k += cfg.valency(c);
    if (in[cfg.transpose(c)]) cand.t += cfg.valency(c);
  }
  cand.classes = std::move(classes);
  return cand;
}

std::vector<ClassSet> knapsack_filter(const SchemeClassProfile& profile, std::int64_t t, std::int64_t k_minus_t) {
  struct Unit {
    std::uint32_t a, b;
    std::int64_t v;
    bool sym;
  };
  std::vector<Unit> units;
  for (const auto& c : profile.classes) {
    if (c.symmetric) {
      units.push_back({c.color, c.color, c.valency, true});
    } else if (c.color < c.partner) {
      units.push_back({c.color, c.partner, c.valency, false});
    }
  }
  std::vector<ClassSet> out;
  ClassSet cur;
  auto rec = [&](auto&& self, std::size_t u, std::int64_t st, std::int64_t sd) -> void {
    if (st > t || sd > k_minus_t) return;
    if (u == units.size()) {
      if (st == t && sd == k_minus_t && !cur.empty()) {
        ClassSet s = cur;
        std::sort(s.begin(), s.end());
        out.push_back(std::move(s));
      }
      return;
    }
    const Unit& un = units[u];
    self(self, u + 1, st, sd);
    if (un.sym) {
      cur.push_back(un.a);
      self(self, u + 1, st + un.v, sd);
      cur.pop_back();
    } else {
      cur.push_back(un.a);
      self(self, u + 1, st, sd + un.v);
      cur.back() = un.b;
      self(self, u + 1, st, sd + un.v);
      cur.back() = un.a;
      cur.push_back(un.b);
      self(self, u + 1, st + 2 * un.v, sd);
      cur.pop_back();
      cur.pop_back();
    }
  };
  rec(rec, 0, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// c_x = sum_{i,j in S} p_{ij}^x over all colors x.
std::vector<std::int64_t> path_counts(const CoherentConfig& cfg, const ClassSet& classes) {
  std::vector<std::int64_t> c(cfg.rank(), 0);
  for (std::uint32_t i : classes)
    for (std::uint32_t j : classes) {
      auto row = cfg.p_row(i, j);
      for (std::size_t x = 0; x < row.size(); ++x) c[x] += row[x];
    }
  return c;
}

}  // namespace

Verdict tensor_check(const CoherentConfig& cfg, const UnionCandidate& candidate) {
  if (!cfg.homogeneous()) throw InputError("tensor check requires a homogeneous configuration");
  const auto c = path_counts(cfg, candidate.classes);
  std::vector<char> in(cfg.rank(), 0);
  for (std::uint32_t s : candidate.classes) in[s] = 1;
  const std::uint32_t diag = cfg.diagonal_colors().front();
  if (c[diag] != candidate.t)
    return Verdict{std::nullopt, "diagonal entry " + std::to_string(c[diag]) + " differs from t"};
  std::optional<std::int64_t> lambda, mu;
  std::uint32_t lw = 0, mw = 0;
  for (std::uint32_t x = 0; x < cfg.rank(); ++x) {
    if (x == diag) continue;
    auto& slot = in[x] ? lambda : mu;
    auto& witness = in[x] ? lw : mw;
    if (!slot) {
      slot = c[x];
      witness = x;
    } else if (*slot != c[x]) {
      return Verdict{std::nullopt, std::string(in[x] ? "lambda" : "mu") + " not constant: class " +
                                       std::to_string(witness) + " has " + std::to_string(*slot) + ", class " +
                                       std::to_string(x) + " has " + std::to_string(c[x])};
    }
  }
  return Verdict{DsrgParams{static_cast<std::int64_t>(cfg.order()), candidate.k, candidate.t, lambda.value_or(0),
                            mu.value_or(0)},
                 {}};
}

Digraph realize(const CoherentConfig& cfg, const ClassSet& classes) {
  const auto mask = cfg.relation_mask(classes);
  const std::size_t n = cfg.order();
  Digraph g(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (mask[x * n + y]) g.add_arc(static_cast<Point>(x), static_cast<Point>(y));
  return g;
}

ClassSet transpose_image(const CoherentConfig& cfg, const ClassSet& classes) {
  ClassSet out;
  for (std::uint32_t c : classes) out.push_back(cfg.transpose(c));
  std::sort(out.begin(), out.end());
  return out;
}

ClassSet complement_classes(const CoherentConfig& cfg, const ClassSet& classes) {
  std::vector<char> in(cfg.rank(), 0);
  for (std::uint32_t c : classes) in[c] = 1;
  ClassSet out;
  for (std::uint32_t c = 0; c < cfg.rank(); ++c)
    if (!in[c] && !cfg.is_diagonal(c)) out.push_back(c);
  return out;
}

namespace {

struct Unit {
  std::uint32_t a = 0;
  std::uint32_t b = 0;  // partner; equals a for a symmetric class
  std::int64_t valency = 0;
  bool symmetric = true;
};

// One DFS worker. Each node fixes the choice for one unit (symmetric class or
// transpose pair); path counts are updated incrementally and pruned as soon as
// any entry exceeds the largest lambda/mu among the targets, since entries
// only grow as classes are added.
class Searcher {
 public:
  Searcher(const CoherentConfig& cfg, const std::vector<Unit>& units,
           const std::map<std::pair<std::int64_t, std::int64_t>, std::vector<std::pair<std::int64_t, std::int64_t>>>& targets)
      : cfg_(cfg), units_(units), targets_(targets), r_(cfg.rank()), diag_(cfg.diagonal_colors().front()) {
    for (const auto& [kt, lm] : targets_) {
      k_max_ = std::max(k_max_, kt.first);
      k_min_ = std::min(k_min_, kt.first);
      t_max_ = std::max(t_max_, kt.second);
      for (auto [l, m] : lm) c_max_ = std::max({c_max_, l, m});
    }
    remaining_.assign(units_.size() + 1, 0);
    for (std::size_t u = units_.size(); u-- > 0;)
      remaining_[u] = remaining_[u + 1] + (units_[u].symmetric ? 1 : 2) * units_[u].valency;
    stack_.assign((2 * units_.size() + 2) * r_, 0);
    in_.assign(r_, 0);
  }

  // Runs the subtree below a fixed prefix of choices for the first units.
  void run(const std::vector<int>& prefix, std::vector<SearchHit>& hits) {
    hits_ = &hits;
    selected_.clear();
    std::fill(in_.begin(), in_.end(), 0);
    std::fill(stack_.begin(), stack_.begin() + static_cast<std::ptrdiff_t>(r_), 0);
    depth_ = 0;
    std::int64_t k = 0, t = 0;
    for (std::size_t u = 0; u < prefix.size(); ++u) {
      if (!apply(u, prefix[u], k, t)) {
        unwind_all();
        return;
      }
    }
    dfs(prefix.size(), k, t);
    unwind_all();
  }

  static int choices(const Unit& u) { return u.symmetric ? 2 : 4; }

 private:
  // Adds one class, pushing a new count vector. False when pruned.
  bool add(std::uint32_t a) {
    const std::int32_t* prev = &stack_[depth_ * r_];
    std::int32_t* next = &stack_[(depth_ + 1) * r_];
    std::copy(prev, prev + r_, next);
    auto acc = [&](std::span<const std::int32_t> row) {
      for (std::size_t x = 0; x < r_; ++x) next[x] += row[x];
    };
    acc(cfg_.p_row(a, a));
    for (std::uint32_t j : selected_) {
      acc(cfg_.p_row(a, j));
      acc(cfg_.p_row(j, a));
    }
    ++depth_;
    selected_.push_back(a);
    in_[a] = 1;
    for (std::size_t x = 0; x < r_; ++x)
      if (x != diag_ && next[x] > c_max_) return false;
    return true;
  }

  void remove_last() {
    in_[selected_.back()] = 0;
    selected_.pop_back();
    --depth_;
  }

  void unwind_all() {
    while (!selected_.empty()) remove_last();
  }

  // Applies choice `ch` of unit `u`: 0 skip, 1 take a, 2 take b, 3 take both.
  bool apply(std::size_t u, int ch, std::int64_t& k, std::int64_t& t) {
    const Unit& un = units_[u];
    if (ch == 0) return true;
    if (un.symmetric) {
      k += un.valency;
      t += un.valency;
      return add(un.a);
    }
    if (ch == 1 || ch == 2) {
      k += un.valency;
      return add(ch == 1 ? un.a : un.b);
    }
    k += 2 * un.valency;
    t += 2 * un.valency;
    if (!add(un.a)) return false;
    return add(un.b);
  }

  void dfs(std::size_t u, std::int64_t k, std::int64_t t) {
    if (k > k_max_ || t > t_max_ || k + remaining_[u] < k_min_) return;
    if (u == units_.size()) {
      leaf(k, t);
      return;
    }
    const int n_choices = choices(units_[u]);
    for (int ch = 0; ch < n_choices; ++ch) {
      const std::size_t mark = selected_.size();
      std::int64_t k2 = k, t2 = t;
      if (apply(u, ch, k2, t2)) dfs(u + 1, k2, t2);
      while (selected_.size() > mark) remove_last();
    }
  }

  void leaf(std::int64_t k, std::int64_t t) {
    if (selected_.empty()) return;
    auto it = targets_.find({k, t});
    if (it == targets_.end()) return;
    const std::int32_t* c = &stack_[depth_ * r_];
    std::int64_t lambda = -1, mu = -1;
    for (std::size_t x = 0; x < r_; ++x) {
      if (x == diag_) continue;
      std::int64_t& slot = in_[x] ? lambda : mu;
      if (slot < 0) {
        slot = c[x];
      } else if (slot != c[x]) {
        return;
      }
    }
    if (mu < 0) mu = 0;
    for (auto [l, m] : it->second) {
      if (l == lambda && m == mu) {
        SearchHit hit;
        hit.candidate.classes = selected_;
        std::sort(hit.candidate.classes.begin(), hit.candidate.classes.end());
        hit.candidate.k = k;
        hit.candidate.t = t;
        hit.params = DsrgParams{static_cast<std::int64_t>(cfg_.order()), k, t, lambda, mu};
        hits_->push_back(std::move(hit));
        return;
      }
    }
  }

  const CoherentConfig& cfg_;
  const std::vector<Unit>& units_;
  const std::map<std::pair<std::int64_t, std::int64_t>, std::vector<std::pair<std::int64_t, std::int64_t>>>& targets_;
  std::size_t r_;
  std::size_t diag_;
  std::int64_t k_max_ = 0, k_min_ = INT64_MAX, t_max_ = 0, c_max_ = 0;
  std::vector<std::int64_t> remaining_;
  std::vector<std::int32_t> stack_;
  std::size_t depth_ = 0;
  std::vector<std::uint32_t> selected_;
  std::vector<char> in_;
  std::vector<SearchHit>* hits_ = nullptr;
};

}  // namespace

std::vector<SearchHit> search_scheme(const CoherentConfig& cfg, const SearchOptions& options) {
  if (!cfg.homogeneous()) throw InputError("search requires a homogeneous configuration (association scheme)");
  if (cfg.rank() > options.max_rank)
    throw LimitError("scheme rank " + std::to_string(cfg.rank()) + " exceeds the search cap " +
                     std::to_string(options.max_rank));

  const auto n = static_cast<std::int64_t>(cfg.order());
  std::vector<DsrgParams> wanted = options.targets;
  if (wanted.empty()) {
    wanted = enumerate_feasible(n, true, !options.all_unions);
  }
  std::map<std::pair<std::int64_t, std::int64_t>, std::vector<std::pair<std::int64_t, std::int64_t>>> targets;
  for (const auto& p : wanted) {
    if (p.n != n) continue;
    targets[{p.k, p.t}].emplace_back(p.lambda, p.mu);
  }
  if (targets.empty()) return {};

  std::vector<Unit> units;
  for (const auto& c : class_profile(cfg).classes) {
    if (c.symmetric) {
      units.push_back({c.color, c.color, c.valency, true});
    } else if (c.color < c.partner) {
      units.push_back({c.color, c.partner, c.valency, false});
    }
  }
  std::stable_sort(units.begin(), units.end(), [](const Unit& x, const Unit& y) { return x.valency > y.valency; });

  // Split the tree on the first few units into independent tasks.
  const std::size_t jobs = std::max<std::size_t>(1, options.jobs);
  std::vector<std::vector<int>> prefixes{{}};
  for (std::size_t u = 0; u < units.size() && prefixes.size() < 16 * jobs && u < 4; ++u) {
    std::vector<std::vector<int>> next;
    for (const auto& p : prefixes)
      for (int ch = 0; ch < Searcher::choices(units[u]); ++ch) {
        next.push_back(p);
        next.back().push_back(ch);
      }
    prefixes = std::move(next);
  }

  std::vector<std::vector<SearchHit>> per_task(prefixes.size());
  std::atomic<std::size_t> next_task{0};
  auto worker = [&] {
    Searcher searcher(cfg, units, targets);
    for (std::size_t i = next_task++; i < prefixes.size(); i = next_task++) searcher.run(prefixes[i], per_task[i]);
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (std::size_t j = 0; j < jobs; ++j) threads.emplace_back(worker);
    for (auto& th : threads) th.join();
  }

  std::vector<SearchHit> hits;
  for (auto& v : per_task)
    for (auto& h : v) hits.push_back(std::move(h));
  std::sort(hits.begin(), hits.end(),
            [](const SearchHit& a, const SearchHit& b) { return a.candidate.classes < b.candidate.classes; });
  if (options.all_unions) return hits;

  std::set<ClassSet> seen;
  std::vector<SearchHit> unique;
  for (auto& h : hits) {
    const ClassSet& s = h.candidate.classes;
    const ClassSet c = complement_classes(cfg, s);
    ClassSet key = std::min({s, transpose_image(cfg, s), c, transpose_image(cfg, c)});
    if (seen.insert(std::move(key)).second) unique.push_back(std::move(h));
  }
  return unique;
}

std::string format_hit(const SearchHit& hit) {
  std::string out = hit.params.to_string() + " |";
  for (std::uint32_t c : hit.candidate.classes) out += " " + std::to_string(c);
  out += " | " + std::to_string(hit.params.t) + "+" + std::to_string(hit.params.k - hit.params.t);
  return out;
}

}  // namespace dsrg
