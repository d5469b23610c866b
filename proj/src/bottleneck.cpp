#include "cpv/distances.hpp"

#include "cpv/error.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace cpv {

Scalar bar_match_cost(const Bar& a, const Bar& b) {
  return std::max(endpoint_gap(a.birth, b.birth), endpoint_gap(a.death, b.death));
}

Scalar bar_ersatz_cost(const Bar& a) {
  if (!a.is_finite()) return Scalar::pos_inf();
  return a.length() / Scalar(2);
}

std::vector<Bar> effective_bars(const Barcode& b, const BottleneckOptions& opts) {
  std::vector<Bar> out = b.bars;
  if (opts.truncated_as_infinite) return out;
  for (Bar& bar : out) {
    if (bar.truncated) {
      bar.death = std::max(bar.birth, b.spectrum.hi());
      bar.truncated = false;
    }
  }
  return out;
}

namespace {

/// Hopcroft-Karp on a bipartite graph given by left adjacency lists.
class BipartiteMatcher {
 public:
  BipartiteMatcher(std::size_t n_left, std::size_t n_right)
      : adj_(n_left), match_left_(n_left, kNone), match_right_(n_right, kNone), dist_(n_left) {}

  void add_edge(std::size_t l, std::size_t r) { adj_[l].push_back(r); }

  std::size_t run() {
    std::size_t size = 0;
    while (bfs()) {
      for (std::size_t l = 0; l < adj_.size(); ++l) {
        if (match_left_[l] == kNone && dfs(l)) ++size;
      }
    }
    return size;
  }

  std::size_t partner_of_left(std::size_t l) const { return match_left_[l]; }

  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

 private:
  bool bfs() {
    std::queue<std::size_t> q;
    bool found = false;
    for (std::size_t l = 0; l < adj_.size(); ++l) {
      if (match_left_[l] == kNone) {
        dist_[l] = 0;
        q.push(l);
      } else {
        dist_[l] = kNone;
      }
    }
    while (!q.empty()) {
      const std::size_t l = q.front();
      q.pop();
      for (std::size_t r : adj_[l]) {
        const std::size_t next = match_right_[r];
        if (next == kNone) {
          found = true;
        } else if (dist_[next] == kNone) {
          dist_[next] = dist_[l] + 1;
          q.push(next);
        }
      }
    }
    return found;
  }

  bool dfs(std::size_t l) {
    for (std::size_t r : adj_[l]) {
      const std::size_t next = match_right_[r];
      if (next == kNone || (dist_[next] == dist_[l] + 1 && dfs(next))) {
        match_left_[l] = r;
        match_right_[r] = l;
        return true;
      }
    }
    dist_[l] = kNone;
    return false;
  }

  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> match_left_;
  std::vector<std::size_t> match_right_;
  std::vector<std::size_t> dist_;
};

}  // namespace

bool matching_feasible(const std::vector<Bar>& left, const std::vector<Bar>& right, const Scalar& delta,
                       bool graded, Matching* out) {
  const std::size_t n1 = left.size();
  const std::size_t n2 = right.size();
  // Left side: bars of `left`, then diagonal copies of bars of `right`.
  // Right side: bars of `right`, then diagonal copies of bars of `left`.
  BipartiteMatcher g(n1 + n2, n2 + n1);
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n2; ++j) {
      if (graded && left[i].parity != right[j].parity) continue;
      if (bar_match_cost(left[i], right[j]) <= delta) g.add_edge(i, j);
    }
    if (bar_ersatz_cost(left[i]) <= delta) g.add_edge(i, n2 + i);
  }
  for (std::size_t j = 0; j < n2; ++j) {
    if (bar_ersatz_cost(right[j]) <= delta) g.add_edge(n1 + j, j);
    for (std::size_t i = 0; i < n1; ++i) g.add_edge(n1 + j, n2 + i);
  }
  if (g.run() != n1 + n2) return false;
  if (out != nullptr) {
    out->pairs.clear();
    out->cost = Scalar(0);
    for (std::size_t i = 0; i < n1; ++i) {
      const std::size_t r = g.partner_of_left(i);
      MatchedPair p = r < n2 ? MatchedPair{i, r, bar_match_cost(left[i], right[r])}
                             : MatchedPair{i, std::nullopt, bar_ersatz_cost(left[i])};
      out->cost = std::max(out->cost, p.cost);
      out->pairs.push_back(std::move(p));
    }
    for (std::size_t j = 0; j < n2; ++j) {
      if (g.partner_of_left(n1 + j) == j) {
        MatchedPair p{std::nullopt, j, bar_ersatz_cost(right[j])};
        out->cost = std::max(out->cost, p.cost);
        out->pairs.push_back(std::move(p));
      }
    }
  }
  return true;
}

BottleneckResult bottleneck_distance(const Barcode& b1, const Barcode& b2, const BottleneckOptions& opts) {
  const std::vector<Bar> left = effective_bars(b1, opts);
  const std::vector<Bar> right = effective_bars(b2, opts);

  std::vector<Scalar> candidates{Scalar(0)};
  auto push_finite = [&](const Scalar& s) {
    if (s.is_finite()) candidates.push_back(s);
  };
  for (const Bar& a : left) {
    for (const Bar& b : right) {
      if (a.birth.is_finite() && b.birth.is_finite()) push_finite(abs(a.birth - b.birth));
      if (a.death.is_finite() && b.death.is_finite()) push_finite(abs(a.death - b.death));
    }
  }
  for (const auto* side : {&left, &right}) {
    for (const Bar& a : *side) push_finite(bar_ersatz_cost(a));
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  BottleneckResult result{Scalar::pos_inf(), {}};
  result.matching.cost = Scalar::pos_inf();
  if (!matching_feasible(left, right, candidates.back(), opts.graded)) return result;

  // Smallest feasible candidate; feasibility is monotone in delta.
  std::size_t lo = 0;
  std::size_t hi = candidates.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (matching_feasible(left, right, candidates[mid], opts.graded)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  result.delta = candidates[lo];
  matching_feasible(left, right, result.delta, opts.graded, &result.matching);
  return result;
}

std::vector<std::string> check_matching(const std::vector<Bar>& left, const std::vector<Bar>& right,
                                        const Matching& m, bool graded) {
  std::vector<std::string> problems;
  std::vector<int> seen_left(left.size(), 0);
  std::vector<int> seen_right(right.size(), 0);
  Scalar worst = 0;
  for (const MatchedPair& p : m.pairs) {
    if (!p.left && !p.right) {
      problems.push_back("pair with two ersatz partners");
      continue;
    }
    if ((p.left && *p.left >= left.size()) || (p.right && *p.right >= right.size())) {
      problems.push_back("pair index out of range");
      continue;
    }
    if (p.left) ++seen_left[*p.left];
    if (p.right) ++seen_right[*p.right];
    Scalar cost;
    if (p.left && p.right) {
      if (graded && left[*p.left].parity != right[*p.right].parity) problems.push_back("pair mixes parities");
      cost = bar_match_cost(left[*p.left], right[*p.right]);
    } else {
      cost = bar_ersatz_cost(p.left ? left[*p.left] : right[*p.right]);
    }
    if (!(cost == p.cost)) problems.push_back("stored pair cost " + p.cost.str() + " != " + cost.str());
    worst = std::max(worst, cost);
  }
  for (std::size_t i = 0; i < left.size(); ++i) {
    if (seen_left[i] != 1) problems.push_back("left bar " + std::to_string(i) + " matched " +
                                              std::to_string(seen_left[i]) + " times");
  }
  for (std::size_t j = 0; j < right.size(); ++j) {
    if (seen_right[j] != 1) problems.push_back("right bar " + std::to_string(j) + " matched " +
                                               std::to_string(seen_right[j]) + " times");
  }
  if (!(worst == m.cost)) problems.push_back("matching cost " + m.cost.str() + " != max pair cost " + worst.str());
  return problems;
}

}  // namespace cpv
