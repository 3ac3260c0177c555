#ifndef POLYCUT_SRC_FLOW_NETWORK_HPP
#define POLYCUT_SRC_FLOW_NETWORK_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <queue>
#include <vector>

namespace polycut::detail {

// Dinic max flow on small integer capacities. Paired arcs are stored next to
// each other so arc ^ 1 is the reverse.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t nodes) : first_(nodes, kNone), level_(nodes), cursor_(nodes) {}

  void add_arc_pair(std::size_t u, std::size_t v, int cap_uv, int cap_vu) {
    arcs_.push_back({v, cap_uv, first_[u]});
    first_[u] = arcs_.size() - 1;
    arcs_.push_back({u, cap_vu, first_[v]});
    first_[v] = arcs_.size() - 1;
  }

  /// Augments until no path remains or the flow exceeds `limit`.
  std::size_t max_flow(std::size_t s, std::size_t t,
                       std::size_t limit = std::numeric_limits<std::size_t>::max()) {
    std::size_t flow = 0;
    while (flow <= limit && build_levels(s, t)) {
      cursor_ = first_;
      while (flow <= limit) {
        const int pushed = augment(s, t, std::numeric_limits<int>::max());
        if (pushed == 0) break;
        flow += static_cast<std::size_t>(pushed);
      }
    }
    return flow;
  }

  /// Nodes reachable from s through arcs with residual capacity.
  std::vector<bool> residual_reachable(std::size_t s) const {
    std::vector<bool> seen(first_.size(), false);
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t a = first_[u]; a != kNone; a = arcs_[a].next) {
        if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
          seen[arcs_[a].to] = true;
          stack.push_back(arcs_[a].to);
        }
      }
    }
    return seen;
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  struct Arc {
    std::size_t to;
    int cap;
    std::size_t next;
  };

  bool build_levels(std::size_t s, std::size_t t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::size_t> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      for (std::size_t a = first_[u]; a != kNone; a = arcs_[a].next) {
        if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[u] + 1;
          q.push(arcs_[a].to);
        }
      }
    }
    return level_[t] >= 0;
  }

  int augment(std::size_t u, std::size_t t, int pushed) {
    if (u == t) return pushed;
    for (std::size_t& a = cursor_[u]; a != kNone; a = arcs_[a].next) {
      Arc& arc = arcs_[a];
      if (arc.cap <= 0 || level_[arc.to] != level_[u] + 1) continue;
      const int got = augment(arc.to, t, std::min(pushed, arc.cap));
      if (got > 0) {
        arc.cap -= got;
        arcs_[a ^ 1].cap += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<std::size_t> first_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
};

}  // namespace polycut::detail

#endif  // POLYCUT_SRC_FLOW_NETWORK_HPP
