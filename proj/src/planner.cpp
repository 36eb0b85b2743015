#include "lexiplan/planner.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <unordered_set>

namespace lexiplan {

std::string Plan::text() const {
  std::string out;
  for (const GroundAction& a : actions) {
    out += a.text();
    out += '\n';
  }
  return out;
}

namespace {

struct Node {
  State state;
  std::vector<MonitorState> monitors;
  std::int64_t parent = -1;
  std::int32_t action = -1;

  std::size_t key_hash() const {
    std::size_t h = state.hash();
    for (const MonitorState& m : monitors) h = h * 1099511628211ULL + m.hash();
    return h;
  }
  bool same_key(const Node& o) const {
    return state == o.state && monitors == o.monitors;
  }
};

bool any_dead(const std::vector<MonitorState>& ms) {
  return std::any_of(ms.begin(), ms.end(),
                     [](const MonitorState& m) { return m.dead(); });
}

bool goal_reached(const GroundProblem& p, const Node& n) {
  if (!holds(n.state, p.goal)) return false;
  return std::all_of(n.monitors.begin(), n.monitors.end(),
                     [](const MonitorState& m) { return accepting(m); });
}

}  // namespace

OptimalResult solve_optimal(const GroundProblem& p, const SearchLimits& limits) {
  auto start = std::chrono::steady_clock::now();
  OptimalResult res;

  std::vector<Node> nodes;
  Node root;
  root.state = p.init;
  for (const TrajectoryConstraint& q : p.constraints)
    root.monitors.push_back(init_monitor(q, p.init));
  if (any_dead(root.monitors)) {
    res.status = SolveStatus::Infeasible;
    return res;
  }
  nodes.push_back(std::move(root));

  struct KeyRef {
    const std::vector<Node>* nodes;
    std::size_t idx;
  };
  struct KeyHash {
    std::size_t operator()(const KeyRef& k) const {
      return (*k.nodes)[k.idx].key_hash();
    }
  };
  struct KeyEq {
    bool operator()(const KeyRef& a, const KeyRef& b) const {
      return (*a.nodes)[a.idx].same_key((*b.nodes)[b.idx]);
    }
  };
  std::unordered_set<KeyRef, KeyHash, KeyEq> seen;
  seen.insert({&nodes, 0});

  std::deque<std::size_t> frontier{0};
  while (!frontier.empty()) {
    std::size_t cur = frontier.front();
    frontier.pop_front();

    if (goal_reached(p, nodes[cur])) {
      res.status = SolveStatus::Solved;
      std::vector<GroundAction> actions;
      for (std::int64_t i = static_cast<std::int64_t>(cur);
           nodes[i].parent >= 0; i = nodes[i].parent)
        actions.push_back(p.actions[nodes[i].action]);
      std::reverse(actions.begin(), actions.end());
      res.plan.actions = std::move(actions);
      res.cost = res.plan.cost();
      return res;
    }

    ++res.expanded;
    if (res.expanded > limits.max_nodes) {
      res.status = SolveStatus::LimitExceeded;
      return res;
    }
    if ((res.expanded & 0x3ff) == 0) {
      double secs = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - start)
                        .count();
      if (secs > limits.max_seconds) {
        res.status = SolveStatus::LimitExceeded;
        return res;
      }
    }

    for (std::int32_t ai = 0; ai < static_cast<std::int32_t>(p.actions.size());
         ++ai) {
      const GroundAction& a = p.actions[ai];
      if (!applicable(nodes[cur].state, a)) continue;
      Node succ;
      succ.state = apply(nodes[cur].state, a);
      succ.monitors.reserve(nodes[cur].monitors.size());
      for (std::size_t qi = 0; qi < p.constraints.size(); ++qi)
        succ.monitors.push_back(
            step_monitor(p.constraints[qi], nodes[cur].monitors[qi],
                         succ.state));
      if (any_dead(succ.monitors)) continue;
      succ.parent = static_cast<std::int64_t>(cur);
      succ.action = ai;
      nodes.push_back(std::move(succ));
      KeyRef ref{&nodes, nodes.size() - 1};
      if (!seen.insert(ref).second) {
        nodes.pop_back();
        continue;
      }
      frontier.push_back(nodes.size() - 1);
    }
  }
  res.status = SolveStatus::Infeasible;
  return res;
}

SimulationResult simulate(const GroundProblem& p, const Plan& plan) {
  SimulationResult res;
  State s = p.init;
  res.trace.states.push_back(s);
  for (const TrajectoryConstraint& q : p.constraints)
    res.monitors.push_back(init_monitor(q, s));

  auto violated_index = [&]() -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < res.monitors.size(); ++i)
      if (res.monitors[i].dead()) return i;
    return std::nullopt;
  };
  if (auto v = violated_index()) {
    res.failure = StepFailure{0, StepFailure::Kind::ConstraintViolated, *v};
    return res;
  }

  for (std::size_t i = 0; i < plan.actions.size(); ++i) {
    const GroundAction& a = plan.actions[i];
    if (!applicable(s, a)) {
      res.failure = StepFailure{i, StepFailure::Kind::Precondition, 0};
      return res;
    }
    s = apply(s, a);
    res.trace.states.push_back(s);
    for (std::size_t qi = 0; qi < p.constraints.size(); ++qi)
      res.monitors[qi] = step_monitor(p.constraints[qi], res.monitors[qi], s);
    if (auto v = violated_index()) {
      res.failure = StepFailure{i, StepFailure::Kind::ConstraintViolated, *v};
      return res;
    }
  }
  return res;
}

}  // namespace lexiplan
