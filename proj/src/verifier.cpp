#include "lexiplan/verifier.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace lexiplan {

int edit_distance(const std::string& a, const std::string& b) {
  std::vector<int> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = static_cast<int>(j);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = static_cast<int>(i);
    for (std::size_t j = 1; j <= b.size(); ++j) {
      int sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

namespace {

// Lowercase, punctuation to spaces, whitespace collapsed, surrounding
// parentheses dropped.
std::string normalize_line(const std::string& line) {
  std::string s;
  for (char c : line) {
    unsigned char u = static_cast<unsigned char>(c);
    if (std::isalnum(u) || c == '_' || c == '-')
      s += static_cast<char>(std::tolower(u));
    else
      s += ' ';
  }
  std::string out;
  bool space = true;
  for (char c : s) {
    if (c == ' ') {
      if (!space) out += ' ';
      space = true;
    } else {
      out += c;
      space = false;
    }
  }
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

// Drops prose artifacts: markdown fences, list numbering and bullets.
std::string strip_decorations(std::string line) {
  std::size_t begin = line.find_first_not_of(" \t");
  if (begin == std::string::npos) return "";
  line = line.substr(begin);
  if (line.rfind("```", 0) == 0) return "";
  // "1." / "12)" numbering
  std::size_t i = 0;
  while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i])))
    ++i;
  if (i > 0 && i < line.size() && (line[i] == '.' || line[i] == ')'))
    line = line.substr(i + 1);
  else if (line.size() >= 2 && (line[0] == '-' || line[0] == '*') &&
           line[1] == ' ')
    line = line.substr(2);
  return line;
}

}  // namespace

std::vector<MappedLine> parse_plan(const std::string& text,
                                   const GroundProblem& p) {
  std::vector<MappedLine> out;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    std::string stripped = strip_decorations(raw);
    std::string norm = normalize_line(stripped);
    if (norm.empty()) continue;
    MappedLine m;
    m.raw = raw;
    m.normalized = norm;
    int best = -1;
    // actions are pre-sorted by canonical text, so the first strict
    // improvement is also the lexicographic tie-break winner
    for (std::size_t i = 0; i < p.actions.size(); ++i) {
      int d = edit_distance(norm, p.actions[i].text());
      if (best < 0 || d < best) {
        best = d;
        m.action_index = static_cast<int>(i);
        m.distance = d;
        if (d == 0) break;
      }
    }
    m.exact = best == 0;
    int cap = std::max(3, static_cast<int>(0.4 * norm.size()));
    if (best < 0 || best > cap) {
      m.action_index = -1;
    }
    out.push_back(std::move(m));
  }
  return out;
}

Verdict verify(const std::string& plan_text, const GroundProblem& constrained,
               int optimal_cost) {
  Verdict v;
  std::vector<MappedLine> lines = parse_plan(plan_text, constrained);
  v.length = static_cast<int>(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].action_index < 0) {
      v.kind = Verdict::Kind::Invalid;
      v.reason = Verdict::Reason::UnmappableAction;
      v.step = i;
      return v;
    }
  }
  Plan plan;
  for (const MappedLine& m : lines)
    plan.actions.push_back(constrained.actions[m.action_index]);

  SimulationResult sim = simulate(constrained, plan);
  if (!sim.ok()) {
    v.kind = Verdict::Kind::Invalid;
    v.step = sim.failure->index;
    if (sim.failure->kind == StepFailure::Kind::Precondition) {
      v.reason = Verdict::Reason::FailedPrecondition;
    } else {
      v.reason = Verdict::Reason::ConstraintViolated;
      v.constraint_index = sim.failure->constraint_index;
    }
    return v;
  }
  if (!holds(sim.trace.states.back(), constrained.goal)) {
    v.kind = Verdict::Kind::Invalid;
    v.reason = plan.actions.empty() && lines.empty()
                   ? Verdict::Reason::NoPlan
                   : Verdict::Reason::GoalNotReached;
    v.step = plan.actions.size();
    return v;
  }
  for (std::size_t qi = 0; qi < sim.monitors.size(); ++qi) {
    if (!accepting(sim.monitors[qi])) {
      v.kind = Verdict::Kind::Invalid;
      v.reason = Verdict::Reason::ConstraintViolated;
      v.constraint_index = qi;
      v.step = plan.actions.size();
      return v;
    }
  }
  if (plan.cost() < optimal_cost)
    throw std::logic_error(
        "verifier found a valid plan shorter than the recorded optimal cost");
  v.kind = plan.cost() > optimal_cost ? Verdict::Kind::Suboptimal
                                      : Verdict::Kind::Optimal;
  v.reason = Verdict::Reason::None;
  return v;
}

const char* reason_code(Verdict::Reason r) {
  switch (r) {
    case Verdict::Reason::None:
      return "none";
    case Verdict::Reason::FailedPrecondition:
      return "failed_precondition";
    case Verdict::Reason::ConstraintViolated:
      return "constraint_violated";
    case Verdict::Reason::GoalNotReached:
      return "goal_not_reached";
    case Verdict::Reason::UnmappableAction:
      return "unmappable_action";
    case Verdict::Reason::NoPlan:
      return "no_plan";
  }
  return "none";
}

std::string verdict_line(const Verdict& v, int optimal_cost) {
  std::string kind = v.kind == Verdict::Kind::Optimal     ? "optimal"
                     : v.kind == Verdict::Kind::Suboptimal ? "suboptimal"
                                                           : "invalid";
  return "verdict=" + kind + " length=" + std::to_string(v.length) +
         " cost=" + std::to_string(optimal_cost) +
         " reason=" + reason_code(v.reason);
}

}  // namespace lexiplan
