#include "lexiplan/generator.hpp"

#include <algorithm>
#include <sstream>

namespace lexiplan {

namespace {

// VocabularyTooLarge collapses to "not entailed": filters and compatibility
// then err on the permissive side and the feasibility loop backstops.
bool entails_safe(const AxiomSet& d, const Formula& f) {
  try {
    return entails(d, f);
  } catch (const VocabularyTooLarge&) {
    return false;
  }
}

bool implies_under(const AxiomSet& d, const Formula& a, const Formula& b) {
  return entails_safe(d, Formula::implies(a, b));
}

bool inconsistent_under(const AxiomSet& d, const Formula& a, const Formula& b) {
  return entails_safe(d, Formula::negate(Formula::conj({a, b})));
}

bool equivalent_under(const AxiomSet& d, const Formula& a, const Formula& b) {
  return implies_under(d, a, b) && implies_under(d, b, a);
}

bool holds_somewhere(const Trace& sigma, const Formula& f) {
  for (const State& s : sigma.states)
    if (holds(s, f)) return true;
  return false;
}

bool holds_everywhere(const Trace& sigma, const Formula& f) {
  for (const State& s : sigma.states)
    if (!holds(s, f)) return false;
  return true;
}

// True when some action can make the literal true: positive literals need an
// add occurrence, negative ones a delete occurrence.
bool forceable(const Literal& l, const GroundProblem& p) {
  for (const GroundAction& a : p.actions)
    for (const ConditionalEffect& e : a.effects) {
      const std::vector<AtomId>& side = l.positive ? e.adds : e.deletes;
      if (std::find(side.begin(), side.end(), l.atom) != side.end())
        return true;
    }
  return false;
}

}  // namespace

void GenConfig::validate() const {
  if (constraint_count < 0)
    throw std::invalid_argument("constraint_count must be >= 0");
  auto check_weights = [](const std::vector<double>& w, std::size_t n,
                          const char* what) {
    if (w.size() != n)
      throw std::invalid_argument(std::string(what) + " must have " +
                                  std::to_string(n) + " entries");
    bool positive = false;
    for (double x : w) {
      if (x < 0)
        throw std::invalid_argument(std::string(what) +
                                    " must be nonnegative");
      positive = positive || x > 0;
    }
    if (!positive)
      throw std::invalid_argument(std::string(what) +
                                  " needs a positive entry");
  };
  check_weights(type_weights, 5, "type_weights");
  check_weights(op_weights, 2, "op_weights");
  if (literal_count_min < 1 || literal_count_max > 4 ||
      literal_count_min > literal_count_max)
    throw std::invalid_argument("literal count range must lie within [1, 4]");
  if (max_attempts_per_constraint < 1 || max_attempts_per_problem < 1)
    throw std::invalid_argument("attempt limits must be positive");
}

namespace {

std::vector<double> parse_weights(const std::string& s) {
  std::vector<double> out;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) out.push_back(std::stod(tok));
  return out;
}

std::string emit_weights(const std::vector<double>& w) {
  std::ostringstream out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out << ',';
    out << w[i];
  }
  return out.str();
}

}  // namespace

GenConfig GenConfig::parse(const std::string& kv_text) {
  GenConfig cfg;
  std::istringstream in(kv_text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) continue;
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    if (key == "constraint_count")
      cfg.constraint_count = std::stoi(value);
    else if (key == "type_weights")
      cfg.type_weights = parse_weights(value);
    else if (key == "op_weights")
      cfg.op_weights = parse_weights(value);
    else if (key == "literal_count_min")
      cfg.literal_count_min = std::stoi(value);
    else if (key == "literal_count_max")
      cfg.literal_count_max = std::stoi(value);
    else if (key == "max_attempts_per_constraint")
      cfg.max_attempts_per_constraint = std::stoi(value);
    else if (key == "max_attempts_per_problem")
      cfg.max_attempts_per_problem = std::stoi(value);
    else if (key == "strict_cost_increase")
      cfg.strict_cost_increase = value == "1" || value == "true";
    else if (key == "rng_seed")
      cfg.rng_seed = std::stoull(value);
  }
  cfg.validate();
  return cfg;
}

std::string GenConfig::emit() const {
  std::ostringstream out;
  out << "constraint_count=" << constraint_count << '\n'
      << "type_weights=" << emit_weights(type_weights) << '\n'
      << "op_weights=" << emit_weights(op_weights) << '\n'
      << "literal_count_min=" << literal_count_min << '\n'
      << "literal_count_max=" << literal_count_max << '\n'
      << "max_attempts_per_constraint=" << max_attempts_per_constraint << '\n'
      << "max_attempts_per_problem=" << max_attempts_per_problem << '\n'
      << "strict_cost_increase=" << (strict_cost_increase ? 1 : 0) << '\n'
      << "rng_seed=" << rng_seed << '\n';
  return out.str();
}

bool literal_suitable(const Literal& l, ConstraintType ctype,
                      const GroundProblem& p, const Trace& sigma, BoolOp op,
                      const std::vector<Literal>& chosen, const AxiomSet& d) {
  for (const Literal& c : chosen)
    if (c.atom == l.atom) return false;

  Formula f = l.formula();
  switch (ctype) {
    case ConstraintType::Always:
      // must hold at s0, must fail somewhere along sigma, must not settle
      // the goal either way
      if (!holds(sigma.states.front(), f)) return false;
      if (holds_everywhere(sigma, f)) return false;
      if (implies_under(d, f, p.goal)) return false;
      if (implies_under(d, p.goal, Formula::negate(f))) return false;
      if (op == BoolOp::And)
        for (const Literal& c : chosen)
          if (inconsistent_under(d, f, c.formula())) return false;
      return true;

    case ConstraintType::Sometime:
      // trivially satisfied when already true somewhere along sigma or
      // forced by the goal; unforceable literals are hopeless
      if (holds_somewhere(sigma, f)) return false;
      if (implies_under(d, p.goal, f)) return false;
      if (!forceable(l, p)) return false;
      if (op == BoolOp::And)
        for (const Literal& c : chosen)
          if (inconsistent_under(d, f, c.formula())) return false;
      return true;

    case ConstraintType::AtMostOnce:
      // needs a literal the plan can toggle: true somewhere (or forceable)
      // but not constantly true
      if (holds_everywhere(sigma, f)) return false;
      if (!holds_somewhere(sigma, f) && !forceable(l, p)) return false;
      if (op == BoolOp::And)
        for (const Literal& c : chosen)
          if (inconsistent_under(d, f, c.formula())) return false;
      return true;

    case ConstraintType::SometimeBefore:
    case ConstraintType::SometimeAfter:
      // binary types pick their single literals in generate_constraint,
      // which checks the pair jointly; here only basic sanity
      return true;
  }
  return true;
}

namespace {

// Completion of the compatibility matrix. The Always row follows the
// published rules; remaining cells are the symmetric closure of the same
// redundancy/unsatisfiability conditions, with same-type duplicates rejected
// by formula equivalence.
bool pair_incompatible(const TrajectoryConstraint& a,
                       const TrajectoryConstraint& b, const AxiomSet& d) {
  // normalize so an Always (if any) sits on the left
  if (b.type() == ConstraintType::Always && a.type() != ConstraintType::Always)
    return pair_incompatible(b, a, d);

  if (a.type() == ConstraintType::Always) {
    const Formula& f = a.phi();
    switch (b.type()) {
      case ConstraintType::Always:
        // one subsumes the other, or they cannot hold together
        return implies_under(d, f, b.phi()) || implies_under(d, b.phi(), f) ||
               inconsistent_under(d, f, b.phi());
      case ConstraintType::Sometime:
        // Always(f) makes Sometime(phi') redundant or unsatisfiable
        return implies_under(d, f, b.phi()) ||
               inconsistent_under(d, f, b.phi());
      case ConstraintType::AtMostOnce:
        // constant truth trivializes the interval count; constant falsity
        // trivially satisfies it
        return implies_under(d, f, b.phi()) ||
               inconsistent_under(d, f, b.phi());
      case ConstraintType::SometimeBefore:
        // phi' always true leaves no room for a strictly-earlier psi';
        // psi' impossible makes any phi' occurrence fatal
        return implies_under(d, f, b.phi()) ||
               implies_under(d, f, b.psi()) ||
               inconsistent_under(d, f, b.phi()) ||
               inconsistent_under(d, f, b.psi());
      case ConstraintType::SometimeAfter:
        // psi' always true trivializes it; phi' impossible trivializes it;
        // psi' impossible makes any phi' occurrence fatal
        return implies_under(d, f, b.psi()) ||
               inconsistent_under(d, f, b.phi()) ||
               inconsistent_under(d, f, b.psi());
    }
  }

  if (a.type() == b.type()) {
    switch (a.type()) {
      case ConstraintType::Sometime:
        // either direction of implication makes one redundant
        return implies_under(d, a.phi(), b.phi()) ||
               implies_under(d, b.phi(), a.phi());
      case ConstraintType::AtMostOnce:
        return equivalent_under(d, a.phi(), b.phi());
      case ConstraintType::SometimeBefore:
      case ConstraintType::SometimeAfter:
        return equivalent_under(d, a.phi(), b.phi()) &&
               equivalent_under(d, a.psi(), b.psi());
      default:
        break;
    }
  }
  // remaining cross-type cells restrict different aspects of the trajectory
  return false;
}

}  // namespace

bool compatible(const TrajectoryConstraint& q,
                const std::vector<TrajectoryConstraint>& c, const AxiomSet& d) {
  for (const TrajectoryConstraint& prev : c)
    if (pair_incompatible(q, prev, d)) return false;
  return true;
}

namespace {

struct LiteralPool {
  std::vector<Literal> all;  // both polarities over F

  explicit LiteralPool(const GroundProblem& p) {
    for (AtomId id = 0; id < p.atoms.size(); ++id) {
      all.push_back({id, true});
      all.push_back({id, false});
    }
  }
};

// Negative Sometime/AtMostOnce targets must be falsifiable in the first
// place, i.e. the atom has to occur in some delete list.
bool polarity_allowed(const Literal& l, ConstraintType ctype,
                      const GroundProblem& p) {
  if (l.positive) return true;
  if (ctype != ConstraintType::Sometime && ctype != ConstraintType::AtMostOnce)
    return true;
  for (const GroundAction& a : p.actions)
    for (const ConditionalEffect& e : a.effects)
      if (std::find(e.deletes.begin(), e.deletes.end(), l.atom) !=
          e.deletes.end())
        return true;
  return false;
}

std::size_t first_true_step(const Trace& sigma, const Formula& f) {
  for (std::size_t i = 0; i < sigma.states.size(); ++i)
    if (holds(sigma.states[i], f)) return i;
  return sigma.states.size();
}

std::size_t last_true_step(const Trace& sigma, const Formula& f) {
  for (std::size_t i = sigma.states.size(); i > 0; --i)
    if (holds(sigma.states[i - 1], f)) return i - 1;
  return sigma.states.size();
}

}  // namespace

TrajectoryConstraint generate_constraint(
    ConstraintType ctype, const GroundProblem& p, const Plan& pi_star,
    const Trace& sigma, const std::vector<TrajectoryConstraint>& c,
    const AxiomSet& d, const GenConfig& cfg, Rng& rng) {
  (void)pi_star;
  LiteralPool pool(p);
  if (pool.all.empty()) throw GenerationExhausted("empty atom universe");

  for (int attempt = 0; attempt < cfg.max_attempts_per_constraint; ++attempt) {
    BoolOp op = rng.weighted(cfg.op_weights) == 0 ? BoolOp::And : BoolOp::Or;

    std::optional<TrajectoryConstraint> q;
    if (ctype == ConstraintType::SometimeBefore ||
        ctype == ConstraintType::SometimeAfter) {
      Literal lphi = pool.all[rng.below(pool.all.size())];
      Formula phi = lphi.formula();
      std::size_t t = ctype == ConstraintType::SometimeBefore
                          ? first_true_step(sigma, phi)
                          : last_true_step(sigma, phi);
      if (t >= sigma.states.size()) continue;  // phi never true along sigma

      Literal lpsi = pool.all[rng.below(pool.all.size())];
      if (lpsi.atom == lphi.atom) continue;
      Formula psi = lpsi.formula();
      if (implies_under(d, phi, psi)) continue;
      if (inconsistent_under(d, phi, psi)) continue;

      if (ctype == ConstraintType::SometimeBefore) {
        bool clean = true;
        for (std::size_t i = 0; i <= t && clean; ++i)
          clean = !holds(sigma.states[i], psi);
        if (!clean) continue;
        bool witnessed = false;  // psi reachable: later in sigma or forceable
        for (std::size_t i = t + 1; i < sigma.states.size(); ++i)
          witnessed = witnessed || holds(sigma.states[i], psi);
        if (!witnessed && !forceable(lpsi, p)) continue;
        q = TrajectoryConstraint::sometime_before(phi, psi);
      } else {
        bool clean = true;
        for (std::size_t i = t; i < sigma.states.size() && clean; ++i)
          clean = !holds(sigma.states[i], psi);
        if (!clean) continue;
        bool witnessed = false;
        for (std::size_t i = 0; i < t; ++i)
          witnessed = witnessed || holds(sigma.states[i], psi);
        if (!witnessed && !forceable(lpsi, p)) continue;
        q = TrajectoryConstraint::sometime_after(phi, psi);
      }
    } else {
      int l_no = rng.range(cfg.literal_count_min, cfg.literal_count_max);
      std::vector<Literal> chosen;
      for (int i = 0; i < l_no; ++i) {
        bool found = false;
        for (int tries = 0; tries < 64 && !found; ++tries) {
          Literal cand = pool.all[rng.below(pool.all.size())];
          if (!polarity_allowed(cand, ctype, p)) continue;
          if (!literal_suitable(cand, ctype, p, sigma, op, chosen, d))
            continue;
          chosen.push_back(cand);
          found = true;
        }
        if (!found) break;
      }
      if (static_cast<int>(chosen.size()) != l_no) continue;
      std::vector<Formula> parts;
      for (const Literal& l : chosen) parts.push_back(l.formula());
      Formula phi =
          op == BoolOp::And ? Formula::conj(parts) : Formula::disj(parts);
      switch (ctype) {
        case ConstraintType::Always:
          q = TrajectoryConstraint::always(phi);
          break;
        case ConstraintType::Sometime:
          q = TrajectoryConstraint::sometime(phi);
          break;
        case ConstraintType::AtMostOnce:
          q = TrajectoryConstraint::at_most_once(phi);
          break;
        default:
          break;
      }
    }
    if (!q) continue;
    if (check_sequence(*q, sigma.states)) continue;  // no complication
    if (!compatible(*q, c, d)) continue;
    return *q;
  }
  throw GenerationExhausted("no admissible constraint of type " +
                            std::string(constraint_type_token(ctype)));
}

ProblemBundle constrain_problem(const GroundProblem& base, const AxiomSet& d,
                                const GenConfig& cfg,
                                const SearchLimits& limits) {
  cfg.validate();
  if (!base.constraints.empty())
    throw std::invalid_argument("base problem must be unconstrained");

  OptimalResult base_result = solve_optimal(base, limits);
  if (base_result.status == SolveStatus::LimitExceeded)
    throw GenerationExhausted("base problem exceeded search limits");
  if (base_result.status != SolveStatus::Solved)
    throw GenerationExhausted("base problem is unsolvable");

  ProblemBundle bundle;
  bundle.base = base;
  bundle.unconstrained_cost = base_result.cost;
  bundle.unconstrained_plan = base_result.plan;
  bundle.seed = cfg.rng_seed;
  bundle.config = cfg;

  SimulationResult sim = simulate(base, base_result.plan);
  const Trace& sigma = sim.trace;

  Rng rng(cfg.rng_seed);
  std::vector<TrajectoryConstraint> accepted;
  int constrained_cost = base_result.cost;
  GroundProblem constrained = base;

  int failures = 0;
  int budget = cfg.max_attempts_per_problem *
               std::max(1, cfg.constraint_count);
  while (static_cast<int>(accepted.size()) < cfg.constraint_count ||
         (cfg.strict_cost_increase && cfg.constraint_count > 0 &&
          constrained_cost <= base_result.cost)) {
    if (static_cast<int>(accepted.size()) == cfg.constraint_count) {
      // full set accepted but cost not raised: swap out the latest
      accepted.pop_back();
      if (++failures > budget)
        throw GenerationExhausted("could not raise the optimal cost");
    }
    ConstraintType ctype =
        static_cast<ConstraintType>(rng.weighted(cfg.type_weights));
    std::optional<TrajectoryConstraint> q;
    try {
      q = generate_constraint(ctype, base, base_result.plan, sigma, accepted,
                              d, cfg, rng);
    } catch (const GenerationExhausted&) {
      // fall back to a freshly sampled type next round
      if (++failures > budget) throw;
      continue;
    }

    accepted.push_back(*q);
    constrained.constraints = accepted;
    OptimalResult r = solve_optimal(constrained, limits);
    if (r.status != SolveStatus::Solved) {
      accepted.pop_back();
      if (++failures > budget)
        throw GenerationExhausted("feasibility loop exhausted");
      continue;
    }
    constrained_cost = r.cost;
  }

  constrained.constraints = accepted;
  bundle.constrained = constrained;
  bundle.constrained_cost = constrained_cost;
  return bundle;
}

}  // namespace lexiplan
