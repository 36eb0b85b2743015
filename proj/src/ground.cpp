#include "lexiplan/ground.hpp"

#include <algorithm>
#include <map>

namespace lexiplan {

using pddl::EffectNode;
using pddl::LiftedFormula;
using pddl::Term;
using pddl::TypedName;

Grounder::Grounder(const pddl::LiftedDomain& domain,
                   const pddl::LiftedProblem& problem)
    : domain_(domain), problem_(problem) {
  objects_ = domain.constants;
  objects_.insert(objects_.end(), problem.objects.begin(),
                  problem.objects.end());

  // F: every type-consistent instantiation, in predicate then object
  // declaration order.
  for (const pddl::Predicate& p : domain_.predicates) {
    std::vector<std::vector<std::string>> columns;
    for (const TypedName& param : p.params)
      columns.push_back(objects_of_type(param.type));
    std::vector<std::size_t> idx(columns.size(), 0);
    bool overflow = std::any_of(columns.begin(), columns.end(),
                                [](const auto& c) { return c.empty(); });
    while (!overflow) {
      GroundAtom a;
      a.predicate = p.name;
      for (std::size_t i = 0; i < columns.size(); ++i)
        a.args.push_back(columns[i][idx[i]]);
      atom_ids_.emplace(a.text(), static_cast<AtomId>(atoms_.size()));
      atoms_.push_back(std::move(a));
      std::size_t i = columns.size();
      while (i > 0) {
        --i;
        if (++idx[i] < columns[i].size()) break;
        idx[i] = 0;
        if (i == 0) overflow = true;
      }
      if (columns.empty()) break;
    }
  }
}

std::vector<std::string> Grounder::objects_of_type(
    const std::string& type) const {
  std::vector<std::string> out;
  for (const TypedName& o : objects_)
    if (domain_.type_compatible(o.type, type)) out.push_back(o.name);
  return out;
}

AtomId Grounder::resolve_atom(const std::string& predicate,
                              const std::vector<Term>& terms,
                              const Env& env) const {
  GroundAtom a;
  a.predicate = predicate;
  for (const Term& t : terms) {
    if (t.is_variable) {
      auto it = env.find(t.name);
      if (it == env.end())
        throw GroundingError("unbound variable ?" + t.name);
      a.args.push_back(it->second);
    } else {
      a.args.push_back(t.name);
    }
  }
  auto it = atom_ids_.find(a.text());
  if (it == atom_ids_.end())
    throw GroundingError("atom outside the typed universe: " + a.text());
  return it->second;
}

Formula Grounder::ground_rec(const LiftedFormula& f, Env& env) const {
  switch (f.kind) {
    case LiftedFormula::Kind::True:
      return Formula::truth();
    case LiftedFormula::Kind::False:
      return Formula::falsity();
    case LiftedFormula::Kind::Atom:
      return Formula::atom(resolve_atom(f.predicate, f.terms, env));
    case LiftedFormula::Kind::Equals: {
      auto value = [&](const Term& t) {
        if (!t.is_variable) return t.name;
        auto it = env.find(t.name);
        if (it == env.end()) throw GroundingError("unbound variable ?" + t.name);
        return it->second;
      };
      return value(f.terms[0]) == value(f.terms[1]) ? Formula::truth()
                                                    : Formula::falsity();
    }
    case LiftedFormula::Kind::Not: {
      Formula c = ground_rec(f.children[0], env);
      if (c.kind() == Formula::Kind::True) return Formula::falsity();
      if (c.kind() == Formula::Kind::False) return Formula::truth();
      return Formula::negate(std::move(c));
    }
    case LiftedFormula::Kind::And:
    case LiftedFormula::Kind::Or: {
      bool is_and = f.kind == LiftedFormula::Kind::And;
      std::vector<Formula> cs;
      for (const LiftedFormula& c : f.children) {
        Formula g = ground_rec(c, env);
        if (g.kind() == Formula::Kind::True) {
          if (!is_and) return Formula::truth();
          continue;
        }
        if (g.kind() == Formula::Kind::False) {
          if (is_and) return Formula::falsity();
          continue;
        }
        cs.push_back(std::move(g));
      }
      if (cs.empty()) return is_and ? Formula::truth() : Formula::falsity();
      if (cs.size() == 1) return cs[0];
      return is_and ? Formula::conj(std::move(cs))
                    : Formula::disj(std::move(cs));
    }
    case LiftedFormula::Kind::Exists:
    case LiftedFormula::Kind::Forall: {
      bool is_exists = f.kind == LiftedFormula::Kind::Exists;
      // Expand one bound variable at a time.
      std::vector<Formula> branches;
      std::vector<std::vector<std::string>> columns;
      for (const TypedName& p : f.params)
        columns.push_back(objects_of_type(p.type));
      std::vector<std::size_t> idx(columns.size(), 0);
      bool empty_domain = std::any_of(columns.begin(), columns.end(),
                                      [](const auto& c) { return c.empty(); });
      if (empty_domain)
        return is_exists ? Formula::falsity() : Formula::truth();
      bool done = false;
      while (!done) {
        for (std::size_t i = 0; i < f.params.size(); ++i)
          env[f.params[i].name] = columns[i][idx[i]];
        branches.push_back(ground_rec(f.children[0], env));
        done = true;
        std::size_t i = columns.size();
        while (i > 0) {
          --i;
          if (++idx[i] < columns[i].size()) {
            done = false;
            break;
          }
          idx[i] = 0;
        }
        if (columns.empty()) done = true;
      }
      for (const TypedName& p : f.params) env.erase(p.name);
      LiftedFormula::Kind fold =
          is_exists ? LiftedFormula::Kind::Or : LiftedFormula::Kind::And;
      // reuse the And/Or constant folding
      std::vector<Formula> cs;
      for (Formula& b : branches) {
        if (b.kind() == Formula::Kind::True) {
          if (is_exists) return Formula::truth();
          continue;
        }
        if (b.kind() == Formula::Kind::False) {
          if (!is_exists) return Formula::falsity();
          continue;
        }
        cs.push_back(std::move(b));
      }
      (void)fold;
      if (cs.empty()) return is_exists ? Formula::falsity() : Formula::truth();
      if (cs.size() == 1) return cs[0];
      return is_exists ? Formula::disj(std::move(cs))
                       : Formula::conj(std::move(cs));
    }
  }
  return Formula::truth();
}

Formula Grounder::ground_formula(const LiftedFormula& f) const {
  Env env;
  return ground_rec(f, env);
}

TrajectoryConstraint Grounder::ground_constraint(
    const pddl::SurfaceConstraint& c) const {
  switch (c.type) {
    case ConstraintType::Always:
      return TrajectoryConstraint::always(ground_formula(c.first));
    case ConstraintType::Sometime:
      return TrajectoryConstraint::sometime(ground_formula(c.first));
    case ConstraintType::AtMostOnce:
      return TrajectoryConstraint::at_most_once(ground_formula(c.first));
    case ConstraintType::SometimeBefore:
      return TrajectoryConstraint::sometime_before(ground_formula(c.first),
                                                   ground_formula(c.second));
    case ConstraintType::SometimeAfter:
      return TrajectoryConstraint::sometime_after(ground_formula(c.first),
                                                  ground_formula(c.second));
  }
  throw GroundingError("unknown constraint type");
}

AxiomSet Grounder::ground_axioms(
    const std::vector<LiftedFormula>& axioms) const {
  AxiomSet d;
  for (const LiftedFormula& f : axioms) {
    Formula g = ground_formula(f);
    if (g.kind() == Formula::Kind::True) continue;
    d.clauses.push_back(std::move(g));
  }
  return d;
}

void Grounder::collect_effects(const EffectNode& e, Env& env,
                               const Formula& cond,
                               std::vector<ConditionalEffect>& out) const {
  switch (e.kind) {
    case EffectNode::Kind::And:
      for (const EffectNode& c : e.children)
        collect_effects(c, env, cond, out);
      return;
    case EffectNode::Kind::Forall: {
      std::vector<std::vector<std::string>> columns;
      for (const TypedName& p : e.params)
        columns.push_back(objects_of_type(p.type));
      if (std::any_of(columns.begin(), columns.end(),
                      [](const auto& c) { return c.empty(); }))
        return;
      std::vector<std::size_t> idx(columns.size(), 0);
      bool done = false;
      while (!done) {
        for (std::size_t i = 0; i < e.params.size(); ++i)
          env[e.params[i].name] = columns[i][idx[i]];
        collect_effects(e.children[0], env, cond, out);
        done = true;
        std::size_t i = columns.size();
        while (i > 0) {
          --i;
          if (++idx[i] < columns[i].size()) {
            done = false;
            break;
          }
          idx[i] = 0;
        }
        if (columns.empty()) done = true;
      }
      for (const TypedName& p : e.params) env.erase(p.name);
      return;
    }
    case EffectNode::Kind::When: {
      Formula c = ground_rec(e.condition, env);
      if (c.kind() == Formula::Kind::False) return;
      Formula merged;
      if (cond.kind() == Formula::Kind::True)
        merged = std::move(c);
      else if (c.kind() == Formula::Kind::True)
        merged = cond;
      else
        merged = Formula::conj({cond, std::move(c)});
      collect_effects(e.children[0], env, merged, out);
      return;
    }
    case EffectNode::Kind::Literal: {
      AtomId id = resolve_atom(e.predicate, e.terms, env);
      // Merge literals sharing a condition into one conditional effect.
      std::string key = cond.text();
      for (ConditionalEffect& ce : out) {
        if (ce.condition.text() != key) continue;
        auto& same = e.negated ? ce.deletes : ce.adds;
        auto& other = e.negated ? ce.adds : ce.deletes;
        if (std::find(other.begin(), other.end(), id) != other.end())
          throw GroundingError(
              "atom both added and deleted under one effect condition: " +
              atoms_[id].text());
        if (std::find(same.begin(), same.end(), id) == same.end())
          same.push_back(id);
        return;
      }
      ConditionalEffect ce;
      ce.condition = cond;
      (e.negated ? ce.deletes : ce.adds).push_back(id);
      out.push_back(std::move(ce));
      return;
    }
  }
}

GroundProblem Grounder::ground() const {
  GroundProblem gp;
  gp.atoms = atoms_;

  for (const pddl::ActionSchema& schema : domain_.actions) {
    std::vector<std::vector<std::string>> columns;
    for (const TypedName& p : schema.params)
      columns.push_back(objects_of_type(p.type));
    if (std::any_of(columns.begin(), columns.end(),
                    [](const auto& c) { return c.empty(); }))
      continue;
    std::vector<std::size_t> idx(columns.size(), 0);
    bool done = false;
    while (!done) {
      Env env;
      GroundAction ga;
      ga.name = schema.name;
      for (std::size_t i = 0; i < schema.params.size(); ++i) {
        env[schema.params[i].name] = columns[i][idx[i]];
        ga.args.push_back(columns[i][idx[i]]);
      }
      Env env2 = env;
      Formula pre = ground_rec(schema.precondition, env2);
      if (pre.kind() != Formula::Kind::False) {  // statically false: prune
        ga.precondition = std::move(pre);
        collect_effects(schema.effect, env, Formula::truth(), ga.effects);
        gp.actions.push_back(std::move(ga));
      }
      done = true;
      std::size_t i = columns.size();
      while (i > 0) {
        --i;
        if (++idx[i] < columns[i].size()) {
          done = false;
          break;
        }
        idx[i] = 0;
      }
      if (columns.empty()) done = true;
    }
  }
  std::sort(gp.actions.begin(), gp.actions.end(),
            [](const GroundAction& a, const GroundAction& b) {
              return a.text() < b.text();
            });

  gp.init = State(gp.atoms.size());
  for (const LiftedFormula& a : problem_.init) {
    Env env;
    AtomId id = resolve_atom(a.predicate, a.terms, env);
    if (!gp.init.contains(id)) gp.init_order.push_back(id);
    gp.init.add(id);
  }
  gp.goal = ground_formula(problem_.goal);
  for (const pddl::SurfaceConstraint& c : problem_.constraints)
    gp.constraints.push_back(ground_constraint(c));
  return gp;
}

}  // namespace lexiplan
