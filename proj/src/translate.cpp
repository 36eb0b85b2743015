#include "lexiplan/translate.hpp"

#include <sstream>

namespace lexiplan {

namespace {

std::string quoted(const std::string& s) { return "'" + s + "'"; }

// NL surface form of a term: variables lose their '?' marker.
std::string term_text(const pddl::Term& t) {
  if (t.is_variable && !t.name.empty() && t.name[0] == '?')
    return t.name.substr(1);
  return t.name;
}

std::string var_text(const std::string& name) {
  return !name.empty() && name[0] == '?' ? name.substr(1) : name;
}

std::string fill_template(const std::string& tpl,
                          const std::vector<std::string>& args) {
  std::string out;
  for (std::size_t i = 0; i < tpl.size(); ++i) {
    if (tpl[i] == '{') {
      std::size_t close = tpl.find('}', i);
      if (close != std::string::npos) {
        std::size_t idx = std::stoul(tpl.substr(i + 1, close - i - 1));
        if (idx < args.size()) {
          out += args[idx];
          i = close;
          continue;
        }
      }
    }
    out += tpl[i];
  }
  return out;
}

}  // namespace

NLTemplates NLTemplates::parse(const std::string& kv_text) {
  NLTemplates t;
  std::istringstream in(kv_text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) continue;
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    if (key.rfind("predicate.", 0) == 0)
      t.predicates[key.substr(10)] = value;
    else if (key.rfind("type.", 0) == 0)
      t.type_nouns[key.substr(5)] = value;
  }
  return t;
}

std::string NLTemplates::render_atom(const std::string& predicate,
                                     const std::vector<std::string>& args) const {
  auto it = predicates.find(predicate);
  if (it == predicates.end()) throw MissingTemplate(predicate);
  return fill_template(it->second, args);
}

std::string NLTemplates::type_noun(const std::string& type) const {
  auto it = type_nouns.find(type);
  return it == type_nouns.end() ? type : it->second;
}

namespace {

std::string render_lifted(const pddl::LiftedFormula& f, const NLTemplates& t) {
  using K = pddl::LiftedFormula::Kind;
  switch (f.kind) {
    case K::True:
      return "The following conditions are all true: (no conditions)";
    case K::False:
      return "At least one of the following conditions is true: (no conditions)";
    case K::Atom: {
      std::vector<std::string> args;
      for (const pddl::Term& term : f.terms) args.push_back(term_text(term));
      return t.render_atom(f.predicate, args);
    }
    case K::Equals:
      return term_text(f.terms[0]) + " and " + term_text(f.terms[1]) +
             " are the same object";
    case K::Not:
      return "it is not the case that " + quoted(render_lifted(f.children[0], t));
    case K::And:
    case K::Or: {
      if (f.children.size() == 1) return render_lifted(f.children[0], t);
      std::string out = f.kind == K::And
                            ? "The following conditions are all true:"
                            : "At least one of the following conditions is true:";
      if (f.children.empty()) return out + " (no conditions)";
      for (std::size_t i = 0; i < f.children.size(); ++i) {
        out += i == 0 ? " " : ", ";
        out += quoted(render_lifted(f.children[i], t));
      }
      return out;
    }
    case K::Exists:
    case K::Forall: {
      // unroll one bound variable at a time
      pddl::LiftedFormula inner = f;
      const pddl::TypedName& v = f.params.front();
      std::string body;
      if (f.params.size() == 1) {
        body = render_lifted(f.children[0], t);
      } else {
        inner.params.erase(inner.params.begin());
        body = render_lifted(inner, t);
      }
      if (f.kind == K::Exists)
        return "There is a " + t.type_noun(v.type) + " " + var_text(v.name) +
               " such that " + quoted(body);
      return "For every " + t.type_noun(v.type) + " " + var_text(v.name) +
             " it holds that " + quoted(body);
    }
  }
  return "";
}

}  // namespace

std::string render_formula(const pddl::LiftedFormula& f, const NLTemplates& t) {
  return render_lifted(f, t);
}

std::string render_formula(const Formula& f, const GroundProblem& p,
                           const NLTemplates& t) {
  return render_lifted(lift(f, p), t);
}

std::string render_constraint(const pddl::SurfaceConstraint& q,
                              const NLTemplates& t) {
  switch (q.type) {
    case ConstraintType::Always:
      return "The following expression must hold in every state: " +
             quoted(render_lifted(q.first, t));
    case ConstraintType::Sometime:
      return "The following expression must hold in at least one state: " +
             quoted(render_lifted(q.first, t));
    case ConstraintType::AtMostOnce:
      return "Expression " + quoted(render_lifted(q.first, t)) +
             " may hold in at most one contiguous period of states";
    case ConstraintType::SometimeBefore:
      return "If expression " + quoted(render_lifted(q.first, t)) +
             " holds in some state s, then expression " +
             quoted(render_lifted(q.second, t)) +
             " must hold at some state strictly before s";
    case ConstraintType::SometimeAfter:
      return "If expression " + quoted(render_lifted(q.first, t)) +
             " holds in some state s, then expression " +
             quoted(render_lifted(q.second, t)) +
             " must hold at s or at some state after s";
  }
  return "";
}

std::string render_constraint(const TrajectoryConstraint& q,
                              const GroundProblem& p, const NLTemplates& t) {
  return render_constraint(lift_constraint(q, p), t);
}

std::string render_problem(const pddl::LiftedProblem& p, const NLTemplates& t,
                           const std::string& env_nl) {
  std::ostringstream out;
  if (!env_nl.empty()) {
    out << env_nl;
    if (env_nl.back() != '\n') out << '\n';
    out << '\n';
  }
  out << "The original state of the world is:\n";
  for (const pddl::LiftedFormula& a : p.init) {
    std::vector<std::string> args;
    for (const pddl::Term& term : a.terms) args.push_back(term.name);
    out << ' ' << quoted(t.render_atom(a.predicate, args)) << '\n';
  }
  out << "\nThe task is to bring about the following situation:\n";
  out << ' ' << quoted(render_lifted(p.goal, t)) << '\n';
  if (!p.constraints.empty()) {
    out << "\nA valid plan for the abovementioned problem must abide by the "
           "following constraints:\n";
    for (const pddl::SurfaceConstraint& q : p.constraints)
      out << ' ' << quoted(render_constraint(q, t)) << '\n';
  }
  return out.str();
}

std::string render_action(const GroundAction& a) { return a.text(); }

const std::string& system_prompt() {
  static const std::string kPrompt =
      "Provided a planning problem, consisting of an initial state of the "
      "world, a final goal and a set of constraints, your task is to provide "
      "a valid sequence of actions that solves the planning problem, i.e., "
      "bringing about the goal of the problem while satisfying all "
      "constraints.\n"
      "You need to provide an optimal plan, i.e., a valid plan whose length "
      "is equal or less than the length of any other valid plan.\n"
      "Write your plan as a sequence of actions, one action per line, where "
      "each line contains the action name followed by its arguments, all "
      "lowercase and separated by single spaces. Do not output anything "
      "else.\n";
  return kPrompt;
}

pddl::LiftedFormula lift(const Formula& f, const GroundProblem& p) {
  pddl::LiftedFormula out;
  using K = pddl::LiftedFormula::Kind;
  switch (f.kind()) {
    case Formula::Kind::True:
      out.kind = K::And;
      return out;
    case Formula::Kind::False:
      out.kind = K::Or;
      return out;
    case Formula::Kind::Atom: {
      const GroundAtom& a = p.atom(f.atom_id());
      std::vector<pddl::Term> terms;
      for (const std::string& arg : a.args) terms.push_back({false, arg});
      return pddl::LiftedFormula::atom(a.predicate, std::move(terms));
    }
    case Formula::Kind::Not:
      out.kind = K::Not;
      out.children.push_back(lift(f.child(), p));
      return out;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      out.kind = f.kind() == Formula::Kind::And ? K::And : K::Or;
      for (const Formula& c : f.children()) out.children.push_back(lift(c, p));
      return out;
  }
  return out;
}

pddl::SurfaceConstraint lift_constraint(const TrajectoryConstraint& q,
                                        const GroundProblem& p) {
  pddl::SurfaceConstraint c;
  c.type = q.type();
  c.first = lift(q.phi(), p);
  if (q.binary()) c.second = lift(q.psi(), p);
  return c;
}

}  // namespace lexiplan
