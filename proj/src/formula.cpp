#include "lexiplan/formula.hpp"

#include <algorithm>
#include <sstream>

#include "lexiplan/model.hpp"

namespace lexiplan {

Formula Formula::truth() {
  Formula f;
  f.kind_ = Kind::True;
  return f;
}

Formula Formula::falsity() {
  Formula f;
  f.kind_ = Kind::False;
  return f;
}

Formula Formula::atom(AtomId id) {
  Formula f;
  f.kind_ = Kind::Atom;
  f.atom_ = id;
  return f;
}

Formula Formula::negate(Formula g) {
  Formula f;
  f.kind_ = Kind::Not;
  f.children_ = std::make_shared<std::vector<Formula>>();
  f.children_->push_back(std::move(g));
  return f;
}

Formula Formula::conj(std::vector<Formula> fs) {
  Formula f;
  f.kind_ = Kind::And;
  f.children_ = std::make_shared<std::vector<Formula>>(std::move(fs));
  return f;
}

Formula Formula::disj(std::vector<Formula> fs) {
  Formula f;
  f.kind_ = Kind::Or;
  f.children_ = std::make_shared<std::vector<Formula>>(std::move(fs));
  return f;
}

Formula Formula::implies(Formula a, Formula b) {
  return disj({negate(std::move(a)), std::move(b)});
}

Formula Formula::literal(AtomId id, bool positive) {
  return positive ? atom(id) : negate(atom(id));
}

std::string Formula::text() const {
  switch (kind_) {
    case Kind::True:
      return "true";
    case Kind::False:
      return "false";
    case Kind::Atom:
      return "a" + std::to_string(atom_);
    case Kind::Not:
      return "(not " + child().text() + ")";
    case Kind::And:
    case Kind::Or: {
      std::ostringstream out;
      out << (kind_ == Kind::And ? "(and" : "(or");
      for (const Formula& c : *children_) out << ' ' << c.text();
      out << ')';
      return out.str();
    }
  }
  return "";
}

void Formula::collect_atoms(std::vector<AtomId>& out) const {
  switch (kind_) {
    case Kind::Atom:
      out.push_back(atom_);
      break;
    case Kind::Not:
    case Kind::And:
    case Kind::Or:
      for (const Formula& c : *children_) c.collect_atoms(out);
      break;
    default:
      break;
  }
}

std::vector<AtomId> Formula::atoms() const {
  std::vector<AtomId> out;
  collect_atoms(out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool holds(const State& s, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::True:
      return true;
    case Formula::Kind::False:
      return false;
    case Formula::Kind::Atom:
      return s.contains(f.atom_id());
    case Formula::Kind::Not:
      return !holds(s, f.child());
    case Formula::Kind::And:
      for (const Formula& c : f.children())
        if (!holds(s, c)) return false;
      return true;
    case Formula::Kind::Or:
      for (const Formula& c : f.children())
        if (holds(s, c)) return true;
      return false;
  }
  return false;
}

namespace {

Formula nnf(const Formula& f, bool negated) {
  switch (f.kind()) {
    case Formula::Kind::True:
      return negated ? Formula::falsity() : Formula::truth();
    case Formula::Kind::False:
      return negated ? Formula::truth() : Formula::falsity();
    case Formula::Kind::Atom:
      return negated ? Formula::negate(Formula::atom(f.atom_id()))
                     : Formula::atom(f.atom_id());
    case Formula::Kind::Not:
      return nnf(f.child(), !negated);
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      std::vector<Formula> cs;
      cs.reserve(f.children().size());
      for (const Formula& c : f.children()) cs.push_back(nnf(c, negated));
      bool make_and = (f.kind() == Formula::Kind::And) != negated;
      return make_and ? Formula::conj(std::move(cs))
                      : Formula::disj(std::move(cs));
    }
  }
  return f;
}

// Replace an atom by a truth constant and fold constants away.
Formula assign(const Formula& f, AtomId id, bool value) {
  switch (f.kind()) {
    case Formula::Kind::True:
    case Formula::Kind::False:
      return f;
    case Formula::Kind::Atom:
      if (f.atom_id() == id)
        return value ? Formula::truth() : Formula::falsity();
      return f;
    case Formula::Kind::Not: {
      Formula c = assign(f.child(), id, value);
      if (c.kind() == Formula::Kind::True) return Formula::falsity();
      if (c.kind() == Formula::Kind::False) return Formula::truth();
      return Formula::negate(std::move(c));
    }
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      bool is_and = f.kind() == Formula::Kind::And;
      std::vector<Formula> cs;
      for (const Formula& c : f.children()) {
        Formula g = assign(c, id, value);
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
      if (cs.empty())
        return is_and ? Formula::truth() : Formula::falsity();
      if (cs.size() == 1) return cs[0];
      return is_and ? Formula::conj(std::move(cs)) : Formula::disj(std::move(cs));
    }
  }
  return f;
}

bool sat_search(const Formula& f) {
  if (f.kind() == Formula::Kind::True) return true;
  if (f.kind() == Formula::Kind::False) return false;
  std::vector<AtomId> vocab;
  f.collect_atoms(vocab);
  AtomId pick = vocab.front();
  return sat_search(assign(f, pick, true)) || sat_search(assign(f, pick, false));
}

}  // namespace

Formula to_nnf(const Formula& f) { return nnf(f, false); }

bool satisfiable(const Formula& f, int atom_cap) {
  std::size_t n = f.atoms().size();
  if (n > static_cast<std::size_t>(atom_cap)) throw VocabularyTooLarge(n);
  return sat_search(f);
}

bool entails(const AxiomSet& d, const Formula& f, int atom_cap) {
  std::vector<Formula> parts = d.clauses;
  parts.push_back(Formula::negate(f));
  return !satisfiable(Formula::conj(std::move(parts)), atom_cap);
}

}  // namespace lexiplan
