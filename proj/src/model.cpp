#include "lexiplan/model.hpp"

#include <algorithm>
#include <unordered_map>

#include "lexiplan/constraints.hpp"

namespace lexiplan {

std::string GroundAtom::text() const {
  std::string out = predicate;
  for (const std::string& a : args) {
    out += ' ';
    out += a;
  }
  return out;
}

State::State(std::size_t universe_size)
    : n_atoms_(universe_size), bits_((universe_size + 63) / 64, 0) {}

bool State::contains(AtomId id) const {
  return (bits_[id / 64] >> (id % 64)) & 1;
}

void State::add(AtomId id) { bits_[id / 64] |= std::uint64_t{1} << (id % 64); }

void State::remove(AtomId id) {
  bits_[id / 64] &= ~(std::uint64_t{1} << (id % 64));
}

std::vector<AtomId> State::atoms() const {
  std::vector<AtomId> out;
  for (AtomId i = 0; i < n_atoms_; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::size_t State::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (std::uint64_t w : bits_) {
    h ^= w;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string GroundAction::text() const {
  std::string out = name;
  for (const std::string& a : args) {
    out += ' ';
    out += a;
  }
  return out;
}

AtomId GroundProblem::atom_id(const GroundAtom& a) const {
  for (AtomId i = 0; i < atoms.size(); ++i)
    if (atoms[i] == a) return i;
  throw std::out_of_range("atom not in universe: " + a.text());
}

bool applicable(const State& s, const GroundAction& a) {
  return holds(s, a.precondition);
}

State apply(const State& s, const GroundAction& a) {
  if (!applicable(s, a)) throw PreconditionViolated(a.text());
  // All effect conditions read the pre-state; deletes applied before adds,
  // so an atom added by one fired effect and deleted by another stays true.
  State out = s;
  for (const ConditionalEffect& e : a.effects)
    if (holds(s, e.condition))
      for (AtomId id : e.deletes) out.remove(id);
  for (const ConditionalEffect& e : a.effects)
    if (holds(s, e.condition))
      for (AtomId id : e.adds) out.add(id);
  return out;
}

}  // namespace lexiplan
