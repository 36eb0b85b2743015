#include "doctest.h"

#include "lexiplan/model.hpp"

using namespace lexiplan;

namespace {

GroundAction make_action(std::vector<ConditionalEffect> effects,
                         Formula pre = Formula::truth()) {
  GroundAction a;
  a.name = "a";
  a.precondition = pre;
  a.effects = std::move(effects);
  return a;
}

}  // namespace

TEST_CASE("state set operations and hashing") {
  State s(70);
  CHECK_FALSE(s.contains(0));
  s.add(0);
  s.add(69);
  CHECK(s.contains(0));
  CHECK(s.contains(69));
  CHECK(s.atoms() == std::vector<AtomId>{0, 69});
  State t = s;
  CHECK(t == s);
  CHECK(t.hash() == s.hash());
  t.remove(69);
  CHECK_FALSE(t.contains(69));
  CHECK(t != s);
}

TEST_CASE("effect conditions are evaluated against the original state") {
  // when p -> add q; when q -> add r. From {p} only q appears: the second
  // effect sees the pre-state, where q is still false.
  ConditionalEffect e1{Formula::atom(0), {1}, {}};
  ConditionalEffect e2{Formula::atom(1), {2}, {}};
  GroundAction a = make_action({e1, e2});
  State s(3);
  s.add(0);
  State next = apply(s, a);
  CHECK(next.contains(1));
  CHECK_FALSE(next.contains(2));
}

TEST_CASE("an atom added and deleted by distinct fired effects stays true") {
  ConditionalEffect deleter{Formula::truth(), {}, {0}};
  ConditionalEffect adder{Formula::truth(), {0}, {}};
  State s(1);
  s.add(0);
  CHECK(apply(s, make_action({deleter, adder})).contains(0));
  // order independent: delete listed after add behaves the same
  CHECK(apply(s, make_action({adder, deleter})).contains(0));
}

TEST_CASE("applicable follows the precondition formula") {
  GroundAction a = make_action({}, Formula::conj({Formula::atom(0),
                                                  Formula::negate(Formula::atom(1))}));
  State s(2);
  CHECK_FALSE(applicable(s, a));
  s.add(0);
  CHECK(applicable(s, a));
  s.add(1);
  CHECK_FALSE(applicable(s, a));
}

TEST_CASE("ground atom and action text") {
  GroundAtom atom{"on", {"b1", "b2"}};
  CHECK(atom.text() == "on b1 b2");
  GroundAction a;
  a.name = "stack";
  a.args = {"b1", "b2"};
  CHECK(a.text() == "stack b1 b2");
}
