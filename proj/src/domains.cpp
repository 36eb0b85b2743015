#include "lexiplan/domains.hpp"

#include <fstream>
#include <sstream>

#include "lexiplan/planner.hpp"
#include "lexiplan/rng.hpp"

namespace lexiplan {

namespace {

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw MissingFile(p.string());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string read_optional(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return "";
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// Highest {i} placeholder index in a template, -1 when none.
int max_placeholder(const std::string& tpl) {
  int best = -1;
  for (std::size_t i = 0; i < tpl.size(); ++i) {
    if (tpl[i] != '{') continue;
    std::size_t close = tpl.find('}', i);
    if (close == std::string::npos) continue;
    try {
      best = std::max(best, std::stoi(tpl.substr(i + 1, close - i - 1)));
    } catch (const std::exception&) {
    }
  }
  return best;
}

void validate_templates(const pddl::LiftedDomain& d, const NLTemplates& t) {
  for (const pddl::Predicate& pred : d.predicates) {
    auto it = t.predicates.find(pred.name);
    if (it == t.predicates.end())
      throw ValidationError("no NL template for predicate " + pred.name);
    int hi = max_placeholder(it->second);
    if (hi >= static_cast<int>(pred.params.size()))
      throw ValidationError("template for predicate " + pred.name +
                            " references argument " + std::to_string(hi) +
                            " but arity is " +
                            std::to_string(pred.params.size()));
  }
}

}  // namespace

pddl::LiftedProblem DomainPack::generate(std::uint64_t seed) const {
  auto param = [&](const std::string& key, int fallback) {
    auto it = generator_params.find(key);
    return it == generator_params.end() ? fallback : it->second;
  };
  if (generator == "blocksworld")
    return gen_blocksworld(seed, param("n_blocks", 4));
  if (generator == "logistics")
    return gen_logistics(seed, param("n_cities", 2), param("n_pkgs", 2));
  throw ValidationError("unknown generator: " + generator);
}

DomainPack load_domain_pack(const std::filesystem::path& dir) {
  DomainPack pack;
  pack.name = dir.filename().string();
  pack.domain_text = read_file(dir / "domain.pddl");
  pack.domain = pddl::parse_domain(pack.domain_text);
  pack.templates = NLTemplates::parse(read_file(dir / "templates.kv"));
  pack.env_nl = read_file(dir / "env_nl.txt");
  std::string axiom_text = read_optional(dir / "axioms.sexp");
  if (!axiom_text.empty())
    pack.axioms = pddl::parse_formulas(axiom_text, pack.domain);

  std::string manifest = read_optional(dir / "generator.manifest");
  std::istringstream in(manifest);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) continue;
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    if (key == "generator")
      pack.generator = value;
    else
      pack.generator_params[key] = std::stoi(value);
  }

  validate_templates(pack.domain, pack.templates);

  if (pack.has_generator()) {
    pddl::LiftedProblem smoke = pack.generate(1);
    GroundProblem gp = ground(pack.domain, smoke);
    SearchLimits limits;
    limits.max_seconds = 5.0;
    OptimalResult r = solve_optimal(gp, limits);
    if (r.status != SolveStatus::Solved)
      throw ValidationError("smoke instance for pack " + pack.name +
                            " is not solvable within limits");
  }
  return pack;
}

// ---------------------------------------------------------------------------
// Blocksworld

namespace {

// Samples a uniformly random arrangement of blocks 0..n-1 into an unordered
// set of ordered towers. A configuration with k towers corresponds to
// n!/k! * C(n-1, k-1) (permutation, composition) pairs, so k is drawn with
// that weight, then a random permutation is cut at k-1 random break points.
std::vector<std::vector<int>> random_towers(Rng& rng, int n) {
  std::vector<double> weights(n + 1, 0.0);
  for (int k = 1; k <= n; ++k) {
    double w = 1.0;
    for (int i = 2; i <= n; ++i) w *= i;      // n!
    for (int i = 2; i <= k; ++i) w /= i;      // / k!
    for (int i = 1; i < k; ++i)               // * C(n-1, k-1)
      w = w * (n - i) / i;
    weights[k] = w;
  }
  int k = static_cast<int>(rng.weighted(weights));

  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  rng.shuffle(perm);

  std::vector<int> cuts(n - 1);
  for (int i = 0; i < n - 1; ++i) cuts[i] = i + 1;
  rng.shuffle(cuts);
  cuts.resize(k - 1);
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(n);

  std::vector<std::vector<int>> towers;
  int start = 0;
  for (int cut : cuts) {
    towers.emplace_back(perm.begin() + start, perm.begin() + cut);
    start = cut;
  }
  // canonical order for determinism of the emitted facts
  std::sort(towers.begin(), towers.end());
  return towers;
}

const char* kBlocksworldDomain = R"((define (domain blocksworld)
  (:requirements :strips :typing :equality)
  (:types block - object)
  (:predicates
    (on ?x - block ?y - block)
    (ontable ?x - block)
    (clear ?x - block)
    (handempty)
    (holding ?x - block))

  (:action pickup
    :parameters (?x - block)
    :precondition (and (clear ?x) (ontable ?x) (handempty))
    :effect (and (holding ?x)
                 (not (clear ?x)) (not (ontable ?x)) (not (handempty))))

  (:action putdown
    :parameters (?x - block)
    :precondition (holding ?x)
    :effect (and (clear ?x) (ontable ?x) (handempty) (not (holding ?x))))

  (:action stack
    :parameters (?x - block ?y - block)
    :precondition (and (holding ?x) (clear ?y) (not (= ?x ?y)))
    :effect (and (clear ?x) (on ?x ?y) (handempty)
                 (not (holding ?x)) (not (clear ?y))))

  (:action unstack
    :parameters (?x - block ?y - block)
    :precondition (and (on ?x ?y) (clear ?x) (handempty) (not (= ?x ?y)))
    :effect (and (holding ?x) (clear ?y)
                 (not (on ?x ?y)) (not (clear ?x)) (not (handempty)))))
)";

pddl::LiftedFormula fact(const std::string& pred,
                         std::initializer_list<std::string> args) {
  std::vector<pddl::Term> terms;
  for (const std::string& a : args) terms.push_back({false, a});
  return pddl::LiftedFormula::atom(pred, std::move(terms));
}

std::vector<pddl::LiftedFormula> tower_facts(
    const std::vector<std::vector<int>>& towers,
    const std::vector<std::string>& names, bool with_clear) {
  std::vector<pddl::LiftedFormula> out;
  for (const std::vector<int>& tower : towers) {
    out.push_back(fact("ontable", {names[tower[0]]}));
    for (std::size_t i = 1; i < tower.size(); ++i)
      out.push_back(fact("on", {names[tower[i]], names[tower[i - 1]]}));
    if (with_clear) out.push_back(fact("clear", {names[tower.back()]}));
  }
  return out;
}

}  // namespace

const char* builtin_blocksworld_domain() { return kBlocksworldDomain; }

pddl::LiftedProblem gen_blocksworld(std::uint64_t seed, int n_blocks) {
  if (n_blocks < 2 || n_blocks > 12)
    throw std::invalid_argument("n_blocks must be in [2, 12]");
  Rng rng(seed);
  Rng init_rng = rng.split(1);
  Rng goal_rng = rng.split(2);

  std::vector<std::string> names;
  for (int i = 0; i < n_blocks; ++i) names.push_back("b" + std::to_string(i + 1));

  std::vector<std::vector<int>> init = random_towers(init_rng, n_blocks);
  std::vector<std::vector<int>> goal = random_towers(goal_rng, n_blocks);
  while (goal == init) goal = random_towers(goal_rng, n_blocks);

  static const pddl::LiftedDomain domain =
      pddl::parse_domain(kBlocksworldDomain);

  pddl::LiftedProblem p;
  p.name = "blocksworld-" + std::to_string(n_blocks) + "-" +
           std::to_string(seed);
  p.domain_name = domain.name;
  for (const std::string& b : names) p.objects.push_back({b, "block"});
  p.init = tower_facts(init, names, true);
  p.init.push_back(fact("handempty", {}));
  pddl::LiftedFormula g;
  g.kind = pddl::LiftedFormula::Kind::And;
  g.children = tower_facts(goal, names, false);
  p.goal = g;
  return p;
}

// ---------------------------------------------------------------------------
// Logistics

namespace {

const char* kLogisticsDomain = R"((define (domain logistics)
  (:requirements :strips :typing :equality)
  (:types city location thing - object
          airport - location
          vehicle package - thing
          truck airplane - vehicle)
  (:predicates
    (in-city ?l - location ?c - city)
    (at ?t - thing ?l - location)
    (in ?p - package ?v - vehicle))

  (:action load-truck
    :parameters (?p - package ?t - truck ?l - location)
    :precondition (and (at ?p ?l) (at ?t ?l))
    :effect (and (in ?p ?t) (not (at ?p ?l))))

  (:action unload-truck
    :parameters (?p - package ?t - truck ?l - location)
    :precondition (and (in ?p ?t) (at ?t ?l))
    :effect (and (at ?p ?l) (not (in ?p ?t))))

  (:action load-airplane
    :parameters (?p - package ?a - airplane ?l - airport)
    :precondition (and (at ?p ?l) (at ?a ?l))
    :effect (and (in ?p ?a) (not (at ?p ?l))))

  (:action unload-airplane
    :parameters (?p - package ?a - airplane ?l - airport)
    :precondition (and (in ?p ?a) (at ?a ?l))
    :effect (and (at ?p ?l) (not (in ?p ?a))))

  (:action drive-truck
    :parameters (?t - truck ?from - location ?to - location ?c - city)
    :precondition (and (at ?t ?from) (in-city ?from ?c) (in-city ?to ?c)
                       (not (= ?from ?to)))
    :effect (and (at ?t ?to) (not (at ?t ?from))))

  (:action fly-airplane
    :parameters (?a - airplane ?from - airport ?to - airport)
    :precondition (and (at ?a ?from) (not (= ?from ?to)))
    :effect (and (at ?a ?to) (not (at ?a ?from)))))
)";

}  // namespace

const char* builtin_logistics_domain() { return kLogisticsDomain; }

pddl::LiftedProblem gen_logistics(std::uint64_t seed, int n_cities,
                                  int n_pkgs) {
  if (n_cities < 2) throw std::invalid_argument("n_cities must be >= 2");
  if (n_pkgs < 1) throw std::invalid_argument("n_pkgs must be >= 1");
  Rng rng(seed);

  static const pddl::LiftedDomain domain = pddl::parse_domain(kLogisticsDomain);

  pddl::LiftedProblem p;
  p.name = "logistics-" + std::to_string(n_cities) + "-" +
           std::to_string(n_pkgs) + "-" + std::to_string(seed);
  p.domain_name = domain.name;

  // per city: one plain location, one airport, one truck
  std::vector<std::vector<std::string>> city_locs(n_cities);
  for (int c = 0; c < n_cities; ++c) {
    std::string city = "city" + std::to_string(c + 1);
    std::string loc = city + "_loc1";
    std::string apt = city + "_airport";
    p.objects.push_back({city, "city"});
    p.objects.push_back({loc, "location"});
    p.objects.push_back({apt, "airport"});
    p.objects.push_back({"truck" + std::to_string(c + 1), "truck"});
    city_locs[c] = {loc, apt};
    p.init.push_back(fact("in-city", {loc, city}));
    p.init.push_back(fact("in-city", {apt, city}));
  }
  p.objects.push_back({"plane1", "airplane"});
  for (int i = 0; i < n_pkgs; ++i)
    p.objects.push_back({"pkg" + std::to_string(i + 1), "package"});

  for (int c = 0; c < n_cities; ++c) {
    std::string at_loc = city_locs[c][rng.below(2)];
    p.init.push_back(fact("at", {"truck" + std::to_string(c + 1), at_loc}));
  }
  p.init.push_back(
      fact("at", {"plane1",
                  city_locs[rng.below(n_cities)][1]}));

  std::vector<pddl::LiftedFormula> goals;
  for (int i = 0; i < n_pkgs; ++i) {
    int oc, dc, ol, dl;
    do {
      oc = static_cast<int>(rng.below(n_cities));
      dc = static_cast<int>(rng.below(n_cities));
      ol = static_cast<int>(rng.below(2));
      dl = static_cast<int>(rng.below(2));
      // first package anchors the cross-city requirement
    } while ((oc == dc && ol == dl) || (i == 0 && oc == dc));
    std::string pkg = "pkg" + std::to_string(i + 1);
    p.init.push_back(fact("at", {pkg, city_locs[oc][ol]}));
    goals.push_back(fact("at", {pkg, city_locs[dc][dl]}));
  }
  pddl::LiftedFormula g;
  g.kind = pddl::LiftedFormula::Kind::And;
  g.children = std::move(goals);
  p.goal = g;
  return p;
}

}  // namespace lexiplan
