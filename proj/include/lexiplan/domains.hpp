#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>

#include "lexiplan/ground.hpp"
#include "lexiplan/pddl.hpp"
#include "lexiplan/translate.hpp"

namespace lexiplan {

struct MissingFile : std::runtime_error {
  explicit MissingFile(const std::string& path)
      : std::runtime_error("missing file: " + path) {}
};

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Everything needed to generate, translate, solve and verify within one
// domain. Packs without a generator manifest still support user-supplied
// problems (verify/translate/solve only).
struct DomainPack {
  std::string name;  // pack directory name
  std::string domain_text;
  pddl::LiftedDomain domain;
  NLTemplates templates;
  std::string env_nl;
  std::vector<pddl::LiftedFormula> axioms;
  std::string generator;                       // empty when fixture-only
  std::map<std::string, int> generator_params;  // manifest size defaults

  bool has_generator() const { return !generator.empty(); }

  // Seeded instance via the manifest generator and its size params.
  pddl::LiftedProblem generate(std::uint64_t seed) const;

  AxiomSet ground_axioms(const Grounder& g) const {
    return g.ground_axioms(axioms);
  }
};

// Layout: domain.pddl, templates.kv, env_nl.txt, optional axioms.sexp,
// optional generator.manifest. Validates template coverage/arity and, when a
// generator is present, that a smoke instance parses, grounds and solves.
DomainPack load_domain_pack(const std::filesystem::path& dir);

// Canonical domain texts backing the built-in generators; the shipped pack
// domain.pddl files carry the same content.
const char* builtin_blocksworld_domain();
const char* builtin_logistics_domain();

// Random initial and goal tower configurations, each drawn uniformly over
// the set-of-ordered-towers partitions of the blocks; goal resampled while
// equal to the initial configuration.
pddl::LiftedProblem gen_blocksworld(std::uint64_t seed, int n_blocks);

// Cities with two plain locations plus an airport each, one truck per city,
// one airplane; at least one package must cross cities.
pddl::LiftedProblem gen_logistics(std::uint64_t seed, int n_cities, int n_pkgs);

}  // namespace lexiplan
