#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "tiling/complex.hpp"
#include "tiling/excise.hpp"
#include "tiling/finfield.hpp"
#include "tiling/trimat.hpp"

namespace tiling {

enum class Outcome { True, Counterexample, Vacuous, ResourceExceeded };
std::string to_string(Outcome o);

struct SearchStats {
  uint64_t nodes_expanded = 0;
  uint64_t propagations_forced = 0;
  double elapsed_ms = 0;
};

struct SearchOptions {
  uint64_t node_budget = 100'000'000;
  // Pin the first variable in search order to one representative of its
  // orbit under the collineation group (all points, resp. lines, form one
  // orbit). Changes which counterexample is reported, not the outcome.
  bool fix_first = false;
  int jobs = 1;
};

struct Verdict {
  Outcome outcome = Outcome::ResourceExceeded;
  std::optional<Configuration> counterexample;
  SearchStats stats;
};

bool verify_configuration(const IncidenceMatrix &M, const Configuration &C);
bool conclusion_holds(const Configuration &C);

Verdict check_theorem(const IncidenceMatrix &M, int q, const SearchOptions &opts = {});

// Any configuration with incidence matrix M (no conclusion involved).
struct SearchResult {
  bool exhausted = true; // false when the budget ran out
  std::optional<Configuration> found;
  SearchStats stats;
};
SearchResult find_configuration(const IncidenceMatrix &M, int q, const SearchOptions &opts = {});

// Multiplicative values per edge (edge traversed tail -> head).
using FieldCochain = std::map<int, Elem>;

// r -> g^(r (q-1)/n) for a fixed primitive element g; needs n | q-1.
FieldCochain exponentiate_cochain(const Cochain &U, long n, const GaloisField &F);
Elem primitive_element(const GaloisField &F);

// Configuration for the theorem generated by MC whose edge points cut the
// edges in the ratios U. nullopt when no vertex placement without three
// collinear points exists over GF(q).
std::optional<Configuration> realize_from_cochain(const MarkedComplex &MC, const FieldCochain &U, int q);

} // namespace tiling
