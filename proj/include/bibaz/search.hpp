#ifndef BIBAZ_SEARCH_HPP
#define BIBAZ_SEARCH_HPP

// Tightness probing: how close do realizable Herglotz constructions get to
// the (non-sharp) closed-form estimates?

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bibaz/config.hpp"
#include "bibaz/oracle.hpp"

namespace bibaz {

enum class SearchTarget { a2, a3 };

SearchTarget parse_search_target(const std::string& name);
std::string to_string(SearchTarget t);

struct SearchConfig {
  long budget = 20'000;  // objective evaluations over all restarts
  int restarts = 8;
  std::uint64_t seed = 0;
  SearchTarget target = SearchTarget::a2;
  int atoms = kDefaultAtoms;
  bool record_trace = false;

  // budget >= restarts >= 1, atoms >= 1.
  void validate() const;
};

struct SearchPoint {
  std::vector<double> weights;
  std::vector<double> angles;
  double c1_phase = 0.0;  // rotation applied to C1 (|C1| is held fixed)
};

struct TraceEntry {
  int restart = 0;
  long evaluation = 0;  // index within the restart
  double value = 0.0;
  double best = 0.0;
};

struct TightnessReport {
  SearchTarget target = SearchTarget::a2;
  double best_value = 0.0;
  double bound = 0.0;
  double ratio = 0.0;
  SearchPoint argmax;
  long evaluations = 0;
  std::vector<TraceEntry> trace;  // filled when record_trace is set
};

// Multistart coordinate pattern search over atom weights, atom angles and the
// phase of C1. Each evaluation builds p from the atoms and q from the reflected
// atoms and goes through ProofRelations. Restarts run concurrently; the report
// is deterministic for a fixed config.
TightnessReport tightness_search(const ClassSpec& spec, const SearchConfig& cfg);

struct SweepEntry {
  double value = 0.0;
  BoundReport bounds;
  std::optional<TightnessReport> tightness;  // absent when the bounds are degenerate
};

// Instantiates `base` with each value of `axis` in order. An invalid
// instantiation throws ValidationError naming the offending value.
std::vector<SweepEntry> parameter_sweep(const ClassConfig& base, const std::string& axis,
                                        const std::vector<double>& values,
                                        const std::optional<SearchConfig>& search = std::nullopt);

}  // namespace bibaz

#endif
