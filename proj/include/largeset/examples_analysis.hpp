#ifndef LARGESET_EXAMPLES_ANALYSIS_HPP
#define LARGESET_EXAMPLES_ANALYSIS_HPP

#include <optional>

#include "largeset/largeness.hpp"

namespace largeset {

// Windowed stand-in for upper Banach density: for each interval length d
// the best interval density inside the window; the headline value is the
// one at the largest d.
struct DensityReport {
  std::string set_name;
  int64_t window_len = 0;  // the d of the headline row
  int64_t best_start = 0;
  int64_t hits = 0;      // |S cap interval|
  double density = 0.0;  // hits / window_len

  struct Row {
    int64_t d = 0;
    int64_t start = 0;
    int64_t hits = 0;
    double density = 0.0;
  };
  std::vector<Row> trend;

  nlohmann::json to_json() const;
};

DensityReport banach_density_estimate(const SetSpec& S, const Window& w,
                                      const std::vector<int64_t>& d_list);

struct SarkozyWitness {
  int64_t x = 0, y = 0, z = 0;  // x - y = z^3
};

// First pair (in canonical scan order) of distinct elements of S whose
// difference is a nonzero cube.
std::optional<SarkozyWitness> sarkozy_witness(const FiniteSet& S);

struct CubeCandidateReport {
  std::string name;
  bool syndetic_on_window = false;
  bool syndetic_decided = false;
  std::optional<std::pair<Element, Element>> violation;  // b, b' with b^b' a cube word
  int64_t pairs_scanned = 0;
};

struct CubeSearchReport {
  std::vector<CubeCandidateReport> candidates;
  nlohmann::json to_json() const;
};

// For each candidate set B: verify windowed syndeticity (reported, not
// required), then scan pairs of the window sample for b, b' whose sum is
// a cube-difference two-letter word. Evidence automation, not a proof.
CubeSearchReport cube_noncontainment_search(const std::vector<SetSpec>& candidates,
                                            const Window& w, int pad, int kmax,
                                            const SolveOptions& opt = {});

struct DiscreteSetReport {
  FiniteSet D;
  bool identity_free = false;
  bool levels_decreasing = false;

  // separation certificate: a level whose complement isolates g from all
  // but finitely many points of D on the window
  struct Certificate {
    Element g;
    int level = -1;          // -1: no separating level on this list
    int64_t outside_count = 0;  // |D \ A_level|
  };
  std::vector<Certificate> certificates;
  bool all_separated = false;

  nlohmann::json to_json() const;
};

// D = union over n of { a^-1 b : a != b in F_n, a^-1 b in A_n }, with the
// finitized discreteness checks.
DiscreteSetReport discrete_set_construct(const std::vector<FiniteSet>& Fs,
                                         const std::vector<SetSpec>& As, const Window& w);

struct DeltaRepresentation {
  std::vector<Element> sequence;
  int64_t covered = 0;  // |Delta(sequence) cap T cap w|
  int64_t total = 0;    // |T cap w|
  double coverage = 0.0;

  nlohmann::json to_json() const;
};

// Greedy sequence with all pairwise quotients inside T u {identity};
// coverage of T's window sample by the delta set is the finite surrogate
// for the representation equality.
DeltaRepresentation thick_delta_representation(const SetSpec& T, const Window& w, int L,
                                               const ProbeFamily& probes,
                                               const SolveOptions& opt = {});

// A subgroup of the requested size inside T u {0} on the window, grown by
// greedy generator extension. Boolean family only; sizes must be powers
// of two.
std::optional<FiniteSet> subgroup_in_thick(const SetSpec& T, const Window& w, size_t size,
                                           const SolveOptions& opt = {});

}  // namespace largeset

#endif
