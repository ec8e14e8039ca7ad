#ifndef LARGESET_LARGENESS_HPP
#define LARGESET_LARGENESS_HPP

#include <optional>

#include "largeset/quotient_graph.hpp"
#include "largeset/report.hpp"
#include "largeset/set_spec.hpp"

namespace largeset {

struct SolveOptions {
  uint64_t node_budget = 50000000;
  uint64_t window_cap = 0;  // 0 = default_window_cap()

  uint64_t cap() const { return window_cap ? window_cap : default_window_cap(); }
};

// Finite stand-in for "every finite F": a fixed family of probe sets. Any
// thickness verdict is relative to the family and says so in its report.
struct ProbeFamily {
  std::vector<FiniteSet> probes;
  std::string description;
};

// Int: intervals {0..j-1}; Boolean: balls of radius 1 and 2 over the
// leading letters; Free: balls of radius 1 and 2.
ProbeFamily default_probe_family(const GroupCtx& ctx, const Window& w,
                                 int int_interval_max = 6);

// Some g in the window with Fg inside A, least in canonical order; for
// empty F the identity (vacuous case).
std::optional<Element> is_thick_on(const SetSpec& A, const FiniteSet& F, const Window& w,
                                   const SolveOptions& opt = {});

// All probes pass = thick relative to the family.
LargenessReport thick_on_window(const SetSpec& A, const Window& w, const ProbeFamily& probes,
                                const SolveOptions& opt = {});

// Least k <= kmax with a k-element F from the window whose product set
// covers the pad-shrunk inner window; exact branch-and-bound set cover.
LargenessReport syndeticity_index(const SetSpec& A, const Window& w, int pad, int kmax,
                                  const SolveOptions& opt = {});

// Least k <= kmax with a k-element F from the window making FA pass every
// probe. An under-approximation of "FA is thick" by construction.
LargenessReport thickness_index(const SetSpec& A, const Window& w, int kmax,
                                const ProbeFamily& probes, const SolveOptions& opt = {});

LargenessReport is_piecewise_syndetic(const SetSpec& A, const Window& w, int kmax,
                                      const ProbeFamily& probes, const SolveOptions& opt = {});

// Fatness over the window: independence number of the quotient graph plus
// one. Sets without the identity are not fat at all.
LargenessReport fatness(const SetSpec& A, const Window& w, const SolveOptions& opt = {});

// k-fatness: no independent k-subset in the quotient graph.
LargenessReport kappa_fat_check(const SetSpec& A, const Window& w, int k,
                                const SolveOptions& opt = {});

// Least m such that every m-subset of the window contains an n-subset
// whose quotient graph is complete; computed as (max induced subgraph with
// no n-clique) + 1.
LargenessReport fat_ramsey_m(const SetSpec& A, const Window& w, int n,
                             const SolveOptions& opt = {});

// No one-to-one k-sequence from the window has its delta set disjoint
// from A; counterexample is the sequence otherwise.
LargenessReport is_delta_star_k(const SetSpec& A, const Window& w, int k, Side side,
                                const SolveOptions& opt = {});

// Every one-to-one n-sequence from the window has finite products meeting A.
LargenessReport is_ip_star(const SetSpec& A, const Window& w, int n,
                           const SolveOptions& opt = {});

// Hypothesis S cap (SS u S^-1 S^-1) empty on the window, conclusion: the
// complement is 3-fat. Both certificates are reported.
LargenessReport check_3fat_cover(const SetSpec& S, const Window& w,
                                 const SolveOptions& opt = {});

// Windowed duality: syndetic-on-window(A) iff complement not
// thick-on-window. Exact for periodic catalog sets; approximate otherwise.
LargenessReport duality_check(const SetSpec& A, const Window& w, int pad, int kmax,
                              const ProbeFamily& probes, const SolveOptions& opt = {});

}  // namespace largeset

#endif
