#pragma once

#include "model.hpp"
#include "pr.hpp"

#include <optional>
#include <string>
#include <vector>

namespace efx {

// Which distinguished agent currently certifies the anchor bundle (the
// bundle stored at position n-1).
enum class Anchor { B, C };

enum class CaseLabel {
  Init,
  DoneAlt,
  C1_1,
  C1_2,
  C1_2_Pr,
  C2_1,
  C2_2_Pr,
  C2_3,
  C2_3_Mirror,
  C2_3_Pr,
};

const char* case_label_name(CaseLabel label);

struct TraceEvent {
  int step = 0;
  CaseLabel label = CaseLabel::Init;
  Val phi_before;
  Val phi_after;
  Anchor anchor_after = Anchor::C;
  std::string moved;
};

struct SolveOptions {
  bool perturb = false;
  PrStrategy pr = PrStrategy::Local;
  std::uint64_t seed = 0;  // recorded for reproducibility; solving is deterministic
  Caps caps;
};

// Valuation roles: the shared class plays v_a, the two distinguished agents
// play v_b and v_c (v_c is the MMS-feasible one).
struct Roles {
  int a_val = -1;
  int b_val = -1;
  int c_val = -1;
  std::vector<int> a_agents;
  int b_agent = -1;
  int c_agent = -1;
};

// Working allocation: bundles[0..n-2] sorted ascending under v_a, position
// n-1 is the anchor bundle, phi = min v_a over the first n-1 bundles.
struct SolverState {
  std::vector<GoodMask> bundles;
  Anchor anchor = Anchor::C;
  Val phi;
};

struct StepOutcome {
  std::optional<Allocation> done;
  std::optional<SolverState> next;
  TraceEvent event;
};

struct SolveResult {
  Allocation allocation;
  std::vector<TraceEvent> trace;
};

// Picks the shared valuation class and the two distinguished agents.
// Requires n >= 3 and that at most two agents sit outside the largest
// class. Throws PreconditionError otherwise.
Roles assign_roles(const Instance& inst, const Caps& caps);

// PR over all goods under v_a, then c takes its favorite bundle as anchor.
SolverState initial_state(const Instance& work, const Roles& roles, PrStrategy strategy,
                          const Caps& caps);

// Both conditions of the working invariant: the first n-1 bundles are
// EFX-feasible w.r.t. every other bundle under v_a, and the anchor bundle
// is EFX-feasible under the anchor agent's valuation.
bool check_almost_feasible(const Instance& work, const Roles& roles, const SolverState& state);

// min v_a over the first n-1 bundles.
Val potential(const Instance& work, const Roles& roles, const SolverState& state);

// If b or c has a feasible bundle besides the anchor, hand out bundles and
// finish; otherwise the anchor bundle is uniquely feasible for both and the
// case analysis takes over.
std::optional<Allocation> try_terminate(const Instance& work, const Roles& roles,
                                        const SolverState& state);

// One case-dispatch step. Requires that try_terminate returned nothing.
StepOutcome solver_step(const Instance& work, const Roles& roles, const SolverState& state,
                        PrStrategy strategy, const Caps& caps);

// Full pipeline: role assignment, perturbation or non-degeneracy check,
// size special cases, then the potential loop. The returned allocation is
// verified EFX under the original valuations.
SolveResult solve(const Instance& inst, const SolveOptions& opts);

}  // namespace efx
