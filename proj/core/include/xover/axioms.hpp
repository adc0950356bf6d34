#pragma once

// Exhaustive finite-model checking of transit-function axioms, with
// counterexample witnesses.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xover/limits.hpp"
#include "xover/transit_table.hpp"

namespace xover {

/// Declared in catalog order, which is also the order of their ids as strings.
enum class Axiom {
  A1, A2, A2p, A3, A4, AX, AXp, B1, B2, B3, C4, CG, CGp,
  GW3, GW4, H3, M, MG, MM, MO, Pa, S1, S2, T1, T2, T3,
};

/// Every axiom, in catalog order.
const std::vector<Axiom>& axiom_catalog();
std::string_view axiom_id(Axiom a);
/// Throws PreconditionError listing the catalog on an unknown id.
Axiom parse_axiom(std::string_view id);

/// Parameters of A2 and A2'. A2 takes `n`, defaulting to the degree of the
/// underlying graph. A2' takes the alphabet sizes, defaulting to the spec of
/// the table's words.
struct AxiomParams {
  std::optional<unsigned> n;
  std::optional<std::vector<std::uint32_t>> sizes;
};

/// Which function an axiom was evaluated on.
enum class Evaluated { table, closure };

struct CheckOptions {
  AxiomParams params;
  Limits limits;
  /// Evaluate S1, S2 and MO on the closure instead of the table itself.
  bool closure_for_geometric = false;
};

struct AxiomReport {
  Axiom axiom{};
  bool holds = true;
  /// Carrier indices of the first violation in canonical quantifier order,
  /// named in the order the variables appear in the axiom.
  std::vector<std::size_t> witness;
  std::size_t universe = 0;
  Evaluated evaluated = Evaluated::table;
  /// Not evaluated (carrier above a guardrail, or missing parameters); see note.
  bool skipped = false;
  std::string note;
};

AxiomReport check_axiom(const TransitTable& table, Axiom axiom, const CheckOptions& options = {});

/// Re-evaluates the axiom body at one witness tuple; true iff the body holds there.
/// A2 and A2' are checked per element x as "deg(x) = delta and |X| matches".
bool axiom_holds_at(const TransitTable& table, Axiom axiom, const std::vector<std::size_t>& witness,
                    const CheckOptions& options = {});

/// The full catalog, in catalog order. Six-variable axioms over carriers above
/// limits.max_six_variable_carrier, and A2' without known alphabet sizes, are
/// reported as skipped rather than aborting the run. Implications between axioms are then verified;
/// see check_implications.
std::vector<AxiomReport> check_all(const TransitTable& table, const CheckOptions& options = {});

/// Throws InternalError when the reports contradict a known implication:
/// M => GW3, M => B2, Pa => B3, C4 => B1, CG => B2 (each only for tables
/// satisfying T1-T3), and CG => connected underlying graph.
void check_implications(const TransitTable& table, const std::vector<AxiomReport>& reports);

/// delta(R): the common degree of the underlying graph, or nullopt if it is not regular.
std::optional<std::size_t> transit_degree(const TransitTable& table);

/// First triple whose pairwise transit sets do not meet in exactly one element.
std::optional<std::vector<std::size_t>> find_non_unique_median(const TransitTable& table);

struct RecognitionResult {
  bool recognized = false;
  /// Set when connectivity was established through (Pa) on the closure.
  bool via_pasch_closure = false;
  std::vector<AxiomReport> reports;
};

/// Underlying graph is the n-cube iff A1 and A2 hold. Requires a connected
/// underlying graph, or a closure satisfying Pa; otherwise throws
/// PreconditionError("connectivity precondition unmet").
RecognitionResult recognize_hypercube(const TransitTable& table, unsigned n,
                                      const Limits& limits = {});
/// Underlying graph is the Hamming graph with the given alphabet sizes iff A1,
/// A2', A3 and A4 hold. Same precondition as recognize_hypercube.
RecognitionResult recognize_hamming(const TransitTable& table, std::vector<std::uint32_t> sizes,
                                    const Limits& limits = {});

}  // namespace xover
