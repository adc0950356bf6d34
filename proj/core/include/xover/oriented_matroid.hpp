#pragma once

// Oriented matroids given by their topes: covector reconstruction, face
// axioms, the big face lattice, rank and uniformity.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xover/graph.hpp"
#include "xover/limits.hpp"
#include "xover/sign_vector.hpp"

namespace xover {

struct OrientedMatroidData {
  std::size_t ground_size = 0;
  /// All lists in canonical sign-vector order.
  std::vector<SignVector> covectors;
  std::vector<SignVector> topes;
  std::vector<SignVector> cocircuits;
  std::size_t rank = 0;
};

/// F = {X : X o T in T for every tope T}. Throws PreconditionError("tope set not
/// centrally symmetric") unless T = -T, and BudgetExceeded above
/// limits.max_ground_size. Also builds the face lattice to obtain the rank, so
/// it throws like face_lattice on a non-graded order.
OrientedMatroidData covectors_from_topes(std::vector<SignVector> topes, const Limits& limits = {});

struct FaceAxiomReport {
  bool holds = true;
  /// "F0".."F3" for the first failing axiom, empty when all hold.
  std::string axiom;
  /// Covectors involved: none for F0, X for F1, X and Y for F2 and F3.
  std::vector<SignVector> witness;
  /// The separating element for an F3 violation (0-based).
  std::optional<std::size_t> element;
};

/// F0-F3, exhaustively; the first violation in canonical order is reported.
/// All vectors must have one length, at most 12.
FaceAxiomReport check_face_axioms(const std::vector<SignVector>& f);

struct FaceLattice {
  /// Covectors in canonical order; node `nodes.size()` is the adjoined top.
  std::vector<SignVector> nodes;
  /// rank[i] for every node including the top (last entry).
  std::vector<std::size_t> rank;
  /// Hasse covers (lower, upper), sorted.
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  /// Number of nodes per rank, 0 up to the top.
  std::vector<std::size_t> level_sizes;

  std::size_t top() const noexcept { return nodes.size(); }
};

/// Covectors under conformal order plus a top. Throws
/// PreconditionError("not a valid OM lattice") unless the order is graded with
/// the zero vector as its unique minimum.
FaceLattice face_lattice(const std::vector<SignVector>& covectors);
FaceLattice face_lattice(const OrientedMatroidData& om);

/// Height of the topes in the face lattice.
std::size_t om_rank(const OrientedMatroidData& om);

struct UniformityReport {
  bool uniform = false;
  /// Common cocircuit support size, when all supports agree.
  std::optional<std::size_t> support_size;
  std::size_t cocircuit_count = 0;
};

UniformityReport is_uniform(const OrientedMatroidData& om);

struct UniformTopeCheck {
  bool symmetric = false;
  std::size_t tope_count = 0;
  /// VC-dimension d of the topes read as binary words.
  int vc_dimension = -1;
  /// 2 Phi_{d-1}(|E| - 1).
  std::uint64_t expected_count = 0;
  bool count_matches = false;
  bool holds = false;
};

/// T = -T and |T| = 2 Phi_{d-1}(|E| - 1), d the VC-dimension of T.
UniformTopeCheck uniform_tope_check(const std::vector<SignVector>& topes);

/// Sign images of R_k(0^n, 1^n).
std::vector<SignVector> topes_from_rset(unsigned k, std::size_t n);

/// covectors_from_topes(topes_from_rset(k, n)); requires 1 <= k < n and throws
/// InternalError if the topes fail uniform_tope_check.
OrientedMatroidData om_from_rset(unsigned k, std::size_t n, const Limits& limits = {});

/// Topes adjacent iff they differ in exactly one element; vertices carry the
/// topes as binary words, in canonical order.
SimpleGraph tope_graph(const std::vector<SignVector>& topes);

}  // namespace xover
