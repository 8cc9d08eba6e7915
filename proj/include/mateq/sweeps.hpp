#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mateq/matrix.hpp"

namespace mateq {

/// Outcome of one verification suite: pass/fail, named counters (in insertion
/// order), and capped failure details for diagnosis.
struct SweepReport {
  std::string name;
  bool pass = true;
  std::vector<std::pair<std::string, long long>> counters;
  std::vector<std::string> failures;
  std::vector<std::string> notes;  ///< informational details (e.g. found witnesses)
  double seconds = 0.0;

  void count(const std::string& key, long long delta = 1);
  void fail(const std::string& detail);

  /// One-line summary: "PASS name k1=v1 k2=v2 (1.23s)".
  [[nodiscard]] std::string to_line() const;
};

/// Every rows x cols matrix over a prime field, in odometer order
/// (CapExceeded if p^(rows*cols) exceeds cap).
[[nodiscard]] std::vector<Matrix> all_matrices(std::size_t rows, std::size_t cols,
                                               const FieldSpec& field,
                                               std::size_t cap = 1'000'000);

/// Random rational matrix with numerators in [-3, 3] and denominators in
/// {1, 2, 3} — small enough to keep exact arithmetic fast, rich enough to
/// exercise non-integer pivots.
[[nodiscard]] Matrix random_rational_matrix(std::mt19937_64& rng, std::size_t rows,
                                            std::size_t cols);

/// Random matrix over GF(p), entries uniform.
[[nodiscard]] Matrix random_residue_matrix(std::mt19937_64& rng, std::size_t rows,
                                           std::size_t cols, const FieldSpec& field);

/// Exhaustive GF(2) 2x2 sweep of the two-sided power equation a^m X b^n = c:
/// the closed-form consistency test must agree with the vectorization oracle
/// AND with brute-force enumeration of all candidate X; for every consistent
/// instance the generator must be reproductive, its image must equal the
/// oracle's solution set, and enumerating the generator over all inputs must
/// reproduce the oracle's enumeration element for element.
[[nodiscard]] SweepReport sweep_cline_exhaustive_gf2(unsigned m, unsigned n);

/// Exhaustive GF(2) 2x2 sweep (m = n = 1) of the simultaneous pair
/// a^m X = b, X d^n = e: three-clause consistency must agree with the oracle
/// and with brute force; canonical common solutions verify; generator images
/// match the oracle set.
[[nodiscard]] SweepReport sweep_penrose_exhaustive_gf2();

/// Exhaustive GF(3) 2x2 sweep, k in {1,2,3}, of the commuting-inner-inverse
/// pair: oracle verdict vs brute force; canonical context identities; every
/// solution is a fixed point of the generator; generator image equals the
/// solution set; consistency whenever k reaches the index of a.
[[nodiscard]] SweepReport sweep_kcomm_exhaustive_gf3();

/// Random GF(2) 3x3 samples of the same checks (brute force over all 512
/// candidates per instance).
[[nodiscard]] SweepReport sweep_kcomm_random_gf2_3x3(std::uint64_t seed, std::size_t samples);

/// Random consistent rational instances of all three families (built from a
/// planted solution, or — for the commuting pair — a power at the index, which
/// is always consistent): the canonical generator must be reproductive, the
/// anchored variant must be reproductive exactly at the canonical anchor, and
/// the generator image must equal the oracle set.
[[nodiscard]] SweepReport sweep_random_rational_families(std::uint64_t seed,
                                                         std::size_t per_family);

/// Exhaustive GF(2) 2x2 search (m = n = 1) for a consistent two-sided instance
/// with a solution that lies outside {G * c * G' : G, G' inner inverses} —
/// demonstrating that anchored generators reach solutions the pure
/// inverse-product form cannot.
[[nodiscard]] SweepReport sweep_cline_anchor_witness_gf2();

/// Random cross-checks of the primitives: the canonical inner inverse is a
/// member of the full inner-inverse solution set (mixed shapes, both field
/// kinds), and the index agrees with an independent naive rank-stabilization
/// loop on random square matrices.
[[nodiscard]] SweepReport sweep_primitive_cross_checks(std::uint64_t seed, std::size_t samples);

}  // namespace mateq
