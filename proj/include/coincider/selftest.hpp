#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace coincider {

/// Claim anchors, each quoted verbatim from the statement it certifies.
/// Every assertion row cites exactly one.
namespace anchors {
inline constexpr const char* kGroup = "Let G be a finite group";
inline constexpr const char* kPattern = "a pattern of coincidence";
inline constexpr const char* kCover = "W(q,k) = V_1∪V_2∪⋯∪V_{k-1}";
inline constexpr const char* kCoverEquivariant = "gM = {gg_1,…,gg_m}";
inline constexpr const char* kTopBlock = "φ(g) > φ(h) ∀ g∈M";
inline constexpr const char* kKEqualConn = "it is (k-3)-connected";
inline constexpr const char* kKEqualModel =
    "complement to a system of (q-k+1)-dimensional linear subspaces";
inline constexpr const char* kV1Conn = "c-connected for c = (m-1)(q-1)+k-3";
inline constexpr const char* kPatternFpf = "acts on such patterns without fixed points";
inline constexpr const char* kSubsetFpf = "binom(G,m) has no G-fixed points for m < q";
inline constexpr const char* kHatEquivariant = "h·f̂(x) = f̂(hx)";
inline constexpr const char* kCoincRedef = "A(f,k) = f̂⁻¹(Δ_q^k(Y))";
inline constexpr const char* kNonempty = "the set A(f,p) is non-empty";
inline constexpr const char* kKnaster = "f(ρ(gx)) = c, and f(ρ(x)) ≤ c";
inline constexpr const char* kGenusThreshold = "g_G(X) > (|G|-1)(m-1) + k - 1";
}  // namespace anchors

/// One verified claim: the check's name, the formula it certifies, the
/// outcome, and a short measurement string for the report.
struct AssertionRow {
  std::string name;
  std::string anchor;
  bool pass = false;
  std::string detail;
};

bool all_pass(const std::vector<AssertionRow>& rows);

/// Index of the first failing row, or -1.
int first_failure(const std::vector<AssertionRow>& rows);

/// Deliberate corruption hooks for negative-control runs. MultTable flips
/// one multiplication-table entry before validation; ZeroTolerance forces
/// cluster_eps = 0 on a float tuple with ties just below the ambiguity band.
enum class Fault { None, MultTable, ZeroTolerance };

struct SelftestOptions {
  Fault fault = Fault::None;
  std::uint64_t seed = 0;
  int threads = 0;
  /// Shrinks sample counts and start counts for smoke runs.
  bool quick = false;
};

/// Counters from a randomized classification check over scalar orbit tuples.
struct CoverCheckStats {
  long long samples = 0;
  long long skipped_max_diagonal = 0;
  long long classified = 0;
  long long bad_multiplicity = 0;
  long long bad_equivariance = 0;
  long long bad_top_block = 0;
  long long failures = 0;        // sum of the three above
  std::vector<long long> per_m;  // histogram, index m = 1..k-1
};

/// Draws tuples from a tie-rich value pool, discards those on the k-wise
/// maximum diagonal, and checks for every survivor: the top block has
/// multiplicity m <= k-1; the classification commutes with every translation
/// (f_m(g.phi) = g.f_m(phi)); and the top-block set is the unique subset M
/// with phi(g) > phi(h) for g in M, h outside. Exact arithmetic when
/// rational is set, clustered float comparison otherwise.
CoverCheckStats run_cover_check(int q, int k, long long samples, std::uint64_t seed,
                                bool rational);

/// The acceptance matrix, one group of rows per criterion. Each function is
/// self-contained and deterministic for a fixed seed.
std::vector<AssertionRow> criterion_cover(std::uint64_t seed, long long samples_per_pair);
std::vector<AssertionRow> criterion_homology_band(int threads, int q_max = 7);
std::vector<AssertionRow> criterion_v1_band(int threads, int case_count = 3);
std::vector<AssertionRow> criterion_pattern_fixed_points();
std::vector<AssertionRow> criterion_subset_fixed_points();
std::vector<AssertionRow> criterion_orbit_map(std::uint64_t seed, int points);
std::vector<AssertionRow> criterion_solver_nonemptiness(std::uint64_t seed, int starts,
                                                        int threads);
std::vector<AssertionRow> criterion_knaster(std::uint64_t seed, int starts, int threads);
std::vector<AssertionRow> criterion_negative_controls(std::uint64_t seed);

/// Runs the whole matrix at default parameters (quick mode shrinks budgets).
/// A fault corrupts exactly one early row and leaves the rest untouched.
std::vector<AssertionRow> run_selftest(const SelftestOptions& opts = {});

}  // namespace coincider
