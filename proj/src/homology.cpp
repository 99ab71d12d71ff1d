#include "coincider/homology.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "coincider/errors.hpp"

namespace coincider {

namespace {

std::string chain_key(const int* nodes, int len) {
  return std::string(reinterpret_cast<const char*>(nodes),
                     static_cast<std::size_t>(len) * sizeof(int));
}

}  // namespace

SubposetComplex::SubposetComplex(int n, const std::vector<std::vector<int>>& up) {
  // Level 0: every node; level t: extend each (t-1)-chain past its last node.
  std::vector<int> level;
  level.reserve(n);
  for (int i = 0; i < n; ++i) level.push_back(i);
  int t = 0;
  while (!level.empty()) {
    chains_.push_back(level);
    counts_.push_back(static_cast<long long>(level.size()) / (t + 1));
    ids_.emplace_back();
    auto& table = ids_.back();
    table.reserve(static_cast<std::size_t>(counts_[t]) * 2);
    for (long long j = 0; j < counts_[t]; ++j) {
      table.emplace(chain_key(chains_[t].data() + j * (t + 1), t + 1), j);
    }
    std::vector<int> next;
    for (long long j = 0; j < counts_[t]; ++j) {
      const int* c = chains_[t].data() + j * (t + 1);
      for (int ext : up[c[t]]) {
        next.insert(next.end(), c, c + t + 1);
        next.push_back(ext);
      }
    }
    level = std::move(next);
    ++t;
  }
}

long long SubposetComplex::id_of(int t, const int* nodes) const {
  const auto it = ids_[t].find(chain_key(nodes, t + 1));
  if (it == ids_[t].end()) throw InvalidInputError("facet chain not found; poset order broken");
  return it->second;
}

long long SubposetComplex::reduced_euler() const {
  long long euler = -1;
  for (int t = 0; t <= top_dim(); ++t) euler += (t % 2 == 0 ? 1 : -1) * counts_[t];
  return euler;
}

ChainComplexFp SubposetComplex::complex_mod(int p) const {
  ChainComplexFp cx;
  cx.p = p;
  cx.cells = counts_;
  cx.boundary.resize(counts_.size());
  if (top_dim() >= 0) {
    cx.boundary[0].assign(static_cast<std::size_t>(counts_[0]), SparseColumn{{0, 1}});
  }
  std::vector<int> facet;
  for (int t = 1; t <= top_dim(); ++t) {
    auto& cols = cx.boundary[t];
    cols.resize(static_cast<std::size_t>(counts_[t]));
    facet.resize(t);
    for (long long j = 0; j < counts_[t]; ++j) {
      const int* c = chains_[t].data() + j * (t + 1);
      SparseColumn col;
      col.reserve(t + 1);
      for (int drop = 0; drop <= t; ++drop) {
        int w = 0;
        for (int i = 0; i <= t; ++i) {
          if (i != drop) facet[w++] = c[i];
        }
        const int row = static_cast<int>(id_of(t - 1, facet.data()));
        col.emplace_back(row, drop % 2 == 0 ? 1 : p - 1);
      }
      std::sort(col.begin(), col.end());
      cols[j] = std::move(col);
    }
  }
  return cx;
}

std::vector<long long> order_complex_homology(const ArrangementLattice& lat, int x, int p) {
  if (x <= 0 || x >= lat.size()) throw InvalidInputError("interval top must not be the bottom");
  const std::vector<int> interior = lat.open_interval_below(x);
  const int n = static_cast<int>(interior.size());
  std::vector<std::vector<int>> up(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (lat.less(interior[i], interior[j])) up[i].push_back(j);
    }
  }
  SubposetComplex complex(n, up);
  ChainComplexFp cx = complex.complex_mod(p);
  cx.validate();
  return cx.reduced_betti();
}

namespace {

// --- CW model of S^(q-1): cells are (ordered set partition, sign of sum) ---

struct SphereCell {
  std::vector<std::uint32_t> blocks;  // coordinate masks, ordered by decreasing value
  int sign = 0;                       // sign of sum(y), in {-1, 0, +1}
  int dim = 0;
};

void ordered_partitions_rec(std::uint32_t remaining, std::vector<std::uint32_t>& prefix,
                            std::vector<std::vector<std::uint32_t>>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  // Enumerate nonempty submasks of `remaining` as the next block.
  for (std::uint32_t block = remaining; block != 0; block = (block - 1) & remaining) {
    prefix.push_back(block);
    ordered_partitions_rec(remaining & ~block, prefix, out);
    prefix.pop_back();
  }
}

std::vector<SphereCell> sphere_cells(int q) {
  std::vector<std::vector<std::uint32_t>> partitions;
  std::vector<std::uint32_t> prefix;
  ordered_partitions_rec((1u << q) - 1, prefix, partitions);
  std::vector<SphereCell> cells;
  for (const auto& blocks : partitions) {
    const int r = static_cast<int>(blocks.size());
    for (int sign : {-1, 0, +1}) {
      if (r == 1 && sign == 0) continue;  // constant tuples have sum q*c != 0 on the sphere
      SphereCell cell;
      cell.blocks = blocks;
      cell.sign = sign;
      cell.dim = r - 1 - (sign == 0 ? 1 : 0);
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

// x lies in the closure of y: x's partition merges consecutive blocks of
// y's, and x's sign is y's or zero.
bool cell_in_closure(const SphereCell& x, const SphereCell& y) {
  if (!(x.sign == y.sign || x.sign == 0)) return false;
  std::size_t yi = 0;
  for (const std::uint32_t xb : x.blocks) {
    std::uint32_t acc = 0;
    while (acc != xb) {
      if (yi >= y.blocks.size() || (y.blocks[yi] & ~xb) != 0) return false;
      acc |= y.blocks[yi++];
    }
  }
  return yi == y.blocks.size();
}

}  // namespace

std::map<int, std::vector<long long>> cw_complement_betti_kequal(
    int q, int k, const std::vector<int>& primes) {
  if (q < 2 || q > 4) throw InvalidInputError("CW model supports 2 <= q <= 4");
  if (k < 2 || k > q) throw InvalidInputError("CW model requires 2 <= k <= q");
  const std::vector<SphereCell> cells = sphere_cells(q);

  // Regular CW structure sanity: Euler characteristic of S^(q-1).
  long long euler = 0;
  for (const SphereCell& c : cells) euler += c.dim % 2 == 0 ? 1 : -1;
  if (euler != 1 + (q % 2 == 0 ? -1 : 1)) {
    throw InvalidInputError("CW model fails the sphere Euler check");
  }

  // Complement cells: those not inside any k-equal subspace, i.e. all blocks
  // smaller than k.
  std::vector<int> keep;
  for (int i = 0; i < static_cast<int>(cells.size()); ++i) {
    bool in_arrangement = false;
    for (const std::uint32_t b : cells[i].blocks) {
      if (__builtin_popcount(b) >= k) in_arrangement = true;
    }
    if (!in_arrangement) keep.push_back(i);
  }

  const int n = static_cast<int>(keep.size());
  std::vector<std::vector<int>> up(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const SphereCell& a = cells[keep[i]];
      const SphereCell& b = cells[keep[j]];
      if (a.dim < b.dim && cell_in_closure(a, b)) up[i].push_back(j);
    }
  }
  SubposetComplex complex(n, up);
  std::map<int, std::vector<long long>> out;
  for (int p : primes) {
    ChainComplexFp cx = complex.complex_mod(p);
    cx.validate();
    const std::vector<long long> betti = cx.reduced_betti();
    // Degrees 0..q-1 (ambient bounds); drop the beta~_{-1} slot, which is 0
    // for the nonempty complement.
    std::vector<long long> by_degree(static_cast<std::size_t>(q), 0);
    for (int d = 0; d < q; ++d) {
      if (d + 1 < static_cast<int>(betti.size())) by_degree[d] = betti[d + 1];
    }
    out[p] = std::move(by_degree);
  }
  return out;
}

namespace {

struct IntervalResult {
  std::vector<long long> chain_counts;
  std::map<int, std::vector<long long>> betti;  // per prime, index d+1
};

IntervalResult interval_homology_all_primes(const ArrangementLattice& lat, int x,
                                            const std::vector<int>& primes) {
  const std::vector<int> interior = lat.open_interval_below(x);
  const int n = static_cast<int>(interior.size());
  std::vector<std::vector<int>> up(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (lat.less(interior[i], interior[j])) up[i].push_back(j);
    }
  }
  SubposetComplex complex(n, up);
  IntervalResult out;
  out.chain_counts = complex.chain_counts();
  for (int p : primes) {
    ChainComplexFp cx = complex.complex_mod(p);
    cx.validate();
    out.betti[p] = cx.reduced_betti();
  }
  return out;
}

}  // namespace

BettiReport complement_betti(const SubspaceArrangement& a, const std::vector<int>& primes,
                             bool assert_connectivity, int threads) {
  if (primes.empty()) throw InvalidInputError("at least one prime required");
  for (int p : primes) {
    if (!is_prime(p)) throw InvalidInputError("coefficients require a prime modulus");
  }
  const ArrangementLattice lat = intersection_lattice(a);

  BettiReport report;
  report.family = a.family;
  report.ambient = a.ambient;
  report.q = a.q;
  report.k = a.k;
  report.m = a.m;
  report.primes = primes;
  report.lattice_size = lat.size();

  // Per-interval homology for every x > bottom, in parallel, merged by index.
  std::vector<IntervalResult> results(static_cast<std::size_t>(lat.size()));
  int n_threads = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  n_threads = std::max(1, std::min({n_threads, 16, lat.size() - 1}));
  std::atomic<int> next{1};
  const auto worker = [&] {
    for (int x = next.fetch_add(1); x < lat.size(); x = next.fetch_add(1)) {
      results[x] = interval_homology_all_primes(lat, x, primes);
    }
  };
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  // Assembly: beta~_i(complement) += beta~_{codim(x)-2-i}((bottom, x)).
  for (int p : primes) report.betti[p].assign(static_cast<std::size_t>(a.ambient), 0);
  for (int x = 1; x < lat.size(); ++x) {
    const int codim = lat.elements[x].codim;
    for (int p : primes) {
      const auto& betti = results[x].betti.at(p);
      for (int slot = 0; slot < static_cast<int>(betti.size()); ++slot) {
        const int d = slot - 1;
        if (betti[slot] == 0) continue;
        const int i = codim - 2 - d;
        if (i < 0 || i >= a.ambient) {
          throw InvalidInputError("assembly degree out of ambient range");
        }
        report.betti[p][i] += betti[slot];
      }
    }
  }

  // Euler cross-check from chain counts alone:
  //   sum_i (-1)^i beta~_i = sum_x (-1)^codim(x) * reduced_euler((bottom,x)).
  long long rhs = 0;
  for (int x = 1; x < lat.size(); ++x) {
    long long euler = -1;
    const auto& counts = results[x].chain_counts;
    for (int t = 0; t < static_cast<int>(counts.size()); ++t) {
      euler += (t % 2 == 0 ? 1 : -1) * counts[t];
    }
    rhs += (lat.elements[x].codim % 2 == 0 ? 1 : -1) * euler;
  }
  for (int p : primes) {
    long long lhs = 0;
    for (int i = 0; i < a.ambient; ++i) {
      lhs += (i % 2 == 0 ? 1 : -1) * report.betti[p][i];
    }
    if (lhs != rhs) report.euler_check_pass = false;
  }

  // Independent CW cross-check for small ambient dimension.
  if (a.ambient <= 4) {
    if (a.family == "k-equal") {
      report.cw_check_ran = true;
      const auto cw = cw_complement_betti_kequal(a.q, a.k, primes);
      for (int p : primes) {
        if (cw.at(p) != report.betti[p]) report.cw_check_pass = false;
      }
    } else if (a.subspaces.size() == 1) {
      // Complement of a single subspace of codimension c retracts to S^(c-1).
      report.cw_check_ran = true;
      const int c = a.ambient - a.subspaces[0].rows;
      for (int p : primes) {
        for (int i = 0; i < a.ambient; ++i) {
          const long long expected = (i == c - 1) ? 1 : 0;
          if (report.betti[p][i] != expected) report.cw_check_pass = false;
        }
      }
    } else {
      report.annotations.push_back("no independent CW model for this family; ambient <= 4");
    }
    if (!report.cw_check_pass) {
      throw AssertionFailureError("CW cross-check disagrees with the lattice assembly");
    }
  }
  if (!report.euler_check_pass) {
    throw AssertionFailureError("Euler characteristic cross-check failed");
  }

  // Family vanishing bands and genus sandwich annotations.
  if (a.family == "k-equal") {
    report.claimed_vanishing_degree = a.k - 3;
    report.annotations.push_back("claim: beta~_i = 0 for i <= k-3 = " +
                                 std::to_string(report.claimed_vanishing_degree));
    report.annotations.push_back(
        "genus sandwich at transitive elementary abelian symmetry: lower bound k-1 = " +
        std::to_string(a.k - 1) +
        " (vanishing band + cohomological bound), upper bound k-1 (top-block cover); g = k-1");
  } else if (a.family == "v1") {
    report.claimed_vanishing_degree = (a.m - 1) * (a.q - 1) + a.k - 3;
    report.annotations.push_back("claim: beta~_i = 0 for i <= (m-1)(q-1)+k-3 = " +
                                 std::to_string(report.claimed_vanishing_degree));
    report.annotations.push_back(
        "genus lower bound (m-1)(q-1)+k-1 = " + std::to_string((a.m - 1) * (a.q - 1) + a.k - 1) +
        " from the vanishing band; matching upper bound for transitive elementary abelian "
        "symmetry");
  }
  for (int p : primes) {
    for (int i = 0; i <= report.claimed_vanishing_degree && i < a.ambient; ++i) {
      if (report.betti[p][i] != 0) {
        report.vanishing_pass = false;
        if (report.offending_degree < 0) {
          report.offending_degree = i;
          report.offending_prime = p;
        }
      }
    }
  }
  if (assert_connectivity && !report.vanishing_pass) {
    throw AssertionFailureError(
        "vanishing band violated: beta~_" + std::to_string(report.offending_degree) + " != 0 mod " +
        std::to_string(report.offending_prime));
  }
  return report;
}

}  // namespace coincider
