#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "coincider/arrangement.hpp"
#include "coincider/fp_matrix.hpp"

namespace coincider {

/// Order-complex chains of a finite strict poset, grouped by dimension
/// (a chain of t+1 nodes is a t-simplex).
class SubposetComplex {
 public:
  /// up[i] lists the nodes strictly above node i, each list sorted.
  SubposetComplex(int n, const std::vector<std::vector<int>>& up);

  int top_dim() const { return static_cast<int>(chains_.size()) - 1; }
  long long count(int t) const { return t <= top_dim() ? counts_[t] : 0; }
  std::vector<long long> chain_counts() const { return counts_; }

  /// -1 + sum_t (-1)^t N_t; independent of coefficients.
  long long reduced_euler() const;

  /// Boundary matrices mod p with orientation by chain position parity.
  ChainComplexFp complex_mod(int p) const;

 private:
  long long id_of(int t, const int* nodes) const;

  std::vector<std::vector<int>> chains_;  // chains_[t]: flat, stride t+1
  std::vector<long long> counts_;
  std::vector<std::unordered_map<std::string, long long>> ids_;
};

/// Reduced Betti numbers (entry [d+1] = beta~_d, d >= -1) of the order
/// complex of the open interval (bottom, x) in the lattice.
std::vector<long long> order_complex_homology(const ArrangementLattice& lat, int x, int p);

struct BettiReport {
  std::string family;
  int ambient = 0;
  int q = 0, k = 0, m = 0;
  std::vector<int> primes;
  std::map<int, std::vector<long long>> betti;  // per prime; index = degree i >= 0
  long long lattice_size = 0;
  int claimed_vanishing_degree = -1;  // beta~_i must vanish for i <= this
  bool vanishing_pass = true;
  int offending_degree = -1;
  int offending_prime = 0;
  bool euler_check_pass = true;
  bool cw_check_ran = false;
  bool cw_check_pass = true;
  std::vector<std::string> annotations;
};

/// Reduced Betti numbers of R^ambient minus the arrangement, assembled from
/// per-interval order-complex homology:
///   beta~_i(complement) = sum over x > bottom of beta~_{codim(x)-2-i}((bottom,x)).
/// Runs the Euler-characteristic cross-check always, and an independent CW
/// model cross-check when ambient <= 4. When assert_connectivity is set,
/// throws AssertionFailureError if the family's vanishing band fails.
BettiReport complement_betti(const SubspaceArrangement& a, const std::vector<int>& primes,
                             bool assert_connectivity = false, int threads = 0);

/// Independent check path for ambient <= 4: a regular CW model of S^(q-1)
/// whose cells are (ordered set partition of [q], sign of the coordinate
/// sum); the complement of the k-equal subset deformation-retracts onto the
/// order complex of the remaining cells.
std::map<int, std::vector<long long>> cw_complement_betti_kequal(int q, int k,
                                                                 const std::vector<int>& primes);

}  // namespace coincider
