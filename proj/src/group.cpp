#include "coincider/group.hpp"

#include <stdexcept>

#include "coincider/errors.hpp"

namespace coincider {

GroupTable::GroupTable(int order, std::vector<std::uint16_t> mult, std::string label)
    : q_(order), mult_(std::move(mult)), label_(std::move(label)) {
  if (q_ < 1 || q_ > 4096) {
    throw InvalidInputError("group order must be in [1, 4096], got " + std::to_string(q_));
  }
  if (mult_.size() != static_cast<std::size_t>(q_) * q_) {
    throw InvalidInputError("multiplication table size does not match order");
  }
  for (std::uint16_t v : mult_) {
    if (v >= q_) throw InvalidInputError("multiplication table entry out of range");
  }
  inverses_.assign(q_, 0);
  for (int g = 0; g < q_; ++g) {
    bool found = false;
    for (int h = 0; h < q_; ++h) {
      if (this->mult(g, h) == 0 && this->mult(h, g) == 0) {
        inverses_[g] = static_cast<std::uint16_t>(h);
        found = true;
        break;
      }
    }
    if (!found) {
      throw InvalidInputError("element " + std::to_string(g) + " has no two-sided inverse");
    }
  }
}

int GroupTable::element_order(int g) const {
  if (g < 0 || g >= q_) throw InvalidInputError("element index out of range");
  int n = 1;
  int cur = g;
  while (cur != 0) {
    cur = mult(cur, g);
    ++n;
    if (n > q_) throw InvalidInputError("element order exceeds group order; table is not a group");
  }
  return n;
}

void GroupTable::validate() const {
  for (int g = 0; g < q_; ++g) {
    if (mult(0, g) != g || mult(g, 0) != g) {
      throw InvalidInputError("index 0 is not a two-sided identity at element " + std::to_string(g));
    }
  }
  for (int g = 0; g < q_; ++g) {
    const int h = inverse(g);
    if (mult(g, h) != 0 || mult(h, g) != 0) {
      throw InvalidInputError("inverse table broken at element " + std::to_string(g));
    }
  }
  if (q_ <= 64) {
    for (int a = 0; a < q_; ++a) {
      for (int b = 0; b < q_; ++b) {
        for (int c = 0; c < q_; ++c) {
          if (mult(mult(a, b), c) != mult(a, mult(b, c))) {
            throw InvalidInputError("associativity fails at (" + std::to_string(a) + ", " +
                                    std::to_string(b) + ", " + std::to_string(c) + ")");
          }
        }
      }
    }
  } else {
    // Light's test on generators would still be quadratic in q; for the large
    // tables we construct ourselves, spot-check associativity on a sample.
    for (int a = 0; a < q_; a += 7) {
      for (int b = 0; b < q_; b += 11) {
        for (int c = 0; c < q_; c += 13) {
          if (mult(mult(a, b), c) != mult(a, mult(b, c))) {
            throw InvalidInputError("associativity fails at (" + std::to_string(a) + ", " +
                                    std::to_string(b) + ", " + std::to_string(c) + ")");
          }
        }
      }
    }
  }
  // Cancellation: each row and column is a permutation.
  std::vector<char> seen(q_);
  for (int g = 0; g < q_; ++g) {
    seen.assign(q_, 0);
    for (int h = 0; h < q_; ++h) seen[mult(g, h)] = 1;
    for (int h = 0; h < q_; ++h) {
      if (!seen[h]) {
        throw InvalidInputError("row " + std::to_string(g) + " is not a permutation");
      }
    }
  }
}

GroupPtr make_cyclic(int q) {
  if (q < 1 || q > 4096) {
    throw InvalidInputError("cyclic group order must be in [1, 4096], got " + std::to_string(q));
  }
  std::vector<std::uint16_t> mult(static_cast<std::size_t>(q) * q);
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) {
      mult[static_cast<std::size_t>(i) * q + j] = static_cast<std::uint16_t>((i + j) % q);
    }
  }
  return std::make_shared<GroupTable>(q, std::move(mult), "Z" + std::to_string(q));
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

GroupPtr make_p_torus(int p, int n) {
  if (!is_prime(p)) {
    throw InvalidInputError("p-torus requires a prime p, got " + std::to_string(p));
  }
  if (n < 1) throw InvalidInputError("p-torus rank must be >= 1");
  std::int64_t q64 = 1;
  for (int i = 0; i < n; ++i) {
    q64 *= p;
    if (q64 > 4096) throw InvalidInputError("p-torus order p^n exceeds 4096");
  }
  const int q = static_cast<int>(q64);
  // Element index encodes base-p digits, least significant digit first.
  std::vector<std::uint16_t> mult(static_cast<std::size_t>(q) * q);
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) {
      int a = i, b = j, out = 0, place = 1;
      for (int t = 0; t < n; ++t) {
        out += ((a % p + b % p) % p) * place;
        a /= p;
        b /= p;
        place *= p;
      }
      mult[static_cast<std::size_t>(i) * q + j] = static_cast<std::uint16_t>(out);
    }
  }
  return std::make_shared<GroupTable>(
      q, std::move(mult), "(Z" + std::to_string(p) + ")^" + std::to_string(n));
}

GroupSubset::GroupSubset(GroupPtr g, std::uint64_t m) : group(std::move(g)), mask(m) {
  if (!group) throw InvalidInputError("subset requires a group");
  if (group->order() > 64) throw InvalidInputError("subsets are supported only for q <= 64");
  if (group->order() < 64 && (mask >> group->order()) != 0) {
    throw InvalidInputError("subset mask has bits beyond the group order");
  }
}

GroupSubset::GroupSubset(GroupPtr g, const std::vector<int>& members)
    : group(std::move(g)) {
  if (!group) throw InvalidInputError("subset requires a group");
  if (group->order() > 64) throw InvalidInputError("subsets are supported only for q <= 64");
  for (int e : members) {
    if (e < 0 || e >= group->order()) throw InvalidInputError("subset member out of range");
    mask |= (std::uint64_t{1} << e);
  }
}

int GroupSubset::size() const { return __builtin_popcountll(mask); }

std::vector<int> GroupSubset::members() const {
  std::vector<int> out;
  for (int g = 0; g < group->order(); ++g) {
    if (contains(g)) out.push_back(g);
  }
  return out;
}

GroupSubset GroupSubset::complement() const {
  const int q = group->order();
  const std::uint64_t full = (q == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << q) - 1);
  return GroupSubset(group, full & ~mask);
}

GroupSubset act_on_subset(int g, const GroupSubset& M) {
  const int q = M.group->order();
  if (g < 0 || g >= q) throw InvalidInputError("group element out of range");
  std::uint64_t out = 0;
  for (int m = 0; m < q; ++m) {
    if (M.contains(m)) out |= (std::uint64_t{1} << M.group->mult(g, m));
  }
  return GroupSubset(M.group, out);
}

bool subset_is_group_fixed(const GroupSubset& M) {
  const int q = M.group->order();
  for (int g = 1; g < q; ++g) {
    if (!(act_on_subset(g, M) == M)) return false;
  }
  return true;
}

std::vector<std::uint64_t> enumerate_subsets(int q, int m) {
  if (q < 0 || q > 64 || m < 0 || m > q) throw InvalidInputError("bad subset enumeration bounds");
  std::vector<std::uint64_t> out;
  if (m == 0) {
    out.push_back(0);
    return out;
  }
  // Gosper's hack: iterate m-bit masks in increasing numeric order.
  std::uint64_t v = (m == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1);
  while (true) {
    out.push_back(v);
    const std::uint64_t c = v & (~v + 1);
    const std::uint64_t r = v + c;
    if (r == 0) break;  // carried out of 64 bits: v was the top mask
    const std::uint64_t next = (((r ^ v) >> 2) / c) | r;
    if (q < 64 && (next >> q) != 0) break;
    if (next < v) break;  // wrapped
    v = next;
  }
  return out;
}

Rational IGVector::sum() const {
  Rational s = 0;
  for (const Rational& c : coefficients) s += c;
  return s;
}

IGVector project_to_ig(const std::vector<Rational>& v) {
  if (v.empty()) throw InvalidInputError("cannot project an empty coefficient vector");
  Rational mean = 0;
  for (const Rational& c : v) mean += c;
  mean /= static_cast<int>(v.size());
  IGVector out;
  out.coefficients.reserve(v.size());
  for (const Rational& c : v) out.coefficients.push_back(c - mean);
  return out;
}

}  // namespace coincider
