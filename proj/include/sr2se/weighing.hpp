#pragma once

// Weighing matrices W(n, r): square {0,±1} matrices with M^T M = rI, and
// their correspondence with bipartite SR2SEs.

#include <cstdint>
#include <optional>
#include <set>

#include "sr2se/core.hpp"
#include "sr2se/error.hpp"
#include "sr2se/matrix.hpp"
#include "sr2se/switching.hpp"

namespace sr2se {

struct WeighingMatrix {
  IntMatrix entries;
  std::size_t n = 0;
  std::int64_t r = 0;

  std::int64_t operator()(std::size_t i, std::size_t j) const { return entries(i, j); }
  friend bool operator==(const WeighingMatrix&, const WeighingMatrix&) = default;
};

/// M' = P M Q. Row i of M becomes row rows.perm[i] of M', scaled by
/// rows.signs[i]; column j likewise through cols.
struct EquivalenceWitness {
  SignedPermutation rows;
  SignedPermutation cols;

  IntMatrix apply(const IntMatrix& m) const;
};

Outcome<WeighingMatrix> verify_weighing(const IntMatrix& m);

/// Set of pairwise row intersection sizes. Faults for n < 2.
std::set<std::size_t> intersection_numbers(const WeighingMatrix& w);
bool has_zero_two_intersections(const WeighingMatrix& w);

/// Indecomposable: the row/column support graph is connected.
bool is_proper(const WeighingMatrix& w);

struct Schem2Form {
  WeighingMatrix matrix;
  EquivalenceWitness witness;  // witness.apply(original) == matrix
  std::size_t k = 0;           // n - C(r,2) - 1 trailing columns
};

/// Scheme-(2) normal form: row 0 has r leading +1s; rows 1..r-1 have +1 in
/// column 0 and -1 in column i; the pair (i, j) of those rows shares one
/// further column, +1 in row i and -1 in row j, in lexicographic pair order.
/// Faults unless the intersection numbers lie in {0, 2}.
Schem2Form schem2_normal_form(const WeighingMatrix& w);

bool scheme2_prefix_matches(const IntMatrix& m, std::int64_t r);

/// The signed graph [[O, M^T], [M, O]]: vertices 0..n-1 index columns,
/// n..2n-1 index rows. Faults when w is improper or its intersection numbers
/// are not in {0, 2}.
SignedGraph to_bipartite_sr2se(const WeighingMatrix& w);

/// Biadjacency block of a connected bipartite SR2SE with equal parts: the side
/// holding vertex 0 indexes the columns, both sides in increasing order.
WeighingMatrix from_bipartite_sr2se(const SignedGraph& g);

/// Decides M = P N Q (rows stay rows). Faults when n exceeds the cap.
std::optional<EquivalenceWitness> equivalent(const WeighingMatrix& a, const WeighingMatrix& b,
                                             std::size_t cap = kDefaultIsoCap);

}  // namespace sr2se
