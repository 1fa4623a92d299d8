#pragma once

// Hot matrix kernels. Each has an OpenMP version and a serial reference
// implementation; the two must agree exactly (see tests and bench/).

#include <cstdint>
#include <optional>

#include "sr2se/core.hpp"
#include "sr2se/matrix.hpp"

namespace sr2se::kernels {

/// A^2 for a signed adjacency matrix, using neighbour lists.
IntMatrix signed_square(const SignedGraph& g);
IntMatrix signed_square_serial(const SignedGraph& g);

/// S * A where S is dense and A is the signed adjacency of g.
IntMatrix times_adjacency(const IntMatrix& s, const SignedGraph& g);
IntMatrix times_adjacency_serial(const IntMatrix& s, const SignedGraph& g);

/// Dense product.
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix multiply_serial(const IntMatrix& a, const IntMatrix& b);

struct EntryViolation {
  std::size_t row;
  std::size_t col;
  std::int64_t value;
};

/// First (row-major) entry where A^2 differs from c*I, or nullopt if A^2 = cI.
std::optional<EntryViolation> square_scalar_violation(const SignedGraph& g, std::int64_t c);
std::optional<EntryViolation> square_scalar_violation_serial(const SignedGraph& g, std::int64_t c);

int max_threads();

}  // namespace sr2se::kernels
