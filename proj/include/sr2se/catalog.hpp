#pragma once

// Named objects: the SR2SEs with degree at most 7 listed by id (R1.1 ...
// R7.7), signed cubes, hypercubes, folded cubes and a few small examples.

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sr2se/core.hpp"
#include "sr2se/weighing.hpp"

namespace sr2se {

enum class RowSource {
  Constructed,  // closed-form construction, possibly followed by ltimes K2
  Searched,     // signature search over a fixed underlying graph
  Weighing,     // weighing matrix (searched with a budget, or ingested)
};

struct CatalogRow {
  std::string id;
  std::size_t n = 0;
  std::size_t r = 0;
  bool bipartite = true;
  std::string description;
  RowSource source = RowSource::Constructed;
};

/// The rows R1.1 .. R7.7 in table order.
const std::vector<CatalogRow>& sr2se_table();
const CatalogRow* find_row(const std::string& id);

struct CatalogOptions {
  /// Weighing matrices supplied by the user, keyed by row id (R5.1, R6.3, ...).
  std::map<std::string, WeighingMatrix> ingested;
  /// Rows backed by a weighing matrix may be found by a budgeted search when
  /// nothing was ingested. With this off such rows require ingestion.
  bool allow_weighing_search = true;
};

using CatalogObject = std::variant<SignedGraph, UnderlyingGraph>;

/// Ids: R<r>.<k>, G<r> (signed cube), Q<r> (hypercube), FQ<r> (folded cube),
/// B742 (biplane incidence), Clebsch, Gewirtz, Heawood, K22, K4, T.
/// Table rows are checked against their order, degree, lambda^2 = r and
/// bipartiteness before being returned.
CatalogObject catalog(const std::string& id, const CatalogOptions& options = {});

/// Same, but the object must be a signed graph (underlying-only ids become
/// their all-positive signing).
SignedGraph catalog_signed(const std::string& id, const CatalogOptions& options = {});

/// Checks a signed graph against a table row; the refusal names the mismatch.
Outcome<CatalogRow> check_row(const CatalogRow& row, const SignedGraph& g);

std::vector<std::string> catalog_ids();

}  // namespace sr2se
