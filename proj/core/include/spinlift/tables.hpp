#pragma once

#include <string>
#include <vector>

#include "spinlift/partition.hpp"

namespace spinlift {

/// One row of the small-shape classification table: chirality, lift verdict
/// over the symmetric group, lift verdict for the restriction to the
/// alternating group.  Derived entirely from the classifiers.
struct TableRow {
  Partition shape;
  bool chiral = false;
  bool sn_spinorial = false;
  bool an_spinorial = false;
};

/// Rows for every shape of 2 <= n <= 6, in decreasing lexicographic order
/// within each n.
std::vector<TableRow> emit_table1();

/// One row of the split-constituent table for self-conjugate shapes with
/// epsilon = +1.
struct Table2Row {
  Partition shape;
  int size = 0;
  bool spinorial = false;  ///< verdict for either split constituent
};

/// Rows for every self-conjugate shape with epsilon = +1 and 3 <= n <= 15,
/// in decreasing lexicographic order within each n.
std::vector<Table2Row> emit_table2();

/// CSV renderings; deterministic, no floating point.
std::string table1_csv();
std::string table2_csv();

/// Shape field as it appears in the CSV output ("4,2" quoted).
std::string csv_shape(const Partition& shape);

}  // namespace spinlift
