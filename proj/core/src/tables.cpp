#include "spinlift/tables.hpp"

#include "spinlift/spinoriality.hpp"

namespace spinlift {

std::vector<TableRow> emit_table1() {
  std::vector<TableRow> rows;
  for (int n = 2; n <= 6; ++n) {
    for (const Partition& shape : enumerate_partitions(n)) {
      RepDescriptor rep = RepDescriptor::specht(shape);
      SpinReport sn = classify_sn(rep);
      TableRow row;
      row.shape = shape;
      row.chiral = sn.chiral.value();
      row.sn_spinorial = sn.spinorial;
      // A_2 is trivial and A_3 has odd order, so every orthogonal
      // representation lifts; the classifier proper starts at n = 4.
      row.an_spinorial = n >= 4 ? classify_an_restriction(rep).spinorial : true;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<Table2Row> emit_table2() {
  std::vector<Table2Row> rows;
  for (int n = 3; n <= 15; ++n) {
    for (const Partition& shape : enumerate_partitions(n)) {
      if (!shape.self_conjugate() || shape.epsilon() != 1) continue;
      Table2Row row;
      row.shape = shape;
      row.size = n;
      row.spinorial =
          classify_an_irreducible(
              AnIrreducibleLabel::make(shape, AnVariant::Plus))
              .spinorial;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string csv_shape(const Partition& shape) {
  return "\"" + shape.to_string() + "\"";
}

std::string table1_csv() {
  std::string out = "shape,chirality,spinoriality_sn,spinoriality_an\n";
  for (const TableRow& row : emit_table1()) {
    out += csv_shape(row.shape);
    out += row.chiral ? ",chiral" : ",achiral";
    out += row.sn_spinorial ? ",spinorial" : ",aspinorial";
    out += row.an_spinorial ? ",spinorial\n" : ",aspinorial\n";
  }
  return out;
}

std::string table2_csv() {
  std::string out = "shape,size,spinoriality\n";
  for (const Table2Row& row : emit_table2()) {
    out += csv_shape(row.shape);
    out += "," + std::to_string(row.size);
    out += row.spinorial ? ",spinorial\n" : ",aspinorial\n";
  }
  return out;
}

}  // namespace spinlift
