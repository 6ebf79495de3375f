#include "khplasma/sweep.hpp"

namespace khplasma {

const std::vector<Table1Entry>& table1_reference() {
    static const std::vector<Table1Entry> entries = {
        {"F", 0.0001, 100.0, -1.9799255},   {"F", 0.0004, 100.0, -1.9797005},
        {"F", 0.001, 100.0, -1.9792506},    {"F", 0.004, 100.0, -1.9770016},
        {"F", 0.01, 100.0, -1.9725072},     {"F", 0.04, 100.0, -1.9501083},
        {"lambda_D", 0.01, 5.0, -1.5959955}, {"lambda_D", 0.01, 10.0, -1.7929741},
        {"lambda_D", 0.01, 20.0, -1.8925671}, {"lambda_D", 0.01, 40.0, -1.9425144},
        {"lambda_D", 0.01, 80.0, -1.9675077}, {"lambda_D", 0.01, 100.0, -1.9725072},
    };
    return entries;
}

std::vector<Table1Row> regenerate_table1(double alpha0) {
    std::vector<Table1Row> rows;
    rows.reserve(table1_reference().size());
    for (const Table1Entry& entry : table1_reference()) {
        Table1Row row;
        row.entry = entry;
        row.computed = total_energy(ModelParams::hydrogen(entry.lambda_D, entry.F, alpha0));
        row.deviation = row.computed.total - entry.reference;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace khplasma
