#include <cmath>

#include <gtest/gtest.h>

#include "khplasma/errors.hpp"
#include "khplasma/sweep.hpp"

using namespace khplasma;

TEST(Sweep, ParameterNames) {
    EXPECT_EQ(parse_sweep_parameter("F"), SweepParameter::F);
    EXPECT_EQ(parse_sweep_parameter("field"), SweepParameter::F);
    EXPECT_EQ(parse_sweep_parameter("lambda-d"), SweepParameter::lambda_D);
    EXPECT_EQ(parse_sweep_parameter("lambda_D"), SweepParameter::lambda_D);
    EXPECT_EQ(parse_sweep_parameter("alpha0"), SweepParameter::alpha0);
    EXPECT_THROW(parse_sweep_parameter("omega"), InputError);
    EXPECT_EQ(to_string(SweepParameter::lambda_D), "lambda_D");
}

TEST(Sweep, ValueGenerators) {
    const auto lin = SweepSpec::linear(0.0, 1.0, 5);
    ASSERT_EQ(lin.size(), 5u);
    EXPECT_DOUBLE_EQ(lin[1], 0.25);
    EXPECT_DOUBLE_EQ(lin.back(), 1.0);
    const auto geo = SweepSpec::geometric(1.0, 100.0, 3);
    ASSERT_EQ(geo.size(), 3u);
    EXPECT_NEAR(geo[1], 10.0, 1e-12);
    EXPECT_DOUBLE_EQ(geo.back(), 100.0);
    EXPECT_EQ(SweepSpec::linear(2.0, 3.0, 1), std::vector<double>{2.0});
}

TEST(Sweep, RowsMatchDirectEvaluation) {
    SweepSpec spec;
    spec.vary = SweepParameter::F;
    spec.values = SweepSpec::linear(0.0, 0.04, 9);
    spec.fixed = ModelParams::hydrogen(100.0, 0.0);
    spec.outputs.potential_r = {0.5, 1.0};
    const auto rows = run_sweep(spec);
    ASSERT_EQ(rows.size(), spec.values.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const ModelParams p = ModelParams::hydrogen(100.0, spec.values[i]);
        EXPECT_EQ(rows[i].value, spec.values[i]);
        ASSERT_TRUE(rows[i].breakdown.has_value());
        EXPECT_EQ(*rows[i].breakdown, total_energy(p));
        EXPECT_FALSE(rows[i].oracle_energy.has_value());
        ASSERT_EQ(rows[i].potential_samples.size(), 2u);
        EXPECT_EQ(rows[i].potential_samples[1], model_potential(1.0, p));
    }
}

TEST(Sweep, ThreadedRunIsIdentical) {
    SweepSpec spec;
    spec.vary = SweepParameter::lambda_D;
    spec.values = SweepSpec::geometric(2.0, 200.0, 40);
    spec.fixed = ModelParams::hydrogen(1.0, 0.01);
    const auto serial = run_sweep(spec);
    spec.threads = 4;
    const auto threaded = run_sweep(spec);
    ASSERT_EQ(serial.size(), threaded.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        EXPECT_EQ(serial[i].breakdown, threaded[i].breakdown);
    }
}

TEST(Sweep, RejectsBadValues) {
    SweepSpec spec;
    spec.vary = SweepParameter::lambda_D;
    spec.fixed = ModelParams::hydrogen(10.0, 0.01);
    spec.values = {};
    EXPECT_THROW(run_sweep(spec), InputError);
    spec.values = {5.0, 4.0, 6.0};
    EXPECT_THROW(run_sweep(spec), InputError);
    spec.values = {1.0, 0.0, -1.0};
    try {
        run_sweep(spec);
        FAIL() << "expected InputError";
    } catch (const InputError& e) {
        EXPECT_NE(std::string(e.what()).find("lambda_D"), std::string::npos) << e.what();
    }
}

TEST(Sweep, ApplyValue) {
    const ModelParams base = ModelParams::hydrogen(10.0, 0.01, 1e-3);
    EXPECT_EQ(apply_sweep_value(base, SweepParameter::F, 0.2).F, 0.2);
    EXPECT_EQ(apply_sweep_value(base, SweepParameter::lambda_D, 3.0).lambda_D, 3.0);
    EXPECT_EQ(apply_sweep_value(base, SweepParameter::alpha0, 0.3).alpha0, 0.3);
    EXPECT_EQ(apply_sweep_value(base, SweepParameter::F, 0.2).lambda_D, 10.0);
}

TEST(Sweep, OracleColumns) {
    SweepSpec spec;
    spec.vary = SweepParameter::F;
    spec.values = {0.001, 0.01};
    spec.fixed = ModelParams::hydrogen(100.0, 0.0);
    spec.outputs.oracle = true;
    spec.outputs.overlap = true;
    spec.threads = 2;
    for (const SweepRow& row : run_sweep(spec)) {
        ASSERT_TRUE(row.oracle_energy && row.deviation && row.overlap);
        EXPECT_LT(*row.deviation, 1e-4);
        EXPECT_GE(*row.overlap, 0.999);
        EXPECT_EQ(*row.deviation, std::abs(row.breakdown->total - *row.oracle_energy));
    }
}

TEST(Comparison, TableSetsAgreeWithTheOracle) {
    for (const Table1Entry& entry : table1_reference()) {
        const OracleComparison cmp =
            compare_with_oracle(ModelParams::hydrogen(entry.lambda_D, entry.F));
        EXPECT_LT(cmp.deviation, 1e-4) << entry.row << " " << entry.F << " " << entry.lambda_D;
        EXPECT_GE(cmp.overlap, 0.999);
        EXPECT_TRUE(cmp.converged);
    }
}

TEST(Table1, Reference) {
    const auto& table = table1_reference();
    ASSERT_EQ(table.size(), 12u);
    EXPECT_EQ(table.front().row, "F");
    EXPECT_EQ(table.back().row, "lambda_D");
    for (const Table1Row& row : regenerate_table1()) {
        EXPECT_LT(std::abs(row.deviation), 5e-7) << row.entry.F << " " << row.entry.lambda_D;
        EXPECT_EQ(row.deviation, row.computed.total - row.entry.reference);
    }
}
