//! Criterion benchmarks for `branchcob`; see `benches/`.
