//! Criterion benchmarks for `ncgrowth-core`; see `benches/`.
