//! Criterion benchmarks for `bifix-core`; see `benches/algorithms.rs`.
