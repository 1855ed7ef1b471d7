//! Criterion benchmarks for `lielab`; see `benches/exact.rs`.
