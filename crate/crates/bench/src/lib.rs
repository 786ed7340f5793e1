//! Criterion benchmarks for the knit library; see `benches/`.
