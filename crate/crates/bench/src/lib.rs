//! Criterion benchmarks for `delta2d`; see `benches/`.
