//! Criterion benchmarks for `quotcount`; see `benches/`.
