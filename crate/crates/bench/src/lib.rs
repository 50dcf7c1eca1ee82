//! Criterion benchmarks for Smith normal form and the catalog pipeline; see `benches/`.
