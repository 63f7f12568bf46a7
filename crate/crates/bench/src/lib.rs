//! Criterion benchmarks for `staralg`; see `benches/`.
