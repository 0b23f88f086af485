//! Benchmarks for graphsign-core live in `benches/`.
