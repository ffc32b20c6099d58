//! Benchmark-only crate; see `benches/okb.rs`.
