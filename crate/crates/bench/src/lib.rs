//! Benchmark-only crate; see `benches/zeros.rs`.
