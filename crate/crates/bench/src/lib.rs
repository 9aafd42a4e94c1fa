//! Benchmark-only crate; see `benches/chebint.rs`.
