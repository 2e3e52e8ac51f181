//! Benchmark-only crate; the targets live under `benches/`.
//!
//! Run with `cargo bench -p qcatalan-bench`.
