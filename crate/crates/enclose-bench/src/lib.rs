//! Benchmark-only crate; see benches/solver.rs.
