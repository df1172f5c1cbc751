//! Benchmarks for the solenoid-core kernels live in `benches/`.
