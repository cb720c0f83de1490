//! Worker-count plumbing for solvers whose outer loops run independently.

/// Runs `op` on a dedicated pool of `jobs` threads, or inline when `jobs <= 1`.
pub fn with_jobs<T, F>(jobs: usize, op: F) -> T
where
    T: Send,
    F: FnOnce() -> T + Send,
{
    if jobs <= 1 {
        return op();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(op),
        // Falling back to the global pool keeps results identical.
        Err(_) => op(),
    }
}
