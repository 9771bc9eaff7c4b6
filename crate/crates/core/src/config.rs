use crate::error::{Error, Result};

/// Size guards and parallelism for the exponential solvers.
///
/// Guards are limits, not truncations: an instance above a guard is rejected
/// with [`Error::GuardExceeded`]. No solver accepts more than 64 vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverConfig {
    pub burning_max_vertices: usize,
    pub lazy_max_vertices: usize,
    pub independence_max_vertices: usize,
    pub spread_max_vertices: usize,
    pub spread_max_rounds: usize,
    /// Longest source sequence the burning search will try before giving up.
    /// `None` means no cap beyond the vertex count.
    pub burning_max_depth: Option<usize>,
    /// Worker threads for root-level branching. `None` uses the global rayon
    /// pool; `Some(1)` runs sequentially. Results do not depend on this.
    pub threads: Option<usize>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            burning_max_vertices: 18,
            lazy_max_vertices: 22,
            independence_max_vertices: 40,
            spread_max_vertices: 12,
            spread_max_rounds: 6,
            burning_max_depth: None,
            threads: None,
        }
    }
}

impl SolverConfig {
    /// Raises or lowers every vertex guard at once.
    pub fn with_max_vertices(mut self, n: usize) -> Self {
        self.burning_max_vertices = n;
        self.lazy_max_vertices = n;
        self.independence_max_vertices = n;
        self.spread_max_vertices = n;
        self
    }

    pub fn with_max_depth(mut self, depth: Option<usize>) -> Self {
        self.burning_max_depth = depth;
        self
    }

    pub fn with_threads(mut self, threads: Option<usize>) -> Self {
        self.threads = threads;
        self
    }

    pub(crate) fn check(solver: &'static str, what: &'static str, actual: usize, limit: usize) -> Result<()> {
        if actual > limit {
            Err(Error::GuardExceeded {
                solver,
                what,
                actual,
                limit,
            })
        } else {
            Ok(())
        }
    }

    /// Runs `f` on the configured pool.
    pub(crate) fn install<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        match self.threads {
            Some(t) if t > 1 => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
                Ok(pool) => pool.install(f),
                Err(_) => f(),
            },
            _ => f(),
        }
    }

    pub(crate) fn sequential(&self) -> bool {
        self.threads == Some(1)
    }
}
