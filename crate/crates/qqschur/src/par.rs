//! Thin switch between sequential and rayon-backed data-parallel loops.
//!
//! The workloads here (per-shape module builds, per-pair hom spaces,
//! per-bipartition Gram ranks) are embarrassingly parallel over independent
//! read-only inputs.  With the `parallel` feature disabled, `Exec::Par`
//! silently degrades to the sequential path, so callers never branch.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exec {
    Seq,
    Par,
}

impl Exec {
    /// Pick the mode for a requested worker count (`None` = default pool).
    pub fn from_jobs(jobs: Option<usize>) -> Exec {
        match jobs {
            Some(0) | Some(1) => Exec::Seq,
            _ => Exec::Par,
        }
    }
}

#[cfg(feature = "parallel")]
pub fn map<T, U, F>(exec: Exec, items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Send + Sync,
{
    match exec {
        Exec::Seq => items.into_iter().map(f).collect(),
        Exec::Par => items.into_par_iter().map(f).collect(),
    }
}

#[cfg(not(feature = "parallel"))]
pub fn map<T, U, F>(_exec: Exec, items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Send + Sync,
{
    items.into_iter().map(f).collect()
}

/// Configure the global worker pool; call once, before any parallel work.
#[cfg(feature = "parallel")]
pub fn configure_pool(jobs: Option<usize>) {
    if let Some(n) = jobs {
        if n > 1 {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
}

#[cfg(not(feature = "parallel"))]
pub fn configure_pool(_jobs: Option<usize>) {}
