//! Parallel evaluation of independent scan rows.
//!
//! Rows are pulled from a shared counter by a small scoped-thread pool and
//! re-sorted by index afterwards, so the output order is the input order
//! regardless of scheduling. `TUNNEL_WKB_THREADS` caps the worker count.

use std::sync::atomic::{AtomicUsize, Ordering};

fn worker_count(rows: usize) -> usize {
    let available = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1);
    let cap = std::env::var("TUNNEL_WKB_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .unwrap_or(available);
    cap.min(available).min(rows).max(1)
}

/// Evaluate `compute` for every input, in parallel, preserving order.
pub fn run_parallel<T, F>(inputs: &[f64], compute: F) -> Vec<T>
where
    T: Send,
    F: Fn(f64) -> T + Sync,
{
    let workers = worker_count(inputs.len());
    if workers <= 1 {
        return inputs.iter().map(|&f| compute(f)).collect();
    }

    let next = AtomicUsize::new(0);
    let mut indexed: Vec<(usize, T)> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|_| {
                let next = &next;
                let compute = &compute;
                scope.spawn(move || {
                    let mut local = Vec::new();
                    loop {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        if i >= inputs.len() {
                            break;
                        }
                        local.push((i, compute(inputs[i])));
                    }
                    local
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("scan worker panicked"))
            .collect()
    });
    indexed.sort_by_key(|(i, _)| *i);
    indexed.into_iter().map(|(_, value)| value).collect()
}
