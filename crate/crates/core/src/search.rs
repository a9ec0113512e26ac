//! Shared plumbing for the exhaustive searches: wall-clock budgets, a
//! monotone shared incumbent, and a work queue over independent instances.

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

/// A soft wall-clock limit, polled at branch boundaries.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    deadline: Option<Instant>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { deadline: None }
    }

    pub fn seconds(secs: f64) -> Self {
        Self::from_duration(Duration::from_secs_f64(secs.max(0.0)))
    }

    pub fn from_duration(d: Duration) -> Self {
        Budget {
            deadline: Instant::now().checked_add(d),
        }
    }

    pub fn expired(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self::unlimited()
    }
}

/// Best `(value, index)` seen so far, packed so that a larger value wins and
/// ties go to the smaller instance index. Updates are monotone.
#[derive(Debug)]
pub struct Incumbent(AtomicU64);

impl Incumbent {
    /// The seed ties with every real instance: its index sorts last.
    pub const SEED_INDEX: u32 = u32::MAX;

    pub fn new(value: u32) -> Self {
        Incumbent(AtomicU64::new(Self::pack(value, Self::SEED_INDEX)))
    }

    fn pack(value: u32, index: u32) -> u64 {
        (u64::from(value) << 32) | u64::from(u32::MAX - index)
    }

    pub fn get(&self) -> (u32, u32) {
        let p = self.0.load(Ordering::Acquire);
        ((p >> 32) as u32, u32::MAX - p as u32)
    }

    /// Offers `value` found on instance `index`; returns whether it was taken.
    pub fn offer(&self, value: u32, index: u32) -> bool {
        let p = Self::pack(value, index);
        self.0.fetch_max(p, Ordering::AcqRel) < p
    }

    /// Smallest value instance `index` must reach to take over.
    pub fn threshold(&self, index: u32) -> u32 {
        let (v, i) = self.get();
        if index < i {
            v
        } else {
            v + 1
        }
    }
}

/// Runs `f` on every index in `0..count` using `workers` threads that pull
/// indices from a shared counter. Results come back in index order.
pub fn run_queue<T, F>(count: usize, workers: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<Option<T>>> = Mutex::new((0..count).map(|_| None).collect());
    let work = || loop {
        let i = next.fetch_add(1, Ordering::Relaxed);
        if i >= count {
            break;
        }
        let r = f(i);
        results.lock().unwrap_or_else(|e| e.into_inner())[i] = Some(r);
    };
    let workers = workers.clamp(1, count.max(1));
    if workers == 1 {
        work();
    } else {
        std::thread::scope(|s| {
            for _ in 0..workers {
                s.spawn(work);
            }
        });
    }
    results
        .into_inner()
        .unwrap_or_else(|e| e.into_inner())
        .into_iter()
        .map(|r| r.expect("every index processed"))
        .collect()
}
