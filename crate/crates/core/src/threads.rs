//! Worker-pool setup honoring the SUPERALG_THREADS cap.

use once_cell::sync::Lazy;
use rayon::ThreadPool;

/// Pool used by the window checks. SUPERALG_THREADS, when set to a positive
/// integer, caps the parallelism; otherwise rayon's default applies.
pub static POOL: Lazy<ThreadPool> = Lazy::new(|| {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var("SUPERALG_THREADS") {
        if let Ok(n) = v.parse::<usize>() {
            if n >= 1 {
                builder = builder.num_threads(n);
            }
        }
    }
    builder.build().expect("worker pool")
});
