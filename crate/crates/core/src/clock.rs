//! Time source hook so phase timings can be reported without `std`.

/// Monotonic nanosecond counter supplied by the caller.
pub trait Clock {
    fn now_nanos(&self) -> u64;
}

/// A clock that always reads zero; timings come out as zero.
#[derive(Debug, Clone, Copy, Default)]
pub struct NoClock;

impl Clock for NoClock {
    fn now_nanos(&self) -> u64 {
        0
    }
}

#[cfg(feature = "std")]
mod std_clock {
    use std::time::Instant;

    /// Wall clock measured from the moment of construction.
    #[derive(Debug, Clone, Copy)]
    pub struct StdClock(Instant);

    impl Default for StdClock {
        fn default() -> Self {
            StdClock(Instant::now())
        }
    }

    impl super::Clock for StdClock {
        fn now_nanos(&self) -> u64 {
            self.0.elapsed().as_nanos() as u64
        }
    }
}

#[cfg(feature = "std")]
pub use std_clock::StdClock;
