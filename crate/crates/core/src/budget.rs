//! Cooperative cancellation for the exponential searches.

/// Polled by long-running searches; once it reports exhaustion the search
/// returns whatever bound it has.
pub trait Budget {
    fn exhausted(&mut self) -> bool;
}

/// Never runs out.
#[derive(Debug, Clone, Copy, Default)]
pub struct Unlimited;

impl Budget for Unlimited {
    #[inline]
    fn exhausted(&mut self) -> bool {
        false
    }
}

/// Allows a fixed number of polls.
#[derive(Debug, Clone, Copy)]
pub struct StepBudget {
    remaining: u64,
}

impl StepBudget {
    pub fn new(steps: u64) -> Self {
        StepBudget { remaining: steps }
    }
}

impl Budget for StepBudget {
    fn exhausted(&mut self) -> bool {
        if self.remaining == 0 {
            return true;
        }
        self.remaining -= 1;
        false
    }
}

impl<B: Budget + ?Sized> Budget for &mut B {
    fn exhausted(&mut self) -> bool {
        (**self).exhausted()
    }
}
