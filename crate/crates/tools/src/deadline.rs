use std::time::{Duration, Instant};

use homwarm_core::Budget;

/// Wall-clock budget for the core searches.
#[derive(Debug, Clone)]
pub struct Deadline {
    end: Option<Instant>,
    polls: u32,
    hit: bool,
}

impl Deadline {
    /// `None` never expires.
    pub fn after_ms(ms: Option<u64>) -> Deadline {
        Deadline { end: ms.map(|ms| Instant::now() + Duration::from_millis(ms)), polls: 0, hit: false }
    }

    pub fn unlimited() -> Deadline {
        Deadline::after_ms(None)
    }

    pub fn expired(&self) -> bool {
        self.hit
    }
}

impl Budget for Deadline {
    fn exhausted(&mut self) -> bool {
        if self.hit {
            return true;
        }
        let Some(end) = self.end else { return false };
        self.polls = self.polls.wrapping_add(1);
        if self.polls % 64 == 0 && Instant::now() >= end {
            self.hit = true;
        }
        self.hit
    }
}
