//! Growable, thread-safe tables for the alternating three-term recurrences
//! `x[k] + x[k + 2] = coef(k) * x[k + 1]` used by both integer sequences of
//! this crate.

use std::collections::VecDeque;
use std::sync::RwLock;

use num_bigint::BigInt;

/// Which indices a table is allowed to grow into.
#[derive(Clone, Copy, Debug)]
pub(crate) enum Domain {
    All,
    AtLeast(i64),
    AtMost(i64),
}

impl Domain {
    fn contains(self, k: i64) -> bool {
        match self {
            Domain::All => true,
            Domain::AtLeast(lo) => k >= lo,
            Domain::AtMost(hi) => k <= hi,
        }
    }
}

#[derive(Debug)]
struct Table {
    lo: i64,
    vals: VecDeque<BigInt>,
}

impl Table {
    fn hi(&self) -> i64 {
        self.lo + self.vals.len() as i64
    }

    fn get(&self, k: i64) -> Option<&BigInt> {
        if k >= self.lo && k < self.hi() {
            self.vals.get((k - self.lo) as usize)
        } else {
            None
        }
    }
}

/// A two-sided memo table for an alternating recurrence.
///
/// The coefficient at index `k` is `even` when `k` is even and `odd`
/// otherwise. Two adjacent seed values fix the sequence.
#[derive(Debug)]
pub(crate) struct Recurrence {
    even: BigInt,
    odd: BigInt,
    domain: Domain,
    table: RwLock<Table>,
}

impl Recurrence {
    pub(crate) fn new(
        seed_index: i64,
        first: BigInt,
        second: BigInt,
        even: i64,
        odd: i64,
        domain: Domain,
    ) -> Self {
        Recurrence {
            even: BigInt::from(even),
            odd: BigInt::from(odd),
            domain,
            table: RwLock::new(Table {
                lo: seed_index,
                vals: VecDeque::from(vec![first, second]),
            }),
        }
    }

    fn coef(&self, k: i64) -> &BigInt {
        if k.rem_euclid(2) == 0 {
            &self.even
        } else {
            &self.odd
        }
    }

    /// Value at index `k`. Panics if `k` lies outside the table's domain.
    pub(crate) fn get(&self, k: i64) -> BigInt {
        assert!(
            self.domain.contains(k),
            "index {k} outside recurrence domain {:?}",
            self.domain
        );
        {
            let table = self.table.read().expect("recurrence table poisoned");
            if let Some(v) = table.get(k) {
                return v.clone();
            }
        }
        let mut table = self.table.write().expect("recurrence table poisoned");
        while k >= table.hi() {
            let hi = table.hi();
            let len = table.vals.len();
            let next = self.coef(hi - 2) * &table.vals[len - 1] - &table.vals[len - 2];
            table.vals.push_back(next);
        }
        while k < table.lo {
            let lo = table.lo;
            let prev = self.coef(lo - 1) * &table.vals[0] - &table.vals[1];
            table.vals.push_front(prev);
            table.lo -= 1;
        }
        table.get(k).cloned().expect("index was just materialized")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grows_in_both_directions() {
        // x[k] + x[k+2] = 3 x[k+1], seeded 1, 1 at k = 0.
        let r = Recurrence::new(0, 1.into(), 1.into(), 3, 3, Domain::All);
        assert_eq!(r.get(4), BigInt::from(13));
        assert_eq!(r.get(-2), BigInt::from(5));
        assert_eq!(r.get(2), BigInt::from(2));
        assert_eq!(r.get(-1), BigInt::from(2));
    }

    #[test]
    #[should_panic(expected = "outside recurrence domain")]
    fn domain_is_enforced() {
        let r = Recurrence::new(1, 1.into(), 3.into(), 3, 3, Domain::AtLeast(1));
        r.get(0);
    }
}
