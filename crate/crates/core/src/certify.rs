//! Genericity certification of randomly sampled discrete invariants.
//!
//! A value is accepted when every trial of a round produces the same key.
//! On disagreement the coordinate bound doubles and a fresh round runs; once
//! the escalations are used up the computation fails with
//! [`Error::Certification`].

use std::fmt::Debug;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Stream;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certifier {
    /// Samples per round; at least 1.
    pub trials: usize,
    /// Coordinate bound of the first round.
    pub bound: i64,
    /// Number of times the bound may double after a disagreeing round.
    pub escalations: u32,
}

impl Default for Certifier {
    fn default() -> Self {
        Certifier { trials: 5, bound: 16, escalations: 3 }
    }
}

/// An accepted key together with the samples of the accepting round.
#[derive(Clone, Debug)]
pub struct Certified<K, W> {
    pub value: K,
    pub witnesses: Vec<W>,
    /// Bound of the accepting round.
    pub bound: i64,
    /// Rounds run, including the accepting one.
    pub rounds: usize,
}

impl Certifier {
    pub fn new(trials: usize, bound: i64, escalations: u32) -> Result<Self> {
        if trials == 0 {
            return Err(Error::Invalid("trials must be at least 1".into()));
        }
        if bound < 1 {
            return Err(Error::Invalid("bound must be at least 1".into()));
        }
        Ok(Certifier { trials, bound, escalations })
    }

    /// Runs `sample` until one round agrees on `key`. Trial `t` of round
    /// `r` draws from `stream.derive_named(what).derive(r).derive(t)`, so
    /// results do not depend on evaluation order.
    pub fn run<W, K>(
        &self,
        what: &str,
        stream: &Stream,
        mut sample: impl FnMut(&mut Stream, i64) -> Result<W>,
        key: impl Fn(&W) -> K,
    ) -> Result<Certified<K, W>>
    where
        K: PartialEq + Debug,
    {
        let base = stream.derive_named(what);
        let mut bound = self.bound;
        let mut last = Vec::new();
        for round in 0..=self.escalations as usize {
            let rs = base.derive(round as u64);
            let mut witnesses = Vec::with_capacity(self.trials);
            for t in 0..self.trials {
                witnesses.push(sample(&mut rs.derive(t as u64), bound)?);
            }
            let keys: Vec<K> = witnesses.iter().map(&key).collect();
            if keys.iter().all(|k| *k == keys[0]) {
                let value = keys.into_iter().next().expect("trials ≥ 1");
                return Ok(Certified { value, witnesses, bound, rounds: round + 1 });
            }
            last = keys.iter().map(|k| format!("{k:?}")).collect();
            if round < self.escalations as usize {
                bound = bound.saturating_mul(2);
            }
        }
        Err(Error::Certification {
            what: what.to_string(),
            observed: last,
            rounds: self.escalations as usize + 1,
            bound,
        })
    }

    /// [`Certifier::run`] where the sample is its own key.
    pub fn value<K>(
        &self,
        what: &str,
        stream: &Stream,
        sample: impl FnMut(&mut Stream, i64) -> Result<K>,
    ) -> Result<K>
    where
        K: PartialEq + Debug + Clone,
    {
        Ok(self.run(what, stream, sample, K::clone)?.value)
    }
}
