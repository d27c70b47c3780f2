//! Element-order spectra stored as divisibility antichains, and the prime
//! graph they induce.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{GkGraph, GraphError};
use crate::numtheory::{prime_divisors, MAX_INPUT};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectrumError {
    #[error("spectrum has no orders")]
    Empty,
    #[error("element order {0} is not positive")]
    NonPositive(i128),
    #[error("element order {0} exceeds 2^63")]
    TooLarge(i128),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// The set of element orders of a group, kept as its divisibility-maximal
/// members. The full spectrum is the set of their divisors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SpectrumFile", into = "SpectrumFile")]
pub struct Spectrum {
    name: String,
    maximal_orders: Vec<u64>,
}

/// On-disk JSON shape of a spectrum. Any divisor-closed list is accepted;
/// loading normalizes it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpectrumFile {
    pub name: String,
    pub maximal_orders: Vec<i128>,
}

impl TryFrom<SpectrumFile> for Spectrum {
    type Error = SpectrumError;

    fn try_from(f: SpectrumFile) -> Result<Self, Self::Error> {
        let mut orders = Vec::with_capacity(f.maximal_orders.len());
        for &o in &f.maximal_orders {
            if o <= 0 {
                return Err(SpectrumError::NonPositive(o));
            }
            if o > MAX_INPUT as i128 {
                return Err(SpectrumError::TooLarge(o));
            }
            orders.push(o as u64);
        }
        Spectrum::normalize(f.name, &orders)
    }
}

impl From<Spectrum> for SpectrumFile {
    fn from(s: Spectrum) -> Self {
        SpectrumFile {
            name: s.name,
            maximal_orders: s.maximal_orders.into_iter().map(i128::from).collect(),
        }
    }
}

impl Spectrum {
    /// Keeps the divisibility-maximal orders, deduplicated and ascending.
    pub fn normalize(name: impl Into<String>, orders: &[u64]) -> Result<Self, SpectrumError> {
        if orders.is_empty() {
            return Err(SpectrumError::Empty);
        }
        if let Some(&o) = orders.iter().find(|&&o| o == 0) {
            return Err(SpectrumError::NonPositive(o.into()));
        }
        if let Some(&o) = orders.iter().find(|&&o| o > MAX_INPUT) {
            return Err(SpectrumError::TooLarge(o.into()));
        }
        let mut sorted = orders.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let maximal = sorted
            .iter()
            .copied()
            .filter(|&a| !sorted.iter().any(|&b| b != a && b % a == 0))
            .collect();
        Ok(Spectrum {
            name: name.into(),
            maximal_orders: maximal,
        })
    }

    /// Wraps orders already known to form an ascending divisibility antichain.
    pub(crate) fn from_antichain(name: String, mut maximal_orders: Vec<u64>) -> Self {
        maximal_orders.sort_unstable();
        debug_assert!(maximal_orders.windows(2).all(|w| w[0] < w[1]));
        Spectrum { name, maximal_orders }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn maximal_orders(&self) -> &[u64] {
        &self.maximal_orders
    }

    /// Whether `n` is an element order, i.e. divides some maximal order.
    pub fn contains(&self, n: u64) -> bool {
        n != 0 && self.maximal_orders.iter().any(|&m| m % n == 0)
    }

    /// Primes dividing some element order.
    pub fn primes(&self) -> BTreeSet<u64> {
        self.maximal_orders
            .iter()
            .flat_map(|&m| prime_divisors(m).expect("orders are within range"))
            .collect()
    }

    /// The prime graph: vertices are the primes in the spectrum, `r ~ s` iff
    /// `rs` is an element order.
    pub fn gk_graph(&self) -> Result<GkGraph, SpectrumError> {
        let primes: Vec<u64> = self.primes().into_iter().collect();
        let mut edges = Vec::new();
        for (i, &r) in primes.iter().enumerate() {
            for &s in &primes[i + 1..] {
                if self.maximal_orders.iter().any(|&m| m % r == 0 && (m / r) % s == 0) {
                    edges.push((r, s));
                }
            }
        }
        Ok(GkGraph::build(&primes, edges)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("spectrum serializes")
    }
}
