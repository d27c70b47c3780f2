//! Structural checks on prime graphs: the non-neighbours of 2, strongly
//! regular graphs, complete multipartite graphs and solvable realizability.
//!
//! The SRG and multipartite classifiers encode necessary conditions. A
//! "candidate" verdict never claims that a group realizing the graph exists.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::families::{pgl2_spectrum, FamilyError};
use crate::graph::{GkGraph, SrgParameters};
use crate::numtheory::{is_prime, prime_divisors};

pub const REPORT_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum TheoremError {
    #[error("vertex 2 is absent (odd order group)")]
    NoVertexTwo,
    #[error("at least one part is required")]
    NoParts,
    #[error("part sizes must be positive")]
    ZeroPart,
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("{p}^{m} exceeds 10^6")]
    WitnessOutOfRange { p: u64, m: u32 },
    #[error(transparent)]
    Family(#[from] FamilyError),
}

/// `τ`: vertices other than 2 that are not adjacent to 2.
pub fn non_neighbors_of_two(g: &GkGraph) -> Result<BTreeSet<u64>, TheoremError> {
    if !g.contains(2) {
        return Err(TheoremError::NoVertexTwo);
    }
    Ok(g.labels()
        .iter()
        .copied()
        .filter(|&v| v != 2 && !g.has_edge(2, v))
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TauCheck {
    pub tau: Vec<u64>,
    pub union_of_cliques: bool,
    /// An induced path `a – b – c` inside `τ` when the check fails.
    pub witness: Option<[u64; 3]>,
}

/// Whether the non-neighbours of 2 induce a disjoint union of cliques.
pub fn check_tau_union_of_cliques(g: &GkGraph) -> Result<TauCheck, TheoremError> {
    let tau = non_neighbors_of_two(g)?;
    let sub = g.induced_subgraph(&tau).expect("tau is a vertex subset");
    let witness = sub.induced_path3().map(|(a, b, c)| [a, b, c]);
    Ok(TauCheck {
        tau: tau.into_iter().collect(),
        union_of_cliques: witness.is_none(),
        witness,
    })
}

/// Why an SRG cannot be a prime graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RuledOutWitness {
    /// The complement is strongly regular but contains this triangle.
    ComplementTriangle([u64; 3]),
    /// The graph is complete multipartite with these (equal) part sizes,
    /// not all 2.
    MultipartiteParts(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum SrgVerdict {
    NotSrg,
    ComplementTriangleFreeSrgCandidate {
        parameters: SrgParameters,
        complement_parameters: SrgParameters,
    },
    CompleteMultipartitePartsOfTwo {
        parameters: SrgParameters,
        parts: Vec<usize>,
    },
    RuledOut {
        parameters: SrgParameters,
        witness: RuledOutWitness,
    },
}

impl SrgVerdict {
    pub fn label(&self) -> &'static str {
        match self {
            SrgVerdict::NotSrg => "not_srg",
            SrgVerdict::ComplementTriangleFreeSrgCandidate { .. } => "complement_triangle_free_srg_candidate",
            SrgVerdict::CompleteMultipartitePartsOfTwo { .. } => "complete_multipartite_parts_of_two",
            SrgVerdict::RuledOut { .. } => "ruled_out",
        }
    }
}

/// Sorts a strongly regular graph into the two shapes a prime graph can take.
///
/// The all-parts-2 branch is checked first: the complement of `K_{2,…,2}` is a
/// perfect matching, which is not itself strongly regular.
pub fn classify_srg(g: &GkGraph) -> SrgVerdict {
    let Some(parameters) = g.srg_parameters() else {
        return SrgVerdict::NotSrg;
    };
    let parts = g.complete_multipartite_parts();
    if let Some(parts) = &parts {
        if parts.iter().all(|&p| p == 2) {
            return SrgVerdict::CompleteMultipartitePartsOfTwo {
                parameters,
                parts: parts.clone(),
            };
        }
    }
    let co = g.complement();
    match co.srg_parameters() {
        Some(complement_parameters) => match co.triangle() {
            None => SrgVerdict::ComplementTriangleFreeSrgCandidate {
                parameters,
                complement_parameters,
            },
            Some((a, b, c)) => SrgVerdict::RuledOut {
                parameters,
                witness: RuledOutWitness::ComplementTriangle([a, b, c]),
            },
        },
        None => SrgVerdict::RuledOut {
            parameters,
            // A strongly regular graph whose complement is not strongly
            // regular has a union of cliques as complement.
            witness: RuledOutWitness::MultipartiteParts(
                parts.expect("complement of an SRG is an SRG or a union of cliques"),
            ),
        },
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Realizability {
    RealizableSolvable,
    Realizable,
    NotRealizable,
    Open,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MultipartiteRule {
    /// At least two parts, each of size at least 3: never a prime graph.
    AllPartsAtLeastThree,
    /// `K_{n,m}` is a prime graph iff `n + m ≤ 6` and `{n, m} ≠ {3, 3}`.
    CompleteBipartite,
    /// All parts of size at most 2: the complement is bipartite and
    /// triangle-free, so a solvable group realizes the graph.
    SolvableCriterion,
    /// None of the above applies.
    Undecided,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultipartiteVerdict {
    pub parts: Vec<usize>,
    pub verdict: Realizability,
    pub rule: MultipartiteRule,
}

/// Decides, where known, whether the complete multipartite graph with the
/// given part sizes is the prime graph of some group.
pub fn multipartite_realizability(parts: &[usize]) -> Result<MultipartiteVerdict, TheoremError> {
    if parts.is_empty() {
        return Err(TheoremError::NoParts);
    }
    if parts.contains(&0) {
        return Err(TheoremError::ZeroPart);
    }
    let mut parts = parts.to_vec();
    parts.sort_unstable();
    let (verdict, rule) = if parts.len() >= 2 && parts[0] >= 3 {
        (Realizability::NotRealizable, MultipartiteRule::AllPartsAtLeastThree)
    } else if let [n, m] = parts[..] {
        if n + m <= 6 && (n, m) != (3, 3) {
            (Realizability::Realizable, MultipartiteRule::CompleteBipartite)
        } else {
            (Realizability::NotRealizable, MultipartiteRule::CompleteBipartite)
        }
    } else if parts.iter().all(|&p| p <= 2) {
        (Realizability::RealizableSolvable, MultipartiteRule::SolvableCriterion)
    } else {
        (Realizability::Open, MultipartiteRule::Undecided)
    };
    Ok(MultipartiteVerdict { parts, verdict, rule })
}

/// A graph is the prime graph of a solvable group iff its complement is
/// triangle-free and 3-colourable.
pub fn solvable_realizable(g: &GkGraph) -> bool {
    let co = g.complement();
    co.is_triangle_free() && co.is_k_colorable(3)
}

/// Outcome of [`pgl2_non_neighbor_witness`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonNeighborWitness {
    pub p: u64,
    pub m: u32,
    pub q: u64,
    /// Vertices not adjacent to `p` in the prime graph of `PGL₂(q)`.
    pub non_neighbors: Vec<u64>,
    /// `π(q − 1) ∪ π(q + 1)`.
    pub expected: Vec<u64>,
    pub edges: Vec<[u64; 2]>,
    pub connected: bool,
    pub complete: bool,
    /// `non_neighbors == expected`, connected, and not complete.
    pub holds: bool,
}

/// Builds the prime graph of `PGL₂(p^m)` and checks that the non-neighbours
/// of `p` are exactly `π(q − 1) ∪ π(q + 1)` and induce a connected graph that
/// is not a clique.
pub fn pgl2_non_neighbor_witness(p: u64, m: u32) -> Result<NonNeighborWitness, TheoremError> {
    if p == 2 || !is_prime(p) {
        return Err(TheoremError::NotOddPrime(p));
    }
    let q = match p.checked_pow(m) {
        Some(q) if m >= 1 && q <= 1_000_000 => q,
        _ => return Err(TheoremError::WitnessOutOfRange { p, m }),
    };
    let g = pgl2_spectrum(q)?.gk_graph().map_err(FamilyError::from)?;
    let non_neighbors: BTreeSet<u64> = g
        .labels()
        .iter()
        .copied()
        .filter(|&v| v != p && !g.has_edge(p, v))
        .collect();
    let mut expected = prime_divisors(q - 1).expect("q < 2^63");
    expected.extend(prime_divisors(q + 1).expect("q < 2^63"));
    let sub = g.induced_subgraph(&non_neighbors).expect("subset of vertices");
    let n = sub.vertex_count();
    let connected = n > 0 && sub.is_connected();
    let complete = sub.edge_count() == n * n.saturating_sub(1) / 2;
    Ok(NonNeighborWitness {
        p,
        m,
        q,
        holds: non_neighbors == expected && connected && !complete,
        non_neighbors: non_neighbors.into_iter().collect(),
        expected: expected.into_iter().collect(),
        edges: sub.edges().map(|(a, b)| [a, b]).collect(),
        connected,
        complete,
    })
}

/// Every structural statistic and verdict for one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnalysisReport {
    pub report_version: u32,
    pub name: String,
    pub vertices: Vec<u64>,
    pub edges: Vec<[u64; 2]>,
    /// Number of connected components.
    pub s: usize,
    pub components: Vec<Vec<u64>>,
    /// Independence number.
    pub t: usize,
    /// Largest coclique size through vertex 2.
    pub t_at_2: Option<usize>,
    pub tau: Option<Vec<u64>>,
    pub tau_union_of_cliques: Option<bool>,
    pub tau_witness: Option<[u64; 3]>,
    pub srg: SrgVerdict,
    pub multipartite_parts: Option<Vec<usize>>,
    pub multipartite: Option<MultipartiteVerdict>,
    pub solvable_realizable: bool,
    pub notes: Vec<String>,
}

pub fn analyze(g: &GkGraph, name: &str) -> AnalysisReport {
    let mut notes = Vec::new();
    let (t_at_2, tau) = match check_tau_union_of_cliques(g) {
        Ok(check) => (Some(g.independence_number_at(2).expect("2 is a vertex")), Some(check)),
        Err(_) => {
            notes.push("odd order: solvable by Feit-Thompson; checks at vertex 2 skipped".to_string());
            (None, None)
        }
    };
    let multipartite_parts = g.complete_multipartite_parts().filter(|p| !p.is_empty());
    let multipartite = multipartite_parts
        .as_deref()
        .map(|p| multipartite_realizability(p).expect("parts are non-empty and positive"));
    let components = g.connected_components();
    AnalysisReport {
        report_version: REPORT_VERSION,
        name: name.to_string(),
        vertices: g.labels().to_vec(),
        edges: g.edges().map(|(a, b)| [a, b]).collect(),
        s: components.len(),
        components,
        t: g.independence_number(),
        t_at_2,
        tau_union_of_cliques: tau.as_ref().map(|c| c.union_of_cliques),
        tau_witness: tau.as_ref().and_then(|c| c.witness),
        tau: tau.map(|c| c.tau),
        srg: classify_srg(g),
        multipartite_parts,
        multipartite,
        solvable_realizable: solvable_realizable(g),
        notes,
    }
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
