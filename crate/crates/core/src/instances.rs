//! Instance generators.
//!
//! [`make_tight_instance`] builds the worst-case family on which greedy
//! splitting pays exactly its theoretical ratio: a disjoint union of `q + 1`
//! complete graphs on `k` vertices - one clique `H_i` per round, weighted so
//! that the cheapest h_i-way split is the unit-weight edge set `E_i` covered
//! by `h_i - 1` designated vertices, plus one all-unit clique `K` holding the
//! true optimum. Edge ids are assigned so every `E_i` precedes every `K`
//! edge, which makes the canonical-lex tie-break select the adversarial
//! splits deterministically.
//!
//! [`make_random_graph`] produces seeded connected simple graphs for
//! property tests.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::greedy::SequenceSpec;
use crate::rational::{choose2, rat, rat_usize, Rational};

/// Resampling budget for connected random graph generation.
const MAX_ATTEMPTS: usize = 1000;

/// A generated worst-case instance with its bookkeeping: which edges form
/// the adversarial per-round splits, which form the optimum, and which are
/// the effectively-infinite filler.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TightInstance {
    pub graph: Graph,
    pub spec: SequenceSpec,
    pub heavy_weight: Rational,
    /// All edges of the clique `K`: the unique minimum k-way split.
    pub optimal_cut_edge_ids: BTreeSet<usize>,
    /// `E_1, ..., E_q`: the split greedy is steered into per round.
    pub adversarial_split_edge_ids: Vec<BTreeSet<usize>>,
    /// Heavy clique filler and (when star-closed) hub edges.
    pub heavy_edge_ids: BTreeSet<usize>,
}

/// Configuration for seeded random connected graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RandomGraphConfig {
    pub n: usize,
    /// Inclusion probability per vertex pair, a rational in (0, 1].
    pub edge_probability: Rational,
    /// Inclusive integer weight range, `1 <= lo <= hi`.
    pub weight_range: (u64, u64),
    pub seed: u64,
}

fn build_tight(spec: &SequenceSpec, star_closed: bool) -> TightInstance {
    let k = spec.k();
    let q = spec.rounds();
    // strictly heavier than any sum of light edges, standing in for infinity
    let heavy_weight = rat_usize(k * k * q) * choose2(k) + rat(1);
    let clique_base = |i: usize| i * k;
    let hub = (q + 1) * k;
    let n = hub + usize::from(star_closed);

    let mut edges: Vec<(usize, usize, Rational)> = Vec::new();
    let mut adversarial: Vec<BTreeSet<usize>> = Vec::new();

    // light covered edges of each H_i first, so their ids are smallest
    for (i, &h) in spec.hs().iter().enumerate() {
        let base = clique_base(i);
        let covered_from = base + k - (h - 1);
        let mut ids = BTreeSet::new();
        for u in base..base + k {
            for v in u + 1..base + k {
                if u >= covered_from || v >= covered_from {
                    ids.insert(edges.len());
                    edges.push((u, v, rat(1)));
                }
            }
        }
        adversarial.push(ids);
    }

    // heavy block: uncovered clique edges, then hub edges when star-closing
    let mut heavy_edge_ids = BTreeSet::new();
    for (i, &h) in spec.hs().iter().enumerate() {
        let base = clique_base(i);
        let covered_from = base + k - (h - 1);
        for u in base..covered_from {
            for v in u + 1..covered_from {
                heavy_edge_ids.insert(edges.len());
                edges.push((u, v, heavy_weight.clone()));
            }
        }
    }
    if star_closed {
        for i in 0..=q {
            heavy_edge_ids.insert(edges.len());
            edges.push((hub, clique_base(i), heavy_weight.clone()));
        }
    }

    // the optimum: all edges of K, unit weight
    let mut optimal = BTreeSet::new();
    let base = clique_base(q);
    for u in base..base + k {
        for v in u + 1..base + k {
            optimal.insert(edges.len());
            edges.push((u, v, rat(1)));
        }
    }

    let graph = Graph::new(n, edges).expect("construction satisfies graph invariants");
    TightInstance {
        graph,
        spec: spec.clone(),
        heavy_weight,
        optimal_cut_edge_ids: optimal,
        adversarial_split_edge_ids: adversarial,
        heavy_edge_ids,
    }
}

/// The tight instance, star-closed into a single connected graph via heavy
/// hub edges so it satisfies the greedy connected-input precondition.
pub fn make_tight_instance(spec: &SequenceSpec) -> TightInstance {
    build_tight(spec, true)
}

/// The raw disconnected union of the `q + 1` cliques, for split-oriented
/// tests that do not need a connected input.
pub fn make_tight_union(spec: &SequenceSpec) -> TightInstance {
    build_tight(spec, false)
}

/// Seeded connected simple graph with integer weights uniform in the
/// configured range.
///
/// Each attempt draws the pairs `(u, v)` with `u < v` in lexicographic
/// order: one Bernoulli draw per pair, then one weight draw for included
/// pairs. Disconnected samples are rejected and the stream continues, so the
/// output is a pure function of the config.
pub fn make_random_graph(cfg: &RandomGraphConfig) -> Result<Graph> {
    if cfg.n < 2 {
        return Err(Error::InvalidArgument("random graphs need n >= 2".to_string()));
    }
    let (lo, hi) = cfg.weight_range;
    if lo < 1 || lo > hi {
        return Err(Error::InvalidArgument(format!(
            "weight range needs 1 <= lo <= hi, got {lo}..={hi}"
        )));
    }
    let p = &cfg.edge_probability;
    if *p <= rat(0) || *p > rat(1) {
        return Err(Error::InvalidArgument("edge probability must lie in (0, 1]".to_string()));
    }
    let (p_num, p_den) = match (p.numer().to_u32(), p.denom().to_u32()) {
        (Some(n), Some(d)) => (n, d),
        _ => {
            return Err(Error::InvalidArgument(
                "edge probability numerator and denominator must fit in u32".to_string(),
            ))
        }
    };

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..MAX_ATTEMPTS {
        let mut edges = Vec::new();
        for u in 0..cfg.n {
            for v in u + 1..cfg.n {
                if rng.gen_ratio(p_num, p_den) {
                    let w = rng.gen_range(lo..=hi);
                    edges.push((u, v, rat_usize(w as usize)));
                }
            }
        }
        let g = Graph::new(cfg.n, edges)?;
        if g.components().component_count == 1 {
            return Ok(g);
        }
    }
    Err(Error::GenerationFailure { attempts: MAX_ATTEMPTS })
}
