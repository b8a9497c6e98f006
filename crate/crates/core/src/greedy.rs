//! Greedy iterative splitting.
//!
//! [`iterative_split`] runs over an arbitrary validated nondecreasing
//! sequence `(h_1, ..., h_q)` with `sum (h_i - 1) = k - 1`, removing a
//! minimum h_i-way split per round. [`iterative_h_split`] is the special
//! case where all rounds after an optional remainder round use the same `h`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::Rational;
use crate::solvers::{min_split_dp, SplitResult, TieBreakPolicy};

/// A validated split plan: `2 <= h_1 <= ... <= h_q` and
/// `sum (h_i - 1) = k - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceSpec {
    k: usize,
    hs: Vec<usize>,
}

impl SequenceSpec {
    pub fn new(k: usize, hs: Vec<usize>) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidArgument("k must be at least 2".to_string()));
        }
        if hs.is_empty() {
            return Err(Error::InvalidArgument("sequence must be nonempty".to_string()));
        }
        let mut prev = 2;
        for &h in &hs {
            if h < prev {
                return Err(Error::InvalidArgument(
                    "sequence must be nondecreasing with every term at least 2".to_string(),
                ));
            }
            prev = h;
        }
        let total: usize = hs.iter().map(|h| h - 1).sum();
        if total != k - 1 {
            return Err(Error::InvalidArgument(format!(
                "sequence increases component count by {total}, but k - 1 = {}",
                k - 1
            )));
        }
        Ok(SequenceSpec { k, hs })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn hs(&self) -> &[usize] {
        &self.hs
    }

    pub fn rounds(&self) -> usize {
        self.hs.len()
    }
}

/// One greedy round: the `h` it was asked for, the split it removed, and the
/// component count afterwards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyStep {
    pub h: usize,
    pub split: SplitResult,
    pub component_count_after: usize,
}

/// Full audit trail of a greedy run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyTrace {
    pub steps: Vec<GreedyStep>,
    pub total_weight: Rational,
}

impl GreedyTrace {
    /// Union of all removed splits: the returned k-way cut.
    pub fn cut_edge_ids(&self) -> BTreeSet<usize> {
        self.steps.iter().flat_map(|s| s.split.edge_ids.iter().copied()).collect()
    }
}

/// The split plan used by `iterative-h-split`: an (r+1)-way remainder round
/// when `r = (k-1) mod (h-1)` is nonzero, then `p = (k-1) div (h-1)` rounds
/// of `h`.
pub fn derive_h_sequence(k: usize, h: usize) -> Result<SequenceSpec> {
    if h < 2 || h > k {
        return Err(Error::InvalidArgument(format!("h must satisfy 2 <= h <= k, got h={h}, k={k}")));
    }
    let p = (k - 1) / (h - 1);
    let r = (k - 1) % (h - 1);
    let mut hs = Vec::with_capacity(p + 1);
    if r != 0 {
        hs.push(r + 1);
    }
    hs.extend(core::iter::repeat_n(h, p));
    SequenceSpec::new(k, hs)
}

/// Runs `q` rounds, each removing a minimum h_i-way split of the current
/// graph (which is disconnected from round 2 onward), and returns the full
/// trace. The union of the removed splits is a k-way cut of the input.
pub fn iterative_split(g: &Graph, spec: &SequenceSpec, policy: TieBreakPolicy) -> Result<GreedyTrace> {
    if g.components().component_count != 1 {
        return Err(Error::Disconnected);
    }
    if g.vertex_count() < spec.k() {
        return Err(Error::Infeasible {
            needed_components: spec.k(),
            vertex_count: g.vertex_count(),
        });
    }
    let mut current = g.clone();
    let mut components = 1;
    let mut steps = Vec::with_capacity(spec.rounds());
    let mut total_weight = Rational::zero();
    for &h in spec.hs() {
        let split = min_split_dp(&current, h, policy)?;
        current = current.remove_edges(&split.edge_ids)?;
        components += h - 1;
        debug_assert_eq!(current.components().component_count, components);
        total_weight += &split.weight;
        steps.push(GreedyStep { h, split, component_count_after: components });
    }
    debug_assert_eq!(components, spec.k());
    Ok(GreedyTrace { steps, total_weight })
}

/// `iterative_split` over the plan from [`derive_h_sequence`].
pub fn iterative_h_split(
    g: &Graph,
    k: usize,
    h: usize,
    policy: TieBreakPolicy,
) -> Result<GreedyTrace> {
    iterative_split(g, &derive_h_sequence(k, h)?, policy)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::solvers::min_split_bruteforce;

    fn complete(n: usize, w: i64) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v, rat(w)));
            }
        }
        Graph::new(n, edges).unwrap()
    }

    #[test]
    fn derive_sequence_no_remainder() {
        assert_eq!(derive_h_sequence(7, 4).unwrap().hs(), &[4, 4]);
    }

    #[test]
    fn derive_sequence_with_remainder() {
        assert_eq!(derive_h_sequence(8, 4).unwrap().hs(), &[2, 4, 4]);
    }

    #[test]
    fn derive_sequence_all_twos() {
        assert_eq!(derive_h_sequence(5, 2).unwrap().hs(), &[2, 2, 2, 2]);
    }

    #[test]
    fn derive_sequence_rejects_bad_h() {
        assert!(derive_h_sequence(5, 1).is_err());
        assert!(derive_h_sequence(5, 6).is_err());
    }

    #[test]
    fn sequence_spec_validation() {
        assert!(SequenceSpec::new(5, vec![2, 2, 2, 2]).is_ok());
        assert!(SequenceSpec::new(5, vec![3, 3]).is_ok());
        // not nondecreasing
        assert!(SequenceSpec::new(6, vec![3, 2, 3]).is_err());
        // wrong total
        assert!(SequenceSpec::new(5, vec![2, 2]).is_err());
        // below 2
        assert!(SequenceSpec::new(3, vec![1, 3]).is_err());
        // empty
        assert!(SequenceSpec::new(2, vec![]).is_err());
    }

    #[test]
    fn single_round_equals_exact_solver() {
        let g = complete(5, 1);
        let spec = SequenceSpec::new(4, vec![4]).unwrap();
        let trace = iterative_split(&g, &spec, TieBreakPolicy::CanonicalLex).unwrap();
        let exact = min_split_bruteforce(&g, 4, TieBreakPolicy::CanonicalLex).unwrap();
        assert_eq!(trace.total_weight, exact.weight);
        assert_eq!(trace.cut_edge_ids(), exact.edge_ids);
    }

    #[test]
    fn k4_all_twos_trace() {
        // rounds cost 3, 2, 1 on unit K4; the oracle optimum for k=4 is 6 too
        let g = complete(4, 1);
        let trace = iterative_h_split(&g, 4, 2, TieBreakPolicy::CanonicalLex).unwrap();
        let round_weights: Vec<_> = trace.steps.iter().map(|s| s.split.weight.clone()).collect();
        assert_eq!(round_weights, vec![rat(3), rat(2), rat(1)]);
        assert_eq!(trace.total_weight, rat(6));
        let opt = min_split_bruteforce(&g, 4, TieBreakPolicy::CanonicalLex).unwrap();
        assert_eq!(opt.weight, rat(6));
    }

    #[test]
    fn k_equals_h_is_exact() {
        let g = complete(5, 1);
        let trace = iterative_h_split(&g, 4, 4, TieBreakPolicy::CanonicalLex).unwrap();
        let opt = min_split_bruteforce(&g, 4, TieBreakPolicy::CanonicalLex).unwrap();
        assert_eq!(trace.total_weight, opt.weight);
    }

    #[test]
    fn monotone_progress() {
        let g = complete(6, 1);
        let spec = SequenceSpec::new(5, vec![2, 2, 3]).unwrap();
        let trace = iterative_split(&g, &spec, TieBreakPolicy::CanonicalLex).unwrap();
        let counts: Vec<_> = trace.steps.iter().map(|s| s.component_count_after).collect();
        assert_eq!(counts, vec![2, 3, 5]);
    }

    #[test]
    fn rejects_disconnected_input() {
        let g = Graph::disjoint_union(&[complete(3, 1), complete(3, 1)]).unwrap();
        let spec = SequenceSpec::new(3, vec![2, 2]).unwrap();
        assert_eq!(
            iterative_split(&g, &spec, TieBreakPolicy::CanonicalLex),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn rejects_too_small_graph() {
        let g = complete(3, 1);
        let spec = SequenceSpec::new(4, vec![2, 2, 2]).unwrap();
        assert!(matches!(
            iterative_split(&g, &spec, TieBreakPolicy::CanonicalLex),
            Err(Error::Infeasible { .. })
        ));
    }
}
