#![allow(dead_code)]

//! Shared corpus builders for the integration suites.

use kway_core::instances::{make_random_graph, RandomGraphConfig};
use kway_core::rational::{rat, ratio};
use kway_core::{Graph, SequenceSpec};

pub fn complete(n: usize, w: i64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v, rat(w)));
        }
    }
    Graph::new(n, edges).unwrap()
}

/// `count` seeded connected graphs with `4 <= n <= 9`.
pub fn connected_corpus(count: usize) -> Vec<Graph> {
    (0..count)
        .map(|i| {
            let cfg = RandomGraphConfig {
                n: 4 + i % 6,
                edge_probability: ratio(1, 2),
                weight_range: (1, 10),
                seed: i as u64,
            };
            make_random_graph(&cfg).unwrap()
        })
        .collect()
}

/// `count` seeded disconnected graphs: unions of 2-3 connected pieces with
/// at most 10 vertices in total.
pub fn disconnected_corpus(count: usize) -> Vec<Graph> {
    let shapes: [&[usize]; 6] =
        [&[3, 3], &[4, 3], &[5, 4], &[3, 3, 3], &[4, 3, 3], &[2, 4, 2]];
    (0..count)
        .map(|i| {
            let parts: Vec<Graph> = shapes[i % shapes.len()]
                .iter()
                .enumerate()
                .map(|(j, &n)| {
                    let cfg = RandomGraphConfig {
                        n,
                        edge_probability: ratio(2, 3),
                        weight_range: (1, 10),
                        seed: (1000 + i * 10 + j) as u64,
                    };
                    make_random_graph(&cfg).unwrap()
                })
                .collect();
            Graph::disjoint_union(&parts).unwrap()
        })
        .collect()
}

/// Every valid sequence spec for `k`: nondecreasing terms >= 2 with
/// `sum (h_i - 1) = k - 1`, at most `q_max` rounds.
pub fn all_specs(k: usize, q_max: usize) -> Vec<SequenceSpec> {
    fn recurse(budget: usize, q_left: usize, min_h: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if budget == 0 {
            out.push(cur.clone());
            return;
        }
        if q_left == 0 {
            return;
        }
        for h in min_h..=budget + 1 {
            cur.push(h);
            recurse(budget - (h - 1), q_left - 1, h, cur, out);
            cur.pop();
        }
    }
    let mut raw = Vec::new();
    recurse(k - 1, q_max, 2, &mut Vec::new(), &mut raw);
    raw.into_iter().map(|hs| SequenceSpec::new(k, hs).unwrap()).collect()
}
