//! Exact-rational ratio analysis.
//!
//! The central quantity is `f(k,h) = (2 - h/k)(h-1)/(k-1)`: the worst-case
//! weight ratio between a minimum h-way split and any k-way split, and
//! combinatorially the fraction of the edges of the complete graph `K_k`
//! covered by `h-1` vertices. [`verify_facts`] sweeps the analytic
//! inequalities that the greedy bound rests on over exhaustive integer grids
//! and reports any violation; a violation falsifies either the transcription
//! or the implementation, so the sweeps double as a regression oracle.

use alloc::format;
use alloc::string::{String, ToString};

use alloc::vec::Vec;

use num_traits::One;

use crate::error::{Error, Result};
use crate::greedy::{derive_h_sequence, SequenceSpec};
use crate::rational::{choose2, rat_usize, Rational};

/// Result of sweeping one inequality over its full parameter grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactReport {
    pub fact_name: String,
    /// Human-readable description of the swept ranges.
    pub grid: String,
    pub checked: u64,
    pub violations: Vec<Violation>,
}

/// One falsified grid point: the parameters and both sides of the inequality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub parameters: String,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl FactReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// The ratio bound `f(k,h) = (2 - h/k)(h-1)/(k-1)`, defined for `h >= 1` and
/// `k >= max(2, h)`. Equals the number of `K_k` edges covered by `h-1`
/// vertices divided by `C(k,2)`.
pub fn f(k: usize, h: usize) -> Result<Rational> {
    if h < 1 || k < 2 || k < h {
        return Err(Error::InvalidArgument(format!(
            "f(k,h) needs h >= 1 and k >= max(2,h), got k={k}, h={h}"
        )));
    }
    let k_r = rat_usize(k);
    let two = rat_usize(2);
    let num = (two - rat_usize(h) / &k_r) * rat_usize(h - 1);
    Ok(num / rat_usize(k - 1))
}

/// Number of edges of `K_k` covered by a fixed set of `j` vertices, counted
/// pair by pair. Used as the independent combinatorial route to `f`.
pub fn covered_edges(k: usize, j: usize) -> u64 {
    let mut count = 0;
    for u in 0..k {
        for v in u + 1..k {
            if u < j || v < j {
                count += 1;
            }
        }
    }
    count
}

/// The approximation ratio of a greedy run over `spec`:
/// `2 - sum C(h_i,2) / C(k,2)`, which telescopes to `sum f(k, h_i)`.
pub fn theoretical_ratio(spec: &SequenceSpec) -> Rational {
    let k = spec.k();
    let sum_choose: Rational = spec.hs().iter().map(|&h| choose2(h)).sum();
    let ratio = rat_usize(2) - sum_choose / choose2(k);
    let sum_f: Rational =
        spec.hs().iter().map(|&h| f(k, h).expect("spec terms are in domain")).sum();
    assert_eq!(ratio, sum_f, "closed form must telescope to the f-sum");
    ratio
}

/// The ratio of `iterative-h-split`:
/// `2 - h/k + (h-1-r) r / (k (k-1))` with `r = (k-1) mod (h-1)`.
pub fn h_split_ratio(k: usize, h: usize) -> Result<Rational> {
    let spec = derive_h_sequence(k, h)?;
    let r = (k - 1) % (h - 1);
    let ratio = rat_usize(2) - rat_usize(h) / rat_usize(k)
        + rat_usize((h - 1 - r) * r) / rat_usize(k * (k - 1));
    assert_eq!(ratio, theoretical_ratio(&spec), "corollary form must match the sequence ratio");
    Ok(ratio)
}

/// The quantities from the inductive-step bound: for `0 <= a <= h_1 - 1`,
///
/// `D = f(k-a, h_1-a) + sum_{i>=2} f(k-a, h_i)`,
/// `W' = f(k, a+1) + (1 - f(k, a+1)) D`, and `F = max(D, W')`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaFQuantities {
    pub d: Rational,
    pub w_prime: Rational,
    pub f_max: Rational,
}

pub fn lemma_f_quantities(k: usize, a: usize, hs: &[usize]) -> Result<LemmaFQuantities> {
    if hs.len() < 2 {
        return Err(Error::InvalidArgument("the bound is defined for q >= 2".to_string()));
    }
    let mut prev = 2;
    for &h in hs {
        if h < prev {
            return Err(Error::InvalidArgument(
                "sequence must be nondecreasing with every term at least 2".to_string(),
            ));
        }
        prev = h;
    }
    let h1 = hs[0];
    if a > h1 - 1 {
        return Err(Error::InvalidArgument(format!("a must satisfy 0 <= a <= h_1 - 1, got {a}")));
    }
    let extra: usize = hs.iter().map(|h| h - 1).sum();
    if k < extra + 1 {
        return Err(Error::InvalidArgument(format!(
            "k - 1 >= sum (h_i - 1) required, got k={k}"
        )));
    }
    let mut d = f(k - a, h1 - a)?;
    for &h in &hs[1..] {
        d += f(k - a, h)?;
    }
    let fa = f(k, a + 1)?;
    let w_prime = &fa + (Rational::one() - &fa) * &d;
    let f_max = if d >= w_prime { d.clone() } else { w_prime.clone() };
    Ok(LemmaFQuantities { d, w_prime, f_max })
}

fn sum_f(k: usize, hs: &[usize]) -> Rational {
    hs.iter().map(|&h| f(k, h).expect("in domain")).sum()
}

/// All nondecreasing sequences `(h_1..h_q)` with `h_i >= 2`, `q <= q_max`
/// and `sum (h_i - 1) <= budget`.
fn nondecreasing_sequences(budget: usize, q_max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn recurse(
        budget: usize,
        q_max: usize,
        min_h: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if !current.is_empty() {
            out.push(current.clone());
        }
        if current.len() == q_max {
            return;
        }
        for h in min_h..=budget + 1 {
            if h < 2 {
                continue;
            }
            current.push(h);
            recurse(budget - (h - 1), q_max, h, current, out);
            current.pop();
        }
    }
    recurse(budget, q_max, 2, &mut current, &mut out);
    out
}

struct Sweep {
    report: FactReport,
}

impl Sweep {
    fn new(fact_name: &str, grid: &str) -> Self {
        Sweep {
            report: FactReport {
                fact_name: fact_name.to_string(),
                grid: grid.to_string(),
                checked: 0,
                violations: Vec::new(),
            },
        }
    }

    fn le(&mut self, parameters: String, lhs: Rational, rhs: Rational) {
        self.report.checked += 1;
        if lhs > rhs {
            self.report.violations.push(Violation { parameters, lhs, rhs });
        }
    }

    fn eq(&mut self, parameters: String, lhs: Rational, rhs: Rational) {
        self.report.checked += 1;
        if lhs != rhs {
            self.report.violations.push(Violation { parameters, lhs, rhs });
        }
    }
}

/// Sweeps the six analytic facts plus the inductive-step bound
/// (`F <= sum f(k,h_i)`) over every integer grid point with `k <= k_max`
/// (sequence length capped at `q_max`). Returns one report per inequality;
/// violations are data, not errors.
pub fn verify_facts(k_max: usize, q_max: usize) -> Result<Vec<FactReport>> {
    if k_max < 3 {
        return Err(Error::InvalidArgument("k_max must be at least 3".to_string()));
    }
    let mut reports = Vec::new();

    // f(k,h) is nondecreasing in h on [1,k] and nonincreasing in k on
    // [h, infinity), checked at integer points.
    let mut s = Sweep::new("fact-1-func", &format!("h-steps and k-steps for k <= {k_max}"));
    for k in 2..=k_max {
        for h in 1..k {
            s.le(format!("k={k}, h={h} -> h+1"), f(k, h)?, f(k, h + 1)?);
        }
    }
    for h in 1..=k_max {
        for k in h.max(2)..k_max {
            s.le(format!("h={h}, k={k} -> k+1"), f(k + 1, h)?, f(k, h)?);
        }
    }
    reports.push(s.report);

    // f(k-a,h)(1 - f(k,a+1)) <= f(k,h)
    let mut s = Sweep::new("fact-2-prod", &format!("a >= 0, h >= 2, a+h <= k <= {k_max}"));
    for k in 2..=k_max {
        for h in 2..=k {
            for a in 0..=k - h {
                let lhs = f(k - a, h)? * (Rational::one() - f(k, a + 1)?);
                s.le(format!("k={k}, h={h}, a={a}"), lhs, f(k, h)?);
            }
        }
    }
    reports.push(s.report);

    // f(k,h1+h2+1) = f(k,h1+1) + f(k-h1,h2+1)(1 - f(k,h1+1)), exact equality.
    // At k-h1 = 1 (forcing h2 = 0) the second term vanishes because
    // 1 - f(k,k) = 0, so the identity degenerates to f(k,k) = f(k,k).
    let mut s = Sweep::new(
        "fact-3-two-sets",
        &format!("h1, h2 >= 0, max(h1+h2+1, 2) <= k <= {k_max}"),
    );
    for k in 2..=k_max {
        for h1 in 0..k {
            for h2 in 0..k - h1 {
                let lhs = f(k, h1 + h2 + 1)?;
                let first = f(k, h1 + 1)?;
                let rhs = if k - h1 >= 2 {
                    &first + f(k - h1, h2 + 1)? * (Rational::one() - &first)
                } else {
                    first
                };
                s.eq(format!("k={k}, h1={h1}, h2={h2}"), lhs, rhs);
            }
        }
    }
    reports.push(s.report);

    // f(k-a,h2) - f(k,h2) <= (h2-1)/(h1-1) (f(k-a,h1) - f(k,h1))
    let mut s = Sweep::new("fact-4-diff", &format!("a >= 0, 2 <= h1 <= h2, a+h2 <= k <= {k_max}"));
    for k in 2..=k_max {
        for h2 in 2..=k {
            for h1 in 2..=h2 {
                for a in 0..=k - h2 {
                    let lhs = f(k - a, h2)? - f(k, h2)?;
                    let scale = rat_usize(h2 - 1) / rat_usize(h1 - 1);
                    let rhs = scale * (f(k - a, h1)? - f(k, h1)?);
                    s.le(format!("k={k}, h1={h1}, h2={h2}, a={a}"), lhs, rhs);
                }
            }
        }
    }
    reports.push(s.report);

    // f(k-a,h-a) + (k-h)/(h-1) f(k-a,h) <= (k-1)/(h-1) f(k,h), with
    // a <= h-1 so that f(k-a, h-a) stays in domain; equality at a = 0.
    let mut s = Sweep::new("fact-5-sum", &format!("0 <= a <= h-1, h >= 2, a+h <= k <= {k_max}"));
    for k in 2..=k_max {
        for h in 2..=k {
            for a in 0..=(h - 1).min(k - h) {
                let lhs = f(k - a, h - a)? + rat_usize(k - h) / rat_usize(h - 1) * f(k - a, h)?;
                let rhs = rat_usize(k - 1) / rat_usize(h - 1) * f(k, h)?;
                if a == 0 {
                    s.eq(format!("k={k}, h={h}, a=0"), lhs, rhs);
                } else {
                    s.le(format!("k={k}, h={h}, a={a}"), lhs, rhs);
                }
            }
        }
    }
    reports.push(s.report);

    // f(k-a,h1-a) + sum_{i>=2} f(k-a,h_i) <= f(k,h1) + sum_{i>=2} f(k,h_i)
    let mut s = Sweep::new(
        "fact-6-sumup",
        &format!("nondecreasing sequences, q <= {q_max}, sum (h_i - 1) <= k - 1 <= {}", k_max - 1),
    );
    for k in 2..=k_max {
        for hs in nondecreasing_sequences(k - 1, q_max) {
            let h1 = hs[0];
            for a in 0..h1 {
                // a = k - 1 only happens for q = 1 with k = h1, where the
                // claim degenerates to 0 <= f(k,k); skip the out-of-domain
                // f(1,1) term it would need
                if k - a < 2 {
                    continue;
                }
                let mut lhs = f(k - a, h1 - a)?;
                for &h in &hs[1..] {
                    lhs += f(k - a, h)?;
                }
                s.le(format!("k={k}, a={a}, hs={hs:?}"), lhs, sum_f(k, &hs));
            }
        }
    }
    reports.push(s.report);

    // F = max(D, W') <= sum f(k,h_i) over the same sequence grid, q >= 2.
    let mut s = Sweep::new(
        "lemma-2-F",
        &format!("nondecreasing sequences, 2 <= q <= {q_max}, sum (h_i - 1) <= k - 1 <= {}", k_max - 1),
    );
    for k in 2..=k_max {
        for hs in nondecreasing_sequences(k - 1, q_max) {
            if hs.len() < 2 {
                continue;
            }
            for a in 0..hs[0] {
                let q = lemma_f_quantities(k, a, &hs)?;
                s.le(format!("k={k}, a={a}, hs={hs:?}"), q.f_max, sum_f(k, &hs));
            }
        }
    }
    reports.push(s.report);

    Ok(reports)
}
