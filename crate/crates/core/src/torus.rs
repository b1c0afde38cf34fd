//! Torus links T(n,k) as closures of `(σ_{n-1} ... σ_1)^k`.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use crate::braid::{apply_letter, ring_modulus, BraidWord, PairTable, StateSum};
use crate::cohomology::{is_cocycle, Cochain};
use crate::error::{Error, Result};
use crate::group_ring::GroupRingElement;
use crate::quandle::{quandle_from_spec, Quandle};

pub fn torus_braid(n: usize, k: usize) -> Result<BraidWord> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "torus braids need at least 2 strands, got {n}"
        )));
    }
    let block: Vec<i32> = (1..n as i32).rev().collect();
    BraidWord::new(n, block.repeat(k))
}

/// One block `σ_{n-1} ... σ_1`: `[a_1..a_n] ↦ [a_n, a_1*a_n, ..., a_{n-1}*a_n]`.
pub fn color_block_map(q: &Quandle, v: &[usize]) -> Vec<usize> {
    let n = v.len();
    let last = v[n - 1];
    std::iter::once(last)
        .chain(v[..n - 1].iter().map(|&a| q.op(a, last)))
        .collect()
}

/// Applies one block and returns the summed cocycle exponent of its crossings.
fn block_with_weight(q: &Quandle, table: &PairTable, v: &mut [usize]) -> i64 {
    let n = v.len();
    let mut e = 0;
    for l in (1..n as i32).rev() {
        let w = apply_letter(q, v, l);
        e += w.exponent as i64 * table.get(w.args.0, w.args.1);
    }
    e
}

pub fn default_cap(q: &Quandle, n: usize) -> usize {
    4 * n * q.order() * q.order()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodReport {
    pub quandle: String,
    pub strands: usize,
    /// `None` when the period exceeds the cap.
    pub period: Option<usize>,
    pub cap: usize,
}

fn all_vectors(order: usize, n: usize) -> Result<usize> {
    order
        .checked_pow(n as u32)
        .filter(|&s| s <= 1 << 28)
        .ok_or_else(|| Error::ResourceGuard(format!("{order}^{n} color vectors")))
}

fn decode(mut idx: usize, order: usize, n: usize) -> Vec<usize> {
    let mut v = vec![0; n];
    for s in v.iter_mut().rev() {
        *s = idx % order;
        idx /= order;
    }
    v
}

/// Length of the orbit of `v` under the block map, if at most `cap`.
fn orbit_length(q: &Quandle, v: &[usize], cap: usize) -> Option<usize> {
    let mut w = v.to_vec();
    for len in 1..=cap {
        w = color_block_map(q, &w);
        if w == v {
            return Some(len);
        }
    }
    None
}

fn lcm(a: usize, b: usize) -> usize {
    a / num_integer::gcd(a, b) * b
}

/// Least `p ≤ cap` with the block map's `p`-th iterate equal to the identity.
pub fn color_period(q: &Quandle, n: usize, cap: usize) -> Result<PeriodReport> {
    if n < 2 {
        return Err(Error::InvalidArgument("color periods need n >= 2".into()));
    }
    let total = all_vectors(q.order(), n)?;
    // The period is the lcm of the orbit lengths.
    let period = (0..total)
        .into_par_iter()
        .map(|idx| orbit_length(q, &decode(idx, q.order(), n), cap))
        .try_reduce(|| 1, |a, b| Some(lcm(a, b)))
        .filter(|&p| p <= cap);
    Ok(PeriodReport {
        quandle: q.label().to_string(),
        strands: n,
        period,
        cap,
    })
}

/// `Φ_φ(T(n,k))` computed orbit by orbit: a top vector colors the closure
/// iff its orbit length divides `k`, and its weight repeats with the orbit.
pub fn torus_invariant(q: &Quandle, phi: &Cochain, n: usize, k: usize) -> Result<StateSum> {
    if n < 2 {
        return Err(Error::InvalidArgument("torus links need n >= 2".into()));
    }
    if phi.degree() != 2 || !is_cocycle(q, phi)? {
        return Err(Error::NotCocycle(format!("2-cochain on {}", q.label())));
    }
    let table = PairTable::new(phi);
    let ring = phi.ring();
    let total = all_vectors(q.order(), n)?;
    let counts: HashMap<i64, u64> = (0..total)
        .into_par_iter()
        .filter_map(|idx| {
            let top = decode(idx, q.order(), n);
            if k == 0 {
                return Some(0);
            }
            let mut v = top.clone();
            let mut orbit_weight = 0i64;
            let mut len = 0usize;
            loop {
                orbit_weight = ring.reduce(orbit_weight + block_with_weight(q, &table, &mut v));
                len += 1;
                if v == top || len > k {
                    break;
                }
            }
            (v == top && k.is_multiple_of(len))
                .then(|| ring.reduce(orbit_weight * (k / len) as i64))
        })
        .fold(HashMap::new, |mut acc, e| {
            *acc.entry(e).or_insert(0u64) += 1;
            acc
        })
        .reduce(HashMap::new, |mut a, b| {
            for (e, c) in b {
                *a.entry(e).or_insert(0) += c;
            }
            a
        });
    let counts: BTreeMap<i64, u64> = counts.into_iter().collect();
    let colorings = counts.values().sum::<u64>() as usize;
    Ok(StateSum {
        value: GroupRingElement::from_exponent_counts(ring_modulus(ring), &counts),
        colorings,
    })
}

/// A quandle family with a closed-form color period.
pub struct PeriodFamily {
    pub name: &'static str,
    pub spec: &'static str,
    pub formula: fn(usize) -> usize,
}

/// Families whose color periods are known in closed form.
pub fn closed_form_periods() -> Vec<PeriodFamily> {
    fn dihedral(j: usize) -> impl Fn(usize) -> usize {
        move |n| if n % 2 == 1 { 2 * n } else { j / 2 * n }
    }
    vec![
        PeriodFamily {
            name: "Z_8[T]/(T-3)",
            spec: "L:8:3",
            formula: |n| if n % 2 == 1 { 2 * n } else { 4 * n },
        },
        PeriodFamily {
            name: "Z_3[T]/(T^2+1)",
            spec: "A:3:1,0,1",
            formula: |n| match n % 4 {
                2 => 2 * n,
                0 => 3 * n,
                _ => 4 * n,
            },
        },
        PeriodFamily {
            name: "Z_3[T]/(T^2-1)",
            spec: "A:3:-1,0,1",
            formula: |n| if n % 2 == 1 { 2 * n } else { 3 * n },
        },
        PeriodFamily {
            name: "Z_2[T]/(T^3-1)",
            spec: "A:2:-1,0,0,1",
            formula: |n| if n % 3 == 0 { 2 * n } else { 3 * n },
        },
        PeriodFamily {
            name: "S4",
            spec: "S4",
            formula: |n| match n {
                _ if n % 3 == 0 => 2 * n,
                2 => 3,
                _ => 3 * n,
            },
        },
        PeriodFamily {
            name: "R_4",
            spec: "R:4",
            formula: |n| dihedral(4)(n),
        },
        PeriodFamily {
            name: "R_6",
            spec: "R:6",
            formula: |n| dihedral(6)(n),
        },
        PeriodFamily {
            name: "R_8",
            spec: "R:8",
            formula: |n| dihedral(8)(n),
        },
        PeriodFamily {
            name: "Z_8[T]/(T-5)",
            spec: "L:8:5",
            formula: |n| 2 * n,
        },
        PeriodFamily {
            name: "Z_2[T]/(T^2+1)",
            spec: "A:2:1,0,1",
            formula: |n| 2 * n,
        },
        PeriodFamily {
            name: "Z_9[T]/(T-4)",
            spec: "L:9:4",
            formula: |n| 3 * n,
        },
        PeriodFamily {
            name: "Z_9[T]/(T-7)",
            spec: "L:9:7",
            formula: |n| 3 * n,
        },
        PeriodFamily {
            name: "Z_3[T]/(T^2+T+1)",
            spec: "A:3:1,1,1",
            formula: |n| 3 * n,
        },
    ]
}

#[derive(Clone, Debug)]
pub struct PeriodRow {
    pub family: &'static str,
    pub n: usize,
    pub predicted: usize,
    pub computed: Option<usize>,
}

impl PeriodRow {
    pub fn passed(&self) -> bool {
        self.computed == Some(self.predicted)
    }
}

/// Computed versus closed-form periods for every family and `n` in range.
pub fn period_table(ns: std::ops::RangeInclusive<usize>) -> Result<Vec<PeriodRow>> {
    let mut rows = Vec::new();
    for fam in closed_form_periods() {
        let q = quandle_from_spec(fam.spec)?;
        for n in ns.clone() {
            let report = color_period(&q, n, default_cap(&q, n))?;
            rows.push(PeriodRow {
                family: fam.name,
                n,
                predicted: (fam.formula)(n),
                computed: report.period,
            });
        }
    }
    Ok(rows)
}
