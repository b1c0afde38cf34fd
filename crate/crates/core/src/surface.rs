//! 3-cocycle state sums of knotted surfaces given by closed formulas:
//! twist-spun `T(2,m)` (movie and chart descriptions) and the deform-spun
//! figure-eight knot.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::braid::{ring_modulus, StateSum};
use crate::cohomology::{is_cocycle, Cochain, Ring};
use crate::error::{Error, Result};
use crate::group_ring::GroupRingElement;
use crate::quandle::{GroupWord, Quandle};

/// Dense lookup for a 3-cochain.
struct TripleTable {
    n: usize,
    values: Vec<i64>,
}

impl TripleTable {
    fn new(theta: &Cochain) -> Self {
        let n = theta.order();
        let values = (0..n * n * n)
            .map(|i| theta.evaluate(&[i / (n * n), (i / n) % n, i % n]))
            .collect();
        TripleTable { n, values }
    }

    #[inline]
    fn get(&self, a: usize, b: usize, c: usize) -> i64 {
        self.values[(a * self.n + b) * self.n + c]
    }
}

fn check_three_cocycle(q: &Quandle, theta: &Cochain) -> Result<()> {
    if theta.degree() != 3 {
        return Err(Error::InvalidArgument(format!(
            "expected a 3-cocycle, got degree {}",
            theta.degree()
        )));
    }
    if theta.order() != q.order() {
        return Err(Error::CochainMismatch(format!(
            "cochain on {} elements, quandle has {}",
            theta.order(),
            q.order()
        )));
    }
    if !is_cocycle(q, theta)? {
        return Err(Error::NotCocycle(format!(
            "3-cochain over {} on {}",
            theta.ring(),
            q.label()
        )));
    }
    Ok(())
}

fn collect(ring: Ring, exponents: Vec<i64>) -> StateSum {
    let mut counts = BTreeMap::new();
    for e in &exponents {
        *counts.entry(*e).or_insert(0u64) += 1;
    }
    StateSum {
        value: GroupRingElement::from_exponent_counts(ring_modulus(ring), &counts),
        colorings: exponents.len(),
    }
}

/// Arc colors of the `T(2,m)` tangle: `G(-2), G(-1) = x, G(0) = y, ..., G(upto)`
/// with `G(s+1) = G(s-1) * G(s)`. Index `i` of the result holds `G(i - 2)`.
pub fn g_sequence(q: &Quandle, x: usize, y: usize, upto: usize) -> Vec<usize> {
    let mut g = Vec::with_capacity(upto + 3);
    g.push(q.inv_op(y, x));
    g.push(x);
    g.push(y);
    for s in 0..upto {
        let next = q.op(g[s + 1], g[s + 2]);
        g.push(next);
    }
    g
}

/// `G(s)` for `s >= -2`.
pub fn g_value(q: &Quandle, x: usize, y: usize, s: i64) -> usize {
    assert!(s >= -2, "G is defined here for s >= -2");
    g_sequence(q, x, y, s.max(0) as usize)[(s + 2) as usize]
}

/// `h(x,y,n)`: the color `y` acted on `n` times by the inverse of `x`.
pub fn h_value(q: &Quandle, x: usize, y: usize, n: usize) -> usize {
    (0..n).fold(y, |acc, _| q.inv_op(acc, x))
}

/// Exponent of `Θ_0^m(x,y) Θ_1^m(x,y)` in the coefficient group.
pub fn theta_products(q: &Quandle, theta: &Cochain, x: usize, y: usize, m: usize) -> i64 {
    theta_exponent(q, &TripleTable::new(theta), theta.ring(), x, y, m)
}

fn theta_exponent(q: &Quandle, t: &TripleTable, ring: Ring, x: usize, y: usize, m: usize) -> i64 {
    let g = g_sequence(q, x, y, m);
    let at = |s: i64| g[(s + 2) as usize];
    let mut e = 0;
    for j in 0..m as i64 {
        e -= t.get(at(-2), at(j - 1), at(j));
        e += t.get(at(j - 2), at(j - 1), at(-2));
    }
    ring.reduce(e)
}

/// Whether `(x,y)` colors `τ^k T(2,m)` in the movie description.
pub fn movie_admissible(q: &Quandle, x: usize, y: usize, m: usize, k: usize) -> bool {
    let g = g_sequence(q, x, y, m);
    g[m + 1] == x && g[m + 2] == y && h_value(q, x, y, k) == y
}

/// `Φ_θ(τ^k T(2,m))` from the movie of `k` full twists.
pub fn twist_spin_movie(q: &Quandle, theta: &Cochain, m: usize, k: usize) -> Result<StateSum> {
    if m < 2 {
        return Err(Error::InvalidArgument(format!("T(2,{m}) needs m >= 2")));
    }
    check_three_cocycle(q, theta)?;
    let t = TripleTable::new(theta);
    let ring = theta.ring();
    let n = q.order();
    let exps: Vec<i64> = (0..n * n)
        .into_par_iter()
        .filter_map(|i| {
            let (x, y) = (i / n, i % n);
            if !movie_admissible(q, x, y, m, k) {
                return None;
            }
            let mut e = 0;
            let mut cur = y;
            for _ in 0..k {
                e = ring.reduce(e + theta_exponent(q, &t, ring, x, cur, m));
                cur = q.inv_op(cur, x);
            }
            Some(e)
        })
        .collect();
    Ok(collect(ring, exps))
}

/// Least `n >= 1` such that acting `n` times by any inverse `x` is the identity.
pub fn twist_color_period(q: &Quandle) -> usize {
    let n = q.order();
    (0..n * n)
        .map(|i| {
            let (x, y) = (i / n, i % n);
            let mut cur = q.inv_op(y, x);
            let mut len = 1;
            while cur != y {
                cur = q.inv_op(cur, x);
                len += 1;
            }
            len
        })
        .fold(1, |a, b| a / num_integer::gcd(a, b) * b)
}

/// Checks `Φ(τ^k) = Φ(τ^{k+pq})` for `k` in `0..=kmax`, where `p` is the
/// color period and `q` the coefficient modulus. Returns the failing `k`.
pub fn twist_spin_period_check(
    q: &Quandle,
    theta: &Cochain,
    m: usize,
    kmax: usize,
) -> Result<Vec<usize>> {
    let qc = match theta.ring() {
        Ring::Mod(c) => c as usize,
        Ring::Integers => {
            return Err(Error::InvalidArgument(
                "periodicity in k needs finite coefficients".into(),
            ))
        }
    };
    let period = twist_color_period(q) * qc;
    let mut bad = Vec::new();
    for k in 0..=kmax {
        if twist_spin_movie(q, theta, m, k)? != twist_spin_movie(q, theta, m, k + period)? {
            bad.push(k);
        }
    }
    Ok(bad)
}

fn w(letters: &[(usize, i8)]) -> GroupWord {
    GroupWord::new(letters.to_vec()).expect("letters are ±1")
}

/// Weighted triples `(a, b, c, ±1)` of the surface-braid formula for
/// `τ^2 T(2,m)` at the color pair `(y1, y2)`.
pub fn chart_terms(q: &Quandle, y1: usize, y2: usize, m: usize) -> Vec<(usize, usize, usize, i8)> {
    let n = m / 2;
    let n1 = if m % 2 == 1 { n } else { n - 1 };
    let a = w(&[(y1, 1), (y2, 1)]);
    let b = w(&[(y2, 1), (y1, 1)]);
    let inv1 = w(&[(y1, -1)]);
    let inv11 = w(&[(y1, -1), (y1, -1)]);
    let g2 = w(&[(y2, 1)]);
    let act = |x: usize, word: GroupWord| q.act_word(x, &word);
    let ap = |k: i64| a.pow(k);
    let bp = |k: i64| b.pow(k);
    let pivot = act(y1, g2.clone().then(&inv1));
    let mut out = Vec::new();
    for k in 1..=n1 as i64 {
        out.push((
            act(y2, ap(k - 1).then(&inv1)),
            act(y1, bp(k).then(&inv11)),
            y1,
            -1,
        ));
    }
    for k in 1..n as i64 {
        out.push((
            act(y1, bp(k).then(&inv11)),
            act(y2, ap(k).then(&inv1)),
            y1,
            -1,
        ));
    }
    for k in 1..=n as i64 {
        out.push((act(y1, bp(k - 3).then(&g2)), act(y2, ap(k - 2)), pivot, -1));
    }
    for k in 1..=n1 as i64 {
        out.push((act(y2, ap(k - 2)), act(y1, bp(k - 2).then(&g2)), pivot, -1));
    }
    for k in 1..=n as i64 {
        out.push((pivot, act(y2, ap(k - 2)), act(y1, bp(k - 2).then(&g2)), 1));
    }
    for k in 1..=n1 as i64 {
        out.push((pivot, act(y1, bp(k - 2).then(&g2)), act(y2, ap(k - 1)), 1));
    }
    for k in 1..=n1 as i64 {
        out.push((y1, act(y2, ap(k - 1)), act(y1, bp(k - 1).then(&g2)), 1));
    }
    for k in 1..n as i64 {
        out.push((y1, act(y1, bp(k - 1).then(&g2)), act(y2, ap(k)), 1));
    }
    out
}

/// Whether `(y1, y2)` colors the surface braid of `τ^2 T(2,m)`.
pub fn chart_admissible(q: &Quandle, y1: usize, y2: usize, m: usize) -> bool {
    let n = (m / 2) as i64;
    let closes = if m % 2 == 1 {
        q.act_word(y2, &w(&[(y1, 1), (y2, 1)]).pow(n)) == y1
    } else {
        q.act_word(y1, &w(&[(y2, 1), (y1, 1)]).pow(n)) == y1
    };
    closes && q.op(q.op(y1, y2), y2) == y1
}

/// `Φ_θ(τ^2 T(2,m))` from the surface-braid description. The orientation
/// is opposite to the movie's, so the value is the conjugate.
pub fn twist_spin_chart(q: &Quandle, theta: &Cochain, m: usize) -> Result<StateSum> {
    if m < 2 {
        return Err(Error::InvalidArgument(format!("T(2,{m}) needs m >= 2")));
    }
    check_three_cocycle(q, theta)?;
    let t = TripleTable::new(theta);
    let ring = theta.ring();
    let n = q.order();
    let exps: Vec<i64> = (0..n * n)
        .into_par_iter()
        .filter_map(|i| {
            let (y1, y2) = (i / n, i % n);
            chart_admissible(q, y1, y2, m).then(|| {
                let e = chart_terms(q, y1, y2, m)
                    .into_iter()
                    .map(|(a, b, c, s)| s as i64 * t.get(a, b, c))
                    .sum::<i64>();
                ring.reduce(e)
            })
        })
        .collect();
    Ok(collect(ring, exps))
}

/// How the fourth color of the figure-eight movie is derived from `(a, b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fig8Colors {
    /// `d` solves `d * b = a`, then `c = b * d`.
    DStarBIsA,
    /// `d = a * b`, then `c = b * d`.
    DIsAStarB,
}

/// `Φ_θ` of the deform-spun figure-eight knot: a sum over pairs `(a, b)`
/// of `θ(b,c,a)θ(c,b,c)θ(b,a,b)θ(a,b,c) / θ(c,d,a)θ(d,c,d)θ(b,c,b)θ(c,b,d)`.
pub fn deform_spun_fig8(q: &Quandle, theta: &Cochain, colors: Fig8Colors) -> Result<StateSum> {
    check_three_cocycle(q, theta)?;
    let t = TripleTable::new(theta);
    let ring = theta.ring();
    let n = q.order();
    let exps = (0..n * n)
        .map(|i| {
            let (a, b) = (i / n, i % n);
            let d = match colors {
                Fig8Colors::DStarBIsA => q.inv_op(a, b),
                Fig8Colors::DIsAStarB => q.op(a, b),
            };
            let c = q.op(b, d);
            let e = t.get(b, c, a) + t.get(c, b, c) + t.get(b, a, b) + t.get(a, b, c)
                - t.get(c, d, a)
                - t.get(d, c, d)
                - t.get(b, c, b)
                - t.get(c, b, d);
            ring.reduce(e)
        })
        .collect();
    Ok(collect(ring, exps))
}

/// The invariant of `-F*` given that of `F`.
pub fn mirror_reverse(value: &GroupRingElement) -> GroupRingElement {
    value.conjugate()
}

#[derive(Clone, Debug)]
pub struct ConjugacyReport {
    pub m: usize,
    pub movie: GroupRingElement,
    pub chart: GroupRingElement,
}

impl ConjugacyReport {
    pub fn holds(&self) -> bool {
        self.movie.conjugate() == self.chart
    }
}

/// Movie and chart values of `τ^2 T(2,m)`; the two orientations are opposite.
pub fn conjugate_symmetry(q: &Quandle, theta: &Cochain, m: usize) -> Result<ConjugacyReport> {
    Ok(ConjugacyReport {
        m,
        movie: twist_spin_movie(q, theta, m, 2)?.value,
        chart: twist_spin_chart(q, theta, m)?.value,
    })
}
