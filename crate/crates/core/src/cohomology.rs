//! The quandle cochain complex P^n and its cohomology.
//!
//! Cochains are written in the basis of characteristic functions of
//! non-degenerate tuples (no two equal consecutive entries), ordered
//! lexicographically.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{modp, smith, IntMatrix};
use crate::quandle::Quandle;

/// Largest coboundary matrix (rows × columns) we are willing to build.
pub const MAX_MATRIX_ENTRIES: usize = 40_000_000;

/// Coefficient ring of a cochain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ring {
    Integers,
    /// Z_m with m ≥ 2.
    Mod(u64),
}

impl Ring {
    /// `0` selects the integers.
    pub fn from_modulus(m: u64) -> Result<Self> {
        match m {
            0 => Ok(Ring::Integers),
            1 => Err(Error::InvalidArgument(
                "coefficient modulus 1 is the zero ring".into(),
            )),
            m => Ok(Ring::Mod(m)),
        }
    }

    pub fn modulus(self) -> u64 {
        match self {
            Ring::Integers => 0,
            Ring::Mod(m) => m,
        }
    }

    pub fn reduce(self, x: i64) -> i64 {
        match self {
            Ring::Integers => x,
            Ring::Mod(m) => x.rem_euclid(m as i64),
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => write!(f, "Z"),
            Ring::Mod(m) => write!(f, "Z_{m}"),
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

/// `Some((p, e))` when `n = p^e` with `e ≥ 1`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d))?;
    let mut rest = n;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

/// Non-degenerate `n`-tuples over an `m`-element set, in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TupleBasis {
    order: usize,
    degree: usize,
}

impl TupleBasis {
    pub fn new(order: usize, degree: usize) -> Self {
        TupleBasis { order, degree }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// `m (m-1)^{n-1}`, and `1` in degree 0.
    pub fn len(&self) -> usize {
        match self.degree {
            0 => 1,
            n => self.order * (self.order - 1).pow(n as u32 - 1),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_degenerate(tuple: &[usize]) -> bool {
        tuple.windows(2).any(|w| w[0] == w[1])
    }

    /// Position of a tuple, or `None` if it is degenerate or malformed.
    pub fn index_of(&self, tuple: &[usize]) -> Option<usize> {
        if tuple.len() != self.degree || tuple.iter().any(|&x| x >= self.order) {
            return None;
        }
        if self.degree == 0 {
            return Some(0);
        }
        let mut idx = tuple[0];
        for w in tuple.windows(2) {
            let (prev, x) = (w[0], w[1]);
            if x == prev {
                return None;
            }
            idx = idx * (self.order - 1) + if x < prev { x } else { x - 1 };
        }
        Some(idx)
    }

    pub fn tuple_at(&self, mut idx: usize) -> Vec<usize> {
        let n = self.degree;
        if n == 0 {
            return Vec::new();
        }
        let m = self.order;
        let mut digits = vec![0; n];
        for d in digits[1..].iter_mut().rev() {
            *d = idx % (m - 1);
            idx /= m - 1;
        }
        digits[0] = idx;
        let mut out = Vec::with_capacity(n);
        out.push(digits[0]);
        for &d in &digits[1..] {
            let prev = *out.last().unwrap();
            out.push(if d < prev { d } else { d + 1 });
        }
        out
    }

    pub fn tuples(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.len()).map(move |i| self.tuple_at(i))
    }
}

/// The terms of `(δf)(x)` as `(source tuple, sign)`, with degenerate
/// sources already dropped (they carry no coefficient in P^n).
pub fn coboundary_terms(q: &Quandle, x: &[usize]) -> Vec<(Vec<usize>, i64)> {
    let n = x.len() - 1;
    let mut out = Vec::with_capacity(2 * n);
    for i in 1..=n {
        let sign = if i % 2 == 1 { 1 } else { -1 };
        let src: Vec<usize> = x
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .map(|(_, &v)| v)
            .collect();
        if !TupleBasis::is_degenerate(&src) {
            out.push((src, sign));
        }
        let xi = x[i];
        let src: Vec<usize> = x[..i]
            .iter()
            .map(|&v| q.op(v, xi))
            .chain(x[i + 1..].iter().copied())
            .collect();
        if !TupleBasis::is_degenerate(&src) {
            out.push((src, -sign));
        }
    }
    out
}

/// Matrix of `δ: P^n → P^{n+1}`; row = target tuple, column = source tuple.
pub fn coboundary_matrix(q: &Quandle, n: usize) -> Result<IntMatrix> {
    let m = q.order();
    let src = TupleBasis::new(m, n);
    let tgt = TupleBasis::new(m, n + 1);
    let entries = src.len().saturating_mul(tgt.len());
    if entries > MAX_MATRIX_ENTRIES {
        return Err(Error::ResourceGuard(format!(
            "coboundary matrix of degree {n} for order {m} has {} x {} entries",
            tgt.len(),
            src.len()
        )));
    }
    let mut mat = IntMatrix::zeros(tgt.len(), src.len());
    if n == 0 {
        return Ok(mat);
    }
    let rows: Vec<Vec<(usize, i64)>> = (0..tgt.len())
        .into_par_iter()
        .map(|r| {
            coboundary_terms(q, &tgt.tuple_at(r))
                .into_iter()
                .map(|(s, sign)| (src.index_of(&s).expect("non-degenerate source"), sign))
                .collect()
        })
        .collect();
    for (r, terms) in rows.into_iter().enumerate() {
        for (c, sign) in terms {
            mat.add_to(r, c, sign);
        }
    }
    Ok(mat)
}

/// A cochain in P^n with coefficients in `ring`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    basis: TupleBasis,
    ring: Ring,
    coeffs: Vec<i64>,
}

impl Cochain {
    pub fn zero(order: usize, degree: usize, ring: Ring) -> Self {
        let basis = TupleBasis::new(order, degree);
        let coeffs = vec![0; basis.len()];
        Cochain {
            basis,
            ring,
            coeffs,
        }
    }

    pub fn from_coeffs(order: usize, degree: usize, ring: Ring, coeffs: Vec<i64>) -> Result<Self> {
        let basis = TupleBasis::new(order, degree);
        if coeffs.len() != basis.len() {
            return Err(Error::CochainMismatch(format!(
                "expected {} coefficients, got {}",
                basis.len(),
                coeffs.len()
            )));
        }
        let coeffs = coeffs.into_iter().map(|c| ring.reduce(c)).collect();
        Ok(Cochain {
            basis,
            ring,
            coeffs,
        })
    }

    /// The characteristic function χ_x.
    pub fn characteristic(order: usize, tuple: &[usize], ring: Ring) -> Result<Self> {
        let mut f = Cochain::zero(order, tuple.len(), ring);
        f.add_term(tuple, 1)?;
        Ok(f)
    }

    pub fn basis(&self) -> &TupleBasis {
        &self.basis
    }

    pub fn order(&self) -> usize {
        self.basis.order
    }

    pub fn degree(&self) -> usize {
        self.basis.degree
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Adds `c·χ_tuple`; a nonzero coefficient on a degenerate tuple is an error.
    pub fn add_term(&mut self, tuple: &[usize], c: i64) -> Result<()> {
        if tuple.len() != self.degree() {
            return Err(Error::CochainMismatch(format!(
                "tuple {tuple:?} has length {}, expected {}",
                tuple.len(),
                self.degree()
            )));
        }
        if let Some(&bad) = tuple.iter().find(|&&x| x >= self.order()) {
            return Err(Error::ElementOutOfRange {
                element: bad,
                order: self.order(),
            });
        }
        match self.basis.index_of(tuple) {
            Some(i) => {
                self.coeffs[i] = self.ring.reduce(self.coeffs[i] + c);
                Ok(())
            }
            None if self.ring.reduce(c) == 0 => Ok(()),
            None => Err(Error::DegenerateTuple(tuple.to_vec())),
        }
    }

    /// `f(x)`; zero on degenerate tuples.
    pub fn evaluate(&self, tuple: &[usize]) -> i64 {
        self.basis.index_of(tuple).map_or(0, |i| self.coeffs[i])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn support(&self) -> impl Iterator<Item = (Vec<usize>, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (self.basis.tuple_at(i), c))
    }

    fn check_compatible(&self, other: &Cochain) -> Result<()> {
        if self.basis != other.basis || self.ring != other.ring {
            return Err(Error::CochainMismatch(format!(
                "degree {} over {} (order {}) vs degree {} over {} (order {})",
                self.degree(),
                self.ring,
                self.order(),
                other.degree(),
                other.ring,
                other.order()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        self.check_compatible(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| self.ring.reduce(a + b))
            .collect();
        Ok(Cochain {
            coeffs,
            ..self.clone()
        })
    }

    pub fn scale(&self, k: i64) -> Cochain {
        let coeffs = self
            .coeffs
            .iter()
            .map(|&a| self.ring.reduce(a * k))
            .collect();
        Cochain {
            coeffs,
            ..self.clone()
        }
    }

    /// The same integer coefficients read in another ring.
    pub fn with_ring(&self, ring: Ring) -> Cochain {
        let coeffs = self.coeffs.iter().map(|&a| ring.reduce(a)).collect();
        Cochain {
            basis: self.basis.clone(),
            ring,
            coeffs,
        }
    }

    /// Lines `x1,x2,... coeff`, one per nonzero coefficient.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (t, c) in self.support() {
            let t: Vec<String> = t.iter().map(|x| x.to_string()).collect();
            s.push_str(&format!("{} {c}\n", t.join(",")));
        }
        s
    }
}

/// `(δf)(x)` for any tuple `x` of length `deg f + 1`, degenerate or not.
pub fn coboundary_at(q: &Quandle, f: &Cochain, x: &[usize]) -> i64 {
    let v = coboundary_terms(q, x)
        .into_iter()
        .map(|(s, sign)| sign * f.evaluate(&s))
        .sum();
    f.ring.reduce(v)
}

/// `δf` as a cochain of one degree higher.
pub fn coboundary(q: &Quandle, f: &Cochain) -> Result<Cochain> {
    check_order(q, f)?;
    let basis = TupleBasis::new(q.order(), f.degree() + 1);
    if f.degree() == 0 {
        return Ok(Cochain::zero(q.order(), 1, f.ring));
    }
    let coeffs = (0..basis.len())
        .into_par_iter()
        .map(|i| coboundary_at(q, f, &basis.tuple_at(i)))
        .collect();
    Ok(Cochain {
        basis,
        ring: f.ring,
        coeffs,
    })
}

fn check_order(q: &Quandle, f: &Cochain) -> Result<()> {
    if q.order() != f.order() {
        return Err(Error::CochainMismatch(format!(
            "cochain on {} elements used with quandle {} of order {}",
            f.order(),
            q.label(),
            q.order()
        )));
    }
    Ok(())
}

pub fn is_cocycle(q: &Quandle, f: &Cochain) -> Result<bool> {
    check_order(q, f)?;
    let basis = TupleBasis::new(q.order(), f.degree() + 1);
    if f.degree() == 0 {
        return Ok(true);
    }
    Ok((0..basis.len())
        .into_par_iter()
        .all(|i| coboundary_at(q, f, &basis.tuple_at(i)) == 0))
}

/// Whether `f - g` lies in the image of `δ^{n-1}`.
pub fn cohomologous(q: &Quandle, f: &Cochain, g: &Cochain) -> Result<bool> {
    f.check_compatible(g)?;
    check_order(q, f)?;
    let diff: Vec<i64> = f.add(&g.scale(-1))?.coeffs;
    if diff.iter().all(|&c| c == 0) {
        return Ok(true);
    }
    if f.degree() <= 1 {
        // δ^0 is the zero map.
        return Ok(false);
    }
    let a = coboundary_matrix(q, f.degree() - 1)?;
    Ok(match f.ring {
        Ring::Integers => smith::solvable_over_z(&a, &diff),
        Ring::Mod(p) if is_prime(p) => modp::solvable(&a, &diff, p),
        Ring::Mod(m) => smith::solvable_mod(&a, &diff, m),
    })
}

/// Reduced-echelon basis of the cocycles `ker δ^n` over Z_p.
pub fn cocycle_basis(q: &Quandle, n: usize, p: u64) -> Result<Vec<Cochain>> {
    check_prime(p)?;
    let d = coboundary_matrix(q, n)?;
    modp::kernel_basis(&d, p)
        .into_iter()
        .map(|v| {
            Cochain::from_coeffs(
                q.order(),
                n,
                Ring::Mod(p),
                v.into_iter().map(|x| x as i64).collect(),
            )
        })
        .collect()
}

fn check_prime(p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    Ok(())
}

fn check_degree(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "cohomology degree must be at least 1".into(),
        ));
    }
    Ok(())
}

/// `dim_{Z_p} H^n_Q(X; Z_p)`.
pub fn cohomology_dim(q: &Quandle, n: usize, p: u64) -> Result<usize> {
    check_prime(p)?;
    check_degree(n)?;
    let size = TupleBasis::new(q.order(), n).len();
    let rank_n = modp::rank(&coboundary_matrix(q, n)?, p);
    let rank_prev = modp::rank(&coboundary_matrix(q, n - 1)?, p);
    Ok(size - rank_n - rank_prev)
}

/// A finitely generated abelian group `Z^r ⊕ Z_{d1} ⊕ ... ⊕ Z_{dk}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyGroup {
    pub free_rank: usize,
    /// Cyclic torsion orders, each dividing the next.
    pub torsion: Vec<BigInt>,
}

impl CohomologyGroup {
    pub fn new(free_rank: usize, torsion: Vec<u64>) -> Self {
        let mut torsion: Vec<BigInt> = torsion.into_iter().map(BigInt::from).collect();
        normalize_chain(&mut torsion);
        CohomologyGroup { free_rank, torsion }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Dimension of the group viewed as a Z_p vector space (all torsion of order p).
    pub fn rank_over(&self, p: u64) -> Option<usize> {
        let p = BigInt::from(p);
        self.torsion
            .iter()
            .all(|d| *d == p)
            .then_some(self.free_rank + self.torsion.len())
    }
}

fn normalize_chain(v: &mut Vec<BigInt>) {
    v.retain(|d| !d.is_one());
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            let g = v[i].gcd(&v[j]);
            if g != v[i] {
                let l = &v[i] / &g * &v[j];
                v[i] = g;
                v[j] = l;
            }
        }
    }
    v.retain(|d| !d.is_one());
}

impl fmt::Display for CohomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let d = &self.torsion[i];
            let run = self.torsion[i..].iter().take_while(|x| *x == d).count();
            parts.push(if run == 1 {
                format!("Z_{d}")
            } else {
                format!("(Z_{d})^{run}")
            });
            i += run;
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Integral SNF data for `δ^n`: rank and non-unit invariant factors.
struct SnfData {
    rank: usize,
    torsion: Vec<BigInt>,
}

fn snf_data(q: &Quandle, n: usize) -> Result<SnfData> {
    let d = coboundary_matrix(q, n)?;
    let f = smith::invariant_factors(&d);
    Ok(SnfData {
        rank: f.len(),
        torsion: f.into_iter().filter(|x| !x.is_one()).collect(),
    })
}

fn integral_guard(q: &Quandle, n: usize) -> Result<()> {
    check_degree(n)?;
    if n > 3 || q.order() > 9 {
        return Err(Error::ResourceGuard(format!(
            "integral cohomology is limited to degree <= 3 and order <= 9 (got degree {n}, order {})",
            q.order()
        )));
    }
    Ok(())
}

/// `H^n_Q(X; Z)` from the Smith normal forms of `δ^{n-1}` and `δ^n`.
pub fn cohomology_group_integral(q: &Quandle, n: usize) -> Result<CohomologyGroup> {
    integral_guard(q, n)?;
    let size = TupleBasis::new(q.order(), n).len();
    let cur = snf_data(q, n)?;
    let prev = snf_data(q, n - 1)?;
    let mut torsion = prev.torsion;
    normalize_chain(&mut torsion);
    Ok(CohomologyGroup {
        free_rank: size - cur.rank - prev.rank,
        torsion,
    })
}

/// `H^n_Q(X; Z_m)` for a prime power `m`, by universal coefficients:
/// `H^n(Z) ⊗ Z_m ⊕ Tor(H^{n+1}(Z), Z_m)`.
pub fn cohomology_group_mod(q: &Quandle, n: usize, m: u64) -> Result<CohomologyGroup> {
    if prime_power(m).is_none() {
        return Err(Error::InvalidArgument(format!("{m} is not a prime power")));
    }
    integral_guard(q, n)?;
    let size = TupleBasis::new(q.order(), n).len();
    let cur = snf_data(q, n)?;
    let prev = snf_data(q, n - 1)?;
    let mb = BigInt::from(m);
    let free = size - cur.rank - prev.rank;
    let mut torsion: Vec<BigInt> = std::iter::repeat_n(mb.clone(), free).collect();
    torsion.extend(prev.torsion.iter().map(|d| d.gcd(&mb)));
    torsion.extend(cur.torsion.iter().map(|d| d.gcd(&mb)));
    normalize_chain(&mut torsion);
    Ok(CohomologyGroup {
        free_rank: 0,
        torsion,
    })
}

/// Order of a finite group, if it fits in a `u64`.
pub fn group_order(g: &CohomologyGroup) -> Option<u64> {
    if g.free_rank > 0 {
        return None;
    }
    g.torsion
        .iter()
        .try_fold(1u64, |acc, d| acc.checked_mul(d.to_u64()?))
}

/// Parses cocycle lines `x1,x2[,...] coeff` (blank lines and `#` comments ignored).
pub fn parse_cocycle(text: &str, order: usize, ring: Ring) -> Result<Cochain> {
    let mut f: Option<Cochain> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| Error::Line {
            line: lineno + 1,
            msg,
        };
        let mut parts = line.split_whitespace();
        let (Some(tuple_s), Some(coeff_s), None) = (parts.next(), parts.next(), parts.next())
        else {
            return Err(err(format!("expected `x1,x2,... coeff`, got `{line}`")));
        };
        let tuple = tuple_s
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| err(format!("bad tuple `{tuple_s}`")))?;
        let coeff: i64 = coeff_s
            .parse()
            .map_err(|_| err(format!("bad coefficient `{coeff_s}`")))?;
        let cochain = f.get_or_insert_with(|| Cochain::zero(order, tuple.len(), ring));
        cochain
            .add_term(&tuple, coeff)
            .map_err(|e| err(e.to_string()))?;
    }
    f.ok_or_else(|| Error::Parse("cocycle text contains no terms".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quandle::{make_dihedral, make_s4, make_trivial};

    #[test]
    fn basis_indexing_round_trips() {
        for (m, n) in [(3, 1), (3, 2), (4, 3), (5, 2), (2, 4)] {
            let b = TupleBasis::new(m, n);
            let tuples: Vec<_> = b.tuples().collect();
            assert_eq!(tuples.len(), m * (m - 1usize).pow(n as u32 - 1));
            for (i, t) in tuples.iter().enumerate() {
                assert_eq!(b.index_of(t), Some(i));
                assert!(!TupleBasis::is_degenerate(t));
            }
            let mut sorted = tuples.clone();
            sorted.sort();
            assert_eq!(sorted, tuples);
        }
        assert_eq!(TupleBasis::new(3, 2).index_of(&[1, 1]), None);
    }

    #[test]
    fn trivial_quandle_has_zero_differentials() {
        let t = make_trivial(3).unwrap();
        for n in 1..=3 {
            assert!(coboundary_matrix(&t, n).unwrap().is_zero());
        }
    }

    #[test]
    fn delta_squared_vanishes() {
        for q in [
            make_dihedral(3).unwrap(),
            make_dihedral(4).unwrap(),
            make_s4(),
        ] {
            for n in 1..=2 {
                let a = coboundary_matrix(&q, n).unwrap();
                let b = coboundary_matrix(&q, n + 1).unwrap();
                assert!(b.mul(&a).is_zero(), "{} n={n}", q.label());
            }
        }
    }

    #[test]
    fn r3_dims_over_z3() {
        let r3 = make_dihedral(3).unwrap();
        assert_eq!(cohomology_dim(&r3, 2, 3).unwrap(), 0);
        assert_eq!(cohomology_dim(&r3, 3, 3).unwrap(), 1);
    }

    #[test]
    fn evaluation() {
        let chi = Cochain::characteristic(3, &[0, 1], Ring::Mod(3)).unwrap();
        assert_eq!(chi.evaluate(&[0, 1]), 1);
        assert_eq!(chi.evaluate(&[1, 0]), 0);
        assert_eq!(chi.evaluate(&[2, 2]), 0);
    }

    #[test]
    fn cocycle_bases() {
        let t2 = make_trivial(2).unwrap();
        assert_eq!(cocycle_basis(&t2, 2, 2).unwrap().len(), 2);
        let s4 = make_s4();
        let kernel = cocycle_basis(&s4, 2, 2).unwrap().len();
        let image = modp::rank(&coboundary_matrix(&s4, 1).unwrap(), 2);
        assert_eq!(kernel, image + 1);
        let r5 = make_dihedral(5).unwrap();
        let kernel = cocycle_basis(&r5, 2, 5).unwrap();
        let image = modp::rank(&coboundary_matrix(&r5, 1).unwrap(), 5);
        assert_eq!(kernel.len(), image);
        for f in &kernel {
            assert!(is_cocycle(&r5, f).unwrap());
        }
    }

    #[test]
    fn small_groups() {
        let r4 = make_dihedral(4).unwrap();
        assert_eq!(cohomology_dim(&r4, 2, 2).unwrap(), 4);
        assert_eq!(cohomology_dim(&r4, 3, 2).unwrap(), 8);
        assert_eq!(
            cohomology_group_integral(&r4, 3).unwrap(),
            CohomologyGroup::new(2, vec![2, 2])
        );
        let s4 = make_s4();
        assert_eq!(
            cohomology_group_integral(&s4, 3).unwrap(),
            CohomologyGroup::new(0, vec![2])
        );
        assert_eq!(
            cohomology_group_mod(&s4, 3, 4).unwrap(),
            CohomologyGroup::new(0, vec![2, 2, 4])
        );
        let t = make_trivial(3).unwrap();
        assert_eq!(
            cohomology_group_integral(&t, 2).unwrap(),
            CohomologyGroup::new(6, vec![])
        );
        let r3 = make_dihedral(3).unwrap();
        assert!(cohomology_group_mod(&r3, 3, 2).unwrap().is_trivial());
        assert_eq!(
            CohomologyGroup::new(2, vec![2, 2]).to_string(),
            "Z^2 + (Z_2)^2"
        );
        assert_eq!(
            CohomologyGroup::new(0, vec![4, 2, 2]).to_string(),
            "(Z_2)^2 + Z_4"
        );
    }

    #[test]
    fn parsing() {
        let f = parse_cocycle("0,1 1\n0,2 2\n", 3, Ring::Mod(3)).unwrap();
        let mut g = Cochain::characteristic(3, &[0, 1], Ring::Mod(3)).unwrap();
        g.add_term(&[0, 2], 2).unwrap();
        assert_eq!(f, g);
        assert!(matches!(
            parse_cocycle("1,1 1", 3, Ring::Mod(3)),
            Err(Error::Line { line: 1, .. })
        ));
        assert!(parse_cocycle("# comment\n0,3 1", 3, Ring::Mod(3)).is_err());
        assert!(parse_cocycle("0,1", 3, Ring::Mod(3)).is_err());
        assert!(parse_cocycle("0,1 1\n0,1,2 1", 3, Ring::Mod(3)).is_err());
        // zero coefficient on a degenerate tuple is harmless
        assert!(parse_cocycle("1,1 0\n0,1 1", 3, Ring::Mod(3)).is_ok());
        assert_eq!(parse_cocycle(&f.to_text(), 3, Ring::Mod(3)).unwrap(), f);
    }

    #[test]
    fn coboundaries_are_cohomologous_to_zero() {
        let r3 = make_dihedral(3).unwrap();
        let mut g = Cochain::zero(3, 2, Ring::Mod(3));
        g.add_term(&[0, 1], 1).unwrap();
        g.add_term(&[2, 0], 2).unwrap();
        let dg = coboundary(&r3, &g).unwrap();
        assert!(is_cocycle(&r3, &dg).unwrap());
        assert!(cohomologous(&r3, &dg, &Cochain::zero(3, 3, Ring::Mod(3))).unwrap());
        let s4 = make_s4();
        let mut h = Cochain::zero(4, 1, Ring::Integers);
        h.add_term(&[2], 5).unwrap();
        let dh = coboundary(&s4, &h).unwrap();
        assert!(cohomologous(&s4, &dh, &Cochain::zero(4, 2, Ring::Integers)).unwrap());
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(6), None);
        assert!(is_prime(19) && !is_prime(21));
    }
}
