//! Property checks shared by the proptest suite and the acceptance runner.
//! Every check builds its own quandles and cocycles; none reads data files.
#![allow(dead_code)]

use quandle_lab::braid::{colorings, state_sum, BraidWord, StateSum};
use quandle_lab::cohomology::{
    coboundary, coboundary_at, coboundary_matrix, cocycle_basis, Cochain, Ring, TupleBasis,
};
use quandle_lab::surface::twist_spin_movie;
use quandle_lab::{quandle_from_spec, GroupRingElement, Modulus, Quandle};

pub type Check = Result<(), String>;

/// A quandle with a fixed 2-cocycle: the sum of a Z_p basis of Z^2.
pub struct Setting {
    pub spec: &'static str,
    pub quandle: Quandle,
    pub phi: Cochain,
}

pub fn settings() -> Vec<Setting> {
    [("R:3", 3), ("R:4", 2), ("S4", 2), ("A:3:1,0,1", 3)]
        .into_iter()
        .map(|(spec, p)| {
            let q = quandle_from_spec(spec).unwrap();
            let basis = cocycle_basis(&q, 2, p).unwrap();
            let phi = basis
                .iter()
                .fold(Cochain::zero(q.order(), 2, Ring::Mod(p)), |a, c| {
                    a.add(c).unwrap()
                });
            Setting {
                spec,
                quandle: q,
                phi,
            }
        })
        .collect()
}

/// Every quandle spec the property suites sweep.
pub fn all_specs() -> Vec<String> {
    let mut v = vec!["S4".to_string()];
    v.extend((1..=9).map(|n| format!("T:{n}")));
    v.extend((3..=9).map(|n| format!("R:{n}")));
    for p in 2..=11u64 {
        for a in 2..p {
            if num_integer::gcd(a, p) == 1 {
                v.push(format!("L:{p}:{a}"));
            }
        }
    }
    for s in [
        "A:2:1,1,1",
        "A:2:1,0,1",
        "A:3:1,0,1",
        "A:3:1,1,1",
        "A:3:-1,1,1",
        "A:2:1,1,0,1",
    ] {
        v.push(s.to_string());
    }
    v
}

fn eval(s: &Setting, phi: &Cochain, w: &BraidWord) -> Result<StateSum, String> {
    state_sum(&s.quandle, phi, w).map_err(|e| e.to_string())
}

fn word(strands: usize, letters: &[i32]) -> Result<BraidWord, String> {
    BraidWord::new(strands, letters.to_vec()).map_err(|e| e.to_string())
}

fn same(what: &str, spec: &str, a: &StateSum, b: &StateSum) -> Check {
    if a == b {
        Ok(())
    } else {
        Err(format!("{what} on {spec}: {} vs {}", a.value, b.value))
    }
}

pub fn quandle_axioms(spec: &str) -> Check {
    let q = quandle_from_spec(spec).map_err(|e| format!("{spec}: {e}"))?;
    q.check_axioms().map_err(|e| format!("{spec}: {e}"))?;
    q.dual()
        .check_axioms()
        .map_err(|e| format!("dual {spec}: {e}"))?;
    let n = q.order();
    for a in 0..n {
        for b in 0..n {
            if q.inv_op(q.op(a, b), b) != a || q.op(q.inv_op(a, b), b) != a {
                return Err(format!("{spec}: inv_op fails at ({a},{b})"));
            }
        }
    }
    Ok(())
}

pub fn delta_squared(spec: &str) -> Check {
    let q = quandle_from_spec(spec).map_err(|e| e.to_string())?;
    for n in 1..=2 {
        let d1 = coboundary_matrix(&q, n).map_err(|e| e.to_string())?;
        let d2 = coboundary_matrix(&q, n + 1).map_err(|e| e.to_string())?;
        if !d2.mul(&d1).is_zero() {
            return Err(format!("{spec}: delta^{} delta^{n} != 0", n + 1));
        }
    }
    Ok(())
}

/// `δf` vanishes on degenerate tuples for every `f` in P^n.
pub fn subcomplex_closure(spec: &str, degree: usize, coeffs: &[i64]) -> Check {
    let q = quandle_from_spec(spec).map_err(|e| e.to_string())?;
    let len = TupleBasis::new(q.order(), degree).len();
    let c: Vec<i64> = (0..len).map(|i| coeffs[i % coeffs.len()]).collect();
    let f =
        Cochain::from_coeffs(q.order(), degree, Ring::Integers, c).map_err(|e| e.to_string())?;
    let n = q.order();
    let total = n.pow(degree as u32 + 1);
    for idx in 0..total {
        let mut x = vec![0; degree + 1];
        let mut r = idx;
        for s in x.iter_mut().rev() {
            *s = r % n;
            r /= n;
        }
        if TupleBasis::is_degenerate(&x) && coboundary_at(&q, &f, &x) != 0 {
            return Err(format!("{spec}: delta f nonzero on degenerate {x:?}"));
        }
    }
    Ok(())
}

pub fn markov_conjugation(s: &Setting, strands: usize, letters: &[i32], g: i32) -> Check {
    let w = word(strands, letters)?;
    let mut conj = vec![-g];
    conj.extend_from_slice(letters);
    conj.push(g);
    let v = word(strands, &conj)?;
    same(
        "conjugation",
        s.spec,
        &eval(s, &s.phi, &w)?,
        &eval(s, &s.phi, &v)?,
    )
}

pub fn markov_stabilization(s: &Setting, strands: usize, letters: &[i32], positive: bool) -> Check {
    let w = word(strands, letters)?;
    let mut st = letters.to_vec();
    st.push(if positive {
        strands as i32
    } else {
        -(strands as i32)
    });
    let v = word(strands + 1, &st)?;
    same(
        "stabilization",
        s.spec,
        &eval(s, &s.phi, &w)?,
        &eval(s, &s.phi, &v)?,
    )
}

pub fn reidemeister_two(
    s: &Setting,
    strands: usize,
    letters: &[i32],
    at: usize,
    gen: i32,
) -> Check {
    let w = word(strands, letters)?;
    let mut ins = letters.to_vec();
    let at = at % (letters.len() + 1);
    ins.splice(at..at, [gen, -gen]);
    let v = word(strands, &ins)?;
    same("R-II", s.spec, &eval(s, &s.phi, &w)?, &eval(s, &s.phi, &v)?)
}

pub fn coboundary_invariance(s: &Setting, strands: usize, letters: &[i32], g: &[i64]) -> Check {
    let q = &s.quandle;
    let gc: Vec<i64> = (0..q.order()).map(|i| g[i % g.len()]).collect();
    let g = Cochain::from_coeffs(q.order(), 1, s.phi.ring(), gc).map_err(|e| e.to_string())?;
    let dg = coboundary(q, &g).map_err(|e| e.to_string())?;
    let shifted = s.phi.add(&dg).map_err(|e| e.to_string())?;
    let w = word(strands, letters)?;
    same(
        "coboundary shift",
        s.spec,
        &eval(s, &s.phi, &w)?,
        &eval(s, &shifted, &w)?,
    )
}

/// The zero cocycle counts colorings; the constant ones contribute |X|.
pub fn zero_cocycle_counts(s: &Setting, strands: usize, letters: &[i32]) -> Check {
    let q = &s.quandle;
    let w = word(strands, letters)?;
    let zero = Cochain::zero(q.order(), 2, s.phi.ring());
    let r = eval(s, &zero, &w)?;
    let cols = colorings(q, &w).map_err(|e| e.to_string())?;
    let expect = GroupRingElement::monomial(r.value.modulus(), 0, cols.len() as i64);
    if r.value != expect || r.colorings != cols.len() {
        return Err(format!(
            "{}: zero cocycle gives {} for {} colorings",
            s.spec,
            r.value,
            cols.len()
        ));
    }
    let constant = cols.iter().filter(|c| c.iter().all(|&x| x == c[0])).count();
    if constant != q.order() {
        return Err(format!("{}: {constant} constant colorings", s.spec));
    }
    Ok(())
}

/// Negating every weight exponent conjugates the value.
pub fn mirror_symmetry(s: &Setting, strands: usize, letters: &[i32]) -> Check {
    let w = word(strands, letters)?;
    let plus = eval(s, &s.phi, &w)?;
    let minus = eval(s, &s.phi.scale(-1), &w)?;
    if minus.value != plus.value.conjugate() {
        return Err(format!(
            "{}: {} is not the conjugate of {}",
            s.spec, minus.value, plus.value
        ));
    }
    Ok(())
}

pub fn conjugation_involution(modulus: u64, terms: &[(i64, i64)]) -> Check {
    let x = GroupRingElement::from_terms(Modulus::from_u64(modulus), terms.iter().copied());
    if x.conjugate().conjugate() != x {
        return Err(format!("conjugation is not an involution on {x}"));
    }
    let back = GroupRingElement::parse(&x.to_string(), x.modulus()).map_err(|e| e.to_string())?;
    let json = GroupRingElement::from_json(&x.to_json()).map_err(|e| e.to_string())?;
    if back != x || json != x {
        return Err(format!("{x} does not round-trip"));
    }
    Ok(())
}

/// `Φ(τ^k T(2,m)) = Φ(τ^{k+2q} T(2,m))` over R_m with Z_q coefficients,
/// for a 3-cocycle mixing the basis with the given weights.
pub fn twist_periodicity(m: usize, q: u64, k: usize, weights: &[i64]) -> Check {
    let quandle = quandle_from_spec(&format!("R:{m}")).unwrap();
    let basis = cocycle_basis(&quandle, 3, q).map_err(|e| e.to_string())?;
    let theta = basis
        .iter()
        .enumerate()
        .fold(Cochain::zero(m, 3, Ring::Mod(q)), |a, (i, c)| {
            a.add(&c.scale(weights[i % weights.len()])).unwrap()
        });
    let a = twist_spin_movie(&quandle, &theta, m, k).map_err(|e| e.to_string())?;
    let b = twist_spin_movie(&quandle, &theta, m, k + 2 * q as usize).map_err(|e| e.to_string())?;
    if a != b {
        return Err(format!(
            "R:{m} Z_{q}: k={k} gives {}, k+{} gives {}",
            a.value,
            2 * q,
            b.value
        ));
    }
    Ok(())
}
