//! Quandle colorings of closed braids and the 2-cocycle state sum.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;

use crate::cohomology::{is_cocycle, Cochain, Ring};
use crate::error::{Error, Result};
use crate::group_ring::{GroupRingElement, Modulus};
use crate::quandle::Quandle;

/// A braid on `strands` strings; letter `±i` is `σ_i^{±1}` (1-indexed).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidArgument(
                "a braid needs at least one strand".into(),
            ));
        }
        if let Some(&bad) = letters
            .iter()
            .find(|&&l| l == 0 || l.unsigned_abs() as usize >= strands)
        {
            return Err(Error::InvalidArgument(format!(
                "letter {bad} is out of range for {strands} strands"
            )));
        }
        Ok(BraidWord { strands, letters })
    }

    /// Parses a comma-separated letter list such as `1,-2,1,-2`.
    pub fn parse(strands: usize, letters: &str) -> Result<Self> {
        let letters = letters
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<i32>()
                    .map_err(|_| Error::Parse(format!("bad braid letter `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::InvalidArgument("strand counts differ".into()));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l: Vec<String> = self.letters.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", l.join(","))
    }
}

/// The cocycle argument and sign recorded at one crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Weight {
    pub args: (usize, usize),
    pub exponent: i8,
}

/// Pushes colors `v` down through one crossing, in place.
pub fn apply_letter(q: &Quandle, v: &mut [usize], letter: i32) -> Weight {
    let i = letter.unsigned_abs() as usize - 1;
    let (a, b) = (v[i], v[i + 1]);
    if letter > 0 {
        v[i] = b;
        v[i + 1] = q.op(a, b);
        Weight {
            args: (a, b),
            exponent: 1,
        }
    } else {
        let c = q.inv_op(b, a);
        v[i] = c;
        v[i + 1] = a;
        Weight {
            args: (c, a),
            exponent: -1,
        }
    }
}

/// Colors at the bottom of the braid given colors `v` at the top.
pub fn push_through(q: &Quandle, w: &BraidWord, v: &[usize]) -> Vec<usize> {
    let mut out = v.to_vec();
    for &l in &w.letters {
        apply_letter(q, &mut out, l);
    }
    out
}

fn decode_vector(mut idx: usize, order: usize, len: usize) -> Vec<usize> {
    let mut v = vec![0; len];
    for slot in v.iter_mut().rev() {
        *slot = idx % order;
        idx /= order;
    }
    v
}

fn vector_space_size(q: &Quandle, strands: usize) -> Result<usize> {
    q.order()
        .checked_pow(strands as u32)
        .filter(|&n| n <= 1 << 32)
        .ok_or_else(|| {
            Error::ResourceGuard(format!(
                "{} colorings of {strands} strands is too many to enumerate",
                q.order()
            ))
        })
}

/// All top color vectors fixed by the braid, in lexicographic order.
pub fn colorings(q: &Quandle, w: &BraidWord) -> Result<Vec<Vec<usize>>> {
    let total = vector_space_size(q, w.strands)?;
    Ok((0..total)
        .into_par_iter()
        .filter_map(|idx| {
            let v = decode_vector(idx, q.order(), w.strands);
            (push_through(q, w, &v) == v).then_some(v)
        })
        .collect())
}

/// Dense table of a 2-cochain's values, reduced into the coefficient ring.
pub(crate) struct PairTable {
    order: usize,
    values: Vec<i64>,
}

impl PairTable {
    pub(crate) fn new(phi: &Cochain) -> Self {
        let n = phi.order();
        let values = (0..n * n).map(|i| phi.evaluate(&[i / n, i % n])).collect();
        PairTable { order: n, values }
    }

    #[inline]
    pub(crate) fn get(&self, a: usize, b: usize) -> i64 {
        self.values[a * self.order + b]
    }
}

pub fn ring_modulus(ring: Ring) -> Modulus {
    match ring {
        Ring::Integers => Modulus::Infinite,
        Ring::Mod(m) => Modulus::Finite(m),
    }
}

/// Value of a state sum together with the number of colorings it ranges over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateSum {
    pub value: GroupRingElement,
    pub colorings: usize,
}

fn check_two_cocycle(q: &Quandle, phi: &Cochain) -> Result<()> {
    if phi.degree() != 2 {
        return Err(Error::InvalidArgument(format!(
            "expected a 2-cocycle, got degree {}",
            phi.degree()
        )));
    }
    if !is_cocycle(q, phi)? {
        return Err(Error::NotCocycle(format!(
            "2-cochain over {} on {}",
            phi.ring(),
            q.label()
        )));
    }
    Ok(())
}

/// `Φ_φ(closure of w) = Σ_C Π_τ φ(args)^{±1}` in Z[A].
pub fn state_sum(q: &Quandle, phi: &Cochain, w: &BraidWord) -> Result<StateSum> {
    check_two_cocycle(q, phi)?;
    state_sum_unchecked(q, phi, w)
}

/// As [`state_sum`] but without the cocycle check (for callers that have validated already).
pub fn state_sum_unchecked(q: &Quandle, phi: &Cochain, w: &BraidWord) -> Result<StateSum> {
    let table = PairTable::new(phi);
    let ring = phi.ring();
    let total = vector_space_size(q, w.strands)?;
    let counts: HashMap<i64, u64> = (0..total)
        .into_par_iter()
        .filter_map(|idx| {
            let top = decode_vector(idx, q.order(), w.strands);
            let mut v = top.clone();
            let mut e = 0i64;
            for &l in &w.letters {
                let wt = apply_letter(q, &mut v, l);
                e = ring.reduce(e + wt.exponent as i64 * table.get(wt.args.0, wt.args.1));
            }
            (v == top).then_some(e)
        })
        .fold(HashMap::new, |mut acc, e| {
            *acc.entry(e).or_insert(0) += 1;
            acc
        })
        .reduce(HashMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        });
    let counts: BTreeMap<i64, u64> = counts.into_iter().collect();
    let n: u64 = counts.values().sum();
    Ok(StateSum {
        value: GroupRingElement::from_exponent_counts(ring_modulus(ring), &counts),
        colorings: n as usize,
    })
}

/// A named closed-braid presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotRecord {
    pub name: String,
    pub braid: BraidWord,
}

/// Parses `name<TAB>strands<TAB>letters` rows; `#` lines and blanks are skipped.
pub fn parse_knot_table(text: &str) -> Result<Vec<KnotRecord>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        if line.trim().is_empty() || line.trim_start().starts_with('#') {
            continue;
        }
        let err = |msg: String| Error::Line {
            line: lineno + 1,
            msg,
        };
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() < 2 || fields.len() > 3 {
            return Err(err(format!(
                "expected 3 tab-separated fields, got `{line}`"
            )));
        }
        let strands: usize = fields[1]
            .trim()
            .parse()
            .map_err(|_| err(format!("bad strand count `{}`", fields[1])))?;
        let letters = fields.get(2).copied().unwrap_or("");
        let braid = BraidWord::parse(strands, letters).map_err(|e| err(e.to_string()))?;
        out.push(KnotRecord {
            name: fields[0].trim().to_string(),
            braid,
        });
    }
    Ok(out)
}

/// An expected invariant. A `disputed` row is one where the listed value is
/// known to disagree with an independent check; it is still compared and
/// reported, but does not count as a failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expected {
    pub value: GroupRingElement,
    pub disputed: bool,
}

/// Parses `name<TAB>value[<TAB>disputed]` rows of expected invariants.
pub fn parse_expected(text: &str, modulus: Modulus) -> Result<BTreeMap<String, Expected>> {
    let mut out = BTreeMap::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: String| Error::Line {
            line: lineno + 1,
            msg,
        };
        let fields: Vec<&str> = line.split('\t').map(str::trim).collect();
        let disputed = match fields.get(2) {
            None => false,
            Some(&"disputed") => true,
            Some(other) => return Err(err(format!("unknown flag `{other}`"))),
        };
        if fields.len() < 2 || fields.len() > 3 {
            return Err(err(format!("expected `name<TAB>value`, got `{line}`")));
        }
        let value = GroupRingElement::parse(fields[1], modulus).map_err(|e| err(e.to_string()))?;
        out.insert(fields[0].to_string(), Expected { value, disputed });
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    /// Mismatch on a row flagged as disputed.
    Disputed,
    Unchecked,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Disputed => "DISPUTED",
            Verdict::Unchecked => "-",
        })
    }
}

#[derive(Clone, Debug)]
pub struct HarnessRow {
    pub name: String,
    pub value: GroupRingElement,
    pub colorings: usize,
    pub expected: Option<Expected>,
}

impl HarnessRow {
    pub fn verdict(&self) -> Verdict {
        match &self.expected {
            None => Verdict::Unchecked,
            Some(e) if e.value == self.value => Verdict::Pass,
            Some(e) if e.disputed => Verdict::Disputed,
            Some(_) => Verdict::Fail,
        }
    }
}

/// Evaluates every record and compares against the expected values.
pub fn table_harness(
    q: &Quandle,
    phi: &Cochain,
    records: &[KnotRecord],
    expected: Option<&BTreeMap<String, Expected>>,
) -> Result<Vec<HarnessRow>> {
    check_two_cocycle(q, phi)?;
    records
        .par_iter()
        .map(|r| {
            let s = state_sum_unchecked(q, phi, &r.braid)?;
            Ok(HarnessRow {
                name: r.name.clone(),
                value: s.value,
                colorings: s.colorings,
                expected: expected.and_then(|m| m.get(&r.name).cloned()),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quandle::{make_dihedral, make_s4};

    #[test]
    fn letters_validated() {
        assert!(BraidWord::new(2, vec![2]).is_err());
        assert!(BraidWord::new(3, vec![0]).is_err());
        assert!(BraidWord::new(0, vec![]).is_err());
        assert_eq!(BraidWord::parse(3, "1,-2,1,-2").unwrap().len(), 4);
        assert!(BraidWord::parse(3, "").unwrap().is_empty());
    }

    #[test]
    fn single_letters() {
        let r3 = make_dihedral(3).unwrap();
        let mut v = vec![0, 1];
        let w = apply_letter(&r3, &mut v, 1);
        assert_eq!(v, vec![1, 2]);
        assert_eq!(w.args, (0, 1));
        let s4 = make_s4();
        for a in 0..4 {
            for b in 0..4 {
                let mut v = vec![a, b];
                let w1 = apply_letter(&s4, &mut v, 1);
                let w2 = apply_letter(&s4, &mut v, -1);
                assert_eq!(v, vec![a, b]);
                assert_eq!(w1.args, w2.args);
                assert_eq!(w1.exponent, -w2.exponent);
            }
            let mut v = vec![a, a, a];
            let w = apply_letter(&s4, &mut v, -2);
            assert_eq!(v, vec![a, a, a]);
            assert_eq!(w.args, (a, a));
        }
    }

    #[test]
    fn coloring_counts() {
        let r3 = make_dihedral(3).unwrap();
        let unknot = BraidWord::new(1, vec![]).unwrap();
        assert_eq!(colorings(&r3, &unknot).unwrap().len(), 3);
        let trefoil = BraidWord::new(2, vec![1, 1, 1]).unwrap();
        let c = colorings(&r3, &trefoil).unwrap();
        assert_eq!(c.len(), 9);
        // oracle: direct scan of all pairs
        let mut brute = Vec::new();
        for a in 0..3 {
            for b in 0..3 {
                if push_through(&r3, &trefoil, &[a, b]) == vec![a, b] {
                    brute.push(vec![a, b]);
                }
            }
        }
        assert_eq!(c, brute);
    }

    #[test]
    fn zero_cocycle_counts_colorings() {
        let r3 = make_dihedral(3).unwrap();
        let phi = Cochain::zero(3, 2, Ring::Mod(3));
        let w = BraidWord::new(3, vec![1, -2, 1, -2]).unwrap();
        let s = state_sum(&r3, &phi, &w).unwrap();
        assert_eq!(s.value.as_integer().unwrap(), (s.colorings as i64).into());
        assert_eq!(s.colorings, colorings(&r3, &w).unwrap().len());
    }

    #[test]
    fn rejects_non_cocycles() {
        let r3 = make_dihedral(3).unwrap();
        let phi = Cochain::characteristic(3, &[0, 1], Ring::Mod(3)).unwrap();
        let w = BraidWord::new(2, vec![1, 1, 1]).unwrap();
        assert!(matches!(
            state_sum(&r3, &phi, &w),
            Err(Error::NotCocycle(_))
        ));
    }

    #[test]
    fn knot_rows() {
        let recs = parse_knot_table("3_1\t2\t1,1,1\n# c\n4_1\t3\t1,-2,1,-2\nU\t2\t\n").unwrap();
        assert_eq!(recs.len(), 3);
        assert_eq!(recs[0].braid.letters(), &[1, 1, 1]);
        assert!(recs[2].braid.is_empty());
        assert!(parse_knot_table("x\t2\t3").is_err());
        assert!(parse_knot_table("x 2 1").is_err());
        let e = parse_expected("3_1\t4+12t\n9_46\t81\tdisputed\n", Modulus::Finite(2)).unwrap();
        assert_eq!(e["3_1"].value.to_string(), "4+12t");
        assert!(!e["3_1"].disputed && e["9_46"].disputed);
        assert!(parse_expected("x\t1\tmaybe\n", Modulus::Finite(2)).is_err());
    }
}
