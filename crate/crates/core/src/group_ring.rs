//! The integral group ring Z[A] of a cyclic group A = <t>.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Order of the cyclic coefficient group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Modulus {
    Finite(u64),
    Infinite,
}

impl Modulus {
    /// `0` means infinite cyclic, matching the JSON convention.
    pub fn from_u64(q: u64) -> Self {
        if q == 0 {
            Modulus::Infinite
        } else {
            Modulus::Finite(q)
        }
    }

    pub fn as_u64(self) -> u64 {
        match self {
            Modulus::Finite(q) => q,
            Modulus::Infinite => 0,
        }
    }

    /// Canonical exponent representative.
    pub fn reduce(self, e: i64) -> i64 {
        match self {
            Modulus::Finite(q) => e.rem_euclid(q as i64),
            Modulus::Infinite => e,
        }
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Modulus::Finite(q) => write!(f, "Z_{q}"),
            Modulus::Infinite => write!(f, "Z"),
        }
    }
}

/// A finite sum `Σ c_e t^e` with integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupRingElement {
    modulus: Modulus,
    coeffs: BTreeMap<i64, BigInt>,
}

impl fmt::Debug for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self, self.modulus)
    }
}

impl GroupRingElement {
    pub fn zero(modulus: Modulus) -> Self {
        GroupRingElement {
            modulus,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(modulus: Modulus) -> Self {
        Self::monomial(modulus, 0, 1)
    }

    /// `c · t^e`.
    pub fn monomial(modulus: Modulus, e: i64, c: impl Into<BigInt>) -> Self {
        let mut x = Self::zero(modulus);
        x.add_term(e, c.into());
        x
    }

    /// Builds from `(exponent, coefficient)` pairs, reducing and merging.
    pub fn from_terms<I, C>(modulus: Modulus, terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut x = Self::zero(modulus);
        for (e, c) in terms {
            x.add_term(e, c.into());
        }
        x
    }

    /// Histogram of exponents: each occurrence contributes `+1·t^e`.
    pub fn from_exponent_counts(modulus: Modulus, counts: &BTreeMap<i64, u64>) -> Self {
        Self::from_terms(modulus, counts.iter().map(|(&e, &c)| (e, BigInt::from(c))))
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.modulus.reduce(e);
        let slot = self.coeffs.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.coeffs
            .get(&self.modulus.reduce(e))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Sum of coefficients (the augmentation).
    pub fn augmentation(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch(
                self.modulus.as_u64(),
                other.modulus.as_u64(),
            ));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (&e, c) in &other.coeffs {
            out.add_term(e, c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.modulus);
        for (&e1, c1) in &self.coeffs {
            for (&e2, c2) in &other.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        Ok(out)
    }

    /// `Σ c_e t^{-e}`.
    pub fn conjugate(&self) -> Self {
        Self::from_terms(
            self.modulus,
            self.coeffs.iter().map(|(&e, c)| (-e, c.clone())),
        )
    }

    /// The value as a plain integer when only `t^0` is present.
    pub fn as_integer(&self) -> Option<BigInt> {
        match self.coeffs.len() {
            0 => Some(BigInt::zero()),
            1 => self.coeffs.get(&0).cloned(),
            _ => None,
        }
    }

    /// Reinterprets with a new modulus (exponents are re-reduced).
    pub fn with_modulus(&self, modulus: Modulus) -> Self {
        Self::from_terms(modulus, self.coeffs.iter().map(|(&e, c)| (e, c.clone())))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let coeffs: serde_json::Map<String, serde_json::Value> = self
            .coeffs
            .iter()
            .map(|(e, c)| {
                let v = match c.to_i64() {
                    Some(i) => serde_json::Value::from(i),
                    None => serde_json::Value::from(c.to_string()),
                };
                (e.to_string(), v)
            })
            .collect();
        serde_json::json!({ "modulus": self.modulus.as_u64(), "coeffs": coeffs })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("group ring JSON: {m}"));
        let modulus = v
            .get("modulus")
            .and_then(|m| m.as_u64())
            .ok_or_else(|| bad("missing modulus"))?;
        let modulus = Modulus::from_u64(modulus);
        let coeffs = v
            .get("coeffs")
            .and_then(|c| c.as_object())
            .ok_or_else(|| bad("missing coeffs"))?;
        let mut x = Self::zero(modulus);
        for (k, c) in coeffs {
            let e: i64 = k.parse().map_err(|_| bad("bad exponent"))?;
            let c: BigInt = match c {
                serde_json::Value::Number(n) => n
                    .as_i64()
                    .map(BigInt::from)
                    .ok_or_else(|| bad("bad coefficient"))?,
                serde_json::Value::String(s) => s.parse().map_err(|_| bad("bad coefficient"))?,
                _ => return Err(bad("bad coefficient")),
            };
            x.add_term(e, c);
        }
        Ok(x)
    }

    /// Parses canonical text such as `5+10t+10t^4` or `3-t^2`.
    pub fn parse(text: &str, modulus: Modulus) -> Result<Self> {
        let bad = || Error::Parse(format!("group ring element `{text}`"));
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(bad());
        }
        let mut x = Self::zero(modulus);
        let mut rest = s.as_str();
        let mut first = true;
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'+' if !first => (1, &rest[1..]),
                b'-' => (-1, &rest[1..]),
                _ if first => (1, rest),
                _ => return Err(bad()),
            };
            first = false;
            // a sign right after `^` belongs to the exponent
            let end = body
                .char_indices()
                .find(|&(i, c)| (c == '+' || c == '-') && !body[..i].ends_with('^'))
                .map_or(body.len(), |(i, _)| i);
            let term = &body[..end];
            rest = &body[end..];
            if term.is_empty() {
                return Err(bad());
            }
            let (coef, exp) = match term.find('t') {
                None => (term, None),
                Some(i) => (&term[..i], Some(&term[i + 1..])),
            };
            let coef = coef.strip_suffix('*').unwrap_or(coef);
            let c: BigInt = if coef.is_empty() {
                if exp.is_none() {
                    return Err(bad());
                }
                BigInt::one()
            } else {
                coef.parse().map_err(|_| bad())?
            };
            let e: i64 = match exp {
                None => 0,
                Some("") => 1,
                Some(p) => p
                    .strip_prefix('^')
                    .ok_or_else(bad)?
                    .parse()
                    .map_err(|_| bad())?,
            };
            x.add_term(e, c * sign);
        }
        Ok(x)
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            if i > 0 {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            } else if neg {
                write!(f, "-")?;
            }
            let a = c.abs();
            match e {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}")?;
                    }
                    if e == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl FromStr for GroupRingElement {
    type Err = Error;

    /// Parses with an infinite modulus; use [`GroupRingElement::parse`] to fix one.
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s, Modulus::Infinite)
    }
}

impl Add for &GroupRingElement {
    type Output = GroupRingElement;

    fn add(self, rhs: &GroupRingElement) -> GroupRingElement {
        self.try_add(rhs).expect("group ring moduli differ")
    }
}

impl AddAssign<&GroupRingElement> for GroupRingElement {
    fn add_assign(&mut self, rhs: &GroupRingElement) {
        self.check(rhs).expect("group ring moduli differ");
        for (&e, c) in &rhs.coeffs {
            self.add_term(e, c.clone());
        }
    }
}

impl Mul for &GroupRingElement {
    type Output = GroupRingElement;

    fn mul(self, rhs: &GroupRingElement) -> GroupRingElement {
        self.try_mul(rhs).expect("group ring moduli differ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(q: u64) -> Modulus {
        Modulus::from_u64(q)
    }

    fn p(s: &str, q: u64) -> GroupRingElement {
        GroupRingElement::parse(s, z(q)).unwrap()
    }

    #[test]
    fn addition() {
        assert_eq!(
            &p("4+12t", 2) + &GroupRingElement::zero(z(2)),
            p("4+12t", 2)
        );
        assert_eq!(&p("3+6t", 3) + &p("3+6t^2", 3), p("6+6t+6t^2", 3));
        let t = GroupRingElement::monomial(z(2), 1, 1);
        assert_eq!((&t + &t).to_string(), "2t");
        assert!(p("1", 2).try_add(&p("1", 3)).is_err());
    }

    #[test]
    fn multiplication() {
        let t = GroupRingElement::monomial(z(2), 1, 1);
        assert_eq!(&t * &t, GroupRingElement::one(z(2)));
        let x = p("4+12t", 2);
        assert_eq!(&x * &GroupRingElement::one(z(2)), x);
        assert_eq!((&p("1+t", 2) * &p("1+t", 2)).to_string(), "2+2t");
        assert!(p("1", 2).try_mul(&p("1", 0)).is_err());
    }

    #[test]
    fn conjugation() {
        assert_eq!(p("4+12t", 2).conjugate(), p("4+12t", 2));
        assert_eq!(p("3+6t", 3).conjugate().to_string(), "3+6t^2");
        let x = p("5+10t+10t^4", 5);
        assert_eq!(x.conjugate().conjugate(), x);
        assert_eq!(p("2+t^3", 0).conjugate().to_string(), "t^-3+2");
    }

    #[test]
    fn text_round_trip() {
        for (s, q) in [
            ("4+12t", 2),
            ("9", 3),
            ("5+10t+10t^4", 5),
            ("0", 3),
            ("t", 2),
        ] {
            assert_eq!(p(s, q).to_string(), s);
        }
        let x = p("5+10t+10t^4", 5);
        assert_eq!(x.coeff(0), 5.into());
        assert_eq!(x.coeff(1), 10.into());
        assert_eq!(x.coeff(4), 10.into());
        assert_eq!(p("4 + 12*t", 2), p("4+12t", 2));
        assert_eq!(p("3-t^2", 0).to_string(), "3-t^2");
        assert_eq!(p("t^3", 2).to_string(), "t");
        assert_eq!(p("-t^-1+2t^-2", 0).to_string(), "2t^-2-t^-1");
        assert_eq!(p("2t^-2+2t^-1+8+3t+t^2", 0).coeff(-2), 2.into());
        for bad in ["", "4+", "x", "4++t", "2t^", "t^a"] {
            assert!(GroupRingElement::parse(bad, z(2)).is_err(), "{bad}");
        }
    }

    #[test]
    fn json_round_trip() {
        let x = p("4+12t", 2);
        let j = x.to_json();
        assert_eq!(
            j,
            serde_json::json!({"modulus": 2, "coeffs": {"0": 4, "1": 12}})
        );
        assert_eq!(GroupRingElement::from_json(&j).unwrap(), x);
        let y = p("16", 0);
        assert_eq!(GroupRingElement::from_json(&y.to_json()).unwrap(), y);
    }

    #[test]
    fn integer_values() {
        assert_eq!(p("16", 0).as_integer(), Some(16.into()));
        assert_eq!(p("4+t", 2).as_integer(), None);
        assert_eq!(p("4+12t", 2).augmentation(), 16.into());
    }
}
