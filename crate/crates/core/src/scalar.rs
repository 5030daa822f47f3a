//! Exact scalars in the ring `Q(j)[√d]`.
//!
//! A [`Scalar`] is a finite sum of terms `q·√d` or `q·j·√d` where `q` is a
//! rational and `d` a squarefree positive integer. `j` is a commuting unit
//! imaginary, `j² = -1`. Every value is kept in canonical form: radicands are
//! squarefree and zero coefficients are never stored, so structural equality
//! is equality in the ring.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num::bigint::BigInt;
use num::integer::Integer;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Whether a term is real or carries a factor of `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Part {
    Real,
    Imag,
}

/// Index of a term: the squarefree radicand and the real/imaginary part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RadicalKey {
    pub d: u64,
    pub part: Part,
}

impl RadicalKey {
    pub const ONE: RadicalKey = RadicalKey {
        d: 1,
        part: Part::Real,
    };
    pub const J: RadicalKey = RadicalKey {
        d: 1,
        part: Part::Imag,
    };
}

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Scalar {
    terms: BTreeMap<RadicalKey, Rational>,
}

/// Splits `n` into `(s, d)` with `n = s²·d` and `d` squarefree.
pub fn squarefree_split(n: u64) -> (u64, u64) {
    assert!(n > 0, "radicand must be positive");
    let mut rest = n;
    let mut outside = 1u64;
    let mut inside = 1u64;
    let mut p = 2u64;
    while p * p <= rest {
        let mut count = 0;
        while rest % p == 0 {
            rest /= p;
            count += 1;
        }
        for _ in 0..count / 2 {
            outside *= p;
        }
        if count % 2 == 1 {
            inside *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    (outside, inside * rest)
}

pub fn is_squarefree(n: u64) -> bool {
    n > 0 && squarefree_split(n).0 == 1
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

impl Scalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    /// The commuting imaginary unit.
    pub fn j() -> Self {
        Self::monomial(Rational::one(), 1, Part::Imag)
    }

    pub fn int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Self::from_rational(rat(n, d))
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::monomial(q, 1, Part::Real)
    }

    /// `q·√n` (or `q·j·√n`), with `n` reduced to squarefree form.
    pub fn monomial(q: Rational, n: u64, part: Part) -> Self {
        let mut s = Self::zero();
        if q.is_zero() {
            return s;
        }
        let (outside, d) = squarefree_split(n);
        s.terms
            .insert(RadicalKey { d, part }, q * BigInt::from(outside));
        s
    }

    /// The principal square root of a positive integer.
    pub fn sqrt(n: u64) -> Self {
        Self::monomial(Rational::one(), n, Part::Real)
    }

    /// `√p / √q` as an exact scalar.
    pub fn sqrt_ratio(p: u64, q: u64) -> Self {
        // √(p/q) = √(pq) / q
        Self::monomial(rat(1, q as i64), p * q, Part::Real)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&RadicalKey::ONE)
                .is_some_and(|q| q.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&RadicalKey, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: RadicalKey) -> Rational {
        self.terms.get(&key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// True when every term has radicand 1, i.e. the value lies in `Q(j)`.
    pub fn is_gaussian(&self) -> bool {
        self.terms.keys().all(|k| k.d == 1)
    }

    /// Returns the value as a rational if it has no radical or imaginary part.
    pub fn to_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&RadicalKey::ONE).cloned(),
            _ => None,
        }
    }

    /// Returns `(re, im)` if the value lies in `Q(j)`.
    pub fn to_gaussian(&self) -> Option<(Rational, Rational)> {
        self.is_gaussian()
            .then(|| (self.coeff(RadicalKey::ONE), self.coeff(RadicalKey::J)))
    }

    pub fn from_gaussian(re: Rational, im: Rational) -> Self {
        let mut s = Self::from_rational(re);
        s += &Self::monomial(im, 1, Part::Imag);
        s
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational()
            .filter(|q| q.is_integer())
            .map(|q| q.to_integer())
    }

    /// Complex conjugation: `j ↦ -j`.
    pub fn conj(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(k, q)| match k.part {
                Part::Real => (*k, q.clone()),
                Part::Imag => (*k, -q.clone()),
            })
            .collect();
        Self { terms }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        let terms = self.terms.iter().map(|(k, c)| (*k, c * q)).collect();
        Self { terms }
    }

    /// Inverse of a monomial `q·√d` or `q·j·√d`.
    pub fn inv(&self) -> Result<Self> {
        let mut it = self.terms.iter();
        let (key, q) = match (it.next(), it.next()) {
            (None, _) => return Err(Error::ZeroDivision),
            (Some(t), None) => t,
            (Some(_), Some(_)) => {
                return Err(Error::NonMonomial {
                    terms: self.terms.len(),
                })
            }
        };
        // 1/(q√d) = √d/(qd); 1/j = -j
        let mut inv = q.recip() / BigInt::from(key.d);
        if key.part == Part::Imag {
            inv = -inv;
        }
        let mut out = Self::zero();
        out.terms.insert(*key, inv);
        Ok(out)
    }

    /// Inverse within the subfield `Q(j)`.
    pub fn gaussian_inv(&self) -> Result<Self> {
        let (re, im) = self
            .to_gaussian()
            .ok_or(Error::NonMonomial { terms: self.len() })?;
        let norm = &re * &re + &im * &im;
        if norm.is_zero() {
            return Err(Error::ZeroDivision);
        }
        Ok(Self::from_gaussian(&re / &norm, -im / norm))
    }

    fn add_term(&mut self, key: RadicalKey, q: Rational) {
        if q.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(q);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += q;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (key, q)) in self.terms.iter().enumerate() {
            let neg = q.is_negative();
            if i > 0 {
                out.push_str(if neg { " - " } else { " + " });
            } else if neg {
                out.push('-');
            }
            let a = q.abs();
            let bare = key.d == 1 && key.part == Part::Real;
            let num = a.numer().to_string();
            let den = a.denom();
            let mut factors = String::new();
            if key.part == Part::Imag {
                factors.push('j');
            }
            if key.d > 1 {
                factors.push_str(&format!("\\sqrt{{{}}}", key.d));
            }
            if den.is_one() {
                if !a.is_one() || bare {
                    out.push_str(&num);
                }
                out.push_str(&factors);
            } else if a.numer().is_one() && !bare {
                out.push_str(&format!("\\frac{{{factors}}}{{{den}}}"));
            } else {
                out.push_str(&format!("\\frac{{{num}}}{{{den}}}{factors}"));
            }
        }
        out
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (key, q)) in self.terms.iter().enumerate() {
            let neg = q.is_negative();
            if i > 0 {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            } else if neg {
                write!(f, "-")?;
            }
            let a = q.abs();
            let bare = key.d == 1 && key.part == Part::Real;
            if bare {
                write!(f, "{a}")?;
                continue;
            }
            if !a.is_one() {
                if a.is_integer() {
                    write!(f, "{a}")?;
                } else {
                    write!(f, "({a})")?;
                }
            }
            if key.part == Part::Imag {
                write!(f, "j")?;
            }
            if key.d > 1 {
                write!(f, "√{}", key.d)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Self::int(n)
    }
}

impl From<Rational> for Scalar {
    fn from(q: Rational) -> Self {
        Self::from_rational(q)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        for (k, q) in &rhs.terms {
            self.add_term(*k, q.clone());
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        for (k, q) in &rhs.terms {
            self.add_term(*k, -q.clone());
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        let terms = self.terms.iter().map(|(k, q)| (*k, -q.clone())).collect();
        Scalar { terms }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        let mut out = Scalar::zero();
        for (k1, q1) in &self.terms {
            for (k2, q2) in &rhs.terms {
                // √d₁·√d₂ = g·√(d₁d₂/g²), g = gcd(d₁, d₂) for squarefree d₁, d₂
                let g = k1.d.gcd(&k2.d);
                let d = (k1.d / g)
                    .checked_mul(k2.d / g)
                    .expect("radicand overflow");
                let mut q = q1 * q2 * BigInt::from(g);
                let part = match (k1.part, k2.part) {
                    (Part::Real, Part::Real) => Part::Real,
                    (Part::Imag, Part::Imag) => {
                        q = -q;
                        Part::Real
                    }
                    _ => Part::Imag,
                };
                out.add_term(RadicalKey { d, part }, q);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        let mut acc = Scalar::zero();
        for s in iter {
            acc += &s;
        }
        acc
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    d: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    re: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    im: Option<String>,
}

fn parse_rational(s: &str) -> Result<Rational> {
    Rational::from_str(s.trim()).map_err(|e| Error::Schema(format!("bad rational {s:?}: {e}")))
}

impl Scalar {
    fn to_json_terms(&self) -> Vec<TermJson> {
        let mut out: Vec<TermJson> = Vec::new();
        for (k, q) in &self.terms {
            if out.last().map(|t| t.d) != Some(k.d) {
                out.push(TermJson {
                    d: k.d,
                    re: None,
                    im: None,
                });
            }
            let t = out.last_mut().expect("pushed above");
            match k.part {
                Part::Real => t.re = Some(q.to_string()),
                Part::Imag => t.im = Some(q.to_string()),
            }
        }
        out
    }

    fn from_json_terms(terms: Vec<TermJson>) -> Result<Self> {
        let mut out = Scalar::zero();
        let mut seen = std::collections::BTreeSet::new();
        for t in terms {
            if !is_squarefree(t.d) {
                return Err(Error::Schema(format!("radicand {} is not squarefree", t.d)));
            }
            if !seen.insert(t.d) {
                return Err(Error::Schema(format!("radicand {} appears twice", t.d)));
            }
            for (part, v) in [(Part::Real, t.re), (Part::Imag, t.im)] {
                if let Some(v) = v {
                    out.add_term(RadicalKey { d: t.d, part }, parse_rational(&v)?);
                }
            }
        }
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("scalar serialization is infallible")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let terms: Vec<TermJson> =
            serde_json::from_value(v.clone()).map_err(|e| Error::Schema(e.to_string()))?;
        Self::from_json_terms(terms)
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_terms().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<TermJson>::deserialize(d)?;
        Scalar::from_json_terms(terms).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn additive_inverse_of_radical() {
        assert!((&Scalar::sqrt(2) + &-Scalar::sqrt(2)).is_zero());
    }

    #[test]
    fn conjugate_pair_sums_to_one() {
        let half = Scalar::ratio(1, 2);
        let hj = &half * &Scalar::j();
        assert!(((&half + &hj) + (&half - &hj)).is_one());
    }

    #[test]
    fn rationalized_inverse_sqrt6_adds() {
        // 1/√6 = √6/6 by hand; two of them make √6/3
        let inv6 = Scalar::sqrt(6).inv().unwrap();
        assert_eq!(inv6, Scalar::monomial(rat(1, 6), 6, Part::Real));
        assert_eq!(&inv6 + &inv6, Scalar::monomial(rat(1, 3), 6, Part::Real));
    }

    #[test]
    fn products_reduce_radicands() {
        assert_eq!(Scalar::sqrt(8), Scalar::monomial(rat(2, 1), 2, Part::Real));
        assert_eq!(&Scalar::sqrt(2) * &Scalar::sqrt(8), Scalar::int(4));
        assert_eq!(
            &Scalar::sqrt(2) * &Scalar::sqrt(6),
            Scalar::monomial(rat(2, 1), 3, Part::Real)
        );
        let one_j = &Scalar::one() + &Scalar::j();
        let one_mj = &Scalar::one() - &Scalar::j();
        assert_eq!(&one_j * &one_mj, Scalar::int(2));
    }

    #[test]
    fn monomial_inverses() {
        assert_eq!(Scalar::int(-1).inv().unwrap(), Scalar::int(-1));
        // α₃ = -√2/√6 = -(1/3)√3, inverse -√3
        let alpha3 = -(&Scalar::sqrt(2) * &Scalar::sqrt(6).inv().unwrap());
        assert_eq!(alpha3, Scalar::monomial(rat(-1, 3), 3, Part::Real));
        let inv = alpha3.inv().unwrap();
        assert_eq!(inv, -Scalar::sqrt(3));
        assert!((&alpha3 * &inv).is_one());
        assert_eq!(Scalar::j().inv().unwrap(), -Scalar::j());
    }

    #[test]
    fn inverse_errors() {
        let x = &Scalar::one() + &Scalar::sqrt(2);
        assert_eq!(x.inv(), Err(Error::NonMonomial { terms: 2 }));
        assert_eq!(Scalar::zero().inv(), Err(Error::ZeroDivision));
    }

    #[test]
    fn gaussian_inverse() {
        let z = Scalar::from_gaussian(rat(3, 1), rat(4, 1));
        assert!((&z * &z.gaussian_inv().unwrap()).is_one());
    }

    #[test]
    fn squarefree_split_examples() {
        assert_eq!(squarefree_split(1), (1, 1));
        assert_eq!(squarefree_split(12), (2, 3));
        assert_eq!(squarefree_split(72), (6, 2));
        assert_eq!(squarefree_split(42), (1, 42));
        assert!(!is_squarefree(0));
    }

    #[test]
    fn json_shape_and_round_trip() {
        let x = &(&Scalar::ratio(1, 2) + &Scalar::j()) + &Scalar::monomial(rat(-3, 7), 6, Part::Imag);
        let v = x.to_json();
        assert_eq!(
            v.to_string(),
            r#"[{"d":1,"im":"1","re":"1/2"},{"d":6,"im":"-3/7"}]"#
        );
        assert_eq!(Scalar::from_json(&v).unwrap(), x);
        assert_eq!(Scalar::zero().to_json().to_string(), "[]");
    }

    #[test]
    fn json_rejects_bad_radicands() {
        let v: serde_json::Value = serde_json::from_str(r#"[{"d":4,"re":"1"}]"#).unwrap();
        assert!(Scalar::from_json(&v).is_err());
        let v: serde_json::Value =
            serde_json::from_str(r#"[{"d":2,"re":"1"},{"d":2,"im":"1"}]"#).unwrap();
        assert!(Scalar::from_json(&v).is_err());
        let v: serde_json::Value = serde_json::from_str(r#"[{"d":2,"re":"1/0"}]"#).unwrap();
        assert!(Scalar::from_json(&v).is_err());
    }

    #[test]
    fn display_forms() {
        assert_eq!(Scalar::ratio(-1, 2).to_string(), "-1/2");
        assert_eq!(Scalar::monomial(rat(1, 3), 3, Part::Real).to_string(), "(1/3)√3");
        assert_eq!((-Scalar::j()).to_string(), "-j");
        assert_eq!(Scalar::monomial(rat(1, 6), 6, Part::Real).to_latex(), "\\frac{\\sqrt{6}}{6}");
        assert_eq!(Scalar::ratio(-3, 2).to_latex(), "-\\frac{3}{2}");
    }
}
