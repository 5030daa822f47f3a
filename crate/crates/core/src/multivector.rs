//! Multivectors over an arbitrary signature.
//!
//! Blades are bitmasks: bit `i` set means generator `i` is a factor, with
//! factors in ascending index order. Coefficients are exact [`Scalar`]s.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::signature::Signature;

pub type Blade = u32;

/// Sign from reordering the product of two canonical blades.
#[inline]
fn reorder_sign(a: Blade, b: Blade) -> i8 {
    let mut a = a >> 1;
    let mut swaps = 0u32;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps & 1 == 0 {
        1
    } else {
        -1
    }
}

/// Product of two basis blades: `(sign, mask)` with `A·B = sign·blade(mask)`.
pub fn blade_product(a: Blade, b: Blade, sig: &Signature) -> (i8, Blade) {
    let mut sign = reorder_sign(a, b);
    let mut shared = a & b;
    while shared != 0 {
        let i = shared.trailing_zeros() as usize;
        sign *= sig.square(i);
        shared &= shared - 1;
    }
    (sign, a ^ b)
}

pub fn grade(mask: Blade) -> usize {
    mask.count_ones() as usize
}

#[derive(Clone)]
pub struct Multivector {
    sig: Arc<Signature>,
    terms: BTreeMap<Blade, Scalar>,
}

impl Multivector {
    pub fn zero(sig: &Arc<Signature>) -> Self {
        Self {
            sig: Arc::clone(sig),
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(sig: &Arc<Signature>, s: Scalar) -> Self {
        Self::blade(sig, 0, s)
    }

    pub fn one(sig: &Arc<Signature>) -> Self {
        Self::scalar(sig, Scalar::one())
    }

    pub fn blade(sig: &Arc<Signature>, mask: Blade, coeff: Scalar) -> Self {
        assert!(
            (mask as usize) < sig.blade_count(),
            "blade {mask:#b} out of range for {sig}"
        );
        let mut mv = Self::zero(sig);
        if !coeff.is_zero() {
            mv.terms.insert(mask, coeff);
        }
        mv
    }

    /// The `i`-th generator (0-based).
    pub fn generator(sig: &Arc<Signature>, i: usize) -> Self {
        assert!(i < sig.dim(), "generator {i} out of range for {sig}");
        Self::blade(sig, 1 << i, Scalar::one())
    }

    pub fn from_terms(sig: &Arc<Signature>, terms: impl IntoIterator<Item = (Blade, Scalar)>) -> Self {
        let mut mv = Self::zero(sig);
        for (mask, s) in terms {
            mv.add_term(mask, &s);
        }
        mv
    }

    /// A vector `Σ coeffs[i]·generator(i)`.
    pub fn vector(sig: &Arc<Signature>, coeffs: &[Scalar]) -> Self {
        Self::from_terms(
            sig,
            coeffs.iter().enumerate().map(|(i, c)| (1 << i, c.clone())),
        )
    }

    pub fn signature(&self) -> &Arc<Signature> {
        &self.sig
    }

    pub fn terms(&self) -> impl Iterator<Item = (Blade, &Scalar)> {
        self.terms.iter().map(|(m, s)| (*m, s))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mask: Blade) -> Scalar {
        self.terms.get(&mask).cloned().unwrap_or_default()
    }

    pub fn scalar_part(&self) -> Scalar {
        self.coeff(0)
    }

    /// The value as a scalar, if it has no terms above grade 0.
    pub fn as_scalar(&self) -> Option<Scalar> {
        self.terms.keys().all(|m| *m == 0).then(|| self.scalar_part())
    }

    pub fn is_vector(&self) -> bool {
        self.terms.keys().all(|m| grade(*m) == 1)
    }

    pub fn grades(&self) -> Vec<usize> {
        let mut g: Vec<usize> = self.terms.keys().map(|m| grade(*m)).collect();
        g.sort_unstable();
        g.dedup();
        g
    }

    fn add_term(&mut self, mask: Blade, s: &Scalar) {
        if s.is_zero() {
            return;
        }
        let entry = self.terms.entry(mask).or_default();
        *entry += s;
        if entry.is_zero() {
            self.terms.remove(&mask);
        }
    }

    fn same_sig(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.sig, &other.sig) || self.sig == other.sig {
            Ok(())
        } else {
            Err(Error::SignatureMismatch {
                left: self.sig.to_string(),
                right: other.sig.to_string(),
            })
        }
    }

    fn product_filtered(&self, other: &Self, keep: impl Fn(Blade, Blade) -> bool) -> Result<Self> {
        self.same_sig(other)?;
        let mut acc: BTreeMap<Blade, Scalar> = BTreeMap::new();
        for (ma, sa) in &self.terms {
            for (mb, sb) in &other.terms {
                if !keep(*ma, *mb) {
                    continue;
                }
                let (sign, mask) = blade_product(*ma, *mb, &self.sig);
                let prod = sa * sb;
                let entry = acc.entry(mask).or_default();
                if sign > 0 {
                    *entry += &prod;
                } else {
                    *entry -= &prod;
                }
            }
        }
        acc.retain(|_, s| !s.is_zero());
        Ok(Self {
            sig: Arc::clone(&self.sig),
            terms: acc,
        })
    }

    /// Geometric product.
    pub fn gp(&self, other: &Self) -> Result<Self> {
        self.product_filtered(other, |_, _| true)
    }

    /// Outer product: for blades of grades r and s, the grade r+s part of
    /// their geometric product, which is nonzero only for disjoint blades.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        self.product_filtered(other, |a, b| a & b == 0)
    }

    /// Symmetric product of vectors, `(xy + yx)/2`.
    pub fn sym_dot(&self, other: &Self) -> Result<Self> {
        if !self.is_vector() || !other.is_vector() {
            return Err(Error::NotAVector);
        }
        let ac = self.anticommutator(other)?;
        Ok(ac.scale(&Scalar::ratio(1, 2)))
    }

    /// `xy + yx`.
    pub fn anticommutator(&self, other: &Self) -> Result<Self> {
        Ok(&self.gp(other)? + &other.gp(self)?)
    }

    /// `xy - yx`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        Ok(&self.gp(other)? - &other.gp(self)?)
    }

    pub fn reverse(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, s)| {
                let k = grade(*m);
                if (k * k.saturating_sub(1) / 2) % 2 == 0 {
                    (*m, s.clone())
                } else {
                    (*m, -s)
                }
            })
            .collect();
        Self {
            sig: Arc::clone(&self.sig),
            terms,
        }
    }

    pub fn grade_project(&self, k: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| grade(**m) == k)
            .map(|(m, s)| (*m, s.clone()))
            .collect();
        Self {
            sig: Arc::clone(&self.sig),
            terms,
        }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let mut out = Self::zero(&self.sig);
        for (m, c) in &self.terms {
            out.add_term(*m, &(c * s));
        }
        out
    }

    /// Complex conjugation of every coefficient (`j ↦ -j`).
    pub fn conj(&self) -> Self {
        let terms = self.terms.iter().map(|(m, s)| (*m, s.conj())).collect();
        Self {
            sig: Arc::clone(&self.sig),
            terms,
        }
    }

    /// Geometric product of a sequence, left to right.
    pub fn product<'a>(sig: &Arc<Signature>, factors: impl IntoIterator<Item = &'a Multivector>) -> Result<Self> {
        factors
            .into_iter()
            .try_fold(Self::one(sig), |acc, f| acc.gp(f))
    }

    /// Outer product of a sequence, left to right.
    pub fn wedge_all<'a>(sig: &Arc<Signature>, factors: impl IntoIterator<Item = &'a Multivector>) -> Result<Self> {
        factors
            .into_iter()
            .try_fold(Self::one(sig), |acc, f| acc.wedge(f))
    }

    /// True when every coefficient lies in `Q(j)`.
    pub fn is_gaussian(&self) -> bool {
        self.terms.values().all(Scalar::is_gaussian)
    }

    fn blade_name(&self, mask: Blade) -> String {
        (0..self.sig.dim())
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| self.sig.label(i).to_string())
            .collect::<Vec<_>>()
            .join("")
    }

    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (m, s) in &self.terms {
            let blade = latex_blade(&self.sig, *m);
            let coeff = s.to_latex();
            let term = if *m == 0 {
                coeff
            } else if s.is_one() {
                blade
            } else if (-s).is_one() {
                format!("-{blade}")
            } else if s.len() > 1 {
                format!("\\left({coeff}\\right){blade}")
            } else {
                format!("{coeff}{blade}")
            };
            parts.push(term);
        }
        let mut out = parts[0].clone();
        for p in &parts[1..] {
            if let Some(rest) = p.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(p);
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(m, s)| {
                let blade: Vec<usize> = (0..self.sig.dim()).filter(|i| m & (1 << i) != 0).collect();
                json!({"blade": blade, "coeff": s.to_json()})
            })
            .collect();
        json!({"signature": self.sig.squares(), "terms": terms})
    }

    /// Parses the JSON form. When `preset` has the same squares, its labels
    /// are kept.
    pub fn from_json(v: &Value, preset: Option<&Arc<Signature>>) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Schema("multivector must be an object".into()))?;
        let squares: Vec<i8> = obj
            .get("signature")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Schema("missing signature array".into()))?
            .iter()
            .map(|s| match s.as_i64() {
                Some(1) => Ok(1),
                Some(-1) => Ok(-1),
                _ => Err(Error::Schema(format!("bad generator square {s}"))),
            })
            .collect::<Result<_>>()?;
        let sig = match preset {
            Some(p) if p.squares() == squares.as_slice() => Arc::clone(p),
            _ => Arc::new(Signature::new(squares)?),
        };
        let terms = obj
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Schema("missing terms array".into()))?;
        let mut mv = Self::zero(&sig);
        let mut seen = std::collections::BTreeSet::new();
        for t in terms {
            let idx = t
                .get("blade")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Schema("term without blade".into()))?;
            let mut mask: Blade = 0;
            let mut last: Option<u64> = None;
            for i in idx {
                let i = i
                    .as_u64()
                    .ok_or_else(|| Error::Schema(format!("bad generator index {i}")))?;
                if i as usize >= sig.dim() || last.is_some_and(|l| l >= i) {
                    return Err(Error::Schema(format!(
                        "blade indices must be ascending and below {}",
                        sig.dim()
                    )));
                }
                last = Some(i);
                mask |= 1 << i;
            }
            if !seen.insert(mask) {
                return Err(Error::Schema(format!("blade {idx:?} appears twice")));
            }
            let coeff = Scalar::from_json(
                t.get("coeff")
                    .ok_or_else(|| Error::Schema("term without coeff".into()))?,
            )?;
            mv.add_term(mask, &coeff);
        }
        Ok(mv)
    }
}

fn latex_blade(sig: &Signature, mask: Blade) -> String {
    let mut out = String::new();
    for i in (0..sig.dim()).filter(|i| mask & (1 << i) != 0) {
        let label = sig.label(i);
        let (head, tail) = label.split_at(label.char_indices().nth(1).map_or(label.len(), |(p, _)| p));
        let head = match head {
            "γ" => "\\gamma",
            "e" => "\\mathbf{e}",
            "f" => "\\mathbf{f}",
            h => h,
        };
        if tail.is_empty() {
            out.push_str(head);
        } else {
            out.push_str(&format!("{head}_{{{tail}}}"));
        }
    }
    out
}

impl PartialEq for Multivector {
    fn eq(&self, other: &Self) -> bool {
        self.sig == other.sig && self.terms == other.terms
    }
}

impl Eq for Multivector {}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, s)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *m == 0 {
                write!(f, "{s}")?;
            } else if s.len() > 1 {
                write!(f, "({s}){}", self.blade_name(*m))?;
            } else if s.is_one() {
                write!(f, "{}", self.blade_name(*m))?;
            } else {
                write!(f, "{s}·{}", self.blade_name(*m))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multivector[{:?}]({self})", self.sig)
    }
}

impl<'a> Add<&'a Multivector> for &'a Multivector {
    type Output = Multivector;
    fn add(self, rhs: &'a Multivector) -> Multivector {
        self.same_sig(rhs).expect("signature mismatch in +");
        let mut out = self.clone();
        for (m, s) in &rhs.terms {
            out.add_term(*m, s);
        }
        out
    }
}

impl<'a> Sub<&'a Multivector> for &'a Multivector {
    type Output = Multivector;
    fn sub(self, rhs: &'a Multivector) -> Multivector {
        self.same_sig(rhs).expect("signature mismatch in -");
        let mut out = self.clone();
        for (m, s) in &rhs.terms {
            out.add_term(*m, &-s);
        }
        out
    }
}

/// Geometric product. Panics on signature mismatch; use [`Multivector::gp`]
/// for the fallible form.
impl<'a> Mul<&'a Multivector> for &'a Multivector {
    type Output = Multivector;
    fn mul(self, rhs: &'a Multivector) -> Multivector {
        self.gp(rhs).expect("signature mismatch in *")
    }
}

impl<'a> Mul<&'a Scalar> for &'a Multivector {
    type Output = Multivector;
    fn mul(self, rhs: &'a Scalar) -> Multivector {
        self.scale(rhs)
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.scale(&Scalar::int(-1))
    }
}

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr<Multivector> for Multivector {
            type Output = Multivector;
            fn $m(self, rhs: Multivector) -> Multivector {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Multivector> for Multivector {
            type Output = Multivector;
            fn $m(self, rhs: &'a Multivector) -> Multivector {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Multivector> for &'a Multivector {
            type Output = Multivector;
            fn $m(self, rhs: Multivector) -> Multivector {
                self.$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn g11() -> Arc<Signature> {
        Signature::g_nn(1).into_arc()
    }

    #[test]
    fn blade_product_examples() {
        let s = Signature::g_nn(1);
        // (ef)e = -f
        assert_eq!(blade_product(0b11, 0b01, &s), (-1, 0b10));
        // f² = -1
        assert_eq!(blade_product(0b10, 0b10, &s), (-1, 0));
        let s3 = Signature::g3();
        assert_eq!(blade_product(0b001, 0b010, &s3), (1, 0b011));
        assert_eq!(blade_product(0b010, 0b001, &s3), (-1, 0b011));
    }

    #[test]
    fn hyperbolic_bivector_squares_to_one() {
        let sig = g11();
        let e = Multivector::generator(&sig, 0);
        let f = Multivector::generator(&sig, 1);
        let u = &e * &f;
        assert_eq!(&u * &u, Multivector::one(&sig));
        assert_eq!(&e * &e, Multivector::one(&sig));
        assert_eq!(&f * &f, -Multivector::one(&sig));
    }

    #[test]
    fn sym_dot_rejects_non_vectors() {
        let sig = g11();
        let e = Multivector::generator(&sig, 0);
        let u = &e * &Multivector::generator(&sig, 1);
        assert_eq!(u.sym_dot(&e), Err(Error::NotAVector));
        assert_eq!(e.sym_dot(&e).unwrap(), Multivector::one(&sig));
    }

    #[test]
    fn signature_mismatch() {
        let a = Multivector::generator(&g11(), 0);
        let b = Multivector::generator(&Signature::g3().into_arc(), 0);
        assert!(matches!(a.gp(&b), Err(Error::SignatureMismatch { .. })));
        assert!(matches!(a.wedge(&b), Err(Error::SignatureMismatch { .. })));
    }

    #[test]
    fn reverse_and_grade_projection() {
        let sig = g11();
        let e = Multivector::generator(&sig, 0);
        let f = Multivector::generator(&sig, 1);
        let ef = &e * &f;
        assert_eq!(ef.reverse(), &f * &e);
        assert_eq!(ef.reverse(), -&ef);
        let s = Multivector::scalar(&sig, Scalar::ratio(3, 4));
        assert_eq!(s.reverse(), s);
        let half = Scalar::ratio(1, 2);
        let u_plus = (&Multivector::one(&sig) + &ef).scale(&half);
        assert_eq!(u_plus.grade_project(0), Multivector::scalar(&sig, half.clone()));
        let a = (&e + &f).scale(&half);
        assert!(a.grade_project(0).is_zero());
        let g13 = Signature::g13().into_arc();
        let top = Multivector::blade(&g13, 0b1111, Scalar::one());
        assert_eq!(top.grade_project(4), top);
    }

    #[test]
    fn wedge_of_disjoint_and_repeated() {
        let sig = g11();
        let half = Scalar::ratio(1, 2);
        let e = Multivector::generator(&sig, 0);
        let f = Multivector::generator(&sig, 1);
        let c1 = (&e + &f).scale(&half);
        let c2 = (&e - &f).scale(&half);
        assert!(c1.wedge(&c1).unwrap().is_zero());
        // brute-force grade split of the geometric product
        let prod = &c1 * &c2;
        assert_eq!(c1.wedge(&c2).unwrap(), prod.grade_project(2));
        assert_eq!(
            c1.wedge(&c2).unwrap(),
            &prod - &c1.sym_dot(&c2).unwrap()
        );
    }

    #[test]
    fn json_round_trip_and_validation() {
        let sig = g11();
        let x = Multivector::from_terms(
            &sig,
            [(0, Scalar::ratio(1, 2)), (0b11, &Scalar::j() * &Scalar::sqrt(3))],
        );
        let v = x.to_json();
        assert_eq!(Multivector::from_json(&v, Some(&sig)).unwrap(), x);
        let bad: Value = serde_json::from_str(
            r#"{"signature":[1,-1],"terms":[{"blade":[1,0],"coeff":[{"d":1,"re":"1"}]}]}"#,
        )
        .unwrap();
        assert!(Multivector::from_json(&bad, None).is_err());
        let bad: Value = serde_json::from_str(r#"{"signature":[1,2],"terms":[]}"#).unwrap();
        assert!(Multivector::from_json(&bad, None).is_err());
    }
}
