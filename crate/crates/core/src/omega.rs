//! The recursive ±1 matrix family `Ω_{2^k}`, `Ω⁻_{2^k}` and its `j`-variants.
//!
//! ```text
//! Ω_1 = Ω⁻_1 = 1
//! Ω_{2^k}  = [[Ω,  Ω⁻], [ Ω, -Ω⁻]]
//! Ω⁻_{2^k} = [[Ω⁻, Ω ], [-Ω,  Ω⁻]]      (blocks at level k-1)
//! ```
//!
//! `Ω_{2^k} Ω_{2^k}ᵀ = 2^k·I` and `det Ω_{2^k} = -(2^k)^{2^{k-1}}`.

use std::fmt;

use num::bigint::BigInt;

use crate::error::{check_range, Error, Result};
use crate::matrix::{bareiss_det, Matrix, MvMatrix};
use crate::report::VerifyReport;
use crate::scalar::Scalar;

pub const MAX_DENSE_LEVEL: usize = 6;
pub const MAX_DET_LEVEL: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    Plain,
    Minus,
    ComplexPlain,
    ComplexMinus,
}

impl Variant {
    pub fn is_complex(self) -> bool {
        matches!(self, Variant::ComplexPlain | Variant::ComplexMinus)
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Plain => "plain",
            Variant::Minus => "minus",
            Variant::ComplexPlain => "complex-plain",
            Variant::ComplexMinus => "complex-minus",
        })
    }
}

impl std::str::FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(Variant::Plain),
            "minus" => Ok(Variant::Minus),
            "complex-plain" | "complex" => Ok(Variant::ComplexPlain),
            "complex-minus" => Ok(Variant::ComplexMinus),
            _ => Err(Error::Schema(format!("unknown omega variant {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct OmegaMatrix {
    pub k: usize,
    pub variant: Variant,
    pub entries: MvMatrix,
}

impl OmegaMatrix {
    pub fn dim(&self) -> usize {
        self.entries.rows()
    }
}

/// `(Ω, Ω⁻)` at level `k` by direct recursion.
fn real_pair(k: usize) -> (MvMatrix, MvMatrix) {
    if k == 0 {
        let one = Matrix::identity(1);
        return (one.clone(), one);
    }
    let (p, m) = real_pair(k - 1);
    let plain = Matrix::from_blocks(&p, &m, &p, &m.neg());
    let minus = Matrix::from_blocks(&m, &p, &p.neg(), &m);
    (plain, minus)
}

fn complex_pair(k: usize) -> (MvMatrix, MvMatrix) {
    let j = Scalar::j();
    let mj = -&j;
    let one = Scalar::one();
    let o2j = Matrix::from_rows(vec![vec![one.clone(), one.clone()], vec![j.clone(), mj.clone()]]).unwrap();
    let o2jm = Matrix::from_rows(vec![vec![one.clone(), one.clone()], vec![mj, j]]).unwrap();
    if k == 1 {
        return (o2j, o2jm);
    }
    let (p, m) = real_pair(1);
    let plain = Matrix::from_blocks(&o2j, &o2jm, &p, &m.neg());
    let minus = Matrix::from_blocks(&o2jm, &o2j, &p.neg(), &m);
    (plain, minus)
}

/// `Ω_{2^k}` in the requested variant.
pub fn omega(k: usize, variant: Variant) -> Result<OmegaMatrix> {
    let entries = if variant.is_complex() {
        if k > 2 {
            return Err(Error::Unsupported(format!(
                "complex Ω is defined only for k = 1, 2 (requested k = {k})"
            )));
        }
        check_range("k", k, 1, 2, "1..=2")?;
        let (p, m) = complex_pair(k);
        if variant == Variant::ComplexPlain { p } else { m }
    } else {
        check_range("k", k, 1, MAX_DENSE_LEVEL, "1..=6")?;
        let (p, m) = real_pair(k);
        if variant == Variant::Plain { p } else { m }
    };
    Ok(OmegaMatrix { k, variant, entries })
}

/// Exact Gram identities: `ΩΩᵀ = 2^k·I` for both real variants and, for
/// `k ≤ 2`, the Hermitian form `Ω_jΩ_j* = 2^k·I`.
pub fn gram_check(k: usize) -> Result<VerifyReport> {
    check_range("k", k, 1, MAX_DENSE_LEVEL, "1..=6")?;
    let mut rep = VerifyReport::new(format!("gram-k{k}"));
    let scale = Scalar::int(1 << k);
    let n = 1usize << k;
    for v in [Variant::Plain, Variant::Minus] {
        let o = omega(k, v)?.entries;
        let g = &o * &o.transpose();
        rep.check(
            format!("gram.{v}.k{k}"),
            format!("Ω·Ωᵀ = {n}·I ({v})"),
            g.identity_multiple() == Some(scale.clone()),
            format!("Gram diagonal {}", g.get(0, 0)),
        );
        let cg = &o.transpose() * &o;
        rep.check(
            format!("columns.{v}.k{k}"),
            format!("columns of Ω pairwise orthogonal with squared norm {n} ({v})"),
            cg.identity_multiple() == Some(scale.clone()),
            String::new(),
        );
    }
    if k <= 2 {
        for v in [Variant::ComplexPlain, Variant::ComplexMinus] {
            let o = omega(k, v)?.entries;
            let g = &o * &o.conj_transpose();
            rep.check(
                format!("hermitian.{v}.k{k}"),
                format!("Ω_j·Ω_j* = {n}·I ({v})"),
                g.identity_multiple() == Some(scale.clone()),
                format!("Hermitian Gram:\n{g}"),
            );
        }
    }
    Ok(rep)
}

/// `det Ω_{2^k}` by fraction-free elimination.
pub fn det_omega(k: usize) -> Result<BigInt> {
    check_range("k", k, 1, MAX_DET_LEVEL, "1..=5")?;
    let o = omega(k, Variant::Plain)?.entries;
    bareiss_det(&o.to_integers().expect("Ω has integer entries"))
}

/// Closed form `-(2^k)^{2^{k-1}}`.
pub fn det_closed_form(k: usize) -> BigInt {
    -num::pow(BigInt::from(2u32).pow(k as u32), 1 << (k - 1))
}

/// `Ω_{2^k}·x` through the block recursion in `O(k·2^k)` operations.
pub fn fast_apply(k: usize, variant: Variant, x: &[Scalar]) -> Result<Vec<Scalar>> {
    if variant.is_complex() {
        return Err(Error::Unsupported("fast apply is defined for the real variants".into()));
    }
    if x.len() != 1 << k {
        return Err(Error::DimensionMismatch {
            expected: 1 << k,
            found: x.len(),
        });
    }
    let (p, m) = apply_pair(x);
    Ok(if variant == Variant::Plain { p } else { m })
}

/// Returns `(Ω·x, Ω⁻·x)` at the level matching `x.len()`.
fn apply_pair(x: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
    let n = x.len();
    if n == 1 {
        return (x.to_vec(), x.to_vec());
    }
    let (hi, lo) = x.split_at(n / 2);
    let (p_hi, m_hi) = apply_pair(hi);
    let (p_lo, m_lo) = apply_pair(lo);
    let mut plain = Vec::with_capacity(n);
    let mut minus = Vec::with_capacity(n);
    // Ω:  top = Ω·hi + Ω⁻·lo, bottom = Ω·hi - Ω⁻·lo
    // Ω⁻: top = Ω⁻·hi + Ω·lo, bottom = -Ω·hi + Ω⁻·lo
    plain.extend(p_hi.iter().zip(&m_lo).map(|(a, b)| a + b));
    plain.extend(p_hi.iter().zip(&m_lo).map(|(a, b)| a - b));
    minus.extend(m_hi.iter().zip(&p_lo).map(|(a, b)| a + b));
    minus.extend(p_hi.iter().zip(&m_lo).map(|(a, b)| b - a));
    (plain, minus)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(rows: &[&[i64]]) -> MvMatrix {
        Matrix::from_ints(rows)
    }

    #[test]
    fn omega2_and_omega2_minus() {
        assert_eq!(omega(1, Variant::Plain).unwrap().entries, ints(&[&[1, 1], &[1, -1]]));
        assert_eq!(omega(1, Variant::Minus).unwrap().entries, ints(&[&[1, 1], &[-1, 1]]));
    }

    #[test]
    fn omega4_printed_forms() {
        assert_eq!(
            omega(2, Variant::Plain).unwrap().entries,
            ints(&[&[1, 1, 1, 1], &[1, -1, -1, 1], &[1, 1, -1, -1], &[1, -1, 1, -1]])
        );
        assert_eq!(
            omega(2, Variant::Minus).unwrap().entries,
            ints(&[&[1, 1, 1, 1], &[-1, 1, 1, -1], &[-1, -1, 1, 1], &[-1, 1, -1, 1]])
        );
    }

    #[test]
    fn complex_rows() {
        let j = Scalar::j();
        let o = omega(2, Variant::ComplexPlain).unwrap().entries;
        assert_eq!(o.row(1), &[j.clone(), -&j, -&j, j.clone()]);
        assert_eq!(o.row(2), ints(&[&[1, 1, -1, -1]]).row(0));
        let om = omega(2, Variant::ComplexMinus).unwrap().entries;
        assert_eq!(om.row(1), &[-&j, j.clone(), j.clone(), -&j]);
        assert_eq!(om.row(3), ints(&[&[-1, 1, -1, 1]]).row(0));
    }

    #[test]
    fn ranges() {
        assert!(matches!(omega(0, Variant::Plain), Err(Error::Range { .. })));
        assert!(matches!(omega(7, Variant::Plain), Err(Error::Range { .. })));
        assert!(matches!(omega(3, Variant::ComplexPlain), Err(Error::Unsupported(_))));
        assert!(matches!(det_omega(6), Err(Error::Range { .. })));
        assert!(matches!(
            fast_apply(2, Variant::Plain, &[Scalar::one()]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn fast_apply_row_sums_and_columns() {
        let ones = vec![Scalar::one(); 4];
        let y = fast_apply(2, Variant::Plain, &ones).unwrap();
        assert_eq!(y, vec![Scalar::int(4), Scalar::zero(), Scalar::zero(), Scalar::zero()]);
        for k in 1..=4 {
            for v in [Variant::Plain, Variant::Minus] {
                let o = omega(k, v).unwrap().entries;
                for i in 0..1 << k {
                    let mut e = vec![Scalar::zero(); 1 << k];
                    e[i] = Scalar::one();
                    let col: Vec<Scalar> = (0..1 << k).map(|r| o.get(r, i).clone()).collect();
                    assert_eq!(fast_apply(k, v, &e).unwrap(), col);
                }
            }
        }
    }

    #[test]
    fn determinants_small() {
        assert_eq!(det_omega(1).unwrap(), BigInt::from(-2));
        assert_eq!(det_omega(2).unwrap(), BigInt::from(-16));
        assert_eq!(det_omega(3).unwrap(), BigInt::from(-4096));
        assert_eq!(det_closed_form(3), BigInt::from(-4096));
    }
}
