//! Global Witt bases of `G(n,n)`: two mutually dual Grassmann algebras of
//! null vectors, their spectral basis, and the resulting isomorphism with
//! `2^n × 2^n` matrices.

use std::sync::Arc;

use crate::error::{check_range, Result};
use crate::multivector::Multivector;
use crate::report::VerifyReport;
use crate::scalar::Scalar;
use crate::signature::Signature;
use crate::spectral::SpectralBasis;

#[derive(Clone, Debug)]
pub struct GlobalWitt {
    pub n: usize,
    pub a: Vec<Multivector>,
    pub b: Vec<Multivector>,
    pub sig: Arc<Signature>,
}

impl GlobalWitt {
    /// `u_i = b_i a_i`.
    pub fn u(&self, i: usize) -> Multivector {
        &self.b[i] * &self.a[i]
    }

    /// `u_i† = a_i b_i`.
    pub fn u_dagger(&self, i: usize) -> Multivector {
        &self.a[i] * &self.b[i]
    }

    /// `e_i = a_i + b_i`.
    pub fn e(&self, i: usize) -> Multivector {
        &self.a[i] + &self.b[i]
    }

    /// `f_i = a_i - b_i`.
    pub fn f(&self, i: usize) -> Multivector {
        &self.a[i] - &self.b[i]
    }
}

/// `a_i = (e_i + f_i)/2`, `b_i = (e_i - f_i)/2` in `G(n,n)`.
pub fn make_global_witt(n: usize) -> Result<GlobalWitt> {
    check_range("n", n, 1, 4, "1..=4")?;
    let sig = Signature::g_nn(n).into_arc();
    let half = Scalar::ratio(1, 2);
    let mut a = Vec::with_capacity(n);
    let mut b = Vec::with_capacity(n);
    for i in 0..n {
        let e = Multivector::generator(&sig, 2 * i);
        let f = Multivector::generator(&sig, 2 * i + 1);
        a.push((&e + &f).scale(&half));
        b.push((&e - &f).scale(&half));
    }
    Ok(GlobalWitt { n, a, b, sig })
}

/// Checks nilpotency, anticommutation within each Grassmann set, and
/// `a_i b_j + b_j a_i = δ_ij`.
pub fn check_global_duality(w: &GlobalWitt) -> VerifyReport {
    let mut rep = VerifyReport::new("global-duality");
    let zero = Multivector::zero(&w.sig);
    let one = Multivector::one(&w.sig);
    for (name, set) in [("a", &w.a), ("b", &w.b)] {
        for (i, x) in set.iter().enumerate() {
            let sq = x * x;
            rep.check(
                format!("nilpotent.{name}{}", i + 1),
                format!("{name}_{}^2 = 0", i + 1),
                sq == zero,
                format!("{name}_{}^2 = {sq}", i + 1),
            );
        }
    }
    for (name, set) in [("a", &w.a), ("b", &w.b)] {
        for i in 0..w.n {
            for j in 0..w.n {
                if i == j {
                    continue;
                }
                let ac = &(&set[i] * &set[j]) + &(&set[j] * &set[i]);
                rep.check(
                    format!("anticommute.{name}{}{name}{}", i + 1, j + 1),
                    format!("{name}_{i1}{name}_{j1} + {name}_{j1}{name}_{i1} = 0", i1 = i + 1, j1 = j + 1),
                    ac == zero,
                    format!("anticommutator = {ac}"),
                );
            }
        }
    }
    for i in 0..w.n {
        for j in 0..w.n {
            let ac = &(&w.a[i] * &w.b[j]) + &(&w.b[j] * &w.a[i]);
            let want = if i == j { &one } else { &zero };
            rep.check(
                format!("dual.a{}b{}", i + 1, j + 1),
                format!("a_{i1}b_{j1} + b_{j1}a_{i1} = δ_{i1}{j1}", i1 = i + 1, j1 = j + 1),
                &ac == want,
                format!("anticommutator = {ac}"),
            );
        }
    }
    rep
}

/// Subsets of `0..n` ordered by bitmask.
fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..1usize << n).map(move |mask| (0..n).filter(|i| mask & (1 << i) != 0).collect())
}

fn digits(idx: &[usize]) -> String {
    idx.iter().map(|i| (i + 1).to_string()).collect()
}

/// Spectral basis of `G(n,n)`.
///
/// Rows are `a_S` for subsets `S` in bitmask order with ascending factors
/// (`1, a1, a2, a1a2, …`); columns are `b_S` with descending factors
/// (`1, b1, b2, b2b1, …`); the idempotent is `u_1⋯u_n`.
pub fn spectral_basis_nn(n: usize) -> Result<SpectralBasis> {
    let w = make_global_witt(n)?;
    spectral_basis_from_witt(&w)
}

/// The same construction for any globally dual pair, in whatever algebra it
/// lives in.
pub fn spectral_basis_from_witt(w: &GlobalWitt) -> Result<SpectralBasis> {
    let sig = &w.sig;
    let center = Multivector::product(sig, &(0..w.n).map(|i| w.u(i)).collect::<Vec<_>>())?;
    let mut rows = Vec::new();
    let mut cols = Vec::new();
    let mut row_labels = Vec::new();
    let mut col_labels = Vec::new();
    for s in subsets(w.n) {
        rows.push(Multivector::product(sig, s.iter().map(|&i| &w.a[i]))?);
        cols.push(Multivector::product(sig, s.iter().rev().map(|&i| &w.b[i]))?);
        if s.is_empty() {
            row_labels.push("1".to_string());
            col_labels.push("1".to_string());
        } else {
            let rev: Vec<usize> = s.iter().rev().copied().collect();
            row_labels.push(format!("a_{{{}}}", digits(&s)));
            col_labels.push(format!("b_{{{}}}", digits(&rev)));
        }
    }
    let center_label: String = (1..=w.n).map(|i| format!("u_{i}")).collect::<Vec<_>>().join(" ");
    let one = Multivector::one(sig);
    Ok(SpectralBasis::new(rows, center, cols, vec![one])?.with_labels(row_labels, &center_label, col_labels))
}

/// The `G(1,1)` spectral basis bordered by `(1, e)` on both sides instead of
/// `(1, a)` and `(1, b)`.
pub fn spectral_basis_g11_e_borders() -> Result<SpectralBasis> {
    let w = make_global_witt(1)?;
    let one = Multivector::one(&w.sig);
    let e = w.e(0);
    Ok(SpectralBasis::new(
        vec![one.clone(), e.clone()],
        w.u(0),
        vec![one.clone(), e],
        vec![one],
    )?
    .with_labels(vec!["1".into(), "e".into()], "b a", vec!["1".into(), "e".into()]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::matrix::Matrix;

    #[test]
    fn range_is_enforced() {
        assert!(matches!(make_global_witt(0), Err(Error::Range { .. })));
        assert!(matches!(make_global_witt(5), Err(Error::Range { .. })));
        assert!(matches!(spectral_basis_nn(5), Err(Error::Range { .. })));
    }

    #[test]
    fn nilpotency_n1() {
        let w = make_global_witt(1).unwrap();
        assert!((&w.a[0] * &w.a[0]).is_zero());
        assert!((&w.b[0] * &w.b[0]).is_zero());
    }

    #[test]
    fn duality_report_counts() {
        let rep = check_global_duality(&make_global_witt(2).unwrap());
        assert_eq!(rep.checks.len(), 12);
        assert!(rep.all_passed());
        let rep = check_global_duality(&make_global_witt(3).unwrap());
        assert_eq!(rep.checks.len(), 6 + 12 + 9);
        assert!(rep.all_passed());
    }

    #[test]
    fn perturbed_b1_breaks_only_nilpotency() {
        // (b + a)² = ab + ba = 1
        let mut w = make_global_witt(2).unwrap();
        w.b[0] = &w.b[0] + &w.a[0];
        let rep = check_global_duality(&w);
        let status = |id: &str| rep.find(id).unwrap().status;
        use crate::report::Status::*;
        assert_eq!(status("nilpotent.b1"), Fail);
        assert_eq!(status("dual.a1b1"), Pass);
        assert_eq!(status("anticommute.a1a2"), Pass);
        assert_eq!(status("nilpotent.a1"), Pass);
    }

    #[test]
    fn top_wedge_nonzero_n2() {
        let w = make_global_witt(2).unwrap();
        let top = Multivector::wedge_all(&w.sig, [&w.a[0], &w.a[1], &w.b[0], &w.b[1]]).unwrap();
        assert!(!top.is_zero());
        assert_eq!(top.grades(), vec![4]);
    }

    #[test]
    fn n1_coordinates_of_a_and_b() {
        let sb = spectral_basis_nn(1).unwrap();
        let w = make_global_witt(1).unwrap();
        assert_eq!(sb.to_matrix(&w.a[0]).unwrap(), Matrix::from_ints(&[&[0, 0], &[1, 0]]));
        assert_eq!(sb.to_matrix(&w.b[0]).unwrap(), Matrix::from_ints(&[&[0, 1], &[0, 0]]));
        assert_eq!(sb.to_matrix(&w.u(0)).unwrap(), Matrix::from_ints(&[&[1, 0], &[0, 0]]));
        assert_eq!(sb.to_matrix(&w.u_dagger(0)).unwrap(), Matrix::from_ints(&[&[0, 0], &[0, 1]]));
        assert_eq!(sb.to_matrix(&w.e(0)).unwrap(), Matrix::from_ints(&[&[0, 1], &[1, 0]]));
        assert_eq!(sb.to_matrix(&Multivector::one(&w.sig)).unwrap(), Matrix::identity(2));
    }

    #[test]
    fn matrix_to_mv_is_the_bordered_expansion() {
        // g = g11·ba + g12·b + g21·a + g22·ab
        let w = make_global_witt(1).unwrap();
        let sb = spectral_basis_nn(1).unwrap();
        let g = [Scalar::ratio(3, 7), Scalar::ratio(-2, 5), Scalar::int(4), Scalar::ratio(1, 9)];
        let m = Matrix::from_rows(vec![vec![g[0].clone(), g[1].clone()], vec![g[2].clone(), g[3].clone()]]).unwrap();
        let expect = &(&(&w.u(0).scale(&g[0]) + &w.b[0].scale(&g[1])) + &w.a[0].scale(&g[2]))
            + &w.u_dagger(0).scale(&g[3]);
        assert_eq!(sb.from_matrix(&m).unwrap(), expect);
        assert!(sb.from_matrix(&Matrix::zeros(2, 2)).unwrap().is_zero());
        assert!(matches!(
            sb.from_matrix(&Matrix::zeros(3, 3)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn n3_and_n4_are_spectral() {
        for n in [3, 4] {
            let sb = spectral_basis_nn(n).unwrap();
            assert_eq!(sb.diagonal_sum(), Multivector::one(sb.signature()));
            assert!(sb.is_gaussian());
            // spot-check the matrix-unit law on the first row and column
            let d = sb.dim();
            for j in 0..d {
                for l in 0..d {
                    let p = sb.unit(0, j) * sb.unit(j, l);
                    assert_eq!(&p, sb.unit(0, l));
                }
                assert!((sb.unit(0, j) * sb.unit((j + 1) % d, 0)).is_zero());
            }
        }
    }
}
