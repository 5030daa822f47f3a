//! Spectral bases (complete sets of matrix units) and the coordinate-matrix
//! isomorphism they induce.
//!
//! A spectral basis is built from a column of row elements, a primitive
//! idempotent, and a row of column elements: `E[i][j] = row[i]·u·col[j]`.
//! Coordinates are extracted with a linear map precomputed once by exact
//! Gauss–Jordan elimination over `Q(j)`.

use std::sync::Arc;

use num::rational::BigRational;
use num::{Complex, One, Zero};

use crate::error::{Error, Result};
use crate::matrix::{Central, Matrix, MvMatrix, Ring};
use crate::multivector::{Blade, Multivector};
use crate::scalar::Scalar;
use crate::signature::Signature;

type Gauss = Complex<BigRational>;

/// Sparse linear functionals, one per coordinate, over blade coefficients.
#[derive(Clone, Debug)]
struct Extractor {
    rows: Vec<Vec<(Blade, Scalar)>>,
}

#[derive(Clone, Debug)]
pub struct SpectralBasis {
    sig: Arc<Signature>,
    dim: usize,
    units: Vec<Multivector>,
    row_elems: Vec<Multivector>,
    col_elems: Vec<Multivector>,
    center: Multivector,
    central_units: Vec<Multivector>,
    row_labels: Vec<String>,
    col_labels: Vec<String>,
    center_label: String,
    extractor: std::result::Result<Extractor, String>,
}

impl SpectralBasis {
    /// Builds `E[i][j] = rows[i]·center·cols[j]`.
    ///
    /// `central_units` spans the coefficient ring of the coordinate matrices:
    /// `[1]` for scalar coordinates, `[1, i]` when a central pseudoscalar
    /// plays the role of the imaginary unit.
    pub fn new(
        rows: Vec<Multivector>,
        center: Multivector,
        cols: Vec<Multivector>,
        central_units: Vec<Multivector>,
    ) -> Result<Self> {
        let dim = rows.len();
        if cols.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: cols.len(),
            });
        }
        let sig = Arc::clone(center.signature());
        let mut units = Vec::with_capacity(dim * dim);
        for r in &rows {
            let left = r.gp(&center)?;
            for c in &cols {
                units.push(left.gp(c)?);
            }
        }
        let extractor = build_extractor(&sig, &units, &central_units)?;
        Ok(Self {
            sig,
            dim,
            units,
            row_labels: (0..dim).map(|i| format!("r_{i}")).collect(),
            col_labels: (0..dim).map(|i| format!("c_{i}")).collect(),
            center_label: "u".into(),
            row_elems: rows,
            col_elems: cols,
            center,
            central_units,
            extractor,
        })
    }

    /// LaTeX labels for the bordering elements and the idempotent.
    pub fn with_labels(mut self, rows: Vec<String>, center: &str, cols: Vec<String>) -> Self {
        assert_eq!(rows.len(), self.dim);
        assert_eq!(cols.len(), self.dim);
        self.row_labels = rows;
        self.col_labels = cols;
        self.center_label = center.to_string();
        self
    }

    pub fn signature(&self) -> &Arc<Signature> {
        &self.sig
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self, i: usize, j: usize) -> &Multivector {
        &self.units[i * self.dim + j]
    }

    pub fn units(&self) -> &[Multivector] {
        &self.units
    }

    pub fn row_elems(&self) -> &[Multivector] {
        &self.row_elems
    }

    pub fn col_elems(&self) -> &[Multivector] {
        &self.col_elems
    }

    pub fn center(&self) -> &Multivector {
        &self.center
    }

    pub fn central_units(&self) -> &[Multivector] {
        &self.central_units
    }

    /// True when every matrix unit has coefficients in `Q(j)`.
    pub fn is_gaussian(&self) -> bool {
        self.units.iter().all(Multivector::is_gaussian)
    }

    /// Index quadruples `(i, j, k, l)` where `E_ij·E_kl ≠ δ_jk·E_il`.
    pub fn matrix_unit_violations(&self) -> Vec<(usize, usize, usize, usize)> {
        let n = self.dim;
        let zero = Multivector::zero(&self.sig);
        let mut bad = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let prod = self.unit(i, j) * self.unit(k, l);
                        let want = if j == k { self.unit(i, l) } else { &zero };
                        if &prod != want {
                            bad.push((i, j, k, l));
                        }
                    }
                }
            }
        }
        bad
    }

    /// `Σ E_ii`, which is `1` for a complete set of matrix units.
    pub fn diagonal_sum(&self) -> Multivector {
        (0..self.dim).fold(Multivector::zero(&self.sig), |acc, i| &acc + self.unit(i, i))
    }

    fn extractor(&self) -> Result<&Extractor> {
        self.extractor
            .as_ref()
            .map_err(|why| Error::ExtractorUnavailable(why.clone()))
    }

    fn check_sig(&self, g: &Multivector) -> Result<()> {
        if g.signature().as_ref() != self.sig.as_ref() {
            return Err(Error::SignatureMismatch {
                left: self.sig.to_string(),
                right: g.signature().to_string(),
            });
        }
        Ok(())
    }

    fn coordinates(&self, g: &Multivector) -> Result<Vec<Scalar>> {
        self.check_sig(g)?;
        let ex = self.extractor()?;
        Ok(ex
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|(mask, c)| c * &g.coeff(*mask))
                    .sum::<Scalar>()
            })
            .collect())
    }

    /// Coordinate matrix `[g]` with `g = Σ g_ij E_ij`.
    pub fn to_matrix(&self, g: &Multivector) -> Result<MvMatrix> {
        if self.central_units.len() != 1 {
            return Err(Error::Unsupported(
                "coordinates of this basis carry a central unit; use to_central_matrix".into(),
            ));
        }
        let coords = self.coordinates(g)?;
        Ok(Matrix::from_fn(self.dim, self.dim, |i, j| coords[i * self.dim + j].clone()))
    }

    /// `Σ M_ij E_ij`.
    pub fn from_matrix(&self, m: &MvMatrix) -> Result<Multivector> {
        self.check_shape(m.rows(), m.cols())?;
        let mut acc = Multivector::zero(&self.sig);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let c = m.get(i, j);
                if !c.is_zero() {
                    acc = &acc + &self.unit(i, j).scale(c);
                }
            }
        }
        Ok(acc)
    }

    /// Coordinate matrix over `span{1, i}` for a two-element central basis.
    pub fn to_central_matrix(&self, g: &Multivector) -> Result<Matrix<Central>> {
        if self.central_units.len() != 2 {
            return Err(Error::Unsupported("basis has no central imaginary unit".into()));
        }
        let coords = self.coordinates(g)?;
        Ok(Matrix::from_fn(self.dim, self.dim, |i, j| {
            let k = 2 * (i * self.dim + j);
            Central::new(coords[k].clone(), coords[k + 1].clone())
        }))
    }

    pub fn from_central_matrix(&self, m: &Matrix<Central>) -> Result<Multivector> {
        self.check_shape(m.rows(), m.cols())?;
        if self.central_units.len() != 2 {
            return Err(Error::Unsupported("basis has no central imaginary unit".into()));
        }
        let i_unit = &self.central_units[1];
        let mut acc = Multivector::zero(&self.sig);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let c = m.get(i, j);
                if Ring::is_zero(c) {
                    continue;
                }
                let coeff = &Multivector::scalar(&self.sig, c.re.clone()) + &i_unit.scale(&c.vol);
                acc = &acc + &(&coeff * self.unit(i, j));
            }
        }
        Ok(acc)
    }

    fn check_shape(&self, rows: usize, cols: usize) -> Result<()> {
        if rows != self.dim || cols != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: if rows != self.dim { rows } else { cols },
            });
        }
        Ok(())
    }

    /// The bordered product and the resulting array, as a LaTeX equation.
    pub fn to_latex(&self) -> String {
        let col = self.row_labels.join(" \\\\ ");
        let row = self.col_labels.join(" & ");
        let mut body = Vec::new();
        for i in 0..self.dim {
            let cells: Vec<String> = (0..self.dim).map(|j| self.unit(i, j).to_latex()).collect();
            body.push(cells.join(" & "));
        }
        format!(
            "\\begin{{pmatrix}} {col} \\end{{pmatrix}} {} \\begin{{pmatrix}} {row} \\end{{pmatrix}}\n= \\begin{{pmatrix}}\n{}\n\\end{{pmatrix}}\n",
            self.center_label,
            body.join(" \\\\\n")
        )
    }
}

fn to_gauss(s: &Scalar) -> Option<Gauss> {
    s.to_gaussian().map(|(re, im)| Complex::new(re, im))
}

fn from_gauss(z: &Gauss) -> Scalar {
    Scalar::from_gaussian(z.re.clone(), z.im.clone())
}

fn build_extractor(
    sig: &Arc<Signature>,
    units: &[Multivector],
    central: &[Multivector],
) -> Result<std::result::Result<Extractor, String>> {
    let n = sig.blade_count();
    let mut columns = Vec::with_capacity(units.len() * central.len());
    for u in units {
        for c in central {
            columns.push(u.gp(c)?);
        }
    }
    if columns.len() != n {
        return Err(Error::NotABasis(format!(
            "{} spanning elements for an algebra of dimension {n}",
            columns.len()
        )));
    }
    if let Some(bad) = columns.iter().find(|c| !c.is_gaussian()) {
        return Ok(Err(format!("matrix unit {bad} has radical coefficients")));
    }
    // augmented [M | I], M[blade][column]
    let mut a: Vec<Vec<Gauss>> = vec![vec![Gauss::zero(); 2 * n]; n];
    for (col, mv) in columns.iter().enumerate() {
        for (mask, s) in mv.terms() {
            a[mask as usize][col] = to_gauss(s).expect("checked gaussian");
        }
    }
    for (i, row) in a.iter_mut().enumerate() {
        row[n + i] = Gauss::one();
    }
    for c in 0..n {
        let p = (c..n)
            .find(|&r| !a[r][c].is_zero())
            .ok_or_else(|| Error::NotABasis(format!("matrix units are linearly dependent (column {c})")))?;
        a.swap(c, p);
        let inv = Gauss::one() / a[c][c].clone();
        let nz: Vec<usize> = (c..2 * n).filter(|&k| !a[c][k].is_zero()).collect();
        for &k in &nz {
            a[c][k] = &a[c][k] * &inv;
        }
        let pivot = a[c].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == c || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for &k in &nz {
                row[k] = &row[k] - &factor * &pivot[k];
            }
        }
    }
    let rows = a
        .iter()
        .map(|row| {
            row[n..]
                .iter()
                .enumerate()
                .filter(|(_, z)| !z.is_zero())
                .map(|(mask, z)| (mask as Blade, from_gauss(z)))
                .collect()
        })
        .collect();
    Ok(Ok(Extractor { rows }))
}

/// Coordinate matrix of `g` in `sb`.
pub fn mv_to_matrix(g: &Multivector, sb: &SpectralBasis) -> Result<MvMatrix> {
    sb.to_matrix(g)
}

/// The multivector with coordinate matrix `m` in `sb`.
pub fn matrix_to_mv(m: &MvMatrix, sb: &SpectralBasis) -> Result<Multivector> {
    sb.from_matrix(m)
}
