//! Locally dual nilpotent sets: `m` null vectors `c_i` with
//! `c_i c_j + c_j c_i = 1` for every distinct pair. They form a Witt basis of
//! the Lorentz algebra `G(1, m-1)`.

use std::sync::Arc;

use num::rational::BigRational;
use num::{BigInt, Signed};
use serde_json::{json, Value};

use crate::error::{check_range, Error, Result};
use crate::matrix::{bareiss_det, MvMatrix};
use crate::multivector::Multivector;
use crate::omega::{omega, Variant};
use crate::report::VerifyReport;
use crate::scalar::{Part, Scalar};
use crate::signature::Signature;
use crate::witt_global::GlobalWitt;

#[derive(Clone, Debug)]
pub struct LocalWitt {
    pub m: usize,
    pub c: Vec<Multivector>,
    /// Coefficients may carry the scalar imaginary `j`.
    pub complexified: bool,
    pub sig: Arc<Signature>,
}

impl LocalWitt {
    /// `C_k = c_1 + … + c_k`.
    pub fn partial_sum(&self, k: usize) -> Multivector {
        self.c[..k]
            .iter()
            .fold(Multivector::zero(&self.sig), |acc, c| &acc + c)
    }

    pub fn top_wedge(&self) -> Multivector {
        Multivector::wedge_all(&self.sig, &self.c).expect("same signature")
    }

    pub fn complexify(mut self) -> Self {
        self.complexified = true;
        self
    }
}

/// `α_k = -√2 / √(k(k-1))`.
pub fn alpha(k: usize) -> Scalar {
    assert!(k >= 2, "α_k is defined for k ≥ 2");
    -Scalar::sqrt_ratio(2, (k * (k - 1)) as u64)
}

/// Builds `c_1 … c_m` inside `G(1, m-1)` by inverting the frame formulas:
/// `c_1 = (e_1 + f_1)/2`, `c_2 = (e_1 - f_1)/2` and
/// `c_{k+1} = (C_k - f_k/α_k)/(k-1)`.
pub fn make_local_witt(m: usize) -> Result<LocalWitt> {
    check_range("m", m, 2, 8, "2..=8")?;
    let n = m - 1;
    let sig = Signature::g_1n(n).into_arc();
    let half = Scalar::ratio(1, 2);
    let e1 = Multivector::generator(&sig, 0);
    let f1 = Multivector::generator(&sig, 1);
    let mut c = vec![(&e1 + &f1).scale(&half), (&e1 - &f1).scale(&half)];
    let mut partial = &c[0] + &c[1];
    for k in 2..=n {
        let fk = Multivector::generator(&sig, k);
        let inv_alpha = alpha(k).inv()?;
        let next = (&partial - &fk.scale(&inv_alpha)).scale(&Scalar::ratio(1, (k - 1) as i64));
        partial = &partial + &next;
        c.push(next);
    }
    Ok(LocalWitt {
        m,
        c,
        complexified: false,
        sig,
    })
}

/// `(e_1, f_1, …, f_n)` from the nilpotents: `e_1 = c_1 + c_2`,
/// `f_1 = c_1 - c_2`, `f_k = α_k (C_k - (k-1) c_{k+1})`.
pub fn ef_from_c(w: &LocalWitt) -> Vec<Multivector> {
    let mut out = vec![&w.c[0] + &w.c[1], &w.c[0] - &w.c[1]];
    for k in 2..w.m {
        let inner = &w.partial_sum(k) - &w.c[k].scale(&Scalar::int((k - 1) as i64));
        out.push(inner.scale(&alpha(k)));
    }
    out
}

/// Nilpotency, local duality, nonzero top wedge, and the Lorentz frame
/// relations of the derived `(e_1, f_1, …)`.
pub fn check_local_duality(w: &LocalWitt) -> VerifyReport {
    let m = w.m;
    let mut rep = VerifyReport::new(format!("local-duality-m{m}"));
    let one = Multivector::one(&w.sig);
    let zero = Multivector::zero(&w.sig);
    let nil_bad: Vec<usize> = (0..m).filter(|&i| !(&w.c[i] * &w.c[i]).is_zero()).map(|i| i + 1).collect();
    rep.check(
        format!("m{m}.nilpotent"),
        "c_i^2 = 0",
        nil_bad.is_empty(),
        format!("non-null: {nil_bad:?}"),
    );
    let mut dual_bad = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            if w.c[i].anticommutator(&w.c[j]).expect("same signature") != one {
                dual_bad.push((i + 1, j + 1));
            }
        }
    }
    rep.check(
        format!("m{m}.local-duality"),
        "c_i c_j + c_j c_i = 1 for i ≠ j",
        dual_bad.is_empty(),
        format!("failing pairs: {dual_bad:?}"),
    );
    let top = w.top_wedge();
    rep.check(
        format!("m{m}.top-wedge"),
        "c_1 ∧ … ∧ c_m ≠ 0",
        !top.is_zero() && top.grades() == vec![m],
        format!("top wedge = {top}"),
    );
    let frame = ef_from_c(w);
    let mut frame_bad = Vec::new();
    for (i, x) in frame.iter().enumerate() {
        let want = if i == 0 { one.clone() } else { -&one };
        if x * x != want {
            frame_bad.push(format!("square of generator {i}"));
        }
        for (j, y) in frame.iter().enumerate().skip(i + 1) {
            if x.anticommutator(y).expect("same signature") != zero {
                frame_bad.push(format!("pair ({i},{j})"));
            }
        }
    }
    rep.check(
        format!("m{m}.lorentz-frame"),
        "e_1^2 = 1, f_k^2 = -1, distinct frame vectors anticommute",
        frame_bad.is_empty(),
        frame_bad.join(", "),
    );
    let round_trip = frame
        .iter()
        .enumerate()
        .all(|(i, x)| *x == Multivector::generator(&w.sig, i));
    rep.check(
        format!("m{m}.round-trip"),
        "frame recovered from the nilpotents equals the generators",
        round_trip,
        String::new(),
    );
    rep
}

/// A linear change of frame, `target_r = (1/scale_r)·Σ_s signs[r][s]·source_s`.
#[derive(Clone, Debug)]
pub struct FrameMap {
    pub scales: Vec<Scalar>,
    pub signs: MvMatrix,
    pub source_labels: Vec<String>,
    pub target_labels: Vec<String>,
    pub sources: Vec<Multivector>,
    pub rows: Vec<Multivector>,
}

impl FrameMap {
    pub fn new(
        scales: Vec<Scalar>,
        signs: MvMatrix,
        sources: Vec<Multivector>,
        source_labels: Vec<String>,
        target_labels: Vec<String>,
    ) -> Result<Self> {
        let n = sources.len();
        if signs.rows() != scales.len() || signs.cols() != n || target_labels.len() != scales.len() {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: signs.cols(),
            });
        }
        let sig = Arc::clone(sources[0].signature());
        let rows = (0..signs.rows())
            .map(|r| {
                let combo = Self::combination(&sig, signs.row(r), &sources);
                Ok(combo.scale(&scales[r].inv()?))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            scales,
            signs,
            source_labels,
            target_labels,
            sources,
            rows,
        })
    }

    fn combination(sig: &Arc<Signature>, coeffs: &[Scalar], sources: &[Multivector]) -> Multivector {
        coeffs
            .iter()
            .zip(sources)
            .fold(Multivector::zero(sig), |acc, (s, c)| &acc + &c.scale(s))
    }

    /// `scale_r·target_r = Σ_s signs[r][s]·source_s` for every row.
    pub fn holds(&self) -> bool {
        let sig = self.sources[0].signature();
        (0..self.rows.len()).all(|r| {
            self.rows[r].scale(&self.scales[r]) == Self::combination(sig, self.signs.row(r), &self.sources)
        })
    }

    /// Squares of the targets, when scalar.
    pub fn squares(&self) -> Vec<Option<Scalar>> {
        self.rows.iter().map(|r| (r * r).as_scalar()).collect()
    }

    pub fn pairwise_anticommute(&self) -> bool {
        (0..self.rows.len()).all(|i| {
            (i + 1..self.rows.len())
                .all(|j| self.rows[i].anticommutator(&self.rows[j]).expect("same signature").is_zero())
        })
    }

    /// `(p, q)` when the targets form an orthonormal frame.
    pub fn frame_signature(&self) -> Option<(usize, usize)> {
        if !self.pairwise_anticommute() {
            return None;
        }
        let (mut p, mut q) = (0, 0);
        for s in self.squares() {
            match s {
                Some(s) if s.is_one() => p += 1,
                Some(s) if (-&s).is_one() => q += 1,
                _ => return None,
            }
        }
        Some((p, q))
    }

    /// `(Π scale_r)·target_1⋯target_n` and `det(signs)·source_1 ∧ … ∧ source_n`.
    /// For an orthogonal target frame the two agree.
    pub fn pseudoscalar_sides(&self) -> Result<(Multivector, Multivector)> {
        let sig = self.sources[0].signature();
        let ints = self
            .signs
            .to_integers()
            .ok_or_else(|| Error::Unsupported("determinant needs integer signs".into()))?;
        let det = bareiss_det(&ints)?;
        let scale = self.scales.iter().fold(Scalar::one(), |acc, s| &acc * s);
        let lhs = Multivector::product(sig, &self.rows)?.scale(&scale);
        let det = Scalar::from_rational(BigRational::from_integer(det));
        let rhs = Multivector::wedge_all(sig, &self.sources)?.scale(&det);
        Ok((lhs, rhs))
    }

    pub fn to_json(&self) -> Value {
        let signs: Vec<Vec<Value>> = self
            .signs
            .iter_rows()
            .map(|r| r.iter().map(Scalar::to_json).collect())
            .collect();
        let rows: Vec<Value> = self
            .rows
            .iter()
            .zip(&self.target_labels)
            .map(|(r, l)| json!({"label": l, "multivector": r.to_json()}))
            .collect();
        json!({
            "scales": self.scales.iter().map(Scalar::to_json).collect::<Vec<_>>(),
            "signs": signs,
            "rows": rows,
            "sources": self.source_labels,
        })
    }
}

fn labels(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

/// Scales that normalise the rows of an `N×N` Ω applied to `N` local
/// nilpotents: `√(N(N-1)/2)` for the all-ones row, `√(N/2)` otherwise.
fn hadamard_scales(n: usize) -> Vec<Scalar> {
    let mut s = vec![Scalar::sqrt((n * (n - 1) / 2) as u64)];
    s.extend(std::iter::repeat(Scalar::sqrt((n / 2) as u64)).take(n - 1));
    s
}

/// The `2^k`-point identification `scale·(e_1, f_1, …) = Ω_{2^k}·(c_1, …)`.
pub fn hadamard_identification(k: usize) -> Result<FrameMap> {
    if !(2..=3).contains(&k) {
        return Err(Error::Unsupported(format!(
            "Hadamard identification is implemented for k = 2, 3 (requested {k})"
        )));
    }
    let n = 1usize << k;
    let w = make_local_witt(n)?;
    let mut targets = vec!["e1".to_string()];
    targets.extend(labels("f", n - 1));
    FrameMap::new(
        hadamard_scales(n),
        omega(k, Variant::Plain)?.entries,
        w.c,
        labels("c", n),
        targets,
    )
}

/// Outcome of the exhaustive search for a Hadamard-style `G(1,2)` frame.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct G12Search {
    pub sign_matrices: usize,
    pub radicand_choices: usize,
    pub combinations: usize,
    /// Row candidates `(signs, d)` admitting a positive rational `λ` with
    /// `(Σ s·c / (λ√d))² = +1`.
    pub timelike_rows: usize,
    /// Same, with square `-1`.
    pub spacelike_rows: usize,
    pub frames_found: usize,
}

pub const G12_RADICANDS: [u64; 4] = [1, 2, 3, 6];

fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| BigRational::new(n, d))
}

#[derive(Clone)]
struct RowCandidate {
    square: i8,
    vector: Multivector,
}

/// Normalises `v` by `λ√d` when some positive rational `λ` makes its square ±1.
fn normalise(v: &Multivector, d: u64) -> Option<RowCandidate> {
    let sq = (v * v).as_scalar()?.to_rational()?;
    let d_q = BigRational::from_integer(BigInt::from(d));
    for square in [1i8, -1] {
        let lambda_sq = &sq / (&d_q * BigInt::from(square));
        if let Some(lambda) = rational_sqrt(&lambda_sq).filter(|l| l.is_positive()) {
            let scale = Scalar::monomial(lambda, d, Part::Real).inv().ok()?;
            return Some(RowCandidate {
                square,
                vector: v.scale(&scale),
            });
        }
    }
    None
}

/// Searches every 3×3 sign matrix with ±1 entries and every per-row
/// scaling `λ_r√d_r` (`d_r ∈ {1,2,3,6}`, `λ_r > 0` rational) for a map
/// taking three local nilpotents to an orthonormal `G(1,2)` frame.
pub fn no_identification_g12() -> G12Search {
    let w = make_local_witt(3).expect("m = 3 in range");
    let sign_rows: Vec<[i64; 3]> = (0..8)
        .map(|b| [0, 1, 2].map(|i| if b & (1 << i) == 0 { 1 } else { -1 }))
        .collect();
    // candidate table indexed by (sign row, radicand)
    let mut table: Vec<Vec<Option<RowCandidate>>> = Vec::new();
    for s in &sign_rows {
        let coeffs: Vec<Scalar> = s.iter().map(|x| Scalar::int(*x)).collect();
        let v = FrameMap::combination(&w.sig, &coeffs, &w.c);
        table.push(G12_RADICANDS.iter().map(|d| normalise(&v, *d)).collect());
    }
    let flat: Vec<&RowCandidate> = table.iter().flatten().flatten().collect();
    let timelike_rows = flat.iter().filter(|c| c.square == 1).count();
    let spacelike_rows = flat.len() - timelike_rows;

    let anticommutes = |a: &RowCandidate, b: &RowCandidate| {
        a.vector.anticommutator(&b.vector).expect("same signature").is_zero()
    };
    let mut combinations = 0;
    let mut frames_found = 0;
    let nd = G12_RADICANDS.len();
    for matrix in 0..sign_rows.len().pow(3) {
        let rows = [matrix % 8, (matrix / 8) % 8, matrix / 64];
        for radicands in 0..nd.pow(3) {
            let ds = [radicands % nd, (radicands / nd) % nd, radicands / (nd * nd)];
            combinations += 1;
            let picked: Option<Vec<&RowCandidate>> =
                (0..3).map(|r| table[rows[r]][ds[r]].as_ref()).collect();
            let Some(picked) = picked else { continue };
            let plus = picked.iter().filter(|c| c.square == 1).count();
            if plus != 1 {
                continue;
            }
            if anticommutes(picked[0], picked[1])
                && anticommutes(picked[0], picked[2])
                && anticommutes(picked[1], picked[2])
            {
                frames_found += 1;
            }
        }
    }
    G12Search {
        sign_matrices: sign_rows.len().pow(3),
        radicand_choices: nd.pow(3),
        combinations,
        timelike_rows,
        spacelike_rows,
        frames_found,
    }
}

/// The complexified 4-point identification
/// `(√6 e_1, √2 j f_1, √2 f_2, √2 f_3) = Ω_{4j}·(c_1, …, c_4)`, whose real
/// frame `(e_1, jf_1, f_2, f_3)` has signature (2,2).
pub fn complex_identification_g22() -> Result<FrameMap> {
    let w = make_local_witt(4)?.complexify();
    FrameMap::new(
        hadamard_scales(4),
        omega(2, Variant::ComplexPlain)?.entries,
        w.c,
        labels("c", 4),
        vec!["e1".into(), "jf1".into(), "f2".into(), "f3".into()],
    )
}

/// One line of the complexified `m = 8` table.
#[derive(Clone, Debug)]
pub struct C8Entry {
    pub label: &'static str,
    /// The same vector written in the dual pairs `a_i ± b_i` of `G(4,4)`.
    pub witt_label: &'static str,
    /// Value from the frame formulas.
    pub value: Multivector,
    /// Value as typeset in the published bullet list.
    pub printed: Multivector,
    pub printed_text: &'static str,
    pub matches_printed: bool,
    /// Frame-formula coefficient of the trailing nilpotent, when the
    /// printed one differs.
    pub correction: Option<String>,
}

struct Printed {
    label: &'static str,
    witt_label: &'static str,
    text: &'static str,
    imaginary: bool,
    partial: Scalar,
    last: Scalar,
}

fn printed_c8() -> Vec<Printed> {
    let s = Scalar::sqrt;
    let inv = |x: Scalar| x.inv().expect("monomial");
    let p = |label, witt_label, text, imaginary, partial, last| Printed {
        label,
        witt_label,
        text,
        imaginary,
        partial,
        last,
    };
    vec![
        p("e1", "a_1 + b_1", "c_1 + c_2", false, Scalar::one(), Scalar::zero()),
        p("f1", "a_1 - b_1", "c_1 - c_2", false, Scalar::zero(), Scalar::zero()),
        p("f2", "a_2 - b_2", "-C_2 + c_3", false, Scalar::int(-1), Scalar::one()),
        p("jf3", "a_2 + b_2", "-(j/√3) C_3 + (2j/√3) c_4", true, -inv(s(3)), Scalar::int(2) * inv(s(3))),
        p("f4", "a_3 - b_3", "-(1/√6) C_4 + (√3/2) c_5", false, -inv(s(6)), s(3) * Scalar::ratio(1, 2)),
        p("jf5", "a_3 + b_3", "-(j/√10) C_5 + 2j(√2/√5) c_6", true, -inv(s(10)), Scalar::int(2) * s(2) * inv(s(5))),
        p("f6", "a_4 - b_4", "-(1/√15) C_6 + (√5/√3) c_7", false, -inv(s(15)), s(5) * inv(s(3))),
        p("jf7", "a_4 + b_4", "-(j/√21) C_7 + 2j(√3/√7) c_8", true, -inv(s(21)), Scalar::int(2) * s(3) * inv(s(7))),
    ]
}

/// The eight frame vectors of complexified `G(1,7)` as combinations of the
/// local nilpotents, each compared with its printed radical form.
pub fn c8_complex_table() -> Vec<C8Entry> {
    let w = make_local_witt(8).expect("m = 8 in range").complexify();
    let frame = ef_from_c(&w);
    let j = Scalar::j();
    printed_c8()
        .into_iter()
        .enumerate()
        .map(|(k, p)| {
            let value = if p.imaginary { frame[k].scale(&j) } else { frame[k].clone() };
            let printed = match k {
                0 => &w.c[0] + &w.c[1],
                1 => &w.c[0] - &w.c[1],
                _ => {
                    let factor = if p.imaginary { j.clone() } else { Scalar::one() };
                    &w.partial_sum(k).scale(&(&p.partial * &factor)) + &w.c[k].scale(&(&p.last * &factor))
                }
            };
            let matches_printed = value == printed;
            let correction = (!matches_printed && k >= 2).then(|| {
                // coefficient of c_{k+1} in f_k is -(k-1)·α_k
                let coeff = &alpha(k) * &Scalar::int(-((k - 1) as i64));
                format!("coefficient of c_{} is {} (printed {})", k + 1, coeff, p.last)
            });
            C8Entry {
                label: p.label,
                witt_label: p.witt_label,
                value,
                printed,
                printed_text: p.text,
                matches_printed,
                correction,
            }
        })
        .collect()
}

/// The four dual pairs `a_i = (E_i + F_i)/2`, `b_i = (E_i - F_i)/2` built
/// from the table rows `(e1, f1), (jf3, f2), (jf5, f4), (jf7, f6)`.
pub fn c8_witt_pairs() -> GlobalWitt {
    let t = c8_complex_table();
    let half = Scalar::ratio(1, 2);
    let pairs = [(0, 1), (3, 2), (5, 4), (7, 6)];
    let a = pairs
        .iter()
        .map(|(e, f)| (&t[*e].value + &t[*f].value).scale(&half))
        .collect();
    let b = pairs
        .iter()
        .map(|(e, f)| (&t[*e].value - &t[*f].value).scale(&half))
        .collect();
    GlobalWitt {
        n: 4,
        a,
        b,
        sig: Arc::clone(t[0].value.signature()),
    }
}

/// Renders the table as aligned text lines.
pub fn c8_table_text(entries: &[C8Entry]) -> String {
    let mut out = String::new();
    for e in entries {
        let mark = if e.matches_printed { "" } else { "   <- differs from printed" };
        out.push_str(&format!("{:<4} = {:<10} = {}{mark}\n", e.label, e.witt_label, e.printed_text));
        if let Some(c) = &e.correction {
            out.push_str(&format!("{:<19}   {c}\n", ""));
        }
    }
    out
}
