//! Pauli matrices from `G(1,1) ⊂ G(3)`, and two complex 4×4 matrix
//! representations of the Dirac algebra `G(1,3)`.
//!
//! Two different imaginaries appear here and are kept apart: the scalar `j`
//! (an IMAG coefficient, commuting with everything) and the pseudoscalar
//! blade `i`. In `G(3)` the pseudoscalar is central and plays the role of
//! the imaginary unit of the Pauli matrices; in `G(1,3)` it anticommutes
//! with vectors, so the Dirac matrices need `j`.

use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::error::Result;
use crate::matrix::{Central, Matrix, MvMatrix};
use crate::multivector::Multivector;
use crate::report::{Status, VerifyReport};
use crate::scalar::Scalar;
use crate::signature::Signature;
use crate::spectral::SpectralBasis;
use crate::witt_global::{check_global_duality, spectral_basis_from_witt, GlobalWitt};

/// Named 2×2 blocks used to describe 4×4 matrices.
pub mod blocks {
    use crate::matrix::{Matrix, MvMatrix};
    use crate::scalar::Scalar;

    pub fn zero() -> MvMatrix {
        Matrix::zeros(2, 2)
    }
    pub fn one() -> MvMatrix {
        Matrix::identity(2)
    }
    /// `[e_1]_2`
    pub fn e1() -> MvMatrix {
        Matrix::from_ints(&[&[0, 1], &[1, 0]])
    }
    /// `[f_1]_2`
    pub fn f1() -> MvMatrix {
        Matrix::from_ints(&[&[0, -1], &[1, 0]])
    }
    /// `[e_3]_2`
    pub fn e3() -> MvMatrix {
        Matrix::from_ints(&[&[1, 0], &[0, -1]])
    }
    /// `[a_1]_2`
    pub fn a1() -> MvMatrix {
        Matrix::from_ints(&[&[0, 0], &[1, 0]])
    }
    /// `[b_1]_2`
    pub fn b1() -> MvMatrix {
        Matrix::from_ints(&[&[0, 1], &[0, 0]])
    }

    pub fn grid(tl: &MvMatrix, tr: &MvMatrix, bl: &MvMatrix, br: &MvMatrix) -> MvMatrix {
        Matrix::from_blocks(tl, tr, bl, br)
    }

    pub fn diag(tl: &MvMatrix, br: &MvMatrix) -> MvMatrix {
        grid(tl, &zero(), &zero(), br)
    }

    pub fn off(tr: &MvMatrix, bl: &MvMatrix) -> MvMatrix {
        grid(&zero(), tr, bl, &zero())
    }

    pub fn named() -> Vec<(&'static str, MvMatrix)> {
        vec![
            ("[1]_2", one()),
            ("[e_1]_2", e1()),
            ("[f_1]_2", f1()),
            ("[e_3]_2", e3()),
            ("[a_1]_2", a1()),
            ("[b_1]_2", b1()),
        ]
    }

    pub fn unit_multiples() -> Vec<(&'static str, Scalar)> {
        vec![
            ("", Scalar::one()),
            ("-", Scalar::int(-1)),
            ("j", Scalar::j()),
            ("-j", -Scalar::j()),
        ]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Representation {
    Standard,
    New,
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Representation::Standard => "standard",
            Representation::New => "new",
        })
    }
}

/// Spacetime frame `γ_0 … γ_3` of `G(1,3)` with its pseudoscalar and the
/// relative vectors `e_k = γ_k γ_0` of the `γ_0` rest frame.
#[derive(Clone, Debug)]
pub struct DiracFrame {
    pub sig: Arc<Signature>,
    pub gammas: [Multivector; 4],
    pub pseudoscalar: Multivector,
    pub rest_frame: [Multivector; 3],
}

impl Default for DiracFrame {
    fn default() -> Self {
        Self::new()
    }
}

impl DiracFrame {
    pub fn new() -> Self {
        let sig = Signature::g13().into_arc();
        let gammas: [Multivector; 4] = std::array::from_fn(|mu| Multivector::generator(&sig, mu));
        let pseudoscalar = Multivector::product(&sig, &gammas).expect("same signature");
        let rest_frame = std::array::from_fn(|k| &gammas[k + 1] * &gammas[0]);
        Self {
            sig,
            gammas,
            pseudoscalar,
            rest_frame,
        }
    }

    /// `e_k` for `k = 1, 2, 3`.
    pub fn e(&self, k: usize) -> &Multivector {
        &self.rest_frame[k - 1]
    }

    /// `γ_μ γ_ν`.
    pub fn gamma2(&self, mu: usize, nu: usize) -> Multivector {
        &self.gammas[mu] * &self.gammas[nu]
    }

    pub fn eta(mu: usize, nu: usize) -> i64 {
        match (mu, nu) {
            (0, 0) => 1,
            (a, b) if a == b => -1,
            _ => 0,
        }
    }

    pub fn check(&self) -> VerifyReport {
        let mut rep = VerifyReport::new("dirac-frame");
        let one = Multivector::one(&self.sig);
        let i = &self.pseudoscalar;
        let anti = (0..4).all(|mu| i.anticommutator(&self.gammas[mu]).expect("same signature").is_zero());
        rep.check(
            "dirac.frame.i-anticommutes",
            "γ_0123 anticommutes with every γ_μ",
            anti,
            String::new(),
        );
        rep.check(
            "dirac.frame.i-square",
            "γ_0123^2 = -1",
            (i * i) == -&one,
            String::new(),
        );
        let e123 = Multivector::product(&self.sig, &self.rest_frame).expect("same signature");
        rep.check(
            "dirac.frame.e123",
            "e_1 e_2 e_3 = γ_0123",
            &e123 == i,
            format!("e_1 e_2 e_3 = {e123}"),
        );
        rep.check(
            "dirac.frame.gamma12",
            "γ_12 = e_21",
            self.gamma2(1, 2) == self.e(2) * self.e(1),
            String::new(),
        );
        rep.check(
            "dirac.frame.gamma31",
            "γ_31 = e_13",
            self.gamma2(3, 1) == self.e(1) * self.e(3),
            String::new(),
        );
        let j = Multivector::scalar(&self.sig, Scalar::j());
        let central = (0..self.sig.blade_count() as u32).all(|mask| {
            let b = Multivector::blade(&self.sig, mask, Scalar::one());
            &j * &b == &b * &j
        });
        rep.check(
            "dirac.frame.j-central",
            "the scalar j commutes with every blade",
            central,
            String::new(),
        );
        rep
    }
}

/// The four primitive idempotents `u_{±±} = ¼(1 ± γ_0)(1 ± jγ_12)`.
#[derive(Clone, Debug)]
pub struct DiracIdempotents {
    pub u_pp: Multivector,
    pub u_pm: Multivector,
    pub u_mp: Multivector,
    pub u_mm: Multivector,
}

fn idempotent(frame: &DiracFrame, s0: i64, s12: i64, gamma_first: bool) -> Multivector {
    let one = Multivector::one(&frame.sig);
    let a = &one + &frame.gammas[0].scale(&Scalar::int(s0));
    let b = &one + &frame.gamma2(1, 2).scale(&(&Scalar::j() * &Scalar::int(s12)));
    let p = if gamma_first { &a * &b } else { &b * &a };
    p.scale(&Scalar::ratio(1, 4))
}

pub fn dirac_idempotents() -> DiracIdempotents {
    let frame = DiracFrame::new();
    DiracIdempotents {
        u_pp: idempotent(&frame, 1, 1, true),
        u_pm: idempotent(&frame, 1, -1, true),
        u_mp: idempotent(&frame, -1, 1, true),
        u_mm: idempotent(&frame, -1, -1, true),
    }
}

impl DiracIdempotents {
    pub fn all(&self) -> [(&'static str, &Multivector); 4] {
        [
            ("++", &self.u_pp),
            ("+-", &self.u_pm),
            ("-+", &self.u_mp),
            ("--", &self.u_mm),
        ]
    }

    /// Idempotency, both factor orders, mutual annihilation, partition of
    /// unity, and the intertwining relations with `e_13`, `e_3`, `e_1`.
    pub fn check(&self, frame: &DiracFrame) -> VerifyReport {
        let mut rep = VerifyReport::new("dirac-idempotents");
        let one = Multivector::one(&frame.sig);
        let signs = [(1, 1), (1, -1), (-1, 1), (-1, -1)];
        for ((name, u), (s0, s12)) in self.all().into_iter().zip(signs) {
            rep.check(
                format!("dirac.idem.u{name}.square"),
                format!("u_{{{name}}}^2 = u_{{{name}}}"),
                &(u * u) == u,
                String::new(),
            );
            rep.check(
                format!("dirac.idem.u{name}.order"),
                format!("¼(1±γ_0)(1±jγ_12) = ¼(1±jγ_12)(1±γ_0) for u_{{{name}}}"),
                idempotent(frame, s0, s12, false) == *u,
                String::new(),
            );
            rep.check(
                format!("dirac.idem.u{name}.imag"),
                format!("u_{{{name}}} carries j coefficients"),
                u.terms().any(|(_, c)| c.to_rational().is_none()),
                String::new(),
            );
        }
        let mut bad = Vec::new();
        let mut pairs = 0;
        for (na, a) in self.all() {
            for (nb, b) in self.all() {
                if na != nb {
                    pairs += 1;
                    if !(a * b).is_zero() {
                        bad.push(format!("u{na}·u{nb}"));
                    }
                }
            }
        }
        rep.check(
            "dirac.idem.annihilate",
            "the product of any two distinct idempotents is 0",
            bad.is_empty() && pairs == 12,
            format!("{pairs} ordered pairs; nonzero: {bad:?}"),
        );
        let sum = self.all().iter().fold(Multivector::zero(&frame.sig), |acc, (_, u)| &acc + *u);
        rep.check(
            "dirac.idem.partition",
            "u_{++} + u_{+-} + u_{-+} + u_{--} = 1",
            sum == one,
            format!("sum = {sum}"),
        );
        let e13 = frame.e(1) * frame.e(3);
        for (id, lhs, rhs, text) in [
            ("e13", &e13 * &self.u_pp, &self.u_pm * &e13, "e_13 u_{++} = u_{+-} e_13"),
            ("e3", frame.e(3) * &self.u_pp, &self.u_mp * frame.e(3), "e_3 u_{++} = u_{-+} e_3"),
            ("e1", frame.e(1) * &self.u_pp, &self.u_mm * frame.e(1), "e_1 u_{++} = u_{--} e_1"),
        ] {
            rep.check(format!("dirac.idem.intertwine.{id}"), text, lhs == rhs, String::new());
        }
        rep
    }
}

/// A matrix representation of `G(1,3)`.
#[derive(Clone, Debug)]
pub struct DiracMatrices {
    pub representation: Representation,
    pub frame: DiracFrame,
    pub basis: SpectralBasis,
    /// `[γ_0] … [γ_3]`.
    pub gammas: Vec<MvMatrix>,
    /// Further displays: `[e_k]_4`, `[e_123]_4`, `[a_i]_4`, `[b_i]_4`.
    pub extras: Vec<(String, MvMatrix)>,
}

impl DiracMatrices {
    pub fn matrix_of(&self, g: &Multivector) -> Result<MvMatrix> {
        self.basis.to_matrix(g)
    }

    pub fn extra(&self, name: &str) -> Option<&MvMatrix> {
        self.extras.iter().find(|(n, _)| n == name).map(|(_, m)| m)
    }

    fn all_named(&self) -> Vec<(String, &MvMatrix)> {
        let mut out: Vec<(String, &MvMatrix)> =
            self.gammas.iter().enumerate().map(|(mu, m)| (format!("gamma{mu}"), m)).collect();
        out.extend(self.extras.iter().map(|(n, m)| (n.clone(), m)));
        out
    }

    pub fn to_json(&self) -> Value {
        let matrices: serde_json::Map<String, Value> =
            self.all_named().into_iter().map(|(n, m)| (n, m.to_json())).collect();
        json!({
            "representation": self.representation.to_string(),
            "matrices": matrices,
        })
    }

    pub fn to_latex(&self) -> String {
        self.all_named()
            .into_iter()
            .map(|(n, m)| format!("[{}]_4 = {}", latex_name(&n), block_latex(m)))
            .collect::<Vec<_>>()
            .join("\n")
    }

    pub fn to_csv(&self) -> String {
        self.all_named()
            .into_iter()
            .map(|(n, m)| format!("# {n}\n{}", m.to_csv()))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

fn latex_name(name: &str) -> String {
    if let Some(mu) = name.strip_prefix("gamma") {
        return format!("\\gamma_{mu}");
    }
    let (head, tail) = name.split_at(1);
    format!("{head}_{{{tail}}}")
}

/// The standard Dirac matrices from the spectral basis
/// `(1, e_13, e_3, e_1)ᵀ u_{++} (1, -e_13, e_3, e_1)`.
pub fn dirac_spectral_standard() -> Result<DiracMatrices> {
    let frame = DiracFrame::new();
    let idem = dirac_idempotents();
    let one = Multivector::one(&frame.sig);
    let e13 = frame.e(1) * frame.e(3);
    let rows = vec![one.clone(), e13.clone(), frame.e(3).clone(), frame.e(1).clone()];
    let cols = vec![one.clone(), -&e13, frame.e(3).clone(), frame.e(1).clone()];
    let basis = SpectralBasis::new(rows, idem.u_pp.clone(), cols, vec![one])?.with_labels(
        vec!["1".into(), "e_{13}".into(), "e_3".into(), "e_1".into()],
        "u_{++}",
        vec!["1".into(), "-e_{13}".into(), "e_3".into(), "e_1".into()],
    );
    let gammas = frame
        .gammas
        .iter()
        .map(|g| basis.to_matrix(g))
        .collect::<Result<Vec<_>>>()?;
    let mut extras = Vec::new();
    for k in 1..=3 {
        extras.push((format!("e{k}"), basis.to_matrix(frame.e(k))?));
    }
    extras.push(("e123".into(), basis.to_matrix(&frame.pseudoscalar)?));
    Ok(DiracMatrices {
        representation: Representation::Standard,
        frame,
        basis,
        gammas,
        extras,
    })
}

/// `a_1 = ½(γ_0 - γ_3)`, `a_2 = ½(jγ_2 + γ_1)`, `b_1 = ½(γ_0 + γ_3)`,
/// `b_2 = ½(jγ_2 - γ_1)`: a global Witt basis of `G(2,2)` inside the
/// complexified Dirac algebra.
pub fn dirac_new_witt(frame: &DiracFrame) -> GlobalWitt {
    let half = Scalar::ratio(1, 2);
    let g = &frame.gammas;
    let jg2 = g[2].scale(&Scalar::j());
    GlobalWitt {
        n: 2,
        a: vec![(&g[0] - &g[3]).scale(&half), (&jg2 + &g[1]).scale(&half)],
        b: vec![(&g[0] + &g[3]).scale(&half), (&jg2 - &g[1]).scale(&half)],
        sig: Arc::clone(&frame.sig),
    }
}

/// The same array bordered by `(1, γ_0, jγ_2, -je_2)` and
/// `(1, γ_0, jγ_2, je_2)` around `u_1 u_2`.
pub fn dirac_new_gamma_borders(frame: &DiracFrame, witt: &GlobalWitt) -> Result<SpectralBasis> {
    let one = Multivector::one(&frame.sig);
    let j = Scalar::j();
    let jg2 = frame.gammas[2].scale(&j);
    let je2 = frame.e(2).scale(&j);
    let center = &witt.u(0) * &witt.u(1);
    SpectralBasis::new(
        vec![one.clone(), frame.gammas[0].clone(), jg2.clone(), -&je2],
        center,
        vec![one.clone(), frame.gammas[0].clone(), jg2, je2],
        vec![one],
    )
}

/// The Dirac matrices induced by the `G(2,2)` spectral basis.
pub fn dirac_spectral_new() -> Result<DiracMatrices> {
    let frame = DiracFrame::new();
    let witt = dirac_new_witt(&frame);
    let basis = spectral_basis_from_witt(&witt)?;
    let gammas = frame
        .gammas
        .iter()
        .map(|g| basis.to_matrix(g))
        .collect::<Result<Vec<_>>>()?;
    let mut extras = Vec::new();
    for (i, a) in witt.a.iter().enumerate() {
        extras.push((format!("a{}", i + 1), basis.to_matrix(a)?));
    }
    for (i, b) in witt.b.iter().enumerate() {
        extras.push((format!("b{}", i + 1), basis.to_matrix(b)?));
    }
    for k in 1..=3 {
        extras.push((format!("e{k}"), basis.to_matrix(frame.e(k))?));
    }
    Ok(DiracMatrices {
        representation: Representation::New,
        frame,
        basis,
        gammas,
        extras,
    })
}

/// `{γ_μ, γ_ν} = 2η_μν` for all 16 ordered pairs, both as multivectors and
/// as coordinate matrices.
pub fn gamma_anticommutation_check(rep: Representation) -> Result<VerifyReport> {
    let dm = match rep {
        Representation::Standard => dirac_spectral_standard()?,
        Representation::New => dirac_spectral_new()?,
    };
    Ok(anticommutation_report(&dm))
}

pub fn anticommutation_report(dm: &DiracMatrices) -> VerifyReport {
    let rep = dm.representation;
    let mut out = VerifyReport::new(format!("gamma-anticommutation-{rep}"));
    let g = &dm.frame.gammas;
    for mu in 0..4 {
        for nu in 0..4 {
            let eta = Scalar::int(2 * DiracFrame::eta(mu, nu));
            let mv = g[mu].anticommutator(&g[nu]).expect("same signature");
            let mv_ok = mv == Multivector::scalar(&dm.frame.sig, eta.clone());
            let m = (&dm.gammas[mu] * &dm.gammas[nu])
                .try_add(&(&dm.gammas[nu] * &dm.gammas[mu]))
                .expect("square matrices");
            let mat_ok = m == Matrix::identity(4).scale(&eta);
            out.check(
                format!("dirac.{rep}.anticommute.g{mu}{nu}"),
                format!("{{γ_{mu}, γ_{nu}}} = 2η_{mu}{nu} ({rep})"),
                mv_ok && mat_ok,
                format!("multivector level: {mv_ok}, matrix level: {mat_ok}"),
            );
        }
    }
    out
}

/// Checks of the standard representation against its block forms.
pub fn standard_report(dm: &DiracMatrices) -> VerifyReport {
    use blocks::*;
    let mut rep = VerifyReport::new("dirac-standard");
    let j = Scalar::j();
    let expected = [
        diag(&one(), &one().neg()),
        off(&e1().neg(), &e1()),
        off(&f1().scale(&-&j), &f1().scale(&j)),
        off(&e3().neg(), &e3()),
    ];
    let printed = [
        "[[1]_2, [0]_2], [[0]_2, -[1]_2]",
        "[[0]_2, -[e_1]_2], [[e_1]_2, [0]_2]",
        "[[0]_2, -j[f_1]_2], [j[f_1]_2, [0]_2]",
        "[[0]_2, -[e_3]_2], [[e_3]_2, [0]_2]",
    ];
    for mu in 0..4 {
        rep.check(
            format!("dirac.standard.gamma{mu}"),
            format!("standard [γ_{mu}] = {}", printed[mu]),
            dm.gammas[mu] == expected[mu],
            format!("computed:\n{}", dm.gammas[mu]),
        );
    }
    let pauli_like = [e1(), f1().scale(&j), e3()];
    for k in 1..=3 {
        let m = dm.extra(&format!("e{k}")).expect("present");
        let product = &dm.gammas[k] * &dm.gammas[0];
        let block = if k == 2 { "j[f_1]_2" } else { ["", "[e_1]_2", "", "[e_3]_2"][k] };
        rep.check(
            format!("dirac.standard.e{k}"),
            format!("[e_{k}]_4 = [γ_{k}][γ_0] = [[0]_2, {block}], [{block}, [0]_2]"),
            *m == product && *m == off(&pauli_like[k - 1], &pauli_like[k - 1]),
            format!("computed:\n{m}"),
        );
    }
    let vol = dm.extra("e123").expect("present");
    let jmat = Matrix::identity(4).scale(&j);
    let anticommutes = dm.gammas.iter().all(|g| (vol * g).try_add(&(g * vol)).expect("square").is_zero());
    rep.check(
        "dirac.standard.e123",
        "[e_123]_4 = j[[0]_2, [1]_2], [[1]_2, [0]_2]",
        *vol == off(&one(), &one()).scale(&j),
        format!("computed:\n{vol}"),
    );
    rep.check(
        "dirac.standard.j-not-i",
        "[e_123]_4 ≠ j·[1]_4: the pseudoscalar anticommutes with every [γ_μ] while j commutes",
        *vol != jmat && anticommutes,
        String::new(),
    );
    let violations = dm.basis.matrix_unit_violations();
    rep.check(
        "dirac.standard.matrix-units",
        "E_ij E_kl = δ_jk E_il for the Dirac spectral basis",
        violations.is_empty(),
        format!("{} violations", violations.len()),
    );
    rep
}

/// Checks of the representation built from the `G(2,2)` spectral basis.
pub fn new_report(dm: &DiracMatrices) -> Result<VerifyReport> {
    use blocks::*;
    let mut rep = VerifyReport::new("dirac-new");
    let frame = &dm.frame;
    let witt = dirac_new_witt(frame);
    let one_mv = Multivector::one(&frame.sig);
    let half = Scalar::ratio(1, 2);
    let mut duality = check_global_duality(&witt);
    for c in &mut duality.checks {
        c.id = format!("dirac.new.witt.{}", c.id);
    }
    rep.extend(duality);
    let u1 = (&one_mv + frame.e(3)).scale(&half);
    rep.check(
        "dirac.new.u1",
        "u_1 = b_1 a_1 = ½(1 + e_3)",
        witt.u(0) == u1,
        format!("b_1 a_1 = {}", witt.u(0)),
    );
    let jie3 = (&frame.pseudoscalar * frame.e(3)).scale(&Scalar::j());
    let u2 = (&one_mv + &jie3).scale(&half);
    rep.check(
        "dirac.new.u2",
        "u_2 = b_2 a_2 = ½(1 + j i e_3)",
        witt.u(1) == u2,
        format!("b_2 a_2 = {}", witt.u(1)),
    );
    let g = &frame.gammas;
    let j = Scalar::j();
    let from_witt = [
        &witt.a[0] + &witt.b[0],
        &witt.a[1] - &witt.b[1],
        (&witt.a[1] + &witt.b[1]).scale(&-&j),
        &witt.b[0] - &witt.a[0],
    ];
    rep.check(
        "dirac.new.identification",
        "γ_0 = a_1 + b_1, γ_1 = a_2 - b_2, γ_2 = -j(a_2 + b_2), γ_3 = b_1 - a_1",
        from_witt.iter().zip(g.iter()).all(|(x, y)| x == y),
        String::new(),
    );
    let bordered = dirac_new_gamma_borders(frame, &witt)?;
    let same_units = bordered.units() == dm.basis.units();
    rep.check(
        "dirac.new.borders",
        "(1, γ_0, jγ_2, -je_2)ᵀ u_1u_2 (1, γ_0, jγ_2, je_2) reproduces the G(2,2) spectral array",
        same_units,
        String::new(),
    );
    let expected = [
        diag(&e1(), &e1()),
        off(&e3().neg(), &e3()),
        off(&e3(), &e3()).scale(&-&j),
    ];
    let printed = [
        "[[e_1]_2, [0]_2], [[0]_2, [e_1]_2]",
        "[[0]_2, -[e_3]_2], [[e_3]_2, [0]_2]",
        "-j[[0]_2, [e_3]_2], [[e_3]_2, [0]_2]",
    ];
    for mu in 0..3 {
        rep.check(
            format!("dirac.new.gamma{mu}"),
            format!("new [γ_{mu}] = {}", printed[mu]),
            dm.gammas[mu] == expected[mu],
            format!("computed:\n{}", dm.gammas[mu]),
        );
    }
    // The printed blocks of the last matrix are typeset as "-[f]_1" and
    // "-[f_1]_2"; the construction fixes the value.
    let computed = &dm.gammas[3];
    let reading = diag(&f1().neg(), &f1().neg());
    let agrees = *computed == reading;
    rep.push(
        "dirac.new.gamma3",
        "new [γ_3] = [-a_1 + b_1]_4, printed with blocks -[f]_1 and -[f_1]_2",
        Status::Conflict,
        format!(
            "printed block labels are inconsistent; computed [γ_3] = {} ({} the reading -[f_1]_2 ⊕ -[f_1]_2)\n{}",
            block_latex(computed),
            if agrees { "equal to" } else { "different from" },
            computed
        ),
    );
    let a1m = dm.extra("a1").expect("present");
    let a2m = dm.extra("a2").expect("present");
    let b1m = dm.extra("b1").expect("present");
    let b2m = dm.extra("b2").expect("present");
    rep.check(
        "dirac.new.a1",
        "[a_1]_4 = [[a_1]_2, [0]_2], [[0]_2, [a_1]_2]",
        *a1m == diag(&a1(), &a1()),
        format!("computed:\n{a1m}"),
    );
    rep.check(
        "dirac.new.a2",
        "[a_2]_4 = [[0]_2, [0]_2], [[e_3]_2, [0]_2]",
        *a2m == grid(&zero(), &zero(), &e3(), &zero()),
        format!("computed:\n{a2m}"),
    );
    rep.check(
        "dirac.new.b-transpose",
        "[b_1]_4 = [a_1]_4ᵀ and [b_2]_4 = [a_2]_4ᵀ",
        *b1m == a1m.transpose() && *b2m == a2m.transpose() && *b1m == diag(&b1(), &b1()),
        String::new(),
    );
    let rest = [off(&f1(), &f1().neg()), off(&f1(), &f1()).scale(&j), diag(&e3(), &e3())];
    let printed_rest = [
        "[[0]_2, [f_1]_2], [-[f_1]_2, [0]_2]",
        "j[[0]_2, [f_1]_2], [[f_1]_2, [0]_2]",
        "[[e_3]_2, [0]_2], [[0]_2, [e_3]_2]",
    ];
    for k in 1..=3 {
        let m = dm.extra(&format!("e{k}")).expect("present");
        let product = &dm.gammas[k] * &dm.gammas[0];
        rep.check(
            format!("dirac.new.e{k}"),
            format!("[e_{k}]_4 = [γ_{k}γ_0] = {}", printed_rest[k - 1]),
            *m == product && *m == rest[k - 1],
            format!("computed:\n{m}"),
        );
    }
    Ok(rep)
}

/// The Pauli representation of `G(3)` through `G(1,1) = gen{e_1, e_1e_3}`.
#[derive(Clone, Debug)]
pub struct PauliRep {
    pub sig: Arc<Signature>,
    pub basis: SpectralBasis,
    /// `[e_1], [e_2], [e_3]` with entries in `span{1, i}`, `i = e_123`.
    pub e: [Matrix<Central>; 3],
}

impl PauliRep {
    pub fn pseudoscalar(&self) -> Multivector {
        Multivector::blade(&self.sig, 0b111, Scalar::one())
    }

    /// The hyperbolic pair `e := e_1`, `f := e_1 e_3`.
    pub fn e_f(&self) -> (Multivector, Multivector) {
        let e1 = Multivector::generator(&self.sig, 0);
        let e3 = Multivector::generator(&self.sig, 2);
        let f = &e1 * &e3;
        (e1, f)
    }

    pub fn matrix_of(&self, g: &Multivector) -> Result<Matrix<Central>> {
        self.basis.to_central_matrix(g)
    }

    pub fn to_json(&self) -> Value {
        let m: serde_json::Map<String, Value> = self
            .e
            .iter()
            .enumerate()
            .map(|(k, m)| (format!("e{}", k + 1), central_matrix_json(m)))
            .collect();
        json!({"center": "i = e123", "matrices": m})
    }

    pub fn to_latex(&self) -> String {
        self.e
            .iter()
            .enumerate()
            .map(|(k, m)| format!("[e_{}] = {}", k + 1, central_latex(m)))
            .collect::<Vec<_>>()
            .join("\n")
    }

    pub fn to_csv(&self) -> String {
        self.e
            .iter()
            .enumerate()
            .map(|(k, m)| {
                let rows: Vec<String> = m
                    .iter_rows()
                    .map(|r| r.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","))
                    .collect();
                format!("# e{}\n{}", k + 1, rows.join("\n"))
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

pub fn central_matrix_json(m: &Matrix<Central>) -> Value {
    let entries: Vec<Vec<Value>> = m
        .iter_rows()
        .map(|r| r.iter().map(|c| json!({"re": c.re.to_json(), "i": c.vol.to_json()})).collect())
        .collect();
    json!({"dim": m.rows(), "entries": entries})
}

fn central_latex(m: &Matrix<Central>) -> String {
    let rows: Vec<String> = m
        .iter_rows()
        .map(|r| {
            r.iter()
                .map(|c| c.to_string().replace('√', "\\sqrt"))
                .collect::<Vec<_>>()
                .join(" & ")
        })
        .collect();
    format!("\\begin{{pmatrix}} {} \\end{{pmatrix}}", rows.join(" \\\\ "))
}

pub fn pauli_spectral() -> Result<PauliRep> {
    let sig = Signature::g3().into_arc();
    let one = Multivector::one(&sig);
    let e1 = Multivector::generator(&sig, 0);
    let e3 = Multivector::generator(&sig, 2);
    let f = &e1 * &e3;
    let half = Scalar::ratio(1, 2);
    let a = (&e1 + &f).scale(&half);
    let b = (&e1 - &f).scale(&half);
    let vol = Multivector::blade(&sig, 0b111, Scalar::one());
    let center = &b * &a;
    let basis = SpectralBasis::new(vec![one.clone(), a], center, vec![one.clone(), b], vec![one, vol])?
        .with_labels(vec!["1".into(), "a".into()], "b a", vec!["1".into(), "b".into()]);
    let e = std::array::from_fn(|k| {
        basis
            .to_central_matrix(&Multivector::generator(&sig, k))
            .expect("G(3) is spanned by the Pauli basis")
    });
    Ok(PauliRep { sig, basis, e })
}

/// Checks of the Pauli construction, including that `j[f]` is not `[e_2]`.
pub fn pauli_report(p: &PauliRep) -> VerifyReport {
    let mut rep = VerifyReport::new("pauli");
    let c = |re: i64, vol: i64| Central::new(Scalar::int(re), Scalar::int(vol));
    let m = |rows: [[Central; 2]; 2]| Matrix::from_rows(rows.map(|r| r.to_vec()).to_vec()).expect("2x2");
    let expected = [
        m([[c(0, 0), c(1, 0)], [c(1, 0), c(0, 0)]]),
        m([[c(0, 0), c(0, -1)], [c(0, 1), c(0, 0)]]),
        m([[c(1, 0), c(0, 0)], [c(0, 0), c(-1, 0)]]),
    ];
    let printed = ["[[0, 1], [1, 0]]", "[[0, -i], [i, 0]]", "[[1, 0], [0, -1]]"];
    for k in 0..3 {
        rep.check(
            format!("pauli.e{}", k + 1),
            format!("[e_{}] = {}", k + 1, printed[k]),
            p.e[k] == expected[k],
            format!("computed:\n{}", p.e[k]),
        );
    }
    let i = p.pseudoscalar();
    let one = Multivector::one(&p.sig);
    rep.check("pauli.i-square", "i^2 = (e_123)^2 = -1", (&i * &i) == -&one, String::new());
    let central = (0..3).all(|k| {
        let g = Multivector::generator(&p.sig, k);
        &i * &g == &g * &i
    });
    rep.check("pauli.i-central", "e_123 commutes with e_1, e_2, e_3", central, String::new());
    let (e, f) = p.e_f();
    let e3 = Multivector::generator(&p.sig, 2);
    let e2 = Multivector::generator(&p.sig, 1);
    rep.check(
        "pauli.subalgebra",
        "e^2 = 1, f^2 = -1, ef = -fe = e_3 for e = e_1, f = e_1e_3",
        &e * &e == one && &f * &f == -&one && &e * &f == e3 && &f * &e == -&e3,
        String::new(),
    );
    rep.check(
        "pauli.f-is-minus-i-e2",
        "f = e_1e_3 = -i e_2",
        f == -&(&i * &e2),
        String::new(),
    );
    let fm = p.matrix_of(&f).expect("in span");
    let if_mat = fm.scale(&Central::i());
    rep.check(
        "pauli.e2-is-if",
        "[e_2] = [i f]",
        p.e[1] == if_mat,
        String::new(),
    );
    // j[f] has the same shape as [e_2] but its entries sit in the scalar
    // component with a j coefficient rather than in the i component.
    let jf = fm.scale(&Central::real(Scalar::j()));
    let shape_equal = (0..2).all(|r| (0..2).all(|s| jf.get(r, s).is_zero_entry() == p.e[1].get(r, s).is_zero_entry()));
    let components_differ = (0..2).all(|r| {
        (0..2).all(|s| {
            let x = jf.get(r, s);
            let y = p.e[1].get(r, s);
            x.is_zero_entry() || (x.vol.is_zero() && !y.vol.is_zero() && x.re.to_rational().is_none())
        })
    });
    let vol_mat = p.matrix_of(&i).expect("in span");
    let with_jf = &(&p.e[0] * &jf) * &p.e[2];
    let with_e2 = &(&p.e[0] * &p.e[1]) * &p.e[2];
    rep.check(
        "pauli.j-not-i",
        "j[f] ≠ [e_2] = i[f]; using j[f] in place of [e_2] breaks [e_1][e_2][e_3] = [e_123]",
        jf != p.e[1] && shape_equal && components_differ && with_e2 == vol_mat && with_jf != vol_mat,
        format!("[e_1] j[f] [e_3] =\n{with_jf}"),
    );
    rep
}

trait EntryZero {
    fn is_zero_entry(&self) -> bool;
}

impl EntryZero for Central {
    fn is_zero_entry(&self) -> bool {
        self.re.is_zero() && self.vol.is_zero()
    }
}

/// LaTeX for a 4×4 matrix in 2×2-block notation, naming blocks that are
/// `±1`/`±j` times `[0]_2, [1]_2, [e_1]_2, [f_1]_2, [e_3]_2, [a_1]_2, [b_1]_2`.
pub fn block_latex(m: &MvMatrix) -> String {
    if m.rows() != 4 || m.cols() != 4 {
        return plain_latex(m);
    }
    let cell = |bi, bj| name_block(&m.block(bi, bj, 2)).unwrap_or_else(|| plain_latex(&m.block(bi, bj, 2)));
    format!(
        "\\begin{{pmatrix}} {} & {} \\\\ {} & {} \\end{{pmatrix}}",
        cell(0, 0),
        cell(0, 1),
        cell(1, 0),
        cell(1, 1)
    )
}

fn name_block(b: &MvMatrix) -> Option<String> {
    if b.is_zero() {
        return Some("[0]_2".into());
    }
    for (name, x) in blocks::named() {
        for (prefix, c) in blocks::unit_multiples() {
            if *b == x.scale(&c) {
                return Some(format!("{prefix}{name}"));
            }
        }
    }
    None
}

pub fn plain_latex(m: &MvMatrix) -> String {
    let rows: Vec<String> = m
        .iter_rows()
        .map(|r| r.iter().map(Scalar::to_latex).collect::<Vec<_>>().join(" & "))
        .collect();
    format!("\\begin{{pmatrix}} {} \\end{{pmatrix}}", rows.join(" \\\\ "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frame_invariants() {
        let f = DiracFrame::new();
        assert!(f.check().all_passed(), "{}", f.check());
        let one = Multivector::one(&f.sig);
        assert_eq!(&f.gammas[0] * &f.gammas[0], one);
        for k in 1..4 {
            assert_eq!(&f.gammas[k] * &f.gammas[k], -&one);
        }
    }

    #[test]
    fn u_pp_is_idempotent() {
        let u = dirac_idempotents().u_pp;
        assert_eq!(&u * &u, u);
    }

    #[test]
    fn block_names() {
        use blocks::*;
        let m = off(&f1().scale(&-Scalar::j()), &e3());
        assert_eq!(
            block_latex(&m),
            "\\begin{pmatrix} [0]_2 & -j[f_1]_2 \\\\ [e_3]_2 & [0]_2 \\end{pmatrix}"
        );
        let odd = diag(&Matrix::from_ints(&[&[2, 0], &[0, 0]]), &one());
        assert!(block_latex(&odd).contains("\\begin{pmatrix} 2 & 0"));
    }

    #[test]
    fn pauli_e3_is_ef() {
        let p = pauli_spectral().unwrap();
        let (e, f) = p.e_f();
        assert_eq!(p.matrix_of(&(&e * &f)).unwrap(), p.e[2]);
    }
}
