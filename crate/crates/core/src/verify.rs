//! Verification suites: every identity the toolkit reproduces, grouped by
//! topic, with deterministic seeded sampling for the randomized ones.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num::BigInt;

use crate::dirac::{
    anticommutation_report, dirac_idempotents, dirac_spectral_new, dirac_spectral_standard, new_report,
    pauli_report, pauli_spectral, standard_report, DiracFrame, DiracMatrices,
};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::multivector::Multivector;
use crate::omega::{det_closed_form, det_omega, fast_apply, gram_check, omega, Variant, MAX_DENSE_LEVEL, MAX_DET_LEVEL};
use crate::random::{random_multivector, random_scalar, rng, SampleRng};
use crate::report::{Status, VerifyReport};
use crate::scalar::Scalar;
use crate::signature::Signature;
use crate::spectral::SpectralBasis;
use crate::witt_global::{check_global_duality, make_global_witt, spectral_basis_g11_e_borders, spectral_basis_nn};
use crate::witt_local::{
    alpha, c8_complex_table, c8_witt_pairs, check_local_duality, complex_identification_g22, hadamard_identification,
    make_local_witt, no_identification_g12,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Table1,
    WittGlobal,
    WittLocal,
    Omega,
    Dirac,
    Pauli,
    NegativeG12,
}

impl Suite {
    pub const EACH: [Suite; 7] = [
        Suite::Table1,
        Suite::WittGlobal,
        Suite::WittLocal,
        Suite::Omega,
        Suite::Dirac,
        Suite::Pauli,
        Suite::NegativeG12,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Table1 => "table1",
            Suite::WittGlobal => "witt-global",
            Suite::WittLocal => "witt-local",
            Suite::Omega => "omega",
            Suite::Dirac => "dirac",
            Suite::Pauli => "pauli",
            Suite::NegativeG12 => "negative-g12",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        std::iter::once(Suite::All)
            .chain(Suite::EACH)
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Schema(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub seed: u64,
    pub samples: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { seed: 0, samples: 100 }
    }
}

/// Runs one suite (or all of them); checks are sorted by id.
pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<VerifyReport> {
    let mut rep = match suite {
        Suite::All => {
            let mut all = VerifyReport::new("all");
            for s in Suite::EACH {
                all.extend(run_suite(s, opts)?);
            }
            all
        }
        Suite::Table1 => table1(),
        Suite::WittGlobal => witt_global(opts)?,
        Suite::WittLocal => witt_local()?,
        Suite::Omega => omega_suite(opts)?,
        Suite::Dirac => dirac(opts)?,
        Suite::Pauli => pauli(opts)?,
        Suite::NegativeG12 => negative_g12(),
    };
    rep.suite = suite.name().to_string();
    rep.sort();
    Ok(rep)
}

fn prefixed(mut rep: VerifyReport, prefix: &str) -> VerifyReport {
    for c in &mut rep.checks {
        c.id = format!("{prefix}.{}", c.id);
    }
    rep
}

/// The multiplication table of `a, b, ab, ba` in `G(1,1)`.
pub fn table1() -> VerifyReport {
    let mut rep = VerifyReport::new("table1");
    let w = make_global_witt(1).expect("n = 1");
    let (a, b) = (w.a[0].clone(), w.b[0].clone());
    let zero = Multivector::zero(&w.sig);
    let ab = &a * &b;
    let ba = &b * &a;
    let elems = [("a", &a), ("b", &b), ("ab", &ab), ("ba", &ba)];
    // printed table, row × column
    let printed: [[(&str, &Multivector); 4]; 4] = [
        [("0", &zero), ("ab", &ab), ("0", &zero), ("a", &a)],
        [("ba", &ba), ("0", &zero), ("b", &b), ("0", &zero)],
        [("a", &a), ("0", &zero), ("ab", &ab), ("0", &zero)],
        [("0", &zero), ("b", &b), ("0", &zero), ("ba", &ba)],
    ];
    for (r, (rn, x)) in elems.iter().enumerate() {
        for (c, (cn, y)) in elems.iter().enumerate() {
            let (want_name, want) = printed[r][c];
            let got = *x * *y;
            rep.check(
                format!("table1.{rn}*{cn}"),
                format!("({rn})({cn}) = {want_name}"),
                &got == want,
                format!("computed {got}"),
            );
        }
    }
    rep
}

/// `[gh] = [g][h]` and `g ↦ [g] ↦ g` on seeded random pairs.
fn homomorphism(
    rep: &mut VerifyReport,
    id: &str,
    anchor: &str,
    basis: &SpectralBasis,
    complex: bool,
    samples: usize,
    rng: &mut SampleRng,
) -> Result<()> {
    let sig = Arc::clone(basis.signature());
    let mut bad_hom = 0;
    let mut bad_trip = 0;
    for _ in 0..samples {
        let g = random_multivector(rng, &sig, complex);
        let h = random_multivector(rng, &sig, complex);
        let (mg, mh) = (basis.to_matrix(&g)?, basis.to_matrix(&h)?);
        if basis.to_matrix(&(&g * &h))? != &mg * &mh {
            bad_hom += 1;
        }
        if basis.from_matrix(&mg)? != g {
            bad_trip += 1;
        }
    }
    rep.check(
        format!("{id}.homomorphism"),
        format!("[gh] = [g][h] for {samples} random pairs in {anchor}"),
        bad_hom == 0,
        format!("{bad_hom} failing pairs"),
    );
    rep.check(
        format!("{id}.round-trip"),
        format!("g = Σ [g]_ij E_ij for {samples} random g in {anchor}"),
        bad_trip == 0,
        format!("{bad_trip} failing samples"),
    );
    Ok(())
}

fn unit_law(rep: &mut VerifyReport, id: &str, basis: &SpectralBasis, what: &str) {
    let violations = basis.matrix_unit_violations();
    rep.check(
        format!("{id}.matrix-units"),
        format!("E_ij E_kl = δ_jk E_il over all index quadruples ({what})"),
        violations.is_empty(),
        format!("{} violations, first {:?}", violations.len(), violations.first()),
    );
    let one = Multivector::one(basis.signature());
    rep.check(
        format!("{id}.partition"),
        format!("Σ_i E_ii = 1 ({what})"),
        basis.diagonal_sum() == one,
        String::new(),
    );
    rep.check(
        format!("{id}.rational"),
        format!("every E_ij has rational-plus-j coefficients ({what})"),
        basis.is_gaussian(),
        String::new(),
    );
}

fn witt_global(opts: &VerifyOptions) -> Result<VerifyReport> {
    let mut rep = VerifyReport::new("witt-global");
    for n in 1..=4 {
        let w = make_global_witt(n)?;
        rep.extend(prefixed(check_global_duality(&w), &format!("witt-global.n{n}")));
    }

    // n = 1 array and coordinate matrices
    let w = make_global_witt(1)?;
    let sb1 = spectral_basis_nn(1)?;
    let (a, b) = (&w.a[0], &w.b[0]);
    let expected1 = [[b * a, b.clone()], [a.clone(), a * b]];
    let array1 = (0..2).all(|i| (0..2).all(|j| sb1.unit(i, j) == &expected1[i][j]));
    rep.check(
        "witt-global.n1.array",
        "(1, a)ᵀ ba (1, b) = [[ba, b], [a, ab]]",
        array1,
        String::new(),
    );
    unit_law(&mut rep, "witt-global.n1", &sb1, "G(1,1)");
    let coords = [
        (a.clone(), Matrix::from_ints(&[&[0, 0], &[1, 0]]), "[a] = [[0,0],[1,0]]"),
        (b.clone(), Matrix::from_ints(&[&[0, 1], &[0, 0]]), "[b] = [[0,1],[0,0]]"),
        (b * a, Matrix::from_ints(&[&[1, 0], &[0, 0]]), "[ba] = [[1,0],[0,0]]"),
        (a * b, Matrix::from_ints(&[&[0, 0], &[0, 1]]), "[ab] = [[0,0],[0,1]]"),
    ];
    for (k, (g, m, text)) in coords.iter().enumerate() {
        rep.check(
            format!("witt-global.n1.coords.{k}"),
            *text,
            sb1.to_matrix(g)? == *m,
            String::new(),
        );
    }
    let e_borders = spectral_basis_g11_e_borders()?;
    let u_plus = (&Multivector::one(&w.sig) + &(&w.e(0) * &w.f(0))).scale(&Scalar::ratio(1, 2));
    let u_minus = (&Multivector::one(&w.sig) - &(&w.e(0) * &w.f(0))).scale(&Scalar::ratio(1, 2));
    let e = w.e(0);
    let expected_e = [[u_plus.clone(), &e * &u_minus], [&e * &u_plus, u_minus.clone()]];
    rep.check(
        "witt-global.n1.e-borders",
        "(1, a)ᵀ ba (1, b) = (1, e)ᵀ ba (1, e) = [[u_+, e u_-], [e u_+, u_-]]",
        e_borders.units() == sb1.units()
            && (0..2).all(|i| (0..2).all(|j| e_borders.unit(i, j) == &expected_e[i][j])),
        String::new(),
    );
    let g_entries = [Scalar::int(3), Scalar::ratio(-1, 2), Scalar::ratio(2, 7), Scalar::int(5)];
    let gm = Matrix::from_rows(vec![g_entries[..2].to_vec(), g_entries[2..].to_vec()])?;
    let expansion = &(&(&(b * a).scale(&g_entries[0]) + &b.scale(&g_entries[1])) + &a.scale(&g_entries[2]))
        + &(a * b).scale(&g_entries[3]);
    rep.check(
        "witt-global.n1.expansion",
        "g = g_11 ba + g_12 b + g_21 a + g_22 ab",
        sb1.from_matrix(&gm)? == expansion,
        String::new(),
    );

    // n = 2 array
    let w2 = make_global_witt(2)?;
    let sb2 = spectral_basis_nn(2)?;
    let (a1, a2, b1, b2) = (&w2.a[0], &w2.a[1], &w2.b[0], &w2.b[1]);
    let (u1, u2, u1d, u2d) = (w2.u(0), w2.u(1), w2.u_dagger(0), w2.u_dagger(1));
    let expected2: [[Multivector; 4]; 4] = [
        [&u1 * &u2, b1 * &u2, b2 * &u1, b2 * b1],
        [a1 * &u2, &u1d * &u2, a1 * b2, -&(b2 * &u1d)],
        [a2 * &u1, a2 * b1, &u1 * &u2d, b1 * &u2d],
        [a1 * a2, -&(a2 * &u1d), a1 * &u2d, &u1d * &u2d],
    ];
    let mismatches: Vec<(usize, usize)> = (0..4)
        .flat_map(|i| (0..4).map(move |j| (i, j)))
        .filter(|&(i, j)| sb2.unit(i, j) != &expected2[i][j])
        .collect();
    rep.check(
        "witt-global.n2.array",
        "(1, a_1, a_2, a_12)ᵀ u_1u_2 (1, b_1, b_2, b_21) has the printed 4×4 entries",
        mismatches.is_empty(),
        format!("mismatched entries: {mismatches:?}"),
    );
    unit_law(&mut rep, "witt-global.n2", &sb2, "G(2,2)");
    for n in [3, 4] {
        let sb = spectral_basis_nn(n)?;
        let one = Multivector::one(sb.signature());
        rep.check(
            format!("witt-global.n{n}.partition"),
            format!("Σ_i E_ii = 1 (G({n},{n}))"),
            sb.diagonal_sum() == one,
            String::new(),
        );
        if n == 3 {
            unit_law(&mut rep, "witt-global.n3", &sb, "G(3,3)");
        }
    }

    let mut r = rng(opts.seed);
    homomorphism(&mut rep, "witt-global.n1", "G(1,1)", &sb1, false, opts.samples, &mut r)?;
    homomorphism(&mut rep, "witt-global.n2", "G(2,2)", &sb2, false, opts.samples, &mut r)?;
    Ok(rep)
}

fn witt_local() -> Result<VerifyReport> {
    let mut rep = VerifyReport::new("witt-local");
    for m in 2..=8 {
        rep.extend(prefixed(check_local_duality(&make_local_witt(m)?), "witt-local"));
    }

    let h2 = hadamard_identification(2)?;
    rep.check(
        "witt-local.hadamard4.identity",
        "(√6 e_1, √2 f_1, √2 f_2, √2 f_3) = Ω_4 (c_1, …, c_4)",
        h2.holds(),
        String::new(),
    );
    rep.check(
        "witt-local.hadamard4.frame",
        "the four rows form an orthonormal frame of signature (1,3)",
        h2.frame_signature() == Some((1, 3)),
        format!("{:?}", h2.frame_signature()),
    );
    let w4 = make_local_witt(4)?;
    let f1 = (&(&(&w4.c[0] - &w4.c[1]) - &w4.c[2]) + &w4.c[3]).scale(&Scalar::sqrt(2).inv()?);
    rep.check(
        "witt-local.hadamard4.f1",
        "f_1 = (c_1 - c_2 - c_3 + c_4)/√2",
        h2.rows[1] == f1,
        String::new(),
    );

    let h3 = hadamard_identification(3)?;
    rep.check(
        "witt-local.hadamard8.identity",
        "(2√7 e_1, 2 f_1, …, 2 f_7) = [[Ω_4, Ω_4⁻], [Ω_4, -Ω_4⁻]] (c_1, …, c_8)",
        h3.holds(),
        String::new(),
    );
    rep.check(
        "witt-local.hadamard8.frame",
        "the eight rows form an orthonormal frame of signature (1,7)",
        h3.frame_signature() == Some((1, 7)),
        format!("{:?}", h3.frame_signature()),
    );
    let det = crate::matrix::bareiss_det(&h3.signs.to_integers().expect("integer"))?;
    rep.check(
        "witt-local.hadamard8.det",
        "det [[Ω_4, Ω_4⁻], [Ω_4, -Ω_4⁻]] = -4096 = -2^12",
        det == BigInt::from(-4096),
        format!("det = {det}"),
    );
    let w8 = make_local_witt(8)?;
    let frame_product = Multivector::product(&w8.sig, &h3.rows)?;
    let lhs = frame_product.scale(&(&Scalar::int(256) * &Scalar::sqrt(7)));
    let rhs = w8.top_wedge().scale(&Scalar::int(-4096));
    rep.check(
        "witt-local.hadamard8.pseudoscalar",
        "2^8 √7 e_1 f_1 ⋯ f_7 = -2^12 c_1 ∧ ⋯ ∧ c_8",
        lhs == rhs && !lhs.is_zero(),
        format!("left = {lhs}\nright = {rhs}"),
    );
    let (l2, r2) = h3.pseudoscalar_sides()?;
    rep.check(
        "witt-local.hadamard8.wedge",
        "e_1 ∧ f_1 ∧ ⋯ ∧ f_7 = e_1 f_1 ⋯ f_7 = -(2^4/√7) c_1 ∧ ⋯ ∧ c_8",
        l2 == r2
            && Multivector::wedge_all(&w8.sig, &h3.rows)? == frame_product
            && frame_product == w8.top_wedge().scale(&(&Scalar::int(-16) * &Scalar::sqrt(7).inv()?)),
        String::new(),
    );

    let g22 = complex_identification_g22()?;
    rep.check(
        "witt-local.complex4.identity",
        "(√6 e_1, √2 jf_1, √2 f_2, √2 f_3) = [[Ω_2j, Ω_2j⁻], [Ω_2, -Ω_2⁻]] (c_1, …, c_4)",
        g22.holds(),
        String::new(),
    );
    let one = Scalar::one();
    let minus = Scalar::int(-1);
    rep.check(
        "witt-local.complex4.signature",
        "(e_1, jf_1, f_2, f_3) square to (+1, +1, -1, -1) and anticommute: signature (2,2)",
        g22.squares() == vec![Some(one.clone()), Some(one), Some(minus.clone()), Some(minus)]
            && g22.frame_signature() == Some((2, 2)),
        format!("{:?}", g22.squares()),
    );
    let oj = omega(2, Variant::ComplexPlain)?.entries;
    rep.check(
        "witt-local.complex4.hermitian",
        "Ω_4j Ω_4j* = 4·id",
        (&oj * &oj.conj_transpose()).identity_multiple() == Some(Scalar::int(4)),
        String::new(),
    );

    for (k, e) in c8_complex_table().into_iter().enumerate() {
        let id = format!("witt-local.c8.{k}.{}", e.label);
        let anchor = format!("{} = {} = {}", e.label, e.witt_label, e.printed_text);
        if e.matches_printed {
            rep.check(id, anchor, true, String::new());
        } else {
            rep.push(
                id,
                anchor,
                Status::Conflict,
                format!(
                    "printed form differs from the frame formula f_k = α_k(C_k - (k-1)c_{{k+1}}); {}",
                    e.correction.unwrap_or_default()
                ),
            );
        }
    }
    let table = c8_complex_table();
    let f4 = &table[4];
    let minus_one = -Multivector::one(f4.value.signature());
    rep.check(
        "witt-local.c8.f4-square",
        "f_4^2 = -1 with the c_5 coefficient 3/√6, and not with √3/2",
        &f4.value * &f4.value == minus_one && &f4.printed * &f4.printed != minus_one,
        format!("printed form squares to {}", &f4.printed * &f4.printed),
    );
    rep.check(
        "witt-local.c8.alpha7",
        "6/√21 = 2√3/√7 and α_7 = -1/√21",
        alpha(7) == -Scalar::sqrt(21).inv()? && &Scalar::int(6) * &Scalar::sqrt(21).inv()? == Scalar::int(2) * Scalar::sqrt(3) * Scalar::sqrt(7).inv()?,
        String::new(),
    );
    rep.extend(prefixed(check_global_duality(&c8_witt_pairs()), "witt-local.c8.g44"));
    Ok(rep)
}

fn omega_suite(opts: &VerifyOptions) -> Result<VerifyReport> {
    let mut rep = VerifyReport::new("omega");
    for k in 1..=MAX_DENSE_LEVEL {
        rep.extend(prefixed(gram_check(k)?, "omega"));
    }
    let printed_exponents = [1u32, 4, 12, 32, 80];
    for k in 1..=MAX_DET_LEVEL {
        let det = det_omega(k)?;
        let printed = -num::pow(BigInt::from(2), printed_exponents[k - 1] as usize);
        rep.check(
            format!("omega.det.k{k}"),
            format!("det Ω_{} = -2^{} = -(2^{k})^(2^{})", 1 << k, printed_exponents[k - 1], k - 1),
            det == printed && det == det_closed_form(k),
            format!("fraction-free elimination gives {det}"),
        );
    }
    let o4 = omega(2, Variant::Plain)?.entries;
    let o4m = omega(2, Variant::Minus)?.entries;
    rep.check(
        "omega.printed.omega4",
        "Ω_4 = [[1,1,1,1],[1,-1,-1,1],[1,1,-1,-1],[1,-1,1,-1]]",
        o4 == Matrix::from_ints(&[&[1, 1, 1, 1], &[1, -1, -1, 1], &[1, 1, -1, -1], &[1, -1, 1, -1]]),
        String::new(),
    );
    rep.check(
        "omega.printed.omega4-minus",
        "Ω_4⁻ = [[1,1,1,1],[-1,1,1,-1],[-1,-1,1,1],[-1,1,-1,1]]",
        o4m == Matrix::from_ints(&[&[1, 1, 1, 1], &[-1, 1, 1, -1], &[-1, -1, 1, 1], &[-1, 1, -1, 1]]),
        String::new(),
    );
    let o2 = omega(1, Variant::Plain)?.entries;
    let o2m = omega(1, Variant::Minus)?.entries;
    rep.check(
        "omega.printed.blocks",
        "Ω_4 = [[Ω_2, Ω_2⁻], [Ω_2, -Ω_2⁻]] and Ω_4⁻ = [[Ω_2⁻, Ω_2], [-Ω_2, Ω_2⁻]]",
        o4 == Matrix::from_blocks(&o2, &o2m, &o2, &o2m.neg()) && o4m == Matrix::from_blocks(&o2m, &o2, &o2.neg(), &o2m),
        String::new(),
    );
    let mut r = rng(opts.seed);
    let mut bad = Vec::new();
    for k in 1..=MAX_DENSE_LEVEL {
        for v in [Variant::Plain, Variant::Minus] {
            let dense = omega(k, v)?.entries;
            for _ in 0..opts.samples.min(20) {
                let x: Vec<Scalar> = (0..1 << k).map(|_| random_scalar(&mut r, false)).collect();
                if fast_apply(k, v, &x)? != dense.mul_vec(&x)? {
                    bad.push((k, v.to_string()));
                }
            }
        }
    }
    rep.check(
        "omega.fast-apply",
        "the butterfly recursion agrees with dense Ω·x for k ≤ 6, both variants",
        bad.is_empty(),
        format!("{bad:?}"),
    );
    Ok(rep)
}

fn dirac_homomorphism(rep: &mut VerifyReport, dm: &DiracMatrices, opts: &VerifyOptions, stream: u64) -> Result<()> {
    let mut r = rng(opts.seed ^ (stream << 32));
    let id = format!("dirac.{}", dm.representation);
    let anchor = format!("complexified G(1,3), {} representation", dm.representation);
    homomorphism(rep, &id, &anchor, &dm.basis, true, opts.samples, &mut r)
}

fn dirac(opts: &VerifyOptions) -> Result<VerifyReport> {
    let mut rep = VerifyReport::new("dirac");
    let frame = DiracFrame::new();
    rep.extend(frame.check());
    rep.extend(dirac_idempotents().check(&frame));
    let std = dirac_spectral_standard()?;
    rep.extend(standard_report(&std));
    rep.extend(anticommutation_report(&std));
    dirac_homomorphism(&mut rep, &std, opts, 1)?;
    let new = dirac_spectral_new()?;
    rep.extend(new_report(&new)?);
    rep.extend(anticommutation_report(&new));
    dirac_homomorphism(&mut rep, &new, opts, 2)?;
    let violations = new.basis.matrix_unit_violations();
    rep.check(
        "dirac.new.matrix-units",
        "E_ij E_kl = δ_jk E_il for the basis built from a_i, b_i",
        violations.is_empty(),
        format!("{} violations", violations.len()),
    );
    Ok(rep)
}

fn pauli(opts: &VerifyOptions) -> Result<VerifyReport> {
    let p = pauli_spectral()?;
    let mut rep = pauli_report(&p);
    let sig = Arc::clone(&p.sig);
    let mut r = rng(opts.seed ^ (3 << 32));
    let mut bad = 0;
    for _ in 0..opts.samples {
        let g = random_multivector(&mut r, &sig, false);
        let h = random_multivector(&mut r, &sig, false);
        let (mg, mh) = (p.matrix_of(&g)?, p.matrix_of(&h)?);
        if p.matrix_of(&(&g * &h))? != &mg * &mh || p.basis.from_central_matrix(&mg)? != g {
            bad += 1;
        }
    }
    rep.check(
        "pauli.homomorphism",
        format!("[gh] = [g][h] and g = Σ [g]_ij E_ij for {} random pairs in G(3)", opts.samples),
        bad == 0,
        format!("{bad} failing pairs"),
    );
    Ok(rep)
}

fn negative_g12() -> VerifyReport {
    let mut rep = VerifyReport::new("negative-g12");
    let w = make_local_witt(3).expect("m = 3");
    let one = Multivector::one(&w.sig);
    let c3 = w.partial_sum(3);
    rep.check(
        "negative-g12.timelike-row",
        "(c_1 + c_2 + c_3)^2 = 3, so (1,1,1)/√3 squares to +1",
        &c3 * &c3 == one.scale(&Scalar::int(3)),
        String::new(),
    );
    let d = &w.c[0] - &w.c[1];
    rep.check(
        "negative-g12.spacelike-row",
        "(c_1 - c_2)^2 = -1",
        &d * &d == -&one,
        String::new(),
    );
    let s = no_identification_g12();
    rep.check(
        "negative-g12.search-space",
        "2^9 sign matrices × 4^3 radicand choices examined",
        s.combinations == 512 * 64 && s.sign_matrices == 512 && s.radicand_choices == 64,
        format!("{} combinations", s.combinations),
    );
    rep.check(
        "negative-g12.no-frame",
        "no Hadamard-style map sends (c_1, c_2, c_3) to an orthonormal G(1,2) frame",
        s.frames_found == 0,
        format!(
            "{} timelike and {} spacelike normalisable rows; {} complete frames",
            s.timelike_rows, s.spacelike_rows, s.frames_found
        ),
    );
    rep
}

/// Coordinate matrix of a multivector under the preset named by `algebra`.
pub fn basis_for(algebra: &str) -> Result<SpectralBasis> {
    match algebra {
        "g11" => spectral_basis_nn(1),
        "g22" => spectral_basis_nn(2),
        "g33" => spectral_basis_nn(3),
        "g44" => spectral_basis_nn(4),
        "g13" => Ok(dirac_spectral_standard()?.basis),
        "g13new" => Ok(dirac_spectral_new()?.basis),
        "g3" => Err(Error::ExtractorUnavailable(
            "G(3) coordinates live in span{1, e123}; use `generate pauli`".into(),
        )),
        other => Err(Error::Schema(format!("unknown algebra {other:?}"))),
    }
}

pub fn signature_for(algebra: &str) -> Result<Arc<Signature>> {
    Ok(Arc::clone(basis_for(algebra)?.signature()))
}
