//! One line per acceptance criterion: PASS/FAIL, elapsed time, limit.

use std::time::{Duration, Instant};

use num::BigInt;
use wittkit::report::Status;
use wittkit::*;

struct Outcome {
    ok: bool,
    note: String,
}

fn criterion(n: usize, title: &str, limit: Duration, run: impl FnOnce() -> Outcome) -> bool {
    let t = Instant::now();
    let out = run();
    let elapsed = t.elapsed();
    let ok = out.ok && elapsed <= limit;
    println!(
        "criterion {n:>2}: {} — {title} ({:.3}s, limit {}s){}",
        if ok { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        limit.as_secs(),
        if out.note.is_empty() { String::new() } else { format!(" [{}]", out.note) },
    );
    ok
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn all_pass(rep: &VerifyReport, prefix: &str, expected: Option<usize>) -> Outcome {
    let picked: Vec<_> = rep.checks.iter().filter(|c| c.id.starts_with(prefix)).collect();
    let failed: Vec<_> = picked.iter().filter(|c| c.status == Status::Fail).map(|c| c.id.as_str()).collect();
    let count_ok = expected.map_or(!picked.is_empty(), |n| picked.len() == n);
    Outcome {
        ok: failed.is_empty() && count_ok,
        note: format!("{} checks under {prefix}, failing {failed:?}", picked.len()),
    }
}

fn main() {
    let opts = VerifyOptions::default();
    let mut results = Vec::new();

    results.push(criterion(1, "multiplication table of a, b, ab, ba in G(1,1)", secs(1), || {
        let rep = run_suite(Suite::Table1, &opts).unwrap();
        all_pass(&rep, "table1.", Some(16))
    }));

    results.push(criterion(2, "spectral arrays for n = 1, 2 and the matrix-unit law", secs(5), || {
        let sb1 = spectral_basis_nn(1).unwrap();
        let sb2 = spectral_basis_nn(2).unwrap();
        let w1 = make_global_witt(1).unwrap();
        let w2 = make_global_witt(2).unwrap();
        let (a, b) = (&w1.a[0], &w1.b[0]);
        let n1 = [[b * a, b.clone()], [a.clone(), a * b]];
        let n1_ok = (0..2).all(|i| (0..2).all(|j| sb1.unit(i, j) == &n1[i][j]));
        let (a1, a2, b1, b2) = (&w2.a[0], &w2.a[1], &w2.b[0], &w2.b[1]);
        let (u1, u2, u1d, u2d) = (w2.u(0), w2.u(1), w2.u_dagger(0), w2.u_dagger(1));
        let n2 = [
            [&u1 * &u2, b1 * &u2, b2 * &u1, b2 * b1],
            [a1 * &u2, &u1d * &u2, a1 * b2, -&(b2 * &u1d)],
            [a2 * &u1, a2 * b1, &u1 * &u2d, b1 * &u2d],
            [a1 * a2, -&(a2 * &u1d), a1 * &u2d, &u1d * &u2d],
        ];
        let n2_ok = (0..4).all(|i| (0..4).all(|j| sb2.unit(i, j) == &n2[i][j]));
        let laws = sb1.matrix_unit_violations().is_empty() && sb2.matrix_unit_violations().is_empty();
        Outcome {
            ok: n1_ok && n2_ok && laws,
            note: format!("n=1 array {n1_ok}, n=2 array {n2_ok}, unit law {laws}"),
        }
    }));

    results.push(criterion(3, "[gh] = [g][h] for 100 random pairs in G(1,1) and G(2,2)", secs(30), || {
        let mut r = wittkit::random::rng(opts.seed);
        let mut bad = 0;
        for n in [1, 2] {
            let sb = spectral_basis_nn(n).unwrap();
            let sig = sb.signature().clone();
            for _ in 0..100 {
                let g = wittkit::random::random_multivector(&mut r, &sig, false);
                let h = wittkit::random::random_multivector(&mut r, &sig, false);
                let lhs = sb.to_matrix(&(&g * &h)).unwrap();
                let rhs = &sb.to_matrix(&g).unwrap() * &sb.to_matrix(&h).unwrap();
                if lhs != rhs {
                    bad += 1;
                }
            }
        }
        Outcome {
            ok: bad == 0,
            note: format!("{bad} failing pairs of 200"),
        }
    }));

    results.push(criterion(4, "local duality for m = 2…8 and the G(1,7) Lorentz frame", secs(30), || {
        let mut rep = VerifyReport::new("local");
        for m in 2..=8 {
            rep.extend(wittkit::witt_local::check_local_duality(&make_local_witt(m).unwrap()));
        }
        all_pass(&rep, "m", Some(35))
    }));

    results.push(criterion(5, "ΩΩᵀ = 2^k·id for k ≤ 6, det Ω for k ≤ 5", secs(60), || {
        let gram = (1..=6).all(|k| gram_check(k).unwrap().all_passed());
        let printed = [1u32, 4, 12, 32, 80];
        let dets = (1..=5).all(|k| det_omega(k).unwrap() == -num::pow(BigInt::from(2), printed[k - 1] as usize));
        Outcome {
            ok: gram && dets,
            note: format!("gram {gram}, determinants {dets}"),
        }
    }));

    results.push(criterion(6, "2^8 √7 e_1 f_1 ⋯ f_7 = -2^12 c_1 ∧ ⋯ ∧ c_8", secs(10), || {
        let fm = hadamard_identification(3).unwrap();
        let w = make_local_witt(8).unwrap();
        let lhs = Multivector::product(&w.sig, &fm.rows)
            .unwrap()
            .scale(&(&Scalar::int(256) * &Scalar::sqrt(7)));
        let rhs = w.top_wedge().scale(&Scalar::int(-4096));
        Outcome {
            ok: fm.holds() && lhs == rhs && lhs.grades() == vec![8],
            note: String::new(),
        }
    }));

    results.push(criterion(7, "Ω_4j Ω_4j* = 4·id and the complex frame has signature (2,2)", secs(1), || {
        let oj = omega(2, Variant::ComplexPlain).unwrap().entries;
        let herm = (&oj * &oj.conj_transpose()).identity_multiple() == Some(Scalar::int(4));
        let fm = complex_identification_g22().unwrap();
        let sig = fm.frame_signature();
        Outcome {
            ok: herm && fm.holds() && sig == Some((2, 2)),
            note: format!("hermitian {herm}, signature {sig:?}"),
        }
    }));

    results.push(criterion(8, "Dirac idempotents, both Dirac representations, Pauli matrices", secs(10), || {
        let dirac = run_suite(Suite::Dirac, &opts).unwrap();
        let pauli = run_suite(Suite::Pauli, &opts).unwrap();
        let annihilate = dirac.find("dirac.idem.annihilate").map(|c| c.status) == Some(Status::Pass);
        let anticommute = dirac.checks.iter().filter(|c| c.id.contains(".anticommute.g")).count();
        let ok = dirac.all_passed() && pauli.all_passed() && annihilate && anticommute == 32;
        Outcome {
            ok,
            note: format!(
                "dirac {} pass / {} fail, pauli {} pass / {} fail",
                dirac.summary().pass,
                dirac.summary().fail,
                pauli.summary().pass,
                pauli.summary().fail
            ),
        }
    }));

    results.push(criterion(9, "no Hadamard-style G(1,2) frame among 2^9 × 4^3 candidates", secs(10), || {
        let s = no_identification_g12();
        Outcome {
            ok: s.combinations == 32768 && s.frames_found == 0,
            note: format!("{} combinations, {} frames", s.combinations, s.frames_found),
        }
    }));

    results.push(criterion(10, "exactly two documented conflicts, each with a correction", secs(60), || {
        let rep = run_suite(Suite::All, &opts).unwrap();
        let conflicts: Vec<_> = rep.checks.iter().filter(|c| c.status == Status::Conflict).collect();
        let ids: Vec<&str> = conflicts.iter().map(|c| c.id.as_str()).collect();
        let f4 = conflicts
            .iter()
            .any(|c| c.id.ends_with(".f4") && c.detail.contains("coefficient of c_5 is"));
        let g3 = conflicts
            .iter()
            .any(|c| c.id == "dirac.new.gamma3" && c.detail.contains("computed [γ_3]"));
        Outcome {
            ok: conflicts.len() == 2 && f4 && g3 && rep.all_passed(),
            note: format!("{ids:?}"),
        }
    }));

    let passed = results.iter().filter(|ok| **ok).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed != results.len() {
        std::process::exit(1);
    }
}
