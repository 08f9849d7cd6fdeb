//! Acceptance suite: twelve criteria, one PASS/FAIL line each.
//! Exits nonzero if any criterion fails.

use std::fs;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use ccnr_core::criteria::{full_report, ppt_min_eigenvalue};
use ccnr_core::crossnorm::{
    gamma_bell_diagonal_closed, gamma_isotropic_closed, gamma_pure, gamma_werner_closed,
    robustness_pure_exact,
};
use ccnr_core::family::Family;
use ccnr_core::linalg::random::{random_orthogonal, random_unitary, seeded_rng};
use ccnr_core::linalg::{
    determinant, ferrers_determinant, ferrers_matrix, hermitian_eigenvalues, hs_norm, kron, Complex,
};
use ccnr_core::realign::{
    ccnr_tau, realign, realign_trace, tau_bell_diagonal_closed, tau_isotropic_closed,
    tau_qubit_family_closed, tau_werner_closed, violates_ccnr,
};
use ccnr_core::states::{
    bell_diagonal_state, isotropic_alpha, isotropic_state, partial_trace_b, qubit_family,
    qutrit_family, random_density, random_local_unitaries, random_pure, twirl_uu, twirl_uubar,
    werner_state, BellSpectrum,
};
use rand::Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn grid(start: f64, stop: f64, step: f64) -> Vec<f64> {
    let n = ((stop - start) / step).round() as usize;
    (0..=n)
        .map(|k| (start + k as f64 * step).min(stop))
        .collect()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

struct MaxErr(f64);

impl MaxErr {
    fn add(&mut self, got: f64, want: f64) -> f64 {
        let e = (got - want).abs();
        if e > self.0 || e.is_nan() {
            self.0 = e;
        }
        e
    }
}

fn random_simplex(rng: &mut impl Rng) -> BellSpectrum {
    let mut e = [0.0; 4];
    for x in &mut e {
        *x = -(1.0 - rng.random::<f64>()).ln();
    }
    let s: f64 = e.iter().sum();
    let mut l = e.map(|x| x / s);
    l[3] = (1.0 - l[0] - l[1] - l[2]).max(0.0);
    BellSpectrum::new(l).expect("normalized exponentials lie on the simplex")
}

fn c1_werner() -> Outcome {
    let t0 = Instant::now();
    let mut err = MaxErr(0.0);
    let mut n = 0;
    for d in 2..=5 {
        let df = d as f64;
        for f in grid(-1.0, 1.0, 0.05) {
            let rho = werner_state(d, f).map_err(|e| e.to_string())?;
            let want = (df * f - 1.0).abs() / df + 1.0 / df;
            let e = err.add(ccnr_tau(&rho), want);
            ensure(e <= 1e-9, || format!("d={d} f={f}: error {e:.2e}"))?;
            n += 1;
        }
    }
    let dt = t0.elapsed();
    ensure(dt < Duration::from_secs(10), || {
        format!("runtime {dt:?} exceeds 10 s")
    })?;
    Ok(format!(
        "{n} points, max error {:.1e}, {:.2} s",
        err.0,
        dt.as_secs_f64()
    ))
}

fn c2_isotropic() -> Outcome {
    let mut err = MaxErr(0.0);
    for d in 2..=5 {
        let inv_d = 1.0 / d as f64;
        let mut last_ok = None;
        let mut first_bad = None;
        for x in grid(0.0, 1.0, 0.05) {
            let rho = isotropic_state(d, x).map_err(|e| e.to_string())?;
            let tau = ccnr_tau(&rho);
            let closed = tau_isotropic_closed(d, x).map_err(|e| e.to_string())?;
            let e = err.add(tau, closed);
            ensure(e <= 1e-9, || format!("d={d} F={x}: error {e:.2e}"))?;
            if violates_ccnr(tau) {
                first_bad.get_or_insert(x);
            } else {
                ensure(first_bad.is_none(), || {
                    format!("d={d}: τ returns below 1 at F={x}")
                })?;
                last_ok = Some(x);
            }
        }
        let (lo, hi) = (last_ok.unwrap_or(f64::NAN), first_bad.unwrap_or(f64::NAN));
        ensure(
            lo <= inv_d + 1e-12 && hi > inv_d && hi - lo <= 0.05 + 1e-12,
            || format!("d={d}: crossing between {lo} and {hi}, expected around 1/d = {inv_d}"),
        )?;
    }
    Ok(format!(
        "max error {:.1e}, crossing at F = 1/d for d = 2..5",
        err.0
    ))
}

fn c3_bell() -> Outcome {
    let mut rng = seeded_rng(2003);
    let mut err = MaxErr(0.0);
    let mut spectra: Vec<BellSpectrum> = (0..500).map(|_| random_simplex(&mut rng)).collect();
    for l in [
        [0.5, 0.5, 0.0, 0.0],
        [0.5, 0.3, 0.2, 0.0],
        [0.25; 4],
        [1.0, 0.0, 0.0, 0.0],
    ] {
        spectra.push(BellSpectrum::new(l).map_err(|e| e.to_string())?);
    }
    for s in &spectra {
        let rho = bell_diagonal_state(s).map_err(|e| e.to_string())?;
        let tau = ccnr_tau(&rho);
        let e = err.add(tau, tau_bell_diagonal_closed(s));
        ensure(e <= 1e-10, || format!("{:?}: error {e:.2e}", s.lambda()))?;
        let m = s.max();
        if (m - 0.5).abs() > 1e-9 || m == 0.5 {
            ensure((tau <= 1.0 + 1e-9) == (m <= 0.5), || {
                format!("{:?}: τ = {tau} but max λ = {m}", s.lambda())
            })?;
        }
    }
    Ok(format!(
        "{} spectra, max error {:.1e}",
        spectra.len(),
        err.0
    ))
}

fn c4_qubit() -> Outcome {
    let mut err = MaxErr(0.0);
    let mut n = 0;
    for p in grid(0.0, 1.0, 0.02) {
        let tau = ccnr_tau(&qubit_family(p).map_err(|e| e.to_string())?);
        let closed = tau_qubit_family_closed(p).map_err(|e| e.to_string())?;
        let e = err.add(tau, closed);
        ensure(e <= 1e-9, || format!("p={p}: error {e:.2e}"))?;
        if p < 1.0 {
            ensure(tau > 1.0 + 1e-9, || format!("p={p}: τ = {tau} not above 1"))?;
        } else {
            ensure((tau - 1.0).abs() <= 1e-9, || format!("p=1: τ = {tau}"))?;
        }
        n += 1;
    }
    Ok(format!(
        "{n} points, max error {:.1e}, τ = 1 only at p = 1",
        err.0
    ))
}

fn c5_qutrit() -> Outcome {
    let mut err = MaxErr(0.0);
    let mut bound = 0;
    for alpha in grid(2.0, 5.0, 0.05) {
        let rho = qutrit_family(alpha).map_err(|e| e.to_string())?;
        let tau = ccnr_tau(&rho);
        let want = 19.0 / 21.0 + 2.0 / 21.0 * (19.0 - 15.0 * alpha + 3.0 * alpha * alpha).sqrt();
        let e = err.add(tau, want);
        ensure(e <= 1e-9, || format!("α={alpha}: error {e:.2e}"))?;
        if alpha > 3.0 + 1e-12 && alpha <= 4.0 + 1e-12 {
            let ppt = ppt_min_eigenvalue(&rho);
            ensure(ppt >= -1e-9 && violates_ccnr(tau), || {
                format!("α={alpha}: ppt floor {ppt:.2e}, τ = {tau}")
            })?;
            bound += 1;
        }
    }
    Ok(format!(
        "max error {:.1e}, {bound} bound-entangled points detected",
        err.0
    ))
}

fn c6_incomparability() -> Outcome {
    let err = |e: ccnr_core::Error| e.to_string();
    let fam = Family::Werner { d: 3, f: -1.0 };
    let r = full_report(&fam.state().map_err(err)?, Some(&fam)).map_err(err)?;
    ensure(
        r.tau_violated && r.ppt_violated && (r.tau - 5.0 / 3.0).abs() < 1e-9,
        || format!("Werner f=-1: τ = {}, ppt floor {}", r.tau, r.ppt_floor),
    )?;
    ensure(!r.reduction_violated, || {
        format!("Werner f=-1 reduction floor {}", r.reduction_floor)
    })?;

    let fam = Family::Werner {
        d: 3,
        f: -1.0 / 6.0,
    };
    let r = full_report(&fam.state().map_err(err)?, Some(&fam)).map_err(err)?;
    let gamma = r.gamma_closed.map(|g| g.value).unwrap_or(f64::NAN);
    ensure(!r.tau_violated && r.ppt_violated, || {
        format!("Werner f=-1/6: τ = {}, ppt floor {}", r.tau, r.ppt_floor)
    })?;
    ensure(
        (gamma - 7.0 / 6.0).abs() < 1e-12 && (r.tau - 5.0 / 6.0).abs() < 1e-9,
        || format!("Werner f=-1/6: γ = {gamma}, τ = {}", r.tau),
    )?;

    let fam = Family::Qutrit { alpha: 3.5 };
    let r = full_report(&fam.state().map_err(err)?, Some(&fam)).map_err(err)?;
    ensure(r.tau_violated && !r.ppt_violated, || {
        format!("qutrit α=3.5: τ = {}, ppt floor {}", r.tau, r.ppt_floor)
    })?;
    Ok("Werner d=3 f=-1/6 violates PPT only; qutrit α=3.5 violates τ only".into())
}

fn c7_pure() -> Outcome {
    let mut err = MaxErr(0.0);
    for (da, db) in [(2, 2), (3, 3), (2, 4)] {
        for seed in 0..100 {
            let psi = random_pure(da, db, 7000 + seed).map_err(|e| e.to_string())?;
            let rho = psi.projector();
            // Schmidt coefficients from the reduced state's spectrum.
            let p = hermitian_eigenvalues(&partial_trace_b(&rho)).map_err(|e| e.to_string())?;
            let s: f64 = p.iter().map(|x| x.max(0.0).sqrt()).sum();
            let e = err.add(ccnr_tau(&rho), s * s);
            ensure(e <= 1e-9, || {
                format!("dims ({da},{db}) seed {seed}: error {e:.2e}")
            })?;
            let g = gamma_pure(&psi).value;
            let r = robustness_pure_exact(&psi);
            ensure(
                (r - (g - 1.0)).abs() <= 1e-12 && (g - s * s).abs() <= 1e-9,
                || format!("dims ({da},{db}) seed {seed}: γ = {g}, E_R = {r}"),
            )?;
        }
    }
    Ok(format!("300 states, max error {:.1e}", err.0))
}

fn c8_majorization() -> Outcome {
    let mut worst = f64::INFINITY;
    let mut n = 0;
    let mut check = |g: f64, t: f64, what: String| {
        worst = worst.min(g - t);
        n += 1;
        ensure(g >= t - 1e-12, || format!("{what}: γ = {g} < τ = {t}"))
    };
    for d in 2..=5 {
        for f in grid(-1.0, 1.0, 0.05) {
            let g = gamma_werner_closed(d, f).map_err(|e| e.to_string())?.value;
            let t = tau_werner_closed(d, f).map_err(|e| e.to_string())?;
            check(g, t, format!("Werner d={d} f={f}"))?;
        }
        for x in grid(0.0, 1.0, 0.05) {
            let g = gamma_isotropic_closed(d, x)
                .map_err(|e| e.to_string())?
                .value;
            let t = tau_isotropic_closed(d, x).map_err(|e| e.to_string())?;
            check(g, t, format!("isotropic d={d} F={x}"))?;
        }
    }
    let mut rng = seeded_rng(2008);
    for _ in 0..500 {
        let s = random_simplex(&mut rng);
        check(
            gamma_bell_diagonal_closed(&s).value,
            tau_bell_diagonal_closed(&s),
            format!("Bell {:?}", s.lambda()),
        )?;
    }
    Ok(format!("{n} points, min γ − τ = {worst:.1e}"))
}

fn c9_corollaries() -> Outcome {
    let mut err = MaxErr(0.0);
    for d in 2..=5 {
        let df = d as f64;
        let d2 = df * df;
        for x in grid(0.0, 1.0, 0.05) {
            let rho = isotropic_state(d, x).map_err(|e| e.to_string())?;
            let tr = realign_trace(&rho).map_err(|e| e.to_string())?;
            let a = isotropic_alpha(d, x);
            let hs = hs_norm(realign(&rho).matrix());
            let e = err
                .add(tr.re, df * x)
                .max(err.add(tr.im, 0.0))
                .max(err.add(hs, (a * a * (d2 - 1.0) / d2 + 1.0 / d2).sqrt()));
            ensure(e <= 1e-10, || {
                format!("isotropic d={d} F={x}: error {e:.2e}")
            })?;
        }
        for f in grid(-1.0, 1.0, 0.05) {
            let rho = werner_state(d, f).map_err(|e| e.to_string())?;
            let tr = realign_trace(&rho).map_err(|e| e.to_string())?;
            let hs = hs_norm(realign(&rho).matrix());
            let want = ((1.0 + f * f) / (d2 - 1.0) - 2.0 * f / (df * (d2 - 1.0))).sqrt();
            let e = err
                .add(tr.re, (f + 1.0) / (df + 1.0))
                .max(err.add(tr.im, 0.0))
                .max(err.add(hs, want));
            ensure(e <= 1e-10, || format!("Werner d={d} f={f}: error {e:.2e}"))?;
        }
    }
    Ok(format!(
        "traces and Hilbert-Schmidt norms, max error {:.1e}",
        err.0
    ))
}

fn c10_ferrers() -> Outcome {
    let mut rng = seeded_rng(2010);
    let mut worst: f64 = 0.0;
    for k in 0..100 {
        let n = 1 + k % 8;
        let a: Vec<Complex> = (0..n)
            .map(|_| {
                let r: f64 = rng.random_range(0.1..4.0);
                let phi: f64 = rng.random_range(0.0..std::f64::consts::TAU);
                Complex::from_polar(r, phi)
            })
            .collect();
        let closed = ferrers_determinant(&a).map_err(|e| e.to_string())?;
        let direct = determinant(&ferrers_matrix(&a)).map_err(|e| e.to_string())?;
        let rel = (closed - direct).norm() / closed.norm().max(direct.norm());
        worst = worst.max(rel);
        ensure(rel <= 1e-10, || format!("n={n}: relative error {rel:.2e}"))?;
    }
    Ok(format!(
        "100 vectors, n ≤ 8, max relative error {worst:.1e}"
    ))
}

fn c11_invariance() -> Outcome {
    let err = |e: ccnr_core::Error| e.to_string();
    let mut worst: f64 = 0.0;
    for k in 0..50u64 {
        let (da, db) = [(2, 2), (2, 3), (3, 3)][k as usize % 3];
        let rho = random_density(da, db, 1 + k as usize % 4, 11_000 + k).map_err(err)?;
        let (u, v) = random_local_unitaries(da, db, 12_000 + k);
        let e = (ccnr_tau(&rho) - ccnr_tau(&rho.conjugate_local(&u, &v).map_err(err)?)).abs();
        worst = worst.max(e);
        ensure(e <= 1e-9, || format!("local unitary draw {k}: {e:.2e}"))?;

        let d = 2 + k as usize % 2;
        let sigma = random_density(d, d, 3, 13_000 + k).map_err(err)?;
        let mut rng = seeded_rng(14_000 + k);
        let w = random_unitary(&mut rng, d);
        let uu = kron(&w, &w).map_err(err)?;
        let uubar = kron(&w, &w.conj()).map_err(err)?;
        let t = twirl_uu(&sigma).map_err(err)?;
        let tb = twirl_uubar(&sigma).map_err(err)?;
        let checks = [
            twirl_uu(&t).map_err(err)?.matrix().max_abs_diff(t.matrix()),
            twirl_uubar(&tb)
                .map_err(err)?
                .matrix()
                .max_abs_diff(tb.matrix()),
            twirl_uu(&sigma.conjugate(&uu).map_err(err)?)
                .map_err(err)?
                .matrix()
                .max_abs_diff(t.matrix()),
            twirl_uubar(&sigma.conjugate(&uubar).map_err(err)?)
                .map_err(err)?
                .matrix()
                .max_abs_diff(tb.matrix()),
        ];
        for (j, e) in checks.into_iter().enumerate() {
            worst = worst.max(e);
            ensure(e <= 1e-9, || format!("twirl check {j}, draw {k}: {e:.2e}"))?;
        }

        let o = random_orthogonal(&mut rng, d);
        let moved = sigma.conjugate(&kron(&o, &o).map_err(err)?).map_err(err)?;
        let e = (ccnr_tau(&sigma) - ccnr_tau(&moved)).abs();
        worst = worst.max(e);
        ensure(e <= 1e-9, || {
            format!("real basis change, draw {k}: {e:.2e}")
        })?;
    }
    Ok(format!("50 draws each, max deviation {worst:.1e}"))
}

fn ccnr(args: &[&str]) -> Result<std::process::Output, String> {
    Command::new(env!("CARGO_BIN_EXE_ccnr"))
        .args(args)
        .output()
        .map_err(|e| format!("cannot run ccnr: {e}"))
}

fn c12_cli() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = |name: &str| dir.path().join(name).to_string_lossy().into_owned();
    let cases: [(&str, &[&str], Family); 5] = [
        (
            "werner",
            &["-0.5", "--d", "3"],
            Family::Werner { d: 3, f: -0.5 },
        ),
        (
            "isotropic",
            &["0.8", "--d", "4"],
            Family::Isotropic {
                d: 4,
                fidelity: 0.8,
            },
        ),
        (
            "bell",
            &["0.6,0.2,0.1,0.1"],
            Family::BellDiagonal(
                BellSpectrum::new([0.6, 0.2, 0.1, 0.1]).map_err(|e| e.to_string())?,
            ),
        ),
        ("qubit", &["0.3"], Family::Qubit { p: 0.3 }),
        ("qutrit", &["4"], Family::Qutrit { alpha: 4.0 }),
    ];
    let mut worst: f64 = 0.0;
    for (name, params, fam) in cases {
        let out = path(&format!("{name}.json"));
        let mut args = vec!["gen", name];
        args.extend_from_slice(params);
        args.extend_from_slice(&["--out", &out]);
        let g = ccnr(&args)?;
        ensure(g.status.success(), || {
            format!("gen {name} failed: {}", String::from_utf8_lossy(&g.stderr))
        })?;
        let c = ccnr(&["check", &out, "--json"])?;
        ensure(c.status.success(), || format!("check {name} failed"))?;
        let v: serde_json::Value = serde_json::from_slice(&c.stdout).map_err(|e| e.to_string())?;
        let tau = v["tau"].as_f64().ok_or("no tau in report")?;
        let closed = fam.tau_closed().map_err(|e| e.to_string())?;
        let e = (tau - closed).abs();
        worst = worst.max(e);
        ensure(e <= 1e-9, || {
            format!("{name}: τ = {tau}, closed form {closed}")
        })?;
    }
    let (a, b) = (path("a.csv"), path("b.csv"));
    for out in [&a, &b] {
        let s = ccnr(&[
            "sweep",
            "isotropic",
            "--d",
            "3",
            "--range",
            "0:1:0.01",
            "--out",
            out,
        ])?;
        ensure(s.status.success(), || "sweep failed".into())?;
    }
    let (x, y) = (
        fs::read(&a).map_err(|e| e.to_string())?,
        fs::read(&b).map_err(|e| e.to_string())?,
    );
    ensure(!x.is_empty() && x == y, || {
        "sweep output differs between runs".into()
    })?;
    Ok(format!(
        "5 round trips, max error {worst:.1e}; sweep CSV byte-identical ({} bytes)",
        x.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("Werner tau closed form", c1_werner),
        ("isotropic tau closed form", c2_isotropic),
        ("Bell-diagonal tau closed form", c3_bell),
        ("two-qubit family tau", c4_qubit),
        ("two-qutrit family tau and bound entanglement", c5_qutrit),
        ("criterion incomparability", c6_incomparability),
        ("pure-state identities", c7_pure),
        ("cross norm majorizes tau", c8_majorization),
        ("realigned traces and norms", c9_corollaries),
        ("Ferrers determinant", c10_ferrers),
        ("invariance suite", c11_invariance),
        ("command-line round trip", c12_cli),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", k + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
