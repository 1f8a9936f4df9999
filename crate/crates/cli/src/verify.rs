//! Property suites run by `cube-sections verify`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use cube_sections::criterion::{
    build_s1, build_s2, decide, default_eps, eval_sum, known_pieces, p_poly, t_of_z, threshold_z,
    z_of_t, Classifier, Criterion, ExtremalityKind, SubdiagonalSpec,
};
use cube_sections::exactpoly::rational::{from_f64, int, rat, to_f64, Rational};
use cube_sections::rho::{
    assert_closed_forms, format_sig6, reference_row, relative_error, solve_rho, table, table_eps,
    REFERENCE_RHO_TABLE,
};
use cube_sections::volume::{
    grad_sum, hessian_combo_sum, hessian_outside_sum, polya_volume, q1_integral, q2_integral,
    scaled_trig_defect, sinc_power_integral, trig_defect, vertex_sum_exact, vertex_sum_float,
    vertex_sum_volume, Direction, QuadratureConfig, SectionQuery,
};
use cube_sections::volume::quadrature::GaussRule;

use crate::args::{Suite, VerifyArgs};

const SEED: u64 = 0x5eed;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn check(suite: &'static str, name: &'static str, result: Result<String, String>) -> Check {
    match result {
        Ok(detail) => Check { suite, name, passed: true, detail },
        Err(detail) => Check { suite, name, passed: false, detail },
    }
}

pub fn run(args: &VerifyArgs) -> Vec<Check> {
    let mut out = Vec::new();
    let all = args.suite == Suite::All;
    if all || args.suite == Suite::Formulas {
        out.extend(formulas(args.samples));
    }
    if all || args.suite == Suite::Criteria {
        out.extend(criteria());
    }
    if all || args.suite == Suite::Rho {
        out.extend(rho(args.dmax));
    }
    if all || args.suite == Suite::Props {
        out.extend(props());
    }
    out
}

fn unit(a: &[f64]) -> Vec<f64> {
    let n = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    a.iter().map(|x| x / n).collect()
}

fn random_unit(rng: &mut ChaCha8Rng, active: usize, d: usize) -> Vec<f64> {
    let mut a: Vec<f64> = (0..active).map(|_| rng.gen_range(0.05..1.0)).collect();
    a.resize(d, 0.0);
    unit(&a)
}

fn query(a: Vec<f64>, t: f64) -> Result<SectionQuery, String> {
    let dir = Direction::new(a).map_err(|e| e.to_string())?;
    SectionQuery::new(dir, t).map_err(|e| e.to_string())
}

fn per_norm(a: &[f64], t: f64) -> Result<f64, String> {
    let ar: Vec<Rational> = a.iter().map(|&x| from_f64(x)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    let sigma: Rational = ar.iter().sum();
    let b = sigma / int(2) - from_f64(t).map_err(|e| e.to_string())?;
    Ok(to_f64(&vertex_sum_exact(&ar, &b).map_err(|e| e.to_string())?))
}

fn formulas(samples: u32) -> Vec<Check> {
    let s = "formulas";
    let cfg = QuadratureConfig::default();
    let mut out = Vec::new();

    out.push(check(s, "vertex sum equals the sinc integral", (|| {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        let mut worst = 0.0f64;
        for _ in 0..samples {
            let active = rng.gen_range(3..=8);
            let d = active + rng.gen_range(0..=2);
            let a = random_unit(&mut rng, active, d);
            let sigma: f64 = a.iter().sum();
            let q = query(a, rng.gen_range(0.0..0.95) * sigma / 2.0)?;
            let v = vertex_sum_volume(&q).map_err(|e| e.to_string())?;
            let p = polya_volume(&q, &cfg).map_err(|e| e.to_string())?;
            worst = worst.max((v - p).abs());
        }
        if worst < 1e-6 {
            Ok(format!("{samples} samples, max |diff| = {worst:.2e}"))
        } else {
            Err(format!("max |diff| = {worst:.2e} ≥ 1e-6"))
        }
    })()));

    out.push(check(s, "known central sections", (|| {
        let hex = 3.0 * 3f64.sqrt() / 4.0;
        for (d, want) in [(2u32, 2f64.sqrt()), (3, hex)] {
            let q = SectionQuery::new(Direction::subdiagonal(d, d).map_err(|e| e.to_string())?, 0.0)
                .map_err(|e| e.to_string())?;
            let v = vertex_sum_volume(&q).map_err(|e| e.to_string())?;
            let p = polya_volume(&q, &cfg).map_err(|e| e.to_string())?;
            if (v - want).abs() >= 1e-9 || (p - want).abs() >= 1e-9 {
                return Err(format!("d = {d}: sum {v}, integral {p}, expected {want}"));
            }
        }
        Ok("sqrt(2) and 3*sqrt(3)/4 to 1e-9".into())
    })()));

    out.push(check(s, "second-derivative sums equal their integrals", (|| {
        let mut worst = 0.0f64;
        let mut count = 0;
        for n in 4..=8u32 {
            let mut k = 0;
            loop {
                let t = 0.05 * f64::from(k);
                if 4.0 * t * t >= f64::from(n) {
                    break;
                }
                let z = from_f64(z_of_t(n, t).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
                let q1 = q1_integral(n, t, &cfg).map_err(|e| e.to_string())?;
                let q2 = q2_integral(n, t, &cfg).map_err(|e| e.to_string())?;
                let h1 = hessian_combo_sum(n, &z).map_err(|e| e.to_string())?.to_f64();
                let h2 = hessian_outside_sum(n, &z).map_err(|e| e.to_string())?.to_f64();
                worst = worst.max((q1 - h1).abs()).max((q2 - h2).abs());
                count += 1;
                k += 1;
            }
        }
        if worst < 1e-6 {
            Ok(format!("{count} grid points, max |diff| = {worst:.2e}"))
        } else {
            Err(format!("max |diff| = {worst:.2e} ≥ 1e-6"))
        }
    })()));

    out.push(check(s, "gradient matches central differences", (|| {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
        let h = 1e-5;
        let mut worst = 0.0f64;
        for _ in 0..20 {
            let d = rng.gen_range(3..=7);
            let a = random_unit(&mut rng, d, d);
            let sigma: f64 = a.iter().sum();
            let t = rng.gen_range(0.0..0.8) * sigma / 2.0;
            let q = query(a.clone(), t)?;
            let j = rng.gen_range(1..=d);
            let g = grad_sum(&q, j).map_err(|e| e.to_string())?;
            let mut up = a.clone();
            let mut dn = a;
            up[j - 1] += h;
            dn[j - 1] -= h;
            let fd = (per_norm(&up, t)? - per_norm(&dn, t)?) / (2.0 * h);
            worst = worst.max((g - fd).abs() / g.abs().max(1e-3));
        }
        if worst < 1e-5 {
            Ok(format!("20 points, max relative error {worst:.2e}"))
        } else {
            Err(format!("max relative error {worst:.2e} ≥ 1e-5"))
        }
    })()));
    out
}

fn brute_force(n: u32, z: &Rational, weighted: bool) -> Result<Rational, String> {
    let mut total = Rational::from_integer(0.into());
    for mask in 0u32..(1 << n) {
        let k = mask.count_ones();
        let kz = int(i64::from(k));
        if &kz > z {
            continue;
        }
        let mut term = num_pow(z - &kz, n - 3);
        if weighted {
            term *= p_poly(k, n).map_err(|e| e.to_string())?.eval(z);
        }
        if k % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}

fn num_pow(x: Rational, e: u32) -> Rational {
    (0..e).fold(int(1), |acc, _| acc * &x)
}

fn criteria() -> Vec<Check> {
    let s = "criteria";
    let mut out = Vec::new();

    out.push(check(s, "built pieces equal the hand-expanded ones", (|| {
        let known = known_pieces();
        for k in &known {
            let pw = match k.which {
                Criterion::S1 => build_s1(k.n),
                Criterion::S2 => build_s2(k.n),
            }
            .map_err(|e| e.to_string())?;
            if pw.pieces()[k.piece] != k.poly {
                return Err(format!("{:?} n = {} piece {}: got {}", k.which, k.n, k.piece, pw.pieces()[k.piece]));
            }
        }
        Ok(format!("{} pieces", known.len()))
    })()));

    out.push(check(s, "criterion sums equal vertex enumeration", (|| {
        for n in 4..=10u32 {
            for k in 1..=(5 * n) {
                let z = rat(i64::from(k), 10);
                for weighted in [true, false] {
                    let fast = eval_sum(n, &z, weighted).map_err(|e| e.to_string())?;
                    if fast != brute_force(n, &z, weighted)? {
                        return Err(format!("n = {n}, z = {z}, weighted = {weighted}"));
                    }
                }
            }
        }
        Ok("n = 4..10 on a 1/10 grid".into())
    })()));

    out.push(check(s, "signs below the threshold", (|| {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED + 2);
        for n in 4..=40u32 {
            let th = threshold_z(n).map_err(|e| e.to_string())?;
            let s1 = build_s1(n).map_err(|e| e.to_string())?;
            let s2 = build_s2(n).map_err(|e| e.to_string())?;
            for _ in 0..10 {
                let z = from_f64(th * rng.gen_range(0.001..1.0)).map_err(|e| e.to_string())?;
                let a = s1.sign_at(&z).map_err(|e| e.to_string())?;
                let b = s2.sign_at(&z).map_err(|e| e.to_string())?;
                if a >= 0 || b <= 0 {
                    return Err(format!("n = {n}, z = {}: signs ({a}, {b})", to_f64(&z)));
                }
            }
        }
        Ok("S1 < 0 and S2 > 0 for n = 4..40".into())
    })()));

    out.push(check(s, "classification inside the threshold window", (|| {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED + 3);
        let eps = default_eps();
        for n in 4..=20u32 {
            let lo = t_of_z(n, threshold_z(n).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
            let hi = f64::from(n).sqrt() / 2.0;
            let diag = Classifier::new(SubdiagonalSpec::diagonal(n).map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?;
            let sub = Classifier::new(SubdiagonalSpec::new(n, 25).map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?;
            for _ in 0..50 {
                let t = rng.gen_range(lo..hi);
                if t <= lo {
                    continue;
                }
                let a = diag.classify_t(t, &eps).map_err(|e| e.to_string())?.kind;
                let b = sub.classify_t(t, &eps).map_err(|e| e.to_string())?.kind;
                if a != ExtremalityKind::StrictLocalMax || b != ExtremalityKind::NotExtremal {
                    return Err(format!("n = {n}, t = {t}: {a}, {b}"));
                }
            }
        }
        Ok("diagonal maxima and sub-diagonal non-extrema for n = 4..20".into())
    })()));

    out.push(check(s, "decision table is consistent", {
        use ExtremalityKind::*;
        let flip = |k: ExtremalityKind| match k {
            StrictLocalMax => StrictLocalMin,
            StrictLocalMin => StrictLocalMax,
            other => other,
        };
        let mut bad = None;
        for a in -1i8..=1 {
            for b in -1i8..=1 {
                let (dg, sub) = (decide(true, a, b), decide(false, a, b));
                let ok = dg == decide(true, a, 0)
                    && sub == decide(false, b, a)
                    && flip(sub) == decide(false, -a, -b)
                    && flip(dg) == decide(true, -a, -b)
                    && (a * b >= 0 || sub == NotExtremal)
                    && ((a != 0 && b != 0) || sub == Inconclusive);
                if !ok && bad.is_none() {
                    bad = Some(format!("signs ({a}, {b}): {dg}, {sub}"));
                }
            }
        }
        bad.map_or(Ok("18 sign combinations".into()), Err)
    }));

    out.push(check(s, "threshold grows like n / ln n", (|| {
        for n in 50..=300u32 {
            let r = threshold_z(n).map_err(|e| e.to_string())? * f64::from(n).ln() / f64::from(n - 3);
            if !(0.8..=1.25).contains(&r) {
                return Err(format!("n = {n}: ratio {r}"));
            }
        }
        Ok("ratio within [0.8, 1.25] for n = 50..300".into())
    })()));
    out
}

fn rho(dmax: u32) -> Vec<Check> {
    let s = "rho";
    let mut out = Vec::new();
    let eps = table_eps();

    out.push(check(s, "closed forms", assert_closed_forms().map(|_| "agree to 1e-12".into()).map_err(|e| e.to_string())));

    out.push(check(s, "sign patterns", (|| {
        let rows = table(4, dmax.max(4), &eps).map_err(|e| e.to_string())?;
        for (d, r) in &rows {
            match r {
                Ok(t) if t.pattern_ok => {}
                Ok(_) => return Err(format!("d = {d}: ordering not certified")),
                Err(e) => return Err(format!("d = {d}: {e}")),
            }
        }
        Ok(format!("pattern_ok for d = 4..{}", dmax.max(4)))
    })()));

    out.push(check(s, "table matches the reference values", (|| {
        let top = dmax.min(35);
        if top < 8 {
            return Ok("no reference rows below d = 8".into());
        }
        let mut worst = 0.0f64;
        for (d, r) in table(8, top, &eps).map_err(|e| e.to_string())? {
            let t = r.map_err(|e| e.to_string())?;
            let reference = reference_row(d).ok_or(format!("no reference row for d = {d}"))?;
            let (m, c, p) = t.values();
            for (x, want) in [(m, reference.0), (c, reference.1), (p, reference.2)] {
                let e = relative_error(want, x);
                worst = worst.max(e);
                if format_sig6(x) != format_sig6(want) || e >= 5e-6 {
                    return Err(format!("d = {d}: {} vs {}", format_sig6(x), format_sig6(want)));
                }
            }
        }
        Ok(format!("{} rows, worst relative error {worst:.2e}", REFERENCE_RHO_TABLE.iter().filter(|r| r.0 <= top).count()))
    })()));

    out.push(check(s, "exact zeros", (|| {
        let four = solve_rho(4, &eps).map_err(|e| e.to_string())?;
        let five = solve_rho(5, &eps).map_err(|e| e.to_string())?;
        let want = [
            (four.rho_plus.exact().cloned(), rat(3, 4)),
            (four.rho_circ.exact().cloned(), rat(4, 3)),
            (five.rho_plus.exact().cloned(), int(1)),
            (five.rho_minus.exact().cloned(), int(2)),
        ];
        for (got, w) in want {
            if got.as_ref() != Some(&w) {
                return Err(format!("expected exactly {w}, got {got:?}"));
            }
        }
        Ok("3/4, 4/3, 1, 2".into())
    })()));
    out
}

fn props() -> Vec<Check> {
    let s = "props";
    let mut out = Vec::new();

    out.push(check(s, "Brunn unimodality", (|| {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED + 4);
        for _ in 0..20 {
            let d = rng.gen_range(2..=8);
            let active = rng.gen_range(2..=d);
            let a = random_unit(&mut rng, active, d);
            let limit = (d as f64).sqrt() / 2.0;
            let mut prev = f64::INFINITY;
            for k in 0..100 {
                let t = limit * f64::from(k) / 100.0;
                let v = vertex_sum_volume(&query(a.clone(), t)?).map_err(|e| e.to_string())?;
                if v > prev + 1e-10 {
                    return Err(format!("a = {a:?}, t = {t}: {v} > {prev}"));
                }
                prev = v;
            }
        }
        Ok("20 directions × 100 distances".into())
    })()));

    out.push(check(s, "Fubini normalization", {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED + 5);
        let rule = GaussRule::new(8);
        let mut worst = 0.0f64;
        for _ in 0..20 {
            let d = rng.gen_range(2..=7);
            let active = rng.gen_range(2..=d);
            let a = random_unit(&mut rng, active, d);
            let act: Vec<f64> = a.iter().copied().filter(|&x| x > 0.0).collect();
            let sigma: f64 = act.iter().sum();
            let mut knots: Vec<f64> = (0u32..1 << act.len())
                .map(|m| sigma / 2.0 - (0..act.len()).filter(|i| m >> i & 1 == 1).map(|i| act[i]).sum::<f64>())
                .filter(|&t| t > 0.0)
                .collect();
            knots.push(0.0);
            knots.sort_by(f64::total_cmp);
            knots.dedup();
            let v = |t: f64| vertex_sum_float(&act, sigma / 2.0 - t).unwrap_or(f64::NAN);
            let total: f64 = knots.windows(2).map(|w| rule.panel(&v, w[0], w[1]).0).sum();
            let gap = (2.0 * total - 1.0).abs();
            // NaN marks a failed evaluation
            worst = if gap.is_nan() { f64::INFINITY } else { worst.max(gap) };
        }
        if worst < 1e-6 {
            Ok(format!("20 directions, max |∫V − 1| = {worst:.2e}"))
        } else {
            Err(format!("max |∫V − 1| = {worst:.2e}"))
        }
    }));

    out.push(check(s, "scaling covariance", (|| {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED + 6);
        for _ in 0..50 {
            let d = rng.gen_range(2..=7);
            let a: Vec<f64> = (0..d).map(|_| f64::from(rng.gen_range(1u32..30))).collect();
            let c = f64::from(rng.gen_range(1u32..9)) / 4.0;
            let t = rng.gen_range(0.0..0.9) * c.min(1.0) * a.iter().sum::<f64>() / 2.0;
            let scaled: Vec<f64> = a.iter().map(|x| c * x).collect();
            let lhs = vertex_sum_volume(&query(scaled, t)?).map_err(|e| e.to_string())?;
            let rhs = vertex_sum_volume(&query(a.clone(), t / c)?).map_err(|e| e.to_string())?;
            if (lhs - rhs).abs() > 1e-12 * (1.0 + rhs.abs()) {
                return Err(format!("a = {a:?}, c = {c}: {lhs} vs {rhs}"));
            }
        }
        Ok("50 dyadic scalings".into())
    })()));

    out.push(check(s, "permutation invariance", (|| {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED + 7);
        for _ in 0..50 {
            let d = rng.gen_range(2..=7);
            let a: Vec<Rational> = (0..d).map(|_| int(rng.gen_range(1..30))).collect();
            let sigma: Rational = a.iter().sum();
            let b = &sigma * rat(rng.gen_range(0..1000), 1000);
            let mut p = a.clone();
            for i in (1..p.len()).rev() {
                p.swap(i, rng.gen_range(0..=i));
            }
            let lhs = vertex_sum_exact(&a, &b).map_err(|e| e.to_string())?;
            let rhs = vertex_sum_exact(&p, &b).map_err(|e| e.to_string())?;
            if lhs != rhs {
                return Err(format!("a = {a:?}"));
            }
        }
        Ok("50 exact permutations".into())
    })()));

    out.push(check(s, "central sections stay below sqrt(2)", (|| {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED + 8);
        for _ in 0..1000 {
            let d = rng.gen_range(2..=9);
            let active = rng.gen_range(2..=d);
            let a = random_unit(&mut rng, active, d);
            let v = vertex_sum_volume(&query(a.clone(), 0.0)?).map_err(|e| e.to_string())?;
            if v > 2f64.sqrt() + 1e-9 {
                return Err(format!("a = {a:?}: {v}"));
            }
        }
        Ok("1000 random unit directions".into())
    })()));

    out.push(check(s, "trigonometric inequalities", (|| {
        for k in 1..=10_000 {
            let x = f64::from(k) / 100.0;
            if trig_defect(x) >= 0.0 {
                return Err(format!("defect non-negative at s = {x}"));
            }
        }
        for (n, start) in [(5u32, 4.0), (6, 0.0), (7, 0.0), (8, 0.0)] {
            let mut prev = f64::NEG_INFINITY;
            for k in 1..=2000 {
                let x = start + f64::from(k) / 100.0;
                let v = scaled_trig_defect(n, x);
                if v <= prev {
                    return Err(format!("n = {n}: not increasing at s = {x}"));
                }
                prev = v;
            }
        }
        let e = sinc_power_integral();
        if e.value >= 0.0 || e.error >= 1e-8 {
            return Err(format!("integral {} ± {}", e.value, e.error));
        }
        Ok(format!("integral over [0, 2π] = {:.6}", e.value))
    })()));
    out
}
