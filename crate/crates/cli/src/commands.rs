//! One function per subcommand, each producing an [`Outcome`].

use std::cmp::Ordering;

use serde_json::{json, Value};

use cube_sections::criterion::{
    default_eps, t_of_z, z_of_t, Classifier, Extremality, SubdiagonalSpec,
};
use cube_sections::exactpoly::rational::{from_f64, parse_rational, to_f64, Rational};
use cube_sections::exactpoly::SignRun;
use cube_sections::rho::{closed_form_eps, format_sig6, solve_rho, table, table_eps, CertifiedRoot, RhoTriple};
use cube_sections::volume::{
    polya_estimate, subdiagonal_volume, subdiagonal_volume_exact, vertex_sum_volume, Direction,
    QuadratureConfig, SectionQuery,
};
use cube_sections::Error;

use crate::args::{ClassifyArgs, Method, RootsArgs, SweepArgs, TableArgs, VolumeArgs};
use crate::record::{OutputRecord, Rows};
use crate::{CliError, Outcome, EXIT_OK, EXIT_PATTERN};

fn inputs<T: serde::Serialize>(args: &T) -> Value {
    serde_json::to_value(args).expect("arguments serialize")
}

fn parse_eps(s: Option<&str>, default: Rational) -> Result<Rational, CliError> {
    match s {
        Some(s) => {
            let e = parse_rational(s)?;
            if e <= Rational::from_integer(0.into()) {
                return Err(CliError::Usage(format!("--eps must be positive, got {s}")));
            }
            Ok(e)
        }
        None => Ok(default),
    }
}

fn parse_z(s: &str, n: u32) -> Result<Rational, CliError> {
    let z = parse_rational(s)?;
    let half = Rational::new(i64::from(n).into(), 2.into());
    if z <= Rational::from_integer(0.into()) || z > half {
        return Err(Error::Domain(format!("z = {z} must lie in (0, n/2] = (0, {half}]")).into());
    }
    Ok(z)
}

fn order(d: u32, n: Option<u32>) -> Result<u32, CliError> {
    let n = n.unwrap_or(d);
    if n > d {
        return Err(CliError::Usage(format!("--n = {n} exceeds --d = {d}")));
    }
    Ok(n)
}

pub fn volume(args: &VolumeArgs) -> Result<Outcome, CliError> {
    let cfg = QuadratureConfig::default();
    let mut results = serde_json::Map::new();
    let query;
    let mut exact = None;
    let sum;
    if let Some(a) = &args.a {
        if args.pos.z.is_some() {
            return Err(CliError::Usage("--z needs a sub-diagonal; use --t with --a".into()));
        }
        if let Some(d) = args.d {
            if d as usize != a.len() {
                return Err(CliError::Usage(format!("--a has {} coordinates but --d = {d}", a.len())));
            }
        }
        query = SectionQuery::new(Direction::new(a.clone())?, args.pos.t.unwrap_or(0.0))?;
        sum = if args.method == Method::Integral { None } else { Some(vertex_sum_volume(&query)?) };
    } else {
        let d = args.d.ok_or_else(|| CliError::Usage("--d is required unless --a is given".into()))?;
        let n = order(d, args.n)?;
        let t = match &args.pos.z {
            Some(z) => {
                let z = parse_z(z, n)?;
                let v = subdiagonal_volume_exact(n, &z)?;
                exact = Some(v.to_string());
                t_of_z(n, to_f64(&z))?
            }
            None => args.pos.t.unwrap_or(0.0),
        };
        z_of_t(n, t)?;
        query = SectionQuery::new(Direction::subdiagonal(n, d)?, t)?;
        sum = if args.method == Method::Integral { None } else { Some(subdiagonal_volume(n, t)?) };
    }
    results.insert("t".into(), json!(query.t));
    match args.method {
        Method::Sum => {
            results.insert("volume".into(), json!(sum));
        }
        Method::Integral => {
            let e = polya_estimate(&query, &cfg)?;
            results.insert("volume".into(), json!(e.value));
            results.insert("error_estimate".into(), json!(e.error));
        }
        Method::Both => {
            let e = polya_estimate(&query, &cfg)?;
            let s = sum.expect("sum computed for method both");
            results.insert("sum".into(), json!(s));
            results.insert("integral".into(), json!(e.value));
            results.insert("integral_error_estimate".into(), json!(e.error));
            results.insert("discrepancy".into(), json!((s - e.value).abs()));
        }
    }
    if let Some(x) = exact {
        results.insert("exact".into(), json!(x));
    }
    Ok(Outcome::new(OutputRecord::new("volume", inputs(args), Value::Object(results))))
}

fn root_json(r: &CertifiedRoot) -> Value {
    let (lo, hi) = r.bounds();
    json!({
        "value": r.value_f64(),
        "rounded": format_sig6(r.value_f64()),
        "exact": r.exact().map(|x| x.to_string()),
        "lower": lo.to_string(),
        "upper": hi.to_string(),
    })
}

fn pattern_strings(runs: &[SignRun]) -> Vec<String> {
    runs.iter()
        .map(|r| {
            let s = match r.sign {
                1 => "+",
                -1 => "-",
                _ => "0",
            };
            if r.is_zero() {
                format!("{} : 0", r.start)
            } else {
                format!("({}, {}) : {s}", r.start, r.end)
            }
        })
        .collect()
}

fn triple_json(t: &RhoTriple) -> Value {
    json!({
        "rho_minus": root_json(&t.rho_minus),
        "rho_circ": root_json(&t.rho_circ),
        "rho_plus": root_json(&t.rho_plus),
        "pattern_ok": t.pattern_ok,
        "s1_pattern": pattern_strings(&t.s1_pattern),
        "s2_pattern": pattern_strings(&t.s2_pattern),
    })
}

/// Position of the enclosure `[lo, hi]` of `z` relative to a root.
fn relative(lo: &Rational, hi: &Rational, root: &CertifiedRoot) -> Option<Ordering> {
    let (a, b) = root.bounds();
    if hi < &a {
        Some(Ordering::Less)
    } else if lo > &b {
        Some(Ordering::Greater)
    } else if lo == hi && a == b {
        Some(Ordering::Equal)
    } else {
        None
    }
}

fn region(out: &Extremality, t: &RhoTriple) -> String {
    let named = [("rho_plus", &t.rho_plus), ("rho_circ", &t.rho_circ), ("rho_minus", &t.rho_minus)];
    let mut below = None;
    for (name, root) in named {
        match relative(&out.z_lo, &out.z_hi, root) {
            Some(Ordering::Less) => {
                return match below {
                    None => format!("z < {name}"),
                    Some(b) => format!("{b} < z < {name}"),
                }
            }
            Some(Ordering::Equal) => return format!("z = {name}"),
            Some(Ordering::Greater) => below = Some(name),
            None => return format!("z within the enclosure of {name}"),
        }
    }
    "z > rho_minus".into()
}

pub fn classify(args: &ClassifyArgs) -> Result<Outcome, CliError> {
    let n = order(args.d, args.n)?;
    let spec = SubdiagonalSpec::new(n, args.d)?;
    let c = Classifier::new(spec)?;
    let eps = parse_eps(args.eps.as_deref(), default_eps())?;
    let out = match &args.pos.z {
        Some(z) => c.classify_z(&parse_z(z, n)?)?,
        None => c.classify_t(args.pos.t.unwrap_or(0.0), &eps)?,
    };
    let z = match out.z_exact() {
        Some(z) => json!(z.to_string()),
        None => json!([to_f64(&out.z_lo), to_f64(&out.z_hi)]),
    };
    let mut results = json!({
        "kind": out.kind.to_string(),
        "s1_sign": out.s1_sign,
        "s2_sign": out.s2_sign,
        "z": z,
        "z_approx": out.z(),
        "t": out.t,
    });
    let mut record = OutputRecord::new("classify", inputs(args), Value::Null);
    match solve_rho(n, &table_eps()) {
        Ok(t) => {
            results["rho"] = json!({
                "rho_minus": t.rho_minus.value_f64(),
                "rho_circ": t.rho_circ.value_f64(),
                "rho_plus": t.rho_plus.value_f64(),
            });
            results["region"] = json!(region(&out, &t));
        }
        Err(e) => record.warnings.push(format!("critical zeros unavailable: {e}")),
    }
    record.results = results;
    Ok(Outcome::new(record))
}

pub fn roots(args: &RootsArgs) -> Result<Outcome, CliError> {
    let eps = parse_eps(args.eps.as_deref(), closed_form_eps())?;
    let t = solve_rho(args.n, &eps)?;
    let mut results = triple_json(&t);
    results["n"] = json!(args.n);
    Ok(Outcome::new(OutputRecord::new("roots", inputs(args), results)))
}

pub fn table_cmd(args: &TableArgs) -> Result<Outcome, CliError> {
    let eps = parse_eps(args.eps.as_deref(), table_eps())?;
    let mut rows = Rows::new(&["d", "rho_minus", "rho_circ", "rho_plus"]);
    let mut pretty_rows = Rows::new(&["d", "rho_minus", "rho_circ", "rho_plus"]);
    let mut json_rows = Vec::new();
    let mut warnings = Vec::new();
    let mut exit = EXIT_OK;
    for (d, r) in table(args.dmin, args.dmax, &eps)? {
        match r {
            Ok(t) => {
                let roots = [&t.rho_minus, &t.rho_circ, &t.rho_plus];
                let cells: Vec<String> = roots.iter().map(|r| format_sig6(r.value_f64())).collect();
                let marked: Vec<String> = roots
                    .iter()
                    .zip(&cells)
                    .map(|(r, c)| match r.exact() {
                        Some(x) => format!("{x} (exact)"),
                        None => c.clone(),
                    })
                    .collect();
                rows.push([vec![d.to_string()], cells.clone()].concat());
                pretty_rows.push([vec![d.to_string()], marked].concat());
                json_rows.push(json!({
                    "d": d,
                    "rho_minus": cells[0],
                    "rho_circ": cells[1],
                    "rho_plus": cells[2],
                    "exact": {
                        "rho_minus": t.rho_minus.exact().map(|x| x.to_string()),
                        "rho_circ": t.rho_circ.exact().map(|x| x.to_string()),
                        "rho_plus": t.rho_plus.exact().map(|x| x.to_string()),
                    },
                    "pattern_ok": t.pattern_ok,
                }));
                if !t.pattern_ok {
                    exit = EXIT_PATTERN;
                    warnings.push(format!("d = {d}: ordering of the zeros not certified"));
                }
            }
            Err(e) => {
                if matches!(e, Error::PatternViolation { .. }) {
                    exit = EXIT_PATTERN;
                }
                let blank = vec![d.to_string(), String::new(), String::new(), String::new()];
                rows.push(blank.clone());
                pretty_rows.push(blank);
                json_rows.push(json!({ "d": d, "error": e.to_string() }));
                warnings.push(format!("d = {d}: {e}"));
            }
        }
    }
    let mut record = OutputRecord::new("table", inputs(args), json!({ "rows": json_rows }));
    record.warnings = warnings;
    Ok(Outcome {
        record,
        rows: Some(rows),
        pretty_rows: Some(pretty_rows),
        exit_code: exit,
    })
}

fn sign_flips(values: &[f64]) -> usize {
    let signs: Vec<f64> = values.iter().copied().filter(|v| *v != 0.0).collect();
    signs.windows(2).filter(|w| (w[0] > 0.0) != (w[1] > 0.0)).count()
}

pub fn sweep(args: &SweepArgs) -> Result<Outcome, CliError> {
    let n = order(args.d, args.n)?;
    if args.samples < 2 {
        return Err(CliError::Usage("--samples must be at least 2".into()));
    }
    let c = Classifier::new(SubdiagonalSpec::new(n, args.d)?)?;
    let eps = default_eps();
    let limit = f64::from(n).sqrt() / 2.0;
    let mut rows = Rows::new(&["t", "z", "V", "S1", "S2", "kind"]);
    let mut json_rows = Vec::new();
    let (mut s1s, mut s2s) = (Vec::new(), Vec::new());
    for k in 0..args.samples {
        let t = limit * f64::from(k) / f64::from(args.samples);
        let z = z_of_t(n, t)?;
        let v = subdiagonal_volume(n, t)?;
        let zr = from_f64(z)?;
        let s1 = to_f64(&c.s1().eval(&zr)?);
        let s2 = to_f64(&c.s2().eval(&zr)?);
        let kind = c.classify_t(t, &eps)?.kind.to_string();
        s1s.push(s1);
        s2s.push(s2);
        rows.push(vec![t.to_string(), z.to_string(), v.to_string(), s1.to_string(), s2.to_string(), kind.clone()]);
        json_rows.push(json!({ "t": t, "z": z, "V": v, "S1": s1, "S2": s2, "kind": kind }));
    }
    let results = json!({
        "samples": args.samples,
        "s1_sign_changes": sign_flips(&s1s),
        "s2_sign_changes": sign_flips(&s2s),
        "rows": json_rows,
    });
    let mut out = Outcome::new(OutputRecord::new("sweep", inputs(args), results));
    out.rows = Some(rows);
    Ok(out)
}
