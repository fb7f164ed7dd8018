//! Subcommand implementations. Each returns a process exit code: 0 when
//! everything passed, 1 when a check failed, 2 on bad input.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;
use std::time::Instant;

use cremona_arith::{default_precision, GaussianRational as Q, IntPolynomial};
use cremona_families::{
    make, orbit_projection_samples, vn_membership, write_omega_csv, FamilyError, FamilyId,
    Termination,
};
use cremona_projmap::{
    degree_sequence, growth_class, indeterminacy_points, jacobian_divisor, parse_map,
    stability_probe, ExactMap, MIN_ENTRIES,
};

use crate::expr::{eval_exact, parse_affine_point, split_list, ExprError};
use crate::report::{Check, Report, Status};
use crate::suite;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("{path}: {err}")]
    Io { path: String, err: io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } => EXIT_FAIL,
            _ => EXIT_USAGE,
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Family parameters as given on the command line (unparsed expressions).
#[derive(Clone, Debug, Default)]
pub struct FamilyArgs {
    pub a: Option<String>,
    pub b: Option<String>,
    pub c: Option<String>,
    pub n: Option<u32>,
    pub k: Option<u32>,
    pub alpha: Option<String>,
    pub beta: Option<String>,
    pub delta: Option<String>,
    /// Coefficients of P for `henon`, from degree 0.
    pub poly: Option<String>,
    /// `j=value` pairs for `bk_k`.
    pub terms: Option<String>,
    /// Exponent matrix `m00,m01,m10,m11` for `f_m`.
    pub m: Option<String>,
    /// A map literal for `map`.
    pub map: Option<String>,
}

pub const FAMILIES: &[&str] = &[
    "sigma",
    "rho",
    "tau",
    "bk_fab",
    "bk_fab3",
    "bk_k",
    "bk_rot",
    "mcmullen",
    "dg_phi",
    "dg_phi_alpha_phi",
    "dg_conic",
    "henon",
    "f_m",
    "lin_family",
    "map",
];

fn exact(name: &str, v: &Option<String>) -> Result<Q, CliError> {
    let s = v
        .as_deref()
        .ok_or_else(|| usage(format!("missing --{name}")))?;
    Ok(eval_exact(s)?)
}

fn exact_or(name: &str, v: &Option<String>, default: i64) -> Result<Q, CliError> {
    match v {
        Some(_) => exact(name, v),
        None => Ok(Q::from_int(default)),
    }
}

fn exact_list(name: &str, s: &str) -> Result<Vec<Q>, CliError> {
    let _ = name;
    split_list(s)
        .into_iter()
        .map(|t| Ok(eval_exact(t)?))
        .collect()
}

fn triple(name: &str, v: &Option<String>) -> Result<[Q; 3], CliError> {
    let s = v
        .as_deref()
        .ok_or_else(|| usage(format!("missing --{name}")))?;
    let l = exact_list(name, s)?;
    <[Q; 3]>::try_from(l).map_err(|_| usage(format!("--{name} needs three comma-separated values")))
}

/// Resolve a family name and its parameters; `Ok(None)` means a raw map literal.
pub fn family_id(name: &str, args: &FamilyArgs) -> Result<Option<FamilyId>, CliError> {
    let id = match name.to_ascii_lowercase().as_str() {
        "sigma" => FamilyId::Sigma,
        "rho" => FamilyId::Rho,
        "tau" => FamilyId::Tau,
        "bk_fab" => FamilyId::BkFab {
            a: exact("a", &args.a)?,
            b: exact("b", &args.b)?,
        },
        "bk_fab3" => FamilyId::BkFAB {
            a: triple("a", &args.a)?,
            b: triple("b", &args.b)?,
        },
        "bk_k" => {
            let mut a = Vec::new();
            if let Some(t) = &args.terms {
                for item in split_list(t) {
                    let (j, v) = item
                        .split_once('=')
                        .ok_or_else(|| usage(format!("--terms expects j=value, got {item:?}")))?;
                    let j: u32 = j
                        .trim()
                        .parse()
                        .map_err(|_| usage(format!("bad index {j:?}")))?;
                    a.push((j, eval_exact(v)?));
                }
            }
            FamilyId::BkK {
                k: args.k.ok_or_else(|| usage("missing --k"))?,
                c: exact_or("c", &args.c, 0)?,
                a,
            }
        }
        "bk_rot" => FamilyId::BkRot {
            delta: exact("delta", &args.delta)?,
            c: exact("c", &args.c)?,
        },
        "mcmullen" => FamilyId::McMullen {
            a: exact("a", &args.a)?,
            b: exact("b", &args.b)?,
        },
        "dg_phi" => FamilyId::DgPhi {
            n: args.n.unwrap_or(3),
        },
        "dg_phi_alpha_phi" => FamilyId::DgPhiAlphaPhi {
            alpha: exact("alpha", &args.alpha)?,
        },
        "dg_conic" => FamilyId::DgConic,
        "henon" => FamilyId::Henon {
            p: exact_list("poly", args.poly.as_deref().unwrap_or("0,0,1"))?,
            delta: exact_or("delta", &args.delta, 1)?,
        },
        "f_m" => {
            let s = args.m.as_deref().ok_or_else(|| usage("missing --m"))?;
            let v: Vec<i64> = split_list(s)
                .into_iter()
                .map(|t| t.parse().map_err(|_| usage(format!("bad exponent {t:?}"))))
                .collect::<Result<_, _>>()?;
            match v[..] {
                [a, b, c, d] => FamilyId::Monomial {
                    m: [[a, b], [c, d]],
                },
                _ => return Err(usage("--m needs four integers m00,m01,m10,m11")),
            }
        }
        "lin_family" => FamilyId::LinFamily {
            alpha: exact("alpha", &args.alpha)?,
            beta: exact("beta", &args.beta)?,
        },
        "map" => return Ok(None),
        other => {
            return Err(usage(format!(
                "unknown family {other:?}; one of {}",
                FAMILIES.join(", ")
            )))
        }
    };
    Ok(Some(id))
}

pub fn build_map(name: &str, args: &FamilyArgs) -> Result<(String, ExactMap), CliError> {
    match family_id(name, args)? {
        Some(id) => Ok((id.to_string(), make(&id)?)),
        None => {
            let s = args.map.as_deref().ok_or_else(|| usage("missing --map"))?;
            let f = parse_map(s).map_err(|e| usage(e.to_string()))?;
            Ok((s.to_string(), f))
        }
    }
}

fn emit(report: &Report, json: Option<&Path>) -> Result<(), CliError> {
    let Some(path) = json else { return Ok(()) };
    if path == Path::new("-") {
        print!("{}", report.to_json());
        return Ok(());
    }
    std::fs::write(path, report.to_json()).map_err(|err| CliError::Io {
        path: path.display().to_string(),
        err,
    })
}

fn print_checks(out: &mut impl Write, report: &Report) {
    for c in &report.checks {
        let _ = writeln!(out, "{:<12} {:<40} {}", c.status.label(), c.id, c.computed);
    }
}

/// Degree sequence, growth class, stability and (for low degree) the
/// indeterminacy and exceptional data of one map.
pub fn analyze(
    name: &str,
    args: &FamilyArgs,
    iters: usize,
    budget: usize,
    json: Option<&Path>,
) -> Result<i32, CliError> {
    let t = Instant::now();
    let (label, f) = build_map(name, args)?;
    let mut checks =
        vec![Check::new("analyze.map", label.as_str()).with_status(Status::Pass, f.to_string())];

    let seq = degree_sequence(&f, iters.max(1), budget);
    let mut degrees = Check::new("analyze.degrees", "deg fⁿ for n = 1..N").with_status(
        Status::Pass,
        format!(
            "{:?}{}",
            seq.degrees,
            if seq.truncated {
                " (stopped at the degree budget)"
            } else {
                ""
            }
        ),
    );
    degrees.expected = format!("N = {iters}, budget {budget}");
    checks.push(degrees);

    // the classifier needs a few more entries than a short run provides
    let long = if seq.degrees.len() < MIN_ENTRIES && !seq.truncated {
        degree_sequence(&f, MIN_ENTRIES, budget)
    } else {
        seq.clone()
    };
    let growth = Check::new("analyze.growth", "growth class of deg fⁿ");
    checks.push(match growth_class(&long.degrees) {
        Ok(g) => {
            let rate = g.rate.map_or(String::new(), |r| {
                let (x, _) = r.mid_f64();
                format!(", rate {x:.9} ± {:.1e}", r.rad_f64())
            });
            growth.with_status(Status::Pass, format!("{:?}{rate}", g.tag))
        }
        Err(e) => growth.with_status(Status::Skipped, format!("{e}; degrees {:?}", long.degrees)),
    });

    let st = stability_probe(&f, iters.clamp(2, 12));
    checks.push(
        Check::new("analyze.stability", "first n with deg fⁿ < (deg f)ⁿ").with_status(
            Status::Pass,
            match st.violated_at {
                Some(n) => format!("violated_at {n}"),
                None => format!("stable up to {}", st.stable_up_to),
            },
        ),
    );

    let ind = Check::new("analyze.indeterminacy", "common zeros of the components");
    checks.push(if f.degree() <= 3 {
        let set = indeterminacy_points(&f, &[]);
        let pts: Vec<String> = set.points.iter().map(|p| p.to_string()).collect();
        ind.with_status(
            Status::Pass,
            format!(
                "{}{}",
                pts.join(", "),
                if set.complete { "" } else { " (incomplete)" }
            ),
        )
    } else {
        ind.with_status(Status::Skipped, format!("degree {} > 3", f.degree()))
    });

    let exc = Check::new("analyze.exceptional", "factors of the Jacobian determinant");
    checks.push(if f.degree() <= 4 {
        match jacobian_divisor(&f) {
            Ok(j) => {
                let fs: Vec<String> = j
                    .factors
                    .iter()
                    .map(|(p, m)| {
                        if *m > 1 {
                            format!("({p})^{m}")
                        } else {
                            format!("({p})")
                        }
                    })
                    .collect();
                let rest = if j.unfactored {
                    format!(" · ({})", j.remainder)
                } else {
                    String::new()
                };
                exc.with_status(Status::Pass, format!("{}{rest}", fs.join(" ")))
            }
            Err(e) => exc.with_status(Status::Skipped, e.to_string()),
        }
    } else {
        exc.with_status(Status::Skipped, format!("degree {} > 4", f.degree()))
    });

    if name.eq_ignore_ascii_case("bk_fab") {
        let (a, b) = (exact("a", &args.a)?, exact("b", &args.b)?);
        let r = vn_membership(&a, &b, iters, 0.0);
        let c = Check::new("analyze.vn", "orbit of (1:−a:0) reaching (1:−b:−a)");
        checks.push(c.with_status(
            Status::Pass,
            match (r.hit_index, r.terminated_by) {
                (Some(k), _) => format!("V_{k} hit at n = {k}"),
                (None, Termination::Indeterminate) => {
                    "orbit hit an indeterminacy point first".to_string()
                }
                (None, _) => format!("no hit within {iters} steps"),
            },
        ));
    }

    let report = Report::new(
        &format!("analyze {name}"),
        checks,
        vec![],
        t.elapsed().as_millis() as u64,
    );
    let stdout = io::stdout();
    let mut out = stdout.lock();
    if json != Some(Path::new("-")) {
        print_checks(&mut out, &report);
    }
    emit(&report, json)?;
    Ok(report.exit_code())
}

/// Run the verification suite restricted to ids matching `filter`.
pub fn verify_catalog(filter: &str, json: Option<&Path>, threads: usize) -> Result<i32, CliError> {
    let t = Instant::now();
    let pattern =
        glob::Pattern::new(filter).map_err(|e| usage(format!("bad filter {filter:?}: {e}")))?;
    let defs = suite::select(suite::definitions(), &pattern);
    let mut flags = Vec::new();
    if defs.is_empty() {
        flags.push(format!("filter {filter:?} matched no checks"));
    }
    let outcomes = suite::run(&defs, default_precision(), threads);
    let checks = outcomes.into_iter().map(|o| o.check).collect();
    let report = Report::new(
        "verify-catalog",
        checks,
        flags,
        t.elapsed().as_millis() as u64,
    );
    if json != Some(Path::new("-")) {
        let stdout = io::stdout();
        let mut out = stdout.lock();
        print_checks(&mut out, &report);
        let _ = writeln!(
            out,
            "{} checks: {} pass, {} fail, {} recorded discrepancies, {} skipped",
            report.checks.len(),
            report.count(Status::Pass),
            report.count(Status::Fail),
            report.count(Status::RecordedDiscrepancy),
            report.count(Status::Skipped)
        );
        for f in &report.flags {
            let _ = writeln!(out, "note: {f}");
        }
    }
    emit(&report, json)?;
    Ok(report.exit_code())
}

/// Sample the orbit of `point` under f_{α,β} and write Ω₁/Ω₂ rows as CSV.
pub fn orbit(
    alpha: &str,
    beta: &str,
    point: &str,
    count: usize,
    out: Option<&Path>,
) -> Result<i32, CliError> {
    let a = crate::expr::eval_c64(alpha)?;
    let b = crate::expr::eval_c64(beta)?;
    let m0 = parse_affine_point(point)?;
    let s = orbit_projection_samples(a, b, m0, count);
    let io_err = |path: &Path, err: io::Error| CliError::Io {
        path: path.display().to_string(),
        err,
    };
    match out {
        Some(path) if path != Path::new("-") => {
            let f = File::create(path).map_err(|e| io_err(path, e))?;
            write_omega_csv(&s.rows, BufWriter::new(f))
                .map_err(|e| io_err(path, io::Error::other(e)))?;
        }
        _ => {
            write_omega_csv(&s.rows, io::stdout().lock())
                .map_err(|e| io_err(Path::new("-"), io::Error::other(e)))?;
        }
    }
    let ys: Vec<f64> = s.rows.iter().map(|r| r.om2[1].hypot(r.om2[2])).collect();
    let (lo, hi) = ys
        .iter()
        .fold((f64::INFINITY, 0f64), |(l, h), &y| (l.min(y), h.max(y)));
    let mut summary = if ys.is_empty() {
        "0 rows".to_string()
    } else {
        format!("{} rows; |y| min {lo:.12e}, max {hi:.12e}", ys.len())
    };
    if let Some(n) = s.overflow_at {
        summary.push_str(&format!("; orbit left the sampling window at n = {n}"));
    }
    eprintln!("{summary}");
    Ok(EXIT_OK)
}

/// Classification of an integer polynomial (`t^4 - t^3 - t^2 - t + 1` or coefficients `1,-1,-1,-1,1` from degree 0).
pub fn salem(poly: &str) -> Result<i32, CliError> {
    let p: IntPolynomial = if poly.contains('t') {
        poly.parse()
            .map_err(|e: cremona_arith::ArithError| usage(e.to_string()))?
    } else {
        let c: Vec<i64> = split_list(poly)
            .into_iter()
            .map(|t| {
                t.parse()
                    .map_err(|_| usage(format!("bad coefficient {t:?}")))
            })
            .collect::<Result<_, _>>()?;
        IntPolynomial::from_i64s(&c)
    };
    let cl = cremona_salem::classify(&p, default_precision()).map_err(|e| usage(e.to_string()))?;
    let (cyc, rest) = cremona_salem::cyclotomic_part(&p);
    println!("polynomial       {p}");
    println!("reciprocal       {}", cremona_salem::is_reciprocal(&p));
    println!(
        "cyclotomic part  {cyc}  {:?}",
        cremona_salem::cyclotomic_factors(&p)
    );
    println!("remaining factor {rest}");
    println!("class            {:?}", cl.tag);
    if let Some(r) = cl.leading_root {
        let (x, y) = r.mid_f64();
        println!("leading root     {x:.15}{y:+.15}i ± {:.1e}", r.rad_f64());
    }
    Ok(EXIT_OK)
}

/// Coxeter-element data of W_n.
pub fn weyl(n: usize) -> Result<i32, CliError> {
    use cremona_weyl::*;
    let prec = default_precision();
    let formula = coxeter_char_poly_formula(n).map_err(|e| usage(e.to_string()))?;
    println!("P_{n}(t)          {formula}");
    let (_, rest) = cremona_salem::cyclotomic_part(&formula);
    println!("non-cyclotomic   {rest}");
    match coxeter_order(n) {
        Ok(h) => println!("order            {h}"),
        Err(e) => println!("order            {e}"),
    }
    let b = bipartite_restriction(n, prec).map_err(|e| usage(e.to_string()))?;
    let (l, _) = b.lambda.mid_f64();
    println!(
        "λ_{n} (adjacency)  {l:.15}{}",
        if b.lambda.is_exact() { " (exact)" } else { "" }
    );
    println!("bipartite class  {:?}", b.class);
    if let Some(e) = b.leading_eigenvalue {
        println!("spectral radius  {:.15}", e.mid_f64().0);
    }
    Ok(EXIT_OK)
}
