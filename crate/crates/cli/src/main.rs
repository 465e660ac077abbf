//! Command-line front end for exact discriminant-algebra computations.
//!
//! Input is a JSON document `{"ring": …, "algebra": …}` given as a file path,
//! inline JSON, or `-` for stdin; see the library's `descr` module for the
//! schema. Output is deterministic: identical inputs produce byte-identical
//! bytes.
//!
//! Exit codes: 0 success, 1 parse error, 2 invariant violation, 3 cap
//! exceeded.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use discalg::delta::{self, DeltaOptions, NormPath, QuadraticAlgebra};
use discalg::descr;
use discalg::error::Error;
use discalg::ferrand::{self, MultiDegree};
use discalg::linalg;
use discalg::ring::Ring;
use discalg::{AlgebraElement, FreeAlgebra};

#[derive(Parser)]
#[command(
    name = "discalg",
    version,
    about = "Exact discriminant algebras of finite free commutative ring extensions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum PathArg {
    #[default]
    Auto,
    Fast,
    General,
    Both,
}

impl PathArg {
    fn to_norm_path(self) -> NormPath {
        match self {
            PathArg::Auto => NormPath::Auto,
            PathArg::Fast => NormPath::Fast,
            PathArg::General => NormPath::General,
            PathArg::Both => NormPath::Both,
        }
    }
}

#[derive(Args)]
struct Common {
    /// Coefficient ring, overriding the input document: `Z`, `Q`, `Z/m`,
    /// `Z[s,t]`, or a JSON ring object.
    #[arg(long)]
    ring: Option<String>,
    /// Output format.
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    /// Raise the rank caps (symbolic norm forms, polarization, general norm
    /// route) to this value.
    #[arg(long)]
    cap_override: Option<usize>,
    /// Which route computes the generator norm of a discriminant algebra.
    #[arg(long, value_enum, default_value_t)]
    path: PathArg,
}

#[derive(Subcommand)]
enum Command {
    /// Characteristic polynomial of an element (coordinates in the basis).
    Charpoly {
        /// Input document: path, inline JSON, or `-` for stdin.
        input: String,
        /// Comma-separated element coordinates in the ring serialization.
        #[arg(long)]
        element: String,
        #[command(flatten)]
        common: Common,
    },
    /// Discriminant of the algebra with respect to its basis.
    Disc {
        input: String,
        #[command(flatten)]
        common: Common,
    },
    /// The discriminant algebra as `R[X]/(X² − TX + N)`.
    Delta {
        input: String,
        #[command(flatten)]
        common: Common,
    },
    /// The invariant-tensor homomorphism value Φ(γ^α(θ)).
    Phi {
        input: String,
        /// Comma-separated multidegree, e.g. 1,1,1,1.
        #[arg(long)]
        alpha: String,
        #[command(flatten)]
        common: Common,
    },
    /// Product of two quadratic algebras ({"ring":…, "q1":…, "q2":…}).
    Star {
        input: String,
        #[command(flatten)]
        common: Common,
    },
    /// Runs the theorem-level invariant suite on the given algebra.
    Verify {
        input: String,
        #[command(flatten)]
        common: Common,
    },
    /// Trace of the discriminant-algebra generator of `Z[x]/(xⁿ−1)` for a
    /// range of n (polarization route only).
    Table {
        min: usize,
        max: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Validates the multiplication table axioms and reports violations.
    Axioms {
        input: String,
        #[command(flatten)]
        common: Common,
    },
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::CapExceeded { .. } => 3,
        Error::AxiomViolation(_)
        | Error::Internal(_)
        | Error::NotNormPreserving
        | Error::FastPathUnavailable(_) => 2,
        _ => 1,
    }
}

fn read_input(input: &str) -> Result<String, Error> {
    if input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Parse {
                what: "stdin".into(),
                detail: e.to_string(),
            })?;
        Ok(buf)
    } else if input.trim_start().starts_with('{') {
        Ok(input.to_string())
    } else {
        std::fs::read_to_string(input).map_err(|e| Error::Parse {
            what: format!("input file {input}"),
            detail: e.to_string(),
        })
    }
}

fn ring_override(common: &Common) -> Result<Option<Ring>, Error> {
    match &common.ring {
        None => Ok(None),
        Some(s) => {
            let s = s.trim();
            if s.starts_with('{') {
                let v: Value = serde_json::from_str(s).map_err(|e| Error::Parse {
                    what: "--ring".into(),
                    detail: e.to_string(),
                })?;
                Ok(Some(descr::ring_from_json(&v)?))
            } else {
                Ok(Some(descr::ring_shorthand(s)?))
            }
        }
    }
}

fn load_algebra(input: &str, common: &Common) -> Result<(Ring, FreeAlgebra), Error> {
    let text = read_input(input)?;
    descr::input_from_str(&text, ring_override(common)?)
}

fn delta_options(common: &Common) -> DeltaOptions {
    let mut opts = DeltaOptions::with_path(common.path.to_norm_path());
    if let Some(cap) = common.cap_override {
        opts = opts.override_caps(cap);
    }
    opts
}

fn emit(doc: &Value, text_line: &str, format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string(doc).expect("serializable")),
        Format::Text => println!("{text_line}"),
    }
}

fn parse_element(ring: &Ring, alg: &FreeAlgebra, coords_text: &str) -> Result<AlgebraElement, Error> {
    let coords = coords_text
        .split(',')
        .map(|c| ring.parse(c.trim()))
        .collect::<Result<Vec<_>, _>>()?;
    alg.element(coords)
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Charpoly {
            input,
            element,
            common,
        } => {
            let (ring, alg) = load_algebra(&input, &common)?;
            let x = parse_element(&ring, &alg, &element)?;
            let coeffs = alg.char_poly_of(&x)?;
            let doc = json!({
                "coefficients": coeffs
                    .iter()
                    .map(|c| descr::elem_to_json(&ring, c))
                    .collect::<Vec<_>>(),
            });
            let text = coeffs
                .iter()
                .map(|c| ring.to_text(c))
                .collect::<Vec<_>>()
                .join(", ");
            emit(&doc, &format!("charpoly coefficients (descending): {text}"), common.format);
        }
        Command::Disc { input, common } => {
            let (ring, alg) = load_algebra(&input, &common)?;
            let d = alg.discriminant()?;
            let doc = json!({"disc": descr::elem_to_json(&ring, &d)});
            emit(&doc, &format!("disc = {}", ring.to_text(&d)), common.format);
        }
        Command::Delta { input, common } => {
            let (ring, alg) = load_algebra(&input, &common)?;
            let q = delta::discriminant_algebra_with(&alg, &delta_options(&common))?;
            let doc = descr::delta_to_json(&q);
            let text = format!(
                "Delta = {}; disc = {}",
                descr::presentation(&q),
                ring.to_text(&q.disc())
            );
            emit(&doc, &text, common.format);
        }
        Command::Phi {
            input,
            alpha,
            common,
        } => {
            let (ring, alg) = load_algebra(&input, &common)?;
            let degrees = alpha
                .split(',')
                .map(|d| {
                    d.trim().parse::<u32>().map_err(|e| Error::Parse {
                        what: "--alpha".into(),
                        detail: e.to_string(),
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            let md = MultiDegree::new(alg.rank(), degrees)?;
            let symbolic_cap = common
                .cap_override
                .map_or(ferrand::NORM_FORM_CAP, |c| c.max(ferrand::NORM_FORM_CAP));
            let polarization_cap = common
                .cap_override
                .map_or(linalg::POLARIZATION_CAP, |c| c.max(linalg::POLARIZATION_CAP));
            let v = ferrand::phi_orbit_capped(&alg, &md, symbolic_cap, polarization_cap)?;
            let doc = json!({
                "alpha": md.degrees(),
                "phi": descr::elem_to_json(&ring, &v),
            });
            emit(&doc, &format!("phi = {}", ring.to_text(&v)), common.format);
        }
        Command::Star { input, common } => {
            let text = read_input(&input)?;
            let v: Value = serde_json::from_str(&text).map_err(|e| Error::Parse {
                what: "input".into(),
                detail: e.to_string(),
            })?;
            let obj = v.as_object().ok_or_else(|| Error::Parse {
                what: "input".into(),
                detail: "expected a JSON object".into(),
            })?;
            let ring = match ring_override(&common)? {
                Some(r) => r,
                None => descr::ring_from_json(obj.get("ring").ok_or_else(|| Error::Parse {
                    what: "input".into(),
                    detail: "needs a `ring` (or pass --ring)".into(),
                })?)?,
            };
            let q1 = descr::quadratic_from_json(&ring, obj.get("q1").ok_or_else(|| Error::Parse {
                what: "input".into(),
                detail: "needs `q1`".into(),
            })?)?;
            let q2 = descr::quadratic_from_json(&ring, obj.get("q2").ok_or_else(|| Error::Parse {
                what: "input".into(),
                detail: "needs `q2`".into(),
            })?)?;
            let q = delta::star_product(&q1, &q2)?;
            let doc = descr::delta_to_json(&q);
            let text = format!("star = {}", descr::presentation(&q));
            emit(&doc, &text, common.format);
        }
        Command::Verify { input, common } => {
            let (_, alg) = load_algebra(&input, &common)?;
            let (lines, ok) = run_verification(&alg, &delta_options(&common))?;
            for l in &lines {
                println!("{l}");
            }
            if !ok {
                return Err(Error::AxiomViolation("verification failed".into()));
            }
        }
        Command::Table { min, max, common } => {
            let ring = Ring::Integers;
            let mut rows = Vec::new();
            let mut text_rows = Vec::new();
            for n in min..=max {
                let mut coeffs = vec![0i64; n + 1];
                coeffs[0] = 1;
                coeffs[n] = -1;
                let alg = FreeAlgebra::monogenic_from_ints(ring.clone(), &coeffs)?;
                let cap = common
                    .cap_override
                    .map_or(linalg::POLARIZATION_CAP, |c| c.max(linalg::POLARIZATION_CAP));
                let t = ferrand::phi_orbit_capped(
                    &alg,
                    &MultiDegree::all_ones(n),
                    // Polarization only; the symbolic route is never taken
                    // for the all-ones multidegree.
                    0,
                    cap,
                )?;
                rows.push(json!({"T": descr::elem_to_json(&ring, &t), "n": n}));
                text_rows.push(format!("n = {:>2}: T = {}", n, ring.to_text(&t)));
            }
            let doc = json!({"rows": rows});
            emit(&doc, &text_rows.join("\n"), common.format);
        }
        Command::Axioms { input, common } => {
            let text = read_input(&input)?;
            let (_, alg) = descr::input_from_str_unchecked(&text, ring_override(&common)?)?;
            let report = alg.check_axioms();
            let doc = json!({
                "algebra": descr::algebra_to_json(&alg),
                "ok": report.ok(),
                "violations": report.violations,
            });
            match common.format {
                Format::Json => println!("{}", serde_json::to_string(&doc).expect("serializable")),
                Format::Text => {
                    if report.ok() {
                        println!("ok: commutative, unital, associative");
                    } else {
                        for v in &report.violations {
                            println!("violation: {v}");
                        }
                    }
                }
            }
            if !report.ok() {
                return Err(Error::AxiomViolation(report.violations.join("; ")));
            }
        }
    }
    Ok(())
}

/// The theorem-level checks behind `verify`, one printed line each.
fn run_verification(
    alg: &FreeAlgebra,
    opts: &DeltaOptions,
) -> Result<(Vec<String>, bool), Error> {
    let ring = alg.ring().clone();
    let mut lines = Vec::new();
    let mut all_ok = true;
    let mut record = |name: &str, outcome: Result<Option<String>, Error>| match outcome {
        Ok(None) => lines.push(format!("ok   {name}")),
        Ok(Some(detail)) => lines.push(format!("skip {name}: {detail}")),
        Err(e) => {
            all_ok = false;
            lines.push(format!("FAIL {name}: {e}"));
        }
    };

    record("axioms", {
        let report = alg.check_axioms();
        if report.ok() {
            Ok(None)
        } else {
            Err(Error::AxiomViolation(report.violations.join("; ")))
        }
    });

    let q = delta::discriminant_algebra_with(alg, opts)?;
    let disc = alg.discriminant()?;
    record(
        "discriminant-match",
        if q.disc() == disc {
            Ok(None)
        } else {
            Err(Error::Internal("T² − 4N differs from disc".into()))
        },
    );

    record("path-agreement", {
        if alg.rank() > opts.general_cap {
            Ok(Some("rank above general-route cap".into()))
        } else {
            let both = DeltaOptions {
                path: NormPath::General,
                ..opts.clone()
            };
            match delta::discriminant_algebra_with(alg, &both) {
                Ok(g) if g == q => Ok(None),
                Ok(_) => Err(Error::Internal("norm routes disagree".into())),
                Err(e) => Err(e),
            }
        }
    });

    record("involution", involution_check(&q));

    record("trace-pairing", {
        if alg.rank() < 2 {
            Ok(Some("rank below 2".into()))
        } else {
            let g = delta::gamma_alternating(alg, &alg.basis())?;
            let e = delta::reduce(alg, &g, &q)?;
            let diff = q.sub(&e, &q.involution(&e));
            let sq = q.mul(&diff, &diff);
            if sq == q.element(disc.clone(), ring.zero()) {
                Ok(None)
            } else {
                Err(Error::Internal(
                    "(g − σg)² does not equal the discriminant".into(),
                ))
            }
        }
    });

    record("exterior-coordinate", {
        if alg.rank() < 2 {
            Ok(Some("rank below 2".into()))
        } else {
            let g = delta::gamma_alternating(alg, &alg.basis())?;
            let e = delta::reduce(alg, &g, &q)?;
            if e == q.generator() {
                Ok(None)
            } else {
                Err(Error::Internal(
                    "basis orbit does not reduce to the generator".into(),
                ))
            }
        }
    });

    record("unit-factor", {
        let trivial = FreeAlgebra::split(ring.clone(), 1)?;
        let extended = FreeAlgebra::product(&trivial, alg)?;
        if extended.rank() > opts.fast_cap {
            Ok(Some("extended rank above cap".into()))
        } else {
            let qe = delta::discriminant_algebra_with(&extended, opts)?;
            if qe == q {
                Ok(None)
            } else {
                Err(Error::Internal("Δ(R×A) differs from Δ(A)".into()))
            }
        }
    });

    Ok((lines, all_ok))
}

fn involution_check(q: &QuadraticAlgebra) -> Result<Option<String>, Error> {
    let ring = q.ring().clone();
    let samples = [
        q.generator(),
        q.element(ring.from_int(3), ring.from_int(-2)),
        q.element(ring.from_int(-7), ring.from_int(5)),
    ];
    for e in &samples {
        let s = q.involution(e);
        if q.involution(&s) != *e {
            return Err(Error::Internal("involution is not an involution".into()));
        }
        if q.mul(e, &s) != q.element(q.norm(e), ring.zero()) {
            return Err(Error::Internal("e·σ(e) is not the norm".into()));
        }
        if q.add(e, &s) != q.element(q.trace(e), ring.zero()) {
            return Err(Error::Internal("e + σ(e) is not the trace".into()));
        }
    }
    Ok(None)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are successes; argument errors are
            // parse errors (exit 1).
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
