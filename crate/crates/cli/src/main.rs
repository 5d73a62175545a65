//! Command line front end: element calculators, structure map tools,
//! point count reports, construction builders, and the verification
//! suite. Machine output is JSON behind `--json`, human output is
//! aligned text. Exit codes: 0 when every requested check passes, 1 when
//! a check fails, 2 on malformed input.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use zornoct::census::{
    count_locus, count_quadric_points, predicted_locus_count, predicted_quadric_count,
    verify_quotient_identities, CountReport, LocusKind,
};
use zornoct::constructions::{find_mk_cubic, mk_cover_check, mk_polys, power_row_witness, suslin_matrix};
use zornoct::g2::{
    apply_to_zorn, derivation_basis, left_mult_matrix, phi_matrix, DerivationConstraint, SL3Elt,
};
use zornoct::linalg::Mat;
use zornoct::oct::norm_gram;
use zornoct::parse::parse_elt;
use zornoct::points::DEFAULT_BUDGET;
use zornoct::serial::{
    oct_json, parse_oct_json, parse_ring_descriptor, parse_zorn_json, ring_descriptor, zorn_json,
};
use zornoct::suite::{run_suite, SuiteConfig};
use zornoct::zorn::{Module3, UnimodularRow, ZornAlgebra};
use zornoct::{quadric_ring, Error, RingCtx, RingElt};

#[derive(Parser)]
#[command(name = "zornoct", version, about = "Exact split octonion and vector matrix arithmetic")]
struct Cli {
    /// Seed for randomized checks
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Maximum number of points any brute force enumeration may visit
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u128,

    /// Emit machine readable JSON instead of aligned text
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Split octonion calculator on self-describing JSON elements
    Oct(OctArgs),
    /// Zorn vector matrix calculator on self-describing JSON elements
    Zorn(ZornArgs),
    /// Structure maps: derivations, the unimodular action, left multiplication
    G2(G2Args),
    /// Point counts over small prime fields against closed formulas
    Census(CensusArgs),
    /// The cubic tower patching system
    Mk(MkArgs),
    /// Layered matrix of a row pair and its determinant identity
    Suslin(SuslinArgs),
    /// Power row over the seven dimensional quadric ring with its witness
    RowWitness(RowWitnessArgs),
    /// Run the verification suite
    Suite(SuiteArgs),
}

#[derive(Args)]
struct OctArgs {
    #[command(subcommand)]
    op: OctOp,
}

#[derive(Subcommand)]
enum OctOp {
    /// Multiply two elements
    Mul {
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
    },
    /// Norm of an element
    Norm {
        #[arg(long)]
        u: String,
    },
    /// Trace of an element
    Trace {
        #[arg(long)]
        u: String,
    },
    /// Conjugate of an element
    Conj {
        #[arg(long)]
        u: String,
    },
    /// Inverse of a unit norm element
    Inverse {
        #[arg(long)]
        u: String,
    },
}

#[derive(Args)]
struct ZornArgs {
    /// Row entries defining the module, comma separated polynomial text
    #[arg(long, requires = "wit")]
    row: Option<String>,

    /// Witness entries for the row, comma separated polynomial text
    #[arg(long, requires = "row")]
    wit: Option<String>,

    #[command(subcommand)]
    op: ZornOp,
}

#[derive(Subcommand)]
enum ZornOp {
    /// Multiply two elements
    Mul {
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
    },
    /// Norm of an element
    Norm {
        #[arg(long)]
        u: String,
    },
    /// Trace of an element
    Trace {
        #[arg(long)]
        u: String,
    },
    /// Conjugate of an element
    Conj {
        #[arg(long)]
        u: String,
    },
}

#[derive(Args)]
struct G2Args {
    #[command(subcommand)]
    op: G2Op,
}

#[derive(Subcommand)]
enum G2Op {
    /// Solve the Leibniz system on the standard basis
    Derivations {
        /// Coefficient field: Q, or Fp such as F5
        #[arg(long, default_value = "Q")]
        field: String,
        /// Also require vanishing on the diagonal quadratic subalgebra
        #[arg(long)]
        fix_c: bool,
    },
    /// Induced algebra map of a determinant one 3x3 matrix
    Phi {
        /// Nine comma separated entries, row major
        #[arg(long)]
        g: String,
        /// Coefficient field: Q, or Fp such as F5
        #[arg(long, default_value = "Q")]
        field: String,
        /// Verify multiplicativity on all 64 basis pairs
        #[arg(long)]
        check: bool,
    },
    /// Left multiplication matrix of a unit norm split octonion
    Leftmult {
        /// The element as self-describing JSON
        #[arg(long)]
        x: String,
    },
}

#[derive(Args)]
struct CensusArgs {
    /// Comma separated prime field sizes
    #[arg(long, default_value = "2,3")]
    q: String,

    /// Output format
    #[arg(long, value_parser = ["table", "json"], default_value = "table")]
    report: String,
}

#[derive(Args)]
struct MkArgs {
    #[command(subcommand)]
    op: MkOp,
}

#[derive(Subcommand)]
enum MkOp {
    /// Build the tower from a cubic over a prime field
    Build {
        /// The cubic, polynomial text in x
        #[arg(long)]
        f: String,
        /// Prime field size
        #[arg(long)]
        q: u64,
        /// The unit constant threaded through the tower
        #[arg(long, default_value_t = 1)]
        a: i64,
        /// Exponent of the final variable in the cover form
        #[arg(long, default_value_t = 27)]
        exponent: u64,
        /// Verify that the top two forms vanish together only inside the
        /// final form's zero set, over all points of the base field
        #[arg(long)]
        check_cover: bool,
        /// Print the tower forms as polynomial text
        #[arg(long)]
        print_forms: bool,
    },
    /// Find the first prime and monic cubic whose composite with x^27 is
    /// irreducible
    Search {
        /// Largest prime to try
        #[arg(long, default_value_t = 50)]
        q_limit: u64,
    },
}

#[derive(Args)]
struct SuslinArgs {
    /// Row entries, comma separated polynomial text
    #[arg(long)]
    v: String,

    /// Witness entries, comma separated polynomial text
    #[arg(long)]
    w: String,

    /// Ring descriptor JSON for the entries
    #[arg(long, default_value = r#"{"kind":"Z"}"#)]
    ring: String,
}

#[derive(Args)]
struct RowWitnessArgs {
    /// Power applied to the first coordinate
    #[arg(long)]
    n: u64,

    /// Base field of the quadric ring: Q, or Fp such as F5
    #[arg(long, default_value = "Q")]
    field: String,
}

#[derive(Args)]
struct SuiteArgs {
    /// Glob over check ids and labels; everything runs when absent
    #[arg(long)]
    filter: Option<String>,
}

fn parse_field(text: &str) -> Result<RingCtx, Error> {
    if text == "Q" {
        return Ok(RingCtx::rationals());
    }
    if let Some(rest) = text.strip_prefix('F') {
        let p: u64 = rest
            .parse()
            .map_err(|_| Error::ParseError { pos: 1, msg: format!("bad field size {rest:?}") })?;
        return RingCtx::prime_field(p);
    }
    Err(Error::ParseError { pos: 0, msg: format!("unknown field {text:?}, use Q or Fp") })
}

fn parse_entries(text: &str, ctx: &RingCtx) -> Result<Vec<RingElt>, Error> {
    text.split(',').map(|part| parse_elt(part.trim(), ctx)).collect()
}

fn mat_to_value(m: &Mat) -> Value {
    let rows: Vec<Value> = (0..m.rows())
        .map(|i| {
            Value::Array((0..m.cols()).map(|j| Value::String(m.at(i, j).to_text())).collect())
        })
        .collect();
    Value::Array(rows)
}

fn print_mat(m: &Mat) {
    let rendered: Vec<Vec<String>> = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.at(i, j).to_text()).collect())
        .collect();
    let mut widths = vec![0usize; m.cols()];
    for row in &rendered {
        for (j, cell) in row.iter().enumerate() {
            widths[j] = widths[j].max(cell.len());
        }
    }
    for row in &rendered {
        let line: Vec<String> =
            row.iter().enumerate().map(|(j, cell)| format!("{:>w$}", cell, w = widths[j])).collect();
        println!("[ {} ]", line.join("  "));
    }
}

fn count_table(reports: &[CountReport]) -> String {
    let mut out = String::new();
    let wlabel = reports.iter().map(|r| r.label.len()).max().unwrap_or(0);
    for r in reports {
        out.push_str(&format!(
            "{:<wlabel$}  q = {}  observed {:>8}  predicted {:>8}  {}\n",
            r.label,
            r.q,
            r.observed,
            r.predicted,
            if r.matches { "ok" } else { "MISMATCH" },
        ));
    }
    out
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.cmd {
        Cmd::Oct(args) => run_oct(args, cli.json),
        Cmd::Zorn(args) => run_zorn(args, cli.json),
        Cmd::G2(args) => run_g2(args, cli.json),
        Cmd::Census(args) => run_census(args, cli.budget, cli.json),
        Cmd::Mk(args) => run_mk(args, cli.budget, cli.json),
        Cmd::Suslin(args) => run_suslin(args, cli.json),
        Cmd::RowWitness(args) => run_row_witness(args, cli.json),
        Cmd::Suite(args) => run_suite_cmd(args, cli.seed, cli.budget, cli.json),
    }
}

fn print_oct(o: &zornoct::oct::SplitOct, json: bool) {
    if json {
        println!("{}", oct_json(o));
    } else {
        let c = o.coords();
        let texts: Vec<String> = c.iter().map(|e| e.to_text()).collect();
        println!("m1 = [{}, {}; {}, {}]", texts[0], texts[1], texts[2], texts[3]);
        println!("m2 = [{}, {}; {}, {}]", texts[4], texts[5], texts[6], texts[7]);
        println!("norm  = {}", o.norm().to_text());
        println!("trace = {}", o.trace().to_text());
    }
}

fn run_oct(args: OctArgs, json: bool) -> Result<u8, Error> {
    match args.op {
        OctOp::Mul { u, v } => {
            let a = parse_oct_json(&u)?;
            let b = parse_oct_json(&v)?;
            print_oct(&a.mul(&b)?, json);
        }
        OctOp::Norm { u } => {
            let a = parse_oct_json(&u)?;
            println!("{}", a.norm().to_text());
        }
        OctOp::Trace { u } => {
            let a = parse_oct_json(&u)?;
            println!("{}", a.trace().to_text());
        }
        OctOp::Conj { u } => {
            let a = parse_oct_json(&u)?;
            print_oct(&a.conj(), json);
        }
        OctOp::Inverse { u } => {
            let a = parse_oct_json(&u)?;
            print_oct(&a.inverse()?, json);
        }
    }
    Ok(0)
}

fn zorn_algebra_for(
    elt_text: &str,
    row: &Option<String>,
    wit: &Option<String>,
) -> Result<ZornAlgebra, Error> {
    let value: Value = serde_json::from_str(elt_text)
        .map_err(|e| Error::ParseError { pos: 0, msg: e.to_string() })?;
    let ring_value = value
        .get("ring")
        .ok_or_else(|| Error::ParseError { pos: 0, msg: "element lacks a ring field".into() })?;
    let ctx = zornoct::serial::parse_ring_value(ring_value)?;
    match (row, wit) {
        (Some(r), Some(w)) => {
            let row = parse_entries(r, &ctx)?;
            let wit = parse_entries(w, &ctx)?;
            Ok(ZornAlgebra::new(Module3::from_row(UnimodularRow::new(row, wit)?)))
        }
        _ => Ok(ZornAlgebra::free(&ctx)),
    }
}

fn print_zorn(alg: &ZornAlgebra, u: &zornoct::zorn::ZornElt, json: bool) {
    if json {
        println!("{}", zorn_json(u));
    } else {
        let xp: Vec<String> = u.xplus.iter().map(|e| e.to_text()).collect();
        let xm: Vec<String> = u.xminus.iter().map(|e| e.to_text()).collect();
        println!("a1     = {}", u.a1.to_text());
        println!("xplus  = [{}]", xp.join(", "));
        println!("xminus = [{}]", xm.join(", "));
        println!("a2     = {}", u.a2.to_text());
        println!("norm   = {}", alg.norm(u).to_text());
        println!("trace  = {}", alg.trace(u).to_text());
    }
}

fn run_zorn(args: ZornArgs, json: bool) -> Result<u8, Error> {
    match &args.op {
        ZornOp::Mul { u, v } => {
            let alg = zorn_algebra_for(u, &args.row, &args.wit)?;
            let a = parse_zorn_json(&alg, u)?;
            let b = parse_zorn_json(&alg, v)?;
            print_zorn(&alg, &alg.mul(&a, &b)?, json);
        }
        ZornOp::Norm { u } => {
            let alg = zorn_algebra_for(u, &args.row, &args.wit)?;
            let a = parse_zorn_json(&alg, u)?;
            println!("{}", alg.norm(&a).to_text());
        }
        ZornOp::Trace { u } => {
            let alg = zorn_algebra_for(u, &args.row, &args.wit)?;
            let a = parse_zorn_json(&alg, u)?;
            println!("{}", alg.trace(&a).to_text());
        }
        ZornOp::Conj { u } => {
            let alg = zorn_algebra_for(u, &args.row, &args.wit)?;
            let a = parse_zorn_json(&alg, u)?;
            print_zorn(&alg, &alg.conj(&a), json);
        }
    }
    Ok(0)
}

fn run_g2(args: G2Args, json: bool) -> Result<u8, Error> {
    match args.op {
        G2Op::Derivations { field, fix_c } => {
            let ctx = parse_field(&field)?;
            let constraint =
                if fix_c { DerivationConstraint::FixC } else { DerivationConstraint::Full };
            let report = derivation_basis(&ctx, constraint)?;
            if json {
                let basis: Vec<Value> = report.basis.iter().map(mat_to_value).collect();
                let out = json!({
                    "dimension": report.dimension,
                    "field": field,
                    "fix_c": fix_c,
                    "basis": basis,
                });
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            } else {
                println!(
                    "derivation space over {field}{} has dimension {}",
                    if fix_c { " fixing the diagonal subalgebra" } else { "" },
                    report.dimension
                );
            }
            Ok(0)
        }
        G2Op::Phi { g, field, check } => {
            let ctx = parse_field(&field)?;
            let entries = parse_entries(&g, &ctx)?;
            if entries.len() != 9 {
                return Err(Error::LengthMismatch { expected: 9, got: entries.len() });
            }
            let rows: Vec<Vec<RingElt>> =
                entries.chunks(3).map(|chunk| chunk.to_vec()).collect();
            let g = SL3Elt::new(Mat::from_rows(&ctx, rows)?)?;
            let alg = ZornAlgebra::free(&ctx);
            let m = phi_matrix(&alg, &g)?;
            let mut ok = true;
            if check {
                let basis = alg.basis()?;
                let images: Vec<_> = basis
                    .iter()
                    .map(|b| apply_to_zorn(&alg, &m, b))
                    .collect::<Result<_, _>>()?;
                for i in 0..8 {
                    for j in 0..8 {
                        let lhs = apply_to_zorn(&alg, &m, &alg.mul(&basis[i], &basis[j])?)?;
                        let rhs = alg.mul(&images[i], &images[j])?;
                        if lhs != rhs {
                            ok = false;
                        }
                    }
                }
            }
            if json {
                let out = json!({
                    "field": field,
                    "matrix": mat_to_value(&m),
                    "checked": check,
                    "automorphism": if check { Value::Bool(ok) } else { Value::Null },
                });
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            } else {
                print_mat(&m);
                if check {
                    println!(
                        "automorphism on 64 basis pairs: {}",
                        if ok { "ok" } else { "MISMATCH" }
                    );
                }
            }
            Ok(if ok { 0 } else { 1 })
        }
        G2Op::Leftmult { x } => {
            let o = parse_oct_json(&x)?;
            let l = left_mult_matrix(&o)?;
            let gram = norm_gram(o.ctx());
            let preserves = l.transpose().mul(&gram)?.mul(&l)? == gram;
            let det_one = l.det()?.is_one();
            if json {
                let out = json!({
                    "matrix": mat_to_value(&l),
                    "preserves_gram": preserves,
                    "det_one": det_one,
                });
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            } else {
                print_mat(&l);
                println!("preserves the norm Gram matrix: {preserves}");
                println!("determinant one: {det_one}");
            }
            Ok(if preserves && det_one { 0 } else { 1 })
        }
    }
}

fn run_census(args: CensusArgs, budget: u128, json_flag: bool) -> Result<u8, Error> {
    let mut reports: Vec<CountReport> = Vec::new();
    for part in args.q.split(',') {
        let q: u64 = part
            .trim()
            .parse()
            .map_err(|_| Error::ParseError { pos: 0, msg: format!("bad field size {part:?}") })?;
        reports.extend(verify_quotient_identities(q, budget)?);
        let norm_locus = count_locus(LocusKind::Norm1, q, budget)?;
        reports.push(CountReport {
            label: "norm 1 locus = Q7".into(),
            q,
            observed: norm_locus,
            predicted: predicted_quadric_count(7, q)?,
            matches: norm_locus == predicted_quadric_count(7, q)?,
        });
        let affine = count_locus(LocusKind::Trace1Norm0, q, budget)?;
        reports.push(CountReport {
            label: "trace 1, norm 0 locus = Q6".into(),
            q,
            observed: affine,
            predicted: predicted_locus_count(LocusKind::Trace1Norm0, q)?,
            matches: affine == predicted_locus_count(LocusKind::Trace1Norm0, q)?,
        });
        let quadric = count_quadric_points(6, q, budget)?;
        if affine != quadric {
            reports.last_mut().unwrap().matches = false;
        }
    }
    let all_ok = reports.iter().all(|r| r.matches);
    if json_flag || args.report == "json" {
        println!("{}", serde_json::to_string_pretty(&reports).unwrap());
    } else {
        print!("{}", count_table(&reports));
    }
    Ok(if all_ok { 0 } else { 1 })
}

fn run_mk(args: MkArgs, budget: u128, json: bool) -> Result<u8, Error> {
    match args.op {
        MkOp::Build { f, q, a, exponent, check_cover, print_forms } => {
            let field = RingCtx::prime_field(q)?;
            let xring = RingCtx::polynomial(&field, &["x"])?;
            let f = parse_elt(&f, &xring)?;
            let a = xring.from_i64(a);
            let sys = mk_polys(&f, &a, exponent)?;
            let report = sys.report();
            let cover =
                if check_cover { Some(mk_cover_check(&sys, budget)?) } else { None };
            let ok = cover.as_ref().map(|c| c.covered).unwrap_or(true);
            if json {
                let mut out = json!({
                    "q": q,
                    "f": f.to_text(),
                    "report": serde_json::to_value(&report).unwrap(),
                });
                if let Some(c) = &cover {
                    out["cover"] = serde_json::to_value(c).unwrap();
                }
                if print_forms {
                    let forms: Vec<String> =
                        sys.forms().iter().map(|p| p.to_text()).collect();
                    out["forms"] = json!(forms);
                    out["g"] = json!(sys.g().to_text());
                }
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            } else {
                println!("exponents t = {:?}", report.t);
                println!("degrees     = {:?}", report.degrees);
                println!("homogeneous = {:?}", report.homogeneous);
                println!(
                    "cover form degree {} (homogeneous: {})",
                    report.g_degree, report.g_homogeneous
                );
                if print_forms {
                    for (i, form) in sys.forms().iter().enumerate() {
                        println!("F{} = {}", i + 1, form.to_text());
                    }
                    println!("G  = {}", sys.g().to_text());
                }
                if let Some(c) = &cover {
                    println!(
                        "cover over F_{}: {} points, {} common zeros of (F3, G), {} violations, covered: {}",
                        c.q, c.points, c.common_zeros, c.violations, c.covered
                    );
                }
            }
            Ok(if ok { 0 } else { 1 })
        }
        MkOp::Search { q_limit } => {
            let (q, f) = find_mk_cubic(q_limit)?;
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({ "q": q, "f": f.to_text() })).unwrap()
                );
            } else {
                println!("first admissible prime: {q}");
                println!("cubic: {}", f.to_text());
            }
            Ok(0)
        }
    }
}

fn run_suslin(args: SuslinArgs, json: bool) -> Result<u8, Error> {
    let ctx = parse_ring_descriptor(&args.ring)?;
    let v = parse_entries(&args.v, &ctx)?;
    let w = parse_entries(&args.w, &ctx)?;
    let s = suslin_matrix(&v, &w)?;
    let matches = s.det_matches()?;
    if json {
        let out = json!({
            "ring": serde_json::from_str::<Value>(&ring_descriptor(&ctx)).unwrap(),
            "size": s.size(),
            "matrix": mat_to_value(s.mat()),
            "det": s.det()?.to_text(),
            "expected_det": s.expected_det().to_text(),
            "match": matches,
        });
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        print_mat(s.mat());
        println!("det          = {}", s.det()?.to_text());
        println!("expected det = {}", s.expected_det().to_text());
        println!("match: {matches}");
    }
    Ok(if matches { 0 } else { 1 })
}

fn run_row_witness(args: RowWitnessArgs, json: bool) -> Result<u8, Error> {
    let base = parse_field(&args.field)?;
    let ring = quadric_ring(7, &base)?;
    let row = power_row_witness(args.n, &ring)?;
    if json {
        let v: Vec<String> = row.v().iter().map(|e| e.to_text()).collect();
        let w: Vec<String> = row.w().iter().map(|e| e.to_text()).collect();
        let out = json!({
            "n": args.n,
            "ring": serde_json::from_str::<Value>(&ring_descriptor(&ring)).unwrap(),
            "row": v,
            "witness": w,
        });
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        let v: Vec<String> = row.v().iter().map(|e| e.to_text()).collect();
        let w: Vec<String> = row.w().iter().map(|e| e.to_text()).collect();
        println!("row     = [{}]", v.join(", "));
        println!("witness = [{}]", w.join(", "));
        println!("pairing reduces to 1: true");
    }
    Ok(0)
}

fn run_suite_cmd(args: SuiteArgs, seed: u64, budget: u128, json: bool) -> Result<u8, Error> {
    let cfg = SuiteConfig { seed, budget, filter: args.filter };
    let matrix = run_suite(&cfg);
    if json {
        println!("{}", matrix.to_json());
    } else {
        print!("{}", matrix.render_table());
    }
    Ok(if matrix.passed() { 0 } else { 1 })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
