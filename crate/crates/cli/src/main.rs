//! `crossed-hopf`: load algebras and modules, build crossed coproducts and
//! Turaev components, and run the exhaustive identity checkers.
//!
//! Exit codes: 0 when every check passes, 1 when an identity is violated
//! (the first witness goes to stderr), 2 for malformed input.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use crossed_hopf::crossed::{diagonal_crossed_coproduct, drinfeld_codouble, h_alpha_beta, verify_coalgebra, Coalgebra};
use crossed_hopf::group::{
    builtin_group, check_grading_laws, check_oracle_equivalence, enumerate_automorphisms, group_algebra_over,
    group_pairs, sweedler_automorphism, sweedler_fixture, FiniteGroup,
};
use crossed_hopf::hopf::{close_pairs, verify_hopf_axioms, GPair, HopfAlgebra};
use crossed_hopf::io::{self, coalgebra_to_value, pair_to_value, to_text};
use crossed_hopf::turaev::{
    sample_indices, verify_sigma_braiding, verify_turaev_axioms, AssocMode, Sample, Scope, TuraevFamily, TuraevOptions,
};
use crossed_hopf::yd::{
    canonical_yd, conjugate_yd, from_comodule, tensor_yd, to_comodule, verify_braiding, verify_comodule,
    verify_conjugation_invariance, verify_hexagons, verify_rigidity, verify_yd, YdModule,
};
use crossed_hopf::{Check, Field, Report};

#[derive(Parser)]
#[command(name = "crossed-hopf", version, about = "Exact checks for crossed coproducts, twisted YD modules and Turaev group-coalgebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Hopf axioms of an algebra file (or the coalgebra axioms of a coalgebra file).
    VerifyHopf {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// Construct a coalgebra and write it as JSON.
    Build {
        #[arg(value_enum)]
        kind: BuildKind,
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Label file {"alpha", "beta"}.
        #[arg(long, conflicts_with = "pair_index")]
        pair: Option<PathBuf>,
        /// Index into the `--pairs all` ordering.
        #[arg(long)]
        pair_index: Option<usize>,
        /// Bimodule coalgebra file (crossed-coproduct only).
        #[arg(long, conflicts_with_all = ["pair", "pair_index"])]
        bimodule: Option<PathBuf>,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, default_value_t = 64)]
        cap: usize,
    },
    /// Run a family of identity checks over a pair set.
    Check(CheckArgs),
    /// Write the group algebra, the group table and Aut(π) as JSON files.
    OracleGroup {
        /// Builtin name (Z2, Z3, Z4, Z2xZ2, S3) or a group table file.
        group: String,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, default_value = "Q")]
        field: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum BuildKind {
    Codouble,
    CrossedCoproduct,
    CtComponent,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckKind {
    Yd,
    Braiding,
    Rigidity,
    Correspondence,
    Turaev,
    Tct,
    Oracle,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Human,
    JsonLines,
}

#[derive(Args)]
struct AlgebraArgs {
    /// Builtin group name or group table file; H is its group algebra.
    #[arg(long, conflicts_with = "hopf")]
    group: Option<String>,
    /// Hopf algebra file, or `sweedler`.
    #[arg(long)]
    hopf: Option<String>,
    /// Q, a prime p, or GF(p); applies to --group and --hopf sweedler.
    #[arg(long)]
    field: Option<String>,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(value_enum)]
    kind: CheckKind,
    #[command(flatten)]
    algebra: AlgebraArgs,
    /// `all`, or a file of generator pairs closed under the twisted product.
    #[arg(long, default_value = "all")]
    pairs: String,
    /// Closure cap for generated pair sets.
    #[arg(long, default_value_t = 64)]
    cap: usize,
    /// YD module files; defaults to the canonical module of every pair.
    #[arg(long = "module")]
    modules: Vec<PathBuf>,
    /// Percentage of tuples kept in ternary sweeps.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=100))]
    sample: Option<u32>,
    #[arg(long, requires = "sample")]
    seed: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Worker threads over independent items.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Write the report here instead of stdout.
    #[arg(long)]
    report: Option<PathBuf>,
}

/// Malformed input: exit code 2.
#[derive(Debug)]
struct InputError(String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

macro_rules! input_error_from {
    ($($t:ty),*) => {
        $(impl From<$t> for InputError {
            fn from(e: $t) -> Self {
                InputError(e.to_string())
            }
        })*
    };
}

input_error_from!(
    io::IoError,
    std::io::Error,
    crossed_hopf::hopf::HopfError,
    crossed_hopf::crossed::CrossedError,
    crossed_hopf::yd::YdError,
    crossed_hopf::group::GroupError,
    crossed_hopf::turaev::TuraevError
);

type Res<T> = Result<T, InputError>;

fn fail<T>(msg: impl Into<String>) -> Res<T> {
    Err(InputError(msg.into()))
}

fn read_json(path: &Path) -> Res<Value> {
    let text = fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    io::parse_json(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn write_text(path: &Path, text: &str) -> Res<()> {
    fs::write(path, text).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn parse_field(s: &str) -> Res<Field> {
    let t = s.trim();
    if t == "Q" {
        return Ok(Field::Rational);
    }
    let digits = t.strip_prefix("GF(").and_then(|r| r.strip_suffix(')')).unwrap_or(t);
    match digits.parse::<u64>() {
        Ok(p) => Field::prime(p).map_err(|e| InputError(e.to_string())),
        Err(_) => fail(format!("unknown field '{s}' (expected Q, p or GF(p))")),
    }
}

fn load_group(source: &str) -> Res<FiniteGroup> {
    match builtin_group(source) {
        Ok(g) => Ok(g),
        Err(_) if Path::new(source).is_file() => Ok(io::group_from_value(&read_json(Path::new(source))?)?),
        Err(e) => fail(format!("{e}; not a file either")),
    }
}

enum Source {
    Group(FiniteGroup),
    Sweedler,
    File,
}

struct Algebra {
    h: HopfAlgebra,
    source: Source,
    name: String,
}

fn load_algebra(a: &AlgebraArgs) -> Res<Algebra> {
    let field = a.field.as_deref().map(parse_field).transpose()?;
    match (&a.group, &a.hopf) {
        (Some(g), None) => {
            let pi = load_group(g)?;
            let h = group_algebra_over(&pi, field.unwrap_or(Field::Rational));
            Ok(Algebra { h, source: Source::Group(pi), name: format!("k({g})") })
        }
        (None, Some(s)) if s == "sweedler" => {
            let h = sweedler_fixture(field.unwrap_or(Field::Rational))?;
            Ok(Algebra { h, source: Source::Sweedler, name: "sweedler".into() })
        }
        (None, Some(path)) => {
            let h = io::hopf_from_value(&read_json(Path::new(path))?)?;
            if let Some(f) = field {
                if f != h.field() {
                    return fail(format!("--field {f} differs from the file's field {}", h.field()));
                }
            }
            Ok(Algebra { h, source: Source::File, name: path.clone() })
        }
        _ => fail("give exactly one of --group or --hopf"),
    }
}

/// The pair set and whether the closure hit the cap.
fn load_pairs(alg: &Algebra, source: &str, cap: usize) -> Res<(Vec<GPair>, bool)> {
    let h = &alg.h;
    if source == "all" {
        return match &alg.source {
            Source::Group(pi) => Ok((group_pairs(h, pi)?, false)),
            Source::Sweedler => {
                let f = h.field();
                let mut gens = Vec::new();
                for l in [-1, 2] {
                    let phi = sweedler_automorphism(h, &f.from_i64(l))?;
                    let id = crossed_hopf::hopf::HopfAutomorphism::identity(h);
                    gens.push(GPair::new(phi.clone(), id.clone())?);
                    gens.push(GPair::new(id, phi)?);
                }
                Ok(close_pairs(h, &gens, cap)?)
            }
            Source::File => fail("--pairs all needs --group or --hopf sweedler; pass a pair file instead"),
        };
    }
    let v = read_json(Path::new(source))?;
    let items = match v.get("pairs").unwrap_or(&v) {
        Value::Array(a) => a.clone(),
        other @ Value::Object(_) => vec![other.clone()],
        _ => return fail(format!("{source}: expected an array of pairs")),
    };
    let gens = items.iter().map(|p| io::pair_from_value(h, p)).collect::<Result<Vec<_>, _>>()?;
    Ok(close_pairs(h, &gens, cap)?)
}

fn load_modules(alg: &Algebra, paths: &[PathBuf], pairs: &[GPair]) -> Res<Vec<YdModule>> {
    if paths.is_empty() {
        return pairs.iter().map(|g| Ok(canonical_yd(&alg.h, g)?)).collect();
    }
    paths
        .iter()
        .map(|p| io::yd_from_value(&alg.h, &read_json(p)?).map_err(|e| InputError(format!("{}: {e}", p.display()))))
        .collect()
}

/// Order-stable map over `items` on `jobs` threads.
fn par_map<T: Sync, R: Send>(items: &[T], jobs: usize, f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    let jobs = jobs.max(1).min(items.len().max(1));
    if jobs == 1 {
        return items.iter().map(f).collect();
    }
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<R>>> = Mutex::new((0..items.len()).map(|_| None).collect());
    std::thread::scope(|s| {
        for _ in 0..jobs {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= items.len() {
                    break;
                }
                let r = f(&items[i]);
                slots.lock().expect("no worker panicked")[i] = Some(r);
            });
        }
    });
    slots.into_inner().expect("no worker panicked").into_iter().map(|r| r.expect("every item ran")).collect()
}

fn prefixed(mut r: Report, prefix: &str) -> Report {
    for c in &mut r.checks {
        c.location = format!("{prefix}: {}", c.location);
    }
    r
}

fn emit(report: &Report, format: Format, dest: Option<&Path>) -> Res<ExitCode> {
    let text = match format {
        Format::Human => report.to_human(),
        Format::JsonLines => report.to_json_lines(),
    };
    match dest {
        Some(p) => write_text(p, &text)?,
        None => print!("{text}"),
    }
    Ok(verdict(report))
}

fn verdict(report: &Report) -> ExitCode {
    match report.first_failure() {
        Some(c) => {
            eprintln!("{c}");
            ExitCode::from(1)
        }
        None => ExitCode::SUCCESS,
    }
}

fn cmd_verify_hopf(path: &Path, format: Format) -> Res<ExitCode> {
    let v = read_json(path)?;
    let mut r = Report::new();
    if io::is_hopf_value(&v) {
        let h = io::hopf_from_value(&v)?;
        r.note("object", "Hopf algebra");
        r.note("dim", h.dim().to_string());
        r.extend(verify_hopf_axioms(&h));
    } else {
        let c = io::coalgebra_from_value(&v)?;
        r.note("object", "coalgebra");
        r.note("dim", c.dim().to_string());
        r.extend(verify_coalgebra(&c, "C"));
    }
    emit(&r, format, None)
}

fn pick_pair(alg: &Algebra, pair: Option<&Path>, index: Option<usize>, cap: usize) -> Res<Option<GPair>> {
    if let Some(p) = pair {
        return Ok(Some(io::pair_from_value(&alg.h, &read_json(p)?)?));
    }
    match index {
        Some(i) => {
            let (pairs, _) = load_pairs(alg, "all", cap)?;
            match pairs.get(i) {
                Some(g) => Ok(Some(g.clone())),
                None => fail(format!("--pair-index {i} out of range (0..{})", pairs.len())),
            }
        }
        None => Ok(None),
    }
}

struct BuildArgs<'a> {
    kind: BuildKind,
    algebra: &'a AlgebraArgs,
    pair: Option<&'a Path>,
    pair_index: Option<usize>,
    bimodule: Option<&'a Path>,
    output: &'a Path,
    cap: usize,
}

fn cmd_build(b: BuildArgs) -> Res<ExitCode> {
    let alg = load_algebra(b.algebra)?;
    let h = &alg.h;
    let (coalgebra, label): (Coalgebra, Option<GPair>) = match b.kind {
        BuildKind::Codouble => {
            if b.pair.is_some() || b.pair_index.is_some() || b.bimodule.is_some() {
                return fail("codouble takes no pair or bimodule");
            }
            (drinfeld_codouble(h)?, None)
        }
        BuildKind::CrossedCoproduct => {
            if let Some(p) = b.bimodule {
                let c = io::bimodule_from_value(h, &read_json(p)?)?;
                (diagonal_crossed_coproduct(h, &c)?, None)
            } else {
                match pick_pair(&alg, b.pair, b.pair_index, b.cap)? {
                    Some(g) => (diagonal_crossed_coproduct(h, &h_alpha_beta(h, &g)?)?, Some(g)),
                    None => return fail("crossed-coproduct needs --bimodule, --pair or --pair-index"),
                }
            }
        }
        BuildKind::CtComponent => {
            let g = pick_pair(&alg, b.pair, b.pair_index, b.cap)?.unwrap_or_else(|| crossed_hopf::hopf::g_unit(h));
            let fam = TuraevFamily::new(h)?;
            let c = fam.component(&g)?.coalgebra().clone();
            (c, Some(g))
        }
    };
    let mut v = coalgebra_to_value(&coalgebra, Some("H* major"));
    if let Some(g) = &label {
        v.as_object_mut().expect("object").insert("label".into(), pair_to_value(g));
    }
    let text = to_text(&v);
    write_text(b.output, &text)?;
    // the written file is what gets checked
    let back = io::coalgebra_from_value(&io::parse_json(&text)?)?;
    let mut r = Report::new();
    r.note("algebra", alg.name.clone());
    r.note("output", b.output.display().to_string());
    r.note("dim", back.dim().to_string());
    r.extend(verify_coalgebra(&back, "output"));
    emit(&r, Format::Human, None)
}

fn cmd_oracle_group(source: &str, dir: &Path, field: &str) -> Res<ExitCode> {
    let pi = load_group(source)?;
    let h = group_algebra_over(&pi, parse_field(field)?);
    let auts = enumerate_automorphisms(&pi, 24)?;
    let mut list = Vec::with_capacity(auts.len());
    for a in &auts {
        list.push(io::automorphism_to_value(&a.to_hopf(&h)?));
    }
    fs::create_dir_all(dir).map_err(|e| InputError(format!("{}: {e}", dir.display())))?;
    write_text(&dir.join("group.json"), &to_text(&io::group_to_value(&pi)))?;
    write_text(&dir.join("hopf.json"), &to_text(&io::hopf_to_value(&h)))?;
    write_text(&dir.join("automorphisms.json"), &to_text(&Value::Array(list)))?;
    let report = verify_hopf_axioms(&h);
    println!("order {}, |Aut| = {}, written to {}", pi.order(), auts.len(), dir.display());
    Ok(verdict(&report))
}

/// A sampled sweep over ordered k-tuples of 0..n.
fn tuples(n: usize, k: u32, sample: Option<Sample>, salt: u64) -> Vec<Vec<usize>> {
    let total = n.pow(k);
    sample_indices(total, sample, salt)
        .into_iter()
        .map(|mut t| {
            let mut out = vec![0; k as usize];
            for slot in out.iter_mut().rev() {
                *slot = t % n;
                t /= n;
            }
            out
        })
        .collect()
}

fn cmd_check(a: &CheckArgs) -> Res<ExitCode> {
    let alg = load_algebra(&a.algebra)?;
    let h = &alg.h;
    let (pairs, truncated) = load_pairs(&alg, &a.pairs, a.cap)?;
    if truncated {
        eprintln!("warning: pair closure truncated at {} elements", pairs.len());
    }
    let sample = a.sample.map(|percent| Sample { percent, seed: a.seed.unwrap_or(0) });
    let kind = match a.kind {
        CheckKind::Yd => "yd",
        CheckKind::Braiding => "braiding",
        CheckKind::Rigidity => "rigidity",
        CheckKind::Correspondence => "correspondence",
        CheckKind::Turaev => "turaev",
        CheckKind::Tct => "tct",
        CheckKind::Oracle => "oracle",
    };
    let mut r = Report::new();
    r.note("check", kind);
    r.note("algebra", alg.name.clone());
    r.note("field", h.field().to_string());
    r.note("pair_set", pairs.len().to_string());
    if truncated {
        r.note("pair_set_truncated", format!("cap {}", a.cap));
    }
    if let Some(s) = sample {
        r.note("sample_percent", s.percent.to_string());
        r.note("sample_seed", s.seed.to_string());
    }
    let jobs = a.jobs;
    let uses_modules = !matches!(a.kind, CheckKind::Turaev | CheckKind::Tct);
    let modules = if uses_modules { load_modules(&alg, &a.modules, &pairs)? } else { Vec::new() };
    if uses_modules {
        r.note("modules", modules.len().to_string());
    }
    let m = modules.len();
    match a.kind {
        CheckKind::Yd => {
            let singles: Vec<usize> = (0..m).collect();
            for (i, rep) in par_map(&singles, jobs, |&i| verify_yd(h, &modules[i])).into_iter().enumerate() {
                r.extend(prefixed(rep, &format!("M{i}")));
            }
            let twos = tuples(m, 2, sample, 11);
            let reps = par_map(&twos, jobs, |t| -> Res<Report> {
                Ok(prefixed(verify_yd(h, &tensor_yd(h, &modules[t[0]], &modules[t[1]])?), &format!("M{}⊗M{}", t[0], t[1])))
            });
            for rep in reps {
                r.extend(rep?);
            }
            let conj: Vec<Vec<usize>> = sample_indices(pairs.len() * m, sample, 12).into_iter().map(|t| vec![t / m.max(1), t % m.max(1)]).collect();
            let reps = par_map(&conj, jobs, |t| -> Res<Report> {
                let c = conjugate_yd(h, &pairs[t[0]], &modules[t[1]])?;
                Ok(prefixed(verify_yd(h, &c), &format!("^P{}M{}", t[0], t[1])))
            });
            for rep in reps {
                r.extend(rep?);
            }
        }
        CheckKind::Braiding => {
            let twos = tuples(m, 2, None, 0);
            let reps = par_map(&twos, jobs, |t| -> Res<Report> {
                Ok(prefixed(verify_braiding(h, &modules[t[0]], &modules[t[1]])?, &format!("c(M{},M{})", t[0], t[1])))
            });
            for rep in reps {
                r.extend(rep?);
            }
            let threes = tuples(m, 3, sample, 13);
            let reps = par_map(&threes, jobs, |t| -> Res<Report> {
                let rep = verify_hexagons(h, &modules[t[0]], &modules[t[1]], &modules[t[2]])?;
                Ok(prefixed(rep, &format!("(M{},M{},M{})", t[0], t[1], t[2])))
            });
            for rep in reps {
                r.extend(rep?);
            }
            let conj: Vec<usize> = sample_indices(pairs.len() * m * m, sample, 14);
            let checks = par_map(&conj, jobs, |&t| -> Res<Check> {
                let (p, i, j) = (t / (m * m), (t / m) % m, t % m);
                let mut c = verify_conjugation_invariance(h, &pairs[p], &modules[i], &modules[j])?;
                c.location = format!("P{p}, (M{i},M{j}): {}", c.location);
                Ok(c)
            });
            for c in checks {
                r.push(c?);
            }
        }
        CheckKind::Rigidity => {
            let singles: Vec<usize> = (0..m).collect();
            for (i, rep) in par_map(&singles, jobs, |&i| verify_rigidity(h, &modules[i])).into_iter().enumerate() {
                r.extend(prefixed(rep?, &format!("M{i}")));
            }
        }
        CheckKind::Correspondence => {
            let fam = TuraevFamily::new(h)?;
            let singles: Vec<usize> = (0..m).collect();
            let reps = par_map(&singles, jobs, |&i| -> Res<Report> {
                let md = &modules[i];
                let x = to_comodule(h, md)?;
                let comp = fam.component(md.label())?;
                let mut rep = verify_comodule(&x, comp.coalgebra())?;
                let back = from_comodule(h, &x)?;
                rep.push(if back == *md {
                    Check::pass("round-trip", "from_comodule(to_comodule(M))")
                } else {
                    Check::fail("round-trip", "from_comodule(to_comodule(M))", "structure maps differ")
                });
                Ok(prefixed(rep, &format!("M{i}")))
            });
            for rep in reps {
                r.extend(rep?);
            }
            let twos = tuples(m, 2, sample, 15);
            let reps = par_map(&twos, jobs, |t| -> Res<Report> {
                let rep = verify_sigma_braiding(&fam, &modules[t[0]], &modules[t[1]])?;
                Ok(prefixed(rep, &format!("(M{},M{})", t[0], t[1])))
            });
            for rep in reps {
                r.extend(rep?);
            }
        }
        CheckKind::Turaev | CheckKind::Tct => {
            let fam = TuraevFamily::new(h)?;
            let scope = if a.kind == CheckKind::Tct { Scope::Coquasitriangular } else { Scope::All };
            let opts = TuraevOptions { sample, assoc: AssocMode::Auto, scope };
            r.extend(verify_turaev_axioms(&fam, &pairs, &opts)?);
        }
        CheckKind::Oracle => {
            let Source::Group(pi) = &alg.source else {
                return fail("check oracle needs --group");
            };
            r.extend(check_oracle_equivalence(pi, &pairs)?);
            let twos = tuples(m, 2, sample, 16);
            let reps = par_map(&twos, jobs, |t| -> Res<Report> {
                Ok(prefixed(check_grading_laws(h, pi, &modules[t[0]], &modules[t[1]])?, &format!("(M{},M{})", t[0], t[1])))
            });
            for rep in reps {
                r.extend(rep?);
            }
        }
    }
    emit(&r, a.format, a.report.as_deref())
}

fn run(cli: Cli) -> Res<ExitCode> {
    match &cli.command {
        Command::VerifyHopf { path, format } => cmd_verify_hopf(path, *format),
        Command::Build { kind, algebra, pair, pair_index, bimodule, output, cap } => cmd_build(BuildArgs {
            kind: *kind,
            algebra,
            pair: pair.as_deref(),
            pair_index: *pair_index,
            bimodule: bimodule.as_deref(),
            output,
            cap: *cap,
        }),
        Command::Check(a) => cmd_check(a),
        Command::OracleGroup { group, output, field } => cmd_oracle_group(group, output, field),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fields_parse() {
        assert_eq!(parse_field("Q").unwrap(), Field::Rational);
        assert_eq!(parse_field("7").unwrap(), Field::Prime(7));
        assert_eq!(parse_field("GF(5)").unwrap(), Field::Prime(5));
        assert!(parse_field("GF(6)").is_err());
    }

    #[test]
    fn tuples_enumerate_in_lexicographic_order() {
        let t = tuples(3, 2, None, 0);
        assert_eq!(t.len(), 9);
        assert_eq!(t[5], vec![1, 2]);
    }

    #[test]
    fn par_map_keeps_order() {
        let xs: Vec<usize> = (0..50).collect();
        assert_eq!(par_map(&xs, 4, |x| x * x), xs.iter().map(|x| x * x).collect::<Vec<_>>());
    }
}
