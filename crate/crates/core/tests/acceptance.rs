//! Acceptance run: one line per criterion. Exits non-zero when any fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{edited, kpi, sweedler, GROUPS};
use crossed_hopf::crossed::{
    diagonal_crossed_coproduct, h_alpha_beta, verify_codouble_bimodule, verify_coalgebra,
};
use crossed_hopf::group::{
    builtin_group, check_oracle_equivalence, group_algebra, group_pairs, sweedler_automorphism, sweedler_pairs,
};
use crossed_hopf::hopf::{verify_hopf_axioms, GPair, HopfAlgebra, HopfAutomorphism};
use crossed_hopf::turaev::{verify_sigma_braiding, verify_turaev_axioms, Sample, TuraevFamily, TuraevOptions};
use crossed_hopf::yd::{
    canonical_yd, conjugate_yd, from_comodule, left_dual, tensor_yd, to_comodule, trivial_yd, verify_braiding,
    verify_comodule, verify_conjugation_invariance, verify_hexagons, verify_rigidity, verify_yd, YdModule,
};
use crossed_hopf::{Check, Report};
use serde_json::json;

const S3_SUBSET: [usize; 6] = [0, 1, 8, 15, 22, 35];
const S3_SAMPLE: Sample = Sample { percent: 20, seed: 2024 };

type Outcome = Result<Vec<Report>, String>;

fn require(r: Report, what: &str) -> Result<Report, String> {
    match r.first_failure() {
        Some(c) => Err(format!("{what}: {c}")),
        None => Ok(r),
    }
}

fn group(name: &str) -> (HopfAlgebra, Vec<GPair>) {
    let pi = builtin_group(name).unwrap();
    let h = group_algebra(&pi);
    let pairs = group_pairs(&h, &pi).unwrap();
    (h, pairs)
}

fn within(t: Duration, limit: Duration, what: &str) -> Result<(), String> {
    if t <= limit {
        Ok(())
    } else {
        Err(format!("{what} took {:.2} s, limit {:.0} s", t.as_secs_f64(), limit.as_secs_f64()))
    }
}

fn hopf_gate() -> Outcome {
    let start = Instant::now();
    let mut out = Vec::new();
    let mut fixtures: Vec<(String, HopfAlgebra)> = GROUPS.iter().map(|g| (g.to_string(), kpi(g))).collect();
    fixtures.push(("sweedler".into(), sweedler()));
    for (name, h) in &fixtures {
        out.push(require(verify_hopf_axioms(h), name)?);
        let last = h.dim() - 1;
        let bad = edited(h, |v| v["antipode"][0].as_array_mut().unwrap()[last] = json!("1"));
        let r = verify_hopf_axioms(&bad);
        match r.first_failure() {
            Some(c) if c.witness.as_deref().is_some_and(|w| w.contains("basis")) => out.push(r),
            _ => return Err(format!("corrupted {name} was not caught with a basis witness")),
        }
    }
    within(start.elapsed(), Duration::from_secs(1), "Hopf gate")?;
    Ok(out)
}

fn crossed_coproducts() -> Outcome {
    let mut out = Vec::new();
    for name in ["Z3", "S3"] {
        let start = Instant::now();
        let (h, pairs) = group(name);
        for g in &pairs {
            let c = diagonal_crossed_coproduct(&h, &h_alpha_beta(&h, g).unwrap()).map_err(|e| e.to_string())?;
            out.push(require(verify_coalgebra(&c, &format!("{name} {g}")), name)?);
        }
        if name == "S3" {
            within(start.elapsed(), Duration::from_secs(60), "S3 sweep")?;
        }
    }
    let h = sweedler();
    let f = h.field();
    let phi2 = sweedler_automorphism(&h, &f.from_i64(2)).unwrap();
    let id = HopfAutomorphism::identity(&h);
    for (a, b) in [(phi2.clone(), id.clone()), (id.clone(), phi2.clone()), (phi2.clone(), phi2.clone()), (phi2.inverse(), phi2)] {
        let g = GPair::new(a, b).unwrap();
        let c = diagonal_crossed_coproduct(&h, &h_alpha_beta(&h, &g).unwrap()).map_err(|e| e.to_string())?;
        out.push(require(verify_coalgebra(&c, "sweedler"), "sweedler")?);
    }
    Ok(out)
}

fn codouble_bimodules() -> Outcome {
    let mut out = Vec::new();
    for name in ["Z2", "Z3"] {
        let (h, pairs) = group(name);
        for g in &pairs {
            let c = h_alpha_beta(&h, g).unwrap();
            out.push(require(verify_codouble_bimodule(&h, &c).map_err(|e| e.to_string())?, name)?);
        }
    }
    Ok(out)
}

/// (α,β)(γ,δ) computed from the matrices, independent of g_mul.
fn stated_product(x: &GPair, y: &GPair) -> (crossed_hopf::LinMap, crossed_hopf::LinMap) {
    let d = y.beta().matrix();
    (d.compose(x.alpha().matrix()).compose(y.beta().inverse_matrix()).compose(y.alpha().matrix()), d.compose(x.beta().matrix()))
}

fn yd_suite(h: &HopfAlgebra, pairs: &[GPair], what: &str) -> Outcome {
    let e = |e: crossed_hopf::yd::YdError| e.to_string();
    let mods: Vec<YdModule> = pairs.iter().map(|g| canonical_yd(h, g).unwrap()).collect();
    let mut out = Vec::new();
    for m in &mods {
        for n in &mods {
            let t = tensor_yd(h, m, n).map_err(e)?;
            let (a, b) = stated_product(m.label(), n.label());
            if t.label().alpha().matrix() != &a || t.label().beta().matrix() != &b {
                return Err(format!("{what}: tensor label differs from (δαδ⁻¹γ, δβ)"));
            }
            out.push(require(verify_yd(h, &t), what)?);
            out.push(require(verify_braiding(h, m, n).map_err(e)?, what)?);
        }
    }
    for p in pairs {
        for n in &mods {
            let c = conjugate_yd(h, p, n).map_err(e)?;
            if stated_product(p, n.label()) != stated_product(c.label(), p) {
                return Err(format!("{what}: conjugate label differs from p·X·p⁻¹"));
            }
            out.push(require(verify_yd(h, &c), what)?);
            let mut r = Report::new();
            for m in &mods {
                r.push(verify_conjugation_invariance(h, p, m, n).map_err(e)?);
            }
            out.push(require(r, what)?);
        }
    }
    for u in &mods {
        for v in &mods {
            for w in &mods {
                out.push(require(verify_hexagons(h, u, v, w).map_err(e)?, what)?);
            }
        }
    }
    Ok(out)
}

fn yd_modules() -> Outcome {
    let (h, pairs) = group("Z3");
    let mut out = yd_suite(&h, &pairs, "Z3")?;
    let start = Instant::now();
    let (h, all) = group("S3");
    let subset: Vec<GPair> = S3_SUBSET.iter().map(|&i| all[i].clone()).collect();
    out.extend(yd_suite(&h, &subset, "S3 subset")?);
    within(start.elapsed(), Duration::from_secs(300), "S3 subset")?;
    Ok(out)
}

fn rigidity() -> Outcome {
    let (h, pairs) = group("Z3");
    let sw = sweedler();
    let sw_pairs = sweedler_pairs(&sw, &[1, -1]).unwrap();
    let mut out = Vec::new();
    for (h, pairs, name) in [(h, pairs, "Z3"), (sw, sw_pairs, "sweedler")] {
        for g in &pairs {
            let m = canonical_yd(&h, g).unwrap();
            out.push(require(verify_rigidity(&h, &m).map_err(|e| e.to_string())?, name)?);
        }
    }
    Ok(out)
}

fn fixture_modules(h: &HopfAlgebra, pairs: &[GPair]) -> Vec<YdModule> {
    let mut mods: Vec<YdModule> = pairs.iter().map(|g| canonical_yd(h, g).unwrap()).collect();
    let k = mods.len();
    mods.push(trivial_yd(h));
    for i in 0..k.min(3) {
        mods.push(tensor_yd(h, &mods[i], &mods[k - 1 - i]).unwrap());
        mods.push(conjugate_yd(h, &pairs[k - 1 - i], &mods[i]).unwrap());
        mods.push(left_dual(h, &mods[i]).unwrap());
    }
    mods
}

fn correspondence() -> Outcome {
    let mut out = Vec::new();
    let sw = sweedler();
    let sw_pairs = sweedler_pairs(&sw, &[1, -1]).unwrap();
    let (z3, z3_pairs) = group("Z3");
    let (s3, s3_pairs) = group("S3");
    for (h, pairs, name) in [(z3, z3_pairs, "Z3"), (s3, s3_pairs, "S3"), (sw, sw_pairs, "sweedler")] {
        for (i, m) in fixture_modules(&h, &pairs).iter().enumerate() {
            let x = to_comodule(&h, m).map_err(|e| e.to_string())?;
            let d = diagonal_crossed_coproduct(&h, &h_alpha_beta(&h, m.label()).unwrap()).map_err(|e| e.to_string())?;
            let mut r = verify_comodule(&x, &d).map_err(|e| e.to_string())?;
            let back = from_comodule(&h, &x).map_err(|e| e.to_string())?;
            r.push(if back == *m { Check::pass("round-trip", name) } else { Check::fail("round-trip", name, format!("module {i}")) });
            out.push(require(r, name)?);
        }
    }
    Ok(out)
}

fn turaev() -> Outcome {
    let start = Instant::now();
    let (h, pairs) = group("Z3");
    let fam = TuraevFamily::new(&h).map_err(|e| e.to_string())?;
    let z3 = require(verify_turaev_axioms(&fam, &pairs, &TuraevOptions::default()).map_err(|e| e.to_string())?, "Z3")?;
    within(start.elapsed(), Duration::from_secs(30), "Z3 suite")?;
    let (h, pairs) = group("S3");
    let fam = TuraevFamily::new(&h).map_err(|e| e.to_string())?;
    let opts = TuraevOptions { sample: Some(S3_SAMPLE), ..TuraevOptions::default() };
    let s3 = require(verify_turaev_axioms(&fam, &pairs, &opts).map_err(|e| e.to_string())?, "S3")?;
    let seed = S3_SAMPLE.seed.to_string();
    if !s3.header.iter().any(|(k, v)| k == "sample_seed" && *v == seed) {
        return Err("S3 report does not record its seed".into());
    }
    Ok(vec![z3, s3])
}

fn oracle() -> Outcome {
    let mut out = Vec::new();
    for name in ["Z2", "Z3", "Z4", "S3"] {
        let pi = builtin_group(name).unwrap();
        let (_, pairs) = group(name);
        out.push(require(check_oracle_equivalence(&pi, &pairs).map_err(|e| e.to_string())?, name)?);
    }
    Ok(out)
}

fn sigma_braiding() -> Outcome {
    let (h, pairs) = group("Z3");
    let fam = TuraevFamily::new(&h).map_err(|e| e.to_string())?;
    let mods = fixture_modules(&h, &pairs);
    let mut out = Vec::new();
    for m in &mods {
        for n in &mods {
            out.push(require(verify_sigma_braiding(&fam, m, n).map_err(|e| e.to_string())?, "Z3")?);
        }
    }
    Ok(out)
}

type Criterion = (&'static str, fn() -> Outcome);

const CRITERIA: [Criterion; 9] = [
    ("Hopf gate: fixtures pass, corruptions caught, < 1 s", hopf_gate),
    ("crossed coproducts coassociative and counital (Z3, S3, Sweedler φ2)", crossed_coproducts),
    ("codouble bimodule-coalgebra axioms on k(Z2), k(Z3)", codouble_bimodules),
    ("YD tensor/conjugate labels, braidings, hexagons, conjugation invariance", yd_modules),
    ("left/right duals and zigzag identities on k(Z3) and Sweedler", rigidity),
    ("module/comodule correspondence round trips", correspondence),
    ("Turaev axioms: Z3 exhaustive < 30 s, S3 sampled 20% seed 2024", turaev),
    ("generic engine equals group closed forms (Z2, Z3, Z4, S3)", oracle),
    ("σ-induced braiding equals YD braiding on k(Z3) modules", sigma_braiding),
];

fn transcript(reports: &[Report]) -> String {
    reports.iter().map(Report::to_json_lines).collect()
}

fn main() -> ExitCode {
    let mut ok = true;
    let mut first_run = Vec::new();
    for (i, (name, run)) in CRITERIA.iter().enumerate() {
        let start = Instant::now();
        let res = run();
        let secs = start.elapsed().as_secs_f64();
        match res {
            Ok(reports) => {
                println!("criterion {:>2} PASS {name} ({secs:.2} s)", i + 1);
                first_run.push(transcript(&reports));
            }
            Err(why) => {
                ok = false;
                println!("criterion {:>2} FAIL {name} ({secs:.2} s): {why}", i + 1);
                first_run.push(String::new());
            }
        }
    }
    let start = Instant::now();
    let second_run: Vec<String> = CRITERIA.iter().map(|(_, run)| run().map(|r| transcript(&r)).unwrap_or_default()).collect();
    let secs = start.elapsed().as_secs_f64();
    let bytes: usize = first_run.iter().map(String::len).sum();
    if ok && first_run == second_run {
        println!("criterion 10 PASS two consecutive runs give byte-identical reports ({bytes} bytes, {secs:.2} s)");
    } else {
        ok = false;
        let which = first_run.iter().zip(&second_run).position(|(a, b)| a != b).map(|i| i + 1);
        println!("criterion 10 FAIL reports differ between runs (first differing criterion {which:?})");
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
