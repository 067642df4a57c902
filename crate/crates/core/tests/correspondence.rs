mod common;

use common::{assert_passes, sweedler};
use crossed_hopf::crossed::{diagonal_crossed_coproduct, h_alpha_beta};
use crossed_hopf::group::{builtin_group, group_algebra, group_pairs, sweedler_pairs};
use crossed_hopf::hopf::HopfAlgebra;
use crossed_hopf::turaev::{sigma_braiding, verify_sigma_braiding, TuraevFamily};
use crossed_hopf::yd::{
    braiding, canonical_yd, conjugate_yd, from_comodule, left_dual, tensor_yd, to_comodule, trivial_yd, verify_comodule,
    YdModule,
};

/// Canonical modules, the unit object, a few tensor products, conjugates and duals.
fn fixture_modules(h: &HopfAlgebra, pairs: &[crossed_hopf::hopf::GPair]) -> Vec<YdModule> {
    let mut out: Vec<YdModule> = pairs.iter().map(|g| canonical_yd(h, g).unwrap()).collect();
    let k = out.len();
    out.push(trivial_yd(h));
    for i in 0..k.min(3) {
        out.push(tensor_yd(h, &out[i], &out[k - 1 - i]).unwrap());
        out.push(conjugate_yd(h, &pairs[k - 1 - i], &out[i]).unwrap());
        out.push(left_dual(h, &out[i]).unwrap());
    }
    out
}

fn round_trip_and_comodule(h: &HopfAlgebra, mods: &[YdModule]) {
    for (i, m) in mods.iter().enumerate() {
        let x = to_comodule(h, m).unwrap();
        let d = diagonal_crossed_coproduct(h, &h_alpha_beta(h, m.label()).unwrap()).unwrap();
        assert_passes(&verify_comodule(&x, &d).unwrap(), &format!("module {i}"));
        assert_eq!(&from_comodule(h, &x).unwrap(), m, "round trip {i}");
    }
}

#[test]
fn z3_round_trips() {
    let pi = builtin_group("Z3").unwrap();
    let h = group_algebra(&pi);
    let pairs = group_pairs(&h, &pi).unwrap();
    round_trip_and_comodule(&h, &fixture_modules(&h, &pairs));
}

#[test]
fn s3_round_trips() {
    let pi = builtin_group("S3").unwrap();
    let h = group_algebra(&pi);
    let pairs = group_pairs(&h, &pi).unwrap();
    round_trip_and_comodule(&h, &fixture_modules(&h, &pairs));
}

#[test]
fn sweedler_round_trips() {
    let h = sweedler();
    let pairs = sweedler_pairs(&h, &[1, -1]).unwrap();
    round_trip_and_comodule(&h, &fixture_modules(&h, &pairs));
}

#[test]
fn comodule_over_the_wrong_component_fails() {
    let pi = builtin_group("S3").unwrap();
    let h = group_algebra(&pi);
    let pairs = group_pairs(&h, &pi).unwrap();
    let x = to_comodule(&h, &canonical_yd(&h, &pairs[1]).unwrap()).unwrap();
    let d = diagonal_crossed_coproduct(&h, &h_alpha_beta(&h, &pairs[0]).unwrap()).unwrap();
    assert!(!verify_comodule(&x, &d).unwrap().passed());
}

#[test]
fn sigma_induced_braiding_equals_the_yd_braiding_on_z3() {
    let pi = builtin_group("Z3").unwrap();
    let h = group_algebra(&pi);
    let pairs = group_pairs(&h, &pi).unwrap();
    let fam = TuraevFamily::new(&h).unwrap();
    let mods = fixture_modules(&h, &pairs);
    for (i, m) in mods.iter().enumerate() {
        for (j, n) in mods.iter().enumerate() {
            assert_passes(&verify_sigma_braiding(&fam, m, n).unwrap(), &format!("({i},{j})"));
            assert_eq!(sigma_braiding(&fam, m, n).unwrap(), braiding(&h, m, n).unwrap());
        }
    }
}

#[test]
fn sigma_induced_braiding_on_sweedler() {
    let h = sweedler();
    let pairs = sweedler_pairs(&h, &[1, -1]).unwrap();
    let fam = TuraevFamily::new(&h).unwrap();
    let mods = fixture_modules(&h, &pairs);
    for m in &mods {
        for n in &mods {
            assert_eq!(sigma_braiding(&fam, m, n).unwrap(), braiding(&h, m, n).unwrap());
        }
    }
}
