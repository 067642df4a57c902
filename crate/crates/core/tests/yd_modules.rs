mod common;

use common::{assert_passes, kpi, sweedler};
use crossed_hopf::group::{builtin_group, group_algebra, group_pairs, sweedler_pairs};
use crossed_hopf::hopf::{GPair, HopfAlgebra};
use crossed_hopf::yd::{
    braiding, braiding_inverse, canonical_yd, conjugate_yd, left_dual, right_dual, tensor_yd, trivial_yd,
    verify_braiding, verify_conjugation_invariance, verify_hexagons, verify_rigidity, verify_yd, YdModule,
};

/// The subset of Aut(S3)² used for the heavier sweeps.
pub const S3_SUBSET: [usize; 6] = [0, 1, 8, 15, 22, 35];

fn z3() -> (HopfAlgebra, Vec<GPair>) {
    let pi = builtin_group("Z3").unwrap();
    let h = group_algebra(&pi);
    let pairs = group_pairs(&h, &pi).unwrap();
    (h, pairs)
}

fn s3_subset() -> (HopfAlgebra, Vec<GPair>) {
    let pi = builtin_group("S3").unwrap();
    let h = group_algebra(&pi);
    let all = group_pairs(&h, &pi).unwrap();
    (h, S3_SUBSET.iter().map(|&i| all[i].clone()).collect())
}

/// (α,β)(γ,δ) = (δαδ⁻¹γ, δβ), composed by hand from the matrices.
fn product_label(x: &GPair, y: &GPair) -> (crossed_hopf::LinMap, crossed_hopf::LinMap) {
    let (a, b) = (x.alpha().matrix(), x.beta().matrix());
    let (c, d) = (y.alpha().matrix(), y.beta().matrix());
    let di = y.beta().inverse_matrix();
    (d.compose(a).compose(di).compose(c), d.compose(b))
}

fn assert_label(m: &YdModule, want: (crossed_hopf::LinMap, crossed_hopf::LinMap)) {
    assert_eq!(m.label().alpha().matrix(), &want.0);
    assert_eq!(m.label().beta().matrix(), &want.1);
}

fn tensor_and_conjugate_laws(h: &HopfAlgebra, pairs: &[GPair]) {
    let mods: Vec<YdModule> = pairs.iter().map(|g| canonical_yd(h, g).unwrap()).collect();
    for m in &mods {
        assert_passes(&verify_yd(h, m), "canonical");
    }
    for m in &mods {
        for n in &mods {
            let t = tensor_yd(h, m, n).unwrap();
            assert_label(&t, product_label(m.label(), n.label()));
            assert_passes(&verify_yd(h, &t), "tensor");
        }
    }
    for p in pairs {
        for n in &mods {
            let c = conjugate_yd(h, p, n).unwrap();
            // p·X·p⁻¹, checked as (p·X) = label·p
            let lhs = product_label(p, n.label());
            let rhs = product_label(c.label(), p);
            assert_eq!(lhs, rhs);
            assert_passes(&verify_yd(h, &c), "conjugate");
        }
    }
}

fn braiding_laws(h: &HopfAlgebra, pairs: &[GPair]) {
    let mods: Vec<YdModule> = pairs.iter().map(|g| canonical_yd(h, g).unwrap()).collect();
    for m in &mods {
        for n in &mods {
            assert_passes(&verify_braiding(h, m, n).unwrap(), "braiding");
            let c = braiding(h, m, n).unwrap();
            let ci = braiding_inverse(h, m, n).unwrap();
            assert!(c.compose(&ci).is_identity() && ci.compose(&c).is_identity());
        }
    }
    for u in &mods {
        for v in &mods {
            for w in &mods {
                assert_passes(&verify_hexagons(h, u, v, w).unwrap(), "hexagons");
            }
        }
    }
    for p in pairs {
        for m in &mods {
            for n in &mods {
                let c = verify_conjugation_invariance(h, p, m, n).unwrap();
                assert!(c.passed(), "{c}");
            }
        }
    }
}

#[test]
fn z3_tensor_and_conjugate_modules_carry_the_stated_labels() {
    let (h, pairs) = z3();
    tensor_and_conjugate_laws(&h, &pairs);
}

#[test]
fn s3_subset_tensor_and_conjugate_modules_carry_the_stated_labels() {
    let (h, pairs) = s3_subset();
    tensor_and_conjugate_laws(&h, &pairs);
}

#[test]
fn z3_braidings_and_hexagons() {
    let (h, pairs) = z3();
    braiding_laws(&h, &pairs);
}

#[test]
fn s3_subset_braidings_and_hexagons() {
    let (h, pairs) = s3_subset();
    braiding_laws(&h, &pairs);
}

#[test]
fn naive_tensor_label_is_wrong_on_s3() {
    let (h, pairs) = s3_subset();
    let mut caught = 0;
    for x in &pairs {
        for y in &pairs {
            let t = tensor_yd(&h, &canonical_yd(&h, x).unwrap(), &canonical_yd(&h, y).unwrap()).unwrap();
            let a = x.alpha().compose(y.alpha()).unwrap();
            let b = x.beta().compose(y.beta()).unwrap();
            let naive = GPair::new(a, b).unwrap();
            if naive != *t.label() && !verify_yd(&h, &t.relabel(naive)).passed() {
                caught += 1;
            }
        }
    }
    assert!(caught > 0);
}

#[test]
fn trivial_module_is_a_tensor_unit() {
    let (h, pairs) = z3();
    let one = trivial_yd(&h);
    assert_passes(&verify_yd(&h, &one), "trivial");
    for g in &pairs {
        let m = canonical_yd(&h, g).unwrap();
        let t = tensor_yd(&h, &one, &m).unwrap();
        assert_eq!(t.label(), m.label());
        assert_eq!(t.action(), m.action());
        assert_eq!(t.coaction(), m.coaction());
    }
}

#[test]
fn rigidity_on_z3_and_sweedler() {
    let (h, pairs) = z3();
    let sw = sweedler();
    let sw_pairs = sweedler_pairs(&sw, &[1, -1]).unwrap();
    for (h, pairs) in [(h, pairs), (sw, sw_pairs)] {
        for g in &pairs {
            let m = canonical_yd(&h, g).unwrap();
            assert_passes(&verify_rigidity(&h, &m).unwrap(), &g.to_string());
            let l = left_dual(&h, &m).unwrap();
            let r = right_dual(&h, &m).unwrap();
            assert_passes(&verify_yd(&h, &l), "left dual");
            assert_passes(&verify_yd(&h, &r), "right dual");
            assert_eq!(l.label(), &crossed_hopf::hopf::g_inv(g));
        }
    }
}

#[test]
fn sweedler_scalar_labels_give_yd_modules() {
    let h = sweedler();
    let f = h.field();
    let phi = |l: i64| crossed_hopf::group::sweedler_automorphism(&h, &f.from_i64(l)).unwrap();
    let labels = [GPair::new(phi(2), phi(1)).unwrap(), GPair::new(phi(1), phi(2)).unwrap(), GPair::new(phi(-1), phi(3)).unwrap()];
    for g in &labels {
        let m = canonical_yd(&h, g).unwrap();
        assert_passes(&verify_yd(&h, &m), "sweedler canonical");
        assert_passes(&verify_rigidity(&h, &m).unwrap(), "sweedler rigidity");
        for g2 in &labels {
            let n = canonical_yd(&h, g2).unwrap();
            assert_passes(&verify_yd(&h, &tensor_yd(&h, &m, &n).unwrap()), "sweedler tensor");
            assert_passes(&verify_braiding(&h, &m, &n).unwrap(), "sweedler braiding");
        }
    }
}

#[test]
fn mislabeled_module_fails_compatibility() {
    let h = kpi("S3");
    let pi = builtin_group("S3").unwrap();
    let pairs = group_pairs(&h, &pi).unwrap();
    // (id, β) with β ≠ id; (α, α) would not do since its coaction is trivial
    let m = canonical_yd(&h, &pairs[1]).unwrap();
    let r = verify_yd(&h, &m.relabel(pairs[0].clone()));
    let c = r.first_failure().expect("wrong label is caught");
    assert_eq!(c.axiom, "compatibility");
}

#[test]
fn duals_are_yd_modules_on_noncommutative_fixtures() {
    let (h, pairs) = s3_subset();
    let sw = sweedler();
    let sw_pairs = sweedler_pairs(&sw, &[1, -1]).unwrap();
    for (h, pairs) in [(h, pairs), (sw, sw_pairs)] {
        for g in &pairs {
            let m = canonical_yd(&h, g).unwrap();
            assert_passes(&verify_yd(&h, &left_dual(&h, &m).unwrap()), "left dual");
            assert_passes(&verify_yd(&h, &right_dual(&h, &m).unwrap()), "right dual");
        }
    }
}
