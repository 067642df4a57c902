mod common;

use common::{assert_passes, kpi, sweedler};
use crossed_hopf::crossed::{
    codouble_algebra, diagonal_crossed_coproduct, drinfeld_codouble, h_alpha_beta, regular_bimodule_coalgebra,
    trivial_bimodule_coalgebra, verify_bimodule_coalgebra, verify_codouble_bimodule, verify_coalgebra,
    BimoduleCoalgebra,
};
use crossed_hopf::group::{builtin_group, enumerate_automorphisms, group_algebra, group_pairs, sweedler_automorphism};
use crossed_hopf::hopf::{GPair, HopfAutomorphism};
use crossed_hopf::{Tensor2to1, Vector};

/// Δ̄(p_c ⋈ d) = Σ_{ab=c} p_a ⋈ β(b)dα(b⁻¹) ⊗ p_b ⋈ d, straight from the table.
#[test]
fn group_crossed_coproduct_matches_the_closed_form() {
    for name in ["Z3", "S3"] {
        let pi = builtin_group(name).unwrap();
        let h = group_algebra(&pi);
        let f = h.field();
        let n = pi.order();
        let big = n * n;
        let auts = enumerate_automorphisms(&pi, 24).unwrap();
        for alpha in &auts {
            for beta in &auts {
                let g = GPair::new(alpha.to_hopf(&h).unwrap(), beta.to_hopf(&h).unwrap()).unwrap();
                let c = diagonal_crossed_coproduct(&h, &h_alpha_beta(&h, &g).unwrap()).unwrap();
                for cc in 0..n {
                    for d in 0..n {
                        let mut terms = Vec::new();
                        for a in 0..n {
                            for b in 0..n {
                                if pi.mul(a, b) != cc {
                                    continue;
                                }
                                let mid = pi.mul(pi.mul(beta.apply(b), d), alpha.apply(pi.inv(b)));
                                terms.push(((a * n + mid) * big + b * n + d, f.one()));
                            }
                        }
                        let want = Vector::from_terms(f, big * big, terms);
                        assert_eq!(c.comult().at(cc * n + d), want, "{name} {g} p_{cc}⋈{d}");
                        let eps = if cc == 0 { f.one() } else { f.zero() };
                        assert_eq!(c.counit().get(cc * n + d), eps);
                    }
                }
            }
        }
    }
}

#[test]
fn z3_inversion_label_three_term_sum() {
    // α = τ (inversion), β = id, input p_g ⋈ e. β(b)α(b⁻¹) = b², so
    // p_g⋈e ⊗ p_e⋈e + p_e⋈g² ⊗ p_g⋈e + p_{g²}⋈g ⊗ p_{g²}⋈e.
    let pi = builtin_group("Z3").unwrap();
    let h = group_algebra(&pi);
    let f = h.field();
    let pairs = group_pairs(&h, &pi).unwrap();
    let tau = pairs.iter().find(|g| !g.alpha().is_identity() && g.beta().is_identity()).unwrap();
    let c = diagonal_crossed_coproduct(&h, &h_alpha_beta(&h, tau).unwrap()).unwrap();
    let idx = |p: usize, x: usize| p * 3 + x;
    let t = |l: usize, r: usize| (l * 9 + r, f.one());
    let want = Vector::from_terms(f, 81, [t(idx(1, 0), idx(0, 0)), t(idx(0, 2), idx(1, 0)), t(idx(2, 1), idx(2, 0))]);
    assert_eq!(c.comult().at(idx(1, 0)), want);
}

#[test]
fn crossed_coproducts_are_coalgebras_on_every_group_label() {
    for name in ["Z3", "S3"] {
        let pi = builtin_group(name).unwrap();
        let h = group_algebra(&pi);
        let pairs = group_pairs(&h, &pi).unwrap();
        assert_eq!(pairs.len(), if name == "Z3" { 4 } else { 36 });
        for g in &pairs {
            let c = diagonal_crossed_coproduct(&h, &h_alpha_beta(&h, g).unwrap()).unwrap();
            assert_passes(&verify_coalgebra(&c, "crossed coproduct"), &format!("{name} {g}"));
        }
    }
}

#[test]
fn sweedler_crossed_coproducts_with_scalar_automorphisms() {
    let h = sweedler();
    let f = h.field();
    let phi = |l: i64| sweedler_automorphism(&h, &f.from_i64(l)).unwrap();
    let id = HopfAutomorphism::identity(&h);
    for (a, b) in [(phi(2), id.clone()), (id.clone(), phi(2)), (phi(2), phi(2)), (phi(2), phi(-1)), (phi(-3), phi(2))] {
        let g = GPair::new(a, b).unwrap();
        let bc = h_alpha_beta(&h, &g).unwrap();
        assert_passes(&verify_bimodule_coalgebra(&h, &bc), "H(α,β)");
        let c = diagonal_crossed_coproduct(&h, &bc).unwrap();
        assert_eq!(c.dim(), 16);
        assert_passes(&verify_coalgebra(&c, "sweedler"), &g.to_string());
    }
}

#[test]
fn codouble_is_the_regular_crossed_coproduct() {
    for h in [kpi("Z2"), kpi("Z3"), sweedler()] {
        let d = drinfeld_codouble(&h).unwrap();
        assert_passes(&verify_coalgebra(&d, "D(H)"), "codouble");
        let unit_label = crossed_hopf::hopf::g_unit(&h);
        let c = diagonal_crossed_coproduct(&h, &h_alpha_beta(&h, &unit_label).unwrap()).unwrap();
        assert_eq!(c.comult(), d.comult());
    }
}

#[test]
fn codouble_bimodule_axioms_on_z2_and_z3() {
    for name in ["Z2", "Z3"] {
        let h = kpi(name);
        let reg = regular_bimodule_coalgebra(&h).unwrap();
        assert_passes(&verify_codouble_bimodule(&h, &reg).unwrap(), name);
        let pi = builtin_group(name).unwrap();
        for g in group_pairs(&h, &pi).unwrap() {
            assert_passes(&verify_codouble_bimodule(&h, &h_alpha_beta(&h, &g).unwrap()).unwrap(), &format!("{name} {g}"));
        }
        assert_passes(&verify_codouble_bimodule(&h, &trivial_bimodule_coalgebra(&h)).unwrap(), "trivial");
    }
}

#[test]
fn codouble_algebra_is_associative_with_unit() {
    let h = kpi("S3");
    let (m, u) = codouble_algebra(&h);
    let big = h.dim() * h.dim();
    for x in (0..big).step_by(5) {
        assert_eq!(m.apply(&u, &Vector::basis(h.field(), big, x)), Vector::basis(h.field(), big, x));
        for y in (0..big).step_by(7) {
            for z in (0..big).step_by(11) {
                let l = m.apply(m.at(x, y), &Vector::basis(h.field(), big, z));
                let r = m.apply(&Vector::basis(h.field(), big, x), m.at(y, z));
                assert_eq!(l, r);
            }
        }
    }
}

#[test]
fn broken_bimodule_is_rejected() {
    let h = kpi("S3");
    let reg = regular_bimodule_coalgebra(&h).unwrap();
    let f = h.field();
    let n = h.dim();
    // right action by the opposite product: not a right module on nonabelian π
    let right = Tensor2to1::from_fn(f, n, n, n, |c, i| h.mul_basis(i, c).clone());
    let bad = BimoduleCoalgebra::new(&h, reg.coalgebra().clone(), reg.left().clone(), right).unwrap();
    let r = verify_bimodule_coalgebra(&h, &bad);
    let c = r.first_failure().expect("opposite right action is caught");
    assert!(c.witness.as_deref().unwrap_or("").contains("basis"), "{c}");
}

#[test]
fn codouble_bimodule_axioms_on_sweedler() {
    let h = sweedler();
    let f = h.field();
    assert_passes(&verify_codouble_bimodule(&h, &regular_bimodule_coalgebra(&h).unwrap()).unwrap(), "regular");
    let phi = sweedler_automorphism(&h, &f.from_i64(2)).unwrap();
    let g = GPair::new(phi.clone(), phi.inverse()).unwrap();
    assert_passes(&verify_codouble_bimodule(&h, &h_alpha_beta(&h, &g).unwrap()).unwrap(), "H(φ2, φ2⁻¹)");
}
