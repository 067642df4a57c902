mod common;

use common::assert_passes;
use crossed_hopf::group::{
    builtin_group, check_grading_laws, check_oracle_equivalence, enumerate_automorphisms, group_algebra, group_pairs,
    yd_grading, FiniteGroup, GroupError,
};
use crossed_hopf::hopf::g_unit;
use crossed_hopf::yd::{canonical_yd, trivial_yd, YdModule};
use crossed_hopf::{Status, Tensor1to2};

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn brute_force_aut(pi: &FiniteGroup) -> usize {
    let n = pi.order();
    permutations(n)
        .into_iter()
        .filter(|p| (0..n).all(|a| (0..n).all(|b| p[pi.mul(a, b)] == pi.mul(p[a], p[b]))))
        .count()
}

#[test]
fn automorphism_counts_match_brute_force() {
    for (name, want) in [("Z2", 1), ("Z3", 2), ("Z4", 2), ("Z2xZ2", 6), ("S3", 6)] {
        let pi = builtin_group(name).unwrap();
        let auts = enumerate_automorphisms(&pi, 24).unwrap();
        assert_eq!(auts.len(), want, "{name}");
        assert_eq!(brute_force_aut(&pi), want, "{name}");
        assert!(auts[0].0.iter().enumerate().all(|(i, &x)| i == x));
        for a in &auts {
            for b in &auts {
                assert!(auts.contains(&a.compose(b)), "{name}: not closed");
            }
        }
    }
}

#[test]
fn s3_is_nonabelian() {
    let pi = builtin_group("S3").unwrap();
    let n = pi.order();
    assert_eq!(n, 6);
    let witness = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).find(|&(a, b)| pi.mul(a, b) != pi.mul(b, a));
    assert!(witness.is_some());
}

#[test]
fn bad_tables_are_rejected() {
    let names = |n: usize| (0..n).map(|i| format!("x{i}")).collect::<Vec<_>>();
    // repeated row
    let t = vec![vec![0, 1, 2], vec![1, 2, 0], vec![1, 2, 0]];
    assert!(matches!(FiniteGroup::from_table(names(3), t), Err(GroupError::NotAGroup(_))));
    // a Latin square with identity that is not associative (order-5 loop)
    let loop5 = vec![
        vec![0, 1, 2, 3, 4],
        vec![1, 0, 3, 4, 2],
        vec![2, 4, 0, 1, 3],
        vec![3, 2, 4, 0, 1],
        vec![4, 3, 1, 2, 0],
    ];
    assert!(matches!(FiniteGroup::from_table(names(5), loop5), Err(GroupError::NotAGroup(_))));
    assert!(matches!(builtin_group("Q8"), Err(GroupError::Unknown(_))));
}

#[test]
fn generic_engine_equals_closed_forms() {
    for name in ["Z2", "Z3", "Z4", "Z2xZ2", "S3"] {
        let pi = builtin_group(name).unwrap();
        let h = group_algebra(&pi);
        let pairs = group_pairs(&h, &pi).unwrap();
        let r = check_oracle_equivalence(&pi, &pairs).unwrap();
        assert_passes(&r, name);
        assert_eq!(r.checks.len(), 8);
    }
}

#[test]
fn grading_of_trivial_and_unit_label_modules_is_concentrated_in_e() {
    let pi = builtin_group("S3").unwrap();
    let h = group_algebra(&pi);
    for m in [trivial_yd(&h), canonical_yd(&h, &g_unit(&h)).unwrap()] {
        let g = yd_grading(&h, &pi, &m).unwrap();
        assert_eq!(g.pieces[0].len(), m.dim());
        assert!(g.pieces[1..].iter().all(|p| p.is_empty()));
    }
}

#[test]
fn grading_pieces_sum_to_the_module() {
    let pi = builtin_group("S3").unwrap();
    let h = group_algebra(&pi);
    for g in group_pairs(&h, &pi).unwrap() {
        let m = canonical_yd(&h, &g).unwrap();
        let gr = yd_grading(&h, &pi, &m).unwrap();
        assert_eq!(gr.pieces.iter().map(Vec::len).sum::<usize>(), m.dim());
        for (a, piece) in gr.pieces.iter().enumerate() {
            for v in piece {
                assert_eq!(gr.grade_of(v), Some(a));
            }
        }
    }
}

#[test]
fn grading_laws_hold_and_displayed_discrepancies_are_reported() {
    for name in ["Z3", "S3"] {
        let pi = builtin_group(name).unwrap();
        let h = group_algebra(&pi);
        let pairs = group_pairs(&h, &pi).unwrap();
        let mods: Vec<YdModule> = pairs.iter().step_by(if name == "S3" { 5 } else { 1 }).map(|g| canonical_yd(&h, g).unwrap()).collect();
        let mut infos = Vec::new();
        for m in &mods {
            for n in &mods {
                let r = check_grading_laws(&h, &pi, m, n).unwrap();
                assert_passes(&r, name);
                for axiom in ["grading-tensor", "grading-conjugate", "grading-dual", "grading-braiding"] {
                    assert_eq!(r.find(axiom).next().unwrap().status, Status::Pass, "{name} {axiom}");
                }
                infos.extend(r.checks.iter().filter(|c| c.status == Status::Info).map(|c| c.axiom.clone()));
            }
        }
        assert!(infos.iter().any(|a| a == "grading-dual-displayed"), "{name}");
    }
}

#[test]
fn non_comodule_coaction_has_no_grading() {
    let pi = builtin_group("Z3").unwrap();
    let h = group_algebra(&pi);
    let f = h.field();
    let m = trivial_yd(&h);
    // ρ(m) = m⊗(e + g): not a comodule, projections do not split M
    let rho = Tensor1to2::from_terms(f, 1, 3, vec![vec![(0, 0, f.one()), (0, 1, f.one())]]).unwrap();
    let bad = YdModule::new(&h, g_unit(&h), m.action().clone(), rho).unwrap();
    assert!(matches!(yd_grading(&h, &pi, &bad), Err(GroupError::NotGraded(_))));
}
