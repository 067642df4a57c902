//! Bimodule coalgebras over H, the diagonal crossed coproduct H*^op ⋈ C,
//! the codouble with its bimodule-coalgebra actions, and the compatibility
//! checker for module-comodules over a bimodule coalgebra.

use thiserror::Error;

use crate::hopf::{coassoc_sides, counit_sides, dual_hopf, verify_hopf_axioms, GPair, HopfAlgebra, HopfError};
use crate::report::{sweep, Check, Report};
use crate::scalar::{Field, Scalar};
use crate::tensor::{Accumulator, Tensor1to2, Tensor2to1, TensorError, Vector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CrossedError {
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Tensor(#[from] TensorError),
    #[error("malformed structure: {0}")]
    Shape(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra {
    field: Field,
    basis: Vec<String>,
    comult: Tensor1to2,
    counit: Vector,
}

impl Coalgebra {
    pub fn new(field: Field, basis: Vec<String>, comult: Tensor1to2, counit: Vector) -> Result<Self, CrossedError> {
        let m = basis.len();
        if comult.src_dim() != m || comult.left_dim() != m || comult.right_dim() != m || counit.dim() != m {
            return Err(CrossedError::Shape("coalgebra tensor shapes disagree with basis".into()));
        }
        if comult.field() != field || counit.field() != field {
            return Err(CrossedError::Shape("field tag mismatch".into()));
        }
        Ok(Coalgebra { field, basis, comult, counit })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn comult(&self) -> &Tensor1to2 {
        &self.comult
    }

    pub fn counit(&self) -> &Vector {
        &self.counit
    }

    pub fn coproduct(&self, x: &Vector) -> Vector {
        self.comult.apply(x)
    }

    pub fn eps(&self, x: &Vector) -> Scalar {
        x.dot(&self.counit)
    }

    pub fn basis_vec(&self, i: usize) -> Vector {
        Vector::basis(self.field, self.dim(), i)
    }

    pub(crate) fn describe(&self, i: usize) -> String {
        format!("basis '{}'", self.basis[i])
    }
}

/// Coassociativity and counit laws at every basis vector.
pub fn verify_coalgebra(c: &Coalgebra, location: &str) -> Report {
    let mut r = Report::new();
    let m = c.dim();
    r.push(sweep("coassociativity", location, 0..m, |&i| c.describe(i), |&i| coassoc_sides(&c.comult, i)));
    r.push(sweep(
        "counit",
        location,
        0..m,
        |&i| c.describe(i),
        |&i| {
            let e = c.basis_vec(i);
            (counit_sides(&c.comult, &c.counit, i), e.concat(&e))
        },
    ));
    r
}

/// A coalgebra with commuting left and right H-actions that are coalgebra maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimoduleCoalgebra {
    coalgebra: Coalgebra,
    left: Tensor2to1,
    right: Tensor2to1,
}

impl BimoduleCoalgebra {
    pub fn new(h: &HopfAlgebra, coalgebra: Coalgebra, left: Tensor2to1, right: Tensor2to1) -> Result<Self, CrossedError> {
        let (n, m) = (h.dim(), coalgebra.dim());
        if left.left_dim() != n || left.right_dim() != m || left.out_dim() != m {
            return Err(CrossedError::Shape("left action shape".into()));
        }
        if right.left_dim() != m || right.right_dim() != n || right.out_dim() != m {
            return Err(CrossedError::Shape("right action shape".into()));
        }
        if coalgebra.field() != h.field() || left.field() != h.field() || right.field() != h.field() {
            return Err(CrossedError::Shape("field tag mismatch".into()));
        }
        Ok(BimoduleCoalgebra { coalgebra, left, right })
    }

    pub fn coalgebra(&self) -> &Coalgebra {
        &self.coalgebra
    }

    pub fn left(&self) -> &Tensor2to1 {
        &self.left
    }

    pub fn right(&self) -> &Tensor2to1 {
        &self.right
    }

    pub fn dim(&self) -> usize {
        self.coalgebra.dim()
    }
}

/// Left module axioms for an action A ⊗ M → M of an algebra (mult, unit).
pub(crate) fn left_module_checks(
    loc: &str,
    axiom: &str,
    mult: &Tensor2to1,
    unit: &Vector,
    act: &Tensor2to1,
    names: &dyn Fn(usize, usize, usize) -> String,
) -> Vec<Check> {
    let (a, m) = (act.left_dim(), act.right_dim());
    let f = act.field();
    vec![
        sweep(
            &format!("{axiom}-associative"),
            loc,
            (0..a).flat_map(|i| (0..a).flat_map(move |j| (0..m).map(move |u| (i, j, u)))),
            |&(i, j, u)| names(i, j, u),
            |&(i, j, u)| (act.apply_flat_left(i, act.at(j, u)), act.apply(mult.at(i, j), &Vector::basis(f, m, u))),
        ),
        sweep(
            &format!("{axiom}-unital"),
            loc,
            0..m,
            |&u| format!("module basis {u}"),
            |&u| {
                let e = Vector::basis(f, m, u);
                (act.apply(unit, &e), e)
            },
        ),
    ]
}

/// Right module axioms for an action M ⊗ A → M.
pub(crate) fn right_module_checks(
    loc: &str,
    axiom: &str,
    mult: &Tensor2to1,
    unit: &Vector,
    act: &Tensor2to1,
    names: &dyn Fn(usize, usize, usize) -> String,
) -> Vec<Check> {
    let (m, a) = (act.left_dim(), act.right_dim());
    let f = act.field();
    vec![
        sweep(
            &format!("{axiom}-associative"),
            loc,
            (0..m).flat_map(|u| (0..a).flat_map(move |i| (0..a).map(move |j| (u, i, j)))),
            |&(u, i, j)| names(u, i, j),
            |&(u, i, j)| (act.apply(act.at(u, i), &Vector::basis(f, a, j)), act.apply(&Vector::basis(f, m, u), mult.at(i, j))),
        ),
        sweep(
            &format!("{axiom}-unital"),
            loc,
            0..m,
            |&u| format!("module basis {u}"),
            |&u| {
                let e = Vector::basis(f, m, u);
                (act.apply(&e, unit), e)
            },
        ),
    ]
}

/// Comodule axioms for ρ: M → M ⊗ D over a coalgebra (comult, counit).
pub(crate) fn comodule_checks(loc: &str, axiom: &str, rho: &Tensor1to2, comult: &Tensor1to2, counit: &Vector) -> Vec<Check> {
    let (m, d) = (rho.src_dim(), rho.right_dim());
    let f = rho.field();
    vec![
        sweep(
            &format!("{axiom}-coassociative"),
            loc,
            0..m,
            |&u| format!("module basis {u}"),
            |&u| {
                let mut l = Accumulator::new(f, m * d * d);
                let mut r = Accumulator::new(f, m * d * d);
                for (x, k, c) in rho.terms(u) {
                    for (y, l2, e) in rho.terms(*x) {
                        l.push((y * d + l2) * d + k, c * e);
                    }
                    for (a, b, e) in comult.terms(*k) {
                        r.push((x * d + a) * d + b, c * e);
                    }
                }
                (l.finish(), r.finish())
            },
        ),
        sweep(
            &format!("{axiom}-counital"),
            loc,
            0..m,
            |&u| format!("module basis {u}"),
            |&u| {
                let mut acc = Accumulator::new(f, m);
                for (x, k, c) in rho.terms(u) {
                    acc.push(*x, c * &counit.get(*k));
                }
                (acc.finish(), Vector::basis(f, m, u))
            },
        ),
    ]
}

/// Checks coalgebra, bimodule and coalgebra-map axioms of C over H.
pub fn verify_bimodule_coalgebra(h: &HopfAlgebra, c: &BimoduleCoalgebra) -> Report {
    let loc = "C";
    let (n, m) = (h.dim(), c.dim());
    let f = h.field();
    let mut r = verify_coalgebra(&c.coalgebra, loc);
    let hn = |i: usize| h.name(i).to_string();
    let cn = |u: usize| c.coalgebra.basis[u].clone();
    let names_l = |i: usize, j: usize, u: usize| format!("basis ('{}', '{}', '{}')", hn(i), hn(j), cn(u));
    let names_r = |u: usize, i: usize, j: usize| format!("basis ('{}', '{}', '{}')", cn(u), hn(i), hn(j));
    for ch in left_module_checks(loc, "left-action", h.mult(), h.unit(), &c.left, &names_l) {
        r.push(ch);
    }
    for ch in right_module_checks(loc, "right-action", h.mult(), h.unit(), &c.right, &names_r) {
        r.push(ch);
    }
    r.push(sweep(
        "bimodule",
        loc,
        (0..n).flat_map(|i| (0..m).flat_map(move |u| (0..n).map(move |j| (i, u, j)))),
        |&(i, u, j)| format!("basis ('{}', '{}', '{}')", hn(i), cn(u), hn(j)),
        |&(i, u, j)| (c.right.apply_flat_right(c.left.at(i, u), j), c.left.apply_flat_left(i, c.right.at(u, j))),
    ));
    let co = &c.coalgebra;
    r.push(sweep(
        "left-action-comultiplicative",
        loc,
        (0..n).flat_map(|i| (0..m).map(move |u| (i, u))),
        |&(i, u)| format!("basis ('{}', '{}')", hn(i), cn(u)),
        |&(i, u)| {
            let lhs = co.coproduct(c.left.at(i, u));
            let mut acc = Accumulator::new(f, m * m);
            for (a, b, s) in h.comult().terms(i) {
                for (x, y, t) in co.comult.terms(u) {
                    acc.add_scaled(&c.left.at(*a, *x).kron(c.left.at(*b, *y)), &(s * t));
                }
            }
            (lhs, acc.finish())
        },
    ));
    r.push(sweep(
        "right-action-comultiplicative",
        loc,
        (0..m).flat_map(|u| (0..n).map(move |i| (u, i))),
        |&(u, i)| format!("basis ('{}', '{}')", cn(u), hn(i)),
        |&(u, i)| {
            let lhs = co.coproduct(c.right.at(u, i));
            let mut acc = Accumulator::new(f, m * m);
            for (x, y, t) in co.comult.terms(u) {
                for (a, b, s) in h.comult().terms(i) {
                    acc.add_scaled(&c.right.at(*x, *a).kron(c.right.at(*y, *b)), &(s * t));
                }
            }
            (lhs, acc.finish())
        },
    ));
    r.push(sweep(
        "actions-counital",
        loc,
        (0..n).flat_map(|i| (0..m).map(move |u| (i, u))),
        |&(i, u)| format!("basis ('{}', '{}')", hn(i), cn(u)),
        |&(i, u)| {
            let e = &h.eps_basis(i) * &co.counit.get(u);
            (
                Vector::from_dense(f, vec![co.eps(c.left.at(i, u)), co.eps(c.right.at(u, i))]),
                Vector::from_dense(f, vec![e.clone(), e]),
            )
        },
    ));
    r
}

/// H(α,β): H as a coalgebra with h·h' = β(h)h' and h'·h = h'α(h).
pub fn h_alpha_beta(h: &HopfAlgebra, g: &GPair) -> Result<BimoduleCoalgebra, CrossedError> {
    if g.algebra() != h.fingerprint() {
        return Err(HopfError::ForeignAlgebra.into());
    }
    let n = h.dim();
    let f = h.field();
    let b = g.beta().matrix();
    let a = g.alpha().matrix();
    let left = Tensor2to1::from_fn(f, n, n, n, |i, j| h.mult().apply_flat_right(b.column(i), j));
    let right = Tensor2to1::from_fn(f, n, n, n, |j, i| h.mult().apply_flat_left(j, a.column(i)));
    let coalgebra = Coalgebra::new(f, h.basis().to_vec(), h.comult().clone(), h.counit().clone())?;
    BimoduleCoalgebra::new(h, coalgebra, left, right)
}

/// The one-dimensional bimodule coalgebra k with both actions given by ε.
pub fn trivial_bimodule_coalgebra(h: &HopfAlgebra) -> BimoduleCoalgebra {
    let f = h.field();
    let n = h.dim();
    let coalgebra = Coalgebra {
        field: f,
        basis: vec!["1".into()],
        comult: Tensor1to2::from_fn(f, 1, 1, 1, |_| Vector::basis(f, 1, 0)),
        counit: Vector::basis(f, 1, 0),
    };
    let eps = |i: usize| Vector::from_dense(f, vec![h.eps_basis(i)]);
    BimoduleCoalgebra {
        coalgebra,
        left: Tensor2to1::from_fn(f, n, 1, 1, |i, _| eps(i)),
        right: Tensor2to1::from_fn(f, 1, n, 1, |_, i| eps(i)),
    }
}

/// Precomputed data shared by all crossed coproducts over the same H.
pub(crate) struct CrossedTables {
    pub(crate) dual: HopfAlgebra,
    // For each t: all (i, j, w, c) with p^i p^t p^j = Σ c p^w.
    triple: Vec<Vec<(usize, usize, usize, Scalar)>>,
}

impl CrossedTables {
    pub(crate) fn new(h: &HopfAlgebra) -> Self {
        let n = h.dim();
        let mut triple: Vec<Vec<(usize, usize, usize, Scalar)>> = vec![Vec::new(); n];
        for w in 0..n {
            for (i, t, j, c) in h.comult3(w) {
                triple[t].push((i, j, w, c));
            }
        }
        for t in triple.iter_mut() {
            t.sort_by_key(|x| (x.0, x.1, x.2));
        }
        CrossedTables { dual: dual_hopf(h), triple }
    }
}

/// Coproduct Δ̄(p⋈c) = Σ_{i,j} p₁⋈h_j·c₁·S⁻¹(h_i) ⊗ h^i p₂ h^j ⋈ c₂ and ε̄(p⋈c) = p(1)ε(c),
/// basis p^a ⋈ c_b at index a·dim C + b. No precondition checks.
pub(crate) fn crossed_coproduct_with(
    h: &HopfAlgebra,
    tables: &CrossedTables,
    c: &BimoduleCoalgebra,
) -> Result<Coalgebra, CrossedError> {
    let n = h.dim();
    let m = c.dim();
    let big = n * m;
    let f = h.field();
    let sinv = h.antipode_inv()?;
    // conj[(j * m + u) * n + i] = e_j · c_u · S⁻¹(e_i)
    let mut conj = Vec::with_capacity(n * m * n);
    for j in 0..n {
        for u in 0..m {
            let lu = c.left.at(j, u);
            for i in 0..n {
                let mut acc = Accumulator::new(f, m);
                for (k, s) in sinv.column(i).iter() {
                    acc.add_scaled(&c.right.apply_flat_right(lu, k), s);
                }
                conj.push(acc.finish());
            }
        }
    }
    let dual = &tables.dual;
    let co = &c.coalgebra;
    let comult = Tensor1to2::from_fn(f, big, big, big, |idx| {
        let (a, b) = (idx / m, idx % m);
        let mut acc = Accumulator::new(f, big * big);
        for (s, t, x) in dual.comult().terms(a) {
            for (u, v, y) in co.comult.terms(b) {
                let xy = x * y;
                for (i, j, w, z) in &tables.triple[*t] {
                    let coef = &xy * z;
                    for (cu, q) in conj[(j * m + u) * n + i].iter() {
                        acc.push((s * m + cu) * big + w * m + v, &coef * q);
                    }
                }
            }
        }
        acc.finish()
    });
    // ε̄(p^a ⋈ c_b) = p^a(1) ε(c_b) = (coordinate a of 1) ε(c_b)
    let counit = h.unit().kron(&co.counit);
    let basis = (0..big).map(|idx| format!("{}><{}", dual.name(idx / m), co.basis[idx % m])).collect();
    Coalgebra::new(f, basis, comult, counit)
}

fn check_preconditions(h: &HopfAlgebra, c: &BimoduleCoalgebra) -> Result<(), CrossedError> {
    let hr = verify_hopf_axioms(h);
    if let Some(x) = hr.first_failure() {
        return Err(CrossedError::Precondition(format!("H is not a Hopf algebra: {x}")));
    }
    let cr = verify_bimodule_coalgebra(h, c);
    if let Some(x) = cr.first_failure() {
        return Err(CrossedError::Precondition(format!("C is not an H-bimodule coalgebra: {x}")));
    }
    Ok(())
}

/// The diagonal crossed coproduct H*^op ⋈ C (H* index major).
pub fn diagonal_crossed_coproduct(h: &HopfAlgebra, c: &BimoduleCoalgebra) -> Result<Coalgebra, CrossedError> {
    check_preconditions(h, c)?;
    crossed_coproduct_with(h, &CrossedTables::new(h), c)
}

/// The codouble: the crossed coproduct with C = H and multiplication actions.
pub fn drinfeld_codouble(h: &HopfAlgebra) -> Result<Coalgebra, CrossedError> {
    diagonal_crossed_coproduct(h, &regular_bimodule_coalgebra(h)?)
}

/// H with left and right multiplication.
pub fn regular_bimodule_coalgebra(h: &HopfAlgebra) -> Result<BimoduleCoalgebra, CrossedError> {
    let f = h.field();
    let n = h.dim();
    let coalgebra = Coalgebra::new(f, h.basis().to_vec(), h.comult().clone(), h.counit().clone())?;
    let left = h.mult().clone();
    let right = h.mult().clone();
    let _ = n;
    BimoduleCoalgebra::new(h, coalgebra, left, right)
}

/// Algebra structure on H*⊗H used for the codouble:
/// (p⊗h)(p'⊗h') = (p' then p)⊗hh', where "p' then p" is the convolution p'p
/// evaluated as p'(x₁)p(x₂). Unit ε⊗1.
pub fn codouble_algebra(h: &HopfAlgebra) -> (Tensor2to1, Vector) {
    let n = h.dim();
    let f = h.field();
    let dual = dual_hopf(h);
    let mult = Tensor2to1::from_fn(f, n * n, n * n, n * n, |x, y| {
        let (a, b, c, d) = (x / n, x % n, y / n, y % n);
        dual.mul_basis(c, a).kron(h.mul_basis(b, d))
    });
    (mult, h.counit().kron(h.unit()))
}

/// Left and right actions of the codouble on H*^op ⋈ C:
/// (p⊗h)▷(q⋈c) = qp ⋈ h·c and (q⋈c)◁(p⊗h) = pq ⋈ c·h.
#[derive(Clone, Debug)]
pub struct CodoubleActions {
    pub left: Tensor2to1,
    pub right: Tensor2to1,
}

pub fn codouble_actions(h: &HopfAlgebra, c: &BimoduleCoalgebra) -> Result<CodoubleActions, CrossedError> {
    check_preconditions(h, c)?;
    Ok(codouble_actions_unchecked(h, &dual_hopf(h), c))
}

fn codouble_actions_unchecked(h: &HopfAlgebra, dual: &HopfAlgebra, c: &BimoduleCoalgebra) -> CodoubleActions {
    let n = h.dim();
    let m = c.dim();
    let f = h.field();
    let left = Tensor2to1::from_fn(f, n * n, n * m, n * m, |x, y| {
        let (a, b, q, d) = (x / n, x % n, y / m, y % m);
        dual.mul_basis(q, a).kron(c.left.at(b, d))
    });
    let right = Tensor2to1::from_fn(f, n * m, n * n, n * m, |y, x| {
        let (q, d, a, b) = (y / m, y % m, x / n, x % n);
        dual.mul_basis(a, q).kron(c.right.at(d, b))
    });
    CodoubleActions { left, right }
}

/// Module, bimodule and coalgebra-map axioms of the codouble actions.
pub fn verify_codouble_bimodule(h: &HopfAlgebra, c: &BimoduleCoalgebra) -> Result<Report, CrossedError> {
    check_preconditions(h, c)?;
    let tables = CrossedTables::new(h);
    let acts = codouble_actions_unchecked(h, &tables.dual, c);
    let (dmult, dunit) = codouble_algebra(h);
    let codouble = crossed_coproduct_with(h, &tables, &regular_bimodule_coalgebra(h)?)?;
    let target = crossed_coproduct_with(h, &tables, c)?;
    let loc = "codouble on H*op><C";
    let nd = codouble.dim();
    let nx = target.dim();
    let f = h.field();
    let dn = |i: usize| codouble.basis[i].clone();
    let xn = |i: usize| target.basis[i].clone();
    let mut r = Report::new();
    let names_l = |i: usize, j: usize, u: usize| format!("basis ('{}', '{}', '{}')", dn(i), dn(j), xn(u));
    let names_r = |u: usize, i: usize, j: usize| format!("basis ('{}', '{}', '{}')", xn(u), dn(i), dn(j));
    for ch in left_module_checks(loc, "left-action", &dmult, &dunit, &acts.left, &names_l) {
        r.push(ch);
    }
    for ch in right_module_checks(loc, "right-action", &dmult, &dunit, &acts.right, &names_r) {
        r.push(ch);
    }
    r.push(sweep(
        "bimodule",
        loc,
        (0..nd).flat_map(|i| (0..nx).flat_map(move |u| (0..nd).map(move |j| (i, u, j)))),
        |&(i, u, j)| format!("basis ('{}', '{}', '{}')", dn(i), xn(u), dn(j)),
        |&(i, u, j)| (acts.right.apply_flat_right(acts.left.at(i, u), j), acts.left.apply_flat_left(i, acts.right.at(u, j))),
    ));
    let pairs_lr = (0..nd).flat_map(|i| (0..nx).map(move |u| (i, u)));
    r.push(sweep(
        "left-action-comultiplicative",
        loc,
        pairs_lr.clone(),
        |&(i, u)| format!("basis ('{}', '{}')", dn(i), xn(u)),
        |&(i, u)| {
            let lhs = target.coproduct(acts.left.at(i, u));
            let mut acc = Accumulator::new(f, nx * nx);
            for (a, b, s) in codouble.comult.terms(i) {
                for (x, y, t) in target.comult.terms(u) {
                    acc.add_scaled(&acts.left.at(*a, *x).kron(acts.left.at(*b, *y)), &(s * t));
                }
            }
            (lhs, acc.finish())
        },
    ));
    r.push(sweep(
        "right-action-comultiplicative",
        loc,
        pairs_lr.clone(),
        |&(i, u)| format!("basis ('{}', '{}')", xn(u), dn(i)),
        |&(i, u)| {
            let lhs = target.coproduct(acts.right.at(u, i));
            let mut acc = Accumulator::new(f, nx * nx);
            for (x, y, t) in target.comult.terms(u) {
                for (a, b, s) in codouble.comult.terms(i) {
                    acc.add_scaled(&acts.right.at(*x, *a).kron(acts.right.at(*y, *b)), &(s * t));
                }
            }
            (lhs, acc.finish())
        },
    ));
    r.push(sweep(
        "actions-counital",
        loc,
        pairs_lr,
        |&(i, u)| format!("basis ('{}', '{}')", dn(i), xn(u)),
        |&(i, u)| {
            let e = &codouble.counit.get(i) * &target.counit.get(u);
            (
                Vector::from_dense(f, vec![target.eps(acts.left.at(i, u)), target.eps(acts.right.at(u, i))]),
                Vector::from_dense(f, vec![e.clone(), e]),
            )
        },
    ));
    Ok(r)
}

/// A left H-module with a right C-comodule structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleComodule {
    pub action: Tensor2to1,
    pub coaction: Tensor1to2,
}

impl ModuleComodule {
    pub fn dim(&self) -> usize {
        self.action.right_dim()
    }
}

/// Checks the module and comodule axioms, then both forms of the compatibility
/// condition and whether they agree.
pub fn verify_ydc_compat(h: &HopfAlgebra, c: &BimoduleCoalgebra, md: &ModuleComodule) -> Result<Report, CrossedError> {
    let (n, m, dc) = (h.dim(), md.dim(), c.dim());
    if md.action.left_dim() != n || md.action.out_dim() != m || md.coaction.src_dim() != m || md.coaction.left_dim() != m
    {
        return Err(CrossedError::Shape("module-comodule shapes".into()));
    }
    if md.coaction.right_dim() != dc {
        return Err(CrossedError::Shape("coaction does not land in M⊗C".into()));
    }
    let sinv = h.antipode_inv()?;
    let f = h.field();
    let loc = "M over (H, C)";
    let mut r = Report::new();
    let names = |i: usize, j: usize, u: usize| format!("basis ('{}', '{}', {u})", h.name(i), h.name(j));
    for ch in left_module_checks(loc, "action", h.mult(), h.unit(), &md.action, &names) {
        r.push(ch);
    }
    for ch in comodule_checks(loc, "coaction", &md.coaction, c.coalgebra.comult(), c.coalgebra.counit()) {
        r.push(ch);
    }
    let cases = || (0..n).flat_map(|i| (0..m).map(move |u| (i, u)));
    let describe = |&(i, u): &(usize, usize)| format!("basis ('{}', {u})", h.name(i));
    // ρ(v) for a vector v of M, as a vector of M⊗C.
    let rho = |v: &Vector| md.coaction.apply(v);
    let first = sweep("compatibility", loc, cases(), describe, |&(i, u)| {
        let mut lhs = Accumulator::new(f, m * dc);
        let mut rhs = Accumulator::new(f, m * dc);
        for (a, b, s) in h.comult().terms(i) {
            for (x, k, t) in md.coaction.terms(u) {
                lhs.add_scaled(&md.action.at(*a, *x).kron(c.left.at(*b, *k)), &(s * t));
            }
            for (y, w) in rho(md.action.at(*b, u)).iter() {
                let (yy, l) = (y / dc, y % dc);
                let cw = c.right.at(l, *a);
                acc_kron_basis(&mut rhs, yy, cw, dc, &(s * w));
            }
        }
        (lhs.finish(), rhs.finish())
    });
    let second = sweep("compatibility-coaction-form", loc, cases(), describe, |&(i, u)| {
        let lhs = rho(md.action.at(i, u));
        let mut rhs = Accumulator::new(f, m * dc);
        for (a, b, cc, s) in h.comult3(i) {
            for (x, k, t) in md.coaction.terms(u) {
                let hc = c.left.at(cc, *k);
                let mut tail = Accumulator::new(f, dc);
                for (z, q) in sinv.column(a).iter() {
                    tail.add_scaled(&c.right.apply_flat_right(hc, z), q);
                }
                rhs.add_scaled(&md.action.at(b, *x).kron(&tail.finish()), &(&s * t));
            }
        }
        (lhs, rhs.finish())
    });
    let agree = first.passed() == second.passed();
    r.push(first);
    r.push(second);
    r.push(if agree {
        Check::pass("compatibility-forms-agree", loc)
    } else {
        Check::fail("compatibility-forms-agree", loc, "one form holds and the other fails")
    });
    Ok(r)
}

fn acc_kron_basis(acc: &mut Accumulator, y: usize, v: &Vector, dc: usize, s: &Scalar) {
    for (k, q) in v.iter() {
        acc.push(y * dc + k, s * q);
    }
}
