//! Finite-dimensional Hopf algebras given by structure constants, their
//! axioms, duals and opposites, Hopf automorphisms, and the group of
//! automorphism pairs with the twisted product (α,β)*(γ,δ) = (δαδ⁻¹γ, δβ).

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};

use thiserror::Error;

use crate::report::{sweep, Check, Report};
use crate::scalar::{Field, Scalar};
use crate::tensor::{Accumulator, LinMap, Tensor1to2, Tensor2to1, TensorError, Vector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HopfError {
    #[error("malformed structure: {0}")]
    Shape(String),
    #[error(transparent)]
    Tensor(#[from] TensorError),
    #[error("antipode is not invertible")]
    SingularAntipode,
    #[error("map is not a Hopf automorphism: {0}")]
    NotAutomorphism(String),
    #[error("automorphisms belong to different Hopf algebras")]
    ForeignAlgebra,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimMismatch { expected: usize, got: usize },
}

#[derive(Clone, Debug)]
pub struct HopfAlgebra {
    field: Field,
    basis: Vec<String>,
    mult: Tensor2to1,
    unit: Vector,
    comult: Tensor1to2,
    counit: Vector,
    antipode: LinMap,
    antipode_inv: Option<LinMap>,
    fingerprint: u64,
}

impl PartialEq for HopfAlgebra {
    fn eq(&self, o: &Self) -> bool {
        self.field == o.field
            && self.mult == o.mult
            && self.unit == o.unit
            && self.comult == o.comult
            && self.counit == o.counit
            && self.antipode == o.antipode
    }
}

impl HopfAlgebra {
    /// Assembles a Hopf algebra from structure tensors after shape checks.
    /// Axioms are not checked here; see [`verify_hopf_axioms`].
    pub fn new(
        field: Field,
        basis: Vec<String>,
        mult: Tensor2to1,
        unit: Vector,
        comult: Tensor1to2,
        counit: Vector,
        antipode: LinMap,
    ) -> Result<Self, HopfError> {
        let n = basis.len();
        let shape = |ok: bool, what: &str| if ok { Ok(()) } else { Err(HopfError::Shape(what.to_string())) };
        shape(n > 0, "empty basis")?;
        shape(mult.left_dim() == n && mult.right_dim() == n && mult.out_dim() == n, "mult shape")?;
        shape(unit.dim() == n, "unit length")?;
        shape(comult.src_dim() == n && comult.left_dim() == n && comult.right_dim() == n, "comult shape")?;
        shape(counit.dim() == n, "counit length")?;
        shape(antipode.src_dim() == n && antipode.dst_dim() == n, "antipode shape")?;
        for f in [mult.field(), unit.field(), comult.field(), counit.field(), antipode.field()] {
            shape(f == field, "field tag mismatch")?;
        }
        let antipode_inv = antipode.invert().ok();
        let mut hasher = DefaultHasher::new();
        field.hash(&mut hasher);
        format!("{:?}{:?}{:?}{:?}{:?}", mult, unit, comult, counit, antipode).hash(&mut hasher);
        Ok(HopfAlgebra { field, basis, mult, unit, comult, counit, antipode, antipode_inv, fingerprint: hasher.finish() })
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

    pub fn name(&self, i: usize) -> &str {
        &self.basis[i]
    }

    pub fn mult(&self) -> &Tensor2to1 {
        &self.mult
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn comult(&self) -> &Tensor1to2 {
        &self.comult
    }

    pub fn counit(&self) -> &Vector {
        &self.counit
    }

    pub fn antipode(&self) -> &LinMap {
        &self.antipode
    }

    pub fn antipode_inv(&self) -> Result<&LinMap, HopfError> {
        self.antipode_inv.as_ref().ok_or(HopfError::SingularAntipode)
    }

    /// Structural hash identifying this algebra (used to reject mixing).
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn basis_vec(&self, i: usize) -> Vector {
        Vector::basis(self.field, self.dim(), i)
    }

    pub fn mul(&self, x: &Vector, y: &Vector) -> Vector {
        self.mult.apply(x, y)
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &Vector {
        self.mult.at(i, j)
    }

    /// Δ(x) as a vector of H⊗H.
    pub fn coproduct(&self, x: &Vector) -> Vector {
        self.comult.apply(x)
    }

    pub fn eps(&self, x: &Vector) -> Scalar {
        x.dot(&self.counit)
    }

    pub fn eps_basis(&self, i: usize) -> Scalar {
        self.counit.get(i)
    }

    /// (Δ⊗id)Δ(e_i) as (a, b, c, coefficient) terms.
    pub fn comult3(&self, i: usize) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for (a, b, c) in self.comult.terms(i) {
            for (x, y, d) in self.comult.terms(*a) {
                out.push((*x, *y, *b, c * d));
            }
        }
        out
    }

    /// Product in the algebra H⊗H (componentwise).
    pub fn mul_square(&self, x: &Vector, y: &Vector) -> Vector {
        let n = self.dim();
        let mut acc = Accumulator::new(self.field, n * n);
        for (u, s) in x.iter() {
            for (v, t) in y.iter() {
                let p = self.mul_basis(u / n, v / n).kron(self.mul_basis(u % n, v % n));
                acc.add_scaled(&p, &(s * t));
            }
        }
        acc.finish()
    }

    fn describe1(&self, i: usize) -> String {
        format!("basis '{}'", self.basis[i])
    }

    fn describe2(&self, i: usize, j: usize) -> String {
        format!("basis ('{}', '{}')", self.basis[i], self.basis[j])
    }

    fn describe3(&self, i: usize, j: usize, k: usize) -> String {
        format!("basis ('{}', '{}', '{}')", self.basis[i], self.basis[j], self.basis[k])
    }
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (0..n).map(move |j| (i, j)))
}

fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
}

/// Applies f⊗g to a vector of V⊗W (dims given by the maps).
pub fn apply_kron(f: &LinMap, g: &LinMap, x: &Vector) -> Vector {
    let w = g.src_dim();
    let mut acc = Accumulator::new(f.field(), f.dst_dim() * g.dst_dim());
    for (u, s) in x.iter() {
        acc.add_scaled(&f.column(u / w).kron(g.column(u % w)), s);
    }
    acc.finish()
}

/// Checks every Hopf axiom at every basis tuple.
pub fn verify_hopf_axioms(h: &HopfAlgebra) -> Report {
    let n = h.dim();
    let f = h.field;
    let loc = "H";
    let mut r = Report::new();
    r.push(sweep(
        "associativity",
        loc,
        triples(n),
        |&(i, j, k)| h.describe3(i, j, k),
        |&(i, j, k)| (h.mul(h.mul_basis(i, j), &h.basis_vec(k)), h.mul(&h.basis_vec(i), h.mul_basis(j, k))),
    ));
    r.push(sweep(
        "unit",
        loc,
        0..n,
        |&i| h.describe1(i),
        |&i| {
            let e = h.basis_vec(i);
            (h.mul(&h.unit, &e).concat(&h.mul(&e, &h.unit)), e.concat(&e))
        },
    ));
    r.push(sweep("coassociativity", loc, 0..n, |&i| h.describe1(i), |&i| coassoc_sides(h.comult(), i)));
    r.push(sweep(
        "counit",
        loc,
        0..n,
        |&i| h.describe1(i),
        |&i| {
            let e = h.basis_vec(i);
            (counit_sides(h.comult(), h.counit(), i), e.concat(&e))
        },
    ));
    r.push(sweep(
        "comultiplication-multiplicative",
        loc,
        pairs(n),
        |&(i, j)| h.describe2(i, j),
        |&(i, j)| (h.coproduct(h.mul_basis(i, j)), h.mul_square(&h.comult.at(i), &h.comult.at(j))),
    ));
    r.push(sweep(
        "comultiplication-unital",
        loc,
        std::iter::once(()),
        |_| "unit".to_string(),
        |_| (h.coproduct(&h.unit), h.unit.kron(&h.unit)),
    ));
    r.push(sweep(
        "counit-multiplicative",
        loc,
        pairs(n),
        |&(i, j)| h.describe2(i, j),
        |&(i, j)| (h.eps(h.mul_basis(i, j)), &h.eps_basis(i) * &h.eps_basis(j)),
    ));
    r.push(sweep("counit-unital", loc, std::iter::once(()), |_| "unit".to_string(), |_| (h.eps(&h.unit), f.one())));
    let eta_eps = |i: usize| h.unit.scale(&h.eps_basis(i));
    r.push(sweep(
        "antipode",
        loc,
        0..n,
        |&i| h.describe1(i),
        |&i| {
            let mut acc = Accumulator::new(f, n);
            for (a, b, c) in h.comult.terms(i) {
                acc.add_scaled(&h.mul(h.antipode.column(*a), &h.basis_vec(*b)), c);
            }
            (acc.finish(), eta_eps(i))
        },
    ));
    r.push(sweep(
        "antipode-right",
        loc,
        0..n,
        |&i| h.describe1(i),
        |&i| {
            let mut acc = Accumulator::new(f, n);
            for (a, b, c) in h.comult.terms(i) {
                acc.add_scaled(&h.mul(&h.basis_vec(*a), h.antipode.column(*b)), c);
            }
            (acc.finish(), eta_eps(i))
        },
    ));
    match &h.antipode_inv {
        Some(si) => {
            r.push(sweep(
                "antipode-invertible",
                loc,
                0..n,
                |&i| h.describe1(i),
                |&i| (si.apply(h.antipode.column(i)), h.basis_vec(i)),
            ));
        }
        None => {
            let w = match h.antipode.invert() {
                Err(TensorError::Singular { witness }) => witness.to_string(),
                _ => "singular".to_string(),
            };
            r.push(Check::fail("antipode-invertible", loc, format!("kernel vector {w}")));
        }
    }
    let s2 = h.antipode.compose(&h.antipode);
    if s2.is_identity() {
        r.push(Check::info("antipode-square", loc, "S^2 = id"));
    } else {
        let i = (0..n).find(|&i| s2.column(i) != &h.basis_vec(i)).unwrap();
        r.push(Check::info("antipode-square", loc, format!("S^2 != id at {}", h.describe1(i))));
    }
    r
}

pub(crate) fn coassoc_sides(d: &Tensor1to2, i: usize) -> (Vector, Vector) {
    let n = d.left_dim();
    let f = d.field();
    let mut l = Accumulator::new(f, n * n * n);
    let mut r = Accumulator::new(f, n * n * n);
    for (a, b, c) in d.terms(i) {
        for (x, y, e) in d.terms(*a) {
            l.push((x * n + y) * n + b, c * e);
        }
        for (x, y, e) in d.terms(*b) {
            r.push((a * n + x) * n + y, c * e);
        }
    }
    (l.finish(), r.finish())
}

/// ((ε⊗id)Δ e_i) ⊗ ((id⊗ε)Δ e_i), compared against e_i ⊗ e_i.
pub(crate) fn counit_sides(d: &Tensor1to2, eps: &Vector, i: usize) -> Vector {
    let n = d.left_dim();
    let f = d.field();
    let mut l = Accumulator::new(f, n);
    let mut r = Accumulator::new(f, n);
    for (a, b, c) in d.terms(i) {
        l.push(*b, c * &eps.get(*a));
        r.push(*a, c * &eps.get(*b));
    }
    l.finish().concat(&r.finish())
}

/// Dual Hopf algebra H*: convolution product, coproduct dual to the product,
/// unit ε, counit evaluation at 1, antipode Sᵀ. Basis p_i dual to e_i.
pub fn dual_hopf(h: &HopfAlgebra) -> HopfAlgebra {
    let n = h.dim();
    let f = h.field;
    // p^a p^b = Σ_k [coefficient of e_a⊗e_b in Δ(e_k)] p^k
    let mut prod: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); n * n];
    for k in 0..n {
        for (a, b, c) in h.comult.terms(k) {
            prod[a * n + b].push((k, c.clone()));
        }
    }
    let table = prod.into_iter().map(|t| Vector::from_terms(f, n, t)).collect();
    let mult = Tensor2to1::from_table(f, n, n, n, table).expect("dual product shape");
    let mut co: Vec<Vec<(usize, usize, Scalar)>> = vec![Vec::new(); n];
    for (i, j) in pairs(n) {
        for (k, c) in h.mul_basis(i, j).iter() {
            co[k].push((i, j, c.clone()));
        }
    }
    let comult = Tensor1to2::from_terms(f, n, n, co).expect("dual coproduct shape");
    let basis = h.basis.iter().map(|b| format!("p_{b}")).collect();
    HopfAlgebra::new(f, basis, mult, h.counit.clone(), comult, h.unit.clone(), h.antipode.transpose())
        .expect("dual of a well-formed algebra is well formed")
}

/// Same coalgebra, product reversed. The antipode of the opposite algebra is S⁻¹.
pub fn opposite_algebra(h: &HopfAlgebra) -> Result<HopfAlgebra, HopfError> {
    let si = h.antipode_inv()?.clone();
    HopfAlgebra::new(h.field, h.basis.clone(), h.mult.swap_inputs(), h.unit.clone(), h.comult.clone(), h.counit.clone(), si)
}

/// Exact comparison of two algebras after identifying basis i with basis i.
pub fn same_structure(a: &HopfAlgebra, b: &HopfAlgebra) -> bool {
    a == b
}

/// Verifies that f is a Hopf automorphism of H.
pub fn is_hopf_automorphism(h: &HopfAlgebra, f: &LinMap) -> Result<(bool, Report), HopfError> {
    let n = h.dim();
    if f.src_dim() != n || f.dst_dim() != n {
        return Err(HopfError::DimMismatch { expected: n, got: f.src_dim().max(f.dst_dim()) });
    }
    if f.field() != h.field {
        return Err(HopfError::Shape("automorphism field differs from algebra field".into()));
    }
    let loc = "automorphism";
    let mut r = Report::new();
    match f.invert() {
        Ok(_) => r.push(Check::pass("invertible", loc)),
        Err(TensorError::Singular { witness }) => r.push(Check::fail("invertible", loc, format!("kernel vector {witness}"))),
        Err(e) => return Err(e.into()),
    }
    r.push(sweep(
        "multiplicative",
        loc,
        pairs(n),
        |&(i, j)| h.describe2(i, j),
        |&(i, j)| (f.apply(h.mul_basis(i, j)), h.mul(f.column(i), f.column(j))),
    ));
    r.push(sweep("unital", loc, std::iter::once(()), |_| "unit".into(), |_| (f.apply(&h.unit), h.unit.clone())));
    r.push(sweep(
        "comultiplicative",
        loc,
        0..n,
        |&i| h.describe1(i),
        |&i| (h.coproduct(f.column(i)), apply_kron(f, f, &h.comult.at(i))),
    ));
    r.push(sweep("counital", loc, 0..n, |&i| h.describe1(i), |&i| (h.eps(f.column(i)), h.eps_basis(i))));
    r.push(sweep(
        "commutes-with-antipode",
        loc,
        0..n,
        |&i| h.describe1(i),
        |&i| (f.apply(h.antipode.column(i)), h.antipode.apply(f.column(i))),
    ));
    Ok((r.passed(), r))
}

/// A verified Hopf automorphism together with its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HopfAutomorphism {
    map: LinMap,
    inverse: LinMap,
    algebra: u64,
}

impl HopfAutomorphism {
    pub fn new(h: &HopfAlgebra, map: LinMap) -> Result<Self, HopfError> {
        let (ok, report) = is_hopf_automorphism(h, &map)?;
        if !ok {
            let c = report.first_failure().expect("failed report has a failure");
            return Err(HopfError::NotAutomorphism(c.to_string()));
        }
        let inverse = map.invert()?;
        Ok(HopfAutomorphism { map, inverse, algebra: h.fingerprint() })
    }

    pub fn identity(h: &HopfAlgebra) -> Self {
        let id = LinMap::identity(h.field, h.dim());
        HopfAutomorphism { map: id.clone(), inverse: id, algebra: h.fingerprint() }
    }

    pub fn matrix(&self) -> &LinMap {
        &self.map
    }

    pub fn inverse_matrix(&self) -> &LinMap {
        &self.inverse
    }

    pub fn algebra(&self) -> u64 {
        self.algebra
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        self.map.apply(v)
    }

    pub fn inverse(&self) -> Self {
        HopfAutomorphism { map: self.inverse.clone(), inverse: self.map.clone(), algebra: self.algebra }
    }

    /// self ∘ other.
    pub fn compose(&self, other: &Self) -> Result<Self, HopfError> {
        if self.algebra != other.algebra {
            return Err(HopfError::ForeignAlgebra);
        }
        Ok(HopfAutomorphism {
            map: self.map.compose(&other.map),
            inverse: other.inverse.compose(&self.inverse),
            algebra: self.algebra,
        })
    }

    pub fn is_identity(&self) -> bool {
        self.map.is_identity()
    }

    /// Canonical text of the matrix, row by row.
    pub fn key(&self) -> String {
        let rows: Vec<String> = self
            .map
            .rows()
            .iter()
            .map(|r| r.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        format!("[{}]", rows.join(";"))
    }
}

/// An element (α, β) of Aut_Hopf(H) × Aut_Hopf(H) with the twisted product.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GPair {
    alpha: HopfAutomorphism,
    beta: HopfAutomorphism,
}

impl GPair {
    pub fn new(alpha: HopfAutomorphism, beta: HopfAutomorphism) -> Result<Self, HopfError> {
        if alpha.algebra != beta.algebra {
            return Err(HopfError::ForeignAlgebra);
        }
        Ok(GPair { alpha, beta })
    }

    /// Verifies both matrices and builds the pair.
    pub fn from_matrices(h: &HopfAlgebra, alpha: LinMap, beta: LinMap) -> Result<Self, HopfError> {
        GPair::new(HopfAutomorphism::new(h, alpha)?, HopfAutomorphism::new(h, beta)?)
    }

    pub fn alpha(&self) -> &HopfAutomorphism {
        &self.alpha
    }

    pub fn beta(&self) -> &HopfAutomorphism {
        &self.beta
    }

    pub fn algebra(&self) -> u64 {
        self.alpha.algebra
    }

    pub fn is_unit(&self) -> bool {
        self.alpha.is_identity() && self.beta.is_identity()
    }

    /// Canonical serialization used to key components.
    pub fn key(&self) -> String {
        format!("({}, {})", self.alpha.key(), self.beta.key())
    }
}

impl fmt::Display for GPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.key())
    }
}

/// (α,β)*(γ,δ) = (δαδ⁻¹γ, δβ).
pub fn g_mul(p: &GPair, q: &GPair) -> Result<GPair, HopfError> {
    if p.algebra() != q.algebra() {
        return Err(HopfError::ForeignAlgebra);
    }
    let (a, b, c, d) = (&p.alpha, &p.beta, &q.alpha, &q.beta);
    let first = d.compose(a)?.compose(&d.inverse())?.compose(c)?;
    Ok(GPair { alpha: first, beta: d.compose(b)? })
}

/// (α,β)⁻¹ = (β⁻¹α⁻¹β, β⁻¹).
pub fn g_inv(p: &GPair) -> GPair {
    let bi = p.beta.inverse();
    let first = bi.compose(&p.alpha.inverse()).and_then(|x| x.compose(&p.beta)).expect("same algebra");
    GPair { alpha: first, beta: bi }
}

pub fn g_unit(h: &HopfAlgebra) -> GPair {
    GPair { alpha: HopfAutomorphism::identity(h), beta: HopfAutomorphism::identity(h) }
}

/// Closes a generator set under the twisted product and inverses, stopping at
/// `cap` elements. Returns the elements in discovery order and whether the
/// closure was truncated.
pub fn close_pairs(h: &HopfAlgebra, generators: &[GPair], cap: usize) -> Result<(Vec<GPair>, bool), HopfError> {
    let mut out: Vec<GPair> = vec![g_unit(h)];
    let mut seen: std::collections::HashSet<String> = out.iter().map(GPair::key).collect();
    let mut gens: Vec<GPair> = Vec::new();
    for g in generators {
        if g.algebra() != h.fingerprint() {
            return Err(HopfError::ForeignAlgebra);
        }
        gens.push(g.clone());
        gens.push(g_inv(g));
    }
    let mut frontier = 0;
    while frontier < out.len() {
        let x = out[frontier].clone();
        frontier += 1;
        for g in &gens {
            let y = g_mul(&x, g)?;
            if seen.insert(y.key()) {
                if out.len() >= cap {
                    return Ok((out, true));
                }
                out.push(y);
            }
        }
    }
    Ok((out, false))
}

#[cfg(test)]
mod tests {
    use super::*;

    // k(Z3) with basis e, g, g^2.
    fn kz3() -> HopfAlgebra {
        let f = Field::Rational;
        let n = 3;
        let mult = Tensor2to1::from_fn(f, n, n, n, |i, j| Vector::basis(f, n, (i + j) % 3));
        let comult = Tensor1to2::from_fn(f, n, n, n, |i| Vector::basis(f, n * n, i * n + i));
        let counit = Vector::from_dense(f, vec![f.one(); 3]);
        let s = LinMap::permutation(f, &[0, 2, 1]);
        HopfAlgebra::new(f, vec!["e".into(), "g".into(), "g^2".into()], mult, Vector::basis(f, n, 0), comult, counit, s)
            .unwrap()
    }

    #[test]
    fn group_algebra_passes() {
        assert!(verify_hopf_axioms(&kz3()).passed());
    }

    #[test]
    fn dual_is_pointwise() {
        let h = kz3();
        let d = dual_hopf(&h);
        assert!(verify_hopf_axioms(&d).passed());
        for (a, b) in pairs(3) {
            let expect = if a == b { Vector::basis(h.field(), 3, a) } else { Vector::zero(h.field(), 3) };
            assert_eq!(d.mul_basis(a, b), &expect);
        }
        assert_eq!(d.eps_basis(0), h.field().one());
        assert!(d.eps_basis(1).is_zero());
        let dd = dual_hopf(&d);
        assert_eq!(dd, h);
    }

    #[test]
    fn inversion_is_automorphism_and_swap_is_not() {
        let h = kz3();
        let f = h.field();
        assert!(is_hopf_automorphism(&h, &LinMap::permutation(f, &[0, 2, 1])).unwrap().0);
        assert!(is_hopf_automorphism(&h, &LinMap::identity(f, 3)).unwrap().0);
        let (ok, r) = is_hopf_automorphism(&h, &LinMap::permutation(f, &[1, 0, 2])).unwrap();
        assert!(!ok);
        assert!(r.find("unital").any(|c| !c.passed()));
        assert!(matches!(is_hopf_automorphism(&h, &LinMap::identity(f, 2)), Err(HopfError::DimMismatch { .. })));
    }

    #[test]
    fn pair_group_laws_on_z3() {
        let h = kz3();
        let f = h.field();
        let tau = HopfAutomorphism::new(&h, LinMap::permutation(f, &[0, 2, 1])).unwrap();
        let id = HopfAutomorphism::identity(&h);
        let t_id = GPair::new(tau.clone(), id.clone()).unwrap();
        assert!(g_mul(&t_id, &t_id).unwrap().is_unit());
        let tt = GPair::new(tau.clone(), tau.clone()).unwrap();
        assert_eq!(g_inv(&tt), tt);
        assert_eq!(g_mul(&g_unit(&h), &tt).unwrap(), tt);
        let (all, truncated) = close_pairs(&h, &[t_id, GPair::new(id, tau).unwrap()], 64).unwrap();
        assert_eq!(all.len(), 4);
        assert!(!truncated);
    }
}
