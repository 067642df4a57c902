//! (α,β)-Yetter-Drinfeld modules over H: compatibility, tensor products,
//! conjugation, braidings, duals with evaluation/coevaluation, and the
//! correspondence with comodules over the crossed coproduct H*^op ⋈ H(α,β).

use thiserror::Error;

use crate::crossed::{comodule_checks, left_module_checks, Coalgebra};
use crate::hopf::{g_inv, g_mul, g_unit, GPair, HopfAlgebra, HopfError};
use crate::report::{compare, sweep, Check, Report};
use crate::scalar::Scalar;
use crate::tensor::{Accumulator, LinMap, Tensor1to2, Tensor2to1, TensorError, Vector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum YdError {
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Tensor(#[from] TensorError),
    #[error("malformed module: {0}")]
    Shape(String),
    #[error("label/coalgebra mismatch: {0}")]
    LabelMismatch(String),
}

/// A module-comodule over H carrying an automorphism-pair label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YdModule {
    label: GPair,
    action: Tensor2to1,
    coaction: Tensor1to2,
}

impl YdModule {
    pub fn new(h: &HopfAlgebra, label: GPair, action: Tensor2to1, coaction: Tensor1to2) -> Result<Self, YdError> {
        let n = h.dim();
        let m = action.right_dim();
        if label.algebra() != h.fingerprint() {
            return Err(HopfError::ForeignAlgebra.into());
        }
        if action.left_dim() != n || action.out_dim() != m {
            return Err(YdError::Shape("action must map H⊗M to M".into()));
        }
        if coaction.src_dim() != m || coaction.left_dim() != m || coaction.right_dim() != n {
            return Err(YdError::Shape("coaction must map M to M⊗H".into()));
        }
        if action.field() != h.field() || coaction.field() != h.field() {
            return Err(YdError::Shape("field tag mismatch".into()));
        }
        Ok(YdModule { label, action, coaction })
    }

    pub fn label(&self) -> &GPair {
        &self.label
    }

    pub fn action(&self) -> &Tensor2to1 {
        &self.action
    }

    pub fn coaction(&self) -> &Tensor1to2 {
        &self.coaction
    }

    pub fn dim(&self) -> usize {
        self.action.right_dim()
    }

    /// Same data under a different label (used to test mislabeled modules).
    pub fn relabel(&self, label: GPair) -> Self {
        YdModule { label, action: self.action.clone(), coaction: self.coaction.clone() }
    }

    /// Action of e_i as a matrix on M.
    pub fn action_map(&self, i: usize) -> LinMap {
        self.action.left_map(i)
    }

    /// Action of an arbitrary element of H as a matrix on M.
    pub fn action_by(&self, x: &Vector) -> LinMap {
        let f = self.action.field();
        let m = self.dim();
        LinMap::from_fn(f, m, m, |u| {
            let mut acc = Accumulator::new(f, m);
            for (i, s) in x.iter() {
                acc.add_scaled(self.action.at(i, u), s);
            }
            acc.finish()
        })
    }

    /// Coaction as a matrix M → M⊗H.
    pub fn coaction_map(&self) -> LinMap {
        self.coaction.as_linmap()
    }
}

fn same_algebra(h: &HopfAlgebra, ms: &[&YdModule]) -> Result<(), YdError> {
    if ms.iter().all(|m| m.label.algebra() == h.fingerprint()) {
        Ok(())
    } else {
        Err(HopfError::ForeignAlgebra.into())
    }
}

/// Module, comodule and compatibility axioms:
/// h₁·m₀ ⊗ β(h₂)m₁ = (h₂·m)₀ ⊗ (h₂·m)₁ α(h₁).
pub fn verify_yd(h: &HopfAlgebra, md: &YdModule) -> Report {
    let (n, m) = (h.dim(), md.dim());
    let f = h.field();
    let loc = "YD module";
    let mut r = Report::new();
    let names = |i: usize, j: usize, u: usize| format!("basis ('{}', '{}', m{u})", h.name(i), h.name(j));
    for ch in left_module_checks(loc, "action", h.mult(), h.unit(), &md.action, &names) {
        r.push(ch);
    }
    for ch in comodule_checks(loc, "coaction", &md.coaction, h.comult(), h.counit()) {
        r.push(ch);
    }
    let alpha = md.label.alpha().matrix();
    let beta = md.label.beta().matrix();
    r.push(sweep(
        "compatibility",
        loc,
        (0..n).flat_map(|i| (0..m).map(move |u| (i, u))),
        |&(i, u)| format!("basis ('{}', m{u})", h.name(i)),
        |&(i, u)| {
            let mut lhs = Accumulator::new(f, m * n);
            let mut rhs = Accumulator::new(f, m * n);
            for (a, b, s) in h.comult().terms(i) {
                let bb = beta.column(*b);
                for (x, k, t) in md.coaction.terms(u) {
                    lhs.add_scaled(&md.action.at(*a, *x).kron(&h.mult().apply_flat_right(bb, *k)), &(s * t));
                }
                let aa = alpha.column(*a);
                let hm = md.coaction.apply(md.action.at(*b, u));
                for (yl, w) in hm.iter() {
                    let (y, l) = (yl / n, yl % n);
                    for (z, q) in h.mult().apply_flat_left(l, aa).iter() {
                        rhs.push(y * n + z, &(s * w) * q);
                    }
                }
            }
            (lhs.finish(), rhs.finish())
        },
    ));
    r
}

/// H_{α,β}: regular action and ρ(h) = h₂ ⊗ β(h₃)S⁻¹α(h₁).
pub fn canonical_yd(h: &HopfAlgebra, g: &GPair) -> Result<YdModule, YdError> {
    let n = h.dim();
    let f = h.field();
    let sinv = h.antipode_inv()?;
    let sa = sinv.compose(g.alpha().matrix());
    let beta = g.beta().matrix();
    let coaction = Tensor1to2::from_fn(f, n, n, n, |i| {
        let mut acc = Accumulator::new(f, n * n);
        for (a, b, c, s) in h.comult3(i) {
            let tail = h.mul(beta.column(c), sa.column(a));
            for (z, q) in tail.iter() {
                acc.push(b * n + z, &s * q);
            }
        }
        acc.finish()
    });
    YdModule::new(h, g.clone(), h.mult().clone(), coaction)
}

/// The one-dimensional module k: ε-action, coaction 1 ↦ 1⊗1, label (id,id).
pub fn trivial_yd(h: &HopfAlgebra) -> YdModule {
    let f = h.field();
    let n = h.dim();
    let action = Tensor2to1::from_fn(f, n, 1, 1, |i, _| Vector::from_dense(f, vec![h.eps_basis(i)]));
    let coaction = Tensor1to2::from_fn(f, 1, 1, n, |_| h.unit().clone());
    YdModule { label: g_unit(h), action, coaction }
}

/// M⊗N with h·(m⊗n) = h₂·m ⊗ h₁·n and coaction m₀⊗n₀ ⊗ δ(m₁)δαδ⁻¹(n₁),
/// labeled (α,β)*(γ,δ).
pub fn tensor_yd(h: &HopfAlgebra, mm: &YdModule, nn: &YdModule) -> Result<YdModule, YdError> {
    same_algebra(h, &[mm, nn])?;
    let n = h.dim();
    let f = h.field();
    let (dm, dn) = (mm.dim(), nn.dim());
    let d = nn.label.beta();
    let a = mm.label.alpha();
    let dad = d.compose(a)?.compose(&d.inverse())?;
    let action = Tensor2to1::from_fn(f, n, dm * dn, dm * dn, |i, w| {
        let (u, v) = (w / dn, w % dn);
        let mut acc = Accumulator::new(f, dm * dn);
        for (x, y, s) in h.comult().terms(i) {
            acc.add_scaled(&mm.action.at(*y, u).kron(nn.action.at(*x, v)), s);
        }
        acc.finish()
    });
    let twisted: Vec<Vector> = (0..n * n)
        .map(|kl| h.mul(d.matrix().column(kl / n), dad.matrix().column(kl % n)))
        .collect();
    let coaction = Tensor1to2::from_fn(f, dm * dn, dm * dn, n, |w| {
        let (u, v) = (w / dn, w % dn);
        let mut acc = Accumulator::new(f, dm * dn * n);
        for (x, k, s) in mm.coaction.terms(u) {
            for (y, l, t) in nn.coaction.terms(v) {
                let st = s * t;
                for (z, q) in twisted[k * n + l].iter() {
                    acc.push((x * dn + y) * n + z, &st * q);
                }
            }
        }
        acc.finish()
    });
    Ok(YdModule { label: g_mul(&mm.label, &nn.label)?, action, coaction })
}

/// ^{(α,β)}N with h⇀n = α⁻¹β(h)·n and coaction n₀ ⊗ β⁻¹δαδ⁻¹(n₁),
/// labeled g*(γ,δ)*g⁻¹.
pub fn conjugate_yd(h: &HopfAlgebra, g: &GPair, nn: &YdModule) -> Result<YdModule, YdError> {
    same_algebra(h, &[nn])?;
    if g.algebra() != h.fingerprint() {
        return Err(HopfError::ForeignAlgebra.into());
    }
    let n = h.dim();
    let f = h.field();
    let dn = nn.dim();
    let (a, b) = (g.alpha(), g.beta());
    let d = nn.label.beta();
    let aib = a.inverse().compose(b)?;
    let coef = b.inverse().compose(d)?.compose(a)?.compose(&d.inverse())?;
    let action = Tensor2to1::from_fn(f, n, dn, dn, |i, v| {
        let mut acc = Accumulator::new(f, dn);
        for (p, s) in aib.matrix().column(i).iter() {
            acc.add_scaled(nn.action.at(p, v), s);
        }
        acc.finish()
    });
    let coaction = Tensor1to2::from_fn(f, dn, dn, n, |v| {
        let mut acc = Accumulator::new(f, dn * n);
        for (y, k, s) in nn.coaction.terms(v) {
            for (z, q) in coef.matrix().column(*k).iter() {
                acc.push(y * n + z, s * q);
            }
        }
        acc.finish()
    });
    let label = g_mul(&g_mul(g, &nn.label)?, &g_inv(g))?;
    Ok(YdModule { label, action, coaction })
}

/// c_{M,N}(m⊗n) = α⁻¹(m₁)·n ⊗ m₀, a map M⊗N → ^M N ⊗ M.
pub fn braiding(h: &HopfAlgebra, mm: &YdModule, nn: &YdModule) -> Result<LinMap, YdError> {
    same_algebra(h, &[mm, nn])?;
    let f = h.field();
    let (dm, dn) = (mm.dim(), nn.dim());
    let ainv = mm.label.alpha().inverse_matrix();
    Ok(LinMap::from_fn(f, dm * dn, dn * dm, |w| {
        let (u, v) = (w / dn, w % dn);
        let mut acc = Accumulator::new(f, dn * dm);
        for (x, k, s) in mm.coaction.terms(u) {
            let hn = nn_action_by(nn, ainv.column(*k), v);
            for (y, q) in hn.iter() {
                acc.push(y * dm + x, s * q);
            }
        }
        acc.finish()
    }))
}

fn nn_action_by(nn: &YdModule, x: &Vector, v: usize) -> Vector {
    let mut acc = Accumulator::new(nn.action.field(), nn.dim());
    for (i, s) in x.iter() {
        acc.add_scaled(nn.action.at(i, v), s);
    }
    acc.finish()
}

/// c⁻¹_{M,N}(n⊗m) = m₀ ⊗ α⁻¹S(m₁)·n, a map ^M N ⊗ M → M⊗N.
pub fn braiding_inverse(h: &HopfAlgebra, mm: &YdModule, nn: &YdModule) -> Result<LinMap, YdError> {
    same_algebra(h, &[mm, nn])?;
    let f = h.field();
    let (dm, dn) = (mm.dim(), nn.dim());
    let x_map = mm.label.alpha().inverse_matrix().compose(h.antipode());
    Ok(LinMap::from_fn(f, dn * dm, dm * dn, |w| {
        let (v, u) = (w / dm, w % dm);
        let mut acc = Accumulator::new(f, dm * dn);
        for (x, k, s) in mm.coaction.terms(u) {
            let hn = nn_action_by(nn, x_map.column(*k), v);
            for (y, q) in hn.iter() {
                acc.push(x * dn + y, s * q);
            }
        }
        acc.finish()
    }))
}

/// Invertibility, H-linearity and H-colinearity of c_{M,N}.
pub fn verify_braiding(h: &HopfAlgebra, mm: &YdModule, nn: &YdModule) -> Result<Report, YdError> {
    let n = h.dim();
    let f = h.field();
    let loc = "braiding";
    let c = braiding(h, mm, nn)?;
    let ci = braiding_inverse(h, mm, nn)?;
    let src = tensor_yd(h, mm, nn)?;
    let tgt = tensor_yd(h, &conjugate_yd(h, &mm.label, nn)?, mm)?;
    let mut r = Report::new();
    let dim = c.src_dim();
    r.push(sweep("braiding-inverse", loc, 0..dim, |&w| format!("source basis {w}"), |&w| {
        (ci.apply(c.column(w)), Vector::basis(f, dim, w))
    }));
    r.push(sweep("braiding-inverse-other-side", loc, 0..dim, |&w| format!("target basis {w}"), |&w| {
        (c.apply(ci.column(w)), Vector::basis(f, dim, w))
    }));
    r.push(sweep("braiding-linear", loc, 0..n, |&i| format!("basis '{}'", h.name(i)), |&i| {
        (c.compose(&src.action_map(i)), tgt.action_map(i).compose(&c))
    }));
    let c_id = c.kron(&LinMap::identity(f, n));
    r.push(compare(
        "braiding-colinear",
        loc,
        "coaction matrices",
        &c_id.compose(&src.coaction_map()),
        &tgt.coaction_map().compose(&c),
    ));
    Ok(r)
}

/// Both hexagon identities for (U, V, W):
/// c_{U⊗V,W} = (c_{U,^V W} ⊗ id_V)(id_U ⊗ c_{V,W}) and
/// c_{U,V⊗W} = (id_{^U V} ⊗ c_{U,W})(c_{U,V} ⊗ id_W).
pub fn verify_hexagons(h: &HopfAlgebra, u: &YdModule, v: &YdModule, w: &YdModule) -> Result<Report, YdError> {
    let f = h.field();
    let id = |m: &YdModule| LinMap::identity(f, m.dim());
    let loc = "hexagons";
    let mut r = Report::new();
    let uv = tensor_yd(h, u, v)?;
    let lhs1 = braiding(h, &uv, w)?;
    let vw_conj = conjugate_yd(h, &v.label, w)?;
    let rhs1 = braiding(h, u, &vw_conj)?.kron(&id(v)).compose(&id(u).kron(&braiding(h, v, w)?));
    r.push(compare("hexagon-1", loc, "c_{U⊗V,W} matrix", &lhs1, &rhs1));
    let vw = tensor_yd(h, v, w)?;
    let lhs2 = braiding(h, u, &vw)?;
    let uv_conj = conjugate_yd(h, &u.label, v)?;
    let rhs2 = id(&uv_conj).kron(&braiding(h, u, w)?).compose(&braiding(h, u, v)?.kron(&id(w)));
    r.push(compare("hexagon-2", loc, "c_{U,V⊗W} matrix", &lhs2, &rhs2));
    Ok(r)
}

/// c_{^P M, ^P N} = c_{M,N}.
pub fn verify_conjugation_invariance(h: &HopfAlgebra, p: &GPair, mm: &YdModule, nn: &YdModule) -> Result<Check, YdError> {
    let pm = conjugate_yd(h, p, mm)?;
    let pn = conjugate_yd(h, p, nn)?;
    Ok(compare("braiding-conjugation-invariant", "braiding", "braiding matrices", &braiding(h, &pm, &pn)?, &braiding(h, mm, nn)?))
}

fn dual_module(h: &HopfAlgebra, mm: &YdModule, right: bool) -> Result<YdModule, YdError> {
    let n = h.dim();
    let f = h.field();
    let m = mm.dim();
    let s = h.antipode();
    let sinv = h.antipode_inv()?;
    // Action through S⁻¹ (left dual) or S (right dual); coaction twisted by
    // β⁻¹α⁻¹S (left dual) or β⁻¹α⁻¹S⁻¹ (right dual).
    let (act_by, co_by) = if right { (s, sinv) } else { (sinv, s) };
    let (a, b) = (mm.label.alpha(), mm.label.beta());
    let twist = b.inverse_matrix().compose(a.inverse_matrix()).compose(co_by);
    // (e_i·f^u)(m_v) = f^u(X(e_i)·m_v)
    let action = Tensor2to1::from_fn(f, n, m, m, |i, u| {
        let mut terms = Vec::new();
        for v in 0..m {
            let img = nn_action_by(mm, act_by.column(i), v);
            let c = img.get(u);
            if !c.is_zero() {
                terms.push((v, c));
            }
        }
        Vector::from_terms(f, m, terms)
    });
    // ρ(f^u) = Σ_v f^v ⊗ Σ_{(u,k,c) in ρ(m_v)} c·twist(e_k)
    let mut co: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); m];
    for v in 0..m {
        for (x, k, c) in mm.coaction.terms(v) {
            for (z, q) in twist.column(*k).iter() {
                co[*x].push((v * n + z, c * q));
            }
        }
    }
    let coaction = Tensor1to2::from_fn(f, m, m, n, |u| Vector::from_terms(f, m * n, co[u].clone()));
    Ok(YdModule { label: g_inv(&mm.label), action, coaction })
}

/// M* with (h·f)(m) = f(S⁻¹(h)·m) and f₀(m)f₁ = f(m₀)β⁻¹α⁻¹S(m₁).
pub fn left_dual(h: &HopfAlgebra, mm: &YdModule) -> Result<YdModule, YdError> {
    same_algebra(h, &[mm])?;
    dual_module(h, mm, false)
}

/// *M with S and S⁻¹ exchanged relative to the left dual.
pub fn right_dual(h: &HopfAlgebra, mm: &YdModule) -> Result<YdModule, YdError> {
    same_algebra(h, &[mm])?;
    dual_module(h, mm, true)
}

/// Coevaluation b: k → M⊗M* and evaluation d: M*⊗M → k as matrices.
/// The same matrices serve the right dual with factors exchanged.
pub fn rigidity_maps(h: &HopfAlgebra, mm: &YdModule) -> (LinMap, LinMap) {
    let f = h.field();
    let m = mm.dim();
    let diag = Vector::from_terms(f, m * m, (0..m).map(|i| (i * m + i, f.one())));
    let b = LinMap::from_fn(f, 1, m * m, |_| diag.clone());
    let d = LinMap::from_fn(f, m * m, 1, |w| {
        if w / m == w % m {
            Vector::basis(f, 1, 0)
        } else {
            Vector::zero(f, 1)
        }
    });
    (b, d)
}

/// Linearity, colinearity and zigzag identities for a left dual candidate M*
/// (b: k → M⊗M*, d: M*⊗M → k).
pub fn verify_left_rigidity(h: &HopfAlgebra, mm: &YdModule, dual: &YdModule) -> Result<Report, YdError> {
    rigidity_report(h, mm, dual, false)
}

/// Same for a right dual candidate *M (b': k → *M⊗M, d': M⊗*M → k).
pub fn verify_right_rigidity(h: &HopfAlgebra, mm: &YdModule, dual: &YdModule) -> Result<Report, YdError> {
    rigidity_report(h, mm, dual, true)
}

fn rigidity_report(h: &HopfAlgebra, mm: &YdModule, dual: &YdModule, right: bool) -> Result<Report, YdError> {
    let f = h.field();
    let n = h.dim();
    let m = mm.dim();
    if dual.dim() != m {
        return Err(YdError::Shape("dual dimension differs".into()));
    }
    let side = if right { "right dual" } else { "left dual" };
    let mut r = Report::new();
    for mut c in verify_yd(h, dual).checks {
        c.axiom = format!("dual-{}", c.axiom);
        c.location = side.to_string();
        r.push(c);
    }
    let (b, d) = rigidity_maps(h, mm);
    let (bx, dx) = if right { (tensor_yd(h, dual, mm)?, tensor_yd(h, mm, dual)?) } else { (tensor_yd(h, mm, dual)?, tensor_yd(h, dual, mm)?) };
    let bv = b.column(0).clone();
    r.push(sweep("coevaluation-linear", side, 0..n, |&i| format!("basis '{}'", h.name(i)), |&i| {
        (bx.action_map(i).apply(&bv), bv.scale(&h.eps_basis(i)))
    }));
    r.push(sweep("coevaluation-colinear", side, std::iter::once(()), |_| "coevaluation".into(), |_| {
        (bx.coaction_map().apply(&bv), bv.kron(h.unit()))
    }));
    r.push(sweep("evaluation-linear", side, 0..n, |&i| format!("basis '{}'", h.name(i)), |&i| {
        (d.compose(&dx.action_map(i)), d.scale(&h.eps_basis(i)))
    }));
    let unit_map = LinMap::from_fn(f, 1, n, |_| h.unit().clone());
    r.push(sweep("evaluation-colinear", side, 0..m * m, |&w| format!("tensor basis {w}"), |&w| {
        (d.kron(&LinMap::identity(f, n)).apply(&dx.coaction_map().column(w).clone()), unit_map.apply(d.column(w)))
    }));
    let idm = LinMap::identity(f, m);
    // Scalars k⊗V and V⊗k are identified with V by index, so the Kronecker
    // products below already have the right shapes.
    let (z1, z2) = if right {
        ((d.kron(&idm)).compose(&idm.kron(&b)), (idm.kron(&d)).compose(&b.kron(&idm)))
    } else {
        ((idm.kron(&d)).compose(&b.kron(&idm)), (d.kron(&idm)).compose(&idm.kron(&b)))
    };
    r.push(compare("zigzag-module", side, "zigzag on M", &z1, &idm));
    r.push(compare("zigzag-dual", side, "zigzag on dual", &z2, &idm));
    Ok(r)
}

/// Builds both duals and checks them.
pub fn verify_rigidity(h: &HopfAlgebra, mm: &YdModule) -> Result<Report, YdError> {
    let mut r = verify_left_rigidity(h, mm, &left_dual(h, mm)?)?;
    r.extend(verify_right_rigidity(h, mm, &right_dual(h, mm)?)?);
    Ok(r)
}

/// Right comodule over the crossed coproduct of the component labeled `label`;
/// the coaction lands in M ⊗ (H* ⊗ H) with H* index major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comodule {
    label: GPair,
    coaction: Tensor1to2,
}

impl Comodule {
    pub fn new(h: &HopfAlgebra, label: GPair, coaction: Tensor1to2) -> Result<Self, YdError> {
        let n = h.dim();
        if label.algebra() != h.fingerprint() {
            return Err(YdError::LabelMismatch("label belongs to another algebra".into()));
        }
        if coaction.right_dim() != n * n || coaction.left_dim() != coaction.src_dim() {
            return Err(YdError::LabelMismatch(format!(
                "coaction lands in a {}-dimensional coalgebra, component has dimension {}",
                coaction.right_dim(),
                n * n
            )));
        }
        Ok(Comodule { label, coaction })
    }

    pub fn label(&self) -> &GPair {
        &self.label
    }

    pub fn coaction(&self) -> &Tensor1to2 {
        &self.coaction
    }

    pub fn dim(&self) -> usize {
        self.coaction.src_dim()
    }
}

/// m_[0] ⊗ m_[1] = Σ_i h_i·m₀ ⊗ h^i ⋈ m₁.
pub fn to_comodule(h: &HopfAlgebra, mm: &YdModule) -> Result<Comodule, YdError> {
    same_algebra(h, &[mm])?;
    let n = h.dim();
    let f = h.field();
    let m = mm.dim();
    let coaction = Tensor1to2::from_fn(f, m, m, n * n, |u| {
        let mut acc = Accumulator::new(f, m * n * n);
        for (x, k, s) in mm.coaction.terms(u) {
            for i in 0..n {
                for (y, q) in mm.action.at(i, *x).iter() {
                    acc.push(y * n * n + i * n + k, s * q);
                }
            }
        }
        acc.finish()
    });
    Ok(Comodule { label: mm.label.clone(), coaction })
}

/// Inverse correspondence: h·m = Σ m_[0] p(h) ε(c) and m₀⊗m₁ = Σ m_[0] ⊗ p(1) c,
/// where m_[1] = Σ p ⋈ c.
pub fn from_comodule(h: &HopfAlgebra, x: &Comodule) -> Result<YdModule, YdError> {
    let n = h.dim();
    let f = h.field();
    if x.label.algebra() != h.fingerprint() {
        return Err(YdError::LabelMismatch("comodule belongs to another algebra".into()));
    }
    if x.coaction.right_dim() != n * n {
        return Err(YdError::LabelMismatch("coaction target is not H*⊗H".into()));
    }
    let m = x.dim();
    let mut act: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); n * m];
    let mut co: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); m];
    for u in 0..m {
        for (y, pc, s) in x.coaction.terms(u) {
            let (p, c) = (pc / n, pc % n);
            // p^p(e_i) = δ_{p,i}
            let e = h.eps_basis(c);
            if !e.is_zero() {
                act[p * m + u].push((*y, s * &e));
            }
            let one_p = h.unit().get(p);
            if !one_p.is_zero() {
                co[u].push((y * n + c, s * &one_p));
            }
        }
    }
    let action = Tensor2to1::from_fn(f, n, m, m, |i, u| Vector::from_terms(f, m, act[i * m + u].clone()));
    let coaction = Tensor1to2::from_fn(f, m, m, n, |u| Vector::from_terms(f, m * n, co[u].clone()));
    YdModule::new(h, x.label.clone(), action, coaction)
}

/// Comodule axioms of X over a coalgebra D.
pub fn verify_comodule(x: &Comodule, d: &Coalgebra) -> Result<Report, YdError> {
    if d.dim() != x.coaction.right_dim() {
        return Err(YdError::LabelMismatch("coalgebra dimension differs from coaction target".into()));
    }
    let mut r = Report::new();
    for c in comodule_checks("comodule", "coaction", &x.coaction, d.comult(), d.counit()) {
        r.push(c);
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{builtin_group, group_algebra, group_pairs};

    #[test]
    fn trivial_module_passes() {
        let h = group_algebra(&builtin_group("Z3").unwrap());
        assert!(verify_yd(&h, &trivial_yd(&h)).passed());
    }

    #[test]
    fn canonical_modules_pass_and_mislabels_fail_on_z3() {
        let pi = builtin_group("Z3").unwrap();
        let h = group_algebra(&pi);
        let pairs = group_pairs(&h, &pi).unwrap();
        let mut failures = 0;
        for g in &pairs {
            let m = canonical_yd(&h, g).unwrap();
            assert!(verify_yd(&h, &m).passed(), "{g}");
            let swapped = GPair::new(g.beta().clone(), g.alpha().clone()).unwrap();
            if swapped != *g && !verify_yd(&h, &m.relabel(swapped)).passed() {
                failures += 1;
            }
        }
        assert!(failures > 0);
    }
}
