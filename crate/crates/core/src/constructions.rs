//! Constructions producing new algebras from representations, actions and
//! operators.
//!
//! Constructions whose input must satisfy a hypothesis (a Rota-Baxter or
//! averaging operator, a differential) check it first and fail with
//! [`Error::Precondition`] carrying the violations. Outputs are not
//! re-verified here; callers run the identity engine on them.

use crate::algebra::{ActionSpec, AlgebraSpec, BilinearOp, LinearMapSpec, RepresentationSpec, Signature};
use crate::error::{Error, Result};
use crate::identity::{Violation, ViolationReport, DEFAULT_CAP};
use crate::linalg::{Matrix, Vector};
use crate::operators::{
    check_assoc_averaging, check_dend_averaging, check_homomorphic_relative, check_relative_averaging,
    check_rota_baxter, OperatorVerdict,
};

/// Builds an operation on `D ⊕ V` (dims `n + m`) from its blocks:
/// `(x,u)∘(y,v) = (x∘y, x∘_l v + u∘_r y + u∘_V v)`. Missing blocks are zero.
fn block_op(
    n: usize,
    m: usize,
    dd: Option<&BilinearOp>,
    dv: Option<&BilinearOp>,
    vd: Option<&BilinearOp>,
    vv: Option<&BilinearOp>,
) -> BilinearOp {
    let zero_d = Vector::zeros(n);
    let zero_v = Vector::zeros(m);
    BilinearOp::from_fn(n + m, n + m, n + m, |i, j| match (i < n, j < n) {
        (true, true) => dd.map_or_else(|| zero_d.clone(), |op| op.product(i, j).clone()).concat(&zero_v),
        (true, false) => zero_d.concat(&dv.map_or_else(|| zero_v.clone(), |op| op.product(i, j - n).clone())),
        (false, true) => zero_d.concat(&vd.map_or_else(|| zero_v.clone(), |op| op.product(i - n, j).clone())),
        (false, false) => zero_d.concat(&vv.map_or_else(|| zero_v.clone(), |op| op.product(i - n, j - n).clone())),
    })
}

fn ensure(verdict: OperatorVerdict, what: &str) -> Result<()> {
    if verdict.passed() {
        Ok(())
    } else {
        Err(Error::Precondition {
            what: what.to_string(),
            report: verdict.report,
        })
    }
}

/// Semidirect product `D ⋉ V`:
/// `(x,u)≺(y,v) = (x≺y, x≺_l v + u≺_r y)`, `(x,u)≻(y,v) = (x≻y, x≻_l v + u≻_r y)`.
pub fn semidirect(rep: &RepresentationSpec) -> Result<AlgebraSpec> {
    let base = rep.base();
    let (n, m) = (base.dimension(), rep.module_dim());
    AlgebraSpec::from_ops(
        n + m,
        Signature::Dendriform,
        [
            ("prec", block_op(n, m, Some(base.op("prec")?), Some(rep.prec_l()), Some(rep.prec_r()), None)),
            ("succ", block_op(n, m, Some(base.op("succ")?), Some(rep.succ_l()), Some(rep.succ_r()), None)),
        ],
    )
}

/// Hemisemidirect product: each split operation keeps only one action,
/// `(x,u)≺⊢(y,v) = (x≺y, x≺_l v)`, `(x,u)≺⊣(y,v) = (x≺y, u≺_r y)`, and
/// likewise for `≻`.
pub fn hemisemidirect(rep: &RepresentationSpec) -> Result<AlgebraSpec> {
    let base = rep.base();
    let (n, m) = (base.dimension(), rep.module_dim());
    let prec = base.op("prec")?;
    let succ = base.op("succ")?;
    AlgebraSpec::from_ops(
        n + m,
        Signature::Quadri,
        [
            ("prec_vdash", block_op(n, m, Some(prec), Some(rep.prec_l()), None, None)),
            ("prec_dashv", block_op(n, m, Some(prec), None, Some(rep.prec_r()), None)),
            ("succ_vdash", block_op(n, m, Some(succ), Some(rep.succ_l()), None, None)),
            ("succ_dashv", block_op(n, m, Some(succ), None, Some(rep.succ_r()), None)),
        ],
    )
}

/// Semidirect product for an action, adding the target's own products on
/// the `D' × D'` block.
pub fn action_semidirect(act: &ActionSpec) -> Result<AlgebraSpec> {
    let rep = act.representation();
    let base = act.base();
    let target = act.target();
    let (n, m) = (base.dimension(), target.dimension());
    AlgebraSpec::from_ops(
        n + m,
        Signature::Dendriform,
        [
            (
                "prec",
                block_op(n, m, Some(base.op("prec")?), Some(rep.prec_l()), Some(rep.prec_r()), Some(target.op("prec")?)),
            ),
            (
                "succ",
                block_op(n, m, Some(base.op("succ")?), Some(rep.succ_l()), Some(rep.succ_r()), Some(target.op("succ")?)),
            ),
        ],
    )
}

/// `⊢ = ≺⊢ + ≻⊢`, `⊣ = ≺⊣ + ≻⊣`.
pub fn sum_collapse_quadri(q: &AlgebraSpec) -> Result<AlgebraSpec> {
    AlgebraSpec::from_ops(
        q.dimension(),
        Signature::Diassociative,
        [
            ("dashv", q.op("prec_dashv")?.sum(q.op("succ_dashv")?)?),
            ("vdash", q.op("prec_vdash")?.sum(q.op("succ_vdash")?)?),
        ],
    )
}

/// Adds `⊥ = ≺⊥ + ≻⊥` to the quadri collapse.
pub fn sum_collapse_six(s: &AlgebraSpec) -> Result<AlgebraSpec> {
    AlgebraSpec::from_ops(
        s.dimension(),
        Signature::Triassociative,
        [
            ("dashv", s.op("prec_dashv")?.sum(s.op("succ_dashv")?)?),
            ("perp", s.op("prec_perp")?.sum(s.op("succ_perp")?)?),
            ("vdash", s.op("prec_vdash")?.sum(s.op("succ_vdash")?)?),
        ],
    )
}

/// Dendriform structure from a Rota-Baxter operator:
/// `a≺b = μ(a, Rb)`, `a≻b = μ(Ra, b)`.
pub fn aguiar_dendriform(assoc: &AlgebraSpec, r: &LinearMapSpec) -> Result<AlgebraSpec> {
    ensure(check_rota_baxter(assoc, r)?, "map is not a Rota-Baxter operator")?;
    let n = assoc.dimension();
    let mul = assoc.op("mul")?;
    let images = r.basis_images();
    AlgebraSpec::from_ops(
        n,
        Signature::Dendriform,
        [
            ("prec", BilinearOp::from_fn(n, n, n, |i, j| mul.eval(&Vector::basis(n, i), &images[j]))),
            ("succ", BilinearOp::from_fn(n, n, n, |i, j| mul.eval(&images[i], &Vector::basis(n, j)))),
        ],
    )
}

/// Di-associative structure from an averaging operator:
/// `a⊣b = μ(a, Hb)`, `a⊢b = μ(Ha, b)`.
pub fn aguiar_diassociative(assoc: &AlgebraSpec, h: &LinearMapSpec) -> Result<AlgebraSpec> {
    ensure(check_assoc_averaging(assoc, h)?, "map is not an averaging operator")?;
    let n = assoc.dimension();
    let mul = assoc.op("mul")?;
    let images = h.basis_images();
    AlgebraSpec::from_ops(
        n,
        Signature::Diassociative,
        [
            ("dashv", BilinearOp::from_fn(n, n, n, |i, j| mul.eval(&Vector::basis(n, i), &images[j]))),
            ("vdash", BilinearOp::from_fn(n, n, n, |i, j| mul.eval(&images[i], &Vector::basis(n, j)))),
        ],
    )
}

/// The four `T`-twisted operations on the module space.
fn twisted_ops(rep: &RepresentationSpec, t: &LinearMapSpec) -> [(&'static str, BilinearOp); 4] {
    let m = rep.module_dim();
    let images = t.basis_images();
    let e = |k: usize| Vector::basis(m, k);
    [
        ("prec_vdash", BilinearOp::from_fn(m, m, m, |u, v| rep.prec_l().eval(&images[u], &e(v)))),
        ("prec_dashv", BilinearOp::from_fn(m, m, m, |u, v| rep.prec_r().eval(&e(u), &images[v]))),
        ("succ_vdash", BilinearOp::from_fn(m, m, m, |u, v| rep.succ_l().eval(&images[u], &e(v)))),
        ("succ_dashv", BilinearOp::from_fn(m, m, m, |u, v| rep.succ_r().eval(&e(u), &images[v]))),
    ]
}

/// Quadri-dendriform structure on `V` induced by a relative averaging
/// operator: `u≺⊢v = Tu≺_l v`, `u≺⊣v = u≺_r Tv`, `u≻⊢v = Tu≻_l v`,
/// `u≻⊣v = u≻_r Tv`.
pub fn induced_quadri(rep: &RepresentationSpec, t: &LinearMapSpec) -> Result<AlgebraSpec> {
    ensure(check_relative_averaging(rep, t)?, "map is not a relative averaging operator")?;
    AlgebraSpec::from_ops(rep.module_dim(), Signature::Quadri, twisted_ops(rep, t))
}

/// Quadri-dendriform structure on `D` from an averaging operator on `D`
/// itself: `x≺⊢y = Tx≺y`, `x≺⊣y = x≺Ty`, and likewise for `≻`.
pub fn averaging_quadri(d: &AlgebraSpec, t: &LinearMapSpec) -> Result<AlgebraSpec> {
    ensure(check_dend_averaging(d, t)?, "map is not an averaging operator")?;
    let rep = RepresentationSpec::adjoint(d)?;
    AlgebraSpec::from_ops(d.dimension(), Signature::Quadri, twisted_ops(&rep, t))
}

/// Six-dendriform structure on the target of an action, induced by a
/// homomorphic relative averaging operator: `≺⊥`, `≻⊥` are the target's
/// products and the other four are as in [`induced_quadri`].
pub fn induced_six(act: &ActionSpec, t: &LinearMapSpec) -> Result<AlgebraSpec> {
    ensure(
        check_homomorphic_relative(act, t)?,
        "map is not a homomorphic relative averaging operator",
    )?;
    let mut ops: Vec<(&str, BilinearOp)> = twisted_ops(act.representation(), t).into();
    ops.push(("prec_perp", act.target().op("prec")?.clone()));
    ops.push(("succ_perp", act.target().op("succ")?.clone()));
    AlgebraSpec::from_ops(act.target().dimension(), Signature::Six, ops)
}

/// A dendriform algebra with a square-zero derivation `d` of both products.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferentialDendriformSpec {
    base: AlgebraSpec,
    d: LinearMapSpec,
}

impl DifferentialDendriformSpec {
    /// Checks `d² = 0` (tag `d^2`, witness `[i]`) and the Leibniz rule for
    /// `≺` and `≻` (tags `leibniz:prec`, `leibniz:succ`, witness `[i, j]`).
    pub fn audit(base: &AlgebraSpec, d: &LinearMapSpec) -> Result<ViolationReport> {
        let n = base.dimension();
        d.expect_shape(n, n, "differential")?;
        let images = d.basis_images();
        let apply = |v: &Vector| d.apply(v).expect("square map");
        let mut report = ViolationReport::default();
        let square: Vec<Violation> = (0..n)
            .filter_map(|i| {
                let r = apply(&images[i]);
                (!r.is_zero()).then(|| Violation {
                    id: "d^2".into(),
                    witness: vec![i],
                    residual: r,
                })
            })
            .collect();
        report.record("d^2", n, square, DEFAULT_CAP);
        for name in ["prec", "succ"] {
            let op = base.op(name)?;
            let id = format!("leibniz:{name}");
            let mut failures = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    let lhs = apply(op.product(i, j));
                    let rhs = &op.eval(&images[i], &Vector::basis(n, j)) + &op.eval(&Vector::basis(n, i), &images[j]);
                    let r = &lhs - &rhs;
                    if !r.is_zero() {
                        failures.push(Violation {
                            id: id.clone(),
                            witness: vec![i, j],
                            residual: r,
                        });
                    }
                }
            }
            report.record(&id, n * n, failures, DEFAULT_CAP);
        }
        Ok(report)
    }

    pub fn new(base: AlgebraSpec, d: LinearMapSpec) -> Result<Self> {
        let report = Self::audit(&base, &d)?;
        if !report.passed() {
            return Err(Error::Precondition {
                what: "map is not a differential".into(),
                report,
            });
        }
        Ok(DifferentialDendriformSpec { base, d })
    }

    pub fn base(&self) -> &AlgebraSpec {
        &self.base
    }

    pub fn d(&self) -> &LinearMapSpec {
        &self.d
    }
}

/// `x≺⊢y = d(x)≺y`, `x≺⊣y = x≺d(y)`, `x≻⊢y = d(x)≻y`, `x≻⊣y = x≻d(y)`.
pub fn differential_quadri(dd: &DifferentialDendriformSpec) -> Result<AlgebraSpec> {
    let rep = RepresentationSpec::adjoint(dd.base())?;
    AlgebraSpec::from_ops(dd.base().dimension(), Signature::Quadri, twisted_ops(&rep, dd.d()))
}

/// Dual numbers `F = D[t]/(t²)` with basis `e_0..e_{n-1}, t e_0..t e_{n-1}`,
/// acted on by `D` through `x≺_l(a+tb) = x≺a + t(x≺b)` and
/// `(a+tb)≺_r x = a≺x + t(b≺x)` (same for `≻`). Returns the action and the
/// projection `T(a+tb) = a`.
pub fn dual_extension(d: &AlgebraSpec) -> Result<(ActionSpec, LinearMapSpec)> {
    let n = d.dimension();
    let prec = d.op("prec")?;
    let succ = d.op("succ")?;
    let f = AlgebraSpec::from_ops(
        2 * n,
        Signature::Dendriform,
        [
            ("prec", block_op(n, n, Some(prec), Some(prec), Some(prec), None)),
            ("succ", block_op(n, n, Some(succ), Some(succ), Some(succ), None)),
        ],
    )?;
    // Left action: D × F → F, keeping the degree of the F factor.
    let left = |op: &BilinearOp| {
        BilinearOp::from_fn(n, 2 * n, 2 * n, |i, q| {
            if q < n {
                op.product(i, q).concat(&Vector::zeros(n))
            } else {
                Vector::zeros(n).concat(op.product(i, q - n))
            }
        })
    };
    let right = |op: &BilinearOp| {
        BilinearOp::from_fn(2 * n, n, 2 * n, |p, j| {
            if p < n {
                op.product(p, j).concat(&Vector::zeros(n))
            } else {
                Vector::zeros(n).concat(op.product(p - n, j))
            }
        })
    };
    let rep = RepresentationSpec::new(d.clone(), 2 * n, left(prec), left(succ), right(prec), right(succ))?;
    let action = ActionSpec::new(rep, f)?;
    let mut proj = Matrix::zeros(n, 2 * n);
    for i in 0..n {
        proj.set(i, i, crate::linalg::int(1));
    }
    Ok((action, LinearMapSpec::new(proj)))
}

/// The degenerate quadri structure with `≺⊢ = ≺⊣ = ≺` and `≻⊢ = ≻⊣ = ≻`.
pub fn promote_to_quadri(d: &AlgebraSpec) -> Result<AlgebraSpec> {
    d.relabel(&[
        ("prec", "prec_vdash"),
        ("prec", "prec_dashv"),
        ("succ", "succ_vdash"),
        ("succ", "succ_dashv"),
    ])
}

/// The degenerate six structure with all three splittings equal.
pub fn promote_to_six(d: &AlgebraSpec) -> Result<AlgebraSpec> {
    d.relabel(&[
        ("prec", "prec_vdash"),
        ("prec", "prec_dashv"),
        ("prec", "prec_perp"),
        ("succ", "succ_vdash"),
        ("succ", "succ_dashv"),
        ("succ", "succ_perp"),
    ])
}
