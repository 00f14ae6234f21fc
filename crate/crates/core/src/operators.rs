//! Operator checks: Rota-Baxter, averaging (associative, dendriform,
//! relative, homomorphic relative), the graph-subalgebra test and
//! exhaustive operator search over finite grids.
//!
//! Every check evaluates its defining equations on all basis pairs and
//! records each failing pair with its residual `lhs - rhs`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{ActionSpec, AlgebraSpec, BilinearOp, LinearMapSpec, RepresentationSpec};
use crate::constructions::hemisemidirect;
use crate::error::{Error, Result};
use crate::identity::{Violation, ViolationReport, DEFAULT_CAP};
use crate::linalg::{span, Matrix, Rational, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OperatorKind {
    RotaBaxter,
    AssocAveraging,
    DendAveraging,
    RelativeAveraging,
    HomomorphicRelative,
    GraphSubalgebra,
}

impl OperatorKind {
    pub const ALL: [OperatorKind; 6] = [
        OperatorKind::RotaBaxter,
        OperatorKind::AssocAveraging,
        OperatorKind::DendAveraging,
        OperatorKind::RelativeAveraging,
        OperatorKind::HomomorphicRelative,
        OperatorKind::GraphSubalgebra,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OperatorKind::RotaBaxter => "rota_baxter",
            OperatorKind::AssocAveraging => "assoc_averaging",
            OperatorKind::DendAveraging => "dend_averaging",
            OperatorKind::RelativeAveraging => "relative_averaging",
            OperatorKind::HomomorphicRelative => "homomorphic_relative",
            OperatorKind::GraphSubalgebra => "graph_subalgebra",
        }
    }
}

impl fmt::Display for OperatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OperatorKind {
    type Err = Error;

    /// Accepts both `rota_baxter` and `rota-baxter` spellings.
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.replace('-', "_");
        OperatorKind::ALL
            .into_iter()
            .find(|k| k.name() == norm)
            .ok_or_else(|| Error::Invalid(format!("unknown operator kind `{s}`")))
    }
}

/// Outcome of one operator check. Serializes as a violation report with an
/// extra `kind` field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperatorVerdict {
    pub kind: OperatorKind,
    #[serde(flatten)]
    pub report: ViolationReport,
}

impl OperatorVerdict {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("verdict serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn render_text(&self) -> String {
        format!("operator check {}\n{}", self.kind, self.report.render_text())
    }
}

/// What an operator acts on.
#[derive(Clone, Copy, Debug)]
pub enum Subject<'a> {
    Algebra(&'a AlgebraSpec),
    Representation(&'a RepresentationSpec),
    Action(&'a ActionSpec),
}

/// Evaluates `equations(i, j)` (one residual per tag) on every pair in
/// `rows × cols` and folds the failures into a verdict.
fn pair_check<F>(kind: OperatorKind, tags: &[&str], rows: usize, cols: usize, equations: F) -> OperatorVerdict
where
    F: Fn(usize, usize) -> Vec<Vector> + Sync,
{
    let pairs: Vec<(usize, usize)> = (0..rows).flat_map(|i| (0..cols).map(move |j| (i, j))).collect();
    let residuals: Vec<Vec<Vector>> = pairs.par_iter().map(|&(i, j)| equations(i, j)).collect();
    let mut report = ViolationReport::default();
    for (t, tag) in tags.iter().enumerate() {
        let failures = pairs
            .iter()
            .zip(&residuals)
            .filter(|(_, r)| !r[t].is_zero())
            .map(|(&(i, j), r)| Violation {
                id: tag.to_string(),
                witness: vec![i, j],
                residual: r[t].clone(),
            })
            .collect();
        report.record(tag, pairs.len(), failures, DEFAULT_CAP);
    }
    OperatorVerdict { kind, report }
}

fn image(t: &LinearMapSpec, v: &Vector) -> Vector {
    t.apply(v).expect("shape checked")
}

/// `μ(Ra, Rb) = R(μ(a, Rb) + μ(Ra, b))`.
pub fn check_rota_baxter(a: &AlgebraSpec, r: &LinearMapSpec) -> Result<OperatorVerdict> {
    let n = a.dimension();
    r.expect_shape(n, n, "Rota-Baxter operator")?;
    let mul = a.op("mul")?;
    let cols = r.basis_images();
    Ok(pair_check(OperatorKind::RotaBaxter, &["rota-baxter"], n, n, |i, j| {
        let ei = Vector::basis(n, i);
        let ej = Vector::basis(n, j);
        let lhs = mul.eval(&cols[i], &cols[j]);
        let inner = &mul.eval(&ei, &cols[j]) + &mul.eval(&cols[i], &ej);
        vec![&lhs - &image(r, &inner)]
    }))
}

/// Two-sided averaging test shared by every averaging flavour:
/// `Tx∘Ty = T(Tx ∘_l y)` and `Tx∘Ty = T(x ∘_r Ty)` for the given triples
/// `(tag, product on the base, left action, right action)`.
fn averaging_equations(
    t: &LinearMapSpec,
    products: &[(&BilinearOp, &BilinearOp, &BilinearOp)],
    i: usize,
    j: usize,
) -> Vec<Vector> {
    let m = t.source_dim();
    let ti = t.matrix().column(i);
    let tj = t.matrix().column(j);
    let ei = Vector::basis(m, i);
    let ej = Vector::basis(m, j);
    let mut out = Vec::with_capacity(2 * products.len());
    for (base, left, right) in products {
        let lhs = base.eval(&ti, &tj);
        out.push(&lhs - &image(t, &left.eval(&ti, &ej)));
        out.push(&lhs - &image(t, &right.eval(&ei, &tj)));
    }
    out
}

/// `μ(Ha, Hb) = Hμ(a, Hb) = Hμ(Ha, b)`, two equations per pair.
pub fn check_assoc_averaging(a: &AlgebraSpec, h: &LinearMapSpec) -> Result<OperatorVerdict> {
    let n = a.dimension();
    h.expect_shape(n, n, "averaging operator")?;
    let mul = a.op("mul")?;
    Ok(pair_check(
        OperatorKind::AssocAveraging,
        &["mul:left", "mul:right"],
        n,
        n,
        |i, j| averaging_equations(h, &[(mul, mul, mul)], i, j),
    ))
}

/// `Tx≺Ty = T(Tx≺y) = T(x≺Ty)` and the `≻` analogue, four equations per pair.
pub fn check_dend_averaging(d: &AlgebraSpec, t: &LinearMapSpec) -> Result<OperatorVerdict> {
    let n = d.dimension();
    t.expect_shape(n, n, "averaging operator")?;
    let prec = d.op("prec")?;
    let succ = d.op("succ")?;
    Ok(pair_check(
        OperatorKind::DendAveraging,
        &["prec:left", "prec:right", "succ:left", "succ:right"],
        n,
        n,
        |i, j| averaging_equations(t, &[(prec, prec, prec), (succ, succ, succ)], i, j),
    ))
}

/// `Tu≺Tv = T(Tu≺_l v) = T(u≺_r Tv)` and the `≻` analogue for `T: V → D`,
/// four equations per pair of module basis vectors.
pub fn check_relative_averaging(rep: &RepresentationSpec, t: &LinearMapSpec) -> Result<OperatorVerdict> {
    let n = rep.base().dimension();
    let m = rep.module_dim();
    t.expect_shape(m, n, "relative averaging operator")?;
    let prec = rep.base().op("prec")?;
    let succ = rep.base().op("succ")?;
    Ok(pair_check(
        OperatorKind::RelativeAveraging,
        &["prec:left", "prec:right", "succ:left", "succ:right"],
        m,
        m,
        |i, j| {
            averaging_equations(
                t,
                &[(prec, rep.prec_l(), rep.prec_r()), (succ, rep.succ_l(), rep.succ_r())],
                i,
                j,
            )
        },
    ))
}

/// Relative averaging for the action's representation plus the
/// homomorphism equations `T(u≺'v) = Tu≺Tv`, `T(u≻'v) = Tu≻Tv`.
pub fn check_homomorphic_relative(act: &ActionSpec, t: &LinearMapSpec) -> Result<OperatorVerdict> {
    let rep = act.representation();
    let n = act.base().dimension();
    let m = act.target().dimension();
    t.expect_shape(m, n, "homomorphic relative averaging operator")?;
    let prec = act.base().op("prec")?;
    let succ = act.base().op("succ")?;
    let prec_t = act.target().op("prec")?;
    let succ_t = act.target().op("succ")?;
    Ok(pair_check(
        OperatorKind::HomomorphicRelative,
        &[
            "prec:left",
            "prec:right",
            "succ:left",
            "succ:right",
            "prec:hom",
            "succ:hom",
        ],
        m,
        m,
        |i, j| {
            let mut out = averaging_equations(
                t,
                &[(prec, rep.prec_l(), rep.prec_r()), (succ, rep.succ_l(), rep.succ_r())],
                i,
                j,
            );
            let ti = t.matrix().column(i);
            let tj = t.matrix().column(j);
            out.push(&image(t, prec_t.product(i, j)) - &prec.eval(&ti, &tj));
            out.push(&image(t, succ_t.product(i, j)) - &succ.eval(&ti, &tj));
            out
        },
    ))
}

/// Tests whether the graph `{(Tu, u)}` is a subalgebra of the
/// hemisemidirect product `D ⋉_hemi V`.
///
/// The graph is spanned by the generators `g_u = (T e_u, e_u)`. Since every
/// operation is bilinear, the span is closed iff each product `g_u ∘ g_v`
/// of generators lies in it, so only those `m²` products per operation are
/// tested. A violation's residual is the remainder of the product after
/// reduction against the graph's echelon basis.
pub fn graph_subalgebra_check(rep: &RepresentationSpec, t: &LinearMapSpec) -> Result<OperatorVerdict> {
    let n = rep.base().dimension();
    let m = rep.module_dim();
    t.expect_shape(m, n, "relative averaging operator")?;
    let hemi = hemisemidirect(rep)?;
    let generators: Vec<Vector> = (0..m)
        .map(|u| t.matrix().column(u).concat(&Vector::basis(m, u)))
        .collect();
    let graph = span(n + m, &generators)?;
    let ops: Vec<(&str, &BilinearOp)> = hemi.operations().iter().map(|(k, v)| (k.as_str(), v)).collect();
    let tags: Vec<&str> = ops.iter().map(|(k, _)| *k).collect();
    Ok(pair_check(OperatorKind::GraphSubalgebra, &tags, m, m, |u, v| {
        ops.iter()
            .map(|(_, op)| {
                let p = op.eval(&generators[u], &generators[v]);
                graph.reduce(&p).expect("ambient dimension matches")
            })
            .collect()
    }))
}

/// Runs the check named by `kind` against `subject`.
///
/// Relative kinds accept an algebra (its adjoint representation or
/// self-action is used) or an action (its underlying representation).
pub fn check_operator(subject: Subject<'_>, kind: OperatorKind, t: &LinearMapSpec) -> Result<OperatorVerdict> {
    let wrong = |what: &str| {
        Err(Error::Invalid(format!(
            "operator kind {kind} needs {what} as its subject"
        )))
    };
    match (kind, subject) {
        (OperatorKind::RotaBaxter, Subject::Algebra(a)) => check_rota_baxter(a, t),
        (OperatorKind::AssocAveraging, Subject::Algebra(a)) => check_assoc_averaging(a, t),
        (OperatorKind::DendAveraging, Subject::Algebra(a)) => check_dend_averaging(a, t),
        (OperatorKind::RelativeAveraging, s) => check_relative_averaging(&representation_of(s)?, t),
        (OperatorKind::GraphSubalgebra, s) => graph_subalgebra_check(&representation_of(s)?, t),
        (OperatorKind::HomomorphicRelative, Subject::Action(a)) => check_homomorphic_relative(a, t),
        (OperatorKind::HomomorphicRelative, Subject::Algebra(a)) => {
            check_homomorphic_relative(&ActionSpec::adjoint(a)?, t)
        }
        (OperatorKind::HomomorphicRelative, Subject::Representation(_)) => wrong("an action or a dendriform algebra"),
        _ => wrong("an algebra"),
    }
}

fn representation_of(subject: Subject<'_>) -> Result<RepresentationSpec> {
    match subject {
        Subject::Algebra(a) => RepresentationSpec::adjoint(a),
        Subject::Representation(r) => Ok(r.clone()),
        Subject::Action(a) => Ok(a.representation().clone()),
    }
}

/// `(source_dim, target_dim)` of the operators `kind` expects on `subject`.
pub fn operator_shape(subject: Subject<'_>, kind: OperatorKind) -> (usize, usize) {
    let relative = matches!(
        kind,
        OperatorKind::RelativeAveraging | OperatorKind::GraphSubalgebra | OperatorKind::HomomorphicRelative
    );
    match subject {
        Subject::Algebra(a) => (a.dimension(), a.dimension()),
        Subject::Representation(r) if relative => (r.module_dim(), r.base().dimension()),
        Subject::Representation(r) => (r.base().dimension(), r.base().dimension()),
        Subject::Action(a) if relative => (a.target().dimension(), a.base().dimension()),
        Subject::Action(a) => (a.base().dimension(), a.base().dimension()),
    }
}

/// Default search budget: every 3×3 matrix over a three-element grid.
pub const DEFAULT_SEARCH_CAP: u64 = 19_683;

/// Enumerates every matrix with entries from `grid` (sorted, deduplicated)
/// in lexicographic row-major order and returns those passing `kind`.
pub fn search_operators(
    subject: Subject<'_>,
    kind: OperatorKind,
    grid: &[Rational],
    cap: u64,
) -> Result<Vec<LinearMapSpec>> {
    let mut grid = grid.to_vec();
    grid.sort();
    grid.dedup();
    let (source, target) = operator_shape(subject, kind);
    let entries = source * target;
    let total = BigUint::from(grid.len()).pow(entries as u32);
    if total > BigUint::from(cap) {
        return Err(Error::CapExceeded {
            candidates: total.to_string(),
            cap,
        });
    }
    let total: u64 = total.try_into().expect("bounded by cap");
    let base = grid.len() as u64;
    let build = |mut index: u64| {
        let mut data = vec![Rational::default(); entries];
        for slot in data.iter_mut().rev() {
            *slot = grid[(index % base) as usize].clone();
            index /= base;
        }
        LinearMapSpec::new(Matrix::new(target, source, data).expect("sized above"))
    };
    let passing: Vec<u64> = (0..total)
        .into_par_iter()
        .map(|c| check_operator(subject, kind, &build(c)).map(|v| (c, v.passed())))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter_map(|(c, ok)| ok.then_some(c))
        .collect();
    Ok(passing.into_iter().map(build).collect())
}
