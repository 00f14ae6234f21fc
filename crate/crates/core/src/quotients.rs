//! Ideals, quotients by the splitting ideal, and the converse theorems
//! that recover a (homomorphic) relative averaging operator from a quadri-
//! or six-dendriform algebra.
//!
//! Quotient bases use the complement (non-pivot) coordinates of the
//! ideal's echelon basis, so `x̄` has a fixed coordinate vector.

use rayon::prelude::*;

use crate::algebra::{ActionSpec, AlgebraSpec, BilinearOp, LinearMapSpec, RepresentationSpec, Signature};
use crate::constructions::{averaging_quadri, semidirect};
use crate::error::{Error, Result};
use crate::identity::{check, check_morphism, identity_pairing, CheckOptions, ViolationReport, DEFAULT_CAP, QUADRI_COLLAPSE};
use crate::linalg::{int, span, CosetProjection, Matrix, SubspaceBasis, Vector};

/// A two-sided ideal of an algebra, closed under every operation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealSpec {
    ambient: AlgebraSpec,
    subspace: SubspaceBasis,
}

impl IdealSpec {
    /// Wraps `subspace` after auditing closure.
    pub fn new(ambient: AlgebraSpec, subspace: SubspaceBasis) -> Result<Self> {
        let ideal = IdealSpec { ambient, subspace };
        ideal.audit()?;
        Ok(ideal)
    }

    pub fn ambient(&self) -> &AlgebraSpec {
        &self.ambient
    }

    pub fn subspace(&self) -> &SubspaceBasis {
        &self.subspace
    }

    pub fn rank(&self) -> usize {
        self.subspace.rank()
    }

    /// Checks `op(b, e_x)` and `op(e_x, b)` lie in the subspace for every
    /// ideal basis vector `b`, ambient basis vector `e_x` and operation.
    pub fn audit(&self) -> Result<()> {
        let n = self.ambient.dimension();
        if self.subspace.ambient_dim() != n {
            return Err(Error::DimensionMismatch {
                context: "ideal".into(),
                expected: n,
                found: self.subspace.ambient_dim(),
            });
        }
        for (name, op) in self.ambient.operations() {
            for b in self.subspace.basis() {
                for x in 0..n {
                    let e = Vector::basis(n, x);
                    for (left, right) in [(b, &e), (&e, b)] {
                        if !self.subspace.contains(&op.eval(left, right))? {
                            return Err(Error::NotAnIdeal {
                                op: name.clone(),
                                left: left.clone(),
                                right: right.clone(),
                            });
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Products of every basis vector of `current` with every ambient basis
/// vector, on both sides, under every operation.
fn products(a: &AlgebraSpec, current: &SubspaceBasis) -> Vec<Vector> {
    let n = a.dimension();
    let ops: Vec<&BilinearOp> = a.operations().values().collect();
    current
        .basis()
        .par_iter()
        .flat_map_iter(|b| {
            let ops = &ops;
            (0..n).flat_map(move |x| {
                let e = Vector::basis(n, x);
                ops.iter()
                    .flat_map(move |op| [op.eval(b, &e), op.eval(&e, b)])
                    .collect::<Vec<_>>()
            })
        })
        .collect()
}

/// The smallest ideal containing `generators`, by saturation: multiply the
/// current basis by all basis vectors under all operations, re-span, and
/// stop once the rank is stable (at most `dimension` rounds).
pub fn ideal_generated(a: &AlgebraSpec, generators: &[Vector]) -> Result<IdealSpec> {
    let mut current = span(a.dimension(), generators)?;
    loop {
        let next = current.extend(&products(a, &current))?;
        if next.rank() == current.rank() {
            break;
        }
        current = next;
    }
    Ok(IdealSpec {
        ambient: a.clone(),
        subspace: current,
    })
}

/// The ideal generated by `e_i≺⊢e_j − e_i≺⊣e_j` and `e_i≻⊢e_j − e_i≻⊣e_j`.
pub fn splitting_ideal(q: &AlgebraSpec) -> Result<IdealSpec> {
    let n = q.dimension();
    let mut generators = Vec::with_capacity(2 * n * n);
    for (vdash, dashv) in [("prec_vdash", "prec_dashv"), ("succ_vdash", "succ_dashv")] {
        let a = q.op(vdash)?;
        let b = q.op(dashv)?;
        for i in 0..n {
            for j in 0..n {
                generators.push(a.product(i, j) - b.product(i, j));
            }
        }
    }
    ideal_generated(q, &generators)
}

/// A quotient algebra with its coset projection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub algebra: AlgebraSpec,
    /// `x ↦ x̄` in complement coordinates.
    pub map: LinearMapSpec,
    pub projection: CosetProjection,
}

/// `a / ideal` with operations named by `collapse` (ambient → quotient).
/// Several ambient operations may share a quotient name; they must agree
/// modulo the ideal. Ambient operations absent from `collapse` are dropped.
pub fn quotient_algebra(a: &AlgebraSpec, ideal: &IdealSpec, collapse: &[(&str, &str)]) -> Result<Quotient> {
    ideal.audit()?;
    let n = a.dimension();
    let (complement, projection) = ideal.subspace().complement_coordinates();
    let k = complement.len();
    let mut targets: Vec<&str> = collapse.iter().map(|(_, t)| *t).collect();
    targets.sort();
    targets.dedup();
    let mut ops = Vec::with_capacity(targets.len());
    for target in targets {
        let sources: Vec<&str> = collapse.iter().filter(|(_, t)| *t == target).map(|(s, _)| *s).collect();
        let first = a.op(sources[0])?;
        for other in &sources[1..] {
            let op = a.op(other)?;
            for i in 0..n {
                for j in 0..n {
                    if !ideal.subspace().contains(&(first.product(i, j) - op.product(i, j)))? {
                        return Err(Error::IllDefinedCollapse {
                            first: sources[0].to_string(),
                            second: other.to_string(),
                            i,
                            j,
                        });
                    }
                }
            }
        }
        let op = BilinearOp::from_fn(k, k, k, |p, q| {
            projection
                .apply(first.product(complement[p], complement[q]))
                .expect("ambient vector")
        });
        ops.push((target, op));
    }
    let sig = Signature::matching(ops.iter().map(|(t, _)| *t));
    let algebra = AlgebraSpec::from_ops(k, sig, ops)?;
    Ok(Quotient {
        algebra,
        map: LinearMapSpec::new(projection.matrix()),
        projection,
    })
}

fn require(report: ViolationReport, what: &str) -> Result<()> {
    if report.passed() {
        Ok(())
    } else {
        Err(Error::Precondition {
            what: what.to_string(),
            report,
        })
    }
}

/// The representation of `D_Dend = D / I` on `D` itself:
/// `x̄≺_l y = x≺⊢y`, `x̄≻_l y = x≻⊢y`, `y≺_r x̄ = y≺⊣x`, `y≻_r x̄ = y≻⊣x`,
/// where `x` is the complement-coordinate lift of `x̄`.
///
/// The actions only make sense if ideal elements act by zero; this is
/// checked rather than assumed.
fn quotient_representation(q: &AlgebraSpec, ideal: &IdealSpec, quotient: &Quotient) -> Result<RepresentationSpec> {
    let n = q.dimension();
    let complement = quotient.projection.complement();
    let k = complement.len();
    let prec_vdash = q.op("prec_vdash")?;
    let succ_vdash = q.op("succ_vdash")?;
    let prec_dashv = q.op("prec_dashv")?;
    let succ_dashv = q.op("succ_dashv")?;
    for b in ideal.subspace().basis() {
        for y in 0..n {
            let e = Vector::basis(n, y);
            for (name, value) in [
                ("prec_l", prec_vdash.eval(b, &e)),
                ("succ_l", succ_vdash.eval(b, &e)),
                ("prec_r", prec_dashv.eval(&e, b)),
                ("succ_r", succ_dashv.eval(&e, b)),
            ] {
                if !value.is_zero() {
                    return Err(Error::IllDefinedAction {
                        op: name.into(),
                        element: b.clone(),
                        basis: y,
                    });
                }
            }
        }
    }
    let left = |op: &BilinearOp| BilinearOp::from_fn(k, n, n, |p, y| op.product(complement[p], y).clone());
    let right = |op: &BilinearOp| BilinearOp::from_fn(n, k, n, |y, p| op.product(y, complement[p]).clone());
    RepresentationSpec::new(
        quotient.algebra.clone(),
        n,
        left(prec_vdash),
        left(succ_vdash),
        right(prec_dashv),
        right(succ_dashv),
    )
}

/// From a quadri-dendriform algebra `q`: the representation of
/// `q / I_q` on `q` and the quotient map, a relative averaging operator.
pub fn quadri_to_relative_setup(q: &AlgebraSpec) -> Result<(RepresentationSpec, LinearMapSpec)> {
    require(check(q, "quadri", CheckOptions::default())?, "input is not quadri-dendriform")?;
    let ideal = splitting_ideal(q)?;
    let quotient = quotient_algebra(q, &ideal, &QUADRI_COLLAPSE)?;
    let rep = quotient_representation(q, &ideal, &quotient)?;
    Ok((rep, quotient.map))
}

/// An averaging dendriform algebra containing a quadri-dendriform algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AveragingEmbedding {
    /// `D_Dend ⋉ D`, of dimension `(n − r) + n`.
    pub ambient: AlgebraSpec,
    /// `(x̄, y) ↦ (ȳ, 0)`.
    pub operator: LinearMapSpec,
    /// `x ↦ (0, x)`.
    pub inclusion: LinearMapSpec,
}

impl AveragingEmbedding {
    /// Checks the inclusion is a morphism from `q` to the quadri structure
    /// the averaging operator induces on the ambient algebra.
    pub fn fidelity(&self, q: &AlgebraSpec) -> Result<ViolationReport> {
        let induced = averaging_quadri(&self.ambient, &self.operator)?;
        check_morphism(&self.inclusion, q, &induced, &identity_pairing(q), DEFAULT_CAP)
    }
}

pub fn embed_averaging(q: &AlgebraSpec) -> Result<AveragingEmbedding> {
    let (rep, t) = quadri_to_relative_setup(q)?;
    let n = q.dimension();
    let k = rep.base().dimension();
    let ambient = semidirect(&rep)?;
    let mut operator = Matrix::zeros(k + n, k + n);
    for r in 0..k {
        for c in 0..n {
            operator.set(r, k + c, t.matrix().get(r, c).clone());
        }
    }
    let mut inclusion = Matrix::zeros(k + n, n);
    for c in 0..n {
        inclusion.set(k + c, c, int(1));
    }
    Ok(AveragingEmbedding {
        ambient,
        operator: LinearMapSpec::new(operator),
        inclusion: LinearMapSpec::new(inclusion),
    })
}

const PERP_AS_DENDRIFORM: [(&str, &str); 2] = [("prec_perp", "prec"), ("succ_perp", "succ")];

/// From a six-dendriform algebra `s`: the action of `s / I` on the
/// dendriform algebra `(s, ≺⊥, ≻⊥)` and the quotient map, a homomorphic
/// relative averaging operator.
pub fn six_to_homomorphic_setup(s: &AlgebraSpec) -> Result<(ActionSpec, LinearMapSpec)> {
    let target = s.relabel(&PERP_AS_DENDRIFORM)?;
    require(
        check(&target, "dendriform", CheckOptions::default())?,
        "target not dendriform",
    )?;
    require(check(s, "quadri", CheckOptions::default())?, "input is not six-dendriform")?;
    require(check(s, "six", CheckOptions::default())?, "input is not six-dendriform")?;
    let ideal = splitting_ideal(s)?;
    let quotient = quotient_algebra(s, &ideal, &QUADRI_COLLAPSE)?;
    let rep = quotient_representation(s, &ideal, &quotient)?;
    Ok((ActionSpec::new(rep, target)?, quotient.map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::promote_to_quadri;

    fn one_dim(a: i64, b: i64) -> AlgebraSpec {
        AlgebraSpec::from_ops(
            1,
            Signature::Dendriform,
            [
                ("prec", BilinearOp::new(1, 1, 1, vec![Vector::from_ints(&[a])]).unwrap()),
                ("succ", BilinearOp::new(1, 1, 1, vec![Vector::from_ints(&[b])]).unwrap()),
            ],
        )
        .unwrap()
    }

    #[test]
    fn trivial_ideals() {
        let a = AlgebraSpec::zero(3, Signature::Dendriform);
        assert_eq!(ideal_generated(&a, &[]).unwrap().rank(), 0);
        let all: Vec<Vector> = (0..3).map(|i| Vector::basis(3, i)).collect();
        let full = ideal_generated(&a, &all).unwrap();
        assert_eq!(full.rank(), 3);
        let q = quotient_algebra(&a, &full, &[("prec", "prec"), ("succ", "succ")]).unwrap();
        assert_eq!(q.algebra, AlgebraSpec::zero(0, Signature::Dendriform));
    }

    #[test]
    fn saturation_reaches_products() {
        // span(x) in the truncated polynomials x, x², x³ generates everything
        let mul = BilinearOp::from_fn(3, 3, 3, |i, j| {
            if i + j + 2 <= 3 {
                Vector::basis(3, i + j + 1)
            } else {
                Vector::zeros(3)
            }
        });
        let a = AlgebraSpec::from_ops(3, Signature::Associative, [("mul", mul)]).unwrap();
        assert_eq!(ideal_generated(&a, &[Vector::basis(3, 0)]).unwrap().rank(), 3);
        assert_eq!(ideal_generated(&a, &[Vector::basis(3, 1)]).unwrap().rank(), 2);
        assert_eq!(ideal_generated(&a, &[Vector::basis(3, 2)]).unwrap().rank(), 1);
    }

    #[test]
    fn audit_reports_escaping_products() {
        let mul = BilinearOp::from_fn(2, 2, 2, |i, j| if i == 0 && j == 0 { Vector::basis(2, 1) } else { Vector::zeros(2) });
        let a = AlgebraSpec::from_ops(2, Signature::Associative, [("mul", mul)]).unwrap();
        let sub = span(2, &[Vector::basis(2, 0)]).unwrap();
        assert!(matches!(IdealSpec::new(a, sub), Err(Error::NotAnIdeal { .. })));
    }

    #[test]
    fn degenerate_quadri_has_zero_splitting_ideal() {
        let q = promote_to_quadri(&one_dim(1, 0)).unwrap();
        assert_eq!(splitting_ideal(&q).unwrap().rank(), 0);
        let (rep, t) = quadri_to_relative_setup(&q).unwrap();
        assert_eq!(rep.base(), &one_dim(1, 0));
        assert_eq!(t, LinearMapSpec::identity(1));
    }

    #[test]
    fn collapse_mismatch_is_reported() {
        let mut ops = AlgebraSpec::zero(1, Signature::Quadri).operations().clone();
        ops.insert("prec_vdash".into(), BilinearOp::new(1, 1, 1, vec![Vector::from_ints(&[1])]).unwrap());
        let q = AlgebraSpec::new(1, Signature::Quadri, ops).unwrap();
        let zero = IdealSpec::new(q.clone(), SubspaceBasis::zero(1)).unwrap();
        assert!(matches!(
            quotient_algebra(&q, &zero, &QUADRI_COLLAPSE),
            Err(Error::IllDefinedCollapse { i: 0, j: 0, .. })
        ));
    }

    #[test]
    fn zero_quadri_embeds() {
        let q = AlgebraSpec::zero(0, Signature::Quadri);
        let e = embed_averaging(&q).unwrap();
        assert_eq!(e.ambient.dimension(), 0);
        assert!(e.fidelity(&q).unwrap().passed());
    }
}
