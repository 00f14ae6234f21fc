//! Structure-constant data model: bilinear operations, multi-operation
//! algebras, representations, actions and linear maps.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational, Vector};

/// A bilinear map `K^left × K^right → K^out` stored densely by structure
/// constants: `product(i, j)` is the image of `(e_i, e_j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BilinearOp {
    left_dim: usize,
    right_dim: usize,
    out_dim: usize,
    coeffs: Vec<Vector>,
}

impl BilinearOp {
    pub fn zero(left_dim: usize, right_dim: usize, out_dim: usize) -> Self {
        BilinearOp {
            left_dim,
            right_dim,
            out_dim,
            coeffs: vec![Vector::zeros(out_dim); left_dim * right_dim],
        }
    }

    /// `coeffs` is indexed `i * right_dim + j`.
    pub fn new(left_dim: usize, right_dim: usize, out_dim: usize, coeffs: Vec<Vector>) -> Result<Self> {
        if coeffs.len() != left_dim * right_dim {
            return Err(Error::DimensionMismatch {
                context: "structure constant table".into(),
                expected: left_dim * right_dim,
                found: coeffs.len(),
            });
        }
        if let Some(bad) = coeffs.iter().find(|v| v.len() != out_dim) {
            return Err(Error::DimensionMismatch {
                context: "structure constant output vector".into(),
                expected: out_dim,
                found: bad.len(),
            });
        }
        Ok(BilinearOp {
            left_dim,
            right_dim,
            out_dim,
            coeffs,
        })
    }

    pub fn from_fn(
        left_dim: usize,
        right_dim: usize,
        out_dim: usize,
        mut f: impl FnMut(usize, usize) -> Vector,
    ) -> Self {
        let mut coeffs = Vec::with_capacity(left_dim * right_dim);
        for i in 0..left_dim {
            for j in 0..right_dim {
                let v = f(i, j);
                assert_eq!(v.len(), out_dim, "product ({i}, {j}) has wrong length");
                coeffs.push(v);
            }
        }
        BilinearOp {
            left_dim,
            right_dim,
            out_dim,
            coeffs,
        }
    }

    pub fn left_dim(&self) -> usize {
        self.left_dim
    }

    pub fn right_dim(&self) -> usize {
        self.right_dim
    }

    pub fn out_dim(&self) -> usize {
        self.out_dim
    }

    pub fn product(&self, i: usize, j: usize) -> &Vector {
        &self.coeffs[i * self.right_dim + j]
    }

    pub fn set_product(&mut self, i: usize, j: usize, v: Vector) {
        assert_eq!(v.len(), self.out_dim);
        self.coeffs[i * self.right_dim + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Vector::is_zero)
    }

    /// `Σ x_i y_j · (e_i ∘ e_j)`.
    pub fn evaluate(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        if x.len() != self.left_dim {
            return Err(Error::DimensionMismatch {
                context: "left operand".into(),
                expected: self.left_dim,
                found: x.len(),
            });
        }
        if y.len() != self.right_dim {
            return Err(Error::DimensionMismatch {
                context: "right operand".into(),
                expected: self.right_dim,
                found: y.len(),
            });
        }
        Ok(self.eval(x, y))
    }

    /// Unchecked evaluation; skips zero coordinates, which is most of them
    /// when operands are basis vectors.
    pub(crate) fn eval(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = Vector::zeros(self.out_dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = self.product(i, j);
                if c.is_zero() {
                    continue;
                }
                out.add_scaled(&(xi * yj), c);
            }
        }
        out
    }

    /// Entrywise sum of two operations of the same shape.
    pub fn sum(&self, other: &BilinearOp) -> Result<BilinearOp> {
        if self.shape() != other.shape() {
            return Err(Error::DimensionMismatch {
                context: "operation sum".into(),
                expected: self.coeffs.len(),
                found: other.coeffs.len(),
            });
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(BilinearOp {
            left_dim: self.left_dim,
            right_dim: self.right_dim,
            out_dim: self.out_dim,
            coeffs,
        })
    }

    pub fn shape(&self) -> (usize, usize, usize) {
        (self.left_dim, self.right_dim, self.out_dim)
    }
}

/// Which family of axioms an algebra's operations are meant to satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Signature {
    Associative,
    Dendriform,
    Diassociative,
    Triassociative,
    Quadri,
    Six,
    Raw,
}

impl Signature {
    pub const ALL: [Signature; 7] = [
        Signature::Associative,
        Signature::Dendriform,
        Signature::Diassociative,
        Signature::Triassociative,
        Signature::Quadri,
        Signature::Six,
        Signature::Raw,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Signature::Associative => "associative",
            Signature::Dendriform => "dendriform",
            Signature::Diassociative => "diassociative",
            Signature::Triassociative => "triassociative",
            Signature::Quadri => "quadri",
            Signature::Six => "six",
            Signature::Raw => "raw",
        }
    }

    /// Operation names the signature requires, sorted.
    pub fn canonical_ops(self) -> &'static [&'static str] {
        match self {
            Signature::Associative => &["mul"],
            Signature::Dendriform => &["prec", "succ"],
            Signature::Diassociative => &["dashv", "vdash"],
            Signature::Triassociative => &["dashv", "perp", "vdash"],
            Signature::Quadri => &["prec_dashv", "prec_vdash", "succ_dashv", "succ_vdash"],
            Signature::Six => &[
                "prec_dashv",
                "prec_perp",
                "prec_vdash",
                "succ_dashv",
                "succ_perp",
                "succ_vdash",
            ],
            Signature::Raw => &[],
        }
    }

    /// The non-raw signature whose operation list is exactly `names`.
    pub fn matching<'a>(names: impl IntoIterator<Item = &'a str>) -> Signature {
        let mut names: Vec<&str> = names.into_iter().collect();
        names.sort_unstable();
        names.dedup();
        Signature::ALL
            .into_iter()
            .find(|s| *s != Signature::Raw && s.canonical_ops() == names.as_slice())
            .unwrap_or(Signature::Raw)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Signature {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Signature::ALL
            .into_iter()
            .find(|sig| sig.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown signature `{s}`")))
    }
}

/// A finite-dimensional algebra with one or more named operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraSpec {
    dimension: usize,
    basis_labels: Option<Vec<String>>,
    signature: Signature,
    operations: BTreeMap<String, BilinearOp>,
}

impl AlgebraSpec {
    pub fn new(
        dimension: usize,
        signature: Signature,
        operations: BTreeMap<String, BilinearOp>,
    ) -> Result<Self> {
        for (name, op) in &operations {
            if op.shape() != (dimension, dimension, dimension) {
                return Err(Error::DimensionMismatch {
                    context: format!("operation `{name}`"),
                    expected: dimension,
                    found: op.left_dim().max(op.right_dim()).max(op.out_dim()),
                });
            }
        }
        for required in signature.canonical_ops() {
            if !operations.contains_key(*required) {
                return Err(Error::MissingOperation((*required).to_string()));
            }
        }
        if signature != Signature::Raw {
            let canon = signature.canonical_ops();
            if let Some(extra) = operations.keys().find(|k| !canon.contains(&k.as_str())) {
                return Err(Error::Invalid(format!(
                    "operation `{extra}` is not part of the {signature} signature"
                )));
            }
        }
        Ok(AlgebraSpec {
            dimension,
            basis_labels: None,
            signature,
            operations,
        })
    }

    /// Convenience constructor from `(name, op)` pairs.
    pub fn from_ops<S: Into<String>>(
        dimension: usize,
        signature: Signature,
        ops: impl IntoIterator<Item = (S, BilinearOp)>,
    ) -> Result<Self> {
        Self::new(
            dimension,
            signature,
            ops.into_iter().map(|(k, v)| (k.into(), v)).collect(),
        )
    }

    /// All operations of the signature set to zero.
    pub fn zero(dimension: usize, signature: Signature) -> Self {
        let ops = signature
            .canonical_ops()
            .iter()
            .map(|n| (n.to_string(), BilinearOp::zero(dimension, dimension, dimension)))
            .collect();
        Self::new(dimension, signature, ops).expect("zero algebra is well formed")
    }

    pub fn with_basis_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dimension {
            return Err(Error::DimensionMismatch {
                context: "basis labels".into(),
                expected: self.dimension,
                found: labels.len(),
            });
        }
        self.basis_labels = Some(labels);
        Ok(self)
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn signature(&self) -> Signature {
        self.signature
    }

    pub fn basis_labels(&self) -> Option<&[String]> {
        self.basis_labels.as_deref()
    }

    pub fn operations(&self) -> &BTreeMap<String, BilinearOp> {
        &self.operations
    }

    pub fn op(&self, name: &str) -> Result<&BilinearOp> {
        self.operations
            .get(name)
            .ok_or_else(|| Error::MissingOperation(name.to_string()))
    }

    /// Keeps only the operations in `mapping` (old name → new name) and
    /// relabels them; the signature is inferred from the new names.
    pub fn relabel(&self, mapping: &[(&str, &str)]) -> Result<AlgebraSpec> {
        let mut ops = BTreeMap::new();
        for (old, new) in mapping {
            ops.insert(new.to_string(), self.op(old)?.clone());
        }
        let sig = Signature::matching(ops.keys().map(String::as_str));
        let mut out = AlgebraSpec::new(self.dimension, sig, ops)?;
        out.basis_labels = self.basis_labels.clone();
        Ok(out)
    }

    /// Same operations under a different signature label.
    pub fn with_signature(&self, signature: Signature) -> Result<AlgebraSpec> {
        let mut out = AlgebraSpec::new(self.dimension, signature, self.operations.clone())?;
        out.basis_labels = self.basis_labels.clone();
        Ok(out)
    }
}

/// A representation `(V; prec_l, succ_l, prec_r, succ_r)` of a dendriform
/// algebra `D`. Left actions are `D × V → V`, right actions `V × D → V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentationSpec {
    base: AlgebraSpec,
    module_dim: usize,
    pub(crate) prec_l: BilinearOp,
    pub(crate) succ_l: BilinearOp,
    pub(crate) prec_r: BilinearOp,
    pub(crate) succ_r: BilinearOp,
}

pub const ACTION_OPS: [&str; 4] = ["prec_l", "prec_r", "succ_l", "succ_r"];

impl RepresentationSpec {
    pub fn new(
        base: AlgebraSpec,
        module_dim: usize,
        prec_l: BilinearOp,
        succ_l: BilinearOp,
        prec_r: BilinearOp,
        succ_r: BilinearOp,
    ) -> Result<Self> {
        if base.signature() != Signature::Dendriform {
            return Err(Error::Invalid(format!(
                "representation base must be dendriform, got {}",
                base.signature()
            )));
        }
        let n = base.dimension();
        let m = module_dim;
        for (name, op, want) in [
            ("prec_l", &prec_l, (n, m, m)),
            ("succ_l", &succ_l, (n, m, m)),
            ("prec_r", &prec_r, (m, n, m)),
            ("succ_r", &succ_r, (m, n, m)),
        ] {
            if op.shape() != want {
                return Err(Error::Invalid(format!(
                    "action `{name}` has shape {:?}, expected {want:?}",
                    op.shape()
                )));
            }
        }
        Ok(RepresentationSpec {
            base,
            module_dim,
            prec_l,
            succ_l,
            prec_r,
            succ_r,
        })
    }

    /// The adjoint representation: `D` acting on itself by its own products.
    pub fn adjoint(base: &AlgebraSpec) -> Result<Self> {
        let prec = base.op("prec")?.clone();
        let succ = base.op("succ")?.clone();
        Self::new(
            base.clone(),
            base.dimension(),
            prec.clone(),
            succ.clone(),
            prec,
            succ,
        )
    }

    pub fn zero(base: AlgebraSpec, module_dim: usize) -> Result<Self> {
        let n = base.dimension();
        let m = module_dim;
        Self::new(
            base,
            m,
            BilinearOp::zero(n, m, m),
            BilinearOp::zero(n, m, m),
            BilinearOp::zero(m, n, m),
            BilinearOp::zero(m, n, m),
        )
    }

    pub fn base(&self) -> &AlgebraSpec {
        &self.base
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn action(&self, name: &str) -> Result<&BilinearOp> {
        match name {
            "prec_l" => Ok(&self.prec_l),
            "succ_l" => Ok(&self.succ_l),
            "prec_r" => Ok(&self.prec_r),
            "succ_r" => Ok(&self.succ_r),
            _ => Err(Error::MissingOperation(name.to_string())),
        }
    }

    pub fn prec_l(&self) -> &BilinearOp {
        &self.prec_l
    }
    pub fn succ_l(&self) -> &BilinearOp {
        &self.succ_l
    }
    pub fn prec_r(&self) -> &BilinearOp {
        &self.prec_r
    }
    pub fn succ_r(&self) -> &BilinearOp {
        &self.succ_r
    }
}

/// An action of the dendriform algebra `D` on the dendriform algebra `D'`:
/// a representation on the underlying space of `D'` plus `D'` itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionSpec {
    representation: RepresentationSpec,
    target: AlgebraSpec,
}

impl ActionSpec {
    pub fn new(representation: RepresentationSpec, target: AlgebraSpec) -> Result<Self> {
        if target.signature() != Signature::Dendriform {
            return Err(Error::Invalid(format!(
                "action target must be dendriform, got {}",
                target.signature()
            )));
        }
        if target.dimension() != representation.module_dim() {
            return Err(Error::DimensionMismatch {
                context: "action target".into(),
                expected: representation.module_dim(),
                found: target.dimension(),
            });
        }
        Ok(ActionSpec {
            representation,
            target,
        })
    }

    /// `D` acting on itself: the adjoint representation with `D' = D`.
    pub fn adjoint(base: &AlgebraSpec) -> Result<Self> {
        Self::new(RepresentationSpec::adjoint(base)?, base.clone())
    }

    pub fn base(&self) -> &AlgebraSpec {
        self.representation.base()
    }

    pub fn target(&self) -> &AlgebraSpec {
        &self.target
    }

    pub fn representation(&self) -> &RepresentationSpec {
        &self.representation
    }
}

/// Where a map's source or target lives: a named algebra or a bare space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MapEnd {
    Named(String),
    Dim,
}

/// A linear map given by its `target_dim × source_dim` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMapSpec {
    matrix: Matrix,
    source: MapEnd,
    target: MapEnd,
}

impl LinearMapSpec {
    pub fn new(matrix: Matrix) -> Self {
        LinearMapSpec {
            matrix,
            source: MapEnd::Dim,
            target: MapEnd::Dim,
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::new(Matrix::identity(n))
    }

    pub fn scalar(n: usize, k: Rational) -> Self {
        Self::new(Matrix::scalar(n, k))
    }

    pub fn zero(source_dim: usize, target_dim: usize) -> Self {
        Self::new(Matrix::zeros(target_dim, source_dim))
    }

    /// Attaches source/target algebra names (cosmetic; used when writing
    /// documents).
    pub fn between(mut self, source: impl Into<String>, target: impl Into<String>) -> Self {
        self.source = MapEnd::Named(source.into());
        self.target = MapEnd::Named(target.into());
        self
    }

    pub(crate) fn with_ends(mut self, source: MapEnd, target: MapEnd) -> Self {
        self.source = source;
        self.target = target;
        self
    }

    pub fn source(&self) -> &MapEnd {
        &self.source
    }

    pub fn target(&self) -> &MapEnd {
        &self.target
    }

    pub fn source_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn target_dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &Vector) -> Result<Vector> {
        self.matrix.mul_vec(v)
    }

    /// Images of the source basis vectors (the matrix columns).
    pub fn basis_images(&self) -> Vec<Vector> {
        (0..self.source_dim()).map(|c| self.matrix.column(c)).collect()
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &LinearMapSpec) -> Result<LinearMapSpec> {
        Ok(LinearMapSpec::new(self.matrix.mul(&inner.matrix)?))
    }

    pub fn is_injective(&self) -> bool {
        self.matrix.rank() == self.source_dim()
    }

    pub(crate) fn expect_shape(&self, source: usize, target: usize, what: &str) -> Result<()> {
        if self.source_dim() != source {
            return Err(Error::DimensionMismatch {
                context: format!("{what} source"),
                expected: source,
                found: self.source_dim(),
            });
        }
        if self.target_dim() != target {
            return Err(Error::DimensionMismatch {
                context: format!("{what} target"),
                expected: target,
                found: self.target_dim(),
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    #[test]
    fn zero_op_evaluates_to_zero() {
        let op = BilinearOp::zero(2, 3, 4);
        let out = op
            .evaluate(&Vector::from_ints(&[1, 2]), &Vector::from_ints(&[3, 4, 5]))
            .unwrap();
        assert_eq!(out, Vector::zeros(4));
    }

    #[test]
    fn scalar_bilinearity_in_dimension_one() {
        let op = BilinearOp::new(1, 1, 1, vec![Vector::from_ints(&[3])]).unwrap();
        let out = op
            .evaluate(&Vector::from_ints(&[2]), &Vector::from_ints(&[5]))
            .unwrap();
        assert_eq!(out, Vector::from_ints(&[30]));
    }

    #[test]
    fn evaluate_checks_operand_lengths() {
        let op = BilinearOp::zero(2, 2, 2);
        assert!(op
            .evaluate(&Vector::zeros(3), &Vector::zeros(2))
            .is_err());
        assert!(op
            .evaluate(&Vector::zeros(2), &Vector::zeros(1))
            .is_err());
    }

    #[test]
    fn apply_examples() {
        let v = Vector::from_ints(&[1, 1]);
        assert_eq!(LinearMapSpec::identity(2).apply(&v).unwrap(), v);
        assert_eq!(
            LinearMapSpec::zero(2, 2).apply(&v).unwrap(),
            Vector::zeros(2)
        );
        assert_eq!(
            LinearMapSpec::scalar(2, int(2)).apply(&v).unwrap(),
            Vector::from_ints(&[2, 2])
        );
        assert!(LinearMapSpec::identity(3).apply(&v).is_err());
    }

    #[test]
    fn signature_validation() {
        let err = AlgebraSpec::from_ops(1, Signature::Dendriform, [("prec", BilinearOp::zero(1, 1, 1))])
            .unwrap_err();
        assert!(matches!(err, Error::MissingOperation(ref s) if s == "succ"));

        let err = AlgebraSpec::from_ops(
            1,
            Signature::Associative,
            [("mul", BilinearOp::zero(1, 1, 1)), ("extra", BilinearOp::zero(1, 1, 1))],
        )
        .unwrap_err();
        assert!(matches!(err, Error::Invalid(_)));

        let raw = AlgebraSpec::from_ops(1, Signature::Raw, [("anything", BilinearOp::zero(1, 1, 1))]);
        assert!(raw.is_ok());

        let err = AlgebraSpec::from_ops(2, Signature::Associative, [("mul", BilinearOp::zero(1, 1, 1))])
            .unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
    }

    #[test]
    fn signature_matching() {
        assert_eq!(Signature::matching(["succ", "prec"]), Signature::Dendriform);
        assert_eq!(Signature::matching(["mul"]), Signature::Associative);
        assert_eq!(Signature::matching(["prec"]), Signature::Raw);
        assert_eq!("quadri".parse::<Signature>().unwrap(), Signature::Quadri);
    }

    #[test]
    fn representation_shapes_are_validated() {
        let d = AlgebraSpec::zero(2, Signature::Dendriform);
        let bad = RepresentationSpec::new(
            d.clone(),
            3,
            BilinearOp::zero(2, 3, 3),
            BilinearOp::zero(2, 3, 3),
            BilinearOp::zero(2, 3, 3),
            BilinearOp::zero(3, 2, 3),
        );
        assert!(bad.is_err());
        assert!(RepresentationSpec::zero(d.clone(), 3).is_ok());
        assert_eq!(RepresentationSpec::adjoint(&d).unwrap().module_dim(), 2);

        let assoc = AlgebraSpec::zero(2, Signature::Associative);
        assert!(RepresentationSpec::zero(assoc, 1).is_err());
    }
}
