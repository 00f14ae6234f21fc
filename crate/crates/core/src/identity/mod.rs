//! Exhaustive verification of multilinear identities.
//!
//! An identity in three slots is multilinear, so it holds on all inputs as
//! soon as it holds on every tuple of basis vectors. [`check`] evaluates
//! each schema of a catalog on all such tuples (the iteration space is
//! read off the slot sorts) and collects every non-zero residual.

mod catalog;
mod report;
mod term;

use rayon::prelude::*;

pub use catalog::{catalog, catalog_paranoid, CATALOG_NAMES};
pub use report::{SchemaTally, Violation, ViolationReport, DEFAULT_CAP};
pub use term::{parse_combination, Combination, IdentitySchema, Sort, Term};

use crate::algebra::{ActionSpec, AlgebraSpec, BilinearOp, LinearMapSpec, RepresentationSpec};
use crate::error::{Error, Result};
use crate::linalg::{Rational, Vector};

/// An operation together with the sorts it maps between.
#[derive(Clone, Copy, Debug)]
pub struct TypedOp<'a> {
    pub op: &'a BilinearOp,
    pub left: Sort,
    pub right: Sort,
    pub out: Sort,
}

/// Anything whose operations identities can be evaluated against.
pub trait OperationTable {
    /// Dimension of the space a sort ranges over, if the object has one.
    fn sort_dim(&self, sort: Sort) -> Option<usize>;
    fn typed_op(&self, name: &str) -> Option<TypedOp<'_>>;
}

impl OperationTable for AlgebraSpec {
    fn sort_dim(&self, sort: Sort) -> Option<usize> {
        (sort == Sort::A).then_some(self.dimension())
    }

    fn typed_op(&self, name: &str) -> Option<TypedOp<'_>> {
        self.operations().get(name).map(|op| TypedOp {
            op,
            left: Sort::A,
            right: Sort::A,
            out: Sort::A,
        })
    }
}

impl OperationTable for RepresentationSpec {
    fn sort_dim(&self, sort: Sort) -> Option<usize> {
        Some(match sort {
            Sort::A => self.base().dimension(),
            Sort::V => self.module_dim(),
        })
    }

    fn typed_op(&self, name: &str) -> Option<TypedOp<'_>> {
        let (left, right) = match name {
            "prec_l" | "succ_l" => (Sort::A, Sort::V),
            "prec_r" | "succ_r" => (Sort::V, Sort::A),
            _ => return self.base().typed_op(name),
        };
        Some(TypedOp {
            op: self.action(name).ok()?,
            left,
            right,
            out: Sort::V,
        })
    }
}

impl OperationTable for ActionSpec {
    fn sort_dim(&self, sort: Sort) -> Option<usize> {
        self.representation().sort_dim(sort)
    }

    /// The target algebra's products are exposed as `prec_t` / `succ_t`.
    fn typed_op(&self, name: &str) -> Option<TypedOp<'_>> {
        let own = match name {
            "prec_t" => "prec",
            "succ_t" => "succ",
            _ => return self.representation().typed_op(name),
        };
        self.target().operations().get(own).map(|op| TypedOp {
            op,
            left: Sort::V,
            right: Sort::V,
            out: Sort::V,
        })
    }
}

#[derive(Clone, Copy, Debug)]
pub struct CheckOptions {
    /// Check every pairwise equality of each chain, not just consecutive ones.
    pub paranoid: bool,
    /// Maximum number of violations kept in the report.
    pub cap: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            paranoid: false,
            cap: DEFAULT_CAP,
        }
    }
}

/// Runs catalog `catalog_name` against `object` on all basis tuples.
pub fn check<T>(object: &T, catalog_name: &str, options: CheckOptions) -> Result<ViolationReport>
where
    T: OperationTable + Sync + ?Sized,
{
    let schemas = if options.paranoid {
        catalog_paranoid(catalog_name)?
    } else {
        catalog(catalog_name)?
    };
    check_schemas(object, &schemas, options.cap)
}

/// Runs arbitrary schemas against `object` on all basis tuples.
pub fn check_schemas<T>(object: &T, schemas: &[IdentitySchema], cap: usize) -> Result<ViolationReport>
where
    T: OperationTable + Sync + ?Sized,
{
    let compiled = schemas
        .iter()
        .map(|s| Compiled::new(object, s))
        .collect::<Result<Vec<_>>>()?;
    let mut report = ViolationReport::default();
    for c in &compiled {
        let [a, b, d] = c.dims;
        let tuples: Vec<[usize; 3]> = (0..a)
            .flat_map(|i| (0..b).flat_map(move |j| (0..d).map(move |k| [i, j, k])))
            .collect();
        let failures: Vec<Violation> = tuples
            .par_iter()
            .filter_map(|idx| {
                let r = c.residual_at_basis(*idx);
                (!r.is_zero()).then(|| Violation {
                    id: c.id.clone(),
                    witness: idx.to_vec(),
                    residual: r,
                })
            })
            .collect();
        report.record(&c.id, tuples.len(), failures, cap);
    }
    Ok(report)
}

/// `lhs - rhs` of `schema` evaluated at arbitrary inputs.
pub fn residual<T>(object: &T, schema: &IdentitySchema, inputs: &[Vector; 3]) -> Result<Vector>
where
    T: OperationTable + ?Sized,
{
    let c = Compiled::new(object, schema)?;
    for (slot, (x, dim)) in inputs.iter().zip(c.dims).enumerate() {
        if x.len() != dim {
            return Err(Error::DimensionMismatch {
                context: format!("input slot {slot} of {}", schema.id),
                expected: dim,
                found: x.len(),
            });
        }
    }
    Ok(c.residual_with(|slot| inputs[slot].clone()))
}

enum Node<'a> {
    Var(usize),
    Apply(&'a BilinearOp, Box<Node<'a>>, Box<Node<'a>>),
}

struct Compiled<'a> {
    id: String,
    dims: [usize; 3],
    // rhs terms carry negated coefficients
    terms: Vec<(Rational, Node<'a>)>,
    out_dim: usize,
}

impl<'a> Compiled<'a> {
    fn new<T: OperationTable + ?Sized>(object: &'a T, schema: &IdentitySchema) -> Result<Self> {
        let mut dims = [0; 3];
        for (slot, sort) in schema.slot_sorts.iter().enumerate() {
            dims[slot] = object.sort_dim(*sort).ok_or_else(|| {
                Error::SortMismatch(format!(
                    "{} needs sort {sort}, which this object does not have",
                    schema.id
                ))
            })?;
        }
        let mut out_sort = None;
        let mut terms = Vec::new();
        let sides = schema
            .lhs
            .iter()
            .map(|(c, t)| (c.clone(), t))
            .chain(schema.rhs.iter().map(|(c, t)| (-c.clone(), t)));
        for (coeff, t) in sides {
            let (node, sort) = compile_term(object, &schema.id, t)?;
            match out_sort {
                None => out_sort = Some(sort),
                Some(s) if s != sort => {
                    return Err(Error::SortMismatch(format!(
                        "{}: terms land in different sorts",
                        schema.id
                    )))
                }
                Some(_) => {}
            }
            terms.push((coeff, node));
        }
        let out_sort = out_sort.expect("schemas are non-empty");
        Ok(Compiled {
            id: schema.id.clone(),
            dims,
            terms,
            out_dim: object.sort_dim(out_sort).expect("sort checked above"),
        })
    }

    fn residual_at_basis(&self, idx: [usize; 3]) -> Vector {
        let mut out = Vector::zeros(self.out_dim);
        for (c, node) in &self.terms {
            out.add_scaled(c, &eval_basis(node, &idx, &self.dims));
        }
        out
    }

    fn residual_with(&self, input: impl Fn(usize) -> Vector) -> Vector {
        let mut out = Vector::zeros(self.out_dim);
        for (c, node) in &self.terms {
            out.add_scaled(c, &eval_general(node, &input));
        }
        out
    }
}

fn compile_term<'a, T: OperationTable + ?Sized>(
    object: &'a T,
    id: &str,
    t: &Term,
) -> Result<(Node<'a>, Sort)> {
    match t {
        Term::Var { slot, sort } => Ok((Node::Var(*slot), *sort)),
        Term::Apply { op, left, right } => {
            let typed = object
                .typed_op(op)
                .ok_or_else(|| Error::MissingOperation(op.clone()))?;
            let (l, ls) = compile_term(object, id, left)?;
            let (r, rs) = compile_term(object, id, right)?;
            if ls != typed.left || rs != typed.right {
                return Err(Error::SortMismatch(format!(
                    "{id}: `{op}` expects {}×{}, got {ls}×{rs}",
                    typed.left, typed.right
                )));
            }
            Ok((Node::Apply(typed.op, Box::new(l), Box::new(r)), typed.out))
        }
    }
}

fn eval_basis(node: &Node<'_>, idx: &[usize; 3], dims: &[usize; 3]) -> Vector {
    match node {
        Node::Var(slot) => Vector::basis(dims[*slot], idx[*slot]),
        Node::Apply(op, l, r) => match (l.as_ref(), r.as_ref()) {
            (Node::Var(a), Node::Var(b)) => op.product(idx[*a], idx[*b]).clone(),
            _ => op.eval(&eval_basis(l, idx, dims), &eval_basis(r, idx, dims)),
        },
    }
}

fn eval_general(node: &Node<'_>, input: &impl Fn(usize) -> Vector) -> Vector {
    match node {
        Node::Var(slot) => input(*slot),
        Node::Apply(op, l, r) => op.eval(&eval_general(l, input), &eval_general(r, input)),
    }
}

/// Pairing that sends each split operation of a quadri-dendriform algebra
/// to the dendriform operation it refines.
pub const QUADRI_COLLAPSE: [(&str, &str); 4] = [
    ("prec_dashv", "prec"),
    ("prec_vdash", "prec"),
    ("succ_dashv", "succ"),
    ("succ_vdash", "succ"),
];

/// Checks `f(e_i ∘ e_j) = f(e_i) • f(e_j)` for every paired `(∘, •)` and
/// every source basis pair. The pairing must cover every source operation.
pub fn check_morphism(
    f: &LinearMapSpec,
    source: &AlgebraSpec,
    target: &AlgebraSpec,
    pairing: &[(&str, &str)],
    cap: usize,
) -> Result<ViolationReport> {
    f.expect_shape(source.dimension(), target.dimension(), "morphism")?;
    for (s, t) in pairing {
        if source.operations().get(*s).is_none() {
            return Err(Error::UnknownPairing { op: s.to_string() });
        }
        if target.operations().get(*t).is_none() {
            return Err(Error::UnknownPairing { op: t.to_string() });
        }
    }
    if let Some(missing) = source
        .operations()
        .keys()
        .find(|k| !pairing.iter().any(|(s, _)| s == k))
    {
        return Err(Error::UnknownPairing {
            op: format!("{missing} (unpaired source operation)"),
        });
    }
    let n = source.dimension();
    let images = f.basis_images();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    let mut report = ViolationReport::default();
    for (s, t) in pairing {
        let sop = source.op(s)?;
        let top = target.op(t)?;
        let id = format!("{s}->{t}");
        let failures: Vec<Violation> = pairs
            .par_iter()
            .filter_map(|&(i, j)| {
                let lhs = f.apply(sop.product(i, j)).expect("shape checked");
                let rhs = top.eval(&images[i], &images[j]);
                let r = &lhs - &rhs;
                (!r.is_zero()).then(|| Violation {
                    id: id.clone(),
                    witness: vec![i, j],
                    residual: r,
                })
            })
            .collect();
        report.record(&id, pairs.len(), failures, cap);
    }
    Ok(report)
}

/// `(op, op)` for every operation of `a`.
pub fn identity_pairing(a: &AlgebraSpec) -> Vec<(&str, &str)> {
    a.operations().keys().map(|k| (k.as_str(), k.as_str())).collect()
}
