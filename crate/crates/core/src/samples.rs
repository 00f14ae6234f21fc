//! Small standard instances used by tests, the CLI fixtures and the
//! Python bindings.

use crate::algebra::{AlgebraSpec, BilinearOp, LinearMapSpec, Signature};
use crate::constructions::aguiar_dendriform;
use crate::error::Result;
use crate::linalg::{ratio, Matrix, Vector};

/// `span(x, x², …, x^N)` with `x^i · x^j = x^{i+j}`, truncated above
/// degree `N`. Basis index `k` is the monomial of degree `k + 1`.
pub fn truncated_polynomials(degree: usize) -> AlgebraSpec {
    let n = degree;
    let mul = BilinearOp::from_fn(n, n, n, |i, j| {
        let d = (i + 1) + (j + 1);
        if d <= n {
            Vector::basis(n, d - 1)
        } else {
            Vector::zeros(n)
        }
    });
    let labels = (1..=n).map(|d| format!("x^{d}")).collect();
    AlgebraSpec::from_ops(n, Signature::Associative, [("mul", mul)])
        .and_then(|a| a.with_basis_labels(labels))
        .expect("truncated product is well formed")
}

/// Formal integration `x^d ↦ x^{d+1} / (d+1)`, zero on the top degree.
pub fn integration_map(degree: usize) -> LinearMapSpec {
    let n = degree;
    let mut m = Matrix::zeros(n, n);
    for k in 0..n.saturating_sub(1) {
        let d = (k + 1) as i64;
        m.set(k + 1, k, ratio(1, d + 1));
    }
    LinearMapSpec::new(m)
}

/// The dendriform algebra obtained from [`truncated_polynomials`] and
/// [`integration_map`] at degree 4.
pub fn polynomial_dendriform() -> Result<AlgebraSpec> {
    let d = aguiar_dendriform(&truncated_polynomials(4), &integration_map(4))?;
    let labels = truncated_polynomials(4).basis_labels().map(<[String]>::to_vec);
    match labels {
        Some(l) => d.with_basis_labels(l),
        None => Ok(d),
    }
}

/// The one-dimensional algebra `e≺e = a·e`, `e≻e = b·e`.
pub fn one_dim_dendriform(a: i64, b: i64) -> AlgebraSpec {
    AlgebraSpec::from_ops(
        1,
        Signature::Dendriform,
        [
            ("prec", BilinearOp::new(1, 1, 1, vec![Vector::from_ints(&[a])]).expect("1×1")),
            ("succ", BilinearOp::new(1, 1, 1, vec![Vector::from_ints(&[b])]).expect("1×1")),
        ],
    )
    .expect("one-dimensional algebra is well formed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    #[test]
    fn x_times_x_is_x_squared() {
        let a = truncated_polynomials(4);
        assert_eq!(a.op("mul").unwrap().product(0, 0), &Vector::basis(4, 1));
        assert!(a.op("mul").unwrap().product(1, 2).is_zero());
    }

    #[test]
    fn integration_matrix() {
        let r = integration_map(4);
        assert_eq!(r.apply(&Vector::basis(4, 0)).unwrap()[1], ratio(1, 2));
        assert_eq!(r.apply(&Vector::basis(4, 2)).unwrap()[3], ratio(1, 4));
        assert!(r.apply(&Vector::basis(4, 3)).unwrap().is_zero());
    }

    #[test]
    fn polynomial_dendriform_products() {
        let d = polynomial_dendriform().unwrap();
        let prec = d.op("prec").unwrap();
        // x ≺ x = x · x²/2
        assert_eq!(prec.product(0, 0), &Vector::from(vec![int(0), int(0), ratio(1, 2), int(0)]));
        // x ≺ x² = x · x³/3, x² ≺ x = x² · x²/2
        assert_eq!(prec.product(0, 1)[3], ratio(1, 3));
        assert_eq!(prec.product(1, 0)[3], ratio(1, 2));
        let succ = d.op("succ").unwrap();
        assert_eq!(succ.product(1, 0)[3], ratio(1, 3));
    }
}
