//! Independent polynomial arithmetic checked against the matrix engine.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use splitalg::algebra::LinearMapSpec;
use splitalg::linalg::{ratio, Matrix, Rational, Vector};
use splitalg::operators::{check_assoc_averaging, check_rota_baxter};
use splitalg::samples::{integration_map, truncated_polynomials};

const N: usize = 4;

/// Coefficients by degree, `0..=N`; degree 0 is always zero here.
type Poly = Vec<Rational>;

fn mul(p: &Poly, q: &Poly) -> Poly {
    let mut out = vec![Rational::zero(); N + 1];
    for (i, a) in p.iter().enumerate() {
        for (j, b) in q.iter().enumerate() {
            if i + j <= N {
                out[i + j] += a * b;
            }
        }
    }
    out
}

fn monomial(d: usize) -> Poly {
    let mut p = vec![Rational::zero(); N + 1];
    p[d] = ratio(1, 1);
    p
}

/// Applies a map given by its images of `x, …, x^N`.
fn apply(images: &[Poly], p: &Poly) -> Poly {
    let mut out = vec![Rational::zero(); N + 1];
    for (d, c) in p.iter().enumerate().skip(1) {
        for (k, v) in images[d - 1].iter().enumerate() {
            out[k] += c * v;
        }
    }
    out
}

fn integrate(p: &Poly) -> Poly {
    let mut out = vec![Rational::zero(); N + 1];
    for d in 1..N {
        out[d + 1] = &p[d] / ratio(d as i64 + 1, 1);
    }
    out
}

fn add(p: &Poly, q: &Poly) -> Poly {
    p.iter().zip(q).map(|(a, b)| a + b).collect()
}

fn images_of(m: &LinearMapSpec) -> Vec<Poly> {
    (0..N)
        .map(|k| {
            let col = m.apply(&Vector::basis(N, k)).unwrap();
            std::iter::once(Rational::zero()).chain(col.entries().iter().cloned()).collect()
        })
        .collect()
}

fn oracle_rota_baxter(images: &[Poly]) -> bool {
    (1..=N).all(|i| {
        (1..=N).all(|j| {
            let (a, b) = (monomial(i), monomial(j));
            let (ra, rb) = (apply(images, &a), apply(images, &b));
            mul(&ra, &rb) == apply(images, &add(&mul(&ra, &b), &mul(&a, &rb)))
        })
    })
}

fn oracle_averaging(images: &[Poly]) -> bool {
    (1..=N).all(|i| {
        (1..=N).all(|j| {
            let (a, b) = (monomial(i), monomial(j));
            let (ha, hb) = (apply(images, &a), apply(images, &b));
            let lhs = mul(&ha, &hb);
            lhs == apply(images, &mul(&ha, &b)) && lhs == apply(images, &mul(&a, &hb))
        })
    })
}

#[test]
fn integration_matrix_matches_formal_integral() {
    let images = images_of(&integration_map(N));
    for d in 1..=N {
        assert_eq!(images[d - 1], integrate(&monomial(d)));
    }
}

#[test]
fn integration_is_rota_baxter_in_both_oracles() {
    let r = integration_map(N);
    assert!(oracle_rota_baxter(&images_of(&r)));
    assert!(check_rota_baxter(&truncated_polynomials(N), &r).unwrap().passed());
}

#[test]
fn random_maps_agree_with_oracle() {
    let a = truncated_polynomials(N);
    let mut rng = ChaCha8Rng::seed_from_u64(0xfeed);
    let (mut rb, mut av) = (0, 0);
    for trial in 0..300 {
        // strictly lower triangular maps hit both verdicts often
        let mut m = Matrix::zeros(N, N);
        for r in 0..N {
            for c in 0..r {
                if rng.gen_bool(0.4) {
                    m.set(r, c, ratio(rng.gen_range(-2..=2), rng.gen_range(1..=2)));
                }
            }
        }
        if trial % 3 == 0 {
            m = integration_map(N).matrix().clone();
            let (r, c) = (rng.gen_range(1..N), rng.gen_range(0..N));
            m.set(r, c, ratio(rng.gen_range(-1..=1), 1));
        }
        let map = LinearMapSpec::new(m);
        let images = images_of(&map);
        let expected = oracle_rota_baxter(&images);
        assert_eq!(check_rota_baxter(&a, &map).unwrap().passed(), expected, "rota-baxter on {map:?}");
        rb += expected as usize;
        let expected = oracle_averaging(&images);
        assert_eq!(check_assoc_averaging(&a, &map).unwrap().passed(), expected, "averaging on {map:?}");
        av += expected as usize;
    }
    assert!(rb > 0 && rb < 300, "rota-baxter sample is one-sided: {rb}");
    assert!(av > 0 && av < 300, "averaging sample is one-sided: {av}");
}
