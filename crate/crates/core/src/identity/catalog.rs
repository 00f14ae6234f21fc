//! Axiom catalogs for each algebraic structure.
//!
//! Schema ids number the axioms within each family. Chains `E1 = E2 = … =
//! Ek` become the consecutive equalities `E1 = E2, E2 = E3, …`, lettered
//! `a, b, …`; in paranoid mode every remaining pair is appended after them.
//! Ids sort in catalog order.

use crate::error::{Error, Result};

use super::term::IdentitySchema;

pub const CATALOG_NAMES: [&str; 8] = [
    "associative",
    "dendriform",
    "diassociative",
    "triassociative",
    "quadri",
    "six",
    "dend-representation",
    "dend-action",
];

/// The schemas of catalog `name`.
pub fn catalog(name: &str) -> Result<Vec<IdentitySchema>> {
    build(name, false)
}

/// Like [`catalog`], but chains contribute every pairwise equality.
pub fn catalog_paranoid(name: &str) -> Result<Vec<IdentitySchema>> {
    build(name, true)
}

fn build(name: &str, paranoid: bool) -> Result<Vec<IdentitySchema>> {
    let mut b = Builder {
        out: Vec::new(),
        paranoid,
    };
    match name {
        "associative" => b.eq("assoc-1", "(x mul y) mul z", "x mul (y mul z)"),
        "dendriform" => dendriform(&mut b),
        "diassociative" => diassociative(&mut b, "diass-"),
        "triassociative" => triassociative(&mut b),
        "quadri" => quadri(&mut b),
        "six" => six(&mut b),
        "dend-representation" => representation(&mut b),
        "dend-action" => action(&mut b),
        other => return Err(Error::UnknownCatalog(other.to_string())),
    }
    Ok(b.out)
}

struct Builder {
    out: Vec<IdentitySchema>,
    paranoid: bool,
}

impl Builder {
    fn eq(&mut self, id: &str, lhs: &str, rhs: &str) {
        let s = IdentitySchema::parse(id, lhs, rhs)
            .unwrap_or_else(|e| panic!("built-in identity {id} is malformed: {e}"));
        self.out.push(s);
    }

    fn chain(&mut self, id: &str, exprs: &[&str]) {
        let mut pairs: Vec<(usize, usize)> = (1..exprs.len()).map(|k| (k - 1, k)).collect();
        if self.paranoid {
            for a in 0..exprs.len() {
                for b in a + 2..exprs.len() {
                    pairs.push((a, b));
                }
            }
        }
        for (n, (a, b)) in pairs.into_iter().enumerate() {
            let letter = (b'a' + n as u8) as char;
            self.eq(&format!("{id}{letter}"), exprs[a], exprs[b]);
        }
    }
}

fn dendriform(b: &mut Builder) {
    b.eq("dend-1", "(x prec y) prec z", "x prec (y prec z) + x prec (y succ z)");
    b.eq("dend-2", "(x succ y) prec z", "x succ (y prec z)");
    b.eq("dend-3", "x succ (y succ z)", "(x prec y) succ z + (x succ y) succ z");
}

fn diassociative(b: &mut Builder, prefix: &str) {
    let width = if prefix == "triass-" { 2 } else { 1 };
    let id = |k: usize| format!("{prefix}{k:0width$}");
    b.eq(&id(1), "(x dashv y) dashv z", "x dashv (y vdash z)");
    b.eq(&id(2), "(x dashv y) dashv z", "x dashv (y dashv z)");
    b.eq(&id(3), "(x vdash y) dashv z", "x vdash (y dashv z)");
    b.eq(&id(4), "(x dashv y) vdash z", "x vdash (y vdash z)");
    b.eq(&id(5), "(x vdash y) vdash z", "x vdash (y vdash z)");
}

fn triassociative(b: &mut Builder) {
    diassociative(b, "triass-");
    b.eq("triass-06", "(x perp y) perp z", "x perp (y perp z)");
    b.eq("triass-07", "(x dashv y) dashv z", "x dashv (y perp z)");
    b.eq("triass-08", "(x perp y) dashv z", "x perp (y dashv z)");
    b.eq("triass-09", "(x dashv y) perp z", "x perp (y vdash z)");
    b.eq("triass-10", "(x vdash y) perp z", "x vdash (y perp z)");
    b.eq("triass-11", "(x perp y) vdash z", "x vdash (y vdash z)");
}

fn quadri(b: &mut Builder) {
    b.chain(
        "quadri-1",
        &[
            "(x prec_vdash y) prec_vdash z",
            "(x prec_dashv y) prec_vdash z",
            "x prec_vdash (y prec_vdash z) + x prec_vdash (y succ_vdash z)",
        ],
    );
    b.chain(
        "quadri-2",
        &[
            "(x succ_vdash y) prec_vdash z",
            "(x succ_dashv y) prec_vdash z",
            "x succ_vdash (y prec_vdash z)",
        ],
    );
    b.chain(
        "quadri-3",
        &[
            "x succ_vdash (y succ_vdash z)",
            "(x prec_vdash y) succ_vdash z + (x succ_vdash y) succ_vdash z",
            "(x prec_dashv y) succ_vdash z + (x succ_dashv y) succ_vdash z",
            "(x prec_vdash y) succ_vdash z + (x succ_dashv y) succ_vdash z",
            "(x prec_dashv y) succ_vdash z + (x succ_vdash y) succ_vdash z",
        ],
    );
    b.eq(
        "quadri-4",
        "(x prec_vdash y) prec_dashv z",
        "x prec_vdash (y prec_dashv z) + x prec_vdash (y succ_dashv z)",
    );
    b.eq(
        "quadri-5",
        "(x succ_vdash y) prec_dashv z",
        "x succ_vdash (y prec_dashv z)",
    );
    b.eq(
        "quadri-6",
        "x succ_vdash (y succ_dashv z)",
        "(x prec_vdash y) succ_dashv z + (x succ_vdash y) succ_dashv z",
    );
    b.chain(
        "quadri-7",
        &[
            "(x prec_dashv y) prec_dashv z",
            "x prec_dashv (y prec_vdash z) + x prec_dashv (y succ_vdash z)",
            "x prec_dashv (y prec_dashv z) + x prec_dashv (y succ_dashv z)",
            "x prec_dashv (y prec_vdash z) + x prec_dashv (y succ_dashv z)",
            "x prec_dashv (y prec_dashv z) + x prec_dashv (y succ_vdash z)",
        ],
    );
    b.chain(
        "quadri-8",
        &[
            "(x succ_dashv y) prec_dashv z",
            "x succ_dashv (y prec_vdash z)",
            "x succ_dashv (y prec_dashv z)",
        ],
    );
    b.chain(
        "quadri-9",
        &[
            "x succ_dashv (y succ_vdash z)",
            "x succ_dashv (y succ_dashv z)",
            "(x prec_dashv y) succ_dashv z + (x succ_dashv y) succ_dashv z",
        ],
    );
}

fn six(b: &mut Builder) {
    // Compatibility of the perp pair with the vdash/dashv quadruple.
    b.eq(
        "six-1.1",
        "(x prec_vdash y) prec_perp z",
        "x prec_vdash (y prec_perp z) + x prec_vdash (y succ_perp z)",
    );
    b.eq("six-1.2", "(x succ_vdash y) prec_perp z", "x succ_vdash (y prec_perp z)");
    b.eq(
        "six-1.3",
        "x succ_vdash (y succ_perp z)",
        "(x prec_vdash y) succ_perp z + (x succ_vdash y) succ_perp z",
    );
    b.eq(
        "six-1.4",
        "(x prec_dashv y) prec_perp z",
        "x prec_perp (y prec_vdash z) + x prec_perp (y succ_vdash z)",
    );
    b.eq("six-1.5", "(x succ_dashv y) prec_perp z", "x succ_perp (y prec_vdash z)");
    b.eq(
        "six-1.6",
        "x succ_perp (y succ_vdash z)",
        "(x prec_dashv y) succ_perp z + (x succ_dashv y) succ_perp z",
    );
    b.eq(
        "six-1.7",
        "(x prec_perp y) prec_dashv z",
        "x prec_perp (y prec_dashv z) + x prec_perp (y succ_dashv z)",
    );
    b.eq("six-1.8", "(x succ_perp y) prec_dashv z", "x succ_perp (y prec_dashv z)");
    b.eq(
        "six-1.9",
        "x succ_perp (y succ_dashv z)",
        "(x prec_perp y) succ_dashv z + (x succ_perp y) succ_dashv z",
    );

    // Left factor: the three splittings agree under a vdash product.
    for (k, (inner, outer)) in [
        ("prec", "prec_vdash"),
        ("succ", "prec_vdash"),
        ("prec", "succ_vdash"),
        ("succ", "succ_vdash"),
    ]
    .into_iter()
    .enumerate()
    {
        let exprs: Vec<String> = ["perp", "vdash", "dashv"]
            .iter()
            .map(|s| format!("(x {inner}_{s} y) {outer} z"))
            .collect();
        let refs: Vec<&str> = exprs.iter().map(String::as_str).collect();
        b.chain(&format!("six-2.{}", k + 1), &refs);
    }

    // Right factor: the three splittings agree under a dashv product.
    for (k, (outer, inner)) in [
        ("prec_dashv", "prec"),
        ("succ_dashv", "prec"),
        ("prec_dashv", "succ"),
        ("succ_dashv", "succ"),
    ]
    .into_iter()
    .enumerate()
    {
        let exprs: Vec<String> = ["perp", "vdash", "dashv"]
            .iter()
            .map(|s| format!("x {outer} (y {inner}_{s} z)"))
            .collect();
        let refs: Vec<&str> = exprs.iter().map(String::as_str).collect();
        b.chain(&format!("six-3.{}", k + 1), &refs);
    }
}

fn representation(b: &mut Builder) {
    b.eq(
        "rep-1",
        "(x prec y) prec_l w",
        "x prec_l (y prec_l w) + x prec_l (y succ_l w)",
    );
    b.eq("rep-2", "(x succ y) prec_l w", "x succ_l (y prec_l w)");
    b.eq(
        "rep-3",
        "x succ_l (y succ_l w)",
        "(x prec y) succ_l w + (x succ y) succ_l w",
    );
    b.eq(
        "rep-4",
        "(x prec_l v) prec_r z",
        "x prec_l (v prec_r z) + x prec_l (v succ_r z)",
    );
    b.eq("rep-5", "(x succ_l v) prec_r z", "x succ_l (v prec_r z)");
    b.eq(
        "rep-6",
        "x succ_l (v succ_r z)",
        "(x prec_l v) succ_r z + (x succ_l v) succ_r z",
    );
    b.eq(
        "rep-7",
        "(u prec_r y) prec_r z",
        "u prec_r (y prec z) + u prec_r (y succ z)",
    );
    b.eq("rep-8", "(u succ_r y) prec_r z", "u succ_r (y prec z)");
    b.eq(
        "rep-9",
        "u succ_r (y succ z)",
        "(u prec_r y) succ_r z + (u succ_r y) succ_r z",
    );
}

/// The target algebra's own products are `prec_t` / `succ_t`.
fn action(b: &mut Builder) {
    b.eq(
        "act-1",
        "(x prec_l v) prec_t w",
        "x prec_l (v prec_t w) + x prec_l (v succ_t w)",
    );
    b.eq("act-2", "(x succ_l v) prec_t w", "x succ_l (v prec_t w)");
    b.eq(
        "act-3",
        "x succ_l (v succ_t w)",
        "(x prec_l v) succ_t w + (x succ_l v) succ_t w",
    );
    b.eq(
        "act-4",
        "(u prec_r y) prec_t w",
        "u prec_t (y prec_l w) + u prec_t (y succ_l w)",
    );
    b.eq("act-5", "(u succ_r y) prec_t w", "u succ_t (y prec_l w)");
    b.eq(
        "act-6",
        "u succ_t (y succ_l w)",
        "(u prec_r y) succ_t w + (u succ_r y) succ_t w",
    );
    b.eq(
        "act-7",
        "(u prec_t v) prec_r z",
        "u prec_t (v prec_r z) + u prec_t (v succ_r z)",
    );
    b.eq("act-8", "(u succ_t v) prec_r z", "u succ_t (v prec_r z)");
    b.eq(
        "act-9",
        "u succ_t (v succ_r z)",
        "(u prec_t v) succ_r z + (u succ_t v) succ_r z",
    );
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_sizes() {
        let expected = [
            ("associative", 1),
            ("dendriform", 3),
            ("diassociative", 5),
            ("triassociative", 11),
            ("quadri", 19),
            ("six", 25),
            ("dend-representation", 9),
            ("dend-action", 9),
        ];
        for (name, n) in expected {
            assert_eq!(catalog(name).unwrap().len(), n, "{name}");
        }
    }

    #[test]
    fn paranoid_adds_redundant_chain_pairs() {
        // 5-term chains gain C(5,2) - 4 = 6 pairs, 3-term chains gain 1.
        assert_eq!(catalog_paranoid("quadri").unwrap().len(), 19 + 6 + 6 + 4);
        assert_eq!(catalog_paranoid("six").unwrap().len(), 25 + 8);
        assert_eq!(catalog_paranoid("dendriform").unwrap().len(), 3);
    }

    #[test]
    fn ids_are_unique_and_sorted() {
        for name in CATALOG_NAMES {
            let ids: Vec<String> = catalog(name).unwrap().into_iter().map(|s| s.id).collect();
            let mut sorted = ids.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(ids, sorted, "{name}");
        }
    }

    #[test]
    fn unknown_catalog() {
        assert!(matches!(catalog("lie"), Err(Error::UnknownCatalog(_))));
    }
}
