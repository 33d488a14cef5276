//! Per-family coefficient identities: the number of oracle heaps a family
//! label receives at each length must equal the coefficient of the series
//! term that family contributes to the generating function. This checks each
//! functional-equation ingredient in isolation rather than only in the
//! aggregate sum.

use std::collections::BTreeMap;
use std::ops::Mul as _;

use fcx_core::genfun::{zz_btilde, zz_dtilde};
use fcx_core::series::{walk_series, QPoly};
use fcx_core::{
    build_graph, classify_bd, classify_ctilde, fc_elements, FiveFamily, TypeSpec,
};

fn family_counts_ctilde(n: usize, maxlen: usize) -> BTreeMap<FiveFamily, Vec<i64>> {
    let g = build_graph(TypeSpec::parse(&format!("Ctilde:{n}")).unwrap()).unwrap();
    let mut out: BTreeMap<FiveFamily, Vec<i64>> = BTreeMap::new();
    for f in [
        FiveFamily::Alt,
        FiveFamily::Zz,
        FiveFamily::Lp,
        FiveFamily::Rp,
        FiveFamily::Lrp,
    ] {
        out.insert(f, vec![0; maxlen + 1]);
    }
    for e in fc_elements(&g, maxlen) {
        let label = classify_ctilde(&g, &e.heap).unwrap();
        out.get_mut(&label.family).unwrap()[e.len] += 1;
    }
    out
}

#[test]
fn ctilde_family_counts_match_series_terms() {
    for n in [2usize, 3, 4] {
        let maxlen = 14;
        let counts = family_counts_ctilde(n, maxlen);
        let ws = walk_series(n, maxlen);
        let (g, g_star) = ws.touch_free_pair();
        let (lp, lrp) = ws.peak_pair();
        // alternating heaps: q^{n+1} G_n/(1-q^{n+1}) + G*_n
        let alt = g.term(n).shift_q(n + 1).mul(&QPoly::geometric(n + 1, maxlen)) + g_star.term(n);
        assert_eq!(counts[&FiveFamily::Alt], alt.coeffs(), "ALT n={n}");
        // zigzags: (2n-2) q^{2n+1} + 2n q^{2n+2}/(1-q)
        let zz = QPoly::monomial(2 * n + 1, 2 * n as i64 - 2, maxlen)
            + &QPoly::monomial(2 * n + 2, 2 * n as i64, maxlen).mul(&QPoly::geometric(1, maxlen));
        assert_eq!(counts[&FiveFamily::Zz], zz.coeffs(), "ZZ n={n}");
        assert_eq!(counts[&FiveFamily::Lp], lp.term(n).coeffs(), "LP n={n}");
        assert_eq!(counts[&FiveFamily::Rp], lp.term(n).coeffs(), "RP n={n}");
        assert_eq!(counts[&FiveFamily::Lrp], lrp.term(n).coeffs(), "LRP n={n}");
    }
}

fn family_counts_bd(spec: &str, n: usize, maxlen: usize) -> BTreeMap<FiveFamily, Vec<i64>> {
    let g = build_graph(TypeSpec::parse(spec).unwrap()).unwrap();
    let cg = build_graph(TypeSpec::parse(&format!("Ctilde:{n}")).unwrap()).unwrap();
    let mut out: BTreeMap<FiveFamily, Vec<i64>> = BTreeMap::new();
    for f in [
        FiveFamily::Alt,
        FiveFamily::Zz,
        FiveFamily::Lp,
        FiveFamily::Rp,
        FiveFamily::Lrp,
    ] {
        out.insert(f, vec![0; maxlen + 1]);
    }
    for e in fc_elements(&g, maxlen) {
        let (label, _) = classify_bd(&g, &e.heap, &cg).unwrap();
        out.get_mut(&label.family).unwrap()[e.len] += 1;
    }
    out
}

#[test]
fn btilde_family_counts_match_series_terms() {
    for (n, maxlen) in [(2usize, 14), (3usize, 12)] {
        let counts = family_counts_bd(&format!("Btilde:{}", n + 1), n, maxlen);
        let ws = walk_series(n, maxlen);
        let (g, _) = ws.touch_free_pair();
        let (lp, lrp) = ws.peak_pair();
        let (t, rpd, _) = ws.fork_triple();
        let alt = g
            .term(n)
            .shift_q(n + 1)
            .scaled(2)
            .mul(&QPoly::geometric(n + 1, maxlen))
            + t.term(n);
        assert_eq!(counts[&FiveFamily::Alt], alt.coeffs(), "ALT_B n={n}");
        assert_eq!(
            counts[&FiveFamily::Zz],
            zz_btilde(n, maxlen).coeffs(),
            "ZZ_B n={n}"
        );
        assert_eq!(
            counts[&FiveFamily::Lp],
            lp.term(n).shift_q(1).coeffs(),
            "LP_B n={n}"
        );
        assert_eq!(
            counts[&FiveFamily::Lrp],
            lrp.term(n).shift_q(1).coeffs(),
            "LRP_B n={n}"
        );
        assert_eq!(counts[&FiveFamily::Rp], rpd.term(n).coeffs(), "RP_B n={n}");
    }
}

#[test]
fn dtilde_family_counts_match_series_terms() {
    for (n, maxlen) in [(2usize, 14), (3usize, 12)] {
        let counts = family_counts_bd(&format!("Dtilde:{}", n + 2), n, maxlen);
        let ws = walk_series(n, maxlen);
        let (g, _) = ws.touch_free_pair();
        let (_, lrp) = ws.peak_pair();
        let (_, rpd, u) = ws.fork_triple();
        let alt = g
            .term(n)
            .shift_q(n + 1)
            .scaled(4)
            .mul(&QPoly::geometric(n + 1, maxlen))
            + u.term(n);
        assert_eq!(counts[&FiveFamily::Alt], alt.coeffs(), "ALT_D n={n}");
        assert_eq!(
            counts[&FiveFamily::Zz],
            zz_dtilde(n, maxlen).coeffs(),
            "ZZ_D n={n}"
        );
        // both single peaks substitute one forced end and one free end
        assert_eq!(
            counts[&FiveFamily::Lp],
            rpd.term(n).shift_q(1).coeffs(),
            "LP_D n={n}"
        );
        assert_eq!(
            counts[&FiveFamily::Rp],
            rpd.term(n).shift_q(1).coeffs(),
            "RP_D n={n}"
        );
        assert_eq!(
            counts[&FiveFamily::Lrp],
            lrp.term(n).shift_q(2).coeffs(),
            "LRP_D n={n}"
        );
    }
}
