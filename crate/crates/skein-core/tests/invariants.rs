//! Cross-module property suite on randomized diagrams: the skein relation
//! of `P` and the four-term relation of `Lambda` at every crossing, mirror
//! conjugacy, the `P(l, -l-l^-1) = 1` identity, the m-degree window, and
//! the structural Seifert invariants.

use num_rational::BigRational;
use num_traits::One;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use skein_core::diagram::{connected_sum, parse_braid, seifert, Diagram, Sign};
use skein_core::homfly::{homfly, skein_triple};
use skein_core::kauffman::{kauffman_quad, lambda};
use skein_core::poly::Var;

fn random_braid(rng: &mut StdRng, max_crossings: usize) -> Diagram {
    let gens = rng.random_range(1..=3u32);
    let len = rng.random_range(1..=max_crossings);
    let word: Vec<String> = (0..len)
        .map(|_| {
            let g = rng.random_range(1..=gens) as i32;
            let s = if rng.random_bool(0.5) { g } else { -g };
            s.to_string()
        })
        .collect();
    parse_braid(&word.join(" ")).unwrap()
}

fn sample(count: usize, max_crossings: usize) -> Vec<Diagram> {
    let mut rng = StdRng::seed_from_u64(0x5ce1);
    (0..count).map(|_| random_braid(&mut rng, max_crossings)).collect()
}

#[test]
fn homfly_skein_relation_at_every_crossing() {
    for d in sample(200, 8) {
        let p = homfly(&d).unwrap();
        for x in 0..d.crossing_count() {
            let (sw, sm) = skein_triple(&d, x).unwrap();
            let psw = homfly(&sw).unwrap();
            let psm = homfly(&sm).unwrap();
            // l^-1 P(L+) + l P(L-) + m P(L0) = 0
            let (pos, neg) = match d.crossings()[x].sign {
                Sign::Pos => (&p, &psw),
                Sign::Neg => (&psw, &p),
            };
            let lhs = &(&pos.shift(-1, 0) + &neg.shift(1, 0)) + &psm.shift(0, 1);
            assert!(lhs.is_zero(), "skein relation failed at crossing {x}");
        }
    }
}

#[test]
fn kauffman_relation_at_every_crossing() {
    for d in sample(200, 8) {
        let l = lambda(&d).unwrap();
        for x in 0..d.crossing_count() {
            let (sw, sa, sb) = kauffman_quad(&d, x).unwrap();
            let lhs = &l + &lambda(&sw).unwrap();
            let rhs = (&lambda(&sa).unwrap() + &lambda(&sb).unwrap()).shift(0, 1);
            assert_eq!(lhs, rhs, "four-term relation failed at crossing {x}");
        }
    }
}

#[test]
fn mirror_conjugates_both_polynomials() {
    for d in sample(60, 8) {
        let m = d.mirror();
        assert_eq!(
            homfly(&m).unwrap(),
            homfly(&d).unwrap().conjugate_l(),
            "P mirror"
        );
        let f = skein_core::kauffman::kauffman(&d).unwrap();
        let fm = skein_core::kauffman::kauffman(&m).unwrap();
        assert_eq!(fm, f.conjugate_var(Var::First), "F mirror");
    }
}

#[test]
fn identity_on_random_knots() {
    let points: Vec<BigRational> = vec![
        BigRational::from_integer(2.into()),
        BigRational::from_integer(3.into()),
        BigRational::new((-5).into(), 2.into()),
    ];
    let mut checked = 0;
    for d in sample(150, 8) {
        if !d.is_knot() {
            continue;
        }
        let p = homfly(&d).unwrap();
        for l0 in &points {
            let m0 = -(l0 + l0.recip());
            assert_eq!(p.eval_rational(l0, &m0).unwrap(), BigRational::one());
        }
        checked += 1;
    }
    assert!(checked > 30, "sample produced too few knots ({checked})");
}

#[test]
fn morton_window_on_random_knots() {
    for d in sample(150, 8) {
        if !d.is_knot() {
            continue;
        }
        let g = seifert(&d).genus;
        let p = homfly(&d).unwrap();
        let dm = p.degrees(Var::Second).unwrap();
        assert!(dm.min >= 0, "negative m-degree on a knot");
        assert!(i64::from(dm.max) <= 2 * g, "m-degree exceeds 2 g(D)");
        // some l-coefficient with |p| <= 2 g(D) is nonzero
        let dl = p.degrees(Var::First).unwrap();
        let within = (dl.min..=dl.max)
            .any(|e| i64::from(e.abs()) <= 2 * g && !p.coeff_in_var(Var::First, e).is_zero());
        assert!(within, "no l-exponent within the 2g window");
    }
}

#[test]
fn seifert_structure_on_random_diagrams() {
    for d in sample(150, 8) {
        let s = seifert(&d);
        if d.is_knot() {
            let c = d.crossing_count() as i64;
            assert_eq!((c - s.s as i64 + 1) % 2, 0, "c - s + 1 must be even");
            assert!(s.genus >= 0);
        }
        // blocks partition the crossings
        let mut all: Vec<usize> = s.blocks.iter().flatten().copied().collect();
        all.sort_unstable();
        let expect: Vec<usize> = (0..d.crossing_count()).collect();
        assert_eq!(all, expect);
        // mirror preserves circles and genus, negates writhe
        let sm = seifert(&d.mirror());
        assert_eq!(sm.s, s.s);
        assert_eq!(sm.genus, s.genus);
        assert_eq!(sm.writhe, -s.writhe);
        assert_eq!(sm.homogeneous, s.homogeneous);
    }
}

#[test]
fn connected_sum_multiplies_p() {
    let mut rng = StdRng::seed_from_u64(0xadd);
    for _ in 0..25 {
        let d1 = random_braid(&mut rng, 5);
        let d2 = random_braid(&mut rng, 5);
        let sum = connected_sum(&d1, &d2);
        assert_eq!(
            homfly(&sum).unwrap(),
            &homfly(&d1).unwrap() * &homfly(&d2).unwrap()
        );
    }
}

#[test]
fn presentations_of_the_trefoil_agree() {
    let reference = homfly(&parse_braid("1 1 1").unwrap()).unwrap();
    let pd = skein_core::diagram::parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]").unwrap();
    assert_eq!(homfly(&pd).unwrap(), reference);
    let gauss = skein_core::diagram::parse_gauss("1 -2 3 -1 2 -3").unwrap();
    let pg = homfly(&gauss).unwrap();
    assert!(pg == reference || pg == reference.conjugate_l());
    let dt = skein_core::diagram::parse_dt("4 6 2").unwrap();
    let pdt = homfly(&dt).unwrap();
    assert!(pdt == reference || pdt == reference.conjugate_l());
}

#[test]
fn canonical_code_same_for_isomorphic_random_diagrams() {
    // relabeling edges must not change the code; mirroring must
    let mut rng = StdRng::seed_from_u64(0xc0de);
    for _ in 0..40 {
        let d = random_braid(&mut rng, 7);
        let n = d.edge_count();
        if n == 0 {
            continue;
        }
        let shift = rng.random_range(1..n.max(2));
        let relabel = |e: u32| (e + shift) % n;
        let crossings = d
            .crossings()
            .iter()
            .map(|c| skein_core::diagram::Crossing {
                sign: c.sign,
                under_in: relabel(c.under_in),
                under_out: relabel(c.under_out),
                over_in: relabel(c.over_in),
                over_out: relabel(c.over_out),
            })
            .collect();
        let d2 = Diagram::new(crossings, d.extra_loops()).unwrap();
        assert_eq!(d.canonical_code(), d2.canonical_code());
        // the Seifert picture is label-independent too
        let (s1, s2) = (seifert(&d), seifert(&d2));
        assert_eq!(s1.s, s2.s);
        assert_eq!(s1.genus, s2.genus);
        assert_eq!(s1.homogeneous, s2.homogeneous);
    }
}

#[test]
fn unlink_values_from_kinked_presentations() {
    // closing k-strand identity-with-one-crossing braids yields unlinks
    let u2 = parse_braid("1 -1").unwrap();
    assert_eq!(u2.component_count(), 2);
    assert_eq!(
        homfly(&u2).unwrap(),
        skein_core::homfly::unlink_value(2)
    );
    let u4 = parse_braid("1 -1 3 -3").unwrap();
    assert_eq!(u4.component_count(), 4);
    assert_eq!(homfly(&u4).unwrap(), skein_core::homfly::unlink_value(4));
}
