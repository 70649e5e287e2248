use num_bigint::BigInt;
use num_traits::{One, Zero};
use orthology_core::constructions::{
    circum_pedal_triangle, circumcenter, circumcircle, complementary_triangle, orthocenter,
};
use orthology_core::doc::PairDocument;
use orthology_core::homology::{connecting_lines, homology_perspector, is_homological};
use orthology_core::orthology::{
    cyclic_deficit_sum, deficit, deficit_at, drift, generate_orthologic_pair, orthology_center,
    orthology_spectrum, pencil_concurrent, perpendicular_pencil,
};
use orthology_core::space3d::{deficit3, embed_triangle, Point3, Triangle3};
use orthology_core::*;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn big_rational() -> impl Strategy<Value = Rational> {
    (
        any::<i128>(),
        any::<u64>().prop_filter("nonzero", |d| *d != 0),
    )
        .prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

fn point() -> impl Strategy<Value = Point2> {
    (rational(), rational()).prop_map(|(x, y)| Point2::new(x, y))
}

fn point3() -> impl Strategy<Value = Point3> {
    (rational(), rational(), rational()).prop_map(|(x, y, z)| Point3::new(x, y, z))
}

fn triangle() -> impl Strategy<Value = Triangle2> {
    (point(), point(), point())
        .prop_filter_map("collinear", |(a, b, c)| Triangle2::new(a, b, c).ok())
}

fn triangle3() -> impl Strategy<Value = Triangle3> {
    (point3(), point3(), point3())
        .prop_filter_map("collinear", |(a, b, c)| Triangle3::new(a, b, c).ok())
}

fn pair() -> impl Strategy<Value = TrianglePair> {
    (triangle(), triangle()).prop_map(|(t1, t2)| TrianglePair::new(t1, t2))
}

fn correspondence() -> impl Strategy<Value = Correspondence> {
    prop::sample::select(Correspondence::ALL.to_vec())
}

fn line() -> impl Strategy<Value = Line2> {
    (point(), point()).prop_filter_map("coincident", |(p, q)| line_through(&p, &q).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn rational_arithmetic_is_exact(a in big_rational(), b in big_rational()) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!(&(&a * &b) / &b, a.clone());
        }
        prop_assert_eq!(parse_rational(&format_rational(&a)).unwrap(), a);
    }

    #[test]
    fn canonical_lines_match_point_sets(p in point(), q in point(), k in rational()) {
        prop_assume!(p != q && !k.is_zero());
        let l = line_through(&p, &q).unwrap();
        let [a, b, c] = l.coefficients();
        let scaled = Line2::new(a * &k, b * &k, c * &k).unwrap();
        prop_assert_eq!(&scaled, &l);
        let r = Point2::new(&p.x * &k + &q.x * (Rational::one() - &k), &p.y * &k + &q.y * (Rational::one() - &k));
        let through_q_r = if r != q { line_through(&q, &r).unwrap() } else { line_through(&p, &q).unwrap() };
        prop_assert_eq!(through_q_r, l);
    }

    #[test]
    fn intersections_satisfy_both_lines(l1 in line(), l2 in line()) {
        match intersect_lines(&l1, &l2) {
            Intersection::Point(h) => {
                prop_assert!(l1.contains_h(&h) && l2.contains_h(&h));
                if let Some(p) = h.to_point() {
                    prop_assert!(l1.eval(&p).is_zero() && l2.eval(&p).is_zero());
                }
            }
            Intersection::Coincident => prop_assert_eq!(l1, l2),
        }
    }

    #[test]
    fn concurrency_matches_intersection(l1 in line(), l2 in line(), l3 in line()) {
        if let Intersection::Point(h) = intersect_lines(&l1, &l2) {
            if let Some(p) = h.to_point() {
                prop_assert_eq!(concurrent(&l1, &l2, &l3).unwrap(), l3.contains(&p));
            }
        }
    }

    #[test]
    fn deficit_is_independent_of_m(p in pair(), c in correspondence(), m in point(), n in point()) {
        prop_assert!(drift(&p, c, &m, &n).is_zero());
        prop_assert_eq!(deficit_at(&p, c, &m), deficit(&p, c));
    }

    #[test]
    fn swap_flips_deficit_by_sign(p in pair(), c in correspondence()) {
        let sign = Rational::from_integer(c.sign().into());
        prop_assert_eq!(deficit(&p.swapped(), c.inverse()), -(sign * deficit(&p, c)));
        prop_assert_eq!(
            orthology_spectrum(&p.swapped()).entry(c.inverse()).orthologic,
            orthology_spectrum(&p).entry(c).orthologic
        );
    }

    #[test]
    fn cyclic_sum_vanishes(p in pair(), m in point()) {
        prop_assert!(cyclic_deficit_sum(&p, &m).is_zero());
    }

    #[test]
    fn oracles_agree(p in pair(), c in correspondence()) {
        if let Ok(lines) = perpendicular_pencil(&p, c) {
            let distinct = lines[0] != lines[1] && lines[1] != lines[2] && lines[0] != lines[2];
            if distinct {
                prop_assert_eq!(pencil_concurrent(&p, c).unwrap(), deficit(&p, c).is_zero());
            }
        }
    }

    #[test]
    fn constructed_pairs_have_centers_on_the_pencil(t in triangle(), seed in any::<u64>(), c in correspondence()) {
        let other = if c == Correspondence::S0 { Correspondence::S1 } else { Correspondence::S0 };
        let Ok(p) = generate_orthologic_pair(&t, [c, other], seed) else {
            return Ok(());
        };
        prop_assert!(deficit(&p, c).is_zero() && deficit(&p, other).is_zero());
        if let Ok(h) = orthology_center(&p, c) {
            for l in perpendicular_pencil(&p, c).unwrap() {
                prop_assert!(l.contains_h(&h));
            }
        }
    }

    #[test]
    fn reflexive_center_is_orthocenter(t in triangle()) {
        let p = TrianglePair::new(t.clone(), t.clone());
        prop_assert!(deficit(&p, Correspondence::S0).is_zero());
        prop_assert_eq!(orthology_center(&p, Correspondence::S0).unwrap(), HPoint::finite(orthocenter(&t)));
    }

    #[test]
    fn medial_centers(t in triangle()) {
        let m = complementary_triangle(&t);
        let fwd = TrianglePair::new(t.clone(), m.clone());
        let rev = TrianglePair::new(m, t.clone());
        prop_assert_eq!(orthology_center(&fwd, Correspondence::S0).unwrap(), HPoint::finite(orthocenter(&t)));
        prop_assert_eq!(orthology_center(&rev, Correspondence::S0).unwrap(), HPoint::finite(circumcenter(&t)));
        prop_assert_eq!(
            homology_perspector(&fwd, Correspondence::S0).unwrap(),
            HPoint::finite(t.centroid())
        );
    }

    #[test]
    fn circum_pedal_lies_on_circle(t in triangle(), u in 1i64..20, v in 1i64..20, w in 1i64..20) {
        let s = Rational::from_integer((u + v + w).into());
        let [a, b, c] = t.vertices();
        let wt = |k: i64| Rational::from_integer(k.into()) / &s;
        let d = Point2::new(
            &a.x * wt(u) + &b.x * wt(v) + &c.x * wt(w),
            &a.y * wt(u) + &b.y * wt(v) + &c.y * wt(w),
        );
        let circle = circumcircle(&t);
        for q in circum_pedal_triangle(&t, &d).unwrap().vertices() {
            prop_assert!(circle.contains(q));
        }
    }

    #[test]
    fn homology_is_symmetric_under_swap(p in pair(), c in correspondence()) {
        prop_assert_eq!(is_homological(&p, c), is_homological(&p.swapped(), c.inverse()));
        if let Ok(h) = homology_perspector(&p, c) {
            for l in connecting_lines(&p, c).unwrap() {
                prop_assert!(l.contains_h(&h));
            }
        }
    }

    #[test]
    fn homology_determinant_matches_intersection(p in pair(), c in correspondence()) {
        if let Ok([l1, l2, l3]) = connecting_lines(&p, c) {
            if let Intersection::Point(h) = intersect_lines(&l1, &l2) {
                if let Some(q) = h.to_point() {
                    prop_assert_eq!(is_homological(&p, c).unwrap(), l3.contains(&q));
                }
            }
        }
    }

    #[test]
    fn deficit3_identities(t1 in triangle3(), t2 in triangle3(), m in point3(), n in point3(), c in correspondence()) {
        prop_assert_eq!(deficit3(&t1, &t2, c, &m), deficit3(&t1, &t2, c, &n));
        let sum = Correspondence::CYCLIC
            .iter()
            .fold(Rational::zero(), |acc, &s| acc + deficit3(&t1, &t2, s, &m));
        prop_assert!(sum.is_zero());
    }

    #[test]
    fn embedding_reproduces_planar_deficit(p in pair(), c in correspondence()) {
        let d3 = deficit3(&embed_triangle(&p.t1), &embed_triangle(&p.t2), c, &Point3::origin());
        prop_assert_eq!(d3, deficit(&p, c));
    }

    #[test]
    fn pair_document_round_trip(p in pair()) {
        let doc = PairDocument::from_pair(&p, None);
        let text = doc.to_json();
        let back = PairDocument::parse(&text).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(back.to_pair().unwrap(), p);
        prop_assert_eq!(PairDocument::parse(&back.to_json()).unwrap().to_json(), text);
    }
}
