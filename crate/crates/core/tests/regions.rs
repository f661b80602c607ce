mod common;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tropnet::acceptance::gen;
use tropnet::oracle::{exact_region_count, exact_sign_components, grid_region_count, GridBox, PlFunction, Schedule};
use tropnet::polytope::dual_subdivision;
use tropnet::rational::int;
use tropnet::regions::{decision_boundary, hypersurface, poly_region_count, CurveEdge};
use tropnet::tropical::TropicalPolynomial;

fn plane_polynomial() -> impl Strategy<Value = TropicalPolynomial> {
    common::polynomial(2, 8, 2, 4)
}

/// Upper-hull duality against both oracles on 60 seeded polynomials. The
/// polygon oracle is exact and must always agree. The grid oracle can settle
/// before it resolves a region thinner than a cell, so it must match on at
/// least 50 and never count more regions than there are.
#[test]
fn region_count_matches_oracles() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let bbox = GridBox::square(int(20)).unwrap();
    let mut grid_matches = 0;
    for _ in 0..60 {
        let terms = rng.gen_range(1..=8);
        let mut f = TropicalPolynomial::bottom(2);
        for _ in 0..terms {
            let e = vec![rng.gen_range(0..=2), rng.gen_range(0..=2)];
            f = f.add(&TropicalPolynomial::monomial(gen::rational(&mut rng, 4, 2), e)).unwrap();
        }
        let expected = poly_region_count(&f).unwrap();
        let pl = PlFunction::Polynomial(f.clone());
        assert_eq!(exact_region_count(&pl, &bbox).unwrap(), expected, "{f}");
        let grid = grid_region_count(&pl, &bbox, Schedule::default()).unwrap();
        if let Some(count) = grid.report.count {
            assert!(count <= expected, "{f}: grid {count} > {expected}");
        }
        if grid.report.count == Some(expected) {
            grid_matches += 1;
        }
        assert!(grid.map.regions_row_column_convex(), "{f}");
    }
    assert!(grid_matches >= 50, "grid matched on {grid_matches}/60");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn curve_is_dual_to_subdivision(f in plane_polynomial()) {
        let t = hypersurface(&f).unwrap();
        let curve = t.curve().unwrap();
        let sub = dual_subdivision(&f).unwrap();
        if sub.support().affine_dim() == 2 {
            prop_assert_eq!(curve.vertices.len(), sub.cells_of_dim(2).count());
            prop_assert_eq!(curve.rays().count(), sub.boundary_edges().len());
            prop_assert_eq!(
                curve.bounded_edges().count() + curve.rays().count(),
                sub.cells_of_dim(1).count()
            );
        }
        for v in &curve.vertices {
            prop_assert!(f.maximizers(v).len() >= 3);
        }
        for e in &curve.edges {
            let p = e.sample_point();
            prop_assert!(t.contains(&p));
            if let CurveEdge::Segment { from, to } = e {
                prop_assert!(t.contains(from) && t.contains(to));
            }
        }
        prop_assert_eq!(sub.vertex_count(), poly_region_count(&f).unwrap());
    }

    /// `{f − g > c}` has at most `N(f)` components and `{f − g < c}` at most
    /// `N(g)`.
    #[test]
    fn sign_regions_within_polynomial_counts(
        f in plane_polynomial(),
        g in plane_polynomial(),
        c in common::rational(6, 3),
    ) {
        let db = decision_boundary(&f, &g, &c).unwrap();
        let q = tropnet::tropical::TropicalRationalFn::new(f, g).unwrap();
        let (pos, neg) = exact_sign_components(&PlFunction::Quotient(q), &c, &GridBox::square(int(10_000)).unwrap()).unwrap();
        prop_assert!(pos <= db.positive_bound, "{} > {}", pos, db.positive_bound);
        prop_assert!(neg <= db.negative_bound, "{} > {}", neg, db.negative_bound);
    }
}

/// `max(1, 3/2 + x + y, 4 + x + 2y, -1 + 2x + y)`: the `x + y` region is a
/// triangle with legs 1/2 that the grid misses while its counts settle.
#[test]
fn small_bounded_region_is_counted_exactly() {
    let f = tropnet::io::parse_polynomial("1 + 3/2*x1*x2 + 4*x1*x2^2 + -1*x1^2*x2", Some(2)).unwrap();
    assert_eq!(poly_region_count(&f).unwrap(), 4);
    let pl = PlFunction::Polynomial(f);
    assert_eq!(exact_region_count(&pl, &GridBox::square(int(20)).unwrap()).unwrap(), 4);
}
