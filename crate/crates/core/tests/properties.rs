//! Property tests across constructions, bounds, surgery and serialisation.

use oneplanar::bounds::{lower_bound, upper_bound};
use oneplanar::constructions::{best_known, near_balanced, w3_family, Family};
use oneplanar::io::{load, save, DrawingDocument};
use oneplanar::{OnePlanarDrawing, Side};
use proptest::prelude::*;

fn drawing_for(x: usize, y: usize) -> OnePlanarDrawing {
    best_known(x, y).unwrap().drawing
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn best_known_is_monotone_in_y(x in 1usize..25, dy in 0usize..60) {
        let y = x + dy;
        let a = drawing_for(x, y).edge_count();
        let b = drawing_for(x, y + 1).edge_count();
        prop_assert!(b >= a, "({x}, {y}): {a} then {b}");
    }

    #[test]
    fn best_known_matches_bounds(x in 1usize..40, dy in 0usize..150) {
        let y = x + dy;
        let c = best_known(x, y).unwrap();
        let d = &c.drawing;
        prop_assert!(d.validate().passed());
        prop_assert_eq!(d.class_sizes(), Some((x, y)));
        prop_assert_eq!(d.edge_count() as i64, lower_bound(x, y).unwrap());
        prop_assert!(d.edge_count() as i64 <= upper_bound(x, y).unwrap());
    }

    #[test]
    fn bounds_are_ordered(x in 1usize..400, dy in 0usize..400) {
        let y = x + dy;
        let (l, u) = (lower_bound(x, y).unwrap(), upper_bound(x, y).unwrap());
        prop_assert!(l <= u);
        prop_assert!(u <= (x * y) as i64);
        prop_assert!(upper_bound(x, y + 1).unwrap() >= u);
    }

    #[test]
    fn documents_round_trip(x in 1usize..12, dy in 0usize..40) {
        let d = drawing_for(x, x + dy);
        let text = save(&d, None);
        let back = load(&text).unwrap();
        prop_assert!(back.validate().passed());
        prop_assert_eq!(back.graph(), d.graph());
        prop_assert_eq!(back.crossings(), d.crossings());
        prop_assert!(back.planified().equivalent(d.planified()));
        prop_assert_eq!(save(&back, None), text);
    }

    #[test]
    fn black_extension_adds_one_edge_per_crossing(x in 3usize..12, dy in 0usize..40) {
        let d = drawing_for(x, x + dy);
        let ext = d.black_extension();
        prop_assert_eq!(ext.edge_count(), d.planified().edge_count() + d.crossing_count());
        prop_assert!(ext.euler_check().is_planar());
        for e in d.planified().edge_count()..ext.edge_count() {
            let [a, b] = ext.endpoints(e);
            prop_assert_eq!(d.graph().side(a), Some(Side::Black));
            prop_assert_eq!(d.graph().side(b), Some(Side::Black));
        }
    }

    #[test]
    fn augmentation_composes(x in 4usize..14, a in 0usize..8, b in 0usize..8) {
        let base = near_balanced(x, x).unwrap();
        let once = base.augment_degree2(a + b, Side::White, None).unwrap();
        let twice = base
            .augment_degree2(a, Side::White, None)
            .unwrap()
            .augment_degree2(b, Side::White, None)
            .unwrap();
        prop_assert!(once.validate().passed() && twice.validate().passed());
        prop_assert_eq!(once.edge_count(), twice.edge_count());
        prop_assert_eq!(once.edge_count(), base.edge_count() + 2 * (a + b));
        prop_assert_eq!(once.crossing_count(), base.crossing_count());
        prop_assert_eq!(once.graph(), twice.graph());
    }
}

#[test]
fn named_examples() {
    let cases = [
        ((3, 30), Family::W3, 66),
        ((11, 11), Family::Balanced, 58),
        ((1, 9), Family::Star, 9),
        ((3, 6), Family::W3, 18),
        ((10, 12), Family::NearBalanced, 56),
        ((2, 8), Family::Planar, 16),
    ];
    for ((x, y), family, edges) in cases {
        let c = best_known(x, y).unwrap();
        assert_eq!(c.family, family, "({x}, {y})");
        assert_eq!(c.drawing.edge_count(), edges, "({x}, {y})");
    }
}

#[test]
fn document_examples() {
    let c4 = drawing_for(2, 2);
    let doc = DrawingDocument::from_drawing(&c4, None);
    assert_eq!((doc.vertex_count, doc.edges.len(), doc.crossings.len()), (4, 4, 0));

    let w3 = w3_family(3, 6).unwrap();
    let back = load(&save(&w3, None)).unwrap();
    assert!(back.validate().passed());
    assert_eq!(back.edge_count(), 18);

    // A crossing between two edges that share a vertex is rejected.
    let mut doc = DrawingDocument::from_drawing(&c4, None);
    doc.crossings.push([0, 1]);
    assert!(doc.to_drawing().is_err());

    let mut doc = DrawingDocument::from_drawing(&c4, None);
    doc.format_version = 99;
    assert!(load(&doc.to_json()).is_err());

    assert!(load("{ not json").is_err());
}
