use clawdeg::io;
use clawdeg_core::geometry::{HPolytope, HalfSpace, Rat, RatPoint, VPolytope};
use num_bigint::BigInt;
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rat> {
    (-50i64..50, 1i64..12).prop_map(|(p, q)| Rat::new(p.into(), q.into()))
}

fn v_polytope() -> impl Strategy<Value = VPolytope> {
    (1usize..5).prop_flat_map(|d| {
        prop::collection::vec(prop::collection::vec(rat(), d), 1..8)
            .prop_map(move |pts| VPolytope::new(d, pts.into_iter().map(RatPoint::new).collect()).unwrap())
    })
}

fn h_polytope() -> impl Strategy<Value = HPolytope> {
    (1usize..5).prop_flat_map(|d| {
        prop::collection::vec((prop::collection::vec(-9i64..10, d), -9i64..10), 1..8).prop_filter_map(
            "nonzero normals",
            move |rows| {
                let hs = rows
                    .iter()
                    .map(|(a, b)| HalfSpace::from_ints(a, *b))
                    .collect::<Result<Vec<_>, _>>()
                    .ok()?;
                HPolytope::new(d, hs).ok()
            },
        )
    })
}

proptest! {
    #[test]
    fn v_json_round_trip(p in v_polytope()) {
        prop_assert_eq!(io::v_from_json(&io::v_to_json(&p)).unwrap(), p);
    }

    #[test]
    fn ext_round_trip(p in v_polytope()) {
        prop_assert_eq!(io::from_ext(&io::to_ext(&p)).unwrap(), p);
    }

    #[test]
    fn h_json_round_trip(h in h_polytope()) {
        prop_assert_eq!(io::h_from_json(&io::h_to_json(&h)).unwrap(), h);
    }

    #[test]
    fn ine_round_trip(h in h_polytope()) {
        prop_assert_eq!(io::from_ine(&io::to_ine(&h)).unwrap(), h);
    }

    #[test]
    fn csv_round_trip(rows in prop::collection::vec((2usize..40, any::<u64>()), 0..10)) {
        let rows: Vec<(usize, BigInt)> = rows.into_iter().map(|(n, d)| (n, d.into())).collect();
        let back = io::table_from_csv(&io::table_to_csv("z3", &rows)).unwrap();
        let got: Vec<(usize, BigInt)> = back.into_iter().map(|(g, n, d)| {
            assert_eq!(g, "z3");
            (n, d)
        }).collect();
        prop_assert_eq!(got, rows);
    }
}
