use proptest::prelude::*;
use rgc_core::compact::Model;
use rgc_core::criteria::Verdict;
use rgc_core::lie::RootSystem;
use rgc_core::report::{analyze, from_json, to_json, AnalyzeOptions};
use rgc_core::rep::tensor_decompose;

const TYPES: [&str; 6] = ["A1", "A2", "B2", "C2", "G2", "A3"];

fn pair() -> impl Strategy<Value = (&'static str, Vec<i64>, Vec<i64>)> {
    prop::sample::select(TYPES.to_vec()).prop_flat_map(|ty| {
        let r = RootSystem::parse(ty).unwrap().rank;
        (Just(ty), prop::collection::vec(0i64..=3, r), prop::collection::vec(0i64..=3, r))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn tensor_dimensions_add_up((ty, l, m) in pair()) {
        let rs = RootSystem::parse(ty).unwrap();
        let d = tensor_decompose(&rs, &l, &m).unwrap();
        let total: num_bigint::BigInt = d.iter().map(|(w, k)| rs.weyl_dimension(w) * *k).sum();
        prop_assert_eq!(total, rs.weyl_dimension(&l) * rs.weyl_dimension(&m));
        prop_assert_eq!(d, tensor_decompose(&rs, &m, &l).unwrap());
    }

    #[test]
    fn reports_round_trip((ty, l, _) in pair()) {
        prop_assume!(l.iter().any(|&x| x != 0) && l.iter().sum::<i64>() <= 3);
        let rs = RootSystem::parse(ty).unwrap();
        let m = Model::new(rs, vec![l]).unwrap();
        let r = analyze(&m, &AnalyzeOptions::default()).unwrap();
        prop_assert_eq!(&from_json(&to_json(&r).unwrap()).unwrap(), &r);
        prop_assert!(!(r.smooth == Verdict::Smooth && r.normal == Verdict::NotNormal));
        prop_assert!(r.orbits.orbits.iter().any(|o| o.dimension == m.dim_group()));
    }
}
