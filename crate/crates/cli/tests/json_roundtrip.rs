use proptest::prelude::*;
use schur_vertex::json::{
    expansion_from_json, expansion_to_json, partition_from_json, partition_to_json,
    straightening_from_json, straightening_to_json,
};
use schur_vertex_core::{staircase_straighten, IntegerSequence, Partition, SchurExpansion};

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(0usize..=7, 0..=6).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

proptest! {
    #[test]
    fn partitions_round_trip(p in partition()) {
        let v = partition_to_json(&p);
        prop_assert_eq!(partition_from_json(&v).unwrap(), p);
        let text = v.to_string();
        let reparsed: serde_json::Value = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(partition_to_json(&partition_from_json(&reparsed).unwrap()).to_string(), text);
    }

    #[test]
    fn expansions_round_trip(terms in prop::collection::vec((partition(), -5i64..=5), 0..6)) {
        let e: SchurExpansion = terms.into_iter().collect();
        let text = expansion_to_json(&e).to_string();
        let reparsed = expansion_from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        prop_assert_eq!(&reparsed, &e);
        prop_assert_eq!(expansion_to_json(&reparsed).to_string(), text);
    }

    #[test]
    fn straightenings_round_trip(s in prop::collection::vec(-5i64..=7, 0..=5)) {
        let st = staircase_straighten(&IntegerSequence::new(s)).unwrap();
        let v = straightening_to_json(&st);
        prop_assert_eq!(straightening_from_json(&v).unwrap(), st);
    }
}
