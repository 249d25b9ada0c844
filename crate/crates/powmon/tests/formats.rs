use powmon::export::{atom_table_json, parse_atom_table};
use powmon::table_file::{format_table, parse_rows};
use powmon_core::atoms::DEFAULT_CENSUS_BOUND;
use powmon_core::{atom_census, GroundMonoid, Variant};
use proptest::prelude::*;

proptest! {
    #[test]
    fn table_text_round_trips(rows in (1usize..6).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(0..n, n), n)
    })) {
        prop_assert_eq!(parse_rows(&format_table(&rows)).unwrap(), rows);
    }

    #[test]
    fn atom_table_json_round_trips(n in 1usize..10, restricted in any::<bool>()) {
        let variant = if restricted { Variant::Restricted } else { Variant::Reduced };
        let g = GroundMonoid::cyclic(n).unwrap();
        let table = atom_census(&g, variant, DEFAULT_CENSUS_BOUND).unwrap();
        let back = parse_atom_table(&g, variant, &atom_table_json(&g, &table)).unwrap();
        prop_assert_eq!(back, table);
    }
}
