use super::*;

fn g(s: &str) -> AbelianGroup {
    s.parse().unwrap()
}

#[test]
fn group_display_and_parse_round_trip() {
    for s in ["0", "Z", "Z2", "Z2^4", "Z^3 + Z2", "Z^2", "Z + Z2^2 + Z3"] {
        assert_eq!(g(s).to_string(), s);
    }
    assert!("Z1".parse::<AbelianGroup>().is_err());
    assert!("Q".parse::<AbelianGroup>().is_err());
    assert_eq!(g("Z2 + Z + Z2"), g("Z + Z2^2"));
}

#[test]
fn direct_sum_is_commutative_and_associative() {
    let (a, b, c) = (g("Z + Z2"), g("Z3"), g("Z^2 + Z2^2"));
    assert_eq!(a.direct_sum(&b), b.direct_sum(&a));
    assert_eq!(a.direct_sum(&b).direct_sum(&c), a.direct_sum(&b.direct_sum(&c)));
    assert_eq!(a.direct_sum(&AbelianGroup::zero()), a);
}

#[test]
fn ko_point_examples() {
    assert_eq!(ko_point(KIndex::new(0)), AbelianGroup::z());
    assert_eq!(ko_point(KIndex::new(2)), AbelianGroup::z2());
    assert_eq!(ko_point(KIndex::new(11)), AbelianGroup::zero());
    assert_eq!(ko_point(KIndex::new(-4)), AbelianGroup::z());
    assert_eq!(KIndex::new(-1).get(), 7);
}

#[test]
fn sphere_examples() {
    assert_eq!(kr_sphere(KIndex::new(4), 2, true), g("Z2"));
    assert_eq!(kr_sphere(KIndex::new(5), 1, true), g("Z"));
    assert_eq!(kr_sphere(KIndex::new(0), 3, true), g("0"));
    assert_eq!(kr_sphere(KIndex::new(0), 1, false), g("Z"));
    for d in 1..=8 {
        assert_eq!(kr_sphere(KIndex::new(d as i64), d, true), g("Z"));
    }
}

#[test]
fn torus_examples() {
    assert_eq!(kr_torus(KIndex::new(4), 3, true), g("Z2^4"));
    assert_eq!(kr_torus(KIndex::new(5), 3, true), g("Z^3 + Z2"));
    assert_eq!(kr_torus(KIndex::new(5), 2, true), g("Z^2"));
    for i in 0..8 {
        for d in 1..=3 {
            let i = KIndex::new(i);
            assert!(kr_torus(i, d, false).contains_summand(&kr_sphere(i, d, false)));
        }
    }
}

#[test]
fn kq_shift_examples() {
    assert_eq!(kq_shift(KIndex::new(0)), KIndex::new(4));
    assert_eq!(kq_shift(KIndex::new(1)), KIndex::new(5));
    assert_eq!(kq_shift(KIndex::new(4)), KIndex::new(0));
}

#[test]
fn class_numbers_and_code() {
    assert_eq!(class_number(AZClass::AII), Ok(4));
    assert_eq!(class_number(AZClass::AI), Ok(0));
    assert_eq!(class_number(AZClass::CI), Ok(7));
    assert_eq!(class_number(AZClass::A), Err(KTableError::ComplexClass(AZClass::A)));
    assert_eq!(class_code(AZClass::AII).unwrap(), "01010");
    for c in AZClass::REAL {
        assert_eq!(class_number_from_code(c), class_number(c));
    }
}

#[test]
fn periodic_entries_and_errors() {
    assert_eq!(periodic_table_entry(AZClass::D, 2).unwrap(), g("Z"));
    assert_eq!(periodic_table_entry(AZClass::AII, 3).unwrap(), g("Z2"));
    assert_eq!(periodic_table_entry(AZClass::AI, 1).unwrap(), g("0"));
    assert!(periodic_table_entry(AZClass::AIII, 1).is_err());
    assert!(class_metadata(AZClass::D, 4).is_err());
}

#[test]
fn transcribed_tables_agree_with_formulas() {
    assert_eq!(table_self_check(), Vec::<String>::new());
    assert_eq!(generated_periodic_table(), transcribed_periodic_table());
}

#[test]
fn metadata_examples() {
    let m = class_metadata(AZClass::D, 1).unwrap();
    assert_eq!(m.ko_label, Some(-2));
    assert_eq!(m.fredholm_label, Some(1));
    assert_eq!(m.homotopy_label.unwrap().to_string(), "pi1(F1)");
    assert_eq!(m.index_tag, Some(IndexTag::Ch1WMod2));
    let m = class_metadata(AZClass::DIII, 3).unwrap();
    assert_eq!((m.ko_label, m.fredholm_label, m.index_tag), (Some(0), Some(0), Some(IndexTag::Ch3W)));
    let m = class_metadata(AZClass::C, 2).unwrap();
    assert_eq!((m.ko_label, m.index_tag), (Some(-4), Some(IndexTag::Ch1P)));
}
