use realgw::arith::rational::{int, rat};
use realgw::convert::*;
use realgw::Rational;

fn column(flavor: Flavor, kind: Kind, d: u32, vals: &[(u32, Rational)]) -> InvariantTable {
    let mut t = InvariantTable::new(flavor, kind);
    for (g, v) in vals {
        t.insert(*g, d, v.clone(), Provenance::Loaded);
    }
    t
}

#[test]
fn real_degree_seven_column() {
    let gw = column(Flavor::Real, Kind::Gw, 7, &[(0, int(-85)), (2, rat(-1345, 24)), (4, rat(-2475, 128))]);
    let e = e_from_gw(&gw).unwrap();
    assert_eq!(e.get(0, 7), Some(&int(-85)));
    assert_eq!(e.get(2, 7), Some(&int(-10)));
    assert_eq!(e.get(4, 7), Some(&int(-1)));
}

#[test]
fn real_degree_eight_column() {
    let gw = column(Flavor::Real, Kind::Gw, 8, &[(1, int(-1000)), (3, rat(-2840, 3)), (5, rat(-1400, 3))]);
    let e = e_from_gw(&gw).unwrap();
    assert_eq!(e.get(1, 8), Some(&int(-1000)));
    assert_eq!(e.get(3, 8), Some(&int(-280)));
    assert_eq!(e.get(5, 8), Some(&int(-40)));
}

#[test]
fn forward_examples() {
    let e = column(Flavor::Real, Kind::E, 4, &[(1, int(-1)), (3, int(0)), (5, int(0))]);
    let gw = gw_from_e(&e).unwrap();
    assert_eq!(gw.get(3, 4), Some(&rat(-1, 3)));
    assert_eq!(gw.get(5, 4), Some(&rat(-19, 360)));

    let e = column(Flavor::Real, Kind::E, 3, &[(0, int(-1)), (2, int(0)), (4, int(0))]);
    let gw = gw_from_e(&e).unwrap();
    assert_eq!(gw.get(2, 3), Some(&rat(-5, 24)));
    assert_eq!(gw.get(4, 3), Some(&rat(-23, 1152)));

    let e = column(Flavor::Complex, Kind::E, 1, &[(0, int(1)), (1, int(0)), (2, int(0)), (3, int(0))]);
    let gw = gw_from_e(&e).unwrap();
    assert_eq!(gw.get(1, 1), Some(&rat(-1, 12)));
    assert_eq!(gw.get(2, 1), Some(&rat(1, 360)));
    assert_eq!(gw.get(3, 1), Some(&rat(-1, 20160)));
}

#[test]
fn minimal_genus_is_fixed() {
    let gw = column(Flavor::Complex, Kind::Gw, 5, &[(0, int(105))]);
    assert_eq!(e_from_gw(&gw).unwrap().get(0, 5), Some(&int(105)));
}

#[test]
fn missing_lower_genus_is_an_error() {
    let gw = column(Flavor::Complex, Kind::Gw, 5, &[(0, int(105)), (2, int(3))]);
    assert!(e_from_gw(&gw).is_err());
    let gw = column(Flavor::Real, Kind::Gw, 5, &[(2, int(3))]);
    assert!(e_from_gw(&gw).is_err());
}

#[test]
fn parity_zero_may_be_implied() {
    let gw = column(Flavor::Real, Kind::Gw, 3, &[(0, int(-1)), (2, rat(-5, 24))]);
    let e = e_from_gw(&gw).unwrap();
    assert_eq!(e.get(2, 3), Some(&int(0)));
    assert!(e.get(1, 3).is_none());
}

#[test]
fn bundled_tables_reproduce_enumerative_rows() {
    for which in [1, 2] {
        let (gw, e) = bundled(which).unwrap();
        let computed = e_from_gw(&gw).unwrap();
        assert_eq!(computed.entries.len(), e.entries.len());
        for (&(g, d), entry) in &e.entries {
            assert_eq!(computed.get(g, d), Some(&entry.value), "table {which}, genus {g}, degree {d}");
        }
    }
}

#[test]
fn bundled_csv_round_trips() {
    let tables = parse_tables(TABLE2_REAL).unwrap();
    assert_eq!(tables.len(), 2);
    assert_eq!(tables[0].entries.len(), 48);
    assert_eq!(emit_tables(&tables, Format::Csv), TABLE2_REAL);
    assert_eq!(emit_tables(&parse_tables(TABLE1_COMPLEX).unwrap(), Format::Csv), TABLE1_COMPLEX);
}

#[test]
fn parity_flags() {
    let (gw, e) = bundled(2).unwrap();
    assert!(parity_check(&gw).unwrap().is_empty());
    assert!(parity_check(&e).unwrap().is_empty());
    let bad = column(Flavor::Real, Kind::Gw, 1, &[(1, int(5))]);
    assert_eq!(parity_check(&bad).unwrap(), vec![(1, 1, int(5))]);
    let (cx, _) = bundled(1).unwrap();
    assert!(parity_check(&cx).is_err());
}

#[test]
fn parse_errors_report_position() {
    let text = "flavor,kind\nreal,GW\ngenus,degree,value\n0,1,1.5\n";
    match parse_tables(text) {
        Err(realgw::Error::Parse { line, column, .. }) => assert_eq!((line, column), (4, 5)),
        other => panic!("unexpected {other:?}"),
    }
    assert!(parse_tables("0,1,1\n").is_err());
    assert!(parse_tables("flavor,kind\nreal,XX\ngenus,degree,value\n").is_err());
    let t = parse_tables("flavor,kind\nreal,GW\ngenus,degree,value\n2,1,1/24\n").unwrap();
    assert_eq!(t[0].get(2, 1), Some(&rat(1, 24)));
}

#[test]
fn transform_kind_is_checked() {
    let (gw, e) = bundled(2).unwrap();
    assert!(e_from_gw(&e).is_err());
    assert!(gw_from_e(&gw).is_err());
}

#[test]
fn markdown_layout() {
    let (gw, _) = bundled(2).unwrap();
    let md = emit_table(&gw, Format::Markdown);
    let first: Vec<&str> = md.lines().take(3).collect();
    assert_eq!(first[0], "| d | 1 | 2 | 3 | 4 | 5 | 6 | 7 | 8 |");
    assert_eq!(first[2], "| GW^phi_{0,d} | 1 | 0 | -1 | 0 | 5 | 0 | -85 | 0 |");
}
