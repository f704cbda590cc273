mod common;

use common::*;

fn golden(order: u32) -> String {
    let path = golden_path(&format!("labelings_order{order}.txt"));
    if std::env::var_os("ALV_BLESS").is_some() {
        std::fs::write(&path, oracle_catalog(order)).unwrap();
    }
    std::fs::read_to_string(&path).unwrap()
}

#[test]
fn library_catalog_matches_golden() {
    for order in [2, 3] {
        assert_eq!(library_catalog(order), golden(order), "order {order}");
    }
}

#[test]
fn oracle_reproduces_golden() {
    for order in [2, 3] {
        assert_eq!(oracle_catalog(order), golden(order), "order {order}");
    }
}
