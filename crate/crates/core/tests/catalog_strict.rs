//! Strict build of the bundled catalog: every group closes to its
//! expected order and satisfies its declared relations.

use k3verify::catalog::Catalog;

#[test]
fn bundled_catalog_builds_strictly() {
    let cat = Catalog::bundled().unwrap();
    let built = cat.build_strict().unwrap();
    let order = |name: &str| built.group(name).unwrap().order();
    assert_eq!(order("c3c7"), 21);
    assert_eq!(order("c7"), 7);
    assert_eq!(order("gamma3"), 3);
    assert_eq!(order("l27"), 168);
    assert_eq!(order("m9"), 72);
    assert_eq!(order("n72"), 72);
    assert_eq!(order("t48"), 48);
    assert_eq!(order("q8"), 8);
    assert_eq!(order("h_d16"), 16);
    assert_eq!(order("c_d16"), 4);
    assert_eq!(order("s5_p3"), 120);
    assert_eq!(order("s4_p2"), 24);
    assert_eq!(order("valentiner"), 360);
    assert_eq!(built.group("valentiner").unwrap().linear_order(), 1080);
    for (name, g) in &built.groups {
        println!(
            "{name}: projective {} linear {} scalars {}",
            g.order(),
            g.linear_order(),
            g.scalar_subgroup_order()
        );
    }
}
