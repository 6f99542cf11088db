// Normalize an edge, read off the vertical distances and check that
// deleting the edge pair lowers the Mahler volume exactly as predicted.

use mahler::reduction::{check_edge_deletion, normalize_for_edge, vertical_distances, Neighbor};
use mahler::zonogen::named_polygon;
use mahler::Point;

pub fn run_example() -> mahler::Result<()> {
    let poly = named_polygon("hex6b")?;
    let top = poly
        .index_of(&Point::int(1, 2))
        .expect("hex6b has vertex (1, 2)");

    let frame = normalize_for_edge(&poly, top)?;
    let [a, b, c, d] = frame.map.entries();
    println!("frame map [[{a}, {b}], [{c}, {d}]], apex {}", frame.apex()?);
    let dist = vertical_distances(&frame, Neighbor::Anticlockwise)?;
    println!(
        "alpha = {}, c = {}, beta = {}, gamma = {}",
        dist.alpha, dist.c_s, dist.beta, dist.gamma
    );
    assert!(dist.identity_holds());

    let check = check_edge_deletion(&poly, top)?;
    println!(
        "ratio {} <= {}: M {} -> {}",
        check.lhs, check.rhs, check.m_before, check.m_after
    );
    assert!(check.qualifies() && check.identities.all());
    Ok(())
}

#[allow(dead_code)]
fn main() -> mahler::Result<()> {
    run_example()
}
