// Type-1 and type-2 parallelogram sums, and the hexagon carving that
// compares them vertex by vertex.

use mahler::parallelograms::{compare_parallelogram_sums, edge_before, hexagon_carving};
use mahler::zonogen::named_polygon;

pub fn run_example() -> mahler::Result<()> {
    for name in ["hex6", "oct8"] {
        let poly = named_polygon(name)?;
        let sums = compare_parallelogram_sums(&poly)?;
        println!(
            "{name}: {} {} {}",
            sums.lhs,
            sums.relation_symbol(),
            sums.rhs
        );
        for x in 0..poly.len() {
            let t1 = hexagon_carving(&poly, edge_before(&poly, x))?.t1.area();
            let t2 = hexagon_carving(&poly, x)?.t2.area();
            println!("  vertex {x}: T1 = {t1}, T2 = {t2}");
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> mahler::Result<()> {
    run_example()
}
