// Area, polar dual and Mahler volume of the built-in polygons.

use mahler::rational::to_f64;
use mahler::zonogen::{named_polygon, NAMED_POLYGONS};

pub fn run_example() -> mahler::Result<()> {
    for name in NAMED_POLYGONS {
        let poly = named_polygon(name)?;
        let dual = poly.polar_dual();
        let m = poly.mahler_volume();
        println!(
            "{name:>6}: {} vertices, area {}, polar area {}, M = {m} ({:.4})",
            poly.len(),
            poly.area(),
            dual.area(),
            to_f64(&m)
        );
        assert_eq!(dual.polar_dual(), poly);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> mahler::Result<()> {
    run_example()
}
