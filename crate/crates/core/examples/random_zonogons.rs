// Seeded zonogons: same seed, same polygon; JSON out and back in.

use mahler::zonogen::{random_generators, random_zonogon, GenSpec};
use mahler::SymPolygon;

pub fn run_example() -> mahler::Result<()> {
    let spec = GenSpec::new(4, 42, 6)?;
    for g in random_generators(&spec) {
        println!("generator {g}");
    }
    let poly = random_zonogon(&spec);
    assert_eq!(poly, random_zonogon(&spec));

    let json = poly.to_json();
    println!("{json}");
    assert_eq!(SymPolygon::from_json(&json)?, poly);

    for n in [3, 8, 32] {
        let p = random_zonogon(&GenSpec::new(n, 1, GenSpec::DEFAULT_BOUND)?);
        println!("n = {n}: area {}", p.area());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> mahler::Result<()> {
    run_example()
}
