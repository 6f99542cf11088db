// Descend a random 20-gon to a parallelogram, printing each move.

use mahler::descend;
use mahler::rational::to_f64;
use mahler::zonogen::{random_zonogon, GenSpec};

pub fn run_example() -> mahler::Result<()> {
    let poly = random_zonogon(&GenSpec::new(10, 7, GenSpec::DEFAULT_BOUND)?);
    let trace = descend(&poly)?;
    for step in &trace.steps {
        println!(
            "{:>2} vertices  M = {:.6}  delete {:?} edge {} (gap {:.4})",
            step.polygon.len(),
            to_f64(&step.mahler),
            step.mv.side,
            step.mv.edge,
            to_f64(&step.mv.gap)
        );
    }
    println!(" 4 vertices  M = {}", trace.final_mahler);
    assert!(trace.recorded_values_match());
    Ok(())
}

#[allow(dead_code)]
fn main() -> mahler::Result<()> {
    run_example()
}
