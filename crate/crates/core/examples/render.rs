// Write SVG drawings of a polygon with its polar, and of a full descent,
// into the system temp directory.

use std::fs;

use mahler::descend;
use mahler::svg::{render_pair, render_trace};
use mahler::zonogen::named_polygon;

pub fn run_example() -> mahler::Result<()> {
    let poly = named_polygon("oct8")?;
    let dir = std::env::temp_dir();
    let pair = dir.join("oct8.svg");
    let trace = dir.join("oct8_descent.svg");
    fs::write(&pair, render_pair(&poly)).expect("temp dir is writable");
    fs::write(&trace, render_trace(&descend(&poly)?)).expect("temp dir is writable");
    println!("wrote {} and {}", pair.display(), trace.display());
    Ok(())
}

#[allow(dead_code)]
fn main() -> mahler::Result<()> {
    run_example()
}
