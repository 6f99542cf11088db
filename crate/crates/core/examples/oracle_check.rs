// Cross-check the primary routines against the brute-force oracles.

use mahler::oracle::{
    area_by_fan, area_by_montecarlo, dual_by_halfplane_intersection, exhaustive_move_check,
};
use mahler::rational::to_f64;
use mahler::zonogen::named_polygon;

pub fn run_example() -> mahler::Result<()> {
    let poly = named_polygon("oct8")?;
    assert_eq!(dual_by_halfplane_intersection(&poly), poly.polar_dual());
    assert_eq!(area_by_fan(&poly), poly.area());

    let mc = area_by_montecarlo(&poly, 100_000, 3);
    println!(
        "area {} vs Monte-Carlo {:.4} +/- {:.4}",
        poly.area(),
        mc.estimate,
        mc.stderr
    );
    assert!(mc.within_sigmas(to_f64(&poly.area()), 4.0));

    let report = exhaustive_move_check(&poly)?;
    println!("chosen side {:?}", report.chosen_side);
    for c in &report.candidates {
        println!(
            "  {:?} edge {}: {} <= {}? {}  M after {}",
            c.side,
            c.edge,
            c.lhs,
            c.rhs,
            c.qualifies(),
            c.m_after
        );
    }
    assert!(report.qualifying_on_chosen_side() >= 1 && report.all_qualifying_decrease());
    Ok(())
}

#[allow(dead_code)]
fn main() -> mahler::Result<()> {
    run_example()
}
