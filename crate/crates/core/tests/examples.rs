//! Every example under `examples/` runs to completion.

macro_rules! example {
    ($module:ident, $file:literal) => {
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(volume, "volume.rs");
example!(parallelograms, "parallelograms.rs");
example!(edge_deletion, "edge_deletion.rs");
example!(descent, "descent.rs");
example!(random_zonogons, "random_zonogons.rs");
example!(oracle_check, "oracle_check.rs");
example!(render, "render.rs");

#[test]
fn volume_example_runs() {
    volume::run_example().unwrap();
}

#[test]
fn parallelograms_example_runs() {
    parallelograms::run_example().unwrap();
}

#[test]
fn edge_deletion_example_runs() {
    edge_deletion::run_example().unwrap();
}

#[test]
fn descent_example_runs() {
    descent::run_example().unwrap();
}

#[test]
fn random_zonogons_example_runs() {
    random_zonogons::run_example().unwrap();
}

#[test]
fn oracle_check_example_runs() {
    oracle_check::run_example().unwrap();
}

#[test]
fn render_example_runs() {
    render::run_example().unwrap();
}
