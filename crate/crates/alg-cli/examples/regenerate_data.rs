//! Regenerates the graph6 data files shipped under `data/`:
//! the paired example graphs and the enumerated atlas sample used by the
//! sweep experiments.
//!
//! Run with `cargo run -p alg-cli --example regenerate_data`.

use std::fmt::Write as _;
use std::path::Path;

use alg_cli::samples;
use alg_core::to_graph6;

fn main() {
    let data_dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    std::fs::create_dir_all(&data_dir).unwrap();

    let mut pairs = String::from("# paired example graphs: two line-cospectral pairs\n");
    for g in samples::example_pair_graphs() {
        writeln!(pairs, "{}", to_graph6(&g).unwrap()).unwrap();
    }
    std::fs::write(data_dir.join("example_pairs.g6"), &pairs).unwrap();

    let sample = samples::atlas_sample(7, 12, true).unwrap();
    let mut body = String::from(
        "# connected non-bipartite graphs, n <= 7, m <= 12, one per isomorphism class\n",
    );
    for g in &sample {
        writeln!(body, "{}", to_graph6(g).unwrap()).unwrap();
    }
    std::fs::write(data_dir.join("atlas_n7_m12.g6"), &body).unwrap();
    println!(
        "wrote example_pairs.g6 (4 graphs) and atlas_n7_m12.g6 ({} graphs)",
        sample.len()
    );
}
