//! Prints the gadget spines found by the discovery sweeps as edge lists.

use compaut::io::write_edge_list;
use compaut::permgraph::{find_asymmetric_spine, find_rectangle_spine};

fn main() {
    let max_n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(10);
    match find_asymmetric_spine(max_n.min(8)) {
        Some(g) => print!("# asymmetric\n{}", write_edge_list(&g)),
        None => println!("# asymmetric: none"),
    }
    match find_rectangle_spine(max_n) {
        Some(g) => print!("# rectangle\n{}", write_edge_list(&g)),
        None => println!("# rectangle: none"),
    }
}
