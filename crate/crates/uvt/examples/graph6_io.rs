//! graph6 and sparse6 parsing and writing: the interchange format used by
//! graph databases. graph6 is read and written; sparse6 is accepted on
//! input only.
//!
//! ```bash
//! cargo run --release --example graph6_io
//! ```

use uvt::graphs::{
    circulant, parse_any_with_cap, parse_graph6, parse_sparse6_with_cap, write_graph6,
};
use uvt::presets;

fn main() {
    // K5 is "D~{": 'D' encodes n=5, the rest packs the 10 upper-triangle bits
    let k5 = parse_graph6("D~{").unwrap();
    println!("D~{{  -> n={}, {} edges", k5.n(), k5.edge_count());

    let petersen = presets::petersen();
    let line = write_graph6(&petersen);
    println!("Petersen -> {line}");
    let back = parse_graph6(&line).unwrap();
    assert!(back.same_adjacency(&petersen));
    println!("round-trip exact: true");

    // sparse6: 7 vertices with edges 0-1, 0-2, 1-2, 5-6
    let sparse = parse_sparse6_with_cap(":Fa@x^", 64).unwrap();
    println!(":Fa@x^ -> n={}, edges {:?}", sparse.n(), sparse.edges());

    // header prefixes are tolerated
    let with_header = parse_any_with_cap(">>graph6<<D~{", 64).unwrap();
    println!("header-stripped parse: n={}", with_header.n());

    // vertex counts above 62 use the long size form
    let c70 = circulant(70, &[1, 35]).unwrap();
    let long = write_graph6(&c70);
    println!(
        "C70(1,35) -> {}... ({} bytes, long size header)",
        &long[..12],
        long.len()
    );

    // malformed input reports the byte offset
    match parse_graph6("D~") {
        Err(e) => println!("parse error example: {e}"),
        Ok(_) => unreachable!(),
    }
}
