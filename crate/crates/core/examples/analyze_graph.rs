//! Invariants of `I_t(G)` for a graph file or a named family.
//!
//! ```text
//! cargo run --example analyze_graph -- tests/data/p4.txt 3
//! cargo run --example analyze_graph -- Gt:4 4
//! ```

use path_ideals::families::make_family;
use path_ideals::oracle::Oracle;
use path_ideals::{cli, FamilySpec, Graph};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let source = args.first().map(String::as_str).unwrap_or("Tt:4,3,3");
    let t: usize = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(4);

    let (g, family) = match source.parse::<FamilySpec>() {
        Ok(spec) => (make_family(&spec)?, Some(spec)),
        Err(_) => {
            (Graph::from_text(&std::fs::read_to_string(source)?)?, None)
        }
    };
    println!("{g:?}");

    let report = cli::analyze(&g, family.as_ref(), t, &Oracle::default())?;
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    Ok(())
}
