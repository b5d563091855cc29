//! `reg(R/I_3(G)) = 2 nu_3(G)`, `pd(R/I_3(G)) = bight(I_3(G))` and
//! Cohen-Macaulay iff unmixed, on seeded random chordal graphs.

use path_ideals::families::random_chordal;
use path_ideals::hypergraph::{height_bight, nu_t};
use path_ideals::oracle::Oracle;
use path_ideals::splitting::path_ideal;

fn main() -> path_ideals::Result<()> {
    let o = Oracle::default();
    println!("{:>4} {:>3} {:>3} | {:>3} {:>3} | {:>3} {:>5} | cm unmixed", "seed", "n", "m", "reg", "2nu", "pd", "bight");
    let mut agree = 0;
    let total = 40;
    for seed in 0..total {
        let g = random_chordal(4 + (seed as usize % 8), seed)?;
        let i = path_ideal(&g, 3)?;
        let r = o.report(&i)?;
        let nu = nu_t(&g, 3)?;
        let (_, bight) = height_bight(i.hypergraph())?;
        println!(
            "{seed:>4} {:>3} {:>3} | {:>3} {:>3} | {:>3} {:>5} | {:<5} {}",
            g.n(),
            g.edge_count(),
            r.reg,
            2 * nu,
            r.pd,
            bight,
            r.cm,
            r.unmixed
        );
        if r.reg == 2 * nu && r.pd == bight && r.cm == r.unmixed {
            agree += 1;
        }
    }
    println!("{agree}/{total} graphs satisfy all three statements");
    Ok(())
}
