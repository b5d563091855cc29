//! `reg(R/I_t(G)) = (t-1) nu_t(G)` on caterpillars, for several `t`.

use path_ideals::families::{make_family, random_caterpillar_spec};
use path_ideals::hypergraph::nu_t;
use path_ideals::oracle::Oracle;
use path_ideals::splitting::path_ideal;
use path_ideals::FamilySpec;

fn main() -> path_ideals::Result<()> {
    let o = Oracle::default();
    let mut specs = vec![FamilySpec::path(9), FamilySpec::caterpillar(&[1, 2, 0, 3])];
    for seed in 0..6 {
        specs.push(random_caterpillar_spec(11, seed)?);
    }
    for spec in specs {
        let g = make_family(&spec)?;
        let row: Vec<String> = (2..=5)
            .map(|t| -> path_ideals::Result<String> {
                let reg = o.reg(&path_ideal(&g, t)?)?;
                let nu = nu_t(&g, t)?;
                let mark = if reg == (t - 1) * nu { "" } else { " !" };
                Ok(format!("t={t}: {reg:>2} = {}*{nu}{mark}", t - 1))
            })
            .collect::<path_ideals::Result<_>>()?;
        println!("{:<28} {}", spec.to_string(), row.join("   "));
    }
    Ok(())
}
